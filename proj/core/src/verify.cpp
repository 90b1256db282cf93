#include "coxinv/verify.hpp"

#include <set>

namespace coxinv {

namespace {

std::string describe(const ClassRepresentative& rep) {
  std::string word;
  for (int g : rep.word) word += (word.empty() ? "" : " ") + std::to_string(g);
  return "rank " + std::to_string(rep.rank) + " " + to_string(rep.type) +
         " [" + word + "]";
}

}  // namespace

std::vector<std::string> check_representatives(
    const oracle::GroupTable& table, const oracle::InvolutionCensus& census,
    const InvolutionClassReport& report) {
  std::vector<std::string> problems;
  std::set<std::int32_t> seen;
  for (const auto& rep : report.representatives) {
    const oracle::Matrix m = oracle::evaluate_word(table.rep, rep.word);
    const std::int64_t g = oracle::locate(table, m);
    if (g < 0) {
      problems.push_back(describe(rep) + ": not found in the group table");
      continue;
    }
    const std::int32_t cls = census.class_of[g];
    if (cls < 0) {
      problems.push_back(describe(rep) + ": not an involution");
      continue;
    }
    if (census.classes[cls].rank != rep.rank) {
      problems.push_back(describe(rep) + ": lands in a class of rank " +
                         std::to_string(census.classes[cls].rank));
    }
    if (!seen.insert(cls).second) {
      problems.push_back(describe(rep) +
                         ": conjugate to an earlier representative");
    }
  }
  return problems;
}

Verification verify(const CoxeterMatrix& mat, std::size_t cap,
                    const std::string& name) {
  Verification v;
  const auto table = oracle::enumerate(mat, cap, name);
  const auto census = oracle::involution_classes(table);
  const auto report = cc2(mat);
  v.elements = table.size();
  v.involutions = census.involution_count;
  v.oracle_per_rank = oracle::rank_histogram(census, mat.rank());
  v.oracle_total = census.classes.size();
  v.pipeline_per_rank = report.per_rank;
  v.pipeline_total = report.total;
  v.representative_problems = check_representatives(table, census, report);
  return v;
}

}  // namespace coxinv
