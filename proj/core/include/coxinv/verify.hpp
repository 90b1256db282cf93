#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxinv/oddgraph.hpp"
#include "coxinv/oracle.hpp"

namespace coxinv {

/// Side-by-side comparison of the odd-graph count with brute force.
struct Verification {
  std::size_t elements = 0;
  std::size_t involutions = 0;
  std::vector<std::uint64_t> pipeline_per_rank;
  std::vector<std::uint64_t> oracle_per_rank;
  std::uint64_t pipeline_total = 0;
  std::uint64_t oracle_total = 0;
  /// One line per failed representative check; empty when all hold.
  std::vector<std::string> representative_problems;

  bool counts_match() const {
    return pipeline_per_rank == oracle_per_rank &&
           pipeline_total == oracle_total;
  }
  bool ok() const { return counts_match() && representative_problems.empty(); }
};

/// Checks each representative word: it must evaluate to an involution in
/// the table, land in a class of its claimed rank, and no two words may
/// share a class.
std::vector<std::string> check_representatives(
    const oracle::GroupTable& table, const oracle::InvolutionCensus& census,
    const InvolutionClassReport& report);

/// Enumerates the group (throws oracle::CapExceededError past `cap`) and
/// compares it with cc2().
Verification verify(const CoxeterMatrix& mat,
                    std::size_t cap = oracle::kDefaultCap,
                    const std::string& name = {});

}  // namespace coxinv
