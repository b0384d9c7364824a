#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sgdim::lp {

/// One constraint coeffs . x >= rhs with integer data.
struct Row {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;
};

struct SolveStats {
  std::uint64_t pivots = 0;
};

/// Phase-one simplex over exact rationals: finds x >= 0 with every row
/// satisfied, or returns nullopt when none exists. Bland's rule (smallest
/// index enters, smallest basic index leaves on ties) makes the run
/// deterministic and cycle-free.
std::optional<std::vector<mpq_class>> find_nonnegative_solution(int variables, std::span<const Row> rows,
                                                                SolveStats* stats = nullptr);

}  // namespace sgdim::lp
