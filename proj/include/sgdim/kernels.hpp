#pragma once

// Data-parallel inner loops shared by the game, code and dimension modules.
//
// Every kernel exists twice: an OpenMP version in sgdim::kernels used by the
// library, and a plain loop in sgdim::kernels::serial kept as the reference
// the tests and benchmarks compare against. Both return identical results;
// parallel versions merge per-thread partials in a fixed order.
//
// Coalitions are raw masks here: player i is bit (i-1).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sgdim::kernels {

/// One byte per coalition mask in [0, 2^n).
using TruthTable = std::vector<std::uint8_t>;
using MaskPredicate = std::function<bool(std::uint64_t)>;

void set_thread_count(int threads);
int thread_count();

/// A winning mask with a one-player extension that loses.
struct MonotonicityViolation {
  std::uint64_t winning;
  std::uint64_t losing_superset;
};

/// Index pair (i < j) into a word list.
using IndexPair = std::pair<std::size_t, std::size_t>;

/// pred must be safe to call concurrently.
TruthTable evaluate(int n, const MaskPredicate& pred);
/// Marks every superset of some generator.
TruthTable upward_closure(int n, std::span<const std::uint64_t> generators);
/// Winning masks whose one-player removals all lose, ascending.
std::vector<std::uint64_t> minimal_true(int n, const TruthTable& tt);
/// Losing masks whose one-player additions all win, ascending.
std::vector<std::uint64_t> maximal_false(int n, const TruthTable& tt);
/// Smallest winning mask with a losing one-player superset.
std::optional<MonotonicityViolation> first_monotonicity_violation(int n, const TruthTable& tt);

/// Weight histogram (length = code length + 1) of the binary linear code
/// spanned by the given generator rows over `length` positions.
std::vector<std::uint64_t> weight_histogram(int length, std::span<const std::uint64_t> generator_rows);
/// Sizes of the n residue classes of weight-w words of length n under
/// (sum of 1-based positions of ones) mod n.
std::vector<std::uint64_t> residue_histogram(int n, int w);
/// Minimum pairwise Hamming distance; words.size() >= 2.
int min_distance(std::span<const std::uint64_t> words);
/// First pair (lexicographic in (i, j)) breaking |hw(x)-hw(y)| < d(x,y) - 2.
std::optional<IndexPair> first_condition_violation(std::span<const std::uint64_t> words);

namespace serial {
TruthTable evaluate(int n, const MaskPredicate& pred);
TruthTable upward_closure(int n, std::span<const std::uint64_t> generators);
std::vector<std::uint64_t> minimal_true(int n, const TruthTable& tt);
std::vector<std::uint64_t> maximal_false(int n, const TruthTable& tt);
std::optional<MonotonicityViolation> first_monotonicity_violation(int n, const TruthTable& tt);
std::vector<std::uint64_t> weight_histogram(int length, std::span<const std::uint64_t> generator_rows);
std::vector<std::uint64_t> residue_histogram(int n, int w);
int min_distance(std::span<const std::uint64_t> words);
std::optional<IndexPair> first_condition_violation(std::span<const std::uint64_t> words);
}  // namespace serial

/// True iff the two words break the code condition.
inline bool violates_condition(std::uint64_t x, std::uint64_t y) {
  const int hx = __builtin_popcountll(x);
  const int hy = __builtin_popcountll(y);
  const int gap = hx > hy ? hx - hy : hy - hx;
  return !(gap < __builtin_popcountll(x ^ y) - 2);
}

}  // namespace sgdim::kernels
