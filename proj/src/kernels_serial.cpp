#include <algorithm>
#include <bit>
#include <limits>

#include "sgdim/kernels.hpp"

namespace sgdim::kernels::serial {

namespace {
std::uint64_t table_size(int n) { return std::uint64_t{1} << n; }
}  // namespace

TruthTable evaluate(int n, const MaskPredicate& pred) {
  TruthTable tt(table_size(n));
  for (std::uint64_t m = 0; m < tt.size(); ++m) tt[m] = pred(m) ? 1 : 0;
  return tt;
}

TruthTable upward_closure(int n, std::span<const std::uint64_t> generators) {
  TruthTable tt(table_size(n), 0);
  for (auto g : generators) tt[g] = 1;
  for (int b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t m = 0; m < tt.size(); ++m) {
      if (m & bit) tt[m] |= tt[m ^ bit];
    }
  }
  return tt;
}

std::vector<std::uint64_t> minimal_true(int n, const TruthTable& tt) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < tt.size(); ++m) {
    if (!tt[m]) continue;
    bool minimal = true;
    for (int b = 0; b < n && minimal; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      if ((m & bit) && tt[m ^ bit]) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

std::vector<std::uint64_t> maximal_false(int n, const TruthTable& tt) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < tt.size(); ++m) {
    if (tt[m]) continue;
    bool maximal = true;
    for (int b = 0; b < n && maximal; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      if (!(m & bit) && !tt[m | bit]) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

std::optional<MonotonicityViolation> first_monotonicity_violation(int n, const TruthTable& tt) {
  for (std::uint64_t m = 0; m < tt.size(); ++m) {
    if (!tt[m]) continue;
    for (int b = 0; b < n; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      if (!(m & bit) && !tt[m | bit]) return MonotonicityViolation{m, m | bit};
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> weight_histogram(int length, std::span<const std::uint64_t> rows) {
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(length) + 1, 0);
  const std::uint64_t count = std::uint64_t{1} << rows.size();
  // Gray-code walk: consecutive messages differ in one generator row.
  std::uint64_t word = 0;
  hist[0] = 1;
  for (std::uint64_t i = 1; i < count; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    ++hist[static_cast<std::size_t>(std::popcount(word))];
  }
  return hist;
}

std::vector<std::uint64_t> residue_histogram(int n, int w) {
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
  if (w < 0 || w > n) return hist;
  const std::uint64_t limit = std::uint64_t{1} << n;
  if (w == 0) {
    hist[0] = 1;
    return hist;
  }
  std::uint64_t m = (std::uint64_t{1} << w) - 1;
  while (m < limit) {
    std::uint64_t sum = 0;
    for (std::uint64_t b = m; b != 0; b &= b - 1) sum += static_cast<std::uint64_t>(std::countr_zero(b)) + 1;
    ++hist[sum % static_cast<std::uint64_t>(n)];
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t s = m + c;
    m = (((m ^ s) >> 2) / c) | s;
  }
  return hist;
}

int min_distance(std::span<const std::uint64_t> words) {
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, std::popcount(words[i] ^ words[j]));
    }
  }
  return best;
}

std::optional<IndexPair> first_condition_violation(std::span<const std::uint64_t> words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (violates_condition(words[i], words[j])) return IndexPair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace sgdim::kernels::serial
