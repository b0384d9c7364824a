#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "sgdim/kernels.hpp"

namespace sgdim::kernels {

namespace {

using Index = std::int64_t;  // OpenMP loop counters

Index table_size(int n) { return Index{1} << n; }

// Each thread collects matches from its contiguous static chunk; appending the
// chunks in thread order keeps the output ascending.
template <typename Keep>
std::vector<std::uint64_t> collect_ascending(Index size, Keep keep) {
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (Index m = 0; m < size; ++m) {
      if (keep(static_cast<std::uint64_t>(m))) local.push_back(static_cast<std::uint64_t>(m));
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

TruthTable evaluate(int n, const MaskPredicate& pred) {
  const Index size = table_size(n);
  TruthTable tt(static_cast<std::size_t>(size));
#pragma omp parallel for schedule(static)
  for (Index m = 0; m < size; ++m) tt[static_cast<std::size_t>(m)] = pred(static_cast<std::uint64_t>(m)) ? 1 : 0;
  return tt;
}

TruthTable upward_closure(int n, std::span<const std::uint64_t> generators) {
  const Index size = table_size(n);
  TruthTable tt(static_cast<std::size_t>(size), 0);
  for (auto g : generators) tt[g] = 1;
  // Within one pass, writes go to masks containing `bit` and reads to masks
  // without it, so iterations are independent.
  for (int b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < size; ++i) {
      const auto m = static_cast<std::uint64_t>(i);
      if (m & bit) tt[m] |= tt[m ^ bit];
    }
  }
  return tt;
}

std::vector<std::uint64_t> minimal_true(int /*n*/, const TruthTable& tt) {
  return collect_ascending(static_cast<Index>(tt.size()), [&](std::uint64_t m) {
    if (!tt[m]) return false;
    for (std::uint64_t b = m; b != 0; b &= b - 1) {
      if (tt[m ^ (b & (~b + 1))]) return false;
    }
    return true;
  });
}

std::vector<std::uint64_t> maximal_false(int n, const TruthTable& tt) {
  const std::uint64_t full = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return collect_ascending(static_cast<Index>(tt.size()), [&](std::uint64_t m) {
    if (tt[m]) return false;
    for (std::uint64_t b = full & ~m; b != 0; b &= b - 1) {
      if (!tt[m | (b & (~b + 1))]) return false;
    }
    return true;
  });
}

std::optional<MonotonicityViolation> first_monotonicity_violation(int n, const TruthTable& tt) {
  const Index size = static_cast<Index>(tt.size());
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  Index first = size;
#pragma omp parallel for schedule(static) reduction(min : first)
  for (Index i = 0; i < size; ++i) {
    const auto m = static_cast<std::uint64_t>(i);
    if (!tt[m]) continue;
    for (std::uint64_t b = full & ~m; b != 0; b &= b - 1) {
      if (!tt[m | (b & (~b + 1))]) {
        first = std::min(first, i);
        break;
      }
    }
  }
  if (first == size) return std::nullopt;
  const auto m = static_cast<std::uint64_t>(first);
  for (std::uint64_t b = full & ~m; b != 0; b &= b - 1) {
    const std::uint64_t sup = m | (b & (~b + 1));
    if (!tt[sup]) return MonotonicityViolation{m, sup};
  }
  return std::nullopt;
}

std::vector<std::uint64_t> weight_histogram(int length, std::span<const std::uint64_t> rows) {
  const std::size_t bins = static_cast<std::size_t>(length) + 1;
  const Index count = Index{1} << rows.size();
  // Gray-code walk inside fixed blocks; each block seeds its first word directly.
  constexpr Index kBlock = Index{1} << 12;
  const Index blocks = (count + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(omp_get_max_threads()),
                                                std::vector<std::uint64_t>(bins, 0));
#pragma omp parallel
  {
    auto& hist = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (Index blk = 0; blk < blocks; ++blk) {
      const Index begin = blk * kBlock;
      const Index end = std::min(count, begin + kBlock);
      const auto gray = static_cast<std::uint64_t>(begin ^ (begin >> 1));
      std::uint64_t word = 0;
      for (std::uint64_t g = gray; g != 0; g &= g - 1) word ^= rows[static_cast<std::size_t>(std::countr_zero(g))];
      ++hist[static_cast<std::size_t>(std::popcount(word))];
      for (Index i = begin + 1; i < end; ++i) {
        word ^= rows[static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(i)))];
        ++hist[static_cast<std::size_t>(std::popcount(word))];
      }
    }
  }
  std::vector<std::uint64_t> hist(bins, 0);
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < bins; ++i) hist[i] += p[i];
  }
  return hist;
}

std::vector<std::uint64_t> residue_histogram(int n, int w) {
  const auto modulus = static_cast<std::uint64_t>(n);
  if (w < 0 || w > n) return std::vector<std::uint64_t>(modulus, 0);
  if (w == 0) return serial::residue_histogram(n, w);
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(omp_get_max_threads()),
                                                std::vector<std::uint64_t>(modulus, 0));
  // Words are split by their highest set position; the rest of each word is
  // a (w-1)-subset of the lower positions, walked with Gosper's step.
#pragma omp parallel
  {
    auto& hist = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
    for (int top = w - 1; top < n; ++top) {
      const std::uint64_t high = std::uint64_t{1} << top;
      const std::uint64_t base = static_cast<std::uint64_t>(top) + 1;
      if (w == 1) {
        ++hist[base % modulus];
        continue;
      }
      std::uint64_t m = (std::uint64_t{1} << (w - 1)) - 1;
      while (m < high) {
        std::uint64_t sum = base;
        for (std::uint64_t b = m; b != 0; b &= b - 1) sum += static_cast<std::uint64_t>(std::countr_zero(b)) + 1;
        ++hist[sum % modulus];
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t s = m + c;
        m = (((m ^ s) >> 2) / c) | s;
      }
    }
  }
  std::vector<std::uint64_t> hist(modulus, 0);
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < modulus; ++r) hist[r] += p[r];
  }
  return hist;
}

int min_distance(std::span<const std::uint64_t> words) {
  const Index size = static_cast<Index>(words.size());
  int best = std::numeric_limits<int>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
  for (Index i = 0; i < size; ++i) {
    for (Index j = i + 1; j < size; ++j) {
      best = std::min(best, std::popcount(words[static_cast<std::size_t>(i)] ^ words[static_cast<std::size_t>(j)]));
    }
  }
  return best;
}

std::optional<IndexPair> first_condition_violation(std::span<const std::uint64_t> words) {
  const Index size = static_cast<Index>(words.size());
  Index first = size;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
  for (Index i = 0; i < size; ++i) {
    if (i >= first) continue;
    for (Index j = i + 1; j < size; ++j) {
      if (violates_condition(words[static_cast<std::size_t>(i)], words[static_cast<std::size_t>(j)])) {
        first = std::min(first, i);
        break;
      }
    }
  }
  if (first == size) return std::nullopt;
  const auto i = static_cast<std::size_t>(first);
  for (std::size_t j = i + 1; j < words.size(); ++j) {
    if (violates_condition(words[i], words[j])) return IndexPair{i, j};
  }
  return std::nullopt;
}

}  // namespace sgdim::kernels
