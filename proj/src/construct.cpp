#include "sgdim/construct.hpp"

#include <bit>
#include <numeric>

namespace sgdim {

namespace {

void require_odd_k(int k, int min_k, const char* what) {
  if (k < min_k || k % 2 == 0) {
    throw InvalidInput(std::string(what) + ": k must be odd and at least " + std::to_string(min_k) + ", got " +
                       std::to_string(k));
  }
  require_enumerable(2 * k, what);
}

int count_in(std::uint64_t mask, std::uint64_t part) { return std::popcount(mask & part); }

}  // namespace

WeightedGame hitting_component(const BitVector& x) {
  if (x.empty_set()) throw InvalidInput("hitting component of the zero word is undefined");
  std::vector<std::int64_t> w(static_cast<std::size_t>(x.size()), 0);
  for (int p : x.players()) w[static_cast<std::size_t>(p - 1)] = 1;
  return WeightedGame(1, std::move(w));
}

CodeGame gamma_from_code(const Code& c) {
  if (c.empty()) throw InvalidInput("gamma_from_code: empty code");
  for (const auto& w : c.words()) {
    if (w.empty_set()) throw InvalidInput("gamma_from_code: zero word has no support");
  }
  auto check = check_condition(c);
  if (!check.holds) throw ConditionViolation(check.violation->first, check.violation->second);
  const int n = c.length();
  require_enumerable(n, "gamma_from_code");

  const auto masks = c.masks();
  auto tt = kernels::evaluate(n, [&](std::uint64_t s) {
    for (auto x : masks) {
      if ((s & x) == 0) return false;
    }
    return true;
  });
  std::vector<WeightedGame> parts;
  parts.reserve(c.size());
  for (const auto& w : c.words()) parts.push_back(hitting_component(w));
  return CodeGame{c, from_truth_table(n, tt), IntersectionRep(std::move(parts))};
}

bool taylor_zwicker_wins(int k, const Coalition& x) {
  const int size = x.weight();
  if (size != k) return size > k;
  const std::uint64_t t_half = BitVector::low_mask(2 * k) & ~BitVector::low_mask(k);
  return count_in(x.mask(), t_half) % 2 == 0;
}

std::vector<BitVector> even_parity_words(int k) {
  std::vector<BitVector> out;
  for_each_subset(k, std::nullopt, [&](const BitVector& x) {
    if (x.weight() % 2 == 0) out.push_back(x);
  });
  return out;
}

WeightedGame tz_component(int k, const BitVector& x) {
  if (x.size() != k || x.weight() % 2 != 0) throw InvalidInput("tz_component: need an even-parity word of length k");
  std::vector<std::int64_t> w(static_cast<std::size_t>(2 * k), 0);
  if (x.empty_set()) {
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = 1;
    return WeightedGame(1, std::move(w));
  }
  for (int i = 1; i <= k; ++i) w[static_cast<std::size_t>(i - 1)] = x.test(i) ? 0 : 2;
  for (int j = k; j < 2 * k; ++j) w[static_cast<std::size_t>(j)] = 1;
  return WeightedGame(k - (x.weight() - 1), std::move(w));
}

IntersectionRep tz_decomposition(int k) {
  require_odd_k(k, 3, "tz_decomposition");
  std::vector<WeightedGame> parts;
  for (const auto& x : even_parity_words(k)) parts.push_back(tz_component(k, x));
  return IntersectionRep(std::move(parts));
}

TZGame taylor_zwicker(int k) {
  require_odd_k(k, 1, "taylor_zwicker");
  auto game = from_truth_table(2 * k, [k](const Coalition& x) { return taylor_zwicker_wins(k, x); });
  if (k == 1) return TZGame{k, std::move(game), IntersectionRep({WeightedGame(1, {1, 0})})};
  return TZGame{k, std::move(game), tz_decomposition(k)};
}

Code tz_loser_code(int k) {
  require_odd_k(k, 1, "tz_loser_code");
  std::vector<BitVector> words;
  for (const auto& x : even_parity_words(k)) words.push_back(concat(x, complement(x)));
  return Code(2 * k, std::move(words));
}

SimpleGame elkind_variant(int k) {
  require_odd_k(k, 1, "elkind_variant");
  const std::uint64_t s_half = BitVector::low_mask(k);
  const std::uint64_t t_half = BitVector::low_mask(2 * k) & ~s_half;
  return from_truth_table(2 * k, [=](const Coalition& x) {
    const int size = x.weight();
    if (size != k) return size > k;
    return count_in(x.mask(), s_half) % 2 == 0 && count_in(x.mask(), t_half) % 2 == 1;
  });
}

bool elkind_distance_rule(int k, const Coalition& x) {
  const int size = x.weight();
  if (size != k) return size > k;
  const BitVector s_half(2 * k, BitVector::low_mask(k));
  return hamming_distance(x, s_half) % 4 == 2;
}

std::vector<int> half_swap_permutation(int k) {
  std::vector<int> perm(static_cast<std::size_t>(2 * k));
  for (int i = 1; i <= k; ++i) {
    perm[static_cast<std::size_t>(i - 1)] = i + k;
    perm[static_cast<std::size_t>(i + k - 1)] = i;
  }
  return perm;
}

bool verify_tz_elkind_isomorphism(int k) {
  const auto perm = half_swap_permutation(k);
  return verify_tz_elkind_isomorphism(k, perm);
}

bool verify_tz_elkind_isomorphism(int k, std::span<const int> perm) {
  return games_equal(permute(elkind_variant(k), perm), taylor_zwicker(k).game);
}

}  // namespace sgdim
