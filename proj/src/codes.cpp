#include "sgdim/codes.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>

#include "sgdim/kernels.hpp"

namespace sgdim {

Code::Code(int n, std::vector<BitVector> words) : n_(n), words_(std::move(words)) {
  if (n < 1 || n > kMaxBits) throw CapacityError("code length must be in [1, 64]");
  for (const auto& w : words_) {
    if (w.size() != n) throw InvalidInput("word " + w.str() + " does not have length " + std::to_string(n));
  }
  std::sort(words_.begin(), words_.end());
  auto dup = std::adjacent_find(words_.begin(), words_.end());
  if (dup != words_.end()) throw InvalidInput("duplicate word " + dup->str());
}

std::vector<std::uint64_t> Code::masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.push_back(w.mask());
  return out;
}

bool Code::contains(const BitVector& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

ConditionCheck check_condition(const Code& c) {
  const auto masks = c.masks();
  ConditionCheck out;
  if (auto v = kernels::first_condition_violation(masks)) {
    out.holds = false;
    out.violation = std::make_pair(c.words()[v->first], c.words()[v->second]);
  }
  return out;
}

std::vector<std::uint64_t> hamming_generator_rows(int m) {
  if (m < 2 || m > 6) throw CapacityError("hamming generator: m must be in [2, 6]");
  const int t = (1 << m) - 1;
  std::vector<std::uint64_t> rows;
  if (m == 3) {
    // Message in positions 1-4, parity positions 5-7.
    constexpr std::uint64_t parity[4] = {0b011, 0b101, 0b110, 0b111};  // 110, 101, 011, 111 as text
    for (int i = 0; i < 4; ++i) rows.push_back((std::uint64_t{1} << i) | (parity[i] << 4));
    return rows;
  }
  // Position j has parity-check column j; parity bits sit at powers of two.
  for (int j = 1; j <= t; ++j) {
    if (std::has_single_bit(static_cast<unsigned>(j))) continue;
    std::uint64_t row = std::uint64_t{1} << (j - 1);
    for (int b = 0; b < m; ++b) {
      if ((j >> b) & 1) row |= std::uint64_t{1} << ((1 << b) - 1);
    }
    rows.push_back(row);
  }
  return rows;
}

Code hamming_code(int m) {
  if (m < 2 || m > 4) throw CapacityError("hamming_code: m must be in [2, 4] for materialised codes");
  const int t = (1 << m) - 1;
  const auto rows = hamming_generator_rows(m);
  std::vector<BitVector> words;
  const std::uint64_t count = std::uint64_t{1} << rows.size();
  words.reserve(count);
  std::uint64_t word = 0;
  words.emplace_back(t, word);
  for (std::uint64_t i = 1; i < count; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    words.emplace_back(t, word);
  }
  return Code(t, std::move(words));
}

Code extend_parity(const Code& raw) {
  const int n = raw.length() + 1;
  if (n > kMaxBits) throw CapacityError("extended code exceeds 64 positions");
  std::vector<BitVector> words;
  words.reserve(raw.size());
  for (const auto& w : raw.words()) {
    const std::uint64_t parity = static_cast<std::uint64_t>(w.weight() & 1);
    words.emplace_back(n, w.mask() | (parity << raw.length()));
  }
  return Code(n, std::move(words));
}

Code hamming84() { return extend_parity(hamming_code(3)); }

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t s = 0;
  for (auto a : coefficients) s += a;
  return s;
}

WeightEnumerator weight_enumerator(int t) {
  if (t < 7 || t > 63 || !std::has_single_bit(static_cast<unsigned>(t + 1))) {
    throw InvalidInput("weight_enumerator: t must be 2^m - 1 with 7 <= t <= 63, got " + std::to_string(t));
  }
  const auto ut = static_cast<unsigned long>(t);
  const unsigned long h = (ut - 1) / 2;
  std::vector<mpz_class> poly(ut + 1);
  for (unsigned long i = 0; i <= ut; ++i) mpz_bin_uiui(poly[i].get_mpz_t(), ut, i);
  // t (1 - x)(1 - x^2)^h = t * sum_j (-1)^j C(h, j) (x^{2j} - x^{2j+1})
  for (unsigned long j = 0; j <= h; ++j) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), h, j);
    c *= static_cast<long>(t);
    if (j & 1) c = -c;
    poly[2 * j] += c;
    poly[2 * j + 1] -= c;
  }
  WeightEnumerator out{t, {}};
  for (auto& c : poly) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), ut + 1)) throw std::logic_error("enumerator coefficient not integral");
    c /= static_cast<long>(t + 1);
    if (c < 0 || !c.fits_ulong_p()) throw std::logic_error("enumerator coefficient out of range");
    out.coefficients.push_back(c.get_ui());
  }
  return out;
}

WeightEnumerator enumerate_hamming_weights(int m) {
  if (m < 2 || m > 5) throw CapacityError("enumerate_hamming_weights: m must be in [2, 5]");
  const int t = (1 << m) - 1;
  const auto rows = hamming_generator_rows(m);
  return WeightEnumerator{t, kernels::weight_histogram(t, rows)};
}

WeightEnumerator weight_distribution(const Code& c) {
  WeightEnumerator out{c.length(), std::vector<std::uint64_t>(static_cast<std::size_t>(c.length()) + 1, 0)};
  for (const auto& w : c.words()) ++out.coefficients[static_cast<std::size_t>(w.weight())];
  return out;
}

Code constant_weight_subset(const Code& c, int w) {
  std::vector<BitVector> words;
  std::copy_if(c.words().begin(), c.words().end(), std::back_inserter(words),
               [w](const BitVector& x) { return x.weight() == w; });
  return Code(c.length(), std::move(words));
}

GrahamSloaneResult graham_sloane_construction(int n, int w) {
  if (n < 1 || n > 20) throw CapacityError("graham_sloane: n must be in [1, 20]");
  if (w < 1 || w > n) throw InvalidInput("graham_sloane: w must be in [1, n]");
  auto sizes = kernels::residue_histogram(n, w);
  const auto best = std::max_element(sizes.begin(), sizes.end());  // first maximum = smallest residue
  const int residue = static_cast<int>(best - sizes.begin());
  std::vector<BitVector> words;
  words.reserve(*best);
  for_each_subset(n, w, [&](const Coalition& x) {
    int sum = 0;
    for (int p : x.players()) sum += p;
    if (sum % n == residue) words.push_back(x);
  });
  return GrahamSloaneResult{Code(n, std::move(words)), residue, std::move(sizes)};
}

Code graham_sloane(int n, int w) { return graham_sloane_construction(n, w).code; }

int min_distance(const Code& c) {
  if (c.size() < 2) throw InvalidInput("min_distance needs at least two words");
  return kernels::min_distance(c.masks());
}

Code without_zero_word(const Code& c) {
  std::vector<BitVector> words;
  std::copy_if(c.words().begin(), c.words().end(), std::back_inserter(words),
               [](const BitVector& x) { return !x.empty_set(); });
  return Code(c.length(), std::move(words));
}

}  // namespace sgdim
