#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sgdim/bitvector.hpp"

namespace sgdim {

/// A set of distinct words of common length n, kept in text-lexicographic order.
/// Raw linear codes keep their zero word; game construction rejects it.
class Code {
 public:
  Code(int n, std::vector<BitVector> words);

  int length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<BitVector>& words() const noexcept { return words_; }
  std::vector<std::uint64_t> masks() const;
  bool contains(const BitVector& w) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  int n_;
  std::vector<BitVector> words_;
};

/// Outcome of the pairwise test |hw(x) - hw(y)| < d(x, y) - 2.
struct ConditionCheck {
  bool holds = true;
  /// First failing pair in word order, when the test fails.
  std::optional<std::pair<BitVector, BitVector>> violation;
};

ConditionCheck check_condition(const Code& c);

/// Hamming code of length t = 2^m - 1 (zero word included), 2 <= m <= 4.
/// m = 3 uses the systematic generator whose parity extension reproduces the
/// classic [8,4] listing; other m use the parity-check matrix whose columns
/// are 1..t in ascending order.
Code hamming_code(int m);
/// Appends an even-parity bit to every word.
Code extend_parity(const Code& raw);
/// The 16 words of the extended [8,4] Hamming code.
Code hamming84();

/// Generator rows (as masks) of hamming_code(m), valid for 2 <= m <= 6.
std::vector<std::uint64_t> hamming_generator_rows(int m);

struct WeightEnumerator {
  int t = 0;
  /// a_i = number of codewords of weight i, i = 0..t.
  std::vector<std::uint64_t> coefficients;
  std::uint64_t total() const;
};

/// Coefficients of ((1+x)^t + t(1-x)(1-x^2)^((t-1)/2)) / (t+1) for
/// t = 2^m - 1 with 7 <= t <= 63, exact integer arithmetic.
WeightEnumerator weight_enumerator(int t);
/// Weight distribution of hamming_code(m) counted by enumeration, 2 <= m <= 5.
WeightEnumerator enumerate_hamming_weights(int m);
WeightEnumerator weight_distribution(const Code& c);

Code constant_weight_subset(const Code& c, int w);

struct GrahamSloaneResult {
  Code code;
  int residue = 0;
  /// Sizes of the n classes indexed by residue of the 1-based position sum.
  std::vector<std::uint64_t> bucket_sizes;
};

/// Largest residue class (smallest residue on ties) of the weight-w words of
/// length n. Requires n <= 20 and 1 <= w <= n.
GrahamSloaneResult graham_sloane_construction(int n, int w);
Code graham_sloane(int n, int w);

/// Minimum pairwise distance; throws InvalidInput for fewer than two words.
int min_distance(const Code& c);

/// Drops the all-zero word if present.
Code without_zero_word(const Code& c);

}  // namespace sgdim
