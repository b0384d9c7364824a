#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgdim/error.hpp"

namespace sgdim {

inline constexpr int kMaxBits = 64;
/// Full enumeration of coalitions (2^n truth tables) is capped here.
inline constexpr int kEnumerationGuard = 24;

/// Fixed-length 0/1 word of at most 64 positions.
///
/// Positions are numbered 1..n; position i lives in bit (i-1) of the word.
/// The textual form prints position 1 first, so "1100" is {1, 2}.
/// A BitVector doubles as a coalition's characteristic vector.
class BitVector {
 public:
  BitVector() = default;
  /// All-zero vector of length n.
  explicit BitVector(int n);
  BitVector(int n, std::uint64_t mask);

  /// Parses '0'/'1' characters; whitespace is skipped.
  static BitVector parse(std::string_view text);
  /// Coalition from 1-based player indices.
  static BitVector from_players(int n, const std::vector<int>& players);
  static BitVector full(int n) { return BitVector(n, low_mask(n)); }

  int size() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return bits_; }

  /// 1-based access.
  bool test(int position) const;
  BitVector with(int position, bool value) const;

  int weight() const noexcept { return std::popcount(bits_); }
  bool empty_set() const noexcept { return bits_ == 0; }
  bool subset_of(const BitVector& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  /// Player indices (1-based), ascending.
  std::vector<int> players() const;

  std::string str() const;

  BitVector operator&(const BitVector& o) const;
  BitVector operator|(const BitVector& o) const;
  BitVector operator^(const BitVector& o) const;

  bool operator==(const BitVector& o) const noexcept = default;
  /// Orders by length, then lexicographically by textual form.
  std::strong_ordering operator<=>(const BitVector& o) const noexcept;

  static constexpr std::uint64_t low_mask(int n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  void require_same_length(const BitVector& o) const;

  std::uint64_t bits_ = 0;
  int n_ = 0;
};

/// A coalition S of N = {1..n} is represented by its characteristic vector.
using Coalition = BitVector;

int hamming_weight(const BitVector& x);
/// Throws InvalidInput on length mismatch.
int hamming_distance(const BitVector& x, const BitVector& y);
BitVector complement(const BitVector& x);
/// x occupies positions 1..|x|, y follows. Throws CapacityError beyond 64 bits.
BitVector concat(const BitVector& x, const BitVector& y);

/// Calls fn for each coalition of {1..n} (only those of size k when given),
/// in lexicographic order of the textual form. Throws CapacityError for n > 24.
void for_each_subset(int n, std::optional<int> k, const std::function<void(const Coalition&)>& fn);
std::vector<Coalition> enumerate_subsets(int n, std::optional<int> k = std::nullopt);

/// Checks 1 <= n <= 24, throwing CapacityError otherwise.
void require_enumerable(int n, const char* what);

/// C(n, k) for 0 <= n <= 64; 0 when k is outside [0, n].
std::uint64_t binomial(int n, int k);

/// Maps text-lexicographic rank to internal mask: reverses the low n bits.
std::uint64_t reverse_bits(std::uint64_t v, int n) noexcept;

}  // namespace sgdim

template <>
struct std::hash<sgdim::BitVector> {
  std::size_t operator()(const sgdim::BitVector& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.mask() * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(v.size()));
  }
};
