#include "sgdim/bitvector.hpp"

#include <algorithm>
#include <cctype>

namespace sgdim {

BitVector::BitVector(int n) : BitVector(n, 0) {}

BitVector::BitVector(int n, std::uint64_t mask) : bits_(mask), n_(n) {
  if (n < 1 || n > kMaxBits) {
    throw CapacityError("bit vector length must be in [1, 64], got " + std::to_string(n));
  }
  if ((mask & ~low_mask(n)) != 0) {
    throw InvalidInput("mask has bits beyond length " + std::to_string(n));
  }
}

BitVector BitVector::parse(std::string_view text) {
  std::uint64_t bits = 0;
  int n = 0;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') {
      throw InvalidInput(std::string("invalid bit character '") + c + "'");
    }
    if (n == kMaxBits) throw CapacityError("bit vector longer than 64 positions");
    if (c == '1') bits |= std::uint64_t{1} << n;
    ++n;
  }
  if (n == 0) throw InvalidInput("empty bit vector");
  return BitVector(n, bits);
}

BitVector BitVector::from_players(int n, const std::vector<int>& players) {
  BitVector v(n);
  for (int p : players) v = v.with(p, true);
  return v;
}

bool BitVector::test(int position) const {
  if (position < 1 || position > n_) {
    throw InvalidInput("position " + std::to_string(position) + " outside 1.." + std::to_string(n_));
  }
  return (bits_ >> (position - 1)) & 1u;
}

BitVector BitVector::with(int position, bool value) const {
  if (position < 1 || position > n_) {
    throw InvalidInput("position " + std::to_string(position) + " outside 1.." + std::to_string(n_));
  }
  const std::uint64_t bit = std::uint64_t{1} << (position - 1);
  return BitVector(n_, value ? (bits_ | bit) : (bits_ & ~bit));
}

std::vector<int> BitVector::players() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(weight()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string BitVector::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

void BitVector::require_same_length(const BitVector& o) const {
  if (n_ != o.n_) {
    throw InvalidInput("length mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }
}

BitVector BitVector::operator&(const BitVector& o) const {
  require_same_length(o);
  return BitVector(n_, bits_ & o.bits_);
}

BitVector BitVector::operator|(const BitVector& o) const {
  require_same_length(o);
  return BitVector(n_, bits_ | o.bits_);
}

BitVector BitVector::operator^(const BitVector& o) const {
  require_same_length(o);
  return BitVector(n_, bits_ ^ o.bits_);
}

std::strong_ordering BitVector::operator<=>(const BitVector& o) const noexcept {
  if (n_ != o.n_) return n_ <=> o.n_;
  const std::uint64_t diff = bits_ ^ o.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // The first differing position decides; a 1 there sorts later.
  const std::uint64_t first = diff & (~diff + 1);
  return (bits_ & first) ? std::strong_ordering::greater : std::strong_ordering::less;
}

int hamming_weight(const BitVector& x) { return x.weight(); }

int hamming_distance(const BitVector& x, const BitVector& y) { return (x ^ y).weight(); }

BitVector complement(const BitVector& x) {
  return BitVector(x.size(), ~x.mask() & BitVector::low_mask(x.size()));
}

BitVector concat(const BitVector& x, const BitVector& y) {
  const int n = x.size() + y.size();
  if (n > kMaxBits) throw CapacityError("concatenation exceeds 64 positions");
  return BitVector(n, x.mask() | (y.mask() << x.size()));
}

void require_enumerable(int n, const char* what) {
  if (n < 1 || n > kEnumerationGuard) {
    throw CapacityError(std::string(what) + ": n=" + std::to_string(n) +
                        " outside enumeration guard 1.." + std::to_string(kEnumerationGuard));
  }
}

std::uint64_t reverse_bits(std::uint64_t v, int n) noexcept {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    r = (r << 1) | (v & 1u);
    v >>= 1;
  }
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(c);
}

void for_each_subset(int n, std::optional<int> k, const std::function<void(const Coalition&)>& fn) {
  require_enumerable(n, "enumerate_subsets");
  // Iterate text-order ranks r (position 1 = most significant bit of r) and
  // reverse into the internal layout.
  const std::uint64_t limit = std::uint64_t{1} << n;
  if (!k) {
    for (std::uint64_t r = 0; r < limit; ++r) fn(BitVector(n, reverse_bits(r, n)));
    return;
  }
  if (*k < 0 || *k > n) return;
  if (*k == 0) {
    fn(BitVector(n));
    return;
  }
  // Gosper's hack walks the k-subsets in increasing numeric order.
  std::uint64_t r = (std::uint64_t{1} << *k) - 1;
  while (r < limit) {
    fn(BitVector(n, reverse_bits(r, n)));
    const std::uint64_t c = r & (~r + 1);
    const std::uint64_t s = r + c;
    r = (((r ^ s) >> 2) / c) | s;
  }
}

std::vector<Coalition> enumerate_subsets(int n, std::optional<int> k) {
  std::vector<Coalition> out;
  for_each_subset(n, k, [&](const Coalition& c) { out.push_back(c); });
  return out;
}

}  // namespace sgdim
