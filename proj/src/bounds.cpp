#include <stdexcept>

#include "sgdim/construct.hpp"
#include "sgdim/dimension.hpp"

namespace sgdim {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

// pi truncated to 40 decimals; the true value lies in [kPiLow, kPiLow + 1e-40].
const mpq_class& pi_low() {
  static const mpq_class v("31415926535897932384626433832795028841971/10000000000000000000000000000000000000000");
  return v;
}

const mpq_class& pi_high() {
  static const mpq_class v = pi_low() + mpq_class("1/10000000000000000000000000000000000000000");
  return v;
}

mpz_class isqrt(const mpz_class& v) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

mpz_class floor_of(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_of(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

int upper_bound(const SimpleGame& g) {
  const int n = g.players();
  require_enumerable(n, "upper_bound");
  const auto losers = maximal_losing(g);
  const auto lm = static_cast<std::uint64_t>(losers.size());
  const std::uint64_t all = std::uint64_t{1} << n;
  const auto sperner = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
  if (lm > all - count_winning(g) || mpz_class(static_cast<unsigned long>(lm)) > sperner) {
    throw std::logic_error("maximal losing family breaks the upper-bound chain");
  }
  return static_cast<int>(lm);
}

SpernerBounds sperner_bounds(int n) {
  if (n < 2) throw InvalidInput("sperner_bounds: n must be at least 2");
  SpernerBounds out;
  out.n = n;
  out.value = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));

  // Odd n reuses the even case at n - 1 scaled by n / (n + 1).
  const bool even = n % 2 == 0;
  const long a = even ? n : n - 1;
  const mpq_class factor = even ? mpq_class(1) : mpq_class(n, n + 1);

  const mpz_class scale = mpz_class("10000000000000000000000000000000000000000");  // 10^40
  const mpq_class scale_sq = mpq_class(scale * scale);
  const mpq_class ratio_low = mpq_class(2) / (pi_high() * a);
  const mpq_class ratio_high = mpq_class(2) / (pi_low() * a);
  // sqrt(2 / (pi a)) lies in [root_low, root_high].
  const mpq_class root_low(isqrt(floor_of(ratio_low * scale_sq)), scale);
  const mpq_class root_high(isqrt(ceil_of(ratio_high * scale_sq)) + 1, scale);

  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
  out.lower = factor * root_high * (mpq_class(1) - mpq_class(1, 4 * a)) * pow2;
  out.upper = factor * root_low * (mpq_class(1) - mpq_class(2, 9 * a)) * pow2;
  out.lower.canonicalize();
  out.upper.canonicalize();
  const mpq_class value(out.value);
  out.holds = out.lower <= value && value <= out.upper;
  return out;
}

mpz_class theorem_lower_bound(int n) {
  if (n < 1) throw InvalidInput("theorem_lower_bound: n must be positive");
  const auto c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
  mpz_class r;
  mpz_cdiv_q_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::optional<mpz_class> power_of_two_dimension(int n) {
  if (n < 8 || (n & (n - 1)) != 0) return std::nullopt;
  const auto un = static_cast<unsigned long>(n);
  mpz_class numer = binomial(un, un / 2) + 2 * mpz_class(n - 1) * binomial(un / 2 - 1, un / 4);
  if (!mpz_divisible_ui_p(numer.get_mpz_t(), un)) throw std::logic_error("power-of-two dimension not integral");
  return mpz_class(numer / static_cast<long>(n));
}

int dimension_from_code_size(const Code& c) {
  if (c.empty()) throw InvalidInput("dimension_from_code_size: empty code");
  for (const auto& w : c.words()) {
    if (w.empty_set()) throw InvalidInput("dimension_from_code_size: zero word present");
  }
  const auto check = check_condition(c);
  if (!check.holds) {
    throw ConditionViolation(check.violation->first, check.violation->second);
  }
  return static_cast<int>(c.size());
}

}  // namespace sgdim
