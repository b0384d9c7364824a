#include "sgdim/weighted.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "sgdim/rational_simplex.hpp"

namespace sgdim {

WeightedGame::WeightedGame(std::int64_t quota, std::vector<std::int64_t> weights)
    : quota_(quota), weights_(std::move(weights)) {
  if (weights_.empty() || weights_.size() > static_cast<std::size_t>(kMaxBits)) {
    throw InvalidInput("weighted game needs 1..64 players");
  }
  if (quota_ < 1) throw InvalidInput("quota must be at least 1");
  std::int64_t total = 0;
  for (auto w : weights_) {
    if (w < 0) throw InvalidInput("weights must be non-negative");
    if (__builtin_add_overflow(total, w, &total)) throw CapacityError("weight sum overflows 64 bits");
  }
  if (total < quota_) throw InvalidInput("grand coalition does not reach the quota");
}

std::int64_t WeightedGame::weight_of(const Coalition& s) const {
  if (s.size() != players()) throw InvalidInput("coalition size does not match weighted game");
  return weight_of_mask(s.mask());
}

std::int64_t WeightedGame::weight_of_mask(std::uint64_t mask) const noexcept {
  std::int64_t sum = 0;
  for (std::uint64_t b = mask; b != 0; b &= b - 1) sum += weights_[static_cast<std::size_t>(__builtin_ctzll(b))];
  return sum;
}

IntersectionRep::IntersectionRep(std::vector<WeightedGame> games) : games_(std::move(games)) {
  if (games_.empty()) throw InvalidInput("intersection needs at least one game");
  for (const auto& g : games_) {
    if (g.players() != games_.front().players()) throw InvalidInput("intersection members differ in player count");
  }
}

bool IntersectionRep::is_winning(const Coalition& s) const {
  if (s.size() != players()) throw InvalidInput("coalition size does not match intersection");
  return is_winning_mask(s.mask());
}

bool IntersectionRep::is_winning_mask(std::uint64_t mask) const noexcept {
  return std::all_of(games_.begin(), games_.end(),
                     [&](const WeightedGame& g) { return g.weight_of_mask(mask) >= g.quota(); });
}

FeasibilitySystem::FeasibilitySystem(int n, std::vector<Coalition> lower, std::vector<Coalition> upper)
    : n_(n), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (n < 1 || n > kMaxBits) throw CapacityError("player count must be in [1, 64]");
  std::unordered_set<Coalition> seen;
  for (const auto& c : lower_) {
    if (c.size() != n) throw InvalidInput("constraint " + c.str() + " has the wrong length");
    seen.insert(c);
  }
  for (const auto& c : upper_) {
    if (c.size() != n) throw InvalidInput("constraint " + c.str() + " has the wrong length");
    if (seen.contains(c)) throw InvalidInput("coalition " + c.str() + " is both a lower and an upper constraint");
  }
}

bool FeasibilitySystem::satisfied_by(const WeightedGame& w) const {
  if (w.players() != n_) return false;
  const auto q = w.quota();
  return std::all_of(lower_.begin(), lower_.end(), [&](const Coalition& s) { return w.weight_of(s) >= q; }) &&
         std::all_of(upper_.begin(), upper_.end(), [&](const Coalition& t) { return w.weight_of(t) <= q - 1; });
}

namespace {

// Variables: w_1..w_n, then r = q - 1 >= 0.
lp::Row lower_row(int n, const Coalition& s) {
  lp::Row row{std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0), 1};
  for (int p : s.players()) row.coeffs[static_cast<std::size_t>(p - 1)] = 1;
  row.coeffs[static_cast<std::size_t>(n)] = -1;
  return row;  // sum_S w - r >= 1
}

lp::Row upper_row(int n, const Coalition& t) {
  lp::Row row{std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0), 2};
  for (int p : t.players()) row.coeffs[static_cast<std::size_t>(p - 1)] = -1;
  row.coeffs[static_cast<std::size_t>(n)] = 1;
  return row;  // r - sum_T w >= 2
}

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw CapacityError("separating weights exceed 64-bit range");
  return v.get_si();
}

// Clears denominators with their lcm, then divides out the common gcd.
WeightedGame scale_to_integers(int n, const std::vector<mpq_class>& x) {
  std::vector<mpq_class> values(x.begin(), x.begin() + n);
  values.push_back(x[static_cast<std::size_t>(n)] + 1);
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(values.size());
  mpz_class g = 0;
  for (const auto& v : values) {
    mpz_class i = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), i.get_mpz_t());
    ints.push_back(i);
  }
  std::vector<std::int64_t> weights;
  weights.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) weights.push_back(to_int64(ints[static_cast<std::size_t>(i)] / g));
  return WeightedGame(to_int64(ints.back() / g), std::move(weights));
}

}  // namespace

std::optional<WeightedGame> feasible_separation(const FeasibilitySystem& sys, SeparationStats* stats) {
  const int n = sys.players();
  const Coalition grand = BitVector::full(n);
  for (const auto& t : sys.upper()) {
    if (t == grand) return std::nullopt;
  }

  // Constraint generation: solve on an active subset, re-check every
  // constraint on the integer witness, add violated ones and repeat.
  // Infeasibility of a subset proves infeasibility of the whole system.
  constexpr std::size_t kBatch = 24;
  std::vector<lp::Row> active{lower_row(n, grand)};
  std::vector<char> lower_in(sys.lower().size(), 0);
  std::vector<char> upper_in(sys.upper().size(), 0);
  for (;;) {
    lp::SolveStats lp_stats;
    auto x = lp::find_nonnegative_solution(n + 1, active, &lp_stats);
    if (stats) {
      ++stats->lp_solves;
      stats->pivots += lp_stats.pivots;
    }
    if (!x) return std::nullopt;
    WeightedGame w = scale_to_integers(n, *x);
    const auto q = w.quota();
    std::size_t added = 0;
    for (std::size_t i = 0; i < sys.upper().size() && added < kBatch; ++i) {
      if (!upper_in[i] && w.weight_of(sys.upper()[i]) > q - 1) {
        active.push_back(upper_row(n, sys.upper()[i]));
        upper_in[i] = 1;
        ++added;
      }
    }
    for (std::size_t i = 0; i < sys.lower().size() && added < kBatch; ++i) {
      if (!lower_in[i] && w.weight_of(sys.lower()[i]) < q) {
        active.push_back(lower_row(n, sys.lower()[i]));
        lower_in[i] = 1;
        ++added;
      }
    }
    if (added == 0) {
      if (!sys.satisfied_by(w)) throw std::logic_error("separation witness failed exact re-check");
      return w;
    }
  }
}

std::optional<WeightedGame> is_weighted(const SimpleGame& g) {
  require_enumerable(g.players(), "is_weighted");
  FeasibilitySystem sys(g.players(), g.minimal_winning(), maximal_losing(g));
  auto w = feasible_separation(sys);
  if (w && !games_equal(induced_game(IntersectionRep({*w})), g)) {
    throw std::logic_error("weighted witness does not reproduce the game");
  }
  return w;
}

SimpleGame induced_game(const IntersectionRep& r) {
  const int n = r.players();
  require_enumerable(n, "induced_game");
  return from_truth_table(n, kernels::evaluate(n, [&](std::uint64_t m) { return r.is_winning_mask(m); }));
}

}  // namespace sgdim
