#include "sgdim/game.hpp"

#include <algorithm>

namespace sgdim {

void sort_coalitions(std::vector<Coalition>& v) { std::sort(v.begin(), v.end()); }

std::vector<Coalition> to_coalitions(int n, std::span<const std::uint64_t> masks) {
  std::vector<Coalition> out;
  out.reserve(masks.size());
  for (auto m : masks) out.emplace_back(n, m);
  sort_coalitions(out);
  return out;
}

SimpleGame::SimpleGame(int n, std::vector<Coalition> minimal_winning)
    : n_(n), minimal_winning_(std::move(minimal_winning)) {
  if (n < 1 || n > kMaxBits) throw CapacityError("player count must be in [1, 64]");
  if (minimal_winning_.empty()) throw InvalidGame("grand coalition loses", BitVector::full(n));
  for (const auto& c : minimal_winning_) {
    if (c.size() != n) throw InvalidInput("coalition " + c.str() + " does not have " + std::to_string(n) + " players");
    if (c.empty_set()) throw InvalidGame("empty set wins", c);
  }
  sort_coalitions(minimal_winning_);
  for (std::size_t i = 0; i < minimal_winning_.size(); ++i) {
    for (std::size_t j = 0; j < minimal_winning_.size(); ++j) {
      if (i != j && minimal_winning_[i].subset_of(minimal_winning_[j])) {
        throw InvalidGame("minimal winning family is not an antichain", minimal_winning_[j]);
      }
    }
  }
}

bool SimpleGame::is_winning(const Coalition& s) const {
  if (s.size() != n_) throw InvalidInput("coalition size does not match game");
  return std::any_of(minimal_winning_.begin(), minimal_winning_.end(),
                     [&](const Coalition& m) { return m.subset_of(s); });
}

kernels::TruthTable truth_table(const SimpleGame& g) {
  require_enumerable(g.players(), "truth_table");
  std::vector<std::uint64_t> gens;
  gens.reserve(g.minimal_winning().size());
  for (const auto& c : g.minimal_winning()) gens.push_back(c.mask());
  return kernels::upward_closure(g.players(), gens);
}

SimpleGame from_truth_table(int n, const kernels::TruthTable& tt) {
  require_enumerable(n, "from_truth_table");
  if (tt.size() != (std::size_t{1} << n)) throw InvalidInput("truth table size does not match n");
  if (tt[0]) throw InvalidGame("empty set wins", BitVector(n));
  const std::uint64_t full = BitVector::low_mask(n);
  if (!tt[full]) throw InvalidGame("grand coalition loses", BitVector::full(n));
  if (auto v = kernels::first_monotonicity_violation(n, tt)) {
    throw InvalidGame("not monotone: superset " + BitVector(n, v->losing_superset).str() + " loses",
                      BitVector(n, v->winning));
  }
  return SimpleGame(SimpleGame::Trusted{}, n, to_coalitions(n, kernels::minimal_true(n, tt)));
}

SimpleGame from_truth_table(int n, const std::function<bool(const Coalition&)>& winning) {
  require_enumerable(n, "from_truth_table");
  return from_truth_table(n, kernels::evaluate(n, [&](std::uint64_t m) { return winning(BitVector(n, m)); }));
}

std::vector<Coalition> maximal_losing(const SimpleGame& g) {
  const auto tt = truth_table(g);
  return to_coalitions(g.players(), kernels::maximal_false(g.players(), tt));
}

std::uint64_t count_winning(const SimpleGame& g) {
  const auto tt = truth_table(g);
  return static_cast<std::uint64_t>(std::count(tt.begin(), tt.end(), std::uint8_t{1}));
}

SimpleGame dual(const SimpleGame& g) {
  const int n = g.players();
  const auto tt = truth_table(g);
  const std::uint64_t full = BitVector::low_mask(n);
  kernels::TruthTable d(tt.size());
  for (std::uint64_t m = 0; m < tt.size(); ++m) d[m] = tt[full & ~m] ? 0 : 1;
  return from_truth_table(n, d);
}

bool games_equal(const SimpleGame& a, const SimpleGame& b) {
  if (a.players() != b.players()) throw InvalidInput("games_equal: player counts differ");
  return a.minimal_winning() == b.minimal_winning();
}

Coalition permute(const Coalition& s, std::span<const int> perm) {
  const int n = s.size();
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation length does not match");
  std::uint64_t out = 0;
  for (int i = 1; i <= n; ++i) {
    if (s.test(i)) out |= std::uint64_t{1} << (perm[static_cast<std::size_t>(i - 1)] - 1);
  }
  return BitVector(n, out);
}

SimpleGame permute(const SimpleGame& g, std::span<const int> perm) {
  const int n = g.players();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int p : perm) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]++) throw InvalidInput("not a permutation of 1..n");
  }
  std::vector<Coalition> mw;
  mw.reserve(g.minimal_winning().size());
  for (const auto& c : g.minimal_winning()) mw.push_back(permute(c, perm));
  return SimpleGame(n, std::move(mw));
}

SimpleGame unanimity(int n) { return SimpleGame(n, {BitVector::full(n)}); }

}  // namespace sgdim
