#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sgdim/bitvector.hpp"
#include "sgdim/kernels.hpp"

namespace sgdim {

/// A game definition that breaks one of the simple-game conditions.
/// witness() is a coalition exhibiting the problem.
class InvalidGame : public InvalidInput {
 public:
  InvalidGame(const std::string& what, Coalition witness)
      : InvalidInput(what + " (witness " + witness.str() + ")"), witness_(witness) {}
  const Coalition& witness() const noexcept { return witness_; }

 private:
  Coalition witness_;
};

/// Simple game on players {1..n}, stored by its minimal winning coalitions.
///
/// The antichain is kept sorted in text-lexicographic order so that equal
/// games compare equal member by member.
class SimpleGame {
 public:
  /// Rejects an empty list, the empty coalition, length mismatches and
  /// non-antichains (InvalidGame with the offending member).
  SimpleGame(int n, std::vector<Coalition> minimal_winning);

  int players() const noexcept { return n_; }
  const std::vector<Coalition>& minimal_winning() const noexcept { return minimal_winning_; }

  bool is_winning(const Coalition& s) const;

  friend bool operator==(const SimpleGame& a, const SimpleGame& b) = default;

 private:
  struct Trusted {};
  SimpleGame(Trusted, int n, std::vector<Coalition> minimal_winning)
      : n_(n), minimal_winning_(std::move(minimal_winning)) {}
  friend SimpleGame from_truth_table(int n, const kernels::TruthTable& tt);

  int n_ = 0;
  std::vector<Coalition> minimal_winning_;
};

/// Winning indicator for every coalition mask. Requires n <= 24.
kernels::TruthTable truth_table(const SimpleGame& g);

/// Validates conditions (1)-(3) on a full table and extracts W^m.
SimpleGame from_truth_table(int n, const kernels::TruthTable& tt);
/// Same, from a predicate; the predicate must be pure (it runs in parallel).
SimpleGame from_truth_table(int n, const std::function<bool(const Coalition&)>& winning);

/// Maximal losing coalitions, text-lexicographic order. Requires n <= 24.
std::vector<Coalition> maximal_losing(const SimpleGame& g);
/// Number of winning coalitions |W|. Requires n <= 24.
std::uint64_t count_winning(const SimpleGame& g);

/// S wins in the dual iff N \ S loses in g.
SimpleGame dual(const SimpleGame& g);

/// Antichain equality; throws InvalidInput on differing player counts.
bool games_equal(const SimpleGame& a, const SimpleGame& b);

/// Relabels players: player i becomes player perm[i-1]. perm is a one-line
/// permutation of 1..n.
SimpleGame permute(const SimpleGame& g, std::span<const int> perm);
Coalition permute(const Coalition& s, std::span<const int> perm);

/// The game whose only minimal winning coalition is N.
SimpleGame unanimity(int n);

/// Sorts into text-lexicographic order.
void sort_coalitions(std::vector<Coalition>& v);
std::vector<Coalition> to_coalitions(int n, std::span<const std::uint64_t> masks);

}  // namespace sgdim
