#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgdim/bitvector.hpp"
#include "sgdim/game.hpp"

namespace sgdim {

/// [q; w_1, ..., w_n]: S wins iff the weights of S sum to at least q.
class WeightedGame {
 public:
  /// Requires q >= 1, all w_i >= 0 and sum w_i >= q.
  WeightedGame(std::int64_t quota, std::vector<std::int64_t> weights);

  int players() const noexcept { return static_cast<int>(weights_.size()); }
  std::int64_t quota() const noexcept { return quota_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

  std::int64_t weight_of(const Coalition& s) const;
  std::int64_t weight_of_mask(std::uint64_t mask) const noexcept;
  bool is_winning(const Coalition& s) const { return weight_of(s) >= quota_; }

  friend bool operator==(const WeightedGame&, const WeightedGame&) = default;

 private:
  std::int64_t quota_;
  std::vector<std::int64_t> weights_;
};

/// Intersection of weighted games over a common player set.
class IntersectionRep {
 public:
  explicit IntersectionRep(std::vector<WeightedGame> games);

  int players() const noexcept { return games_.front().players(); }
  std::size_t size() const noexcept { return games_.size(); }
  const std::vector<WeightedGame>& games() const noexcept { return games_; }

  /// Winning in every member game.
  bool is_winning(const Coalition& s) const;
  bool is_winning_mask(std::uint64_t mask) const noexcept;

 private:
  std::vector<WeightedGame> games_;
};

/// Coalitions that must reach the quota (lower) or stay at least one below it (upper).
class FeasibilitySystem {
 public:
  /// Rejects a coalition listed on both sides and length mismatches.
  FeasibilitySystem(int n, std::vector<Coalition> lower, std::vector<Coalition> upper);

  int players() const noexcept { return n_; }
  const std::vector<Coalition>& lower() const noexcept { return lower_; }
  const std::vector<Coalition>& upper() const noexcept { return upper_; }

  /// Exact integer re-check of a candidate witness.
  bool satisfied_by(const WeightedGame& w) const;

 private:
  int n_;
  std::vector<Coalition> lower_;
  std::vector<Coalition> upper_;
};

struct SeparationStats {
  std::uint64_t lp_solves = 0;
  std::uint64_t pivots = 0;
};

/// Searches non-negative rational weights and quota q >= 1 with every lower
/// coalition at or above q and every upper coalition at or below q - 1.
/// The grand coalition is always added as a lower constraint, since a
/// weighted game must let N win. Returns the witness scaled to coprime
/// integers, or nullopt if the system is infeasible.
std::optional<WeightedGame> feasible_separation(const FeasibilitySystem& sys, SeparationStats* stats = nullptr);

/// Weighted representation of g if one exists. Requires n <= 24.
std::optional<WeightedGame> is_weighted(const SimpleGame& g);

/// The simple game whose winning coalitions are the intersection's.
/// Throws InvalidGame when the intersection is degenerate.
SimpleGame induced_game(const IntersectionRep& r);

}  // namespace sgdim
