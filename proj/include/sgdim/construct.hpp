#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sgdim/codes.hpp"
#include "sgdim/game.hpp"
#include "sgdim/weighted.hpp"

namespace sgdim {

/// The code breaks |hw(x) - hw(y)| < d(x, y) - 2 for the stored pair.
class ConditionViolation : public InvalidInput {
 public:
  ConditionViolation(BitVector x, BitVector y)
      : InvalidInput("code condition fails for " + x.str() + " and " + y.str()), pair_(x, y) {}
  const std::pair<BitVector, BitVector>& pair() const noexcept { return pair_; }

 private:
  std::pair<BitVector, BitVector> pair_;
};

/// Hitting-set game of a code: S wins iff S meets the support of every word.
struct CodeGame {
  Code code;
  SimpleGame game;
  /// One game per word x: weight 1 on the support of x, quota 1.
  IntersectionRep components;
};

/// The single-word game: S wins iff S shares a player with the support of x.
WeightedGame hitting_component(const BitVector& x);

/// Requires a non-empty code of positive-weight words satisfying the
/// condition (ConditionViolation otherwise) and n <= 24.
CodeGame gamma_from_code(const Code& c);

/// Two halves S = {1..k}, T = {k+1..2k}: X wins iff |X| > k, or |X| = k with
/// |X n T| even.
bool taylor_zwicker_wins(int k, const Coalition& x);

struct TZGame {
  int k;
  SimpleGame game;
  /// 2^(k-1) weighted games indexed by the even-parity words of length k.
  IntersectionRep decomposition;
};

/// k odd, 1 <= k <= 11. For k = 1 the decomposition is the single game [1; 1, 0].
TZGame taylor_zwicker(int k);

/// Even-parity words of length k in text order (zero word first).
std::vector<BitVector> even_parity_words(int k);
/// Weighted component for even-parity word x (see tz_decomposition).
WeightedGame tz_component(int k, const BitVector& x);
/// For x != 0: weight 0 on S-players with x_i = 1, 2 on the other S-players,
/// 1 on T-players, quota k - (hw(x) - 1). For x = 0: weight 1 on S, 0 on T,
/// quota 1. Requires odd k >= 3.
IntersectionRep tz_decomposition(int k);
/// {x x̄ : x of even parity}, maximal losers of the k-th game.
Code tz_loser_code(int k);

/// Same size classes as taylor_zwicker; at size k, X wins iff |X n S| is even
/// and |X n T| is odd. k odd, 1 <= k <= 11.
SimpleGame elkind_variant(int k);
/// The same size-k rule phrased as d(X, S) = 2 (mod 4).
bool elkind_distance_rule(int k, const Coalition& x);

/// One-line permutation exchanging player i and i + k.
std::vector<int> half_swap_permutation(int k);
/// True iff relabelling elkind_variant(k) by perm gives taylor_zwicker(k).
bool verify_tz_elkind_isomorphism(int k);
bool verify_tz_elkind_isomorphism(int k, std::span<const int> perm);

}  // namespace sgdim
