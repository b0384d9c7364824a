#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sgdim/codes.hpp"
#include "sgdim/game.hpp"
#include "sgdim/weighted.hpp"

namespace sgdim {

/// Two losers whose swap of one player each yields two winners:
/// x_{loser1} + x_{loser2} = x_{winner1} + x_{winner2}. No weighted game in
/// which all winners win can make both losers lose.
struct TwoTradeCertificate {
  Coalition loser1;
  Coalition loser2;
  Coalition winner1;
  Coalition winner2;
};

/// Two losers shown not to co-lose by an infeasible exact LP.
struct InfeasiblePair {
  Coalition loser1;
  Coalition loser2;
};

using PairCertificate = std::variant<TwoTradeCertificate, InfeasiblePair>;

struct Budget {
  std::size_t max_losers = 20;
  std::uint64_t max_oracle_calls = 100000;
  /// Node limit for each of the clique and set-cover searches.
  std::uint64_t max_search_nodes = 2000000;
};

struct DimensionReport {
  int lower = 1;
  int upper = 1;
  std::optional<int> exact;
  /// Pairwise certificates for the clique behind the lower bound.
  std::vector<PairCertificate> certificates;
  /// Weighted games whose intersection is the game; `upper` of them.
  std::optional<IntersectionRep> witnesses;
  int clique_bound = 1;
  std::uint64_t oracle_calls = 0;
  /// Why the search stopped early, empty when it ran to completion.
  std::string note;
};

/// |L^M|, after checking |L^M| <= min(2^n - |W|, C(n, floor(n/2))).
int upper_bound(const SimpleGame& g);

/// C(n, floor(n/2)) with the classical bracketing bounds evaluated over
/// rationals: `lower` is a rational value at or above the (irrational) lower
/// bound expression and `upper` one at or below the upper bound expression,
/// so lower <= value <= upper proves the double inequality.
struct SpernerBounds {
  int n = 0;
  mpz_class value;
  mpq_class lower;
  mpq_class upper;
  bool holds = false;
};

/// Requires n >= 2.
SpernerBounds sperner_bounds(int n);

/// ceil(C(n, floor(n/2)) / n).
mpz_class theorem_lower_bound(int n);
/// C(n, n/2)/n + 2(n-1)/n * C(n/2 - 1, n/4) when n = 2^m >= 8, else nullopt.
std::optional<mpz_class> power_of_two_dimension(int n);

/// First swap (p in L1\L2, r in L2\L1, lexicographic in (p, r)) turning both
/// losers into winners. Throws InvalidInput if either input wins.
std::optional<TwoTradeCertificate> find_two_trade(const SimpleGame& g, const Coalition& l1, const Coalition& l2);
/// Checks every certificate invariant against g.
bool certificate_valid(const SimpleGame& g, const TwoTradeCertificate& c);

/// A weighted game in which every winner of g wins and every listed coalition
/// loses, if one exists. Throws InvalidInput if a listed coalition wins.
std::optional<WeightedGame> colosable(const SimpleGame& g, std::span<const Coalition> losers);

/// Vertices are the maximal losing coalitions; an edge joins two that cannot
/// lose in a common weighted component.
struct IncompatibilityGraph {
  struct Edge {
    std::size_t u;
    std::size_t v;
    PairCertificate certificate;
  };

  std::vector<Coalition> vertices;
  std::vector<Edge> edges;
  /// Witness games for pairs shown compatible, keyed by (u, v).
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, WeightedGame>> compatible;
  std::uint64_t oracle_calls = 0;
  /// False when the oracle budget left some pairs undecided (treated as non-edges).
  bool complete = true;

  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t trade_edges() const;

 private:
  friend IncompatibilityGraph incompatibility_graph(const SimpleGame&, const Budget&);
  std::vector<std::vector<char>> adj_;
};

IncompatibilityGraph incompatibility_graph(const SimpleGame& g, const Budget& budget = {});

/// A largest clique found within the node budget (exact when the search completes).
std::vector<std::size_t> max_clique(const IncompatibilityGraph& graph, std::uint64_t node_budget,
                                    bool* exhausted = nullptr);

/// Minimum number of weighted games intersecting to g, computed as a minimum
/// cover of L^M by colosable classes, or bounds with certificates when the
/// budget runs out. Requires n <= 24.
DimensionReport exact_dimension(const SimpleGame& g, const Budget& budget = {});

/// |c| after validating the code condition; the proven dimension of gamma_from_code(c).
int dimension_from_code_size(const Code& c);

}  // namespace sgdim
