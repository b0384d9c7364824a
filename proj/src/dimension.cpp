#include "sgdim/dimension.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace sgdim {

namespace {

void require_losing(const SimpleGame& g, const Coalition& c) {
  if (g.is_winning(c)) throw InvalidInput("coalition " + c.str() + " wins, expected a losing coalition");
}

std::size_t pair_count(std::size_t m) { return m * (m - 1) / 2; }

}  // namespace

std::optional<TwoTradeCertificate> find_two_trade(const SimpleGame& g, const Coalition& l1, const Coalition& l2) {
  require_losing(g, l1);
  require_losing(g, l2);
  const auto only1 = (l1 & complement(l2)).players();
  const auto only2 = (l2 & complement(l1)).players();
  for (int p : only1) {
    for (int r : only2) {
      const Coalition a = l1.with(p, false).with(r, true);
      const Coalition b = l2.with(r, false).with(p, true);
      if (g.is_winning(a) && g.is_winning(b)) return TwoTradeCertificate{l1, l2, a, b};
    }
  }
  return std::nullopt;
}

bool certificate_valid(const SimpleGame& g, const TwoTradeCertificate& c) {
  const int n = g.players();
  for (int i = 1; i <= n; ++i) {
    if (c.loser1.test(i) + c.loser2.test(i) != c.winner1.test(i) + c.winner2.test(i)) return false;
  }
  return !g.is_winning(c.loser1) && !g.is_winning(c.loser2) && g.is_winning(c.winner1) && g.is_winning(c.winner2);
}

std::optional<WeightedGame> colosable(const SimpleGame& g, std::span<const Coalition> losers) {
  for (const auto& c : losers) require_losing(g, c);
  FeasibilitySystem sys(g.players(), g.minimal_winning(), std::vector<Coalition>(losers.begin(), losers.end()));
  return feasible_separation(sys);
}

bool IncompatibilityGraph::adjacent(std::size_t u, std::size_t v) const { return adj_[u][v] != 0; }

std::size_t IncompatibilityGraph::trade_edges() const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) {
    return std::holds_alternative<TwoTradeCertificate>(e.certificate);
  }));
}

IncompatibilityGraph incompatibility_graph(const SimpleGame& g, const Budget& budget) {
  IncompatibilityGraph graph;
  graph.vertices = maximal_losing(g);
  const std::size_t m = graph.vertices.size();
  graph.adj_.assign(m, std::vector<char>(m, 0));
  const std::size_t pairs = m < 2 ? 0 : pair_count(m);

  std::vector<std::pair<std::size_t, std::size_t>> index;
  index.reserve(pairs);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) index.emplace_back(u, v);
  }

  // Pass 1: 2-trades, which are cheap and explain the edge.
  std::vector<std::optional<TwoTradeCertificate>> trades(pairs);
  const auto total = static_cast<std::int64_t>(pairs);
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto [u, v] = index[static_cast<std::size_t>(i)];
    trades[static_cast<std::size_t>(i)] = find_two_trade(g, graph.vertices[u], graph.vertices[v]);
  }

  // Pass 2: exact LP for the remaining pairs, the first ones in pair order
  // up to the oracle budget.
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (!trades[i]) pending.push_back(i);
  }
  if (pending.size() > budget.max_oracle_calls) {
    pending.resize(budget.max_oracle_calls);
    graph.complete = false;
  }
  std::vector<std::optional<WeightedGame>> witness(pending.size());
  const auto lp_total = static_cast<std::int64_t>(pending.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < lp_total; ++i) {
    const auto [u, v] = index[pending[static_cast<std::size_t>(i)]];
    const Coalition both[2] = {graph.vertices[u], graph.vertices[v]};
    witness[static_cast<std::size_t>(i)] = colosable(g, both);
  }
  graph.oracle_calls = pending.size();

  std::size_t next_pending = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto [u, v] = index[i];
    if (trades[i]) {
      graph.edges.push_back({u, v, *trades[i]});
    } else if (next_pending < pending.size() && pending[next_pending] == i) {
      auto& w = witness[next_pending++];
      if (w) {
        graph.compatible.push_back({{u, v}, *w});
        continue;
      }
      graph.edges.push_back({u, v, InfeasiblePair{graph.vertices[u], graph.vertices[v]}});
    } else {
      continue;  // undecided under the budget
    }
    graph.adj_[u][v] = graph.adj_[v][u] = 1;
  }
  return graph;
}

std::vector<std::size_t> max_clique(const IncompatibilityGraph& graph, std::uint64_t node_budget, bool* exhausted) {
  const std::size_t m = graph.vertices.size();
  if (exhausted) *exhausted = false;
  if (m == 0) return {};

  // Branch and bound with a greedy-colouring bound (Tomita style); vertices
  // are tried in a fixed order so the result is deterministic.
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  std::uint64_t nodes = 0;
  bool stopped = false;

  std::function<void(std::vector<std::size_t>)> expand = [&](std::vector<std::size_t> cand) {
    if (stopped) return;
    if (++nodes > node_budget) {
      stopped = true;
      return;
    }
    // Colour classes give an upper bound on the clique inside cand.
    std::vector<std::size_t> order;
    std::vector<int> colour;
    {
      std::vector<std::vector<std::size_t>> classes;
      for (auto v : cand) {
        std::size_t k = 0;
        for (; k < classes.size(); ++k) {
          bool clash = false;
          for (auto u : classes[k]) {
            if (graph.adjacent(u, v)) {
              clash = true;
              break;
            }
          }
          if (!clash) break;
        }
        if (k == classes.size()) classes.emplace_back();
        classes[k].push_back(v);
      }
      for (std::size_t k = 0; k < classes.size(); ++k) {
        for (auto v : classes[k]) {
          order.push_back(v);
          colour.push_back(static_cast<int>(k) + 1);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colour[i]) <= best.size()) return;
      const auto v = order[i];
      current.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < i; ++j) {
        if (graph.adjacent(v, order[j])) next.push_back(order[j]);
      }
      if (next.empty()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(std::move(next));
      }
      current.pop_back();
      if (stopped) return;
    }
  };

  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  expand(all);
  if (best.empty()) best = {0};
  std::sort(best.begin(), best.end());
  if (exhausted) *exhausted = stopped;
  return best;
}

namespace {

std::vector<WeightedGame> blocking_games(const std::vector<Coalition>& losers) {
  std::vector<WeightedGame> games;
  games.reserve(losers.size());
  for (const auto& t : losers) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(t.size()), 1);
    for (int p : t.players()) w[static_cast<std::size_t>(p - 1)] = 0;
    games.emplace_back(1, std::move(w));
  }
  return games;
}

// Colosability oracle over subsets of the maximal losers (bit i = loser i),
// memoised; safe to call from several threads.
class ClassOracle {
 public:
  ClassOracle(const SimpleGame& g, const std::vector<Coalition>& losers, std::uint64_t budget)
      : g_(g), losers_(losers), budget_(budget) {}

  void seed(std::uint64_t cls, std::optional<WeightedGame> w) {
    std::lock_guard lock(mu_);
    memo_.emplace(cls, std::move(w));
  }

  /// nullopt result means "not colosable"; throws BudgetExhausted past the budget.
  std::optional<WeightedGame> query(std::uint64_t cls) {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(cls); it != memo_.end()) return it->second;
      if (calls_ >= budget_) throw BudgetExhausted{};
      ++calls_;
    }
    std::vector<Coalition> members;
    for (std::uint64_t b = cls; b != 0; b &= b - 1) members.push_back(losers_[static_cast<std::size_t>(std::countr_zero(b))]);
    auto w = colosable(g_, members);
    std::lock_guard lock(mu_);
    memo_.emplace(cls, w);
    return w;
  }

  std::uint64_t calls() const {
    std::lock_guard lock(mu_);
    return calls_;
  }

  struct BudgetExhausted {};

 private:
  const SimpleGame& g_;
  const std::vector<Coalition>& losers_;
  std::uint64_t budget_;
  mutable std::mutex mu_;
  std::uint64_t calls_ = 0;
  std::unordered_map<std::uint64_t, std::optional<WeightedGame>> memo_;
};

// Maximal colosable classes by depth-first extension. At each node the whole
// candidate set is tried first; when it co-loses it is the only maximal class
// in this branch.
std::vector<std::uint64_t> maximal_classes(ClassOracle& oracle, const std::vector<std::uint64_t>& compatible,
                                           std::size_t m) {
  std::vector<std::uint64_t> found;
  std::function<void(std::uint64_t, std::uint64_t)> dfs = [&](std::uint64_t cls, std::uint64_t cand) {
    if (cand == 0) {
      found.push_back(cls);
      return;
    }
    if (oracle.query(cls | cand)) {
      found.push_back(cls | cand);
      return;
    }
    bool extended = false;
    for (std::uint64_t b = cand; b != 0; b &= b - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(b));
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t later = cand & ~((bit << 1) - 1);
      if (oracle.query(cls | bit)) {
        extended = true;
        dfs(cls | bit, later & compatible[v]);
      }
    }
    if (!extended) found.push_back(cls);
  };
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  dfs(0, all);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::uint64_t> maximal;
  for (auto c : found) {
    const bool dominated = std::any_of(found.begin(), found.end(), [c](std::uint64_t d) { return d != c && (c & ~d) == 0; });
    if (!dominated) maximal.push_back(c);
  }
  return maximal;
}

struct CoverResult {
  std::vector<std::uint64_t> chosen;
  bool optimal = true;
};

// Minimum set cover of `universe` by `sets`; branches on the lowest uncovered
// element (the lexicographically smallest maximal loser).
CoverResult min_cover(const std::vector<std::uint64_t>& sets, std::uint64_t universe, std::size_t initial_best,
                      std::size_t lower_bound, std::uint64_t node_budget) {
  CoverResult result;
  std::size_t best_size = initial_best + 1;
  std::vector<std::uint64_t> current;
  std::uint64_t nodes = 0;
  bool stopped = false;
  int widest = 1;
  for (auto s : sets) widest = std::max(widest, std::popcount(s));

  std::function<void(std::uint64_t)> search = [&](std::uint64_t uncovered) {
    if (stopped) return;
    if (uncovered == 0) {
      if (current.size() < best_size) {
        best_size = current.size();
        result.chosen = current;
      }
      return;
    }
    if (++nodes > node_budget) {
      stopped = true;
      return;
    }
    const std::size_t need = (static_cast<std::size_t>(std::popcount(uncovered)) + static_cast<std::size_t>(widest) - 1) /
                             static_cast<std::size_t>(widest);
    if (current.size() + need >= best_size) return;
    const std::uint64_t e = uncovered & (~uncovered + 1);
    std::vector<std::uint64_t> options;
    for (auto s : sets) {
      if (s & e) options.push_back(s);
    }
    std::stable_sort(options.begin(), options.end(), [uncovered](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a & uncovered) > std::popcount(b & uncovered);
    });
    for (auto s : options) {
      current.push_back(s);
      search(uncovered & ~s);
      current.pop_back();
      if (stopped || best_size <= lower_bound) return;
    }
  };
  search(universe);
  result.optimal = !stopped;
  return result;
}

}  // namespace

DimensionReport exact_dimension(const SimpleGame& g, const Budget& budget) {
  require_enumerable(g.players(), "exact_dimension");
  DimensionReport report;
  const auto graph = incompatibility_graph(g, budget);
  const auto& losers = graph.vertices;
  const std::size_t m = losers.size();
  report.upper = upper_bound(g);
  report.witnesses = IntersectionRep(blocking_games(losers));
  report.oracle_calls = graph.oracle_calls;

  bool clique_cut = false;
  const auto clique = max_clique(graph, budget.max_search_nodes, &clique_cut);
  report.clique_bound = static_cast<int>(clique.size());
  report.lower = std::max(1, report.clique_bound);
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      for (const auto& e : graph.edges) {
        if (e.u == clique[i] && e.v == clique[j]) report.certificates.push_back(e.certificate);
      }
    }
  }

  if (m > budget.max_losers || m > 64) {
    report.note = "maximal losing coalitions (" + std::to_string(m) + ") exceed the exact-search budget (" +
                  std::to_string(budget.max_losers) + ")";
    return report;
  }
  if (!graph.complete) {
    report.note = "oracle budget exhausted while building the incompatibility graph";
    return report;
  }
  if (report.lower == report.upper) {
    report.exact = report.upper;
    return report;
  }

  std::vector<std::uint64_t> compatible(m, 0);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      if (u != v && !graph.adjacent(u, v)) compatible[u] |= std::uint64_t{1} << v;
    }
  }
  const std::uint64_t remaining =
      budget.max_oracle_calls > graph.oracle_calls ? budget.max_oracle_calls - graph.oracle_calls : 0;
  ClassOracle oracle(g, losers, remaining);
  const auto blockers = blocking_games(losers);
  for (std::size_t i = 0; i < m; ++i) oracle.seed(std::uint64_t{1} << i, blockers[i]);
  for (const auto& [uv, w] : graph.compatible) oracle.seed((std::uint64_t{1} << uv.first) | (std::uint64_t{1} << uv.second), w);
  for (const auto& e : graph.edges) oracle.seed((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v), std::nullopt);

  std::vector<std::uint64_t> classes;
  try {
    classes = maximal_classes(oracle, compatible, m);
  } catch (const ClassOracle::BudgetExhausted&) {
    report.oracle_calls += oracle.calls();
    report.note = "oracle budget exhausted while enumerating colosable classes";
    return report;
  }
  report.oracle_calls += oracle.calls();

  const std::uint64_t universe = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  auto cover = min_cover(classes, universe, m, static_cast<std::size_t>(report.lower), budget.max_search_nodes);
  if (cover.chosen.empty()) {
    report.note = "set-cover search stopped before finding a cover";
    return report;
  }
  std::vector<WeightedGame> parts;
  for (auto cls : cover.chosen) parts.push_back(*oracle.query(cls));
  IntersectionRep rep(std::move(parts));
  if (!games_equal(induced_game(rep), g)) throw std::logic_error("cover witnesses do not reproduce the game");
  report.upper = static_cast<int>(cover.chosen.size());
  report.witnesses = std::move(rep);
  if (!cover.optimal) {
    report.note = "set-cover search stopped at the node budget";
    return report;
  }
  report.exact = report.upper;
  report.lower = report.upper;
  return report;
}

}  // namespace sgdim
