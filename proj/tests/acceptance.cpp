// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values are either quoted constants or recomputed here by the
// brute-force oracles in oracles.hpp; all comparisons are exact unless a
// tolerance is named next to the check.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "properties.hpp"
#include "sgdim/codes.hpp"
#include "sgdim/construct.hpp"
#include "sgdim/dimension.hpp"

using namespace sgdim;

namespace {

// Wall-clock limits.
constexpr double kC8Seconds = 60.0;
constexpr double kSuiteSeconds = 600.0;
// Minimum log-space gap the floating-point bracketing oracle needs before it
// trusts a strict inequality.
constexpr long double kLogMargin = 1e-11L;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      else detail.str("");
      passed = false;
      detail << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Code code_of(const std::vector<std::string>& words) {
  std::vector<BitVector> v;
  for (const auto& w : words) v.push_back(BitVector::parse(w));
  return Code(v.front().size(), v);
}

std::set<std::uint64_t> mask_set(const Code& c) {
  const auto m = c.masks();
  return {m.begin(), m.end()};
}

bool tz_rule(int k, std::uint64_t x) {
  const int size = oracle::popcount(x);
  if (size != k) return size > k;
  return oracle::popcount(x >> k) % 2 == 0;
}

bool certificate_sound(const std::function<bool(std::uint64_t)>& wins, const TwoTradeCertificate& c) {
  const auto l1 = c.loser1.mask(), l2 = c.loser2.mask(), w1 = c.winner1.mask(), w2 = c.winner2.mask();
  return !wins(l1) && !wins(l2) && wins(w1) && wins(w2) && (l1 & l2) == (w1 & w2) && (l1 | l2) == (w1 | w2);
}

Outcome hamming84_listing() {
  Outcome o;
  const auto listed = code_of({"00000000", "00011110", "00100111", "00111001", "01001011", "01010101", "01101100",
                               "01110010", "10001101", "10010011", "10101010", "10110100", "11000110", "11011000",
                               "11100001", "11111111"});
  const auto h = extend_parity(hamming_code(3));
  o.require(mask_set(h) == mask_set(listed), "generated set differs from the listing");
  o.require(h.size() == 16, "size " + std::to_string(h.size()));
  const int d = oracle::min_distance(h.masks());
  o.require(d == 4, "min distance " + std::to_string(d));
  if (o.passed) o.detail << "16/16 words, min distance 4";
  return o;
}

Outcome c8_words() {
  Outcome o;
  const auto c8 = constant_weight_subset(hamming84(), 4);
  o.require(c8.size() == 14, "size " + std::to_string(c8.size()));
  o.require(check_condition(c8).holds, "check_condition fails");
  o.require(oracle::condition_holds(c8.masks()), "oracle condition fails");
  if (o.passed) o.detail << "14 words, condition holds";
  return o;
}

Outcome c8_dimension() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cg = gamma_from_code(constant_weight_subset(hamming84(), 4));
  const auto graph = incompatibility_graph(cg.game);
  const auto report = exact_dimension(cg.game);
  const double secs = seconds_since(t0);
  const auto table = truth_table(cg.game);
  const auto wins = [&](std::uint64_t m) { return table[m] != 0; };
  std::size_t sound = 0;
  for (const auto& e : graph.edges) {
    if (const auto* t = std::get_if<TwoTradeCertificate>(&e.certificate)) sound += certificate_sound(wins, *t);
  }
  o.require(maximal_losing(cg.game).size() == 14, "|L^M| != 14");
  o.require(graph.vertices.size() == 14, "graph has " + std::to_string(graph.vertices.size()) + " vertices");
  o.require(graph.edges.size() == 91 && sound == 91, std::to_string(sound) + "/91 pairs with sound 2-trades");
  o.require(report.exact == 14, "exact dimension not 14");
  o.require(secs < kC8Seconds, "took " + std::to_string(secs) + " s");
  if (o.passed) o.detail << "exact 14, 91/91 certified pairs, " << std::fixed << std::setprecision(2) << secs << " s";
  return o;
}

Outcome example2() {
  Outcome o;
  const auto code = code_of({"00001111", "11000000", "00111100"});
  const auto cg = gamma_from_code(code);
  const auto report = exact_dimension(cg.game);
  o.require(report.exact == 3, "exact dimension not 3");
  o.require(cg.game.is_winning(BitVector::from_players(8, {1, 5})), "{1,5} loses");
  std::set<std::uint64_t> expected;
  for (const auto& w : code.words()) expected.insert(complement(w).mask());
  std::set<std::uint64_t> losers;
  for (const auto& l : maximal_losing(cg.game)) losers.insert(l.mask());
  o.require(losers == expected, "L^M is not the three complements");
  if (o.passed) o.detail << "exact 3, {1,5} wins, L^M = complements";
  return o;
}

// Components recomputed from the stated weights and quotas.
WeightedGame stated_component(int k, std::uint64_t x) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(2 * k));
  if (x == 0) {
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = 1;
    return WeightedGame(1, w);
  }
  for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = (x >> i & 1) ? 0 : 2;
  for (int j = k; j < 2 * k; ++j) w[static_cast<std::size_t>(j)] = 1;
  return WeightedGame(k - (oracle::popcount(x) - 1), w);
}

bool decomposition_matches_rule(int k, Outcome& o) {
  const auto rep = tz_decomposition(k);
  std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> got;
  for (const auto& g : rep.games()) got.insert({g.quota(), g.weights()});
  std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> want;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    if (oracle::popcount(x) % 2 == 0) {
      const auto g = stated_component(k, x);
      want.insert({g.quota(), g.weights()});
    }
  }
  o.require(rep.size() == (std::size_t{1} << (k - 1)), "k=" + std::to_string(k) + ": wrong component count");
  o.require(got == want, "k=" + std::to_string(k) + ": components differ from stated weights");
  std::uint64_t agree = 0;
  const std::uint64_t total = std::uint64_t{1} << (2 * k);
  for (std::uint64_t s = 0; s < total; ++s) agree += rep.is_winning_mask(s) == tz_rule(k, s);
  o.require(agree == total, "k=" + std::to_string(k) + ": " + std::to_string(agree) + "/" + std::to_string(total));
  return agree == total;
}

Outcome taylor_zwicker_dimension() {
  Outcome o;
  decomposition_matches_rule(3, o);
  const auto report = exact_dimension(taylor_zwicker(3).game);
  o.require(report.exact == 4, "exact dimension of k=3 not 4");
  decomposition_matches_rule(5, o);
  const auto c = tz_loser_code(5);
  const auto g5 = taylor_zwicker(5).game;
  std::size_t certified = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      ++pairs;
      const auto cert = find_two_trade(g5, c.words()[i], c.words()[j]);
      certified += cert && certificate_sound([](std::uint64_t m) { return tz_rule(5, m); }, *cert);
    }
  }
  // Pairwise-incompatible losers form a clique, so |C| bounds the dimension from below.
  const std::size_t lower = certified == pairs ? c.size() : 0;
  o.require(lower >= 16, "k=5 lower bound " + std::to_string(lower) + " (" + std::to_string(certified) + "/" +
                             std::to_string(pairs) + " pairs)");
  if (o.passed) o.detail << "k=3: 4 components, 64/64, exact 4; k=5: 16 components, 1024/1024, lower >= 16";
  return o;
}

Outcome trades_and_lp_agree() {
  Outcome o;
  std::ostringstream summary;
  for (int k : {3, 5}) {
    const auto g = taylor_zwicker(k).game;
    const auto c = tz_loser_code(k);
    std::size_t pairs = 0, traded = 0, infeasible = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        ++pairs;
        const auto cert = find_two_trade(g, c.words()[i], c.words()[j]);
        traded += cert && certificate_sound([k](std::uint64_t m) { return tz_rule(k, m); }, *cert);
        const std::vector<Coalition> pair{c.words()[i], c.words()[j]};
        infeasible += !colosable(g, pair).has_value();
      }
    }
    o.require(traded == pairs && infeasible == pairs,
              "k=" + std::to_string(k) + ": trades " + std::to_string(traded) + ", LP-infeasible " +
                  std::to_string(infeasible) + " of " + std::to_string(pairs));
    summary << (k == 3 ? "" : ", ") << "k=" << k << ": " << pairs << "/" << pairs;
  }
  if (o.passed) o.detail << summary.str();
  return o;
}

Outcome relabelled_variant() {
  Outcome o;
  const auto e3 = elkind_variant(3);
  o.require(!e3.is_winning(BitVector::parse("100110")), "100110 wins");
  o.require(!e3.is_winning(BitVector::parse("010110")), "010110 wins");
  for (int k : {3, 5}) {
    o.require(verify_tz_elkind_isomorphism(k), "no isomorphism for k=" + std::to_string(k));
    const auto g = taylor_zwicker(k).game;
    o.require(dual(g) == g, "not self-dual for k=" + std::to_string(k));
  }
  if (o.passed) o.detail << "both coalitions lose; isomorphic and self-dual for k=3,5";
  return o;
}

// Weight distribution of the length-t Hamming code taken as the null space of
// the parity-check matrix whose columns are 1..t.
std::vector<std::uint64_t> hamming_distribution(int t) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(t) + 1, 0);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << t); ++v) {
    std::uint64_t syndrome = 0;
    for (int i = 0; i < t; ++i) syndrome ^= (v >> i & 1) ? static_cast<std::uint64_t>(i + 1) : 0;
    if (syndrome == 0) ++a[static_cast<std::size_t>(oracle::popcount(v))];
  }
  return a;
}

Outcome weight_enumerator_formula() {
  Outcome o;
  const auto e7 = weight_enumerator(7);
  o.require(e7.coefficients == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1}, "t=7 distribution");
  for (int t : {7, 15}) {
    const auto formula = weight_enumerator(t);
    o.require(formula.coefficients == hamming_distribution(t), "t=" + std::to_string(t) + " differs from enumeration");
    o.require(formula.coefficients[static_cast<std::size_t>((t - 1) / 2)] ==
                  formula.coefficients[static_cast<std::size_t>((t + 1) / 2)],
              "t=" + std::to_string(t) + " middle coefficients differ");
  }
  o.require(weight_enumerator(15).total() == 2048, "t=15 total");
  if (o.passed) o.detail << "t=7: 1,0,0,7,7,0,0,1; t=15: sum 2048; middle pair equal";
  return o;
}

Outcome power_of_two_subset() {
  Outcome o;
  for (int m : {3, 4}) {
    const int n = 1 << m;
    const auto count = constant_weight_subset(extend_parity(hamming_code(m)), n / 2).size();
    const std::uint64_t numerator = oracle::binomial(n, n / 2) + 2 * static_cast<std::uint64_t>(n - 1) *
                                                                      oracle::binomial(n / 2 - 1, n / 4);
    o.require(numerator % static_cast<std::uint64_t>(n) == 0, "closed form not integral");
    const std::uint64_t closed = numerator / static_cast<std::uint64_t>(n);
    o.require(count == closed, "n=" + std::to_string(n) + ": " + std::to_string(count) + " vs " + std::to_string(closed));
    o.require(power_of_two_dimension(n) == mpz_class(std::to_string(closed)), "library closed form n=" + std::to_string(n));
  }
  o.require(constant_weight_subset(hamming84(), 4).size() == 14, "n=8 value is not 14");
  if (o.passed) o.detail << "n=8: 14, n=16: 870";
  return o;
}

Outcome graham_sloane_codes() {
  Outcome o;
  for (int n = 2; n <= 16; ++n) {
    const int w = n / 2;
    const auto r = graham_sloane_construction(n, w);
    const auto classes = oracle::residue_classes(n, w);
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i) {
      total += r.bucket_sizes[static_cast<std::size_t>(i)];
      o.require(r.bucket_sizes[static_cast<std::size_t>(i)] == classes[static_cast<std::size_t>(i)].size(),
                "n=" + std::to_string(n) + " bucket " + std::to_string(i));
    }
    const auto all = oracle::binomial(n, w);
    o.require(total == all, "n=" + std::to_string(n) + ": buckets do not partition");
    const auto nn = static_cast<std::uint64_t>(n);
    o.require(r.code.size() >= (all + nn - 1) / nn, "n=" + std::to_string(n) + ": largest bucket too small");
    if (n <= 12 && r.code.size() >= 2) {
      o.require(oracle::min_distance(r.code.masks()) >= 4, "n=" + std::to_string(n) + ": min distance below 4");
    }
    o.require(check_condition(r.code).holds, "n=" + std::to_string(n) + ": condition fails");
  }
  if (o.passed) o.detail << "n=2..16 partitioned, largest >= ceil(C(n,w)/n), distance >= 4 for n <= 12";
  return o;
}

// log C(n, floor(n/2)) against the log of each bracketing expression.
bool bracket_float(int n) {
  const long double pi = 3.14159265358979323846264338327950288L;
  const int a = n % 2 == 0 ? n : n - 1;
  const long double scale = n % 2 == 0 ? 0.0L : std::log(static_cast<long double>(n) / (n + 1));
  const long double log_binom = std::lgamma(static_cast<long double>(n) + 1) -
                                std::lgamma(static_cast<long double>(n / 2) + 1) -
                                std::lgamma(static_cast<long double>(n - n / 2) + 1);
  const long double base = scale + 0.5L * std::log(2.0L / (pi * a)) + n * std::log(2.0L);
  const long double lower = base + std::log(1.0L - 1.0L / (4.0L * a));
  const long double upper = base + std::log(1.0L - 2.0L / (9.0L * a));
  return log_binom - lower > kLogMargin && upper - log_binom > kLogMargin;
}

Outcome bounds() {
  Outcome o;
  std::vector<std::pair<std::string, SimpleGame>> suite{
      {"C_8", gamma_from_code(constant_weight_subset(hamming84(), 4)).game},
      {"three-word code", gamma_from_code(code_of({"00001111", "11000000", "00111100"})).game},
      {"k=3", taylor_zwicker(3).game},
      {"k=5", taylor_zwicker(5).game},
      {"variant k=3", elkind_variant(3)},
      {"unanimity 5", unanimity(5)}};
  for (const auto& [name, g] : suite) {
    const int n = g.players();
    const auto losers = maximal_losing(g).size();
    const auto winners = count_winning(g);
    const bool chain = losers <= (std::uint64_t{1} << n) - winners && losers <= oracle::binomial(n, n / 2);
    bool library_ok = true;
    try {
      library_ok = upper_bound(g) == static_cast<int>(losers);
    } catch (const std::exception&) {
      library_ok = false;
    }
    o.require(chain && library_ok, "upper bound chain fails for " + name);
  }
  int exact_ok = 0;
  int float_ok = 0;
  for (int n = 2; n <= 1000; ++n) {
    exact_ok += sperner_bounds(n).holds;
    float_ok += bracket_float(n);
  }
  o.require(exact_ok == 999, "exact bracketing holds for " + std::to_string(exact_ok) + "/999");
  o.require(float_ok == 999, "floating-point oracle confirms " + std::to_string(float_ok) + "/999");
  const std::vector<std::uint64_t> column{19, 34, 69, 125, 251, 461, 923, 1715, 3431, 6434, 12869, 24309, 48619, 92377, 184755};
  int rows = 0;
  for (int n = 6; n <= 20; ++n) {
    rows += sperner_bounds(n).value - 1 == mpz_class(std::to_string(column[static_cast<std::size_t>(n - 6)]));
  }
  o.require(rows == 15, std::to_string(rows) + "/15 table rows");
  if (o.passed) o.detail << "chain on 6 games, bracketing n=2..1000, 15/15 rows";
  return o;
}

Outcome prefix_subsets() {
  Outcome o;
  const auto c8 = constant_weight_subset(hamming84(), 4);
  std::ostringstream found;
  for (std::size_t size = 1; size <= 5; ++size) {
    const std::vector<BitVector> prefix(c8.words().begin(), c8.words().begin() + static_cast<std::ptrdiff_t>(size));
    const auto report = exact_dimension(gamma_from_code(Code(8, prefix)).game);
    o.require(report.exact == static_cast<int>(size), "size " + std::to_string(size) + " gives " +
                                                          (report.exact ? std::to_string(*report.exact) : "none"));
    found << (size == 1 ? "" : ",") << (report.exact ? std::to_string(*report.exact) : "?");
  }
  if (o.passed) o.detail << "dimensions " << found.str();
  return o;
}

Outcome properties() {
  Outcome o;
  const auto tally = props::run(1000, 20240601);
  o.require(tally.ok(), tally.first_failure);
  o.require(tally.games == 1000, "ran " + std::to_string(tally.games) + " games");
  if (o.passed) {
    o.detail << tally.games << " games, " << tally.witnesses_checked << " witnesses, " << tally.certificates_checked
             << " certificates";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"[8,4] code equals the listing", hamming84_listing},
      {"C_8 has 14 words and meets the condition", c8_words},
      {"dimension of the C_8 game is 14", c8_dimension},
      {"three-word example has dimension 3", example2},
      {"Taylor-Zwicker decomposition and dimension", taylor_zwicker_dimension},
      {"2-trades and LP agree on all loser pairs", trades_and_lp_agree},
      {"relabelled variant: losers, isomorphism, self-duality", relabelled_variant},
      {"weight enumerator formula", weight_enumerator_formula},
      {"middle-weight extended Hamming counts", power_of_two_subset},
      {"Graham-Sloane construction", graham_sloane_codes},
      {"dimension and binomial bounds", bounds},
      {"subcodes of C_8 have dimension equal to size", prefix_subsets},
      {"random game invariants", properties},
  };
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail.str(std::string("exception: ") + e.what());
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first
              << "  (" << o.detail.str() << ")" << std::endl;
  }
  const double total = seconds_since(t0);
  const bool fast = total < kSuiteSeconds;
  std::cout << (failures == 0 && fast ? "ALL PASS" : "FAILURES") << "  " << criteria.size() - failures << "/"
            << criteria.size() << " criteria, " << std::fixed << std::setprecision(1) << total << " s" << std::endl;
  return failures == 0 && fast ? 0 : 1;
}
