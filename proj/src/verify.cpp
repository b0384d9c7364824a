#include "sgdim/verify.hpp"

#include <algorithm>

#include "sgdim/codes.hpp"
#include "sgdim/construct.hpp"
#include "sgdim/dimension.hpp"

namespace sgdim::verify {

namespace {

class Collector {
 public:
  void check(std::string name, bool ok, std::string detail = {}) {
    results_.push_back({std::move(name), ok, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

bool trades_and_lp_agree(const SimpleGame& g, const Code& losers, std::string& detail) {
  const auto& w = losers.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      auto cert = find_two_trade(g, w[i], w[j]);
      const Coalition pair[2] = {w[i], w[j]};
      if (!cert || !certificate_valid(g, *cert) || colosable(g, pair)) {
        detail = "pair " + w[i].str() + " / " + w[j].str();
        return false;
      }
    }
  }
  return true;
}

void suite_tz(Collector& out) {
  for (int k : {3, 5}) {
    const auto tz = taylor_zwicker(k);
    const std::string tag = "k=" + std::to_string(k);
    out.check("decomposition size " + tag, tz.decomposition.size() == (std::size_t{1} << (k - 1)),
              std::to_string(tz.decomposition.size()) + " games");
    out.check("decomposition induces the game " + tag, games_equal(induced_game(tz.decomposition), tz.game));
    out.check("self-dual " + tag, games_equal(dual(tz.game), tz.game));
    const auto lm = maximal_losing(tz.game);
    const auto c = tz_loser_code(k);
    bool subset = true;
    for (const auto& x : c.words()) subset = subset && std::binary_search(lm.begin(), lm.end(), x);
    out.check("C subset of L^M " + tag, subset,
              "|C|=" + std::to_string(c.size()) + " |L^M|=" + std::to_string(lm.size()));
    out.check("min distance of C is 4 " + tag, min_distance(c) == 4);
    std::string detail;
    out.check("2-trade and LP agree on all pairs of C " + tag, trades_and_lp_agree(tz.game, c, detail), detail);
  }
  const auto report = exact_dimension(taylor_zwicker(3).game);
  out.check("exact dimension of k=3 is 4", report.exact == 4,
            report.exact ? std::to_string(*report.exact) : "none: " + report.note);
}

void suite_elkind(Collector& out) {
  const auto g = elkind_variant(3);
  out.check("100110 loses", !g.is_winning(BitVector::parse("100110")));
  out.check("010110 loses", !g.is_winning(BitVector::parse("010110")));
  for (int k : {3, 5}) {
    out.check("half swap maps to Taylor-Zwicker k=" + std::to_string(k), verify_tz_elkind_isomorphism(k));
    const auto ek = elkind_variant(k);
    bool same = true;
    for_each_subset(2 * k, std::nullopt,
                    [&](const Coalition& x) { same = same && ek.is_winning(x) == elkind_distance_rule(k, x); });
    out.check("parity and distance phrasings agree k=" + std::to_string(k), same);
  }
  std::vector<int> identity{1, 2, 3, 4, 5, 6};
  out.check("identity relabelling does not match k=3", !verify_tz_elkind_isomorphism(3, identity));
}

void suite_codes(Collector& out) {
  std::vector<BitVector> listed;
  for (const auto& s : hamming84_listing()) listed.push_back(BitVector::parse(s));
  const auto h = hamming84();
  out.check("[8,4] code equals the listing", h == Code(8, listed));
  out.check("[8,4] min distance 4", min_distance(h) == 4);
  const auto c8 = constant_weight_subset(h, 4);
  out.check("C_8 has 14 words", c8.size() == 14, std::to_string(c8.size()));
  out.check("C_8 satisfies the condition", check_condition(c8).holds);
  for (int m : {3, 4, 5}) {
    const int t = (1 << m) - 1;
    const auto formula = weight_enumerator(t);
    const auto counted = enumerate_hamming_weights(m);
    const auto i = static_cast<std::size_t>((t - 1) / 2);
    out.check("enumerator matches enumeration t=" + std::to_string(t), formula.coefficients == counted.coefficients);
    out.check("a_i = a_(i+1) t=" + std::to_string(t), formula.coefficients[i] == formula.coefficients[i + 1]);
  }
  for (int m : {3, 4}) {
    const int n = 1 << m;
    const auto cw = constant_weight_subset(extend_parity(hamming_code(m)), n / 2);
    const auto expect = power_of_two_dimension(n);
    out.check("weight n/2 subset size n=" + std::to_string(n), expect && mpz_class(static_cast<unsigned long>(cw.size())) == *expect,
              std::to_string(cw.size()));
  }
  for (int n = 2; n <= 16; ++n) {
    const int w = n / 2;
    const auto gs = graham_sloane_construction(n, w);
    const auto total = binomial(n, w);
    std::uint64_t sum = 0;
    for (auto s : gs.bucket_sizes) sum += s;
    const auto need = (total + static_cast<std::uint64_t>(n) - 1) / static_cast<std::uint64_t>(n);
    bool ok = sum == total && gs.code.size() >= need && check_condition(gs.code).holds;
    if (n <= 12 && gs.code.size() >= 2) ok = ok && min_distance(gs.code) >= 4;
    out.check("Graham-Sloane n=" + std::to_string(n), ok, std::to_string(gs.code.size()) + " words");
  }
}

void suite_bounds(Collector& out) {
  int failed_at = 0;
  for (int n = 2; n <= 1000 && failed_at == 0; ++n) {
    if (!sperner_bounds(n).holds) failed_at = n;
  }
  out.check("central binomial bracketing for n <= 1000", failed_at == 0,
            failed_at ? "fails at n=" + std::to_string(failed_at) : "");
  static const long kLastColumn[] = {19, 34, 69, 125, 251, 461, 923, 1715, 3431, 6434, 12869, 24309, 48619, 92377, 184755};
  bool table_ok = true;
  for (int n = 6; n <= 20; ++n) {
    table_ok = table_ok && sperner_bounds(n).value - 1 == kLastColumn[n - 6];
  }
  out.check("C(n, n/2) - 1 column for n = 6..20", table_ok);
  out.check("power-of-two dimension n=8 is 14", power_of_two_dimension(8) == mpz_class(14));
  out.check("power-of-two dimension n=16 is 870", power_of_two_dimension(16) == mpz_class(870));
  out.check("generic lower bound n=8 is 9", theorem_lower_bound(8) == 9);
}

}  // namespace

const std::vector<std::string>& hamming84_listing() {
  static const std::vector<std::string> listing = {
      "0000 0000", "0001 1110", "0010 0111", "0011 1001", "0100 1011", "0101 0101", "0110 1100", "0111 0010",
      "1000 1101", "1001 0011", "1010 1010", "1011 0100", "1100 0110", "1101 1000", "1110 0001", "1111 1111"};
  return listing;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tz", "elkind", "codes", "bounds"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  Collector out;
  if (suite == "tz") {
    suite_tz(out);
  } else if (suite == "elkind") {
    suite_elkind(out);
  } else if (suite == "codes") {
    suite_codes(out);
  } else if (suite == "bounds") {
    suite_bounds(out);
  } else {
    throw InvalidInput("unknown verification suite '" + std::string(suite) + "'");
  }
  return out.take();
}

}  // namespace sgdim::verify
