#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgdim/codes.hpp"
#include "sgdim/kernels.hpp"

namespace k = sgdim::kernels;

namespace {

struct ThreadGuard {
  int saved = k::thread_count();
  ~ThreadGuard() { k::set_thread_count(saved); }
};

const int kThreadCounts[] = {1, 2, 3, 4};

}  // namespace

TEST_CASE("parallel truth-table kernels equal the serial reference") {
  ThreadGuard guard;
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 14; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto gens = oracle::random_antichain(n, rng);
      const auto ref = k::serial::upward_closure(n, gens);
      const auto ref_min = k::serial::minimal_true(n, ref);
      const auto ref_max = k::serial::maximal_false(n, ref);
      const auto pred = [&](std::uint64_t m) { return (m * 0x9E3779B97F4A7C15ull >> 61) == 3; };
      const auto ref_eval = k::serial::evaluate(n, pred);
      const auto ref_violation = k::serial::first_monotonicity_violation(n, ref_eval);
      for (int t : kThreadCounts) {
        k::set_thread_count(t);
        CAPTURE(n);
        CAPTURE(t);
        CHECK(k::upward_closure(n, gens) == ref);
        CHECK(k::minimal_true(n, ref) == ref_min);
        CHECK(k::maximal_false(n, ref) == ref_max);
        CHECK(k::evaluate(n, pred) == ref_eval);
        const auto v = k::first_monotonicity_violation(n, ref_eval);
        REQUIRE(v.has_value() == ref_violation.has_value());
        if (v) {
          CHECK(v->winning == ref_violation->winning);
          CHECK(v->losing_superset == ref_violation->losing_superset);
        }
        CHECK_FALSE(k::first_monotonicity_violation(n, ref).has_value());
      }
    }
  }
}

TEST_CASE("closure kernels agree with the brute-force oracle") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 10; ++n) {
    const auto gens = oracle::random_antichain(n, rng);
    const auto tt = k::upward_closure(n, gens);
    const auto ref = oracle::table_from_minimal(n, gens);
    for (std::size_t s = 0; s < ref.size(); ++s) REQUIRE(static_cast<bool>(tt[s]) == ref[s]);
    auto sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    CHECK(k::minimal_true(n, tt) == sorted);
    CHECK(k::maximal_false(n, tt) == oracle::maximal_losing(n, ref));
  }
}

TEST_CASE("code kernels equal the serial reference") {
  ThreadGuard guard;
  for (int m = 2; m <= 5; ++m) {
    const auto rows = sgdim::hamming_generator_rows(m);
    const int t = (1 << m) - 1;
    const auto ref = k::serial::weight_histogram(t, rows);
    for (int th : kThreadCounts) {
      k::set_thread_count(th);
      CHECK(k::weight_histogram(t, rows) == ref);
    }
  }
  for (int n = 2; n <= 16; ++n) {
    const auto ref = k::serial::residue_histogram(n, n / 2);
    const auto classes = oracle::residue_classes(n, n / 2);
    for (int r = 0; r < n; ++r) CHECK(ref[static_cast<std::size_t>(r)] == classes[static_cast<std::size_t>(r)].size());
    for (int th : kThreadCounts) {
      k::set_thread_count(th);
      CHECK(k::residue_histogram(n, n / 2) == ref);
    }
  }
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::uint64_t> words(2 + rep * 7);
    for (auto& w : words) w = rng() & 0xFFFF;
    const int d = k::serial::min_distance(words);
    CHECK(d == oracle::min_distance(words));
    const auto viol = k::serial::first_condition_violation(words);
    CHECK(viol.has_value() != oracle::condition_holds(words));
    for (int th : kThreadCounts) {
      k::set_thread_count(th);
      CHECK(k::min_distance(words) == d);
      CHECK(k::first_condition_violation(words) == viol);
    }
  }
}

TEST_CASE("first condition violation is the lexicographically first pair") {
  const std::vector<std::uint64_t> words{0b1111, 0b11110000, 0b11, 0b1100};
  const auto v = k::serial::first_condition_violation(words);
  REQUIRE(v.has_value());
  CHECK(*v == k::IndexPair{0, 2});
}
