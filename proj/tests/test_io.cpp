#include <doctest.h>

#include <sstream>

#include "sgdim/construct.hpp"
#include "sgdim/io.hpp"

using namespace sgdim;

TEST_CASE("code files round-trip") {
  const auto c = hamming84();
  std::stringstream ss;
  io::write_code(ss, c, "sgdim test\nsecond line");
  CHECK(ss.str().rfind("# sgdim test\n# second line\n", 0) == 0);
  CHECK(io::read_code(ss) == c);
  std::istringstream spaced("# comment\n\n0001 1110\n1110 0001\n");
  CHECK(io::read_code(spaced).size() == 2);
}

TEST_CASE("game files round-trip") {
  const auto g = taylor_zwicker(3).game;
  std::stringstream ss;
  io::write_game(ss, g);
  CHECK(io::read_game(ss) == g);
}

TEST_CASE("weighted files round-trip") {
  const auto rep = tz_decomposition(5);
  std::stringstream ss;
  io::write_weighted(ss, rep);
  const auto back = io::read_weighted(ss);
  CHECK(back.games() == rep.games());
}

TEST_CASE("reports round-trip") {
  const auto report = exact_dimension(taylor_zwicker(3).game);
  std::stringstream ss;
  io::write_report(ss, report, "hdr");
  const auto parsed = io::read_report(ss);
  CHECK(parsed.lower == report.lower);
  CHECK(parsed.upper == report.upper);
  CHECK(parsed.exact == report.exact);
  CHECK(parsed.certificates == report.certificates.size());
  REQUIRE(parsed.witnesses);
  CHECK(parsed.witnesses->games() == report.witnesses->games());
}

TEST_CASE("parse errors carry the line number") {
  std::istringstream bad_word("0101\n01x1\n");
  try {
    io::read_code(bad_word);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream bad_len("n=3\n101\n11\n");
  try {
    io::read_game(bad_len);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream no_header("101\n");
  CHECK_THROWS_AS(io::read_game(no_header), ParseError);
  std::istringstream bad_weights("n=2\n1; 1\n");
  CHECK_THROWS_AS(io::read_weighted(bad_weights), ParseError);
  std::istringstream non_antichain("n=3\n100\n110\n");
  CHECK_THROWS_AS(io::read_game(non_antichain), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(io::read_code(empty), ParseError);
}
