#include "sgdim/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sgdim::io {

namespace {

struct Line {
  std::string text;
  int number;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    out.push_back({std::move(t), number});
  }
  return out;
}

void write_header(std::ostream& out, std::string_view header) {
  if (header.empty()) return;
  std::istringstream lines{std::string(header)};
  std::string l;
  while (std::getline(lines, l)) out << "# " << l << '\n';
}

long parse_long(std::string_view s, int line, const char* what) {
  long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(s) + "'", line);
  return v;
}

int parse_n(const Line& l) {
  if (l.text.rfind("n=", 0) != 0) throw ParseError("expected 'n=<int>'", l.number);
  const long n = parse_long(trim(l.text.substr(2)), l.number, "player count");
  if (n < 1 || n > kMaxBits) throw ParseError("player count must be in [1, 64]", l.number);
  return static_cast<int>(n);
}

BitVector parse_word(const Line& l, int expected) {
  BitVector w;
  try {
    w = BitVector::parse(l.text);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), l.number);
  }
  if (expected > 0 && w.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " positions, got " + std::to_string(w.size()), l.number);
  }
  return w;
}

WeightedGame parse_weighted_line(const Line& l, int n) {
  const auto semi = l.text.find(';');
  if (semi == std::string::npos) throw ParseError("expected 'q; w_1 ... w_n'", l.number);
  const long q = parse_long(trim(l.text.substr(0, semi)), l.number, "quota");
  std::istringstream ws(l.text.substr(semi + 1));
  std::vector<std::int64_t> weights;
  std::string tok;
  while (ws >> tok) weights.push_back(parse_long(tok, l.number, "weight"));
  if (static_cast<int>(weights.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()), l.number);
  }
  try {
    return WeightedGame(q, std::move(weights));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), l.number);
  }
}

void write_weighted_body(std::ostream& out, const IntersectionRep& r) {
  out << "n=" << r.players() << '\n';
  for (const auto& g : r.games()) {
    out << g.quota() << ';';
    for (auto w : g.weights()) out << ' ' << w;
    out << '\n';
  }
}

template <typename T, typename Reader>
T read_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return reader(in);
}

}  // namespace

Code read_code(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("code file has no words", 0);
  std::vector<BitVector> words;
  const int n = parse_word(lines.front(), 0).size();
  for (const auto& l : lines) words.push_back(parse_word(l, n));
  try {
    return Code(n, std::move(words));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), lines.back().number);
  }
}

void write_code(std::ostream& out, const Code& c, std::string_view header) {
  write_header(out, header);
  for (const auto& w : c.words()) out << w.str() << '\n';
}

SimpleGame read_game(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("game file is empty", 0);
  const int n = parse_n(lines.front());
  std::vector<Coalition> mw;
  for (std::size_t i = 1; i < lines.size(); ++i) mw.push_back(parse_word(lines[i], n));
  try {
    return SimpleGame(n, std::move(mw));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), lines.back().number);
  }
}

void write_game(std::ostream& out, const SimpleGame& g, std::string_view header) {
  write_header(out, header);
  out << "n=" << g.players() << '\n';
  for (const auto& c : g.minimal_winning()) out << c.str() << '\n';
}

IntersectionRep read_weighted(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("weighted file is empty", 0);
  const int n = parse_n(lines.front());
  std::vector<WeightedGame> games;
  for (std::size_t i = 1; i < lines.size(); ++i) games.push_back(parse_weighted_line(lines[i], n));
  if (games.empty()) throw ParseError("weighted file lists no games", lines.front().number);
  return IntersectionRep(std::move(games));
}

void write_weighted(std::ostream& out, const IntersectionRep& r, std::string_view header) {
  write_header(out, header);
  write_weighted_body(out, r);
}

void write_report(std::ostream& out, const DimensionReport& report, std::string_view header) {
  write_header(out, header);
  out << "LOWER " << report.lower << '\n';
  out << "UPPER " << report.upper << '\n';
  out << "EXACT " << (report.exact ? std::to_string(*report.exact) : std::string("none")) << '\n';
  out << "# clique bound " << report.clique_bound << ", oracle calls " << report.oracle_calls << '\n';
  if (!report.note.empty()) out << "# stopped: " << report.note << '\n';
  out << "CERTIFICATES " << report.certificates.size() << '\n';
  for (const auto& c : report.certificates) {
    if (const auto* t = std::get_if<TwoTradeCertificate>(&c)) {
      out << "trade " << t->loser1.str() << ' ' << t->loser2.str() << ' ' << t->winner1.str() << ' '
          << t->winner2.str() << '\n';
    } else {
      const auto& p = std::get<InfeasiblePair>(c);
      out << "lp " << p.loser1.str() << ' ' << p.loser2.str() << '\n';
    }
  }
  if (report.witnesses) {
    out << "WITNESSES " << report.witnesses->size() << '\n';
    write_weighted_body(out, *report.witnesses);
  } else {
    out << "WITNESSES 0\n";
  }
}

ParsedReport read_report(std::istream& in) {
  const auto lines = content_lines(in);
  ParsedReport r;
  auto value_of = [](const Line& l, std::string_view key) -> std::optional<std::string> {
    if (l.text.rfind(key, 0) != 0 || l.text.size() <= key.size() || l.text[key.size()] != ' ') return std::nullopt;
    return trim(l.text.substr(key.size() + 1));
  };
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (auto v = value_of(l, "LOWER")) {
      r.lower = static_cast<int>(parse_long(*v, l.number, "LOWER"));
    } else if (auto v2 = value_of(l, "UPPER")) {
      r.upper = static_cast<int>(parse_long(*v2, l.number, "UPPER"));
    } else if (auto v3 = value_of(l, "EXACT")) {
      if (*v3 != "none") r.exact = static_cast<int>(parse_long(*v3, l.number, "EXACT"));
    } else if (auto v4 = value_of(l, "CERTIFICATES")) {
      r.certificates = static_cast<std::size_t>(parse_long(*v4, l.number, "CERTIFICATES"));
    } else if (auto v5 = value_of(l, "WITNESSES")) {
      ++i;
      break;
    }
  }
  if (i < lines.size()) {
    std::ostringstream rest;
    for (; i < lines.size(); ++i) rest << lines[i].text << '\n';
    std::istringstream body(rest.str());
    r.witnesses = read_weighted(body);
  }
  return r;
}

Code read_code_file(const std::string& path) { return read_file<Code>(path, [](std::istream& in) { return read_code(in); }); }

SimpleGame read_game_file(const std::string& path) {
  return read_file<SimpleGame>(path, [](std::istream& in) { return read_game(in); });
}

IntersectionRep read_weighted_file(const std::string& path) {
  return read_file<IntersectionRep>(path, [](std::istream& in) { return read_weighted(in); });
}

}  // namespace sgdim::io
