#pragma once

// Text formats: the E(n) expression grammar, .mtc modular-data files, and
// JSON serialization of reports.
//
//   expr     := sign? term (('+' | '-') term)*
//   term     := rational ('*' root)? | root
//   root     := 'E(' int ')' ('^' sign? int)?
//   rational := int ('/' posint)?
//
// E(n) denotes e^{2πi/n}. Whitespace is ignored.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mtc/catalog.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/indicators.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/spectra.hpp"

namespace mtc {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t column)
      : s_(text), line_(line), col0_(column) {}

  Cyclotomic parse() {
    skip();
    if (at_end()) fail("empty expression", "a term");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    term(negative);
    for (;;) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("unexpected character '" + std::string(1, c) + "'", "'+' or '-'");
      ++pos_;
      term(c == '-');
    }
    std::uint64_t order = 1;
    for (const auto& t : terms_) order = checked_lcm(order, t.n);
    const auto n = checked_order(order);
    std::vector<std::pair<std::int64_t, Rational>> scaled;
    scaled.reserve(terms_.size());
    for (const auto& t : terms_)
      scaled.emplace_back(floor_mod(t.k, static_cast<std::int64_t>(t.n)) * static_cast<std::int64_t>(n / t.n),
                          t.coeff);
    return Cyclotomic::from_terms(n, scaled);
  }

 private:
  struct Term {
    std::uint64_t n;
    std::int64_t k;
    Rational coeff;
  };

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    throw ParseError(msg, line_, col0_ + pos_, expected);
  }

  void expect(char c) {
    skip();
    if (at_end() || peek() != c) fail(at_end() ? "unexpected end of input" : "unexpected character", std::string("'") + c + "'");
    ++pos_;
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(at_end() ? "unexpected end of input" : "unexpected character", "an integer");
    return Integer::from_string(s_.substr(start, pos_ - start));
  }

  void root(Rational coeff) {
    // 'E' already consumed
    expect('(');
    const std::size_t at = pos_;
    const Integer n = integer();
    expect(')');
    if (n.is_zero()) throw DomainError("E(0) is undefined (at column " + std::to_string(col0_ + at) + ")");
    if (!n.is_small()) throw OrderCapExceeded("E(n) order too large");
    std::int64_t k = 1;
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++pos_;
      }
      const Integer e = integer();
      if (!e.is_small()) fail("exponent too large", "a machine-size exponent");
      k = neg ? -e.to_int64() : e.to_int64();
    }
    terms_.push_back({checked_order(static_cast<std::uint64_t>(n.to_int64())), k, std::move(coeff)});
  }

  void term(bool negative) {
    skip();
    if (at_end()) fail("unexpected end of input", "a term");
    const Rational sign(negative ? -1 : 1);
    if (peek() == 'E') {
      ++pos_;
      root(sign);
      return;
    }
    Integer num = integer();
    Integer den(1);
    skip();
    if (!at_end() && peek() == '/') {
      ++pos_;
      den = integer();
      if (den.is_zero()) fail("zero denominator", "a positive integer");
    }
    const Rational q = sign * Rational(std::move(num), std::move(den));
    skip();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip();
      if (at_end() || peek() != 'E') fail("expected a root after '*'", "'E('");
      ++pos_;
      root(q);
      return;
    }
    terms_.push_back({1, 0, q});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
  std::vector<Term> terms_;
};

}  // namespace detail

/// Parses one expression; positions in errors are reported relative to
/// (line, column) of the expression's first character.
inline Cyclotomic parse_expr(std::string_view text, std::size_t line = 1, std::size_t column = 1) {
  return detail::ExprParser(text, line, column).parse();
}

// ---------------------------------------------------------------------------
// .mtc files
//
//   # comment
//   rank: 2
//   labels: 1, s
//   unit: 1                      (optional)
//   S:
//     1/2*E(8) + ..., 1/2*E(8) + ...
//     ...                        (one row per line; a trailing ',' continues a row)
//   T: 1, E(4)

struct FileEntry {
  std::string text;
  std::size_t line = 0, column = 0;
};

struct ModularDataFile {
  std::size_t rank = 0;
  std::vector<std::string> labels;
  std::optional<std::string> unit;
  std::vector<std::vector<FileEntry>> S;
  std::vector<FileEntry> T;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

struct Line {
  std::string text;  // comment stripped, not trimmed
  std::size_t number;
};

/// Splits comma-separated entries of one physical line, appending to `row`.
/// Returns true when the line ends with a continuation comma.
inline bool split_entries(const Line& ln, std::size_t offset, std::vector<FileEntry>& row) {
  const std::string& t = ln.text;
  std::size_t start = offset;
  bool trailing = false;
  for (std::size_t i = offset; i <= t.size(); ++i) {
    if (i == t.size() || t[i] == ',') {
      const std::string piece = trim(std::string_view(t).substr(start, i - start));
      std::size_t col = start;
      while (col < t.size() && std::isspace(static_cast<unsigned char>(t[col]))) ++col;
      if (!piece.empty()) row.push_back({piece, ln.number, col + 1});
      else if (i < t.size()) throw ParseError("empty entry", ln.number, col + 1, "an expression");
      if (i < t.size()) trailing = trim(std::string_view(t).substr(i + 1)).empty();
      start = i + 1;
    }
  }
  return trailing;
}

}  // namespace detail

inline ModularDataFile read_mtc(std::string_view text) {
  std::vector<detail::Line> lines;
  {
    std::size_t no = 0;
    std::string cur;
    std::istringstream in{std::string(text)};
    while (std::getline(in, cur)) {
      ++no;
      if (auto h = cur.find('#'); h != std::string::npos) cur.erase(h);
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      if (detail::trim(cur).empty()) continue;
      lines.push_back({cur, no});
    }
  }
  ModularDataFile f;
  bool have_rank = false;
  std::size_t i = 0;
  auto key_of = [](const detail::Line& ln, std::string& key, std::size_t& rest) {
    const auto colon = ln.text.find(':');
    if (colon == std::string::npos) return false;
    key = detail::trim(std::string_view(ln.text).substr(0, colon));
    rest = colon + 1;
    return true;
  };
  // Reads rows starting at text offset `rest` of lines[i], stopping after `count` rows.
  auto read_rows = [&](std::size_t rest, std::size_t count) {
    std::vector<std::vector<FileEntry>> rows;
    std::vector<FileEntry> row;
    bool first = true;
    while (rows.size() < count) {
      if (first && detail::trim(std::string_view(lines[i].text).substr(rest)).empty()) {
        first = false;
        ++i;
        continue;
      }
      if (i >= lines.size()) throw DimensionError("file ends after " + std::to_string(rows.size()) + " of " +
                                                  std::to_string(count) + " rows");
      const bool cont = detail::split_entries(lines[i], first ? rest : 0, row);
      first = false;
      ++i;
      if (!cont) {
        rows.push_back(std::move(row));
        row.clear();
      }
    }
    return rows;
  };
  while (i < lines.size()) {
    std::string key;
    std::size_t rest = 0;
    const auto& ln = lines[i];
    if (!key_of(ln, key, rest)) throw ParseError("expected 'key:'", ln.number, 1, "one of rank, labels, unit, S, T");
    const std::string value = detail::trim(std::string_view(ln.text).substr(rest));
    if (key == "rank") {
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("rank must be a positive integer", ln.number, rest + 1, "a positive integer");
      f.rank = std::stoul(value);
      if (f.rank == 0) throw ParseError("rank must be positive", ln.number, rest + 1, "a positive integer");
      have_rank = true;
      ++i;
    } else if (key == "labels") {
      std::string cur;
      for (char c : value) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          if (!cur.empty()) f.labels.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) f.labels.push_back(cur);
      ++i;
    } else if (key == "unit") {
      f.unit = value;
      ++i;
    } else if (key == "S") {
      if (!have_rank) throw ParseError("S given before rank", ln.number, 1, "'rank:' first");
      f.S = read_rows(rest, f.rank);
    } else if (key == "T") {
      if (!have_rank) throw ParseError("T given before rank", ln.number, 1, "'rank:' first");
      f.T = read_rows(rest, 1).front();
    } else {
      throw ParseError("unknown key '" + key + "'", ln.number, 1, "one of rank, labels, unit, S, T");
    }
  }
  if (!have_rank) throw ParseError("missing rank", lines.empty() ? 1 : lines.back().number, 1, "'rank:'");
  if (f.labels.empty())
    for (std::size_t k = 1; k <= f.rank; ++k) f.labels.push_back(std::to_string(k));
  if (f.labels.size() != f.rank)
    throw DimensionError("expected " + std::to_string(f.rank) + " labels, found " + std::to_string(f.labels.size()));
  if (f.S.size() != f.rank) throw DimensionError("S has " + std::to_string(f.S.size()) + " rows, expected " + std::to_string(f.rank));
  for (std::size_t r = 0; r < f.S.size(); ++r)
    if (f.S[r].size() != f.rank)
      throw DimensionError("S row " + std::to_string(r + 1) + " has " + std::to_string(f.S[r].size()) +
                           " entries, expected " + std::to_string(f.rank));
  if (f.T.size() != f.rank)
    throw DimensionError("T has " + std::to_string(f.T.size()) + " entries, expected " + std::to_string(f.rank));
  return f;
}

/// Parses expressions and builds the modular data without validating it.
inline ModularData build_modular_data(const ModularDataFile& f) {
  const std::size_t r = f.rank;
  CycloMatrix s(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s(i, j) = parse_expr(f.S[i][j].text, f.S[i][j].line, f.S[i][j].column);
  std::vector<Cyclotomic> t;
  for (const auto& e : f.T) t.push_back(parse_expr(e.text, e.line, e.column));
  std::optional<std::size_t> unit;
  if (f.unit) {
    for (std::size_t k = 0; k < r && !unit; ++k)
      if (f.labels[k] == *f.unit) unit = k;
    if (!unit) {
      const auto& u = *f.unit;
      if (!u.empty() && u.find_first_not_of("0123456789") == std::string::npos && std::stoul(u) >= 1 &&
          std::stoul(u) <= r)
        unit = std::stoul(u) - 1;
      else
        throw ConstructionError("unit '" + u + "' is not a label or 1-based index");
    }
  }
  return ModularData::construct(f.labels, std::move(s), t, unit);
}

inline std::string describe_failures(const ValidationReport& rep) {
  std::string out;
  for (const auto& c : rep.checks)
    if (!c.passed) out += (out.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return out;
}

/// Parses, constructs and validates; validation failures raise ValidationError.
inline ModularData parse_file(std::string_view text) {
  ModularData md = build_modular_data(read_mtc(text));
  const auto rep = validate(md);
  if (!rep.ok()) throw ValidationError("modular data fails validation: " + describe_failures(rep));
  return md;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes modular data in .mtc form; entries use the canonical E(n) notation.
inline std::string write_mtc(const ModularData& md) {
  std::string out = "rank: " + std::to_string(md.rank()) + "\nlabels:";
  for (std::size_t i = 0; i < md.rank(); ++i) out += (i ? ", " : " ") + md.label(i);
  out += "\nunit: " + md.label(md.unit()) + "\nS:\n";
  for (std::size_t i = 0; i < md.rank(); ++i) {
    out += "  ";
    for (std::size_t j = 0; j < md.rank(); ++j) out += (j ? ", " : "") + to_string(md.S(i, j));
    out += "\n";
  }
  out += "T:";
  for (std::size_t i = 0; i < md.rank(); ++i) out += (i ? ", " : " ") + to_string(md.theta(i));
  return out + "\n";
}

// ---------------------------------------------------------------------------
// structured (JSON) reports

using json = nlohmann::ordered_json;

inline json to_json(const SpectrumReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json ev = json::array(), mu = json::array();
    for (const auto& e : row.entries) {
      ev.push_back(to_string(e.eigenvalue));
      mu.push_back(e.multiplicity);
    }
    rows.push_back({{"object", row.object + 1},
                    {"label", row.label},
                    {"hom_dim", row.hom_dim},
                    {"eigenvalues", ev},
                    {"multiplicities", mu}});
  }
  const auto& c = rep.context;
  return {{"schema", "mtc-spectrum/1"},
          {"context",
           {{"kind", c.kind}, {"category", c.category}, {"object", c.object}, {"n", c.n}, {"l", c.l}, {"m", c.m},
            {"crossing", c.crossing}}},
          {"rows", rows}};
}

inline RootOfUnity parse_root(const std::string& s) {
  auto z = as_root_of_unity(parse_expr(s));
  if (!z) throw ParseError("'" + s + "' is not a root of unity", 1, 1, "E(q)^k");
  return *z;
}

inline SpectrumReport spectrum_from_json(const json& j) {
  try {
    if (j.at("schema") != "mtc-spectrum/1") throw ParseError("unexpected schema", 1, 1, "mtc-spectrum/1");
    SpectrumReport rep;
    const auto& c = j.at("context");
    rep.context = {c.at("kind").get<std::string>(), c.at("category").get<std::string>(),
                   c.at("object").get<std::string>(), c.at("n").get<std::int64_t>(),
                   c.at("l").get<std::int64_t>(), c.at("m").get<std::int64_t>(),
                   c.at("crossing").get<std::string>()};
    for (const auto& r : j.at("rows")) {
      SpectrumRow row;
      row.object = r.at("object").get<std::size_t>() - 1;
      row.label = r.at("label").get<std::string>();
      row.hom_dim = r.at("hom_dim").get<std::int64_t>();
      const auto& ev = r.at("eigenvalues");
      const auto& mu = r.at("multiplicities");
      if (ev.size() != mu.size()) throw DimensionError("eigenvalue and multiplicity lists differ in length");
      for (std::size_t k = 0; k < ev.size(); ++k)
        row.entries.push_back({parse_root(ev[k].get<std::string>()), mu[k].get<std::int64_t>()});
      rep.rows.push_back(std::move(row));
    }
    return rep;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed spectrum document: ") + e.what(), 1, 1);
  }
}

inline SpectrumReport spectrum_from_string(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
  return spectrum_from_json(j);
}

inline json to_json(const IndicatorTable& t, const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels) {
  json values = json::array();
  for (std::size_t i = 0; i < t.values.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.values.cols(); ++j) row.push_back(to_string(t.values(i, j)));
    values.push_back(row);
  }
  return {{"schema", "mtc-indicators/1"}, {"m", t.m},           {"l", t.l},
          {"rows", row_labels},           {"columns", col_labels}, {"values", values}};
}

inline json to_json(const ValidationReport& rep, const std::optional<DerivedInvariants>& inv = std::nullopt) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json j = {{"schema", "mtc-validation/1"}, {"ok", rep.ok()}, {"checks", checks}};
  if (inv) {
    json dims = json::array();
    for (const auto& d : inv->dims) dims.push_back(to_string(d));
    j["invariants"] = {{"dims", dims},
                       {"global_dim", to_string(inv->global_dim)},
                       {"conductor", inv->conductor},
                       {"central_charge", to_string(inv->central_charge)}};
  }
  return j;
}

inline json to_json(const FusionRing& fr, const std::vector<std::string>& labels) {
  json prods = json::array();
  for (std::size_t a = 0; a < fr.rank(); ++a)
    for (std::size_t b = 0; b < fr.rank(); ++b) {
      json terms = json::array();
      for (const auto& [c, k] : fr.fuse(a, b).terms()) terms.push_back({{"object", labels[c]}, {"multiplicity", k}});
      prods.push_back({{"a", labels[a]}, {"b", labels[b]}, {"product", terms}});
    }
  return {{"schema", "mtc-fusion/1"}, {"labels", labels}, {"unit", labels[fr.unit()]}, {"products", prods}};
}

enum class Format { table, structured };

inline std::string render_report(const SpectrumReport& rep, Format format) {
  if (format == Format::structured) return to_json(rep).dump(2) + "\n";
  return render_table(rep);
}

}  // namespace mtc
