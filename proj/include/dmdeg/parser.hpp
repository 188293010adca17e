#pragma once

// Operator expressions, term-order specifications and the line-oriented
// problem-file format.

#include "dmdeg/gkz.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dmdeg {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct OperatorSyntax {
  bool allow_homogenizers = false;  // accept h and theta
  int line = 1;                     // position of src[0], for diagnostics
  int column = 1;
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

/// Slot named by an identifier: a variable, d<name>, d<index> (1-based),
/// or h / theta when allowed.  Several readings are an error.
inline std::optional<int> resolve_slot(const std::string& id, const VarSpec& vs, bool homog, std::string* why) {
  std::vector<int> hits;
  if (auto i = vs.find(id)) hits.push_back(vs.base(*i));
  if (id.size() > 1 && id[0] == 'd') {
    std::string rest = id.substr(1);
    if (auto i = vs.find(rest)) hits.push_back(vs.deriv(*i));
    if (all_digits(rest) && rest.size() < 4) {
      int k = std::stoi(rest);
      if (k >= 1 && k <= vs.size() && std::find(hits.begin(), hits.end(), vs.deriv(k - 1)) == hits.end())
        hits.push_back(vs.deriv(k - 1));
    }
  }
  if (homog && id == "h" && !vs.find(id)) hits.push_back(vs.h());
  if (homog && id == "theta" && !vs.find(id)) hits.push_back(vs.theta());
  if (hits.size() == 1) return hits[0];
  if (why) *why = hits.empty() ? "unknown identifier '" + id + "'" : "ambiguous identifier '" + id + "'";
  return std::nullopt;
}

/// Parses "a" or "a/b" (optional sign) as a rational; nullopt if malformed.
inline std::optional<Rational> parse_rational(std::string_view s) {
  std::string t(s);
  auto slash = t.find('/');
  std::string num = t.substr(0, slash), den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  std::string digits = num;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
  if (!all_digits(digits) || !all_digits(den)) return std::nullopt;
  Integer n(digits), d(den);
  if (d == 0) return std::nullopt;
  Rational r(n, d);
  r.canonicalize();
  if (!num.empty() && num[0] == '-') r = -r;
  return r;
}

class ExprParser {
 public:
  ExprParser(std::string_view src, const VarSpec& vs, const OperatorSyntax& syn)
      : src_(src), vs_(vs), syn_(syn), ring_(Ring::weyl_d(vs)) {
    if (syn.allow_homogenizers) ring_ = Ring::rees(vs);
  }

  WElement parse() {
    skip();
    if (pos_ >= src_.size()) error("empty expression");
    WElement e = expr();
    skip();
    if (pos_ < src_.size()) {
      if (ident_start(src_[pos_]) || std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '(')
        error("missing operator before '" + std::string(1, src_[pos_]) + "' (products need '*')");
      error("unexpected '" + std::string(1, src_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(syn_.line, syn_.column + static_cast<int>(pos_), msg);
  }
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  WElement expr() {
    WElement acc;
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      WElement t = term();
      acc = sign < 0 ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  WElement term() {
    WElement acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = multiply(acc, factor(), ring_);
    }
    return acc;
  }

  WElement factor() {
    WElement base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) error("malformed exponent (expected a natural number)");
    std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 4 || std::stoi(digits) > 1000) {
      pos_ = start;
      error("exponent " + digits + " is too large");
    }
    int k = std::stoi(digits);
    WElement r(Rational(1));
    for (int i = 0; i < k; ++i) r = multiply(r, base, ring_);
    return r;
  }

  WElement atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      WElement e = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      std::string id(src_.substr(start, pos_ - start));
      std::string why;
      auto slot = resolve_slot(id, vs_, syn_.allow_homogenizers, &why);
      if (!slot) {
        pos_ = start;
        error(why);
      }
      Monomial m;
      m.e[*slot] = 1;
      return WElement::monomial(m);
    }
    if (c == '\0') error("unexpected end of expression");
    error("expected a number, identifier or '('");
  }

  WElement number() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t s = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return std::string(src_.substr(s, pos_ - s));
    };
    std::string num = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') error("decimal numbers are not supported; write a rational a/b");
    std::string den = "1";
    std::size_t save = pos_;
    if (peek() == '/') {
      ++pos_;
      skip();
      den = digits();
      if (den.empty()) error("expected a denominator after '/'");
    } else {
      pos_ = save;
    }
    auto r = parse_rational(num + "/" + den);
    if (!r) {
      pos_ = start;
      error("division by zero in rational literal");
    }
    return WElement(*r);
  }

  std::string_view src_;
  const VarSpec& vs_;
  OperatorSyntax syn_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an operator; products keep their order and are normalized with
/// the commutation relations (so "dt1*t1" is t1*dt1 + 1).
inline WElement parse_operator(std::string_view src, const VarSpec& vs, const OperatorSyntax& syn = {}) {
  return detail::ExprParser(src, vs, syn).parse();
}

/// Normal-form rendering, accepted back by parse_operator.
inline std::string render(const WElement& p, const VarSpec& vs) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::string> f;
    auto put = [&](int slot) {
      int e = m.e[slot];
      if (e == 0) return;
      f.push_back(vs.slot_name(slot) + (e > 1 ? "^" + std::to_string(e) : ""));
    };
    for (int i = 0; i < vs.size(); ++i) put(vs.base(i));
    for (int i = 0; i < vs.size(); ++i) put(vs.deriv(i));
    put(vs.h());
    put(vs.theta());
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < f.size(); ++k) mono += (k ? "*" : "") + f[k];
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << '*' << mono;
  }
  return os.str();
}

/// Term-order specification: tiers separated by ';', each one of
///   grevlex | lex                    (default slot priority)
///   grevlex(s1 s2 ...) | lex(...)    (listed slots first, rest by default)
///   weight(w1 ... )                  (2N or 2N+2 nonnegative integers)
/// The result serves as the tie-break after the structural weights.
inline TermOrder parse_order_spec(std::string_view spec, const VarSpec& vs, int line = 1) {
  std::vector<OrderTier> tiers;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const std::string& msg) -> void { throw ParseError(line, static_cast<int>(at) + 1, msg); };
  while (pos <= spec.size()) {
    std::size_t end = spec.find(';', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view part = spec.substr(pos, end - pos);
    std::size_t off = pos;
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1), ++off;
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (part.empty()) fail(off, "empty order tier");
    std::size_t paren = part.find('(');
    std::string kind(part.substr(0, paren));
    while (!kind.empty() && std::isspace(static_cast<unsigned char>(kind.back()))) kind.pop_back();
    std::vector<std::string> args;
    if (paren != std::string_view::npos) {
      if (part.back() != ')') fail(off + part.size() - 1, "expected ')' to close the tier arguments");
      std::istringstream is(std::string(part.substr(paren + 1, part.size() - paren - 2)));
      for (std::string a; is >> a;) {
        if (!a.empty() && a.back() == ',') a.pop_back();
        if (!a.empty()) args.push_back(a);
      }
    }
    if (kind == "grevlex" || kind == "lex") {
      std::vector<int> seq;
      for (const auto& a : args) {
        std::string why;
        auto s = detail::resolve_slot(a, vs, true, &why);
        if (!s) fail(off, why);
        if (std::find(seq.begin(), seq.end(), *s) != seq.end()) fail(off, "slot '" + a + "' listed twice");
        seq.push_back(*s);
      }
      for (int s : default_priority(vs))
        if (std::find(seq.begin(), seq.end(), s) == seq.end()) seq.push_back(s);
      tiers.push_back({kind == "lex" ? OrderTier::Kind::lex : OrderTier::Kind::grevlex, {}, seq});
    } else if (kind == "weight") {
      std::vector<int> w;
      for (const auto& a : args) {
        if (!detail::all_digits(a) || a.size() > 6) fail(off, "weights must be nonnegative integers, got '" + a + "'");
        w.push_back(std::stoi(a));
      }
      if (static_cast<int>(w.size()) == 2 * vs.size()) w.resize(vs.nslots(), 0);
      if (static_cast<int>(w.size()) != vs.nslots())
        fail(off, "weight tier needs " + std::to_string(2 * vs.size()) + " or " + std::to_string(vs.nslots()) +
                      " entries, got " + std::to_string(w.size()));
      tiers.push_back({OrderTier::Kind::weight, w, {}});
    } else {
      fail(off, "unknown order tier '" + kind + "' (expected grevlex, lex or weight)");
    }
    pos = end + 1;
  }
  if (tiers.back().kind == OrderTier::Kind::weight)
    tiers.push_back({OrderTier::Kind::grevlex, {}, default_priority(vs)});
  return TermOrder(vs.nslots(), std::move(tiers));
}

/// One problem file.
struct Job {
  enum class Mode { raw, gkz };
  Mode mode = Mode::raw;
  VarSpec vars;
  std::string tblock = "origin";  // as written
  int rank = 1;
  std::vector<Bidegree> shifts;
  GeneratorList gens;
  std::vector<std::string> gen_sources;
  IntMatrix A;
  std::vector<std::vector<Rational>> betas;
  bool beta_is_list = false;
  int matrix_line = 0;
  std::optional<std::string> order_spec;
  std::optional<TermOrder> order;
  bool allow_negative_shifts = false;

  /// The single beta of a gkz job; a list or a missing beta is an error.
  const std::vector<Rational>& beta() const {
    if (betas.empty()) throw ParseError(matrix_line, 1, "matrix: block needs a 'beta = ...' line");
    if (beta_is_list) throw ParseError(matrix_line, 1, "this command takes one beta; found a beta_list: block");
    return betas[0];
  }
};

namespace detail {

struct RawLine {
  int number;
  std::string text;  // comment stripped
  int indent;        // columns of leading whitespace
};

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

inline std::vector<long> parse_ints(const std::string& s, int line, int col, const char* what) {
  std::vector<long> out;
  for (const auto& t : split_ws(s)) {
    std::string d = t[0] == '-' || t[0] == '+' ? t.substr(1) : t;
    if (!all_digits(d) || d.size() > 9) throw ParseError(line, col, std::string(what) + ": '" + t + "' is not an integer");
    out.push_back(std::stol(t));
  }
  return out;
}

inline std::vector<Rational> parse_rationals(const std::string& s, int line, int col, const char* what) {
  std::vector<Rational> out;
  for (const auto& t : split_ws(s)) {
    if (t.find('.') != std::string::npos || t.find('e') != std::string::npos)
      throw ParseError(line, col, std::string(what) + ": '" + t + "' is not rational; only exact rationals a/b are supported");
    auto r = parse_rational(t);
    if (!r) throw ParseError(line, col, std::string(what) + ": '" + t + "' is not a rational number");
    out.push_back(*r);
  }
  return out;
}

/// Splits "[a, b, c]" at top-level commas; returns (text, column) pieces.
inline std::vector<std::pair<std::string, int>> split_vector(const std::string& s, int col0, int line) {
  std::size_t open = s.find('['), close = s.rfind(']');
  if (close == std::string::npos || close < open) throw ParseError(line, col0 + static_cast<int>(open), "unclosed '['");
  for (std::size_t i = close + 1; i < s.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(s[i]))) throw ParseError(line, col0 + static_cast<int>(i), "text after ']'");
  std::vector<std::pair<std::string, int>> out;
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i <= close; ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' && depth == 0) || i == close) {
      out.emplace_back(s.substr(start, i - start), col0 + static_cast<int>(start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

inline Job parse_problem(std::string_view src) {
  using detail::RawLine;
  std::vector<RawLine> lines;
  {
    std::istringstream is{std::string(src)};
    int n = 0;
    for (std::string l; std::getline(is, l);) {
      ++n;
      if (!l.empty() && l.back() == '\r') l.pop_back();
      if (auto h = l.find('#'); h != std::string::npos) l.erase(h);
      std::size_t ind = l.find_first_not_of(" \t");
      if (ind == std::string::npos) continue;
      while (!l.empty() && std::isspace(static_cast<unsigned char>(l.back()))) l.pop_back();
      lines.push_back({n, l, static_cast<int>(ind)});
    }
  }
  if (lines.empty()) throw ParseError(1, 1, "empty problem file");

  struct Entry {
    int line;
    int col;  // column of the value
    std::string value;
  };
  std::map<std::string, Entry> keys;
  std::map<std::string, std::pair<int, std::vector<RawLine>>> blocks;
  std::string cur_block;
  static const std::vector<std::string> known_keys{"vars", "tblock", "shifts_F", "shifts_V", "rank",
                                                   "order", "beta", "allow_negative_shifts"};
  static const std::vector<std::string> known_blocks{"gens", "matrix", "beta_list"};
  for (const auto& l : lines) {
    if (l.indent > 0) {
      if (cur_block.empty()) throw ParseError(l.number, l.indent + 1, "indented line outside a gens:, matrix: or beta_list: block");
      blocks[cur_block].second.push_back(l);
      continue;
    }
    cur_block.clear();
    std::size_t eq = l.text.find('=');
    std::size_t colon = l.text.find(':');
    if (eq == std::string::npos && colon != std::string::npos && colon + 1 == l.text.size()) {
      std::string name = l.text.substr(0, colon);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      if (std::find(known_blocks.begin(), known_blocks.end(), name) == known_blocks.end())
        throw ParseError(l.number, 1, "unknown block '" + name + ":'");
      if (blocks.count(name)) throw ParseError(l.number, 1, "duplicate block '" + name + ":'");
      blocks[name].first = l.number;
      cur_block = name;
      continue;
    }
    if (eq == std::string::npos) throw ParseError(l.number, 1, "expected 'key = value' or 'block:'");
    std::string key = l.text.substr(0, eq);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end())
      throw ParseError(l.number, 1, "unknown key '" + key + "'");
    if (keys.count(key)) throw ParseError(l.number, 1, "duplicate key '" + key + "'");
    std::size_t v = l.text.find_first_not_of(" \t", eq + 1);
    std::string value = v == std::string::npos ? "" : l.text.substr(v);
    keys[key] = {l.number, static_cast<int>(v == std::string::npos ? eq + 2 : v + 1), value};
  }

  Job job;
  const bool has_gens = blocks.count("gens"), has_matrix = blocks.count("matrix");
  if (has_gens && has_matrix)
    throw ParseError(blocks["matrix"].first, 1, "a problem has either a gens: block or a matrix: block, not both");
  if (!has_gens && !has_matrix) throw ParseError(lines.back().number, 1, "expected a gens: or matrix: block");
  job.mode = has_gens ? Job::Mode::raw : Job::Mode::gkz;

  std::vector<std::string> names;
  if (keys.count("vars")) {
    names = detail::split_ws(keys["vars"].value);
    if (names.empty()) throw ParseError(keys["vars"].line, keys["vars"].col, "vars: no variables listed");
    for (const auto& n : names)
      if (!detail::ident_start(n[0]) || !std::all_of(n.begin(), n.end(), detail::ident_char) || n == "h" || n == "theta")
        throw ParseError(keys["vars"].line, keys["vars"].col, "vars: '" + n + "' is not a valid variable name");
  }

  if (job.mode == Job::Mode::gkz) {
    auto& [mline, rows] = blocks["matrix"];
    job.matrix_line = mline;
    if (rows.empty()) throw ParseError(mline, 1, "matrix: block has no rows");
    std::vector<std::vector<long>> a;
    for (const auto& r : rows) {
      a.push_back(detail::parse_ints(r.text, r.number, r.indent + 1, "matrix"));
      if (a.back().size() != a.front().size())
        throw ParseError(r.number, r.indent + 1, "matrix row has " + std::to_string(a.back().size()) + " entries, expected " +
                                                     std::to_string(a.front().size()));
    }
    job.A = to_int_matrix(a);
    const int d = static_cast<int>(a.size()), n = static_cast<int>(a[0].size());
    if (names.empty())
      for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
    if (static_cast<int>(names.size()) != n)
      throw ParseError(keys["vars"].line, keys["vars"].col,
                       "vars lists " + std::to_string(names.size()) + " names but the matrix has " + std::to_string(n) + " columns");
    if (keys.count("beta") && blocks.count("beta_list"))
      throw ParseError(keys["beta"].line, 1, "give either 'beta = ...' or a beta_list: block, not both");
    if (keys.count("beta")) {
      auto& e = keys["beta"];
      auto b = detail::parse_rationals(e.value, e.line, e.col, "beta");
      if (static_cast<int>(b.size()) != d)
        throw ParseError(e.line, e.col, "beta has " + std::to_string(b.size()) + " entries, the matrix has " + std::to_string(d) + " rows");
      job.betas.push_back(std::move(b));
    }
    if (blocks.count("beta_list")) {
      auto& [bline, brows] = blocks["beta_list"];
      if (brows.empty()) throw ParseError(bline, 1, "beta_list: block has no rows");
      for (const auto& r : brows) {
        auto b = detail::parse_rationals(r.text, r.number, r.indent + 1, "beta_list");
        if (static_cast<int>(b.size()) != d)
          throw ParseError(r.number, r.indent + 1,
                           "beta has " + std::to_string(b.size()) + " entries, the matrix has " + std::to_string(d) + " rows");
        job.betas.push_back(std::move(b));
      }
      job.beta_is_list = true;
    }
    for (const char* k : {"rank", "shifts_F", "shifts_V", "allow_negative_shifts"})
      if (keys.count(k)) throw ParseError(keys[k].line, 1, std::string("'") + k + "' does not apply to a matrix problem");
  } else if (names.empty()) {
    throw ParseError(blocks["gens"].first, 1, "a gens: problem needs a 'vars = ...' line");
  }

  std::vector<bool> t(names.size(), true);
  if (keys.count("tblock")) {
    auto& e = keys["tblock"];
    job.tblock = e.value;
    auto toks = detail::split_ws(e.value);
    if (toks.empty()) throw ParseError(e.line, e.col, "tblock: expected 'origin', 'none' or variable names");
    if (toks.size() == 1 && toks[0] == "origin") {
    } else if (toks.size() == 1 && toks[0] == "none") {
      t.assign(names.size(), false);
    } else {
      t.assign(names.size(), false);
      for (const auto& tok : toks) {
        auto it = std::find(names.begin(), names.end(), tok);
        if (it == names.end()) throw ParseError(e.line, e.col, "tblock: unknown variable '" + tok + "'");
        t[it - names.begin()] = true;
      }
    }
  }
  try {
    job.vars = VarSpec(names, t);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(keys.count("vars") ? keys["vars"].line : job.matrix_line, 1, ex.what());
  }

  if (keys.count("order")) {
    job.order_spec = keys["order"].value;
    job.order = parse_order_spec(*job.order_spec, job.vars, keys["order"].line);
  }
  if (keys.count("allow_negative_shifts")) {
    const auto& v = keys["allow_negative_shifts"].value;
    if (v != "true" && v != "false")
      throw ParseError(keys["allow_negative_shifts"].line, keys["allow_negative_shifts"].col, "expected true or false");
    job.allow_negative_shifts = v == "true";
  }

  if (job.mode == Job::Mode::raw) {
    std::optional<int> rank;
    if (keys.count("rank")) {
      auto r = detail::parse_ints(keys["rank"].value, keys["rank"].line, keys["rank"].col, "rank");
      if (r.size() != 1 || r[0] < 1) throw ParseError(keys["rank"].line, keys["rank"].col, "rank must be one positive integer");
      rank = static_cast<int>(r[0]);
    }
    std::vector<long> sf, sv;
    if (keys.count("shifts_F")) sf = detail::parse_ints(keys["shifts_F"].value, keys["shifts_F"].line, keys["shifts_F"].col, "shifts_F");
    if (keys.count("shifts_V")) sv = detail::parse_ints(keys["shifts_V"].value, keys["shifts_V"].line, keys["shifts_V"].col, "shifts_V");
    if (!rank) rank = static_cast<int>(std::max<std::size_t>({1, sf.size(), sv.size()}));
    job.rank = *rank;
    if (sf.empty()) sf.assign(job.rank, 0);
    if (sv.empty()) sv.assign(job.rank, 0);
    for (auto [k, v] : {std::pair{"shifts_F", &sf}, std::pair{"shifts_V", &sv}})
      if (static_cast<int>(v->size()) != job.rank)
        throw ParseError(keys[k].line, keys[k].col,
                         std::string(k) + " has " + std::to_string(v->size()) + " entries, rank is " + std::to_string(job.rank));
    for (int c = 0; c < job.rank; ++c) job.shifts.push_back({static_cast<int>(sf[c]), static_cast<int>(sv[c])});

    for (const auto& r : blocks["gens"].second) {
      std::vector<WElement> g;
      if (r.text.find('[', r.indent) != std::string::npos) {
        for (const auto& [piece, col] : detail::split_vector(r.text, 1, r.number))
          g.push_back(parse_operator(piece, job.vars, {false, r.number, col}));
      } else {
        g.push_back(parse_operator(std::string_view(r.text).substr(r.indent), job.vars, {false, r.number, r.indent + 1}));
      }
      if (static_cast<int>(g.size()) != job.rank)
        throw ParseError(r.number, r.indent + 1,
                         "generator has " + std::to_string(g.size()) + " components, rank is " + std::to_string(job.rank));
      job.gens.push_back(std::move(g));
      job.gen_sources.push_back(r.text.substr(r.indent));
    }
  }
  return job;
}

}  // namespace dmdeg
