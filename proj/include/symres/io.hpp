#pragma once

// Text format for input ideals:
//
//   field 32003          # or QQ; optional, default 32003
//   ring x0 x1 x2        # the x-variables; y0..yn are implicit
//   ideal x0*x1, x0*x2,
//         x1*x2
//
// Generators are separated by commas or newlines and use + - * ^, integer
// literals and parentheses. '#' starts a comment.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symres/verify.hpp"

namespace symres {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

/// Polynomial with integer coefficients keyed by exponent vectors.
using IntegerPolynomial = std::map<std::vector<int>, mpz_class>;

struct ParsedGenerator {
  IntegerPolynomial poly;
  std::size_t line = 0;
  std::size_t col = 0;
  std::string text;
};

struct FieldSpec {
  /// 0 for QQ.
  std::uint32_t characteristic = 32003;
  bool rational() const { return characteristic == 0; }
  std::string name() const { return rational() ? "QQ" : std::to_string(characteristic); }

  static FieldSpec parse(const std::string& s) {
    FieldSpec f;
    if (s == "QQ" || s == "Q" || s == "0") {
      f.characteristic = 0;
      return f;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (...) {
      throw Error("unsupported field '" + s + "' (expected a prime or QQ)");
    }
    if (used != s.size() || v >= (1ul << 31)) throw Error("unsupported field '" + s + "' (expected a prime below 2^31 or QQ)");
    f.characteristic = static_cast<std::uint32_t>(v);
    PrimeField check(f.characteristic);
    (void)check;
    return f;
  }
};

struct IdealFile {
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<ParsedGenerator> generators;
  int eta = 0;
};

namespace detail {

inline IntegerPolynomial ipoly_add(IntegerPolynomial a, const IntegerPolynomial& b, int sign = 1) {
  for (const auto& [e, c] : b) {
    auto& v = a[e];
    v += sign * c;
    if (v == 0) a.erase(e);
  }
  return a;
}

inline IntegerPolynomial ipoly_mul(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  IntegerPolynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& v = out[e];
      v += ca * cb;
      if (v == 0) out.erase(e);
    }
  }
  return out;
}

class ExprParser {
 public:
  ExprParser(const std::string& text, std::size_t line, std::size_t col0, const std::vector<std::string>& vars)
      : s_(text), line_(line), col0_(col0), vars_(vars) {}

  IntegerPolynomial parse() {
    auto p = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col0_ + pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  IntegerPolynomial constant(const mpz_class& c) const {
    IntegerPolynomial p;
    if (c != 0) p[std::vector<int>(vars_.size(), 0)] = c;
    return p;
  }

  IntegerPolynomial expr() {
    skip();
    IntegerPolynomial acc = term();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        int sign = s_[pos_] == '+' ? 1 : -1;
        ++pos_;
        acc = ipoly_add(std::move(acc), term(), sign);
      } else {
        return acc;
      }
    }
  }

  IntegerPolynomial term() {
    IntegerPolynomial acc = unary();
    while (true) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = ipoly_mul(acc, unary());
      } else {
        return acc;
      }
    }
  }

  IntegerPolynomial power() {
    IntegerPolynomial base = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      int e = std::stoi(s_.substr(start, pos_ - start));
      IntegerPolynomial r = constant(1);
      for (int i = 0; i < e; ++i) r = ipoly_mul(r, base);
      return r;
    }
    return base;
  }

  IntegerPolynomial unary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return ipoly_add({}, unary(), -1);
    }
    if (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  IntegerPolynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(mpz_class(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          IntegerPolynomial p;
          std::vector<int> e(vars_.size(), 0);
          e[i] = 1;
          p[e] = 1;
          return p;
        }
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
  const std::vector<std::string>& vars_;
};

inline std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

inline bool blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses an ideal file and enforces the input shape (n+1 generators in n+1
/// variables, all homogeneous of one degree η >= 2) with line-precise errors.
inline IdealFile parse_ideal(std::istream& in) {
  IdealFile f;
  bool have_ring = false, in_ideal = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::size_t col = line.find_first_not_of(" \t\r");
    std::string rest = line.substr(col);
    auto word_end = rest.find_first_of(" \t\r");
    std::string word = rest.substr(0, word_end);
    std::string after = word_end == std::string::npos ? "" : rest.substr(word_end);
    std::size_t after_col = col + (word_end == std::string::npos ? rest.size() : word_end);

    if (!in_ideal && word == "field") {
      std::istringstream ws(after);
      std::string v, extra;
      ws >> v >> extra;
      if (v.empty() || !extra.empty()) throw ParseError(lineno, col + 1, "expected 'field <p|QQ>'");
      try {
        f.field = FieldSpec::parse(v);
      } catch (const Error& e) {
        throw ParseError(lineno, col + 1, e.what());
      }
      continue;
    }
    if (!in_ideal && word == "ring") {
      std::istringstream ws(after);
      std::string v;
      while (ws >> v) {
        for (char ch : v) {
          if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
            throw ParseError(lineno, col + 1, "invalid variable name '" + v + "'");
          }
        }
        if (!std::isalpha(static_cast<unsigned char>(v[0]))) throw ParseError(lineno, col + 1, "invalid variable name '" + v + "'");
        if (v.size() >= 2 && v[0] == 'y' && std::isdigit(static_cast<unsigned char>(v[1]))) {
          throw ParseError(lineno, col + 1, "names y<i> are reserved for the implicit y-variables");
        }
        f.variables.push_back(v);
      }
      if (f.variables.size() < 2) throw ParseError(lineno, col + 1, "ring needs at least two variables");
      if (f.variables.size() * 2 > kMaxVariables) {
        throw ParseError(lineno, col + 1, "at most " + std::to_string(kMaxVariables / 2) + " variables are supported");
      }
      have_ring = true;
      continue;
    }
    std::string body;
    std::size_t body_col;
    if (!in_ideal && word == "ideal") {
      if (!have_ring) throw ParseError(lineno, col + 1, "'ideal' before 'ring'");
      in_ideal = true;
      body = after;
      body_col = after_col;
    } else if (in_ideal) {
      body = line;
      body_col = 0;
    } else {
      throw ParseError(lineno, col + 1, "expected 'field', 'ring' or 'ideal', got '" + word + "'");
    }
    // Split on commas outside parentheses.
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      char ch = i < body.size() ? body[i] : ',';
      if (ch == '(') ++depth;
      if (ch == ')' && --depth < 0) throw ParseError(lineno, body_col + i + 1, "unexpected ')'");
      if (i == body.size() && depth > 0) throw ParseError(lineno, body_col + i + 1, "expected ')'");
      if (ch != ',' || depth > 0) continue;
      std::string piece = body.substr(start, i - start);
      if (!detail::blank(piece)) {
        std::size_t lead = piece.find_first_not_of(" \t\r");
        ParsedGenerator g;
        g.line = lineno;
        g.col = body_col + start + lead + 1;
        g.text = piece.substr(lead);
        g.poly = detail::ExprParser(g.text, lineno, g.col, f.variables).parse();
        f.generators.push_back(std::move(g));
      } else if (i < body.size()) {
        throw ParseError(lineno, body_col + i + 1, "empty generator");
      }
      start = i + 1;
    }
  }
  if (!have_ring) throw ParseError(lineno + 1, 1, "missing 'ring' line");
  if (!in_ideal) throw ParseError(lineno + 1, 1, "missing 'ideal' section");
  if (f.generators.size() != f.variables.size()) {
    throw ParseError(lineno + 1, 1,
                     "expected " + std::to_string(f.variables.size()) + " generators (one per variable), got " +
                         std::to_string(f.generators.size()));
  }
  std::optional<int> eta;
  std::size_t eta_line = 0;
  for (const auto& g : f.generators) {
    if (g.poly.empty()) throw ParseError(g.line, g.col, "generator is zero");
    std::optional<int> deg;
    for (const auto& [e, c] : g.poly) {
      int d = 0;
      for (int x : e) d += x;
      if (deg && *deg != d) throw ParseError(g.line, g.col, "generator is not homogeneous");
      deg = d;
    }
    if (eta && *eta != *deg) {
      throw ParseError(g.line, g.col,
                       "generators must be equigenerated: degree " + std::to_string(*deg) + " here, degree " +
                           std::to_string(*eta) + " on line " + std::to_string(eta_line));
    }
    if (!eta) eta_line = g.line;
    eta = deg;
  }
  if (*eta < 2) throw ParseError(f.generators.front().line, f.generators.front().col, "generator degree must be at least 2");
  f.eta = *eta;
  return f;
}

inline IdealFile parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

inline PrimeField::Element field_from_integer(const PrimeField& k, const mpz_class& c) {
  mpz_class r = c % k.characteristic();
  if (r < 0) r += k.characteristic();
  return static_cast<PrimeField::Element>(r.get_ui());
}

inline RationalField::Element field_from_integer(const RationalField&, const mpz_class& c) { return mpq_class(c); }

/// The parsed ideal as an InputIdeal over `field`.
template <class Field>
InputIdeal<Field> to_input_ideal(const IdealFile& f, const Field& field) {
  auto r = make_ring<Field>(field, f.variables.size(), 0, TermOrder::GrevlexAll, f.variables);
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : f.generators) {
    std::vector<typename Polynomial<Field>::Term> terms;
    for (const auto& [e, c] : g.poly) {
      auto v = field_from_integer(field, c);
      if (field.is_zero(v)) continue;
      terms.push_back({Monomial::from_exponents(std::span<const int>(e), {}), v});
    }
    gens.emplace_back(r, std::move(terms));
  }
  return make_input_ideal(r, std::move(gens));
}

/// Writes an integer ideal in the input format.
inline std::string format_ideal(const IntegerIdeal& z, const std::string& field = "32003") {
  std::ostringstream os;
  os << "field " << field << "\nring";
  for (int i = 0; i <= z.n; ++i) os << " x" << i;
  os << "\nideal\n";
  for (std::size_t g = 0; g < z.generators.size(); ++g) {
    os << "  ";
    bool first = true;
    for (const auto& [e, c] : z.generators[g]) {
      std::int64_t a = c < 0 ? -c : c;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
      }
      if (mono.empty()) {
        os << a;
      } else if (a == 1) {
        os << mono;
      } else {
        os << a << "*" << mono;
      }
    }
    os << (g + 1 < z.generators.size() ? ",\n" : "\n");
  }
  return os.str();
}

}  // namespace symres
