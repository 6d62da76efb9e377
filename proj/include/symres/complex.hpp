#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symres/matrix.hpp"

namespace symres {

/// Free complex F_0 <- F_1 <- ... <- F_L with d_i : F_i -> F_{i-1}.
/// A resolution of S/I has F_0 = S; a resolution of a module presented by
/// generators at position 1 uses a rank-0 F_0.
template <class Field>
class ChainComplex {
 public:
  ChainComplex() = default;

  ChainComplex(RingPtr<Field> ring, std::vector<GradedFreeModule> modules, std::vector<PolyMatrix<Field>> diffs)
      : ring_(std::move(ring)), modules_(std::move(modules)), diffs_(std::move(diffs)) {
    if (modules_.empty()) {
      if (!diffs_.empty()) throw Error("ChainComplex: differentials without modules");
      return;
    }
    if (diffs_.size() + 1 != modules_.size()) throw Error("ChainComplex: need one differential per positive position");
    for (std::size_t i = 1; i < modules_.size(); ++i) {
      const auto& d = diffs_[i - 1];
      if (!(d.source() == modules_[i]) || !(d.target() == modules_[i - 1])) {
        throw Error("ChainComplex: d_" + std::to_string(i) + " does not map F_" + std::to_string(i) + " -> F_" +
                    std::to_string(i - 1));
      }
    }
  }

  const RingPtr<Field>& ring() const { return ring_; }
  /// Number of stored positions (F_0 .. F_{size-1}).
  std::size_t size() const { return modules_.size(); }
  const GradedFreeModule& module(std::size_t i) const { return modules_.at(i); }
  const std::vector<GradedFreeModule>& modules() const { return modules_; }
  /// d_i : F_i -> F_{i-1}, i >= 1.
  const PolyMatrix<Field>& differential(std::size_t i) const { return diffs_.at(i - 1); }
  const std::vector<PolyMatrix<Field>>& differentials() const { return diffs_; }

  /// Largest i with F_i != 0 (0 for the zero complex).
  std::size_t length() const {
    for (std::size_t i = modules_.size(); i-- > 0;) {
      if (!modules_[i].empty()) return i;
    }
    return 0;
  }

  /// d_{i-1} ∘ d_i = 0 for every i.
  bool is_complex() const {
    for (std::size_t i = 2; i < modules_.size(); ++i) {
      if (!compose(differential(i - 1), differential(i)).is_zero()) return false;
    }
    return true;
  }

 private:
  RingPtr<Field> ring_;
  std::vector<GradedFreeModule> modules_;
  std::vector<PolyMatrix<Field>> diffs_;
};

/// Multiplicities of generator shifts per homological position i >= 1.
/// S(-a,-b) is recorded as (a,b).
class BettiTable {
 public:
  using Row = std::map<BiDegree, int>;

  void add(int position, BiDegree shift, int mult = 1) {
    if (mult <= 0) return;
    rows_[position][shift] += mult;
  }

  const std::map<int, Row>& positions() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  int total(int position) const {
    auto it = rows_.find(position);
    if (it == rows_.end()) return 0;
    int t = 0;
    for (const auto& [d, m] : it->second) t += m;
    return t;
  }

  int multiplicity(int position, BiDegree shift) const {
    auto it = rows_.find(position);
    if (it == rows_.end()) return 0;
    auto jt = it->second.find(shift);
    return jt == it->second.end() ? 0 : jt->second;
  }

  int max_position() const { return rows_.empty() ? 0 : rows_.rbegin()->first; }

  bool operator==(const BettiTable& o) const { return rows_ == o.rows_; }

  /// "1: S(-1,-1)^2 ; 2: S(-2,-2)^1". With `y_free`, R-style "R(-a)^m" is used.
  std::string to_string(bool y_free = false) const {
    std::ostringstream os;
    bool first_pos = true;
    for (const auto& [i, row] : rows_) {
      if (!first_pos) os << " ; ";
      first_pos = false;
      os << i << ":";
      bool first = true;
      for (const auto& [d, m] : row) {
        os << (first ? " " : " + ");
        first = false;
        if (y_free) {
          os << "R(" << -d.x << ")^" << m;
        } else {
          os << "S(" << -d.x << "," << -d.y << ")^" << m;
        }
      }
    }
    return os.str();
  }

  /// Inverse of to_string (both the S- and R-styles).
  static BettiTable parse(const std::string& text) {
    BettiTable t;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char ch) {
      skip_ws();
      if (pos >= text.size() || text[pos] != ch) {
        throw Error("BettiTable::parse: expected '" + std::string(1, ch) + "' at offset " + std::to_string(pos));
      }
      ++pos;
    };
    auto read_int = [&]() {
      skip_ws();
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
        throw Error("BettiTable::parse: expected integer at offset " + std::to_string(start));
      }
      return std::stoi(text.substr(start, pos - start));
    };
    skip_ws();
    while (pos < text.size()) {
      int i = read_int();
      expect(':');
      while (true) {
        skip_ws();
        if (pos >= text.size()) throw Error("BettiTable::parse: truncated input");
        char kind = text[pos++];
        if (kind != 'S' && kind != 'R') throw Error("BettiTable::parse: expected S(...) or R(...)");
        expect('(');
        int a = -read_int();
        int b = 0;
        skip_ws();
        if (kind == 'S') {
          expect(',');
          b = -read_int();
        }
        expect(')');
        expect('^');
        int m = read_int();
        t.add(i, {a, b}, m);
        skip_ws();
        if (pos < text.size() && text[pos] == '+') {
          ++pos;
          continue;
        }
        break;
      }
      skip_ws();
      if (pos < text.size()) expect(';');
      skip_ws();
    }
    return t;
  }

 private:
  std::map<int, Row> rows_;
};

/// Shift multiset of positions i >= 1.
template <class Field>
BettiTable betti_table(const ChainComplex<Field>& c) {
  BettiTable t;
  for (std::size_t i = 1; i < c.size(); ++i) {
    for (BiDegree d : c.module(i).shifts()) t.add(static_cast<int>(i), d);
  }
  return t;
}

}  // namespace symres
