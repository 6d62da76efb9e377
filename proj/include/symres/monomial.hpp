#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "symres/field.hpp"

namespace symres {

/// Upper bound on x- plus y-variables; S = k[x_0..x_n, y_0..y_n] needs 2(n+1).
inline constexpr std::size_t kMaxVariables = 16;

/// Bidegree (x-degree, y-degree). Also used for shifts: a basis element of
/// S(-a,-b) has bidegree (a,b).
struct BiDegree {
  int x = 0;
  int y = 0;

  constexpr int total() const { return x + y; }
  constexpr BiDegree operator+(BiDegree o) const { return {x + o.x, y + o.y}; }
  constexpr BiDegree operator-(BiDegree o) const { return {x - o.x, y - o.y}; }
  constexpr BiDegree operator-() const { return {-x, -y}; }
  constexpr auto operator<=>(const BiDegree&) const = default;

  std::string to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

/// Exponent vector with the x-variables in slots [0, nx) and the y-variables in
/// slots [nx, nx+ny). The partial degrees are cached; the layout split lives in
/// the Ring.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  /// Builds a monomial from x- and y-exponents.
  static Monomial from_exponents(std::span<const int> x, std::span<const int> y) {
    if (x.size() + y.size() > kMaxVariables) throw Error("Monomial: too many variables");
    Monomial m;
    std::size_t slot = 0;
    for (int e : x) {
      if (e < 0) throw Error("Monomial: negative exponent");
      m.exps_[slot++] = static_cast<Exponent>(e);
      m.xdeg_ += e;
    }
    for (int e : y) {
      if (e < 0) throw Error("Monomial: negative exponent");
      m.exps_[slot++] = static_cast<Exponent>(e);
      m.ydeg_ += e;
    }
    m.refresh_mask();
    return m;
  }

  /// The variable with slot index `var`, where slots >= nx are y-variables.
  static Monomial variable(std::size_t var, std::size_t nx, int power = 1) {
    Monomial m;
    m.exps_[var] = static_cast<Exponent>(power);
    (var < nx ? m.xdeg_ : m.ydeg_) = static_cast<std::uint16_t>(power);
    m.refresh_mask();
    return m;
  }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::array<Exponent, kMaxVariables>& exponents() const { return exps_; }
  int x_degree() const { return xdeg_; }
  int y_degree() const { return ydeg_; }
  int total_degree() const { return xdeg_ + ydeg_; }
  BiDegree bidegree() const { return {xdeg_, ydeg_}; }
  bool is_one() const { return xdeg_ == 0 && ydeg_ == 0; }
  std::uint32_t mask() const { return mask_; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] + o.exps_[i]);
    r.xdeg_ = static_cast<std::uint16_t>(xdeg_ + o.xdeg_);
    r.ydeg_ = static_cast<std::uint16_t>(ydeg_ + o.ydeg_);
    r.refresh_mask();
    return r;
  }

  bool divides(const Monomial& o) const {
    if ((mask_ & ~o.mask_) != 0 || xdeg_ > o.xdeg_ || ydeg_ > o.ydeg_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
  }

  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<Exponent>(o.exps_[i] - exps_[i]);
    r.xdeg_ = static_cast<std::uint16_t>(o.xdeg_ - xdeg_);
    r.ydeg_ = static_cast<std::uint16_t>(o.ydeg_ - ydeg_);
    r.refresh_mask();
    return r;
  }

  Monomial lcm(const Monomial& o, std::size_t nx) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
      (i < nx ? r.xdeg_ : r.ydeg_) = static_cast<std::uint16_t>((i < nx ? r.xdeg_ : r.ydeg_) + r.exps_[i]);
    }
    r.refresh_mask();
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    }
    return true;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  void refresh_mask() {
    // Two bits per slot: exponent >= 1 and exponent >= 2.
    mask_ = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] >= 1) mask_ |= 1u << (2 * i);
      if (exps_[i] >= 2) mask_ |= 1u << (2 * i + 1);
    }
  }

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint16_t xdeg_ = 0;
  std::uint16_t ydeg_ = 0;
  std::uint32_t mask_ = 0;
};

/// Global monomial orders on S.
enum class TermOrder {
  /// Graded reverse lexicographic on all variables, x_0 > ... > x_n > y_0 > ... > y_n.
  GrevlexAll,
  /// Block order: y-block dominates, grevlex within each block.
  Block,
  /// Pure lexicographic, x_0 > ... > y_n.
  Lex,
};

inline std::string to_string(TermOrder o) {
  switch (o) {
    case TermOrder::GrevlexAll: return "grevlex";
    case TermOrder::Block: return "block";
    case TermOrder::Lex: return "lex";
  }
  return "?";
}

namespace detail {

inline int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, int da, int db) {
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace detail

/// Three-way comparison of monomials under `order`; positive means a > b.
inline int compare_monomials(TermOrder order, const Monomial& a, const Monomial& b, std::size_t nx,
                             std::size_t nvars) {
  switch (order) {
    case TermOrder::GrevlexAll:
      return detail::grevlex_range(a, b, 0, nvars, a.total_degree(), b.total_degree());
    case TermOrder::Block: {
      int c = detail::grevlex_range(a, b, nx, nvars, a.y_degree(), b.y_degree());
      if (c != 0) return c;
      return detail::grevlex_range(a, b, 0, nx, a.x_degree(), b.x_degree());
    }
    case TermOrder::Lex:
      for (std::size_t i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
  }
  return 0;
}

}  // namespace symres

template <>
struct std::hash<symres::Monomial> {
  std::size_t operator()(const symres::Monomial& m) const noexcept { return m.hash(); }
};
