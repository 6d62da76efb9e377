#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "symres/resolution.hpp"

namespace symres {

/// Bigraded Hilbert series N(s,t) / ((1-s)^nx (1-t)^ny). The numerator is a
/// Laurent polynomial with integer coefficients; the exponent of s is the
/// x-degree and the exponent of t the y-degree.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {}

  std::size_t num_x() const { return nx_; }
  std::size_t num_y() const { return ny_; }
  const std::map<BiDegree, std::int64_t>& numerator() const { return num_; }

  void add_term(BiDegree d, std::int64_t c) {
    if (c == 0) return;
    auto& v = num_[d];
    v += c;
    if (v == 0) num_.erase(d);
  }

  HilbertSeries shifted(BiDegree d) const {
    HilbertSeries out(nx_, ny_);
    for (const auto& [e, c] : num_) out.add_term(e + d, c);
    return out;
  }

  HilbertSeries operator-(const HilbertSeries& o) const {
    check_compatible(o);
    HilbertSeries out = *this;
    for (const auto& [e, c] : o.num_) out.add_term(e, -c);
    return out;
  }
  HilbertSeries operator+(const HilbertSeries& o) const {
    check_compatible(o);
    HilbertSeries out = *this;
    for (const auto& [e, c] : o.num_) out.add_term(e, c);
    return out;
  }

  /// Same series viewed over more variables: multiplies the numerator by
  /// (1-s)^(nx'-nx) (1-t)^(ny'-ny).
  HilbertSeries over(std::size_t nx, std::size_t ny) const {
    if (nx < nx_ || ny < ny_) throw Error("HilbertSeries::over: cannot remove denominator factors");
    HilbertSeries out = *this;
    for (std::size_t i = nx_; i < nx; ++i) out = out.times_one_minus({1, 0});
    for (std::size_t i = ny_; i < ny; ++i) out = out.times_one_minus({0, 1});
    out.nx_ = nx;
    out.ny_ = ny;
    return out;
  }

  bool is_zero() const { return num_.empty(); }
  bool operator==(const HilbertSeries& o) const { return nx_ == o.nx_ && ny_ == o.ny_ && num_ == o.num_; }

  /// dim_k of the (d, e) piece.
  std::int64_t coefficient(BiDegree d) const {
    std::int64_t total = 0;
    for (const auto& [e, c] : num_) total += c * count_monomials(nx_, d.x - e.x) * count_monomials(ny_, d.y - e.y);
    return total;
  }

  /// Number of monomials of degree m in k variables.
  static std::int64_t count_monomials(std::size_t k, int m) {
    if (m < 0) return 0;
    if (k == 0) return m == 0 ? 1 : 0;
    // C(m + k - 1, k - 1)
    std::int64_t r = 1;
    for (std::size_t i = 1; i < k; ++i) r = r * (m + static_cast<std::int64_t>(i)) / static_cast<std::int64_t>(i);
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : num_) {
      os << (first ? "" : (c < 0 ? " - " : " + "));
      if (first && c < 0) os << "-";
      first = false;
      std::int64_t a = c < 0 ? -c : c;
      bool mono = e.x != 0 || e.y != 0;
      if (a != 1 || !mono) os << a;
      if (e.x != 0) os << "s" << (e.x != 1 ? "^" + std::to_string(e.x) : "");
      if (e.y != 0) os << "t" << (e.y != 1 ? "^" + std::to_string(e.y) : "");
    }
    if (first) os << "0";
    std::string den = "(1-s)^" + std::to_string(nx_);
    if (ny_) den += " (1-t)^" + std::to_string(ny_);
    std::string out = os.str();
    if (num_.size() > 1) out = "(" + out + ")";
    return out + " / (" + den + ")";
  }

 private:
  HilbertSeries times_one_minus(BiDegree d) const {
    HilbertSeries out(nx_, ny_);
    for (const auto& [e, c] : num_) {
      out.add_term(e, c);
      out.add_term(e + d, -c);
    }
    return out;
  }

  void check_compatible(const HilbertSeries& o) const {
    if (nx_ != o.nx_ || ny_ != o.ny_) throw Error("HilbertSeries: denominators differ");
  }

  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  std::map<BiDegree, std::int64_t> num_;
};

/// Alternating sum of the shifts of a free complex: Σ (-1)^i Σ s^a t^b.
template <class Field>
HilbertSeries hilbert_series(const ChainComplex<Field>& c) {
  const auto& ring = c.ring();
  HilbertSeries hs(ring->num_x(), ring->num_y());
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t sign = i % 2 == 0 ? 1 : -1;
    for (BiDegree d : c.module(i).shifts()) hs.add_term(d, sign);
  }
  return hs;
}

/// Hilbert series of coker(A), from its free resolution.
template <class Field>
HilbertSeries hilbert_series(const PolyMatrix<Field>& a) {
  return hilbert_series(resolve_cokernel(a).complex);
}

/// Hilbert series of ring/I.
template <class Field>
HilbertSeries hilbert_series(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens) {
  return hilbert_series(resolve_quotient(ring, gens).complex);
}

/// Hilbert series of a graded free module.
inline HilbertSeries hilbert_series(const GradedFreeModule& m, std::size_t nx, std::size_t ny) {
  HilbertSeries hs(nx, ny);
  for (BiDegree d : m.shifts()) hs.add_term(d, 1);
  return hs;
}

namespace detail {

/// Visits every exponent vector of total degree m in slots [lo, lo + k).
inline void for_each_monomial(std::size_t lo, std::size_t k, int m, std::vector<int>& exps, std::size_t pos,
                              const std::function<void()>& f) {
  if (pos + 1 == k) {
    exps[lo + pos] = m;
    f();
    exps[lo + pos] = 0;
    return;
  }
  for (int e = m; e >= 0; --e) {
    exps[lo + pos] = e;
    for_each_monomial(lo, k, m - e, exps, pos + 1, f);
  }
  exps[lo + pos] = 0;
}

/// Standard monomials of bidegree d in one component, given that component's lead monomials.
inline std::int64_t count_standard(std::size_t nx, std::size_t ny, BiDegree d, const std::vector<Monomial>& leads) {
  if (d.x < 0 || d.y < 0) return 0;
  if ((nx == 0 && d.x != 0) || (ny == 0 && d.y != 0)) return 0;
  std::vector<int> exps(nx + ny, 0);
  std::int64_t count = 0;
  auto visit_y = [&]() {
    Monomial m = Monomial::from_exponents(std::span<const int>(exps.data(), nx),
                                          std::span<const int>(exps.data() + nx, ny));
    for (const auto& l : leads) {
      if (l.divides(m)) return;
    }
    ++count;
  };
  auto visit_x = [&]() {
    if (ny == 0) {
      visit_y();
    } else {
      for_each_monomial(nx, ny, d.y, exps, 0, visit_y);
    }
  };
  if (nx == 0) {
    visit_x();
  } else {
    for_each_monomial(0, nx, d.x, exps, 0, visit_x);
  }
  return count;
}

}  // namespace detail

/// dim_k of the bidegree-d piece of coker(A), by counting monomials outside
/// the lead-term module of a Gröbner basis of im(A).
template <class Field>
std::int64_t hilbert_function_piece(const PolyMatrix<Field>& a, BiDegree d) {
  const auto& ring = a.ring();
  auto g = buchberger(a);
  detail::ModuleOrder ord(ring->order(), ring->num_x(), ring->num_vars(), static_cast<std::uint32_t>(a.rows()));
  detail::VecOps<Field> ops(ring->field(), ord);
  std::vector<std::vector<Monomial>> leads(a.rows());
  for (const auto& e : g.elements()) {
    auto v = detail::to_vec(e);
    ops.sort_and_combine(v);
    leads[v.front().comp].push_back(v.front().mono);
  }
  std::int64_t total = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    total += detail::count_standard(ring->num_x(), ring->num_y(), d - a.target().shift(r), leads[r]);
  }
  return total;
}

/// dim_k (ring/I)_d.
template <class Field>
std::int64_t hilbert_function_piece(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens, BiDegree d) {
  std::vector<Polynomial<Field>> nz;
  for (const auto& g : gens) {
    if (!g.is_zero()) nz.push_back(g);
  }
  PolyMatrix<Field> a = nz.empty() ? PolyMatrix<Field>(ring, GradedFreeModule::repeated(1, {}), GradedFreeModule{})
                                   : PolyMatrix<Field>::row(ring, nz);
  return hilbert_function_piece(a, d);
}

}  // namespace symres
