#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symres/ring.hpp"

namespace symres {

/// Sparse polynomial over a Ring. Terms are kept strictly decreasing in the
/// ring's term order with no zero coefficients. A default-constructed
/// polynomial is the zero of an unspecified ring and adopts the ring of the
/// other operand in arithmetic.
template <class Field>
class Polynomial {
 public:
  using Element = typename Field::Element;
  struct Term {
    Monomial mono;
    Element coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<Field> ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr<Field> ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial constant(RingPtr<Field> ring, const Element& c) {
    return Polynomial(std::move(ring), {Term{Monomial{}, c}});
  }
  static Polynomial integer(RingPtr<Field> ring, std::int64_t c) {
    Element e = ring->field().from_int(c);
    return constant(std::move(ring), e);
  }
  static Polynomial monomial(RingPtr<Field> ring, const Monomial& m, const Element& c) {
    return Polynomial(std::move(ring), {Term{m, c}});
  }
  static Polynomial variable(RingPtr<Field> ring, std::size_t slot) {
    Monomial m = ring->variable(slot);
    Element one = ring->field().one();
    return monomial(std::move(ring), m, one);
  }
  /// x_i for i < nx.
  static Polynomial x(RingPtr<Field> ring, std::size_t i) { return variable(std::move(ring), i); }
  /// y_i, i.e. slot nx + i.
  static Polynomial y(RingPtr<Field> ring, std::size_t i) {
    std::size_t slot = ring->num_x() + i;
    return variable(std::move(ring), slot);
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Element& lead_coefficient() const { return terms_.front().coeff; }

  /// Bidegree if nonzero and bihomogeneous.
  std::optional<BiDegree> bidegree() const {
    if (terms_.empty()) return std::nullopt;
    BiDegree d = terms_.front().mono.bidegree();
    for (const Term& t : terms_) {
      if (t.mono.bidegree() != d) return std::nullopt;
    }
    return d;
  }
  bool is_bihomogeneous() const { return terms_.empty() || bidegree().has_value(); }

  int max_y_degree() const {
    int m = 0;
    for (const Term& t : terms_) m = std::max(m, t.mono.y_degree());
    return m;
  }

  /// Nonzero constant, i.e. a unit of the ring.
  bool is_unit() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
    return r;
  }

  Polynomial scaled(const Element& c) const {
    if (!ring_) return *this;
    const Field& k = ring_->field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = k.mul(t.coeff, c);
    return r;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  /// Same polynomial viewed in another ring with the same field and x-layout
  /// (e.g. R -> S, or a change of term order).
  Polynomial in_ring(const RingPtr<Field>& target) const {
    if (ring_ && (ring_->num_x() != target->num_x() || !(ring_->field() == target->field()))) {
      throw Error("Polynomial::in_ring: incompatible rings");
    }
    if (ring_) {
      for (const Term& t : terms_) {
        for (std::size_t i = target->num_vars(); i < kMaxVariables; ++i) {
          if (t.mono[i] != 0) throw Error("Polynomial::in_ring: variable not present in target ring");
        }
      }
    }
    return Polynomial(target, terms_);
  }

  /// Substitutes field values for every variable (slot order).
  Element evaluate(std::span<const Element> point) const {
    const Field& k = ring_->field();
    Element acc = k.zero();
    for (const Term& t : terms_) {
      Element v = t.coeff;
      for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
        for (int e = 0; e < t.mono[i]; ++e) v = k.mul(v, point[i]);
      }
      acc = k.add(acc, v);
    }
    return acc;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const Field& k = ring_->field();
    for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
      const Term& t = terms_[idx];
      std::string c = k.to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (idx == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t v = 0; v < ring_->num_vars(); ++v) {
        if (t.mono[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->variable_name(v);
        if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
      }
      if (mono.empty()) {
        out += c;
      } else if (c == "1") {
        out += mono;
      } else {
        out += c + "*" + mono;
      }
    }
    return out;
  }

 private:
  template <class F>
  friend Polynomial<F> add(const Polynomial<F>&, const Polynomial<F>&);
  template <class F>
  friend Polynomial<F> mul(const Polynomial<F>&, const Polynomial<F>&);

  void normalize() {
    if (!ring_) {
      if (!terms_.empty()) throw Error("Polynomial: terms without a ring");
      return;
    }
    const Ring<Field>& r = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
    const Field& k = r.field();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = k.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr<Field> ring_;
  std::vector<Term> terms_;
};

namespace detail {

template <class Field>
const RingPtr<Field>& common_ring(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  if (!p.ring()) return q.ring();
  if (!q.ring()) return p.ring();
  if (p.ring() != q.ring() && !p.ring()->same_as(*q.ring())) throw Error("polynomial arithmetic: ring mismatch");
  return p.ring();
}

}  // namespace detail

template <class Field>
Polynomial<Field> add(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  const RingPtr<Field>& ring = detail::common_ring(p, q);
  if (p.is_zero()) return q.ring() ? q : Polynomial<Field>(ring);
  if (q.is_zero()) return p;
  const Ring<Field>& r = *ring;
  const Field& k = r.field();
  using Term = typename Polynomial<Field>::Term;
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto a = p.terms().begin(), ae = p.terms().end();
  auto b = q.terms().begin(), be = q.terms().end();
  while (a != ae && b != be) {
    int c = r.compare(a->mono, b->mono);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      auto s = k.add(a->coeff, b->coeff);
      if (!k.is_zero(s)) out.push_back(Term{a->mono, s});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  Polynomial<Field> res(ring);
  res.terms_ = std::move(out);
  return res;
}

template <class Field>
Polynomial<Field> sub(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  return add(p, -q);
}

template <class Field>
Polynomial<Field> mul(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  const RingPtr<Field>& ring = detail::common_ring(p, q);
  if (p.is_zero() || q.is_zero()) return Polynomial<Field>(ring);
  const Field& k = ring->field();
  using Term = typename Polynomial<Field>::Term;
  std::vector<Term> prod;
  prod.reserve(p.size() * q.size());
  for (const Term& a : p.terms()) {
    for (const Term& b : q.terms()) prod.push_back(Term{a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  }
  return Polynomial<Field>(ring, std::move(prod));
}

template <class Field>
Polynomial<Field> operator+(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  return add(p, q);
}
template <class Field>
Polynomial<Field> operator-(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  return sub(p, q);
}
template <class Field>
Polynomial<Field> operator*(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  return mul(p, q);
}

}  // namespace symres
