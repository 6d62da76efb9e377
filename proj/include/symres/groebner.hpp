#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symres/detail/engine.hpp"
#include "symres/matrix.hpp"

namespace symres {

/// Reduced Gröbner basis of a submodule of a graded free module (an ideal when
/// the ambient module has rank 1). Elements are column vectors sorted by
/// increasing lead term, each with lead coefficient 1.
template <class Field>
class GroebnerBasis {
 public:
  using Poly = Polynomial<Field>;
  using Column = std::vector<Poly>;

  GroebnerBasis() = default;
  GroebnerBasis(RingPtr<Field> ring, GradedFreeModule ambient, std::vector<Column> elements)
      : ring_(std::move(ring)), ambient_(std::move(ambient)), elements_(std::move(elements)) {}

  const RingPtr<Field>& ring() const { return ring_; }
  const GradedFreeModule& ambient() const { return ambient_; }
  const std::vector<Column>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  /// For ideals: the basis polynomials.
  std::vector<Poly> polynomials() const {
    std::vector<Poly> out;
    for (const auto& e : elements_) out.push_back(e.at(0));
    return out;
  }

  /// True iff the submodule is the whole ambient module's first component
  /// and the ambient has rank 1, i.e. the ideal is (1).
  bool is_unit_ideal() const {
    if (ambient_.rank() != 1) return false;
    for (const auto& e : elements_) {
      if (e[0].is_unit()) return true;
    }
    return false;
  }

  bool operator==(const GroebnerBasis& o) const {
    return ambient_ == o.ambient_ && elements_ == o.elements_;
  }

 private:
  RingPtr<Field> ring_;
  GradedFreeModule ambient_;
  std::vector<Column> elements_;
};

namespace detail {

inline std::vector<int> total_shifts(const GradedFreeModule& m) {
  std::vector<int> out;
  for (BiDegree d : m.shifts()) out.push_back(d.total());
  return out;
}

template <class Field>
Vec<Field> to_vec(const std::vector<Polynomial<Field>>& column, std::uint32_t offset = 0) {
  Vec<Field> v;
  for (std::size_t r = 0; r < column.size(); ++r) {
    for (const auto& t : column[r].terms()) v.push_back(VecTerm<Field>{t.mono, static_cast<std::uint32_t>(r) + offset, t.coeff});
  }
  return v;
}

/// Entries of components [offset, offset + rank) as a column.
template <class Field>
std::vector<Polynomial<Field>> from_vec(const RingPtr<Field>& ring, const Vec<Field>& v, std::size_t rank,
                                        std::uint32_t offset = 0) {
  using Term = typename Polynomial<Field>::Term;
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp >= offset + rank) continue;
    parts[t.comp - offset].push_back(Term{t.mono, t.coeff});
  }
  std::vector<Polynomial<Field>> out;
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

template <class Field>
void check_column(const RingPtr<Field>& ring, const GradedFreeModule& ambient, const std::vector<Polynomial<Field>>& col) {
  if (col.size() != ambient.rank()) throw Error("Groebner: element length does not match the ambient rank");
  for (const auto& p : col) {
    if (p.ring() && p.ring() != ring && !p.ring()->same_as(*ring)) throw Error("Groebner: ring mismatch");
  }
}

/// Full reduction against a fixed list of monic vectors.
template <class Field>
Vec<Field> reduce_fully(const VecOps<Field>& ops, Vec<Field> cur, const std::vector<Vec<Field>>& gens,
                        const std::vector<std::vector<std::size_t>>& index) {
  const Field& k = ops.field();
  Vec<Field> rem;
  std::size_t start = 0;
  while (start < cur.size()) {
    const auto& lead = cur[start];
    const Vec<Field>* red = nullptr;
    for (std::size_t idx : index[lead.comp]) {
      if (gens[idx].front().mono.divides(lead.mono)) {
        red = &gens[idx];
        break;
      }
    }
    if (!red) {
      rem.push_back(lead);
      ++start;
      continue;
    }
    Monomial q = red->front().mono.quotient_of(lead.mono);
    auto c = k.neg(k.div(lead.coeff, red->front().coeff));
    cur = ops.axpy(std::span<const VecTerm<Field>>(cur).subspan(start), c, q, *red);
    start = 0;
  }
  return rem;
}

}  // namespace detail

/// Reduced Gröbner basis of the submodule generated by `gens` inside `ambient`.
/// Uses the ring's term order, extended term-over-position to vectors.
template <class Field>
GroebnerBasis<Field> buchberger(const RingPtr<Field>& ring, const GradedFreeModule& ambient,
                                const std::vector<std::vector<Polynomial<Field>>>& gens) {
  using Opts = typename detail::BuchbergerEngine<Field>::Options;
  Opts opts;
  opts.split = static_cast<std::uint32_t>(ambient.rank());
  opts.product_criterion = ambient.rank() == 1;
  detail::BuchbergerEngine<Field> eng(ring->field(), ring->order(), ring->num_x(), ring->num_vars(),
                                      detail::total_shifts(ambient), opts);
  for (const auto& g : gens) {
    detail::check_column(ring, ambient, g);
    eng.add_input(detail::to_vec(g));
  }
  eng.run();
  std::vector<std::vector<Polynomial<Field>>> elems;
  for (const auto& v : eng.reduced_basis()) elems.push_back(detail::from_vec(ring, v, ambient.rank()));
  return GroebnerBasis<Field>(ring, ambient, std::move(elems));
}

/// Gröbner basis of an ideal of `ring`.
template <class Field>
GroebnerBasis<Field> buchberger(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens) {
  std::vector<std::vector<Polynomial<Field>>> cols;
  for (const auto& g : gens) cols.push_back({g});
  return buchberger(ring, GradedFreeModule::repeated(1, {}), cols);
}

/// Gröbner basis of the column span of a matrix.
template <class Field>
GroebnerBasis<Field> buchberger(const PolyMatrix<Field>& m) {
  return buchberger(m.ring(), m.target(), m.columns());
}

/// Remainder of `f` modulo G: no term is divisible by a lead term of G.
template <class Field>
std::vector<Polynomial<Field>> normal_form(const std::vector<Polynomial<Field>>& f, const GroebnerBasis<Field>& g) {
  const auto& ring = g.ring();
  detail::check_column(ring, g.ambient(), f);
  auto split = static_cast<std::uint32_t>(g.ambient().rank());
  detail::ModuleOrder ord(ring->order(), ring->num_x(), ring->num_vars(), split);
  detail::VecOps<Field> ops(ring->field(), ord);
  std::vector<detail::Vec<Field>> gens;
  std::vector<std::vector<std::size_t>> index(split);
  for (const auto& e : g.elements()) {
    auto v = detail::to_vec(e);
    ops.sort_and_combine(v);
    if (v.empty()) continue;
    index[v.front().comp].push_back(gens.size());
    gens.push_back(std::move(v));
  }
  auto v = detail::to_vec(f);
  ops.sort_and_combine(v);
  return detail::from_vec(ring, detail::reduce_fully(ops, std::move(v), gens, index), split);
}

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const GroebnerBasis<Field>& g) {
  return normal_form(std::vector<Polynomial<Field>>{f}, g).at(0);
}

template <class Field>
bool contains(const GroebnerBasis<Field>& g, const std::vector<Polynomial<Field>>& f) {
  for (const auto& p : normal_form(f, g)) {
    if (!p.is_zero()) return false;
  }
  return true;
}

template <class Field>
bool contains(const GroebnerBasis<Field>& g, const Polynomial<Field>& f) {
  return normal_form(f, g).is_zero();
}

/// Two ideals generate the same ideal (compared through reduced Gröbner bases).
template <class Field>
bool same_ideal(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& a,
                const std::vector<Polynomial<Field>>& b) {
  return buchberger(ring, a) == buchberger(ring, b);
}

/// Indices of a minimal generating subset of the columns (homogeneous input),
/// chosen degree by degree in column order.
template <class Field>
std::vector<std::size_t> minimal_generator_indices(const PolyMatrix<Field>& m) {
  using Opts = typename detail::BuchbergerEngine<Field>::Options;
  const auto& ring = m.ring();
  Opts opts;
  opts.split = static_cast<std::uint32_t>(m.rows());
  opts.product_criterion = m.rows() == 1;
  detail::BuchbergerEngine<Field> eng(ring->field(), ring->order(), ring->num_x(), ring->num_vars(),
                                      detail::total_shifts(m.target()), opts);
  for (std::size_t c = 0; c < m.cols(); ++c) eng.add_input(detail::to_vec(m.column(c)));
  eng.run();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (eng.input_is_minimal(c)) out.push_back(c);
  }
  return out;
}

/// The matrix restricted to a minimal generating subset of its columns.
template <class Field>
PolyMatrix<Field> prune_columns(const PolyMatrix<Field>& m) {
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
  auto cols = minimal_generator_indices(m);
  return m.submatrix(rows, cols);
}

/// A minimal generating subset of an ideal's generators.
template <class Field>
std::vector<Polynomial<Field>> minimal_generators(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens) {
  std::vector<Polynomial<Field>> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return {};
  auto row = PolyMatrix<Field>::row(ring, nonzero);
  std::vector<Polynomial<Field>> out;
  for (std::size_t c : minimal_generator_indices(row)) out.push_back(nonzero[c]);
  return out;
}

/// Minimal homogeneous generators of ker(M), as the columns of a matrix M.source <- G.
template <class Field>
PolyMatrix<Field> syzygy_matrix(const PolyMatrix<Field>& m) {
  using Opts = typename detail::BuchbergerEngine<Field>::Options;
  const auto& ring = m.ring();
  auto split = static_cast<std::uint32_t>(m.rows());
  std::vector<int> shifts = detail::total_shifts(m.target());
  for (int s : detail::total_shifts(m.source())) shifts.push_back(s);
  Opts opts;
  opts.split = split;
  opts.minimal_syzygies = true;
  detail::BuchbergerEngine<Field> eng(ring->field(), ring->order(), ring->num_x(), ring->num_vars(), shifts, opts);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto v = detail::to_vec(m.column(c));
    v.push_back(detail::VecTerm<Field>{Monomial{}, split + static_cast<std::uint32_t>(c), ring->field().one()});
    eng.add_input(std::move(v));
  }
  eng.run();
  std::vector<std::vector<Polynomial<Field>>> cols;
  for (const auto& s : eng.minimal_syzygies()) cols.push_back(detail::from_vec(ring, s, m.cols(), split));
  return PolyMatrix<Field>::from_columns(ring, m.source(), cols);
}

/// X with A ∘ X = B, or nullopt when some column of B is not in the image of A.
template <class Field>
std::optional<PolyMatrix<Field>> lift(const PolyMatrix<Field>& a, const PolyMatrix<Field>& b) {
  using Opts = typename detail::BuchbergerEngine<Field>::Options;
  if (!(a.target() == b.target())) throw Error("lift: targets differ");
  const auto& ring = a.ring();
  const Field& k = ring->field();
  auto split = static_cast<std::uint32_t>(a.rows());
  std::vector<int> shifts = detail::total_shifts(a.target());
  for (int s : detail::total_shifts(a.source())) shifts.push_back(s);
  Opts opts;
  opts.split = split;
  detail::BuchbergerEngine<Field> eng(k, ring->order(), ring->num_x(), ring->num_vars(), shifts, opts);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    auto v = detail::to_vec(a.column(c));
    v.push_back(detail::VecTerm<Field>{Monomial{}, split + static_cast<std::uint32_t>(c), k.one()});
    eng.add_input(std::move(v));
  }
  eng.run();
  PolyMatrix<Field> x(ring, a.source(), b.source());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto v = detail::to_vec(b.column(c));
    eng.ops().sort_and_combine(v);
    v = eng.top_reduce(std::move(v));
    if (!v.empty() && v.front().comp < split) return std::nullopt;
    eng.ops().scale(v, k.neg(k.one()));
    auto col = detail::from_vec(ring, v, a.cols(), split);
    for (std::size_t r = 0; r < col.size(); ++r) x.set(r, c, std::move(col[r]));
  }
  return x;
}

/// Every column of B lies in the column span of A.
template <class Field>
bool image_contains(const PolyMatrix<Field>& a, const PolyMatrix<Field>& b) {
  if (b.cols() == 0) return true;
  auto g = buchberger(a);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    if (!contains(g, b.column(c))) return false;
  }
  return true;
}

/// Presentation of the subquotient (im K + im N) / im N ≅ im K / (im K ∩ im N):
/// a matrix whose cokernel (on K.source) is that module. Its columns are the
/// K-parts of the syzygies of [K | N].
template <class Field>
PolyMatrix<Field> subquotient_presentation(const PolyMatrix<Field>& k, const PolyMatrix<Field>& n) {
  PolyMatrix<Field> both = n.cols() ? concat_columns(k, n) : k;
  PolyMatrix<Field> syz = syzygy_matrix(both);
  std::vector<std::size_t> rows(k.cols()), cols(syz.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  PolyMatrix<Field> top = syz.submatrix(rows, cols);
  // Drop columns that vanish on the K-block (pure syzygies of N).
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < top.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < top.rows() && zero; ++r) zero = top.at(r, c).is_zero();
    if (!zero) keep.push_back(c);
  }
  top = top.submatrix(rows, keep);
  if (top.cols() == 0) return top;
  return prune_columns(top);
}

/// (I : J) = {s : sJ ⊆ I}, as a reduced Gröbner basis. All (I : g) for g in J are
/// obtained from one syzygy computation on the matrix with columns
/// (g_1, …, g_m)ᵗ and f_i e_l.
template <class Field>
GroebnerBasis<Field> colon_ideal(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& i_gens,
                                 const std::vector<Polynomial<Field>>& j_gens) {
  std::vector<Polynomial<Field>> js, is;
  for (const auto& g : j_gens) {
    if (!g.is_zero()) js.push_back(g);
  }
  for (const auto& f : i_gens) {
    if (!f.is_zero()) is.push_back(f);
  }
  if (js.empty()) throw Error("colon_ideal: the second ideal is zero");
  std::vector<BiDegree> target;
  for (const auto& g : js) {
    auto d = g.bidegree();
    if (!d) throw Error("colon_ideal: generators must be bihomogeneous");
    target.push_back(-*d);
  }
  std::vector<std::vector<Polynomial<Field>>> cols;
  cols.push_back(js);
  for (std::size_t l = 0; l < js.size(); ++l) {
    for (const auto& f : is) {
      std::vector<Polynomial<Field>> col(js.size(), Polynomial<Field>(ring));
      col[l] = f;
      cols.push_back(std::move(col));
    }
  }
  auto m = PolyMatrix<Field>::from_columns(ring, GradedFreeModule(target), cols);
  auto syz = syzygy_matrix(m);
  std::vector<Polynomial<Field>> gens;
  for (std::size_t c = 0; c < syz.cols(); ++c) {
    if (!syz.at(0, c).is_zero()) gens.push_back(syz.at(0, c));
  }
  return buchberger(ring, gens);
}

/// Krull dimension of ring/I from the lead terms of a Gröbner basis: the size of
/// a largest variable set containing the support of no lead monomial. The unit
/// ideal has dimension -1.
template <class Field>
int krull_dimension(const GroebnerBasis<Field>& g) {
  if (g.ambient().rank() != 1) throw Error("krull_dimension: expects an ideal");
  if (g.is_unit_ideal()) return -1;
  const std::size_t nv = g.ring()->num_vars();
  std::vector<std::uint32_t> supports;
  for (const auto& e : g.elements()) {
    const Monomial& m = e[0].lead_monomial();
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      if (m[i] > 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t u = 0; u < (1u << nv); ++u) {
    int size = std::popcount(u);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~u) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

template <class Field>
int krull_dimension(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens) {
  return krull_dimension(buchberger(ring, gens));
}

}  // namespace symres
