#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "symres/complex.hpp"
#include "symres/groebner.hpp"

namespace symres {

/// A resolution together with its Betti table.
template <class Field>
struct ResolutionReport {
  ChainComplex<Field> complex;
  BettiTable betti;
  bool minimal = false;
  std::size_t length = 0;
  /// False when the length cap stopped the computation before the syzygies vanished.
  bool complete = true;
};

/// Hilbert's syzygy bound for the ring: the number of variables, plus one.
template <class Field>
std::size_t default_max_length(const Ring<Field>& ring) {
  return ring.num_y() == 0 ? ring.num_x() + 1 : 2 * ring.num_x();
}

namespace detail {

template <class Field>
ResolutionReport<Field> resolve_from(PolyMatrix<Field> d1, std::size_t max_length) {
  const auto& ring = d1.ring();
  std::vector<GradedFreeModule> mods{d1.target()};
  std::vector<PolyMatrix<Field>> diffs;
  bool complete = true;
  if (d1.cols() > 0) {
    mods.push_back(d1.source());
    diffs.push_back(d1);
    while (true) {
      const auto& last = diffs.back();
      auto syz = syzygy_matrix(last);
      if (syz.cols() == 0) break;
      if (diffs.size() >= max_length) {
        complete = false;
        break;
      }
      mods.push_back(syz.source());
      diffs.push_back(std::move(syz));
    }
  }
  ResolutionReport<Field> rep;
  rep.complex = ChainComplex<Field>(ring, std::move(mods), std::move(diffs));
  rep.betti = betti_table(rep.complex);
  rep.minimal = true;
  rep.length = rep.complex.length();
  rep.complete = complete;
  return rep;
}

}  // namespace detail

/// Minimal free resolution of coker(A). F_0 = A.target, d_1 = A restricted to a
/// minimal generating subset of its columns, d_{i+1} = minimal syzygies of d_i.
/// Minimal whenever A has no unit entries.
template <class Field>
ResolutionReport<Field> resolve_cokernel(const PolyMatrix<Field>& a, std::optional<std::size_t> max_length = {}) {
  PolyMatrix<Field> d1 = a.cols() ? prune_columns(a) : a;
  return detail::resolve_from(std::move(d1), max_length.value_or(default_max_length(*a.ring())));
}

/// Minimal free resolution of ring/I (F_0 = ring). The unit ideal gives the
/// zero complex, of length 0.
template <class Field>
ResolutionReport<Field> resolve_quotient(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens,
                                         std::optional<std::size_t> max_length = {}) {
  for (const auto& g : gens) {
    if (g.is_unit()) {
      ResolutionReport<Field> rep;
      rep.complex = ChainComplex<Field>(ring, {GradedFreeModule{}}, {});
      rep.minimal = true;
      return rep;
    }
  }
  auto mins = minimal_generators(ring, gens);
  auto row = mins.empty() ? PolyMatrix<Field>(ring, GradedFreeModule::repeated(1, {}), GradedFreeModule{})
                          : PolyMatrix<Field>::row(ring, mins);
  return detail::resolve_from(std::move(row), max_length.value_or(default_max_length(*ring)));
}

/// The complex part of resolve_quotient.
template <class Field>
ChainComplex<Field> free_resolution(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens,
                                    std::optional<std::size_t> max_length = {}) {
  return resolve_quotient(ring, gens, max_length).complex;
}

template <class Field>
ChainComplex<Field> free_resolution(const PolyMatrix<Field>& a, std::optional<std::size_t> max_length = {}) {
  return resolve_cokernel(a, max_length).complex;
}

/// Cancels unit entries (nonzero constants) until none remain, rightmost
/// differential first. Each cancellation splits off a trivial summand
/// 0 -> S(-d) -> S(-d) -> 0 and leaves the homology unchanged.
template <class Field>
ChainComplex<Field> minimize(const ChainComplex<Field>& c) {
  if (c.size() <= 1) return c;
  const auto& ring = c.ring();
  const Field& k = ring->field();
  std::vector<GradedFreeModule> mods = c.modules();
  std::vector<PolyMatrix<Field>> diffs = c.differentials();

  auto drop_row = [&](const PolyMatrix<Field>& m, std::size_t row) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != row) rows.push_back(r);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
    return m.submatrix(rows, cols);
  };
  auto drop_col = [&](const PolyMatrix<Field>& m, std::size_t col) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(r);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != col) cols.push_back(j);
    }
    return m.submatrix(rows, cols);
  };

  for (std::size_t i = diffs.size(); i >= 1; --i) {
    while (true) {
      PolyMatrix<Field>& d = diffs[i - 1];
      std::optional<std::pair<std::size_t, std::size_t>> unit;
      for (std::size_t col = 0; col < d.cols() && !unit; ++col) {
        for (std::size_t row = 0; row < d.rows(); ++row) {
          if (d.at(row, col).is_unit()) {
            unit = std::make_pair(row, col);
            break;
          }
        }
      }
      if (!unit) break;
      auto [r, cidx] = *unit;
      auto u_inv = k.inv(d.at(r, cidx).lead_coefficient());
      PolyMatrix<Field> nd(ring, d.target(), d.source());
      for (std::size_t col = 0; col < d.cols(); ++col) {
        const auto& beta = d.at(r, col);
        for (std::size_t row = 0; row < d.rows(); ++row) {
          if (row == r || col == cidx) continue;
          Polynomial<Field> e = d.at(row, col);
          if (!beta.is_zero() && !d.at(row, cidx).is_zero()) e = e - (d.at(row, cidx) * beta).scaled(u_inv);
          nd.set(row, col, std::move(e));
        }
      }
      d = drop_col(drop_row(nd, r), cidx);
      mods[i] = d.source();
      mods[i - 1] = d.target();
      if (i >= 2) diffs[i - 2] = drop_col(diffs[i - 2], r);
      if (i < diffs.size()) diffs[i] = drop_row(diffs[i], cidx);
    }
    if (i == 1) break;
  }
  // Trailing zero modules are dropped.
  while (mods.size() > 1 && mods.back().empty()) {
    mods.pop_back();
    diffs.pop_back();
  }
  return ChainComplex<Field>(ring, std::move(mods), std::move(diffs));
}

/// Position, row and column of an offending entry.
struct EntryWitness {
  std::size_t position;
  std::size_t row;
  std::size_t col;
  int y_degree;
};

struct SubregularResult {
  bool subregular = true;
  std::optional<EntryWitness> witness;
};

/// Every nonzero differential entry has y-degree at most 1.
template <class Field>
SubregularResult is_subregular(const ChainComplex<Field>& c) {
  SubregularResult res;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const auto& d = c.differential(i);
    for (std::size_t col = 0; col < d.cols(); ++col) {
      for (std::size_t row = 0; row < d.rows(); ++row) {
        const auto& e = d.at(row, col);
        if (e.is_zero()) continue;
        int yd = e.max_y_degree();
        if (yd > 1) {
          res.subregular = false;
          res.witness = EntryWitness{i, row, col, yd};
          return res;
        }
      }
    }
  }
  return res;
}

/// Length of the minimal free resolution of ring/I.
template <class Field>
std::size_t projective_dimension(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens) {
  return resolve_quotient(ring, gens).length;
}

/// Dimension 1 and depth 1, i.e. pd = n for R = k[x_0..x_n].
template <class Field>
bool is_cm_dim1(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& gens) {
  if (krull_dimension(ring, gens) != 1) return false;
  return projective_dimension(ring, gens) + 1 == ring->num_vars();
}

/// Canonical module of R/I from a minimal resolution of R/I with pd = codim:
/// coker(d_c^T) twisted so that ω = Ext^c(R/I, R(-nvars)). Returns the
/// presentation matrix.
template <class Field>
PolyMatrix<Field> canonical_module(const ChainComplex<Field>& res) {
  const auto& ring = res.ring();
  if (ring->num_y() != 0) throw Error("canonical_module: expects a resolution over the x-only ring");
  std::size_t pd = res.length();
  if (pd == 0) throw Error("canonical_module: resolution is trivial");
  std::vector<Polynomial<Field>> gens = res.differential(1).entries_row_major();
  int dim = krull_dimension(ring, gens);
  auto codim = static_cast<std::size_t>(static_cast<int>(ring->num_vars()) - dim);
  if (dim < 0 || pd != codim) throw Error("canonical_module: R/I is not Cohen-Macaulay (pd != codim)");
  BiDegree twist{-static_cast<int>(ring->num_vars()), 0};
  return dualize_shifted(res.differential(pd), twist);
}

}  // namespace symres
