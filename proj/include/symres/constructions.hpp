#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symres/hilbert.hpp"

namespace symres {

namespace detail {

/// All increasing index tuples of length k from {0, …, n-1}, lexicographically.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class Field>
BiDegree common_degree(const std::vector<Polynomial<Field>>& phi) {
  std::optional<BiDegree> d;
  for (const auto& p : phi) {
    auto pd = p.bidegree();
    if (!pd) throw Error("expected bihomogeneous nonzero generators");
    if (d && *d != *pd) throw Error("generators are not all of the same degree");
    d = pd;
  }
  if (!d) throw Error("empty generator list");
  return *d;
}

}  // namespace detail

/// Koszul differential k_i : ∧^{i+1} P_1 -> ∧^i P_1 on Φ = (φ_0, …, φ_n), all of
/// degree d. Basis elements are increasing wedge tuples in lexicographic order,
/// ∧^j P_1 has all shifts j·d, and
/// e_{j_0}∧…∧e_{j_i} ↦ Σ_k (-1)^k φ_{j_k} e_{j_0}∧…ê_{j_k}…∧e_{j_i}.
/// k_0 is the row Φ itself.
template <class Field>
PolyMatrix<Field> koszul_differential(const RingPtr<Field>& ring, const std::vector<Polynomial<Field>>& phi,
                                      std::size_t i) {
  const std::size_t m = phi.size();
  if (m == 0 || i > m) throw Error("koszul_differential: index out of range");
  BiDegree d = detail::common_degree(phi);
  auto src = detail::subsets(m, i + 1);
  auto tgt = detail::subsets(m, i);
  std::map<std::vector<std::size_t>, std::size_t> tgt_index;
  for (std::size_t r = 0; r < tgt.size(); ++r) tgt_index[tgt[r]] = r;
  int ip = static_cast<int>(i);
  PolyMatrix<Field> k(ring, GradedFreeModule::repeated(tgt.size(), {ip * d.x, ip * d.y}),
                      GradedFreeModule::repeated(src.size(), {(ip + 1) * d.x, (ip + 1) * d.y}));
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (std::size_t pos = 0; pos < src[c].size(); ++pos) {
      std::vector<std::size_t> face = src[c];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
      Polynomial<Field> e = phi[src[c][pos]].in_ring(ring);
      if (pos % 2 == 1) e = -e;
      k.set(tgt_index.at(face), c, std::move(e));
    }
  }
  return k;
}

/// y·A for an x-only matrix A with n+1 rows, viewed in S: the row of entries
/// Σ_r y_r A(r,c). Shifts: (deg column - row degree, 1).
template <class Field>
std::vector<Polynomial<Field>> y_times(const RingPtr<Field>& s, const PolyMatrix<Field>& a) {
  if (a.rows() != s->num_y()) throw Error("y_times: row count must equal the number of y-variables");
  std::vector<Polynomial<Field>> out;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Polynomial<Field> acc(s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a.at(r, c).is_zero()) continue;
      acc = acc + Polynomial<Field>::y(s, r) * a.at(r, c).in_ring(s);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// Generators of I_X: the entries of (y_0 … y_n)·M for a presentation matrix M
/// of I_Z (rows = generators of I_Z, columns = syzygies).
template <class Field>
std::vector<Polynomial<Field>> symmetric_algebra_ideal(const RingPtr<Field>& s, const PolyMatrix<Field>& m) {
  if (m.rows() != s->num_y()) throw Error("symmetric_algebra_ideal: presentation must have n+1 rows");
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.at(r, c).max_y_degree() != 0) throw Error("symmetric_algebra_ideal: presentation must be x-only");
    }
  }
  return y_times(s, m);
}

/// Generators of the Koszul hull I_K: the 2x2 minors φ_i y_j - φ_j y_i, i < j,
/// i.e. the entries of y·k_1(Φ) up to sign.
template <class Field>
std::vector<Polynomial<Field>> koszul_hull_ideal(const RingPtr<Field>& s, const std::vector<Polynomial<Field>>& phi) {
  if (phi.size() != s->num_y()) throw Error("koszul_hull_ideal: need n+1 generators");
  std::vector<Polynomial<Field>> out;
  for (const auto& pair : detail::subsets(phi.size(), 2)) {
    std::size_t i = pair[0], j = pair[1];
    out.push_back(phi[i].in_ring(s) * Polynomial<Field>::y(s, j) - phi[j].in_ring(s) * Polynomial<Field>::y(s, i));
  }
  return out;
}

/// ψ: rows (φ_0 … φ_n) and (y_0 … y_n).
template <class Field>
PolyMatrix<Field> psi_matrix(const RingPtr<Field>& s, const std::vector<Polynomial<Field>>& phi) {
  if (phi.size() != s->num_y()) throw Error("psi_matrix: need n+1 generators");
  BiDegree eta = detail::common_degree(phi);
  if (eta.y != 0) throw Error("psi_matrix: generators must be x-only");
  std::vector<std::vector<Polynomial<Field>>> cols;
  for (std::size_t j = 0; j < phi.size(); ++j) cols.push_back({phi[j].in_ring(s), Polynomial<Field>::y(s, j)});
  return PolyMatrix<Field>(s, GradedFreeModule({{0, 0}, {eta.x, -1}}),
                           GradedFreeModule::repeated(phi.size(), {eta.x, 0}), cols);
}

/// Eagon–Northcott complex of ψ resolving S/I_K when the minors have the
/// expected codimension. Q_i = ⊕_{j=0}^{i-1} ∧^{i+1}F ⊗ u^{i-1-j} v^j with
/// shift ((i-j)η, j+1); bases ordered by j, then lexicographically by wedge.
///   d_1(e_{a<b}) = φ_a y_b - φ_b y_a
///   d_i(e_J ⊗ u^a v^b) = Σ_k (-1)^k e_{J∖j_k} ⊗ (φ_{j_k} u^{a-1} v^b + y_{j_k} u^a v^{b-1})
template <class Field>
ChainComplex<Field> eagon_northcott_complex(const RingPtr<Field>& s, const std::vector<Polynomial<Field>>& phi) {
  const std::size_t m = phi.size();
  if (m < 2 || m != s->num_y()) throw Error("eagon_northcott_complex: malformed psi");
  const int eta = detail::common_degree(phi).x;
  const std::size_t n = m - 1;
  struct Basis {
    std::vector<std::size_t> wedge;
    int v_power;
  };
  std::vector<std::vector<Basis>> bases(n + 1);
  std::vector<GradedFreeModule> mods{GradedFreeModule::repeated(1, {})};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<BiDegree> shifts;
    for (int j = 0; j < static_cast<int>(i); ++j) {
      for (const auto& w : detail::subsets(m, i + 1)) {
        bases[i].push_back(Basis{w, j});
        shifts.push_back({(static_cast<int>(i) - j) * eta, j + 1});
      }
    }
    mods.emplace_back(std::move(shifts));
  }
  std::vector<PolyMatrix<Field>> diffs;
  diffs.push_back(PolyMatrix<Field>::row(s, koszul_hull_ideal(s, phi)));
  for (std::size_t i = 2; i <= n; ++i) {
    std::map<std::pair<std::vector<std::size_t>, int>, std::size_t> tgt_index;
    for (std::size_t r = 0; r < bases[i - 1].size(); ++r) tgt_index[{bases[i - 1][r].wedge, bases[i - 1][r].v_power}] = r;
    PolyMatrix<Field> d(s, mods[i - 1], mods[i]);
    for (std::size_t c = 0; c < bases[i].size(); ++c) {
      const auto& b = bases[i][c];
      int u_power = static_cast<int>(i) - 1 - b.v_power;
      for (std::size_t k = 0; k < b.wedge.size(); ++k) {
        std::vector<std::size_t> face = b.wedge;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        std::size_t jk = b.wedge[k];
        Polynomial<Field> sign = Polynomial<Field>::integer(s, k % 2 == 0 ? 1 : -1);
        if (u_power > 0) {
          std::size_t r = tgt_index.at({face, b.v_power});
          d.set(r, c, d.at(r, c) + sign * phi[jk].in_ring(s));
        }
        if (b.v_power > 0) {
          std::size_t r = tgt_index.at({face, b.v_power - 1});
          d.set(r, c, d.at(r, c) + sign * Polynomial<Field>::y(s, jk));
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex<Field>(s, std::move(mods), std::move(diffs));
}

/// Betti table predicted for the minimal resolution of I_X from the minimal
/// resolution P of R/I_Z: position i carries
///   Q''_i = ⊕_{j=1}^{i-1} S(-(i-j)η, -j-1)^{C(n+1,i+1)}   and
///   P''_i = P_{i+1} ⊗ S(η, -1)   (wherever P_{i+1} is nonzero).
inline BettiTable predicted_theorem_table(const BettiTable& p, int eta, int n) {
  BettiTable out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i - 1; ++j) {
      out.add(i, {(i - j) * eta, j + 1}, static_cast<int>(detail::binomial(n + 1, i + 1)));
    }
    auto it = p.positions().find(i + 1);
    if (it == p.positions().end()) continue;
    for (const auto& [d, mult] : it->second) out.add(i, {d.x - eta, 1}, mult);
  }
  return out;
}

template <class Field>
BettiTable predicted_theorem_table(const ChainComplex<Field>& p, int eta) {
  int n = static_cast<int>(p.ring()->num_x()) - 1;
  return predicted_theorem_table(betti_table(p), eta, n);
}

/// Shifts P_{n+1-i}^∨ ⊗ S(-nη, -1) of the dualized resolution of R/I_Z,
/// i = 1 … n+1.
inline BettiTable dual_shifted_table(const BettiTable& p, int eta, int n) {
  BettiTable out;
  for (int i = 1; i <= n + 1; ++i) {
    int src = n + 1 - i;
    if (src == 0) {
      out.add(i, {n * eta, 1}, 1);
      continue;
    }
    auto it = p.positions().find(src);
    if (it == p.positions().end()) continue;
    for (const auto& [d, mult] : it->second) out.add(i, {n * eta - d.x, 1 - d.y}, mult);
  }
  return out;
}

/// A subset of the generators of I_X whose images minimally generate I_X/I_K.
template <class Field>
std::vector<Polynomial<Field>> quotient_generators(const RingPtr<Field>& s, const std::vector<Polynomial<Field>>& ix,
                                                   const std::vector<Polynomial<Field>>& ik) {
  std::vector<Polynomial<Field>> all = ik;
  all.insert(all.end(), ix.begin(), ix.end());
  std::vector<Polynomial<Field>> out;
  for (std::size_t c : minimal_generator_indices(PolyMatrix<Field>::row(s, all))) {
    if (c >= ik.size()) out.push_back(ix[c - ik.size()]);
  }
  return out;
}

/// Presentation of I_X/I_K on the given generators of I_X (typically the output
/// of quotient_generators): its cokernel is the quotient.
template <class Field>
PolyMatrix<Field> quotient_presentation(const RingPtr<Field>& s, const std::vector<Polynomial<Field>>& ix,
                                        const std::vector<Polynomial<Field>>& ik) {
  auto a = PolyMatrix<Field>::row(s, ix);
  auto b = PolyMatrix<Field>::row(s, ik);
  return subquotient_presentation(a, b);
}

/// Resolution of a module presented by `pres` placed at positions 1, 2, …
/// (rank-0 F_0): position 1 is the generator module, d_1 is the zero map to F_0.
template <class Field>
ChainComplex<Field> shift_to_module_resolution(const ChainComplex<Field>& coker_res) {
  const auto& s = coker_res.ring();
  std::vector<GradedFreeModule> mods{GradedFreeModule{}};
  std::vector<PolyMatrix<Field>> diffs;
  if (coker_res.size() == 0 || coker_res.module(0).empty()) return ChainComplex<Field>(s, mods, diffs);
  mods.push_back(coker_res.module(0));
  diffs.emplace_back(s, GradedFreeModule{}, coker_res.module(0));
  for (std::size_t i = 1; i < coker_res.size(); ++i) {
    mods.push_back(coker_res.module(i));
    diffs.push_back(coker_res.differential(i));
  }
  return ChainComplex<Field>(s, std::move(mods), std::move(diffs));
}

/// Mapping-cone style patch of a resolution Q of S/I_K and a resolution P' of
/// I_X/I_K (rank-0 F_0, generators at position 1 mapping to the generators of
/// I_X listed in `ix`). Returns a resolution of S/I_X with F_i = Q_i ⊕ P'_i and
/// d_i = [[dQ_i, h_i], [0, dP'_i]], where each h_i is obtained by lifting.
template <class Field>
ChainComplex<Field> build_patched_resolution(const ChainComplex<Field>& q, const ChainComplex<Field>& pprime,
                                             const std::vector<Polynomial<Field>>& ix) {
  const auto& s = q.ring();
  std::size_t len = std::max(q.size(), pprime.size());
  auto q_mod = [&](std::size_t i) { return i < q.size() ? q.module(i) : GradedFreeModule{}; };
  auto p_mod = [&](std::size_t i) { return i < pprime.size() ? pprime.module(i) : GradedFreeModule{}; };
  auto q_diff = [&](std::size_t i) {
    return i < q.size() ? q.differential(i) : PolyMatrix<Field>(s, q_mod(i - 1), q_mod(i));
  };
  auto p_diff = [&](std::size_t i) {
    return i < pprime.size() ? pprime.differential(i) : PolyMatrix<Field>(s, p_mod(i - 1), p_mod(i));
  };
  if (p_mod(1).rank() != ix.size()) throw Error("build_patched_resolution: generator count mismatch");

  std::vector<GradedFreeModule> mods{GradedFreeModule::repeated(1, {})};
  std::vector<PolyMatrix<Field>> diffs;
  // Augmentation of P'_1: the generators of I_X.
  PolyMatrix<Field> eps(s, GradedFreeModule::repeated(1, {}), p_mod(1));
  for (std::size_t c = 0; c < ix.size(); ++c) eps.set(0, c, ix[c]);
  mods.push_back(q_mod(1).direct_sum(p_mod(1)));
  diffs.push_back(concat_columns(q_diff(1), eps));

  PolyMatrix<Field> h_prev = eps;
  for (std::size_t i = 2; i < len; ++i) {
    PolyMatrix<Field> rhs = compose(h_prev, p_diff(i));
    PolyMatrix<Field> neg(s, rhs.target(), rhs.source());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      for (std::size_t r = 0; r < rhs.rows(); ++r) neg.set(r, c, -rhs.at(r, c));
    }
    PolyMatrix<Field> h(s, q_mod(i - 1), p_mod(i));
    if (neg.cols() > 0 && !neg.is_zero()) {
      auto lifted = lift(q_diff(i - 1), neg);
      if (!lifted) {
        throw Error("build_patched_resolution: comparison map does not lift at position " + std::to_string(i));
      }
      h = *lifted;
    }
    mods.push_back(q_mod(i).direct_sum(p_mod(i)));
    diffs.push_back(block_upper(q_diff(i), h, p_diff(i)));
    h_prev = h;
  }
  ChainComplex<Field> out(s, std::move(mods), std::move(diffs));
  if (!out.is_complex()) throw Error("build_patched_resolution: patched maps do not form a complex");
  return out;
}

/// Presentation of the first Koszul homology H_1(Φ) = ker(Φ) / im(k_1) as the
/// cokernel of a matrix over R whose target is the module of minimal syzygies of Φ.
template <class Field>
PolyMatrix<Field> koszul_h1(const RingPtr<Field>& r, const std::vector<Polynomial<Field>>& phi) {
  auto row = koszul_differential(r, phi, 0);
  auto ker = syzygy_matrix(row);
  auto k1 = koszul_differential(r, phi, 1);
  return subquotient_presentation(ker, k1);
}

struct FittingRank {
  std::size_t rank = 0;
  std::size_t fibre_dimension = 0;
  bool in_z = false;
};

namespace detail {

template <class Field>
std::size_t scalar_rank(const Field& k, std::vector<std::vector<typename Field::Element>> rows) {
  std::size_t rank = 0;
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && k.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto inv = k.inv(rows[rank][c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || k.is_zero(rows[r][c])) continue;
      auto f = k.mul(rows[r][c], inv);
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] = k.sub(rows[r][j], k.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank of the scalar matrix M(point) and fibre dimension n - rank, where n+1 is
/// the number of rows. `phi` decides membership of the point in Z.
template <class Field>
FittingRank fitting_rank_at_point(const PolyMatrix<Field>& m, const std::vector<Polynomial<Field>>& phi,
                                  std::span<const typename Field::Element> point) {
  const auto& ring = m.ring();
  const Field& k = ring->field();
  if (point.size() != ring->num_vars()) throw Error("fitting_rank_at_point: wrong number of coordinates");
  bool all_zero = true;
  for (const auto& v : point) all_zero = all_zero && k.is_zero(v);
  if (all_zero) throw Error("fitting_rank_at_point: the zero point is not a projective point");
  std::vector<std::vector<typename Field::Element>> rows(m.rows(), std::vector<typename Field::Element>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c).evaluate(point);
  }
  FittingRank fr;
  fr.rank = detail::scalar_rank(k, std::move(rows));
  std::size_t n = m.rows() == 0 ? 0 : m.rows() - 1;
  fr.fibre_dimension = n >= fr.rank ? n - fr.rank : 0;
  fr.in_z = true;
  for (const auto& f : phi) fr.in_z = fr.in_z && k.is_zero(f.evaluate(point));
  return fr;
}

}  // namespace symres
