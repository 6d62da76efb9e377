#pragma once

// Reference computations by dense linear algebra over F_p, one graded piece
// at a time. Nothing here touches the Gröbner engine: polynomials are read
// term by term and every answer comes from ranks of explicit matrices.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "symres/symres.hpp"

namespace oracle {

using Exps = std::vector<int>;
using Sparse = std::map<Exps, std::uint64_t>;

struct Form {
  Sparse terms;
  int x = 0;
  int y = 0;
};

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline Form from_poly(const symres::Polynomial<symres::PrimeField>& f) {
  const auto& ring = *f.ring();
  Form out;
  for (const auto& t : f.terms()) {
    Exps e(ring.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
    out.terms[e] = t.coeff;
  }
  if (!out.terms.empty()) {
    const auto& e = out.terms.begin()->first;
    for (std::size_t i = 0; i < e.size(); ++i) (i < ring.num_x() ? out.x : out.y) += e[i];
  }
  return out;
}

inline std::vector<Form> from_polys(const std::vector<symres::Polynomial<symres::PrimeField>>& fs) {
  std::vector<Form> out;
  for (const auto& f : fs) out.push_back(from_poly(f));
  return out;
}

inline Sparse multiply(const Sparse& a, const Sparse& b, std::uint64_t p) {
  Sparse out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& v = out[e];
      v = (v + ca * cb) % p;
      if (v == 0) out.erase(e);
    }
  }
  return out;
}

/// Exponent vectors with x-degree a in the first nx slots and y-degree b in the next ny.
inline std::vector<Exps> monomials(std::size_t nx, std::size_t ny, int a, int b) {
  std::vector<Exps> out;
  if (a < 0 || b < 0) return out;
  std::vector<Exps> xs, ys;
  auto fill = [](std::size_t k, int d, std::vector<Exps>& sink) {
    if (k == 0) {
      if (d == 0) sink.push_back({});
      return;
    }
    Exps cur(k, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == k) {
        cur[i] = left;
        sink.push_back(cur);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        cur[i] = e;
        self(self, i + 1, left - e);
      }
    };
    rec(rec, 0, d);
  };
  fill(nx, a, xs);
  fill(ny, b, ys);
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      Exps e = x;
      e.insert(e.end(), y.begin(), y.end());
      out.push_back(e);
    }
  }
  return out;
}

/// A subspace of F_p^n kept in reduced row echelon form.
class Span {
 public:
  Span(std::size_t n, std::uint64_t p) : n_(n), p_(p), pivot_row_(n, -1) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return n_; }
  bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }

  void reduce(std::vector<std::uint64_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t c = v[pivots_[r]];
      if (c == 0) continue;
      std::uint64_t f = p_ - c;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[r][j]) v[j] = (v[j] + f * rows_[r][j]) % p_;
      }
    }
  }

  /// Adds v; true if the rank grew.
  bool add(std::vector<std::uint64_t> v) {
    reduce(v);
    std::size_t c = 0;
    while (c < n_ && v[c] == 0) ++c;
    if (c == n_) return false;
    std::uint64_t s = inv_mod(v[c], p_);
    for (auto& x : v) x = x * s % p_;
    for (auto& row : rows_) {
      std::uint64_t f = row[c];
      if (f == 0) continue;
      f = p_ - f;
      for (std::size_t j = 0; j < n_; ++j) {
        if (v[j]) row[j] = (row[j] + f * v[j]) % p_;
      }
    }
    pivot_row_[c] = static_cast<int>(rows_.size());
    pivots_.push_back(c);
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  std::size_t n_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> pivot_row_;
};

inline std::size_t matrix_rank(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t n, std::uint64_t p) {
  Span s(n, p);
  for (const auto& r : rows) s.add(r);
  return s.rank();
}

/// Graded pieces of S/I for a fixed ideal, computed on demand.
class GradedQuotient {
 public:
  GradedQuotient(std::size_t nx, std::size_t ny, std::vector<Form> gens, std::uint64_t p)
      : nx_(nx), ny_(ny), gens_(std::move(gens)), p_(p) {}

  struct Piece {
    std::vector<Exps> monos;
    std::map<Exps, std::size_t> index;
    Span ideal;
    /// Column index → position among the standard (non-pivot) columns.
    std::vector<int> free_pos;
    std::size_t free_count = 0;
  };

  const Piece& piece(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto monos = monomials(nx_, ny_, a, b);
    Piece pc{monos, {}, Span(monos.size(), p_), {}, 0};
    for (std::size_t i = 0; i < monos.size(); ++i) pc.index[monos[i]] = i;
    for (const auto& g : gens_) {
      for (const auto& m : monomials(nx_, ny_, a - g.x, b - g.y)) {
        std::vector<std::uint64_t> v(monos.size(), 0);
        for (const auto& [e, c] : g.terms) {
          Exps s = e;
          for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
          v[pc.index.at(s)] = c;
        }
        pc.ideal.add(std::move(v));
      }
    }
    pc.free_pos.assign(monos.size(), -1);
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (!pc.ideal.is_pivot(c)) pc.free_pos[c] = static_cast<int>(pc.free_count++);
    }
    return cache_.emplace(key, std::move(pc)).first->second;
  }

  /// dim (S/I)_{(a,b)}.
  std::size_t dim(int a, int b) {
    if (a < 0 || b < 0) return 0;
    return piece(a, b).free_count;
  }

  /// dim I_{(a,b)}.
  std::size_t ideal_dim(int a, int b) {
    if (a < 0 || b < 0) return 0;
    return piece(a, b).ideal.rank();
  }

  /// Coordinates of a polynomial of bidegree (a,b) in the standard basis of (S/I)_{(a,b)}.
  std::vector<std::uint64_t> coords(const Sparse& f, int a, int b) {
    const Piece& pc = piece(a, b);
    std::vector<std::uint64_t> v(pc.monos.size(), 0);
    for (const auto& [e, c] : f) v[pc.index.at(e)] = c;
    pc.ideal.reduce(v);
    std::vector<std::uint64_t> out(pc.free_count, 0);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (pc.free_pos[c] >= 0) out[static_cast<std::size_t>(pc.free_pos[c])] = v[c];
    }
    return out;
  }

  bool contains(const Sparse& f, int a, int b) {
    for (auto c : coords(f, a, b)) {
      if (c) return false;
    }
    return true;
  }

  std::size_t num_x() const { return nx_; }
  std::size_t num_y() const { return ny_; }
  std::uint64_t prime() const { return p_; }

 private:
  std::size_t nx_, ny_;
  std::vector<Form> gens_;
  std::uint64_t p_;
  std::map<std::pair<int, int>, Piece> cache_;
};

/// Graded Betti numbers of S/I from the Koszul complex K(x, y; S/I):
/// β_{i,(a,b)} = dim H_i(K)_{(a,b)} for 1 <= i, a <= amax, b <= bmax.
inline symres::BettiTable betti_numbers(GradedQuotient& q, int amax, int bmax) {
  const std::size_t nx = q.num_x(), nv = q.num_x() + q.num_y();
  const std::uint64_t p = q.prime();
  auto degree_of = [&](std::uint32_t mask) {
    int a = 0, b = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      if (mask >> v & 1) (v < nx ? a : b) += 1;
    }
    return std::make_pair(a, b);
  };
  std::vector<std::vector<std::uint32_t>> by_size(nv + 1);
  for (std::uint32_t m = 0; m < (1u << nv); ++m) by_size[static_cast<std::size_t>(__builtin_popcount(m))].push_back(m);

  symres::BettiTable out;
  for (int a = 0; a <= amax; ++a) {
    for (int b = 0; b <= bmax; ++b) {
      // Basis of C_i: (subset, standard monomial of the complementary degree).
      std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> basis(nv + 1);
      std::vector<std::map<std::uint32_t, std::size_t>> offset(nv + 1);
      for (std::size_t i = 0; i <= nv; ++i) {
        for (auto t : by_size[i]) {
          auto [da, db] = degree_of(t);
          std::size_t d = q.dim(a - da, b - db);
          offset[i][t] = basis[i].size();
          for (std::size_t k = 0; k < d; ++k) basis[i].emplace_back(t, k);
        }
      }
      auto rank_of = [&](std::size_t i) -> std::size_t {
        if (i == 0 || i > nv || basis[i].empty() || basis[i - 1].empty()) return 0;
        std::vector<std::vector<std::uint64_t>> cols;
        for (auto t : by_size[i]) {
          auto [da, db] = degree_of(t);
          int sa = a - da, sb = b - db;
          if (sa < 0 || sb < 0) continue;
          const auto& pc = q.piece(sa, sb);
          for (std::size_t c = 0; c < pc.monos.size(); ++c) {
            if (pc.free_pos[c] < 0) continue;
            std::vector<std::uint64_t> col(basis[i - 1].size(), 0);
            int sign_pos = 0;
            for (std::size_t v = 0; v < nv; ++v) {
              if (!(t >> v & 1)) continue;
              std::uint32_t rest = t & ~(1u << v);
              Exps e = pc.monos[c];
              e[v] += 1;
              auto [ra, rb] = degree_of(rest);
              auto img = q.coords(Sparse{{e, 1}}, a - ra, b - rb);
              std::size_t off = offset[i - 1].at(rest);
              std::uint64_t sgn = sign_pos % 2 == 0 ? 1 : p - 1;
              for (std::size_t k = 0; k < img.size(); ++k) {
                if (img[k]) col[off + k] = (col[off + k] + sgn * img[k]) % p;
              }
              ++sign_pos;
            }
            cols.push_back(std::move(col));
          }
        }
        return matrix_rank(cols, basis[i - 1].size(), p);
      };
      std::vector<std::size_t> ranks(nv + 2, 0);
      for (std::size_t i = 1; i <= nv; ++i) ranks[i] = rank_of(i);
      for (std::size_t i = 1; i <= nv; ++i) {
        auto h = static_cast<long>(basis[i].size()) - static_cast<long>(ranks[i]) - static_cast<long>(ranks[i + 1]);
        if (h > 0) out.add(static_cast<int>(i), {a, b}, static_cast<int>(h));
      }
    }
  }
  return out;
}

/// The part of a Betti table inside the box a <= amax, b <= bmax.
inline symres::BettiTable restrict_table(const symres::BettiTable& t, int amax, int bmax) {
  symres::BettiTable out;
  for (const auto& [i, row] : t.positions()) {
    for (const auto& [d, m] : row) {
      if (d.x <= amax && d.y <= bmax) out.add(i, d, m);
    }
  }
  return out;
}

/// dim (J : K)_{(a,b)} for ideals J, K of S, as the kernel of
/// S_{(a,b)} -> ⊕_k (S/J)_{(a,b)+deg k}.
inline std::size_t colon_dim(GradedQuotient& j, const std::vector<Form>& k, int a, int b) {
  auto monos = monomials(j.num_x(), j.num_y(), a, b);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& m : monos) {
    std::vector<std::uint64_t> row;
    for (const auto& g : k) {
      auto c = j.coords(multiply(Sparse{{m, 1}}, g.terms, j.prime()), a + g.x, b + g.y);
      row.insert(row.end(), c.begin(), c.end());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return 0;
  std::size_t width = rows.front().size();
  return monos.size() - (width == 0 ? 0 : matrix_rank(rows, width, j.prime()));
}

/// dim H_1(φ)_d of the Koszul complex on forms φ_0..φ_n of degree η in R:
/// dim ker(Φ)_d minus dim of the span of the Koszul relations in degree d.
inline std::size_t koszul_h1_dim(const std::vector<Form>& phi, std::size_t nx, int d, std::uint64_t p) {
  const std::size_t m = phi.size();
  const int eta = phi.front().x;
  auto src = monomials(nx, 0, d - eta, 0);
  auto tgt = monomials(nx, 0, d, 0);
  if (src.empty()) return 0;
  std::map<Exps, std::size_t> tidx, sidx;
  for (std::size_t i = 0; i < tgt.size(); ++i) tidx[tgt[i]] = i;
  for (std::size_t i = 0; i < src.size(); ++i) sidx[src[i]] = i;
  // Φ as rows indexed by basis vectors m·e_i.
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& mono : src) {
      std::vector<std::uint64_t> v(tgt.size(), 0);
      for (const auto& [e, c] : multiply(Sparse{{mono, 1}}, phi[i].terms, p)) v[tidx.at(e)] = c;
      rows.push_back(std::move(v));
    }
  }
  std::size_t kernel = m * src.size() - matrix_rank(rows, tgt.size(), p);
  Span relations(m * src.size(), p);
  for (const auto& mono : monomials(nx, 0, d - 2 * eta, 0)) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        std::vector<std::uint64_t> v(m * src.size(), 0);
        for (const auto& [e, c] : multiply(Sparse{{mono, 1}}, phi[j].terms, p)) {
          v[i * src.size() + sidx.at(e)] = c;
        }
        for (const auto& [e, c] : multiply(Sparse{{mono, 1}}, phi[i].terms, p)) {
          auto& x = v[j * src.size() + sidx.at(e)];
          x = (x + p - c) % p;
        }
        relations.add(std::move(v));
      }
    }
  }
  return kernel - relations.rank();
}

/// Numerator of Σ_d h(d) s^d (1-s)^k for a function known on 0..dmax; the
/// coefficients beyond dmax are dropped, so dmax must exceed the numerator degree.
inline std::map<int, std::int64_t> numerator_from_values(const std::vector<std::int64_t>& h, std::size_t k) {
  std::vector<std::int64_t> c(h.begin(), h.end());
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = c.size(); i-- > 1;) c[i] -= c[i - 1];
  }
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) out[static_cast<int>(i)] = c[i];
  }
  return out;
}

}  // namespace oracle
