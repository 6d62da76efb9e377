#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symres/free_module.hpp"
#include "symres/polynomial.hpp"

namespace symres {

/// Degree-0 homogeneous map target <- source between graded free modules.
/// Entry (r,c) is zero or bihomogeneous of bidegree source[c] - target[r].
template <class Field>
class PolyMatrix {
 public:
  using Poly = Polynomial<Field>;

  PolyMatrix() = default;

  /// The zero map.
  PolyMatrix(RingPtr<Field> ring, GradedFreeModule target, GradedFreeModule source)
      : ring_(std::move(ring)),
        target_(std::move(target)),
        source_(std::move(source)),
        entries_(target_.rank() * source_.rank(), Poly(ring_)) {}

  /// Entries given column by column (columns[c][r]).
  PolyMatrix(RingPtr<Field> ring, GradedFreeModule target, GradedFreeModule source,
             const std::vector<std::vector<Poly>>& columns)
      : PolyMatrix(std::move(ring), std::move(target), std::move(source)) {
    if (columns.size() != cols()) throw Error("PolyMatrix: column count does not match source rank");
    for (std::size_t c = 0; c < cols(); ++c) {
      if (columns[c].size() != rows()) throw Error("PolyMatrix: column length does not match target rank");
      for (std::size_t r = 0; r < rows(); ++r) set(r, c, columns[c][r]);
    }
  }

  /// Infers each source degree from the first nonzero entry of the column.
  /// Zero columns take the degree from `zero_column_degree`.
  static PolyMatrix from_columns(RingPtr<Field> ring, GradedFreeModule target,
                                 const std::vector<std::vector<Poly>>& columns,
                                 BiDegree zero_column_degree = {}) {
    std::vector<BiDegree> src;
    for (const auto& col : columns) {
      std::optional<BiDegree> d;
      for (std::size_t r = 0; r < col.size() && !d; ++r) {
        if (col[r].is_zero()) continue;
        auto bd = col[r].bidegree();
        if (!bd) throw Error("PolyMatrix::from_columns: entry is not bihomogeneous");
        d = *bd + target.shift(r);
      }
      src.push_back(d.value_or(zero_column_degree));
    }
    return PolyMatrix(std::move(ring), std::move(target), GradedFreeModule(std::move(src)), columns);
  }

  /// 1 x k row matrix S <- ⊕ S(-deg g_i) of ideal generators.
  static PolyMatrix row(RingPtr<Field> ring, const std::vector<Poly>& gens) {
    std::vector<std::vector<Poly>> cols;
    for (const Poly& g : gens) cols.push_back({g});
    return from_columns(std::move(ring), GradedFreeModule::repeated(1, {}), cols);
  }

  static PolyMatrix identity(RingPtr<Field> ring, const GradedFreeModule& m) {
    PolyMatrix id(ring, m, m);
    for (std::size_t i = 0; i < m.rank(); ++i) id.set(i, i, Poly::integer(ring, 1));
    return id;
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const GradedFreeModule& target() const { return target_; }
  const GradedFreeModule& source() const { return source_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }

  const Poly& at(std::size_t r, std::size_t c) const { return entries_.at(c * rows() + r); }

  void set(std::size_t r, std::size_t c, Poly p) {
    if (r >= rows() || c >= cols()) throw Error("PolyMatrix::set: index out of range");
    if (!p.is_zero()) {
      auto d = p.bidegree();
      BiDegree want = source_.shift(c) - target_.shift(r);
      if (!d || *d != want) {
        throw Error("PolyMatrix: entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + p.to_string() +
                    " is not bihomogeneous of bidegree " + want.to_string());
      }
      if (p.ring() != ring_) p = p.in_ring(ring_);
    } else {
      p = Poly(ring_);
    }
    entries_[c * rows() + r] = std::move(p);
  }

  std::vector<Poly> column(std::size_t c) const {
    std::vector<Poly> out;
    out.reserve(rows());
    for (std::size_t r = 0; r < rows(); ++r) out.push_back(at(r, c));
    return out;
  }

  std::vector<std::vector<Poly>> columns() const {
    std::vector<std::vector<Poly>> out;
    for (std::size_t c = 0; c < cols(); ++c) out.push_back(column(c));
    return out;
  }

  /// All entries, row-major; handy for a 1 x k matrix of ideal generators.
  std::vector<Poly> entries_row_major() const {
    std::vector<Poly> out;
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols(); ++c) out.push_back(at(r, c));
    }
    return out;
  }

  bool is_zero() const {
    for (const Poly& p : entries_) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

  /// Same matrix over another ring with identical variables (e.g. R -> S).
  PolyMatrix in_ring(const RingPtr<Field>& ring) const {
    PolyMatrix out(ring, target_, source_);
    for (std::size_t c = 0; c < cols(); ++c) {
      for (std::size_t r = 0; r < rows(); ++r) out.set(r, c, at(r, c).in_ring(ring));
    }
    return out;
  }

  /// Keeps the listed rows and columns, in the given order.
  PolyMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    std::vector<BiDegree> t, s;
    for (std::size_t r : row_idx) t.push_back(target_.shift(r));
    for (std::size_t c : col_idx) s.push_back(source_.shift(c));
    PolyMatrix out(ring_, GradedFreeModule(t), GradedFreeModule(s));
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      for (std::size_t i = 0; i < row_idx.size(); ++i) out.entries_[j * row_idx.size() + i] = at(row_idx[i], col_idx[j]);
    }
    return out;
  }

  bool operator==(const PolyMatrix& o) const {
    return target_ == o.target_ && source_ == o.source_ && entries_ == o.entries_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows(); ++r) {
      s += "| ";
      for (std::size_t c = 0; c < cols(); ++c) {
        if (c) s += ", ";
        s += at(r, c).to_string();
      }
      s += " |\n";
    }
    return s;
  }

 private:
  RingPtr<Field> ring_;
  GradedFreeModule target_;
  GradedFreeModule source_;
  std::vector<Poly> entries_;
};

/// A ∘ B. Requires A.source == B.target.
template <class Field>
PolyMatrix<Field> compose(const PolyMatrix<Field>& a, const PolyMatrix<Field>& b) {
  if (a.cols() != b.rows()) throw Error("compose: shape mismatch");
  if (!(a.source() == b.target())) throw Error("compose: shift mismatch between A.source and B.target");
  PolyMatrix<Field> out(a.ring(), a.target(), b.source());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Polynomial<Field> acc(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(r, k).is_zero() || b.at(k, c).is_zero()) continue;
        acc = acc + a.at(r, k) * b.at(k, c);
      }
      out.set(r, c, std::move(acc));
    }
  }
  return out;
}

/// Transpose of A: target^∨ ⊗ S(t) -> source^∨ ⊗ S(t).
template <class Field>
PolyMatrix<Field> dualize_shifted(const PolyMatrix<Field>& a, BiDegree twist) {
  PolyMatrix<Field> out(a.ring(), a.source().dual(twist), a.target().dual(twist));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(c, r, a.at(r, c));
  }
  return out;
}

/// [A | B] with a common target.
template <class Field>
PolyMatrix<Field> concat_columns(const PolyMatrix<Field>& a, const PolyMatrix<Field>& b) {
  if (!(a.target() == b.target())) throw Error("concat_columns: targets differ");
  PolyMatrix<Field> out(a.ring(), a.target(), a.source().direct_sum(b.source()));
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, c, a.at(r, c));
  }
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t r = 0; r < b.rows(); ++r) out.set(r, a.cols() + c, b.at(r, c));
  }
  return out;
}

/// Block matrix [[A, C], [0, B]] from A: T1 <- S1, B: T2 <- S2, C: T1 <- S2.
template <class Field>
PolyMatrix<Field> block_upper(const PolyMatrix<Field>& a, const PolyMatrix<Field>& c, const PolyMatrix<Field>& b) {
  if (!(c.target() == a.target()) || !(c.source() == b.source())) throw Error("block_upper: incompatible blocks");
  PolyMatrix<Field> out(a.ring(), a.target().direct_sum(b.target()), a.source().direct_sum(b.source()));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.set(i, j, a.at(i, j));
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.set(i, a.cols() + j, c.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i) out.set(a.rows() + i, a.cols() + j, b.at(i, j));
  }
  return out;
}

}  // namespace symres
