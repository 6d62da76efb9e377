#pragma once

// Degree-by-degree Buchberger algorithm for homogeneous submodules of a graded
// free module, with optional cofactor tracking.
//
// Vectors live in F ⊕ T where F has components [0, split) and T (the tracking
// block) has components [split, split + r). With tracking enabled, input k is
// (f_k, e_k) and every vector in the computation satisfies F-part = Σ_k
// (T-part)_k f_k. Elements whose lead term lies in T ("pure" elements) are
// syzygies of the inputs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symres/field.hpp"
#include "symres/monomial.hpp"
#include "symres/ring.hpp"

namespace symres::detail {

template <class Field>
struct VecTerm {
  Monomial mono;
  std::uint32_t comp;
  typename Field::Element coeff;
};

template <class Field>
using Vec = std::vector<VecTerm<Field>>;

/// Term-over-position order on F ⊕ T, with every T-term below every F-term.
/// Within a block, monomials compare first and lower component index wins ties.
class ModuleOrder {
 public:
  ModuleOrder(TermOrder order, std::size_t nx, std::size_t nvars, std::uint32_t split)
      : order_(order), nx_(nx), nvars_(nvars), split_(split) {}

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    bool ta = ca >= split_, tb = cb >= split_;
    if (ta != tb) return ta ? -1 : 1;
    int c = compare_monomials(order_, a, b, nx_, nvars_);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  std::uint32_t split() const { return split_; }
  std::size_t nx() const { return nx_; }
  std::size_t nvars() const { return nvars_; }
  TermOrder term_order() const { return order_; }

 private:
  TermOrder order_;
  std::size_t nx_;
  std::size_t nvars_;
  std::uint32_t split_;
};

/// Vector arithmetic bound to a field and module order.
template <class Field>
class VecOps {
 public:
  using Element = typename Field::Element;

  VecOps(const Field& field, const ModuleOrder& order) : k_(field), ord_(order) {}

  const Field& field() const { return k_; }
  const ModuleOrder& order() const { return ord_; }

  bool less(const VecTerm<Field>& a, const VecTerm<Field>& b) const {
    return ord_.compare(a.mono, a.comp, b.mono, b.comp) < 0;
  }

  void sort_and_combine(Vec<Field>& v) const {
    std::sort(v.begin(), v.end(), [this](const auto& a, const auto& b) { return less(b, a); });
    Vec<Field> out;
    out.reserve(v.size());
    for (auto& t : v) {
      if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
        out.back().coeff = k_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && k_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k_.is_zero(out.back().coeff)) out.pop_back();
    v = std::move(out);
  }

  /// f + c * m * g.
  Vec<Field> axpy(std::span<const VecTerm<Field>> f, const Element& c, const Monomial& m,
                  std::span<const VecTerm<Field>> g) const {
    Vec<Field> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
      Monomial gm = g[j].mono * m;
      int cmp = ord_.compare(f[i].mono, f[i].comp, gm, g[j].comp);
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back(VecTerm<Field>{gm, g[j].comp, k_.mul(c, g[j].coeff)});
        ++j;
      } else {
        Element s = k_.add(f[i].coeff, k_.mul(c, g[j].coeff));
        if (!k_.is_zero(s)) out.push_back(VecTerm<Field>{gm, f[i].comp, s});
        ++i;
        ++j;
      }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back(VecTerm<Field>{g[j].mono * m, g[j].comp, k_.mul(c, g[j].coeff)});
    return out;
  }

  void make_monic(Vec<Field>& v) const {
    if (v.empty() || k_.is_one(v.front().coeff)) return;
    Element inv = k_.inv(v.front().coeff);
    for (auto& t : v) t.coeff = k_.mul(t.coeff, inv);
  }

  void scale(Vec<Field>& v, const Element& c) const {
    for (auto& t : v) t.coeff = k_.mul(t.coeff, c);
  }

 private:
  const Field& k_;
  const ModuleOrder& ord_;
};

template <class Field>
class BuchbergerEngine {
 public:
  using Element = typename Field::Element;

  struct Options {
    /// Components >= split form the tracking block (split == rank(F) means no tracking).
    std::uint32_t split = 0;
    /// Collect a minimal generating set of the syzygies found in the tracking block.
    bool minimal_syzygies = false;
    /// Allow Buchberger's coprime-lead-term criterion (rank-1 ideals without tracking only).
    bool product_criterion = false;
  };

  /// `shifts` holds the total degree of every component of F ⊕ T.
  BuchbergerEngine(const Field& field, TermOrder order, std::size_t nx, std::size_t nvars, std::vector<int> shifts,
                   Options opts)
      : field_(field),
        order_(order, nx, nvars, opts.split),
        ops_(field_, order_),
        shifts_(std::move(shifts)),
        opts_(opts),
        by_comp_(shifts_.size()),
        pure_by_comp_(shifts_.size()) {}

  BuchbergerEngine(const BuchbergerEngine&) = delete;
  BuchbergerEngine& operator=(const BuchbergerEngine&) = delete;

  const VecOps<Field>& ops() const { return ops_; }
  const ModuleOrder& order() const { return order_; }

  /// Queues an input; it is processed when the run reaches its degree.
  /// Returns the input index.
  std::size_t add_input(Vec<Field> v) {
    ops_.sort_and_combine(v);
    std::size_t idx = inputs_.size();
    std::optional<int> deg;
    for (const auto& t : v) {
      int d = term_degree(t);
      if (deg && *deg != d) throw Error("Groebner engine: non-homogeneous input vector");
      deg = d;
    }
    inputs_.push_back(Input{std::move(v), deg.value_or(std::numeric_limits<int>::min()), false, false});
    return idx;
  }

  void run() {
    while (true) {
      std::optional<int> d = next_degree();
      if (!d) break;
      process_degree(*d);
    }
  }

  /// Nonpure Gröbner elements (lead term in F), monic, with their tracking parts.
  const std::vector<Vec<Field>>& basis() const { return basis_; }

  /// Whether input k survived reduction, i.e. belongs to a minimal generating set.
  bool input_is_minimal(std::size_t k) const { return inputs_.at(k).minimal; }

  /// Minimal syzygy generators (tracking block only, components still offset by split).
  const std::vector<Vec<Field>>& minimal_syzygies() const { return min_syz_; }

  /// Reduces the lead term repeatedly using nonpure basis elements. Stops at zero,
  /// at a pure lead term, or at an F-lead term that no basis element divides.
  Vec<Field> top_reduce(Vec<Field> v) const { return top_reduce_with(std::move(v), basis_, by_comp_, true); }

  /// Full reduction of every F-term of v by the nonpure basis. T-terms are kept.
  Vec<Field> normal_form(const Vec<Field>& v) const {
    Vec<Field> cur = v;
    Vec<Field> rem;
    std::size_t start = 0;
    while (start < cur.size()) {
      const auto& lead = cur[start];
      if (lead.comp >= order_.split()) {
        rem.insert(rem.end(), cur.begin() + static_cast<std::ptrdiff_t>(start), cur.end());
        break;
      }
      const Vec<Field>* red = find_reducer(basis_, by_comp_, lead.mono, lead.comp);
      if (!red) {
        rem.push_back(lead);
        ++start;
        continue;
      }
      Monomial q = red->front().mono.quotient_of(lead.mono);
      Element c = field_.neg(lead.coeff);
      cur = ops_.axpy(std::span<const VecTerm<Field>>(cur).subspan(start), c, q, *red);
      start = 0;
    }
    return rem;
  }

  /// Interreduced, monic nonpure basis sorted by increasing lead term. Tracking
  /// parts are dropped.
  std::vector<Vec<Field>> reduced_basis() const {
    std::vector<Vec<Field>> out;
    std::vector<std::vector<std::size_t>> comp_index(shifts_.size());
    std::vector<Vec<Field>> stripped;
    for (const auto& g : basis_) stripped.push_back(strip_tracking(g));
    // Drop elements whose lead term is divisible by an earlier one (cannot happen
    // with top-reduced insertion, kept as a guard for equal leads).
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < stripped.size(); ++i) {
      bool redundant = false;
      for (std::size_t j : keep) {
        if (stripped[j].front().comp == stripped[i].front().comp &&
            stripped[j].front().mono.divides(stripped[i].front().mono)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Vec<Field>> kept;
    for (std::size_t i : keep) kept.push_back(stripped[i]);
    for (std::size_t i = 0; i < kept.size(); ++i) comp_index[kept[i].front().comp].push_back(i);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      Vec<Field> tail(kept[i].begin() + 1, kept[i].end());
      Vec<Field> red = full_reduce(tail, kept, comp_index);
      Vec<Field> g;
      g.push_back(kept[i].front());
      g.insert(g.end(), red.begin(), red.end());
      ops_.make_monic(g);
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [this](const Vec<Field>& a, const Vec<Field>& b) {
      return ops_.less(a.front(), b.front());
    });
    return out;
  }

  Vec<Field> strip_tracking(const Vec<Field>& v) const {
    Vec<Field> out;
    for (const auto& t : v) {
      if (t.comp < order_.split()) out.push_back(t);
    }
    return out;
  }

  int term_degree(const VecTerm<Field>& t) const { return t.mono.total_degree() + shifts_.at(t.comp); }

 private:
  struct Input {
    Vec<Field> v;
    int degree;
    bool processed;
    bool minimal;
  };

  struct Pair {
    int degree;
    std::uint32_t i;
    std::uint32_t j;
    Monomial lcm;
    std::uint32_t comp;
  };

  // Full reduction of a T-free vector against `gens` (used for interreduction).
  Vec<Field> full_reduce(Vec<Field> cur, const std::vector<Vec<Field>>& gens,
                         const std::vector<std::vector<std::size_t>>& index) const {
    Vec<Field> rem;
    std::size_t start = 0;
    while (start < cur.size()) {
      const auto& lead = cur[start];
      const Vec<Field>* red = find_reducer(gens, index, lead.mono, lead.comp);
      if (!red) {
        rem.push_back(lead);
        ++start;
        continue;
      }
      Monomial q = red->front().mono.quotient_of(lead.mono);
      Element c = field_.neg(field_.div(lead.coeff, red->front().coeff));
      cur = ops_.axpy(std::span<const VecTerm<Field>>(cur).subspan(start), c, q, *red);
      start = 0;
    }
    return rem;
  }

  const Vec<Field>* find_reducer(const std::vector<Vec<Field>>& elems,
                                 const std::vector<std::vector<std::size_t>>& index, const Monomial& m,
                                 std::uint32_t comp) const {
    for (std::size_t idx : index[comp]) {
      const auto& lead = elems[idx].front();
      if (lead.mono.divides(m)) return &elems[idx];
    }
    return nullptr;
  }

  // Elements are monic, so the multiplier is just -lead.coeff.
  Vec<Field> top_reduce_with(Vec<Field> v, const std::vector<Vec<Field>>& elems,
                             const std::vector<std::vector<std::size_t>>& index, bool stop_at_pure) const {
    while (!v.empty()) {
      const auto& lead = v.front();
      if (stop_at_pure && lead.comp >= order_.split()) break;
      const Vec<Field>* red = find_reducer(elems, index, lead.mono, lead.comp);
      if (!red) break;
      Monomial q = red->front().mono.quotient_of(lead.mono);
      Element c = field_.neg(lead.coeff);
      v = ops_.axpy(v, c, q, *red);
    }
    return v;
  }

  std::optional<int> next_degree() const {
    std::optional<int> d;
    for (const auto& p : pairs_) {
      if (!d || p.degree < *d) d = p.degree;
    }
    for (const auto& in : inputs_) {
      if (!in.processed && (!d || in.degree < *d)) d = in.degree;
    }
    return d;
  }

  Vec<Field> spoly(const Pair& p, const std::vector<Vec<Field>>& elems) const {
    const auto& a = elems[p.i];
    const auto& b = elems[p.j];
    Monomial qa = a.front().mono.quotient_of(p.lcm);
    Monomial qb = b.front().mono.quotient_of(p.lcm);
    Vec<Field> sa = ops_.axpy(Vec<Field>{}, field_.one(), qa, a);
    return ops_.axpy(sa, field_.neg(field_.one()), qb, b);
  }

  // Gebauer–Möller installation of element h into (elems, pairs).
  void update_pairs(std::vector<Vec<Field>>& elems, std::vector<std::vector<std::size_t>>& index,
                    std::vector<Pair>& pairs, std::size_t h, bool product_criterion) {
    const auto& hl = elems[h].front();
    const std::size_t nx = order_.nx();
    std::vector<Pair> cand;
    std::vector<bool> coprime;
    for (std::size_t g : index[hl.comp]) {
      const auto& gl = elems[g].front();
      Monomial l = hl.mono.lcm(gl.mono, nx);
      cand.push_back(Pair{l.total_degree() + shifts_[hl.comp], static_cast<std::uint32_t>(g),
                          static_cast<std::uint32_t>(h), l, hl.comp});
      coprime.push_back(product_criterion && hl.mono.coprime(gl.mono));
    }
    // Chain criterion among the new pairs.
    std::vector<bool> alive(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !alive[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm)) {
          // Equal lcm: keep the later one unless the earlier is coprime.
          if (cand[b].lcm == cand[a].lcm && b < a && !coprime[b]) continue;
          alive[a] = false;
          break;
        }
      }
    }
    // Chain criterion on old pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + cand.size());
    for (const Pair& p : pairs) {
      if (p.comp == hl.comp && hl.mono.divides(p.lcm)) {
        Monomial li = elems[p.i].front().mono.lcm(hl.mono, nx);
        Monomial lj = elems[p.j].front().mono.lcm(hl.mono, nx);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (alive[a] && !coprime[a]) kept.push_back(cand[a]);
    }
    pairs = std::move(kept);
    index[hl.comp].push_back(h);
  }

  void insert_basis(Vec<Field> v) {
    ops_.make_monic(v);
    basis_.push_back(std::move(v));
    update_pairs(basis_, by_comp_, pairs_, basis_.size() - 1, opts_.product_criterion);
  }

  void insert_pure(Vec<Field> v) {
    ops_.make_monic(v);
    pure_.push_back(std::move(v));
    update_pairs(pure_, pure_by_comp_, pure_pairs_, pure_.size() - 1, false);
  }

  std::vector<Pair> extract_pairs(std::vector<Pair>& pairs, int degree_bound, bool exact) {
    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (auto& p : pairs) {
      bool take = exact ? p.degree == degree_bound : p.degree <= degree_bound;
      (take ? batch : rest).push_back(p);
    }
    pairs = std::move(rest);
    std::sort(batch.begin(), batch.end(), [this](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      int c = order_.compare(a.lcm, a.comp, b.lcm, b.comp);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    return batch;
  }

  void process_degree(int d) {
    std::vector<Vec<Field>> candidates;
    auto route = [&](Vec<Field> r) -> bool {
      if (r.empty()) return false;
      if (r.front().comp >= order_.split()) {
        if (opts_.minimal_syzygies) candidates.push_back(std::move(r));
        return false;
      }
      insert_basis(std::move(r));
      return true;
    };

    for (const Pair& p : extract_pairs(pairs_, d, true)) route(top_reduce(spoly(p, basis_)));

    for (auto& in : inputs_) {
      if (in.processed || in.degree != d) continue;
      in.processed = true;
      in.minimal = route(top_reduce(in.v));
    }
    // Zero inputs have no degree; mark them processed and redundant.
    for (auto& in : inputs_) {
      if (!in.processed && in.v.empty()) in.processed = true;
    }

    if (!opts_.minimal_syzygies) return;
    // Complete the syzygy basis through degree d, then keep the candidates that
    // are not already in the span.
    while (true) {
      std::vector<Pair> batch = extract_pairs(pure_pairs_, d, false);
      if (batch.empty()) break;
      for (const Pair& p : batch) {
        Vec<Field> r = top_reduce_with(spoly(p, pure_), pure_, pure_by_comp_, false);
        if (!r.empty()) insert_pure(std::move(r));
      }
    }
    for (auto& c : candidates) {
      Vec<Field> r = top_reduce_with(std::move(c), pure_, pure_by_comp_, false);
      if (r.empty()) continue;
      min_syz_.push_back(r);
      insert_pure(std::move(r));
    }
  }

  Field field_;
  ModuleOrder order_;
  VecOps<Field> ops_;
  std::vector<int> shifts_;
  Options opts_;

  std::vector<Input> inputs_;
  std::vector<Vec<Field>> basis_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;

  std::vector<Vec<Field>> pure_;
  std::vector<std::vector<std::size_t>> pure_by_comp_;
  std::vector<Pair> pure_pairs_;
  std::vector<Vec<Field>> min_syz_;
};

}  // namespace symres::detail
