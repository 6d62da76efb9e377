#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "symres/constructions.hpp"

namespace symres {

/// n+1 forms of a common degree η >= 2 in R = k[x_0..x_n], linearly independent.
template <class Field>
struct InputIdeal {
  RingPtr<Field> ring;
  std::vector<Polynomial<Field>> generators;
  int n = 0;
  int eta = 0;
};

namespace detail {

/// Rank of the coefficient matrix of a list of polynomials.
template <class Field>
std::size_t linear_rank(const std::vector<Polynomial<Field>>& ps) {
  if (ps.empty()) return 0;
  const Field& k = ps.front().ring()->field();
  std::vector<Monomial> monos;
  for (const auto& p : ps) {
    for (const auto& t : p.terms()) monos.push_back(t.mono);
  }
  auto lex = [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); };
  std::sort(monos.begin(), monos.end(), lex);
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<std::vector<typename Field::Element>> rows;
  for (const auto& p : ps) {
    std::vector<typename Field::Element> row(monos.size(), k.zero());
    for (const auto& t : p.terms()) {
      auto it = std::lower_bound(monos.begin(), monos.end(), t.mono, lex);
      row[static_cast<std::size_t>(it - monos.begin())] = t.coeff;
    }
    rows.push_back(std::move(row));
  }
  return scalar_rank(k, std::move(rows));
}

}  // namespace detail

/// Validates the input shape: exactly n+1 nonzero forms in x only, one common
/// degree η >= 2, linearly independent over k.
template <class Field>
InputIdeal<Field> make_input_ideal(const RingPtr<Field>& r, std::vector<Polynomial<Field>> gens) {
  if (r->num_y() != 0) throw Error("input ideal: ring must have x-variables only");
  const int n = static_cast<int>(r->num_x()) - 1;
  if (n < 1) throw Error("input ideal: need at least two variables");
  if (gens.size() != r->num_x()) {
    throw Error("input ideal: expected " + std::to_string(n + 1) + " generators, got " + std::to_string(gens.size()));
  }
  std::optional<int> eta;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    gens[i] = gens[i].in_ring(r);
    auto d = gens[i].bidegree();
    if (!d) throw Error("input ideal: generator " + std::to_string(i + 1) + " is zero or not homogeneous");
    if (eta && *eta != d->x) {
      throw Error("input ideal: generators are not equigenerated (degrees " + std::to_string(*eta) + " and " +
                  std::to_string(d->x) + ")");
    }
    eta = d->x;
  }
  if (*eta < 2) throw Error("input ideal: generator degree must be at least 2, got " + std::to_string(*eta));
  if (detail::linear_rank(gens) != gens.size()) throw Error("input ideal: generators are linearly dependent");
  return InputIdeal<Field>{r, std::move(gens), n, *eta};
}

struct HypothesisReport {
  bool num_generators_ok = false;
  bool equigenerated_ok = false;
  int dimension = 0;
  std::size_t projective_dimension = 0;
  bool is_cm = false;
  /// n = 1 and the two forms are a regular sequence (dim R/I_Z = 0); accepted
  /// as the degenerate case of the theorem.
  bool degenerate_ci = false;

  bool theorem_applies() const { return num_generators_ok && equigenerated_ok && (is_cm || degenerate_ci); }
};

template <class Field>
HypothesisReport check_hypotheses(const InputIdeal<Field>& in) {
  HypothesisReport h;
  h.num_generators_ok = minimal_generators(in.ring, in.generators).size() == static_cast<std::size_t>(in.n + 1);
  h.equigenerated_ok = true;
  for (const auto& g : in.generators) {
    auto d = g.bidegree();
    h.equigenerated_ok = h.equigenerated_ok && d && d->x == in.eta && d->y == 0;
  }
  h.dimension = krull_dimension(in.ring, in.generators);
  h.projective_dimension = projective_dimension(in.ring, in.generators);
  h.is_cm = h.dimension == 1 && h.projective_dimension == static_cast<std::size_t>(in.n);
  h.degenerate_ci = in.n == 1 && h.dimension == 0 && h.projective_dimension == 2;
  return h;
}

/// Result of comparing two Hilbert series (and a window of Hilbert function values).
struct IdentityCheck {
  bool holds = false;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  HypothesisReport hypotheses;
  BettiTable iz_betti;
  BettiTable computed_betti;
  std::optional<BettiTable> predicted_betti;
  std::optional<bool> betti_match;
  std::optional<BettiTable> patched_betti;
  std::optional<bool> patched_match;
  /// Shifts of the resolution of I_X/I_K against the dualized resolution of R/I_Z.
  std::optional<bool> quotient_resolution_match;
  bool subregular = false;
  std::optional<EntryWitness> subregular_witness;
  /// dim R/I_Z = 1 and Cohen–Macaulay, the precondition of the three identities below.
  bool identities_apply = false;
  /// Unset unless R/I_Z is Cohen–Macaulay of dimension 1 or a complete intersection with n = 1.
  std::optional<IdentityCheck> colon;
  std::optional<IdentityCheck> quotient_hilbert;
  std::optional<IdentityCheck> h1;
  bool sym1_ok = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> sym1_values;
  bool resource_limited = false;
  std::map<std::string, double> timings_ms;

  /// Every check that applies came out true.
  bool all_ok() const {
    if (resource_limited) return false;
    bool ok = sym1_ok;
    if (hypotheses.theorem_applies()) {
      ok = ok && betti_match.value_or(false) && subregular && patched_match.value_or(false);
    }
    if (identities_apply) {
      for (const auto* c : {&colon, &quotient_hilbert, &h1}) ok = ok && c->has_value() && (*c)->holds;
    }
    if (quotient_resolution_match) ok = ok && *quotient_resolution_match;
    return ok;
  }
};

struct VerifyOptions {
  TermOrder order = TermOrder::Block;
  int d_max = 6;
  std::optional<std::size_t> max_length;
  /// Build and minimize the patched resolution (the second route to the table).
  bool patched = true;
};

/// Objects shared by the checks: R, S, the resolution of R/I_Z, I_X and I_K.
template <class Field>
struct SymmetricSetup {
  RingPtr<Field> r;
  RingPtr<Field> s;
  ResolutionReport<Field> iz_res;
  PolyMatrix<Field> presentation;
  std::vector<Polynomial<Field>> ix;
  std::vector<Polynomial<Field>> ik;

  static SymmetricSetup build(const InputIdeal<Field>& in, TermOrder order, std::optional<std::size_t> max_length = {}) {
    SymmetricSetup st;
    st.r = in.ring;
    st.s = in.ring->symmetric_extension(order);
    st.iz_res = resolve_quotient(st.r, in.generators, max_length);
    const auto& c = st.iz_res.complex;
    if (c.size() < 3) {
      st.presentation = PolyMatrix<Field>(st.r, c.size() > 1 ? c.module(1) : GradedFreeModule{}, GradedFreeModule{});
    } else {
      st.presentation = c.differential(2);
    }
    // Rows of the presentation follow the minimal generators, which are the
    // input generators in order (they are linearly independent of one degree).
    st.ix = minimal_generators(st.s, symmetric_algebra_ideal(st.s, st.presentation));
    st.ik = koszul_hull_ideal(st.s, in.generators);
    return st;
  }
};

namespace detail {

template <class Clock = std::chrono::steady_clock>
class StageTimer {
 public:
  explicit StageTimer(std::map<std::string, double>& sink) : sink_(sink), last_(Clock::now()) {}
  void mark(const std::string& stage) {
    auto now = Clock::now();
    sink_[stage] += std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  std::map<std::string, double>& sink_;
  typename Clock::time_point last_;
};

/// ω_{R_Z} presentation, or nullopt when R/I_Z is not Cohen–Macaulay.
template <class Field>
std::optional<PolyMatrix<Field>> try_canonical(const ChainComplex<Field>& res) {
  try {
    return canonical_module(res);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// (I_K : I_X) = I_Z·S, by comparing reduced Gröbner bases.
template <class Field>
IdentityCheck check_colon_identity(const SymmetricSetup<Field>& st, const InputIdeal<Field>& in) {
  IdentityCheck c;
  auto colon = colon_ideal(st.s, st.ik, st.ix);
  std::vector<Polynomial<Field>> izs;
  for (const auto& g : in.generators) izs.push_back(g.in_ring(st.s));
  auto target = buchberger(st.s, izs);
  c.holds = colon == target;
  auto show = [](const GroebnerBasis<Field>& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + g.elements()[i][0].to_string();
    return out + ")";
  };
  c.lhs = show(colon);
  c.rhs = show(target);
  return c;
}

/// HS(S/I_K) - HS(S/I_X) = HS(ω_{R_Z})(s) · s^{n(η-1)-1} · t / (1-t)^{n+1}.
template <class Field>
IdentityCheck check_quotient_hilbert_identity(const SymmetricSetup<Field>& st, const InputIdeal<Field>& in,
                                              const PolyMatrix<Field>& omega,
                                              const std::optional<HilbertSeries>& hs_ix = {}) {
  IdentityCheck c;
  HilbertSeries lhs = hilbert_series(st.s, st.ik) - (hs_ix ? *hs_ix : hilbert_series(st.s, st.ix));
  HilbertSeries hs_omega = hilbert_series(omega);
  HilbertSeries rhs(st.s->num_x(), st.s->num_y());
  int shift = in.n * (in.eta - 1) - 1;
  for (const auto& [d, coef] : hs_omega.numerator()) rhs.add_term({d.x + shift, d.y + 1}, coef);
  c.holds = lhs == rhs;
  c.lhs = lhs.to_string();
  c.rhs = rhs.to_string();
  return c;
}

/// HS(H_1) = s^{(n+1)(η-1)} HS(ω_{R_Z}), plus agreement of the Hilbert functions
/// on a window of degrees.
template <class Field>
IdentityCheck check_h1_identity(const InputIdeal<Field>& in, const PolyMatrix<Field>& omega) {
  IdentityCheck c;
  auto h1 = koszul_h1(in.ring, in.generators);
  HilbertSeries lhs = hilbert_series(h1);
  int shift = (in.n + 1) * (in.eta - 1);
  HilbertSeries rhs = hilbert_series(omega).shifted({shift, 0});
  c.holds = lhs == rhs;
  int window = (in.n + 1) * in.eta + 6;
  for (int d = 0; d <= window && c.holds; ++d) {
    c.holds = hilbert_function_piece(h1, {d, 0}) == hilbert_function_piece(omega, {d - shift, 0});
  }
  c.lhs = lhs.to_string();
  c.rhs = rhs.to_string();
  return c;
}

/// dim (S/I_X)_{(d,1)} = dim (I_Z)_{d+η} for 0 <= d <= d_max. Returns the pairs.
template <class Field>
std::vector<std::pair<std::int64_t, std::int64_t>> sym1_values(const SymmetricSetup<Field>& st,
                                                               const InputIdeal<Field>& in, int d_max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  auto ix_row = PolyMatrix<Field>::row(st.s, st.ix);
  auto iz_row = PolyMatrix<Field>::row(st.r, in.generators);
  for (int d = 0; d <= d_max; ++d) {
    std::int64_t left = hilbert_function_piece(ix_row, {d, 1});
    int e = d + in.eta;
    std::int64_t ring_dim = HilbertSeries::count_monomials(st.r->num_x(), e);
    std::int64_t right = ring_dim - hilbert_function_piece(iz_row, {e, 0});
    out.emplace_back(left, right);
  }
  return out;
}

template <class Field>
bool check_sym1_identity(const SymmetricSetup<Field>& st, const InputIdeal<Field>& in, int d_max) {
  for (const auto& [a, b] : sym1_values(st, in, d_max)) {
    if (a != b) return false;
  }
  return true;
}

/// Minimizes the patched resolution of S/I_X built from the Eagon–Northcott
/// complex and a resolution of I_X/I_K; also reports whether the latter has the
/// shifts of the dualized resolution of R/I_Z.
template <class Field>
std::pair<ChainComplex<Field>, bool> patched_minimal_resolution(const SymmetricSetup<Field>& st,
                                                                const InputIdeal<Field>& in) {
  auto q = eagon_northcott_complex(st.s, in.generators);
  auto gens = quotient_generators(st.s, st.ix, st.ik);
  ChainComplex<Field> pprime(st.s, {GradedFreeModule{}}, {});
  if (!gens.empty()) {
    auto pres = quotient_presentation(st.s, gens, st.ik);
    pprime = shift_to_module_resolution(resolve_cokernel(pres).complex);
  }
  bool shape = betti_table(pprime) == dual_shifted_table(st.iz_res.betti, in.eta, in.n);
  auto patched = build_patched_resolution(q, pprime, gens);
  return {minimize(patched), shape};
}

/// Full verification of one input: hypotheses, computed and predicted Betti
/// tables of I_X, subregularity, and the graded identities.
template <class Field>
VerificationReport verify_theorem2(const InputIdeal<Field>& in, const VerifyOptions& opts = {}) {
  VerificationReport rep;
  detail::StageTimer timer(rep.timings_ms);
  rep.hypotheses = check_hypotheses(in);
  timer.mark("hypotheses");
  auto st = SymmetricSetup<Field>::build(in, opts.order, opts.max_length);
  rep.iz_betti = st.iz_res.betti;
  rep.resource_limited = !st.iz_res.complete;
  timer.mark("resolve_iz");
  if (rep.resource_limited) return rep;

  auto ix_res = resolve_quotient(st.s, st.ix, opts.max_length);
  rep.resource_limited = rep.resource_limited || !ix_res.complete;
  rep.computed_betti = ix_res.betti;
  auto sub = is_subregular(ix_res.complex);
  rep.subregular = sub.subregular;
  rep.subregular_witness = sub.witness;
  timer.mark("resolve_ix");
  if (rep.resource_limited) return rep;

  if (rep.hypotheses.theorem_applies()) {
    rep.predicted_betti = predicted_theorem_table(rep.iz_betti, in.eta, in.n);
    rep.betti_match = *rep.predicted_betti == rep.computed_betti;
    if (opts.patched) {
      auto [minimal, shape] = patched_minimal_resolution(st, in);
      rep.patched_betti = betti_table(minimal);
      rep.patched_match = *rep.patched_betti == *rep.predicted_betti;
      if (rep.hypotheses.is_cm) rep.quotient_resolution_match = shape;
      timer.mark("patched");
    }
  }

  // For n = 1 complete intersections I_X = I_K, so these cannot hold; they
  // are still computed and reported, but do not count towards all_ok().
  rep.identities_apply = rep.hypotheses.is_cm;
  if (rep.hypotheses.is_cm || rep.hypotheses.degenerate_ci) {
    rep.colon = check_colon_identity(st, in);
    timer.mark("colon");
    auto omega = detail::try_canonical(st.iz_res.complex);
    if (omega) {
      rep.quotient_hilbert = check_quotient_hilbert_identity(st, in, *omega, hilbert_series(ix_res.complex));
      timer.mark("quotient_hilbert");
      rep.h1 = check_h1_identity(in, *omega);
      timer.mark("h1");
    }
  }
  rep.sym1_values = sym1_values(st, in, opts.d_max);
  rep.sym1_ok = std::all_of(rep.sym1_values.begin(), rep.sym1_values.end(),
                            [](const auto& p) { return p.first == p.second; });
  timer.mark("sym1");
  return rep;
}

/// d∘d = 0, exactness in positive degrees, and image of d_1 = I_K.
struct EagonNorthcottCheck {
  bool complex_ok = false;
  bool exact = false;
  bool image_is_ik = false;
  bool ok() const { return complex_ok && exact && image_is_ik; }
};

template <class Field>
EagonNorthcottCheck check_eagon_northcott(const InputIdeal<Field>& in, TermOrder order) {
  EagonNorthcottCheck out;
  auto s = in.ring->symmetric_extension(order);
  auto en = eagon_northcott_complex(s, in.generators);
  out.complex_ok = en.is_complex();
  out.exact = true;
  for (std::size_t i = 1; i < en.size() && out.exact; ++i) {
    auto syz = syzygy_matrix(en.differential(i));
    if (i + 1 < en.size()) {
      // ker d_i ⊆ im d_{i+1}; the converse is d∘d = 0.
      out.exact = image_contains(en.differential(i + 1), syz);
    } else {
      out.exact = syz.cols() == 0;
    }
  }
  auto ik = koszul_hull_ideal(s, in.generators);
  out.image_is_ik = same_ideal(s, en.differential(1).entries_row_major(), ik);
  return out;
}

/// Ranks of the presentation matrix at random points off Z, and at the
/// coordinate points e_k that lie on Z.
struct FibreCheck {
  std::size_t sampled = 0;
  std::size_t off_z_rank_n = 0;
  std::size_t skipped_in_z = 0;
  /// (k, rank) for every coordinate point e_k on Z.
  std::vector<std::pair<std::size_t, std::size_t>> coordinate_points;
  bool ok(std::size_t n) const {
    if (off_z_rank_n != sampled) return false;
    for (const auto& [k, rank] : coordinate_points) {
      if (rank + 1 != n) return false;
    }
    return true;
  }
};

template <class Field>
FibreCheck check_fibre_ranks(const InputIdeal<Field>& in, std::size_t samples, std::uint64_t seed) {
  FibreCheck out;
  auto res = resolve_quotient(in.ring, in.generators);
  if (res.complex.size() < 3) return out;
  const auto& m = res.complex.differential(2);
  const Field& k = in.ring->field();
  std::mt19937_64 rng(seed);
  const std::size_t nv = in.ring->num_vars();
  const std::uint64_t modulus = k.characteristic() == 0 ? 101 : k.characteristic();
  while (out.sampled < samples) {
    std::vector<typename Field::Element> pt;
    bool zero = true;
    for (std::size_t i = 0; i < nv; ++i) {
      auto v = static_cast<std::int64_t>(rng() % modulus);
      zero = zero && v == 0;
      pt.push_back(k.from_int(v));
    }
    if (zero) continue;
    auto fr = fitting_rank_at_point(m, in.generators, std::span<const typename Field::Element>(pt));
    if (fr.in_z) {
      ++out.skipped_in_z;
      continue;
    }
    ++out.sampled;
    if (fr.rank == static_cast<std::size_t>(in.n)) ++out.off_z_rank_n;
  }
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<typename Field::Element> pt(nv, k.zero());
    pt[i] = k.one();
    auto fr = fitting_rank_at_point(m, in.generators, std::span<const typename Field::Element>(pt));
    if (fr.in_z) out.coordinate_points.emplace_back(i, fr.rank);
  }
  return out;
}

/// An input ideal with integer coefficients, so that one seeded draw can be
/// read over several fields.
struct IntegerIdeal {
  int n = 0;
  int eta = 0;
  std::uint64_t seed = 0;
  /// Per generator: (exponent vector of length n+1, coefficient).
  std::vector<std::vector<std::pair<std::vector<int>, std::int64_t>>> generators;
};

template <class Field>
InputIdeal<Field> to_input_ideal(const IntegerIdeal& z, const Field& field) {
  auto r = make_ring<Field>(field, static_cast<std::size_t>(z.n + 1), 0, TermOrder::GrevlexAll);
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : z.generators) {
    std::vector<typename Polynomial<Field>::Term> terms;
    for (const auto& [e, c] : g) {
      terms.push_back({Monomial::from_exponents(std::span<const int>(e), {}), field.from_int(c)});
    }
    gens.emplace_back(r, std::move(terms));
  }
  return make_input_ideal(r, std::move(gens));
}

namespace detail {

/// Uniform integer in [lo, hi] from a 64-bit engine, by plain reduction (the
/// mapping is fixed so that seeds reproduce across standard libraries).
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

using IntPoly = std::map<std::vector<int>, std::int64_t>;

inline IntPoly random_form(std::mt19937_64& rng, std::size_t nvars, int degree) {
  IntPoly p;
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == nvars) {
      e[pos] = left;
      auto c = draw(rng, -5, 5);
      if (c != 0) p[e] = c;
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[pos] = a;
      rec(pos + 1, left - a);
    }
  };
  rec(0, degree);
  return p;
}

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline IntPoly int_sub(IntPoly a, const IntPoly& b) {
  for (const auto& [e, c] : b) a[e] -= c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

inline std::vector<std::pair<std::vector<int>, std::int64_t>> flatten(const IntPoly& p) {
  return {p.begin(), p.end()};
}

template <class Check>
IntegerIdeal retry_until(std::uint64_t seed, int max_tries, const std::function<IntegerIdeal(std::mt19937_64&)>& draw_one,
                         const Check& accept) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < max_tries; ++t) {
    IntegerIdeal z = draw_one(rng);
    z.seed = seed;
    if (accept(z)) return z;
  }
  throw Error("random input generation exhausted its retries (seed " + std::to_string(seed) + ")");
}

}  // namespace detail

/// Accepts a draw when it is a valid input over every listed prime and the
/// theorem's hypotheses hold there.
inline bool hypotheses_hold_mod(const IntegerIdeal& z, const std::vector<std::uint32_t>& primes) {
  for (auto p : primes) {
    try {
      auto in = to_input_ideal(z, PrimeField(p));
      if (!check_hypotheses(in).theorem_applies()) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

/// Three forms of degree η = d1 + d2 in k[x0,x1,x2]: the 2x2 minors of a random
/// 3x2 integer matrix whose columns have entries of degrees d1 and d2.
inline IntegerIdeal random_hilbert_burch(int eta, int d1, std::uint64_t seed,
                                         const std::vector<std::uint32_t>& primes = {32003}) {
  if (eta < 2 || d1 < 1 || d1 >= eta) throw Error("random_hilbert_burch: need eta >= 2 and 1 <= d1 < eta");
  int d2 = eta - d1;
  auto draw_one = [&](std::mt19937_64& rng) {
    std::vector<detail::IntPoly> a, b;
    for (int i = 0; i < 3; ++i) a.push_back(detail::random_form(rng, 3, d1));
    for (int i = 0; i < 3; ++i) b.push_back(detail::random_form(rng, 3, d2));
    IntegerIdeal z;
    z.n = 2;
    z.eta = eta;
    // φ_i = (-1)^i det of the rows other than i.
    for (int i = 0; i < 3; ++i) {
      int r0 = i == 0 ? 1 : 0, r1 = i == 2 ? 1 : 2;
      auto minor = detail::int_sub(detail::int_mul(a[r0], b[r1]), detail::int_mul(a[r1], b[r0]));
      if (i == 1) minor = detail::int_sub({}, minor);
      z.generators.push_back(detail::flatten(minor));
    }
    return z;
  };
  return detail::retry_until(seed, 100, draw_one, [&](const IntegerIdeal& z) { return hypotheses_hold_mod(z, primes); });
}

/// Two random coprime binary forms of degree η (the n = 1 case).
inline IntegerIdeal random_complete_intersection(int eta, std::uint64_t seed,
                                                 const std::vector<std::uint32_t>& primes = {32003}) {
  if (eta < 2) throw Error("random_complete_intersection: need eta >= 2");
  auto draw_one = [&](std::mt19937_64& rng) {
    IntegerIdeal z;
    z.n = 1;
    z.eta = eta;
    for (int i = 0; i < 2; ++i) z.generators.push_back(detail::flatten(detail::random_form(rng, 2, eta)));
    return z;
  };
  return detail::retry_until(seed, 100, draw_one, [&](const IntegerIdeal& z) { return hypotheses_hold_mod(z, primes); });
}

struct BatteryCase {
  IntegerIdeal ideal;
  std::string label;
};

struct BatteryParams {
  int n = 2;
  std::vector<int> etas{2, 3};
  std::size_t count = 20;
  std::uint64_t seed = 7;
  std::vector<std::uint32_t> primes{32003, 31991};
};

/// Seeded list of inputs: for n = 2 Hilbert–Burch ideals cycling through the
/// given degrees, for n = 1 complete intersections.
inline std::vector<BatteryCase> battery_cases(const BatteryParams& p) {
  std::vector<BatteryCase> out;
  std::mt19937_64 seeds(p.seed);
  for (std::size_t i = 0; i < p.count; ++i) {
    int eta = p.etas.at(i % p.etas.size());
    std::uint64_t s = seeds();
    BatteryCase c;
    if (p.n == 2) {
      c.ideal = random_hilbert_burch(eta, eta / 2, s, p.primes);
      c.label = "hilbert-burch eta=" + std::to_string(eta) + " #" + std::to_string(i);
    } else if (p.n == 1) {
      c.ideal = random_complete_intersection(eta, s, p.primes);
      c.label = "complete-intersection eta=" + std::to_string(eta) + " #" + std::to_string(i);
    } else {
      throw Error("battery: only n = 1 and n = 2 generators are available");
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// One case run over every (prime, order) pair.
struct BatteryRun {
  std::uint32_t prime = 0;
  TermOrder order = TermOrder::Block;
  VerificationReport report;
  EagonNorthcottCheck en;
  FibreCheck fibre;
};

struct BatteryCaseResult {
  BatteryCase input;
  std::vector<BatteryRun> runs;
  /// Betti tables and check outcomes agree across all runs.
  bool consistent = false;
};

struct BatterySummary {
  std::size_t cases = 0;
  std::size_t betti_match = 0;
  std::size_t subregular = 0;
  std::size_t patched_match = 0;
  std::size_t en_ok = 0;
  std::size_t fibre_ok = 0;
  std::size_t sym1_ok = 0;
  std::size_t colon_ok = 0;
  std::size_t quotient_ok = 0;
  std::size_t h1_ok = 0;
  std::size_t identities_applicable = 0;
  std::size_t consistent = 0;
  std::vector<BatteryCaseResult> results;

  std::size_t failures() const {
    std::size_t bad = 0;
    for (const auto& r : results) {
      bool ok = r.consistent;
      for (const auto& run : r.runs) ok = ok && run.report.all_ok() && run.en.ok() && run.fibre.ok(r.input.ideal.n);
      bad += ok ? 0 : 1;
    }
    return bad;
  }
};

inline bool same_outcome(const VerificationReport& a, const VerificationReport& b) {
  auto holds = [](const std::optional<IdentityCheck>& c) { return c ? std::optional<bool>(c->holds) : std::nullopt; };
  return a.iz_betti == b.iz_betti && a.computed_betti == b.computed_betti && a.predicted_betti == b.predicted_betti &&
         a.betti_match == b.betti_match && a.patched_match == b.patched_match && a.subregular == b.subregular &&
         holds(a.colon) == holds(b.colon) && holds(a.quotient_hilbert) == holds(b.quotient_hilbert) &&
         holds(a.h1) == holds(b.h1) && a.sym1_values == b.sym1_values &&
         a.hypotheses.dimension == b.hypotheses.dimension && a.hypotheses.is_cm == b.hypotheses.is_cm;
}

inline BatteryCaseResult run_battery_case(const BatteryCase& c, const std::vector<std::uint32_t>& primes,
                                          const std::vector<TermOrder>& orders, const VerifyOptions& base) {
  BatteryCaseResult res;
  res.input = c;
  for (auto p : primes) {
    PrimeField field(p);
    auto in = to_input_ideal(c.ideal, field);
    FibreCheck fibre = check_fibre_ranks(in, 100, c.ideal.seed ^ p);
    for (auto o : orders) {
      BatteryRun run;
      run.prime = p;
      run.order = o;
      VerifyOptions opts = base;
      opts.order = o;
      run.report = verify_theorem2(in, opts);
      run.en = check_eagon_northcott(in, o);
      run.fibre = fibre;
      res.runs.push_back(std::move(run));
    }
  }
  res.consistent = true;
  for (const auto& run : res.runs) {
    res.consistent = res.consistent && same_outcome(run.report, res.runs.front().report) &&
                     run.en.ok() == res.runs.front().en.ok();
  }
  return res;
}

/// Thread count from SYMRES_THREADS (default 1).
inline std::size_t battery_threads() {
  const char* env = std::getenv("SYMRES_THREADS");
  if (!env) return 1;
  try {
    long v = std::stol(env);
    return v < 1 ? 1 : static_cast<std::size_t>(v);
  } catch (...) {
    return 1;
  }
}

/// Runs every case over all primes and orders. Cases are independent; with
/// threads > 1 they run concurrently and results keep the input order.
inline BatterySummary run_battery(const std::vector<BatteryCase>& cases, const std::vector<std::uint32_t>& primes,
                                  const std::vector<TermOrder>& orders, const VerifyOptions& opts = {},
                                  std::size_t threads = 1) {
  BatterySummary sum;
  sum.cases = cases.size();
  sum.results.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) sum.results[i] = run_battery_case(cases[i], primes, orders, opts);
  };
  threads = std::max<std::size_t>(1, std::min(threads, cases.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : sum.results) {
    auto all = [&](auto pred) { return std::all_of(r.runs.begin(), r.runs.end(), pred); };
    sum.betti_match += all([](const BatteryRun& x) { return x.report.betti_match.value_or(false); });
    sum.subregular += all([](const BatteryRun& x) { return x.report.subregular; });
    sum.patched_match += all([](const BatteryRun& x) { return x.report.patched_match.value_or(false); });
    sum.en_ok += all([](const BatteryRun& x) { return x.en.ok(); });
    sum.fibre_ok += all([&](const BatteryRun& x) { return x.fibre.ok(r.input.ideal.n); });
    sum.sym1_ok += all([](const BatteryRun& x) { return x.report.sym1_ok; });
    bool applicable = all([](const BatteryRun& x) { return x.report.identities_apply; });
    if (applicable) {
      ++sum.identities_applicable;
      sum.colon_ok += all([](const BatteryRun& x) { return x.report.colon->holds; });
      sum.quotient_ok += all([](const BatteryRun& x) { return x.report.quotient_hilbert && x.report.quotient_hilbert->holds; });
      sum.h1_ok += all([](const BatteryRun& x) { return x.report.h1 && x.report.h1->holds; });
    }
    sum.consistent += r.consistent ? 1 : 0;
  }
  return sum;
}

}  // namespace symres
