// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "symres/io.hpp"
#include "symres/symres.hpp"

using namespace symres;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

bool report(int k, const Outcome& o) {
  std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << std::endl;
  return o.pass;
}

BettiTable quartic_table() {
  BettiTable t;
  t.add(1, {1, 1}, 1);
  t.add(1, {2, 1}, 2);
  t.add(1, {3, 1}, 1);
  t.add(2, {4, 1}, 1);
  t.add(2, {3, 2}, 3);
  t.add(2, {4, 2}, 1);
  t.add(2, {3, 3}, 1);
  t.add(3, {5, 2}, 1);
  t.add(3, {4, 3}, 3);
  t.add(4, {5, 3}, 1);
  return t;
}

Outcome quartic_example() {
  Outcome o;
  auto file = parse_ideal(
      "ring x0 x1 x2 x3\n"
      "ideal -x2^3*x3 + x3^4, -x2^4 - x3^4, -x1*x3^3 - x3^4, x2^2*x3^2 + x3^4\n");
  auto expected = quartic_table();
  for (std::uint32_t p : {32003u, 31991u}) {
    auto t0 = Clock::now();
    auto in = to_input_ideal(file, PrimeField(p));
    auto st = SymmetricSetup<PrimeField>::build(in, TermOrder::Block);
    auto res = resolve_quotient(st.s, st.ix);
    bool table = res.complete && res.betti == expected;
    bool sub = is_subregular(res.complex).subregular;
    int dim = krull_dimension(in.ring, in.generators);
    double secs = seconds_since(t0);
    bool ok = table && !sub && dim == 2 && secs < 120;
    o.pass = o.pass && ok;
    o.detail << "F_" << p << ": table " << (table ? "exact" : "differs") << ", subregular " << (sub ? "true" : "false")
             << ", dim " << dim << ", " << secs << " s; ";
  }
  return o;
}

Outcome coordinate_points() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = make_ring(PrimeField(32003), 3, 0);
  auto x = [&](std::size_t i) { return Polynomial<PrimeField>::x(r, i); };
  auto in = make_input_ideal(r, {x(0) * x(1), x(0) * x(2), x(1) * x(2)});
  BettiTable expected;
  expected.add(1, {1, 1}, 2);
  expected.add(2, {2, 2}, 1);
  auto rep = verify_theorem2(in);
  double secs = seconds_since(t0);
  bool hyp = rep.hypotheses.theorem_applies() && rep.hypotheses.num_generators_ok && rep.hypotheses.equigenerated_ok &&
             rep.hypotheses.is_cm;
  bool tables = rep.computed_betti == expected && rep.predicted_betti == expected;
  o.pass = hyp && tables && rep.subregular && secs < 5;
  o.detail << "hypotheses " << (hyp ? "pass" : "fail") << ", computed " << rep.computed_betti.to_string() << ", predicted "
           << (rep.predicted_betti ? rep.predicted_betti->to_string() : "none") << ", subregular "
           << (rep.subregular ? "true" : "false") << ", " << secs << " s";
  return o;
}

std::string fraction(std::size_t k, std::size_t of) { return std::to_string(k) + "/" + std::to_string(of); }

std::size_t count_identity(const BatterySummary& s, const std::optional<IdentityCheck> VerificationReport::*field) {
  std::size_t k = 0;
  for (const auto& r : s.results) {
    bool all = true;
    for (const auto& run : r.runs) all = all && (run.report.*field) && (run.report.*field)->holds;
    k += all ? 1 : 0;
  }
  return k;
}

std::size_t count_sym1(const BatterySummary& s) {
  std::size_t k = 0;
  for (const auto& r : s.results) {
    bool all = true;
    for (const auto& run : r.runs) all = all && run.report.sym1_ok;
    k += all ? 1 : 0;
  }
  return k;
}

struct Batteries {
  BatterySummary hb;
  BatterySummary ci;
  double seconds = 0;
};

Batteries run_batteries() {
  auto t0 = Clock::now();
  std::vector<TermOrder> orders{TermOrder::GrevlexAll, TermOrder::Block};
  BatteryParams hb;
  BatteryParams ci;
  ci.n = 1;
  ci.etas = {2, 3, 4};
  ci.count = 5;
  VerifyOptions opts;
  Batteries b;
  b.hb = run_battery(battery_cases(hb), hb.primes, orders, opts, battery_threads());
  b.ci = run_battery(battery_cases(ci), ci.primes, orders, opts, battery_threads());
  b.seconds = seconds_since(t0);
  return b;
}

Outcome theorem_battery(const Batteries& b) {
  Outcome o;
  auto line = [&](const char* name, const BatterySummary& s) {
    bool ok = s.betti_match == s.cases && s.subregular == s.cases && s.consistent == s.cases;
    o.pass = o.pass && ok;
    o.detail << name << " betti_match " << fraction(s.betti_match, s.cases) << ", subregular "
             << fraction(s.subregular, s.cases) << ", consistent " << fraction(s.consistent, s.cases) << "; ";
  };
  line("hilbert-burch", b.hb);
  line("complete-intersection", b.ci);
  o.pass = o.pass && b.seconds < 600;
  o.detail << b.seconds << " s";
  return o;
}

Outcome eagon_northcott(const Batteries& b) {
  Outcome o;
  std::size_t total = b.hb.cases + b.ci.cases, ok = b.hb.en_ok + b.ci.en_ok;
  o.pass = ok == total;
  o.detail << "d*d = 0, exact, image = I_K: " << fraction(ok, total) << " cases over both orders and primes";
  return o;
}

Outcome identities(const Batteries& b) {
  Outcome o;
  auto line = [&](const char* name, const BatterySummary& s) {
    auto colon = count_identity(s, &VerificationReport::colon);
    auto quot = count_identity(s, &VerificationReport::quotient_hilbert);
    auto h1 = count_identity(s, &VerificationReport::h1);
    auto sym1 = count_sym1(s);
    o.pass = o.pass && colon == s.cases && quot == s.cases && h1 == s.cases && sym1 == s.cases;
    o.detail << name << " colon " << fraction(colon, s.cases) << ", quotient_hilbert " << fraction(quot, s.cases) << ", h1 "
             << fraction(h1, s.cases) << ", sym1 " << fraction(sym1, s.cases) << "; ";
  };
  line("hilbert-burch", b.hb);
  line("complete-intersection", b.ci);
  return o;
}

Outcome fibre_ranks(const Batteries& b) {
  Outcome o;
  std::size_t total = b.hb.cases + b.ci.cases, ok = b.hb.fibre_ok + b.ci.fibre_ok;
  o.detail << "rank n at 100 points off Z: " << fraction(ok, total) << " cases; ";
  auto r = make_ring(PrimeField(32003), 3, 0);
  auto x = [&](std::size_t i) { return Polynomial<PrimeField>::x(r, i); };
  auto in = make_input_ideal(r, {x(0) * x(1), x(0) * x(2), x(1) * x(2)});
  auto fc = check_fibre_ranks(in, 100, 1);
  bool points = fc.coordinate_points.size() == 3 && fc.ok(static_cast<std::size_t>(in.n));
  o.detail << "coordinate points on Z with rank n-1 = 1: ";
  for (const auto& [k, rank] : fc.coordinate_points) o.detail << "e" << k << "->" << rank << " ";
  o.pass = ok == total && points;
  return o;
}

Outcome self_consistency() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  using P = Polynomial<PrimeField>;

  // S-pairs of reduced bases reduce to zero.
  std::size_t spairs = 0, spair_fail = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto ring = make_ring(PrimeField(32003), 3, 3, trial % 2 ? TermOrder::Block : TermOrder::GrevlexAll);
    std::vector<P> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(gen::random_nonzero_form(ring, rng, {gen::uniform(rng, 1, 2), gen::uniform(rng, 0, 1)}, 3));
    auto g = buchberger(ring, gens);
    auto basis = g.polynomials();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        auto l = basis[i].lead_monomial().lcm(basis[j].lead_monomial(), ring->num_x());
        auto s = basis[i].times_monomial(basis[i].lead_monomial().quotient_of(l)).scaled(basis[j].lead_coefficient()) -
                 basis[j].times_monomial(basis[j].lead_monomial().quotient_of(l)).scaled(basis[i].lead_coefficient());
        ++spairs;
        spair_fail += normal_form(s, g).is_zero() ? 0 : 1;
      }
    }
  }
  o.detail << "S-pairs to zero " << fraction(spairs - spair_fail, spairs) << "; ";

  // Betti tables do not depend on the order, and pieces agree with series.
  std::size_t betti_cases = 0, betti_same = 0, pieces = 0, pieces_ok = 0;
  for (int trial = 0; trial < 12; ++trial) {
    auto block = make_ring(PrimeField(32003), 3, 3, TermOrder::Block);
    auto grevlex = block->with_order(TermOrder::GrevlexAll);
    std::vector<P> gens, moved;
    for (int i = 0; i < 3; ++i) gens.push_back(gen::random_nonzero_form(block, rng, {gen::uniform(rng, 1, 2), gen::uniform(rng, 0, 1)}, 3));
    for (const auto& g : gens) moved.push_back(g.in_ring(grevlex));
    auto a = resolve_quotient(block, gens);
    auto b = resolve_quotient(grevlex, moved);
    ++betti_cases;
    betti_same += a.betti == b.betti ? 1 : 0;
    auto hs = hilbert_series(a.complex);
    for (int x = -6; x <= 6; ++x) {
      for (int y = -6; y <= 6; ++y) {
        if (std::abs(x) + std::abs(y) > 6) continue;
        ++pieces;
        pieces_ok += hs.coefficient({x, y}) == hilbert_function_piece(block, gens, {x, y}) ? 1 : 0;
      }
    }
  }
  o.detail << "order-independent Betti tables " << fraction(betti_same, betti_cases) << ", piece = series "
           << fraction(pieces_ok, pieces) << "; ";

  // Ring laws on random triples.
  std::size_t triples = 1000, laws_ok = 0;
  auto ring = make_ring(PrimeField(32003), 3, 2, TermOrder::Block);
  for (std::size_t t = 0; t < triples; ++t) {
    auto a = gen::random_poly(ring, rng, 5, 3);
    auto b = gen::random_poly(ring, rng, 5, 3);
    auto c = gen::random_poly(ring, rng, 5, 3);
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
              a * (b + c) == a * b + a * c && (a - a).is_zero();
    laws_ok += ok ? 1 : 0;
  }
  double secs = seconds_since(t0);
  o.detail << "ring laws " << fraction(laws_ok, triples) << "; " << secs << " s";
  o.pass = spair_fail == 0 && betti_same == betti_cases && pieces_ok == pieces && laws_ok == triples && secs < 60;
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all = report(1, quartic_example()) && all;
  all = report(2, coordinate_points()) && all;
  auto b = run_batteries();
  all = report(3, theorem_battery(b)) && all;
  all = report(4, eagon_northcott(b)) && all;
  all = report(5, identities(b)) && all;
  all = report(6, fibre_ranks(b)) && all;
  all = report(7, self_consistency()) && all;
  return all ? 0 : 1;
}
