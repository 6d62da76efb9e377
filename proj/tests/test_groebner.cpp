#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "symres/symres.hpp"

using namespace symres;
using P = Polynomial<PrimeField>;

namespace {

P s_polynomial(const P& f, const P& g) {
  const auto& ring = f.ring();
  auto l = f.lead_monomial().lcm(g.lead_monomial(), ring->num_x());
  auto a = f.times_monomial(f.lead_monomial().quotient_of(l)).scaled(g.lead_coefficient());
  auto b = g.times_monomial(g.lead_monomial().quotient_of(l)).scaled(f.lead_coefficient());
  return a - b;
}

std::vector<P> random_bigraded_ideal(const RingPtr<PrimeField>& ring, std::mt19937_64& rng) {
  std::vector<P> gens;
  int count = gen::uniform(rng, 2, 4);
  for (int i = 0; i < count; ++i) {
    BiDegree d{gen::uniform(rng, 1, 2), ring->num_y() ? gen::uniform(rng, 0, 1) : 0};
    gens.push_back(gen::random_nonzero_form(ring, rng, d, gen::uniform(rng, 1, 4)));
  }
  return gens;
}

}  // namespace

TEST(GroebnerProperty, SPairsReduceToZero) {
  std::mt19937_64 rng(1);
  for (auto order : {TermOrder::GrevlexAll, TermOrder::Block, TermOrder::Lex}) {
    for (std::size_t ny : {0u, 3u}) {
      auto ring = make_ring(PrimeField(32003), 3, ny, order);
      for (int trial = 0; trial < 25; ++trial) {
        auto gens = random_bigraded_ideal(ring, rng);
        auto g = buchberger(ring, gens);
        auto basis = g.polynomials();
        for (const auto& f : gens) EXPECT_TRUE(contains(g, f));
        for (std::size_t i = 0; i < basis.size(); ++i) {
          for (std::size_t j = i + 1; j < basis.size(); ++j) {
            EXPECT_TRUE(normal_form(s_polynomial(basis[i], basis[j]), g).is_zero());
          }
        }
      }
    }
  }
}

TEST(GroebnerProperty, BasisIsReduced) {
  std::mt19937_64 rng(2);
  auto ring = make_ring(PrimeField(32003), 3, 3, TermOrder::Block);
  for (int trial = 0; trial < 30; ++trial) {
    auto basis = buchberger(ring, random_bigraded_ideal(ring, rng)).polynomials();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_TRUE(ring->field().is_one(basis[i].lead_coefficient()));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : basis[j].terms()) EXPECT_FALSE(basis[i].lead_monomial().divides(t.mono));
      }
    }
  }
}

TEST(GroebnerProperty, ReducedBasisIgnoresGeneratorOrder) {
  std::mt19937_64 rng(3);
  auto ring = make_ring(PrimeField(32003), 3, 0);
  for (int trial = 0; trial < 30; ++trial) {
    auto gens = gen::random_ideal(ring, rng, 3, 1, 3, 3);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(gens.front() * P::x(ring, 1));
    EXPECT_EQ(buchberger(ring, gens), buchberger(ring, shuffled));
  }
}

TEST(GroebnerProperty, IdealDoesNotDependOnTheOrder) {
  std::mt19937_64 rng(4);
  auto block = make_ring(PrimeField(32003), 3, 3, TermOrder::Block);
  auto grevlex = block->with_order(TermOrder::GrevlexAll);
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = random_bigraded_ideal(block, rng);
    std::vector<P> moved;
    for (const auto& g : gens) moved.push_back(g.in_ring(grevlex));
    auto gb = buchberger(block, gens).polynomials();
    auto gg = buchberger(grevlex, moved);
    for (const auto& f : gb) EXPECT_TRUE(contains(gg, f.in_ring(grevlex)));
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 2; ++b) {
        EXPECT_EQ(hilbert_function_piece(block, gens, {a, b}), hilbert_function_piece(grevlex, moved, {a, b}));
      }
    }
  }
}

TEST(NormalForm, IsLinearAndIdempotent) {
  std::mt19937_64 rng(5);
  auto ring = make_ring(PrimeField(32003), 3, 3, TermOrder::Block);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = buchberger(ring, random_bigraded_ideal(ring, rng));
    for (int k = 0; k < 10; ++k) {
      auto f = gen::random_form(ring, rng, {2, 1}, 5);
      auto h = gen::random_form(ring, rng, {2, 1}, 5);
      auto nf = normal_form(f, g);
      EXPECT_EQ(normal_form(nf, g), nf);
      EXPECT_EQ(normal_form(f + h, g), nf + normal_form(h, g));
      EXPECT_TRUE(contains(g, f - nf));
    }
  }
}

TEST(HilbertFunction, MatchesLinearAlgebra) {
  std::mt19937_64 rng(6);
  for (std::size_t ny : {0u, 2u}) {
    auto ring = make_ring(PrimeField(32003), 3, ny, TermOrder::Block);
    for (int trial = 0; trial < 15; ++trial) {
      auto gens = random_bigraded_ideal(ring, rng);
      oracle::GradedQuotient q(3, ny, oracle::from_polys(gens), 32003);
      for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= (ny ? 2 : 0); ++b) {
          EXPECT_EQ(hilbert_function_piece(ring, gens, {a, b}), static_cast<std::int64_t>(q.dim(a, b)));
        }
      }
    }
  }
}

TEST(Syzygies, ComposeToZeroAndMatchKernelDimension) {
  std::mt19937_64 rng(7);
  auto ring = make_ring(PrimeField(32003), 3, 0);
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = gen::random_ideal(ring, rng, 4, 1, 2, 3);
    auto row = PolyMatrix<PrimeField>::row(ring, gens);
    auto syz = syzygy_matrix(row);
    EXPECT_TRUE(compose(row, syz).is_zero());
    // Degree-d kernel of the row map, by linear algebra, against the span of the
    // syzygy columns in degree d.
    for (int d = 1; d <= 4; ++d) {
      std::vector<std::vector<std::uint64_t>> rows;
      auto target = oracle::monomials(3, 0, d, 0);
      std::map<oracle::Exps, std::size_t> tidx;
      for (std::size_t i = 0; i < target.size(); ++i) tidx[target[i]] = i;
      std::vector<std::vector<oracle::Exps>> src;
      std::size_t src_dim = 0;
      for (const auto& g : gens) {
        auto deg = g.bidegree()->x;
        src.push_back(oracle::monomials(3, 0, d - deg, 0));
        src_dim += src.back().size();
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& m : src[i]) {
          std::vector<std::uint64_t> v(target.size(), 0);
          for (const auto& [e, c] : oracle::multiply({{m, 1}}, oracle::from_poly(gens[i]).terms, 32003)) v[tidx.at(e)] = c;
          rows.push_back(v);
        }
      }
      std::size_t kernel = src_dim - (target.empty() ? 0 : oracle::matrix_rank(rows, target.size(), 32003));
      // Span of m * (syzygy column) inside ⊕ R_{d - deg g_i}.
      oracle::Span span(src_dim, 32003);
      for (std::size_t c = 0; c < syz.cols(); ++c) {
        int cd = syz.source().shift(c).x;
        for (const auto& m : oracle::monomials(3, 0, d - cd, 0)) {
          std::vector<std::uint64_t> v(src_dim, 0);
          std::size_t off = 0;
          for (std::size_t i = 0; i < gens.size(); ++i) {
            std::map<oracle::Exps, std::size_t> sidx;
            for (std::size_t k = 0; k < src[i].size(); ++k) sidx[src[i][k]] = k;
            for (const auto& [e, cf] : oracle::multiply({{m, 1}}, oracle::from_poly(syz.at(i, c)).terms, 32003)) {
              v[off + sidx.at(e)] = cf;
            }
            off += src[i].size();
          }
          span.add(v);
        }
      }
      EXPECT_EQ(span.rank(), kernel) << "degree " << d;
    }
  }
}

TEST(Lift, SolvesAndDetectsNonMembers) {
  std::mt19937_64 rng(8);
  auto ring = make_ring(PrimeField(32003), 3, 3, TermOrder::Block);
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = random_bigraded_ideal(ring, rng);
    auto a = PolyMatrix<PrimeField>::row(ring, gens);
    std::vector<std::vector<P>> cols(1, std::vector<P>(gens.size(), P(ring)));
    BiDegree target{3, 2};
    P combo(ring);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      BiDegree d = target - *gens[i].bidegree();
      if (d.x < 0 || d.y < 0) continue;
      cols[0][i] = gen::random_form(ring, rng, d, 2);
      combo = combo + cols[0][i] * gens[i];
    }
    if (combo.is_zero()) continue;
    auto b = PolyMatrix<PrimeField>::row(ring, {combo});
    auto x = lift(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(compose(a, *x), b);
    auto outside = gen::random_nonzero_form(ring, rng, target, 6);
    auto nf = normal_form(outside, buchberger(ring, gens));
    if (!nf.is_zero()) EXPECT_FALSE(lift(a, PolyMatrix<PrimeField>::row(ring, {nf})).has_value());
  }
}

TEST(Colon, MonomialCases) {
  auto ring = make_ring(PrimeField(32003), 3, 0);
  auto x = [&](std::size_t i) { return P::x(ring, i); };
  auto c = colon_ideal(ring, {x(0) * x(1), x(1) * x(2)}, {x(1)});
  EXPECT_TRUE(same_ideal(ring, c.polynomials(), {x(0), x(2)}));
  auto d = colon_ideal(ring, {x(0) * x(0), x(0) * x(1)}, {x(0), x(1)});
  EXPECT_TRUE(same_ideal(ring, d.polynomials(), {x(0)}));
  auto e = colon_ideal(ring, {x(0)}, {x(0) * x(1)});
  EXPECT_TRUE(e.is_unit_ideal());
  EXPECT_THROW(colon_ideal(ring, {x(0)}, {}), Error);
}

TEST(Colon, MatchesLinearAlgebraInLowDegrees) {
  std::mt19937_64 rng(9);
  auto ring = make_ring(PrimeField(32003), 3, 0);
  for (int trial = 0; trial < 10; ++trial) {
    auto i_gens = gen::random_ideal(ring, rng, 3, 2, 2, 3);
    auto j_gens = gen::random_ideal(ring, rng, 2, 1, 1, 2);
    auto c = colon_ideal(ring, i_gens, j_gens);
    oracle::GradedQuotient qi(3, 0, oracle::from_polys(i_gens), 32003);
    oracle::GradedQuotient qc(3, 0, oracle::from_polys(c.polynomials()), 32003);
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(oracle::colon_dim(qi, oracle::from_polys(j_gens), d, 0), qc.ideal_dim(d, 0)) << "degree " << d;
    }
  }
}

TEST(KrullDimension, KnownIdeals) {
  auto ring = make_ring(PrimeField(32003), 3, 0);
  auto x = [&](std::size_t i) { return P::x(ring, i); };
  EXPECT_EQ(krull_dimension(ring, {x(0) * x(1), x(0) * x(2), x(1) * x(2)}), 1);
  EXPECT_EQ(krull_dimension(ring, {x(0), x(1), x(2)}), 0);
  EXPECT_EQ(krull_dimension(ring, {x(0) * x(0)}), 2);
  EXPECT_EQ(krull_dimension(ring, {}), 3);
  EXPECT_EQ(krull_dimension(ring, {P::integer(ring, 1)}), -1);
}

TEST(MinimalGenerators, DropsRedundantOnes) {
  auto ring = make_ring(PrimeField(32003), 3, 0);
  auto x = [&](std::size_t i) { return P::x(ring, i); };
  auto mins = minimal_generators(ring, {x(0) * x(0), x(0) * x(1), x(0) * x(0) + x(0) * x(1), x(0) * x(0) * x(2)});
  EXPECT_EQ(mins.size(), 2u);
  EXPECT_EQ(minimal_generator_indices(PolyMatrix<PrimeField>::row(ring, {x(1), x(0) * x(1), x(2)})),
            (std::vector<std::size_t>{0, 2}));
}

TEST(Groebner, RationalAndModularLeadTermsAgree) {
  auto q = make_ring(RationalField{}, 3, 0);
  auto f = make_ring(PrimeField(32003), 3, 0);
  auto build = [](const auto& ring) {
    using Poly = Polynomial<std::decay_t<decltype(ring->field())>>;
    auto x = [&](std::size_t i) { return Poly::x(ring, i); };
    auto c = [&](int v) { return Poly::integer(ring, v); };
    return std::vector<Poly>{x(0) * x(0) - c(2) * x(1) * x(2), x(1) * x(1) + c(3) * x(0) * x(2), x(2) * x(2) - x(0) * x(1)};
  };
  auto gq = buchberger(q, build(q)).polynomials();
  auto gf = buchberger(f, build(f)).polynomials();
  ASSERT_EQ(gq.size(), gf.size());
  for (std::size_t i = 0; i < gq.size(); ++i) EXPECT_EQ(gq[i].lead_monomial(), gf[i].lead_monomial());
}
