#include <gtest/gtest.h>

#include "lieweyl/enveloping.hpp"
#include "lieweyl/format.hpp"
#include "lieweyl/parse.hpp"
#include "lieweyl/random.hpp"
#include "oracles.hpp"

using namespace lieweyl;

namespace {

PBWElement from_oracle(const oracle::WordSum& s, std::size_t n) {
  PBWElement e(n);
  for (const auto& [m, c] : oracle::to_pbw_terms(s, n)) e.add_term(m, c);
  return e;
}

PBWElement oracle_product(const LieAlgebra& g, const PBWElement& a, const PBWElement& b) {
  oracle::WordSum s;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      oracle::Word w = oracle::word_of(ma);
      const oracle::Word wb = oracle::word_of(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      oracle::add(s, w, ca * cb);
    }
  return from_oracle(oracle::straighten(g, s), g.dim());
}

std::vector<LieAlgebra> family() {
  return {abelian(3), g2(), su2(), su2(Scalar(1, 2)), kappa_algebra({1, Scalar(-1, 2), 2}),
          kappa_algebra({Scalar::i(), 0, Scalar(1, 3)})};
}

PBWElement X(std::size_t n, std::size_t k) { return PBWElement::generator(n, k); }

}  // namespace

TEST(Enveloping, G2Examples) {
  Enveloping env(g2());
  EXPECT_EQ(env.mul(X(2, 1), X(2, 0)), parse_pbw("X1*X2 - X2", env));
  EXPECT_EQ(to_text(env.mul(X(2, 1), X(2, 0))), "X1·X2 - X2");
  EXPECT_EQ(env.mul(X(2, 0), X(2, 1)), PBWElement::monomial(MultiIndex{1, 1}));
  EXPECT_EQ(env.t_action(0, 1, X(2, 1)), PBWElement::one(2));
  EXPECT_EQ(env.t_action(1, 1, X(2, 0)), X(2, 0) - PBWElement::one(2));
  EXPECT_EQ(env.tinv_action(0, 1, X(2, 1)), PBWElement::constant(2, -1));
  EXPECT_EQ(env.y_action(0, X(2, 1)), env.mul(X(2, 1), X(2, 0)));
  for (std::size_t mu = 0; mu < 2; ++mu) {
    EXPECT_EQ(env.y_action(mu, PBWElement::one(2)), X(2, mu));
    for (std::size_t nu = 0; nu < 2; ++nu) {
      const PBWElement delta = PBWElement::constant(2, mu == nu ? 1 : 0);
      EXPECT_EQ(env.t_action(mu, nu, PBWElement::one(2)), delta);
      EXPECT_EQ(env.tinv_action(mu, nu, PBWElement::one(2)), delta);
    }
  }
}

TEST(Enveloping, AbelianIsCommutative) {
  Enveloping env(abelian(3));
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const PBWElement a = random_pbw(rng, 3, 3), b = random_pbw(rng, 3, 3);
    EXPECT_EQ(env.mul(a, b), env.mul(b, a));
    for (std::size_t mu = 0; mu < 3; ++mu) {
      EXPECT_EQ(env.y_action(mu, a), env.mul(X(3, mu), a));
      EXPECT_EQ(env.tinv_action(mu, mu, a), a);
      EXPECT_TRUE(env.tinv_action(mu, (mu + 1) % 3, a).is_zero());
    }
  }
}

TEST(Enveloping, ProductMatchesWordRewriter) {
  Rng rng(7);
  for (const LieAlgebra& g : family()) {
    Enveloping env(g);
    for (int t = 0; t < 15; ++t) {
      const PBWElement a = random_pbw(rng, g.dim(), 3, 2), b = random_pbw(rng, g.dim(), 3, 2);
      EXPECT_EQ(env.mul(a, b), oracle_product(g, a, b));
    }
  }
}

TEST(Enveloping, Associativity) {
  Rng rng(8);
  for (const LieAlgebra& g : family()) {
    Enveloping env(g);
    for (int t = 0; t < 5; ++t) {
      const PBWElement a = random_pbw(rng, g.dim(), 2), b = random_pbw(rng, g.dim(), 2), c = random_pbw(rng, g.dim(), 2);
      EXPECT_EQ(env.mul(env.mul(a, b), c), env.mul(a, env.mul(b, c)));
    }
  }
}

TEST(Enveloping, GeneratorCommutatorIsBracket) {
  for (const LieAlgebra& g : family()) {
    Enveloping env(g);
    const std::size_t n = g.dim();
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu) {
        PBWElement br(n);
        for (std::size_t l = 0; l < n; ++l) br.add_term(MultiIndex::unit(n, l), g.c(mu, nu, l));
        EXPECT_EQ(env.mul(X(n, mu), X(n, nu)) - env.mul(X(n, nu), X(n, mu)), br);
      }
  }
}

// The shift identities on monomials of degree <= 4.
TEST(Enveloping, ShiftIdentities) {
  Rng rng(9);
  for (const LieAlgebra& g : family()) {
    Enveloping env(g);
    const std::size_t n = g.dim();
    for (int t = 0; t < 6; ++t) {
      const PBWElement x = PBWElement::monomial(random_monomial(rng, n, 4));
      const PBWElement y = PBWElement::monomial(random_monomial(rng, n, 2));
      for (std::size_t mu = 0; mu < n; ++mu) {
        // X_mu X = sum_a (T_{mu a} |> X) X_a
        PBWElement left(n);
        for (std::size_t a = 0; a < n; ++a) left += env.mul(env.t_action(mu, a, x), X(n, a));
        EXPECT_EQ(env.mul(X(n, mu), x), left);
        // X X_mu = sum_a X_a (T^{-1}_{mu a} |> X)
        PBWElement right(n);
        for (std::size_t a = 0; a < n; ++a) right += env.mul(X(n, a), env.tinv_action(mu, a, x));
        EXPECT_EQ(env.mul(x, X(n, mu)), right);
        for (std::size_t nu = 0; nu < n; ++nu) {
          PBWElement cop(n), copi(n), inv1(n), inv2(n);
          for (std::size_t a = 0; a < n; ++a) {
            cop += env.mul(env.t_action(mu, a, x), env.t_action(a, nu, y));
            copi += env.mul(env.tinv_action(a, nu, x), env.tinv_action(mu, a, y));
            inv1 += env.t_action(mu, a, env.tinv_action(a, nu, x));
            inv2 += env.tinv_action(mu, a, env.t_action(a, nu, x));
          }
          EXPECT_EQ(env.t_action(mu, nu, env.mul(x, y)), cop);
          EXPECT_EQ(env.tinv_action(mu, nu, env.mul(x, y)), copi);
          EXPECT_EQ(inv1, mu == nu ? x : PBWElement(n));
          EXPECT_EQ(inv2, mu == nu ? x : PBWElement(n));
          const std::size_t a = (mu + nu) % n, b = (mu + 2 * nu + 1) % n;
          EXPECT_EQ(env.t_action(mu, nu, env.t_action(a, b, x)), env.t_action(a, b, env.t_action(mu, nu, x)));
          EXPECT_EQ(env.mul(X(n, mu), env.y_action(nu, x)), env.y_action(nu, env.mul(X(n, mu), x)));
        }
      }
    }
  }
}

TEST(Enveloping, IndexChecks) {
  Enveloping env(g2());
  EXPECT_THROW(env.t_action(2, 0, PBWElement::one(2)), std::out_of_range);
  EXPECT_THROW(env.mul(PBWElement::one(2), PBWElement::one(3)), DimensionMismatch);
}

TEST(Enveloping, TextRoundTrip) {
  Enveloping env(su2());
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const PBWElement a = random_pbw(rng, 3, 3, 3);
    EXPECT_EQ(parse_pbw(to_text(a), env), a);
  }
}
