#include <gtest/gtest.h>

#include "lieweyl/format.hpp"
#include "lieweyl/parse.hpp"
#include "lieweyl/random.hpp"
#include "lieweyl/realization.hpp"
#include "lieweyl/weyl.hpp"
#include "oracles.hpp"

using namespace lieweyl;

namespace {

WeylOp W(const char* text, std::size_t n = 2) { return parse_weyl(text, n); }
Polynomial P(const char* text, std::size_t n = 2) { return parse_polynomial(text, n); }

WeylOp random_weyl(Rng& rng, std::size_t n, unsigned xmax, unsigned dmax, std::size_t terms, std::size_t order = kExact) {
  WeylOp op(n, order);
  for (std::size_t t = 0; t < terms; ++t) {
    const MultiIndex b = random_monomial(rng, n, dmax);
    if (order != kExact && b.degree() > order) continue;
    op.add_term(random_monomial(rng, n, xmax), b, random_rational(rng));
  }
  return op;
}

// Operators agree when they act identically on every monomial of degree <= D
// and both have d-degree <= D.
bool same_action(const WeylOp& a, const WeylOp& b, unsigned D) {
  for (const MultiIndex& m : oracle::monomials_upto(a.dim(), D)) {
    const Polynomial f = Polynomial::monomial(m);
    if (!(a.apply(f) == b.apply(f))) return false;
  }
  return true;
}

}  // namespace

TEST(Weyl, DefiningRelations) {
  EXPECT_EQ(W("d1") * W("x1"), W("x1*d1 + 1"));
  EXPECT_EQ(W("d1^2") * W("x1"), W("x1*d1^2 + 2*d1"));
  EXPECT_EQ(W("x1") * W("x2"), W("x2") * W("x1"));
  EXPECT_EQ(commutator(W("d1"), W("x1")), W("1"));
  EXPECT_TRUE(commutator(W("x1"), W("x2")).is_zero());
  EXPECT_EQ(commutator(W("d1"), W("x1^2")), W("2*x1"));
  EXPECT_TRUE(commutator(W("d1"), W("x2")).is_zero());
}

TEST(Weyl, ApplyExamples) {
  EXPECT_EQ(W("d1").apply(P("x1^2")), P("2*x1"));
  EXPECT_EQ(W("x1*d1").apply(P("x1*x2")), P("x1*x2"));
  EXPECT_EQ(W("3 + x2*d1 + d1*d2").apply(Polynomial::one(2)), Polynomial::constant(2, 3));
  EXPECT_EQ(W("x2*d1^2").apply(P("x1^3 + x2")), P("6*x1*x2"));
}

TEST(Weyl, ApplyRefusesInsufficientOrder) {
  WeylOp a(2, 1);
  a.add_term(MultiIndex(2), MultiIndex{1, 0}, 1);
  EXPECT_NO_THROW(a.apply(P("x1")));
  EXPECT_THROW(a.apply(P("x1^2")), InsufficientOrder);
}

TEST(Weyl, TextForm) {
  EXPECT_EQ(to_text(W("x1*d1^2 - 1/2*d2")), "-1/2·d2 + x1·d1^2");
  EXPECT_EQ(W(to_text(W("x1*d1^2 - 1/2*d2")).c_str()), W("x1*d1^2 - 1/2*d2"));
}

TEST(Weyl, AssociativityOnExactOperators) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const WeylOp a = random_weyl(rng, 2, 2, 2, 3), b = random_weyl(rng, 2, 2, 2, 3), c = random_weyl(rng, 2, 2, 2, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
  for (int t = 0; t < 10; ++t) {
    const WeylOp a = random_weyl(rng, 3, 2, 2, 3), b = random_weyl(rng, 3, 2, 2, 3), c = random_weyl(rng, 3, 1, 2, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Weyl, ApplyIsModuleAction) {
  Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const WeylOp a = random_weyl(rng, 2, 2, 3, 3), b = random_weyl(rng, 2, 2, 3, 3);
    const Polynomial f = random_polynomial(rng, 2, 4, 4);
    EXPECT_EQ((a * b).apply(f), a.apply(b.apply(f)));
  }
}

// A product is pinned down by its action on polynomials; check against
// composition of actions on all monomials up to the total d-degree.
TEST(Weyl, ProductMatchesCompositionOfActions) {
  Rng rng(23);
  for (int t = 0; t < 15; ++t) {
    const WeylOp a = random_weyl(rng, 2, 2, 2, 3), b = random_weyl(rng, 2, 2, 2, 3);
    const WeylOp ab = a * b;
    for (const MultiIndex& m : oracle::monomials_upto(2, 5)) {
      const Polynomial f = Polynomial::monomial(m);
      EXPECT_EQ(ab.apply(f), a.apply(b.apply(f)));
    }
    EXPECT_TRUE(same_action(ab, a * b, 5));
  }
}

TEST(Weyl, ValidOrderRule) {
  WeylOp a(2, 5), b(2, 4);
  a.add_term(MultiIndex{0, 0}, MultiIndex{1, 0}, 1);
  b.add_term(MultiIndex{2, 1}, MultiIndex{0, 0}, 1);
  EXPECT_EQ((a * b).valid_order(), 1u);
  EXPECT_EQ((WeylOp::identity(2) * b).valid_order(), 1u);
  EXPECT_EQ((b * WeylOp::d(2, 0)).valid_order(), 4u);
  EXPECT_TRUE((WeylOp::x(2, 0) * WeylOp::d(2, 1)).is_exact());
}

// Computing with more of each factor never changes coefficients inside the
// guaranteed range.
TEST(Weyl, TruncationSoundness) {
  Rng rng(24);
  for (int t = 0; t < 40; ++t) {
    const std::size_t N = 3 + t % 3;
    const WeylOp a_full = random_weyl(rng, 2, 2, N + 3, 6, N + 3);
    const WeylOp b_full = random_weyl(rng, 2, 2, N + 3, 6, N + 3);
    const WeylOp a = a_full.truncated(N), b = b_full.truncated(N);
    const WeylOp low = a * b, high = a_full * b_full;
    const std::size_t guaranteed = low.valid_order();
    EXPECT_LE(guaranteed, N);
    EXPECT_GE(guaranteed + b.xdeg(), N);
    EXPECT_FALSE(first_mismatch(low, high, guaranteed).has_value());
  }
}

TEST(Weyl, DimensionChecks) {
  EXPECT_THROW(WeylOp::x(2, 0) * WeylOp::x(3, 0), DimensionMismatch);
  EXPECT_THROW(W("x3"), ParseError);
}

TEST(Weyl, MatrixSeriesExpIsInverseOfExpNeg) {
  for (const LieAlgebra& g : {g2(), su2(), kappa_algebra({1, 2, Scalar(-1, 3)})})
    for (std::size_t N : {1, 4, 6}) {
      const OpMatrix c = adjoint_matrix(g);
      const OpMatrix e = matrix_series(series_coeffs(SeriesKind::exp, N), c);
      const OpMatrix en = matrix_series(series_coeffs(SeriesKind::exp_neg, N), c);
      EXPECT_EQ((e * en).truncated(N), OpMatrix::identity(g.dim(), N));
      EXPECT_EQ((en * e).truncated(N), OpMatrix::identity(g.dim(), N));
    }
  EXPECT_EQ(matrix_series(series_coeffs(SeriesKind::exp, 4), OpMatrix(3)), OpMatrix::identity(3, 4));
}

TEST(Weyl, MatrixSeriesPsiOnG2) {
  const OpMatrix c = adjoint_matrix(g2());
  EXPECT_EQ(c(0, 0), WeylOp(2));
  EXPECT_EQ(c(0, 1), W("d2"));
  EXPECT_EQ(c(1, 0), WeylOp(2));
  EXPECT_EQ(c(1, 1), W("-d1"));
  const OpMatrix c2 = c * c;
  EXPECT_EQ(c2(0, 1), W("-d1*d2"));
  EXPECT_EQ(c2(1, 1), W("d1^2"));
  const OpMatrix psi = matrix_series(series_coeffs(SeriesKind::psi, 2), c);
  EXPECT_EQ(psi(0, 0), W("1").truncated(2));
  EXPECT_EQ(psi(0, 1), W("1/2*d2 - 1/12*d1*d2").truncated(2));
  EXPECT_EQ(psi(1, 0), WeylOp(2, 2));
  EXPECT_EQ(psi(1, 1), W("1 - 1/2*d1 + 1/12*d1^2").truncated(2));
  EXPECT_THROW(matrix_series(series_coeffs(SeriesKind::exp, 2), OpMatrix::identity(2)), std::invalid_argument);
}
