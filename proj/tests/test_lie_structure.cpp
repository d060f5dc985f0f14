#include <gtest/gtest.h>

#include "lieweyl/json_io.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/random.hpp"

using namespace lieweyl;

namespace {

// X_nu coefficient of [[X_mu, X_a], X_b] + [[X_a, X_b], X_mu] + [[X_b, X_mu], X_a],
// expanded by hand from the bracket table.
Scalar jacobi_sum(const LieAlgebra& g, std::size_t mu, std::size_t a, std::size_t b, std::size_t nu) {
  const std::size_t n = g.dim();
  auto bracket = [&](const std::vector<Scalar>& u, std::size_t k) {
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) out[l] += u[i] * g.c(i, k, l);
    return out;
  };
  auto gen_bracket = [&](std::size_t i, std::size_t k) {
    std::vector<Scalar> e(n);
    e[i] = 1;
    return bracket(e, k);
  };
  return bracket(gen_bracket(mu, a), b)[nu] + bracket(gen_bracket(a, b), mu)[nu] + bracket(gen_bracket(b, mu), a)[nu];
}

bool brute_force_valid(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!(g.c(i, j, k) + g.c(j, i, k)).is_zero()) return false;
        for (std::size_t l = 0; l < n; ++l)
          if (!jacobi_sum(g, i, j, k, l).is_zero()) return false;
      }
  return true;
}

}  // namespace

TEST(LieStructure, BuiltinsValidate) {
  EXPECT_TRUE(validate(abelian(4)).ok());
  EXPECT_TRUE(validate(g2()).ok());
  EXPECT_TRUE(validate(su2()).ok());
  EXPECT_TRUE(validate(su2(Scalar(1, 3))).ok());
  EXPECT_TRUE(brute_force_valid(g2()));
  EXPECT_TRUE(brute_force_valid(su2(Scalar(2, 5))));
}

TEST(LieStructure, G2Constants) {
  const LieAlgebra g = g2();
  EXPECT_EQ(g.c(0, 1, 1), Scalar(1));
  EXPECT_EQ(g.c(1, 0, 1), Scalar(-1));
  EXPECT_EQ(g.c(0, 1, 0), Scalar(0));
}

TEST(LieStructure, JacobiFailureHasWitness) {
  const LieAlgebra g = from_constants(3, {{0, 1, 2, 1}, {1, 2, 1, 1}});
  const StructureReport r = validate(g);
  EXPECT_TRUE(r.antisymmetry);
  ASSERT_FALSE(r.jacobi);
  ASSERT_TRUE(r.jacobi_witness);
  const auto w = *r.jacobi_witness;
  EXPECT_EQ(jacobi_sum(g, w[0], w[1], w[2], w[3]), r.jacobi_value);
  EXPECT_FALSE(r.jacobi_value.is_zero());
  EXPECT_FALSE(brute_force_valid(g));
}

TEST(LieStructure, AntisymmetryFailureFromLenientLoad) {
  const LieAlgebra g = from_constants(2, {{0, 1, 1, 1}, {1, 0, 1, 1}}, Completion::lenient);
  const StructureReport r = validate(g);
  EXPECT_FALSE(r.antisymmetry);
  ASSERT_TRUE(r.antisymmetry_witness);
  EXPECT_THROW(from_constants(2, {{0, 1, 1, 1}, {1, 0, 1, 1}}), std::invalid_argument);
}

TEST(LieStructure, KappaExamples) {
  EXPECT_EQ(kappa_algebra({1, 0}), g2());
  EXPECT_EQ(kappa_algebra({0, 0, 0}), abelian(3));
  const LieAlgebra g = kappa_algebra({Scalar::i(), 0, 0});
  const Scalar i = Scalar::i();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        Scalar want;
        if (a == 0 && b == 1 && c == 1) want = i;
        if (a == 0 && b == 2 && c == 2) want = i;
        if (a == 1 && b == 0 && c == 1) want = -i;
        if (a == 2 && b == 0 && c == 2) want = -i;
        EXPECT_EQ(g.c(a, b, c), want);
      }
  EXPECT_EQ(kappa_parameters(g), (std::vector<Scalar>{i, 0, 0}));
  EXPECT_FALSE(kappa_parameters(su2()).has_value());
}

TEST(LieStructure, RandomKappaAndRescaleStayValid) {
  Rng rng(3);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int t = 0; t < 10; ++t) {
      const LieAlgebra g = kappa_algebra(random_vector(rng, n));
      EXPECT_TRUE(validate(g).ok());
      EXPECT_TRUE(brute_force_valid(g));
      EXPECT_TRUE(validate(rescale(g, random_rational(rng))).ok());
    }
}

TEST(LieStructure, DualAndRescale) {
  EXPECT_EQ(dual_algebra(abelian(3)), abelian(3));
  EXPECT_EQ(dual_algebra(g2()).c(0, 1, 1), Scalar(-1));
  EXPECT_EQ(dual_algebra(dual_algebra(su2(3))), su2(3));
  EXPECT_EQ(rescale(g2(), 0), abelian(2));
  EXPECT_EQ(rescale(g2(), 1), g2());
  EXPECT_EQ(rescale(su2(), Scalar(1, 3)), su2(Scalar(1, 3)));
  EXPECT_EQ(rescale(su2(), Scalar(1, 3)).c(0, 1, 2), Scalar(1, 3));
}

TEST(LieStructure, JsonSpecRoundTrip) {
  const LieAlgebra g = su2(Scalar(2, 7));
  EXPECT_EQ(lie_algebra_from_json(to_json(g)), g);
  const Json spec = parse_json_text(R"({"n": 2, "constants": [{"mu": 1, "nu": 2, "lambda": 2, "c": "1"}]})");
  EXPECT_EQ(lie_algebra_from_json(spec), g2());
}

TEST(LieStructure, JsonSpecErrors) {
  EXPECT_THROW(lie_algebra_from_json(parse_json_text(R"({"n": 2, "constants": [{"mu": 3, "nu": 1, "lambda": 1, "c": "1"}]})")),
               std::invalid_argument);
  EXPECT_THROW(lie_algebra_from_json(parse_json_text(R"({"constants": []})")), std::invalid_argument);
  EXPECT_THROW(
      lie_algebra_from_json(parse_json_text(
          R"({"n": 2, "constants": [{"mu": 1, "nu": 2, "lambda": 2, "c": "1"}, {"mu": 2, "nu": 1, "lambda": 2, "c": "1"}]})")),
      std::invalid_argument);
  try {
    parse_json_text("{\n  \"n\": 2,\n  \"constants\": [,]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 17u);
  }
}
