#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "lieweyl/enveloping.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/scalar.hpp"

namespace lieweyl {

/// Seeded generator shared by the randomized sweeps.
using Rng = std::mt19937_64;

/// p/q with |p| <= max_num and 1 <= q <= max_den; never zero when `nonzero`.
inline Scalar random_rational(Rng& rng, int max_num = 5, int max_den = 4, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  while (true) {
    const int p = num(rng);
    if (nonzero && p == 0) continue;
    return Scalar(p, static_cast<unsigned long>(den(rng)));
  }
}

inline std::vector<Scalar> random_vector(Rng& rng, std::size_t n) {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_rational(rng));
  return out;
}

/// Uniform over exponent vectors of total degree <= max_deg (by rejection).
inline MultiIndex random_monomial(Rng& rng, std::size_t n, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  while (true) {
    MultiIndex m(n);
    for (std::size_t k = 0; k < n; ++k) m.set(k, e(rng));
    if (m.degree() <= max_deg) return m;
  }
}

/// Random polynomial with up to `terms` monomials of degree <= max_deg; the
/// first term always has degree exactly max_deg.
inline Polynomial random_polynomial(Rng& rng, std::size_t n, unsigned max_deg, std::size_t terms = 3) {
  Polynomial p(n);
  std::uniform_int_distribution<std::size_t> slot(0, n == 0 ? 0 : n - 1);
  MultiIndex top(n);
  for (unsigned k = 0; k < max_deg && n > 0; ++k) top.bump(slot(rng));
  p.add_term(top, random_rational(rng, 5, 4, true));
  for (std::size_t t = 1; t < terms; ++t) p.add_term(random_monomial(rng, n, max_deg), random_rational(rng));
  return p;
}

inline PBWElement random_pbw(Rng& rng, std::size_t n, unsigned max_deg, std::size_t terms = 2) {
  PBWElement e(n);
  for (std::size_t t = 0; t < terms; ++t) e.add_term(random_monomial(rng, n, max_deg), random_rational(rng, 5, 4, true));
  return e;
}

}  // namespace lieweyl
