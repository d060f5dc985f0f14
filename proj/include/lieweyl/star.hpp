#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "lieweyl/enveloping.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/realization.hpp"

namespace lieweyl {

enum class Side { primal, dual };

/// A realization and its left-right dual, with the ordering maps
/// Omega(X) = X(xhat) |> 1 between U(g) and polynomials.
///
/// Omega images of PBW monomials are cached, so a context is not safe for
/// concurrent use; give each thread its own.
class StarContext {
 public:
  StarContext(Realization primal, Realization dual)
      : primal_(std::move(primal)), dual_(std::move(dual)) {
    require_same_dim(primal_.side.dim(), dual_.side.dim());
  }

  static StarContext weyl_symmetric(const LieAlgebra& g, std::size_t order) {
    return StarContext(weyl_realization(g, order), dual_realization(g, order));
  }

  std::size_t dim() const { return primal_.side.dim(); }
  std::size_t order() const { return std::min(primal_.side.order, dual_.side.order); }
  const Realization& realization(Side s = Side::primal) const { return branch(s).side; }
  Enveloping& enveloping(Side s = Side::primal) const { return branch(s).env; }

  Polynomial omega(const PBWElement& x, Side s = Side::primal) const {
    Polynomial out(dim());
    for (const auto& [m, c] : x.terms()) out += omega_monomial(m, s) * c;
    return out;
  }

  /// Lift of the top homogeneous part to ordered PBW monomials, then
  /// recursion on the remainder.
  PBWElement omega_inv(const Polynomial& f, Side s = Side::primal) const {
    PBWElement out(dim());
    Polynomial rest = f;
    while (!rest.is_zero()) {
      const int d = rest.degree();
      PBWElement lift(dim());
      const Polynomial top = rest.homogeneous(static_cast<unsigned>(d));
      for (const auto& [m, c] : top.terms()) lift.add_term(m, c);
      rest -= omega(lift, s);
      out += lift;
      if (rest.degree() >= d) throw std::logic_error("omega_inv: ordering map does not preserve leading terms");
    }
    return out;
  }

  /// f * g = Omega(Omega^{-1}(f) Omega^{-1}(g)).
  Polynomial star(const Polynomial& f, const Polynomial& g, Side s = Side::primal) const {
    const int need = f.degree() + g.degree();
    if (need > 0 && static_cast<std::size_t>(need) > order())
      throw InsufficientOrder("star", static_cast<std::size_t>(need), order());
    Branch& b = branch(s);
    return omega(b.env.mul(omega_inv(f, s), omega_inv(g, s)), s);
  }

  /// f * g == g *~ f.
  bool duality_check(const Polynomial& f, const Polynomial& g) const {
    return star(f, g, Side::primal) == star(g, f, Side::dual);
  }

 private:
  struct Branch {
    Realization side;
    mutable Enveloping env;
    mutable std::map<MultiIndex, Polynomial> cache;

    explicit Branch(Realization r) : side(std::move(r)), env(side.algebra) {}
  };

  Branch& branch(Side s) const { return s == Side::primal ? primal_ : dual_; }

  /// Omega(X_i X') = xhat_i |> Omega(X') with X_i the leftmost generator.
  const Polynomial& omega_monomial(const MultiIndex& m, Side s) const {
    Branch& b = branch(s);
    if (auto it = b.cache.find(m); it != b.cache.end()) return it->second;
    Polynomial value(dim());
    if (m.is_zero()) {
      value = Polynomial::one(dim());
    } else {
      const std::size_t i = m.first_nonzero();
      MultiIndex rest = m;
      rest.bump(i, -1);
      value = b.side.xhat[i].apply(omega_monomial(rest, s));
    }
    return b.cache.emplace(m, std::move(value)).first->second;
  }

  mutable Branch primal_;
  mutable Branch dual_;
};

/// Lie-Poisson bracket {f, h} = sum_{a,b} (sum_r C_{a b r} x_r) (d_a f)(d_b h).
inline Polynomial poisson_first_order(const LieAlgebra& g, const Polynomial& f, const Polynomial& h) {
  const std::size_t n = g.dim();
  require_same_dim(n, f.dim());
  require_same_dim(n, h.dim());
  Polynomial out(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Polynomial fa = f.derivative(a);
    if (fa.is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      Polynomial lin(n);
      for (std::size_t r = 0; r < n; ++r)
        if (!g.c(a, b, r).is_zero()) lin += Polynomial::variable(n, r) * g.c(a, b, r);
      if (lin.is_zero()) continue;
      out += lin * fa * h.derivative(b);
    }
  }
  return out;
}

/// Leading correction of a product: for homogeneous parts f_i, h_j the
/// degree (i + j - 1) component of star(f_i, h_j), summed.
template <class StarFn>
Polynomial first_order_part(StarFn&& star_fn, const Polynomial& f, const Polynomial& h) {
  Polynomial out(f.dim());
  for (int i = 0; i <= f.degree(); ++i) {
    const Polynomial fi = f.homogeneous(static_cast<unsigned>(i));
    if (fi.is_zero()) continue;
    for (int j = 0; j <= h.degree(); ++j) {
      const Polynomial hj = h.homogeneous(static_cast<unsigned>(j));
      if (hj.is_zero() || i + j == 0) continue;
      out += star_fn(fi, hj).homogeneous(static_cast<unsigned>(i + j - 1));
    }
  }
  return out;
}

}  // namespace lieweyl
