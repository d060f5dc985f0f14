#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieweyl/errors.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/scalar.hpp"

namespace lieweyl {

/// Finite-dimensional Lie algebra [X_mu, X_nu] = sum_l C(mu, nu, l) X_l.
///
/// Indices are 0-based in the C++ API; text and JSON forms are 1-based.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t n) : n_(n), c_(n * n * n) {
    if (n > kMaxDim) throw std::invalid_argument("LieAlgebra: dimension exceeds limit");
  }

  std::size_t dim() const { return n_; }

  const Scalar& c(std::size_t mu, std::size_t nu, std::size_t la) const { return c_[(mu * n_ + nu) * n_ + la]; }
  void set(std::size_t mu, std::size_t nu, std::size_t la, const Scalar& v) { c_[(mu * n_ + nu) * n_ + la] = v; }

  bool is_abelian() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> c_;
};

/// Outcome of structural validation. Witness indices are 0-based.
struct StructureReport {
  bool antisymmetry = true;
  bool jacobi = true;
  /// (mu, nu, lambda) with C_{mu nu lambda} + C_{nu mu lambda} != 0.
  std::optional<std::array<std::size_t, 3>> antisymmetry_witness;
  /// (mu, alpha, beta, nu) whose cyclic sum is nonzero, and that sum.
  std::optional<std::array<std::size_t, 4>> jacobi_witness;
  Scalar jacobi_value;

  bool ok() const { return antisymmetry && jacobi; }
};

inline StructureReport validate(const LieAlgebra& g) {
  StructureReport r;
  const std::size_t n = g.dim();
  for (std::size_t mu = 0; mu < n && r.antisymmetry; ++mu)
    for (std::size_t nu = 0; nu < n && r.antisymmetry; ++nu)
      for (std::size_t la = 0; la < n; ++la)
        if (!(g.c(mu, nu, la) + g.c(nu, mu, la)).is_zero()) {
          r.antisymmetry = false;
          r.antisymmetry_witness = {mu, nu, la};
          break;
        }
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t al = 0; al < n; ++al)
      for (std::size_t be = 0; be < n; ++be)
        for (std::size_t nu = 0; nu < n; ++nu) {
          Scalar sum;
          for (std::size_t rho = 0; rho < n; ++rho) {
            sum += g.c(mu, al, rho) * g.c(rho, be, nu);
            sum += g.c(al, be, rho) * g.c(rho, mu, nu);
            sum += g.c(be, mu, rho) * g.c(rho, al, nu);
          }
          if (!sum.is_zero()) {
            r.jacobi = false;
            r.jacobi_witness = {mu, al, be, nu};
            r.jacobi_value = sum;
            return r;
          }
        }
  return r;
}

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

/// Two-dimensional non-abelian algebra [X_1, X_2] = X_2.
inline LieAlgebra g2() {
  LieAlgebra g(2);
  g.set(0, 1, 1, 1);
  g.set(1, 0, 1, -1);
  return g;
}

/// C_{mu nu lambda} = b_mu delta_{nu lambda} - b_nu delta_{mu lambda}; b_mu = i a_mu
/// for the kappa-deformed space.
inline LieAlgebra kappa_algebra(const std::vector<Scalar>& b) {
  const std::size_t n = b.size();
  LieAlgebra g(n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t la = 0; la < n; ++la) {
        Scalar v;
        if (nu == la) v += b[mu];
        if (mu == la) v -= b[nu];
        g.set(mu, nu, la, v);
      }
  return g;
}

/// su(2)-type algebra C_{mu nu lambda} = h * epsilon_{mu nu lambda}.
inline LieAlgebra su2(const Scalar& h = 1) {
  LieAlgebra g(3);
  const std::array<std::array<std::size_t, 3>, 3> cyc{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (const auto& t : cyc) {
    g.set(t[0], t[1], t[2], h);
    g.set(t[1], t[0], t[2], -h);
  }
  return g;
}

/// Left-right dual: all structure constants negated.
inline LieAlgebra dual_algebra(const LieAlgebra& g) {
  LieAlgebra out(g.dim());
  for (std::size_t mu = 0; mu < g.dim(); ++mu)
    for (std::size_t nu = 0; nu < g.dim(); ++nu)
      for (std::size_t la = 0; la < g.dim(); ++la) out.set(mu, nu, la, -g.c(mu, nu, la));
  return out;
}

inline LieAlgebra rescale(const LieAlgebra& g, const Scalar& h) {
  LieAlgebra out(g.dim());
  for (std::size_t mu = 0; mu < g.dim(); ++mu)
    for (std::size_t nu = 0; nu < g.dim(); ++nu)
      for (std::size_t la = 0; la < g.dim(); ++la) out.set(mu, nu, la, g.c(mu, nu, la) * h);
  return out;
}

/// One user-supplied structure constant, 0-based.
struct ConstantEntry {
  std::size_t mu, nu, lambda;
  Scalar value;
};

enum class Completion {
  /// Conflicting entries throw std::invalid_argument.
  strict,
  /// Explicit entries override completed ones, so a non-antisymmetric table
  /// survives loading and is reported by validate().
  lenient,
};

/// Builds an algebra from nonzero entries, filling in C_{nu mu l} = -C_{mu nu l}.
inline LieAlgebra from_constants(std::size_t n, const std::vector<ConstantEntry>& entries,
                                 Completion mode = Completion::strict) {
  LieAlgebra g(n);
  std::vector<bool> explicit_entry(n * n * n, false);
  auto slot = [n](std::size_t mu, std::size_t nu, std::size_t la) { return (mu * n + nu) * n + la; };
  auto name = [](std::size_t mu, std::size_t nu, std::size_t la) {
    return "C(" + std::to_string(mu + 1) + "," + std::to_string(nu + 1) + "," + std::to_string(la + 1) + ")";
  };
  for (const auto& e : entries) {
    if (e.mu >= n || e.nu >= n || e.lambda >= n) throw std::out_of_range("structure constant index out of range");
    if (explicit_entry[slot(e.mu, e.nu, e.lambda)] && !(g.c(e.mu, e.nu, e.lambda) == e.value) &&
        mode == Completion::strict)
      throw std::invalid_argument("duplicate structure constant " + name(e.mu, e.nu, e.lambda));
    explicit_entry[slot(e.mu, e.nu, e.lambda)] = true;
    g.set(e.mu, e.nu, e.lambda, e.value);
  }
  for (const auto& e : entries) {
    const std::size_t partner = slot(e.nu, e.mu, e.lambda);
    const Scalar expected = -g.c(e.mu, e.nu, e.lambda);
    if (explicit_entry[partner]) {
      if (!(g.c(e.nu, e.mu, e.lambda) == expected) && mode == Completion::strict)
        throw std::invalid_argument("conflicting structure constants " + name(e.mu, e.nu, e.lambda) + " and " +
                                    name(e.nu, e.mu, e.lambda));
      continue;
    }
    g.set(e.nu, e.mu, e.lambda, expected);
  }
  return g;
}

/// Recovers b when g has the kappa form b_mu delta_{nu l} - b_nu delta_{mu l}.
inline std::optional<std::vector<Scalar>> kappa_parameters(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n < 2) {
    if (g.is_abelian()) return std::vector<Scalar>(n);
    return std::nullopt;
  }
  std::vector<Scalar> b(n);
  for (std::size_t mu = 0; mu < n; ++mu) b[mu] = g.c(mu, mu == 0 ? 1 : 0, mu == 0 ? 1 : 0);
  if (kappa_algebra(b) == g) return b;
  return std::nullopt;
}

}  // namespace lieweyl
