#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieweyl/check.hpp"
#include "lieweyl/format.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/random.hpp"
#include "lieweyl/series.hpp"
#include "lieweyl/weyl.hpp"

namespace lieweyl {

enum class RealizationKind { weyl_symmetric, dual_weyl_symmetric, custom };

inline const char* to_string(RealizationKind k) {
  switch (k) {
    case RealizationKind::weyl_symmetric:
      return "weyl_symmetric";
    case RealizationKind::dual_weyl_symmetric:
      return "dual_weyl_symmetric";
    case RealizationKind::custom:
      return "custom";
  }
  return "custom";
}

/// Images xhat_mu = sum_a x_a phi_{a mu}(d) of the basis of `algebra`.
/// For the dual kind `algebra` is the left-right dual (negated constants).
struct Realization {
  LieAlgebra algebra;
  std::vector<WeylOp> xhat;
  RealizationKind kind = RealizationKind::custom;
  std::size_t order = 0;

  std::size_t dim() const { return algebra.dim(); }
};

/// Operator matrix C_{mu nu} = sum_a C_{mu a nu} d_a.
inline OpMatrix adjoint_matrix(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  OpMatrix m(n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t a = 0; a < n; ++a)
        if (!g.c(mu, a, nu).is_zero()) m(mu, nu) += WeylOp::d(n, a) * g.c(mu, a, nu);
  return m;
}

/// xhat_mu = sum_a x_a P_{mu a}: contraction of x with the rows of P.
inline std::vector<WeylOp> contract_rows(const OpMatrix& p) {
  const std::size_t n = p.dim();
  std::vector<WeylOp> out;
  for (std::size_t mu = 0; mu < n; ++mu) {
    WeylOp acc(n);
    for (std::size_t a = 0; a < n; ++a) acc += WeylOp::x(n, a) * p(mu, a);
    out.push_back(std::move(acc));
  }
  return out;
}

/// Realization from a matrix phi in the xhat_mu = sum_a x_a phi_{a mu} convention.
/// Entries must have zero x-degree.
inline Realization realization_from_phi(const LieAlgebra& g, const OpMatrix& phi) {
  require_same_dim(g.dim(), phi.dim());
  for (std::size_t r = 0; r < phi.dim(); ++r)
    for (std::size_t c = 0; c < phi.dim(); ++c)
      if (phi(r, c).xdeg() != 0)
        throw std::invalid_argument("phi entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                    ") has nonzero x-degree");
  const std::size_t order = phi.valid_order();
  return {g, contract_rows(phi.transposed()), RealizationKind::custom, order};
}

/// Weyl-symmetric realization xhat_mu = sum_a x_a psi(C)_{mu a}, valid through d-order N.
inline Realization weyl_realization(const LieAlgebra& g, std::size_t order) {
  const OpMatrix psi = matrix_series(series_coeffs(SeriesKind::psi, order), adjoint_matrix(g));
  return {g, contract_rows(psi), RealizationKind::weyl_symmetric, order};
}

/// yhat_mu = sum_a x_a psi_tilde(C)_{mu a}, realizing the dual algebra.
inline Realization dual_realization(const LieAlgebra& g, std::size_t order) {
  const OpMatrix psit = matrix_series(series_coeffs(SeriesKind::psi_tilde, order), adjoint_matrix(g));
  return {dual_algebra(g), contract_rows(psit), RealizationKind::dual_weyl_symmetric, order};
}

/// (e^C, e^{-C}) through d-order N.
inline std::pair<OpMatrix, OpMatrix> t_realization(const LieAlgebra& g, std::size_t order) {
  const OpMatrix c = adjoint_matrix(g);
  return {matrix_series(series_coeffs(SeriesKind::exp, order), c),
          matrix_series(series_coeffs(SeriesKind::exp_neg, order), c)};
}

namespace detail {

inline std::string mismatch_text(const WeylMismatch& m) {
  return "coefficient of " + weyl_monomial_text(m.key) + ": " + m.lhs.str() + " vs " + m.rhs.str();
}

inline std::string idx(std::size_t k) { return std::to_string(k + 1); }

/// Records a comparison of lhs against rhs through their common validity order.
inline void compare_into(CheckResult& r, const WeylOp& lhs, const WeylOp& rhs, const std::string& where) {
  const std::size_t order = order_min(lhs.valid_order(), rhs.valid_order());
  r.order_checked = order_min(r.order_checked, order);
  if (!r.pass) return;
  if (auto m = first_mismatch(lhs, rhs, order)) {
    r.pass = false;
    r.witness = where + ": " + mismatch_text(*m);
  }
}

inline CheckResult open_check(std::string identity) {
  CheckResult r;
  r.identity = std::move(identity);
  r.order_checked = kExact;
  return r;
}

/// Caps exact comparisons at `cap` for reporting.
inline void close_check(CheckResult& r, std::size_t cap) {
  if (r.order_checked == kExact) r.order_checked = cap;
}

}  // namespace detail

/// [op_mu, op_nu] - sum_a C_{mu nu a} op_a == 0 through the guaranteed order.
inline CheckResult check_closure(const LieAlgebra& g, const std::vector<WeylOp>& ops, std::string identity) {
  const std::size_t n = g.dim();
  require_same_dim(n, ops.size());
  CheckResult r = detail::open_check(std::move(identity));
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu + 1; nu < n; ++nu) {
      WeylOp rhs(n);
      for (std::size_t a = 0; a < n; ++a)
        if (!g.c(mu, nu, a).is_zero()) rhs += ops[a] * g.c(mu, nu, a);
      detail::compare_into(r, commutator(ops[mu], ops[nu]), rhs, "mu=" + detail::idx(mu) + ",nu=" + detail::idx(nu));
    }
  std::size_t cap = kExact;
  unsigned top = 0;
  for (const auto& op : ops) {
    cap = order_min(cap, order_minus(op.valid_order(), 1));
    top = std::max(top, op.max_ddeg());
  }
  detail::close_check(r, cap == kExact ? top : cap);
  return r;
}

/// Checks that xhat_mu = sum_a x_a phi_{a mu}(d) closes the bracket of g
/// (equivalently the formal PDE system for phi), through order N-1.
inline CheckResult verify_realization(const LieAlgebra& g, const OpMatrix& phi, std::size_t order) {
  const Realization r = realization_from_phi(g, phi.truncated(order));
  return check_closure(g, r.xhat, "closure(phi)");
}

/// (sum_mu k_mu xhat_mu)^m |> 1 == (sum_mu k_mu x_mu)^m for random rational k
/// and every m <= m_max.
inline CheckResult verify_symmetrization(const Realization& real, std::size_t m_max, std::size_t trials, Rng& rng) {
  const std::size_t n = real.dim();
  if (m_max > real.order) throw InsufficientOrder("verify_symmetrization", m_max, real.order);
  CheckResult r{"symmetrization", m_max, true, std::nullopt};
  for (std::size_t t = 0; t < trials && r.pass; ++t) {
    const std::vector<Scalar> k = random_vector(rng, n);
    WeylOp kx(n);
    Polynomial linear(n);
    for (std::size_t mu = 0; mu < n; ++mu) {
      kx += real.xhat[mu] * k[mu];
      linear += Polynomial::variable(n, mu) * k[mu];
    }
    Polynomial lhs = Polynomial::one(n), rhs = Polynomial::one(n);
    for (std::size_t m = 1; m <= m_max; ++m) {
      lhs = kx.apply(lhs);
      rhs = rhs * linear;
      if (!(lhs == rhs)) {
        std::string kv;
        for (std::size_t mu = 0; mu < n; ++mu) kv += (mu ? "," : "") + k[mu].str();
        r.pass = false;
        r.witness = "k=(" + kv + "), m=" + std::to_string(m) + ": " + to_text(lhs) + " vs " + to_text(rhs);
        break;
      }
    }
  }
  return r;
}

inline CheckResult verify_symmetrization(const LieAlgebra& g, std::size_t order, std::size_t m_max, std::size_t trials,
                                         Rng& rng) {
  if (m_max > order) throw InsufficientOrder("verify_symmetrization", m_max, order);
  return verify_symmetrization(weyl_realization(g, order), m_max, trials, rng);
}

/// Identities of the adjoint operator matrix C and of e^{+-C}:
///   power_identity            sum_a (C^m)_{mu a} C_{a l nu}
///                               = sum_{a,b} [sum_k binom(m,k)(-1)^k (C^k)_{l a}(C^{m-k})_{b nu}] C_{mu a b}
///   power_derivative          d/dd_l (C^m)_{mu nu}
///                               = sum_{a,b} C_{mu a b} sum_{k>=1} binom(m,k)(-1)^{k-1}(C^{k-1})_{l a}(C^{m-k})_{b nu}
///   exp_derivative            d/dd_l (e^C)_{mu nu} = sum_{a,b} C_{mu a b} ((1-e^{-C})/C)_{l a} (e^C)_{b nu}
///   conjugated_structure      sum_{a,b,r} C_{b r a} (e^C)_{a k} (e^{-C})_{mu r} (e^{-C})_{nu b} = -C_{mu nu k}
/// The first two are polynomial identities checked for m <= m_max; the last
/// two are checked through d-order N.
inline std::vector<CheckResult> verify_appendix(const LieAlgebra& g, std::size_t order, std::size_t m_max) {
  const std::size_t n = g.dim();
  const OpMatrix c = adjoint_matrix(g);
  std::vector<OpMatrix> pw{OpMatrix::identity(n)};
  for (std::size_t m = 1; m <= m_max; ++m) pw.push_back(pw.back() * c);
  using detail::idx;

  CheckResult a1 = detail::open_check("power_identity");
  CheckResult a2 = detail::open_check("power_derivative");
  for (std::size_t m = 1; m <= m_max; ++m)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t la = 0; la < n; ++la)
        for (std::size_t nu = 0; nu < n; ++nu) {
          const std::string where =
              "m=" + std::to_string(m) + ",mu=" + idx(mu) + ",lambda=" + idx(la) + ",nu=" + idx(nu);
          WeylOp lhs(n), rhs(n);
          for (std::size_t a = 0; a < n; ++a)
            if (!g.c(a, la, nu).is_zero()) lhs += pw[m](mu, a) * g.c(a, la, nu);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
              if (g.c(mu, a, b).is_zero()) continue;
              WeylOp inner(n);
              for (std::size_t k = 0; k <= m; ++k) {
                Scalar w(mpq_class(binomial(m, k)));
                if (k % 2) w = -w;
                inner += pw[k](la, a) * pw[m - k](b, nu) * w;
              }
              rhs += inner * g.c(mu, a, b);
            }
          detail::compare_into(a1, lhs, rhs, where);
        }
  for (std::size_t m = 1; m <= m_max; ++m)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t la = 0; la < n; ++la)
        for (std::size_t nu = 0; nu < n; ++nu) {
          const std::string where =
              "m=" + std::to_string(m) + ",mu=" + idx(mu) + ",lambda=" + idx(la) + ",nu=" + idx(nu);
          WeylOp lhs = pw[m](mu, nu).d_derivative(la), rhs(n);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
              if (g.c(mu, a, b).is_zero()) continue;
              WeylOp inner(n);
              for (std::size_t k = 1; k <= m; ++k) {
                Scalar w(mpq_class(binomial(m, k)));
                if ((k - 1) % 2) w = -w;
                inner += pw[k - 1](la, a) * pw[m - k](b, nu) * w;
              }
              rhs += inner * g.c(mu, a, b);
            }
          detail::compare_into(a2, lhs, rhs, where);
        }
  detail::close_check(a1, m_max);
  detail::close_check(a2, m_max);

  // e^C one order higher so its d-derivative is still determined through N.
  const OpMatrix e_hi = matrix_series(series_coeffs(SeriesKind::exp, order + 1), c);
  const OpMatrix e = e_hi.truncated(order);
  const OpMatrix einv = matrix_series(series_coeffs(SeriesKind::exp_neg, order), c);
  const TruncSeries one_minus_exp_over_t =
      (TruncSeries(order + 1, {Scalar(1)}) - series_coeffs(SeriesKind::exp_neg, order + 1)).shift_down();
  const OpMatrix phi = matrix_series(one_minus_exp_over_t, c);

  CheckResult a3 = detail::open_check("exp_derivative");
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t la = 0; la < n; ++la)
      for (std::size_t nu = 0; nu < n; ++nu) {
        WeylOp lhs = e_hi(mu, nu).d_derivative(la), rhs(n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (!g.c(mu, a, b).is_zero()) rhs += phi(la, a) * e(b, nu) * g.c(mu, a, b);
        detail::compare_into(a3, lhs, rhs, "mu=" + idx(mu) + ",lambda=" + idx(la) + ",nu=" + idx(nu));
      }

  CheckResult a4 = detail::open_check("conjugated_structure");
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      // M_{r b} = (e^{-C})_{mu r} (e^{-C})_{nu b}, contracted with C_{b r a} (e^C)_{a k}
      std::vector<WeylOp> s(n, WeylOp(n));
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t r = 0; r < n; ++r) {
          bool used = false;
          for (std::size_t a = 0; a < n && !used; ++a) used = !g.c(b, r, a).is_zero();
          if (!used) continue;
          const WeylOp prod = einv(mu, r) * einv(nu, b);
          for (std::size_t a = 0; a < n; ++a)
            if (!g.c(b, r, a).is_zero()) s[a] += prod * g.c(b, r, a);
        }
      for (std::size_t k = 0; k < n; ++k) {
        WeylOp lhs = WeylOp(n, order);
        for (std::size_t a = 0; a < n; ++a)
          if (!s[a].is_zero()) lhs += s[a] * e(a, k);
        detail::compare_into(a4, lhs, WeylOp::constant(n, -g.c(mu, nu, k)).truncated(order),
                             "mu=" + idx(mu) + ",nu=" + idx(nu) + ",kappa=" + idx(k));
      }
    }
  detail::close_check(a3, order);
  detail::close_check(a4, order);
  return {a1, a2, a3, a4};
}

/// Operator-level relations of the extended algebra for (xhat, T, T^{-1}, yhat)
/// in the Weyl-symmetric realization, each through its guaranteed order.
inline std::vector<CheckResult> verify_h_relations(const LieAlgebra& g, std::size_t order) {
  const std::size_t n = g.dim();
  using detail::idx;
  const Realization xr = weyl_realization(g, order);
  const Realization yr = dual_realization(g, order);
  const auto [t, tinv] = t_realization(g, order);
  const OpMatrix c = adjoint_matrix(g);
  std::vector<CheckResult> out;

  {
    CheckResult r = detail::open_check("shift_commute");
    for (std::size_t p = 0; p < n * n; ++p)
      for (std::size_t q = p + 1; q < n * n; ++q) {
        const WeylOp& a = t(p / n, p % n);
        const WeylOp& b = t(q / n, q % n);
        detail::compare_into(r, commutator(a, b), WeylOp(n),
                             "T" + idx(p / n) + idx(p % n) + ",T" + idx(q / n) + idx(q % n));
        const WeylOp& ai = tinv(p / n, p % n);
        const WeylOp& bi = tinv(q / n, q % n);
        detail::compare_into(r, commutator(ai, bi), WeylOp(n),
                             "Tinv" + idx(p / n) + idx(p % n) + ",Tinv" + idx(q / n) + idx(q % n));
      }
    detail::close_check(r, order);
    out.push_back(r);
  }
  {
    CheckResult r = detail::open_check("shift_bracket");
    CheckResult ri = detail::open_check("inverse_shift_bracket");
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu)
        for (std::size_t la = 0; la < n; ++la) {
          const std::string where = "mu=" + idx(mu) + ",nu=" + idx(nu) + ",lambda=" + idx(la);
          // [T_{mu nu}, xhat_l] = sum_b C_{mu l b} T_{b nu}
          WeylOp rhs(n, order);
          for (std::size_t b = 0; b < n; ++b)
            if (!g.c(mu, la, b).is_zero()) rhs += t(b, nu) * g.c(mu, la, b);
          detail::compare_into(r, commutator(t(mu, nu), xr.xhat[la]), rhs, where);
          // [T^{-1}_{mu nu}, xhat_l] = sum_a C_{l a nu} T^{-1}_{mu a}
          WeylOp rhsi(n, order);
          for (std::size_t a = 0; a < n; ++a)
            if (!g.c(la, a, nu).is_zero()) rhsi += tinv(mu, a) * g.c(la, a, nu);
          detail::compare_into(ri, commutator(tinv(mu, nu), xr.xhat[la]), rhsi, where);
        }
    detail::close_check(r, order - 1);
    detail::close_check(ri, order - 1);
    out.push_back(r);
    out.push_back(ri);
  }
  {
    CheckResult r = detail::open_check("shift_inverse");
    const OpMatrix left = t * tinv, right = tinv * t, id = OpMatrix::identity(n, order);
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu) {
        detail::compare_into(r, left(mu, nu), id(mu, nu), "T*Tinv mu=" + idx(mu) + ",nu=" + idx(nu));
        detail::compare_into(r, right(mu, nu), id(mu, nu), "Tinv*T mu=" + idx(mu) + ",nu=" + idx(nu));
      }
    detail::close_check(r, order);
    out.push_back(r);
  }
  {
    CheckResult r{"shift_normalization", order, true, std::nullopt};
    const Polynomial one = Polynomial::one(n);
    for (std::size_t mu = 0; mu < n && r.pass; ++mu)
      for (std::size_t nu = 0; nu < n && r.pass; ++nu)
        for (const OpMatrix* m : {&t, &tinv}) {
          const Polynomial got = (*m)(mu, nu).apply(one);
          if (!(got == Polynomial::constant(n, mu == nu ? 1 : 0))) {
            r.pass = false;
            r.witness = "mu=" + idx(mu) + ",nu=" + idx(nu) + ": " + to_text(got);
            break;
          }
        }
    out.push_back(r);
  }
  {
    CheckResult r = detail::open_check("left_right_commute");
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu)
        detail::compare_into(r, commutator(xr.xhat[mu], yr.xhat[nu]), WeylOp(n), "mu=" + idx(mu) + ",nu=" + idx(nu));
    detail::close_check(r, order - 1);
    out.push_back(r);
  }
  {
    // yhat_mu = sum_a xhat_a T^{-1}_{mu a}
    CheckResult r = detail::open_check("dual_from_shift");
    for (std::size_t mu = 0; mu < n; ++mu) {
      WeylOp via(n);
      for (std::size_t a = 0; a < n; ++a) via += xr.xhat[a] * tinv(mu, a);
      detail::compare_into(r, via, yr.xhat[mu], "mu=" + idx(mu));
    }
    detail::close_check(r, order);
    out.push_back(r);
  }
  {
    CheckResult r = detail::open_check("psi_tilde_reflection");
    const OpMatrix a = matrix_series(series_coeffs(SeriesKind::psi_tilde, order), c);
    const OpMatrix b = matrix_series(series_coeffs(SeriesKind::psi, order), c * Scalar(-1));
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu)
        detail::compare_into(r, a(mu, nu), b(mu, nu), "mu=" + idx(mu) + ",nu=" + idx(nu));
    detail::close_check(r, order);
    out.push_back(r);
  }
  out.push_back(check_closure(yr.algebra, yr.xhat, "dual_closure"));
  return out;
}

}  // namespace lieweyl
