#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieweyl/check.hpp"
#include "lieweyl/enveloping.hpp"
#include "lieweyl/format.hpp"
#include "lieweyl/json_io.hpp"
#include "lieweyl/kappa.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/random.hpp"
#include "lieweyl/realization.hpp"
#include "lieweyl/star.hpp"

namespace lieweyl {

struct SuiteConfig {
  LieAlgebra algebra;
  std::string algebra_name;
  std::size_t order = 6;
  std::uint64_t seed = 42;
  std::string suite = "all";
  /// Replaces the Weyl-symmetric realization in the closure suite.
  std::optional<OpMatrix> phi;
};

struct SuiteEntry {
  std::string suite;
  CheckResult check;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::string algebra;
  std::size_t order = 0;
  std::string suite;
  std::vector<SuiteEntry> checks;
  std::vector<std::string> skipped;

  bool pass() const {
    for (const auto& e : checks)
      if (!e.check.pass && !e.check.experimental) return false;
    return true;
  }

  Json to_json() const {
    Json cs = Json::array();
    for (const auto& e : checks) {
      Json j = lieweyl::to_json(e.check);
      j["suite"] = e.suite;
      if (e.check.experimental) j["experimental"] = true;
      cs.push_back(std::move(j));
    }
    return {{"seed", seed}, {"algebra", algebra}, {"order", order}, {"suite", suite},
            {"checks", cs},  {"skipped", skipped}, {"pass", pass()}};
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "seed: " << seed << "\nalgebra: " << algebra << "\norder: " << order << "\nsuite: " << suite << "\n";
    std::size_t passed = 0, counted = 0;
    for (const auto& e : checks) {
      out << (e.check.pass ? "[PASS] " : "[FAIL] ") << e.suite << "/" << e.check.identity << "  order "
          << e.check.order_checked;
      if (e.check.experimental) out << "  (experimental)";
      if (e.check.witness) out << "\n       " << *e.check.witness;
      out << "\n";
      if (!e.check.experimental) {
        ++counted;
        if (e.check.pass) ++passed;
      }
    }
    for (const auto& s : skipped) out << "[SKIP] " << s << "\n";
    out << "result: " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << counted << ")\n";
    return out.str();
  }
};

namespace detail {

/// Accumulates an exact identity over random samples; the first failure is kept.
class Sweep {
 public:
  Sweep(std::string identity, std::size_t order, bool experimental = false) {
    r_.identity = std::move(identity);
    r_.order_checked = order;
    r_.experimental = experimental;
  }
  template <class T>
  void expect(const T& lhs, const T& rhs, const std::function<std::string()>& where) {
    if (!r_.pass || lhs == rhs) return;
    r_.pass = false;
    r_.witness = where() + ": " + lieweyl::to_text(lhs) + " vs " + lieweyl::to_text(rhs);
  }
  void fail(std::string witness) {
    if (!r_.pass) return;
    r_.pass = false;
    r_.witness = std::move(witness);
  }
  const CheckResult& result() const { return r_; }

 private:
  CheckResult r_;
};

inline std::size_t cap_degree(std::size_t want, std::size_t order, std::size_t parts) {
  return std::min(want, order / parts);
}

inline void add(SuiteReport& rep, const std::string& suite, const CheckResult& c) { rep.checks.push_back({suite, c}); }
inline void add(SuiteReport& rep, const std::string& suite, const std::vector<CheckResult>& cs) {
  for (const auto& c : cs) add(rep, suite, c);
}

inline void suite_jacobi(const SuiteConfig& cfg, Rng&, SuiteReport& rep) {
  const StructureReport s = validate(cfg.algebra);
  CheckResult anti{"antisymmetry", 0, s.antisymmetry, std::nullopt};
  if (s.antisymmetry_witness) {
    const auto& w = *s.antisymmetry_witness;
    anti.witness = "C(" + idx(w[0]) + "," + idx(w[1]) + "," + idx(w[2]) + ") + C(" + idx(w[1]) + "," + idx(w[0]) +
                   "," + idx(w[2]) + ") != 0";
  }
  CheckResult jac{"jacobi", 0, s.jacobi, std::nullopt};
  if (s.jacobi_witness) {
    const auto& w = *s.jacobi_witness;
    jac.witness = "(mu,alpha,beta,nu)=(" + idx(w[0]) + "," + idx(w[1]) + "," + idx(w[2]) + "," + idx(w[3]) +
                  "): cyclic sum " + s.jacobi_value.str();
  }
  add(rep, "jacobi", anti);
  add(rep, "jacobi", jac);
}

inline void suite_closure(const SuiteConfig& cfg, Rng&, SuiteReport& rep) {
  if (cfg.phi) {
    add(rep, "closure", verify_realization(cfg.algebra, *cfg.phi, cfg.order));
    return;
  }
  add(rep, "closure", check_closure(cfg.algebra, weyl_realization(cfg.algebra, cfg.order).xhat, "weyl_closure"));
}

inline void suite_symmetrization(const SuiteConfig& cfg, Rng& rng, SuiteReport& rep) {
  add(rep, "symmetrization", verify_symmetrization(cfg.algebra, cfg.order, std::min<std::size_t>(5, cfg.order), 5, rng));
}

inline void suite_duality(const SuiteConfig& cfg, Rng& rng, SuiteReport& rep) {
  const LieAlgebra& g = cfg.algebra;
  const std::size_t n = g.dim(), N = cfg.order;
  StarContext ctx = StarContext::weyl_symmetric(g, N);
  const auto& xr = ctx.realization(Side::primal);
  const auto& yr = ctx.realization(Side::dual);

  CheckResult comm = open_check("left_right_commute");
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      compare_into(comm, commutator(xr.xhat[mu], yr.xhat[nu]), WeylOp(n), "mu=" + idx(mu) + ",nu=" + idx(nu));
  close_check(comm, order_minus(N, 1));
  add(rep, "duality", comm);
  add(rep, "duality", check_closure(yr.algebra, yr.xhat, "dual_closure"));

  const std::size_t deg = cap_degree(3, N, 2);
  Sweep star_dual("star_duality", 2 * deg);
  for (int t = 0; t < 10; ++t) {
    const Polynomial f = random_polynomial(rng, n, static_cast<unsigned>(deg));
    const Polynomial h = random_polynomial(rng, n, static_cast<unsigned>(deg));
    star_dual.expect(ctx.star(f, h, Side::primal), ctx.star(h, f, Side::dual),
                     [&] { return "f=" + to_text(f) + ", g=" + to_text(h); });
  }
  add(rep, "duality", star_dual.result());

  // Omega(X X_mu) = yhat_mu |> Omega(X) and the experimental shift analogue
  const std::size_t xdeg = std::min<std::size_t>(4, N - 1);
  Sweep inter("y_intertwining", xdeg + 1);
  Sweep tinter("t_intertwining", xdeg, true);
  const auto [t, tinv] = t_realization(g, N);
  Enveloping& env = ctx.enveloping(Side::primal);
  for (int k = 0; k < 10; ++k) {
    const PBWElement x = random_pbw(rng, n, static_cast<unsigned>(xdeg));
    const Polynomial ox = ctx.omega(x);
    for (std::size_t mu = 0; mu < n; ++mu) {
      inter.expect(ctx.omega(env.mul(x, PBWElement::generator(n, mu))), yr.xhat[mu].apply(ox),
                   [&] { return "X=" + to_text(x) + ", mu=" + idx(mu); });
      for (std::size_t nu = 0; nu < n; ++nu) {
        tinter.expect(ctx.omega(env.t_action(mu, nu, x)), t(mu, nu).apply(ox),
                      [&] { return "T X=" + to_text(x) + ", mu=" + idx(mu) + ",nu=" + idx(nu); });
        tinter.expect(ctx.omega(env.tinv_action(mu, nu, x)), tinv(mu, nu).apply(ox),
                      [&] { return "Tinv X=" + to_text(x) + ", mu=" + idx(mu) + ",nu=" + idx(nu); });
      }
    }
  }
  add(rep, "duality", inter.result());
  add(rep, "duality", tinter.result());
}

inline void suite_appendix(const SuiteConfig& cfg, Rng&, SuiteReport& rep) {
  add(rep, "appendix", verify_appendix(cfg.algebra, cfg.order, 5));
}

inline void suite_hrelations(const SuiteConfig& cfg, Rng&, SuiteReport& rep) {
  add(rep, "hrelations", verify_h_relations(cfg.algebra, cfg.order));
}

inline void suite_kappa(const SuiteConfig& cfg, Rng& rng, SuiteReport& rep) {
  const auto b = kappa_parameters(cfg.algebra);
  if (!b) {
    rep.skipped.push_back("kappa: algebra is not of the form b_mu delta_{nu lambda} - b_nu delta_{mu lambda}");
    return;
  }
  const KappaParams p(*b);
  const std::size_t n = p.dim(), N = cfg.order;
  add(rep, "kappa", kappa_cross_check(p, N));

  CheckResult power{"kappa_power", N, true, std::nullopt};
  for (std::size_t k = 1; k <= N && power.pass; ++k)
    if (!kappa_power_check(p, k, N)) {
      power.pass = false;
      power.witness = "k=" + std::to_string(k);
    }
  add(rep, "kappa", power);

  StarContext ctx = StarContext::weyl_symmetric(cfg.algebra, N);
  const std::size_t deg = cap_degree(3, N, 2);
  Sweep generic("bidiff_star", 2 * deg), dual("bidiff_dual_star", 2 * deg), swap("bidiff_duality", 2 * deg),
      poisson("kappa_poisson", 2 * deg);
  const BiDiffOperator op = kappa_star_operator(p, 2 * deg), opd = kappa_star_operator(p, 2 * deg, true);
  for (int t = 0; t < 10; ++t) {
    const Polynomial f = random_polynomial(rng, n, static_cast<unsigned>(deg));
    const Polynomial h = random_polynomial(rng, n, static_cast<unsigned>(deg));
    auto where = [&] { return "f=" + to_text(f) + ", g=" + to_text(h); };
    const Polynomial bs = op.apply(f, h);
    generic.expect(bs, ctx.star(f, h), where);
    dual.expect(opd.apply(f, h), ctx.star(f, h, Side::dual), where);
    swap.expect(bs, opd.apply(h, f), where);
    if (!kappa_poisson_check(p, op, f, h)) poisson.fail(where());
  }
  add(rep, "kappa", generic.result());
  add(rep, "kappa", dual.result());
  add(rep, "kappa", swap.result());
  add(rep, "kappa", poisson.result());
}

inline void suite_enveloping(const SuiteConfig& cfg, Rng& rng, SuiteReport& rep) {
  const std::size_t n = cfg.algebra.dim();
  Enveloping env(cfg.algebra);
  const PBWElement one = PBWElement::one(n);
  Sweep coproduct("t_coproduct", 6), left("left_shift", 5), coproduct_inv("tinv_coproduct", 6), right("right_shift", 5),
      inverse("shift_inverse", 4), commute("shift_commute", 4), bracket("shift_bracket", 5), y("y_routes", 5),
      lr("left_right_commute", 5), norm("shift_normalization", 0);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      auto where = [&] { return "mu=" + idx(mu) + ",nu=" + idx(nu); };
      const PBWElement delta = PBWElement::constant(n, mu == nu ? 1 : 0);
      norm.expect(env.t_action(mu, nu, one), delta, where);
      norm.expect(env.tinv_action(mu, nu, one), delta, where);
    }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < 20; ++k) {
    const PBWElement x = PBWElement::monomial(random_monomial(rng, n, 4));
    const PBWElement yv = PBWElement::monomial(random_monomial(rng, n, 2));
    const PBWElement xy = env.mul(x, yv);
    const std::string xs = to_text(x), ys = to_text(yv);
    for (std::size_t mu = 0; mu < n; ++mu) {
      const PBWElement gmu = PBWElement::generator(n, mu);
      PBWElement lsum(n), rsum(n);
      for (std::size_t a = 0; a < n; ++a) {
        lsum += env.mul(env.t_action(mu, a, x), PBWElement::generator(n, a));
        rsum += env.mul(PBWElement::generator(n, a), env.tinv_action(mu, a, x));
      }
      left.expect(env.mul(gmu, x), lsum, [&] { return "X=" + xs + ", mu=" + idx(mu); });
      right.expect(env.mul(x, gmu), rsum, [&] { return "X=" + xs + ", mu=" + idx(mu); });
      try {
        const PBWElement yx = env.y_action(mu, x);
        for (std::size_t nu = 0; nu < n; ++nu) {
          const PBWElement gnu = PBWElement::generator(n, nu);
          lr.expect(env.mul(gnu, yx), env.y_action(mu, env.mul(gnu, x)),
                    [&] { return "X=" + xs + ", mu=" + idx(nu) + ", nu=" + idx(mu); });
        }
      } catch (const std::logic_error& e) {
        y.fail("X=" + xs + ", mu=" + idx(mu) + ": " + e.what());
      }
      for (std::size_t nu = 0; nu < n; ++nu) {
        auto where = [&] { return "X=" + xs + ", Y=" + ys + ", mu=" + idx(mu) + ",nu=" + idx(nu); };
        PBWElement cp(n), cpi(n), tt(n), tti(n);
        for (std::size_t a = 0; a < n; ++a) {
          cp += env.mul(env.t_action(mu, a, x), env.t_action(a, nu, yv));
          cpi += env.mul(env.tinv_action(a, nu, x), env.tinv_action(mu, a, yv));
          tt += env.tinv_action(mu, a, env.t_action(a, nu, x));
          tti += env.t_action(mu, a, env.tinv_action(a, nu, x));
        }
        coproduct.expect(env.t_action(mu, nu, xy), cp, where);
        coproduct_inv.expect(env.tinv_action(mu, nu, xy), cpi, where);
        const PBWElement dx = mu == nu ? x : PBWElement(n);
        inverse.expect(tt, dx, where);
        inverse.expect(tti, dx, where);
        // [T_{mu nu}, X_l] |> X = sum_a C_{mu l a} T_{a nu} |> X
        const std::size_t la = pick(rng);
        PBWElement rhs(n);
        for (std::size_t a = 0; a < n; ++a)
          if (!cfg.algebra.c(mu, la, a).is_zero()) rhs += env.t_action(a, nu, x) * cfg.algebra.c(mu, la, a);
        bracket.expect(env.t_action(mu, nu, env.mul(PBWElement::generator(n, la), x)) -
                           env.mul(PBWElement::generator(n, la), env.t_action(mu, nu, x)),
                       rhs, [&] { return "X=" + xs + ", mu=" + idx(mu) + ",nu=" + idx(nu) + ",lambda=" + idx(la); });
        const std::size_t a = pick(rng), b = pick(rng);
        commute.expect(env.t_action(mu, nu, env.t_action(a, b, x)), env.t_action(a, b, env.t_action(mu, nu, x)),
                       [&] { return "X=" + xs + ", T" + idx(mu) + idx(nu) + ", T" + idx(a) + idx(b); });
        commute.expect(env.tinv_action(mu, nu, env.tinv_action(a, b, x)),
                       env.tinv_action(a, b, env.tinv_action(mu, nu, x)),
                       [&] { return "X=" + xs + ", Tinv" + idx(mu) + idx(nu) + ", Tinv" + idx(a) + idx(b); });
      }
    }
  }
  for (const Sweep* s : {&norm, &coproduct, &left, &coproduct_inv, &right, &inverse, &commute, &bracket, &y, &lr})
    add(rep, "enveloping", s->result());
}

inline void suite_poisson(const SuiteConfig& cfg, Rng& rng, SuiteReport& rep) {
  const LieAlgebra& g = cfg.algebra;
  const std::size_t n = g.dim(), N = cfg.order;
  StarContext ctx = StarContext::weyl_symmetric(g, N);
  const std::size_t deg = cap_degree(3, N, 2);
  Sweep anti("star_commutator_limit", 2 * deg), half("star_first_order", 2 * deg),
      shape("bracket_antisymmetry", 2 * deg), leibniz("bracket_leibniz", 3 * 2), jacobi("bracket_jacobi", 3 * 2);
  auto star = [&ctx](const Polynomial& a, const Polynomial& b) { return ctx.star(a, b); };
  auto cstar = [&ctx](const Polynomial& a, const Polynomial& b) { return ctx.star(a, b) - ctx.star(b, a); };
  for (int t = 0; t < 10; ++t) {
    const Polynomial f = random_polynomial(rng, n, static_cast<unsigned>(deg));
    const Polynomial h = random_polynomial(rng, n, static_cast<unsigned>(deg));
    auto where = [&] { return "f=" + to_text(f) + ", g=" + to_text(h); };
    const Polynomial br = poisson_first_order(g, f, h);
    anti.expect(first_order_part(cstar, f, h), br, where);
    half.expect(first_order_part(star, f, h), br * Scalar(1, 2), where);
    shape.expect(poisson_first_order(g, h, f), -br, where);
  }
  for (int t = 0; t < 5; ++t) {
    const Polynomial a = random_polynomial(rng, n, 2), b = random_polynomial(rng, n, 2), c = random_polynomial(rng, n, 2);
    auto where = [&] { return "f=" + to_text(a) + ", g=" + to_text(b) + ", h=" + to_text(c); };
    leibniz.expect(poisson_first_order(g, a, b * c), poisson_first_order(g, a, b) * c + b * poisson_first_order(g, a, c),
                   where);
    jacobi.expect(poisson_first_order(g, a, poisson_first_order(g, b, c)) +
                      poisson_first_order(g, b, poisson_first_order(g, c, a)) +
                      poisson_first_order(g, c, poisson_first_order(g, a, b)),
                  Polynomial(n), where);
  }
  for (const Sweep* s : {&anti, &half, &shape, &leibniz, &jacobi}) add(rep, "poisson", s->result());
}

inline void suite_roundtrip(const SuiteConfig& cfg, Rng& rng, SuiteReport& rep) {
  const LieAlgebra& g = cfg.algebra;
  const std::size_t n = g.dim(), N = cfg.order;
  StarContext ctx = StarContext::weyl_symmetric(g, N);
  Enveloping& env = ctx.enveloping();
  const std::size_t rdeg = cap_degree(5, N, 1);
  Sweep fwd("omega_omega_inv", rdeg), back("omega_inv_omega", rdeg);
  for (int t = 0; t < 10; ++t) {
    const Polynomial f = random_polynomial(rng, n, static_cast<unsigned>(rdeg), 4);
    fwd.expect(ctx.omega(ctx.omega_inv(f)), f, [&] { return "f=" + to_text(f); });
    const PBWElement x = random_pbw(rng, n, static_cast<unsigned>(rdeg), 3);
    back.expect(ctx.omega_inv(ctx.omega(x)), x, [&] { return "X=" + to_text(x); });
  }
  const std::size_t hdeg = cap_degree(3, N, 2);
  Sweep hom("omega_homomorphism", 2 * hdeg);
  for (int t = 0; t < 10; ++t) {
    const PBWElement a = random_pbw(rng, n, static_cast<unsigned>(hdeg)), b = random_pbw(rng, n, static_cast<unsigned>(hdeg));
    hom.expect(ctx.omega(env.mul(a, b)), ctx.star(ctx.omega(a), ctx.omega(b)),
               [&] { return "A=" + to_text(a) + ", B=" + to_text(b); });
  }
  const std::size_t adeg = cap_degree(2, N, 3);
  Sweep assoc("star_associativity", 3 * adeg), unit("star_unit", 2 * hdeg), gen("generator_bracket", 2),
      deform("star_deformation", 2 * hdeg);
  for (int t = 0; t < 10; ++t) {
    const Polynomial a = random_polynomial(rng, n, static_cast<unsigned>(adeg));
    const Polynomial b = random_polynomial(rng, n, static_cast<unsigned>(adeg));
    const Polynomial c = random_polynomial(rng, n, static_cast<unsigned>(adeg));
    assoc.expect(ctx.star(ctx.star(a, b), c), ctx.star(a, ctx.star(b, c)),
                 [&] { return "f=" + to_text(a) + ", g=" + to_text(b) + ", h=" + to_text(c); });
    const Polynomial f = random_polynomial(rng, n, static_cast<unsigned>(hdeg));
    const Polynomial h = random_polynomial(rng, n, static_cast<unsigned>(hdeg));
    const Polynomial one = Polynomial::one(n);
    unit.expect(ctx.star(f, one), f, [&] { return "f=" + to_text(f); });
    unit.expect(ctx.star(one, f), f, [&] { return "f=" + to_text(f); });
    const Polynomial fh = f * h;
    const Polynomial diff = ctx.star(f, h) - fh;
    if (!diff.is_zero() && diff.degree() >= fh.degree())
      deform.fail("f=" + to_text(f) + ", g=" + to_text(h) + ": correction " + to_text(diff));
  }
  if (N >= 2)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu) {
        const Polynomial xm = Polynomial::variable(n, mu), xn = Polynomial::variable(n, nu);
        Polynomial rhs(n);
        for (std::size_t a = 0; a < n; ++a) rhs += Polynomial::variable(n, a) * g.c(mu, nu, a);
        gen.expect(ctx.star(xm, xn) - ctx.star(xn, xm), rhs, [&] { return "mu=" + idx(mu) + ",nu=" + idx(nu); });
      }
  for (const Sweep* s : {&fwd, &back, &hom, &assoc, &unit, &gen, &deform}) add(rep, "roundtrip", s->result());
}

using SuiteFn = void (*)(const SuiteConfig&, Rng&, SuiteReport&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"jacobi", suite_jacobi},         {"closure", suite_closure},       {"symmetrization", suite_symmetrization},
      {"duality", suite_duality},       {"appendix", suite_appendix},     {"kappa", suite_kappa},
      {"enveloping", suite_enveloping}, {"hrelations", suite_hrelations}, {"poisson", suite_poisson},
      {"roundtrip", suite_roundtrip}};
  return table;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : detail::suite_table()) out.push_back(name);
  out.push_back("all");
  return out;
}

/// Runs one suite (or "all"); each suite draws from its own stream seeded by
/// (seed, suite position), so results do not depend on which suites ran first.
inline SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.order == 0) throw std::invalid_argument("order must be at least 1");
  SuiteReport rep;
  rep.seed = cfg.seed;
  rep.algebra = cfg.algebra_name;
  rep.order = cfg.order;
  rep.suite = cfg.suite;
  const auto& table = detail::suite_table();
  bool found = false;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (cfg.suite != "all" && cfg.suite != table[k].first) continue;
    found = true;
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(k)};
    Rng rng(seq);
    table[k].second(cfg, rng, rep);
  }
  if (!found) throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  return rep;
}

}  // namespace lieweyl
