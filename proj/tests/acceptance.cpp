// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Usage: acceptance <path-to-lieweyl-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "lieweyl/lieweyl.hpp"

using namespace lieweyl;

namespace {

struct Named {
  std::string name;
  LieAlgebra g;
};

std::string vec_text(const std::vector<Scalar>& b) {
  std::string s;
  for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + b[k].str();
  return s;
}

/// abelian n <= 4, g2, su(2)-type at two scales, and `per_n` random kappa
/// algebras for n = 2, 3, 4.
std::vector<Named> test_algebras(std::size_t per_n, std::uint64_t seed) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"abelian" + std::to_string(n), abelian(n)});
  out.push_back({"g2", g2()});
  out.push_back({"su2", su2()});
  out.push_back({"su2:1/2", su2(Scalar(1, 2))});
  Rng rng(seed);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t t = 0; t < per_n; ++t) {
      const std::vector<Scalar> b = random_vector(rng, n);
      out.push_back({"kappa(" + vec_text(b) + ")", kappa_algebra(b)});
    }
  return out;
}

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      detail_ = what;
    }
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool finish(double limit = 0) {
    const double s = seconds();
    if (limit > 0) require(s < limit, "runtime " + std::to_string(s) + " s over limit");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass_ ? "[PASS] " : "[FAIL] ") << title_ << " (" << s << " s)";
    if (!pass_) line << ": " << detail_;
    std::cout << line.str() << std::endl;
    return pass_;
  }

 private:
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  bool pass_ = true;
  std::string detail_;
};

void require_checks(Criterion& c, const std::string& where, const std::vector<CheckResult>& cs, std::size_t order) {
  for (const auto& r : cs) {
    c.require(r.pass, where + " " + r.identity + ": " + r.witness.value_or(""));
    c.require(r.order_checked >= order,
              where + " " + r.identity + " guaranteed only through " + std::to_string(r.order_checked));
  }
}

bool criterion_structure() {
  Criterion c("1 structure suite");
  for (const auto& a : test_algebras(5, 101)) c.require(validate(a.g).ok(), a.name + " failed validation");
  const LieAlgebra bad = from_constants(3, {{0, 1, 2, 1}, {1, 2, 1, 1}});
  const StructureReport r = validate(bad);
  c.require(!r.jacobi && r.jacobi_witness.has_value(), "non-Jacobi table accepted");
  if (r.jacobi_witness) {
    const auto [mu, a, b, nu] = *r.jacobi_witness;
    // X_nu coefficient of the cyclic sum of [[X_mu, X_a], X_b]
    Scalar s;
    for (std::size_t k = 0; k < 3; ++k)
      s += bad.c(mu, a, k) * bad.c(k, b, nu) + bad.c(a, b, k) * bad.c(k, mu, nu) + bad.c(b, mu, k) * bad.c(k, a, nu);
    c.require(!s.is_zero() && s == r.jacobi_value, "witness does not reproduce a nonzero cyclic sum");
  }
  return c.finish(1.0);
}

bool criterion_closure(const std::vector<Named>& algebras) {
  Criterion c("2 Weyl-realization closure, order 5 at N=6");
  for (const auto& a : algebras) {
    const CheckResult r = check_closure(a.g, weyl_realization(a.g, 6).xhat, "closure");
    require_checks(c, a.name, {r}, 5);
  }
  return c.finish(30.0);
}

bool criterion_symmetrization(const std::vector<Named>& algebras) {
  Criterion c("3 symmetrization m<=5, 5 vectors, N=6");
  Rng rng(303);
  for (const auto& a : algebras) require_checks(c, a.name, {verify_symmetrization(a.g, 6, 5, 5, rng)}, 5);
  return c.finish();
}

bool criterion_duality(const std::vector<Named>& algebras) {
  Criterion c("4 left-right duality");
  Rng rng(404);
  for (const auto& a : algebras) {
    const std::size_t n = a.g.dim();
    const StarContext ctx = StarContext::weyl_symmetric(a.g, 6);
    const auto& x = ctx.realization(Side::primal).xhat;
    const auto& y = ctx.realization(Side::dual).xhat;
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu) {
        const WeylOp k = commutator(x[mu], y[nu]);
        c.require(k.valid_order() >= 5, a.name + " commutator guaranteed below order 5");
        c.require(!first_mismatch(k, WeylOp(n), 5), a.name + " [xhat, yhat] nonzero");
      }
    for (int t = 0; t < 10; ++t) {
      const Polynomial f = random_polynomial(rng, n, 3), g = random_polynomial(rng, n, 3);
      c.require(ctx.duality_check(f, g), a.name + " f*g != g*~f for f=" + to_text(f) + ", g=" + to_text(g));
    }
  }
  return c.finish();
}

bool criterion_appendix() {
  Criterion c("5 appendix identities on g2 and kappa n=3");
  Rng rng(505);
  const std::vector<Scalar> b = random_vector(rng, 3);
  require_checks(c, "g2", verify_appendix(g2(), 5, 5), 5);
  require_checks(c, "kappa(" + vec_text(b) + ")", verify_appendix(kappa_algebra(b), 5, 5), 5);
  return c.finish();
}

bool criterion_kappa() {
  Criterion c("6 kappa closed forms vs generic engine");
  Rng rng(606);
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::vector<Scalar> b = random_vector(rng, n);
    const KappaParams p(b);
    const std::string name = "kappa(" + vec_text(b) + ")";
    require_checks(c, name, kappa_cross_check(p, 8), 8);
    for (std::size_t k = 1; k <= 8; ++k) c.require(kappa_power_check(p, k, 8), name + " power k=" + std::to_string(k));
    const StarContext ctx = StarContext::weyl_symmetric(p.algebra(), 6);
    const BiDiffOperator op = kappa_star_operator(p, 6);
    for (int t = 0; t < 10; ++t) {
      const Polynomial f = random_polynomial(rng, n, 3), g = random_polynomial(rng, n, 3);
      c.require(op.apply(f, g) == ctx.star(f, g), name + " bidiff star differs for f=" + to_text(f));
    }
  }
  return c.finish();
}

bool criterion_poisson(const std::vector<Named>& algebras) {
  Criterion c("7 first-order limit is the Lie-Poisson bracket");
  Rng rng(707);
  for (const auto& a : algebras) {
    const std::size_t n = a.g.dim();
    const StarContext ctx = StarContext::weyl_symmetric(a.g, 6);
    auto commutator_star = [&](const Polynomial& f, const Polynomial& g) { return ctx.star(f, g) - ctx.star(g, f); };
    for (int t = 0; t < 10; ++t) {
      const Polynomial f = random_polynomial(rng, n, 3), g = random_polynomial(rng, n, 3);
      c.require(first_order_part(commutator_star, f, g) == poisson_first_order(a.g, f, g),
                a.name + " bracket mismatch for f=" + to_text(f));
    }
  }
  return c.finish();
}

bool criterion_enveloping(const std::vector<Named>& algebras) {
  Criterion c("8 enveloping-action identities");
  for (const auto& a : algebras) {
    try {
      const SuiteReport rep = run_suite({a.g, a.name, 6, 808, "enveloping", std::nullopt});
      for (const auto& e : rep.checks) c.require(e.check.pass, a.name + " " + e.check.identity + ": " + e.check.witness.value_or(""));
    } catch (const std::logic_error& e) {
      c.require(false, a.name + ": " + e.what());
    }
  }
  return c.finish();
}

bool criterion_roundtrip(const std::vector<Named>& algebras) {
  Criterion c("9 round trip and associativity");
  Rng rng(909);
  for (const auto& a : algebras) {
    const std::size_t n = a.g.dim();
    const StarContext ctx = StarContext::weyl_symmetric(a.g, 6);
    for (int t = 0; t < 10; ++t) {
      const Polynomial f = random_polynomial(rng, n, 5, 4);
      c.require(ctx.omega(ctx.omega_inv(f)) == f, a.name + " round trip failed for " + to_text(f));
    }
    for (int t = 0; t < 10; ++t) {
      const Polynomial f = random_polynomial(rng, n, 2), g = random_polynomial(rng, n, 2), h = random_polynomial(rng, n, 2);
      c.require(ctx.star(ctx.star(f, g), h) == ctx.star(f, ctx.star(g, h)), a.name + " associativity failed");
    }
  }
  return c.finish();
}

bool run_command(const std::string& cmd, std::string& out, int& status) {
  out.clear();
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return false;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  status = pclose(pipe.release());
  return true;
}

bool criterion_determinism(const std::string& cli) {
  Criterion c("10 deterministic verify reports");
  if (cli.empty()) {
    c.require(false, "no CLI path given");
    return c.finish();
  }
  for (const char* format : {"json", "text"}) {
    const std::string cmd = "'" + cli + "' verify g2 --suite all --seed 42 --format " + format;
    std::string a, b;
    int sa = -1, sb = -1;
    c.require(run_command(cmd, a, sa) && run_command(cmd, b, sb), "could not run " + cmd);
    c.require(sa == 0 && sb == 0, std::string(format) + " run did not exit 0");
    c.require(!a.empty() && a == b, std::string(format) + " reports differ");
    c.require(a.find("42") != std::string::npos, "seed missing from report");
  }
  return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Named> algebras = test_algebras(2, 202);
  const std::vector<std::function<bool()>> all{
      criterion_structure,
      [&] { return criterion_closure(algebras); },
      [&] { return criterion_symmetrization(algebras); },
      [&] { return criterion_duality(algebras); },
      criterion_appendix,
      criterion_kappa,
      [&] { return criterion_poisson(algebras); },
      [&] { return criterion_enveloping(algebras); },
      [&] { return criterion_roundtrip(algebras); },
      [&] { return criterion_determinism(cli); },
  };
  int failed = 0;
  for (const auto& run : all) {
    try {
      if (!run()) ++failed;
    } catch (const std::exception& e) {
      std::cout << "[FAIL] criterion raised: " << e.what() << std::endl;
      ++failed;
    }
  }
  std::cout << (failed ? "acceptance: FAIL (" + std::to_string(failed) + " criteria)" : std::string("acceptance: PASS"))
            << std::endl;
  return failed ? 1 : 0;
}
