// Command-line front end: validate algebras, emit realizations, shift
// matrices and star-products, and run verification suites.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lieweyl/lieweyl.hpp"

namespace {

using namespace lieweyl;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string algebra;
  std::size_t order = 6;
  std::string format = "text";
  std::uint64_t seed = 42;
  std::string kappa_b;
  std::string ordering = "weyl";
  std::string phi_file;
  std::string suite = "all";
  std::string f, g;
  bool dual = false;
  bool check_duality = false;
};

struct LoadedAlgebra {
  LieAlgebra g;
  std::string name;
};

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  if (out.empty()) throw std::invalid_argument("--kappa-b needs at least one entry");
  return out;
}

/// A file path, or one of abelianN, g2, su2, su2:h, kappa (with --kappa-b).
LoadedAlgebra load_algebra(const Options& o, Completion mode = Completion::strict) {
  const std::string& a = o.algebra;
  if (std::filesystem::exists(a)) return {load_lie_algebra(a, mode), a};
  if (a == "g2") return {g2(), a};
  if (a == "su2") return {su2(), a};
  if (a.rfind("su2:", 0) == 0) return {su2(Scalar::parse(a.substr(4))), a};
  if (a.rfind("abelian", 0) == 0 && a.size() > 7) {
    const std::size_t n = std::stoul(a.substr(7));
    if (n == 0 || n > kMaxDim) throw std::invalid_argument("abelian dimension out of range");
    return {abelian(n), a};
  }
  if (a == "kappa") {
    if (o.kappa_b.empty()) throw std::invalid_argument("builtin 'kappa' needs --kappa-b");
    return {kappa_algebra(parse_scalar_list(o.kappa_b)), "kappa(" + o.kappa_b + ")"};
  }
  throw std::invalid_argument("unknown algebra '" + a + "' (not a file or builtin)");
}

std::string op_text(const WeylOp& op, const std::string& format) {
  return format == "latex" ? to_latex(op) : to_text(op);
}

int cmd_validate(const Options& o) {
  const LoadedAlgebra la = load_algebra(o, Completion::lenient);
  SuiteConfig cfg{la.g, la.name, 1, o.seed, "jacobi", std::nullopt};
  const SuiteReport rep = run_suite(cfg);
  if (o.format == "json") {
    Json cs = Json::array();
    for (const auto& e : rep.checks) cs.push_back(to_json(e.check));
    std::cout << Json{{"algebra", la.name}, {"n", la.g.dim()}, {"checks", cs}, {"pass", rep.pass()}}.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << la.name << " (n=" << la.g.dim() << ")\n";
    for (const auto& e : rep.checks) {
      std::cout << e.check.identity << ": " << (e.check.pass ? "PASS" : "FAIL") << "\n";
      if (e.check.witness) std::cout << "  " << *e.check.witness << "\n";
    }
  }
  return rep.pass() ? kExitPass : kExitFail;
}

int cmd_realize(const Options& o) {
  const LoadedAlgebra la = load_algebra(o);
  if (o.order == 0) throw InsufficientOrder("realize", 1, 0);
  const bool dual = o.ordering == "dual";
  const Realization r = dual ? dual_realization(la.g, o.order) : weyl_realization(la.g, o.order);
  if (o.format == "json") {
    Json j = to_json(r);
    j["name"] = la.name;
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  const char* sym = dual ? "yhat" : "xhat";
  if (o.format == "latex") {
    for (std::size_t mu = 0; mu < r.dim(); ++mu)
      std::cout << "\\hat{" << (dual ? "y" : "x") << "}_{" << mu + 1 << "} = " << to_latex(r.xhat[mu]) << " + O(\\partial^{"
                << o.order + 1 << "})\n";
    return kExitPass;
  }
  std::cout << "algebra: " << la.name << "\nordering: " << o.ordering << "\norder: " << o.order << "\n";
  for (std::size_t mu = 0; mu < r.dim(); ++mu) std::cout << sym << mu + 1 << " = " << to_text(r.xhat[mu]) << "\n";
  return kExitPass;
}

int cmd_tmatrix(const Options& o) {
  const LoadedAlgebra la = load_algebra(o);
  const auto [t, tinv] = t_realization(la.g, o.order);
  if (o.format == "json") {
    std::cout << Json{{"algebra", la.name}, {"order", o.order}, {"T", to_json(t)}, {"Tinv", to_json(tinv)}}.dump(2)
              << "\n";
    return kExitPass;
  }
  if (o.format == "text") std::cout << "algebra: " << la.name << "\norder: " << o.order << "\n";
  for (const auto& [name, m] : {std::pair<const char*, const OpMatrix*>{"T", &t}, {"Tinv", &tinv}})
    for (std::size_t mu = 0; mu < m->dim(); ++mu)
      for (std::size_t nu = 0; nu < m->dim(); ++nu) {
        if (o.format == "latex")
          std::cout << "\\hat{T}" << (std::string(name) == "T" ? "" : "^{-1}") << "_{" << mu + 1 << nu + 1
                    << "} = " << op_text((*m)(mu, nu), o.format) << "\n";
        else
          std::cout << name << mu + 1 << nu + 1 << " = " << op_text((*m)(mu, nu), o.format) << "\n";
      }
  return kExitPass;
}

int cmd_star(const Options& o) {
  const LoadedAlgebra la = load_algebra(o);
  const std::size_t n = la.g.dim();
  const Polynomial f = parse_polynomial(o.f, n), g = parse_polynomial(o.g, n);
  const StarContext ctx = StarContext::weyl_symmetric(la.g, o.order);
  const Polynomial result = ctx.star(f, g, o.dual ? Side::dual : Side::primal);
  std::optional<bool> duality;
  if (o.check_duality) duality = ctx.duality_check(f, g);
  if (o.format == "json") {
    Json j{{"algebra", la.name}, {"side", o.dual ? "dual" : "primal"}, {"f", to_text(f)}, {"g", to_text(g)},
           {"result", to_json(result)}};
    if (duality) j["duality"] = *duality;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (o.format == "latex" ? to_latex(result) : to_text(result)) << "\n";
    if (duality) std::cout << "duality: " << (*duality ? "PASS" : "FAIL") << "\n";
  }
  return duality.value_or(true) ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o) {
  const LoadedAlgebra la = load_algebra(o);
  SuiteConfig cfg{la.g, la.name, o.order, o.seed, o.suite, std::nullopt};
  if (!o.phi_file.empty()) cfg.phi = load_phi(o.phi_file);
  const SuiteReport rep = run_suite(cfg);
  if (o.format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  return rep.pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl realizations and star-products of Lie algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool with_order) {
    sub->add_option("algebra", o.algebra, "spec file or builtin: abelianN, g2, su2, su2:h, kappa")->required();
    if (with_order) sub->add_option("--order", o.order, "working d-order N")->check(CLI::Range(1, 64));
    sub->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--seed", o.seed, "seed for randomized sweeps");
    sub->add_option("--kappa-b", o.kappa_b, "comma-separated b for the builtin kappa algebra");
  };

  CLI::App* validate = app.add_subcommand("validate", "check antisymmetry and the Jacobi identity");
  common(validate, false);
  CLI::App* realize = app.add_subcommand("realize", "emit the Weyl-symmetric realization or its dual");
  common(realize, true);
  realize->add_option("--ordering", o.ordering)->check(CLI::IsMember({"weyl", "dual"}));
  CLI::App* tmatrix = app.add_subcommand("tmatrix", "emit the shift operator matrices e^C and e^-C");
  common(tmatrix, true);
  CLI::App* star = app.add_subcommand("star", "star-product of two polynomials");
  common(star, true);
  star->add_option("f", o.f)->required();
  star->add_option("g", o.g)->required();
  star->add_flag("--dual", o.dual, "use the dual star-product");
  star->add_flag("--check-duality", o.check_duality, "also check f*g == g*~f");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify, true);
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--phi-file", o.phi_file, "custom realization matrix for the closure suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*realize) return cmd_realize(o);
    if (*tmatrix) return cmd_tmatrix(o);
    if (*star) return cmd_star(o);
    if (*verify) return cmd_verify(o);
  } catch (const InsufficientOrder& e) {
    std::cerr << "error: " << e.what() << "; rerun with --order " << e.required() << " or higher\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
