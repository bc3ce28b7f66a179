// Command-line front end: every command prints JSON on stdout.
// Exit codes: 0 success, 1 a check failed, 2 bad usage, 3 violated precondition, 4 other runtime failure.

#include "padicl/lambert.hpp"
#include "padicl/verification.hpp"
#include "padicl/zeta.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace padicl;

namespace {

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

void emit_error(const char* kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
}

struct Instance {
  unsigned long p = 2;
  long s = 64;
  long l = 0;  // 0: default level rule
  long n = 3;
  std::string character = "trivial";
  std::string epsilon = "1/2";
  std::string x;  // Hurwitz variant when set

  void add_to(CLI::App* app) {
    app->add_option("--p", p, "prime");
    app->add_option("--s", s, "number of L-values in the form");
    app->add_option("--l", l, "level l (default: max(ell(s), minimal level))");
    app->add_option("--n", n, "index n of the form");
    app->add_option("--character", character, "trivial, trivial:d, quadratic:D or a JSON object");
    app->add_option("--epsilon", epsilon, "epsilon in (0, 1)");
    app->add_option("--x", x, "Hurwitz parameter x with |x|_p > 1 (switches to the Hurwitz variant)");
  }
  std::optional<long> level() const { return l > 0 ? std::optional<long>(l) : std::nullopt; }
  Rational eps() const { return parse_rational(epsilon); }
  DirichletCharacter chi() const { return DirichletCharacter::parse(character); }
  FormParameters params() const {
    if (!x.empty()) return hurwitz_params(p, parse_rational(x), s, eps(), level());
    return choose_params(chi(), p, s, eps(), level());
  }
};

void require_pole_domain(const Integrand& f, unsigned long p) {
  const long need = p == 2 ? -2 : -1;
  for (const auto& t : f.terms)
    for (const auto& [a, m] : t.poles)
      if (a == 0 || vp(a, p) > need)
        throw DomainError("pole at t = " + to_string(Rational(-a)) + " needs nu_p(a) <= " + std::to_string(need));
}

int run_integrate(unsigned long p, const std::string& expr, long prec, const std::string& engine, long level) {
  require_prime(p);
  const Integrand f = parse_integrand(expr);
  Json j;
  j["p"] = p;
  j["expr"] = expr;
  j["engine"] = engine;
  if (engine == "mahler") {
    MahlerStats st;
    PadicApprox v = integral_mahler(f, p, prec, &st);
    j["value"] = padic_json(v);
    j["mahler_terms"] = st.terms_used;
  } else {
    require_pole_domain(f, p);
    if (level < 1) throw DomainError("level must be at least 1");
    if (engine == "riemann") {
      j["level"] = level;
      j["value"] = padic_json(integral_riemann(f, p, level, prec));
    } else {
      const long tail = riemann_error_bound(f, p, level);
      WaveletExpansion w = wavelet_coeffs([&](const Integer& t) { return f(Rational(t)); }, p, level);
      CertifiedValue cv = integral_wavelet(w, tail);
      const long N = std::min(prec, cv.precision);
      j["level"] = level;
      j["value"] = padic_json(PadicApprox::from_rational(cv.value, p, N));
    }
  }
  emit(j);
  return 0;
}

int run_zeta(unsigned long p, long s, const std::string& xs, long prec) {
  const Rational x = parse_rational(xs);
  Json j;
  j["p"] = p;
  j["s"] = s;
  j["x"] = to_string(x);
  if (s <= 0) {
    require_hurwitz_domain(x, p);
    ZetaNonpos z = zeta_p_nonpos(s, x, p, prec);
    j["bernoulli_part"] = to_string(z.bernoulli_part);
    j["value"] = padic_json(z.value);
  } else if (x > 1 || x <= 0) {
    ShiftReduction red = zeta_p_reduce(s, x, p, prec);
    j["reduced_x"] = to_string(red.reduced);
    j["steps"] = red.steps;
    j["value"] = padic_json(red.value);
  } else {
    ZetaPos z = zeta_p_pos(s, x, p, prec);
    j["twisted"] = padic_json(z.twisted);
    j["value"] = padic_json(z.value);
    j["mahler_terms"] = z.stats.terms_used;
  }
  emit(j);
  return 0;
}

int run_lvalue(unsigned long p, long i, const std::string& character, long omega, long l, long prec) {
  const DirichletCharacter chi = DirichletCharacter::parse(character);
  const long lev = l > 0 ? l : minimal_level(chi, p);
  const PadicEmbedding e = default_embedding(chi, p);
  Json j;
  j["p"] = p;
  j["i"] = i;
  j["character"] = Json::parse(chi.to_json());
  j["omega_exponent"] = omega;
  j["l"] = lev;
  j["value"] = padic_json(lp_value(i, chi, omega, p, lev, e, prec));
  if (auto ex = lp_value_exact(i, chi, omega, p, lev)) j["exact"] = cyclo_json(*ex);
  emit(j);
  return 0;
}

int run_forms_build(const Instance& inst, bool with_timing) {
  const FormParameters fp = inst.params();
  Json j;
  j["params"] = form_params_json(fp, inst.n);
  const RnFunction rn = build_rn(fp, inst.n);
  j["degree"] = rn.degree;
  Json coeffs = Json::array();
  CheckReport id;
  if (fp.hurwitz) {
    const Rational x = parse_rational(inst.x);
    id = check_hurwitz_identity(fp, x, inst.n);
    HurwitzForm hf = hurwitz_variant_form(fp, x, inst.n, id.details["precision"].get<long>());
    for (const auto& c : hf.form.coeffs) coeffs.push_back(cyclo_json(c));
  } else {
    const DirichletCharacter chi = inst.chi();
    LinearFormOverK form = lambda_form(fp, partial_fractions(rn.term), chi);
    for (const auto& c : form.coeffs) coeffs.push_back(cyclo_json(c));
    id = check_form_identity(fp, inst.n, chi, default_embedding(chi, fp.p));
  }
  j["lambda"] = coeffs;
  j["identity"] = id.to_json(with_timing);
  emit(j);
  return id.pass ? 0 : 1;
}

int emit_checks(const std::vector<CheckReport>& reports, bool with_timing) {
  emit_report(std::cout, reports, with_timing);
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stol(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic L-value linear forms"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "include runtime_ms in check reports");

  std::function<int()> action;

  // integrate
  auto* integrate = app.add_subcommand("integrate", "Volkenborn integral of an expression in t");
  unsigned long ip = 2;
  std::string expr;
  long iprec = 20, ilevel = 8;
  std::string engine = "mahler";
  integrate->add_option("--p", ip, "prime")->required();
  integrate->add_option("--expr", expr, "integrand, e.g. \"(1/5+t)^-1\"")->required();
  integrate->add_option("--prec", iprec, "absolute precision");
  integrate->add_option("--engine", engine, "mahler, riemann or wavelet")
      ->check(CLI::IsMember({"mahler", "riemann", "wavelet"}));
  integrate->add_option("--level", ilevel, "level of the Riemann or wavelet partial sum");
  integrate->callback([&] { action = [&] { return run_integrate(ip, expr, iprec, engine, ilevel); }; });

  // zeta
  auto* zeta = app.add_subcommand("zeta", "p-adic Hurwitz zeta value");
  unsigned long zp = 2;
  long zs = 2, zprec = 20;
  std::string zx;
  zeta->add_option("--p", zp, "prime")->required();
  zeta->add_option("--s", zs, "argument s != 1")->required();
  zeta->add_option("--x", zx, "x with |x|_p >= q_p")->required();
  zeta->add_option("--prec", zprec, "absolute precision");
  zeta->callback([&] { action = [&] { return run_zeta(zp, zs, zx, zprec); }; });

  // lvalue
  auto* lvalue = app.add_subcommand("lvalue", "p-adic L-value L_p(i, chi omega^e)");
  unsigned long lp = 2;
  long li = 0, lomega = 0, ll = 0, lprec = 20;
  std::string lchar = "trivial";
  bool omega_set = false;
  lvalue->add_option("--p", lp, "prime")->required();
  lvalue->add_option("--i", li, "argument i != 1")->required();
  lvalue->add_option("--character", lchar, "character spec");
  auto* om = lvalue->add_option("--omega", lomega, "Teichmuller exponent e (default 1 - i)");
  lvalue->add_option("--l", ll, "level (default minimal)");
  lvalue->add_option("--prec", lprec, "absolute precision");
  lvalue->callback([&] {
    omega_set = om->count() > 0;
    action = [&] { return run_lvalue(lp, li, lchar, omega_set ? lomega : 1 - li, ll, lprec); };
  });

  // forms build
  auto* forms = app.add_subcommand("forms", "linear forms");
  forms->require_subcommand(1);
  auto* build = forms->add_subcommand("build", "build Lambda_n and check its identity");
  Instance finst;
  finst.add_to(build);
  build->add_option("--hurwitz", finst.x, "same as --x");
  build->callback([&] { action = [&] { return run_forms_build(finst, timing); }; });

  // verify
  auto* verify = app.add_subcommand("verify", "executable checks; exit 1 when any fails");
  std::string check;
  Instance vinst;
  long vj = 1, vi = -1, vcount = 200;
  unsigned long vm = 1;
  std::uint64_t vseed = 1;
  std::string vns = "3,7,11", vsamples = "64";
  bool catalog_only = false;
  verify->add_option("check", check,
                     "all, chi-congruence, fj-integral, valuation, identity, hurwitz, integrality, "
                     "integrality-random, growth, rate-fit, chan-1c, chan-1c-corrected, chan-2b, chan-2c, "
                     "lambert, lp-interpolation")
      ->required();
  vinst.add_to(verify);
  verify->add_option("--j", vj, "index j");
  verify->add_option("--i", vi, "argument i <= 0 for lp-interpolation");
  verify->add_option("--samples", vsamples, "number of x samples 0..k-1 for chi-congruence");
  verify->add_option("--seed", vseed, "random seed");
  verify->add_option("--count", vcount, "number of random instances");
  verify->add_option("--m", vm, "field Q(zeta_m) for height checks: 1 or 4");
  verify->add_option("--ns", vns, "comma-separated n values for rate-fit");
  verify->add_flag("--catalog", catalog_only, "with 'all': only the fixture catalog");
  verify->callback([&] {
    action = [&]() -> int {
      std::vector<CheckReport> out;
      if (check == "all") return emit_checks(catalog_only ? run_catalog() : run_all(), timing);
      const int count = static_cast<int>(vcount);
      if (check == "chan-1c") out.push_back(check_chan_1c(vseed, count, vm));
      else if (check == "chan-1c-corrected") out.push_back(check_chan_1c(vseed, count, vm, true));
      else if (check == "chan-2b") out.push_back(check_chan_2b(vseed, count, vm));
      else if (check == "chan-2c") out.push_back(check_chan_2c(vseed, count, vm));
      else if (check == "integrality-random") out.push_back(check_integrality_random(vseed, count));
      else if (check == "lambert") out.push_back(check_lambert({vinst.s}, vinst.eps(), vinst.p));
      else if (check == "lp-interpolation") out.push_back(check_lp_interpolation(vinst.chi(), vinst.p, vi));
      else {
        const FormParameters fp = vinst.params();
        if (check == "chi-congruence") {
          std::vector<Integer> xs;
          for (long x = 0; x < std::stol(vsamples); ++x) xs.emplace_back(x);
          out.push_back(check_chi_congruence(fp, vinst.n, vj, xs));
        } else if (check == "fj-integral") {
          out.push_back(check_fj_integral(fp, vinst.n, vj));
        } else if (check == "hurwitz") {
          if (vinst.x.empty()) throw DomainError("hurwitz check needs --x");
          out.push_back(check_hurwitz_identity(fp, parse_rational(vinst.x), vinst.n));
        } else {
          if (fp.hurwitz) throw DomainError("check '" + check + "' is not defined for the Hurwitz variant");
          const DirichletCharacter chi = vinst.chi();
          const PadicEmbedding e = default_embedding(chi, fp.p);
          if (check == "valuation") out.push_back(check_valuation_formula(fp, vinst.n, chi, e));
          else if (check == "identity") out.push_back(check_form_identity(fp, vinst.n, chi, e));
          else if (check == "integrality") out.push_back(check_integrality(fp, vinst.n, chi));
          else if (check == "growth") out.push_back(growth_bound_check(fp, vinst.n, chi));
          else if (check == "rate-fit") out.push_back(check_rate_fit(fp, chi, e, parse_list(vns)));
          else throw CLI::ValidationError("check", "unknown check '" + check + "'");
        }
      }
      return emit_checks(out, timing);
    };
  });

  // nesterenko
  auto* nest = app.add_subcommand("nesterenko", "dimension bound tau1 / (tau + tau1 - tau2)");
  std::string tau, tau1, tau2;
  nest->add_option("--tau", tau, "height growth rate")->required();
  nest->add_option("--tau1", tau1, "lower p-adic decay rate")->required();
  nest->add_option("--tau2", tau2, "upper p-adic decay rate")->required();
  nest->callback([&] {
    action = [&] {
      const Rational d = dimension_bound(parse_rational(tau), parse_rational(tau1), parse_rational(tau2));
      Json j;
      j["tau"] = tau;
      j["tau1"] = tau1;
      j["tau2"] = tau2;
      j["bound"] = to_string(d);
      emit(j);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return 2;
  }
  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    emit_error("usage", e.what());
    return 2;
  } catch (const DomainError& e) {
    emit_error("domain", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    emit_error("domain", e.what());
    return 3;
  } catch (const PrecisionError& e) {
    emit_error("precision", e.what());
    return 4;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 4;
  }
}
