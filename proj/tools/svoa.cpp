// Command line front end for the verification suites.
//
// Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage,
// configuration or input errors.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "svoa/suites.hpp"

using namespace svoa;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

Vec momentum(const std::optional<std::string>& alpha, const std::optional<int>& norm) {
  if (alpha && norm) throw UsageError("give either --alpha or --norm, not both");
  if (alpha) return parse_lx_vector(*alpha);
  return momentum_for_norm(norm.value_or(0));
}

void emit(const Report& r, const std::string& format, std::optional<double> elapsed_ms) {
  if (format == "json") {
    auto j = r.to_json();
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << r.to_text();
    if (elapsed_ms) std::cout << "elapsed " << *elapsed_ms << " ms\n";
  }
}

// CSV rendering for `cartan --csv`.
void emit_csv(const Report& r) {
  const auto j = r.to_json();
  const auto& roots = j["data"]["simple_roots"];
  const auto& m = j["data"]["matrix"];
  std::cout << "root";
  for (const auto& a : roots) std::cout << ",\"" << a.get<std::string>() << '"';
  std::cout << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::cout << '"' << roots[i].get<std::string>() << '"';
    for (const auto& x : m[i]) std::cout << ',' << x.get<int>();
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the BRST superalgebra of II_{9,1}"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::optional<std::string> config_file;
  std::map<std::string, std::string> flags;
  bool no_cache = false, timing = false;
  app.add_option("--config", config_file, "key = value configuration file");
  // Global overrides, recorded only when given so that the file and the
  // environment keep their values otherwise.
  auto flag_opt = [&](CLI::App* on, const std::string& name, const std::string& key, const std::string& help) {
    on->add_option_function<std::string>(name, [&flags, key](const std::string& v) { flags[key] = v; }, help);
  };
  flag_opt(&app, "--format", "format", "text or json");
  flag_opt(&app, "--cache-dir", "cache_dir", "directory for the persistent mode cache");
  flag_opt(&app, "--y", "y_choice", "cocycle choice y = 1 or -1");
  flag_opt(&app, "--lattice-basis", "lattice_basis_file", "file with ten basis rows of L^X");
  flag_opt(&app, "--seed", "seed", "sampling seed");
  app.add_flag("--no-cache", no_cache, "disable the in-memory mode cache");
  app.add_flag("--timing", timing, "add wall clock time to the report (breaks bit-identical output)");

  auto* ope = app.add_subcommand("ope-table", "singular parts of the matter and ghost OPEs");

  auto* brst = app.add_subcommand("brst-check", "nilpotency certificate and Q^2 sweep");
  bool no_sweep = false;
  brst->add_flag("--no-sweep", no_sweep, "only the certificate");
  flag_opt(brst, "--degree", "sweep_degree", "oscillator degree of the sweep");

  std::optional<std::string> alpha;
  std::optional<int> norm;
  std::string picture = "-1";
  auto momentum_opts = [&](CLI::App* on) {
    on->add_option("--alpha", alpha, "momentum in L^X as x1,...,x10");
    on->add_option("--norm", norm, "documented momentum of norm 0, -2 or -4");
  };

  auto* sector = app.add_subcommand("sector", "basis of a sector of the small algebra");
  momentum_opts(sector);
  int ghost = 1;
  std::string l0 = "0";
  bool states = false, no_kerb1 = false, no_gso = false;
  sector->add_option("--picture", picture, "ghost picture");
  sector->add_option("--ghost", ghost, "ghost number");
  sector->add_option("--l0", l0, "L_0 eigenvalue");
  sector->add_flag("--states", states, "print the basis states");
  sector->add_flag("--all-b1", no_kerb1, "do not restrict to ker b_1");
  sector->add_flag("--no-gso", no_gso, "do not apply the GSO projection");

  auto* coh = app.add_subcommand("cohomology", "dimensions of H(alpha)_{p,n} over a ghost window");
  momentum_opts(coh);
  bool reps = false;
  coh->add_option("--picture", picture, "ghost picture");
  flag_opt(coh, "--lo", "window_lo", "lowest ghost number");
  flag_opt(coh, "--hi", "window_hi", "highest ghost number");
  coh->add_flag("--reps", reps, "print representatives");

  auto* ep = app.add_subcommand("euler-poincare", "alternating chain dimensions against c(-alpha^2/2)");
  std::vector<std::string> ep_alphas;
  std::vector<int> ep_norms;
  ep->add_option("--alpha", ep_alphas, "momenta");
  ep->add_option("--norm", ep_norms, "documented momenta by norm");

  auto* gamma = app.add_subcommand("gamma-check", "Clifford algebra and charge conjugation");

  auto* bracket = app.add_subcommand("bracket", "bracket of two physical states");
  std::string bu, bv;
  bracket->add_option("u", bu, "P<mu>, Q<a>, <alpha>/<even|odd>/<index> or a .json file")->required();
  bracket->add_option("v", bv, "second element")->required();

  auto* susy = app.add_subcommand("susy-check", "SUSY algebra at alpha = 0");
  auto* jac = app.add_subcommand("jacobi-check", "antisymmetry and Jacobi identity modulo im Q");
  flag_opt(jac, "--elements", "jacobi_elements", "number of sample elements (<= 12)");
  auto* forms = app.add_subcommand("forms-check", "invariant bilinear forms and adjoints");

  auto* qs = app.add_subcommand("qseries", "c, a, phi coefficients or the asymptotic ratios");
  std::string kind = "c";
  qs->add_option("--kind", kind, "c, a, phi or asymptotic");
  flag_opt(qs, "--order", "qseries_order", "truncation order");

  auto* trace = app.add_subcommand("trace-identity", "c and a values and the trace identity");
  flag_opt(trace, "--order", "qseries_order", "truncation order");

  auto* denom = app.add_subcommand("denominator-check", "truncated denominator identity");
  flag_opt(denom, "--height", "height", "height bound N");
  flag_opt(denom, "--r", "reference", "reference vector");

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix of the simple roots");
  bool csv = false;
  flag_opt(cartan, "--height", "height", "height bound N");
  flag_opt(cartan, "--r", "reference", "reference vector");
  cartan->add_flag("--csv", csv, "CSV matrix instead of a report");

  auto* cache = app.add_subcommand("cache", "inspect or clear the persistent mode cache");
  std::string cache_action = "inspect";
  cache->add_option("action", cache_action, "inspect or clear")->check(CLI::IsMember({"inspect", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Config cfg = resolve_config(config_file, flags, [](const char* n) { return std::getenv(n); });
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&]() -> std::optional<double> {
      if (!timing) return std::nullopt;
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };

    // Series and root suites need no vertex algebra.
    if (qs->parsed()) {
      Report r = kind == "asymptotic" ? suite_asymptotics() : suite_qseries(kind, cfg.qseries_order);
      emit(r, cfg.format, elapsed());
      return r.pass() ? kPass : kFail;
    }
    if (trace->parsed()) {
      Report r = suite_series_values(cfg.qseries_order);
      emit(r, cfg.format, elapsed());
      return r.pass() ? kPass : kFail;
    }
    if (denom->parsed() || cartan->parsed()) {
      Vec rv = parse_lx_vector(cfg.reference);
      Report r = denom->parsed() ? suite_denominator(rv, cfg.height) : suite_cartan(rv, cfg.height);
      if (csv) emit_csv(r);
      else emit(r, cfg.format, elapsed());
      return r.pass() ? kPass : kFail;
    }

    Context ctx(cfg);
    if (no_cache) ctx.va.set_cache_enabled(false);

    if (cache->parsed()) {
      const std::string path = ctx.cache_path();
      if (path.empty()) throw UsageError("cache: no cache directory configured (--cache-dir or cache_dir)");
      Report r("cache");
      r.data()["path"] = path;
      if (cache_action == "clear") {
        std::error_code ec;
        bool removed = std::filesystem::remove(path, ec);
        r.add("cache file removed", !ec, nlohmann::json{{"existed", removed}});
      } else {
        bool exists = std::filesystem::exists(path);
        std::size_t lines = 0;
        if (exists) {
          std::ifstream in(path);
          for (std::string line; std::getline(in, line);) ++lines;
        }
        std::size_t loaded = ctx.load_cache();
        r.data()["lines"] = lines;
        r.data()["valid_entries"] = loaded;
        // lines failing the version or content hash check are recomputed on demand
        r.data()["discarded"] = lines - std::min(lines, loaded);
        r.add("cache readable", true);
      }
      emit(r, cfg.format, elapsed());
      return r.pass() ? kPass : kFail;
    }

    if (!no_cache) ctx.load_cache();
    std::optional<Report> r;
    if (ope->parsed()) r = suite_ope_table(ctx);
    else if (brst->parsed()) r = suite_brst(ctx, !no_sweep);
    else if (sector->parsed())
      r = suite_sector(ctx,
                       SectorSpec{momentum(alpha, norm), parse_rational(picture), ghost, parse_rational(l0), !no_gso,
                                  !no_kerb1},
                       states);
    else if (coh->parsed())
      r = suite_cohomology(ctx, momentum(alpha, norm), parse_rational(picture), cfg.window_lo, cfg.window_hi, reps);
    else if (ep->parsed()) {
      std::vector<Vec> ms;
      for (const auto& a : ep_alphas) ms.push_back(parse_lx_vector(a));
      for (int n : ep_norms) ms.push_back(momentum_for_norm(n));
      if (ms.empty()) ms = {momentum_for_norm(0), momentum_for_norm(-2)};
      r = suite_euler_poincare(ctx, ms);
    } else if (gamma->parsed()) r = suite_gamma(ctx);
    else if (bracket->parsed()) r = suite_bracket(ctx, parse_element(ctx, bu), parse_element(ctx, bv));
    else if (susy->parsed()) r = suite_susy(ctx);
    else if (jac->parsed()) r = suite_jacobi(ctx);
    else if (forms->parsed()) r = suite_forms(ctx);

    if (!r) throw UsageError("no subcommand");
    if (!no_cache) ctx.save_cache();
    emit(*r, cfg.format, elapsed());
    return r->pass() ? kPass : kFail;
  } catch (const UsageError& e) {
    std::cerr << "svoa: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // ConfigError and malformed coordinates, elements or momenta
    std::cerr << "svoa: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "svoa: error: " << e.what() << '\n';
    return kFail;
  }
}
