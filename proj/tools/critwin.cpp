// critwin: exact enumeration, critical-window generating functions, scaling
// profiles, and the verification suites, from one front door.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "critwin/asymptotics.hpp"
#include "critwin/count.hpp"
#include "critwin/genfun.hpp"
#include "critwin/harness.hpp"
#include "critwin/percsim.hpp"
#include "critwin/profiles.hpp"
#include "critwin/saw.hpp"

using namespace critwin;

namespace {

int cmd_count(long long n, long long m, bool oracle, int table_max) {
  counts::Count result;
  if (oracle) {
    result = counts::brute_force_connected(static_cast<int>(n), static_cast<int>(m));
  } else {
    counts::CountTable table(table_max);
    result = table.connected(static_cast<int>(n), m);
  }
  std::cout << result << "\n";
  return 0;
}

int cmd_genfun(const std::string& model, long long V, double s, double p, bool has_p,
               const std::string& quantity, unsigned bits, int table_max) {
  set_precision_bits(bits);
  WindowPoint w = has_p ? WindowPoint::from_p(V, Real(p)) : WindowPoint::from_s(V, Real(s));
  SeriesResult r;
  Real value;
  bool have_series = false;
  if (model == "tree") {
    if (quantity == "g0") { r = genfun::g0_tree(w); have_series = true; }
    else if (quantity == "g01") { r = genfun::g01_tree(w); have_series = true; }
    else if (quantity == "chi") { r = genfun::chi_tree(w); have_series = true; }
    else throw CLI::ValidationError("--quantity", "tree supports g0|g01|chi");
  } else if (model == "animal") {
    counts::CountTable table(table_max);
    if (quantity == "g0") value = genfun::g0_animal(w, table);
    else if (quantity == "g01") value = genfun::g01_animal(w, table);
    else if (quantity == "chi") value = genfun::chi_animal(w, table);
    else if (quantity == "delta0") value = genfun::delta_g0(w, table);
    else if (quantity == "delta-chi") value = genfun::delta_chi(w, table);
    else throw CLI::ValidationError("--quantity", "animal supports g0|g01|chi|delta0|delta-chi");
  } else {
    throw CLI::ValidationError("--model", "expected tree|animal");
  }
  if (have_series) {
    std::cout << r.value.str(0, std::ios_base::scientific) << "\n";
    if (r.tail)
      std::cout << "# truncated at n=" << r.tail->cutoff
                << ", certified tail <= " << r.tail->bound.str(6, std::ios_base::scientific)
                << " (gamma=" << r.tail->gamma << ", kappa=" << r.tail->kappa
                << ", lambda=" << r.tail->lambda << ", b=" << r.tail->b << ")\n";
  } else {
    std::cout << value.str(0, std::ios_base::scientific) << "\n";
  }
  std::cout << "# precision_bits=" << precision_bits() << "\n";
  return 0;
}

int cmd_bounds(int n_max, const std::string& report) {
  counts::CountTable table(n_max);
  auto emit = [](int n, long long k, const Real& exact, const Real& est) {
    double r = exact > 0 ? static_cast<double>(est / exact) : 0.0;
    std::printf("%d,%lld,%s,%s,%.10g\n", n, k, exact.str(20, std::ios_base::scientific).c_str(),
                est.str(20, std::ios_base::scientific).c_str(), r);
  };
  if (report == "prop") {
    double ccal = asym::calibrate_prop_constant(table, 3, std::min(40, n_max));
    std::printf("# C_cal=%.12g\n", ccal);
    std::printf("n,k,exact,estimate_or_bound,ratio\n");
    for (int n = 3; n <= std::min(40, n_max); ++n) {
      long long N = static_cast<long long>(n) * (n - 1) / 2;
      for (long long k = 0; k <= std::min<long long>(n, N - n); ++k)
        emit(n, k, Real(table.connected(n, n + k)), asym::connected_count_upper(n, k, ccal));
    }
  } else if (report == "bcm") {
    std::printf("n,k,exact,estimate_or_bound,ratio\n");
    for (int n = 3; n <= n_max; ++n) {
      long long N = static_cast<long long>(n) * (n - 1) / 2;
      for (long long k = 0; k <= N - n; ++k)
        emit(n, k, Real(table.connected(n, n + k)), asym::asymptotic_connected_count(n, k));
    }
  } else if (report == "sparse") {
    std::printf("n,k,exact,estimate_or_bound,ratio\n");
    for (int n = 3; n <= n_max; ++n) {
      Real z = Real(1) / pow(Real(n), Real(3) / 2);
      emit(n, -1, asym::sparse_sum_A(n, z, table),
           pow(Real(n), Real(3) / 2) * z);  // reference linear envelope n^{3/2} z
    }
  } else if (report == "dense") {
    std::printf("n,k,exact,estimate_or_bound,ratio\n");
    for (int n = 3; n <= n_max; ++n) {
      Real z = 3 / (real_e() * n);
      emit(n, -1, asym::dense_sum_B(n, z, table), asym::dense_bound_B(n, z));
    }
  } else {
    throw CLI::ValidationError("--report", "expected prop|bcm|sparse|dense");
  }
  return 0;
}

int cmd_profile(const std::string& which, double s, double z, double k, double n, double tol) {
  if (which == "I") {
    auto r = profiles::profile_I(s, tol);
    std::cout << r.value.str(20, std::ios_base::scientific) << " +/- "
              << r.est_abs_error.str(4, std::ios_base::scientific) << "\n";
  } else if (which == "Ik") {
    auto r = profiles::profile_Ik(k, s, tol);
    std::cout << r.value.str(20, std::ios_base::scientific) << " +/- "
              << r.est_abs_error.str(4, std::ios_base::scientific) << "\n";
  } else if (which == "fn") {
    std::cout << profiles::spin_profile(n, s).str(20, std::ios_base::scientific) << "\n";
  } else if (which == "fperc") {
    auto r = profiles::perc_profile(s, tol);
    std::cout << r.value.str(20, std::ios_base::scientific) << " +/- "
              << r.est_abs_error.str(4, std::ios_base::scientific) << "\n";
  } else if (which == "lambert") {
    std::cout << profiles::lambert_w0(Real(z)).str(0, std::ios_base::scientific) << "\n";
  } else {
    throw CLI::ValidationError("--which", "expected I|Ik|fn|fperc|lambert");
  }
  return 0;
}

int cmd_saw(long long V, double s, double p, bool has_p, const std::string& quantity,
            unsigned bits) {
  set_precision_bits(bits);
  Real pr = has_p ? Real(p) : Real(1) + Real(s) / sqrt(Real(V));
  SeriesResult r = quantity == "two_point" ? saw::two_point(V, pr) : saw::susceptibility(V, pr);
  std::cout << r.value.str(0, std::ios_base::scientific) << "\n";
  if (r.tail)
    std::cout << "# truncated at n=" << r.tail->cutoff << ", certified tail <= "
              << r.tail->bound.str(6, std::ios_base::scientific) << "\n";
  return 0;
}

int cmd_percsim(long long V, double s, long long replicas, std::uint64_t seed,
                const std::string& sampler, int threads) {
  auto sm = sampler == "skip" ? percsim::Sampler::Skip : percsim::Sampler::Bfs;
  auto est = percsim::estimate_chi(V, s, replicas, seed, sm, threads);
  std::printf("V,s,chi_mean,chi_se,tau_mean,tau_se,replicas,seed\n");
  std::printf("%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%lld,%llu\n", est.V, est.s, est.mean,
              est.std_error, est.tau_mean, est.tau_se, est.replicas,
              static_cast<unsigned long long>(est.seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critwin: trees, connected subgraphs, and scaling profiles in the critical window"};
  app.set_config("--config", "", "key=value config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();  // --precision-bits/--threads/--output valid after a subcommand too

  unsigned bits = 128;
  int threads = 2;
  std::string output;
  app.add_option("--precision-bits", bits, "working precision in bits")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->capture_default_str();
  app.add_option("--output", output, "output path (sweep CSV; JSON sidecar alongside)");

  // count
  auto* c_count = app.add_subcommand("count", "exact connected-graph counts C(n,m)");
  long long cn = 4, cm = 3;
  bool oracle = false;
  int table_max = 64;
  c_count->add_option("--n", cn, "vertex count")->required();
  c_count->add_option("--m", cm, "edge count")->required();
  c_count->add_flag("--oracle", oracle, "use the brute-force subset enumerator (n <= 8)");
  c_count->add_option("--table-max", table_max, "table capacity")->capture_default_str();

  // genfun
  auto* c_gen = app.add_subcommand("genfun", "generating functions in the window p = 1 + s/sqrt(V)");
  std::string model = "tree", quantity = "chi";
  long long V = 100;
  double s = 0, p = 1;
  c_gen->add_option("--model", model, "tree|animal")->capture_default_str();
  c_gen->add_option("--V", V, "number of vertices")->required();
  auto* opt_s = c_gen->add_option("--s", s, "window coordinate");
  auto* opt_p = c_gen->add_option("--p", p, "explicit p (overrides --s)");
  c_gen->add_option("--quantity", quantity, "g0|g01|chi|delta0|delta-chi")->capture_default_str();
  c_gen->add_option("--table-max", table_max, "animal capacity")->capture_default_str();

  // bounds
  auto* c_bounds = app.add_subcommand("bounds", "exact-vs-bound CSV reports");
  int bn_max = 40;
  std::string report = "prop";
  c_bounds->add_option("--n-max", bn_max, "table range")->capture_default_str();
  c_bounds->add_option("--report", report, "prop|bcm|sparse|dense")->capture_default_str();

  // profile
  auto* c_prof = app.add_subcommand("profile", "universal profiles and special functions");
  std::string which = "I";
  double ps = 0, pz = 0, pk = 0, pn = 1, ptol = 1e-10;
  c_prof->add_option("--which", which, "I|Ik|fn|fperc|lambert")->capture_default_str();
  c_prof->add_option("--s", ps, "profile argument");
  c_prof->add_option("--z", pz, "Lambert argument");
  c_prof->add_option("--k", pk, "I_k order (real, > -1)");
  c_prof->add_option("--n", pn, "spin components (real, > 0)");
  c_prof->add_option("--tol", ptol, "quadrature tolerance")->capture_default_str();

  // saw
  auto* c_saw = app.add_subcommand("saw", "self-avoiding-walk functions on the complete graph");
  long long sV = 100;
  double ss = 0, sp = 1;
  std::string squant = "chi";
  c_saw->add_option("--V", sV, "number of vertices")->required();
  auto* sopt_s = c_saw->add_option("--s", ss, "window coordinate");
  auto* sopt_p = c_saw->add_option("--p", sp, "explicit p");
  c_saw->add_option("--quantity", squant, "two_point|chi")->capture_default_str();

  // percsim
  auto* c_perc = app.add_subcommand("percsim", "critical-window percolation Monte Carlo, p = 1 + s V^{-1/3}");
  long long pV = 1 << 16, replicas = 10000;
  double percs = 0;
  std::uint64_t seed = 1;
  std::string sampler = "bfs";
  c_perc->add_option("--V", pV, "number of vertices")->capture_default_str();
  c_perc->add_option("--s", percs, "window coordinate")->capture_default_str();
  c_perc->add_option("--replicas", replicas, "independent clusters")->capture_default_str();
  c_perc->add_option("--seed", seed, "RNG seed")->capture_default_str();
  c_perc->add_option("--sampler", sampler, "bfs|skip")->capture_default_str();

  // sweep
  auto* c_sweep = app.add_subcommand("sweep", "grid evaluation with profile ratios and convergence fit");
  harness::SweepSpec spec;
  c_sweep->add_option("--model", spec.model, "tree|animal|saw|perc")->capture_default_str();
  c_sweep->add_option("--V", spec.V_grid, "V grid")->required()->expected(-1);
  c_sweep->add_option("--s", spec.s_grid, "s grid")->required()->expected(-1);
  c_sweep->add_option("--quantity", spec.quantity, "chi|g0|g01|two_point")->capture_default_str();
  c_sweep->add_option("--seed", spec.seed, "seed (perc)")->capture_default_str();
  c_sweep->add_option("--replicas", spec.replicas, "replicas per point (perc)")->capture_default_str();
  c_sweep->add_option("--table-max", spec.table_max, "animal capacity")->capture_default_str();

  // verify
  auto* c_verify = app.add_subcommand("verify", "run an acceptance suite");
  std::string suite = "all";
  c_verify->add_option("suite", suite, "counts|bounds|theorems|profiles|saw|all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    set_precision_bits(bits);
    if (*c_count) return cmd_count(cn, cm, oracle, table_max);
    if (*c_gen) {
      (void)opt_s;
      return cmd_genfun(model, V, s, p, opt_p->count() > 0, quantity, bits, table_max);
    }
    if (*c_bounds) return cmd_bounds(bn_max, report);
    if (*c_prof) return cmd_profile(which, ps, pz, pk, pn, ptol);
    if (*c_saw) {
      (void)sopt_s;
      return cmd_saw(sV, ss, sp, sopt_p->count() > 0, squant, bits);
    }
    if (*c_perc) return cmd_percsim(pV, percs, replicas, seed, sampler, threads);
    if (*c_sweep) {
      spec.precision_bits = bits;
      spec.threads = threads;
      spec.output_path = output;
      auto rep = harness::run_sweep(spec);
      harness::write_report(spec, rep);
      if (rep.fit_status == "ok")
        std::cerr << "# fitted exponent " << rep.fitted_exponent << " (residual "
                  << rep.fit_residual << ")\n";
      else
        std::cerr << "# fit " << rep.fit_status << "\n";
      return 0;
    }
    if (*c_verify) {
      harness::VerifyOptions vo;
      vo.threads = threads;
      int failures = harness::run_suite(suite, vo);
      return failures == 0 ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
