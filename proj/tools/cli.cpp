// Copyright 2026 The cvmultipole Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <variant>

#include "cvmp/algebra.hpp"
#include "cvmp/closed_forms.hpp"
#include "cvmp/cumulative.hpp"
#include "cvmp/errors.hpp"
#include "cvmp/fock.hpp"
#include "cvmp/homodyne.hpp"
#include "cvmp/io.hpp"
#include "cvmp/joint_operator.hpp"
#include "cvmp/kernels.hpp"
#include "cvmp/multipoles.hpp"
#include "cvmp/qutrit.hpp"
#include "cvmp/special_functions.hpp"
#include "cvmp/sweeps.hpp"
#include "cvmp/tensor_basis.hpp"
#include "cvmp/weyl_basis.hpp"

namespace cvmp::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 2026;

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

Check below(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value < threshold};
}

// Destination for CSV output: the file named by --out, else `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      const auto resolved = resolve_output_path(path);
      file_ = std::make_unique<std::ofstream>(resolved);
      if (!*file_) throw ValidationError("cannot open output file '" + resolved + "'");
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

// Builds the state at its own support cutoff (or --cutoff), then pads by
// `headroom` levels so direct-basis moments of order `headroom` are exact.
DensityMatrix build_state(const RunConfig& cfg, int headroom) {
  const auto spec = parse_state_spec(cfg.state);
  int base = required_cutoff(spec);
  // Poisson tails are weighted by n^(2K) in direct moments.
  if (headroom > 0 && (std::holds_alternative<CoherentSpec>(spec) || std::holds_alternative<CatSpec>(spec)))
    base += 2 * headroom + 10;
  if (cfg.cutoff) base = *cfg.cutoff;
  DensityMatrix rho = [&] {
    try {
      return make_state(spec, base);
    } catch (const TruncationError& e) {
      if (cfg.cutoff) throw;
      base = e.required_cutoff();
      return make_state(spec, base);
    }
  }();
  if (headroom > 0) rho = rho.embedded(rho.cutoff() + headroom);
  return rho;
}

bool is_direct(Basis b) { return b == Basis::DirectNormal || b == Basis::DirectWeyl; }

int cmd_multipoles(const RunConfig& cfg, std::ostream& out) {
  const Basis basis = parse_basis(cfg.basis);
  const auto rho = build_state(cfg, is_direct(basis) ? cfg.m2 : 0);
  Sink sink(cfg.out, out);
  write_table_csv(*sink, multipole_table(rho, cfg.m2, basis));
  return 0;
}

int cmd_cumulative(const RunConfig& cfg, std::ostream& out) {
  const Basis basis = parse_basis(cfg.basis);
  if (basis != Basis::InverseNormal && basis != Basis::DirectNormal)
    throw ValidationError("cumulative: basis must be 'inverse' or 'direct'");
  const bool direct = basis == Basis::DirectNormal;
  const auto rho = build_state(cfg, direct ? cfg.m2 : 0);
  Sink sink(cfg.out, out);
  write_profile_csv(*sink, direct ? cumulative_direct(rho, cfg.m2) : cumulative_inverse(rho, cfg.m2));
  return 0;
}

int cmd_eigs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Sink sink(cfg.out, out);
  *sink << "M,lambda_rank,lambda,class\n";
  for (int M = 0; 2 * M <= cfg.m2; ++M) {
    const int cutoff = std::max(cfg.cutoff.value_or(2 * M), 2 * M);
    const auto s = eigenanalysis(2 * M, cutoff, cfg.top);
    for (std::size_t r = 0; r < s.top.size(); ++r)
      *sink << M << ',' << r << ',' << format_double(s.top[r].value) << ',' << to_string(s.top[r].exchange) << '\n';
    err << "M=" << M << " most_negative=" << format_double(s.most_negative)
        << " antisymmetric_overlap=" << format_double(s.antisymmetric_overlap)
        << " vacuum_ratio=" << format_double(s.vacuum_ratio);
    if (s.eleven_overlap) err << " eleven_overlap=" << format_double(*s.eleven_overlap);
    err << '\n';
  }
  return 0;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m2 < 4) throw DomainError("coeffs: m2 must be >= 4");
  Sink sink(cfg.out, out);
  *sink << "m2";
  for (const auto name : QutritForm::kMonomials) *sink << ',' << name;
  *sink << ",condition\n";
  for (int m2 = 4; m2 <= cfg.m2; ++m2) {
    const auto f = qutrit_form(m2);
    *sink << m2;
    for (double c : f.coefficients) *sink << ',' << format_double(c);
    *sink << ',' << format_double(f.condition) << '\n';
  }
  return 0;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto s = scan_qutrit(cfg.m2, cfg.grid);
  Sink sink(cfg.out, out);
  *sink << "p0,p1,value\n";
  for (const auto& p : s.points)
    *sink << format_double(p.p0) << ',' << format_double(p.p1) << ',' << format_double(p.value) << '\n';
  err << "argmax p0=" << format_double(s.best.p0) << " p1=" << format_double(s.best.p1)
      << " value=" << format_double(s.best.value) << '\n';
  return 0;
}

int cmd_homodyne(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int power = cfg.power > 0 ? cfg.power : cfg.m2;
  const int phases = cfg.phases > 0 ? cfg.phases : power + 2;
  std::optional<MomentNoise> noise;
  if (cfg.noise > 0.0) {
    if (!cfg.seed) throw ValidationError("homodyne: --noise requires an explicit --seed");
    noise = MomentNoise{cfg.noise, *cfg.seed};
  }
  const auto rho = build_state(cfg, power);
  const auto moments = simulate_quadrature_moments(rho, equispaced_phases(phases), power, noise);
  if (!cfg.moments_out.empty()) {
    std::ofstream m(resolve_output_path(cfg.moments_out));
    if (!m) throw ValidationError("cannot open moments file");
    write_moments_csv(m, moments);
  }
  const auto rec = recover_inverse_multipoles(moments, cfg.m2);
  Sink sink(cfg.out, out);
  write_table_csv(*sink, rec.direct);
  double worst = 0.0;
  for (const auto& [idx, v] : rec.direct.entries) worst = std::max(worst, std::abs(v - inverse_multipole(rho, idx)));
  err << "condition=" << format_double(rec.condition) << " max_error_vs_exact=" << format_double(worst) << '\n';
  for (std::size_t j = 0; j < rec.residual_rms.size(); ++j)
    err << "residual_rms j=" << j << ' ' << format_double(rec.residual_rms[j]) << '\n';
  return 0;
}

// ---- verify suites ---------------------------------------------------------

using Suite = std::function<std::vector<Check>(const RunConfig&)>;

std::vector<Check> suite_orthonormality(const RunConfig& cfg) {
  const auto r = verify_orthonormality(8, 20);
  return {below("max |Tr(inv T) - delta|, K<=4, N=20", r.max_deviation, cfg.tol.value_or(1e-10))};
}

std::vector<Check> suite_weyl(const RunConfig& cfg) {
  double pairing = 0.0, series = 0.0;
  for (const auto& a : indices_up_to(4)) {
    for (const auto& b : indices_up_to(4))
      pairing = std::max(pairing, std::abs(weyl_pairing(a, b, 30) - (a == b ? 1.0 : 0.0)));
    const auto closed = inverse_weyl_matrix(a, 10);
    series = std::max(series, max_abs_diff(closed, inverse_weyl_matrix_from_series(a, 10, 160)) /
                                  std::max(1.0, closed.max_abs()));
  }
  const double tol = cfg.tol.value_or(1e-8);
  return {below("Weyl pairing deviation, K<=2, N=30", pairing, tol),
          below("Weyl series vs closed form, K<=2", series, tol)};
}

std::vector<Check> suite_purity(const RunConfig& cfg) {
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    auto rng = trial_rng(cfg.seed.value_or(kDefaultSeed), static_cast<std::uint64_t>(t));
    const auto rho = random_mixed_state(rng, 3, 3);
    worst = std::max(worst, std::abs(purity(rho) - purity_from_multipoles(rho, 6)));
  }
  return {below("purity identity, 100 states n<=3, m2=6", worst, cfg.tol.value_or(1e-12))};
}

std::vector<Check> suite_reconstruction(const RunConfig& cfg) {
  double worst = 0.0;
  for (int N = 0; N <= 8; ++N)
    for (int t = 0; t < 5; ++t) {
      auto rng = trial_rng(cfg.seed.value_or(kDefaultSeed), static_cast<std::uint64_t>(10 * N + t));
      const auto rho = random_mixed_state(rng, N, N);
      worst = std::max(worst, max_abs_diff(reconstruct(multipole_table(rho, 2 * N, Basis::InverseNormal), N), rho.op()));
    }
  return {below("reconstruction, N<=8, m2=2N", worst, cfg.tol.value_or(1e-10))};
}

std::vector<Check> suite_closed_forms(const RunConfig& cfg) {
  double coh = 0.0, fock = 0.0, dyad_err = 0.0, sym = 0.0;
  for (double r2 : {0.0, 0.5, 1.0, 2.0, 4.0, 6.0}) {
    const cplx alpha = std::polar(std::sqrt(r2), 0.6);
    const auto rho = make_state(CoherentSpec{alpha}, 70);
    for (const auto& idx : indices_up_to(12)) {
      coh = std::max(coh, std::abs(coherent_multipole_closed(alpha, idx) - state_multipole(rho, idx)));
      coh = std::max(coh, std::abs(coherent_weyl_multipole_closed(alpha, idx) - weyl_state_multipole(rho, idx)));
      sym = std::max(sym, std::abs(std::abs(state_multipole(rho, idx)) - std::abs(state_multipole(rho, idx.conjugate()))));
    }
  }
  for (int n = 0; n <= 8; ++n) {
    const auto rho = make_state(FockSpec{n}, 20);
    for (const auto& idx : indices_up_to(12)) {
      fock = std::max(fock, std::abs(fock_multipole_closed(n, idx) - state_multipole(rho, idx).real()));
      const double w = weyl_state_multipole(rho, idx).real();
      fock = std::max(fock, std::abs(fock_weyl_multipole_closed(n, idx) - w) / std::max(1.0, std::abs(w)));
    }
  }
  for (const auto& idx : indices_up_to(12)) {
    const auto inv = inverse_matrix(idx, 14);
    const auto wey = inverse_weyl_matrix(idx, 14);
    for (int m = 0; m <= 14; ++m)
      for (int n = 0; n <= 14; ++n) {
        dyad_err = std::max(dyad_err, std::abs(dyad_multipole_closed(m, n, idx) - inv(m, n).real()));
        const double w = wey(m, n).real();
        dyad_err = std::max(dyad_err, std::abs(dyad_weyl_multipole_closed(m, n, idx) - w) / std::max(1.0, std::abs(w)));
      }
  }
  const double tol = cfg.tol.value_or(1e-10);
  return {below("coherent closed forms, K<=6, |alpha|^2<=6", coh, tol), below("Fock closed forms, K<=6", fock, tol),
          below("dyad closed forms, K<=6", dyad_err, tol),
          {"|<T_Kq>| = |<T_K,-q>|", sym, 0.0, sym == 0.0}};
}

std::vector<Check> suite_structure(const RunConfig& cfg) {
  double worst = 0.0, vanish = 0.0;
  for (const auto& a : indices_up_to(4))
    for (const auto& b : indices_up_to(4)) {
      const auto direct = inverse_matrix(a, 12) * inverse_matrix(b, 12);
      worst = std::max(worst, max_abs_diff(assemble(product_expansion(a, b), 12), direct));
      if (product_vanishes_by_rule(a, b)) vanish = std::max(vanish, direct.max_abs());
    }
  return {below("product reconstruction, K,K'<=2", worst, cfg.tol.value_or(1e-10)),
          {"vanishing rule products", vanish, 0.0, vanish == 0.0}};
}

std::vector<Check> suite_homodyne(const RunConfig& cfg) {
  std::vector<DensityMatrix> states;
  for (int n = 0; n <= 3; ++n) states.push_back(make_state(FockSpec{n}, n).embedded(n + 6));
  for (const cplx a : {cplx(0.5, 0.0), cplx(1.0, 1.0), cplx(0.0, -2.0)}) {
    const int base = required_cutoff(CoherentSpec{a});
    states.push_back(make_state(CoherentSpec{a}, base).embedded(base + 6));
  }
  const CatSpec cat{2, 1.3, {}};
  states.push_back(make_state(cat, required_cutoff(cat)).embedded(required_cutoff(cat) + 6));
  double worst = 0.0;
  for (const auto& rho : states) {
    const auto rec = recover_inverse_multipoles(simulate_quadrature_moments(rho, equispaced_phases(8), 6), 6);
    for (const auto& [idx, v] : rec.direct.entries) worst = std::max(worst, std::abs(v - inverse_multipole(rho, idx)));
  }
  return {below("homodyne round trip, 2K<=6", worst, cfg.tol.value_or(1e-8))};
}

std::vector<Check> suite_appendix_c(const RunConfig& cfg) {
  std::vector<Check> out;
  const auto s = eigenanalysis(14, 14, 8);
  out.push_back({"M=7 vacuum eigenvalue ratio ~ 0.647", s.vacuum_ratio, 0.002, std::abs(s.vacuum_ratio - 0.647) <= 0.002});
  const double eleven = s.eleven_overlap.value_or(0.0);
  out.push_back({"M=7 |11> overlap ~ 0.621", eleven, 0.002, std::abs(eleven - 0.621) <= 0.002});
  out.push_back({"M=7 most negative eigenvector antisymmetric", 1.0 - s.antisymmetric_overlap, 1e-6,
                 1.0 - s.antisymmetric_overlap < 1e-6 && s.most_negative_is_largest_magnitude});
  double diff = 0.0;
  for (int M = 1; M <= 10; ++M) {
    const double d = cumulative_inverse(make_state(FockSpec{0}, 1), 2 * M).final_value() -
                     cumulative_inverse(make_state(FockSpec{1}, 1), 2 * M).final_value();
    diff = std::max(diff, std::abs(d - 1.0 / (factorial(M) * factorial(M))));
  }
  out.push_back(below("A(|0>) - A(|1>) = 1/floor(M)!^2, M<=10", diff, cfg.tol.value_or(1e-12)));
  const auto f = qutrit_form(200);
  const double i0 = bessel_i0(2.0), i1 = bessel_i1(2.0);
  const std::array<double, 7> exact = {i0, i0, i0 / 4.0, 2.0 * i0 - 2.0 * i1, 2.96853, 0.688948, 2.0 * std::sqrt(2.0) * i1};
  double coef = 0.0;
  for (std::size_t i = 0; i < 7; ++i) coef = std::max(coef, std::abs(f.coefficients[i] - exact[i]));
  out.push_back(below("qutrit form coefficients (Bessel closed forms)", coef, 1e-4));
  const auto f7 = qutrit_form(14);
  double conv = 0.0;
  for (std::size_t i = 0; i < 7; ++i) conv = std::max(conv, std::abs(f7.coefficients[i] - f.coefficients[i]));
  out.push_back(below("qutrit coefficients converged by M=7", conv, 1e-4));
  const auto scan = scan_qutrit(14, 41);
  out.push_back({"qutrit scan argmax at a simplex corner", scan.best.p0 + scan.best.p1, 1.0,
                 (scan.best.p0 == 1.0 && scan.best.p1 == 0.0) || (scan.best.p0 == 0.0 && scan.best.p1 == 1.0)});
  long violations = 0;
  for (int m2 : {4, 10, 20}) violations += vacuum_dominance_sweep(m2, 10000, cfg.seed.value_or(kDefaultSeed)).violations;
  out.push_back({"vacuum dominance, 1e4 states n<=2, M in {2,5,10}", static_cast<double>(violations), 0.0,
                 violations == 0});
  return out;
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s = {
      {"orthonormality", suite_orthonormality}, {"weyl", suite_weyl},
      {"purity", suite_purity},                 {"reconstruction", suite_reconstruction},
      {"closed-forms", suite_closed_forms},     {"structure", suite_structure},
      {"homodyne", suite_homodyne},             {"appendixC", suite_appendix_c},
  };
  return s;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> names = cfg.suites;
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) {
    names.clear();
    for (const auto& [n, _] : suites()) names.push_back(n);
  }
  Sink sink(cfg.out, out);
  bool all = true;
  for (const auto& name : names) {
    const auto it = suites().find(name);
    if (it == suites().end()) throw ValidationError("unknown verify suite '" + name + "'");
    for (const auto& c : it->second(cfg)) {
      *sink << (c.pass ? "PASS " : "FAIL ") << name << ": " << c.name << " value=" << format_double(c.value)
            << " threshold=" << format_double(c.threshold) << '\n';
      all = all && c.pass;
    }
  }
  return all ? 0 : 1;
}

}  // namespace

std::string resolve_output_path(const std::string& path) {
  const char* dir = std::getenv("CVMP_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0' || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(dir) / path).string();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Covariant multipole toolkit for a single bosonic mode"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "OpenMP thread cap (0 = all available)");
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed for random states and moment noise");
  double tol = 0.0;
  auto* tol_opt = app.add_option("--tol", tol, "Override the default check tolerance");
  app.add_option("--out", cfg.out, "Output file (relative paths resolve against $CVMP_OUTPUT_DIR)");

  auto state_opts = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.state, "fock:n | coherent:a+bi | cat:b:a+bi[:amps] | dyad:m,n[,c] | file:p.json");
    sub->add_option("--cutoff", cfg.cutoff, "Fock cutoff for the state (default: its support)");
  };
  auto* mp = app.add_subcommand("multipoles", "Multipole table; CSV k2,q2,re,im,abs");
  state_opts(mp);
  mp->add_option("--m2", cfg.m2, "Largest doubled order 2K")->check(CLI::NonNegativeNumber);
  mp->add_option("--basis", cfg.basis, "inverse | direct | inverse-weyl | direct-weyl");
  auto* cu = app.add_subcommand("cumulative", "Cumulative profile; CSV m2,value");
  state_opts(cu);
  cu->add_option("--m2", cfg.m2, "Largest doubled order 2M")->check(CLI::NonNegativeNumber);
  cu->add_option("--basis", cfg.basis, "inverse | direct");
  auto* eg = app.add_subcommand("eigs", "Joint-operator spectra per integer M <= m2/2; CSV M,lambda_rank,lambda,class");
  eg->add_option("--m2", cfg.m2, "Largest doubled order 2M")->check(CLI::NonNegativeNumber);
  eg->add_option("--cutoff", cfg.cutoff, "Cutoff (raised to 2M when smaller)");
  eg->add_option("--top", cfg.top, "Eigenpairs per M, by magnitude");
  auto* co = app.add_subcommand("coeffs", "Qutrit form coefficients for 4 <= m2' <= m2; CSV m2,<monomials>,condition");
  co->add_option("--m2", cfg.m2, "Largest doubled order")->check(CLI::NonNegativeNumber);
  auto* sc = app.add_subcommand("scan-qutrit", "Qutrit simplex scan; CSV p0,p1,value");
  sc->add_option("--m2", cfg.m2, "Doubled order")->check(CLI::NonNegativeNumber);
  sc->add_option("--grid", cfg.grid, "Points per simplex edge");
  auto* ho = app.add_subcommand("homodyne", "Recover direct multipoles from quadrature moments; CSV k2,q2,re,im,abs");
  state_opts(ho);
  ho->add_option("--m2", cfg.m2, "Largest doubled order recovered")->check(CLI::NonNegativeNumber);
  ho->add_option("--phases", cfg.phases, "Number of equispaced phases (default m2+2)");
  ho->add_option("--power", cfg.power, "Largest moment power (default m2)");
  ho->add_option("--noise", cfg.noise, "Gaussian noise deviation added to each moment (needs --seed)");
  ho->add_option("--moments-out", cfg.moments_out, "Also write moments; CSV theta,j,moment");
  auto* ve = app.add_subcommand("verify", "Run verification suites; exit 0 iff all pass");
  ve->add_option("--suite", cfg.suites,
                 "orthonormality | weyl | purity | reconstruction | closed-forms | structure | homodyne | appendixC | all");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? 0 : 2;
  }
  if (*seed_opt) cfg.seed = seed;
  if (*tol_opt) cfg.tol = tol;
  kernels::set_thread_count(cfg.threads);
  try {
    if (*mp) return cmd_multipoles(cfg, out);
    if (*cu) return cmd_cumulative(cfg, out);
    if (*eg) return cmd_eigs(cfg, out, err);
    if (*co) return cmd_coeffs(cfg, out);
    if (*sc) return cmd_scan(cfg, out, err);
    if (*ho) return cmd_homodyne(cfg, out, err);
    if (*ve) return cmd_verify(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cvmp::cli
