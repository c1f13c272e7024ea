// commands.cpp
#include "casimir/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "casimir/casimir.hpp"
#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/fixtures.hpp"
#include "casimir/modes.hpp"
#include "casimir/oracle.hpp"
#include "casimir/sweep.hpp"

namespace casimir::cli {

namespace {

std::string plain(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void line(std::ostream& os, const std::string& key, const std::string& value) {
  os << key;
  for (std::size_t i = key.size(); i < 18; ++i) os << ' ';
  os << value << '\n';
}

// Runs `body`, mapping library errors onto exit codes.
template <typename F>
int guarded(Streams io, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    io.err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidMetricError& e) {
    io.err << "error: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const AccuracyError& e) {
    io.err << "error: " << e.what() << '\n';
    return kAccuracyFloor;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

class Sink {
public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) {
    if (path && !path->empty()) {
      file_.open(*path, std::ios::binary);
      if (!file_) throw InputError("cannot open output file " + *path);
      out_ = &file_;
    } else {
      out_ = &fallback;
    }
  }
  std::ostream& stream() { return *out_; }

private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

RunConfig with_observer(RunConfig cfg, std::optional<double> observer_z) {
  if (observer_z) cfg.cavity.observer_z = *observer_z;
  return cfg;
}

}  // namespace

std::string sci(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return buf;
}

std::string units_note() {
  return "# natural units (hbar = c = k_B = 1); hbar*c = " + plain(constants::hbar_c_eV_m) +
         " eV m, k_B = " + plain(constants::k_B_eV_per_K) + " eV/K (not applied)";
}

int cmd_validate(const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const ValidationReport rep = validate(cfg.model);
    io.out << "metric " << cfg.model.name() << " on z in [" << plain(cfg.model.domain().lo) << ", "
           << plain(cfg.model.domain().hi) << "], " << kValidationGridPoints << " grid points\n";
    if (!rep.valid) {
      io.out << "invalid\n";
      for (const auto& f : rep.failures) io.out << "  " << f << '\n';
      return static_cast<int>(kValidationFailed);
    }
    try {
      check_cavity(cfg.model, cfg.cavity);
    } catch (const Error& e) {
      io.out << "invalid\n  " << e.what() << '\n';
      return static_cast<int>(kValidationFailed);
    }
    io.out << "valid; -g = " << plain(rep.det_neg_origin)
           << "; dragged g00 = " << plain(rep.dragged_g00_origin) << '\n';
    io.out << "dragged g00 range [" << plain(rep.dragged_g00_min) << ", "
           << plain(rep.dragged_g00_max) << "]\n";
    return static_cast<int>(kOk);
  });
}

int cmd_energy(const RunConfig& base, std::optional<double> observer_z, Streams io) {
  return guarded(io, [&] {
    const RunConfig cfg = with_observer(base, observer_z);
    const EnergyReport r = casimir_energy_origin(cfg.model, cfg.cavity);
    io.out << units_note() << '\n';
    line(io.out, "metric", cfg.model.name());
    line(io.out, "L_p", sci(r.geometry.L_p));
    line(io.out, "S_p", sci(r.geometry.S_p));
    line(io.out, "E_p", sci(r.E_p));
    line(io.out, "redshift_factor", sci(r.redshift_factor));
    line(io.out, "E_0", sci(r.E_0));
    line(io.out, "observer_z", plain(r.observer_z));
    line(io.out, "E_z", sci(r.E_z));
    return static_cast<int>(kOk);
  });
}

int cmd_thermal(const RunConfig& base, std::optional<double> observer_z, Streams io) {
  return guarded(io, [&] {
    const RunConfig cfg = with_observer(base, observer_z);
    if (!cfg.thermal.present || !cfg.thermal.value)
      throw ConfigError("thermal: the [thermal] section needs 'value'");
    const ThermalSetup setup = make_thermal_setup(cfg.model, cfg.cavity);
    const ThermalPoint p = make_point(cfg.thermal.mode, *cfg.thermal.value, setup);
    const ThermoReport r = thermodynamics(setup, p, cfg.series);
    const DerivativeCheck dc = check_derivatives(setup.geometry, p, cfg.series);
    const AsymptoticTerms asym = asymptotic_expansion(setup.geometry, p.T_p);

    io.out << units_note() << '\n';
    line(io.out, "metric", setup.metric_name);
    line(io.out, "T", sci(p.T));
    line(io.out, "T_p", sci(p.T_p));
    line(io.out, "beta_tilde", sci(p.beta_tilde));
    line(io.out, "sqrt(-g)", sci(r.sqrt_neg_g));
    line(io.out, "E_z", sci(r.E_z));
    line(io.out, "dF_raw", sci(thermal_free_energy_raw(cfg.model, setup.geometry, p, cfg.series)));
    line(io.out, "dF_p", sci(r.proper.dF_p));
    line(io.out, "dU_p", sci(r.proper.dU_p));
    line(io.out, "dS_p", sci(r.proper.dS_p));
    line(io.out, "dCv_p", sci(r.proper.dCv_p));
    line(io.out, "F_total", sci(r.F_total));
    line(io.out, "U", sci(r.U));
    line(io.out, "S", sci(r.S_entropy));
    line(io.out, "C_V", sci(r.C_V));
    line(io.out, "blackbody_F", sci(r.blackbody_F));
    line(io.out, "asym_T4", sci(asym.term_T4));
    line(io.out, "asym_T3", sci(asym.term_T3));
    line(io.out, "asym_const", sci(asym.term_const));
    line(io.out, "F_scaled", sci(r.F_scaled));
    line(io.out, "U_scaled", sci(r.U_scaled));
    line(io.out, "S_scaled", sci(r.S_scaled));
    line(io.out, "Cv_scaled", sci(r.Cv_scaled));
    line(io.out, "fd_check_S", sci(dc.S_rel_err, 3));
    line(io.out, "fd_check_Cv", sci(dc.Cv_rel_err, 3));
    return static_cast<int>(kOk);
  });
}

int cmd_sweep(const RunConfig& base, const SweepOptions& opts, Streams io) {
  return guarded(io, [&] {
    const RunConfig cfg = with_observer(base, opts.observer_z);
    const ThermalConfig& t = cfg.thermal;
    if (!t.present) throw ConfigError("sweep: missing [thermal] section");
    double from = 0.0, to = 0.0;
    if (t.from && t.to) {
      from = *t.from;
      to = *t.to;
    } else if (t.value) {
      from = to = *t.value;
    } else {
      throw ConfigError("sweep: [thermal] needs 'from' and 'to' (or 'value')");
    }
    const int n = opts.points.value_or(t.points);
    const std::vector<double> grid = sweep_grid(from, to, n, opts.log || t.log);

    const ThermalSetup setup = make_thermal_setup(cfg.model, cfg.cavity);
    std::vector<ThermalPoint> points;
    points.reserve(grid.size());
    for (double v : grid) points.push_back(make_point(t.mode, v, setup));
    const std::vector<SweepRow> rows = evaluate_sweep(setup, points, cfg.series);

    std::optional<std::string> path = opts.out_path;
    if (!path && !cfg.output.csv.empty()) path = cfg.output.csv;
    Sink sink(path, io.out);
    std::ostream& csv = sink.stream();
    const int digits = cfg.output.precision;
    csv << kSweepHeader << '\n';
    int omitted = 0;
    for (const SweepRow& row : rows) {
      if (!row.report) {
        ++omitted;
        io.err << "warning: omitted point 1/beta_tilde = " << plain(row.inverse_beta_tilde) << ": "
               << row.error << '\n';
        continue;
      }
      const ThermoReport& r = *row.report;
      csv << sci(row.inverse_beta_tilde, digits) << ',' << sci(r.F_scaled, digits) << ','
          << sci(r.U_scaled, digits) << ',' << sci(r.S_scaled, digits) << ','
          << sci(r.Cv_scaled, digits) << ',' << sci(r.F_total, digits) << ','
          << sci(r.U, digits) << ',' << sci(r.S_entropy, digits) << ',' << sci(r.C_V, digits)
          << '\n';
    }
    csv.flush();
    io.err << units_note() << '\n';
    io.err << "sweep: " << rows.size() - omitted << " rows written, " << omitted << " omitted\n";
    return static_cast<int>(omitted > 0 ? kAccuracyFloor : kOk);
  });
}

int cmd_oracle_cutoff(const std::vector<double>& Ls, const std::optional<std::string>& out_path,
                      Streams io) {
  return guarded(io, [&] {
    std::vector<FixtureRecord> records;
    bool ok = true;
    for (double L : Ls) {
      const oracle::CutoffSweep s =
          oracle::cutoff_casimir_energy_per_area(L, oracle::default_lambdas(L));
      const double target = -constants::pi * constants::pi / (1440.0 * L * L * L);
      std::string lambdas;
      for (const auto& p : s.points) lambdas += (lambdas.empty() ? "" : ";") + plain(p.lambda);
      records.push_back({"cutoff_energy_per_area",
                         {{"L", plain(L)},
                          {"value", sci(s.extrapolated, 17)},
                          {"bound", sci(s.fit_residual * std::abs(s.extrapolated), 3)},
                          {"target", sci(target, 17)},
                          {"rel_err", sci(std::abs(s.extrapolated / target - 1.0), 3)},
                          {"lambdas", lambdas},
                          {"degree", std::to_string(s.degree)}}});
      io.err << "cutoff L=" << plain(L) << ": extrapolated " << sci(s.extrapolated) << " target "
             << sci(target) << " fit residual " << sci(s.fit_residual, 3)
             << (s.residual_ok ? "" : " (ill-conditioned fit)") << '\n';
      ok = ok && s.residual_ok;
    }
    Sink sink(out_path, io.out);
    write_fixtures(sink.stream(), records);
    return static_cast<int>(ok ? kOk : kRuntimeError);
  });
}

int cmd_oracle_thermal(const std::vector<std::string>& beta_tildes, int digits, int max_terms,
                       const std::optional<std::string>& out_path, Streams io) {
  return guarded(io, [&] {
    std::vector<FixtureRecord> records;
    for (const std::string& bt : beta_tildes) {
      const oracle::HighPrecValue v = oracle::highprec_thermal_bracket(bt, digits, max_terms);
      const std::vector<std::pair<std::string, std::string>> params{
          {"digits", std::to_string(v.digits)},
          {"max_terms", std::to_string(v.max_terms)},
          {"terms", std::to_string(v.terms_used)}};
      FixtureRecord bracket{"thermal_bracket", {{"beta_tilde", bt}, {"value", v.bracket}, {"bound", v.bound}}};
      FixtureRecord renorm{"thermal_renormalized", {{"beta_tilde", bt}, {"value", v.renormalized}, {"bound", v.bound}}};
      bracket.fields.insert(bracket.fields.end(), params.begin(), params.end());
      renorm.fields.insert(renorm.fields.end(), params.begin(), params.end());
      records.push_back(std::move(bracket));
      records.push_back(std::move(renorm));
      io.err << "thermal beta_tilde=" << bt << ": " << v.terms_used << " terms, bracket "
             << sci(v.bracket_double) << '\n';
    }
    Sink sink(out_path, io.out);
    write_fixtures(sink.stream(), records);
    return static_cast<int>(kOk);
  });
}

int cmd_oracle_modes(const RunConfig& cfg, int n, double kx, double ky,
                     const std::optional<std::string>& out_path, Streams io) {
  return guarded(io, [&] {
    if (!cfg.model.is_constant())
      throw InputError("oracle modes: the mode checks need a constant-component metric");
    const MetricComponents c = components_at(cfg.model, 0.0);
    const double L = cfg.cavity.L;
    const ModeSpec m{n, kx, ky};
    const ModeSpec next{n + 1, kx, ky};
    const double pde = oracle::mode_pde_residual(c, L, m);
    const double norm = oracle::mode_norm_check(c, L, m);
    const double ortho = oracle::mode_scalar_product(c, L, m, next);
    auto rec = [&](const char* name, double value, const char* bound) {
      return FixtureRecord{name,
                           {{"metric", cfg.model.name()},
                            {"L", plain(L)},
                            {"n", std::to_string(n)},
                            {"kx", plain(kx)},
                            {"ky", plain(ky)},
                            {"value", sci(value, 3)},
                            {"bound", bound}}};
    };
    std::vector<FixtureRecord> records{rec("mode_pde_residual", pde, "1e-8"),
                                       rec("mode_norm_residual", norm, "1e-8"),
                                       rec("mode_orthogonality", ortho, "1e-10")};
    Sink sink(out_path, io.out);
    write_fixtures(sink.stream(), records);
    const bool ok = pde < 1e-8 && norm < 1e-8 && ortho < 1e-10;
    io.err << "modes " << cfg.model.name() << " n=" << n << ": pde " << sci(pde, 3) << ", norm "
           << sci(norm, 3) << ", orthogonality " << sci(ortho, 3) << (ok ? "" : "  FAILED") << '\n';
    return static_cast<int>(ok ? kOk : kRuntimeError);
  });
}

}  // namespace casimir::cli
