#include "wavechan/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>

#include "json.hpp"
#include "wavechan/acceptance.hpp"
#include "wavechan/bounds2d.hpp"
#include "wavechan/bounds3d.hpp"
#include "wavechan/channel_metrics.hpp"
#include "wavechan/csv.hpp"
#include "wavechan/green_oracle.hpp"

namespace wavechan {

namespace {
using nlohmann::json;

constexpr const char* kDmaxConvention = "d_max = d + 2*R_s + 2*R_r";

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

json base_metadata(const Scenario& scn, const std::string& command) {
  json m;
  m["command"] = command;
  m["scenario"] = scn.source_path;
  m["name"] = scn.name;
  m["seed"] = scn.seed;
  m["resolution"] = scn.resolution;
  m["d_max_convention"] = kDmaxConvention;
  return m;
}

void write_metadata(const std::string& out_dir, const json& m) {
  atomic_write(out_dir + "/metadata.json", m.dump(2) + "\n");
}

std::vector<double> config_sigmas(const ConfigurationSpec& cfg, double spacing,
                                  double k, json* meta) {
  const auto src = make_geometry(cfg.source.kind, cfg.source.params, spacing,
                                 cfg.name + "_src");
  const auto rcv = make_geometry(cfg.receiver.kind, cfg.receiver.params, spacing,
                                 cfg.name + "_rcv");
  const auto t0 = std::chrono::steady_clock::now();
  auto sig = operator_singular_values(src, rcv, k);
  if (meta) {
    (*meta)["configurations"][cfg.name] = {
        {"src_points", src.size()},
        {"rcv_points", rcv.size()},
        {"matrix_rows", rcv.size() * (src.dimension == 3 ? 3 : 1)},
        {"matrix_cols", src.size() * (src.dimension == 3 ? 3 : 1)},
        {"runtime_seconds", elapsed_since(t0)}};
  }
  return sig;
}

// least-squares slope of y against x
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}
}  // namespace

int cmd_bounds(const Scenario& scn, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  json meta = base_metadata(scn, "bounds");
  meta["max_order"] = scn.max_order;

  ChannelSpectrum spec;
  double k = 0;
  std::string file_base;
  if (scn.dimension == 2) {
    if (!scn.geometry2d)
      throw std::invalid_argument("bounds: scenario lacks a 2D geometry");
    const auto& g = *scn.geometry2d;
    for (const auto& w : g.warnings()) std::cerr << "warning: " << w << "\n";
    k = g.k;
    const int qmax = scn.max_order >= 0 ? scn.max_order : default_q_max_2d(g);
    spec = bound_spectrum_2d(g, qmax);
    file_base = "bounds2d";
    meta["q_max"] = qmax;
  } else {
    if (!scn.geometry3d)
      throw std::invalid_argument("bounds: scenario lacks a 3D geometry");
    const auto& g = *scn.geometry3d;
    for (const auto& w : g.warnings()) std::cerr << "warning: " << w << "\n";
    k = g.k;
    const int nmax = scn.max_order >= 1 ? scn.max_order : default_n_max_3d(g);
    spec = bound_spectrum_3d(g, nmax);
    file_base = "bounds3d";
    meta["n_max"] = nmax;
  }

  // numeric spectra of the configured source/receiver layouts
  std::vector<std::pair<std::string, std::vector<double>>> numeric;
  for (const auto& cfg : scn.configurations)
    numeric.push_back({cfg.name, config_sigmas(cfg, scn.resolution, k, &meta)});

  for (const auto& norm : scn.normalizations) {
    const bool by_max = (norm == "max");
    std::vector<std::string> header{"rank", "label", "degeneracy", "bound",
                                    "asymptote", "asymptotic_entry"};
    for (const auto& [name, sig] : numeric) header.push_back(name);
    CsvWriter csv(header);
    const double bound_denom = by_max ? spec.entries.front().strength : 1.0;
    std::vector<double> numeric_denom(numeric.size(), 1.0);
    for (std::size_t c = 0; c < numeric.size(); ++c) {
      double tot = 0, mx = 0;
      for (double s : numeric[c].second) {
        tot += s * s;
        mx = std::max(mx, s * s);
      }
      numeric_denom[c] = by_max ? mx : tot;
    }
    const std::size_t rows =
        std::max(spec.entries.size(),
                 numeric.empty() ? std::size_t(0)
                                 : std::max_element(numeric.begin(), numeric.end(),
                                                    [](const auto& a, const auto& b) {
                                                      return a.second.size() <
                                                             b.second.size();
                                                    })
                                       ->second.size());
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::string> row;
      row.push_back(std::to_string(r + 1));
      if (r < spec.entries.size()) {
        const auto& e = spec.entries[r];
        row.push_back(e.label.text());
        row.push_back(std::to_string(e.degeneracy));
        row.push_back(CsvWriter::fmt(e.strength / bound_denom));
        double asym = 0;
        if (scn.dimension == 2) {
          const int q = std::abs(e.label.q);
          asym = (q >= 1 && scn.geometry2d)
                     ? asymptotic_bound_2d(q, *scn.geometry2d)
                     : 0.0;
        } else if (scn.geometry3d) {
          asym = asymptotic_bound_3d(double(r + 1), *scn.geometry3d);
        }
        row.push_back(asym > 0 ? CsvWriter::fmt(asym / bound_denom) : "");
        row.push_back(e.asymptotic ? "1" : "0");
      } else {
        row.insert(row.end(), {"", "", "", "", ""});
      }
      for (std::size_t c = 0; c < numeric.size(); ++c) {
        if (r < numeric[c].second.size()) {
          const double s2 = numeric[c].second[r] * numeric[c].second[r];
          row.push_back(CsvWriter::fmt(s2 / numeric_denom[c]));
        } else {
          row.push_back("");
        }
      }
      csv.add_row(row);
    }
    const std::string suffix = by_max ? "_max" : "";
    csv.write(out_dir + "/" + file_base + suffix + ".csv");
    meta["outputs"].push_back(file_base + suffix + ".csv");
  }
  meta["runtime_seconds"] = elapsed_since(t0);
  write_metadata(out_dir, meta);
  return 0;
}

int cmd_count(const Scenario& scn, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!scn.radius_sweep)
    throw std::invalid_argument("count: scenario needs a radius_sweep");
  if (scn.dimension != 3)
    throw std::invalid_argument("count: only the 3D sweep is defined");
  std::vector<double> thresholds = scn.thresholds;
  if (thresholds.empty()) thresholds = {1e-2, 1e-3, 1e-4};

  CsvWriter csv({"R_over_lambda", "threshold", "bound_count", "n_sh"});
  json fits;
  std::vector<std::vector<double>> logs(thresholds.size());
  std::vector<std::vector<double>> logcounts(thresholds.size());
  std::vector<std::vector<double>> ratios(thresholds.size());
  const auto radii = scn.radius_sweep->radii();
  for (double R : radii) {
    const auto g = sweep_geometry(scn, R);
    auto spec = bound_spectrum_3d(g, scn.max_order >= 1 ? scn.max_order
                                                        : default_n_max_3d(g));
    const double nsh = spherical_heuristic(g.k, R);
    const double lambda = 2.0 * M_PI / g.k;
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
      const int c = count_channels(spec, thresholds[t]);
      csv.add_row({CsvWriter::fmt(R / lambda), CsvWriter::fmt(thresholds[t]),
                   std::to_string(c), CsvWriter::fmt(nsh)});
      if (c > 0) {
        logs[t].push_back(std::log(R));
        logcounts[t].push_back(std::log(double(c)));
        ratios[t].push_back(c / nsh);
      }
    }
  }
  csv.write(out_dir + "/count.csv");
  for (std::size_t t = 0; t < thresholds.size(); ++t) {
    json f;
    f["threshold"] = thresholds[t];
    if (logs[t].size() >= 2) {
      f["fit_exponent"] = lsq_slope(logs[t], logcounts[t]);
      f["count_over_nsh_min"] =
          *std::min_element(ratios[t].begin(), ratios[t].end());
      f["count_over_nsh_max"] =
          *std::max_element(ratios[t].begin(), ratios[t].end());
    }
    fits["thresholds"].push_back(f);
  }
  atomic_write(out_dir + "/count_fit.json", fits.dump(2) + "\n");
  json meta = base_metadata(scn, "count");
  meta["outputs"] = {"count.csv", "count_fit.json"};
  meta["runtime_seconds"] = elapsed_since(t0);
  write_metadata(out_dir, meta);
  return 0;
}

int cmd_capacity(const Scenario& scn, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!scn.radius_sweep)
    throw std::invalid_argument("capacity: scenario needs a radius_sweep");
  if (scn.dimension != 3)
    throw std::invalid_argument("capacity: only the 3D sweep is defined");
  std::vector<double> snrs = scn.snr_list;
  if (snrs.empty()) snrs = {1e4};

  const auto radii = scn.radius_sweep->radii();
  auto exact_capacity = [&](double R, double snr, int n_antenna) {
    const auto g = sweep_geometry(scn, R);
    const int N = n_antenna > 0 ? n_antenna
                                : std::numeric_limits<int>::max();
    auto spec = strength_spectrum_3d(g, scn.max_order >= 1
                                            ? scn.max_order
                                            : default_n_max_3d(g));
    std::vector<double> s;
    for (const auto& e : spec.entries) {
      if (static_cast<int>(s.size()) >= N) break;
      s.push_back(e.strength);
    }
    return waterfill(s, snr, 1.0).total_bits;
  };

  CsvWriter csv({"R_over_lambda", "snr", "n_antenna", "capacity_exact",
                 "capacity_asymptote", "regime"});
  const double k = scn.geometry3d ? scn.geometry3d->k : 2.0 * M_PI;
  const double lambda = 2.0 * M_PI / k;
  for (double R : radii) {
    const auto g = sweep_geometry(scn, R);
    for (double snr : snrs) {
      // unrestricted channel count
      {
        const double exact = exact_capacity(R, snr, 0);
        const bool low = snr < 1.0;
        const double asym =
            low ? capacity_low_snr(g, snr) : capacity_high_snr(g, snr);
        csv.add_row({CsvWriter::fmt(R / lambda), CsvWriter::fmt(snr), "inf",
                     CsvWriter::fmt(exact), CsvWriter::fmt(asym),
                     low ? "low_snr" : "high_snr"});
      }
      for (int na : scn.n_antenna_list) {
        const double exact = exact_capacity(R, snr, na);
        csv.add_row({CsvWriter::fmt(R / lambda), CsvWriter::fmt(snr),
                     std::to_string(na), CsvWriter::fmt(exact),
                     CsvWriter::fmt(capacity_antenna_limited(g, snr, na)),
                     "antenna_limited"});
      }
    }
  }
  csv.write(out_dir + "/capacity.csv");

  json meta = base_metadata(scn, "capacity");
  meta["outputs"] = {"capacity.csv"};

  // saturation radii: first R where the antenna-limited capacity drops below
  // 95% of the unrestricted one, located by bisection
  json sat = json::array();
  for (double snr : snrs) {
    if (snr < 1.0) continue;
    for (int na : scn.n_antenna_list) {
      auto deficit = [&](double R) {
        return exact_capacity(R, snr, na) - 0.95 * exact_capacity(R, snr, 0);
      };
      double lo = radii.front() * 0.1, hi = radii.back();
      json row;
      row["snr"] = snr;
      row["n_antenna"] = na;
      if (deficit(lo) <= 0) {
        row["saturation_radius"] = nullptr;
        row["note"] = "already saturated at the smallest probed radius";
      } else if (deficit(hi) > 0) {
        row["saturation_radius"] = nullptr;
        row["note"] = "no saturation inside the sweep";
      } else {
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          (deficit(mid) > 0 ? lo : hi) = mid;
        }
        const double rsat = 0.5 * (lo + hi);
        row["saturation_radius"] = rsat / lambda;
        row["n_sh_at_saturation"] = spherical_heuristic(k, rsat);
      }
      sat.push_back(row);
    }
  }
  json fits;
  fits["saturation"] = sat;
  atomic_write(out_dir + "/capacity_fit.json", fits.dump(2) + "\n");
  meta["outputs"].push_back("capacity_fit.json");

  if (scn.emit_max_strength) {
    CsvWriter mcsv({"R_over_lambda", "max_enumerated", "s_002",
                    "k2_Rr_Rcore", "rel_diff_max_vs_002",
                    "rel_diff_max_vs_formula"});
    for (double R : radii) {
      const auto g = sweep_geometry(scn, R);
      auto spec = strength_spectrum_3d(g, default_n_max_3d(g));
      const double mx = spec.entries.front().strength;
      const double s002 = sphere_shell_strength(0, 2, g);
      const double formula = max_channel_strength(g);
      mcsv.add_row({CsvWriter::fmt(R / lambda), CsvWriter::fmt(mx),
                    CsvWriter::fmt(s002), CsvWriter::fmt(formula),
                    CsvWriter::fmt((mx - s002) / mx),
                    CsvWriter::fmt((mx - formula) / mx)});
    }
    mcsv.write(out_dir + "/maxstrength.csv");
    meta["outputs"].push_back("maxstrength.csv");
  }
  meta["runtime_seconds"] = elapsed_since(t0);
  write_metadata(out_dir, meta);
  return 0;
}

int cmd_oracle(const Scenario& scn, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  json meta = base_metadata(scn, "oracle");
  const double k = scn.dimension == 2
                       ? (scn.geometry2d ? scn.geometry2d->k : 2.0 * M_PI)
                       : (scn.geometry3d ? scn.geometry3d->k : 2.0 * M_PI);

  for (const auto& cfg : scn.configurations) {
    auto sig = config_sigmas(cfg, scn.resolution, k, &meta);
    double tot = 0, mx = 0;
    for (double s : sig) {
      tot += s * s;
      mx = std::max(mx, s * s);
    }
    CsvWriter csv({"rank", "sigma", "strength", "sum_normalized",
                   "max_normalized"});
    for (std::size_t r = 0; r < sig.size(); ++r) {
      const double s2 = sig[r] * sig[r];
      csv.add_row({std::to_string(r + 1), CsvWriter::fmt(sig[r]),
                   CsvWriter::fmt(s2), CsvWriter::fmt(s2 / tot),
                   CsvWriter::fmt(s2 / mx)});
    }
    csv.write(out_dir + "/spectrum_" + cfg.name + ".csv");
    meta["outputs"].push_back("spectrum_" + cfg.name + ".csv");
  }

  for (const auto& mono : scn.monotonicity) {
    const auto large_src = make_geometry(mono.source.kind, mono.source.params,
                                         scn.resolution, mono.name + "_src");
    const auto rcv = make_geometry(mono.receiver.kind, mono.receiver.params,
                                   scn.resolution, mono.name + "_rcv");
    const auto small_src = subset_domain(large_src, mono.source_subset.kind,
                                         mono.source_subset.params);
    auto rep = verify_monotonicity(small_src, rcv, large_src, rcv, k);
    CsvWriter csv({"rank", "sigma_small", "sigma_large", "difference"});
    for (std::size_t r = 0; r < rep.differences.size(); ++r)
      csv.add_row({std::to_string(r + 1), CsvWriter::fmt(rep.sigma_small[r]),
                   CsvWriter::fmt(rep.sigma_large[r]),
                   CsvWriter::fmt(rep.differences[r])});
    csv.write(out_dir + "/monotonicity_" + mono.name + ".csv");
    meta["outputs"].push_back("monotonicity_" + mono.name + ".csv");
    meta["monotonicity"][mono.name] = {{"pass", rep.pass},
                                       {"tolerance", rep.tolerance},
                                       {"small_points", small_src.size()},
                                       {"large_points", large_src.size()}};
  }

  if (scn.piestun) {
    auto rep = piestun_counterexample(k, scn.resolution);
    CsvWriter csv({"rank", "q", "numeric_ratio", "cylinder_shell_ratio",
                   "sum_normalized", "bound_sum_normalized"});
    for (std::size_t r = 0; r < rep.q_labels.size(); ++r)
      csv.add_row({std::to_string(r + 1), std::to_string(rep.q_labels[r]),
                   CsvWriter::fmt(rep.numeric_ratio[r]),
                   CsvWriter::fmt(rep.analytic_ratio[r]),
                   CsvWriter::fmt(rep.sum_normalized[r]),
                   CsvWriter::fmt(rep.bound_sum_normalized[r])});
    csv.write(out_dir + "/piestun.csv");
    meta["outputs"].push_back("piestun.csv");
    meta["piestun"] = {{"n_bound", rep.n_bound_analytic},
                       {"n_actual", rep.n_shell_shell},
                       {"sigma0_sq", rep.sigma0_sq},
                       {"src_points", rep.n_src_points},
                       {"rcv_points", rep.n_rcv_points},
                       {"spacing", rep.spacing},
                       {"runtime_seconds", rep.runtime_seconds}};
  }
  meta["runtime_seconds"] = elapsed_since(t0);
  write_metadata(out_dir, meta);
  return 0;
}

int cmd_verify(const std::string& scenario_dir) {
  return run_acceptance(std::cout, scenario_dir) ? 0 : 1;
}

}  // namespace wavechan
