// Copyright 2026 The ssrdual Authors
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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ssrdual::cli {

std::optional<double> SweepRow::siv_ratio() const {
  if (siv_closed_form == 0.0) return std::nullopt;
  return siv_minimizer / siv_closed_form;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
  return buf;
}

double round12(double x) { return std::stod(format_number(x)); }

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

void check_probability(double p, const char* flag) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw UsageError(std::string(flag) + " must lie in [0, 1], got " + format_number(p));
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// "|alice|bob>" for kets, "<alice|bob|" for bras.
std::string basis_label(std::size_t index, const QubitFactorization& fact,
                        const PartyLayout& layout, bool bra) {
  std::string s = bra ? "<" : "|";
  for (auto slot : layout.alice()) s += static_cast<char>('0' + fact.bit(index, slot));
  s += "|";
  for (auto slot : layout.bob()) s += static_cast<char>('0' + fact.bit(index, slot));
  s += bra ? "|" : ">";
  return s;
}

}  // namespace

SweepRow compute_row(double p, const SivOptions& siv) {
  const FramedSystem sys = system_with_frame(p);
  const PptReport dual =
      ppt_report_effective(sys.rho, sys.fact, sys.layout, ChargeAssignment::every_slot());
  const PptReport frame = ppt_report(werner(p), QubitFactorization(2), two_qubit_layout());
  const ComplexMatrix n_a = local_charge_operator(QubitFactorization(2), two_qubit_layout(),
                                                  Party::Alice, ChargeAssignment::every_slot());
  return SweepRow{p,
                  dual.min_eigenvalue,
                  dual.negativity,
                  !frame.entangled,
                  werner_siv_closed_form(p).value,
                  siv_formation(werner(p), n_a, ChargeAssignment::every_slot(), siv).value};
}

std::vector<SweepRow> compute_sweep(const SweepConfig& config) {
  check_probability(config.p_min, "--p-min");
  check_probability(config.p_max, "--p-max");
  if (config.p_min > config.p_max) throw UsageError("--p-min must not exceed --p-max");
  if (config.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(config.siv.tol > 0.0)) throw UsageError("--tol must be positive");

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(config.steps));
  const double span = config.p_max - config.p_min;
  for (int k = 0; k < config.steps; ++k) {
    const double p = k + 1 == config.steps ? config.p_max
                                           : config.p_min + span * k / (config.steps - 1);
    rows.push_back(compute_row(p, config.siv));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.p) << ',' << format_number(r.min_pt_eigenvalue) << ','
        << format_number(r.negativity) << ',' << bool_text(r.frame_separable) << ','
        << format_number(r.siv_closed_form) << ',' << format_number(r.siv_minimizer) << '\n';
  }
}

nlohmann::ordered_json manifest_json(const SweepConfig& config) {
  nlohmann::ordered_json m;
  m["artifact"] = "ssrdual";
  m["version"] = kVersion;
  m["seed"] = config.siv.seed;
  m["tolerances"] = {{"structural", kStructuralTol},
                     {"spectral", kSpectralTol},
                     {"entanglement_threshold", kEntanglementThreshold},
                     {"minimizer", config.siv.tol}};
  m["minimizer"] = {{"restarts", config.siv.restarts},
                    {"max_iterations", config.siv.max_iterations},
                    {"output_factor", config.siv.output_factor}};
  m["conventions"] = {{"siv_closed_form", to_string(SivConvention::Unnormalized)},
                      {"siv_minimizer", to_string(SivConvention::FactorFour)}};
  m["sweep"] = {{"p_min", config.p_min}, {"p_max", config.p_max}, {"steps", config.steps}};
  if (config.timestamp) m["timestamp"] = utc_timestamp();
  return m;
}

nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows, const SweepConfig& config) {
  nlohmann::ordered_json doc;
  doc["manifest"] = manifest_json(config);
  auto& arr = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["p"] = round12(r.p);
    row["min_pt_eigenvalue"] = round12(r.min_pt_eigenvalue);
    row["negativity"] = round12(r.negativity);
    row["frame_separable"] = r.frame_separable;
    row["siv_closed_form"] = round12(r.siv_closed_form);
    row["siv_minimizer"] = round12(r.siv_minimizer);
    row["siv_closed_form_convention"] = to_string(SivConvention::Unnormalized);
    row["siv_minimizer_convention"] = to_string(SivConvention::FactorFour);
    if (auto ratio = r.siv_ratio()) {
      row["siv_ratio"] = round12(*ratio);
    } else {
      row["siv_ratio"] = nullptr;
    }
    arr.push_back(std::move(row));
  }
  return doc;
}

int cmd_sweep(const SweepConfig& config, const std::string& out_path, const std::string& format,
              std::ostream& log) {
  if (format != "csv" && format != "json") {
    throw UsageError("--format must be csv or json, got '" + format + "'");
  }
  const auto rows = compute_sweep(config);

  const auto open = [](const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write '" + path + "'");
    return f;
  };
  if (format == "csv") {
    auto f = open(out_path);
    write_csv(f, rows);
    auto m = open(out_path + ".manifest.json");
    m << manifest_json(config).dump(2) << '\n';
  } else {
    auto f = open(out_path);
    f << sweep_json(rows, config).dump(2) << '\n';
  }

  log << "wrote " << rows.size() << " rows to " << out_path << "\n";
  log << "p  siv_minimizer/siv_closed_form (factor_four / unnormalized)\n";
  for (const auto& r : rows) {
    const auto ratio = r.siv_ratio();
    log << format_number(r.p) << "  " << (ratio ? format_number(*ratio) : "n/a") << '\n';
  }
  return kExitOk;
}

int cmd_demo(double p, std::ostream& out) {
  check_probability(p, "--p");
  int failures = 0;
  const auto verdict = [&](int id, bool ok, const std::string& what, const std::string& detail) {
    out << "[" << id << "] " << what << ": " << detail << " -> " << (ok ? "PASS" : "FAIL") << '\n';
    if (!ok) ++failures;
  };
  const auto neg = [](const PptReport& r) { return format_number(r.negativity); };

  out << "entangled means min partial-transpose eigenvalue < " << format_number(kEntanglementThreshold)
      << " (states with p below ~4e-10 report not entangled)\n";

  const DualityCheck bos = check_duality(pdc_bosonic());
  verdict(1, bos.holds(), "bosonic pair, duality under both labelings",
          "negativity momentum=" + neg(bos.momentum) + " polarization=" + neg(bos.polarization));

  const DualityCheck dist = check_duality(pdc_distinguishable());
  verdict(2, dist.momentum.entangled && !dist.polarization.entangled,
          "distinguishable pair, duality absent without a frame",
          "negativity momentum=" + neg(dist.momentum) + " polarization=" + neg(dist.polarization));

  const DualityCheck sym = check_duality(symmetrized_distinguishable());
  verdict(3, sym.holds(), "symmetrized distinguishable pair, duality restored",
          "negativity momentum=" + neg(sym.momentum) + " polarization=" + neg(sym.polarization));

  const FramedSystem sys = system_with_frame(p);
  const PptReport dual =
      ppt_report_effective(sys.rho, sys.fact, sys.layout, ChargeAssignment::every_slot());
  const DualityCertificate cert = duality_certificate(p);
  std::string detail = "p=" + format_number(p) + " frame " +
                       (cert.frame_separable ? "separable" : "entangled") + ", twirled rho_p " +
                       (cert.dual_entangled ? "entangled" : "not entangled") +
                       " (min PT eigenvalue " + format_number(dual.min_eigenvalue) + ")";
  if (!cert.dual_entangled) detail += "; a frame without coherence cannot activate the dual form";
  if (!cert.frame_separable) detail += "; the frame itself is entangled, choose p < 1/3";
  verdict(4, cert.frame_separable && cert.dual_entangled,
          "Werner reference frame activates duality", detail);

  if (failures) {
    out << failures << " check(s) failed\n";
    return kExitCheckFailed;
  }
  out << "all checks passed\n";
  return kExitOk;
}

int cmd_threshold(double tol, std::ostream& out) {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  const double p_star = werner_ppt_threshold(tol);
  const SivReport bound = werner_siv_closed_form(p_star);
  out << "werner_ppt_threshold " << format_number(p_star) << " (tol " << format_number(tol)
      << ")\n";
  out << "siv_bound " << format_number(bound.value) << " (" << to_string(bound.convention)
      << "; " << format_number(bound.value_in(SivConvention::FactorFour)) << " "
      << to_string(SivConvention::FactorFour) << ")\n";
  return kExitOk;
}

NamedState named_state(const std::string& name) {
  if (name == "two-copies") {
    const FramedSystem sys = system_with_frame(1.0);
    return {"two copies of psi, slots (A_sys, A_ref | B_sys, B_ref)", two_copies().projector(),
            sys.fact, sys.layout, ChargeAssignment::every_slot()};
  }
  if (name.rfind("rho-p:", 0) == 0) {
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(name.substr(6), &used);
      if (used != name.size() - 6) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("cannot parse p in '" + name + "'");
    }
    check_probability(p, "rho-p");
    FramedSystem sys = system_with_frame(p);
    return {"rho_p with Werner frame p=" + format_number(p) +
                ", slots (A_sys, A_ref | B_sys, B_ref)",
            std::move(sys.rho), sys.fact, sys.layout, ChargeAssignment::every_slot()};
  }
  if (name == "pdc-dist-pol" || name == "pdc-dist-mom") {
    const LabelDoF label = name == "pdc-dist-pol" ? LabelDoF::Polarization : LabelDoF::Momentum;
    LabeledBipartiteState s = relabel(pdc_distinguishable(), label);
    return {std::string("distinguishable pair labelled by ") + to_string(label) +
                ", slots (other, species | other, species)",
            std::move(s.rho), s.fact, s.layout, s.charges};
  }
  if (name == "hyper") {
    const QubitFactorization fact(4);
    return {"hyper-entangled pair, slots (pol1, mom1 | pol2, mom2); species fixed per particle",
            hyper_state().projector(), fact, PartyLayout({0, 2}, {1, 3}, fact),
            ChargeAssignment::on_slots({})};
  }
  throw UsageError("unknown state '" + name +
                   "' (expected two-copies, rho-p:<p>, pdc-dist-pol, pdc-dist-mom, hyper)");
}

int cmd_twirl(const std::string& state_name, bool dump_matrix, std::ostream& out) {
  const NamedState s = named_state(state_name);
  const ComplexMatrix eff = twirl(s.rho, s.fact, s.layout, s.charges);

  out << "state: " << state_name << " -- " << s.description << '\n';
  out << "effective (twirled) matrix, nonzero entries:\n";
  for (std::size_t i = 0; i < eff.dim(); ++i)
    for (std::size_t j = 0; j < eff.dim(); ++j)
      if (std::abs(eff(i, j)) > kStructuralTol) {
        out << "  " << basis_label(i, s.fact, s.layout, false)
            << basis_label(j, s.fact, s.layout, true) << "  " << format_entry(eff(i, j)) << '\n';
      }
  if (dump_matrix) {
    out << "matrix:\n";
    dump(out, eff);
  }

  const SectorDecomposition dec = sectors(eff, s.fact, s.layout, s.charges);
  out << "sectors: q_alice q_bob dim trace\n";
  for (const auto& sec : dec.sectors) {
    out << "  " << sec.q_alice << ' ' << sec.q_bob << ' ' << sec.indices.size() << ' '
        << format_number(sec.block.trace().real()) << '\n';
  }
  return kExitOk;
}

}  // namespace ssrdual::cli
