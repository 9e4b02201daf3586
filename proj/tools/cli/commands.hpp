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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssrdual/ssrdual.hpp"

namespace ssrdual::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SweepRow {
  double p;
  double min_pt_eigenvalue;
  double negativity;
  bool frame_separable;
  double siv_closed_form;  // unnormalized
  double siv_minimizer;    // factor_four

  // siv_minimizer / siv_closed_form, absent where the closed form is zero.
  std::optional<double> siv_ratio() const;
};

inline constexpr const char* kCsvHeader =
    "p,min_pt_eigenvalue,negativity,frame_separable,siv_closed_form,siv_minimizer";

struct SweepConfig {
  double p_min = 0.0;
  double p_max = 1.0;
  int steps = 21;
  SivOptions siv;
  bool timestamp = true;
};

// Throws UsageError for an invalid range or step count.
std::vector<SweepRow> compute_sweep(const SweepConfig& config);
SweepRow compute_row(double p, const SivOptions& siv);

// 12 significant digits, lowercase exponent, no negative zero.
std::string format_number(double x);
// x rounded through format_number, so JSON and CSV agree digit for digit.
double round12(double x);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
nlohmann::ordered_json manifest_json(const SweepConfig& config);
nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows, const SweepConfig& config);

int cmd_demo(double p, std::ostream& out);
// Writes `out_path` (and, for csv, `out_path`.manifest.json). Throws
// UsageError on bad arguments or an unwritable path.
int cmd_sweep(const SweepConfig& config, const std::string& out_path, const std::string& format,
              std::ostream& log);
int cmd_threshold(double tol, std::ostream& out);
int cmd_twirl(const std::string& state_name, bool dump_matrix, std::ostream& out);

struct NamedState {
  std::string description;
  ComplexMatrix rho;
  QubitFactorization fact;
  PartyLayout layout;
  ChargeAssignment charges;
};

// two-copies, rho-p:<p>, pdc-dist-pol, pdc-dist-mom, hyper. Throws
// UsageError for anything else.
NamedState named_state(const std::string& name);

}  // namespace ssrdual::cli
