// Copyright 2026 The domlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOMLAB_REPORT_IO_H_
#define DOMLAB_REPORT_IO_H_

#include <span>
#include <string>

#include "json.hpp"

#include "domlab/dom_solver.h"
#include "domlab/exact_oracle.h"
#include "domlab/experiment.h"
#include "domlab/log_real.h"
#include "domlab/moments.h"
#include "domlab/symmetry_map.h"

namespace domlab {

// {"decimal": "4.98339843750", "sign": 1, "log": 1.6060...}
nlohmann::json to_json(const LogReal& x);
nlohmann::json to_json(const ModelParams& params);
nlohmann::json to_json(const MomentReport& report);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const SolveCounts& counts);
nlohmann::json to_json(const InstanceClass& cls);
nlohmann::json to_json(const MappingCertificate& cert);
nlohmann::json to_json(const SandwichReport& report);
nlohmann::json to_json(const IrreducibilityReport& report);
nlohmann::json to_json(const AuditReport& report);

// One "key=value" line per field; LogReal fields expand to key, key.sign,
// key.log.
std::string to_key_value(const MomentReport& report);
std::string to_key_value(const OracleReport& report);

// One row per trial. Certificate columns are empty for trials without one.
std::string trials_csv(std::span<const TrialRecord> records, bool with_timing);
std::string audit_csv(const AuditReport& report);

}  // namespace domlab

#endif  // DOMLAB_REPORT_IO_H_
