// Copyright 2026 The bell_lab Authors
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

#ifndef BELL_LAB_JSON_IO_H
#define BELL_LAB_JSON_IO_H

#include <nlohmann/json.hpp>

#include "bell_lab/behavior.h"
#include "bell_lab/covariance.h"
#include "bell_lab/freewill.h"
#include "bell_lab/local_polytope.h"
#include "bell_lab/quantum.h"
#include "bell_lab/randomness.h"

namespace bell_lab {

// File formats. Tables nest in index order, e.g. behavior "p"[x][y][a][b].
// Parsers throw Error(kParse) on malformed documents and the type's own
// validation errors on well-formed but invalid content.

nlohmann::json to_json(const Scenario &scenario);
Scenario scenario_from_json(const nlohmann::json &j);

/// {"scenario": {...}, "p": [x][y][a][b]}
nlohmann::json to_json(const Behavior &behavior);
Behavior behavior_from_json(const nlohmann::json &j);

/// {"scenario": {...}, "coeffs": [x][y][a][b], "localBound"?, "algebraicBound"?}
nlohmann::json to_json(const BellExpression &expr);
BellExpression expression_from_json(const nlohmann::json &j);

nlohmann::json to_json(const DeterministicStrategy &strategy);
nlohmann::json to_json(const LocalMembershipResult &result);
LocalMembershipResult membership_from_json(const nlohmann::json &j);

/// {"alice": [[x,y,z], ...], "bob": [[x,y,z], ...]}
nlohmann::json to_json(const MeasurementSettings &settings);
MeasurementSettings settings_from_json(const nlohmann::json &j);
std::vector<BlochVector> directions_from_json(const nlohmann::json &j);

/// {"rho": [[[re, im] x4] x4]}
nlohmann::json to_json(const TwoQubitState &state);
TwoQubitState state_from_json(const nlohmann::json &j);

/// {"scenario", "lambdaCount", "prior": [...], "F_AB": [x][l], "S_AB": [x][y][l],
///  "F_BA": [y][l], "S_BA": [x][y][l]}
nlohmann::json to_json(const CovariantModel &model);
CovariantModel covariant_model_from_json(const nlohmann::json &j);

nlohmann::json to_json(const Estimate &estimate);

/// {"inputAlphabet", "outputAlphabet", "rounds", "chshValue", "testFraction"?}; derived
/// bit counts are recomputed on read.
nlohmann::json to_json(const ExpansionStage &stage);
ExpansionStage stage_from_json(const nlohmann::json &j);

/// {"stages": [...], "totalIn", "totalOut", "factor", ...}
nlohmann::json to_json(const ChainReport &report);

}  // namespace bell_lab

#endif
