// Copyright 2026 The maqaoa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file gate_sequence.hpp
 * Circuit-ordered list of the active Pauli rotations of a parameter set.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "maqaoa/pauli.hpp"

namespace maqaoa {

class ParamSet;

/// exp(-i * params[param_index] * generator).
struct Gate {
    PauliString generator;
    std::size_t param_index{0};
};

using GateSequence = std::vector<Gate>;

/// Layer by layer: cost gates in term order, then mixers by qubit. Inactive
/// parameters are skipped.
[[nodiscard]] GateSequence build_gate_sequence(const ParamSet &params);

/// Throws LayoutError unless every gate addresses a distinct, active
/// parameter of `params` whose layout generator matches the gate.
void validate_gates(const GateSequence &gates, const ParamSet &params);

} // namespace maqaoa
