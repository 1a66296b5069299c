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
#include "maqaoa/gate_sequence.hpp"

#include <string>

#include "maqaoa/ansatz.hpp"
#include "maqaoa/errors.hpp"

namespace maqaoa {

GateSequence build_gate_sequence(const ParamSet &params) {
    GateSequence gates;
    const auto &layout = params.layout();
    gates.reserve(params.n_active());
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params.active(i)) {
            gates.push_back({layout.generator(i), i});
        }
    }
    return gates;
}

void validate_gates(const GateSequence &gates, const ParamSet &params) {
    const auto &layout = params.layout();
    std::vector<bool> seen(params.size(), false);
    for (const auto &g : gates) {
        if (g.param_index >= params.size()) {
            throw LayoutError("gate addresses parameter " +
                              std::to_string(g.param_index) +
                              " beyond dimension " + std::to_string(params.size()));
        }
        if (seen[g.param_index]) {
            throw LayoutError("parameter " + std::to_string(g.param_index) +
                              " drives more than one gate");
        }
        seen[g.param_index] = true;
        if (!params.active(g.param_index)) {
            throw LayoutError("gate for inactive parameter " +
                              std::to_string(g.param_index));
        }
        if (g.generator != layout.generator(g.param_index)) {
            throw LayoutError("gate generator " + g.generator.to_string() +
                              " does not match layout entry " +
                              std::to_string(g.param_index));
        }
    }
}

} // namespace maqaoa
