#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "qrdp/accountant.hpp"
#include "qrdp/channels.hpp"
#include "qrdp/measurement.hpp"
#include "qrdp/state.hpp"
#include "qrdp/sweep.hpp"

namespace qrdp {

// Document formats. Complex numbers are always two-element [re, im] arrays;
// matrices are row-major nested arrays of them.
//
//   state:    {"dim": 2, "entries": [[[re,im], ...], ...]}
//   povm:     {"dim": 2, "elements": [entries, ...]}
//   channel:  {"kind": "gad"|"pd"|"pad"|"dep", "p": .., "gamma": ..,
//              "lambda": .., "D": ..}   (unused fields omitted)
//             or {"kind": "kraus", "ops": [entries, ...]}
//   workload: {"k_qpus": 3, "rounds": [[{"task_id": "..", "noise": channel,
//              "d": 0.1, "qpu": 1}, ...], ...]}
//   sweep:    {"mechanism": channel, "param": "gamma", "lo": 0.1, "hi": 0.9,
//              "steps": 9, "alphas": [2, 4, "inf"], "d": 0.1}

ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

DensityMatrix state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const DensityMatrix& rho);

Povm povm_from_json(const nlohmann::json& j);

// Either a parameterized mechanism or a raw Kraus operator set.
using ChannelDoc = std::variant<NoiseSpec, KrausChannel>;
ChannelDoc channel_from_json(const nlohmann::json& j);
NoiseSpec noise_from_json(const nlohmann::json& j);  // rejects "kraus"
nlohmann::json noise_to_json(const NoiseSpec& spec);

WorkloadSpec workload_from_json(const nlohmann::json& j);

SweepSpec sweep_from_json(const nlohmann::json& j);

RenyiOrder order_from_json(const nlohmann::json& j);

// Parses a file, mapping stream and syntax errors onto BadDocument.
nlohmann::json load_json_file(const std::string& path);

}  // namespace qrdp
