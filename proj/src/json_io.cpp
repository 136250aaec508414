#include "qrdp/json_io.hpp"

#include <fstream>

#include "qrdp/errors.hpp"

namespace qrdp {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    raise(errc::bad_document, "complex entries must be [re, im] pairs");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

double number_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number())
    raise(errc::bad_document, std::string("missing numeric field '") + name + "'");
  return j[name].get<double>();
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) raise(errc::bad_document, "matrix must be a nonempty row array");
  const std::size_t n = j.size();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != n)
      raise(errc::bad_document, "matrix row " + std::to_string(r) + " must have " +
                                    std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = complex_from_json(row[c]);
  }
  if (!m.all_finite()) raise(errc::bad_document, "matrix has non-finite entries");
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries"))
    raise(errc::bad_document, "state document needs an 'entries' field");
  const ComplexMatrix m = matrix_from_json(j["entries"]);
  if (j.contains("dim") && j["dim"].get<std::size_t>() != m.dim())
    raise(errc::bad_document, "state 'dim' does not match the entries grid");
  return DensityMatrix::validate(m);
}

json state_to_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"entries", matrix_to_json(rho.mat())}};
}

Povm povm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array() ||
      j["elements"].empty())
    raise(errc::bad_document, "POVM document needs a nonempty 'elements' array");
  std::vector<ComplexMatrix> elements;
  for (const auto& el : j["elements"]) elements.push_back(matrix_from_json(el));
  const std::size_t dim = elements.front().dim();
  if (j.contains("dim") && j["dim"].get<std::size_t>() != dim)
    raise(errc::bad_document, "POVM 'dim' does not match the elements");
  return Povm(dim, std::move(elements));
}

NoiseSpec noise_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    raise(errc::bad_document, "channel document needs a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "gad") return NoiseSpec::gad(number_field(j, "p"), number_field(j, "gamma"));
  if (kind == "pd") return NoiseSpec::pd(number_field(j, "lambda"));
  if (kind == "pad")
    return NoiseSpec::pad(number_field(j, "p"), number_field(j, "gamma"),
                          number_field(j, "lambda"));
  if (kind == "dep")
    return NoiseSpec::dep(number_field(j, "p"),
                          static_cast<std::size_t>(number_field(j, "D")));
  raise(errc::bad_document, "unknown channel kind '" + kind + "'");
}

json noise_to_json(const NoiseSpec& spec) {
  json j{{"kind", noise_kind_name(spec.kind)}};
  switch (spec.kind) {
    case NoiseKind::gad:
      j["p"] = spec.p;
      j["gamma"] = spec.gamma;
      break;
    case NoiseKind::pd: j["lambda"] = spec.lambda; break;
    case NoiseKind::pad:
      j["p"] = spec.p;
      j["gamma"] = spec.gamma;
      j["lambda"] = spec.lambda;
      break;
    case NoiseKind::dep:
      j["p"] = spec.p;
      j["D"] = spec.dim;
      break;
  }
  return j;
}

ChannelDoc channel_from_json(const json& j) {
  if (j.is_object() && j.contains("kind") && j["kind"].is_string() &&
      j["kind"].get<std::string>() == "kraus") {
    if (!j.contains("ops") || !j["ops"].is_array() || j["ops"].empty())
      raise(errc::bad_document, "kraus channel needs a nonempty 'ops' array");
    std::vector<ComplexMatrix> ops;
    for (const auto& op : j["ops"]) ops.push_back(matrix_from_json(op));
    const std::size_t dim = ops.front().dim();
    return KrausChannel(dim, std::move(ops));
  }
  return noise_from_json(j);
}

RenyiOrder order_from_json(const json& j) {
  if (j.is_string()) return RenyiOrder::parse(j.get<std::string>());
  if (j.is_number()) {
    const double v = j.get<double>();
    return v == 1.0 ? RenyiOrder::one() : RenyiOrder::finite(v);
  }
  raise(errc::bad_document, "alpha entries must be numbers or 'inf'");
}

WorkloadSpec workload_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rounds") || !j["rounds"].is_array())
    raise(errc::bad_document, "workload document needs a 'rounds' array");
  WorkloadSpec spec;
  spec.k_qpus = j.contains("k_qpus") ? j["k_qpus"].get<int>() : 1;
  for (const auto& round : j["rounds"]) {
    if (!round.is_array()) raise(errc::bad_document, "each round must be a task array");
    std::vector<QpuTask> tasks;
    for (const auto& tj : round) {
      QpuTask task;
      if (!tj.contains("task_id") || !tj["task_id"].is_string())
        raise(errc::bad_document, "every task needs a string 'task_id'");
      task.task_id = tj["task_id"].get<std::string>();
      if (!tj.contains("noise")) raise(errc::bad_document, "task '" + task.task_id + "' lacks 'noise'");
      task.noise = noise_from_json(tj["noise"]);
      task.d = number_field(tj, "d");
      task.qpu = tj.contains("qpu") ? tj["qpu"].get<int>() : 1;
      if (tj.contains("mode")) {
        const std::string mode = tj["mode"].get<std::string>();
        if (mode == "exact")
          task.mode = RecordMode::exact;
        else if (mode == "intuitive")
          task.mode = RecordMode::intuitive;
        else
          raise(errc::bad_document, "task mode must be 'intuitive' or 'exact'");
      }
      if (tj.contains("rho") && tj.contains("sigma")) {
        task.pair = NeighborPair(state_from_json(tj["rho"]), state_from_json(tj["sigma"]), task.d);
      }
      if (tj.contains("povm")) task.povm = povm_from_json(tj["povm"]);
      tasks.push_back(std::move(task));
    }
    spec.rounds.push_back(std::move(tasks));
  }
  return spec;
}

SweepSpec sweep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mechanism"))
    raise(errc::bad_document, "sweep document needs a 'mechanism' field");
  SweepSpec spec;
  spec.base = noise_from_json(j["mechanism"]);
  if (!j.contains("param") || !j["param"].is_string())
    raise(errc::bad_document, "sweep document needs a string 'param'");
  spec.param = parse_swept_param(j["param"].get<std::string>());
  spec.lo = number_field(j, "lo");
  spec.hi = number_field(j, "hi");
  spec.steps = static_cast<int>(number_field(j, "steps"));
  spec.d = number_field(j, "d");
  if (!j.contains("alphas") || !j["alphas"].is_array() || j["alphas"].empty())
    raise(errc::bad_document, "sweep document needs a nonempty 'alphas' array");
  for (const auto& a : j["alphas"]) spec.alphas.push_back(order_from_json(a));
  spec.validate();
  return spec;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::bad_document, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(errc::bad_document, "cannot parse '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace qrdp
