#include "momentlab/io.hpp"

#include "momentlab/errors.hpp"

#include <fstream>
#include <sstream>

namespace momentlab::io {

namespace {

const json& require(const json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return doc.at(key);
}

Eigen::Index require_index(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + ": expected an integer index");
  return v.get<Eigen::Index>();
}

Complex<double> complex_from_json(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InputError(std::string(what) + ": expected a [re, im] pair");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

LieAlgebra<double> algebra_from_json(const json& doc) {
  const auto& dim_v = require(doc, "dim", "algebra");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() <= 0) {
    throw InputError("algebra: \"dim\" must be a positive integer");
  }
  const auto n = dim_v.get<Eigen::Index>();
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& lv = doc.at("labels");
    if (!lv.is_array() || static_cast<Eigen::Index>(lv.size()) != n) {
      throw InputError("algebra: \"labels\" must list dim strings");
    }
    for (const auto& l : lv) {
      if (!l.is_string()) throw InputError("algebra: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  std::vector<StructureEntry<double>> entries;
  const auto& sv = require(doc, "structure", "algebra");
  if (!sv.is_array()) throw InputError("algebra: \"structure\" must be an array");
  for (const auto& e : sv) {
    if (!e.is_array() || e.size() != 4 || !e[3].is_number()) {
      throw InputError("algebra: structure entries are [i, j, k, value]");
    }
    entries.push_back({require_index(e[0], "algebra"), require_index(e[1], "algebra"),
                       require_index(e[2], "algebra"), e[3].get<double>()});
  }
  return LieAlgebra<double>(std::move(labels), entries);
}

json to_json(const LieAlgebra<double>& alg) {
  json structure = json::array();
  for (const auto& e : alg.entries()) structure.push_back({e.i, e.j, e.k, e.value});
  return {{"dim", alg.dim()}, {"labels", alg.labels()}, {"structure", structure}};
}

Representation<double> representation_from_json(const json& doc) {
  auto alg = algebra_from_json(require(doc, "algebra", "representation"));
  const auto& dim_v = require(doc, "dim", "representation");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() <= 0) {
    throw InputError("representation: \"dim\" must be a positive integer");
  }
  const auto d = dim_v.get<Eigen::Index>();
  const auto& gv = require(doc, "generators", "representation");
  if (!gv.is_array() || static_cast<Eigen::Index>(gv.size()) != alg.dim()) {
    throw InputError("representation: \"generators\" must hold one matrix per basis element");
  }
  std::vector<ComplexMatrix<double>> gens;
  for (const auto& g : gv) {
    if (!g.is_array() || static_cast<Eigen::Index>(g.size()) != d * d) {
      throw InputError("representation: each generator must list d*d [re, im] entries");
    }
    ComplexMatrix<double> m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) m(r, c) = complex_from_json(g[r * d + c], "representation");
    gens.push_back(std::move(m));
  }
  std::vector<Eigen::Index> valid;
  if (doc.contains("validity_subspace")) {
    const auto& vv = doc.at("validity_subspace");
    if (!vv.is_array()) throw InputError("representation: \"validity_subspace\" must be an array");
    for (const auto& m : vv) valid.push_back(require_index(m, "representation"));
    if (valid.empty()) throw InputError("representation: \"validity_subspace\" must not be empty");
  }
  return Representation<double>(std::move(alg), std::move(gens), std::move(valid));
}

json to_json(const Representation<double>& rep) {
  json gens = json::array();
  for (const auto& a : rep.generators()) {
    json flat = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c) flat.push_back({a(r, c).real(), a(r, c).imag()});
    gens.push_back(std::move(flat));
  }
  json doc = {{"algebra", to_json(rep.algebra())}, {"dim", rep.dim()}, {"generators", gens}};
  if (!rep.validity_is_full()) doc["validity_subspace"] = rep.validity_modes();
  return doc;
}

StateVector<double> state_from_json(const json& doc) {
  if (!doc.is_array() || doc.empty()) throw InputError("state: expected a nonempty array of [re, im] pairs");
  StateVector<double> x(static_cast<Eigen::Index>(doc.size()));
  for (std::size_t k = 0; k < doc.size(); ++k) x[static_cast<Eigen::Index>(k)] = complex_from_json(doc[k], "state");
  return x;
}

json state_to_json(const StateVector<double>& x) {
  json out = json::array();
  for (Eigen::Index k = 0; k < x.size(); ++k) out.push_back({x[k].real(), x[k].imag()});
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

Representation<double> load_representation(const std::string& path) {
  return representation_from_json(read_json_file(path));
}

}  // namespace momentlab::io
