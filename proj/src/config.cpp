#include "momentlab/harness.hpp"

#include "momentlab/io.hpp"

#include <array>
#include <cmath>
#include <set>

namespace momentlab::harness {

namespace {

constexpr std::array<std::pair<ExperimentKind, const char*>, 8> kExperimentNames{{
    {ExperimentKind::validity, "validity"},
    {ExperimentKind::equivariance, "equivariance"},
    {ExperimentKind::rank, "rank"},
    {ExperimentKind::cocycle, "cocycle"},
    {ExperimentKind::pullback, "pullback"},
    {ExperimentKind::sphere_survey, "sphere-survey"},
    {ExperimentKind::orbit_survey, "orbit-survey"},
    {ExperimentKind::expectation, "expectation"},
}};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& prefix) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(prefix + key, "unknown field \"" + prefix + key + "\"");
  }
}

std::size_t positive_count(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ConfigError(field, "\"" + field + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

double positive_real(const json& v, const std::string& field) {
  if (!v.is_number() || !(v.get<double>() > 0) || !std::isfinite(v.get<double>())) {
    throw ConfigError(field, "\"" + field + "\" must be a positive number");
  }
  return v.get<double>();
}

void validate_rep(const json& rep, const std::string& field) {
  if (!rep.is_object()) throw ConfigError(field, "\"" + field + "\" must be an object");
  if (!rep.contains("kind") || !rep.at("kind").is_string()) {
    throw ConfigError(field + ".kind", "\"" + field + ".kind\" is required");
  }
  const auto kind = rep.at("kind").get<std::string>();
  const std::string prefix = field + ".";
  if (kind == "su2") {
    reject_unknown(rep, {"kind", "j"}, prefix);
    const auto& j = rep.contains("j") ? rep.at("j") : json();
    if (!j.is_number() || j.get<double>() < 0 || std::abs(2 * j.get<double>() - std::round(2 * j.get<double>())) > 1e-12) {
      throw ConfigError(prefix + "j", "\"" + prefix + "j\" must be a nonnegative half-integer");
    }
  } else if (kind == "heisenberg") {
    reject_unknown(rep, {"kind", "N"}, prefix);
    const auto& n = rep.contains("N") ? rep.at("N") : json();
    if (!n.is_number_integer() || n.get<long long>() < 4) {
      throw ConfigError(prefix + "N", "\"" + prefix + "N\" must be an integer >= 4");
    }
  } else if (kind == "circle") {
    reject_unknown(rep, {"kind", "k"}, prefix);
    if (!rep.contains("k") || !rep.at("k").is_number_integer()) {
      throw ConfigError(prefix + "k", "\"" + prefix + "k\" must be an integer");
    }
  } else if (kind == "direct_sum") {
    reject_unknown(rep, {"kind", "parts"}, prefix);
    if (!rep.contains("parts") || !rep.at("parts").is_array() || rep.at("parts").empty()) {
      throw ConfigError(prefix + "parts", "\"" + prefix + "parts\" must be a nonempty array");
    }
    for (std::size_t i = 0; i < rep.at("parts").size(); ++i) {
      validate_rep(rep.at("parts")[i], prefix + "parts[" + std::to_string(i) + "]");
    }
  } else if (kind == "custom") {
    reject_unknown(rep, {"kind", "path"}, prefix);
    if (!rep.contains("path") || !rep.at("path").is_string()) {
      throw ConfigError(prefix + "path", "\"" + prefix + "path\" must be a string");
    }
  } else {
    throw ConfigError(prefix + "kind", "unknown representation kind \"" + kind + "\"");
  }
}

catalog::Spec catalog_spec(const json& rep) {
  const auto kind = rep.at("kind").get<std::string>();
  if (kind == "su2") return {catalog::Su2Spin{static_cast<int>(std::lround(2 * rep.at("j").get<double>()))}};
  if (kind == "heisenberg") return {catalog::HeisenbergTruncated{rep.at("N").get<int>()}};
  if (kind == "circle") return {catalog::Circle{rep.at("k").get<int>()}};
  catalog::DirectSum sum;
  for (const auto& p : rep.at("parts")) sum.parts.push_back(catalog_spec(p));
  return {sum};
}

bool contains_custom(const json& rep) {
  if (rep.at("kind") == "custom") return true;
  if (rep.at("kind") == "direct_sum") {
    for (const auto& p : rep.at("parts"))
      if (contains_custom(p)) return true;
  }
  return false;
}

Representation<double> build_rep(const json& rep) {
  const auto kind = rep.at("kind").get<std::string>();
  if (kind == "custom") return io::load_representation(rep.at("path").get<std::string>());
  if (kind == "direct_sum" && contains_custom(rep)) {
    std::vector<Representation<double>> parts;
    for (const auto& p : rep.at("parts")) parts.push_back(build_rep(p));
    return catalog::direct_sum(parts);
  }
  return catalog::build<double>(catalog_spec(rep));
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kExperimentNames)
    if (k == kind) return name;
  return "unknown";
}

std::string to_string(ReportFormat format) { return format == ReportFormat::csv ? "csv" : "json"; }

ReportFormat parse_format(const std::string& text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw ConfigError("format", "\"format\" must be \"csv\" or \"json\"");
}

Representation<double> build_representation(const json& rep_spec) {
  validate_rep(rep_spec, "rep");
  return build_rep(rep_spec);
}

ExperimentConfig parse_config(const std::string& text, std::uint64_t default_seed) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", "config parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  reject_unknown(doc,
                 {"rep", "experiment", "samples", "trials", "words", "length", "scale", "seed", "casimir", "x0",
                  "tolerances", "out", "format"},
                 "");

  ExperimentConfig cfg;
  if (!doc.contains("rep")) throw ConfigError("rep", "\"rep\" is required");
  validate_rep(doc.at("rep"), "rep");
  cfg.rep.document = doc.at("rep");

  if (!doc.contains("experiment") || !doc.at("experiment").is_string()) {
    throw ConfigError("experiment", "\"experiment\" is required");
  }
  const auto name = doc.at("experiment").get<std::string>();
  bool found = false;
  for (const auto& [k, n] : kExperimentNames) {
    if (name == n) {
      cfg.experiment = k;
      found = true;
    }
  }
  if (!found) throw ConfigError("experiment", "unknown experiment \"" + name + "\"");

  switch (cfg.experiment) {
    case ExperimentKind::sphere_survey:
      cfg.samples = 1000;
      break;
    case ExperimentKind::expectation:
      cfg.samples = 20;
      break;
    default:
      break;
  }
  if (doc.contains("samples")) cfg.samples = positive_count(doc.at("samples"), "samples");
  if (doc.contains("trials")) cfg.trials = positive_count(doc.at("trials"), "trials");
  if (doc.contains("words")) cfg.words = positive_count(doc.at("words"), "words");
  if (doc.contains("length")) cfg.length = static_cast<int>(positive_count(doc.at("length"), "length"));
  if (doc.contains("scale")) cfg.scale = positive_real(doc.at("scale"), "scale");

  cfg.seed = default_seed;
  if (doc.contains("seed")) {
    const auto& s = doc.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      throw ConfigError("seed", "\"seed\" must be a nonnegative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }

  if (doc.contains("casimir")) {
    if (!doc.at("casimir").is_string()) throw ConfigError("casimir", "\"casimir\" must be a string");
    const auto c = doc.at("casimir").get<std::string>();
    if (c != "su2_quadratic" && c != "heisenberg_center") {
      throw ConfigError("casimir", "unknown Casimir \"" + c + "\"");
    }
    cfg.casimir = c;
  }
  if (doc.contains("x0")) {
    try {
      cfg.x0 = io::state_from_json(doc.at("x0"));
    } catch (const InputError& e) {
      throw ConfigError("x0", std::string("\"x0\": ") + e.what());
    }
  }

  if (doc.contains("tolerances")) {
    const auto& t = doc.at("tolerances");
    if (!t.is_object()) throw ConfigError("tolerances", "\"tolerances\" must be an object");
    reject_unknown(t, {"defect", "rank", "fd_step", "equivariance", "pullback", "orbit_spread", "validity", "expectation"},
                   "tolerances.");
    auto& tol = cfg.tolerances;
    auto read = [&t](const char* key, double& into) {
      if (t.contains(key)) into = positive_real(t.at(key), std::string("tolerances.") + key);
    };
    read("defect", tol.defect);
    read("rank", tol.rank);
    read("fd_step", tol.fd_step);
    read("pullback", tol.pullback);
    read("orbit_spread", tol.orbit_spread);
    read("validity", tol.validity);
    read("expectation", tol.expectation);
    if (t.contains("equivariance")) tol.equivariance = positive_real(t.at("equivariance"), "tolerances.equivariance");
  }

  if (doc.contains("out")) {
    if (!doc.at("out").is_string()) throw ConfigError("out", "\"out\" must be a string");
    cfg.out = doc.at("out").get<std::string>();
  }
  if (doc.contains("format")) {
    if (!doc.at("format").is_string()) throw ConfigError("format", "\"format\" must be a string");
    cfg.format = parse_format(doc.at("format").get<std::string>());
  }
  return cfg;
}

json ExperimentConfig::echo() const {
  json t = {{"defect", tolerances.defect},         {"rank", tolerances.rank},
            {"fd_step", tolerances.fd_step},       {"pullback", tolerances.pullback},
            {"orbit_spread", tolerances.orbit_spread}, {"validity", tolerances.validity},
            {"expectation", tolerances.expectation}};
  if (tolerances.equivariance) t["equivariance"] = *tolerances.equivariance;
  json doc = {{"rep", rep.document},
              {"experiment", to_string(experiment)},
              {"samples", samples},
              {"trials", trials},
              {"words", words},
              {"length", length},
              {"scale", scale},
              {"seed", seed},
              {"tolerances", t},
              {"format", to_string(format)}};
  if (casimir) doc["casimir"] = *casimir;
  if (x0) doc["x0"] = io::state_to_json(*x0);
  return doc;
}

}  // namespace momentlab::harness
