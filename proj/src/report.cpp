#include "momentlab/harness.hpp"

#include "momentlab/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace momentlab::harness {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json survey_to_json(const SurveyReport& s) {
  json records = json::array();
  for (const auto& r : s.records) {
    records.push_back({{"sample_index", r.index},
                       {"state_digest", r.state_digest},
                       {"mu", r.mu},
                       {"casimir", r.casimir},
                       {"norm", r.norm}});
  }
  return {{"representation", s.representation},
          {"casimir", s.casimir},
          {"algebra_dim", s.algebra_dim},
          {"config",
           {{"kind", s.config.kind},
            {"count", s.config.count},
            {"length", s.config.length},
            {"scale", s.config.scale},
            {"seed", s.config.seed}}},
          {"sample_count", s.sample_count()},
          {"records", records},
          {"aggregates",
           {{"min", s.aggregates.min},
            {"max", s.aggregates.max},
            {"mean", s.aggregates.mean},
            {"spread", s.aggregates.spread()},
            {"histogram", s.aggregates.histogram}}}};
}

std::string survey_csv(const SurveyReport& s) {
  std::ostringstream out;
  out << "sample_index,casimir";
  for (Eigen::Index i = 1; i <= s.algebra_dim; ++i) out << ",mu_" << i;
  out << ",norm\n";
  for (const auto& r : s.records) {
    out << r.index << ',' << format_double(r.casimir);
    for (double m : r.mu) out << ',' << format_double(m);
    out << ',' << format_double(r.norm) << '\n';
  }
  return out.str();
}

}  // namespace

json report_to_json(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"operation", c.operation},
                      {"inputs_digest", c.inputs_digest},
                      {"defect", c.defect},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  json doc = {{"tool_version", kToolVersion},
              {"config", report.config},
              {"experiment", report.experiment},
              {"representation", report.representation},
              {"results", checks},
              {"pass", report.pass()}};
  if (report.survey) doc["survey"] = survey_to_json(*report.survey);
  if (!report.expectation.empty()) {
    json rows = json::array();
    for (const auto& r : report.expectation) {
      rows.push_back({{"mu_Q", r.mu_q},
                      {"mu_P", r.mu_p},
                      {"mu_Z", r.mu_z},
                      {"half_position", r.half_position},
                      {"half_momentum", r.half_momentum},
                      {"defect", r.defect()}});
    }
    doc["expectation"] = rows;
  }
  return doc;
}

std::string serialize_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(report).dump(2) + "\n";

  if (report.survey) {
    return survey_csv(*report.survey);
  }
  std::ostringstream out;
  if (!report.expectation.empty()) {
    out << "state_index,mu_Q,mu_P,mu_Z,half_position,half_momentum,defect\n";
    for (std::size_t i = 0; i < report.expectation.size(); ++i) {
      const auto& r = report.expectation[i];
      out << i << ',' << format_double(r.mu_q) << ',' << format_double(r.mu_p) << ',' << format_double(r.mu_z) << ','
          << format_double(r.half_position) << ',' << format_double(r.half_momentum) << ','
          << format_double(r.defect()) << '\n';
    }
    return out.str();
  }
  out << "operation,inputs_digest,defect,tolerance,pass\n";
  for (const auto& c : report.checks) {
    out << c.operation << ',' << c.inputs_digest << ',' << format_double(c.defect) << ','
        << format_double(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

void emit_report(const Report& report, const std::string& path, ReportFormat format) {
  const auto text = serialize_report(report, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write report to '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw IoError("I/O error while writing '" + path + "'");
}

}  // namespace momentlab::harness
