#include "sidon/report.hpp"

#include <fstream>
#include <sstream>

#include "sidon/error.hpp"

namespace sidon {

Json index_set_json(IndexSet subset) {
  Json out = Json::array();
  for (std::size_t p : subset.positions()) out.push_back(p);
  return out;
}

Json integers_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const Integer& v : values) out.push_back(to_decimal(v));
  return out;
}

Json form_report_json(const LinearForm& form, const PropertyNReport& report) {
  Json out;
  out["property_N"] = report.holds;
  if (report.witness) {
    out["witness"] = {{"I1", index_set_json(report.witness->first)},
                      {"I2", index_set_json(report.witness->second)},
                      {"sum", to_decimal(report.witness->common_sum)}};
  }
  if (report.vanishing_subset) out["vanishing_subset"] = index_set_json(*report.vanishing_subset);
  out["C"] = to_decimal(form.norm());
  out["h"] = form.arity();
  return out;
}

Json sidon_report_json(const SidonReport& report) {
  Json out;
  out["sidon"] = report.sidon;
  if (report.witness) {
    out["witness"] = {{"tuple1", integers_json(report.witness->first)},
                      {"tuple2", integers_json(report.witness->second)},
                      {"value", to_decimal(report.witness->value)}};
  }
  out["distinct"] = report.distinct;
  out["total"] = report.total;
  return out;
}

Json extension_report_json(const ExtensionReport& report) {
  Json out;
  out["extendable"] = report.extendable;
  if (report.conflict) {
    const TranslateConflict& c = *report.conflict;
    out["conflict"] = {{"J1", index_set_json(c.first_subset)},
                       {"J2", index_set_json(c.second_subset)},
                       {"value", to_decimal(c.value)},
                       {"tuple1", integers_json(c.first_tuple)},
                       {"tuple2", integers_json(c.second_tuple)}};
  }
  return out;
}

Json growth_check_json(const GrowthCheck& check) {
  Json out;
  out["pass"] = check.pass();
  out["C"] = to_decimal(check.norm);
  out["m"] = to_decimal(check.m);
  if (check.first_violation) {
    out["first_violation"] = {
        {"k", check.first_violation->k},
        {"kind", check.first_violation->kind == GrowthViolation::Kind::kStart ? "start" : "growth"}};
  }
  return out;
}

Json certificate_json(const WindowCertificate& certificate) {
  return {{"s", certificate.s},
          {"t", certificate.t},
          {"lhs", to_decimal(certificate.lhs)},
          {"rhs", to_decimal(certificate.rhs)},
          {"m0", to_decimal(certificate.m0)},
          {"contradiction", certificate.contradiction()}};
}

Json refutation_json(const std::optional<WindowCertificate>& certificate) {
  Json out;
  out["found"] = certificate.has_value();
  if (certificate) out["certificate"] = certificate_json(*certificate);
  return out;
}

Json density_json(const DensityCheck& check) {
  Json out;
  out["pass"] = check.pass();
  out["epsilon"] = to_string(check.epsilon);
  out["violation_count"] = check.violation_count;
  Json list = Json::array();
  for (const DensityViolation& v : check.violations) list.push_back({{"s", v.s}, {"t", v.t}});
  out["violations"] = std::move(list);
  return out;
}

Json trace_json(const ConstructionTrace& trace) {
  Json out = Json::array();
  for (const TraceStep& step : trace.steps) {
    out.push_back({{"k", step.k},
                   {"b_k", to_decimal(step.target)},
                   {"a_k", to_decimal(step.chosen)},
                   {"deviation", to_decimal(step.deviation)},
                   {"step_bound", to_decimal(step.step_bound)},
                   {"global_bound", to_decimal(step.global_bound)},
                   {"candidates_examined", step.candidates_examined}});
  }
  return out;
}

std::string render_trace(const ConstructionTrace& trace, TraceFormat format) {
  if (format == TraceFormat::kJson) return trace_json(trace).dump() + "\n";
  std::ostringstream out;
  out << "k,b_k,a_k,deviation,step_bound,candidates\n";
  for (const TraceStep& step : trace.steps) {
    out << step.k << ',' << to_decimal(step.target) << ',' << to_decimal(step.chosen) << ','
        << to_decimal(step.deviation) << ',' << to_decimal(step.step_bound) << ',' << step.candidates_examined
        << '\n';
  }
  return out.str();
}

void write_trace(const ConstructionTrace& trace, TraceFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::kIo, "cannot write " + path);
  out << render_trace(trace, format);
  out.flush();
  if (!out) fail(ErrorKind::kIo, "error while writing " + path);
}

namespace {

Integer integer_field(const Json& step, const char* key) {
  const auto it = step.find(key);
  if (it == step.end() || !it->is_string()) {
    fail(ErrorKind::kInvalidInput, std::string("trace step lacks decimal-string field '") + key + "'");
  }
  return parse_integer(it->get<std::string>());
}

std::uint64_t count_field(const Json& step, const char* key) {
  const auto it = step.find(key);
  if (it == step.end() || !it->is_number_unsigned()) {
    fail(ErrorKind::kInvalidInput, std::string("trace step lacks unsigned field '") + key + "'");
  }
  return it->get<std::uint64_t>();
}

}  // namespace

ConstructionTrace parse_trace_json(std::string_view text, ConstructionMode mode) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    fail(ErrorKind::kInvalidInput, std::string("trace is not valid JSON: ") + error.what());
  }
  if (!doc.is_array()) fail(ErrorKind::kInvalidInput, "trace must be a JSON array");
  ConstructionTrace trace;
  trace.mode = mode;
  for (const Json& step : doc) {
    if (!step.is_object()) fail(ErrorKind::kInvalidInput, "trace steps must be objects");
    trace.steps.push_back(TraceStep{static_cast<std::size_t>(count_field(step, "k")), integer_field(step, "b_k"),
                                    integer_field(step, "a_k"), integer_field(step, "deviation"),
                                    integer_field(step, "step_bound"), integer_field(step, "global_bound"),
                                    count_field(step, "candidates_examined")});
  }
  return trace;
}

TraceFormat parse_trace_format(std::string_view name) {
  if (name == "json") return TraceFormat::kJson;
  if (name == "csv") return TraceFormat::kCsv;
  fail(ErrorKind::kInvalidInput, "unknown output format '" + std::string(name) + "' (expected json or csv)");
}

}  // namespace sidon
