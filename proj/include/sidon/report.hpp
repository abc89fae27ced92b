#pragma once

// JSON and CSV rendering of results.  Big integers are always emitted as
// decimal strings; key order is fixed so output is byte-stable.

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sidon/bound_analysis.hpp"
#include "sidon/constructor.hpp"
#include "sidon/linear_form.hpp"
#include "sidon/sidon_engine.hpp"

namespace sidon {

using Json = nlohmann::ordered_json;

Json index_set_json(IndexSet subset);
Json integers_json(const std::vector<Integer>& values);

Json form_report_json(const LinearForm& form, const PropertyNReport& report);
Json sidon_report_json(const SidonReport& report);
Json extension_report_json(const ExtensionReport& report);
Json growth_check_json(const GrowthCheck& check);
Json certificate_json(const WindowCertificate& certificate);
Json refutation_json(const std::optional<WindowCertificate>& certificate);
Json density_json(const DensityCheck& check);

enum class TraceFormat { kJson, kCsv };

// JSON: array of step objects.  CSV: header k,b_k,a_k,deviation,step_bound,candidates.
Json trace_json(const ConstructionTrace& trace);
std::string render_trace(const ConstructionTrace& trace, TraceFormat format);
void write_trace(const ConstructionTrace& trace, TraceFormat format, const std::string& path);

// Inverse of trace_json.  The mode is not part of the step array, so the
// caller supplies it.  Throws InvalidInput on malformed documents.
ConstructionTrace parse_trace_json(std::string_view text, ConstructionMode mode = ConstructionMode::kPolynomial);

TraceFormat parse_trace_format(std::string_view name);

}  // namespace sidon
