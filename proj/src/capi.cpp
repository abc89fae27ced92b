#include "sidon/sidon.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sidon/bound_analysis.hpp"
#include "sidon/constructor.hpp"
#include "sidon/error.hpp"
#include "sidon/linear_form.hpp"
#include "sidon/report.hpp"
#include "sidon/sequence.hpp"
#include "sidon/sidon_engine.hpp"

struct sidon_form {
  sidon::LinearForm rep;
};
struct sidon_set {
  sidon::FiniteSet rep;
};
struct sidon_sequence {
  sidon::IntSequence rep;
};
struct sidon_trace {
  sidon::ConstructionTrace rep;
};

namespace {

thread_local std::string last_error;

sidon_status status_of(sidon::ErrorKind kind) {
  switch (kind) {
    case sidon::ErrorKind::kInvalidInput: return SIDON_ERR_INVALID_INPUT;
    case sidon::ErrorKind::kPrecondition: return SIDON_ERR_PRECONDITION;
    case sidon::ErrorKind::kBudget: return SIDON_ERR_BUDGET;
    case sidon::ErrorKind::kExhausted: return SIDON_ERR_EXHAUSTED;
    case sidon::ErrorKind::kIo: return SIDON_ERR_IO;
    case sidon::ErrorKind::kInternal: return SIDON_ERR_INTERNAL;
  }
  return SIDON_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
sidon_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return SIDON_OK;
  } catch (const sidon::Error& error) {
    last_error = error.what();
    return status_of(error.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SIDON_ERR_BUDGET;
  } catch (const std::exception& error) {
    last_error = error.what();
    return SIDON_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return SIDON_ERR_INTERNAL;
  }
}

template <class... Ptrs>
void require(const char* what, const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) sidon::fail(sidon::ErrorKind::kInvalidInput, std::string("null argument to ") + what);
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit(char** out, const sidon::Json& doc) {
  if (out != nullptr) *out = duplicate(doc.dump());
}

void set_flag(int* flag, bool value) {
  if (flag != nullptr) *flag = value ? 1 : 0;
}

sidon::EngineOptions engine_options(const sidon_options* options) {
  sidon::EngineOptions out;
  if (options == nullptr) return out;
  out.tuple_budget = options->tuple_budget;
  out.forbidden_budget = options->forbidden_budget;
  out.arity_limit = options->arity_limit;
  out.threads = options->threads == 0 ? 1 : options->threads;
  return out;
}

sidon::FiniteSet parse_set(const std::string& text) {
  if (text.rfind("list:", 0) == 0) return sidon::FiniteSet::from_unsorted(sidon::parse_integer_list(text.substr(5)));
  if (text.rfind("file:", 0) == 0) return sidon::FiniteSet::from_unsorted(sidon::read_integer_file(text.substr(5)));
  return sidon::FiniteSet::from_unsorted(sidon::parse_integer_list(text));
}

}  // namespace

extern "C" {

const char* sidon_version(void) { return "1.0.0"; }

void sidon_options_init(sidon_options* options) {
  if (options == nullptr) return;
  const sidon::EngineOptions defaults;
  options->tuple_budget = defaults.tuple_budget;
  options->forbidden_budget = defaults.forbidden_budget;
  options->arity_limit = defaults.arity_limit;
  options->threads = defaults.threads;
}

const char* sidon_last_error(void) { return last_error.c_str(); }

const char* sidon_status_name(sidon_status status) {
  switch (status) {
    case SIDON_OK: return "ok";
    case SIDON_ERR_INVALID_INPUT: return "invalid_input";
    case SIDON_ERR_PRECONDITION: return "precondition";
    case SIDON_ERR_BUDGET: return "budget";
    case SIDON_ERR_EXHAUSTED: return "exhausted";
    case SIDON_ERR_IO: return "io";
    case SIDON_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void sidon_string_free(char* text) { std::free(text); }

sidon_status sidon_form_parse(const char* text, sidon_form** out) {
  return guarded([&] {
    require("sidon_form_parse", text, out);
    *out = new sidon_form{sidon::LinearForm::parse(text)};
  });
}

void sidon_form_free(sidon_form* form) { delete form; }

size_t sidon_form_arity(const sidon_form* form) { return form == nullptr ? 0 : form->rep.arity(); }

sidon_status sidon_form_norm(const sidon_form* form, char** out) {
  return guarded([&] {
    require("sidon_form_norm", form, out);
    *out = duplicate(sidon::to_decimal(form->rep.norm()));
  });
}

sidon_status sidon_form_subset_sum(const sidon_form* form, uint64_t mask, char** out) {
  return guarded([&] {
    require("sidon_form_subset_sum", form, out);
    *out = duplicate(sidon::to_decimal(form->rep.subset_sum(sidon::IndexSet(mask))));
  });
}

sidon_status sidon_form_contraction(const sidon_form* form, uint64_t mask, sidon_form** out) {
  return guarded([&] {
    require("sidon_form_contraction", form, out);
    *out = new sidon_form{form->rep.contraction(sidon::IndexSet(mask))};
  });
}

sidon_status sidon_check_form(const sidon_form* form, const sidon_options* options, int* has_property_n,
                              char** json) {
  return guarded([&] {
    require("sidon_check_form", form);
    const sidon::PropertyNReport report = sidon::check_property_n(form->rep, engine_options(options));
    set_flag(has_property_n, report.holds);
    emit(json, sidon::form_report_json(form->rep, report));
  });
}

sidon_status sidon_set_parse(const char* text, sidon_set** out) {
  return guarded([&] {
    require("sidon_set_parse", text, out);
    *out = new sidon_set{parse_set(text)};
  });
}

sidon_status sidon_set_from_sequence(sidon_sequence* sequence, size_t terms, sidon_set** out) {
  return guarded([&] {
    require("sidon_set_from_sequence", sequence, out);
    *out = new sidon_set{sidon::FiniteSet::from_unsorted(sequence->rep.prefix(terms))};
  });
}

void sidon_set_free(sidon_set* set) { delete set; }

size_t sidon_set_size(const sidon_set* set) { return set == nullptr ? 0 : set->rep.size(); }

sidon_status sidon_verify(const sidon_form* form, const sidon_set* set, const sidon_options* options, int* is_sidon,
                          char** json) {
  return guarded([&] {
    require("sidon_verify", form, set);
    const sidon::SidonReport report = sidon::is_sidon(form->rep, set->rep, engine_options(options));
    set_flag(is_sidon, report.sidon);
    emit(json, sidon::sidon_report_json(report));
  });
}

sidon_status sidon_phi_image(const sidon_form* form, const sidon_set* set, const sidon_options* options,
                             char** json) {
  return guarded([&] {
    require("sidon_phi_image", form, set);
    const sidon::PhiImage image = sidon::phi_image(form->rep, set->rep, engine_options(options));
    sidon::Json doc;
    doc["values"] = sidon::integers_json(image.values);
    doc["distinct"] = image.distinct();
    doc["total"] = image.total;
    emit(json, doc);
  });
}

sidon_status sidon_translate_family(const sidon_form* form, const sidon_set* set, const char* b,
                                    const sidon_options* options, char** json) {
  return guarded([&] {
    require("sidon_translate_family", form, set, b);
    const auto family = sidon::translate_family(form->rep, set->rep, sidon::parse_integer(b), engine_options(options));
    sidon::Json doc = sidon::Json::array();
    for (const sidon::Translate& t : family) {
      doc.push_back({{"J", sidon::index_set_json(t.subset)},
                     {"shift", sidon::to_decimal(t.shift)},
                     {"values", sidon::integers_json(t.values)}});
    }
    emit(json, doc);
  });
}

sidon_status sidon_can_extend(const sidon_form* form, const sidon_set* set, const char* b,
                              const sidon_options* options, int* extendable, char** json) {
  return guarded([&] {
    require("sidon_can_extend", form, set, b);
    const sidon::ExtensionReport report =
        sidon::can_extend(form->rep, set->rep, sidon::parse_integer(b), engine_options(options));
    set_flag(extendable, report.extendable);
    emit(json, sidon::extension_report_json(report));
  });
}

sidon_status sidon_forbidden_values(const sidon_form* form, const sidon_set* set, const sidon_options* options,
                                    char** json) {
  return guarded([&] {
    require("sidon_forbidden_values", form, set);
    const auto values = sidon::forbidden_values(form->rep, set->rep, engine_options(options));
    sidon::Json doc;
    doc["values"] = sidon::integers_json(values);
    doc["count"] = values.size();
    emit(json, doc);
  });
}

sidon_status sidon_sequence_parse(const char* spec, sidon_sequence** out) {
  return guarded([&] {
    require("sidon_sequence_parse", spec, out);
    *out = new sidon_sequence{sidon::parse_sequence_spec(spec)};
  });
}

void sidon_sequence_free(sidon_sequence* sequence) { delete sequence; }

sidon_status sidon_sequence_term(sidon_sequence* sequence, size_t k, char** out) {
  return guarded([&] {
    require("sidon_sequence_term", sequence, out);
    *out = duplicate(sidon::to_decimal(sequence->rep.at(k)));
  });
}

sidon_status sidon_construct_poly(const sidon_form* form, sidon_sequence* sequence, size_t terms,
                                  const sidon_options* options, sidon_trace** out) {
  return guarded([&] {
    require("sidon_construct_poly", form, sequence, out);
    *out = new sidon_trace{sidon::construct_poly(form->rep, sequence->rep, terms, engine_options(options))};
  });
}

sidon_status sidon_construct_bounded(const sidon_form* form, sidon_sequence* sequence, const char* m, const char* m0,
                                     size_t terms, const int64_t* offsets, size_t offsets_len,
                                     const sidon_options* options, sidon_trace** out) {
  return guarded([&] {
    require("sidon_construct_bounded", form, sequence, m, out);
    const sidon::Integer m_value = sidon::parse_integer(m);
    const sidon::Rational m0_value =
        m0 != nullptr ? sidon::parse_rational(m0) : sidon::Rational(m_value > 1 ? m_value : sidon::Integer(1));
    sidon::BoundedChooser chooser;
    if (offsets != nullptr) {
      chooser = [offsets, offsets_len](std::size_t k, const sidon::Integer& target, const sidon::Integer&,
                                       const sidon::Integer&) {
        const std::size_t slot = k - 2;
        if (slot >= offsets_len) return target;
        return sidon::Integer(target + sidon::Integer(static_cast<long>(offsets[slot])));
      };
    }
    *out = new sidon_trace{
        sidon::construct_bounded(form->rep, sequence->rep, m_value, m0_value, terms, chooser, engine_options(options))};
  });
}

void sidon_trace_free(sidon_trace* trace) { delete trace; }

size_t sidon_trace_length(const sidon_trace* trace) { return trace == nullptr ? 0 : trace->rep.steps.size(); }

sidon_status sidon_trace_render(const sidon_trace* trace, sidon_trace_format format, char** out) {
  return guarded([&] {
    require("sidon_trace_render", trace, out);
    *out = duplicate(sidon::render_trace(
        trace->rep, format == SIDON_TRACE_CSV ? sidon::TraceFormat::kCsv : sidon::TraceFormat::kJson));
  });
}

sidon_status sidon_trace_write(const sidon_trace* trace, sidon_trace_format format, const char* path) {
  return guarded([&] {
    require("sidon_trace_write", trace, path);
    sidon::write_trace(trace->rep, format == SIDON_TRACE_CSV ? sidon::TraceFormat::kCsv : sidon::TraceFormat::kJson,
                       path);
  });
}

sidon_status sidon_trace_set(const sidon_trace* trace, sidon_set** out) {
  return guarded([&] {
    require("sidon_trace_set", trace, out);
    *out = new sidon_set{sidon::FiniteSet::from_unsorted(trace->rep.chosen())};
  });
}

sidon_status sidon_check_growth(const sidon_form* form, sidon_sequence* sequence, const char* m, size_t terms,
                                int* pass, char** json) {
  return guarded([&] {
    require("sidon_check_growth", form, sequence, m);
    const sidon::GrowthCheck check = sidon::check_growth(form->rep, sequence->rep, sidon::parse_integer(m), terms);
    set_flag(pass, check.pass());
    emit(json, sidon::growth_check_json(check));
  });
}

sidon_status sidon_window_certificate(const sidon_form* form, sidon_sequence* sequence, const char* m0, size_t s,
                                      size_t t, int* contradiction, char** json) {
  return guarded([&] {
    require("sidon_window_certificate", form, sequence, m0);
    const sidon::WindowCertificate certificate =
        sidon::window_certificate(form->rep, sequence->rep, sidon::parse_integer(m0), s, t);
    set_flag(contradiction, certificate.contradiction());
    emit(json, sidon::certificate_json(certificate));
  });
}

sidon_status sidon_refute_bounded(const sidon_form* form, sidon_sequence* sequence, const char* m0, size_t limit,
                                  int* found, char** json) {
  return guarded([&] {
    require("sidon_refute_bounded", form, sequence, m0);
    const auto certificate = sidon::refute_bounded(form->rep, sequence->rep, sidon::parse_integer(m0), limit);
    set_flag(found, certificate.has_value());
    emit(json, sidon::refutation_json(certificate));
  });
}

sidon_status sidon_density_check(sidon_sequence* sequence, size_t arity, const char* epsilon, size_t terms,
                                 int* pass, char** json) {
  return guarded([&] {
    require("sidon_density_check", sequence, epsilon);
    const sidon::DensityCheck check =
        sidon::density_check(sequence->rep, arity, sidon::parse_rational(epsilon), terms);
    set_flag(pass, check.pass());
    emit(json, sidon::density_json(check));
  });
}

sidon_status sidon_poly_bound_holds(size_t arity, uint64_t n, int* holds) {
  return guarded([&] {
    require("sidon_poly_bound_holds", holds);
    set_flag(holds, sidon::poly_bound_holds(arity, n));
  });
}

sidon_status sidon_bound_sweep(size_t max_arity, uint64_t max_n, int* all_hold, char** json) {
  return guarded([&] {
    const sidon::BoundSweep sweep = sidon::bound_sweep(max_arity, max_n);
    set_flag(all_hold, sweep.all_hold());
    sidon::Json doc;
    doc["all_hold"] = sweep.all_hold();
    doc["max_h"] = max_arity;
    doc["max_n"] = max_n;
    doc["checked"] = sweep.checked;
    if (sweep.first_failure) doc["first_failure"] = {{"h", sweep.first_failure->first}, {"n", sweep.first_failure->second}};
    emit(json, doc);
  });
}

}  // extern "C"
