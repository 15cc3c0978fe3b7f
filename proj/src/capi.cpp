#include "fairdiv/fairdiv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fairdiv/error.hpp"
#include "fairdiv/gen.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/solve.hpp"
#include "fairdiv/verify.hpp"

struct fd_instance {
  fairdiv::Instance inst;
};

struct fd_allocation {
  fairdiv::Allocation alloc;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_code;

fd_status set_error(fd_status status, std::string code, std::string message) {
  last_code = std::move(code);
  last_error = std::move(message);
  return status;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
fd_status guarded(F&& body) {
  try {
    last_error.clear();
    last_code.clear();
    body();
    return FD_OK;
  } catch (const fairdiv::Error& e) {
    fd_status status = FD_ERR_INTERNAL;
    switch (fairdiv::classify(e.code())) {
      case fairdiv::ErrorClass::User: status = FD_ERR_INPUT; break;
      case fairdiv::ErrorClass::Hypothesis: status = FD_ERR_HYPOTHESIS; break;
      case fairdiv::ErrorClass::TooLarge: status = FD_ERR_TOO_LARGE; break;
      case fairdiv::ErrorClass::Internal: status = FD_ERR_INTERNAL; break;
    }
    return set_error(status, std::string(fairdiv::to_string(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FD_ERR_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return set_error(FD_ERR_INTERNAL, "InternalInvariant", e.what());
  }
}

fd_status null_arg(const char* what) {
  return set_error(FD_ERR_INPUT, "InvalidArgument", std::string("null argument: ") + what);
}

fairdiv::FairnessProperty parse_property(std::string_view text) {
  using fairdiv::FairnessProperty;
  if (text == "ef") return FairnessProperty::ef();
  if (text == "ef1") return FairnessProperty::ef1();
  if (text == "efx" || text == "max-alpha") return FairnessProperty::efx();
  if (text.starts_with("alpha-ef:")) return FairnessProperty::alpha_ef(fairdiv::parse_value(text.substr(9)));
  if (text.starts_with("alpha-efx:")) return FairnessProperty::alpha_efx(fairdiv::parse_value(text.substr(10)));
  fairdiv::fail(fairdiv::ErrorCode::InvalidArgument,
                "unknown property '" + std::string(text) + "' (ef, ef1, efx, alpha-ef:p/q, alpha-efx:p/q, max-alpha)");
}

}  // namespace

extern "C" {

const char* fd_version(void) { return "0.1.0"; }
const char* fd_last_error(void) { return last_error.c_str(); }
const char* fd_last_error_code(void) { return last_code.c_str(); }
void fd_string_free(char* s) { std::free(s); }

fd_status fd_instance_parse(const char* json, fd_instance** out) {
  if (!json || !out) return null_arg("json/out");
  return guarded([&] { *out = new fd_instance{fairdiv::instance_from_json(fairdiv::parse_json(json))}; });
}

fd_status fd_instance_generate(const char* family, int n, int m, int lo, int hi, uint64_t seed, fd_instance** out) {
  if (!family || !out) return null_arg("family/out");
  return guarded([&] {
    const fairdiv::GenParams params{n, m, lo, hi};
    *out = new fd_instance{fairdiv::generate(fairdiv::parse_family(family), params, seed)};
  });
}

fd_status fd_instance_to_json(const fd_instance* inst, char** out) {
  if (!inst || !out) return null_arg("inst/out");
  return guarded([&] { *out = dup(fairdiv::instance_to_json(inst->inst).dump()); });
}

int fd_instance_agents(const fd_instance* inst) { return inst ? inst->inst.agents() : 0; }
int fd_instance_items(const fd_instance* inst) { return inst ? inst->inst.items() : 0; }
void fd_instance_free(fd_instance* inst) { delete inst; }

fd_status fd_allocation_parse(const fd_instance* inst, const char* json, fd_allocation** out) {
  if (!inst || !json || !out) return null_arg("inst/json/out");
  return guarded(
      [&] { *out = new fd_allocation{fairdiv::allocation_from_json(fairdiv::parse_json(json), inst->inst)}; });
}

fd_status fd_allocation_to_json(const fd_allocation* alloc, char** out) {
  if (!alloc || !out) return null_arg("alloc/out");
  return guarded([&] { *out = dup(fairdiv::allocation_to_json(alloc->alloc).dump()); });
}

void fd_allocation_free(fd_allocation* alloc) { delete alloc; }

fd_status fd_solve(const fd_instance* inst, const char* algorithm, char** result_json, char** trace_jsonl) {
  if (!inst || !algorithm || !result_json) return null_arg("inst/algorithm/result_json");
  return guarded([&] {
    fairdiv::SolveOptions options;
    options.trace = trace_jsonl != nullptr;
    const fairdiv::SolveOutcome outcome = fairdiv::solve(inst->inst, algorithm, options);
    std::string result = fairdiv::outcome_to_json(outcome).dump();
    std::string trace;
    for (const auto& line : outcome.trace) trace += line.dump() + "\n";
    *result_json = dup(result);
    if (trace_jsonl) *trace_jsonl = dup(trace);
  });
}

fd_status fd_verify(const fd_instance* inst, const fd_allocation* alloc, const char* property, char** report_json,
                    int* verdict) {
  if (!inst || !alloc || !property || !report_json) return null_arg("inst/alloc/property/report_json");
  return guarded([&] {
    const std::string_view prop(property);
    const fairdiv::FairnessReport report = fairdiv::check_fairness(inst->inst, alloc->alloc, parse_property(prop));
    fairdiv::Json doc = fairdiv::report_to_json(report);
    bool ok = report.verdict;
    if (prop == "max-alpha") {
      ok = true;
      doc["verdict"] = true;
    }
    *report_json = dup(doc.dump());
    if (verdict) *verdict = ok ? 1 : 0;
  });
}

fd_status fd_oracle(const fd_instance* inst, const char* mode, char** result_json) {
  if (!inst || !mode || !result_json) return null_arg("inst/mode/result_json");
  return guarded([&] {
    const std::string_view m(mode);
    fairdiv::Json doc;
    doc["mode"] = std::string(m);
    if (m == "exists-efx") {
      const auto found = fairdiv::exists_efx(inst->inst);
      doc["found"] = found.has_value();
      doc["allocation"] = found ? fairdiv::allocation_to_json(*found) : fairdiv::Json(nullptr);
    } else if (m == "best-alpha") {
      const auto best = fairdiv::best_alpha_efx(inst->inst);
      doc["alpha"] = fairdiv::value_to_json(best.alpha);
      doc["allocation"] = fairdiv::allocation_to_json(best.allocation);
    } else {
      fairdiv::fail(fairdiv::ErrorCode::InvalidArgument,
                    "unknown oracle mode '" + std::string(m) + "' (exists-efx, best-alpha)");
    }
    *result_json = dup(doc.dump());
  });
}

}  // extern "C"
