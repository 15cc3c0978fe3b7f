#include "fairdiv/framework.hpp"

#include "fairdiv/builders.hpp"
#include "fairdiv/error.hpp"
#include "fairdiv/verify.hpp"

namespace fairdiv {

PartialCertificate measure_partial(const Instance& inst, const Allocation& partial) {
  validate_allocation(inst, partial);
  PartialCertificate cert;
  cert.alpha = max_alpha_efx(inst, partial);
  cert.gamma = max_alpha_ef1(inst, partial);

  const ItemSet pool = partial.pool();
  if (!pool.empty()) {
    for (int i = 0; i < inst.agents(); ++i) {
      Value top = 0;
      for (int h : pool)
        if (inst.item_value(i, h) > top) top = inst.item_value(i, h);
      if (sgn(top) == 0) continue;
      Value ratio = inst.value(i, partial.bundle(i)) / top;
      if (!cert.beta || ratio < *cert.beta) cert.beta = std::move(ratio);
    }
  }

  cert.certified_factor = cert.alpha;
  if (cert.beta) {
    const Value bound = *cert.beta / (*cert.beta + 1);
    if (bound < cert.certified_factor) cert.certified_factor = bound;
  }
  return cert;
}

FrameworkResult run_framework(const Instance& inst, const PartialBuilder& builder) {
  FrameworkResult result;
  result.partial = builder(inst);
  validate_allocation(inst, result.partial);
  result.certificate = measure_partial(inst, result.partial);
  result.allocation = run_ece(inst, result.partial, EcePolicy::plain(), &result.trace);
  return result;
}

FrameworkResult run_framework(const Instance& inst, std::string_view builder_name) {
  return run_framework(inst, resolve_builder(builder_name));
}

}  // namespace fairdiv
