#include "fairdiv/builders.hpp"

#include <charconv>

#include "fairdiv/error.hpp"
#include "fairdiv/topn.hpp"

namespace fairdiv {
namespace {

int parse_count(std::string_view name, std::string_view param) {
  int value = 0;
  const auto* end = param.data() + param.size();
  const auto [ptr, ec] = std::from_chars(param.data(), end, value);
  if (param.empty() || ec != std::errc() || ptr != end || value < 1)
    fail(ErrorCode::InvalidArgument, "builder '" + std::string(name) + "' needs a positive count, e.g. " +
                                         std::string(name) + ":4");
  return value;
}

BuilderFactory no_param(std::string name, PartialBuilder builder) {
  return [name = std::move(name), builder = std::move(builder)](std::string_view param) {
    if (!param.empty()) fail(ErrorCode::InvalidArgument, "builder '" + name + "' takes no parameter");
    return builder;
  };
}

BuilderRegistry make_default_registry() {
  BuilderRegistry r;
  r.add("empty", no_param("empty", [](const Instance& inst) { return Allocation(inst.agents(), inst.items()); }));
  r.add("pick-rounds", no_param("pick-rounds", build_pick_rounds_partial));
  r.add("top-n", no_param("top-n", [](const Instance& inst) { return build_top_n_partial(inst).partial; }));
  r.add("distinct-favorites", no_param("distinct-favorites", build_distinct_favorites_partial));
  r.add("relaxed-top", [](std::string_view param) -> PartialBuilder {
    const int ell = parse_count("relaxed-top", param);
    return [ell](const Instance& inst) { return build_relaxed_top_partial(inst, ell); };
  });
  r.add("bounded-interval", [](std::string_view param) -> PartialBuilder {
    const int ell = parse_count("bounded-interval", param);
    return [ell](const Instance& inst) { return build_bounded_interval_partial(inst, ell); };
  });
  return r;
}

}  // namespace

void BuilderRegistry::add(std::string name, BuilderFactory factory) {
  factories_[std::move(name)] = std::move(factory);
}

PartialBuilder BuilderRegistry::resolve(std::string_view spec) const {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view param = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const auto it = factories_.find(name);
  if (it == factories_.end()) fail(ErrorCode::InvalidArgument, "unknown builder '" + std::string(name) + "'");
  return it->second(param);
}

bool BuilderRegistry::contains(std::string_view name) const { return factories_.find(name) != factories_.end(); }

std::vector<std::string> BuilderRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, factory] : factories_) out.push_back(name);
  return out;
}

const BuilderRegistry& builder_registry() {
  static const BuilderRegistry registry = make_default_registry();
  return registry;
}

}  // namespace fairdiv
