#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/framework.hpp"

namespace fairdiv {

/// Makes a builder from the text after the ':' in "name:param" (empty when
/// there is none). Throws InvalidArgument on a bad parameter.
using BuilderFactory = std::function<PartialBuilder(std::string_view param)>;

/// Named partial-allocation builders shared by the solvers, the CLI and the
/// tests.
class BuilderRegistry {
public:
  void add(std::string name, BuilderFactory factory);
  /// Resolves "name" or "name:param". Throws InvalidArgument if unknown.
  PartialBuilder resolve(std::string_view spec) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

private:
  std::map<std::string, BuilderFactory, std::less<>> factories_;
};

/// The registry with every built-in builder:
///   empty, pick-rounds, top-n, relaxed-top:<l>, bounded-interval:<l>,
///   distinct-favorites
const BuilderRegistry& builder_registry();

inline PartialBuilder resolve_builder(std::string_view spec) { return builder_registry().resolve(spec); }

}  // namespace fairdiv
