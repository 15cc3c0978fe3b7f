#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

enum class FairnessKind { EF, EF1, EFX, AlphaEF, AlphaEFX };

/// A fairness notion to decide; `alpha` is only read by the Alpha* kinds and
/// must lie in [0, 1].
struct FairnessProperty {
  FairnessKind kind = FairnessKind::EFX;
  Value alpha = 1;

  static FairnessProperty ef() { return {FairnessKind::EF, 1}; }
  static FairnessProperty ef1() { return {FairnessKind::EF1, 1}; }
  static FairnessProperty efx() { return {FairnessKind::EFX, 1}; }
  static FairnessProperty alpha_ef(Value a) { return {FairnessKind::AlphaEF, std::move(a)}; }
  static FairnessProperty alpha_efx(Value a) { return {FairnessKind::AlphaEFX, std::move(a)}; }
};

/// One violated condition: agent `envier` toward agent `envied`, and for the
/// EFX family the item whose removal still leaves the violation.
struct Witness {
  int envier = 0;
  int envied = 0;
  std::optional<int> item;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct FairnessReport {
  bool verdict = true;
  /// Sorted by (envier, envied, item); empty iff verdict.
  std::vector<Witness> witnesses;
  /// max_alpha_efx of the same allocation.
  Value certified_alpha = 1;
};

/// Decides the property over the bundles; the pool is ignored.
FairnessReport check_fairness(const Instance& inst, const Allocation& alloc, const FairnessProperty& prop);

bool satisfies(const Instance& inst, const Allocation& alloc, const FairnessProperty& prop);

/// Largest alpha in [0, 1] for which the allocation is alpha-EFX. Triples
/// with v_i(A_j - g) = 0 are ignored; returns 1 when none remain.
Value max_alpha_efx(const Instance& inst, const Allocation& alloc);

/// Largest alpha in [0, 1] for which the allocation is alpha-EF1.
Value max_alpha_ef1(const Instance& inst, const Allocation& alloc);

/// Largest alpha in [0, 1] for which the allocation is alpha-EF.
Value max_alpha_ef(const Instance& inst, const Allocation& alloc);

/// Pairs (i, j) where i violates the EFX condition toward j, sorted.
std::vector<std::pair<int, int>> strong_envy_pairs(const Instance& inst, const Allocation& alloc);

bool is_efx(const Instance& inst, const Allocation& alloc);

}  // namespace fairdiv
