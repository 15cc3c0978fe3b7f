#include "fairdiv/verify.hpp"

#include "fairdiv/error.hpp"

namespace fairdiv {
namespace {

std::vector<Value> own_values(const Instance& inst, const Allocation& alloc) {
  std::vector<Value> own;
  own.reserve(static_cast<std::size_t>(inst.agents()));
  for (int i = 0; i < inst.agents(); ++i) own.push_back(inst.value(i, alloc.bundle(i)));
  return own;
}

void check_alpha(const Value& alpha) {
  if (alpha < 0 || alpha > 1) fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
}

}  // namespace

FairnessReport check_fairness(const Instance& inst, const Allocation& alloc, const FairnessProperty& prop) {
  validate_allocation(inst, alloc);
  const int n = inst.agents();
  const auto own = own_values(inst, alloc);
  FairnessReport report;

  switch (prop.kind) {
    case FairnessKind::EF:
    case FairnessKind::AlphaEF: {
      const Value alpha = prop.kind == FairnessKind::EF ? Value(1) : prop.alpha;
      check_alpha(alpha);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && own[static_cast<std::size_t>(i)] < alpha * inst.value(i, alloc.bundle(j)))
            report.witnesses.push_back({i, j, std::nullopt});
      break;
    }
    case FairnessKind::EF1:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || alloc.bundle(j).empty()) continue;
          bool ok = false;
          for (int g : alloc.bundle(j))
            if (own[static_cast<std::size_t>(i)] >= inst.value(i, alloc.bundle(j).without(g))) {
              ok = true;
              break;
            }
          if (!ok) report.witnesses.push_back({i, j, std::nullopt});
        }
      break;
    case FairnessKind::EFX:
    case FairnessKind::AlphaEFX: {
      const Value alpha = prop.kind == FairnessKind::EFX ? Value(1) : prop.alpha;
      check_alpha(alpha);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          for (int g : alloc.bundle(j))
            if (own[static_cast<std::size_t>(i)] < alpha * inst.value(i, alloc.bundle(j).without(g)))
              report.witnesses.push_back({i, j, g});
        }
      break;
    }
  }
  report.verdict = report.witnesses.empty();
  report.certified_alpha = max_alpha_efx(inst, alloc);
  return report;
}

bool satisfies(const Instance& inst, const Allocation& alloc, const FairnessProperty& prop) {
  return check_fairness(inst, alloc, prop).verdict;
}

Value max_alpha_efx(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const int n = inst.agents();
  const auto own = own_values(inst, alloc);
  Value best = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int g : alloc.bundle(j)) {
        const Value rest = inst.value(i, alloc.bundle(j).without(g));
        if (sgn(rest) == 0) continue;
        const Value ratio = own[static_cast<std::size_t>(i)] / rest;
        if (ratio < best) best = ratio;
      }
    }
  return best;
}

Value max_alpha_ef1(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const int n = inst.agents();
  const auto own = own_values(inst, alloc);
  Value best = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || alloc.bundle(j).empty()) continue;
      // Best single removal for i: the one leaving the least value.
      std::optional<Value> least;
      for (int g : alloc.bundle(j)) {
        Value rest = inst.value(i, alloc.bundle(j).without(g));
        if (!least || rest < *least) least = std::move(rest);
      }
      if (sgn(*least) == 0) continue;
      const Value ratio = own[static_cast<std::size_t>(i)] / *least;
      if (ratio < best) best = ratio;
    }
  return best;
}

Value max_alpha_ef(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const int n = inst.agents();
  const auto own = own_values(inst, alloc);
  Value best = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Value other = inst.value(i, alloc.bundle(j));
      if (sgn(other) == 0) continue;
      const Value ratio = own[static_cast<std::size_t>(i)] / other;
      if (ratio < best) best = ratio;
    }
  return best;
}

std::vector<std::pair<int, int>> strong_envy_pairs(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const int n = inst.agents();
  const auto own = own_values(inst, alloc);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int g : alloc.bundle(j))
        if (own[static_cast<std::size_t>(i)] < inst.value(i, alloc.bundle(j).without(g))) {
          out.emplace_back(i, j);
          break;
        }
    }
  return out;
}

bool is_efx(const Instance& inst, const Allocation& alloc) { return strong_envy_pairs(inst, alloc).empty(); }

}  // namespace fairdiv
