#pragma once

#include <doctest.h>

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fairdiv/core.hpp"
#include "fairdiv/error.hpp"

namespace fdtest {

using fairdiv::Allocation;
using fairdiv::Instance;
using fairdiv::ItemSet;
using fairdiv::ValuationFunction;
using fairdiv::Value;

inline std::vector<Value> vals(std::initializer_list<long> xs) {
  std::vector<Value> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Instance additive(std::vector<std::vector<Value>> rows) {
  std::vector<ValuationFunction> vs;
  for (auto& r : rows) vs.push_back(ValuationFunction::additive(std::move(r)));
  return Instance(std::move(vs));
}

inline Instance additive_int(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Value>> out;
  for (auto r : rows) out.push_back(vals(r));
  return additive(std::move(out));
}

inline Instance identical(int n, std::initializer_list<long> row) {
  std::vector<std::vector<Value>> out(static_cast<std::size_t>(n), vals(row));
  return additive(std::move(out));
}

inline Allocation bundles(std::vector<ItemSet> b, int m) { return Allocation::from_bundles(std::move(b), m); }

/// Error code of the exception thrown by f, or a failed check when nothing
/// (or something else) was thrown.
template <class F>
void check_error(F&& f, fairdiv::ErrorCode expected) {
  bool thrown = false;
  try {
    f();
  } catch (const fairdiv::Error& e) {
    thrown = true;
    CHECK_MESSAGE(e.code() == expected, "got " << fairdiv::to_string(e.code()) << ": " << e.what());
  }
  CHECK_MESSAGE(thrown, "expected " << fairdiv::to_string(expected));
}

/// Random additive instance with integer values in [lo, hi].
inline Instance random_additive(std::mt19937_64& rng, int n, int m, int lo = 0, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n));
  for (auto& r : rows)
    for (int g = 0; g < m; ++g) r.emplace_back(d(rng));
  return additive(std::move(rows));
}

/// Random valuation of the given kind (tables are monotone closures of
/// random scores).
inline ValuationFunction random_valuation(std::mt19937_64& rng, fairdiv::ValuationKind kind, int m) {
  using fairdiv::ValuationKind;
  std::uniform_int_distribution<int> d(0, 9);
  std::vector<Value> v;
  switch (kind) {
    case ValuationKind::Additive:
      for (int g = 0; g < m; ++g) v.emplace_back(d(rng));
      return ValuationFunction::additive(v);
    case ValuationKind::Multiplicative:
      for (int g = 0; g < m; ++g) v.emplace_back(Value(d(rng) + 4, 4));
      return ValuationFunction::multiplicative(v);
    case ValuationKind::UnitDemand:
      for (int g = 0; g < m; ++g) v.emplace_back(d(rng));
      return ValuationFunction::unit_demand(v);
    case ValuationKind::Table: {
      const std::size_t size = std::size_t{1} << m;
      std::vector<Value> t(size);
      for (std::size_t s = 1; s < size; ++s) {
        Value best = d(rng);
        for (int g = 0; g < m; ++g)
          if ((s >> g) & 1U) best = std::max(best, t[s & ~(std::size_t{1} << g)]);
        t[s] = best;
      }
      return ValuationFunction::table(m, t);
    }
  }
  return ValuationFunction::additive(v);
}

inline Instance random_instance(std::mt19937_64& rng, int n, int m, fairdiv::ValuationKind kind) {
  std::vector<ValuationFunction> vs;
  for (int i = 0; i < n; ++i) vs.push_back(random_valuation(rng, kind, m));
  return Instance(std::move(vs));
}

/// Uniformly random allocation; with `partial` items may stay in the pool.
inline Allocation random_allocation(std::mt19937_64& rng, int n, int m, bool partial = false) {
  std::uniform_int_distribution<int> d(0, partial ? n : n - 1);
  std::vector<ItemSet> b(static_cast<std::size_t>(n));
  for (int g = 0; g < m; ++g) {
    const int k = d(rng);
    if (k < n) b[static_cast<std::size_t>(k)].insert(g);
  }
  return Allocation::from_bundles(b, m);
}

// Reference deciders written straight from the definitions, used to
// cross-check the library's verifier.

inline bool naive_alpha_efx(const Instance& inst, const Allocation& a, const Value& alpha) {
  for (int i = 0; i < a.agents(); ++i)
    for (int j = 0; j < a.agents(); ++j) {
      if (i == j) continue;
      for (int g : a.bundle(j))
        if (inst.value(i, a.bundle(i)) < alpha * inst.value(i, a.bundle(j).without(g))) return false;
    }
  return true;
}

inline bool naive_ef1(const Instance& inst, const Allocation& a) {
  for (int i = 0; i < a.agents(); ++i)
    for (int j = 0; j < a.agents(); ++j) {
      if (i == j || a.bundle(j).empty()) continue;
      bool ok = false;
      for (int g : a.bundle(j))
        if (inst.value(i, a.bundle(i)) >= inst.value(i, a.bundle(j).without(g))) ok = true;
      if (!ok) return false;
    }
  return true;
}

inline bool naive_alpha_ef(const Instance& inst, const Allocation& a, const Value& alpha) {
  for (int i = 0; i < a.agents(); ++i)
    for (int j = 0; j < a.agents(); ++j)
      if (i != j && inst.value(i, a.bundle(i)) < alpha * inst.value(i, a.bundle(j))) return false;
  return true;
}

/// Minimum over the triples with a positive comparison value, capped at 1.
inline Value naive_max_alpha_efx(const Instance& inst, const Allocation& a) {
  Value best = 1;
  for (int i = 0; i < a.agents(); ++i)
    for (int j = 0; j < a.agents(); ++j) {
      if (i == j) continue;
      for (int g : a.bundle(j)) {
        const Value other = inst.value(i, a.bundle(j).without(g));
        if (other == 0) continue;
        const Value r = inst.value(i, a.bundle(i)) / other;
        if (r < best) best = r;
      }
    }
  return best;
}

}  // namespace fdtest
