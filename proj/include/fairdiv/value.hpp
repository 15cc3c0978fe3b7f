#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fairdiv {

/// Exact nonnegative rational. Every comparison in the library goes through
/// this type; there is no floating tolerance anywhere.
using Value = mpq_class;

/// Parses "p/q", "p" or a decimal like "1.25". The result is canonicalized.
Value parse_value(std::string_view text);

/// Serializes as "p/q", always with an explicit denominator.
std::string format_value(const Value& v);

inline Value value_of(long n) { return Value(n); }
inline Value ratio(long p, long q) {
  Value v(p, q);
  v.canonicalize();
  return v;
}

}  // namespace fairdiv
