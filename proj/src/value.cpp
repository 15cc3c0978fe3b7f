#include "fairdiv/value.hpp"

#include <cctype>

#include "fairdiv/error.hpp"

namespace fairdiv {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Value parse_value(std::string_view text) {
  const std::string_view s = trim(text);
  const auto bad = [&] { fail(ErrorCode::ParseError, "not a nonnegative rational: '" + std::string(text) + "'"); };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad();
    Value v{mpz_class(std::string(num)), mpz_class(std::string(den))};
    if (v.get_den() == 0) bad();
    v.canonicalize();
    return v;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad();
    mpz_class scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    mpz_class num(whole.empty() ? std::string("0") : std::string(whole));
    num = num * scale + mpz_class(std::string(frac));
    Value v(num, scale);
    v.canonicalize();
    return v;
  }
  if (!all_digits(s)) bad();
  return Value(mpz_class(std::string(s)));
}

std::string format_value(const Value& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace fairdiv
