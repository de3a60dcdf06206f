#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace scherk {

/// Exact rational number. GMP keeps it canonical: denominator > 0,
/// gcd(num, den) = 1, after every arithmetic operation we perform.
using Scalar = mpq_class;

inline bool is_zero(const Scalar &s) { return sgn(s) == 0; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Scalar &s) { return s.get_str(10); }

/// Accepts "p", "p/q", with optional leading sign. Throws InvalidArgument.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto ok = !s.empty();
  for (std::size_t i = 0; ok && i < s.size(); ++i) {
    char c = s[i];
    bool digit = c >= '0' && c <= '9';
    bool sign = (c == '-' || c == '+') && (i == 0 || s[i - 1] == '/');
    ok = digit || sign || c == '/';
  }
  if (ok && s.front() == '+') s.erase(0, 1);
  Scalar out;
  if (!ok || out.set_str(s, 10) != 0)
    throw InvalidArgument("not a rational literal: '" + std::string(text) +
                          "'");
  if (out.get_den() == 0) throw InvalidArgument("zero denominator: " + s);
  out.canonicalize();
  return out;
}

} // namespace scherk
