#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treeweave {

// Exact fraction with a small numerator/denominator. Used for balance
// fractions (b) and for congestion/lower-bound ratios; all comparisons
// against 64-bit weights are done in 128-bit integer arithmetic so no
// floating point ever enters a balance or ratio decision.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline bool rational_less(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

// Parses "P/Q" or a bare integer "P". Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    std::int64_t n = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("rational: trailing junk in '" + text + "'");
    return Rational(n, 1);
  }
  std::int64_t n = std::stoll(text.substr(0, slash), &used);
  if (used != slash) throw std::invalid_argument("rational: bad numerator in '" + text + "'");
  std::string den_text = text.substr(slash + 1);
  std::int64_t d = std::stoll(den_text, &used);
  if (used != den_text.size()) throw std::invalid_argument("rational: bad denominator in '" + text + "'");
  return Rational(n, d);
}

}  // namespace treeweave
