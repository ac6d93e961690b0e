// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "ordex/errors.hpp"

namespace ordex {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k); zero outside the support so hypergeometric terms vanish naturally.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= static_cast<std::uint64_t>(n - i);
    result /= static_cast<std::uint64_t>(i + 1);  // exact: prefix products are binomials
  }
  return result;
}

inline double to_double(const BigRat& r) { return r.template convert_to<double>(); }

inline std::string to_fraction_string(const BigRat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Natural log of a big rational, usable far beyond double range.
// Accurate to ~1e-15 relative, which is plenty for growth-trend checks.
inline double log_big(const BigInt& v) {
  if (v <= 0) throw InvalidParams("log_big: nonpositive argument");
  const auto bits = msb(v);  // index of the most significant bit
  if (bits <= 62) return std::log(v.template convert_to<double>());
  const BigInt top = v >> static_cast<unsigned>(bits - 62);
  return std::log(top.template convert_to<double>()) +
         static_cast<double>(bits - 62) * std::log(2.0);
}

inline double log_big(const BigRat& r) {
  return log_big(numerator(r)) - log_big(denominator(r));
}

// Exact probability: a rational constrained to [0, 1], kept in lowest terms
// (cpp_rational canonicalizes on construction).
class ExactProbability {
 public:
  ExactProbability() = default;

  explicit ExactProbability(BigRat value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1)
      throw InvalidParams("probability outside [0,1]: " + to_fraction_string(value_));
  }

  ExactProbability(BigInt num, BigInt den)
      : ExactProbability(BigRat(std::move(num), std::move(den))) {}

  const BigRat& value() const { return value_; }
  BigInt num() const { return numerator(value_); }
  BigInt den() const { return denominator(value_); }
  double as_double() const { return to_double(value_); }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const ExactProbability&, const ExactProbability&) = default;
  friend auto operator<=>(const ExactProbability& a, const ExactProbability& b) {
    return a.value_ < b.value_   ? std::strong_ordering::less
           : a.value_ > b.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  BigRat value_ = 0;
};

}  // namespace ordex
