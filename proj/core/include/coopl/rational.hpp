// Copyright 2026 The Coopl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Exact rational arithmetic used throughout the library. Every game value,
// LP coefficient, and learned weight is a Rational; doubles appear only in
// probabilities, sample-complexity formulas, and report renderings.

#ifndef COOPL_RATIONAL_HPP_
#define COOPL_RATIONAL_HPP_

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coopl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// 2^-r, the strict-separation tolerance used by the threshold-task learner.
inline Rational pow2_inverse(unsigned r) {
  BigInt den = 1;
  den <<= r;
  return Rational(BigInt(1), den);
}

inline std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;  // canonical "p" or "p/q", always in lowest terms
  return os.str();
}

// Accepts "p" and "p/q" with optional sign; q must be positive and nonzero.
inline Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_text = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num_text.empty() || den_text.empty()) {
    throw std::invalid_argument("not a rational literal: " + text);
  }
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(num_text);
    BigInt den(den_text);
    if (den <= 0) {
      throw std::invalid_argument("rational denominator must be positive: " + text);
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational literal: " + text);
  }
}

}  // namespace coopl

#endif  // COOPL_RATIONAL_HPP_
