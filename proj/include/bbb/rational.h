// Copyright 2026 The bbb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BBB_RATIONAL_H_
#define BBB_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bbb {

// Exact arbitrary-precision rational. All solver arithmetic goes through it.
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rational& r);

// Accepts "p", "-p" or "p/q". Throws InputError on malformed text or q = 0.
Rational ParseRational(std::string_view text);

bool IsIntegral(const Rational& r);
Rational Floor(const Rational& r);
Rational Ceil(const Rational& r);

// Rational extended with +infinity, the value type of f and g.
class ExtRational {
 public:
  ExtRational() : infinite_(true) {}
  ExtRational(Rational value) : infinite_(false), value_(std::move(value)) {}
  static ExtRational Infinity() { return ExtRational(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Precondition: is_finite().
  const Rational& value() const { return value_; }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return Infinity();
    return ExtRational(a.value_ + b.value_);
  }
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string ToString() const;

 private:
  bool infinite_;
  Rational value_;
};

// Error hierarchy. Each maps to one CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// A desk-scale enumeration guard was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A constructive step that the theory guarantees did not succeed.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bbb

#endif  // BBB_RATIONAL_H_
