// Copyright 2026 The ceg authors
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

#ifndef CEG_RATIONAL_H_
#define CEG_RATIONAL_H_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ceg {

// Exact rational number, always held in canonical reduced form with a
// positive denominator. Arbitrary precision: probability products along
// deep paths and their sums never overflow or round.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long long n) : v_(n) {}  // NOLINT: implicit by design, 3 == Rat(3)
  Rat(long long num, long long den);

  // Accepts "a", "-a", "a/b" and exact decimals like "0.25" (= 1/4).
  // Throws std::invalid_argument on malformed input or zero denominator.
  static Rat FromString(std::string_view s);

  // Canonical rendering: "7", "-3/4". Parsing the result round-trips.
  std::string ToString() const;

  bool IsZero() const { return v_.is_zero(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws std::domain_error on zero divisor

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

}  // namespace ceg

#endif  // CEG_RATIONAL_H_
