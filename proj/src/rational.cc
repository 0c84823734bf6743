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

#include "ceg/rational.h"

#include <cctype>
#include <stdexcept>

namespace ceg {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int DigitsToInt(std::string_view s) { return cpp_int(std::string(s)); }

}  // namespace

Rat::Rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = cpp_rational(cpp_int(num), cpp_int(den));
}

Rat Rat::FromString(std::string_view s) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  auto fail = [&s]() -> Rat {
    throw std::invalid_argument("malformed number string: '" +
                                std::string(s) + "'");
  };

  cpp_rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return fail();
    cpp_int d = DigitsToInt(den);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(s) +
                                  "'");
    }
    value = cpp_rational(DigitsToInt(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!AllDigits(whole) || !AllDigits(frac)) return fail();
    cpp_int den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = cpp_rational(DigitsToInt(whole) * den + DigitsToInt(frac), den);
  } else {
    if (!AllDigits(body)) return fail();
    value = cpp_rational(DigitsToInt(body));
  }
  if (negative) value = -value;
  return Rat(std::move(value));
}

std::string Rat::ToString() const {
  std::string out = numerator(v_).str();
  if (denominator(v_) != 1) {
    out += '/';
    out += denominator(v_).str();
  }
  return out;
}

Rat Rat::operator-() const { return Rat(cpp_rational(-v_)); }

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace ceg
