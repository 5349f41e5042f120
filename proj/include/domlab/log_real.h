// Copyright 2026 The domlab Authors
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

#ifndef DOMLAB_LOG_REAL_H_
#define DOMLAB_LOG_REAL_H_

#include <cmath>
#include <limits>
#include <string>

namespace domlab {

// A real number stored as (sign, log|x|). Zero has sign 0 and log -inf.
// Products and powers of moment formulas stay representable long after
// doubles would under- or overflow.
class LogReal {
 public:
  constexpr LogReal() = default;

  static constexpr LogReal Zero() { return LogReal(); }
  static LogReal One() { return FromLog(0.0); }
  static LogReal FromDouble(double x);
  // sign must be +1 or -1; a log of -inf yields zero.
  static LogReal FromLog(double log_magnitude, int sign = 1);

  int sign() const { return sign_; }
  double log_magnitude() const { return log_; }
  bool is_zero() const { return sign_ == 0; }
  double to_double() const {
    return sign_ == 0 ? 0.0 : sign_ * std::exp(log_);
  }

  LogReal operator-() const {
    LogReal r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  friend LogReal operator*(const LogReal& a, const LogReal& b);
  // Throws DomainError on division by zero.
  friend LogReal operator/(const LogReal& a, const LogReal& b);
  friend LogReal operator+(const LogReal& a, const LogReal& b);
  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }
  LogReal& operator+=(const LogReal& o) { return *this = *this + o; }
  LogReal& operator*=(const LogReal& o) { return *this = *this * o; }

  // x^e for integer e >= 0, with 0^0 = 1.
  LogReal pow(long long e) const;

  friend bool operator==(const LogReal&, const LogReal&) = default;

 private:
  int sign_ = 0;
  double log_ = -std::numeric_limits<double>::infinity();
};

// log C(n, k); -inf when k < 0 or k > n.
double log_binomial(long long n, long long k);
inline LogReal binomial(long long n, long long k) {
  return LogReal::FromLog(log_binomial(n, k));
}

// |a - b| / |b|, or |a| when b is zero.
double relative_error(const LogReal& a, const LogReal& b);

// Decimal rendering with `significant` digits; works far outside the
// double exponent range ("1.23456789012e+4521").
std::string to_decimal(const LogReal& x, int significant = 12);

}  // namespace domlab

#endif  // DOMLAB_LOG_REAL_H_
