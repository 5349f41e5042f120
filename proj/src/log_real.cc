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

#include "domlab/log_real.h"

#include <cstdint>
#include <cstdio>
#include <utility>

#include "domlab/errors.h"

namespace domlab {

LogReal LogReal::FromDouble(double x) {
  LogReal r;
  if (x == 0.0) return r;
  r.sign_ = x > 0 ? 1 : -1;
  r.log_ = std::log(std::fabs(x));
  return r;
}

LogReal LogReal::FromLog(double log_magnitude, int sign) {
  LogReal r;
  if (std::isinf(log_magnitude) && log_magnitude < 0) return r;
  r.sign_ = sign < 0 ? -1 : 1;
  r.log_ = log_magnitude;
  return r;
}

LogReal operator*(const LogReal& a, const LogReal& b) {
  if (a.is_zero() || b.is_zero()) return LogReal::Zero();
  return LogReal::FromLog(a.log_ + b.log_, a.sign_ * b.sign_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
  if (b.is_zero()) throw DomainError("LogReal division by zero");
  if (a.is_zero()) return LogReal::Zero();
  return LogReal::FromLog(a.log_ - b.log_, a.sign_ * b.sign_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const LogReal& big = a.log_ >= b.log_ ? a : b;
  const LogReal& small = a.log_ >= b.log_ ? b : a;
  const double t = std::exp(small.log_ - big.log_);
  if (big.sign_ == small.sign_) {
    return LogReal::FromLog(big.log_ + std::log1p(t), big.sign_);
  }
  if (t == 1.0) return LogReal::Zero();
  return LogReal::FromLog(big.log_ + std::log1p(-t), big.sign_);
}

LogReal LogReal::pow(long long e) const {
  if (e < 0) throw DomainError("LogReal::pow with negative exponent");
  if (e == 0) return One();
  if (is_zero()) return Zero();
  const int s = (sign_ < 0 && (e % 2 == 1)) ? -1 : 1;
  return FromLog(log_ * static_cast<double>(e), s);
}

double log_binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return -std::numeric_limits<double>::infinity();
  k = std::min(k, n - k);
  if (n <= 62) {
    // Exact: C(n, k) <= C(62, 31) < 2^63 and every partial product fits in
    // 128 bits before the division.
    unsigned __int128 c = 1;
    for (long long i = 1; i <= k; ++i) {
      c = c * static_cast<unsigned __int128>(n - k + i) / i;
    }
    return std::log(static_cast<double>(static_cast<std::uint64_t>(c)));
  }
  return std::lgamma(static_cast<double>(n) + 1) -
         std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

double relative_error(const LogReal& a, const LogReal& b) {
  if (b.is_zero()) return std::fabs(a.to_double());
  if (a.is_zero()) return 1.0;
  if (a.sign() != b.sign()) return 1.0 + std::exp(a.log_magnitude() - b.log_magnitude());
  // |e^{la} - e^{lb}| / e^{lb} = |expm1(la - lb)|
  return std::fabs(std::expm1(a.log_magnitude() - b.log_magnitude()));
}

std::string to_decimal(const LogReal& x, int significant) {
  char buf[64];
  if (x.is_zero()) return "0";
  const double lm = x.log_magnitude();
  if (std::isnan(lm)) return "nan";
  if (std::isinf(lm)) return x.sign() < 0 ? "-inf" : "inf";
  if (lm > -700.0 && lm < 700.0) {
    std::snprintf(buf, sizeof(buf), "%.*g", significant, x.to_double());
    return buf;
  }
  const double l10 = lm / std::log(10.0);
  long long exponent = static_cast<long long>(std::floor(l10));
  double mantissa = std::pow(10.0, l10 - static_cast<double>(exponent));
  // Guard against the mantissa rounding up to 10.
  std::snprintf(buf, sizeof(buf), "%.*f", significant - 1, mantissa);
  if (buf[0] == '1' && buf[1] == '0') {
    mantissa /= 10.0;
    ++exponent;
  }
  std::snprintf(buf, sizeof(buf), "%s%.*fe%+lld", x.sign() < 0 ? "-" : "",
                significant - 1, mantissa, exponent);
  return buf;
}

}  // namespace domlab
