#include "gpack/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gpack {

namespace {

constexpr long double neg_inf = -std::numeric_limits<long double>::infinity();

// log(exp(a) + exp(b)).
long double log_add(long double a, long double b) {
  if (a == neg_inf) return b;
  if (b == neg_inf) return a;
  const long double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

LogValue::LogValue() : inner(neg_inf) {}

LogValue LogValue::from_log(long double log_value) {
  LogValue v;
  v.outer = log_value;
  return v;
}

LogValue LogValue::from_value(long double value) {
  if (!(value > 0)) throw std::invalid_argument("LogValue: value must be positive");
  return from_log(std::log(value));
}

long double LogValue::log() const {
  if (inner == neg_inf) return outer;
  return outer - std::exp(inner);
}

long double LogValue::value() const {
  const long double l = log();
  const long double v = std::exp(l);
  if (!std::isfinite(v) || (v == 0 && std::isfinite(l)))
    throw std::range_error("LogValue::value: outside the representable range, use log()");
  return v;
}

LogValue LogValue::operator*(const LogValue& other) const {
  LogValue v;
  v.outer = outer + other.outer;
  v.inner = log_add(inner, other.inner);
  return v;
}

LogValue LogValue::operator/(const LogValue& other) const {
  if (other.inner != neg_inf)
    throw std::invalid_argument("LogValue: division by a nested value is not representable");
  LogValue v = *this;
  v.outer -= other.outer;
  return v;
}

LogValue LogValue::pow(long double k) const {
  if (!(k > 0)) throw std::invalid_argument("LogValue::pow: exponent must be positive");
  LogValue v;
  v.outer = k * outer;
  v.inner = inner == neg_inf ? neg_inf : inner + std::log(k);
  return v;
}

bool LogValue::operator<(const LogValue& other) const {
  // Compare outer - exp(inner) without evaluating huge exponentials when
  // possible.
  if (inner == other.inner) return outer < other.outer;
  if (inner > other.inner && outer <= other.outer) return true;
  if (inner < other.inner && outer >= other.outer) return false;
  return log() < other.log();
}

LogValue ConstantSchedule::alpha(long double x) const {
  if (x < 0 || x > 2.0 * static_cast<long double>(n))
    throw std::invalid_argument("ConstantSchedule::alpha: x outside [0, 2n]");
  const long double logD = std::log(static_cast<long double>(D));
  // alpha_x = delta / (1e8 C D) * exp(-(1e8 C D^3 / delta) (2n - x) / n)
  LogValue a = delta;
  a.outer -= 8 * std::log(10.0L) + logD;
  a = a / LogValue::from_log(C.log());
  const long double gap = (2.0 * static_cast<long double>(n) - x) / static_cast<long double>(n);
  if (gap > 0)
    a.inner = log_add(a.inner, 8 * std::log(10.0L) + C.log() + 3 * logD - delta.log() + std::log(gap));
  return a;
}

LogValue ConstantSchedule::beta(const LogValue& a, long double t) const {
  if (t < 0) throw std::invalid_argument("ConstantSchedule::beta: t must be nonnegative");
  if (t == 0) return a;
  LogValue b = a;
  // K t / n is itself astronomically large for the reference constants;
  // overflow to +inf is the faithful outcome there.
  b.outer += std::exp(log_K + std::log(t) - std::log(static_cast<long double>(n)));
  return b;
}

ConstantSchedule constant_schedule(std::size_t D, long double gamma, std::size_t n) {
  if (D < 1) throw std::invalid_argument("constant_schedule: D must be at least 1");
  if (!(gamma > 0 && gamma < 1)) throw std::invalid_argument("constant_schedule: gamma must lie in (0, 1)");
  if (n < 1) throw std::invalid_argument("constant_schedule: n must be positive");
  ConstantSchedule s;
  s.D = D;
  s.gamma = gamma;
  s.n = n;
  const long double d = static_cast<long double>(D);
  const long double lg = std::log(gamma);
  const long double logD = std::log(d);
  const long double ln10 = std::log(10.0L);
  s.eta = LogValue::from_log(d * lg - std::log(200.0 * d));
  s.delta = LogValue::from_log(10 * d * lg + s.eta.log() - 6 * ln10 - 4 * logD);
  // K = 1000 D delta^-2 gamma^{-2D-10}
  s.log_K = 3 * ln10 + logD - 2 * s.delta.log() - (2 * d + 10) * lg;
  s.C = LogValue::from_log(std::log(40.0 * d) + std::exp(s.log_K));
  s.C_prime = LogValue::from_log(4 * ln10 + s.C.log() - s.delta.log());
  const LogValue a0 = s.alpha(0);
  LogValue e = a0;
  e.outer += 2 * s.delta.log() + 10 * d * lg - 3 * ln10 - s.C.log() - logD;
  s.eps = e;
  LogValue c = s.eps.pow(4);
  c.outer += -4 * logD - 2 * ln10;
  s.c = c;
  LogValue xi = a0;
  xi.outer -= 2 * ln10;
  s.xi = xi;
  return s;
}

}  // namespace gpack
