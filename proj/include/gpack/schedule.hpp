#pragma once

#include <cstddef>

namespace gpack {

/// A positive real x stored as log x = outer - exp(inner). Plain logs have
/// inner = -inf. The nested form carries the doubly exponential constants
/// of the analysis (C is exp of a number near 1e30) without overflow.
struct LogValue {
  long double outer = 0;
  long double inner;

  LogValue();
  static LogValue from_log(long double log_value);
  static LogValue from_value(long double value);

  /// log x; -inf when the nested term overflows.
  long double log() const;
  /// x itself. Throws std::range_error when x under- or overflows.
  long double value() const;

  LogValue operator*(const LogValue& other) const;
  LogValue operator/(const LogValue& other) const;
  LogValue pow(long double k) const;  ///< k > 0
  bool operator<(const LogValue& other) const;
};

/// The constants of the analysis for given D, gamma, n:
///   eta = gamma^D / (200 D), delta = gamma^{10D} eta / (1e6 D^4),
///   C = 40 D exp(K) with K = 1000 D delta^-2 gamma^{-2D-10}, C' = 1e4 C / delta,
///   alpha_x = delta / (1e8 C D) exp(1e8 C D^3 delta^-1 (x - 2n) / n),
///   eps = alpha_0 delta^2 gamma^{10D} / (1000 C D), c = D^-4 eps^4 / 100,
///   xi = alpha_0 / 100, beta_t(alpha) = alpha exp(K t / n).
struct ConstantSchedule {
  std::size_t D = 1;
  long double gamma = 0;
  std::size_t n = 0;
  LogValue eta, delta, C, C_prime, eps, c, xi;
  long double log_K = 0;  ///< log of the beta growth rate K

  /// alpha_x for 0 <= x <= 2n.
  LogValue alpha(long double x) const;
  /// beta_t(alpha) given log alpha; exact pass-through at t = 0.
  LogValue beta(const LogValue& alpha, long double t) const;
};

/// Throws std::invalid_argument unless D >= 1, 0 < gamma < 1 and n >= 1.
ConstantSchedule constant_schedule(std::size_t D, long double gamma, std::size_t n);

}  // namespace gpack
