// Fast approximate log2 on binary32 floats via exponent/fraction bit
// manipulation, and the fast evaluation path for the signed-truncated-log
// activation built on it.
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stlact/activations.hpp"

namespace stlact {

// Sign bit s, biased 8-bit exponent E, fraction V of a normal binary32
// value: x = (-1)^s * 2^(E-127) * (1+V).
struct Binary32Parts {
  int sign = 0;             // 0 or 1
  int biased_exponent = 0;  // E in [1, 254] for accepted inputs
  double fraction = 0.0;    // V in [0, 1)
};

// Rejects zero, denormals, infinities and NaN: the decomposition identity
// only holds for normal values (E not in {0, 255}).
inline Binary32Parts decompose_binary32(float x) {
  const uint32_t bits = std::bit_cast<uint32_t>(x);
  const uint32_t exponent = (bits >> 23) & 0xffu;
  const uint32_t mantissa = bits & 0x7fffffu;
  if (exponent == 0) {
    throw std::domain_error(mantissa == 0
                                ? "decompose_binary32: zero is not normal"
                                : "decompose_binary32: denormal input");
  }
  if (exponent == 0xffu) {
    throw std::domain_error(mantissa == 0
                                ? "decompose_binary32: infinity input"
                                : "decompose_binary32: NaN input");
  }
  Binary32Parts parts;
  parts.sign = static_cast<int>(bits >> 31);
  parts.biased_exponent = static_cast<int>(exponent);
  parts.fraction = static_cast<double>(mantissa) * 0x1.0p-23;
  return parts;
}

// (-1)^s * 2^(E-127) * (1+V); bit-exact inverse of decompose_binary32.
inline float reassemble_binary32(const Binary32Parts& parts) {
  const double magnitude =
      std::ldexp(1.0 + parts.fraction, parts.biased_exponent - 127);
  return static_cast<float>(parts.sign ? -magnitude : magnitude);
}

// Quadratic approximation of log2 on [1, 2), evaluated in Horner form.
// Measured max absolute error on the interval is just under 0.005.
inline double log2_poly(double m) {
  if (!(m >= 1.0 && m < 2.0))
    throw std::domain_error("log2_poly: argument outside [1, 2)");
  return (-0.344845 * m + 2.024658) * m - 1.674873;
}

// Lookup table of log2(1 + i/size) with linear interpolation between
// entries; immutable after construction and safe to share across threads.
class Log2Lut {
 public:
  explicit Log2Lut(size_t size) : size_(size) {
    if (size < 2 || (size & (size - 1)) != 0)
      throw std::domain_error("Log2Lut: size must be a power of two >= 2");
    entries_.resize(size);
    for (size_t i = 0; i < size; ++i)
      entries_[i] = std::log2(1.0 + static_cast<double>(i) / size);
  }

  size_t size() const { return size_; }
  const std::vector<double>& entries() const { return entries_; }

  // log2(1+v) for v in [0, 1); the implicit right endpoint log2(2) = 1
  // closes the last interval.
  double lookup(double v) const {
    const double scaled = v * static_cast<double>(size_);
    size_t idx = static_cast<size_t>(scaled);
    if (idx >= size_) idx = size_ - 1;
    const double lo = entries_[idx];
    const double hi = idx + 1 < size_ ? entries_[idx + 1] : 1.0;
    return lo + (scaled - static_cast<double>(idx)) * (hi - lo);
  }

 private:
  size_t size_;
  std::vector<double> entries_;
};

inline Log2Lut build_lut(size_t size) { return Log2Lut(size); }

inline constexpr size_t default_lut_size = 256;

inline const Log2Lut& shared_default_lut() {
  static const Log2Lut lut(default_lut_size);
  return lut;
}

enum class FastLogMode { polynomial, lut };

// (E - 127) + approx(log2(1+V)) for normal x > 1.
inline double fast_log2(float x, FastLogMode mode,
                        const Log2Lut& lut = shared_default_lut()) {
  if (!(x > 1.0f)) throw std::domain_error("fast_log2: requires x > 1");
  const Binary32Parts parts = decompose_binary32(x);
  const double frac_log = mode == FastLogMode::polynomial
                              ? log2_poly(1.0 + parts.fraction)
                              : lut.lookup(parts.fraction);
  return static_cast<double>(parts.biased_exponent - 127) + frac_log;
}

inline constexpr double ln2 = 0.6931471805599453;

// beta = alpha * sign(x) / log2(e) = alpha * sign(x) * ln(2).
inline double stl_beta(double alpha, double x) { return alpha * sign_of(x) * ln2; }

// Fast signed-truncated-log: exact alpha*x on |x| <= 1, and
// beta*fast_log2(|x|) + alpha*sign(x) outside. On the log branch this
// agrees with stl_value within alpha*ln(2)*0.006 in absolute value.
inline double fast_stl(float x, double alpha, FastLogMode mode,
                       const Log2Lut& lut = shared_default_lut()) {
  detail::require_positive_alpha(alpha);
  const float ax = std::fabs(x);
  if (ax <= 1.0f) return alpha * static_cast<double>(x);
  const double s = sign_of(static_cast<double>(x));
  return stl_beta(alpha, x) * fast_log2(ax, mode, lut) + alpha * s;
}

// Error audit of the fractional-log approximation against the library log2.
struct AuditRow {
  double m = 0.0;        // argument in [1, 2)
  double approx = 0.0;   // polynomial or LUT value
  double exact = 0.0;    // std::log2(m)
  double abs_err = 0.0;
};

struct AuditReport {
  std::vector<AuditRow> rows;   // sampled at the requested resolution
  double max_abs_err = 0.0;     // max over dense_points uniform samples
  size_t dense_points = 0;
};

inline double audit_eval(FastLogMode mode, double m, const Log2Lut& lut) {
  return mode == FastLogMode::polynomial ? log2_poly(m) : lut.lookup(m - 1.0);
}

inline AuditReport fastlog_audit(FastLogMode mode, size_t row_points,
                                 size_t dense_points = 1000000,
                                 const Log2Lut& lut = shared_default_lut()) {
  if (row_points < 2 || dense_points < 2)
    throw std::domain_error("fastlog_audit: need at least 2 grid points");
  AuditReport report;
  report.dense_points = dense_points;
  report.rows.reserve(row_points);
  for (size_t i = 0; i < row_points; ++i) {
    AuditRow row;
    row.m = 1.0 + static_cast<double>(i) / static_cast<double>(row_points);
    row.approx = audit_eval(mode, row.m, lut);
    row.exact = std::log2(row.m);
    row.abs_err = std::fabs(row.approx - row.exact);
    report.rows.push_back(row);
  }
  for (size_t i = 0; i < dense_points; ++i) {
    const double m =
        1.0 + static_cast<double>(i) / static_cast<double>(dense_points);
    const double err = std::fabs(audit_eval(mode, m, lut) - std::log2(m));
    report.max_abs_err = std::max(report.max_abs_err, err);
  }
  return report;
}

}  // namespace stlact
