// Scalar activation functions: exact double-precision values and analytic
// derivatives for the signed-truncated-log activation and ten comparison
// activations, plus the vector softmax.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stlact {

enum class Activation {
  sigmoid,
  relu,
  prelu,
  elu,
  swish,
  tanh,
  softsign,
  softmax,
  nlrelu,
  serf,
  stl,
};

inline constexpr int activation_count = 11;

constexpr std::string_view activation_name(Activation a) {
  switch (a) {
    case Activation::sigmoid: return "sigmoid";
    case Activation::relu: return "relu";
    case Activation::prelu: return "prelu";
    case Activation::elu: return "elu";
    case Activation::swish: return "swish";
    case Activation::tanh: return "tanh";
    case Activation::softsign: return "softsign";
    case Activation::softmax: return "softmax";
    case Activation::nlrelu: return "nlrelu";
    case Activation::serf: return "serf";
    case Activation::stl: return "stl";
  }
  return "?";
}

inline std::optional<Activation> parse_activation(std::string_view name) {
  for (int i = 0; i < activation_count; ++i) {
    auto a = static_cast<Activation>(i);
    if (activation_name(a) == name) return a;
  }
  return std::nullopt;
}

// Common-literature defaults; the scale parameter of stl defaults to 1.
constexpr double default_param(Activation a) {
  switch (a) {
    case Activation::prelu: return 0.01;
    case Activation::elu: return 1.0;
    case Activation::nlrelu: return 1.0;
    case Activation::stl: return 1.0;
    default: return 0.0;  // unused
  }
}

// Activation identity: tag plus the alpha of prelu/elu/nlrelu/stl
// (ignored by the other kinds).
struct ActivationKind {
  Activation tag = Activation::stl;
  double param = 1.0;

  ActivationKind() = default;
  explicit ActivationKind(Activation t) : tag(t), param(default_param(t)) {}
  ActivationKind(Activation t, double p) : tag(t), param(p) {}

  std::string name() const { return std::string(activation_name(tag)); }
};

// sign with sign(0) = 0; the log branch is never taken at x = 0, so the
// extension at 0 does not affect any value.
inline double sign_of(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

namespace detail {

inline void require_positive_alpha(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be > 0");
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// log(1 + e^x) without overflow for large |x|.
inline double softplus(double x) {
  return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// Abramowitz & Stegun 7.1.26 rational approximation of erf,
// |error| <= 1.5e-7 in absolute value.
inline constexpr double erf_p = 0.3275911;
inline constexpr double erf_a1 = 0.254829592;
inline constexpr double erf_a2 = -0.284496736;
inline constexpr double erf_a3 = 1.421413741;
inline constexpr double erf_a4 = -1.453152027;
inline constexpr double erf_a5 = 1.061405429;

inline double erf_approx(double x) {
  const double ax = std::fabs(x);
  const double t = 1.0 / (1.0 + erf_p * ax);
  const double poly =
      t * (erf_a1 + t * (erf_a2 + t * (erf_a3 + t * (erf_a4 + t * erf_a5))));
  return std::copysign(1.0 - poly * std::exp(-ax * ax), x);
}

// Exact derivative of erf_approx (not of the true erf): differentiating the
// implemented approximation keeps analytic gradients consistent with finite
// differences of the implemented values.
inline double erf_approx_deriv(double x) {
  const double ax = std::fabs(x);
  const double t = 1.0 / (1.0 + erf_p * ax);
  const double poly =
      t * (erf_a1 + t * (erf_a2 + t * (erf_a3 + t * (erf_a4 + t * erf_a5))));
  const double dpoly =
      erf_a1 +
      t * (2 * erf_a2 + t * (3 * erf_a3 + t * (4 * erf_a4 + t * 5 * erf_a5)));
  return std::exp(-ax * ax) * (erf_p * t * t * dpoly + 2.0 * ax * poly);
}

}  // namespace detail

// Signed and truncated logarithm: alpha*x on |x| <= 1, the sign-preserving
// shifted natural log outside. Both branches give exactly +-alpha at |x| = 1.
inline double stl_value(double x, double alpha = 1.0) {
  detail::require_positive_alpha(alpha);
  const double ax = std::fabs(x);
  if (ax <= 1.0) return alpha * x;
  return alpha * sign_of(x) * (std::log(ax) + 1.0);
}

// Gradient of stl_value: alpha on |x| <= 1, alpha/|x| outside.
// Always in (0, alpha], continuous everywhere including |x| = 1.
inline double stl_grad(double x, double alpha = 1.0) {
  detail::require_positive_alpha(alpha);
  const double ax = std::fabs(x);
  return ax <= 1.0 ? alpha : alpha / ax;
}

inline double activation_value(ActivationKind k, double x) {
  switch (k.tag) {
    case Activation::sigmoid: return detail::sigmoid(x);
    case Activation::relu: return x > 0 ? x : 0.0;
    case Activation::prelu: return x > 0 ? x : k.param * x;
    case Activation::elu: return x > 0 ? x : k.param * std::expm1(x);
    case Activation::swish: return x * detail::sigmoid(x);
    case Activation::tanh: return std::tanh(x);
    case Activation::softsign: return x / (std::fabs(x) + 1.0);
    case Activation::nlrelu: return std::log1p(k.param * (x > 0 ? x : 0.0));
    case Activation::serf: {
      const double sp = detail::softplus(x);
      return x * detail::erf_approx(sp);
    }
    case Activation::stl: return stl_value(x, k.param);
    case Activation::softmax:
      throw std::domain_error("softmax is vector-valued; use softmax()");
  }
  throw std::domain_error("unknown activation");
}

// Analytic derivative. relu/prelu/nlrelu return the right-hand derivative
// at their kink x = 0; elu returns its lower-branch limit there.
inline double activation_grad(ActivationKind k, double x) {
  switch (k.tag) {
    case Activation::sigmoid: {
      const double s = detail::sigmoid(x);
      return s * (1.0 - s);
    }
    case Activation::relu: return x >= 0 ? 1.0 : 0.0;
    case Activation::prelu: return x >= 0 ? 1.0 : k.param;
    case Activation::elu: return x > 0 ? 1.0 : k.param * std::exp(x);
    case Activation::swish: {
      const double s = detail::sigmoid(x);
      return s * (1.0 + x * (1.0 - s));
    }
    case Activation::tanh: {
      const double t = std::tanh(x);
      return 1.0 - t * t;
    }
    case Activation::softsign: {
      const double d = std::fabs(x) + 1.0;
      return 1.0 / (d * d);
    }
    case Activation::nlrelu:
      return x >= 0 ? k.param / (k.param * x + 1.0) : 0.0;
    case Activation::serf: {
      const double sp = detail::softplus(x);
      return detail::erf_approx(sp) +
             x * detail::erf_approx_deriv(sp) * detail::sigmoid(x);
    }
    case Activation::stl: return stl_grad(x, k.param);
    case Activation::softmax:
      throw std::domain_error("softmax is vector-valued; use softmax()");
  }
  throw std::domain_error("unknown activation");
}

// Overflow-safe softmax (max subtraction). Components are positive and sum
// to 1; invariant under adding a constant to every input.
inline std::vector<double> softmax(const std::vector<double>& xs) {
  if (xs.empty()) throw std::domain_error("softmax: empty input");
  const double mx = *std::max_element(xs.begin(), xs.end());
  std::vector<double> out(xs.size());
  double sum = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    out[i] = std::exp(xs[i] - mx);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

enum class RangeClass { bounded, lower_bounded, unbounded };

constexpr std::string_view range_class_name(RangeClass r) {
  switch (r) {
    case RangeClass::bounded: return "bounded";
    case RangeClass::lower_bounded: return "lower-bounded";
    case RangeClass::unbounded: return "unbounded";
  }
  return "?";
}

// Declared comparison-table properties of each activation.
struct ActivationSpec {
  ActivationKind kind;
  bool declared_odd = false;
  bool declared_monotone = false;
  bool declared_differentiable = false;
  bool declared_continuous_gradient = false;
  RangeClass declared_range = RangeClass::bounded;
};

inline ActivationSpec declared_spec(ActivationKind k) {
  ActivationSpec s;
  s.kind = k;
  switch (k.tag) {
    case Activation::sigmoid:
      s = {k, false, true, true, true, RangeClass::bounded};
      break;
    case Activation::relu:
      s = {k, false, true, false, false, RangeClass::lower_bounded};
      break;
    case Activation::prelu:
      s = {k, false, true, false, false, RangeClass::unbounded};
      break;
    case Activation::elu:
      s = {k, false, true, true, false, RangeClass::lower_bounded};
      break;
    case Activation::swish:
      s = {k, false, false, true, true, RangeClass::lower_bounded};
      break;
    case Activation::tanh:
      s = {k, true, true, true, true, RangeClass::bounded};
      break;
    case Activation::softsign:
      s = {k, true, true, true, true, RangeClass::bounded};
      break;
    case Activation::softmax:
      s = {k, false, false, true, true, RangeClass::bounded};
      break;
    case Activation::nlrelu:
      s = {k, false, true, false, false, RangeClass::lower_bounded};
      break;
    case Activation::serf:
      s = {k, false, false, true, true, RangeClass::lower_bounded};
      break;
    case Activation::stl:
      s = {k, true, true, true, true, RangeClass::unbounded};
      break;
  }
  return s;
}

// Branch-switch points of the value formula; derivative checks probe both
// sides of each.
inline std::vector<double> kink_points(ActivationKind k) {
  switch (k.tag) {
    case Activation::relu:
    case Activation::prelu:
    case Activation::elu:
    case Activation::nlrelu:
    case Activation::softsign: return {0.0};
    case Activation::stl: return {-1.0, 1.0};
    default: return {};
  }
}

// All eleven activations with default parameters, in comparison-table order.
inline std::vector<ActivationKind> all_activation_kinds() {
  std::vector<ActivationKind> out;
  out.reserve(activation_count);
  for (int i = 0; i < activation_count; ++i)
    out.emplace_back(static_cast<Activation>(i));
  return out;
}

}  // namespace stlact
