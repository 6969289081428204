// Numerical verification of the six desired activation-function properties
// (odd, monotone, differentiable, unbounded range, continuous gradient,
// plus the contraction claim for alpha < 1) over a fixed evaluation grid.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "stlact/activations.hpp"
#include "stlact/csv.hpp"

namespace stlact {

// Strictly increasing evaluation grid containing 0 and +-1, uniform across
// both stl branches and log-spaced out to |x| = 1e4.
struct PropertyGrid {
  std::vector<double> points;
  double lo = 0.0;
  double hi = 0.0;

  size_t count() const { return points.size(); }
};

// 4001 points: 2001 uniform on [-2, 2] plus 1000 log-spaced per side on
// +-(2, 1e4].
inline PropertyGrid default_property_grid() {
  PropertyGrid grid;
  std::vector<double> positive_tail;
  positive_tail.reserve(1000);
  const double log_step = std::log(5000.0) / 1000.0;
  for (int j = 1; j <= 1000; ++j)
    positive_tail.push_back(2.0 * std::exp(j * log_step));
  for (size_t j = positive_tail.size(); j-- > 0;)
    grid.points.push_back(-positive_tail[j]);
  for (int i = -1000; i <= 1000; ++i)
    grid.points.push_back(static_cast<double>(i) / 500.0);
  for (double x : positive_tail) grid.points.push_back(x);
  grid.lo = grid.points.front();
  grid.hi = grid.points.back();
  return grid;
}

struct OddCheck {
  bool pass = true;
  double worst_x = 0.0;
  double worst_violation = 0.0;
};

struct MonotoneCheck {
  bool pass = true;
  double witness_lo = 0.0;  // populated on failure: f(witness_lo) > f(witness_hi)
  double witness_hi = 0.0;
};

struct GradFdCheck {
  bool pass = true;
  double worst_x = 0.0;
  double worst_rel_err = 0.0;
};

struct KinkSlopeCheck {
  bool pass = true;
  double worst_kink = 0.0;
  double worst_gap = 0.0;
};

struct GradContinuityCheck {
  bool pass = true;
  double worst_kink = 0.0;
  double worst_gap = 0.0;
};

struct GradBoundCheck {
  bool pass = true;  // every sampled gradient strictly positive and finite
  double min_grad = 0.0;
  double max_grad = 0.0;
};

struct RangeProbe {
  RangeClass cls = RangeClass::bounded;
  double f_at_min_probe = 0.0;
  double f_at_max_probe = 0.0;
};

struct ContractionCheck {
  bool pass = false;
  double max_grad = 0.0;
};

namespace detail {

inline void require_scalar_kind(ActivationKind kind, const char* op) {
  if (kind.tag == Activation::softmax)
    throw std::domain_error(std::string(op) + ": softmax is not a scalar kind");
}

}  // namespace detail

// |f(x) + f(-x)| <= tol * max(1, |f(x)|) over the grid, and |f(0)| <= tol.
inline OddCheck check_odd(ActivationKind kind, const PropertyGrid& grid,
                          double tol) {
  detail::require_scalar_kind(kind, "check_odd");
  OddCheck result;
  const double f0 = std::fabs(activation_value(kind, 0.0));
  if (f0 > tol) {
    result.pass = false;
    result.worst_x = 0.0;
    result.worst_violation = f0;
  }
  for (double x : grid.points) {
    if (!(x > 0)) continue;
    const double fx = activation_value(kind, x);
    const double defect = std::fabs(fx + activation_value(kind, -x)) /
                          std::max(1.0, std::fabs(fx));
    if (defect > result.worst_violation) {
      result.worst_violation = defect;
      result.worst_x = x;
    }
    if (defect > tol) result.pass = false;
  }
  return result;
}

// f(x_i) <= f(x_{i+1}) for all consecutive grid pairs.
inline MonotoneCheck check_monotone(ActivationKind kind,
                                    const PropertyGrid& grid) {
  detail::require_scalar_kind(kind, "check_monotone");
  MonotoneCheck result;
  double worst_drop = 0.0;
  double prev = activation_value(kind, grid.points.front());
  for (size_t i = 1; i < grid.points.size(); ++i) {
    const double cur = activation_value(kind, grid.points[i]);
    if (prev > cur) {
      result.pass = false;
      if (prev - cur > worst_drop) {
        worst_drop = prev - cur;
        result.witness_lo = grid.points[i - 1];
        result.witness_hi = grid.points[i];
      }
    }
    prev = cur;
  }
  return result;
}

// Central finite difference vs the analytic derivative at every grid point
// at least max(10h, 1e-3) away from the kind's kink set.
inline GradFdCheck check_gradient_fd(ActivationKind kind,
                                     const PropertyGrid& grid, double h,
                                     double tol) {
  detail::require_scalar_kind(kind, "check_gradient_fd");
  if (!(h > 0)) throw std::domain_error("check_gradient_fd: h must be > 0");
  GradFdCheck result;
  const std::vector<double> kinks = kink_points(kind);
  const double margin = std::max(10.0 * h, 1e-3);
  for (double x : grid.points) {
    bool near_kink = false;
    for (double k : kinks) near_kink |= std::fabs(x - k) < margin;
    if (near_kink) continue;
    const double xp = x + h;
    const double xm = x - h;
    const double fd =
        (activation_value(kind, xp) - activation_value(kind, xm)) / (xp - xm);
    const double grad = activation_grad(kind, x);
    const double rel = std::fabs(fd - grad) / std::max(1.0, std::fabs(grad));
    if (rel > result.worst_rel_err) {
      result.worst_rel_err = rel;
      result.worst_x = x;
    }
    if (rel > tol) result.pass = false;
  }
  return result;
}

// One-sided secant slopes on both sides of each kink must agree within
// tol + h for h in {1e-3, 1e-4, 1e-5}; detects derivative jumps such as
// relu's 0 vs 1 at the origin.
inline KinkSlopeCheck check_kink_slopes(ActivationKind kind, double tol) {
  detail::require_scalar_kind(kind, "check_kink_slopes");
  KinkSlopeCheck result;
  for (double k : kink_points(kind)) {
    const double fk = activation_value(kind, k);
    for (double h : {1e-3, 1e-4, 1e-5}) {
      const double left = (fk - activation_value(kind, k - h)) / h;
      const double right = (activation_value(kind, k + h) - fk) / h;
      const double gap = std::fabs(left - right);
      if (gap > result.worst_gap) {
        result.worst_gap = gap;
        result.worst_kink = k;
      }
      if (gap > tol + h) result.pass = false;
    }
  }
  return result;
}

// |grad(k-eps) - grad(k+eps)| <= tol + eps at every declared kink, checked
// with eps shrinking over two further decades.
inline GradContinuityCheck check_gradient_continuity(
    ActivationKind kind, const std::vector<double>& kinks, double eps,
    double tol) {
  detail::require_scalar_kind(kind, "check_gradient_continuity");
  if (!(eps > 0) || !(tol > 0))
    throw std::domain_error("check_gradient_continuity: eps, tol must be > 0");
  GradContinuityCheck result;
  for (double k : kinks) {
    for (double e : {eps, eps / 10.0, eps / 100.0}) {
      const double gap = std::fabs(activation_grad(kind, k - e) -
                                   activation_grad(kind, k + e));
      if (gap > result.worst_gap) {
        result.worst_gap = gap;
        result.worst_kink = k;
      }
      if (gap > tol + e) result.pass = false;
    }
  }
  return result;
}

// Every sampled gradient strictly positive and finite.
inline GradBoundCheck check_gradient_positive_bounded(
    ActivationKind kind, const PropertyGrid& grid) {
  detail::require_scalar_kind(kind, "check_gradient_positive_bounded");
  GradBoundCheck result;
  bool first = true;
  for (double x : grid.points) {
    const double g = activation_grad(kind, x);
    if (first) {
      result.min_grad = result.max_grad = g;
      first = false;
    }
    result.min_grad = std::min(result.min_grad, g);
    result.max_grad = std::max(result.max_grad, g);
    if (!(g > 0.0) || !std::isfinite(g)) result.pass = false;
  }
  return result;
}

// Growth threshold separating the bounded activations (|f| stays near 1)
// from the log-growth ones (|f(1e6)| ~ 14.8) at the +-1e6 probes.
inline constexpr double range_growth_threshold = 10.0;

// Heuristic range classifier at the extreme probes; probes must reach +-1e6.
inline RangeProbe check_range_class(ActivationKind kind,
                                    const std::vector<double>& probes) {
  detail::require_scalar_kind(kind, "check_range_class");
  double lo = 0.0, hi = 0.0;
  bool have_lo = false, have_hi = false;
  for (double p : probes) {
    if (!have_lo || p < lo) lo = p, have_lo = true;
    if (!have_hi || p > hi) hi = p, have_hi = true;
  }
  if (!have_lo || lo > -1e6 || hi < 1e6)
    throw std::domain_error("check_range_class: probes must include +-1e6");
  RangeProbe result;
  result.f_at_min_probe = activation_value(kind, lo);
  result.f_at_max_probe = activation_value(kind, hi);
  const bool grows_up = std::fabs(result.f_at_max_probe) > range_growth_threshold;
  const bool grows_down = std::fabs(result.f_at_min_probe) > range_growth_threshold;
  if (grows_up && grows_down)
    result.cls = RangeClass::unbounded;
  else if (grows_up)
    result.cls = RangeClass::lower_bounded;
  else
    result.cls = RangeClass::bounded;
  return result;
}

// max over the grid of stl_grad(x, alpha); a contraction needs max < 1,
// which only holds for alpha < 1 (the max equals alpha on |x| <= 1).
inline ContractionCheck check_contraction(double alpha,
                                          const PropertyGrid& grid) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("check_contraction: requires 0 < alpha < 1");
  ContractionCheck result;
  for (double x : grid.points)
    result.max_grad = std::max(result.max_grad, stl_grad(x, alpha));
  result.pass = result.max_grad < 1.0;
  return result;
}

struct SoftmaxVectorCheck {
  bool sum_to_one = false;
  bool shift_invariant = false;
};

// The two vector-level softmax properties the comparison table records:
// outputs sum to 1 and are invariant under a constant input shift.
inline SoftmaxVectorCheck check_softmax_vector_properties(double tol) {
  SoftmaxVectorCheck result{true, true};
  const std::vector<std::vector<double>> cases = {
      {0.0, 0.0},
      {1.0, 2.0, 3.0},
      {1000.0, 1000.0, 1000.0},
      {-40.0, 0.5, 13.0, 2.0},
  };
  for (const auto& xs : cases) {
    const auto probs = softmax(xs);
    double sum = 0.0;
    for (double p : probs) sum += p;
    if (std::fabs(sum - 1.0) > tol) result.sum_to_one = false;
    std::vector<double> shifted = xs;
    for (double& v : shifted) v += 123.25;
    const auto shifted_probs = softmax(shifted);
    for (size_t i = 0; i < probs.size(); ++i)
      if (std::fabs(probs[i] - shifted_probs[i]) > tol)
        result.shift_invariant = false;
  }
  return result;
}

struct PropertyReport {
  ActivationKind kind;
  OddCheck odd;
  MonotoneCheck monotone;
  GradFdCheck gradient_fd;
  KinkSlopeCheck kink_slopes;
  GradContinuityCheck gradient_continuous;
  GradBoundCheck gradient_positive_bounded;
  RangeProbe range;
  std::string note;

  // measured "differentiable": finite-difference agreement off the kinks
  // plus matching one-sided slopes at them
  bool differentiable() const { return gradient_fd.pass && kink_slopes.pass; }
};

inline const std::vector<double>& default_range_probes() {
  static const std::vector<double> probes = {-1e6, -1.0, 1.0, 1e6};
  return probes;
}

inline PropertyReport measure_properties(ActivationKind kind,
                                         const PropertyGrid& grid) {
  PropertyReport report;
  report.kind = kind;
  if (kind.tag == Activation::softmax) {
    // Scalar checks do not apply to the vector-valued softmax; the row
    // records the vector-level properties and the bounded component range.
    const SoftmaxVectorCheck vec = check_softmax_vector_properties(1e-12);
    report.odd = {false, 0.0, 0.0};
    report.monotone = {false, 0.0, 0.0};
    report.gradient_fd = {true, 0.0, 0.0};
    report.kink_slopes = {true, 0.0, 0.0};
    report.gradient_continuous = {true, 0.0, 0.0};
    report.gradient_positive_bounded = {true, 0.0, 0.0};
    report.range.cls = RangeClass::bounded;
    report.range.f_at_min_probe = softmax({-1e6, 0.0}).front();
    report.range.f_at_max_probe = softmax({1e6, 0.0}).front();
    report.note = std::string("scalar checks n/a; sum-to-one ") +
                  (vec.sum_to_one ? "pass" : "fail") + "; shift-invariance " +
                  (vec.shift_invariant ? "pass" : "fail");
    return report;
  }
  report.odd = check_odd(kind, grid, 1e-12);
  report.monotone = check_monotone(kind, grid);
  report.gradient_fd = check_gradient_fd(kind, grid, 1e-6, 1e-6);
  report.kink_slopes = check_kink_slopes(kind, 1e-6);
  report.gradient_continuous =
      check_gradient_continuity(kind, kink_points(kind), 1e-3, 1e-6);
  report.gradient_positive_bounded =
      check_gradient_positive_bounded(kind, grid);
  report.range = check_range_class(kind, default_range_probes());
  if (kind.tag == Activation::elu)
    report.note = "gradient continuity at 0 depends on alpha";
  return report;
}

// One report per kind, in input order; deterministic for a fixed grid.
inline std::vector<PropertyReport> render_property_table(
    const std::vector<ActivationKind>& kinds, const PropertyGrid& grid) {
  std::vector<PropertyReport> reports;
  reports.reserve(kinds.size());
  for (ActivationKind kind : kinds)
    reports.push_back(measure_properties(kind, grid));
  return reports;
}

inline std::vector<PropertyReport> render_property_table(
    const std::vector<ActivationKind>& kinds) {
  return render_property_table(kinds, default_property_grid());
}

// Mismatches between the measured columns and the declared comparison-table
// flags, as column names; empty means full concordance for the row.
inline std::vector<std::string> declared_mismatches(
    const PropertyReport& report) {
  const ActivationSpec spec = declared_spec(report.kind);
  std::vector<std::string> mismatches;
  if (report.odd.pass != spec.declared_odd) mismatches.push_back("odd");
  if (report.monotone.pass != spec.declared_monotone)
    mismatches.push_back("monotone");
  if (report.gradient_continuous.pass != spec.declared_continuous_gradient)
    mismatches.push_back("continuous_gradient");
  if (report.range.cls != spec.declared_range) mismatches.push_back("range");
  return mismatches;
}

inline csv::Table property_table_csv(
    const std::vector<PropertyReport>& reports) {
  csv::Table table;
  table.header = {"activation",
                  "odd",
                  "odd_worst_x",
                  "monotone",
                  "monotone_witness_lo",
                  "monotone_witness_hi",
                  "differentiable",
                  "grad_fd_max_rel_err",
                  "grad_continuous",
                  "grad_cont_worst_kink",
                  "grad_positive_bounded",
                  "range",
                  "note"};
  auto pf = [](bool b) { return std::string(b ? "pass" : "fail"); };
  for (const auto& r : reports) {
    std::vector<std::string> row;
    row.push_back(r.kind.name());
    row.push_back(pf(r.odd.pass));
    row.push_back(csv::format_double(r.odd.worst_x));
    row.push_back(pf(r.monotone.pass));
    row.push_back(r.monotone.pass ? ""
                                  : csv::format_double(r.monotone.witness_lo));
    row.push_back(r.monotone.pass ? ""
                                  : csv::format_double(r.monotone.witness_hi));
    row.push_back(pf(r.differentiable()));
    row.push_back(csv::format_double(r.gradient_fd.worst_rel_err));
    row.push_back(pf(r.gradient_continuous.pass));
    row.push_back(kink_points(r.kind).empty()
                      ? ""
                      : csv::format_double(r.gradient_continuous.worst_kink));
    row.push_back(pf(r.gradient_positive_bounded.pass));
    row.push_back(std::string(range_class_name(r.range.cls)));
    row.push_back(r.note);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace stlact
