#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcorr {

using Series = std::vector<std::pair<double, double>>;  // (x, value), x ascending

/// First derivative on a uniformly spaced grid: central differences in the
/// interior, second-order one-sided stencils at the ends. Throws
/// std::invalid_argument for non-uniform grids or fewer than 3 points.
struct DerivativeResult {
    Series points;
    double step = 0.0;
};
DerivativeResult numerical_derivative(const Series& series);

enum class ExtremumKind { minimum, maximum };

/// Interior extremum located by parabolic interpolation through the extremal
/// triple. Throws std::runtime_error when the extremum sits on the boundary.
struct Extremum {
    double x = 0.0;
    double value = 0.0;
};
Extremum locate_extremum(const Series& series, ExtremumKind kind);

enum class FitModel { log_linear, power_law, exponential_plus_constant, quadratic_factorization };

struct FitResult {
    FitModel model;
    std::vector<double> coefficients;
    double residual_norm = 0.0;
    std::pair<double, double> data_range = {0.0, 0.0};
};

std::string to_string(FitModel m);

/// a + b ln(L); coefficients = {a, b}.
FitResult fit_log_linear(const Series& points);

/// y = A x^p via log-log least squares; coefficients = {A, p};
/// residual in log space. Requires strictly positive data.
FitResult fit_power_law(const Series& points);

/// y = a + b exp(-c x); coefficients = {a, b, c}. Variable projection:
/// scan + refine over c, linear least squares for (a, b).
FitResult fit_exponential_plus_constant(const Series& points);

/// One sample of the broken-state discord in the factorization window.
struct FactorizationSample {
    int r;
    double h;
    double discord;
};

/// Fits discord ~ K (h - h_f)^p ratio^r over a window around h_f.
/// coefficients = {p, ratio, K}; residual in log space.
FitResult fit_factorization_law(const std::vector<FactorizationSample>& samples, double h_f);

/// Pairwise crossings of Q(h; r) curves located by linear interpolation.
struct CrossingEstimate {
    double mean_h = 0.0;
    double spread = 0.0;  // max |crossing - mean|
    std::vector<double> crossings;
    std::optional<double> model_h_f;  // formula value when supplied by caller
};

/// curves: distance r -> (h, Q) series over a common window (>= 2 distances).
/// Throws std::runtime_error when no crossing lies inside the window.
CrossingEstimate find_factorization(const std::map<int, Series>& curves,
                                    std::optional<double> model_h_f = std::nullopt);

}  // namespace qcorr
