#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace dupdel {

// The limiting degree distribution (c_d) and clique-size ratios (y_k) of the
// duplication-deletion model. Three independent routes are provided:
//
//   fixed point  -- squeeze y_k between the monotone bounding iterates
//                     a_1 <- (1+2*a_2)/3,
//                     a_k <- ((k-1)*a_{k-1} + (k+1)*a_{k+1}) / (2k+1),
//                   starting from a=0 (below) and b=1 (above);
//   quadrature   -- c_d = (d+1) * int_0^inf y^d e^-y / (1+y)^(d+2) dy,
//                   integrand evaluated in log space around its peak;
//   asymptotic   -- c_d ~ sqrt(e*pi) * d^(1/4) * exp(-2*sqrt(d)).
//
// They are related by c_d = (d+1) * y_{d+1}.

class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double achieved) : std::runtime_error(what), achieved_(achieved) {}
    // Enclosure width / error estimate reached before giving up.
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

struct FixedPointResult {
    std::vector<double> y;      // y[k] for k = 1..k_report; y[0] unused (0)
    std::vector<double> lower;  // final a_k, k = 1..k_max
    std::vector<double> upper;  // final b_k, k = 1..k_max
    int sweeps = 0;
    double enclosure = 0.0;             // sup over the report window of b - a
    std::vector<double> enclosure_trace;  // sup gap after each sweep
    int k_report = 0;
};

struct FixedPointOptions {
    int max_sweeps = 0;    // 0: default 50 * k_max
    bool parallel = true;  // OpenMP over k inside each sweep
};

// Iterates both bounding sequences until the enclosure over k <= k_max/2 is
// below tol. Monotonicity of each sequence and the lower<=upper ordering are
// asserted every sweep (they hold exactly, even in floating point, because
// each update is a monotone function of the previous sweep). The index set
// is truncated at k_max: a uses 0 beyond it, b the asymptotic tail bound.
// Throws SolverError if the budget runs out first.
FixedPointResult fixed_point_yk(int k_max, double tol, const FixedPointOptions& opts = {});

struct QuadratureResult {
    double value = 0.0;
    double log_value = 0.0;
    double abs_error = 0.0;   // estimate, in units of value
    std::uint64_t evals = 0;
};

// Adaptive Gauss-Kronrod 7/15 bisection of the degree-distribution integral.
// The window is [0, y_peak + W] with W sized so the analytic tail bound
// (integrand <= e^-y past the window) is below rel_tol/10 of the result.
// Throws SolverError if the subdivision budget is exhausted.
QuadratureResult cd_integral(int d, double rel_tol);

double cd_quadrature(int d, double rel_tol);      // value (underflows ~0 for huge d)
double cd_quadrature_log(int d, double rel_tol);  // log value, safe for huge d

// sqrt(e*pi) * d^(1/4) * exp(-2*sqrt(d)), d >= 1.
double cd_asymptotic(int d);
double cd_asymptotic_log(int d);

// Maximum of the integrand's exponent: -3/2 + sqrt(d + 9/4).
double peak_location(int d);

// Index shift between the two sequences: y_{d+1} = c_d / (d+1).
// yk_from_cd: input c_0..c_{D}, output y_1..y_{D+1} (index 0 unused).
std::vector<double> yk_from_cd(std::span<const double> cd);
// cd_from_yk: input y with y[0] unused, y[1..K], output c_0..c_{K-1}.
std::vector<double> cd_from_yk(std::span<const double> yk);

// Tail mass estimate past d_max: 2 * sum_{d > d_max} cd_asymptotic(d).
double asymptotic_tail_mass(int d_max);

// |1 - sum_{d<=d_max} c_d - tail|; tail omitted when include_tail is false.
double normalization_check(std::span<const double> cd, bool include_tail = true);

// c_0..c_{d_max} by quadrature, one integral per degree (OpenMP over d).
std::vector<double> cd_table_quadrature(int d_max, double rel_tol);
std::vector<double> cd_table_quadrature_serial(int d_max, double rel_tol);

}  // namespace dupdel
