#include "dupdel/theory.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <queue>
#include <sstream>

namespace dupdel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// f(y) = d*log(y) - (d+2)*log(1+y) - y, the integrand's exponent.
double exponent(int d, double y) {
    if (y <= 0.0) return d == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return d * std::log(y) - (d + 2) * std::log1p(y) - y;
}

}  // namespace

double peak_location(int d) {
    if (d < 0) throw std::invalid_argument("peak_location: d must be >= 0");
    return -1.5 + std::sqrt(d + 2.25);
}

double cd_asymptotic_log(int d) {
    if (d < 1) throw std::invalid_argument("cd_asymptotic: d must be >= 1");
    return 0.5 * (1.0 + std::log(kPi)) + 0.25 * std::log(static_cast<double>(d)) - 2.0 * std::sqrt(static_cast<double>(d));
}

double cd_asymptotic(int d) { return std::exp(cd_asymptotic_log(d)); }

// ---------------------------------------------------------------------------
// Fixed-point bounding iteration
// ---------------------------------------------------------------------------

namespace {

// One Jacobi sweep of x_1 <- (1+2x_2)/3, x_k <- ((k-1)x_{k-1}+(k+1)x_{k+1})/(2k+1).
// x has indices 0..k_max+1; index 0 is unused, index k_max+1 is the frozen
// truncation boundary. Every update is a nondecreasing function of the old
// values with IEEE round-to-nearest, so sweeps preserve ordering exactly.
void sweep(const std::vector<double>& x, std::vector<double>& out, int k_max, bool parallel) {
    out[1] = (1.0 + 2.0 * x[2]) / 3.0;
#pragma omp parallel for schedule(static) if (parallel)
    for (int k = 2; k <= k_max; ++k)
        out[k] = ((k - 1) * x[k - 1] + (k + 1) * x[k + 1]) / (2.0 * k + 1.0);
}

}  // namespace

FixedPointResult fixed_point_yk(int k_max, double tol, const FixedPointOptions& opts) {
    if (k_max < 2) throw std::invalid_argument("fixed_point_yk: k_max must be >= 2");
    if (tol <= 0.0) throw std::invalid_argument("fixed_point_yk: tol must be positive");
    const int k_report = k_max / 2;
    // Convergence needs roughly 2*ln(1/tol)*k_report sweeps (the gap decays
    // like a killed random walk on 1..k_max), so 50*k_max covers tolerances
    // down to ~1e-10 at any truncation while still bounding genuine stalls.
    const int max_sweeps = opts.max_sweeps > 0 ? opts.max_sweeps : 50 * k_max;

    std::vector<double> a(k_max + 2, 0.0), b(k_max + 2, 1.0);
    std::vector<double> a_next(a), b_next(b);
    // Truncation boundary: 0 below, the asymptotic tail bound for y_{k_max+1}
    // above (a vast overestimate of the true value there, but <= 1 and safe).
    a[k_max + 1] = a_next[k_max + 1] = 0.0;
    b[k_max + 1] = b_next[k_max + 1] = std::min(1.0, 2.0 * cd_asymptotic(k_max) / (k_max + 1));
    b[0] = b_next[0] = 0.0;

    FixedPointResult result;
    result.k_report = k_report;
    result.enclosure_trace.reserve(1024);

    double gap = 1.0;
    int j = 0;
    while (j < max_sweeps) {
        sweep(a, a_next, k_max, opts.parallel);
        sweep(b, b_next, k_max, opts.parallel);
        ++j;
        for (int k = 1; k <= k_max; ++k) {
            if (a_next[k] < a[k]) throw std::logic_error("fixed_point_yk: lower sequence not monotone");
            if (b_next[k] > b[k]) throw std::logic_error("fixed_point_yk: upper sequence not monotone");
            if (a_next[k] > b_next[k]) throw std::logic_error("fixed_point_yk: enclosure inverted");
        }
        a.swap(a_next);
        b.swap(b_next);
        gap = 0.0;
        for (int k = 1; k <= k_report; ++k) gap = std::max(gap, b[k] - a[k]);
        result.enclosure_trace.push_back(gap);
        if (gap < tol) break;
    }
    if (gap >= tol) {
        std::ostringstream msg;
        msg << "fixed_point_yk: enclosure " << std::scientific << std::setprecision(3) << gap << " after " << j
            << " sweeps (raise the budget or lower k_max)";
        throw SolverError(msg.str(), gap);
    }

    result.sweeps = j;
    result.enclosure = gap;
    result.lower.assign(a.begin() + 1, a.begin() + k_max + 1);
    result.upper.assign(b.begin() + 1, b.begin() + k_max + 1);
    result.y.assign(k_report + 1, 0.0);
    for (int k = 1; k <= k_report; ++k) result.y[k] = 0.5 * (a[k] + b[k]);
    return result;
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639, 0.949107912342758525, 0.864864423359769073, 0.741531185599394440,
    0.586087235467691130, 0.405845151377397167, 0.207784955007898468, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529225, 0.063092092629978553, 0.104790010322250184, 0.140653259715525919,
    0.169004726639267903, 0.190350578064785410, 0.204432940075298892, 0.209482141084727828,
};
constexpr double kWg[4] = {
    0.129484966168869693, 0.279705391489276668, 0.381830050505118945, 0.417959183673469388,
};

struct Segment {
    double lo, hi;
    double integral;  // GK15 estimate
    double error;     // |GK15 - G7|
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gk15(const F& f, double lo, double hi, std::uint64_t& evals) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(mid);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double pair = f(mid - half * kXgk[i]) + f(mid + half * kXgk[i]);
        kronrod += kWgk[i] * pair;
        if (i % 2 == 1) gauss += kWg[i / 2] * pair;
    }
    evals += 15;
    return {lo, hi, kronrod * half, std::abs(kronrod - gauss) * half};
}

}  // namespace

QuadratureResult cd_integral(int d, double rel_tol) {
    if (d < 0) throw std::invalid_argument("cd_integral: d must be >= 0");
    if (rel_tol <= 0.0) throw std::invalid_argument("cd_integral: rel_tol must be positive");

    const double yd = peak_location(d);
    const double f_peak = exponent(d, yd);
    const auto g = [d, f_peak](double y) {
        const double f = exponent(d, y);
        return std::isinf(f) ? 0.0 : std::exp(f - f_peak);
    };

    // Window end: the integrand is bounded by e^-y, so the discarded tail is
    // at most e^-Y. The scaled integral is >= 0.3 for every d, which makes
    //   Y = -f_peak + log(10 / (0.3 * rel_tol))
    // enough for the tail bound to fall below rel_tol/10 of the result.
    const double spread = std::sqrt(yd + 1.0);
    double window_end = std::max(yd + 12.0 * spread + 10.0, -f_peak + std::log(10.0 / (0.3 * rel_tol)));

    // Seed segments around the peak so the first estimate already sees it.
    std::vector<double> cuts = {0.0,           yd - 6.0 * spread, yd - 2.0 * spread, yd + 2.0 * spread,
                                yd + 6.0 * spread, yd + 20.0 * spread, window_end};
    for (double& c : cuts) c = std::clamp(c, 0.0, window_end);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    QuadratureResult result;
    std::priority_queue<Segment> queue;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Segment s = gk15(g, cuts[i], cuts[i + 1], result.evals);
        total += s.integral;
        total_err += s.error;
        queue.push(s);
    }

    const std::uint64_t max_evals = 2'000'000;
    double tail_bound = std::exp(-window_end - f_peak);
    while (total_err + tail_bound > 0.5 * rel_tol * std::abs(total)) {
        if (tail_bound > 0.25 * rel_tol * std::abs(total)) {
            // Extend the window until the analytic tail bound is negligible.
            const double extended = window_end + std::log(10.0) * 4.0;
            Segment s = gk15(g, window_end, extended, result.evals);
            total += s.integral;
            total_err += s.error;
            queue.push(s);
            window_end = extended;
            tail_bound = std::exp(-window_end - f_peak);
            continue;
        }
        if (queue.empty() || result.evals > max_evals) {
            const double achieved = (total_err + tail_bound) / std::abs(total);
            std::ostringstream msg;
            msg << "cd_integral: d=" << d << " stalled at relative error " << std::scientific
                << std::setprecision(3) << achieved;
            throw SolverError(msg.str(), achieved);
        }
        Segment worst = queue.top();
        queue.pop();
        total -= worst.integral;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.lo + worst.hi);
        for (const Segment& s : {gk15(g, worst.lo, mid, result.evals), gk15(g, mid, worst.hi, result.evals)}) {
            total += s.integral;
            total_err += s.error;
            queue.push(s);
        }
    }

    result.log_value = std::log(static_cast<double>(d) + 1.0) + f_peak + std::log(total);
    result.value = (d + 1) * std::exp(f_peak) * total;
    result.abs_error = (total_err + tail_bound) / std::abs(total);
    return result;
}

double cd_quadrature(int d, double rel_tol) { return cd_integral(d, rel_tol).value; }

double cd_quadrature_log(int d, double rel_tol) { return cd_integral(d, rel_tol).log_value; }

// ---------------------------------------------------------------------------
// Conversions and checks
// ---------------------------------------------------------------------------

std::vector<double> yk_from_cd(std::span<const double> cd) {
    std::vector<double> y(cd.size() + 1, 0.0);
    for (std::size_t d = 0; d < cd.size(); ++d) y[d + 1] = cd[d] / static_cast<double>(d + 1);
    return y;
}

std::vector<double> cd_from_yk(std::span<const double> yk) {
    if (yk.empty()) return {};
    std::vector<double> cd(yk.size() - 1, 0.0);
    for (std::size_t k = 1; k < yk.size(); ++k) cd[k - 1] = static_cast<double>(k) * yk[k];
    return cd;
}

double asymptotic_tail_mass(int d_max) {
    double sum = 0.0;
    double term = 0.0;
    int d = std::max(1, d_max + 1);
    do {
        term = cd_asymptotic(d);
        sum += term;
        ++d;
    } while (term > sum * 1e-18 && term > 1e-300 && d < 100'000'000);
    return 2.0 * sum;
}

double normalization_check(std::span<const double> cd, bool include_tail) {
    double sum = 0.0;
    for (double c : cd) sum += c;
    const double tail = include_tail ? asymptotic_tail_mass(static_cast<int>(cd.size()) - 1) : 0.0;
    return std::abs(1.0 - sum - tail);
}

std::vector<double> cd_table_quadrature(int d_max, double rel_tol) {
    std::vector<double> table(d_max + 1, 0.0);
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int d = 0; d <= d_max; ++d) {
        try {
            table[d] = cd_quadrature(d, rel_tol);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

std::vector<double> cd_table_quadrature_serial(int d_max, double rel_tol) {
    std::vector<double> table(d_max + 1, 0.0);
    for (int d = 0; d <= d_max; ++d) table[d] = cd_quadrature(d, rel_tol);
    return table;
}

}  // namespace dupdel
