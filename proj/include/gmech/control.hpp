#pragma once

#include <functional>
#include <vector>

#include "gmech/errors.hpp"

// Energy-time tradeoff for geodesic migration at constant speed over an arc
// of length L:
//
//   J(T) = alpha L^2 / (2 T) + lambda T,    T > 0,
//
// minimized in closed form at T* = sqrt(alpha L^2 / (2 lambda)), with
// average speed v* = L / T*. A golden-section minimizer provides an
// independent numerical cross-check of the closed form.

namespace gmech::control {

struct TradeoffParams {
    double alpha;  // locomotion weight, J min^2 / um^2
    double lambda; // time penalty, J / min
    double L;      // arc length, um

    void validate() const;
};

struct TradeoffResult {
    double T_star;  // min
    double v_star;  // um / min
    double J_star;  // J
    std::vector<std::pair<double, double>> cost_curve; // (T, J) samples
};

/// J(T); throws NonPositiveHorizon for T <= 0.
double cost(double T, const TradeoffParams& p);

/// Closed-form minimizer plus 201 log-spaced cost samples on
/// [T*/100, 100 T*].
TradeoffResult analytic_T_star(const TradeoffParams& p);

/// Golden-section minimization of a unimodal f on [lo, hi] to within tol;
/// the iteration count is fixed by the bracket and tolerance, so the result
/// is deterministic. Throws BracketInvalid when lo >= hi or tol <= 0.
std::pair<double, double> golden_section_minimize(const std::function<double(double)>& f,
                                                  double lo, double hi, double tol);

struct SweepRow {
    TradeoffParams params;
    double T_star;
    double v_star;
    double J_star;
};

/// Cartesian product of the parameter lists, evaluated concurrently and
/// returned sorted lexicographically by (alpha, lambda, L).
std::vector<SweepRow> sweep(const std::vector<double>& alphas,
                            const std::vector<double>& lambdas,
                            const std::vector<double>& Ls);

} // namespace gmech::control
