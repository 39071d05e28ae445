#include "gmech/control.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace gmech::control {

void TradeoffParams::validate() const {
    if (!(alpha > 0.0))
        throw ValidationError("TradeoffParams: alpha must be positive");
    if (!(lambda > 0.0))
        throw ValidationError("TradeoffParams: lambda must be positive");
    if (!(L > 0.0))
        throw ValidationError("TradeoffParams: L must be positive");
}

double cost(double T, const TradeoffParams& p) {
    if (!(T > 0.0))
        throw NonPositiveHorizon("cost: horizon T must be positive");
    return 0.5 * p.alpha * p.L * p.L / T + p.lambda * T;
}

TradeoffResult analytic_T_star(const TradeoffParams& p) {
    p.validate();
    TradeoffResult r;
    r.T_star = std::sqrt(0.5 * p.alpha * p.L * p.L / p.lambda);
    r.v_star = p.L / r.T_star;
    r.J_star = cost(r.T_star, p);

    constexpr int kSamples = 201;
    r.cost_curve.reserve(kSamples);
    const double lo = std::log(r.T_star / 100.0);
    const double hi = std::log(r.T_star * 100.0);
    for (int i = 0; i < kSamples; ++i) {
        const double T = std::exp(lo + (hi - lo) * i / (kSamples - 1));
        r.cost_curve.emplace_back(T, cost(T, p));
    }
    return r;
}

std::pair<double, double> golden_section_minimize(const std::function<double(double)>& f,
                                                  double lo, double hi, double tol) {
    if (!(lo < hi))
        throw BracketInvalid("golden_section_minimize: need lo < hi");
    if (!(tol > 0.0))
        throw BracketInvalid("golden_section_minimize: need tol > 0");

    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    const double inv_phi = 1.0 / phi;

    const int iters =
        static_cast<int>(std::ceil(std::log((hi - lo) / tol) / std::log(phi)));

    double a = lo, b = hi;
    double c = b - (b - a) * inv_phi;
    double d = a + (b - a) * inv_phi;
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
        }
    }
    const double T = 0.5 * (a + b);
    return {T, f(T)};
}

std::vector<SweepRow> sweep(const std::vector<double>& alphas,
                            const std::vector<double>& lambdas,
                            const std::vector<double>& Ls) {
    std::vector<TradeoffParams> grid;
    grid.reserve(alphas.size() * lambdas.size() * Ls.size());
    for (double a : alphas)
        for (double l : lambdas)
            for (double L : Ls)
                grid.push_back({a, l, L});
    for (const auto& p : grid)
        p.validate();

    std::vector<std::future<SweepRow>> jobs;
    jobs.reserve(grid.size());
    for (const auto& p : grid)
        jobs.push_back(std::async(std::launch::async | std::launch::deferred, [p] {
            const TradeoffResult r = analytic_T_star(p);
            return SweepRow{p, r.T_star, r.v_star, r.J_star};
        }));

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (auto& j : jobs)
        rows.push_back(j.get());

    std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
        if (x.params.alpha != y.params.alpha)
            return x.params.alpha < y.params.alpha;
        if (x.params.lambda != y.params.lambda)
            return x.params.lambda < y.params.lambda;
        return x.params.L < y.params.L;
    });
    return rows;
}

} // namespace gmech::control
