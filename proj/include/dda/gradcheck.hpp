#pragma once

#include <functional>

#include "dda/rng.hpp"
#include "dda/tensor.hpp"

namespace dda {

struct GradCheckResult {
    double max_rel_err = 0.0;
    int64_t worst_index = -1;
    double worst_numeric = 0.0;
    double worst_analytic = 0.0;
};

// Central-difference check of an analytic gradient. Probes `probes` randomly
// chosen coordinates of x (all of them if probes <= 0 or >= numel). Relative
// error uses max(|numeric|, |analytic|, floor) as the denominator; coordinate
// pairs where both sides are below `floor` are treated as agreeing.
inline GradCheckResult grad_check(const std::function<double(const Tensor&)>& f, const Tensor& x,
                                  const Tensor& analytic_grad, double step, int probes, Rng rng,
                                  double floor = 1e-4) {
    GradCheckResult res;
    int64_t n = x.numel();
    std::vector<int64_t> idx;
    if (probes <= 0 || probes >= n) {
        idx.resize(static_cast<size_t>(n));
        for (int64_t i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    } else {
        for (int i = 0; i < probes; ++i) idx.push_back(static_cast<int64_t>(rng.below(static_cast<uint64_t>(n))));
    }
    Tensor xp = x;
    for (int64_t i : idx) {
        float saved = xp.data[static_cast<size_t>(i)];
        xp.data[static_cast<size_t>(i)] = saved + static_cast<float>(step);
        double fp = f(xp);
        xp.data[static_cast<size_t>(i)] = saved - static_cast<float>(step);
        double fm = f(xp);
        xp.data[static_cast<size_t>(i)] = saved;
        double numeric = (fp - fm) / (2.0 * step);
        double analytic = analytic_grad.data[static_cast<size_t>(i)];
        double denom = std::max({std::abs(numeric), std::abs(analytic), floor});
        double rel = std::abs(numeric - analytic) / denom;
        if (std::abs(numeric) < floor && std::abs(analytic) < floor) rel = 0.0;
        if (rel > res.max_rel_err) {
            res.max_rel_err = rel;
            res.worst_index = i;
            res.worst_numeric = numeric;
            res.worst_analytic = analytic;
        }
    }
    return res;
}

// Directional variant: compares (f(x+h d) - f(x-h d)) / 2h against <grad, d>
// for random Gaussian directions d. Aggregating over a direction keeps the
// check well-conditioned when individual coordinates nearly cancel (e.g.
// through batch statistics).
inline GradCheckResult grad_check_directional(const std::function<double(const Tensor&)>& f,
                                              const Tensor& x, const Tensor& analytic_grad,
                                              double step, int directions, Rng rng,
                                              double floor = 1e-4) {
    GradCheckResult res;
    for (int k = 0; k < directions; ++k) {
        Tensor d = gaussian_sample(rng, x.shape);
        Tensor xp = x, xm = x;
        for (size_t i = 0; i < x.data.size(); ++i) {
            xp.data[i] += static_cast<float>(step) * d.data[i];
            xm.data[i] -= static_cast<float>(step) * d.data[i];
        }
        double numeric = (f(xp) - f(xm)) / (2.0 * step);
        double analytic = 0.0;
        for (size_t i = 0; i < d.data.size(); ++i)
            analytic += static_cast<double>(analytic_grad.data[i]) * d.data[i];
        double denom = std::max({std::abs(numeric), std::abs(analytic), floor});
        double rel = std::abs(numeric - analytic) / denom;
        if (rel > res.max_rel_err) {
            res.max_rel_err = rel;
            res.worst_index = k;
            res.worst_numeric = numeric;
            res.worst_analytic = analytic;
        }
    }
    return res;
}

}  // namespace dda
