#pragma once

#include "dda/rng.hpp"
#include "dda/tensor.hpp"

namespace dda {

// Variance schedule for the forward/reverse chains. Timesteps are 1-based:
// arrays have T+1 entries and index 0 is a sentinel (alpha_bar[0] = 1).
// base_t maps each active step to the timestep the noise model was trained
// on; it is the identity for a full schedule and the selected grid points for
// a respaced one.
struct DiffusionSchedule {
    int T = 0;
    std::vector<float> beta;
    std::vector<float> alpha;
    std::vector<float> alpha_bar;
    std::vector<float> sigma;  // sigma_t = sqrt(beta_t)
    std::vector<int> base_t;
};

// Linear beta ramp (defaults: T=1000, 1e-4 .. 0.02).
DiffusionSchedule make_schedule(int T = 1000, float beta_start = 1e-4f, float beta_end = 0.02f);

// Uniform-stride subsequence of `base` with `steps` points ending at T.
// Derived betas satisfy alpha_bar'[i] == alpha_bar[base_t[i]] by construction.
DiffusionSchedule respace_schedule(const DiffusionSchedule& base, int steps);

// x_t = sqrt(alpha_bar_t) x0 + sqrt(1 - alpha_bar_t) eps
Tensor q_sample(const Tensor& x0, int t, const Tensor& eps, const DiffusionSchedule& sched);

// x0_hat = sqrt(1/alpha_bar_t) x_t - sqrt(1/alpha_bar_t - 1) eps_pred
Tensor estimate_x0(const Tensor& x_t, int t, const Tensor& eps_pred,
                   const DiffusionSchedule& sched);

// Posterior mean of the reverse step given the noise prediction.
Tensor p_sample_mean(const Tensor& x_t, int t, const Tensor& eps_pred,
                     const DiffusionSchedule& sched);

// Full reverse step: mean plus sigma_t * z; the final step (t == 1) is
// deterministic (z = 0).
Tensor p_sample(const Tensor& x_t, int t, const Tensor& eps_pred, const DiffusionSchedule& sched,
                Rng& rng);

// Mean squared error between predicted and true noise, and its gradient with
// respect to the prediction.
float loss_simple(const Tensor& eps_pred, const Tensor& eps);
Tensor loss_simple_grad(const Tensor& eps_pred, const Tensor& eps);

}  // namespace dda
