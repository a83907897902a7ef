#pragma once

#include "dda/classifier.hpp"
#include "dda/guidance.hpp"

namespace dda {

// ---- purification without guidance ----

// Noise the input to t_star on the given grid, then run the plain reverse
// chain back to 0 and clip. t_star = 0 is the identity. Equivalent to
// dda_project in forward_reverse mode with N = t_star on the full grid.
Tensor diffpure_project(const Tensor& x0, const DenoiserParams& params,
                        const DiffusionSchedule& sched, int t_star, Rng rng);

// ---- entropy-minimization on a stream (stateful) ----

struct TentConfig {
    float lr = 1e-3f;
    float momentum = 0.9f;
    enum class Subset { bn_affine_only, all_but_final } subset = Subset::bn_affine_only;
    enum class Schedule { online, offline } schedule = Schedule::online;
    int batch_size = 16;
    // Diversity term on per-sample predictions instead of the batch mean;
    // kept for comparison, degenerate by construction (it cancels the
    // entropy term exactly).
    bool per_sample_div = false;
};

struct TentLosses {
    float ent = 0.0f;  // mean prediction entropy
    float div = 0.0f;  // negative entropy of the batch-mean prediction
    float total = 0.0f;
};

// probs is a (B, C) batch of probability rows. The diversity term pushes the
// batch-mean prediction toward uniform: KL(mean || uniform) - log C, which
// reduces to the negative entropy of the mean.
TentLosses tent_losses(const Tensor& probs, bool per_sample_div = false);
// d(total)/d(logits), averaged over the batch like the losses.
Tensor tent_loss_grad(const Tensor& probs, bool per_sample_div = false);

struct TentResult {
    std::vector<int> predicted;   // one class per stream sample, in order
    std::vector<float> batch_loss;
    ClassifierParams params;      // parameters after adaptation
    bool frozen = false;          // true once a non-finite loss froze updates
    int frozen_at_batch = -1;
};

// Runs entropy-minimization over an ordered stream. Online: predict each
// batch, then update, carrying state forward. Offline: one adaptation pass,
// then a frozen prediction pass. Forward passes use batch statistics (train
// mode); a non-finite loss freezes further updates but prediction continues.
TentResult tent_run(const std::vector<Sample>& stream, const ClassifierParams& source,
                    const TentConfig& cfg);

// ---- marginal-entropy minimization per sample (episodic) ----

struct MemoConfig {
    float lr = 2.5e-4f;
    int augmentations = 8;  // non-identity views; the marginal includes the identity
    int steps = 1;
};

// The fixed view set: identity, horizontal flip, the four +/-2-pixel
// translations, and three 28x28 crops (center + two corners) resized back.
std::vector<Tensor> memo_augment(const Tensor& x, int augmentations);

// Minimizes the entropy of the marginal (view-averaged) prediction over all
// non-final parameters for cfg.steps SGD steps, returns the adapted marginal
// prediction, and restores the parameters exactly.
Prediction memo_adapt(const Tensor& x, ClassifierParams& params, const MemoConfig& cfg);

// ---- statistics-only adaptation ----

// Replaces the BN running statistics with the statistics of the target
// images (one streaming pass, layer by layer); all weights stay untouched.
ClassifierParams bn_adapt(const ClassifierParams& source, const std::vector<Sample>& target);

}  // namespace dda
