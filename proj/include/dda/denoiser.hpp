#pragma once

#include "dda/dataset.hpp"
#include "dda/diffusion.hpp"
#include "dda/nn.hpp"
#include "dda/rng.hpp"

namespace dda {

inline constexpr int kTimeDim = 64;

// Noise-prediction U-Net:
//   enc1 conv3x3 (1->32) + SiLU
//   avg-pool 2x -> enc2 conv3x3 (32->64) + SiLU
//   mid conv3x3 (64->64) + per-channel time bias + SiLU
//   nearest 2x upsample, concat with enc1 -> dec conv3x3 (96->32) + SiLU
//   out conv3x3 (32->1)
// No normalization layers. The time bias comes from a sinusoidal embedding
// fed through a 2-layer MLP (64 -> 64, SiLU between).
struct DenoiserParams {
    ParamStore p;
};

DenoiserParams init_denoiser(uint64_t seed);

// Raw sinusoidal position code for a timestep (pre-MLP).
std::vector<float> sinusoidal_embedding(int t, int dim = kTimeDim);

// MLP-processed embedding: the per-channel bias added at the mid block.
std::vector<float> time_embedding(const DenoiserParams& params, int t, int dim = kTimeDim);

// Activation cache for one forward pass; feed to denoiser_backward.
struct DenoiserTape {
    Tensor x;
    std::vector<int> t;
    Tensor emb, a_t1, h_t1;        // time MLP: input batch, pre-SiLU, post-SiLU
    Tensor a1, h1, p1;             // enc1 pre/post SiLU, pooled
    Tensor a2, h2;                 // enc2
    Tensor am, hm;                 // mid (post bias) pre/post SiLU
    Tensor cat;                    // upsampled mid + enc1 skip
    Tensor ad, hd;                 // dec
};

// t carries one base-schedule timestep per batch element.
Tensor denoiser_forward(const DenoiserParams& params, const Tensor& x, const std::vector<int>& t,
                        DenoiserTape* tape);

// Accumulates parameter gradients into `grads` (same names as params) and
// optionally propagates to the input.
void denoiser_backward(const DenoiserParams& params, const DenoiserTape& tape, const Tensor& dout,
                       ParamStore* grads, Tensor* dx);

Tensor predict_noise(const DenoiserParams& params, const Tensor& x_t, int t);
Tensor predict_noise(const DenoiserParams& params, const Tensor& x_t, const std::vector<int>& t);

struct DiffusionTrainConfig {
    int epochs = 30;
    int batch_size = 64;
    float lr = 2e-4f;
    float beta1 = 0.9f;
    float beta2 = 0.999f;
    uint64_t seed = 0;
};

struct TrainLog {
    std::vector<float> step_loss;     // one entry per optimizer step
    std::vector<float> epoch_metric;  // per-epoch summary (loss or accuracy)
};

// Standard noise-prediction training: per step draw a batch, per-sample
// uniform t in [1,T] and Gaussian eps, minimize loss_simple with Adam.
// Deterministic given cfg.seed. Throws on non-finite loss.
DenoiserParams train_denoiser(const Dataset& dataset, const DiffusionSchedule& sched,
                              const DiffusionTrainConfig& cfg, TrainLog* log = nullptr);

// Unconditional generation: full reverse chain from pure noise.
Tensor sample_unconditional(const DenoiserParams& params, const DiffusionSchedule& sched, int n,
                            Rng rng);

}  // namespace dda
