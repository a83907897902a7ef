#pragma once

#include "dda/dataset.hpp"
#include "dda/denoiser.hpp"  // TrainLog
#include "dda/nn.hpp"

namespace dda {

// Source recognition model:
//   conv3x3 (1->16) + BN + SiLU + avg-pool2
//   conv3x3 (16->32) + BN + SiLU + avg-pool2
//   flatten (32*8*8) -> linear -> 10 logits
// BN layers carry affine scale/shift plus running mean/var (momentum 0.1).
struct ClassifierParams {
    ParamStore p;
};

ClassifierParams init_classifier(uint64_t seed);

enum class ClassifyMode { train, eval };

struct Prediction {
    std::vector<float> logits;
    std::vector<float> probs;
};

// Parameter-name subsets used by adaptation baselines.
const std::vector<std::string>& bn_affine_param_names();
const std::vector<std::string>& all_but_final_param_names();

struct ClassifierTape {
    Tensor x;
    Tensor c1;  // conv1 output (pre-BN)
    BatchNormCache bn1;
    Tensor b1, h1, p1;  // BN out, SiLU out, pooled
    Tensor c2;
    BatchNormCache bn2;
    Tensor b2, h2, p2;
    Tensor flat;
};

// Returns logits (B, 10). Train mode uses batch statistics and updates the
// running estimates in `params`; eval mode reads running stats only, making
// each sample's output independent of batch composition. Eval mode requires
// strictly positive running variances.
Tensor classifier_forward(ClassifierParams& params, const Tensor& x, ClassifyMode mode,
                          ClassifierTape* tape);

void classifier_backward(const ClassifierParams& params, const ClassifierTape& tape,
                         const Tensor& dlogits, ParamStore* grads, Tensor* dx = nullptr);

// Per-sample predictions (softmax over logits).
std::vector<Prediction> classify(ClassifierParams& params, const Tensor& x, ClassifyMode mode);

struct ClassifierTrainConfig {
    int epochs = 20;
    int batch_size = 64;
    float lr = 1e-3f;
    uint64_t seed = 0;
};

// Adam on softmax cross-entropy over dataset.train; deterministic given seed.
// Logs per-epoch training accuracy. Throws on non-finite loss.
ClassifierParams train_classifier(const Dataset& dataset, const ClassifierTrainConfig& cfg,
                                  TrainLog* log = nullptr);

// Top-1 accuracy of eval-mode predictions over a sample list.
float evaluate_accuracy(ClassifierParams& params, const std::vector<Sample>& samples);

}  // namespace dda
