#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dda/tensor.hpp"

namespace dda {

// Named parameter set with a stable iteration order (insertion order), so
// optimizer sweeps and checkpoint serialization are deterministic.
struct ParamStore {
    std::vector<std::string> order;
    std::unordered_map<std::string, Tensor> by_name;

    Tensor& add(const std::string& name, std::vector<int> shape);
    Tensor& get(const std::string& name);
    const Tensor& get(const std::string& name) const;
    bool has(const std::string& name) const { return by_name.count(name) != 0; }

    // Same names and shapes, all zeros; used for gradient accumulators.
    ParamStore zeros_like() const;
    void zero_all();
};

// ---- optimizers ----

struct AdamConfig {
    float lr = 1e-3f;
    float beta1 = 0.9f;
    float beta2 = 0.999f;
    float eps = 1e-8f;
};

struct AdamState {
    ParamStore m, v;  // lazily initialized to match params
    int64_t step = 0;
};

// Updates every parameter present in `grads` (bias-corrected Adam). When
// `subset` is given, only those names are touched.
void adam_step(ParamStore& params, const ParamStore& grads, const AdamConfig& cfg,
               AdamState& state, const std::vector<std::string>* subset = nullptr);

struct SgdState {
    ParamStore velocity;
};

void sgd_momentum_step(ParamStore& params, const ParamStore& grads, float lr, float momentum,
                       SgdState& state, const std::vector<std::string>* subset = nullptr);

// ---- layers ----
// All image ops take (B, C, H, W) tensors.

// 3x3-style convolution with square kernel and symmetric zero padding.
Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor& b, int pad);
// Any of dx/dw/db may be null to skip that gradient. dw/db are accumulated into.
void conv2d_backward(const Tensor& x, const Tensor& w, const Tensor& dy, int pad, Tensor* dx,
                     Tensor* dw, Tensor* db);

Tensor avg_pool2(const Tensor& x);
Tensor avg_pool2_backward(const Tensor& dy);

Tensor upsample_nearest(const Tensor& x, int factor);
Tensor upsample_nearest_backward(const Tensor& dy, int factor);

Tensor silu(const Tensor& x);
Tensor silu_backward(const Tensor& x, const Tensor& dy);

// x: (B, F), w: (O, F), b: (O) -> (B, O)
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);
void linear_backward(const Tensor& x, const Tensor& w, const Tensor& dy, Tensor* dx, Tensor* dw,
                     Tensor* db);

struct BatchNormCache {
    Tensor xhat;
    std::vector<float> inv_std;  // per channel
    bool train_mode = false;
};

// Train mode normalizes with batch statistics and folds them into the running
// estimates (running = (1-momentum)*running + momentum*batch); eval mode uses
// the running estimates only, so each sample's output is independent of the
// rest of the batch.
Tensor batchnorm(const Tensor& x, const Tensor& gamma, const Tensor& beta, Tensor& running_mean,
                 Tensor& running_var, bool train, float momentum, float eps,
                 BatchNormCache* cache);

Tensor batchnorm_backward(const BatchNormCache& cache, const Tensor& gamma, const Tensor& dy,
                          Tensor* dgamma, Tensor* dbeta);

Tensor concat_channels(const Tensor& a, const Tensor& b);
void split_channels(const Tensor& dy, int ca, Tensor* da, Tensor* db);

// ---- probability utilities ----

std::vector<float> softmax(std::span<const float> logits);
float cross_entropy(std::span<const float> probs, int label);
// d(cross_entropy)/d(logits) for softmax outputs: probs - onehot(label).
std::vector<float> softmax_xent_grad(std::span<const float> probs, int label);
float entropy(std::span<const float> probs);      // -sum p log p, 0 log 0 := 0
float confidence(std::span<const float> probs);   // max probability

}  // namespace dda
