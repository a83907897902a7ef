#pragma once

#include <cstdint>

#include "dda/tensor.hpp"

namespace dda {

// Counter-based RNG: every draw is a pure function of (seed, stream, counter),
// so streams can be replayed or evaluated out of order without shared state.
// Sampling the same (seed, stream) twice gives the same sequence regardless of
// what other streams did in between, which is what makes per-sample adaptation
// independent of batch composition.
struct Rng {
    uint64_t seed = 0;
    uint64_t stream = 0;
    uint64_t counter = 0;

    Rng() = default;
    Rng(uint64_t seed_, uint64_t stream_) : seed(seed_), stream(stream_) {}

    // Stateless draws addressed by an explicit counter value.
    uint64_t u64_at(uint64_t ctr, uint64_t salt = 0) const;
    double uniform_at(uint64_t ctr, uint64_t salt = 0) const;  // [0,1)
    float normal_at(uint64_t ctr) const;                       // one N(0,1) per counter value

    // Stateful convenience wrappers; each call consumes one counter tick.
    uint64_t next_u64() { return u64_at(counter++); }
    float uniform() { return static_cast<float>(uniform_at(counter++)); }
    float normal() { return normal_at(counter++); }
    // Uniform integer in [0, n); n must be positive.
    uint64_t below(uint64_t n);

    // Derives an independent stream; the child starts at counter 0.
    Rng fork(uint64_t tag) const;
};

// Fills a fresh tensor with i.i.d. N(0,1) draws, consuming numel counter ticks.
Tensor gaussian_sample(Rng& rng, std::vector<int> shape);

// Deterministic Fisher-Yates shuffle (does not depend on std library internals).
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace dda
