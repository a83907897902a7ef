#pragma once

#include <string>

#include "dda/denoiser.hpp"
#include "dda/diffusion.hpp"

namespace dda {

// Projection variants: the full method (noise to level N, guide every reverse
// step), the same chain without guidance, and generation from pure noise with
// guidance only.
enum class GuidanceMode { full_dda, forward_reverse, reverse_guidance };

GuidanceMode parse_guidance_mode(const std::string& name);
const char* guidance_mode_name(GuidanceMode mode);

struct GuidanceConfig {
    int N = 50;       // reverse steps taken, counted on the active grid
    int D = 4;        // low-pass filter scale (power of two dividing the image side)
    float w = 6.0f;   // guidance step size
    GuidanceMode mode = GuidanceMode::full_dda;
    int respace = 50;            // number of points on the active reverse grid
    bool backprop_eps = false;   // exact guidance gradient through the noise model
};

// Enforces N <= respace <= base.T, D in {1,2,4,8,16} dividing the image side,
// and w >= 0. Throws std::invalid_argument on violation.
void validate_guidance_config(const GuidanceConfig& cfg, const DiffusionSchedule& base,
                              int image_side);

// The reverse grid a config runs on: the base schedule itself when
// respace == base.T, otherwise the respaced subsequence.
DiffusionSchedule active_schedule(const DiffusionSchedule& base, const GuidanceConfig& cfg);

// DxD average-pool followed by nearest-neighbor DxD upsample: a linear,
// self-adjoint, idempotent projection onto the blockwise-constant subspace.
// Requires D to divide height and width.
Tensor low_pass(const Tensor& x, int D);

// Direction that increases the low-pass distance between the reference and
// the current denoised estimate; the guided step moves against it. The
// closed form treats the noise prediction as locally constant in x_t;
// cfg.backprop_eps adds the exact term through the noise model.
Tensor guidance_direction(const Tensor& x_t, int t, const Tensor& x0_ref,
                          const DenoiserParams& params, const DiffusionSchedule& sched,
                          const GuidanceConfig& cfg);

// One reverse step on the active grid `sched`: unconditional proposal from
// p_sample, then a kick of size w toward the reference's low-pass content.
// With cfg.w == 0 (or mode forward_reverse) this is exactly p_sample.
Tensor guided_reverse_step(const Tensor& x_t_g, int t, const Tensor& x0_ref,
                           const DenoiserParams& params, const DiffusionSchedule& sched,
                           const GuidanceConfig& cfg, Rng& rng);

// Writes every k-th intermediate state of a projection as PGM for the
// progressive figures; `every` <= 0 disables.
struct StepDump {
    std::string dir;
    std::string prefix = "step";
    int every = 0;
};

// Projects an input toward the source distribution: perturb to noise level N
// (or start from pure noise in reverse_guidance mode), run guided reverse
// steps down the active grid, clip to [0,1]. N == 0 returns the input
// unchanged. Pure in (x0, params, cfg, rng), so per-sample rng streams make
// results independent of dataset order and batching.
Tensor dda_project(const Tensor& x0, const DenoiserParams& params, const DiffusionSchedule& base,
                   const GuidanceConfig& cfg, Rng rng, const StepDump* dump = nullptr);

}  // namespace dda
