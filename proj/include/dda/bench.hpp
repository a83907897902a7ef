#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dda/baselines.hpp"
#include "dda/classifier.hpp"
#include "dda/corruptions.hpp"
#include "dda/dataset.hpp"
#include "dda/denoiser.hpp"
#include "dda/diffusion.hpp"
#include "dda/ensemble.hpp"
#include "dda/guidance.hpp"

namespace dda {

enum class Setting { independent, joint };
Setting parse_setting(const std::string& name);
const char* setting_name(Setting s);

// Evaluation regime: how the corrupted streams are ordered, mixed and batched.
// In the independent setting each corruption type is its own adaptation
// problem, so mixed_types is forced false there.
struct RegimeConfig {
    Setting setting = Setting::independent;
    int batch_size = 16;
    bool mixed_classes = true;  // seeded shuffle; false keeps class-sorted order
    bool mixed_types = false;   // seeded interleave of type segments (joint only)
    std::vector<int> severities = {5};
    uint64_t seed = 0;
};

// Validates and applies the forced-field rules above.
RegimeConfig normalize(const RegimeConfig& regime);

// One corrupted copy of the clean evaluation subset.
struct CorruptedSet {
    std::string corruption;
    int severity = 5;
    std::vector<Sample> samples;  // sample_id globally unique across sets
};

// Applies every (kind, severity) pair to the first `limit` clean samples
// (0 = all; the clean split cycles through classes, so prefixes stay
// balanced). Corruption noise comes from a per-sample stream off `seed`,
// making the corpus independent of evaluation order.
std::vector<CorruptedSet> build_corpus(const std::vector<Sample>& clean,
                                       const std::vector<CorruptionKind>& kinds,
                                       const std::vector<int>& severities, uint64_t seed,
                                       int limit = 0);

// Position of one stream element in its corpus: corpus[set].samples[item].
struct StreamEntry {
    int set = 0;
    int item = 0;
};

// Deterministic evaluation order under a regime: within each set class-sorted
// or seeded-shuffled, sets concatenated or seeded-interleaved (preserving
// within-set order). Only sets matching the regime's severities are included.
std::vector<StreamEntry> build_stream(const std::vector<CorruptedSet>& corpus,
                                      const RegimeConfig& regime);

// Trained models shared by all methods.
struct Models {
    ClassifierParams classifier;
    DenoiserParams denoiser;
    DiffusionSchedule schedule;
};

enum class MethodKind { source, dda, diffpure, tent, memo, bn_stats };
MethodKind parse_method_kind(const std::string& name);
const char* method_kind_name(MethodKind kind);

// One benchmark column. The guidance settings apply to dda rows; diffpure_t
// is the forward noise level on the full base grid.
struct MethodSpec {
    std::string name = "source";
    MethodKind kind = MethodKind::source;
    GuidanceConfig guidance{};
    FusionRule fusion = FusionRule::sum;
    bool softmax_weights = true;
    int diffpure_t = 150;
    TentConfig tent{};
    MemoConfig memo{};
};

// The headline comparison: source, ensembled projection, unguided
// purification, Tent, MEMO, and BN-statistics adaptation.
std::vector<MethodSpec> default_methods(const GuidanceConfig& guidance);

// Projection columns for the D x w sensitivity grid, named "<prefix>_D<d>_w<w>".
std::vector<MethodSpec> dw_grid_methods(const GuidanceConfig& base, const std::vector<int>& ds,
                                        const std::vector<float>& ws, FusionRule fusion,
                                        const std::string& prefix = "dda");

struct BenchRow {
    std::string method;
    std::string corruption;
    int severity = 5;
    Setting setting = Setting::independent;
    int batch_size = 16;
    bool mixed_classes = true;
    bool mixed_types = false;
    uint64_t seed = 0;
    int n = 0;
    double top1 = 0.0;
    double ms_per_sample = 0.0;
};

struct BenchmarkReport {
    std::vector<std::string> config_echo;
    std::vector<BenchRow> rows;
};

struct EpisodicPrediction {
    int cls = 0;
    std::vector<float> probs;
    double ms = 0.0;
};

// Evaluates an episodic method (dda, diffpure, memo) on one sample. All
// randomness comes from a stream keyed by (seed, sample_id, kind), so the
// result cannot depend on batch composition or evaluation order.
EpisodicPrediction evaluate_episodic(const MethodSpec& method, const Models& models,
                                     const Tensor& image, uint64_t sample_id, uint64_t seed);

struct RunOptions {
    uint64_t seed = 0;        // episodic noise seed
    bool timing = false;      // wall-clock column; off keeps CSV bytes reproducible
    int verify_episodic = 3;  // re-evaluate this many cached episodic samples per regime
};

// Evaluates each method under each regime. Episodic methods are computed once
// per sample and reused across regimes, with `verify_episodic` fresh
// re-evaluations per regime asserting bitwise equality against the cache.
// Stream-level methods (tent, bn_stats) adapt per type segment in the
// independent setting and over the whole stream in the joint setting.
BenchmarkReport run_benchmark(const std::vector<MethodSpec>& methods,
                              const std::vector<CorruptedSet>& corpus,
                              const std::vector<RegimeConfig>& regimes, const Models& models,
                              const RunOptions& opts = {});

// Per-(set, rule) accuracy for every fusion rule, sharing a single projection
// per sample so the grid costs one diffusion pass.
struct AblationCell {
    std::string corruption;
    int severity = 5;
    std::string label;
    int n = 0;
    double top1 = 0.0;
};
std::vector<AblationCell> fusion_ablation(const MethodSpec& projector, const Models& models,
                                          const std::vector<CorruptedSet>& corpus, uint64_t seed);

void write_csv(const BenchmarkReport& report, const std::string& path);
void write_svg(const BenchmarkReport& report, const std::string& path);
// results.csv + results.svg + run_config.txt under `dir` (created if needed).
void emit_report(const BenchmarkReport& report, const std::string& dir);

}  // namespace dda
