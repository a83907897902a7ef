#pragma once

#include <string>

#include "dda/classifier.hpp"

namespace dda {

// How the prediction on the original input and the prediction on the adapted
// input are combined. "sum" averages probability vectors; the *_select rules
// keep one prediction outright; the *_sum_late rules weight the probability
// vectors; the *_fuse_early rules blend the two images pixel-wise and
// re-classify. none_* disable ensembling for ablation columns.
enum class FusionRule {
    sum,
    entropy_select,
    confidence_select,
    entropy_fuse_early,
    confidence_fuse_early,
    entropy_sum_late,
    confidence_sum_late,
    none_original,
    none_adapted,
};

FusionRule parse_fusion_rule(const std::string& name);
const char* fusion_rule_name(FusionRule rule);
const std::vector<FusionRule>& all_fusion_rules();
// True for the rules that operate on pixels and need a re-classification.
bool fusion_needs_images(FusionRule rule);

struct EnsembleResult {
    int cls = 0;
    std::vector<float> probs;
};

// Argmax with ties resolved toward the lower class index.
int argmax_class(const std::vector<float>& probs);

// Combines two predictions over the same class set with a probability-level
// rule (early-fusion rules are rejected here; they need the images).
// Selection ties prefer the adapted prediction. `softmax_weights` picks
// between softmax weighting of the signal pair (default) and direct
// normalization a/(a+b).
EnsembleResult self_ensemble(const Prediction& original, const Prediction& adapted,
                             FusionRule rule, bool softmax_weights = true);

// Pixel-level convex blend of the two images. Confidence weighting uses each
// prediction's own confidence; entropy weighting uses the other prediction's
// entropy (an uncertain partner raises your weight). `temperature` scales the
// softmax sharpness (1 = the default; ->0 approaches hard selection).
Tensor early_fuse(const Tensor& x1, const Tensor& x2, const Prediction& p1, const Prediction& p2,
                  FusionRule rule, bool softmax_weights = true, float temperature = 1.0f);

// Applies any rule end to end for one sample: classifies both images in eval
// mode, blends per the rule, and re-classifies the fused image for the early
// rules.
EnsembleResult ensemble_with_rule(ClassifierParams& clf, const Tensor& x, const Tensor& x_adapted,
                                  FusionRule rule, bool softmax_weights = true);

}  // namespace dda
