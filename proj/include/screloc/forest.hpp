#ifndef SCRELOC_FOREST_HPP
#define SCRELOC_FOREST_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "screloc/features.hpp"

namespace screloc {

struct TrainingExample {
  FeatureVector features;
  Vec3 world_position = Vec3::Zero();  // metres
  Rgb8 colour;
};

struct SplitParams {
  int feature_index = 0;  // in [0, kFeatureCount)
  float threshold = 0;    // feature value; >= routes right
};

/// Node of a flattened tree (breadth-first order, root at index 0).
struct TreeNode {
  SplitParams split;
  std::int32_t left = -1;   // -1 marks a leaf
  std::int32_t right = -1;
  std::int32_t leaf_id = -1;

  bool is_leaf() const { return left < 0; }
};

struct Tree {
  std::vector<TreeNode> nodes;
  std::int32_t leaf_count = 0;

  std::int32_t find_leaf(const FeatureVector& f) const;

  /// Descent that evaluates only the features actually visited.
  std::int32_t find_leaf(const RgbdFrame& frame, const Vec2i& pixel,
                         const std::vector<FeatureSpec>& specs) const;
};

struct TrainingConfig {
  int max_depth = 15;
  int candidates_per_node = 512;
  int min_examples_per_leaf = 16;
  double per_tree_fraction = 0.5;  // bootstrap fraction, drawn with replacement
  int tree_count = 5;
};

struct RandomForestConfig {
  int height = 14;
  double depth_feature_probability = 0.4;
  int tree_count = 5;
  int offset_radius_px = 130;
};

/// Scene-coordinate regression forest: fixed branch structure, leaves are
/// just dense ids that adaptation state attaches data to.
struct ForestModel {
  std::vector<Tree> trees;
  std::vector<FeatureSpec> specs;

  int tree_count() const { return static_cast<int>(trees.size()); }

  std::int64_t total_leaf_count() const {
    std::int64_t n = 0;
    for (const auto& t : trees) n += t.leaf_count;
    return n;
  }

  /// Flat slot index for (tree, leaf), tree-major.
  std::int64_t leaf_slot(int tree, std::int32_t leaf) const {
    std::int64_t base = 0;
    for (int t = 0; t < tree; ++t) base += trees[t].leaf_count;
    return base + leaf;
  }

  std::vector<std::int32_t> evaluate(const FeatureVector& f) const;
  std::vector<std::int32_t> evaluate_pixel(const RgbdFrame& frame, const Vec2i& pixel) const;

  std::uint64_t structural_hash() const;
};

constexpr double kNegativeInfinity = -std::numeric_limits<double>::infinity();

/// log det of the MLE covariance of the world positions, regularised by
/// 1e-9 * I. Throws TooFewExamples below 2 points.
double spatial_variance(const std::vector<TrainingExample>& examples);

/// Reduction-in-spatial-variance gain of a candidate split; -inf if either
/// child would hold fewer than 2 examples.
double information_gain(const std::vector<TrainingExample>& parent, const SplitParams& split);

Tree train_tree(const std::vector<TrainingExample>& examples, std::uint64_t rng_seed,
                const TrainingConfig& config);

ForestModel train_forest(const std::vector<TrainingExample>& examples,
                         const std::vector<FeatureSpec>& specs, std::uint64_t rng_seed,
                         const TrainingConfig& config = {});

/// Complete binary trees with zero thresholds and randomly chosen feature
/// indices; no training data needed.
ForestModel generate_random_forest(std::uint64_t rng_seed, const RandomForestConfig& config = {});

std::vector<std::uint8_t> serialize_forest(const ForestModel& forest);
ForestModel deserialize_forest(const std::vector<std::uint8_t>& bytes);

void save_forest(const ForestModel& forest, const std::string& path);
ForestModel load_forest(const std::string& path);

}  // namespace screloc

#endif
