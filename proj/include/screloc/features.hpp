#ifndef SCRELOC_FEATURES_HPP
#define SCRELOC_FEATURES_HPP

#include <optional>
#include <vector>

#include "screloc/core.hpp"
#include "screloc/geometry.hpp"
#include "screloc/rng.hpp"

namespace screloc {

constexpr int kFeatureCount = 256;
constexpr int kDepthFeatureCount = 128;  // indices [0,128) depth, [128,256) colour

enum class FeatureKind : std::uint8_t { Depth = 0, DaRgb = 1 };
enum class ColourChannel : std::uint8_t { R = 0, G = 1, B = 2 };

/// One entry of the 256-feature bank: a pixel probe offset (scaled at runtime
/// by inverse depth) plus, for colour features, the channel to difference.
struct FeatureSpec {
  FeatureKind kind = FeatureKind::Depth;
  Vec2i offset = Vec2i::Zero();  // pixels at 1 m depth
  ColourChannel channel = ColourChannel::R;

  bool operator==(const FeatureSpec&) const = default;
};

using FeatureVector = Eigen::Matrix<float, kFeatureCount, 1>;

struct RgbdFrame {
  DepthImage depth;    // metres; 0/NaN invalid
  ColourImage colour;
  PinholeIntrinsics intrinsics;
  std::optional<RigidTransform> ground_truth_pose;  // camera-to-world
  bool pose_reliable = false;

  int width() const { return depth.width(); }
  int height() const { return depth.height(); }

  bool depth_valid_at(const Vec2i& p) const {
    return depth.in_bounds(p.x(), p.y()) && screloc::depth_valid(depth(p.x(), p.y()));
  }
};

/// 128 depth specs followed by 128 colour specs, offsets uniform over the
/// integer square [-radius, radius]^2, channels uniform over {R,G,B}.
std::vector<FeatureSpec> generate_feature_specs(std::uint64_t rng_seed, int offset_radius_px);

/// Evaluates one feature at a pixel: the centre value minus the value at the
/// depth-scaled probe pixel. Probes that land out of bounds or on invalid
/// depth contribute 0. Throws InvalidCentrePixel if the centre depth is bad.
float compute_feature(const RgbdFrame& frame, const Vec2i& pixel, const FeatureSpec& spec);

FeatureVector compute_feature_vector(const RgbdFrame& frame, const Vec2i& pixel,
                                     const std::vector<FeatureSpec>& specs);

/// Pixels {(spacing*i, spacing*j)} with valid depth, in row-major order.
std::vector<Vec2i> sample_grid_pixels(const RgbdFrame& frame, int spacing);

}  // namespace screloc

#endif
