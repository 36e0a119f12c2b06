#include "screloc/features.hpp"

#include <cmath>

namespace screloc {

std::vector<FeatureSpec> generate_feature_specs(std::uint64_t rng_seed, int offset_radius_px) {
  Rng rng(rng_seed);
  const long long r = offset_radius_px;
  std::vector<FeatureSpec> specs(kFeatureCount);
  for (int i = 0; i < kFeatureCount; ++i) {
    FeatureSpec& s = specs[i];
    s.kind = i < kDepthFeatureCount ? FeatureKind::Depth : FeatureKind::DaRgb;
    s.offset.x() = static_cast<int>(rng.uniform_int(-r, r));
    s.offset.y() = static_cast<int>(rng.uniform_int(-r, r));
    s.channel = static_cast<ColourChannel>(rng.uniform_int(std::uint64_t(3)));
  }
  return specs;
}

namespace {

inline std::uint8_t channel_value(const Rgb8& c, ColourChannel ch) {
  switch (ch) {
    case ColourChannel::R: return c.r;
    case ColourChannel::G: return c.g;
    default: return c.b;
  }
}

}  // namespace

float compute_feature(const RgbdFrame& frame, const Vec2i& pixel, const FeatureSpec& spec) {
  if (!frame.depth_valid_at(pixel)) {
    throw InvalidCentrePixel("compute_feature: invalid depth at centre pixel");
  }
  const float centre_depth = frame.depth(pixel.x(), pixel.y());
  const Vec2i probe(
      pixel.x() + static_cast<int>(std::lround(spec.offset.x() / centre_depth)),
      pixel.y() + static_cast<int>(std::lround(spec.offset.y() / centre_depth)));

  if (spec.kind == FeatureKind::Depth) {
    float probe_depth = 0.0f;
    if (frame.depth.in_bounds(probe.x(), probe.y())) {
      const float d = frame.depth(probe.x(), probe.y());
      if (depth_valid(d)) probe_depth = d;
    }
    return centre_depth - probe_depth;
  }

  const float centre_value =
      channel_value(frame.colour(pixel.x(), pixel.y()), spec.channel);
  float probe_value = 0.0f;
  if (frame.colour.in_bounds(probe.x(), probe.y()) && frame.depth_valid_at(probe)) {
    probe_value = channel_value(frame.colour(probe.x(), probe.y()), spec.channel);
  }
  return centre_value - probe_value;
}

FeatureVector compute_feature_vector(const RgbdFrame& frame, const Vec2i& pixel,
                                     const std::vector<FeatureSpec>& specs) {
  FeatureVector v;
  for (int i = 0; i < kFeatureCount; ++i) v[i] = compute_feature(frame, pixel, specs[i]);
  return v;
}

std::vector<Vec2i> sample_grid_pixels(const RgbdFrame& frame, int spacing) {
  std::vector<Vec2i> pixels;
  for (int y = 0; y < frame.height(); y += spacing) {
    for (int x = 0; x < frame.width(); x += spacing) {
      if (depth_valid(frame.depth(x, y))) pixels.emplace_back(x, y);
    }
  }
  return pixels;
}

}  // namespace screloc
