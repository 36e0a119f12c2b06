#ifndef SCRELOC_CORE_HPP
#define SCRELOC_CORE_HPP

#include <Eigen/Core>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace screloc {

using Vec2i = Eigen::Vector2i;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

struct Rgb8 {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb8&) const = default;
};

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidDepth : public Error {
public:
  using Error::Error;
};
class InvalidCentrePixel : public Error {
public:
  using Error::Error;
};
class AngleNearPi : public Error {
public:
  using Error::Error;
};
class TooFewExamples : public Error {
public:
  using Error::Error;
};
class EmptyTrainingSet : public Error {
public:
  using Error::Error;
};
class MalformedData : public Error {
public:
  using Error::Error;
};
class UnreliablePose : public Error {
public:
  using Error::Error;
};
class DimensionMismatch : public Error {
public:
  using Error::Error;
};
class MissingFile : public Error {
public:
  using Error::Error;
};
class MalformedPose : public Error {
public:
  using Error::Error;
};
class IoError : public Error {
public:
  using Error::Error;
};

/// Row-major 2D grid addressed as (x, y) with x the column.
template <typename T>
class Image {
public:
  Image() = default;
  Image(int width, int height, const T& fill = T{})
      : width_(width), height_(height), data_(static_cast<std::size_t>(width) * height, fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

  T& operator()(int x, int y) {
    assert(in_bounds(x, y));
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  const T& operator()(int x, int y) const {
    assert(in_bounds(x, y));
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool operator==(const Image&) const = default;

private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using DepthImage = Image<float>;   // metres; 0 or NaN marks an invalid pixel
using ColourImage = Image<Rgb8>;

constexpr float kMaxValidDepth = 20.0f;

inline bool depth_valid(float d) { return d > 0.0f && d <= kMaxValidDepth && std::isfinite(d); }

}  // namespace screloc

#endif
