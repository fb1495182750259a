#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace seyolo {

struct TensorShape {
  int channels = 0;
  int height = 0;
  int width = 0;

  std::int64_t element_count() const {
    return static_cast<std::int64_t>(channels) * height * width;
  }
  bool valid() const { return channels >= 1 && height >= 1 && width >= 1; }
  bool operator==(const TensorShape&) const = default;

  // "64x64x16" style: height x width x channels.
  std::string str() const;
};

// Dense row-major CHW float tensor.
struct FloatTensor {
  TensorShape shape;
  std::vector<float> data;

  FloatTensor() = default;
  explicit FloatTensor(TensorShape s)
      : shape(s), data(static_cast<std::size_t>(s.element_count()), 0.0f) {}

  float& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * shape.height + y) * shape.width + x];
  }
  float at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * shape.height + y) * shape.width + x];
  }
};

enum class QuantMode { kSymmetric, kAsymmetric };

// Affine int8 quantization parameters: real = scale * (q - zero_point).
// Bit width is fixed at 8.
struct QuantParams {
  float scale = 1.0f;
  std::int32_t zero_point = 0;

  bool valid() const { return scale > 0.0f && zero_point >= -128 && zero_point <= 127; }
  bool operator==(const QuantParams&) const = default;
};

struct QuantizedTensor {
  TensorShape shape;
  std::vector<std::int8_t> data;
  QuantParams qparams;

  QuantizedTensor() = default;
  QuantizedTensor(TensorShape s, QuantParams qp)
      : shape(s), data(static_cast<std::size_t>(s.element_count()), 0), qparams(qp) {}

  std::int8_t& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * shape.height + y) * shape.width + x];
  }
  std::int8_t at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * shape.height + y) * shape.width + x];
  }
};

// Derives quantization parameters from an observed [min, max] range.
//   symmetric:  scale = max(|min|,|max|)/127, zero_point = 0
//   asymmetric: range is first widened to include zero, then
//               scale = (max-min)/255, zero_point = round(-128 - min/scale)
// Throws std::domain_error when min == max == 0 (uncalibrated tensor) and
// std::invalid_argument when min > max.
QuantParams compute_qparams(double min_value, double max_value, QuantMode mode);

// Scalar quantize: clamp(round_half_away_from_zero(x/scale) + zero_point).
std::int8_t quantize_value(double x, const QuantParams& qp);
// Scalar dequantize in double precision: scale * (q - zero_point).
double dequantize_value(std::int8_t q, const QuantParams& qp);

QuantizedTensor quantize(const FloatTensor& t, const QuantParams& qp);
FloatTensor dequantize(const QuantizedTensor& q);

// A positive real factor encoded as a 32-bit fixed-point multiplier plus a
// right shift, so that factor ~= multiplier * 2^-shift with multiplier in
// [2^30, 2^31). Pure-integer application gives bit-exact results across
// platforms.
struct FixedPointMultiplier {
  std::int32_t multiplier = 0;
  int shift = 0;

  static FixedPointMultiplier from_scale(double scale);
};

// result = clamp(round_to_nearest_even(acc * multiplier >> shift) + zero_point)
std::int8_t requantize(std::int32_t acc, const FixedPointMultiplier& m,
                       std::int32_t out_zero_point);
// Convenience overload that encodes the scale on the fly.
std::int8_t requantize(std::int32_t acc, double combined_scale,
                       std::int32_t out_zero_point);

}  // namespace seyolo
