#include "seyolo/qtensor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace seyolo {

std::string TensorShape::str() const {
  return std::to_string(height) + "x" + std::to_string(width) + "x" +
         std::to_string(channels);
}

QuantParams compute_qparams(double min_value, double max_value, QuantMode mode) {
  if (!(min_value <= max_value)) {
    throw std::invalid_argument("compute_qparams: min > max");
  }
  if (min_value == 0.0 && max_value == 0.0) {
    throw std::domain_error("compute_qparams: degenerate range, tensor is uncalibrated");
  }
  QuantParams qp;
  if (mode == QuantMode::kSymmetric) {
    const double bound = std::max(std::abs(min_value), std::abs(max_value));
    qp.scale = static_cast<float>(bound / 127.0);
    qp.zero_point = 0;
  } else {
    // Zero must stay representable so padding and ReLU clamps are exact.
    const double lo = std::min(min_value, 0.0);
    const double hi = std::max(max_value, 0.0);
    const double scale = (hi - lo) / 255.0;
    const double zp = std::round(-128.0 - lo / scale);
    qp.scale = static_cast<float>(scale);
    qp.zero_point = static_cast<std::int32_t>(std::clamp(zp, -128.0, 127.0));
  }
  return qp;
}

std::int8_t quantize_value(double x, const QuantParams& qp) {
  const double q = std::round(x / static_cast<double>(qp.scale)) + qp.zero_point;
  return static_cast<std::int8_t>(std::clamp(q, -128.0, 127.0));
}

double dequantize_value(std::int8_t q, const QuantParams& qp) {
  return static_cast<double>(qp.scale) * (static_cast<double>(q) - qp.zero_point);
}

QuantizedTensor quantize(const FloatTensor& t, const QuantParams& qp) {
  assert(qp.valid());
  QuantizedTensor out(t.shape, qp);
  for (std::size_t i = 0; i < t.data.size(); ++i) {
    out.data[i] = quantize_value(t.data[i], qp);
  }
  return out;
}

FloatTensor dequantize(const QuantizedTensor& q) {
  FloatTensor out(q.shape);
  for (std::size_t i = 0; i < q.data.size(); ++i) {
    out.data[i] = static_cast<float>(dequantize_value(q.data[i], q.qparams));
  }
  return out;
}

FixedPointMultiplier FixedPointMultiplier::from_scale(double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("FixedPointMultiplier: scale must be positive");
  }
  int exponent = 0;
  const double frac = std::frexp(scale, &exponent);  // frac in [0.5, 1)
  auto mult = static_cast<std::int64_t>(std::round(frac * (1ll << 31)));
  int shift = 31 - exponent;
  if (mult == (1ll << 31)) {  // frac rounded up to 1.0
    mult >>= 1;
    --shift;
  }
  // Shift must fit a 64-bit product; halving the multiplier while dropping a
  // shift step keeps the encoded value identical.
  while (shift > 62 && mult > 0) {
    mult = (mult + 1) >> 1;
    --shift;
  }
  if (shift > 62) {
    mult = 0;
    shift = 0;
  }
  if (shift < 0) {
    throw std::invalid_argument("FixedPointMultiplier: scale too large to encode");
  }
  FixedPointMultiplier m;
  m.multiplier = static_cast<std::int32_t>(mult);
  m.shift = shift;
  return m;
}

std::int8_t requantize(std::int32_t acc, const FixedPointMultiplier& m,
                       std::int32_t out_zero_point) {
  const std::int64_t prod = static_cast<std::int64_t>(acc) * m.multiplier;
  std::int64_t rounded = prod;
  if (m.shift > 0) {
    const std::int64_t floor_shift = prod >> m.shift;  // arithmetic, floors
    const std::int64_t mask = (std::int64_t{1} << m.shift) - 1;
    const std::int64_t rem = prod & mask;
    const std::int64_t half = std::int64_t{1} << (m.shift - 1);
    rounded = floor_shift;
    if (rem > half || (rem == half && (floor_shift & 1))) {
      ++rounded;
    }
  }
  const std::int64_t v = rounded + out_zero_point;
  return static_cast<std::int8_t>(std::clamp<std::int64_t>(v, -128, 127));
}

std::int8_t requantize(std::int32_t acc, double combined_scale,
                       std::int32_t out_zero_point) {
  return requantize(acc, FixedPointMultiplier::from_scale(combined_scale),
                    out_zero_point);
}

}  // namespace seyolo
