#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "seyolo/qtensor.hpp"

namespace seyolo {

inline constexpr float kLeakySlope = 0.1f;

enum class Activation { kLinear, kLeakyRelu };

struct ConvGeom {
  int kernel = 3;  // 1 or 3
  int stride = 1;  // 1 or 2
  int in_channels = 0;
  int out_channels = 0;
  Activation activation = Activation::kLeakyRelu;

  int padding() const { return kernel / 2; }  // "same" padding
};

// Float convolution weights, layout (out, in, k, k) row-major.
struct ConvF {
  ConvGeom geom;
  std::vector<float> weights;
  std::vector<float> bias;  // per output channel
};

// Int8 convolution: symmetric per-output-channel weights, asymmetric
// per-tensor activations, 32-bit accumulator. Bias is pre-quantized with
// scale in_scale * weight_scale[oc]. The leaky activation is folded into the
// requantization step via a second multiplier for negative accumulators.
struct ConvQ {
  ConvGeom geom;
  std::vector<std::int8_t> weights;  // (out, in, k, k)
  std::vector<std::int32_t> bias;
  std::vector<float> weight_scales;  // per output channel
  QuantParams in_qp;
  QuantParams out_qp;
  std::vector<FixedPointMultiplier> mul_pos;  // in*w/out per channel
  std::vector<FixedPointMultiplier> mul_neg;  // slope*in*w/out per channel
};

// Rebuilds the requantization multipliers from the stored qparams/scales.
void finalize(ConvQ& conv);

FloatTensor conv2d(const FloatTensor& input, const ConvF& conv, int threads = 1);
QuantizedTensor conv2d(const QuantizedTensor& input, const ConvQ& conv, int threads = 1);

std::uint64_t conv_param_count(int kernel, int in_channels, int out_channels);

// Squeeze-and-excitation: global average pool -> FC(ch -> ch/r) -> ReLU ->
// FC(ch/r -> ch) -> sigmoid -> per-channel gate on the input.
struct SeF {
  int channels = 0;
  int reduction = 4;
  std::vector<float> fc1_w;  // (reduced, channels)
  std::vector<float> fc1_b;
  std::vector<float> fc2_w;  // (channels, reduced)
  std::vector<float> fc2_b;

  int reduced_channels() const { return std::max(1, channels / reduction); }
};

// Observation hook for the float block's internal stages; stage names are
// "pool", "fc1" (post-ReLU) and "fc2" (pre-sigmoid).
using SeStageTap = std::function<void(const char* stage, const FloatTensor&)>;

FloatTensor se_block(const FloatTensor& input, const SeF& se, const SeStageTap& tap = {});

// Int8 squeeze-and-excitation. Every internal stage carries its own qparams
// (calibrated on the float path); the sigmoid is a 256-entry lookup table
// from fc2 codes to gate codes with fixed gate qparams (scale 1/256,
// zero_point -128).
struct SeQ {
  int channels = 0;
  int reduction = 4;
  std::vector<std::int8_t> fc1_w;
  std::vector<std::int32_t> fc1_b;
  std::vector<float> fc1_scales;  // per row
  std::vector<std::int8_t> fc2_w;
  std::vector<std::int32_t> fc2_b;
  std::vector<float> fc2_scales;
  QuantParams in_qp, pool_qp, fc1_qp, fc2_qp, gate_qp, out_qp;

  FixedPointMultiplier pool_mul;
  std::vector<FixedPointMultiplier> fc1_mul, fc2_mul;
  FixedPointMultiplier scale_mul;
  std::array<std::int8_t, 256> gate_lut{};
  int pool_divisor = 0;  // H*W the pool multiplier was built for

  int reduced_channels() const { return std::max(1, channels / reduction); }
};

QuantParams se_gate_qparams();

// Rebuilds multipliers and the sigmoid LUT; needs the spatial size the block
// will run at (the pool multiplier folds the 1/(H*W) divisor).
void finalize(SeQ& se, int height, int width);

QuantizedTensor se_block(const QuantizedTensor& input, const SeQ& se);

std::uint64_t se_param_count(int channels, int reduction);

FloatTensor maxpool2x2(const FloatTensor& input);
QuantizedTensor maxpool2x2(const QuantizedTensor& input);

FloatTensor upsample_nearest2x(const FloatTensor& input);
QuantizedTensor upsample_nearest2x(const QuantizedTensor& input);

// Channel-axis concatenation in listed order; single input is an identity
// copy. Int8 inputs must share identical qparams (the calibrator unifies
// them), so the concatenation is a raw byte copy.
FloatTensor route_concat(const std::vector<const FloatTensor*>& inputs);
QuantizedTensor route_concat(const std::vector<const QuantizedTensor*>& inputs);

FloatTensor leaky_relu(const FloatTensor& input, float slope);
QuantizedTensor leaky_relu(const QuantizedTensor& input, float slope, const QuantParams& out_qp);

}  // namespace seyolo
