#pragma once

#include "slidetex/image.hpp"

namespace slidetex {

/// Violet channel: V = 0.5 * (R + B) / sqrt(R^2 + G^2 + B^2).
/// Black pixels (R=G=B=0) map to 0. Output values lie in [0, sqrt(2)/2];
/// the vascular network is the brightest structure in this channel.
ScalarImage to_v_channel(const RgbImage& patch);

/// Hematoxylin channel before rescaling: H = R / C3 with
/// C3 = arctan(B / max(R, G)). Pixels with R = 0 map to 0; C3 is clamped
/// below at 1e-4 so B = 0 pixels stay finite.
ScalarImage to_h_channel_raw(const RgbImage& patch);

/// Raw H affinely rescaled per patch to [0, 255] (a constant raw image maps
/// to all zeros). The rescale is monotone, so it does not change any LBP
/// sign comparison.
ScalarImage to_h_channel(const RgbImage& patch);

/// BT.601 luma: 0.299 R + 0.587 G + 0.114 B, in [0, 255].
ScalarImage to_gray(const RgbImage& patch);

ScalarImage to_channel(const RgbImage& patch, Channel channel);

}  // namespace slidetex
