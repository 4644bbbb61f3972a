#pragma once

#include <string>

#include "slidetex/image.hpp"

namespace slidetex {

enum class ThresholdMethod { Otsu, Fixed };
enum class Polarity { Above, Below };

struct ThresholdSpec {
    ThresholdMethod method = ThresholdMethod::Otsu;
    double value = 0.0;  // used when method == Fixed
    Polarity polarity = Polarity::Above;
};

/// Otsu threshold over a 256-bin histogram of the image's value range.
/// Between-class variance is compared in exact integer arithmetic; argmax
/// ties go to the smallest bin. The returned threshold is the lower edge of
/// the first bin of the upper class. A constant image returns the constant.
double otsu_threshold(const ScalarImage& img);

/// Mask bit set where the value satisfies the polarity strictly:
/// Above selects v > t, Below selects v < t.
BinaryMask threshold(const ScalarImage& img, const ThresholdSpec& spec);

std::string threshold_method_name(ThresholdMethod m);
std::string polarity_name(Polarity p);
ThresholdMethod threshold_method_from_name(const std::string& name);
Polarity polarity_from_name(const std::string& name);

}  // namespace slidetex
