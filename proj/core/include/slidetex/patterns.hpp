#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slidetex/lbp.hpp"

namespace slidetex {

/// The per-channel set of dominant pattern indices fixed at training time.
/// `selected` is ordered by descending training frequency, ties by ascending
/// pattern index; projected feature vectors follow this order.
struct DominantPatternDictionary {
    Channel tag = Channel::Gray;
    LbpConfig config;
    double theta = 0.9;
    std::vector<std::uint32_t> selected;

    std::size_t size() const { return selected.size(); }

    /// Identity hash over channel, descriptor parameters, theta and the
    /// selected indices. Guards models against mismatched dictionaries.
    std::uint64_t identity_hash() const;
};

/// Sums the training histograms, sorts bins by descending count (ties by
/// ascending index) and keeps the smallest prefix whose cumulative share of
/// the total mass reaches theta. Histograms must agree on channel and
/// descriptor; an all-zero sum is an error.
DominantPatternDictionary build_dictionary(std::span<const PatternHistogram> histograms,
                                           double theta);

/// Counts at the dictionary's selected patterns, in dictionary order,
/// L1-normalized. A histogram with no mass on any selected pattern projects
/// to all zeros.
std::vector<double> project(const PatternHistogram& hist, const DominantPatternDictionary& dict);

/// One concatenated segment of the final feature vector.
struct FeatureSegment {
    Channel tag = Channel::Gray;
    std::uint64_t dict_hash = 0;
    std::uint32_t length = 0;
};

/// Channel order and per-segment dictionary identity for a feature space.
/// Models persist the hash and refuse vectors projected differently.
struct FeatureLayout {
    std::vector<FeatureSegment> segments;

    std::size_t dim() const;
    std::uint64_t hash() const;
};

FeatureLayout layout_of(std::span<const DominantPatternDictionary> dicts);

/// Concatenates per-channel projections after validating them against the
/// layout (segment count, order, lengths).
std::vector<double> assemble_feature(std::span<const std::vector<double>> projections,
                                     const FeatureLayout& layout);

/// Dictionary JSON: {channel, P, R, variant, theta, selected}.
std::string dictionary_to_json(const DominantPatternDictionary& dict);
DominantPatternDictionary dictionary_from_json(const std::string& text);
void save_dictionary(const std::string& path, const DominantPatternDictionary& dict);
DominantPatternDictionary load_dictionary(const std::string& path);

}  // namespace slidetex
