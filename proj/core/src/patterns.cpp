#include "slidetex/patterns.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "slidetex/error.hpp"
#include "slidetex/hash.hpp"

namespace slidetex {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::uint64_t DominantPatternDictionary::identity_hash() const {
    Fnv1a64 h;
    h.update("channel=").update(channel_name(tag));
    h.update(";P=").update(std::to_string(config.neighbors));
    h.update(";R=").update(format_double(config.radius));
    h.update(";variant=").update(lbp_variant_name(config.variant));
    h.update(";theta=").update(format_double(theta));
    h.update(";selected=");
    for (auto idx : selected) h.update(std::to_string(idx)).update(",");
    return h.value();
}

DominantPatternDictionary build_dictionary(std::span<const PatternHistogram> histograms,
                                           double theta) {
    if (histograms.empty()) throw DataError("build_dictionary: no histograms");
    if (!(theta > 0.0 && theta <= 1.0)) throw ConfigError("theta must be in (0, 1]");

    const PatternHistogram& first = histograms.front();
    for (const auto& h : histograms) {
        if (h.tag != first.tag || !h.config.same_descriptor(first.config))
            throw DataError("build_dictionary: histograms mix channels or descriptor configs");
        if (h.counts.size() != first.counts.size())
            throw DataError("build_dictionary: histogram size mismatch");
    }

    std::vector<std::uint64_t> sum(first.counts.size(), 0);
    for (const auto& h : histograms)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += h.counts[i];

    const std::uint64_t total = std::accumulate(sum.begin(), sum.end(), std::uint64_t{0});
    if (total == 0) throw DataError("build_dictionary: no training mass (all-zero histograms)");

    std::vector<std::uint32_t> order(sum.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (sum[a] != sum[b]) return sum[a] > sum[b];
        return a < b;
    });

    // Counts are exact in double up to 2^53, so the cumulative-share
    // comparison below is deterministic.
    std::uint64_t cumulative = 0;
    std::size_t m = 0;
    while (m < order.size()) {
        cumulative += sum[order[m]];
        ++m;
        if (static_cast<double>(cumulative) / static_cast<double>(total) >= theta) break;
    }

    DominantPatternDictionary dict;
    dict.tag = first.tag;
    dict.config = first.config;
    dict.theta = theta;
    dict.selected.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    return dict;
}

std::vector<double> project(const PatternHistogram& hist, const DominantPatternDictionary& dict) {
    if (hist.tag != dict.tag)
        throw DataError("project: histogram channel does not match dictionary");
    if (!hist.config.same_descriptor(dict.config))
        throw DataError("project: histogram descriptor config does not match dictionary");

    std::vector<double> out(dict.selected.size(), 0.0);
    double mass = 0.0;
    for (std::size_t i = 0; i < dict.selected.size(); ++i) {
        out[i] = static_cast<double>(hist.counts[dict.selected[i]]);
        mass += out[i];
    }
    if (mass > 0.0)
        for (double& v : out) v /= mass;
    return out;
}

std::size_t FeatureLayout::dim() const {
    std::size_t d = 0;
    for (const auto& s : segments) d += s.length;
    return d;
}

std::uint64_t FeatureLayout::hash() const {
    Fnv1a64 h;
    h.update("norm=l1");
    for (const auto& s : segments) {
        h.update(";segment=").update(channel_name(s.tag));
        h.update(":").update(to_hex(s.dict_hash));
        h.update(":").update(std::to_string(s.length));
    }
    return h.value();
}

FeatureLayout layout_of(std::span<const DominantPatternDictionary> dicts) {
    FeatureLayout layout;
    layout.segments.reserve(dicts.size());
    for (const auto& d : dicts)
        layout.segments.push_back(
            {d.tag, d.identity_hash(), static_cast<std::uint32_t>(d.size())});
    return layout;
}

std::vector<double> assemble_feature(std::span<const std::vector<double>> projections,
                                     const FeatureLayout& layout) {
    if (projections.size() != layout.segments.size())
        throw DataError("assemble_feature: segment count does not match layout");
    std::vector<double> out;
    out.reserve(layout.dim());
    for (std::size_t i = 0; i < projections.size(); ++i) {
        if (projections[i].size() != layout.segments[i].length)
            throw DataError("assemble_feature: segment " + std::to_string(i) +
                            " length does not match layout");
        out.insert(out.end(), projections[i].begin(), projections[i].end());
    }
    return out;
}

std::string dictionary_to_json(const DominantPatternDictionary& dict) {
    nlohmann::json j;
    j["channel"] = channel_name(dict.tag);
    j["P"] = dict.config.neighbors;
    j["R"] = dict.config.radius;
    j["variant"] = lbp_variant_name(dict.config.variant);
    j["snap_tol"] = dict.config.snap_tol;
    j["theta"] = dict.theta;
    j["selected"] = dict.selected;
    return j.dump(2);
}

DominantPatternDictionary dictionary_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("dictionary JSON parse error: ") + e.what());
    }
    try {
        DominantPatternDictionary dict;
        dict.tag = channel_from_name(j.at("channel").get<std::string>());
        dict.config.neighbors = j.at("P").get<int>();
        dict.config.radius = j.at("R").get<double>();
        dict.config.variant = lbp_variant_from_name(j.at("variant").get<std::string>());
        dict.config.snap_tol = j.value("snap_tol", 1e-6);
        dict.theta = j.at("theta").get<double>();
        dict.selected = j.at("selected").get<std::vector<std::uint32_t>>();
        dict.config.validate();
        if (dict.selected.empty()) throw DataError("dictionary has no selected patterns");
        for (auto idx : dict.selected)
            if (idx >= dict.config.bin_count())
                throw DataError("dictionary pattern index out of range");
        return dict;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("dictionary JSON missing field: ") + e.what());
    }
}

void save_dictionary(const std::string& path, const DominantPatternDictionary& dict) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write dictionary: " + path);
    out << dictionary_to_json(dict) << "\n";
}

DominantPatternDictionary load_dictionary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read dictionary: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return dictionary_from_json(buf.str());
}

}  // namespace slidetex
