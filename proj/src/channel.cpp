#include "bmsord/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace bmsord {

namespace {

constexpr double kMergeTol = 1e-12;   // positions closer than this collapse
constexpr double kDropTol = 1e-15;    // masses below this are discarded
constexpr double kMassSumTol = 1e-9;  // allowed slack on sum(alpha) before renormalizing

}  // namespace

DiscreteChannel new_channel(const std::vector<MassPoint>& pairs) {
    if (pairs.empty()) throw InvalidParameter("new_channel: needs at least one mass");

    double sum = 0.0;
    for (const MassPoint& m : pairs) {
        if (!(m.alpha >= 0.0 && m.alpha <= 1.0) || !std::isfinite(m.alpha))
            throw InvalidMass("new_channel: alpha " + std::to_string(m.alpha) +
                              " outside [0,1]");
        if (!(m.x >= 0.0 && m.x <= 1.0) || !std::isfinite(m.x))
            throw InvalidPosition("new_channel: position " + std::to_string(m.x) +
                                  " outside [0,1]");
        sum += m.alpha;
    }
    if (std::abs(sum - 1.0) >= kMassSumTol)
        throw MassSumError("new_channel: masses sum to " + std::to_string(sum));

    std::vector<MassPoint> sorted(pairs);
    std::sort(sorted.begin(), sorted.end(),
              [](const MassPoint& a, const MassPoint& b) { return a.x < b.x; });

    std::vector<MassPoint> merged;
    merged.reserve(sorted.size());
    for (const MassPoint& m : sorted) {
        if (!merged.empty() && m.x - merged.back().x < kMergeTol)
            merged.back().alpha += m.alpha;
        else
            merged.push_back(m);
    }

    std::vector<MassPoint> kept;
    kept.reserve(merged.size());
    double total = 0.0;
    for (const MassPoint& m : merged) {
        if (m.alpha < kDropTol) continue;
        kept.push_back(m);
        total += m.alpha;
    }
    if (kept.empty()) throw MassSumError("new_channel: all masses negligible");
    for (MassPoint& m : kept) m.alpha /= total;

    return DiscreteChannel(std::move(kept));
}

DiscreteChannel bsc(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 0.5))
        throw InvalidParameter("bsc: crossover probability must be in (0, 0.5]");
    return new_channel({{1.0, 1.0 - 2.0 * epsilon}});
}

DiscreteChannel bec(double erasure) {
    if (!(erasure >= 0.0 && erasure <= 1.0))
        throw InvalidParameter("bec: erasure probability must be in [0, 1]");
    if (erasure == 0.0) return new_channel({{1.0, 1.0}});
    if (erasure == 1.0) return new_channel({{1.0, 0.0}});
    return new_channel({{erasure, 0.0}, {1.0 - erasure, 1.0}});
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

double kernel_h(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("kernel_h: argument " + std::to_string(x) +
                          " outside [0,1]");
    return binary_entropy(0.5 * (1.0 - x));
}

double entropy(const DiscreteChannel& ch) {
    double acc = 0.0;
    for (const MassPoint& m : ch.masses()) acc += m.alpha * kernel_h(m.x);
    return acc;
}

double capacity(const DiscreteChannel& ch) { return 1.0 - entropy(ch); }

double bhattacharyya(const DiscreteChannel& ch) {
    double acc = 0.0;
    for (const MassPoint& m : ch.masses())
        acc += m.alpha * std::sqrt((1.0 - m.x) * (1.0 + m.x));
    return acc;
}

double error_probability(const DiscreteChannel& ch) {
    double acc = 0.0;
    for (const MassPoint& m : ch.masses()) acc += m.alpha * 0.5 * (1.0 - m.x);
    return acc;
}

namespace {

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const DiscreteChannel& ch) {
    std::string out = "{\"masses\": [";
    bool first = true;
    for (const MassPoint& m : ch.masses()) {
        if (!first) out += ", ";
        first = false;
        out += "{\"alpha\": " + format_g17(m.alpha) + ", \"x\": " + format_g17(m.x) + "}";
    }
    out += "]}";
    return out;
}

DiscreteChannel channel_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("channel_from_json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("masses") || !doc["masses"].is_array())
        throw InvalidParameter("channel_from_json: expected {\"masses\": [...]}");

    std::vector<MassPoint> pairs;
    for (const auto& item : doc["masses"]) {
        if (!item.is_object() || !item.contains("alpha") || !item.contains("x") ||
            !item["alpha"].is_number() || !item["x"].is_number())
            throw InvalidParameter(
                "channel_from_json: each mass needs numeric \"alpha\" and \"x\"");
        pairs.push_back({item["alpha"].get<double>(), item["x"].get<double>()});
    }
    return new_channel(pairs);
}

}  // namespace bmsord
