#include "flatwall/config.h"

#include <fstream>
#include <sstream>

#include "flatwall/graph.h"

namespace flatwall {

std::int64_t Config::ipow(std::int64_t base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; i++) {
        if (out > (std::int64_t(1) << 62) / (base > 0 ? base : 1)) return std::int64_t(1) << 62;
        out *= base;
    }
    return out;
}

static Config paperCommon(int t, int r) {
    if (t < 1 || r < 1) throw InputError("config: t and r must be >= 1");
    Config c;
    c.t = t;
    c.r = r;
    std::int64_t theta = std::int64_t(t) * (t - 1);
    c.k = 32 * Config::ipow(theta, 6);
    c.k0 = 12288 * Config::ipow(theta, 12);
    c.radiusSmall = static_cast<int>(std::min<std::int64_t>(2 * theta, 1 << 28));
    c.radiusLarge = static_cast<int>(std::min<std::int64_t>(10 * theta, 1 << 28));
    c.subwallMargin = c.radiusLarge;
    c.pairDistance = c.radiusLarge;
    c.apexBound = 12288 * Config::ipow(t, 24);
    return c;
}

Config Config::paperTheorem(int t, int r) {
    Config c = paperCommon(t, r);
    c.profile = Profile::PaperTheorem;
    std::int64_t theta = std::int64_t(t) * (t - 1);
    c.subwallSize = static_cast<int>(std::min<std::int64_t>(20 * theta + r, 1 << 28));
    c.stripRows = static_cast<int>(std::min<std::int64_t>(40 * theta + r, 1 << 28));
    c.wallR = 49152 * ipow(t, 24) * (40 * std::int64_t(t) * t + r);
    return c;
}

Config Config::paperAlgorithm(int t, int r) {
    Config c = paperCommon(t, r);
    c.profile = Profile::PaperAlgorithm;
    std::int64_t theta = std::int64_t(t) * (t - 1);
    c.subwallSize = static_cast<int>(std::min<std::int64_t>(40 * theta + r, 1 << 28));
    c.stripRows = static_cast<int>(std::min<std::int64_t>(60 * theta + r, 1 << 28));
    c.pairDistance = static_cast<int>(std::min<std::int64_t>(20 * theta, 1 << 28));
    c.wallR = 49152 * ipow(t, 24) * (60 * std::int64_t(t) * t + r);
    return c;
}

Config Config::relaxed(int t, int r) {
    if (t < 1 || r < 1) throw InputError("config: t and r must be >= 1");
    Config c;
    c.t = t;
    c.r = r;
    c.profile = Profile::Relaxed;
    c.k = 2;
    c.k0 = 2;
    c.radiusSmall = 2;
    c.radiusLarge = 4;
    c.subwallSize = std::max(2, r);
    c.subwallMargin = 1;
    c.pairDistance = 4;
    c.stripRows = c.subwallSize + 2 * c.subwallMargin;
    c.wallR = 0;  // any wall accepted
    c.apexBound = c.k0 - 1;
    return c;
}

void Config::applyOverride(const std::string& key, const std::string& value) {
    auto asInt = [&]() -> std::int64_t {
        try {
            return std::stoll(value);
        } catch (...) {
            throw InputError("config: bad integer for key '" + key + "': " + value);
        }
    };
    if (key == "k") k = asInt();
    else if (key == "k0") k0 = asInt();
    else if (key == "radius_small") radiusSmall = static_cast<int>(asInt());
    else if (key == "radius_large") radiusLarge = static_cast<int>(asInt());
    else if (key == "subwall_size") subwallSize = static_cast<int>(asInt());
    else if (key == "subwall_margin") subwallMargin = static_cast<int>(asInt());
    else if (key == "pair_distance") pairDistance = static_cast<int>(asInt());
    else if (key == "strip_rows") stripRows = static_cast<int>(asInt());
    else if (key == "wall_R") wallR = asInt();
    else if (key == "apex_bound") apexBound = asInt();
    else throw InputError("config: unknown key '" + key + "'");
}

Config Config::fromFile(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) throw InputError("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed;
        for (char ch : line)
            if (!isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty()) continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw InputError("config: line " + std::to_string(lineno) + ": expected key=value");
        base.applyOverride(trimmed.substr(0, eq), trimmed.substr(eq + 1));
    }
    return base;
}

std::map<std::string, std::string> Config::echo() const {
    std::map<std::string, std::string> out;
    out["t"] = std::to_string(t);
    out["r"] = std::to_string(r);
    out["profile"] = profile == Profile::PaperTheorem    ? "paper-theorem"
                     : profile == Profile::PaperAlgorithm ? "paper-algorithm"
                                                          : "relaxed";
    out["k"] = std::to_string(k);
    out["k0"] = std::to_string(k0);
    out["radius_small"] = std::to_string(radiusSmall);
    out["radius_large"] = std::to_string(radiusLarge);
    out["subwall_size"] = std::to_string(subwallSize);
    out["subwall_margin"] = std::to_string(subwallMargin);
    out["pair_distance"] = std::to_string(pairDistance);
    out["strip_rows"] = std::to_string(stripRows);
    out["wall_R"] = std::to_string(wallR);
    out["apex_bound"] = std::to_string(apexBound);
    return out;
}

}  // namespace flatwall
