#ifndef FLATWALL_CONFIG_H
#define FLATWALL_CONFIG_H

#include <cstdint>
#include <map>
#include <string>

namespace flatwall {

enum class Profile { PaperTheorem, PaperAlgorithm, Relaxed };

// All size thresholds and radii used by the pipeline. The two paper
// profiles derive every value from t and r; the relaxed profile starts
// from small defaults and every field may be overridden so desk-scale
// instances exercise every branch.
struct Config {
    int t = 3;
    int r = 3;
    Profile profile = Profile::Relaxed;

    std::int64_t k = 0;         // dispersed-path budget
    std::int64_t k0 = 0;        // semi-dispersed budget / apex bound + 1
    int radiusSmall = 0;        // dispersion radius for the first search
    int radiusLarge = 0;        // dispersion radius for the second search
    int subwallSize = 0;        // size of the candidate subwalls W_i
    int subwallMargin = 0;      // trim/margin width around subwalls
    int pairDistance = 0;       // required distance between subwalls
    int stripRows = 0;          // horizontal paths per strip
    std::int64_t wallR = 0;     // required input wall size
    std::int64_t apexBound = 0; // |A| bound reported in certificates

    static std::int64_t ipow(std::int64_t base, int exp);
    static Config paperTheorem(int t, int r);
    static Config paperAlgorithm(int t, int r);
    static Config relaxed(int t, int r);

    // key=value lines; unknown keys rejected. CLI flags override file values.
    void applyOverride(const std::string& key, const std::string& value);
    static Config fromFile(const std::string& path, Config base);

    std::map<std::string, std::string> echo() const;
};

}  // namespace flatwall

#endif
