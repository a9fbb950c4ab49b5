#include "multirank/classify.hpp"

#include <algorithm>

namespace multirank {

bool is_gme(const MultirankProfile& profile) {
    return std::all_of(profile.levels.begin(), profile.levels.end(), [](const ProfileLevel& level) {
        return std::all_of(level.entries.begin(), level.entries.end(),
                           [](const ProfileEntry& e) { return e.rank.value > 1; });
    });
}

bool is_fully_product(const MultirankProfile& profile) {
    const auto first = std::find_if(profile.levels.begin(), profile.levels.end(),
                                    [](const ProfileLevel& level) { return level.ell == 1; });
    if (first == profile.levels.end()) return false;
    return std::all_of(first->entries.begin(), first->entries.end(),
                       [](const ProfileEntry& e) { return e.rank.value == 1; });
}

EntanglementVerdict verdict(const MultirankProfile& profile) {
    EntanglementVerdict v;
    for (const auto& level : profile.levels)
        for (const auto& e : level.entries)
            if (e.rank.value == 1) v.product_cuts.push_back(e.bipartition);
    v.gme = is_gme(profile);
    v.fully_product = is_fully_product(profile);
    v.generic = profile.is_probabilistic();
    return v;
}

const char* verdict_label(const EntanglementVerdict& v) {
    if (v.gme) return "GME";
    if (v.fully_product) return "fully product";
    return "biseparable";
}

}  // namespace multirank
