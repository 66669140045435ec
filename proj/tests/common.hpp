#pragma once

#include <memory>
#include <random>
#include <string>

#include "acyl/group.hpp"
#include "acyl/preset.hpp"
#include "acyl/tree.hpp"

namespace acyltest {

inline std::shared_ptr<const acyl::GroupPreset> preset(const std::string& which) {
    return acyl::parse_preset(acyl::builtin_preset_json(which), which);
}

// Random unreduced word over both factors, as input letters.
inline std::vector<acyl::Group::InputLetter> random_letters(const acyl::GroupPreset& p,
                                                            std::mt19937_64& rng, int len) {
    std::vector<acyl::Group::InputLetter> out;
    for (int i = 0; i < len; ++i) {
        int t = static_cast<int>(rng() % 2);
        if (p.factor[t].finite) {
            int e = 1 + static_cast<int>(rng() % (p.factor[t].size() - 1));
            out.push_back({t, 0, e});
        } else {
            acyl::Letter l = 1 + static_cast<acyl::Letter>(rng() % p.factor[t].rank);
            if (rng() % 2) l = -l;
            out.push_back({t, l, 0});
        }
    }
    return out;
}

inline acyl::GroupElement random_element(const acyl::Group& G, std::mt19937_64& rng, int len) {
    return G.normal_form(random_letters(G.preset(), rng, len));
}

} // namespace acyltest
