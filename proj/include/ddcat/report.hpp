#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "ddcat/silting.hpp"

namespace ddcat {

inline std::string params_string(const Params& P) {
    return std::to_string(P.r) + "," + std::to_string(P.n) + "," + std::to_string(P.m);
}

inline nlohmann::json coords(const ObjSet& S) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& A : sorted_set(S)) a.push_back(to_string(A));
    return a;
}

// Families sorted by their chart positions; constraints sorted by (larger, smaller) variable.
inline nlohmann::json families_json(std::vector<SiltingFamily> fams) {
    std::sort(fams.begin(), fams.end(), [](const SiltingFamily& a, const SiltingFamily& b) {
        return std::lexicographical_compare(a.tilting.begin(), a.tilting.end(), b.tilting.begin(), b.tilting.end(),
                                            [](const APos& x, const APos& y) {
                                                return std::tuple(x.g, x.h) < std::tuple(y.g, y.h);
                                            });
    });
    nlohmann::json out = nlohmann::json::array();
    for (auto F : fams) {
        auto& d = F.display;
        std::sort(d.order.begin(), d.order.end(), [](auto& u, auto& v) { return std::tuple(u.second, u.first) < std::tuple(v.second, v.first); });
        std::sort(d.lower.begin(), d.lower.end());
        std::sort(d.excluded.begin(), d.excluded.end());
        out.push_back({{"base_summands", F.names}, {"constraint_strings", constraint_strings(F)}});
    }
    return out;
}

inline nlohmann::json tilting_json(const Params& P, const Obj& Zb, Int window) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& T : tilting_with(P, Zb, window)) out.push_back(coords(T));
    return out;
}

inline nlohmann::json table231_json() {
    const Params P{2, 3, 1};
    const Obj Zb = base_Z();
    return {{"schema", 1},
            {"params", params_string(P)},
            {"z", to_string(Zb)},
            {"families", families_json(silting_families(P, Zb))},
            {"tilting", tilting_json(P, Zb, 3)}};
}

} // namespace ddcat
