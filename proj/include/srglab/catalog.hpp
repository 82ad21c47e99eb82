#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "srg_params.hpp"

namespace srglab {

// Named parameter families used across the tool. "known" holds published
// invariant values (alpha/omega/chi/chi_complement); for the symplectic
// complements alpha and chi come from literature identities rather than
// computation, which the CLI table flags.
struct CatalogEntry {
    std::string name;
    SrgParams params;
    std::string note;
    std::map<std::string, long long> known;
};

inline const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v{
            {"petersen", {10, 3, 0, 1}, "Kneser graph on the 2-subsets of a 5-set",
             {{"alpha", 4}, {"omega", 2}, {"chi", 3}}},
            {"shrikhande", {16, 6, 2, 2}, "Cayley graph on Z4 x Z4 sharing its parameters with the 4x4 rook's graph",
             {{"alpha", 4}, {"omega", 3}, {"chi", 4}, {"chi_complement", 6}}},
            {"rook-4x4", {16, 6, 2, 2}, "K4 x K4 rook's graph, same parameters as shrikhande",
             {{"alpha", 4}, {"omega", 4}, {"chi", 4}, {"chi_complement", 4}}},
            {"triangular-5", {10, 6, 3, 4}, "line graph of K5, complement of petersen", {}},
            {"triangular-6", {15, 8, 4, 4}, "line graph of K6",
             {{"alpha", 3}, {"omega", 5}, {"chi", 5}, {"chi_complement", 4}}},
            {"gewirtz", {56, 10, 0, 2}, "unique srg(56,10,0,2)", {}},
            {"schlafli", {27, 16, 10, 8}, "Schlafli graph", {{"chi", 9}}},
            {"hall-janko", {100, 36, 14, 12}, "Hall-Janko graph", {{"chi", 10}}},
        };
        const std::vector<std::pair<int, long long>> sp{{3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 2},
                                                        {8, 2}, {9, 2}, {3, 3}, {4, 3}, {5, 3},
                                                        {6, 3}, {3, 5}, {3, 7}};
        for (auto [n, q] : sp) {
            long long qn = 1;
            for (int k = 0; k < n; ++k) qn *= q;
            CatalogEntry e;
            e.name = "sp-complement-" + std::to_string(n) + "-" + std::to_string(q);
            e.params = symplectic_complement_params(n, q);
            e.note = "complement of the symplectic polar graph Sp(" + std::to_string(2 * n) +
                     ", " + std::to_string(q) + ")";
            e.known = {{"alpha", (qn - 1) / (q - 1)}, {"chi", qn + 1}};
            v.push_back(std::move(e));
        }
        return v;
    }();
    return entries;
}

inline std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    for (const auto& e : builtin_catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

} // namespace srglab
