#pragma once

// Built-in cone catalog:
//   quadrant-m   the free cone N^m (polynomial ring in m variables)
//   A1           cone{(1,0),(1,2)}, semigroup ring F[x,y,z]/(y^2-xz)
//   quadric      cone over the unit square, F[x,y,z,w]/(xy-zw)
//   whitney-k    cone{(1,0),(1,k)}; whitney-2 coincides with A1

#include <string>
#include <vector>

#include "symtopo/cone.hpp"
#include "symtopo/errors.hpp"

namespace symtopo {

inline Cone quadrant_cone(int m) {
    require(m >= 1, errc::invalid_parameter, "quadrant dimension must be >= 1");
    std::vector<Vec> units;
    for (int i = 0; i < m; ++i) {
        Vec e(m, 0);
        e[i] = 1;
        units.push_back(std::move(e));
    }
    return validate_cone(units, units);
}

inline Cone whitney_cone(Int k) {
    require(k >= 1, errc::invalid_parameter, "whitney parameter must be >= 1");
    return validate_cone({{1, 0}, {1, k}}, {{0, 1}, {k, -1}});
}

inline Cone a1_cone() { return whitney_cone(2); }

inline Cone quadric_cone() {
    return validate_cone({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}},
                         {{0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}});
}

/// Look up a catalog cone by name ("quadrant-3", "A1", "quadric", "whitney-4").
inline Cone catalog_cone(const std::string& name) {
    auto parse_suffix = [&](const std::string& prefix) -> Int {
        std::string tail = name.substr(prefix.size());
        require(!tail.empty(), errc::unknown_reference, "missing parameter in '" + name + "'");
        for (char c : tail)
            require(c >= '0' && c <= '9', errc::unknown_reference,
                    "bad parameter in catalog name '" + name + "'");
        return std::stoll(tail);
    };
    if (name == "A1") return a1_cone();
    if (name == "quadric") return quadric_cone();
    if (name.rfind("quadrant-", 0) == 0) return quadrant_cone(static_cast<int>(parse_suffix("quadrant-")));
    if (name.rfind("whitney-", 0) == 0) return whitney_cone(parse_suffix("whitney-"));
    fail(errc::unknown_reference, "unknown catalog cone '" + name + "'");
}

}  // namespace symtopo
