#ifndef JETPVA_VARID_HPP
#define JETPVA_VARID_HPP

#include <compare>
#include <string>

namespace jetpva {

// A jet variable x^i_(-j-1): base name plus jet level j >= 0.
// Level 0 is the base variable itself (x = x_(-1)).
//
// The ordering (base_name, jet_level) is total and deterministic; it fixes
// the default variable precedence everywhere (smaller VarId = higher
// precedence in monomial orders).
struct VarId {
    std::string base;
    int level = 0;

    auto operator<=>(const VarId&) const = default;

    // Canonical text form: "x1" at level 0, "x1_(-3)" at level 2.
    std::string str() const {
        if (level == 0) return base;
        return base + "_(-" + std::to_string(level + 1) + ")";
    }

    VarId at_level(int j) const { return VarId{base, j}; }
};

} // namespace jetpva

#endif
