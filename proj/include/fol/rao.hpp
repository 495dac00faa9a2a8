#pragma once

#include "fol/groebner.hpp"
#include "fol/resolution.hpp"

#include <map>
#include <optional>

namespace fol {

struct RaoWindow {
    int lo, hi;
};

struct RaoProfile {
    std::map<int, long> profile;  // k -> h^1(I_C(k)), nonzero entries only
    long total = 0;
    RaoWindow window{0, 0};
};

// [-(max generator degree), 3 + sum of generator degrees]
RaoWindow default_rao_window(const GradedIdeal& I);

// h^1(I_C(k)) = dim Ext^3_S(S/I, S)_{-k-4}, read off the dual of a minimal
// resolution. Throws NotACurve unless S/I has a linear Hilbert polynomial and
// WindowTooSmall if an endpoint of the window carries a nonzero value.
RaoProfile rao_module_dimensions(const GradedIdeal& I, std::optional<RaoWindow> window = std::nullopt);

// Same, from a resolution already known to be complete through the relevant degrees.
long ext3_dimension(const FreeResolution& res, int e);

}  // namespace fol
