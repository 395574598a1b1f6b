#pragma once

#include <string>
#include <vector>

#include "knotcert/diagram.hpp"

namespace knotcert {

struct GaussEntry {
    int label = 0;     // crossing index
    bool over = false; // this visit passes over
    int sign = 0;      // crossing sign

    friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

/// Crossing visits in curve order; each label appears exactly twice, once
/// over and once under.
using GaussCode = std::vector<GaussEntry>;

GaussCode gauss_code(const KnotDiagram& d);

/// Reidemeister I (adjacent same-label pair) and II (adjacent over-pair with
/// a matching adjacent under-pair on the same two labels) applied to
/// fixpoint, cyclically.
GaussCode reduce_gauss(GaussCode code);

std::string gauss_str(const GaussCode& code); // "O1 U2 ..." 1-based labels

} // namespace knotcert
