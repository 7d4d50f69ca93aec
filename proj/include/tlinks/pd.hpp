#pragma once

// Planar-diagram codes of braid closures.
//
// Arc labels are assigned by walking each closure component top to bottom
// starting from the leftmost unvisited strand; every passage through a
// crossing starts a new arc, the closure wrap does not.  Each crossing lists
// its four arc labels counterclockwise starting at the incoming under-strand:
//   positive letter:  (NE, NW, SW, SE)   (under-strand enters at NE)
//   negative letter:  (NW, SW, SE, NE)   (under-strand enters at NW)

#include <array>
#include <vector>

#include "tlinks/braid.hpp"

namespace tlinks {

struct PDCrossing {
    std::array<int, 4> arcs;  // counterclockwise from the incoming under-strand
    int sign;                 // +1 / -1, the letter sign
};

struct PDCode {
    std::vector<PDCrossing> crossings;
    int free_loops = 0;  // crossingless circles (strands no letter touches)
};

PDCode closure_pd(const BraidWord& b);

}  // namespace tlinks
