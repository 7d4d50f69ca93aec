#include "tlinks/pd.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tlinks {

namespace {

struct RawCrossing {
    int nw, ne, sw, se;  // provisional arc ids at the four corners
    int sign;
};

}  // namespace

PDCode closure_pd(const BraidWord& b) {
    const int S = b.strands();
    const int c = static_cast<int>(b.size());

    // Simulate the braid top to bottom with provisional arc ids.  cur[p] is
    // the id of the arc currently flowing down at position p; ids 0..S-1 are
    // the arcs entering at the top, crossing outputs get fresh ids.
    std::vector<int> cur(S);
    std::iota(cur.begin(), cur.end(), 0);
    int next_id = S;

    std::vector<RawCrossing> raw;
    raw.reserve(c);
    struct End {
        int crossing = -1;  // crossing consuming the arc from above
        bool at_nw = false;
    };
    std::vector<End> ends(S + 2 * c);

    for (int e : b.letters()) {
        const int i = std::abs(e);
        RawCrossing rc;
        rc.nw = cur[i - 1];
        rc.ne = cur[i];
        rc.sw = next_id++;
        rc.se = next_id++;
        rc.sign = (e > 0) ? 1 : -1;
        ends[rc.nw] = End{static_cast<int>(raw.size()), true};
        ends[rc.ne] = End{static_cast<int>(raw.size()), false};
        cur[i - 1] = rc.sw;
        cur[i] = rc.se;
        raw.push_back(rc);
    }

    // The closure identifies the arc leaving the bottom at position p with
    // the arc entering the top at position p.  A provisional id that reaches
    // the bottom therefore continues as the top id of its position; such a
    // pair is one arc of the closed diagram.
    std::vector<int> wrap(S + 2 * c, -1);
    PDCode pd;
    std::vector<bool> touched(S, false);
    for (int p = 0; p < S; ++p) {
        if (cur[p] == p) {
            ++pd.free_loops;  // untouched strand: crossingless circle
        } else {
            wrap[cur[p]] = p;
            touched[p] = true;
        }
    }

    // Walk each closure component, labelling arcs 1..2c in traversal order.
    // Components are entered at the leftmost unvisited top position; the walk
    // ends when it returns to its starting arc through the wrap.
    std::vector<int> label(S + 2 * c, 0);
    int next_label = 1;
    for (int p = 0; p < S; ++p) {
        if (!touched[p] || label[p] != 0) continue;
        int id = p;
        while (true) {
            End en;
            if (ends[id].crossing >= 0) {
                if (label[id] != 0) break;
                label[id] = next_label++;
                en = ends[id];
            } else {
                // the arc runs through the closure wrap; its continuation is
                // the top arc of the landing position
                const int q = wrap[id];
                if (q < 0 || ends[q].crossing < 0)
                    throw std::logic_error("closure walk lost an arc");
                if (label[q] != 0) {
                    label[id] = label[q];  // back at the starting arc
                    break;
                }
                label[id] = label[q] = next_label++;
                en = ends[q];
            }
            const RawCrossing& rc = raw[en.crossing];
            id = en.at_nw ? rc.se : rc.sw;  // strands cross: NW exits SE, NE exits SW
        }
    }

    // Counterclockwise from the incoming under-strand: positive letters have
    // the under-strand entering at NE, negative at NW.
    pd.crossings.reserve(c);
    for (const RawCrossing& rc : raw) {
        PDCrossing out;
        out.sign = rc.sign;
        if (rc.sign > 0)
            out.arcs = {label[rc.ne], label[rc.nw], label[rc.sw], label[rc.se]};
        else
            out.arcs = {label[rc.nw], label[rc.sw], label[rc.se], label[rc.ne]};
        pd.crossings.push_back(out);
    }
    return pd;
}

}  // namespace tlinks
