#pragma once

#include <string>
#include <vector>

#include "lot/cover.hpp"
#include "lot/derived.hpp"

namespace lot {

// Iterated derivatives seeded from one simple cycle of a derived graph.
// relators[0] is the seed; each following entry is the derivative of the
// previous one.  termination is "lift-failure" when the last relator no
// longer stays inside single components, "iteration-cap" otherwise.
struct CycleFamily {
    GraphKind kind = GraphKind::Initial;
    int component = -1;
    std::vector<Word> relators;
    std::vector<bool> alternating;
    std::string termination;
};

struct ConjectureDataset {
    int max_iterations = 0;
    std::vector<CycleFamily> initial_families;
    std::vector<CycleFamily> terminal_families;
};

// Generalized pipeline for arbitrary LOTs: every cycle of I seeds a forward
// family, every cycle of T a backward one.  Lifting means all crossings stay
// within single components; geodesics run in a fixed maximal forest (the
// two-component pipeline's forest when its hypotheses hold, greedy
// otherwise, so both constructions agree on such inputs).
ConjectureDataset explore(const Lot& lot, int max_iterations);

}  // namespace lot
