#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lot/derived.hpp"
#include "lot/lot.hpp"
#include "lot/word.hpp"

namespace lot {

// Component sides of the two-level cover: 0 = the component containing u,
// 1 = the component containing v, per derived graph.
struct CoverSides {
    std::vector<int> initial;
    std::vector<int> terminal;
};

CoverSides cover_sides(const Lot& lot, const DerivedGraph& gI, const DerivedGraph& gT);

struct LiftResult {
    Word lifted;
    bool uses_X = false;
    bool uses_Y = false;
};

// Insert X at level-0 crossings that switch initial-graph sides and Y at
// level-1 crossings that switch terminal-graph sides (wraparound included).
LiftResult lift(const Word& word, const CoverSides& sides);

// Generalized lift test by component ids only (graphs with any number of
// components): every level-0 crossing must stay inside one initial-graph
// component and every level-1 crossing inside one terminal-graph component.
struct ComponentLift {
    bool ok = true;
    int position = -1;   // index of the crossing's first letter
    int level = -1;      // 0 or 1
};
ComponentLift component_lift(const Word& word, const std::vector<int>& compI,
                             const std::vector<int>& compT);

struct DerivStep {
    int block = 0;  // block index in the rotated input
    int edge = 0;   // Lot edge applied
    int dir = 0;    // +1 along the arc, -1 against it
    std::array<Letter, 2> replaced{};
    std::array<Letter, 2> replacement{};
};

struct Certificate {
    Word rotated_input;
    std::vector<DerivStep> steps;
};

struct DerivResult {
    Word word;
    Certificate cert;
};

using SeedPlan = std::vector<GeodesicStep>;  // one direct arc per block

// Forward derivative over the initial graph: rotate to blocks (x^-1 y),
// expand each along the forest geodesic, rewrite each arc's pair.  A seed
// plan replaces the rotation + geodesics with one direct arc per block.
DerivResult forward_derivative(const Lot& lot, const DerivedGraph& gI,
                               const MaximalForest& forest, const Word& word,
                               const SeedPlan* plan = nullptr);

// Backward derivative over the terminal graph: blocks (x y^-1).
DerivResult backward_derivative(const Lot& lot, const DerivedGraph& gT,
                                const MaximalForest& forest, const Word& word,
                                const SeedPlan* plan = nullptr);

// Replays a certificate: the recorded rotation of `input`, block-by-block
// replacement validity against the named edges, and exact reassembly of
// `output`.
bool verify_certificate(const Lot& lot, const Word& input, const Certificate& cert,
                        const Word& output, std::string* why = nullptr);

struct SeedResult {
    Word word;
    SeedPlan plan;
};

// Seed words from a cycle: S-style blocks (z^-1 z') for the initial graph,
// R-style blocks (z z'^-1) for the terminal graph.
SeedResult seed_word(const CycleData& cycle, GraphKind kind);

struct SequenceItem {
    Word word;
    Certificate cert;
    LiftResult lift;
};

struct RelatorSequence {
    GraphKind seed_kind = GraphKind::Initial;
    Word seed;
    std::vector<SequenceItem> items;  // item k = k-th derivative, k >= 1
    int terminal_index = 0;           // N (Initial seed) or M (Terminal seed)
    bool stopped_by_lift = false;     // false = stopped by the step limit
};

// The full derivative pipeline inputs for a core-hypothesis LOT.
struct DeriveContext {
    const Lot* lot = nullptr;
    DerivedGraph I, T;
    CoverSides sides;
    CycleData Icyc, Tcyc;
    bool I_directed = false, T_directed = false;
    int removed_arc_I = -1, removed_arc_T = -1;
    MaximalForest forestI, forestT;
};

// e0/f0 are the Lot edges labelled by the double label whose removal
// defines the default forests (the directed/non-directed convention).
DeriveContext make_derive_context(const Lot& lot, int e0, int f0);

// Iterate the derivative from the seed until the word no longer lifts, a
// step limit is reached (max_steps >= 0), or the guard at |V| trips.
RelatorSequence generate_sequence(const DeriveContext& ctx, GraphKind seed_kind,
                                  int max_steps = -1);

}  // namespace lot
