#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lot/hnn.hpp"
#include "lot/lot.hpp"

namespace lot {

enum class Classification {
    Trivial,                  // diameter <= 1
    TwoSpannedOneRelator,     // spanned by two vertices
    CoreHypothesis,           // minimal core satisfying the pipeline hypotheses
    OneRelatorProductChain,   // proper decomposition chain exists
    LocallyFreeCommutator,    // minimal with I or T connected
};

const char* classification_name(Classification c);

// One peeling step: in a graph on `n` vertices, the admissible subtree
// `subtree` plus vertex `added` spans the whole graph.  Steps are stored
// outermost first; step k+1 applies to the subtree extracted at step k.
struct DecompStep {
    int n = 0;
    std::vector<int> subtree;  // ascending, in the coordinates of that graph
    int added = -1;
    std::vector<std::string> subtree_names;
    std::string added_name;
};

struct DecompositionReport {
    Classification kind = Classification::Trivial;
    std::vector<DecompStep> chain;
    Lot core;         // the minimal graph the chain ends at
    bool replay_ok = false;
    std::optional<HnnReport> hnn;  // present when the core meets the hypotheses
};

// Restriction to a vertex subset (must induce a subtree); names carry over.
Lot sub_lot(const Lot& lot, const std::vector<int>& verts);

// Proper connected admissible vertex sets with more than one vertex.
std::vector<std::vector<int>> admissible_subtrees(const Lot& lot);

// Largest admissible subtree (ties broken lexicographically) together with
// the least vertex x outside it such that span(subtree + x) is everything.
// Empty when the lot is minimal.
std::optional<std::pair<std::vector<int>, int>> decompose_step(const Lot& lot);

// Requires diameter <= 3.  Peels down to a minimal core, replaying the span
// property of every step, and labels the input by the first matching case.
DecompositionReport classify(const Lot& lot);

}  // namespace lot
