#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lot/lot.hpp"

namespace lot {

enum class GraphKind { Initial, Terminal };

struct Arc {
    int src = 0;
    int dst = 0;
    int edge = 0;  // index of the originating Lot edge
};

// I(Gamma) or T(Gamma): one arc per tree edge, src->dst being iota->label
// (Initial) or label->tau (Terminal).  Component ids are normalized to
// 0,1,... in order of least member vertex.
struct DerivedGraph {
    GraphKind kind = GraphKind::Initial;
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<int> component_of;
    int num_components = 0;
};

DerivedGraph build_derived(const Lot& lot, GraphKind kind);

struct CycleData {
    std::vector<int> vertices;    // vertices[j] -arcs[j]-> vertices[j+1 mod m]
    std::vector<int> arcs;        // arc indices
    std::vector<bool> forward;    // true when traversed src->dst
    bool is_directed = false;     // all arcs agree with one traversal sense
};

// The unique cycle of a 2-component derived graph; error otherwise.
CycleData unique_cycle(const DerivedGraph& g);

// All cycles, one per non-tree component (general graphs, for exploration).
std::vector<CycleData> all_cycles(const DerivedGraph& g);

struct MaximalForest {
    GraphKind kind = GraphKind::Initial;
    int removed_arc = -1;
    std::vector<char> keep;  // arc membership mask
};

// Forest = graph minus one arc of its unique cycle.
MaximalForest maximal_forest(const DerivedGraph& g, int removed_arc);

// Maximal forest of a general graph: greedy scan in arc-index order.
MaximalForest greedy_forest(const DerivedGraph& g);

struct GeodesicStep {
    int arc = 0;
    int dir = 0;  // +1 src->dst, -1 dst->src
};

// Unique simple path between two vertices of one forest component.
std::vector<GeodesicStep> geodesic(const DerivedGraph& g, const MaximalForest& f,
                                   int from, int to);

// Vertex sets of simple directed cycles (small graphs only).
std::set<std::vector<int>> directed_cycles(const DerivedGraph& g);

// Degree-pattern lemma checks.  Requires a minimal diameter-3 LOT with
// double-label vertex a; returns failed clause tags ("i".."vii").
std::vector<std::string> check_lemma_initial(const Lot& lot, int u, int v, int a);
std::vector<std::string> check_lemma_terminal(const Lot& lot, int u, int v, int a);

}  // namespace lot
