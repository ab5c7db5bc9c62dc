#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lot/lot.hpp"

namespace lot {

// Filters: reduced, minimal, diameter=<d>, core-hypotheses, I-disconnected,
// T-disconnected, not-2-spanned.
struct EnumerationSpec {
    int max_vertices = 5;  // 1..7
    std::vector<std::string> filters;
    bool dedupe = false;
};

// Smallest relabelling of the edge triples over all vertex permutations;
// equal keys mean label-preserving isomorphism.
using CanonKey = std::vector<std::array<int, 3>>;
CanonKey canon_form(const Lot& lot);

// All labelled trees on vertices 0..n-1 as sorted (min,max) edge lists,
// ordered by Prufer sequence.
std::vector<std::vector<std::pair<int, int>>> prufer_trees(int n);

// Streams every LOT on 1..max_vertices vertices: trees in Prufer order,
// then label assignments odometer-style over the sorted edge list.  Filters
// apply per LOT; dedupe keeps the first representative of each canon class.
void enumerate_lots(const EnumerationSpec& spec, const std::function<void(const Lot&)>& visit);

struct CheckSummary {
    std::string name;
    long applicable = 0;
    long passed = 0;
    std::string first_counterexample;  // serialized LOT, empty when clean
    std::string detail;
};

struct SuiteSummary {
    std::vector<long> visited;  // per vertex count, index 0 unused
    long total = 0;
    std::vector<CheckSummary> checks;
    bool all_pass = true;
};

std::vector<std::string> standard_checks();

// Runs the named property checks (all standard ones when empty) over the
// enumeration stream.
SuiteSummary run_property_suite(const EnumerationSpec& spec, std::vector<std::string> checks);

// First LOT in enumeration order on exactly n vertices that is reduced,
// minimal, of diameter 3, not two-spanned, and has both derived graphs
// disconnected.  Prunes label assignments that already violate reducedness;
// every surviving assignment is tested directly.
std::optional<Lot> find_first_core(int n);

// Candidate diameter-3 LOTs whose double-label chains have the prescribed
// lengths; a superset of the cores on P+Q+3 vertices.  The visitor returns
// false to stop early.
void spine_candidates(int P, int Q, const std::function<bool(const Lot&)>& visit);

}  // namespace lot
