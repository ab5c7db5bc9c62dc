#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lot/word.hpp"

namespace lot {

// Domain-level failures (bad input, violated preconditions): CLI exit 1.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Conditions the algorithms guarantee can't happen on valid inputs.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

struct Edge {
    int iota = 0;
    int tau = 0;
    int label = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// A labelled oriented tree.  Vertices are indices into `names`; parse
// sorts the names and orders edges by (iota, tau), make_lot keeps the
// caller's edge order.
struct Lot {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::string> names;

    int degree(int v) const;
    std::vector<int> leaves() const;
    // adjacency as (neighbor, edge index) lists, in edge-index order
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

    friend bool operator==(const Lot&, const Lot&) = default;
};

// Construct a Lot from index triples with default names v1..vn.
Lot make_lot(int n, const std::vector<Edge>& edges);

struct Subgraph {
    std::vector<int> vertices;  // sorted
    std::vector<int> edges;     // sorted edge indices

    friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

// Text format: '#' starts a comment; each non-blank line is
// "iota tau label".  Vertices are the endpoint tokens; labels must occur
// somewhere as an endpoint.  Errors carry line numbers.
Lot parse(const std::string& text);
std::string serialize(const Lot& lot);

Presentation presentation(const Lot& lot);

int diameter(const Lot& lot);

struct ReducedReport {
    bool reduced = false;
    std::vector<std::string> violations;
};
ReducedReport is_reduced(const Lot& lot);

Subgraph span(const Lot& lot, const std::vector<int>& seed);
bool spans_whole(const Lot& lot, const std::vector<int>& seed);
bool is_admissible(const Lot& lot, const Subgraph& sub);

// Vertices lying on tree paths between members of the input set.
std::vector<int> tree_convex_hull(const Lot& lot, std::vector<int> verts);

// Least connected admissible subgraph containing the given vertices.
Subgraph connected_admissible_closure(const Lot& lot, const std::vector<int>& verts);

struct MinimalReport {
    bool minimal = false;
    std::optional<Subgraph> witness;  // proper connected admissible, >1 vertex
};
MinimalReport is_minimal(const Lot& lot);

// Oracle: direct enumeration of connected admissible vertex sets.
bool is_minimal_brute(const Lot& lot);

std::optional<std::pair<int, int>> two_spanned(const Lot& lot);

struct SpanningReport {
    int u = -1, v = -1;                          // the non-extremal vertices
    std::optional<std::pair<int, int>> pair;     // a spanning 2-set, if any
    std::optional<int> a;                        // the double-label vertex
    bool span_auv_whole = false;                 // span({a,u,v}) covers Gamma
};
// Requires: minimal, reduced, diameter 3.
SpanningReport spanning_classification(const Lot& lot);

// The vertex used as a label exactly twice, when unique and no label is
// used three or more times.
std::optional<int> double_label(const Lot& lot);

// The two adjacent internal vertices of a diameter-3 tree, ascending.
std::pair<int, int> diam3_internal(const Lot& lot);

// Invariant factors of the abelianized presentation: nonunit torsion
// divisors followed by one 0 per free factor.
std::vector<long long> abelianization(const Presentation& pres);

}  // namespace lot
