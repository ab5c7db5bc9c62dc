#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "lot/derived.hpp"
#include "lot/enumerate.hpp"
#include "lot/lot.hpp"

using namespace lot;

namespace {

std::set<int> vertex_set(const CycleData& c) {
    return {c.vertices.begin(), c.vertices.end()};
}

// Walk the steps from `from` and return the endpoint, checking consistency.
int replay_path(const DerivedGraph& g, const std::vector<GeodesicStep>& path, int from) {
    int cur = from;
    for (const GeodesicStep& s : path) {
        const Arc& a = g.arcs[static_cast<size_t>(s.arc)];
        if (s.dir == 1) {
            REQUIRE(a.src == cur);
            cur = a.dst;
        } else {
            REQUIRE(s.dir == -1);
            REQUIRE(a.dst == cur);
            cur = a.src;
        }
    }
    return cur;
}

void check_cycle_shape(const DerivedGraph& g, const CycleData& c) {
    size_t m = c.vertices.size();
    REQUIRE(m >= 1);
    REQUIRE(c.arcs.size() == m);
    REQUIRE(c.forward.size() == m);
    for (size_t j = 0; j < m; ++j) {
        const Arc& a = g.arcs[static_cast<size_t>(c.arcs[j])];
        int here = c.vertices[j];
        int next = c.vertices[(j + 1) % m];
        if (c.forward[j]) {
            REQUIRE(a.src == here);
            REQUIRE(a.dst == next);
        } else {
            REQUIRE(a.src == next);
            REQUIRE(a.dst == here);
        }
    }
    bool all_fwd = std::all_of(c.forward.begin(), c.forward.end(), [](bool b) { return b; });
    bool all_bwd = std::none_of(c.forward.begin(), c.forward.end(), [](bool b) { return b; });
    REQUIRE(c.is_directed == (all_fwd || all_bwd));
}

}  // namespace

TEST_CASE("derived graphs of the first diameter-3 core") {
    std::optional<Lot> w1 = find_first_core(8);
    REQUIRE(w1.has_value());

    DerivedGraph gi = build_derived(*w1, GraphKind::Initial);
    CHECK(gi.kind == GraphKind::Initial);
    CHECK(gi.n == 8);
    REQUIRE(gi.arcs.size() == 7);
    std::vector<std::pair<int, int>> iarcs;
    for (size_t k = 0; k < gi.arcs.size(); ++k) {
        CHECK(gi.arcs[k].edge == static_cast<int>(k));
        iarcs.push_back({gi.arcs[k].src, gi.arcs[k].dst});
    }
    CHECK(iarcs == std::vector<std::pair<int, int>>{
                       {0, 2}, {0, 4}, {0, 6}, {0, 7}, {4, 6}, {5, 1}, {5, 3}});
    CHECK(gi.num_components == 2);
    CHECK(gi.component_of == std::vector<int>{0, 1, 0, 1, 0, 1, 0, 0});

    CycleData ci = unique_cycle(gi);
    check_cycle_shape(gi, ci);
    CHECK(vertex_set(ci) == std::set<int>{0, 4, 6});
    CHECK_FALSE(ci.is_directed);

    DerivedGraph gt = build_derived(*w1, GraphKind::Terminal);
    std::vector<std::pair<int, int>> tarcs;
    for (const Arc& a : gt.arcs) tarcs.push_back({a.src, a.dst});
    CHECK(tarcs == std::vector<std::pair<int, int>>{
                       {2, 1}, {4, 2}, {6, 3}, {7, 5}, {6, 5}, {1, 6}, {3, 7}});
    CHECK(gt.num_components == 2);
    CHECK(gt.component_of == std::vector<int>{0, 1, 1, 1, 1, 1, 1, 1});

    CycleData ct = unique_cycle(gt);
    check_cycle_shape(gt, ct);
    CHECK(vertex_set(ct) == std::set<int>{3, 5, 6, 7});
    CHECK_FALSE(ct.is_directed);
}

TEST_CASE("a directed cycle and a connected complement") {
    Lot l = parse("a b c\nb c d\nc d a\n");

    DerivedGraph gi = build_derived(l, GraphKind::Initial);
    CHECK(gi.num_components == 2);
    CycleData ci = unique_cycle(gi);
    CHECK(vertex_set(ci) == std::set<int>{0, 2});
    CHECK(ci.is_directed);
    CHECK(directed_cycles(gi) == std::set<std::vector<int>>{{0, 2}});

    DerivedGraph gt = build_derived(l, GraphKind::Terminal);
    CHECK(gt.num_components == 1);
    CHECK_THROWS_AS(unique_cycle(gt), DomainError);
    CHECK(all_cycles(gt).empty());
    CHECK(directed_cycles(gt).empty());
}

TEST_CASE("structural invariants over all small lots") {
    EnumerationSpec spec{4, {}, false};
    long visited = 0;
    enumerate_lots(spec, [&](const Lot& sample) {
        ++visited;
        for (GraphKind kind : {GraphKind::Initial, GraphKind::Terminal}) {
            DerivedGraph g = build_derived(sample, kind);
            REQUIRE(g.n == sample.n);
            REQUIRE(g.arcs.size() == sample.edges.size());
            for (size_t k = 0; k < g.arcs.size(); ++k) {
                const Edge& e = sample.edges[k];
                const Arc& a = g.arcs[k];
                REQUIRE(a.edge == static_cast<int>(k));
                if (kind == GraphKind::Initial) {
                    REQUIRE(a.src == e.iota);
                    REQUIRE(a.dst == e.label);
                } else {
                    REQUIRE(a.src == e.label);
                    REQUIRE(a.dst == e.tau);
                }
            }

            // component ids are normalized by least member vertex
            REQUIRE(static_cast<int>(g.component_of.size()) == g.n);
            int seen = 0;
            for (int v = 0; v < g.n; ++v) {
                REQUIRE(g.component_of[static_cast<size_t>(v)] <= seen);
                seen = std::max(seen, g.component_of[static_cast<size_t>(v)] + 1);
            }
            REQUIRE(seen == g.num_components);

            // n-1 arcs across n vertices: total cycle rank is components-1,
            // and all_cycles yields one entry per non-tree component
            std::vector<int> verts(static_cast<size_t>(g.num_components), 0);
            std::vector<int> arcs(static_cast<size_t>(g.num_components), 0);
            for (int v = 0; v < g.n; ++v)
                verts[static_cast<size_t>(g.component_of[static_cast<size_t>(v)])]++;
            for (const Arc& a : g.arcs)
                arcs[static_cast<size_t>(g.component_of[static_cast<size_t>(a.src)])]++;
            int rank = 0, nontree = 0;
            std::set<int> unicyclic;
            for (int c = 0; c < g.num_components; ++c) {
                int excess = arcs[static_cast<size_t>(c)] - verts[static_cast<size_t>(c)] + 1;
                REQUIRE(excess >= 0);
                rank += excess;
                if (excess > 0) ++nontree;
                if (excess == 1) unicyclic.insert(c);
            }
            REQUIRE(rank == g.num_components - 1);

            std::vector<CycleData> cycles = all_cycles(g);
            REQUIRE(static_cast<int>(cycles.size()) == nontree);
            std::set<int> comps_with_cycle;
            for (const CycleData& c : cycles) {
                int comp = g.component_of[static_cast<size_t>(c.vertices[0])];
                comps_with_cycle.insert(comp);
                if (unicyclic.count(comp)) check_cycle_shape(g, c);
            }
            REQUIRE(static_cast<int>(comps_with_cycle.size()) == nontree);
        }
    });
    CHECK(visited == 1 + 2 + 27 + 1024);
}

TEST_CASE("forests and geodesics") {
    std::optional<Lot> w1 = find_first_core(8);
    REQUIRE(w1.has_value());
    DerivedGraph gi = build_derived(*w1, GraphKind::Initial);
    CycleData ci = unique_cycle(gi);

    int removed = ci.arcs[0];
    MaximalForest f = maximal_forest(gi, removed);
    CHECK(f.kind == gi.kind);
    CHECK(f.removed_arc == removed);
    CHECK(std::count(f.keep.begin(), f.keep.end(), 1) ==
          static_cast<long>(gi.arcs.size()) - 1);
    CHECK_FALSE(f.keep[static_cast<size_t>(removed)]);
    CHECK_THROWS_AS(maximal_forest(gi, -1), InternalError);
    CHECK_THROWS_AS(maximal_forest(gi, 99), InternalError);

    // removing a cycle arc keeps its endpoints connected through the rest
    const Arc& ra = gi.arcs[static_cast<size_t>(removed)];
    std::vector<GeodesicStep> path = geodesic(gi, f, ra.src, ra.dst);
    CHECK_FALSE(path.empty());
    CHECK(replay_path(gi, path, ra.src) == ra.dst);
    for (const GeodesicStep& s : path) CHECK(s.arc != removed);

    CHECK(geodesic(gi, f, 3, 3).empty());
    CHECK_THROWS_AS(geodesic(gi, f, 0, 1), DomainError);  // different components

    // greedy forests span every component on arbitrary small lots
    EnumerationSpec spec{4, {}, false};
    enumerate_lots(spec, [&](const Lot& sample) {
        for (GraphKind kind : {GraphKind::Initial, GraphKind::Terminal}) {
            DerivedGraph g = build_derived(sample, kind);
            MaximalForest gf = greedy_forest(g);
            REQUIRE(gf.removed_arc == -1);
            REQUIRE(std::count(gf.keep.begin(), gf.keep.end(), 1) ==
                    g.n - g.num_components);
            for (int from = 0; from < g.n; ++from)
                for (int to = 0; to < g.n; ++to) {
                    if (g.component_of[static_cast<size_t>(from)] !=
                        g.component_of[static_cast<size_t>(to)])
                        continue;
                    std::vector<GeodesicStep> p = geodesic(g, gf, from, to);
                    REQUIRE(replay_path(g, p, from) == to);
                }
        }
    });
}

TEST_CASE("degree-pattern lemmas hold on every qualifying lot") {
    // lots that are reduced, minimal, of diameter 3, with a double label
    std::vector<long> applicable_raw{0, 0, 0, 0, 0, 0, 0};
    std::vector<long> applicable_dedup{0, 0, 0, 0, 0, 0, 0};
    std::vector<long> both_disconnected{0, 0, 0, 0, 0, 0, 0};
    long violations = 0;

    for (bool dedupe : {false, true}) {
        for (int n = 4; n <= 6; ++n) {
            EnumerationSpec spec{n, {"reduced", "minimal", "diameter=3"}, dedupe};
            enumerate_lots(spec, [&](const Lot& sample) {
                if (sample.n != n) return;
                std::optional<int> a = double_label(sample);
                if (!a) return;
                auto [u, v] = diam3_internal(sample);
                (dedupe ? applicable_dedup : applicable_raw)[static_cast<size_t>(n)]++;
                if (!check_lemma_initial(sample, u, v, *a).empty()) ++violations;
                if (!check_lemma_terminal(sample, u, v, *a).empty()) ++violations;
                if (!dedupe) return;

                DerivedGraph gi = build_derived(sample, GraphKind::Initial);
                DerivedGraph gt = build_derived(sample, GraphKind::Terminal);
                if (gi.num_components < 2 || gt.num_components < 2) return;
                both_disconnected[static_cast<size_t>(n)]++;
                REQUIRE(gi.num_components == 2);
                REQUIRE(gt.num_components == 2);
                // the two unique cycles are never both directed
                bool both_directed = unique_cycle(gi).is_directed &&
                                     unique_cycle(gt).is_directed;
                CHECK_FALSE(both_directed);
            });
        }
    }

    CHECK(violations == 0);
    CHECK(applicable_raw == std::vector<long>{0, 0, 0, 0, 8, 280, 6480});
    CHECK(applicable_dedup == std::vector<long>{0, 0, 0, 0, 4, 48, 352});
    CHECK(both_disconnected == std::vector<long>{0, 0, 0, 0, 0, 6, 54});
}
