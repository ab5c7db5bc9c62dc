#include "lot/derived.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lot {

DerivedGraph build_derived(const Lot& lot, GraphKind kind) {
    DerivedGraph g;
    g.kind = kind;
    g.n = lot.n;
    for (size_t k = 0; k < lot.edges.size(); ++k) {
        const Edge& e = lot.edges[k];
        if (kind == GraphKind::Initial)
            g.arcs.push_back({e.iota, e.label, static_cast<int>(k)});
        else
            g.arcs.push_back({e.label, e.tau, static_cast<int>(k)});
    }
    // union-find on the undirected structure
    std::vector<int> up(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) up[static_cast<size_t>(v)] = v;
    auto find = [&](int x) {
        while (up[static_cast<size_t>(x)] != x) {
            up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
            x = up[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const Arc& a : g.arcs) {
        int ra = find(a.src), rb = find(a.dst);
        if (ra != rb) up[static_cast<size_t>(ra)] = rb;
    }
    g.component_of.assign(static_cast<size_t>(g.n), -1);
    int next = 0;
    std::map<int, int> norm;
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        auto it = norm.find(r);
        if (it == norm.end()) it = norm.insert({r, next++}).first;
        g.component_of[static_cast<size_t>(v)] = it->second;
    }
    g.num_components = next;
    return g;
}

// Arc indices surviving repeated removal of degree-1 endpoints: the arcs
// lying on cycles.
static std::vector<int> cycle_arcs(const DerivedGraph& g) {
    std::vector<int> deg(static_cast<size_t>(g.n), 0);
    std::vector<std::vector<int>> inc(static_cast<size_t>(g.n));
    std::vector<char> alive(g.arcs.size(), 1);
    for (size_t idx = 0; idx < g.arcs.size(); ++idx) {
        const Arc& a = g.arcs[idx];
        ++deg[static_cast<size_t>(a.src)];
        ++deg[static_cast<size_t>(a.dst)];
        inc[static_cast<size_t>(a.src)].push_back(static_cast<int>(idx));
        inc[static_cast<size_t>(a.dst)].push_back(static_cast<int>(idx));
    }
    std::deque<int> q;
    for (int v = 0; v < g.n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) q.push_back(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int idx : inc[static_cast<size_t>(v)]) {
            if (!alive[static_cast<size_t>(idx)]) continue;
            const Arc& a = g.arcs[static_cast<size_t>(idx)];
            alive[static_cast<size_t>(idx)] = 0;
            --deg[static_cast<size_t>(a.src)];
            --deg[static_cast<size_t>(a.dst)];
            int o = a.src == v ? a.dst : a.src;
            if (deg[static_cast<size_t>(o)] == 1) q.push_back(o);
            break;
        }
    }
    std::vector<int> out;
    for (size_t idx = 0; idx < g.arcs.size(); ++idx)
        if (alive[idx]) out.push_back(static_cast<int>(idx));
    return out;
}

// Canonical traversal of the cycle formed by the given arcs: start at the
// least vertex, first step toward the least (neighbor, arc) option.
static CycleData trace_cycle(const DerivedGraph& g, const std::vector<int>& cyc) {
    CycleData out;
    int start = -1;
    for (int idx : cyc) {
        const Arc& a = g.arcs[static_cast<size_t>(idx)];
        if (start < 0 || a.src < start) start = a.src;
        if (a.dst < start) start = a.dst;
    }
    std::vector<std::pair<int, int>> opts;
    for (int idx : cyc) {
        const Arc& a = g.arcs[static_cast<size_t>(idx)];
        if (a.src == start) opts.push_back({a.dst, idx});
        if (a.dst == start) opts.push_back({a.src, idx});
    }
    std::sort(opts.begin(), opts.end());
    auto [nxt, arc0] = opts.front();
    out.vertices.push_back(start);
    out.arcs.push_back(arc0);
    std::vector<char> used(g.arcs.size(), 0);
    used[static_cast<size_t>(arc0)] = 1;
    int cur = nxt;
    while (cur != start) {
        out.vertices.push_back(cur);
        bool found = false;
        for (int idx : cyc) {
            if (used[static_cast<size_t>(idx)]) continue;
            const Arc& a = g.arcs[static_cast<size_t>(idx)];
            if (a.src == cur) {
                out.arcs.push_back(idx);
                used[static_cast<size_t>(idx)] = 1;
                cur = a.dst;
                found = true;
                break;
            }
            if (a.dst == cur) {
                out.arcs.push_back(idx);
                used[static_cast<size_t>(idx)] = 1;
                cur = a.src;
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("trace_cycle: traversal stuck");
    }
    out.forward.resize(out.arcs.size());
    for (size_t j = 0; j < out.arcs.size(); ++j)
        out.forward[j] =
            g.arcs[static_cast<size_t>(out.arcs[j])].src == out.vertices[j];
    bool all = true, none = true;
    for (bool f : out.forward) (f ? none : all) = false;
    out.is_directed = all || none;
    return out;
}

CycleData unique_cycle(const DerivedGraph& g) {
    if (g.num_components != 2)
        throw DomainError("unique_cycle: derived graph must have exactly 2 components");
    std::vector<int> cyc = cycle_arcs(g);
    if (cyc.empty())
        throw InternalError("unique_cycle: no cycle found in a 2-component derived graph");
    return trace_cycle(g, cyc);
}

std::vector<CycleData> all_cycles(const DerivedGraph& g) {
    std::vector<int> cyc = cycle_arcs(g);
    std::map<int, std::vector<int>> by_comp;
    for (int idx : cyc)
        by_comp[g.component_of[static_cast<size_t>(
                    g.arcs[static_cast<size_t>(idx)].src)]]
            .push_back(idx);
    std::vector<CycleData> out;
    for (auto& [comp, arcs] : by_comp) out.push_back(trace_cycle(g, arcs));
    return out;
}

MaximalForest maximal_forest(const DerivedGraph& g, int removed_arc) {
    MaximalForest f;
    f.kind = g.kind;
    f.removed_arc = removed_arc;
    f.keep.assign(g.arcs.size(), 1);
    if (removed_arc < 0 || removed_arc >= static_cast<int>(g.arcs.size()))
        throw InternalError("maximal_forest: removed arc out of range");
    f.keep[static_cast<size_t>(removed_arc)] = 0;
    return f;
}

MaximalForest greedy_forest(const DerivedGraph& g) {
    MaximalForest f;
    f.kind = g.kind;
    f.keep.assign(g.arcs.size(), 0);
    std::vector<int> up(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) up[static_cast<size_t>(v)] = v;
    auto find = [&](int x) {
        while (up[static_cast<size_t>(x)] != x) {
            up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
            x = up[static_cast<size_t>(x)];
        }
        return x;
    };
    for (size_t idx = 0; idx < g.arcs.size(); ++idx) {
        int ra = find(g.arcs[idx].src), rb = find(g.arcs[idx].dst);
        if (ra != rb) {
            up[static_cast<size_t>(ra)] = rb;
            f.keep[idx] = 1;
        }
    }
    return f;
}

std::vector<GeodesicStep> geodesic(const DerivedGraph& g, const MaximalForest& f,
                                   int from, int to) {
    if (from == to) return {};
    std::vector<std::vector<std::tuple<int, int, int>>> adj(static_cast<size_t>(g.n));
    for (size_t idx = 0; idx < g.arcs.size(); ++idx) {
        if (!f.keep[idx]) continue;
        const Arc& a = g.arcs[idx];
        adj[static_cast<size_t>(a.src)].push_back({a.dst, static_cast<int>(idx), 1});
        adj[static_cast<size_t>(a.dst)].push_back({a.src, static_cast<int>(idx), -1});
    }
    struct Prev {
        int vert = -1, arc = -1, dir = 0;
        bool set = false;
    };
    std::vector<Prev> prev(static_cast<size_t>(g.n));
    prev[static_cast<size_t>(from)].set = true;
    std::deque<int> q{from};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == to) break;
        for (auto [y, idx, d] : adj[static_cast<size_t>(x)])
            if (!prev[static_cast<size_t>(y)].set) {
                prev[static_cast<size_t>(y)] = {x, idx, d, true};
                q.push_back(y);
            }
    }
    if (!prev[static_cast<size_t>(to)].set)
        throw DomainError("geodesic: endpoints lie in different forest components");
    std::vector<GeodesicStep> path;
    int cur = to;
    while (cur != from) {
        const Prev& p = prev[static_cast<size_t>(cur)];
        path.push_back({p.arc, p.dir});
        cur = p.vert;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::set<std::vector<int>> directed_cycles(const DerivedGraph& g) {
    std::vector<std::vector<int>> out_adj(static_cast<size_t>(g.n));
    for (const Arc& a : g.arcs) out_adj[static_cast<size_t>(a.src)].push_back(a.dst);
    std::set<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> onpath(static_cast<size_t>(g.n), 0);
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int w : out_adj[static_cast<size_t>(v)]) {
            if (w == start) {
                std::vector<int> key = path;
                std::sort(key.begin(), key.end());
                key.erase(std::unique(key.begin(), key.end()), key.end());
                cycles.insert(key);
            } else if (!onpath[static_cast<size_t>(w)] && w > start) {
                path.push_back(w);
                onpath[static_cast<size_t>(w)] = 1;
                self(self, start, w);
                path.pop_back();
                onpath[static_cast<size_t>(w)] = 0;
            }
        }
    };
    for (int s = 0; s < g.n; ++s) {
        path = {s};
        onpath.assign(static_cast<size_t>(g.n), 0);
        onpath[static_cast<size_t>(s)] = 1;
        dfs(dfs, s, s);
    }
    return cycles;
}

static std::vector<std::string> check_lemma(const Lot& lot, GraphKind kind,
                                            int u, int v, int a) {
    DerivedGraph g = build_derived(lot, kind);
    const int n = lot.n;
    std::vector<int> indeg(static_cast<size_t>(n), 0), outdeg(static_cast<size_t>(n), 0);
    for (const Arc& arc : g.arcs) {
        ++outdeg[static_cast<size_t>(arc.src)];
        ++indeg[static_cast<size_t>(arc.dst)];
    }
    // Terminal is the exact mirror: swap the roles of in- and out-degrees.
    const std::vector<int>& into = kind == GraphKind::Initial ? indeg : outdeg;
    const std::vector<int>& outof = kind == GraphKind::Initial ? outdeg : indeg;

    std::vector<std::string> fails;
    if (into[static_cast<size_t>(u)] != 0 || into[static_cast<size_t>(v)] != 0)
        fails.push_back("i");
    for (int w = 0; w < n; ++w)
        if (w != u && w != v && outof[static_cast<size_t>(w)] > 1) {
            fails.push_back("ii");
            break;
        }
    if (into[static_cast<size_t>(a)] != 2) fails.push_back("iii");
    for (int w = 0; w < n; ++w)
        if (w != a && w != u && w != v && into[static_cast<size_t>(w)] != 1) {
            fails.push_back("iv");
            break;
        }
    for (const std::vector<int>& cyc : directed_cycles(g))
        if (!std::binary_search(cyc.begin(), cyc.end(), a)) {
            fails.push_back("v");
            break;
        }
    const int cu = g.component_of[static_cast<size_t>(u)];
    const int cv = g.component_of[static_cast<size_t>(v)];
    for (int r = 0; r < g.num_components; ++r) {
        bool has = false;
        for (int w = 0; w < n; ++w)
            if (g.component_of[static_cast<size_t>(w)] == r && (w == u || w == v))
                has = true;
        if (!has) {
            fails.push_back("vi");
            break;
        }
    }
    (void)cu;
    (void)cv;
    if (g.num_components > 2) fails.push_back("vii");
    return fails;
}

std::vector<std::string> check_lemma_initial(const Lot& lot, int u, int v, int a) {
    return check_lemma(lot, GraphKind::Initial, u, v, a);
}

std::vector<std::string> check_lemma_terminal(const Lot& lot, int u, int v, int a) {
    return check_lemma(lot, GraphKind::Terminal, u, v, a);
}

}  // namespace lot
