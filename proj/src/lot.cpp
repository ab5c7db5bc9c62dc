#include "lot/lot.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace lot {

int Lot::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges)
        if (e.iota == v || e.tau == v) ++d;
    return d;
}

std::vector<int> Lot::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<std::vector<std::pair<int, int>>> Lot::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
    for (size_t k = 0; k < edges.size(); ++k) {
        adj[static_cast<size_t>(edges[k].iota)].push_back({edges[k].tau, static_cast<int>(k)});
        adj[static_cast<size_t>(edges[k].tau)].push_back({edges[k].iota, static_cast<int>(k)});
    }
    return adj;
}

static void check_tree(int n, const std::vector<Edge>& edges, const char* what) {
    if (static_cast<int>(edges.size()) != n - 1)
        throw InternalError(std::string(what) + ": edge count is not n-1");
    if (n == 0) throw InternalError(std::string(what) + ": empty vertex set");
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const Edge& e : edges) {
        adj[static_cast<size_t>(e.iota)].push_back(e.tau);
        adj[static_cast<size_t>(e.tau)].push_back(e.iota);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[static_cast<size_t>(x)])
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++cnt;
                q.push_back(y);
            }
    }
    if (cnt != n)
        throw InternalError(std::string(what) + ": graph is not connected");
}

Lot make_lot(int n, const std::vector<Edge>& edges) {
    Lot lot;
    lot.n = n;
    lot.edges = edges;
    lot.names.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) lot.names.push_back("v" + std::to_string(v + 1));
    for (const Edge& e : edges)
        if (e.iota < 0 || e.iota >= n || e.tau < 0 || e.tau >= n ||
            e.label < 0 || e.label >= n || e.iota == e.tau)
            throw InternalError("make_lot: edge out of range");
    check_tree(n, edges, "make_lot");
    return lot;
}

Lot parse(const std::string& text) {
    struct RawEdge {
        std::string iota, tau, label;
        int line;
    };
    std::vector<RawEdge> raw;
    std::vector<std::string> order;  // endpoint names in first appearance
    std::set<std::string> seen_names;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw DomainError("line " + std::to_string(lineno) +
                              ": expected 3 tokens (iota tau label), got " +
                              std::to_string(toks.size()));
        for (const std::string& tok : toks)
            for (char c : tok)
                if (static_cast<unsigned char>(c) >= 128)
                    throw DomainError("line " + std::to_string(lineno) +
                                      ": non-ASCII byte in token '" + tok + "'");
        if (toks[0] == toks[1])
            throw DomainError("line " + std::to_string(lineno) +
                              ": edge endpoints are equal ('" + toks[0] + "')");
        raw.push_back({toks[0], toks[1], toks[2], lineno});
        for (int k = 0; k < 2; ++k) {
            const std::string& nm = k == 0 ? toks[0] : toks[1];
            if (seen_names.insert(nm).second) order.push_back(nm);
        }
    }
    if (raw.empty()) throw DomainError("line 0: empty input (no edges)");

    std::vector<std::string> names = order;
    std::sort(names.begin(), names.end());
    std::map<std::string, int> idx;
    for (size_t k = 0; k < names.size(); ++k)
        idx[names[k]] = static_cast<int>(k);

    std::map<std::pair<int, int>, int> pair_line;
    std::vector<Edge> edges;
    for (const RawEdge& r : raw) {
        auto li = idx.find(r.label);
        if (li == idx.end())
            throw DomainError("line " + std::to_string(r.line) + ": label '" +
                              r.label + "' never occurs as an endpoint");
        int i = idx[r.iota], t = idx[r.tau];
        auto key = std::minmax(i, t);
        if (auto prev = pair_line.find(key); prev != pair_line.end())
            throw DomainError("line " + std::to_string(r.line) +
                              ": duplicate edge between '" + r.iota + "' and '" +
                              r.tau + "' (first on line " +
                              std::to_string(prev->second) + ")");
        pair_line[key] = r.line;
        edges.push_back({i, t, li->second});
    }

    const int n = static_cast<int>(names.size());
    if (static_cast<int>(edges.size()) != n - 1)
        throw DomainError("line 0: not a tree: " + std::to_string(edges.size()) +
                          " edges on " + std::to_string(n) + " vertices");
    try {
        check_tree(n, edges, "parse");
    } catch (const InternalError& e) {
        throw DomainError("line 0: not a tree: graph is disconnected");
    }

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.iota, a.tau) < std::pair(b.iota, b.tau);
    });
    Lot lot;
    lot.n = n;
    lot.edges = std::move(edges);
    lot.names = std::move(names);
    return lot;
}

std::string serialize(const Lot& lot) {
    std::string out;
    for (const Edge& e : lot.edges) {
        out += lot.names[static_cast<size_t>(e.iota)];
        out += ' ';
        out += lot.names[static_cast<size_t>(e.tau)];
        out += ' ';
        out += lot.names[static_cast<size_t>(e.label)];
        out += '\n';
    }
    return out;
}

Presentation presentation(const Lot& lot) {
    Presentation p;
    p.generators = lot.names;
    for (const Edge& e : lot.edges)
        p.relators.push_back(Word{{e.iota, 1}, {e.label, 1}, {e.tau, -1}, {e.label, -1}});
    return p;
}

int diameter(const Lot& lot) {
    if (lot.n <= 1) return 0;
    auto adj = lot.adjacency();
    auto bfs = [&](int s) {
        std::vector<int> d(static_cast<size_t>(lot.n), -1);
        d[static_cast<size_t>(s)] = 0;
        std::deque<int> q{s};
        int far = s;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (auto [y, k] : adj[static_cast<size_t>(x)])
                if (d[static_cast<size_t>(y)] < 0) {
                    d[static_cast<size_t>(y)] = d[static_cast<size_t>(x)] + 1;
                    if (d[static_cast<size_t>(y)] > d[static_cast<size_t>(far)]) far = y;
                    q.push_back(y);
                }
        }
        return std::pair(far, d);
    };
    auto [a, d0] = bfs(0);
    auto [b, d] = bfs(a);
    return d[static_cast<size_t>(b)];
}

ReducedReport is_reduced(const Lot& lot) {
    ReducedReport rep;
    auto nm = [&](int v) { return lot.names[static_cast<size_t>(v)]; };
    for (size_t k = 0; k < lot.edges.size(); ++k) {
        const Edge& e = lot.edges[k];
        if (e.label == e.iota || e.label == e.tau)
            rep.violations.push_back("edge " + std::to_string(k) + " (" + nm(e.iota) +
                                     " " + nm(e.tau) + " " + nm(e.label) +
                                     "): label equals an endpoint");
    }
    for (size_t j = 0; j < lot.edges.size(); ++j)
        for (size_t k = j + 1; k < lot.edges.size(); ++k) {
            const Edge& ej = lot.edges[j];
            const Edge& ek = lot.edges[k];
            if (ej.label != ek.label) continue;
            if (ej.iota == ek.iota)
                rep.violations.push_back("edges " + std::to_string(j) + "," +
                                         std::to_string(k) + " share label " +
                                         nm(ej.label) + " and share iota");
            if (ej.tau == ek.tau)
                rep.violations.push_back("edges " + std::to_string(j) + "," +
                                         std::to_string(k) + " share label " +
                                         nm(ej.label) + " and share tau");
        }
    std::vector<char> used(static_cast<size_t>(lot.n), 0);
    for (const Edge& e : lot.edges) used[static_cast<size_t>(e.label)] = 1;
    for (int v : lot.leaves())
        if (!used[static_cast<size_t>(v)])
            rep.violations.push_back("leaf " + nm(v) + " never occurs as a label");
    rep.reduced = rep.violations.empty();
    return rep;
}

Subgraph span(const Lot& lot, const std::vector<int>& seed) {
    std::vector<char> vin(static_cast<size_t>(lot.n), 0);
    std::vector<char> ein(lot.edges.size(), 0);
    for (int v : seed) vin[static_cast<size_t>(v)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < lot.edges.size(); ++k) {
            if (ein[k]) continue;
            const Edge& e = lot.edges[k];
            if (vin[static_cast<size_t>(e.label)] &&
                (vin[static_cast<size_t>(e.iota)] || vin[static_cast<size_t>(e.tau)])) {
                ein[k] = 1;
                vin[static_cast<size_t>(e.iota)] = 1;
                vin[static_cast<size_t>(e.tau)] = 1;
                changed = true;
            }
        }
    }
    Subgraph sub;
    for (int v = 0; v < lot.n; ++v)
        if (vin[static_cast<size_t>(v)]) sub.vertices.push_back(v);
    for (size_t k = 0; k < lot.edges.size(); ++k)
        if (ein[k]) sub.edges.push_back(static_cast<int>(k));
    return sub;
}

bool spans_whole(const Lot& lot, const std::vector<int>& seed) {
    Subgraph s = span(lot, seed);
    return static_cast<int>(s.vertices.size()) == lot.n &&
           s.edges.size() == lot.edges.size();
}

bool is_admissible(const Lot& lot, const Subgraph& sub) {
    std::vector<char> vin(static_cast<size_t>(lot.n), 0);
    for (int v : sub.vertices) vin[static_cast<size_t>(v)] = 1;
    for (int k : sub.edges)
        if (!vin[static_cast<size_t>(lot.edges[static_cast<size_t>(k)].label)])
            return false;
    return true;
}

std::vector<int> tree_convex_hull(const Lot& lot, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() <= 1) return verts;
    auto adj = lot.adjacency();
    const int root = verts[0];
    std::vector<int> parent(static_cast<size_t>(lot.n), -1);
    std::vector<char> seen(static_cast<size_t>(lot.n), 0);
    seen[static_cast<size_t>(root)] = 1;
    std::vector<int> order{root};
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int x = order[qi];
        for (auto [y, k] : adj[static_cast<size_t>(x)])
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                parent[static_cast<size_t>(y)] = x;
                order.push_back(y);
            }
    }
    std::vector<char> hull(static_cast<size_t>(lot.n), 0);
    hull[static_cast<size_t>(root)] = 1;
    for (size_t i = 1; i < verts.size(); ++i) {
        int x = verts[i];
        while (x != -1 && !hull[static_cast<size_t>(x)]) {
            hull[static_cast<size_t>(x)] = 1;
            x = parent[static_cast<size_t>(x)];
        }
    }
    std::vector<int> out;
    for (int v = 0; v < lot.n; ++v)
        if (hull[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

Subgraph connected_admissible_closure(const Lot& lot, const std::vector<int>& verts) {
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    while (true) {
        std::vector<int> hull = tree_convex_hull(lot, vs);
        std::vector<char> vin(static_cast<size_t>(lot.n), 0);
        for (int v : hull) vin[static_cast<size_t>(v)] = 1;
        std::vector<int> es;
        std::vector<int> nxt = hull;
        for (size_t k = 0; k < lot.edges.size(); ++k) {
            const Edge& e = lot.edges[k];
            if (vin[static_cast<size_t>(e.iota)] && vin[static_cast<size_t>(e.tau)]) {
                es.push_back(static_cast<int>(k));
                nxt.push_back(e.label);
            }
        }
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        if (nxt == vs) return Subgraph{vs, es};
        vs = std::move(nxt);
    }
}

MinimalReport is_minimal(const Lot& lot) {
    if (lot.n <= 1) return {true, std::nullopt};
    for (const Edge& e : lot.edges) {
        Subgraph sub = connected_admissible_closure(lot, {e.iota, e.tau, e.label});
        if (static_cast<int>(sub.vertices.size()) != lot.n)
            return {false, sub};
    }
    return {true, std::nullopt};
}

bool is_minimal_brute(const Lot& lot) {
    const int n = lot.n;
    if (n <= 1) return true;
    for (int r = 2; r < n; ++r) {
        std::vector<int> comb(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) comb[static_cast<size_t>(i)] = i;
        while (true) {
            std::vector<int> vs = comb;
            if (tree_convex_hull(lot, vs) == vs) {
                std::vector<char> vin(static_cast<size_t>(n), 0);
                for (int v : vs) vin[static_cast<size_t>(v)] = 1;
                bool adm = true;
                for (const Edge& e : lot.edges)
                    if (vin[static_cast<size_t>(e.iota)] &&
                        vin[static_cast<size_t>(e.tau)] &&
                        !vin[static_cast<size_t>(e.label)]) {
                        adm = false;
                        break;
                    }
                if (adm) return false;
            }
            int i = r - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == n - r + i) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> two_spanned(const Lot& lot) {
    for (int i = 0; i < lot.n; ++i)
        for (int j = i + 1; j < lot.n; ++j)
            if (spans_whole(lot, {i, j})) return std::pair(i, j);
    return std::nullopt;
}

std::optional<int> double_label(const Lot& lot) {
    std::vector<int> count(static_cast<size_t>(lot.n), 0);
    for (const Edge& e : lot.edges) ++count[static_cast<size_t>(e.label)];
    int dbl = -1;
    for (int v = 0; v < lot.n; ++v) {
        if (count[static_cast<size_t>(v)] > 2) return std::nullopt;
        if (count[static_cast<size_t>(v)] == 2) {
            if (dbl >= 0) return std::nullopt;
            dbl = v;
        }
    }
    if (dbl < 0) return std::nullopt;
    return dbl;
}

std::pair<int, int> diam3_internal(const Lot& lot) {
    std::vector<int> internal;
    for (int v = 0; v < lot.n; ++v)
        if (lot.degree(v) > 1) internal.push_back(v);
    if (internal.size() != 2)
        throw InternalError("diam3_internal: tree does not have exactly 2 internal vertices");
    return {internal[0], internal[1]};
}

SpanningReport spanning_classification(const Lot& lot) {
    if (diameter(lot) != 3)
        throw DomainError("spanning_classification requires diameter 3");
    if (!is_reduced(lot).reduced)
        throw DomainError("spanning_classification requires a reduced LOT");
    if (!is_minimal(lot).minimal)
        throw DomainError("spanning_classification requires a minimal LOT");
    SpanningReport rep;
    auto [u, v] = diam3_internal(lot);
    rep.u = u;
    rep.v = v;
    rep.pair = two_spanned(lot);
    rep.a = double_label(lot);
    if (rep.a)
        rep.span_auv_whole = spans_whole(lot, {*rep.a, u, v});
    return rep;
}

std::vector<long long> abelianization(const Presentation& pres) {
    const int cols = static_cast<int>(pres.generators.size());
    const int rows = static_cast<int>(pres.relators.size());
    std::vector<std::vector<long long>> m(static_cast<size_t>(rows),
                                          std::vector<long long>(static_cast<size_t>(cols), 0));
    for (int r = 0; r < rows; ++r)
        for (const Letter& l : pres.relators[static_cast<size_t>(r)]) {
            if (l.sym < 0 || l.sym >= cols)
                throw InternalError("abelianization: relator letter outside generators");
            m[static_cast<size_t>(r)][static_cast<size_t>(l.sym)] += l.sign;
        }

    // Smith normal form by repeated pivoting.
    int t = 0;
    const int tmax = std::min(rows, cols);
    std::vector<long long> diag;
    while (t < tmax) {
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                long long v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v != 0 && (pi < 0 || std::llabs(v) < std::llabs(best))) {
                    pi = i;
                    pj = j;
                    best = v;
                }
            }
        if (pi < 0) break;
        std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(pi)]);
        for (int i = 0; i < rows; ++i)
            std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(t)],
                      m[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                long long q = m[static_cast<size_t>(i)][static_cast<size_t>(t)] /
                              m[static_cast<size_t>(t)][static_cast<size_t>(t)];
                if (q != 0)
                    for (int j = t; j < cols; ++j)
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            q * m[static_cast<size_t>(t)][static_cast<size_t>(j)];
                if (m[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) {
                    std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(i)]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                long long q = m[static_cast<size_t>(t)][static_cast<size_t>(j)] /
                              m[static_cast<size_t>(t)][static_cast<size_t>(t)];
                if (q != 0)
                    for (int i = 0; i < rows; ++i)
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                            q * m[static_cast<size_t>(i)][static_cast<size_t>(t)];
                if (m[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) {
                    for (int i = 0; i < rows; ++i)
                        std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(t)],
                                  m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide every remaining entry
                long long p = m[static_cast<size_t>(t)][static_cast<size_t>(t)];
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] % p != 0) {
                            for (int jj = t; jj < cols; ++jj)
                                m[static_cast<size_t>(t)][static_cast<size_t>(jj)] +=
                                    m[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                            clean = false;
                        }
            }
        }
        diag.push_back(std::llabs(m[static_cast<size_t>(t)][static_cast<size_t>(t)]));
        ++t;
    }

    std::vector<long long> out;
    for (long long d : diag)
        if (d != 1) out.push_back(d);
    const int rank = static_cast<int>(diag.size());
    for (int k = 0; k < cols - rank; ++k) out.push_back(0);
    return out;
}

}  // namespace lot
