#include "lot/decompose.hpp"

#include <algorithm>

#include "lot/derived.hpp"

namespace lot {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Trivial: return "trivial";
        case Classification::TwoSpannedOneRelator: return "two-spanned one-relator";
        case Classification::CoreHypothesis: return "core-hypothesis";
        case Classification::OneRelatorProductChain: return "one-relator-product chain";
        case Classification::LocallyFreeCommutator: return "locally-free-commutator";
    }
    return "?";
}

Lot sub_lot(const Lot& lot, const std::vector<int>& verts) {
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    std::vector<int> idx(static_cast<size_t>(lot.n), -1);
    for (size_t i = 0; i < vs.size(); ++i) idx[static_cast<size_t>(vs[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : lot.edges) {
        if (idx[static_cast<size_t>(e.iota)] < 0 || idx[static_cast<size_t>(e.tau)] < 0) continue;
        if (idx[static_cast<size_t>(e.label)] < 0)
            throw InternalError("sub_lot: edge label outside the vertex set");
        edges.push_back({idx[static_cast<size_t>(e.iota)], idx[static_cast<size_t>(e.tau)],
                         idx[static_cast<size_t>(e.label)]});
    }
    Lot out = make_lot(static_cast<int>(vs.size()), edges);
    for (size_t i = 0; i < vs.size(); ++i)
        out.names[i] = lot.names[static_cast<size_t>(vs[i])];
    return out;
}

std::vector<std::vector<int>> admissible_subtrees(const Lot& lot) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    // combinations of size r in lexicographic order
    auto rec = [&](auto&& self, int start, int r) -> void {
        if (r == 0) {
            std::vector<int> hull = tree_convex_hull(lot, pick);
            if (hull != pick) return;
            bool ok = true;
            std::vector<char> in(static_cast<size_t>(lot.n), 0);
            for (int v : pick) in[static_cast<size_t>(v)] = 1;
            for (const Edge& e : lot.edges) {
                if (in[static_cast<size_t>(e.iota)] && in[static_cast<size_t>(e.tau)] &&
                    !in[static_cast<size_t>(e.label)]) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(pick);
            return;
        }
        for (int v = start; v <= lot.n - r; ++v) {
            pick.push_back(v);
            self(self, v + 1, r - 1);
            pick.pop_back();
        }
    };
    for (int r = 2; r < lot.n; ++r) rec(rec, 0, r);
    return out;
}

std::optional<std::pair<std::vector<int>, int>> decompose_step(const Lot& lot) {
    std::vector<std::vector<int>> subs = admissible_subtrees(lot);
    std::stable_sort(subs.begin(), subs.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a < b;
                     });
    for (const std::vector<int>& s : subs) {
        std::vector<char> in(static_cast<size_t>(lot.n), 0);
        for (int v : s) in[static_cast<size_t>(v)] = 1;
        for (int x = 0; x < lot.n; ++x) {
            if (in[static_cast<size_t>(x)]) continue;
            std::vector<int> seed = s;
            seed.push_back(x);
            if (spans_whole(lot, seed)) return std::make_pair(s, x);
        }
    }
    return std::nullopt;
}

DecompositionReport classify(const Lot& lot) {
    if (diameter(lot) > 3) throw DomainError("classify: diameter exceeds 3");

    DecompositionReport rep;
    rep.replay_ok = true;
    Lot cur = lot;
    while (!is_minimal(cur).minimal) {
        auto step = decompose_step(cur);
        if (!step) throw InternalError("classify: non-minimal graph with no decomposition step");
        const auto& [sub, x] = *step;
        std::vector<int> seed = sub;
        seed.push_back(x);
        if (!spans_whole(cur, seed)) {
            rep.replay_ok = false;
            throw InternalError("classify: decomposition step fails span replay");
        }
        DecompStep ds;
        ds.n = cur.n;
        ds.subtree = sub;
        ds.added = x;
        for (int v : sub) ds.subtree_names.push_back(cur.names[static_cast<size_t>(v)]);
        ds.added_name = cur.names[static_cast<size_t>(x)];
        rep.chain.push_back(std::move(ds));
        if (static_cast<int>(rep.chain.size()) > lot.n)
            throw InternalError("classify: decomposition chain exceeds vertex count");
        cur = sub_lot(cur, sub);
    }
    rep.core = cur;
    if (check_core_hypotheses(cur).empty()) rep.hnn = assemble(cur);

    if (diameter(lot) <= 1) {
        rep.kind = Classification::Trivial;
    } else if (two_spanned(lot)) {
        rep.kind = Classification::TwoSpannedOneRelator;
    } else if (rep.chain.empty() && rep.hnn) {
        rep.kind = Classification::CoreHypothesis;
    } else if (!rep.chain.empty()) {
        rep.kind = Classification::OneRelatorProductChain;
    } else if (build_derived(lot, GraphKind::Initial).num_components == 1 ||
               build_derived(lot, GraphKind::Terminal).num_components == 1) {
        rep.kind = Classification::LocallyFreeCommutator;
    } else {
        throw DomainError("classify: no classification applies");
    }
    return rep;
}

}  // namespace lot
