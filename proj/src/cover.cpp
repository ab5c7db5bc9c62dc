#include "lot/cover.hpp"

#include <algorithm>

namespace lot {

namespace {

std::vector<int> side_map(const DerivedGraph& g, int u, int v, const char* which) {
    if (g.num_components != 2)
        throw DomainError(std::string(which) + " graph does not have exactly two components");
    int cu = g.component_of[u], cv = g.component_of[v];
    if (cu == cv)
        throw DomainError(std::string(which) + " graph has u and v in one component");
    std::vector<int> side(g.n);
    for (int w = 0; w < g.n; ++w) side[w] = g.component_of[w] == cu ? 0 : 1;
    return side;
}

}  // namespace

CoverSides cover_sides(const Lot& lot, const DerivedGraph& gI, const DerivedGraph& gT) {
    auto [u, v] = diam3_internal(lot);
    CoverSides s;
    s.initial = side_map(gI, u, v, "initial");
    s.terminal = side_map(gT, u, v, "terminal");
    return s;
}

LiftResult lift(const Word& word, const CoverSides& sides) {
    size_t m = word.size();
    if (m == 0 || m % 2 != 0) throw DomainError("lift needs a nonempty even-length word");
    LiftResult r;
    r.lifted.reserve(m + 2);
    for (size_t k = 0; k < m; ++k) {
        const Letter& cur = word[k];
        const Letter& nxt = word[(k + 1) % m];
        r.lifted.push_back(cur);
        if (cur.sign < 0 && nxt.sign > 0) {
            int s1 = sides.initial[cur.sym], s2 = sides.initial[nxt.sym];
            if (s1 != s2) {
                r.uses_X = true;
                r.lifted.push_back({kSymX, s1 == 0 ? 1 : -1});
            }
        } else if (cur.sign > 0 && nxt.sign < 0) {
            int s1 = sides.terminal[cur.sym], s2 = sides.terminal[nxt.sym];
            if (s1 != s2) {
                r.uses_Y = true;
                r.lifted.push_back({kSymY, s1 == 0 ? 1 : -1});
            }
        }
    }
    return r;
}

ComponentLift component_lift(const Word& word, const std::vector<int>& compI,
                             const std::vector<int>& compT) {
    size_t m = word.size();
    ComponentLift r;
    for (size_t k = 0; k < m; ++k) {
        const Letter& cur = word[k];
        const Letter& nxt = word[(k + 1) % m];
        if (cur.sign < 0 && nxt.sign > 0 && compI[cur.sym] != compI[nxt.sym]) {
            r.ok = false;
            r.position = static_cast<int>(k);
            r.level = 0;
            return r;
        }
        if (cur.sign > 0 && nxt.sign < 0 && compT[cur.sym] != compT[nxt.sym]) {
            r.ok = false;
            r.position = static_cast<int>(k);
            r.level = 1;
            return r;
        }
    }
    return r;
}

namespace {

// One expansion step of a block: the path pair (cur^-s next^s) becomes the
// edge rearrangement's image.  `start_sign` is the sign of a block's first
// letter (-1 forward over I, +1 backward over T).
DerivStep make_step(const Lot& lot, const DerivedGraph& g, int block, int arc_idx, int dir,
                    int start_sign) {
    const Arc& arc = g.arcs[arc_idx];
    const Edge& e = lot.edges[arc.edge];
    int cur = dir > 0 ? arc.src : arc.dst;
    int nxt = dir > 0 ? arc.dst : arc.src;
    DerivStep st;
    st.block = block;
    st.edge = arc.edge;
    st.dir = dir;
    st.replaced = {Letter{cur, start_sign}, Letter{nxt, -start_sign}};
    if (start_sign < 0) {
        if (dir > 0)
            st.replacement = {Letter{e.label, 1}, Letter{e.tau, -1}};
        else
            st.replacement = {Letter{e.tau, 1}, Letter{e.label, -1}};
    } else {
        if (dir > 0)
            st.replacement = {Letter{e.iota, -1}, Letter{e.label, 1}};
        else
            st.replacement = {Letter{e.label, -1}, Letter{e.iota, 1}};
    }
    return st;
}

DerivResult derivative(const Lot& lot, const DerivedGraph& g, const MaximalForest& forest,
                       const Word& word, const SeedPlan* plan, int start_sign) {
    DerivResult res;
    res.cert.rotated_input = plan ? word : rotate_to_sign(word, start_sign);
    const Word& w = res.cert.rotated_input;
    size_t m = w.size();
    if (m % 2 != 0) throw DomainError("derivative needs an even-length word");
    if (plan && plan->size() != m / 2)
        throw InternalError("seed plan does not match the block count");
    for (size_t bi = 0; bi < m / 2; ++bi) {
        const Letter& x = w[2 * bi];
        const Letter& y = w[2 * bi + 1];
        if (x.sign != start_sign || y.sign != -start_sign)
            throw InternalError("derivative block has wrong sign pattern");
        std::vector<GeodesicStep> path;
        if (plan) {
            const GeodesicStep& st = (*plan)[bi];
            const Arc& arc = g.arcs[st.arc];
            int from = st.dir > 0 ? arc.src : arc.dst;
            int to = st.dir > 0 ? arc.dst : arc.src;
            if (from != x.sym || to != y.sym)
                throw InternalError("seed plan arc does not match its block");
            path.push_back(st);
        } else if (x.sym == y.sym) {
            continue;
        } else {
            path = geodesic(g, forest, x.sym, y.sym);
        }
        for (const GeodesicStep& st : path) {
            DerivStep ds = make_step(lot, g, static_cast<int>(bi), st.arc, st.dir, start_sign);
            res.word.push_back(ds.replacement[0]);
            res.word.push_back(ds.replacement[1]);
            res.cert.steps.push_back(ds);
        }
    }
    return res;
}

}  // namespace

DerivResult forward_derivative(const Lot& lot, const DerivedGraph& gI,
                               const MaximalForest& forest, const Word& word,
                               const SeedPlan* plan) {
    return derivative(lot, gI, forest, word, plan, -1);
}

DerivResult backward_derivative(const Lot& lot, const DerivedGraph& gT,
                                const MaximalForest& forest, const Word& word,
                                const SeedPlan* plan) {
    return derivative(lot, gT, forest, word, plan, 1);
}

namespace {

bool is_rotation(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    size_t m = a.size();
    for (size_t off = 0; off < m; ++off) {
        bool match = true;
        for (size_t k = 0; k < m && match; ++k) match = a[(off + k) % m] == b[k];
        if (match) return true;
    }
    return false;
}

bool step_is_rearrangement(const Edge& e, const DerivStep& st) {
    const auto& r = st.replaced;
    const auto& s = st.replacement;
    auto eq = [](const std::array<Letter, 2>& w, Letter a, Letter b) {
        return w[0] == a && w[1] == b;
    };
    Letter io_n{e.iota, -1}, io_p{e.iota, 1};
    Letter la_n{e.label, -1}, la_p{e.label, 1};
    Letter ta_n{e.tau, -1}, ta_p{e.tau, 1};
    if (eq(r, io_n, la_p)) return eq(s, la_p, ta_n);
    if (eq(r, la_n, io_p)) return eq(s, ta_p, la_n);
    if (eq(r, la_p, ta_n)) return eq(s, io_n, la_p);
    if (eq(r, ta_p, la_n)) return eq(s, la_n, io_p);
    return false;
}

}  // namespace

bool verify_certificate(const Lot& lot, const Word& input, const Certificate& cert,
                        const Word& output, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const Word& w = cert.rotated_input;
    if (!is_rotation(input, w)) return fail("recorded word is not a rotation of the input");
    if (w.size() % 2 != 0) return fail("recorded word has odd length");
    size_t blocks = w.size() / 2;
    size_t at = 0;
    Word rebuilt;
    for (size_t bi = 0; bi < blocks; ++bi) {
        Word replaced_chain;
        while (at < cert.steps.size() && cert.steps[at].block == static_cast<int>(bi)) {
            const DerivStep& st = cert.steps[at];
            if (st.edge < 0 || st.edge >= static_cast<int>(lot.edges.size()))
                return fail("step names an edge outside the tree");
            if (!step_is_rearrangement(lot.edges[st.edge], st))
                return fail("step " + std::to_string(at) + " is not an edge rearrangement");
            replaced_chain.insert(replaced_chain.end(), st.replaced.begin(), st.replaced.end());
            rebuilt.insert(rebuilt.end(), st.replacement.begin(), st.replacement.end());
            ++at;
        }
        Word block{w[2 * bi], w[2 * bi + 1]};
        if (free_reduce(replaced_chain) != free_reduce(block))
            return fail("block " + std::to_string(bi) + " replacements do not cover it");
    }
    if (at != cert.steps.size()) return fail("steps are not in block order");
    if (rebuilt != output) return fail("reassembled word differs from the output");
    return true;
}

SeedResult seed_word(const CycleData& cycle, GraphKind kind) {
    SeedResult r;
    size_t m = cycle.vertices.size();
    for (size_t j = 0; j < m; ++j) {
        int z = cycle.vertices[j];
        int zn = cycle.vertices[(j + 1) % m];
        if (kind == GraphKind::Initial) {
            r.word.push_back({z, -1});
            r.word.push_back({zn, 1});
        } else {
            r.word.push_back({z, 1});
            r.word.push_back({zn, -1});
        }
        r.plan.push_back({cycle.arcs[j], cycle.forward[j] ? 1 : -1});
    }
    return r;
}

DeriveContext make_derive_context(const Lot& lot, int e0, int f0) {
    DeriveContext ctx;
    ctx.lot = &lot;
    ctx.I = build_derived(lot, GraphKind::Initial);
    ctx.T = build_derived(lot, GraphKind::Terminal);
    ctx.sides = cover_sides(lot, ctx.I, ctx.T);
    ctx.Icyc = unique_cycle(ctx.I);
    ctx.Tcyc = unique_cycle(ctx.T);
    ctx.I_directed = ctx.Icyc.is_directed;
    ctx.T_directed = ctx.Tcyc.is_directed;
    ctx.removed_arc_I = ctx.I_directed ? e0 : f0;
    ctx.removed_arc_T = ctx.T_directed ? f0 : e0;
    auto on_cycle = [](const CycleData& c, int arc) {
        return std::find(c.arcs.begin(), c.arcs.end(), arc) != c.arcs.end();
    };
    if (!on_cycle(ctx.Icyc, ctx.removed_arc_I) || !on_cycle(ctx.Tcyc, ctx.removed_arc_T))
        throw InternalError("forest-defining arc is off its cycle");
    ctx.forestI = maximal_forest(ctx.I, ctx.removed_arc_I);
    ctx.forestT = maximal_forest(ctx.T, ctx.removed_arc_T);
    return ctx;
}

RelatorSequence generate_sequence(const DeriveContext& ctx, GraphKind seed_kind, int max_steps) {
    const Lot& lot = *ctx.lot;
    bool fw = seed_kind == GraphKind::Initial;
    const DerivedGraph& g = fw ? ctx.I : ctx.T;
    const MaximalForest& forest = fw ? ctx.forestI : ctx.forestT;
    auto derive = [&](const Word& w, const SeedPlan* plan) {
        return fw ? forward_derivative(lot, g, forest, w, plan)
                  : backward_derivative(lot, g, forest, w, plan);
    };

    RelatorSequence seq;
    seq.seed_kind = seed_kind;
    SeedResult seed = seed_word(fw ? ctx.Icyc : ctx.Tcyc, seed_kind);
    seq.seed = seed.word;
    LiftResult seed_lift = lift(seed.word, ctx.sides);
    if (seed_lift.uses_X || seed_lift.uses_Y)
        throw DomainError("seed word does not lift: " +
                          format_word(seed_lift.lifted, lot.names));

    DerivResult cur = derive(seed.word, &seed.plan);
    while (true) {
        SequenceItem item;
        item.word = cur.word;
        item.cert = std::move(cur.cert);
        item.lift = lift(item.word, ctx.sides);
        bool lifts = !item.lift.uses_X && !item.lift.uses_Y;
        seq.items.push_back(std::move(item));
        if (!lifts) {
            seq.stopped_by_lift = true;
            break;
        }
        if (max_steps >= 0 && static_cast<int>(seq.items.size()) >= max_steps) break;
        if (static_cast<int>(seq.items.size()) >= lot.n)
            throw DomainError("derivative sequence guard tripped at |V| iterations");
        cur = derive(seq.items.back().word, nullptr);
    }
    seq.terminal_index = static_cast<int>(seq.items.size());
    return seq;
}

}  // namespace lot
