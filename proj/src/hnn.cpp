#include "lot/hnn.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lot {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k) out += sep;
        out += parts[k];
    }
    return out;
}

bool in_pair(int x, int p, int q) { return x == p || x == q; }

}  // namespace

std::vector<std::string> check_core_hypotheses(const Lot& lot) {
    std::vector<std::string> out;
    int d = diameter(lot);
    if (d != 3) out.push_back("diameter is " + std::to_string(d) + ", need 3");
    ReducedReport rr = is_reduced(lot);
    for (const std::string& v : rr.violations) out.push_back("not reduced: " + v);
    MinimalReport mr = is_minimal(lot);
    if (!mr.minimal) {
        std::vector<std::string> names;
        if (mr.witness)
            for (int w : mr.witness->vertices) names.push_back(lot.names[w]);
        out.push_back("not minimal: proper admissible part on {" + join(names, ", ") + "}");
    }
    if (auto pr = two_spanned(lot))
        out.push_back("spanned by {" + lot.names[pr->first] + ", " + lot.names[pr->second] +
                      "}");
    DerivedGraph gI = build_derived(lot, GraphKind::Initial);
    DerivedGraph gT = build_derived(lot, GraphKind::Terminal);
    if (gI.num_components < 2) out.push_back("initial graph is connected");
    if (gT.num_components < 2) out.push_back("terminal graph is connected");
    auto a = double_label(lot);
    if (!a) {
        out.push_back("no unique double label");
    } else if (d == 3) {
        auto [u, v] = diam3_internal(lot);
        int e0 = -1, f0 = -1;
        for (size_t k = 0; k < lot.edges.size(); ++k) {
            const Edge& e = lot.edges[k];
            if (e.label != *a) continue;
            if (in_pair(e.tau, u, v) && !in_pair(e.iota, u, v)) e0 = static_cast<int>(k);
            if (in_pair(e.iota, u, v) && !in_pair(e.tau, u, v)) f0 = static_cast<int>(k);
        }
        if (e0 < 0 || f0 < 0 || e0 == f0)
            out.push_back("the two edges labelled " + lot.names[*a] +
                          " do not split into extremal-initial and extremal-terminal");
    }
    return out;
}

Spine extract_spine(const Lot& lot) {
    Spine sp;
    auto [u, v] = diam3_internal(lot);
    sp.u = u;
    sp.v = v;
    auto a = double_label(lot);
    if (!a) throw DomainError("no unique double label");
    sp.a = *a;

    int m = static_cast<int>(lot.edges.size());
    for (int k = 0; k < m; ++k) {
        const Edge& e = lot.edges[k];
        if (in_pair(e.iota, u, v) && in_pair(e.tau, u, v)) sp.uv_edge = k;
        if (e.iota == sp.a || e.tau == sp.a) sp.a_tree_edge = k;
    }
    if (sp.uv_edge < 0 || sp.a_tree_edge < 0)
        throw InternalError("spine: missing uv edge or the edge at a");

    int e0 = -1, f0 = -1;
    for (int k = 0; k < m; ++k) {
        const Edge& e = lot.edges[k];
        if (e.label != sp.a) continue;
        if (in_pair(e.tau, u, v) && !in_pair(e.iota, u, v)) e0 = k;
        if (in_pair(e.iota, u, v) && !in_pair(e.tau, u, v)) f0 = k;
    }
    if (e0 < 0 || f0 < 0 || e0 == f0)
        throw DomainError("double-label edges lack the extremal split");

    std::map<int, int> edge_of_label;
    for (int k = 0; k < m; ++k) {
        const Edge& e = lot.edges[k];
        if (e.label == sp.a) continue;
        if (!edge_of_label.emplace(e.label, k).second)
            throw InternalError("spine: repeated non-double label");
    }

    auto build_chain = [&](int start, std::vector<int>& chain) {
        chain.push_back(start);
        while (chain.back() != sp.uv_edge && chain.back() != sp.a_tree_edge) {
            const Edge& e = lot.edges[chain.back()];
            int next_label;
            if (in_pair(e.iota, u, v))
                next_label = e.tau;
            else if (in_pair(e.tau, u, v))
                next_label = e.iota;
            else
                throw InternalError("spine: chain edge misses u and v");
            auto it = edge_of_label.find(next_label);
            if (it == edge_of_label.end())
                throw InternalError("spine: chain label has no edge");
            if (std::find(chain.begin(), chain.end(), it->second) != chain.end())
                throw InternalError("spine: chain revisits an edge");
            chain.push_back(it->second);
        }
    };
    build_chain(e0, sp.e);
    build_chain(f0, sp.f);
    sp.P = static_cast<int>(sp.e.size()) - 1;
    sp.Q = static_cast<int>(sp.f.size()) - 1;

    std::vector<int> all = sp.e;
    all.insert(all.end(), sp.f.begin(), sp.f.end());
    std::sort(all.begin(), all.end());
    for (int k = 0; k < m; ++k)
        if (all[static_cast<size_t>(k)] != k)
            throw InternalError("spine: chains do not partition the edges");

    sp.b.assign(static_cast<size_t>(sp.P) + 1, -1);
    sp.x.assign(static_cast<size_t>(sp.P) + 2, -1);
    for (int j = 1; j <= sp.P; ++j) {
        sp.b[static_cast<size_t>(j)] = lot.edges[static_cast<size_t>(sp.e[static_cast<size_t>(j)])].label;
        const Edge& prev = lot.edges[static_cast<size_t>(sp.e[static_cast<size_t>(j - 1)])];
        sp.x[static_cast<size_t>(j)] = in_pair(prev.iota, u, v) ? prev.iota : prev.tau;
        if (!in_pair(sp.x[static_cast<size_t>(j)], u, v))
            throw InternalError("spine: x value off {u,v}");
    }
    sp.x[static_cast<size_t>(sp.P) + 1] = lot.edges[static_cast<size_t>(sp.e[static_cast<size_t>(sp.P)])].iota;

    sp.c.assign(static_cast<size_t>(sp.Q) + 1, -1);
    sp.y.assign(static_cast<size_t>(sp.Q) + 2, -1);
    for (int j = 1; j <= sp.Q; ++j) {
        sp.c[static_cast<size_t>(j)] = lot.edges[static_cast<size_t>(sp.f[static_cast<size_t>(j)])].label;
        const Edge& prev = lot.edges[static_cast<size_t>(sp.f[static_cast<size_t>(j - 1)])];
        sp.y[static_cast<size_t>(j)] = in_pair(prev.iota, u, v) ? prev.iota : prev.tau;
        if (!in_pair(sp.y[static_cast<size_t>(j)], u, v))
            throw InternalError("spine: y value off {u,v}");
    }
    sp.y[static_cast<size_t>(sp.Q) + 1] = lot.edges[static_cast<size_t>(sp.f[static_cast<size_t>(sp.Q)])].iota;

    std::set<int> verts{sp.a, u, v};
    for (int j = 1; j <= sp.P; ++j) verts.insert(sp.b[static_cast<size_t>(j)]);
    for (int j = 1; j <= sp.Q; ++j) verts.insert(sp.c[static_cast<size_t>(j)]);
    if (static_cast<int>(verts.size()) != lot.n)
        throw InternalError("spine: names do not cover the vertices");

    for (int i = 1; i <= sp.P; ++i) {
        const Edge& prev = lot.edges[static_cast<size_t>(sp.e[static_cast<size_t>(i - 1)])];
        int bi = sp.b[static_cast<size_t>(i)];
        if (bi == prev.tau)
            sp.def_p.push_back(i);
        else if (bi == prev.iota)
            sp.def_pp.push_back(i);
        else
            throw InternalError("spine: b value is not an endpoint of its source edge");
    }
    for (int i = 1; i <= sp.Q; ++i) {
        const Edge& prev = lot.edges[static_cast<size_t>(sp.f[static_cast<size_t>(i - 1)])];
        int ci = sp.c[static_cast<size_t>(i)];
        if (ci == prev.iota)
            sp.def_q.push_back(i);
        else if (ci == prev.tau)
            sp.def_qp.push_back(i);
        else
            throw InternalError("spine: c value is not an endpoint of its source edge");
    }

    auto use_of = [](const std::vector<int>& def, int last) {
        std::set<int> s{last};
        for (int i : def)
            if (i >= 2) s.insert(i - 1);
        return std::vector<int>(s.begin(), s.end());
    };
    sp.use_p = use_of(sp.def_p, sp.P);
    sp.use_pp = use_of(sp.def_pp, sp.P);
    sp.use_q = use_of(sp.def_q, sp.Q);
    sp.use_qp = use_of(sp.def_qp, sp.Q);
    return sp;
}

const Word& Sequences::word(const RelatorSequence& seq, int i) {
    if (i == 0) return seq.seed;
    return seq.items[static_cast<size_t>(i - 1)].word;
}

Sequences generate_sequences(const DeriveContext& ctx) {
    Sequences s;
    s.S = generate_sequence(ctx, GraphKind::Initial);
    s.R = generate_sequence(ctx, GraphKind::Terminal);
    s.N = s.S.terminal_index;
    s.M = s.R.terminal_index;
    s.I_directed = ctx.I_directed;
    s.T_directed = ctx.T_directed;
    s.removed_arc_I = ctx.removed_arc_I;
    s.removed_arc_T = ctx.removed_arc_T;
    return s;
}

namespace {

// Index helpers over the sorted break sequences: value 0 at index 0.
std::optional<int> use_at(const std::vector<int>& use, int i) {
    if (i <= 0) return 0;
    if (i > static_cast<int>(use.size())) return std::nullopt;
    return use[static_cast<size_t>(i - 1)];
}

// Does some rotation of w factor as a U a^-1 V with U over okU, V over okV,
// and (when set) exactly one single-occurrence letter and no a in that part?
bool try_factor(const Word& w, int a, const std::set<int>& okU, const std::set<int>& okV,
                std::optional<int> singleV, std::optional<int> singleU) {
    int m = static_cast<int>(w.size());
    if (m == 0) return false;
    for (int kp = 0; kp < m; ++kp) {
        if (!(w[static_cast<size_t>(kp)] == Letter{a, 1})) continue;
        for (int km = 0; km < m; ++km) {
            if (!(w[static_cast<size_t>(km)] == Letter{a, -1})) continue;
            Word rot(w.begin() + kp, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + kp);
            int dm = ((km - kp) % m + m) % m;
            if (dm == 0) continue;
            Word U(rot.begin() + 1, rot.begin() + dm);
            Word V(rot.begin() + dm + 1, rot.end());
            auto inside = [](const Word& part, const std::set<int>& ok) {
                return std::all_of(part.begin(), part.end(),
                                   [&](const Letter& l) { return ok.count(l.sym) > 0; });
            };
            if (!inside(U, okU) || !inside(V, okV)) continue;
            if (singleV && (occurrences(V, *singleV) != 1 || occurrences(V, a) != 0)) continue;
            if (singleU && (occurrences(U, *singleU) != 1 || occurrences(U, a) != 0)) continue;
            return true;
        }
    }
    return false;
}

// Orientation of the tree edge at a: (a is its initial vertex, a is its
// terminal vertex).
std::pair<bool, bool> a_edge_passthru(const Lot& lot, const Spine& sp) {
    for (const Edge& e : lot.edges)
        if (e.label != sp.a && (e.iota == sp.a || e.tau == sp.a))
            return {e.iota == sp.a, e.tau == sp.a};
    throw InternalError("no tree edge at a");
}

// Rotations a U a^-1 V of the final lift with both parts one-signed in the
// stable edge letter and at most one a inside.
struct FinalSplit {
    bool found = false;
    Positivity pU = Positivity::Absent, pV = Positivity::Absent;
    int countU = 0, countV = 0;
};

FinalSplit final_split(const Word& w, int a, int letter) {
    int m = static_cast<int>(w.size());
    FinalSplit best;
    for (int kp = 0; kp < m && !best.found; ++kp) {
        if (!(w[static_cast<size_t>(kp)] == Letter{a, 1})) continue;
        for (int km = 0; km < m; ++km) {
            if (!(w[static_cast<size_t>(km)] == Letter{a, -1})) continue;
            Word rot(w.begin() + kp, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + kp);
            int dm = ((km - kp) % m + m) % m;
            if (dm == 0) continue;
            Word U(rot.begin() + 1, rot.begin() + dm);
            Word V(rot.begin() + dm + 1, rot.end());
            Positivity pU = positivity(U, letter), pV = positivity(V, letter);
            if (pU != Positivity::Mixed && pV != Positivity::Mixed &&
                occurrences(U, a) + occurrences(V, a) <= 1) {
                best.found = true;
                best.pU = pU;
                best.pV = pV;
                best.countU = occurrences(U, letter);
                best.countV = occurrences(V, letter);
                break;
            }
        }
    }
    return best;
}

void check_shape_family(const Lot& lot, const Spine& sp, const RelatorSequence& seq,
                        int terminal, bool forward, std::vector<CheckResult>& out) {
    const char* fam = forward ? "s" : "r";
    std::vector<std::string> shape_fails, member_fails, terminal_fails;
    bool exhausted = false;
    for (int i = 1; i <= terminal && !exhausted; ++i) {
        Word w = cyclic_reduce(Sequences::word(seq, i));
        std::optional<int> pi_opt, qpi_opt;
        if (forward) {
            pi_opt = use_at(sp.use_p, i);
            qpi_opt = use_at(sp.use_qp, i - 1);
        } else {
            pi_opt = use_at(sp.use_pp, i - 1);
            qpi_opt = use_at(sp.use_q, i);
        }
        if (!pi_opt || !qpi_opt) {
            shape_fails.push_back("i=" + std::to_string(i) + ": break sequence exhausted");
            exhausted = true;
            break;
        }
        int pi = *pi_opt, qpi = *qpi_opt;
        std::set<int> okU{sp.a, sp.u, sp.v}, okV{sp.a, sp.u, sp.v};
        for (int j = 1; j <= std::min(qpi + 1, sp.Q); ++j) okU.insert(sp.c[static_cast<size_t>(j)]);
        for (int j = 1; j <= std::min(pi + 1, sp.P); ++j) okV.insert(sp.b[static_cast<size_t>(j)]);
        std::optional<int> singleV, singleU;
        if (pi < sp.P) singleV = sp.b[static_cast<size_t>(pi + 1)];
        if (qpi < sp.Q) singleU = sp.c[static_cast<size_t>(qpi + 1)];
        bool ok = try_factor(w, sp.a, okU, okV, singleV, singleU);
        if (!ok && i == terminal) {
            auto [passI, passT] = a_edge_passthru(lot, sp);
            bool pass_side = forward ? passI : passT;
            ok = pass_side && occurrences(w, sp.a) <= 1;
        }
        if (!ok)
            shape_fails.push_back("i=" + std::to_string(i) + ": " + format_word(w, lot.names));

        if (pi < sp.P && qpi < sp.Q) {
            // letters must come from the walked part of the tree: the seed
            // family's chain from its 0th edge, the other chain from its 1st
            std::set<int> inner;
            int e_from = forward ? 0 : 1, f_from = forward ? 1 : 0;
            for (int j = e_from; j <= pi; ++j) {
                const Edge& e = lot.edges[static_cast<size_t>(sp.e[static_cast<size_t>(j)])];
                inner.insert({e.iota, e.tau, e.label});
            }
            for (int j = f_from; j <= qpi; ++j) {
                const Edge& e = lot.edges[static_cast<size_t>(sp.f[static_cast<size_t>(j)])];
                inner.insert({e.iota, e.tau, e.label});
            }
            std::set<int> excl{sp.b[static_cast<size_t>(pi + 1)], sp.c[static_cast<size_t>(qpi + 1)]};
            for (const Letter& l : w)
                if (excl.count(l.sym) == 0 && inner.count(l.sym) == 0) {
                    member_fails.push_back("i=" + std::to_string(i) + ": letter " +
                                           lot.names[static_cast<size_t>(l.sym)]);
                    break;
                }
        }
        if ((pi == sp.P || qpi == sp.Q) && i != terminal)
            terminal_fails.push_back("i=" + std::to_string(i));
    }
    out.push_back({std::string(fam) + "-shape", shape_fails.empty(), join(shape_fails, "; ")});
    out.push_back(
        {std::string(fam) + "-membership", member_fails.empty(), join(member_fails, "; ")});
    out.push_back({std::string(fam) + "-terminal-only-final", terminal_fails.empty(),
                   join(terminal_fails, "; ")});
}

void check_direct_family(const Lot& lot, const Spine& sp, const RelatorSequence& seq,
                         int terminal, bool forward, std::vector<CheckResult>& out) {
    const char* fam = forward ? "s" : "r";
    int sym = forward ? kSymX : kSymY;
    out.push_back({std::string(fam) + "-direct-terminates-immediately", terminal == 1,
                   "terminal index " + std::to_string(terminal)});
    const LiftResult& fin = seq.items.back().lift;
    Positivity p = positivity(fin.lifted, sym);
    out.push_back({std::string(fam) + "-direct-one-signed",
                   p == Positivity::StrictlyPositive || p == Positivity::StrictlyNegative,
                   positivity_name(p)});
    bool other_used = forward ? fin.uses_Y : fin.uses_X;
    out.push_back({std::string(fam) + "-direct-no-other-edge", !other_used,
                   other_used ? format_word(fin.lifted, lot.names) : ""});

    const Word& w1 = Sequences::word(seq, 1);
    std::vector<int> letters{sp.a};
    int len = forward ? sp.P : sp.Q;
    const std::vector<int>& chain = forward ? sp.b : sp.c;
    const std::vector<int>& other = forward ? sp.c : sp.b;
    int other_len = forward ? sp.Q : sp.P;
    for (int j = 1; j <= len; ++j) letters.push_back(chain[static_cast<size_t>(j)]);
    std::vector<std::string> inv_fails;
    for (int l : letters)
        if (occurrences(w1, l) != 1)
            inv_fails.push_back(lot.names[static_cast<size_t>(l)] + " occurs " +
                                std::to_string(occurrences(w1, l)) + " times");
    for (int j = 1; j <= other_len; ++j)
        if (occurrences(w1, other[static_cast<size_t>(j)]) != 0)
            inv_fails.push_back(lot.names[static_cast<size_t>(other[static_cast<size_t>(j)])] +
                                " from the other chain appears");
    out.push_back({std::string(fam) + "-direct-letter-inventory", inv_fails.empty(),
                   join(inv_fails, "; ")});

    std::vector<std::string> ext_fails;
    for (int l : letters) {
        int deg = lot.degree(l);
        int as_iota = 0, as_tau = 0;
        for (const Edge& e : lot.edges) {
            if (e.iota == l) ++as_iota;
            if (e.tau == l) ++as_tau;
        }
        bool ok = forward ? (deg == 1 && as_iota > 0 && as_tau == 0)
                          : (deg == 1 && as_iota == 0 && as_tau > 0);
        if (!ok) ext_fails.push_back(lot.names[static_cast<size_t>(l)]);
    }
    out.push_back({std::string(fam) + (forward ? "-direct-extremal-sources"
                                               : "-direct-extremal-sinks"),
                   ext_fails.empty(), join(ext_fails, "; ")});
}

void check_final_split(const Lot& lot, const Spine& sp, const RelatorSequence& seq, bool forward,
                       std::vector<CheckResult>& out) {
    const char* fam = forward ? "s" : "r";
    const Word& w = seq.items.back().lift.lifted;
    int sym = forward ? kSymX : kSymY;
    bool ok = final_split(w, sp.a, sym).found;
    if (!ok) {
        auto [passI, passT] = a_edge_passthru(lot, sp);
        ok = (forward ? passI : passT) && occurrences(w, sp.a) <= 1;
    }
    out.push_back({std::string(fam) + "-final-split", ok,
                   ok ? "" : format_word(w, lot.names)});
}

// On split finals: zero exponent-sum in the edge letter iff the two parts
// are strictly one-signed in opposite directions with equal counts.
void check_balanced_split(const Lot& lot, const Spine& sp, const RelatorSequence& seq,
                          bool forward, std::vector<CheckResult>& out) {
    const char* fam = forward ? "s" : "r";
    const Word& w = seq.items.back().lift.lifted;
    int sym = forward ? kSymX : kSymY;
    FinalSplit fs = final_split(w, sp.a, sym);
    std::string name = std::string(fam) + "-split-balance";
    if (!fs.found) {
        out.push_back({name, true, "no split form"});
        return;
    }
    bool opposite = (fs.pU == Positivity::StrictlyPositive &&
                     fs.pV == Positivity::StrictlyNegative) ||
                    (fs.pU == Positivity::StrictlyNegative &&
                     fs.pV == Positivity::StrictlyPositive);
    bool balanced = opposite && fs.countU == fs.countV;
    bool ok = (exponent_sum(w, sym) == 0) == balanced;
    out.push_back({name, ok,
                   ok ? "" : format_word(w, lot.names)});
}

void check_family_invariants(const Lot& lot, const RelatorSequence& seq, bool forward,
                             std::vector<CheckResult>& out) {
    const char* fam = forward ? "s" : "r";
    std::vector<std::string> seed_fails, alt_fails, cert_fails, lift_fails;
    for (int t = 0; t < lot.n; ++t)
        if (exponent_sum(seq.seed, t) != 0)
            seed_fails.push_back(lot.names[static_cast<size_t>(t)]);
    for (int i = 0; i <= seq.terminal_index; ++i)
        if (!is_alternating(Sequences::word(seq, i))) alt_fails.push_back("i=" + std::to_string(i));
    for (int i = 1; i <= seq.terminal_index; ++i) {
        std::string why;
        if (!verify_certificate(lot, Sequences::word(seq, i - 1),
                                seq.items[static_cast<size_t>(i - 1)].cert,
                                Sequences::word(seq, i), &why))
            cert_fails.push_back("i=" + std::to_string(i) + ": " + why);
    }
    for (int i = 1; i <= seq.terminal_index; ++i) {
        const LiftResult& lr = seq.items[static_cast<size_t>(i - 1)].lift;
        bool lifts = !lr.uses_X && !lr.uses_Y;
        if (lifts != (i < seq.terminal_index))
            lift_fails.push_back("i=" + std::to_string(i));
    }
    const LiftResult& fin = seq.items.back().lift;
    Word stripped;
    for (const Letter& l : fin.lifted)
        if (l.sym >= 0) stripped.push_back(l);
    if (stripped != Sequences::word(seq, seq.terminal_index))
        lift_fails.push_back("deletion does not recover the final word");
    out.push_back(
        {std::string(fam) + "-seed-balanced", seed_fails.empty(), join(seed_fails, "; ")});
    out.push_back({std::string(fam) + "-alternating", alt_fails.empty(), join(alt_fails, "; ")});
    out.push_back(
        {std::string(fam) + "-certificates", cert_fails.empty(), join(cert_fails, "; ")});
    out.push_back({std::string(fam) + "-lift-boundary", lift_fails.empty() && seq.stopped_by_lift,
                   join(lift_fails, "; ")});
}

}  // namespace

std::vector<CheckResult> verify_structure(const Lot& lot, const Spine& sp,
                                          const DeriveContext& ctx, const Sequences& seqs) {
    std::vector<CheckResult> out;
    out.push_back({"sequence-bounds",
                   seqs.M >= 1 && seqs.N >= 1 && seqs.M + seqs.N < lot.n,
                   "M=" + std::to_string(seqs.M) + " N=" + std::to_string(seqs.N)});
    const LiftResult& sfin = seqs.S.items.back().lift;
    const LiftResult& rfin = seqs.R.items.back().lift;
    out.push_back({"s-final-x-only", sfin.uses_X && !sfin.uses_Y,
                   format_word(sfin.lifted, lot.names)});
    out.push_back({"r-final-y-only", rfin.uses_Y && !rfin.uses_X,
                   format_word(rfin.lifted, lot.names)});

    check_family_invariants(lot, seqs.S, true, out);
    check_family_invariants(lot, seqs.R, false, out);

    if (seqs.I_directed)
        check_direct_family(lot, sp, seqs.S, seqs.N, true, out);
    else {
        check_shape_family(lot, sp, seqs.S, seqs.N, true, out);
        check_final_split(lot, sp, seqs.S, true, out);
    }
    if (seqs.T_directed)
        check_direct_family(lot, sp, seqs.R, seqs.M, false, out);
    else {
        check_shape_family(lot, sp, seqs.R, seqs.M, false, out);
        check_final_split(lot, sp, seqs.R, false, out);
    }
    check_balanced_split(lot, sp, seqs.S, true, out);
    check_balanced_split(lot, sp, seqs.R, false, out);
    return out;
}

FreenessWitness freeness_witness(const Lot& lot, const Spine& sp, const DeriveContext& ctx,
                                 const Sequences& seqs) {
    FreenessWitness fw;
    fw.rank = lot.n - seqs.M - seqs.N - 1;
    std::vector<int> blist;
    bool exhausted = false;
    for (int k = 1; k <= seqs.N - 1; ++k) {
        auto vv = use_at(sp.use_p, k);
        if (!vv) exhausted = true;
        else blist.push_back(*vv + 1);
    }
    for (int k = 0; k <= seqs.M - 2; ++k) {
        auto vv = use_at(sp.use_pp, k);
        if (!vv) exhausted = true;
        else blist.push_back(*vv + 1);
    }
    std::set<int> bset(blist.begin(), blist.end());
    fw.B.assign(bset.begin(), bset.end());

    fw.checks.push_back({"free-break-distinct",
                         !exhausted && bset.size() == blist.size(),
                         "indices " + [&] {
                             std::vector<std::string> parts;
                             for (int j : blist) parts.push_back(std::to_string(j));
                             return join(parts, ",");
                         }()});
    fw.checks.push_back({"free-break-count",
                         static_cast<int>(bset.size()) == seqs.M + seqs.N - 2,
                         std::to_string(bset.size()) + " of " +
                             std::to_string(seqs.M + seqs.N - 2)});
    fw.checks.push_back({"free-break-range",
                         std::all_of(bset.begin(), bset.end(),
                                     [&](int j) { return j >= 1 && j <= sp.P; }),
                         ""});

    struct Interior {
        char fam;
        int i;
        const Word* w;
    };
    std::vector<Interior> interior;
    for (int i = 1; i < seqs.N; ++i) interior.push_back({'S', i, &Sequences::word(seqs.S, i)});
    for (int i = 1; i < seqs.M; ++i) interior.push_back({'R', i, &Sequences::word(seqs.R, i)});

    std::vector<std::string> wit_fails;
    for (int j : fw.B) {
        int holders = 0;
        int occ_at_holder = -1;
        for (const Interior& rel : interior) {
            int max_idx = 0;
            for (int jj = 1; jj <= sp.P; ++jj)
                if (occurrences(*rel.w, sp.b[static_cast<size_t>(jj)]) > 0) max_idx = jj;
            if (max_idx == j) {
                ++holders;
                occ_at_holder = occurrences(*rel.w, sp.b[static_cast<size_t>(j)]);
            }
        }
        if (holders != 1 || occ_at_holder != 1)
            wit_fails.push_back("j=" + std::to_string(j) + " holders=" +
                                std::to_string(holders));
    }
    fw.checks.push_back({"free-break-witness", wit_fails.empty(), join(wit_fails, "; ")});

    std::vector<std::string> aexp_fails;
    for (const Interior& rel : interior)
        if (exponent_sum(*rel.w, sp.a) != 0)
            aexp_fails.push_back(std::string(1, rel.fam) + std::to_string(rel.i));
    fw.checks.push_back(
        {"free-interior-a-balance", aexp_fails.empty(), join(aexp_fails, "; ")});

    // connectivity of the cover with the break-name edges removed
    std::set<int> removed;
    for (int j : fw.B) removed.insert(sp.b[static_cast<size_t>(j)]);
    std::vector<int> comp{0, 1, 2, 3};
    std::function<int(int)> find = [&](int x) {
        while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)] =
                                                      comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
        return x;
    };
    for (int t = 0; t < lot.n; ++t) {
        if (removed.count(t)) continue;
        int p = ctx.sides.initial[static_cast<size_t>(t)];
        int q = 2 + ctx.sides.terminal[static_cast<size_t>(t)];
        comp[static_cast<size_t>(find(p))] = find(q);
    }
    bool connected = find(0) == find(1) && find(1) == find(2) && find(2) == find(3);
    fw.checks.push_back({"free-cover-connectivity", connected, ""});

    fw.pass = std::all_of(fw.checks.begin(), fw.checks.end(),
                          [](const CheckResult& c) { return c.pass; });
    return fw;
}

namespace {

Word edge_expression(const Word& input, const DerivedGraph& g, const MaximalForest& forest,
                     int sign, const SeedPlan* plan) {
    Word w = plan ? input : rotate_to_sign(input, sign);
    Word out;
    for (size_t bi = 0; bi < w.size() / 2; ++bi) {
        const Letter& gx = w[2 * bi];
        const Letter& hx = w[2 * bi + 1];
        if (gx.sign != sign || hx.sign != -sign)
            throw InternalError("edge expression: block sign pattern broken");
        std::vector<GeodesicStep> steps;
        if (plan)
            steps.push_back((*plan)[bi]);
        else if (gx.sym == hx.sym)
            continue;
        else
            steps = geodesic(g, forest, gx.sym, hx.sym);
        for (const GeodesicStep& st : steps)
            out.push_back({g.arcs[static_cast<size_t>(st.arc)].edge, -st.dir});
    }
    return out;
}

Word expand_edges(const Word& tw, const Lot& lot, bool to_phi) {
    Word out;
    for (const Letter& l : tw) {
        const Edge& e = lot.edges[static_cast<size_t>(l.sym)];
        if (to_phi) {
            if (l.sign > 0) {
                out.push_back({e.label, -1});
                out.push_back({e.iota, 1});
            } else {
                out.push_back({e.iota, -1});
                out.push_back({e.label, 1});
            }
        } else {
            if (l.sign > 0) {
                out.push_back({e.tau, 1});
                out.push_back({e.label, -1});
            } else {
                out.push_back({e.label, 1});
                out.push_back({e.tau, -1});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CheckResult> psi_checks(const Lot& lot, const DeriveContext& ctx,
                                    const Sequences& seqs) {
    std::vector<CheckResult> out;
    SeedPlan planS = seed_word(ctx.Icyc, GraphKind::Initial).plan;
    SeedPlan planR = seed_word(ctx.Tcyc, GraphKind::Terminal).plan;

    std::vector<std::string> rt_fails, rb_fails, st_fails, sb_fails;
    for (int i = 0; i < seqs.M; ++i) {
        Word tw = edge_expression(Sequences::word(seqs.R, i), ctx.T, ctx.forestT, 1,
                                  i == 0 ? &planR : nullptr);
        Word img = expand_edges(tw, lot, true);
        if (!cyclic_equal(img, Sequences::word(seqs.R, i + 1)))
            rt_fails.push_back("i=" + std::to_string(i));
        Word back = expand_edges(tw, lot, false);
        if (!cyclic_equal(back, Sequences::word(seqs.R, i)))
            rb_fails.push_back("i=" + std::to_string(i));
    }
    for (int j = 0; j < seqs.N; ++j) {
        Word pw = edge_expression(Sequences::word(seqs.S, j), ctx.I, ctx.forestI, -1,
                                  j == 0 ? &planS : nullptr);
        Word img = expand_edges(pw, lot, false);
        if (!cyclic_equal(img, Sequences::word(seqs.S, j + 1)))
            st_fails.push_back("j=" + std::to_string(j));
        Word back = expand_edges(pw, lot, true);
        if (!cyclic_equal(back, Sequences::word(seqs.S, j)))
            sb_fails.push_back("j=" + std::to_string(j));
    }
    out.push_back({"transport-backward", rt_fails.empty(), join(rt_fails, "; ")});
    out.push_back({"transport-backward-roundtrip", rb_fails.empty(), join(rb_fails, "; ")});
    out.push_back({"transport-forward", st_fails.empty(), join(st_fails, "; ")});
    out.push_back({"transport-forward-roundtrip", sb_fails.empty(), join(sb_fails, "; ")});
    return out;
}

HatRewriter::HatRewriter(const Lot& lot, const CoverSides& sides) : lot_(&lot), sides_(sides) {
    auto [u, v] = diam3_internal(lot);
    u_ = u;
    v_ = v;
    for (const Edge& e : lot.edges)
        if (in_pair(e.iota, u, v) && in_pair(e.tau, u, v)) w_ = e.label;
    if (w_ < 0) throw InternalError("cover rewriter: no uv edge");
    if (sides_.initial[static_cast<size_t>(w_)] == sides_.terminal[static_cast<size_t>(w_)])
        throw InternalError("cover rewriter: tree edges do not span");
    for (int t = 0; t < lot.n; ++t)
        if (t != u_ && t != v_ && t != w_) basis_.push_back(t);
    basis_.push_back(kSymX);
    basis_.push_back(kSymY);
}

namespace {

// cover vertices: 0=(0,u) 1=(0,v) 2=(1,u) 3=(1,v)
std::pair<int, int> edge_ends(const CoverSides& sides, int sym) {
    if (sym == kSymX) return {0, 1};
    if (sym == kSymY) return {2, 3};
    return {sides.initial[static_cast<size_t>(sym)], 2 + sides.terminal[static_cast<size_t>(sym)]};
}

}  // namespace

int HatRewriter::endpoint0(const Letter& l) const {
    auto [p, q] = edge_ends(sides_, l.sym);
    return l.sign > 0 ? p : q;
}

int HatRewriter::endpoint1(const Letter& l) const {
    auto [p, q] = edge_ends(sides_, l.sym);
    return l.sign > 0 ? q : p;
}

Word HatRewriter::tree_path(int from, int to) const {
    if (from == to) return {};
    struct Prev {
        int vertex = -1;
        Letter letter{};
    };
    std::vector<Prev> prev(4);
    std::vector<bool> seen(4, false);
    seen[static_cast<size_t>(from)] = true;
    std::vector<int> queue{from};
    const int tree[3] = {u_, v_, w_};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int sym : tree) {
            auto [p, q] = edge_ends(sides_, sym);
            for (int sgn : {1, -1}) {
                int s = sgn > 0 ? p : q, d = sgn > 0 ? q : p;
                if (s != x || seen[static_cast<size_t>(d)]) continue;
                seen[static_cast<size_t>(d)] = true;
                prev[static_cast<size_t>(d)] = {x, Letter{sym, sgn}};
                queue.push_back(d);
            }
        }
    }
    if (!seen[static_cast<size_t>(to)]) throw InternalError("cover tree is not connected");
    Word path;
    for (int cur = to; cur != from; cur = prev[static_cast<size_t>(cur)].vertex)
        path.push_back(prev[static_cast<size_t>(cur)].letter);
    std::reverse(path.begin(), path.end());
    return path;
}

Word HatRewriter::loop_of(int sym) const {
    auto [p, q] = edge_ends(sides_, sym);
    Word out = tree_path(0, p);
    out.push_back({sym, 1});
    Word back = tree_path(q, 0);
    out.insert(out.end(), back.begin(), back.end());
    return out;
}

Word HatRewriter::rewrite(const Word& lifted) const {
    if (lifted.empty()) return {};
    int start = endpoint0(lifted.front());
    int cur = start;
    Word out;
    for (const Letter& l : lifted) {
        if (endpoint0(l) != cur) throw InternalError("lifted path is discontinuous");
        cur = endpoint1(l);
        if (l.sym != u_ && l.sym != v_ && l.sym != w_) out.push_back(l);
    }
    if (cur != start) throw InternalError("lifted path is not closed");
    return out;
}

Word HatRewriter::expand(const Word& basis_word) const {
    Word out;
    for (const Letter& l : basis_word) {
        Word loop = loop_of(l.sym);
        if (l.sign < 0) loop = inverse(loop);
        out.insert(out.end(), loop.begin(), loop.end());
    }
    return free_reduce(out);
}

GroupPresentations build_presentations(const Lot& lot, const Spine& sp,
                                       const DeriveContext& ctx, const Sequences& seqs) {
    (void)sp;
    GroupPresentations gp;
    HatRewriter hr(lot, ctx.sides);
    gp.tree_w = hr.tree_w();
    for (int sym : hr.basis()) gp.basis_loops.push_back({sym, hr.loop_of(sym)});

    std::vector<int> vertex_gens(hr.basis().begin(), hr.basis().end() - 2);
    std::vector<std::pair<std::string, Word>> interior;
    std::vector<std::string> round_fails;
    auto add = [&](std::vector<std::pair<std::string, Word>>& dst, const std::string& name,
                   const Word& lifted_word) {
        Word rewritten = hr.rewrite(lifted_word);
        if (!cyclic_equal(hr.expand(rewritten), lifted_word))
            round_fails.push_back(name);
        dst.push_back({name, rewritten});
    };
    for (int i = 1; i < seqs.M; ++i)
        add(interior, "R" + std::to_string(i), Sequences::word(seqs.R, i));
    for (int j = 1; j < seqs.N; ++j)
        add(interior, "S" + std::to_string(j), Sequences::word(seqs.S, j));

    gp.g0.generator_syms = vertex_gens;
    gp.g0.relators = interior;

    gp.gplus.generator_syms = vertex_gens;
    gp.gplus.generator_syms.push_back(kSymX);
    gp.gplus.relators = interior;
    add(gp.gplus.relators, "S" + std::to_string(seqs.N), seqs.S.items.back().lift.lifted);

    gp.gminus.generator_syms = vertex_gens;
    gp.gminus.generator_syms.push_back(kSymY);
    gp.gminus.relators = interior;
    add(gp.gminus.relators, "R" + std::to_string(seqs.M), seqs.R.items.back().lift.lifted);

    gp.g1.generator_syms = vertex_gens;
    gp.g1.generator_syms.push_back(kSymX);
    gp.g1.generator_syms.push_back(kSymY);
    gp.g1.relators = interior;
    gp.g1.relators.push_back(gp.gminus.relators.back());
    gp.g1.relators.push_back(gp.gplus.relators.back());

    std::vector<std::string> xy_fails;
    for (const auto& [name, w] : gp.g0.relators)
        if (occurrences(w, kSymX) || occurrences(w, kSymY)) xy_fails.push_back(name);
    const Word& sn = gp.gplus.relators.back().second;
    if (occurrences(sn, kSymX) == 0 || occurrences(sn, kSymY) != 0)
        xy_fails.push_back(gp.gplus.relators.back().first);
    const Word& rm = gp.gminus.relators.back().second;
    if (occurrences(rm, kSymY) == 0 || occurrences(rm, kSymX) != 0)
        xy_fails.push_back(gp.gminus.relators.back().first);

    gp.checks.push_back({"basis-roundtrip", round_fails.empty(), join(round_fails, "; ")});
    gp.checks.push_back({"basis-edge-usage", xy_fails.empty(), join(xy_fails, "; ")});
    gp.checks.push_back({"basis-rank",
                         static_cast<int>(vertex_gens.size()) == lot.n - 3,
                         std::to_string(vertex_gens.size())});
    return gp;
}

HnnReport assemble(const Lot& lot) {
    std::vector<std::string> fails = check_core_hypotheses(lot);
    if (!fails.empty()) throw DomainError("pipeline hypotheses fail: " + join(fails, "; "));
    HnnReport rep;
    rep.spine = extract_spine(lot);
    DeriveContext ctx = make_derive_context(lot, rep.spine.e[0], rep.spine.f[0]);
    rep.seqs = generate_sequences(ctx);
    rep.checks = verify_structure(lot, rep.spine, ctx, rep.seqs);
    std::vector<CheckResult> psi = psi_checks(lot, ctx, rep.seqs);
    rep.checks.insert(rep.checks.end(), psi.begin(), psi.end());
    rep.freeness = freeness_witness(lot, rep.spine, ctx, rep.seqs);
    rep.groups = build_presentations(lot, rep.spine, ctx, rep.seqs);
    rep.all_pass = rep.freeness.pass &&
                   std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const CheckResult& c) { return c.pass; }) &&
                   std::all_of(rep.groups.checks.begin(), rep.groups.checks.end(),
                               [](const CheckResult& c) { return c.pass; });
    return rep;
}

}  // namespace lot
