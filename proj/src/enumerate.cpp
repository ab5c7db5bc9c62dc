#include "lot/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "lot/conjecture.hpp"
#include "lot/decompose.hpp"
#include "lot/derived.hpp"
#include "lot/hnn.hpp"

namespace lot {

CanonKey canon_form(const Lot& lot) {
    std::vector<int> perm(static_cast<size_t>(lot.n));
    std::iota(perm.begin(), perm.end(), 0);
    CanonKey best;
    bool have = false;
    CanonKey key(lot.edges.size());
    do {
        for (size_t k = 0; k < lot.edges.size(); ++k) {
            const Edge& e = lot.edges[k];
            key[k] = {perm[static_cast<size_t>(e.iota)], perm[static_cast<size_t>(e.tau)],
                      perm[static_cast<size_t>(e.label)]};
        }
        std::sort(key.begin(), key.end());
        if (!have || key < best) {
            best = key;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<std::vector<std::pair<int, int>>> prufer_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n < 1) throw DomainError("prufer_trees: need at least one vertex");
    if (n == 1) return {{}};
    if (n == 2) return {{{0, 1}}};
    std::vector<int> seq(static_cast<size_t>(n - 2), 0);
    for (;;) {
        std::vector<int> deg(static_cast<size_t>(n), 1);
        for (int s : seq) ++deg[static_cast<size_t>(s)];
        std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] == 1) leaves.push(v);
        std::vector<std::pair<int, int>> edges;
        for (int s : seq) {
            int l = leaves.top();
            leaves.pop();
            edges.push_back({std::min(l, s), std::max(l, s)});
            if (--deg[static_cast<size_t>(s)] == 1) leaves.push(s);
        }
        int p = leaves.top();
        leaves.pop();
        int q = leaves.top();
        edges.push_back({std::min(p, q), std::max(p, q)});
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));
        int k = n - 3;
        while (k >= 0 && seq[static_cast<size_t>(k)] == n - 1) seq[static_cast<size_t>(k--)] = 0;
        if (k < 0) break;
        ++seq[static_cast<size_t>(k)];
    }
    return out;
}

namespace {

bool core_props(const Lot& l) {
    return diameter(l) == 3 && is_reduced(l).reduced &&
           build_derived(l, GraphKind::Initial).num_components >= 2 &&
           build_derived(l, GraphKind::Terminal).num_components >= 2 &&
           is_minimal(l).minimal && !two_spanned(l);
}

struct Filters {
    bool reduced = false, minimal = false, core = false;
    bool i_disc = false, t_disc = false, not2 = false;
    std::optional<int> diam;
};

Filters parse_filters(const std::vector<std::string>& names) {
    Filters f;
    for (const std::string& s : names) {
        if (s == "reduced") f.reduced = true;
        else if (s == "minimal") f.minimal = true;
        else if (s == "core-hypotheses") f.core = true;
        else if (s == "I-disconnected") f.i_disc = true;
        else if (s == "T-disconnected") f.t_disc = true;
        else if (s == "not-2-spanned") f.not2 = true;
        else if (s.rfind("diameter=", 0) == 0) {
            try {
                f.diam = std::stoi(s.substr(9));
            } catch (const std::exception&) {
                throw DomainError("bad diameter filter: " + s);
            }
        } else {
            throw DomainError("unknown filter: " + s);
        }
    }
    return f;
}

bool passes(const Lot& l, const Filters& f) {
    if (f.diam && diameter(l) != *f.diam) return false;
    if (f.reduced && !is_reduced(l).reduced) return false;
    if (f.i_disc && build_derived(l, GraphKind::Initial).num_components < 2) return false;
    if (f.t_disc && build_derived(l, GraphKind::Terminal).num_components < 2) return false;
    if (f.minimal && !is_minimal(l).minimal) return false;
    if (f.not2 && two_spanned(l)) return false;
    if (f.core && !core_props(l)) return false;
    return true;
}

}  // namespace

void enumerate_lots(const EnumerationSpec& spec,
                    const std::function<void(const Lot&)>& visit) {
    if (spec.max_vertices < 1 || spec.max_vertices > 7)
        throw DomainError("enumerate: max_vertices must be between 1 and 7");
    Filters f = parse_filters(spec.filters);
    std::set<CanonKey> seen;
    for (int n = 1; n <= spec.max_vertices; ++n) {
        for (const auto& tree : prufer_trees(n)) {
            std::vector<Edge> edges;
            for (auto [a, b] : tree) edges.push_back({a, b, 0});
            Lot skeleton = make_lot(n, edges);
            if (f.diam && diameter(skeleton) != *f.diam) continue;
            size_t m = edges.size();
            std::vector<int> lam(m, 0);
            for (;;) {
                for (size_t k = 0; k < m; ++k) edges[k].label = lam[k];
                Lot l = make_lot(n, edges);
                if (passes(l, f) && (!spec.dedupe || seen.insert(canon_form(l)).second))
                    visit(l);
                size_t k = m;
                while (k > 0 && lam[k - 1] == n - 1) lam[--k] = 0;
                if (k == 0) break;
                ++lam[k - 1];
            }
        }
    }
}

namespace {

struct CheckDef {
    std::string name;
    bool (*applicable)(const Lot&);
    bool (*run)(const Lot&, std::string&);
};

bool lemma_gate(const Lot& l) {
    return diameter(l) == 3 && is_reduced(l).reduced && is_minimal(l).minimal &&
           double_label(l).has_value();
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return out;
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"lemma-initial", lemma_gate,
         [](const Lot& l, std::string& detail) {
             auto [u, v] = diam3_internal(l);
             std::vector<std::string> bad = check_lemma_initial(l, u, v, *double_label(l));
             detail = join(bad);
             return bad.empty();
         }},
        {"lemma-terminal", lemma_gate,
         [](const Lot& l, std::string& detail) {
             auto [u, v] = diam3_internal(l);
             std::vector<std::string> bad = check_lemma_terminal(l, u, v, *double_label(l));
             detail = join(bad);
             return bad.empty();
         }},
        {"corollary-directed-pair",
         [](const Lot& l) {
             return lemma_gate(l) &&
                    build_derived(l, GraphKind::Initial).num_components == 2 &&
                    build_derived(l, GraphKind::Terminal).num_components == 2;
         },
         [](const Lot& l, std::string& detail) {
             bool di = unique_cycle(build_derived(l, GraphKind::Initial)).is_directed;
             bool dt = unique_cycle(build_derived(l, GraphKind::Terminal)).is_directed;
             if (di && dt) detail = "both derived cycles are directed";
             return !(di && dt);
         }},
        {"minimality-oracle", [](const Lot&) { return true; },
         [](const Lot& l, std::string& detail) {
             bool fast = is_minimal(l).minimal;
             bool brute = is_minimal_brute(l);
             if (fast != brute)
                 detail = std::string("edge-closure says ") + (fast ? "minimal" : "non-minimal") +
                          ", subset enumeration disagrees";
             return fast == brute;
         }},
        {"classification-totality", [](const Lot& l) { return diameter(l) <= 3; },
         [](const Lot& l, std::string& detail) {
             try {
                 DecompositionReport rep = classify(l);
                 if (!is_minimal(l).minimal && rep.chain.empty()) {
                     detail = "non-minimal input produced an empty chain";
                     return false;
                 }
                 return true;
             } catch (const std::exception& e) {
                 detail = e.what();
                 return false;
             }
         }},
        {"core-pipeline", core_props,
         [](const Lot& l, std::string& detail) {
             try {
                 HnnReport rep = assemble(l);
                 if (rep.all_pass) return true;
                 std::vector<std::string> bad;
                 for (const CheckResult& c : rep.checks)
                     if (!c.pass) bad.push_back(c.name);
                 for (const CheckResult& c : rep.freeness.checks)
                     if (!c.pass) bad.push_back(c.name);
                 for (const CheckResult& c : rep.groups.checks)
                     if (!c.pass) bad.push_back(c.name);
                 detail = join(bad);
                 return false;
             } catch (const DomainError& e) {
                 detail = e.what();
                 return false;
             }
         }},
        {"explorer-consistency", core_props,
         [](const Lot& l, std::string& detail) {
             HnnReport rep = assemble(l);
             ConjectureDataset ds = explore(l, l.n);
             if (ds.initial_families.size() != 1 || ds.terminal_families.size() != 1) {
                 detail = "expected one cycle per derived graph";
                 return false;
             }
             const CycleFamily& fi = ds.initial_families.front();
             const CycleFamily& ft = ds.terminal_families.front();
             if (fi.relators.size() != static_cast<size_t>(rep.seqs.N) + 1 ||
                 ft.relators.size() != static_cast<size_t>(rep.seqs.M) + 1 ||
                 fi.termination != "lift-failure" || ft.termination != "lift-failure") {
                 detail = "family shape differs from the pipeline sequences";
                 return false;
             }
             for (int i = 0; i <= rep.seqs.N; ++i) {
                 const Word& w = Sequences::word(rep.seqs.S, i);
                 if (!cyclic_equal(fi.relators[static_cast<size_t>(i)], w)) {
                     detail = "forward relator " + std::to_string(i) + " differs: " +
                              format_word(fi.relators[static_cast<size_t>(i)], l.names) +
                              " vs " + format_word(w, l.names);
                     return false;
                 }
             }
             for (int i = 0; i <= rep.seqs.M; ++i) {
                 const Word& w = Sequences::word(rep.seqs.R, i);
                 if (!cyclic_equal(ft.relators[static_cast<size_t>(i)], w)) {
                     detail = "backward relator " + std::to_string(i) + " differs: " +
                              format_word(ft.relators[static_cast<size_t>(i)], l.names) +
                              " vs " + format_word(w, l.names);
                     return false;
                 }
             }
             return true;
         }},
    };
    return defs;
}

}  // namespace

std::vector<std::string> standard_checks() {
    std::vector<std::string> names;
    for (const CheckDef& d : registry()) names.push_back(d.name);
    return names;
}

SuiteSummary run_property_suite(const EnumerationSpec& spec, std::vector<std::string> checks) {
    if (checks.empty()) checks = standard_checks();
    std::vector<const CheckDef*> selected;
    for (const std::string& name : checks) {
        const CheckDef* found = nullptr;
        for (const CheckDef& d : registry())
            if (d.name == name) found = &d;
        if (!found) throw DomainError("unknown check: " + name);
        selected.push_back(found);
    }
    SuiteSummary summary;
    summary.visited.assign(static_cast<size_t>(spec.max_vertices) + 1, 0);
    for (const CheckDef* d : selected) summary.checks.push_back({d->name, 0, 0, "", ""});
    enumerate_lots(spec, [&](const Lot& l) {
        ++summary.visited[static_cast<size_t>(l.n)];
        ++summary.total;
        for (size_t i = 0; i < selected.size(); ++i) {
            if (!selected[i]->applicable(l)) continue;
            CheckSummary& cs = summary.checks[i];
            ++cs.applicable;
            std::string detail;
            if (selected[i]->run(l, detail)) {
                ++cs.passed;
            } else if (cs.first_counterexample.empty()) {
                cs.first_counterexample = serialize(l);
                cs.detail = detail;
            }
        }
    });
    for (const CheckSummary& cs : summary.checks)
        if (cs.passed != cs.applicable) summary.all_pass = false;
    return summary;
}

std::optional<Lot> find_first_core(int n) {
    if (n < 1) throw DomainError("find_first_core: need at least one vertex");
    for (const auto& tree : prufer_trees(n)) {
        std::vector<Edge> edges;
        for (auto [a, b] : tree) edges.push_back({a, b, 0});
        Lot skeleton = make_lot(n, edges);
        if (diameter(skeleton) != 3) continue;
        std::vector<char> is_leaf(static_cast<size_t>(n), 0);
        int missing = 0;
        for (int v : skeleton.leaves()) {
            is_leaf[static_cast<size_t>(v)] = 1;
            ++missing;
        }
        size_t m = edges.size();
        std::vector<int> lam(m, -1);
        std::vector<int> uses(static_cast<size_t>(n), 0);
        std::optional<Lot> hit;
        // lexicographic DFS over label assignments; prunes only those that
        // already violate a reducedness condition
        auto rec = [&](auto&& self, size_t k, int miss) -> bool {
            if (k == m) {
                for (size_t j = 0; j < m; ++j) edges[j].label = lam[j];
                Lot cand = make_lot(n, edges);
                if (build_derived(cand, GraphKind::Initial).num_components < 2) return false;
                if (build_derived(cand, GraphKind::Terminal).num_components < 2) return false;
                if (!is_minimal(cand).minimal) return false;
                if (two_spanned(cand)) return false;
                hit = cand;
                return true;
            }
            for (int l = 0; l < n; ++l) {
                if (l == edges[k].iota || l == edges[k].tau) continue;
                bool clash = false;
                for (size_t j = 0; j < k && !clash; ++j)
                    clash = lam[j] == l && (edges[j].iota == edges[k].iota ||
                                            edges[j].tau == edges[k].tau);
                if (clash) continue;
                int miss2 = miss - (is_leaf[static_cast<size_t>(l)] &&
                                            uses[static_cast<size_t>(l)] == 0
                                        ? 1
                                        : 0);
                if (miss2 > static_cast<int>(m - k - 1)) continue;
                lam[k] = l;
                ++uses[static_cast<size_t>(l)];
                if (self(self, k + 1, miss2)) return true;
                --uses[static_cast<size_t>(l)];
                lam[k] = -1;
            }
            return false;
        };
        if (rec(rec, 0, missing)) return hit;
    }
    return std::nullopt;
}

void spine_candidates(int P, int Q, const std::function<bool(const Lot&)>& visit) {
    if (P < 1 || Q < 1) throw DomainError("spine_candidates: chains need positive length");
    int n = P + Q + 3;
    const int u = 0, v = 1, a = 2;
    std::vector<int> b(static_cast<size_t>(P) + 1), c(static_cast<size_t>(Q) + 1);
    for (int i = 1; i <= P; ++i) b[static_cast<size_t>(i)] = 2 + i;
    for (int j = 1; j <= Q; ++j) c[static_cast<size_t>(j)] = 2 + P + j;
    const int uv[2] = {u, v};
    for (int caseA = 1; caseA >= 0; --caseA) {
        for (int xm = 0; xm < (1 << P); ++xm) {
            std::vector<int> x(static_cast<size_t>(P) + 1);
            for (int i = 1; i <= P; ++i) x[static_cast<size_t>(i)] = uv[(xm >> (P - i)) & 1];
            for (int ym = 0; ym < (1 << Q); ++ym) {
                std::vector<int> y(static_cast<size_t>(Q) + 1);
                for (int j = 1; j <= Q; ++j) y[static_cast<size_t>(j)] = uv[(ym >> (Q - j)) & 1];
                for (int eb = 0; eb < (1 << (P - 1)); ++eb)
                    for (int fb = 0; fb < (1 << (Q - 1)); ++fb)
                        for (int uv_or = 0; uv_or < 2; ++uv_or)
                            for (int as = 0; as < 2; ++as)
                                for (int a_or = 0; a_or < 2; ++a_or) {
                                    int a_side = uv[as];
                                    std::vector<Edge> edges;
                                    edges.push_back({b[1], x[1], a});
                                    for (int i = 1; i < P; ++i) {
                                        int bi = b[static_cast<size_t>(i)];
                                        int bn = b[static_cast<size_t>(i) + 1];
                                        int xn = x[static_cast<size_t>(i) + 1];
                                        if ((eb >> (P - 1 - i)) & 1)
                                            edges.push_back({bn, xn, bi});
                                        else
                                            edges.push_back({xn, bn, bi});
                                    }
                                    Edge uv_edge = uv_or == 0 ? Edge{u, v, 0} : Edge{v, u, 0};
                                    Edge a_edge = a_or == 0 ? Edge{a, a_side, 0}
                                                            : Edge{a_side, a, 0};
                                    if (caseA) {
                                        uv_edge.label = b[static_cast<size_t>(P)];
                                        a_edge.label = c[static_cast<size_t>(Q)];
                                    } else {
                                        a_edge.label = b[static_cast<size_t>(P)];
                                        uv_edge.label = c[static_cast<size_t>(Q)];
                                    }
                                    edges.push_back(uv_edge);
                                    edges.push_back({y[1], c[1], a});
                                    for (int j = 1; j < Q; ++j) {
                                        int cj = c[static_cast<size_t>(j)];
                                        int cn = c[static_cast<size_t>(j) + 1];
                                        int yn = y[static_cast<size_t>(j) + 1];
                                        if ((fb >> (Q - 1 - j)) & 1)
                                            edges.push_back({cn, yn, cj});
                                        else
                                            edges.push_back({yn, cn, cj});
                                    }
                                    edges.push_back(a_edge);
                                    if (!visit(make_lot(n, edges))) return;
                                }
            }
        }
    }
}

}  // namespace lot
