#include "lot/report.hpp"

namespace lot {

namespace {

std::string sym_name(int sym, const std::vector<std::string>& names) {
    if (sym == kSymX) return "X";
    if (sym == kSymY) return "Y";
    return names.at(static_cast<size_t>(sym));
}

Json name_list(const std::vector<int>& verts, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (int v : verts) out.push_back(names.at(static_cast<size_t>(v)));
    return out;
}

Json word_json(const Word& w, const Lot& lot) { return format_word(w, lot.names); }

Json checks_json(const std::vector<CheckResult>& checks, bool* all = nullptr) {
    Json out = Json::array();
    for (const CheckResult& c : checks) {
        Json one;
        one["name"] = c.name;
        one["pass"] = c.pass;
        if (!c.detail.empty()) one["detail"] = c.detail;
        out.push_back(one);
        if (all && !c.pass) *all = false;
    }
    return out;
}

Json certificate_json(const Certificate& cert, const Lot& lot) {
    Json out;
    out["rotated_input"] = word_json(cert.rotated_input, lot);
    Json steps = Json::array();
    for (const DerivStep& s : cert.steps) {
        Json one;
        one["block"] = s.block;
        one["edge"] = s.edge;
        one["dir"] = s.dir;
        one["replaced"] = format_word({s.replaced[0], s.replaced[1]}, lot.names);
        one["replacement"] = format_word({s.replacement[0], s.replacement[1]}, lot.names);
        steps.push_back(one);
    }
    out["steps"] = steps;
    return out;
}

Json sequence_json(const RelatorSequence& seq, const Lot& lot, const std::string& letter) {
    Json out;
    out["seed"] = word_json(seq.seed, lot);
    Json items = Json::array();
    for (size_t k = 0; k < seq.items.size(); ++k) {
        const SequenceItem& it = seq.items[k];
        Json one;
        one["name"] = letter + std::to_string(k + 1);
        one["word"] = word_json(it.word, lot);
        one["lifts"] = !it.lift.uses_X && !it.lift.uses_Y;
        one["uses_X"] = it.lift.uses_X;
        one["uses_Y"] = it.lift.uses_Y;
        one["lifted_word"] = word_json(it.lift.lifted, lot);
        one["certificate"] = certificate_json(it.cert, lot);
        items.push_back(one);
    }
    out["items"] = items;
    out["terminal_index"] = seq.terminal_index;
    out["stopped_by_lift"] = seq.stopped_by_lift;
    return out;
}

Json basis_presentation_json(const BasisPresentation& p, const Lot& lot) {
    Json out;
    Json gens = Json::array();
    for (int sym : p.generator_syms) gens.push_back(sym_name(sym, lot.names));
    out["generators"] = gens;
    Json rels = Json::array();
    for (const auto& [name, w] : p.relators) {
        Json one;
        one["name"] = name;
        one["word"] = word_json(w, lot);
        rels.push_back(one);
    }
    out["relators"] = rels;
    return out;
}

Json spine_json(const Spine& sp, const Lot& lot) {
    Json out;
    out["u"] = lot.names.at(static_cast<size_t>(sp.u));
    out["v"] = lot.names.at(static_cast<size_t>(sp.v));
    out["a"] = lot.names.at(static_cast<size_t>(sp.a));
    out["uv_edge"] = sp.uv_edge;
    out["a_tree_edge"] = sp.a_tree_edge;
    out["P"] = sp.P;
    out["Q"] = sp.Q;
    out["e"] = sp.e;
    out["f"] = sp.f;
    auto tail_names = [&](const std::vector<int>& xs) {
        Json arr = Json::array();
        for (size_t i = 1; i < xs.size(); ++i)
            arr.push_back(lot.names.at(static_cast<size_t>(xs[i])));
        return arr;
    };
    out["b"] = tail_names(sp.b);
    out["c"] = tail_names(sp.c);
    out["x"] = tail_names(sp.x);
    out["y"] = tail_names(sp.y);
    out["def_p"] = sp.def_p;
    out["def_p_prime"] = sp.def_pp;
    out["def_q"] = sp.def_q;
    out["def_q_prime"] = sp.def_qp;
    out["use_p"] = sp.use_p;
    out["use_p_prime"] = sp.use_pp;
    out["use_q"] = sp.use_q;
    out["use_q_prime"] = sp.use_qp;
    return out;
}

Json cycle_json(const CycleData& cyc, const Lot& lot) {
    Json out;
    out["vertices"] = name_list(cyc.vertices, lot.names);
    out["arcs"] = cyc.arcs;
    out["directed"] = cyc.is_directed;
    return out;
}

}  // namespace

Json lot_json(const Lot& lot) {
    Json out;
    out["vertices"] = lot.n;
    out["names"] = lot.names;
    Json edges = Json::array();
    for (const Edge& e : lot.edges) {
        Json one;
        one["iota"] = lot.names.at(static_cast<size_t>(e.iota));
        one["tau"] = lot.names.at(static_cast<size_t>(e.tau));
        one["label"] = lot.names.at(static_cast<size_t>(e.label));
        edges.push_back(one);
    }
    out["edges"] = edges;
    return out;
}

Json validate_report(const Lot& lot) {
    Json out;
    out["valid"] = true;
    out["vertex_count"] = lot.n;
    out["edge_count"] = static_cast<int>(lot.edges.size());
    out["lot"] = lot_json(lot);
    return out;
}

Json info_report(const Lot& lot) {
    Json out;
    out["lot"] = lot_json(lot);
    out["diameter"] = diameter(lot);
    ReducedReport red = is_reduced(lot);
    out["reduced"] = red.reduced;
    if (!red.violations.empty()) out["reduced_violations"] = red.violations;
    MinimalReport min = is_minimal(lot);
    out["minimal"] = min.minimal;
    if (min.witness) out["minimal_witness"] = name_list(min.witness->vertices, lot.names);
    auto pair = two_spanned(lot);
    out["two_spanned"] = pair ? Json::array({lot.names.at(static_cast<size_t>(pair->first)),
                                             lot.names.at(static_cast<size_t>(pair->second))})
                              : Json();
    auto dbl = double_label(lot);
    out["double_label"] = dbl ? Json(lot.names.at(static_cast<size_t>(*dbl))) : Json();
    if (min.minimal && red.reduced && diameter(lot) == 3) {
        SpanningReport sr = spanning_classification(lot);
        Json span;
        span["u"] = lot.names.at(static_cast<size_t>(sr.u));
        span["v"] = lot.names.at(static_cast<size_t>(sr.v));
        span["pair"] = sr.pair ? Json::array({lot.names.at(static_cast<size_t>(sr.pair->first)),
                                              lot.names.at(static_cast<size_t>(sr.pair->second))})
                               : Json();
        span["a"] = sr.a ? Json(lot.names.at(static_cast<size_t>(*sr.a))) : Json();
        span["span_auv_whole"] = sr.span_auv_whole;
        out["spanning"] = span;
    }
    for (GraphKind kind : {GraphKind::Initial, GraphKind::Terminal}) {
        DerivedGraph g = build_derived(lot, kind);
        Json gj;
        gj["components"] = g.num_components;
        Json arcs = Json::array();
        for (const Arc& a : g.arcs) {
            Json one;
            one["src"] = lot.names.at(static_cast<size_t>(a.src));
            one["dst"] = lot.names.at(static_cast<size_t>(a.dst));
            one["edge"] = a.edge;
            arcs.push_back(one);
        }
        gj["arcs"] = arcs;
        Json cycles = Json::array();
        for (const CycleData& c : all_cycles(g)) cycles.push_back(cycle_json(c, lot));
        gj["cycles"] = cycles;
        out[kind == GraphKind::Initial ? "initial_graph" : "terminal_graph"] = gj;
    }
    Presentation pres = presentation(lot);
    std::vector<long long> ab = abelianization(pres);
    out["abelianization"] = ab;
    out["infinite_cyclic_abelianization"] = ab == std::vector<long long>{0};
    return out;
}

Json present_report(const Lot& lot) {
    Presentation pres = presentation(lot);
    Json out;
    out["generators"] = pres.generators;
    Json rels = Json::array();
    for (const Word& r : pres.relators) rels.push_back(word_json(r, lot));
    out["relators"] = rels;
    return out;
}

Json hnn_report_json(const Lot& lot, const HnnReport& rep) {
    Json out;
    out["lot"] = lot_json(lot);
    out["spine"] = spine_json(rep.spine, lot);

    Json seqs;
    seqs["M"] = rep.seqs.M;
    seqs["N"] = rep.seqs.N;
    seqs["I_directed"] = rep.seqs.I_directed;
    seqs["T_directed"] = rep.seqs.T_directed;
    seqs["removed_arc_I"] = rep.seqs.removed_arc_I;
    seqs["removed_arc_T"] = rep.seqs.removed_arc_T;
    Json swords = Json::array(), rwords = Json::array();
    for (int i = 0; i <= rep.seqs.N; ++i)
        swords.push_back(word_json(Sequences::word(rep.seqs.S, i), lot));
    for (int i = 0; i <= rep.seqs.M; ++i)
        rwords.push_back(word_json(Sequences::word(rep.seqs.R, i), lot));
    seqs["S"] = swords;
    seqs["R"] = rwords;
    if (!rep.seqs.S.items.empty())
        seqs["S_final_lift"] = word_json(rep.seqs.S.items.back().lift.lifted, lot);
    if (!rep.seqs.R.items.empty())
        seqs["R_final_lift"] = word_json(rep.seqs.R.items.back().lift.lifted, lot);
    seqs["S_trace"] = sequence_json(rep.seqs.S, lot, "S");
    seqs["R_trace"] = sequence_json(rep.seqs.R, lot, "R");
    out["sequences"] = seqs;

    Json dict = Json::array();
    for (size_t k = 0; k < lot.edges.size(); ++k) {
        const Edge& e = lot.edges[k];
        Json one;
        one["edge"] = static_cast<int>(k);
        one["theta"] = word_json({{e.tau, 1}, {e.label, -1}}, lot);
        one["phi"] = word_json({{e.label, -1}, {e.iota, 1}}, lot);
        dict.push_back(one);
    }
    out["theta_phi"] = dict;

    out["checks"] = checks_json(rep.checks);

    Json fr;
    fr["break_indices"] = rep.freeness.B;
    fr["rank"] = rep.freeness.rank;
    fr["checks"] = checks_json(rep.freeness.checks);
    fr["pass"] = rep.freeness.pass;
    out["freeness"] = fr;

    Json gr;
    gr["tree_w"] = lot.names.at(static_cast<size_t>(rep.groups.tree_w));
    Json loops = Json::array();
    for (const auto& [sym, w] : rep.groups.basis_loops) {
        Json one;
        one["generator"] = sym_name(sym, lot.names);
        one["loop"] = word_json(w, lot);
        loops.push_back(one);
    }
    gr["basis_loops"] = loops;
    gr["g0"] = basis_presentation_json(rep.groups.g0, lot);
    gr["g_plus"] = basis_presentation_json(rep.groups.gplus, lot);
    gr["g_minus"] = basis_presentation_json(rep.groups.gminus, lot);
    gr["g1"] = basis_presentation_json(rep.groups.g1, lot);
    gr["checks"] = checks_json(rep.groups.checks);
    out["groups"] = gr;

    out["all_pass"] = rep.all_pass;
    return out;
}

Json derive_report(const Lot& lot, const RelatorSequence& seq) {
    Json out;
    out["lot"] = lot_json(lot);
    out["seed_graph"] = seq.seed_kind == GraphKind::Initial ? "I" : "T";
    std::string letter = seq.seed_kind == GraphKind::Initial ? "S" : "R";
    out["sequence"] = sequence_json(seq, lot, letter);
    return out;
}

Json decompose_report(const Lot& lot, const DecompositionReport& rep) {
    Json out;
    out["lot"] = lot_json(lot);
    out["classification"] = classification_name(rep.kind);
    Json chain = Json::array();
    for (const DecompStep& s : rep.chain) {
        Json one;
        one["vertex_count"] = s.n;
        one["subtree"] = s.subtree_names;
        one["added"] = s.added_name;
        chain.push_back(one);
    }
    out["chain"] = chain;
    out["replay_ok"] = rep.replay_ok;
    out["core"] = lot_json(rep.core);
    if (rep.hnn) out["hnn"] = hnn_report_json(rep.core, *rep.hnn);
    return out;
}

Json enum_report(const EnumerationSpec& spec, const SuiteSummary& summary) {
    Json out;
    Json sj;
    sj["max_vertices"] = spec.max_vertices;
    sj["filters"] = spec.filters;
    sj["dedupe"] = spec.dedupe;
    out["spec"] = sj;
    Json visited = Json::array();
    for (size_t n = 1; n < summary.visited.size(); ++n) {
        Json one;
        one["vertices"] = static_cast<int>(n);
        one["count"] = summary.visited[n];
        visited.push_back(one);
    }
    out["visited"] = visited;
    out["total"] = summary.total;
    Json checks = Json::array();
    for (const CheckSummary& c : summary.checks) {
        Json one;
        one["name"] = c.name;
        one["applicable"] = c.applicable;
        one["passed"] = c.passed;
        if (!c.first_counterexample.empty()) {
            one["first_counterexample"] = c.first_counterexample;
            one["detail"] = c.detail;
        }
        checks.push_back(one);
    }
    out["checks"] = checks;
    out["all_pass"] = summary.all_pass;
    return out;
}

Json conjecture_report(const Lot& lot, const ConjectureDataset& ds) {
    Json out;
    out["lot"] = lot_json(lot);
    out["max_iterations"] = ds.max_iterations;
    auto families = [&](const std::vector<CycleFamily>& fams) {
        Json arr = Json::array();
        for (const CycleFamily& fam : fams) {
            Json one;
            one["component"] = fam.component;
            one["termination"] = fam.termination;
            Json rels = Json::array();
            for (size_t k = 0; k < fam.relators.size(); ++k) {
                Json r;
                r["word"] = word_json(fam.relators[k], lot);
                r["alternating"] = static_cast<bool>(fam.alternating[k]);
                rels.push_back(r);
            }
            one["relators"] = rels;
            arr.push_back(one);
        }
        return arr;
    };
    out["initial_families"] = families(ds.initial_families);
    out["terminal_families"] = families(ds.terminal_families);
    return out;
}

Json envelope(const std::string& command, const Json& payload) {
    Json out;
    out["schema"] = 1;
    out["command"] = command;
    for (const auto& [key, value] : payload.items()) out[key] = value;
    return out;
}

std::string render_structured(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const Json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

bool all_scalars(const Json& arr) {
    for (const Json& v : arr)
        if (!is_scalar(v)) return false;
    return true;
}

std::string inline_array(const Json& arr) {
    std::string s = "[";
    bool first = true;
    for (const Json& v : arr) {
        if (!first) s += ", ";
        first = false;
        s += scalar_str(v);
    }
    return s + "]";
}

void emit(const Json& j, int indent, std::string& out) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar(value)) {
                out += pad + key + ": " + scalar_str(value) + "\n";
            } else if (value.is_array() && all_scalars(value)) {
                out += pad + key + ": " + inline_array(value) + "\n";
            } else if (value.empty()) {
                out += pad + key + ": " + (value.is_array() ? "[]" : "{}") + "\n";
            } else {
                out += pad + key + ":\n";
                emit(value, indent + 1, out);
            }
        }
    } else if (j.is_array()) {
        for (const Json& v : j) {
            if (is_scalar(v)) {
                out += pad + "- " + scalar_str(v) + "\n";
            } else if (v.empty()) {
                out += pad + "- " + (v.is_array() ? "[]" : "{}") + "\n";
            } else {
                std::string body;
                emit(v, indent + 1, body);
                if (body.size() > pad.size() + 2)
                    body.replace(pad.size(), 2, "- ");
                out += body;
            }
        }
    } else {
        out += pad + scalar_str(j) + "\n";
    }
}

}  // namespace

std::string render_human(const Json& doc) {
    std::string out;
    emit(doc, 0, out);
    return out;
}

}  // namespace lot
