#include "lot/conjecture.hpp"

#include "lot/hnn.hpp"

namespace lot {

namespace {

CycleFamily run_family(const Lot& lot, const DerivedGraph& g, const MaximalForest& forest,
                       const CycleData& cycle, const std::vector<int>& compI,
                       const std::vector<int>& compT, int cap) {
    CycleFamily fam;
    fam.kind = g.kind;
    fam.component = g.component_of[static_cast<size_t>(cycle.vertices.front())];
    SeedResult seed = seed_word(cycle, g.kind);
    fam.relators.push_back(seed.word);
    const SeedPlan* plan = &seed.plan;
    for (int iter = 0;; ++iter) {
        if (!component_lift(fam.relators.back(), compI, compT).ok) {
            fam.termination = "lift-failure";
            break;
        }
        if (iter >= cap) {
            fam.termination = "iteration-cap";
            break;
        }
        DerivResult d = g.kind == GraphKind::Initial
                            ? forward_derivative(lot, g, forest, fam.relators.back(), plan)
                            : backward_derivative(lot, g, forest, fam.relators.back(), plan);
        plan = nullptr;
        fam.relators.push_back(d.word);
    }
    for (const Word& w : fam.relators) fam.alternating.push_back(is_alternating(w));
    return fam;
}

}  // namespace

ConjectureDataset explore(const Lot& lot, int max_iterations) {
    if (max_iterations < 0) throw DomainError("explore: negative iteration cap");
    ConjectureDataset ds;
    ds.max_iterations = max_iterations;
    DerivedGraph gI = build_derived(lot, GraphKind::Initial);
    DerivedGraph gT = build_derived(lot, GraphKind::Terminal);
    MaximalForest fI = greedy_forest(gI);
    MaximalForest fT = greedy_forest(gT);
    if (check_core_hypotheses(lot).empty()) {
        Spine sp = extract_spine(lot);
        DeriveContext ctx = make_derive_context(lot, sp.e[0], sp.f[0]);
        fI = ctx.forestI;
        fT = ctx.forestT;
    }
    for (const CycleData& c : all_cycles(gI))
        ds.initial_families.push_back(
            run_family(lot, gI, fI, c, gI.component_of, gT.component_of, max_iterations));
    for (const CycleData& c : all_cycles(gT))
        ds.terminal_families.push_back(
            run_family(lot, gT, fT, c, gI.component_of, gT.component_of, max_iterations));
    return ds;
}

}  // namespace lot
