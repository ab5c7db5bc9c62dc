#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lot/cover.hpp"
#include "lot/derived.hpp"
#include "lot/lot.hpp"
#include "lot/word.hpp"

namespace lot {

// The backbone of a core LOT: the two chains of edges walked off the
// double-label vertex a, with their name/index bookkeeping.
struct Spine {
    int u = -1, v = -1, a = -1;
    int uv_edge = -1;       // the edge joining u and v
    int a_tree_edge = -1;   // the edge incident at a
    std::vector<int> e, f;  // edge chains e[0..P], f[0..Q]
    int P = 0, Q = 0;
    std::vector<int> b, c;  // b[1..P] = labels of e[1..P]; c[1..Q] likewise
    std::vector<int> x, y;  // x[1..P+1], y[1..Q+1]; x[i] = {u,v}-endpoint of e[i-1]
    std::vector<int> def_p, def_pp;  // partition of 1..P by b[i] = tau vs iota of e[i-1]
    std::vector<int> def_q, def_qp;  // partition of 1..Q by c[i] = iota vs tau of f[i-1]
    std::vector<int> use_p, use_pp;  // break indices derived from the partitions
    std::vector<int> use_q, use_qp;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Sequences {
    RelatorSequence S, R;
    int M = 0, N = 0;
    bool I_directed = false, T_directed = false;
    int removed_arc_I = -1, removed_arc_T = -1;

    // word(i): the seed for i = 0, else the i-th derivative
    static const Word& word(const RelatorSequence& seq, int i);
};

struct FreenessWitness {
    std::vector<int> B;  // sorted break indices, |B| = M+N-2 when valid
    int rank = 0;        // |V| - M - N - 1
    std::vector<CheckResult> checks;
    bool pass = false;
};

// Presentation over a free basis of cover loops.  Generator symbols are
// original vertex ids plus kSymX/kSymY; relators are named words over them.
struct BasisPresentation {
    std::vector<int> generator_syms;
    std::vector<std::pair<std::string, Word>> relators;
};

struct GroupPresentations {
    int tree_w = -1;  // label of the uv edge; spanning tree = {u, v, tree_w}
    std::vector<std::pair<int, Word>> basis_loops;  // generator sym -> cover loop
    BasisPresentation g0, gplus, gminus, g1;
    std::vector<CheckResult> checks;  // expansion round-trips
};

// Loop rewriting in the 4-vertex cover: tree edges {u, v, w}, one free
// generator per remaining vertex edge plus X and Y.
class HatRewriter {
  public:
    HatRewriter(const Lot& lot, const CoverSides& sides);

    const std::vector<int>& basis() const { return basis_; }
    int tree_w() const { return w_; }
    Word loop_of(int sym) const;           // closed vertex/X/Y word at the base
    Word rewrite(const Word& lifted) const;  // basis word of a closed lifted path
    Word expand(const Word& basis_word) const;

  private:
    int endpoint0(const Letter& l) const;  // endpoints of the letter's edge,
    int endpoint1(const Letter& l) const;  // oriented for positive sign
    Word tree_path(int from, int to) const;

    const Lot* lot_;
    CoverSides sides_;
    int u_ = -1, v_ = -1, w_ = -1;
    std::vector<int> basis_;  // non-tree vertex syms ascending, then X, Y
};

// Empty means the input satisfies every pipeline hypothesis: reduced,
// minimal, diameter 3, not 2-spanned, both derived graphs disconnected,
// and the double-label edge pair split (one extremal initial vertex, one
// extremal terminal vertex).
std::vector<std::string> check_core_hypotheses(const Lot& lot);

Spine extract_spine(const Lot& lot);

Sequences generate_sequences(const DeriveContext& ctx);

std::vector<CheckResult> verify_structure(const Lot& lot, const Spine& sp,
                                          const DeriveContext& ctx, const Sequences& seqs);

FreenessWitness freeness_witness(const Lot& lot, const Spine& sp, const DeriveContext& ctx,
                                 const Sequences& seqs);

std::vector<CheckResult> psi_checks(const Lot& lot, const DeriveContext& ctx,
                                    const Sequences& seqs);

GroupPresentations build_presentations(const Lot& lot, const Spine& sp,
                                       const DeriveContext& ctx, const Sequences& seqs);

struct HnnReport {
    Spine spine;
    Sequences seqs;
    std::vector<CheckResult> checks;  // structure + transport + factorization
    FreenessWitness freeness;
    GroupPresentations groups;
    bool all_pass = false;
};

// Full pipeline; throws DomainError listing failed hypotheses.
HnnReport assemble(const Lot& lot);

}  // namespace lot
