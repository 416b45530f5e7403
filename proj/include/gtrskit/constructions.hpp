#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtrskit/gtrs.hpp"

namespace gtrskit {

// Outcome of the self-orthogonality feasibility test: a generalized twisted
// code is self-orthogonal iff some f in the dual space V^perp interpolates
// v_j^2 on the evaluation points and 0 on the off-support elements.  When
// feasible, `witness` is such an f (validated by re-evaluation) and `coeffs`
// its coordinates in the dual basis; when infeasible, `witness_row` is the
// contradictory row index in the reduced augmented system.
struct SelfOrthWitness {
    bool feasible = false;
    Poly witness;
    std::vector<FieldElem> coeffs;
    size_t witness_row = 0;
    size_t dual_dim = 0;
    explicit SelfOrthWitness(const FieldCtx& F) : witness(F) {}
};

// Requires 2k <= n <= q (and the TwistParams standing hypotheses).
SelfOrthWitness self_orth_feasibility(const EvalConfig& cfg, const TwistParams& tp);

// True when 2k > q-t+1: the dual space is {0}, so no full-oracle witness and
// hence no self-orthogonal twisted code of that shape exists for any n >= 2k.
bool corollary41_predicate(const FieldCtx& F, uint32_t k, uint32_t t);

// The short-length window rule: (h,t) != (0,k-1), 3 <= k <= (q-t+1)/2 and
// n < 2k+t.  NOTE: this is a diagnostic annotation, not a decision procedure;
// in characteristic 2 the window admits rare self-orthogonal codes at
// n = 2k+t-1 through the degree-(q-1) glued dual generator, so callers must
// rely on self_orth_feasibility for actual verdicts.
bool corollary42_predicate(const FieldCtx& F, size_t n, uint32_t k, uint32_t t,
                           uint32_t h);

// A constructed self-orthogonal code together with its evaluation data and
// the feasibility witness that certifies it.
struct Construction {
    Construction(LinearCode c, EvalConfig cfg, TwistParams tp, SelfOrthWitness w)
        : code(std::move(c)), cfg(std::move(cfg)), params(tp), witness(std::move(w)) {}
    LinearCode code;
    EvalConfig cfg;
    TwistParams params;
    SelfOrthWitness witness;
};

// Integer window of admissible k for the strict regime-2 interior
// (q-2t+1)/2 < k < (q-t+1)/2; nullopt when the window is empty (always the
// case for t = 1, whose window has width 1/2).
std::optional<std::pair<uint32_t, uint32_t>> strict_window(const FieldCtx& F, uint32_t t);

// Punctured full-support construction: points are all q elements minus
// `excluded` (l = excluded.size(), 2l <= q-2k-t), multipliers
// v_j = prod_{b in excluded} (alpha_j - b); k must lie strictly inside the
// regime-2 window.  Throws EmptyWindowError when no integer k fits at all.
Construction construct_tc1(const FieldCtx& F, const TwistParams& tp,
                           const std::vector<FieldElem>& excluded);

// Even-characteristic construction on n >= 2k+t chosen points (q = 2^m,
// m > 2, same strict window): v_j = (prod_{b not in points} (alpha_j - b))^{q/2}.
Construction construct_tc2(const FieldCtx& F, const TwistParams& tp,
                           const std::vector<FieldElem>& points);

// Subfield-support construction over GF(p^m), points = the full subfield of
// order p^r (r >= 3, r | m, r < m), unit multipliers.  Admissible (k, t):
//   cond 1: t = 1        and 2k+3   = p^r      cond 2: t odd,  t >= 3, 2k+t   = p^r
//   cond 3: t = 2        and 2k+5   = p^r      cond 4: t even, t >= 4, 2k+t+1 = p^r
Construction construct_ct4(const FieldCtx& F, uint32_t r, uint32_t condition,
                           const TwistParams& tp);

// Punctured-subfield construction over GF(2^m), points = the nonzero
// elements of the order-2^r subfield (n = 2^r - 1), multipliers
// v_j = (prod_{b outside the point set} (alpha_j - b))^{q/2}.  Admissible:
//   cond 1: t = 2        and 2k+5   = 2^r-1    cond 2: t even, t >= 4, 2k+t+1 = 2^r-1
//   cond 3: t = 1        and 2k+3   = 2^r-1    cond 4: t odd,  t >= 3, 2k+t   = 2^r-1
Construction construct_ct5(const FieldCtx& F, uint32_t r, uint32_t condition,
                           const TwistParams& tp);

// First seeded canonical index that lies outside the order-p^r subfield
// (nonzero by construction since subfields contain 0).
FieldElem sample_eta_outside_subfield(const FieldCtx& F, uint32_t r, uint64_t seed);

}  // namespace gtrskit
