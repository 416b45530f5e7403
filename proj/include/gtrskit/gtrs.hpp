#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gtrskit/codes.hpp"
#include "gtrskit/poly.hpp"

namespace gtrskit {

// Evaluation data for a generalized code: n distinct points and n nonzero
// column multipliers over one field context.
struct EvalConfig {
    EvalConfig(const FieldCtx& F, std::vector<FieldElem> points,
               std::vector<FieldElem> multipliers);
    // All q points in canonical order with unit multipliers.
    static EvalConfig standard(const FieldCtx& F);
    // The given points with unit multipliers.
    static EvalConfig with_points(const FieldCtx& F, std::vector<FieldElem> points);

    const FieldCtx* ctx;
    std::vector<FieldElem> points;
    std::vector<FieldElem> multipliers;
    size_t n() const { return points.size(); }
};

// Generalized twisted evaluation code: rows are v * b(alpha) for b in
// twisted_basis(tp).  Requires k + t <= n so the rows are independent.
LinearCode gtrs_code(const EvalConfig& cfg, const TwistParams& tp);

// Generalized (untwisted) evaluation code of dimension k (rows v * alpha^s,
// 0 <= s < k; requires k <= n) and the plain full-support variant.
LinearCode grs_code(const EvalConfig& cfg, uint32_t k);
LinearCode rs_code(const FieldCtx& F, uint32_t k);

// The set {(-1)^k * prod_{i in I} alpha_i^{-1} : I subset of the point
// indices, |I| = k}, sorted by canonical element index.  Decides MDS/NMDS
// for single-twist hook-0 codes: the code is MDS iff eta is outside the set.
// Requires all points nonzero and k < n; guarded by C(n,k) <= minor_guard.
std::vector<FieldElem> t_k_set(const std::vector<FieldElem>& points, uint32_t k,
                               const SearchLimits& limits = {});

enum class Regime { R1, R2, R3 };
// Regime of (k, t) for the standard full-support twisted code:
//   R3: 3 <= k <= (q-2t+1)/2, R2: (q-2t+1)/2 < k <= (q-t+1)/2,
//   R1: (q-t+1)/2 < k <= q/2.  Throws ParamWindowError outside 3 <= 2k <= q.
Regime regime(const FieldCtx& F, uint32_t k, uint32_t t);
std::string regime_name(Regime r);

// A spanning set of polynomials together with the shape label that selected
// it ("h=0,t=k-1", "h=0,t<=k-2", "h>=1", or "degenerate(3,1,1)").
struct SpanForm {
    std::vector<Poly> polys;
    std::string case_label;
};

// Case-matched spanning set of the Schur square of a unit-multiplier twisted
// code on arbitrary distinct points (the point-independent product-span
// identity).  Exponents are not folded; evaluation handles wraparound.
SpanForm schur_span_polys(const FieldCtx& F, const TwistParams& tp);

// Spanning set and dimension of the Schur square of the standard
// full-support twisted code, by regime (R1 gives the full space).
SpanForm full_support_square_span(const FieldCtx& F, const TwistParams& tp);
size_t full_support_square_dim(const FieldCtx& F, const TwistParams& tp);

// Verification drivers; `ok` is the verdict, the other fields explain it.
struct SpanCheck {
    bool ok = false;
    std::string case_label;
    size_t dim_lhs = 0;  // computed Schur-square dimension
    size_t dim_rhs = 0;  // spanning-set / closed-form dimension
};

// Product-span identity on the given points (defaults to all q points).
SpanCheck verify_product_span(const EvalConfig& cfg, const TwistParams& tp);
// Full-support span + dimension identity (regime-matched).
SpanCheck verify_full_support_square(const FieldCtx& F, const TwistParams& tp);
// Closed-form dual basis against the nullspace-computed dual of the square.
SpanCheck verify_square_dual(const FieldCtx& F, const TwistParams& tp);

// Power-sum identity: for 0 < l < q-1, all exponent pairs s1 in {0..l},
// s2 in {0..q-2-l} satisfy sum_a a^{s1+s2} = 0, while sum_a a^{q-1} = -1.
bool verify_power_sums(const FieldCtx& F, uint32_t l);

// Full-support duality dual(RS_k) == RS_{q-k} (1 <= k <= q-1).
bool verify_rs_duality(const FieldCtx& F, uint32_t k);

// Uniform draw in [0, n) by rejection (unbiased and generator-portable);
// the single primitive behind every seeded sweep, so sequences are part of
// the reproducibility contract.
uint64_t rand_below(std::mt19937_64& gen, uint64_t n);

// First `count` nonzero draws of a seeded generator over canonical indices
// (mt19937_64 + rejection; duplicates allowed, as drawn).
std::vector<FieldElem> seeded_etas(const FieldCtx& F, uint64_t seed, size_t count);

}  // namespace gtrskit
