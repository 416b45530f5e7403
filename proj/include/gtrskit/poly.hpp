#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtrskit/gf.hpp"

namespace gtrskit {

// Dense univariate polynomial over one field context.  Coefficients are
// stored as canonical element values with trailing zeros trimmed; the zero
// polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
    explicit Poly(const FieldCtx& F) : ctx_(&F) {}
    Poly(const FieldCtx& F, std::vector<uint32_t> coeff_values);

    static Poly zero(const FieldCtx& F) { return Poly(F); }
    static Poly one(const FieldCtx& F);
    static Poly monomial(const FieldCtx& F, uint64_t exp, FieldElem coeff);
    static Poly monomial(const FieldCtx& F, uint64_t exp);  // coeff 1
    static Poly from_coeffs(const std::vector<FieldElem>& coeffs);

    const FieldCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return c_.empty(); }
    // Degree, with -1 standing in for the degree of the zero polynomial.
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    FieldElem coeff(uint64_t i) const;
    FieldElem leading_coeff() const;
    const std::vector<uint32_t>& coeff_values() const { return c_; }

    // Horner evaluation; the constant term is added unconditionally, which
    // realizes the 0^0 = 1 convention at the point 0.
    FieldElem eval(FieldElem x) const;
    std::vector<FieldElem> eval_vector(const std::vector<FieldElem>& points) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(FieldElem c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Fold exponents into [0, q-1] using the evaluation-preserving rule
    // e >= q  ->  ((e-1) mod (q-1)) + 1 (exponent 0 stays 0), then combine
    // coefficients.  The result agrees with *this on every field element.
    Poly reduce_mod_field() const;

    std::string to_string() const;  // e_i are element indices, e.g. "3*x^2 + x + 5"

private:
    void trim();
    const FieldCtx* ctx_;
    std::vector<uint32_t> c_;
};

// Product of (x - r) over the given roots.
Poly poly_from_roots(const FieldCtx& F, const std::vector<FieldElem>& roots);

// Twist parameters (k, t, h, eta) for a twisted polynomial space.  Every
// operation in this artifact works under the standing hypotheses
// k >= 3, t >= 1, 0 <= h <= k-1, t + h <= k-1, eta != 0.
struct TwistParams {
    TwistParams(uint32_t k, uint32_t t, uint32_t h, FieldElem eta);
    uint32_t k, t, h;
    FieldElem eta;
};

// Basis of the twisted space V_{k,t,h,eta}: x^s for s in {0..k-1}\{h} plus
// the twisted generator x^h + eta*x^{k-1+t} (emitted at position h).
// Requires k-1+t <= q-1 so that evaluation on distinct points is faithful.
std::vector<Poly> twisted_basis(const FieldCtx& F, const TwistParams& tp);

// A linearly independent list of polynomials spanning a subspace of
// F_q[x]_{<q}; independence is checked at construction.
struct SpaceBasis {
    SpaceBasis(const FieldCtx& F, std::vector<Poly> polys);
    const FieldCtx* ctx;
    std::vector<Poly> polys;
    size_t dim() const { return polys.size(); }
};

// Closed-form basis of the dual space V^perp of the Schur square of the
// standard twisted code (all q points, unit multipliers), by regime:
//   regime 1 ((q-t+1)/2 < k <= q/2): the dual is {0} (empty basis).
//   regime 2 ((q-2t+1)/2 < k <= (q-t+1)/2): pure monomials x^0..x^{q-2k-t},
//     except (h,t)=(0,k-1) which glues x^{q-2k} - eta*x^{q-2}
//     (+ eta^3*x^{q-1} when q = 4k-4) onto the monomials x^0..x^{q-3k+1}.
//   regime 3 (3 <= k <= (q-2t+1)/2): monomials with the exponent
//     q-2k-2t+1 replaced by a glued generator for h = 0, and dropped for
//     h >= 1; see the implementation for the exact boundary coefficients,
//     the extra generator for (h,t)=(0,k-1) and the degenerate cell
//     (k,t,h) = (3,1,1).
// Preconditions: 3 <= k <= q/2 (throws ParamWindowError otherwise).
SpaceBasis dual_space_basis(const FieldCtx& F, const TwistParams& tp);

}  // namespace gtrskit
