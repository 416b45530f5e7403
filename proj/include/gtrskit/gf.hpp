#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtrskit/errors.hpp"

namespace gtrskit {

// Description of a finite field GF(p^m): characteristic, extension degree and
// the monic irreducible modulus (coefficients c_0..c_m over GF(p)).
struct FieldSpec {
    uint32_t p = 0;
    uint32_t m = 0;
    std::vector<uint32_t> modulus;  // size m+1, modulus[m] == 1

    bool operator==(const FieldSpec&) const = default;
};

class FieldCtx;

// A field element: canonical index paired with its owning context.  The index
// encodes the coefficient tuple (a_0,...,a_{m-1}) of the element as
// a_0 + a_1*p + ... + a_{m-1}*p^{m-1}; enumeration order is index order, so
// element 0 is the additive zero and element 1 the multiplicative one.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(const FieldCtx* ctx, uint32_t value) : ctx_(ctx), v_(value) {}

    uint32_t value() const { return v_; }
    const FieldCtx& ctx() const;
    bool is_zero() const { return v_ == 0; }

    FieldElem operator+(FieldElem o) const;
    FieldElem operator-(FieldElem o) const;
    FieldElem operator*(FieldElem o) const;
    FieldElem operator/(FieldElem o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(uint64_t e) const;  // 0^0 = 1

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    friend class FieldCtx;
    const FieldCtx* ctx_ = nullptr;
    uint32_t v_ = 0;
};

// Immutable finite-field context with exp/log tables.  Instances live in a
// process-wide registry (make_field), so raw pointers held by FieldElem,
// Poly and Matrix stay valid for the life of the process and contexts are
// safely shareable across threads after construction.
class FieldCtx {
public:
    uint32_t p() const { return spec_.p; }
    uint32_t m() const { return spec_.m; }
    uint32_t q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }

    FieldElem elem(uint32_t value) const;
    FieldElem zero() const { return {this, 0}; }
    FieldElem one() const { return {this, 1}; }
    FieldElem generator() const { return {this, gen_}; }

    // All q elements in canonical index order.
    std::vector<FieldElem> elements() const;
    // The p^r elements fixed by the r-th Frobenius power (requires r | m),
    // in canonical index order.
    std::vector<FieldElem> subfield_elements(uint32_t r) const;

    // Value-level arithmetic used by the dense containers.
    uint32_t vadd(uint32_t a, uint32_t b) const;
    uint32_t vneg(uint32_t a) const;
    uint32_t vsub(uint32_t a, uint32_t b) const { return vadd(a, vneg(b)); }
    uint32_t vmul(uint32_t a, uint32_t b) const;
    uint32_t vinv(uint32_t a) const;
    uint32_t vdiv(uint32_t a, uint32_t b) const { return vmul(a, vinv(b)); }
    uint32_t vpow(uint32_t a, uint64_t e) const;

    std::string elem_to_string(uint32_t value) const;

private:
    friend const FieldCtx& make_field(const FieldSpec& spec);
    explicit FieldCtx(FieldSpec spec);

    FieldSpec spec_;
    uint32_t q_ = 0;
    uint32_t gen_ = 0;
    std::vector<uint32_t> exp_;  // exp_[i] = value of g^i, i in [0, q-1)
    std::vector<uint32_t> log_;  // log_[v] for v != 0
    std::vector<uint32_t> neg_;  // additive inverse per value
    bool char2_ = false;
};

// Field factories.  make_field(p, m) uses the built-in modulus table when it
// has an entry and otherwise falls back to the lexicographically least monic
// irreducible (by integer value of (c_0,...,c_{m-1})).  Repeated calls with
// the same spec return the same context.
const FieldCtx& make_field(const FieldSpec& spec);
const FieldCtx& make_field(uint32_t p, uint32_t m);
// q must be a prime power <= 2^16.
const FieldCtx& make_field_order(uint32_t q);

// Lexicographically least monic irreducible of degree m over GF(p)
// (coefficients c_0..c_m); the deterministic fallback behind make_field.
std::vector<uint32_t> lex_least_modulus(uint32_t p, uint32_t m);

// Factor q as p^m; throws std::invalid_argument if q is not a prime power.
FieldSpec prime_power_split(uint32_t q);

// Sum of a^l over all q field elements, under the 0^0 = 1 convention:
// equals -1 when l > 0 and (q-1) | l, and 0 otherwise (including l = 0).
FieldElem power_sum(const FieldCtx& F, uint64_t l);

}  // namespace gtrskit
