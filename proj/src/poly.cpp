#include "gtrskit/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gtrskit/linalg.hpp"

namespace gtrskit {

Poly::Poly(const FieldCtx& F, std::vector<uint32_t> coeff_values)
    : ctx_(&F), c_(std::move(coeff_values)) {
    for (uint32_t v : c_)
        if (v >= F.q()) throw std::invalid_argument("coefficient index out of range");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::one(const FieldCtx& F) { return Poly(F, {1}); }

Poly Poly::monomial(const FieldCtx& F, uint64_t exp, FieldElem coeff) {
    if (&coeff.ctx() != &F) throw FieldMismatchError("monomial coefficient from another field");
    if (coeff.is_zero()) return Poly(F);
    std::vector<uint32_t> c(exp + 1, 0);
    c[exp] = coeff.value();
    return Poly(F, std::move(c));
}

Poly Poly::monomial(const FieldCtx& F, uint64_t exp) { return monomial(F, exp, F.one()); }

Poly Poly::from_coeffs(const std::vector<FieldElem>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("from_coeffs needs at least one coefficient");
    const FieldCtx& F = coeffs[0].ctx();
    std::vector<uint32_t> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) {
        if (&e.ctx() != &F) throw FieldMismatchError("coefficients from different fields");
        c.push_back(e.value());
    }
    return Poly(F, std::move(c));
}

FieldElem Poly::coeff(uint64_t i) const {
    return ctx_->elem(i < c_.size() ? c_[i] : 0);
}

FieldElem Poly::leading_coeff() const {
    if (c_.empty()) return ctx_->zero();
    return ctx_->elem(c_.back());
}

FieldElem Poly::eval(FieldElem x) const {
    if (&x.ctx() != ctx_) throw FieldMismatchError("evaluation point from another field");
    uint32_t acc = 0;
    const uint32_t xv = x.value();
    for (size_t i = c_.size(); i-- > 0;) acc = ctx_->vadd(ctx_->vmul(acc, xv), c_[i]);
    return ctx_->elem(acc);
}

std::vector<FieldElem> Poly::eval_vector(const std::vector<FieldElem>& points) const {
    std::vector<FieldElem> out;
    out.reserve(points.size());
    for (const auto& pt : points) out.push_back(eval(pt));
    return out;
}

namespace {
const FieldCtx* same_ctx(const Poly& a, const Poly& b) {
    if (&a.ctx() != &b.ctx()) throw FieldMismatchError("polynomials from different fields");
    return &a.ctx();
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
    const FieldCtx* F = same_ctx(*this, o);
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint32_t a = i < c_.size() ? c_[i] : 0;
        uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        c[i] = F->vadd(a, b);
    }
    return Poly(*F, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    const FieldCtx* F = same_ctx(*this, o);
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        uint32_t a = i < c_.size() ? c_[i] : 0;
        uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        c[i] = F->vsub(a, b);
    }
    return Poly(*F, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    const FieldCtx* F = same_ctx(*this, o);
    if (is_zero() || o.is_zero()) return Poly(*F);
    std::vector<uint32_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i])
            for (size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] = F->vadd(c[i + j], F->vmul(c_[i], o.c_[j]));
    return Poly(*F, std::move(c));
}

Poly Poly::scaled(FieldElem c) const {
    if (&c.ctx() != ctx_) throw FieldMismatchError("scalar from another field");
    std::vector<uint32_t> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = ctx_->vmul(c_[i], c.value());
    return Poly(*ctx_, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
    same_ctx(*this, o);
    return c_ == o.c_;
}

Poly Poly::reduce_mod_field() const {
    const uint32_t q = ctx_->q();
    std::vector<uint32_t> out(std::min<size_t>(c_.size(), q), 0);
    for (size_t e = 0; e < c_.size(); ++e) {
        if (!c_[e]) continue;
        size_t r = e < q ? e : size_t((e - 1) % (q - 1)) + 1;
        if (r >= out.size()) out.resize(r + 1, 0);
        out[r] = ctx_->vadd(out[r], c_[e]);
    }
    return Poly(*ctx_, std::move(out));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << ctx_->elem_to_string(c_[i]);
        } else {
            if (c_[i] != 1) os << ctx_->elem_to_string(c_[i]) << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_from_roots(const FieldCtx& F, const std::vector<FieldElem>& roots) {
    Poly acc = Poly::one(F);
    for (const auto& r : roots) {
        if (&r.ctx() != &F) throw FieldMismatchError("root from another field");
        acc = acc * Poly::from_coeffs({-r, F.one()});
    }
    return acc;
}

TwistParams::TwistParams(uint32_t k_, uint32_t t_, uint32_t h_, FieldElem eta_)
    : k(k_), t(t_), h(h_), eta(eta_) {
    if (k < 3) throw ParamWindowError("twist requires k >= 3", "k >= 3");
    if (t < 1) throw ParamWindowError("twist requires t >= 1", "t >= 1");
    if (t + h > k - 1) throw ParamWindowError("twist requires t + h <= k - 1", "t + h <= k - 1");
    if (eta.is_zero()) throw ParamWindowError("twist requires eta != 0", "eta != 0");
}

std::vector<Poly> twisted_basis(const FieldCtx& F, const TwistParams& tp) {
    if (&tp.eta.ctx() != &F) throw FieldMismatchError("eta from another field");
    if (tp.k - 1 + tp.t > F.q() - 1)
        throw ParamWindowError("twisted degree exceeds q - 1", "k - 1 + t <= q - 1");
    std::vector<Poly> out;
    out.reserve(tp.k);
    for (uint32_t s = 0; s < tp.k; ++s) {
        if (s == tp.h)
            out.push_back(Poly::monomial(F, tp.h) +
                          Poly::monomial(F, tp.k - 1 + tp.t, tp.eta));
        else
            out.push_back(Poly::monomial(F, s));
    }
    return out;
}

SpaceBasis::SpaceBasis(const FieldCtx& F, std::vector<Poly> ps)
    : ctx(&F), polys(std::move(ps)) {
    if (polys.empty()) return;
    // Independence check on the coefficient matrix (exponents reduced first
    // so evaluation-equal monomials collide rather than fake independence).
    size_t width = 0;
    std::vector<Poly> reduced;
    reduced.reserve(polys.size());
    for (const auto& f : polys) {
        if (&f.ctx() != &F) throw FieldMismatchError("basis polynomial from another field");
        reduced.push_back(f.reduce_mod_field());
        width = std::max(width, reduced.back().coeff_values().size());
    }
    std::vector<std::vector<uint32_t>> rows;
    for (const auto& f : reduced) {
        std::vector<uint32_t> row(f.coeff_values());
        row.resize(width, 0);
        rows.push_back(std::move(row));
    }
    Matrix M = Matrix::from_value_rows(F, rows);
    if (rank(M) != polys.size())
        throw std::invalid_argument("basis polynomials are linearly dependent");
}

SpaceBasis dual_space_basis(const FieldCtx& F, const TwistParams& tp) {
    if (&tp.eta.ctx() != &F) throw FieldMismatchError("eta from another field");
    const uint32_t q = F.q();
    const uint32_t k = tp.k, t = tp.t, h = tp.h;
    if (2 * k > q) throw ParamWindowError("dual form requires 2k <= q", "2k <= q");

    const FieldElem eta = tp.eta;
    const FieldElem eta2 = eta * eta;
    // All exponent bounds are signed: boundary cells (e.g. 2k = q-t+1) push
    // the top monomial exponent to -1, meaning "no monomials".
    const int64_t Q = q, K = k, T = t;
    std::vector<Poly> out;
    auto monos = [&](int64_t lo, int64_t hi, int64_t skip) {
        for (int64_t e = lo; e <= hi; ++e)
            if (e != skip) out.push_back(Poly::monomial(F, uint64_t(e)));
    };

    if (2 * k > q - t + 1) return SpaceBasis(F, {});  // regime 1: dual is {0}

    if (2 * k > q - 2 * t + 1) {  // regime 2
        if (h == 0 && t == k - 1) {
            monos(0, Q - 3 * K + 1, -1);
            Poly glued = Poly::monomial(F, q - 2 * k) - Poly::monomial(F, q - 2, eta);
            if (Q == 4 * K - 4)
                glued = glued + Poly::monomial(F, q - 1, eta2 * eta);
            else if (Q > 4 * K - 4)
                throw std::logic_error("regime 2 with q > 4k - 4 at (h,t)=(0,k-1)");
            out.push_back(glued);
        } else {
            monos(0, Q - 2 * K - T, -1);
        }
        return SpaceBasis(F, std::move(out));
    }

    // regime 3
    if (k == 3 && t == 1 && h == 1) {
        // Degenerate cell: the square loses one dimension, so the dual gains
        // a glued generator on top of the h >= 1 monomial form.
        monos(0, Q - 8, -1);
        out.push_back(Poly::monomial(F, q - 6) - Poly::monomial(F, q - 4, eta) +
                      Poly::monomial(F, q - 2, eta2));
        return SpaceBasis(F, std::move(out));
    }
    if (h == 0 && t == k - 1) {
        const uint32_t e1 = q - 4 * k + 3;
        const FieldElem c0 = (Q == 4 * K - 3) ? F.one() + eta2 : F.one();
        monos(0, Q - 3 * K + 1, e1);
        out.push_back(Poly::monomial(F, e1, c0) - Poly::monomial(F, q - 1, eta2));
        out.push_back(Poly::monomial(F, q - 2 * k) - Poly::monomial(F, q - 2, eta));
        return SpaceBasis(F, std::move(out));
    }
    if (h == 0) {
        const uint32_t ex = q - 2 * k - 2 * t + 1;
        const FieldElem c0 = (Q == 2 * K + 2 * T - 1) ? F.one() + eta2 : F.one();
        monos(0, Q - 2 * K - T, ex);
        out.push_back(Poly::monomial(F, ex, c0) - Poly::monomial(F, q - 1, eta2));
        return SpaceBasis(F, std::move(out));
    }
    monos(0, Q - 2 * K - T, Q - 2 * K - 2 * T + 1);
    return SpaceBasis(F, std::move(out));
}

}  // namespace gtrskit
