#include "gtrskit/gtrs.hpp"

#include <algorithm>
#include <set>

namespace gtrskit {

EvalConfig::EvalConfig(const FieldCtx& F, std::vector<FieldElem> pts,
                       std::vector<FieldElem> mults)
    : ctx(&F), points(std::move(pts)), multipliers(std::move(mults)) {
    if (points.empty()) throw std::invalid_argument("need at least one evaluation point");
    if (points.size() > F.q()) throw std::invalid_argument("more points than field elements");
    if (multipliers.size() != points.size())
        throw std::invalid_argument("multiplier count differs from point count");
    std::set<uint32_t> seen;
    for (const auto& a : points) {
        if (&a.ctx() != &F) throw FieldMismatchError("point from another field");
        if (!seen.insert(a.value()).second)
            throw std::invalid_argument("evaluation points must be distinct");
    }
    for (const auto& v : multipliers) {
        if (&v.ctx() != &F) throw FieldMismatchError("multiplier from another field");
        if (v.is_zero()) throw std::invalid_argument("multipliers must be nonzero");
    }
}

EvalConfig EvalConfig::standard(const FieldCtx& F) {
    return with_points(F, F.elements());
}

EvalConfig EvalConfig::with_points(const FieldCtx& F, std::vector<FieldElem> pts) {
    std::vector<FieldElem> ones(pts.size(), F.one());
    return EvalConfig(F, std::move(pts), std::move(ones));
}

namespace {

Matrix eval_rows(const EvalConfig& cfg, const std::vector<Poly>& polys) {
    const FieldCtx& F = *cfg.ctx;
    const size_t n = cfg.n();
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(polys.size());
    for (const auto& f : polys) {
        std::vector<uint32_t> r(n);
        for (size_t j = 0; j < n; ++j)
            r[j] = F.vmul(cfg.multipliers[j].value(), f.eval(cfg.points[j]).value());
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return Matrix(F, 0, n);
    return Matrix::from_value_rows(F, rows);
}

uint64_t sat_binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

LinearCode gtrs_code(const EvalConfig& cfg, const TwistParams& tp) {
    if (&tp.eta.ctx() != cfg.ctx) throw FieldMismatchError("eta from another field");
    if (tp.k + tp.t > cfg.n())
        throw ParamWindowError("twisted rows need k + t <= n", "k + t <= n");
    return make_code_from_literal_rows(eval_rows(cfg, twisted_basis(*cfg.ctx, tp)));
}

LinearCode grs_code(const EvalConfig& cfg, uint32_t k) {
    if (k == 0 || k > cfg.n())
        throw ParamWindowError("generalized code needs 1 <= k <= n", "1 <= k <= n");
    std::vector<Poly> monos;
    monos.reserve(k);
    for (uint32_t s = 0; s < k; ++s) monos.push_back(Poly::monomial(*cfg.ctx, s));
    return make_code_from_literal_rows(eval_rows(cfg, monos));
}

LinearCode rs_code(const FieldCtx& F, uint32_t k) {
    return grs_code(EvalConfig::standard(F), k);
}

std::vector<FieldElem> t_k_set(const std::vector<FieldElem>& points, uint32_t k,
                               const SearchLimits& limits) {
    if (points.empty()) throw std::invalid_argument("need at least one point");
    const FieldCtx& F = points[0].ctx();
    const size_t n = points.size();
    if (k == 0 || k >= n) throw ParamWindowError("index set needs 1 <= k < n", "1 <= k < n");
    for (const auto& a : points) {
        if (&a.ctx() != &F) throw FieldMismatchError("point from another field");
        if (a.is_zero())
            throw ParamWindowError("index products need nonzero points", "alpha_i != 0");
    }
    if (sat_binom(n, k) > limits.minor_guard)
        throw GuardExceededError("subset count exceeds the minor-scan guard");
    std::set<uint32_t> values;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        uint32_t prod = 1;
        for (size_t i : idx) prod = F.vmul(prod, F.vinv(points[i].value()));
        if (k % 2 == 1) prod = F.vneg(prod);
        values.insert(prod);
        size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::vector<FieldElem> out;
    out.reserve(values.size());
    for (uint32_t v : values) out.push_back(F.elem(v));
    return out;
}

Regime regime(const FieldCtx& F, uint32_t k, uint32_t t) {
    const uint32_t q = F.q();
    if (k < 3) throw ParamWindowError("regimes start at k = 3", "k >= 3");
    if (t < 1) throw ParamWindowError("regimes need t >= 1", "t >= 1");
    if (2 * k > q) throw ParamWindowError("regimes end at k = q/2", "2k <= q");
    if (2 * k <= q - 2 * t + 1) return Regime::R3;
    if (2 * k <= q - t + 1) return Regime::R2;
    return Regime::R1;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::R1: return "R1";
        case Regime::R2: return "R2";
        case Regime::R3: return "R3";
    }
    throw std::logic_error("unknown regime");
}

SpanForm schur_span_polys(const FieldCtx& F, const TwistParams& tp) {
    if (&tp.eta.ctx() != &F) throw FieldMismatchError("eta from another field");
    const uint32_t k = tp.k, t = tp.t, h = tp.h;
    const FieldElem eta = tp.eta;
    const FieldElem eta2 = eta * eta;
    SpanForm out;
    auto monos = [&](uint32_t lo, uint32_t hi, std::initializer_list<uint32_t> skips) {
        for (uint32_t e = lo; e <= hi; ++e)
            if (std::find(skips.begin(), skips.end(), e) == skips.end())
                out.polys.push_back(Poly::monomial(F, e));
    };
    if (k == 3 && t == 1 && h == 1) {
        out.case_label = "degenerate(3,1,1)";
        monos(0, 6, {1, 3, 5});
        out.polys.push_back(Poly::monomial(F, 1) + Poly::monomial(F, 3, eta));
        out.polys.push_back(Poly::monomial(F, 3) + Poly::monomial(F, 5, eta));
        return out;
    }
    if (h == 0 && t == k - 1) {
        out.case_label = "h=0,t=k-1";
        monos(0, 3 * k - 3, {0, 1, 2 * k - 1});
        out.polys.push_back(Poly::monomial(F, 1) + Poly::monomial(F, 2 * k - 1, eta));
        out.polys.push_back(Poly::one(F) + Poly::monomial(F, 4 * k - 4, eta2));
        return out;
    }
    if (h == 0) {
        out.case_label = "h=0,t<=k-2";
        monos(1, 2 * k - 2 + t, {});
        out.polys.push_back(Poly::one(F) + Poly::monomial(F, 2 * k + 2 * t - 2, eta2));
        return out;
    }
    out.case_label = "h>=1";
    monos(0, 2 * k - 2 + t, {});
    out.polys.push_back(Poly::monomial(F, 2 * k + 2 * t - 2));
    return out;
}

SpanForm full_support_square_span(const FieldCtx& F, const TwistParams& tp) {
    if (regime(F, tp.k, tp.t) == Regime::R1) {
        SpanForm out;
        out.case_label = "R1(full)";
        for (uint32_t e = 0; e < F.q(); ++e) out.polys.push_back(Poly::monomial(F, e));
        return out;
    }
    return schur_span_polys(F, tp);
}

size_t full_support_square_dim(const FieldCtx& F, const TwistParams& tp) {
    const uint32_t q = F.q(), k = tp.k, t = tp.t, h = tp.h;
    if (k == 3 && t == 1 && h == 1) return 6;
    switch (regime(F, k, t)) {
        case Regime::R1: return q;
        case Regime::R2: return (h == 0 && t == k - 1) ? 3 * k - 3 : 2 * k - 1 + t;
        case Regime::R3:
            if (h == 0 && t == k - 1) return 3 * k - 3;
            return h == 0 ? 2 * k - 1 + t : 2 * k + t;
    }
    throw std::logic_error("unknown regime");
}

SpanCheck verify_product_span(const EvalConfig& cfg, const TwistParams& tp) {
    LinearCode sq = schur_square(gtrs_code(cfg, tp));
    SpanForm form = schur_span_polys(*cfg.ctx, tp);
    // Squaring doubles the column multipliers, so the right-hand side is the
    // span evaluated under v_j^2.
    std::vector<FieldElem> m2;
    m2.reserve(cfg.n());
    for (const auto& v : cfg.multipliers) m2.push_back(v * v);
    EvalConfig cfg2(*cfg.ctx, cfg.points, std::move(m2));
    Matrix rhs = eval_rows(cfg2, form.polys);
    SpanCheck chk;
    chk.case_label = form.case_label;
    chk.dim_lhs = sq.k();
    chk.dim_rhs = rank(rhs);
    chk.ok = row_space_equal(sq.rref_generator(), rhs);
    return chk;
}

SpanCheck verify_full_support_square(const FieldCtx& F, const TwistParams& tp) {
    EvalConfig cfg = EvalConfig::standard(F);
    LinearCode sq = schur_square(gtrs_code(cfg, tp));
    SpanForm form = full_support_square_span(F, tp);
    Matrix rhs = eval_rows(cfg, form.polys);
    SpanCheck chk;
    chk.case_label = form.case_label;
    chk.dim_lhs = sq.k();
    chk.dim_rhs = full_support_square_dim(F, tp);
    chk.ok = row_space_equal(sq.rref_generator(), rhs) && sq.k() == chk.dim_rhs;
    return chk;
}

SpanCheck verify_square_dual(const FieldCtx& F, const TwistParams& tp) {
    EvalConfig cfg = EvalConfig::standard(F);
    LinearCode d = dual(schur_square(gtrs_code(cfg, tp)));
    SpaceBasis basis = dual_space_basis(F, tp);
    Matrix rhs = eval_rows(cfg, basis.polys);  // unit multipliers
    SpanCheck chk;
    chk.case_label = regime_name(regime(F, tp.k, tp.t));
    chk.dim_lhs = d.k();
    chk.dim_rhs = basis.dim();
    chk.ok = row_space_equal(d.rref_generator(), rhs) && d.k() == basis.dim();
    return chk;
}

bool verify_power_sums(const FieldCtx& F, uint32_t l) {
    const uint32_t q = F.q();
    if (l == 0 || l >= q - 1)
        throw ParamWindowError("power-sum window is 0 < l < q-1", "0 < l < q-1");
    // Sums depend only on s1+s2 in [0, q-2]; check each once, then the
    // boundary exponent q-1.
    for (uint32_t s1 = 0; s1 <= l; ++s1)
        for (uint32_t s2 = 0; s2 + l <= q - 2; ++s2)
            if (!power_sum(F, uint64_t(s1) + s2).is_zero()) return false;
    return power_sum(F, q - 1) == -F.one();
}

bool verify_rs_duality(const FieldCtx& F, uint32_t k) {
    const uint32_t q = F.q();
    if (k == 0 || k >= q)
        throw ParamWindowError("duality window is 1 <= k <= q-1", "1 <= k <= q-1");
    return dual(rs_code(F, k)) == rs_code(F, q - k);
}

uint64_t rand_below(std::mt19937_64& gen, uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty draw range");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t u;
    do {
        u = gen();
    } while (u >= limit);
    return u % n;
}

std::vector<FieldElem> seeded_etas(const FieldCtx& F, uint64_t seed, size_t count) {
    std::mt19937_64 gen(seed);
    std::vector<FieldElem> out;
    out.reserve(count);
    while (out.size() < count) {
        uint64_t v = rand_below(gen, F.q());
        if (v != 0) out.push_back(F.elem(uint32_t(v)));
    }
    return out;
}

}  // namespace gtrskit
