#include "gtrskit/constructions.hpp"

#include <algorithm>
#include <set>

namespace gtrskit {

SelfOrthWitness self_orth_feasibility(const EvalConfig& cfg, const TwistParams& tp) {
    const FieldCtx& F = *cfg.ctx;
    if (&tp.eta.ctx() != &F) throw FieldMismatchError("eta from another field");
    const size_t n = cfg.n();
    if (2 * size_t(tp.k) > n)
        throw ParamWindowError("feasibility test needs 2k <= n", "2k <= n");

    SpaceBasis B = dual_space_basis(F, tp);
    SelfOrthWitness out(F);
    out.dual_dim = B.dim();

    // Target interpolation data over all q canonical elements: v_j^2 on the
    // evaluation points, 0 on the off-support elements.
    std::vector<FieldElem> target(F.q(), F.zero());
    for (size_t j = 0; j < n; ++j)
        target[cfg.points[j].value()] = cfg.multipliers[j] * cfg.multipliers[j];

    std::vector<FieldElem> all = F.elements();
    std::vector<std::vector<uint32_t>> cols(B.dim());
    for (size_t i = 0; i < B.dim(); ++i) {
        cols[i].resize(F.q());
        for (uint32_t a = 0; a < F.q(); ++a)
            cols[i][a] = B.polys[i].eval(all[a]).value();
    }
    // A[a][i] = B_i(element a); solve A c = target.
    Matrix A(F, F.q(), B.dim());
    for (uint32_t a = 0; a < F.q(); ++a)
        for (size_t i = 0; i < B.dim(); ++i) A.vset(a, i, cols[i][a]);
    AffineSolution sol = solve_affine(A, target);
    if (!sol.feasible) {
        out.feasible = false;
        out.witness_row = sol.witness_row;
        return out;
    }
    out.feasible = true;
    out.coeffs = sol.x;
    Poly f(F);
    for (size_t i = 0; i < B.dim(); ++i) f = f + B.polys[i].scaled(sol.x[i]);
    // Witness validation: the claimed f must reproduce the target exactly.
    for (uint32_t a = 0; a < F.q(); ++a)
        if (f.eval(all[a]) != target[a])
            throw std::logic_error("feasibility witness failed re-evaluation");
    out.witness = std::move(f);
    return out;
}

bool corollary41_predicate(const FieldCtx& F, uint32_t k, uint32_t t) {
    return 2 * int64_t(k) > int64_t(F.q()) - t + 1;
}

bool corollary42_predicate(const FieldCtx& F, size_t n, uint32_t k, uint32_t t,
                           uint32_t h) {
    if (h == 0 && t == k - 1) return false;
    if (k < 3) return false;
    if (2 * int64_t(k) > int64_t(F.q()) - t + 1) return false;
    return int64_t(n) < 2 * int64_t(k) + t;
}

std::optional<std::pair<uint32_t, uint32_t>> strict_window(const FieldCtx& F, uint32_t t) {
    if (t < 1) throw ParamWindowError("window needs t >= 1", "t >= 1");
    const int64_t q = F.q();
    if (2 * int64_t(t) >= q)
        throw ParamWindowError("window needs 2t < q", "2t < q");
    int64_t kmin = (q - 2 * int64_t(t) + 1) / 2 + 1;  // least k with 2k > q-2t+1
    int64_t kmax = (q - int64_t(t) + 1 - 1) / 2;      // greatest k with 2k < q-t+1
    kmin = std::max<int64_t>(kmin, 3);
    if (kmin > kmax) return std::nullopt;
    return std::make_pair(uint32_t(kmin), uint32_t(kmax));
}

namespace {

void check_strict_window(const FieldCtx& F, const TwistParams& tp) {
    auto window = strict_window(F, tp.t);
    if (!window)
        throw EmptyWindowError("no integer k lies strictly inside the regime-2 window",
                               "(q-2t+1)/2 < k < (q-t+1)/2");
    if (tp.k < window->first || tp.k > window->second)
        throw ParamWindowError("k outside the strict regime-2 window",
                               "(q-2t+1)/2 < k < (q-t+1)/2");
}

// Certify and package: every constructor ends by running the feasibility
// test and the direct Gram check; a failure here is a library bug, not a
// caller error.
Construction finish(EvalConfig cfg, const TwistParams& tp) {
    LinearCode code = gtrs_code(cfg, tp);
    SelfOrthWitness w = self_orth_feasibility(cfg, tp);
    if (!w.feasible || !is_self_orthogonal(code))
        throw std::logic_error("construction violated its self-orthogonality guarantee");
    return Construction(std::move(code), std::move(cfg), tp, std::move(w));
}

}  // namespace

Construction construct_tc1(const FieldCtx& F, const TwistParams& tp,
                           const std::vector<FieldElem>& excluded) {
    check_strict_window(F, tp);
    const uint32_t q = F.q();
    const int64_t slack = int64_t(q) - 2 * int64_t(tp.k) - tp.t;  // >= 0 inside the window
    if (2 * int64_t(excluded.size()) > slack)
        throw ParamWindowError("too many excluded points", "2l <= q-2k-t");
    std::set<uint32_t> ex;
    for (const auto& b : excluded) {
        if (&b.ctx() != &F) throw FieldMismatchError("excluded point from another field");
        if (!ex.insert(b.value()).second)
            throw std::invalid_argument("excluded points must be distinct");
    }
    std::vector<FieldElem> points;
    std::vector<FieldElem> mults;
    for (uint32_t a = 0; a < q; ++a) {
        if (ex.count(a)) continue;
        uint32_t v = 1;
        for (uint32_t b : ex) v = F.vmul(v, F.vsub(a, b));
        points.push_back(F.elem(a));
        mults.push_back(F.elem(v));
    }
    return finish(EvalConfig(F, std::move(points), std::move(mults)), tp);
}

Construction construct_tc2(const FieldCtx& F, const TwistParams& tp,
                           const std::vector<FieldElem>& pts) {
    if (F.p() != 2 || F.m() <= 2)
        throw ParamWindowError("construction needs q = 2^m with m > 2", "q = 2^m, m > 2");
    check_strict_window(F, tp);
    if (pts.size() < 2 * size_t(tp.k) + tp.t)
        throw ParamWindowError("too few points", "n >= 2k+t");
    const uint32_t q = F.q();
    std::set<uint32_t> in;
    for (const auto& a : pts) {
        if (&a.ctx() != &F) throw FieldMismatchError("point from another field");
        if (!in.insert(a.value()).second)
            throw std::invalid_argument("points must be distinct");
    }
    std::vector<FieldElem> mults;
    mults.reserve(pts.size());
    for (const auto& a : pts) {
        uint32_t v = 1;
        for (uint32_t b = 0; b < q; ++b)
            if (!in.count(b)) v = F.vmul(v, F.vsub(a.value(), b));
        mults.push_back(F.elem(F.vpow(v, q / 2)));  // square root in characteristic 2
    }
    return finish(EvalConfig(F, pts, std::move(mults)), tp);
}

namespace {

void check_proper_subfield(const FieldCtx& F, uint32_t r) {
    if (r < 3) throw ParamWindowError("subfield construction needs r >= 3", "r >= 3");
    if (F.m() % r != 0 || r >= F.m())
        throw ParamWindowError("subfield must be proper", "r | m, r < m");
}

}  // namespace

Construction construct_ct4(const FieldCtx& F, uint32_t r, uint32_t condition,
                           const TwistParams& tp) {
    check_proper_subfield(F, r);
    uint64_t pr = 1;
    for (uint32_t i = 0; i < r; ++i) pr *= F.p();
    const uint64_t k = tp.k, t = tp.t;
    switch (condition) {
        case 1:
            if (!(t == 1 && 2 * k + t + 2 == pr))
                throw ParamWindowError("condition 1 needs t = 1 and 2k+3 = p^r",
                                       "t = 1, 2k+3 = p^r");
            break;
        case 2:
            if (!(t % 2 == 1 && t >= 3 && 2 * k + t == pr))
                throw ParamWindowError("condition 2 needs odd t >= 3 and 2k+t = p^r",
                                       "t odd >= 3, 2k+t = p^r");
            break;
        case 3:
            if (!(t == 2 && 2 * k + t + 3 == pr))
                throw ParamWindowError("condition 3 needs t = 2 and 2k+5 = p^r",
                                       "t = 2, 2k+5 = p^r");
            break;
        case 4:
            if (!(t % 2 == 0 && t >= 4 && 2 * k + t + 1 == pr))
                throw ParamWindowError("condition 4 needs even t >= 4 and 2k+t+1 = p^r",
                                       "t even >= 4, 2k+t+1 = p^r");
            break;
        default:
            throw std::invalid_argument("condition must be 1..4");
    }
    return finish(EvalConfig::with_points(F, F.subfield_elements(r)), tp);
}

Construction construct_ct5(const FieldCtx& F, uint32_t r, uint32_t condition,
                           const TwistParams& tp) {
    if (F.p() != 2)
        throw ParamWindowError("construction needs q = 2^m", "p = 2");
    check_proper_subfield(F, r);
    const uint64_t n = (uint64_t(1) << r) - 1;
    const uint64_t k = tp.k, t = tp.t;
    switch (condition) {
        case 1:
            if (!(t == 2 && 2 * k + t + 3 == n))
                throw ParamWindowError("condition 1 needs t = 2 and 2k+5 = 2^r-1",
                                       "t = 2, 2k+5 = 2^r-1");
            break;
        case 2:
            if (!(t % 2 == 0 && t >= 4 && 2 * k + t + 1 == n))
                throw ParamWindowError("condition 2 needs even t >= 4 and 2k+t+1 = 2^r-1",
                                       "t even >= 4, 2k+t+1 = 2^r-1");
            break;
        case 3:
            if (!(t == 1 && 2 * k + t + 2 == n))
                throw ParamWindowError("condition 3 needs t = 1 and 2k+3 = 2^r-1",
                                       "t = 1, 2k+3 = 2^r-1");
            break;
        case 4:
            if (!(t % 2 == 1 && t >= 3 && 2 * k + t == n))
                throw ParamWindowError("condition 4 needs odd t >= 3 and 2k+t = 2^r-1",
                                       "t odd >= 3, 2k+t = 2^r-1");
            break;
        default:
            throw std::invalid_argument("condition must be 1..4");
    }
    const uint32_t q = F.q();
    std::vector<FieldElem> pts;
    std::set<uint32_t> in;
    for (const auto& a : F.subfield_elements(r))
        if (!a.is_zero()) {
            pts.push_back(a);
            in.insert(a.value());
        }
    std::vector<FieldElem> mults;
    mults.reserve(pts.size());
    for (const auto& a : pts) {
        uint32_t v = 1;
        for (uint32_t b = 0; b < q; ++b)
            if (!in.count(b)) v = F.vmul(v, F.vsub(a.value(), b));
        mults.push_back(F.elem(F.vpow(v, q / 2)));
    }
    return finish(EvalConfig(F, std::move(pts), std::move(mults)), tp);
}

FieldElem sample_eta_outside_subfield(const FieldCtx& F, uint32_t r, uint64_t seed) {
    if (r == 0 || F.m() % r != 0 || r >= F.m())
        throw ParamWindowError("sampling needs a proper subfield", "r | m, r < m");
    uint64_t pr = 1;
    for (uint32_t i = 0; i < r; ++i) pr *= F.p();
    std::mt19937_64 gen(seed);
    while (true) {
        uint32_t v = uint32_t(rand_below(gen, F.q()));
        if (F.vpow(v, pr) != v) return F.elem(v);
    }
}

}  // namespace gtrskit
