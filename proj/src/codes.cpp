#include "gtrskit/codes.hpp"

#include <algorithm>

namespace gtrskit {

namespace {

// q^k saturating at UINT64_MAX, for guard comparisons.
uint64_t sat_pow(uint64_t q, uint64_t k) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < k; ++i) {
        if (r > UINT64_MAX / q) return UINT64_MAX;
        r *= q;
    }
    return r;
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

LinearCode LinearCode::from_generators(const Matrix& rows) {
    Matrix R = rref(rows);
    Matrix gen = R;
    return LinearCode(std::move(gen), std::move(R));
}

LinearCode make_code_from_literal_rows(const Matrix& rows) {
    Matrix R = rref(rows);
    if (R.rows() != rows.rows())
        throw std::invalid_argument("literal generator rows are linearly dependent");
    return LinearCode(rows, std::move(R));
}

bool LinearCode::contains(const std::vector<FieldElem>& word) const {
    const FieldCtx& F = ctx();
    if (word.size() != n()) throw std::invalid_argument("word length differs from code length");
    std::vector<uint32_t> w(n());
    for (size_t j = 0; j < n(); ++j) {
        if (&word[j].ctx() != &F) throw FieldMismatchError("word entry from another field");
        w[j] = word[j].value();
    }
    // Reduce against the canonical form: each row has a unit pivot.
    for (size_t i = 0; i < rref_.rows(); ++i) {
        size_t p = 0;
        while (p < n() && rref_.vat(i, p) == 0) ++p;
        if (p == n()) continue;
        uint32_t f = w[p];
        if (!f) continue;
        for (size_t j = p; j < n(); ++j)
            w[j] = F.vsub(w[j], F.vmul(f, rref_.vat(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](uint32_t v) { return v == 0; });
}

LinearCode dual(const LinearCode& C) {
    return make_code_from_literal_rows(nullspace(C.rref_generator()));
}

LinearCode schur_product(const LinearCode& A, const LinearCode& B) {
    const FieldCtx& F = A.ctx();
    if (&F != &B.ctx()) throw FieldMismatchError("codes from different fields");
    if (A.n() != B.n()) throw std::invalid_argument("code lengths differ");
    const size_t n = A.n();
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(A.k() * B.k());
    const Matrix& GA = A.rref_generator();
    const Matrix& GB = B.rref_generator();
    for (size_t i = 0; i < A.k(); ++i)
        for (size_t j = 0; j < B.k(); ++j) {
            std::vector<uint32_t> r(n);
            for (size_t c = 0; c < n; ++c) r[c] = F.vmul(GA.vat(i, c), GB.vat(j, c));
            rows.push_back(std::move(r));
        }
    if (rows.empty()) return LinearCode::from_generators(Matrix(F, 0, n));
    return LinearCode::from_generators(Matrix::from_value_rows(F, rows));
}

LinearCode schur_square(const LinearCode& C) { return schur_product(C, C); }

bool is_self_orthogonal(const LinearCode& C) { return gram(C.rref_generator()).is_zero(); }

namespace {

DistanceReport exhaustive_distance(const LinearCode& C, const SearchLimits& limits) {
    const FieldCtx& F = C.ctx();
    const size_t n = C.n(), k = C.k();
    const uint64_t q = F.q();
    if (sat_pow(q, k) > limits.exhaustive_guard)
        throw GuardExceededError("message space exceeds the exhaustive guard");
    const Matrix& G = C.rref_generator();
    DistanceReport rep;
    rep.method = DistanceMethod::Exhaustive;
    rep.exact = true;
    size_t best = n + 1;
    std::vector<uint32_t> bestcw;
    // Weight is scaling-invariant, so enumerate only messages whose first
    // nonzero coordinate is 1: (q^k - 1)/(q - 1) of them.
    std::vector<uint32_t> cw(n);
    std::vector<uint32_t> tail;
    for (size_t lead = 0; lead < k; ++lead) {
        const size_t tlen = k - 1 - lead;
        tail.assign(tlen, 0);
        while (true) {
            // codeword = G[lead] + sum tail[i] * G[lead+1+i]
            for (size_t c = 0; c < n; ++c) cw[c] = G.vat(lead, c);
            for (size_t i = 0; i < tlen; ++i) {
                if (!tail[i]) continue;
                for (size_t c = 0; c < n; ++c)
                    cw[c] = F.vadd(cw[c], F.vmul(tail[i], G.vat(lead + 1 + i, c)));
            }
            size_t w = 0;
            for (uint32_t v : cw) w += (v != 0);
            if (w < best) {
                best = w;
                bestcw = cw;
            }
            size_t d = 0;
            while (d < tlen && tail[d] + 1 == q) tail[d++] = 0;
            if (d == tlen) break;
            ++tail[d];
        }
    }
    rep.d = best;
    std::vector<FieldElem> word;
    word.reserve(n);
    for (uint32_t v : bestcw) word.push_back(F.elem(v));
    rep.codeword = std::move(word);
    return rep;
}

DistanceReport minor_scan_distance(const LinearCode& C, const SearchLimits& limits) {
    const FieldCtx& F = C.ctx();
    const size_t n = C.n(), k = C.k();
    if (k > n) throw std::invalid_argument("k exceeds n");
    if (sat_binom(n, k) > limits.minor_guard)
        throw GuardExceededError("column-selection count exceeds the minor-scan guard");
    const Matrix& G = C.rref_generator();
    DistanceReport rep;
    rep.method = DistanceMethod::MinorScan;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<std::vector<uint32_t>> sub(k, std::vector<uint32_t>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = G.vat(i, idx[j]);
        if (rank(Matrix::from_value_rows(F, sub)) < k) {
            // Singular selection: some codeword vanishes on k coordinates,
            // so d <= n-k; report the witness and the (inexact) bound.
            rep.d = n - k;
            rep.exact = false;
            rep.singular_columns = idx;
            return rep;
        }
        // advance combination
        size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) {
                // All k-column selections nonsingular: the code is MDS.
                rep.d = n - k + 1;
                rep.exact = true;
                return rep;
            }
        }
    }
}

}  // namespace

DistanceReport min_distance(const LinearCode& C, DistanceMethod method,
                            const SearchLimits& limits) {
    if (C.k() == 0) throw ParamWindowError("distance needs a nonzero code", "k >= 1");
    switch (method) {
        case DistanceMethod::Exhaustive:
            return exhaustive_distance(C, limits);
        case DistanceMethod::MinorScan:
            return minor_scan_distance(C, limits);
        case DistanceMethod::Auto: {
            if (sat_pow(C.ctx().q(), C.k()) <= limits.exhaustive_guard)
                return exhaustive_distance(C, limits);
            return minor_scan_distance(C, limits);
        }
    }
    throw std::logic_error("unknown distance method");
}

CodeClass classify(const LinearCode& C, const SearchLimits& limits) {
    const size_t n = C.n(), k = C.k();
    CodeClass out;
    DistanceReport rep = min_distance(C, DistanceMethod::Auto, limits);
    out.d = rep.d;
    if (rep.exact && rep.d == n - k + 1) {
        out.tag = CodeClass::Tag::MDS;
        return out;
    }
    if (rep.exact && rep.d == n - k) {
        // Near-MDS also needs dual distance exactly k.
        try {
            DistanceReport dd = min_distance(dual(C), DistanceMethod::Exhaustive, limits);
            out.dual_d = dd.d;
            out.dual_verified = true;
            out.tag = (dd.d == k) ? CodeClass::Tag::NMDS : CodeClass::Tag::Other;
        } catch (const GuardExceededError&) {
            out.dual_verified = false;
            out.tag = CodeClass::Tag::NMDS;  // claimed, explicitly unverified
        }
        return out;
    }
    out.tag = CodeClass::Tag::Other;
    return out;
}

std::optional<size_t> non_grs_certificate(const LinearCode& C) {
    const size_t n = C.n(), k = C.k();
    if (2 * k >= n + 1)
        throw ParamWindowError("square-dimension criterion needs k < (n+1)/2",
                               "2k <= n");
    size_t dim = schur_square(C).k();
    if (dim >= 2 * k) return dim;
    return std::nullopt;
}

}  // namespace gtrskit
