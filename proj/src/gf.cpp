#include "gtrskit/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

namespace gtrskit {

namespace {

// Raw coefficient-vector helpers over GF(p), used only while building a
// context (after that, all arithmetic goes through the exp/log tables).

std::vector<uint32_t> value_digits(uint32_t v, uint32_t p, uint32_t m) {
    std::vector<uint32_t> d(m);
    for (uint32_t i = 0; i < m; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

uint32_t digits_value(const std::vector<uint32_t>& d, uint32_t p) {
    uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// Multiply two elements in coefficient form modulo the field modulus.
uint32_t raw_mul(uint32_t a, uint32_t b, uint32_t p, uint32_t m,
                 const std::vector<uint32_t>& modulus) {
    std::vector<uint32_t> da = value_digits(a, p, m), db = value_digits(b, p, m);
    std::vector<uint64_t> prod(2 * m - 1, 0);
    for (uint32_t i = 0; i < m; ++i)
        if (da[i])
            for (uint32_t j = 0; j < m; ++j) prod[i + j] += uint64_t(da[i]) * db[j];
    for (size_t i = prod.size(); i-- > m;) {
        uint64_t c = prod[i] % p;
        prod[i] = 0;
        if (c)
            for (uint32_t j = 0; j < m; ++j)
                prod[i - m + j] += c * (p - modulus[j]);  // x^m = -sum c_j x^j
    }
    std::vector<uint32_t> out(m);
    for (uint32_t i = 0; i < m; ++i) out[i] = uint32_t(prod[i] % p);
    return digits_value(out, p);
}

uint32_t raw_pow(uint32_t a, uint64_t e, uint32_t p, uint32_t m,
                 const std::vector<uint32_t>& modulus) {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = raw_mul(r, a, p, m, modulus);
        a = raw_mul(a, a, p, m, modulus);
        e >>= 1;
    }
    return r;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Remainder of c under division by the monic polynomial div over GF(p);
// returns true when the remainder is zero.
bool divides_exactly(const std::vector<uint32_t>& div, std::vector<uint32_t> rem, uint32_t p) {
    const size_t d = div.size() - 1;
    for (size_t i = rem.size(); i-- > d;) {
        uint32_t f = rem[i];
        if (!f) continue;
        size_t sh = i - d;
        for (size_t j = 0; j <= d; ++j) rem[sh + j] = (rem[sh + j] + (p - f) * div[j]) % p;
    }
    for (size_t j = 0; j < d; ++j)
        if (rem[j]) return false;
    return true;
}

// Trial division of the monic candidate (coefficients c, degree m) by every
// monic polynomial of degree 1..m/2 over GF(p).
bool is_irreducible(const std::vector<uint32_t>& c, uint32_t p, uint32_t m) {
    for (uint32_t d = 1; d <= m / 2; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t v = 0; v < count; ++v) {
            std::vector<uint32_t> div = value_digits(uint32_t(v), p, d);
            div.push_back(1);
            if (divides_exactly(div, c, p)) return false;
        }
    }
    return true;
}

struct TableEntry {
    uint32_t p, m;
    std::vector<uint32_t> modulus;
};

// Precomputed lexicographically least monic irreducibles (by integer value
// of (c_0,...,c_{m-1})) for common shapes; lex_least_modulus covers the rest.
const std::vector<TableEntry>& modulus_table() {
    static const std::vector<TableEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 12, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 14, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 15, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 16, {1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {3, 2, {1, 0, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 1, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 1, 0, 0, 0, 0, 1}},
        {3, 7, {2, 0, 1, 0, 0, 0, 0, 1}},
        {3, 8, {2, 0, 1, 0, 0, 0, 0, 0, 1}},
        {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
        {3, 10, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
        {5, 2, {2, 0, 1}},
        {5, 3, {1, 1, 0, 1}},
        {5, 4, {2, 0, 0, 0, 1}},
        {5, 5, {1, 4, 0, 0, 0, 1}},
        {5, 6, {2, 1, 0, 0, 0, 0, 1}},
        {7, 2, {1, 0, 1}},
        {7, 3, {2, 0, 0, 1}},
        {7, 4, {1, 1, 0, 0, 1}},
        {7, 5, {3, 1, 0, 0, 0, 1}},
        {11, 2, {1, 0, 1}},
        {11, 3, {4, 1, 0, 1}},
        {11, 4, {2, 1, 0, 0, 1}},
        {13, 2, {2, 0, 1}},
        {13, 3, {2, 0, 0, 1}},
        {13, 4, {2, 0, 0, 0, 1}},
        {17, 2, {3, 0, 1}},
        {17, 3, {3, 1, 0, 1}},
        {19, 2, {1, 0, 1}},
        {23, 2, {1, 0, 1}},
    };
    return table;
}

}  // namespace

std::vector<uint32_t> lex_least_modulus(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    if (m == 1) return {0, 1};  // the modulus x: GF(p) itself
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t v = 0; v < count; ++v) {
        std::vector<uint32_t> c = value_digits(uint32_t(v), p, m);
        c.push_back(1);
        if (is_irreducible(c, p, m)) return c;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldSpec prime_power_split(uint32_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    auto fs = prime_factors(q);
    if (fs.size() != 1) throw std::invalid_argument("field order must be a prime power");
    uint32_t p = fs[0], m = 0, r = q;
    while (r > 1) {
        if (r % p != 0) throw std::invalid_argument("field order must be a prime power");
        r /= p;
        ++m;
    }
    return {p, m, {}};
}

FieldCtx::FieldCtx(FieldSpec spec) : spec_(std::move(spec)) {
    const uint32_t p = spec_.p, m = spec_.m;
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 16)) throw std::invalid_argument("field order above 2^16 is unsupported");
    }
    q_ = uint32_t(q);
    char2_ = (p == 2);
    if (spec_.modulus.size() != m + 1 || spec_.modulus[m] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (uint32_t c : spec_.modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (m >= 2 && !is_irreducible(spec_.modulus, p, m))
        throw std::invalid_argument("modulus is reducible");

    neg_.resize(q_);
    for (uint32_t v = 0; v < q_; ++v) {
        auto d = value_digits(v, p, m);
        for (auto& x : d) x = (p - x) % p;
        neg_[v] = digits_value(d, p);
    }

    // Find the canonically first multiplicative generator and fill the tables.
    if (q_ == 2) {
        gen_ = 1;
    } else {
        auto fs = prime_factors(q_ - 1);
        for (uint32_t v = 1; v < q_; ++v) {
            bool ok = true;
            for (uint32_t f : fs)
                if (raw_pow(v, (q_ - 1) / f, p, m, spec_.modulus) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen_ = v;
                break;
            }
        }
    }
    if (gen_ == 0) throw std::logic_error("no multiplicative generator found");
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    uint32_t acc = 1;
    for (uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = acc;
        log_[acc] = i;
        acc = raw_mul(acc, gen_, p, m, spec_.modulus);
    }
    if (acc != 1) throw std::logic_error("generator order mismatch");
}

uint32_t FieldCtx::vadd(uint32_t a, uint32_t b) const {
    if (char2_) return a ^ b;
    if (spec_.m == 1) {
        uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    const uint32_t p = spec_.p;
    uint32_t out = 0, mul = 1;
    while (a || b) {
        uint32_t s = a % p + b % p;
        if (s >= p) s -= p;
        out += s * mul;
        mul *= p;
        a /= p;
        b /= p;
    }
    return out;
}

uint32_t FieldCtx::vneg(uint32_t a) const { return neg_[a]; }

uint32_t FieldCtx::vmul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

uint32_t FieldCtx::vinv(uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero field element");
    uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

uint32_t FieldCtx::vpow(uint32_t a, uint64_t e) const {
    if (e == 0) return 1;  // includes 0^0 = 1
    if (a == 0) return 0;
    uint64_t l = (uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

FieldElem FieldCtx::elem(uint32_t value) const {
    if (value >= q_) throw std::invalid_argument("element index out of range");
    return {this, value};
}

std::vector<FieldElem> FieldCtx::elements() const {
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (uint32_t v = 0; v < q_; ++v) out.emplace_back(this, v);
    return out;
}

std::vector<FieldElem> FieldCtx::subfield_elements(uint32_t r) const {
    if (r == 0 || spec_.m % r != 0)
        throw std::invalid_argument("subfield degree must divide the extension degree");
    uint64_t pr = 1;
    for (uint32_t i = 0; i < r; ++i) pr *= spec_.p;
    std::vector<FieldElem> out;
    out.reserve(size_t(pr));
    for (uint32_t v = 0; v < q_; ++v)
        if (vpow(v, pr) == v) out.emplace_back(this, v);
    return out;
}

std::string FieldCtx::elem_to_string(uint32_t value) const { return std::to_string(value); }

const FieldCtx& make_field(const FieldSpec& spec) {
    static std::mutex mu;
    static std::map<std::pair<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>,
                    std::unique_ptr<FieldCtx>>
        registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(std::make_pair(spec.p, spec.m), spec.modulus);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(spec))).first;
    return *it->second;
}

const FieldCtx& make_field(uint32_t p, uint32_t m) {
    for (const auto& e : modulus_table())
        if (e.p == p && e.m == m) return make_field({p, m, e.modulus});
    return make_field({p, m, lex_least_modulus(p, m)});
}

const FieldCtx& make_field_order(uint32_t q) {
    FieldSpec s = prime_power_split(q);
    return make_field(s.p, s.m);
}

const FieldCtx& FieldElem::ctx() const {
    if (!ctx_) throw std::logic_error("use of default-constructed field element");
    return *ctx_;
}

namespace {
const FieldCtx* same_ctx(const FieldElem& a, const FieldElem& b) {
    const FieldCtx* ca = &a.ctx();
    if (ca != &b.ctx()) throw FieldMismatchError("elements from different field contexts");
    return ca;
}
}  // namespace

FieldElem FieldElem::operator+(FieldElem o) const {
    const FieldCtx* c = same_ctx(*this, o);
    return {c, c->vadd(v_, o.v_)};
}
FieldElem FieldElem::operator-(FieldElem o) const {
    const FieldCtx* c = same_ctx(*this, o);
    return {c, c->vsub(v_, o.v_)};
}
FieldElem FieldElem::operator*(FieldElem o) const {
    const FieldCtx* c = same_ctx(*this, o);
    return {c, c->vmul(v_, o.v_)};
}
FieldElem FieldElem::operator/(FieldElem o) const {
    const FieldCtx* c = same_ctx(*this, o);
    return {c, c->vdiv(v_, o.v_)};
}
FieldElem FieldElem::operator-() const { return {&ctx(), ctx().vneg(v_)}; }
FieldElem FieldElem::inv() const { return {&ctx(), ctx().vinv(v_)}; }
FieldElem FieldElem::pow(uint64_t e) const { return {&ctx(), ctx().vpow(v_, e)}; }

bool FieldElem::operator==(const FieldElem& o) const {
    if (ctx_ == nullptr && o.ctx_ == nullptr) return true;
    same_ctx(*this, o);
    return v_ == o.v_;
}

FieldElem power_sum(const FieldCtx& F, uint64_t l) {
    uint32_t acc = 0;
    for (uint32_t v = 0; v < F.q(); ++v) acc = F.vadd(acc, F.vpow(v, l));
    return F.elem(acc);
}

}  // namespace gtrskit
