#include "doctest.h"

#include <random>

#include "gtrskit/poly.hpp"

using namespace gtrskit;

namespace {
// First basis polynomial of the given degree (there is exactly one in the
// closed-form dual bases used below).
const Poly& by_degree(const SpaceBasis& b, int64_t deg) {
    for (const auto& f : b.polys)
        if (f.degree() == deg) return f;
    REQUIRE(false);
    return b.polys.front();
}
}  // namespace

TEST_CASE("polynomial basics: trim, degree, coefficient access") {
    const FieldCtx& F = make_field_order(13);
    Poly f(F, {1, 2, 0, 0});
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0).value() == 1);
    CHECK(f.coeff(1).value() == 2);
    CHECK(f.coeff(5).value() == 0);  // past the end reads as zero
    CHECK(Poly::zero(F).degree() == -1);
    CHECK(Poly::zero(F).is_zero());
    CHECK(Poly::one(F).degree() == 0);
    CHECK(Poly::monomial(F, 4).degree() == 4);
    CHECK(Poly::monomial(F, 4, F.elem(3)).coeff(4).value() == 3);
}

TEST_CASE("polynomial ring operations") {
    const FieldCtx& F = make_field_order(2);
    Poly xp1(F, {1, 1});
    CHECK((xp1 * xp1) == Poly(F, {1, 0, 1}));  // (x+1)^2 = x^2+1 in char 2
    CHECK((xp1 + xp1).is_zero());

    const FieldCtx& G = make_field_order(7);
    Poly a(G, {1, 2});
    Poly b(G, {3, 0, 1});
    CHECK((a * b).coeff_values() == std::vector<uint32_t>{3, 6, 1, 2});
    CHECK((a - a).is_zero());
    CHECK(a.scaled(G.elem(3)).coeff_values() == std::vector<uint32_t>{3, 6});
}

TEST_CASE("evaluation uses Horner with the 0^0 = 1 convention") {
    const FieldCtx& F = make_field_order(13);
    CHECK(Poly::one(F).eval(F.zero()) == F.one());       // x^0 at 0
    CHECK(Poly::monomial(F, 5).eval(F.zero()) == F.zero());
    Poly f(F, {1, 0, 1});  // x^2 + 1
    CHECK(f.eval(F.elem(5)) == F.zero());  // 25 + 1 = 26 = 0 (mod 13)
    CHECK(f.eval(F.elem(2)).value() == 5);

    auto vals = f.eval_vector({F.elem(5), F.elem(2)});
    REQUIRE(vals.size() == 2);
    CHECK(vals[0] == F.zero());
    CHECK(vals[1].value() == 5);
}

TEST_CASE("poly_from_roots expands correctly") {
    const FieldCtx& F = make_field_order(13);
    Poly f = poly_from_roots(F, {F.elem(1), F.elem(2)});
    CHECK(f.coeff_values() == std::vector<uint32_t>{2, 10, 1});  // x^2 - 3x + 2
    CHECK(f.eval(F.elem(1)) == F.zero());
    CHECK(f.eval(F.elem(2)) == F.zero());
    CHECK(f.eval(F.elem(3)).value() == 2);
    CHECK(poly_from_roots(F, {}) == Poly::one(F));
}

TEST_CASE("reduce_mod_field folds exponents but preserves evaluation") {
    const FieldCtx& F = make_field_order(13);
    CHECK(Poly::monomial(F, 13).reduce_mod_field() == Poly::monomial(F, 1));
    CHECK(Poly::monomial(F, 24).reduce_mod_field() == Poly::monomial(F, 12));
    CHECK(Poly::monomial(F, 25).reduce_mod_field() == Poly::monomial(F, 1));
    CHECK(Poly::monomial(F, 12).reduce_mod_field() == Poly::monomial(F, 12));
    CHECK(Poly::monomial(F, 0).reduce_mod_field() == Poly::one(F));

    // Agreement on every point for random high-degree polynomials.
    std::mt19937_64 gen(42);
    for (uint32_t q : {8u, 9u}) {
        const FieldCtx& G = make_field_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<uint32_t> cs(1 + gen() % 30);
            for (auto& c : cs) c = uint32_t(gen() % q);
            Poly f(G, cs);
            Poly r = f.reduce_mod_field();
            CHECK(r.degree() <= int64_t(q) - 1);
            for (auto a : G.elements()) CHECK(f.eval(a) == r.eval(a));
        }
    }
}

TEST_CASE("twist parameter validation names the violated inequality") {
    const FieldCtx& F = make_field_order(13);
    FieldElem e1 = F.one();
    CHECK_THROWS_AS(TwistParams(2, 1, 0, e1), ParamWindowError);
    CHECK_THROWS_AS(TwistParams(5, 0, 0, e1), ParamWindowError);
    CHECK_THROWS_AS(TwistParams(5, 3, 2, e1), ParamWindowError);  // t+h > k-1
    CHECK_THROWS_AS(TwistParams(5, 3, 0, F.zero()), ParamWindowError);
    try {
        TwistParams(5, 3, 2, e1);
    } catch (const ParamWindowError& e) {
        CHECK(e.inequality() == "t + h <= k - 1");
    }
}

TEST_CASE("twisted basis lists monomials with the twist at the hook slot") {
    const FieldCtx& F = make_field_order(13);
    auto b0 = twisted_basis(F, TwistParams(5, 3, 0, F.one()));
    REQUIRE(b0.size() == 5);
    CHECK(b0[0].coeff(0).value() == 1);  // x^0 + x^7
    CHECK(b0[0].coeff(7).value() == 1);
    CHECK(b0[0].degree() == 7);
    for (uint32_t s = 1; s < 5; ++s) CHECK(b0[s] == Poly::monomial(F, s));

    auto b2 = twisted_basis(F, TwistParams(5, 2, 2, F.elem(3)));
    REQUIRE(b2.size() == 5);
    CHECK(b2[0] == Poly::one(F));
    CHECK(b2[1] == Poly::monomial(F, 1));
    CHECK(b2[2].coeff(2).value() == 1);  // x^2 + 3x^6
    CHECK(b2[2].coeff(6).value() == 3);
    CHECK(b2[3] == Poly::monomial(F, 3));
    CHECK(b2[4] == Poly::monomial(F, 4));
}

TEST_CASE("twisted basis needs the twist degree to stay below q") {
    const FieldCtx& F = make_field_order(8);
    CHECK_NOTHROW(twisted_basis(F, TwistParams(5, 3, 0, F.one())));  // degree 7
    CHECK_THROWS_AS(twisted_basis(F, TwistParams(5, 4, 0, F.one())),
                    ParamWindowError);  // degree 8 > q-1
}

TEST_CASE("space basis rejects dependent polynomial lists") {
    const FieldCtx& F = make_field_order(7);
    std::vector<Poly> dep = {Poly::one(F), Poly::monomial(F, 1), Poly(F, {1, 1})};
    CHECK_THROWS_AS(SpaceBasis(F, dep), std::invalid_argument);
    SpaceBasis ok(F, {Poly::one(F), Poly::monomial(F, 1)});
    CHECK(ok.dim() == 2);
}

TEST_CASE("dual basis: high-rate regime is trivial") {
    const FieldCtx& F = make_field_order(13);
    // 2k = 12 > q-t+1 = 11: the square fills the space, the dual is {0}.
    CHECK(dual_space_basis(F, TwistParams(6, 3, 0, F.one())).dim() == 0);
    CHECK(dual_space_basis(F, TwistParams(6, 3, 2, F.elem(5))).dim() == 0);
}

TEST_CASE("dual basis: middle regime is monomial away from t = k-1") {
    const FieldCtx& F = make_field_order(13);
    for (uint32_t h : {0u, 1u}) {
        auto b = dual_space_basis(F, TwistParams(5, 3, h, F.elem(2)));
        REQUIRE(b.dim() == 1);  // exponents 0 .. q-2k-t = 0
        CHECK(b.polys[0] == Poly::one(F));
    }
}

TEST_CASE("dual basis: middle regime at t = k-1 glues the top exponents") {
    const FieldCtx& F13 = make_field_order(13);
    // q=13, k=5, t=4: single generator x^3 - eta x^11.
    auto b = dual_space_basis(F13, TwistParams(5, 4, 0, F13.elem(2)));
    REQUIRE(b.dim() == 1);
    CHECK(b.polys[0].coeff(3).value() == 1);
    CHECK(b.polys[0].coeff(11).value() == 11);  // -2 mod 13

    const FieldCtx& F11 = make_field_order(11);
    // q=11, k=4, t=3: monomial 1 plus x^3 - eta x^9.
    auto b2 = dual_space_basis(F11, TwistParams(4, 3, 0, F11.elem(2)));
    REQUIRE(b2.dim() == 2);
    const Poly& g = by_degree(b2, 9);
    CHECK(g.coeff(3).value() == 1);
    CHECK(g.coeff(9).value() == 9);  // -2 mod 11

    const FieldCtx& F16 = make_field_order(16);
    // q=16 = 4k-4 at k=5: the glued generator gains an eta^3 x^{q-1} term.
    auto b3 = dual_space_basis(F16, TwistParams(5, 4, 0, F16.elem(2)));
    REQUIRE(b3.dim() == 4);  // x^0..x^2 and the glued generator
    const Poly& g3 = by_degree(b3, 15);
    CHECK(g3.coeff(6).value() == 1);
    CHECK(g3.coeff(14).value() == 2);                      // eta (char 2: -eta = eta)
    CHECK(g3.coeff(15).value() == F16.vpow(2, 3));         // eta^3
}

TEST_CASE("dual basis: low-rate regime, hook zero") {
    const FieldCtx& F = make_field_order(13);
    // q=13, k=3, t=1: monomials 0..5 plus x^6 - eta^2 x^12.
    auto b = dual_space_basis(F, TwistParams(3, 1, 0, F.elem(2)));
    REQUIRE(b.dim() == 7);
    const Poly& g = by_degree(b, 12);
    CHECK(g.coeff(6).value() == 1);
    CHECK(g.coeff(12).value() == 9);  // -4 mod 13

    // Boundary q = 2k+2t-1 (k=5, t=2): the low coefficient becomes 1+eta^2.
    auto bb = dual_space_basis(F, TwistParams(5, 2, 0, F.elem(2)));
    REQUIRE(bb.dim() == 2);
    const Poly& gb = by_degree(bb, 12);
    CHECK(gb.coeff(0).value() == 5);   // 1 + 4
    CHECK(gb.coeff(12).value() == 9);  // -4 mod 13

    // Same boundary with eta^2 = -1: the low term vanishes entirely.
    auto bz = dual_space_basis(F, TwistParams(5, 2, 0, F.elem(5)));
    REQUIRE(bz.dim() == 2);
    const Poly& gz = by_degree(bz, 12);
    CHECK(gz.coeff(0).value() == 0);
    CHECK(gz.coeff(12).value() == 1);  // -eta^2 = 1
}

TEST_CASE("dual basis: low-rate regime, hook zero at t = k-1") {
    const FieldCtx& F = make_field_order(17);
    // q=17, k=4, t=3: monomials {0..6}\{4} plus two glued generators.
    auto b = dual_space_basis(F, TwistParams(4, 3, 0, F.elem(2)));
    REQUIRE(b.dim() == 8);
    const Poly& g1 = by_degree(b, 16);
    CHECK(g1.coeff(4).value() == 1);
    CHECK(g1.coeff(16).value() == 13);  // -4 mod 17
    const Poly& g2 = by_degree(b, 15);
    CHECK(g2.coeff(9).value() == 1);
    CHECK(g2.coeff(15).value() == 15);  // -2 mod 17

    const FieldCtx& F13 = make_field_order(13);
    // q = 4k-3 boundary (k=4, t=3): low coefficient 1+eta^2.
    auto bb = dual_space_basis(F13, TwistParams(4, 3, 0, F13.elem(2)));
    REQUIRE(bb.dim() == 4);
    const Poly& gb = by_degree(bb, 12);
    CHECK(gb.coeff(0).value() == 5);   // 1 + 4
    CHECK(gb.coeff(12).value() == 9);  // -4 mod 13
    const Poly& gc = by_degree(bb, 11);
    CHECK(gc.coeff(5).value() == 1);
    CHECK(gc.coeff(11).value() == 11);  // -2 mod 13
}

TEST_CASE("dual basis: low-rate regime, positive hook is purely monomial") {
    const FieldCtx& F = make_field_order(13);
    auto b = dual_space_basis(F, TwistParams(4, 1, 1, F.elem(2)));
    REQUIRE(b.dim() == 4);  // exponents {0..4} minus the dropped 4
    for (int64_t d = 0; d <= 3; ++d) CHECK(by_degree(b, d) == Poly::monomial(F, uint64_t(d)));
}

TEST_CASE("dual basis: the (k,t,h) = (3,1,1) cell is special") {
    const FieldCtx& F13 = make_field_order(13);
    auto b = dual_space_basis(F13, TwistParams(3, 1, 1, F13.elem(2)));
    REQUIRE(b.dim() == 7);  // q - 6
    const Poly& g = by_degree(b, 11);
    CHECK(g.coeff(7).value() == 1);
    CHECK(g.coeff(9).value() == 11);  // -2 mod 13
    CHECK(g.coeff(11).value() == 4);  // eta^2

    const FieldCtx& F8 = make_field_order(8);
    auto b8 = dual_space_basis(F8, TwistParams(3, 1, 1, F8.elem(3)));
    REQUIRE(b8.dim() == 2);
    CHECK(b8.polys[0] == Poly::one(F8));
    const Poly& g8 = by_degree(b8, 6);
    CHECK(g8.coeff(2).value() == 1);
    CHECK(g8.coeff(4).value() == 3);
    CHECK(g8.coeff(6).value() == 5);  // (x+1)^2 = x^2+1
}

TEST_CASE("dual basis rejects k above half the field size") {
    const FieldCtx& F = make_field_order(13);
    CHECK_THROWS_AS(dual_space_basis(F, TwistParams(7, 1, 0, F.one())),
                    ParamWindowError);
}
