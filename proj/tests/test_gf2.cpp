#include <doctest.h>

#include "mlc/gf2.hpp"
#include "oracles.hpp"

using namespace mlc;

TEST_CASE("dot product basics") {
    for (u32 v = 0; v < 16; ++v) CHECK(dot(0, v) == 0);
    CHECK(dot(0b101, 0b101) == 0);
    CHECK(dot(0b110, 0b011) == 1);
    // Bilinearity on a sample.
    std::mt19937_64 rng(1);
    for (int s = 0; s < 200; ++s) {
        const u32 u = rng() & 0xFFFF, v = rng() & 0xFFFF, w = rng() & 0xFFFF;
        CHECK(dot(u ^ v, w) == (dot(u, w) ^ dot(v, w)));
    }
}

TEST_CASE("irreducibility testing") {
    CHECK(is_irreducible(0x7, 2));    // x^2+x+1
    CHECK(!is_irreducible(0x5, 2));   // x^2+1 = (x+1)^2
    CHECK(is_irreducible(0xB, 3));
    CHECK(!is_irreducible(0xF, 3));   // x^3+x^2+x+1 has root 1
    // Every built-in modulus re-verifies at load.
    for (int n = 2; n <= 16; ++n) CHECK_NOTHROW(FieldContext ctx(n));
}

TEST_CASE("field multiplication against the long-division oracle") {
    for (int n : {3, 4, 6}) {
        FieldContext ctx(n);
        for (u32 a = 0; a < ctx.size(); ++a)
            for (u32 b = 0; b < ctx.size(); ++b)
                CHECK(ctx.mul(a, b) ==
                      oracle::polynomial_mul_mod(a, b, ctx.modulus(), n));
    }
    // x * x^2 = x^3 = x + 1 mod x^3+x+1.
    FieldContext f8(3, 0xB);
    CHECK(f8.mul(0b010, 0b100) == 0b011);
}

TEST_CASE("field axioms and inverses") {
    FieldContext ctx(8);
    std::mt19937_64 rng(2);
    for (int s = 0; s < 500; ++s) {
        const u32 a = rng() & 0xFF, b = rng() & 0xFF, c = rng() & 0xFF;
        CHECK(ctx.mul(a, b) == ctx.mul(b, a));
        CHECK(ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c));
        CHECK(ctx.mul(a, b ^ c) == (ctx.mul(a, b) ^ ctx.mul(a, c)));
    }
    for (u32 a = 0; a < ctx.size(); ++a) {
        CHECK(ctx.mul(a, 1) == a);
        CHECK(ctx.mul(0, a) == 0);
        if (a) CHECK(ctx.mul(a, ctx.inverse(a)) == 1);
    }
}

TEST_CASE("traces land in the subfield and compose transitively") {
    FieldContext ctx(6);
    CHECK(ctx.trace_to(1, 0) == 0);
    CHECK(ctx.trace_to(3, 0) == 0);
    for (u32 x = 0; x < ctx.size(); ++x) {
        for (int r : {1, 2, 3}) {
            const u32 tr = ctx.trace_to(r, x);
            CHECK(ctx.frobenius(tr, r) == tr);  // fixed by Frobenius^r
        }
        // Tr_1^6 = Tr_1^3 of Tr_3^6.
        const u32 mid = ctx.trace_to(3, x);
        u32 again = mid;
        u32 acc = 0;
        for (int j = 0; j < 3; ++j) { acc ^= again; again = ctx.frobenius(again, 1); }
        CHECK(acc == ctx.trace_to(1, x));
    }
    // Additivity.
    std::mt19937_64 rng(7);
    for (int s = 0; s < 200; ++s) {
        const u32 x = rng() & 63, y = rng() & 63;
        CHECK(ctx.trace_to(1, x ^ y) == (ctx.trace_to(1, x) ^ ctx.trace_to(1, y)));
    }
    // n=2: Tr(alpha) = alpha + alpha^2 = 1 mod x^2+x+1.
    FieldContext f4(2, 0x7);
    CHECK(f4.trace_to(1, 0b10) == 1);
    CHECK_THROWS_AS(ctx.trace_to(4, 1), ConstraintError);
}

TEST_CASE("trace bilinear form is nondegenerate") {
    for (int n = 2; n <= 10; ++n) {
        FieldContext ctx(n);
        for (u32 x = 1; x < ctx.size(); ++x) CHECK(ctx.trace_coords(x) != 0);
    }
}

TEST_CASE("subspace span, dual, and dual-of-dual") {
    const u32 gens[] = {0b0001, 0b0010};
    Subspace E = Subspace::span(4, gens);
    CHECK(E.dim() == 2);
    CHECK(E.size() == 4);
    CHECK(E.contains(0b0011));
    CHECK(!E.contains(0b0100));

    Subspace D = dual_subspace(E);
    const u32 expected[] = {0b0100, 0b1000};
    CHECK(D == Subspace::span(4, expected));

    CHECK(dual_subspace(Subspace::zero(5)) == Subspace::full(5));
    CHECK(dual_subspace(Subspace::full(5)) == Subspace::zero(5));

    std::mt19937_64 rng(3);
    for (int s = 0; s < 50; ++s) {
        const int n = 3 + int(rng() % 8);
        std::vector<u32> g;
        for (int j = 0; j < 3; ++j) g.push_back(rng() & ((u32(1) << n) - 1));
        Subspace S = Subspace::span(n, g);
        CHECK(dual_subspace(dual_subspace(S)) == S);
        CHECK(dual_subspace(S).dim() == n - S.dim());
        // Membership closed under XOR.
        const auto elems = S.elements();
        for (int t = 0; t < 20; ++t)
            CHECK(S.contains(elems[rng() % elems.size()] ^ elems[rng() % elems.size()]));
    }
}

TEST_CASE("trace-paired dual of the subfield is itself") {
    FieldContext ctx(6);
    Subspace E = subfield_subspace(ctx, 3);
    CHECK(E.dim() == 3);
    CHECK(dual_subspace(E, ctx) == E);
    FieldContext c10(10);
    Subspace E5 = subfield_subspace(c10, 5);
    CHECK(dual_subspace(E5, c10) == E5);
}
