#include <doctest.h>

#include "mlc/vectorial.hpp"
#include "mlc/constructions.hpp"
#include "oracles.hpp"

using namespace mlc;

namespace {

VectorialFunction identity_fn(int n) {
    VectorialFunction F;
    F.n = F.m = n;
    F.table.resize(u64(1) << n);
    for (u32 x = 0; x < F.size(); ++x) F.table[x] = x;
    return F;
}

}  // namespace

TEST_CASE("components of the identity are the linear forms") {
    VectorialFunction F = identity_fn(4);
    for (u32 mu = 1; mu < 16; ++mu) {
        const BooleanFunction c = F.component(mu);
        for (u32 x = 0; x < 16; ++x) CHECK(c.get(x) == dot(mu, x));
        const WalshSpectrum w = component_spectrum(F, mu);
        CHECK(w.values[mu] == 16);  // spike at mu under the same pairing everywhere
    }
    CHECK_THROWS_AS(F.component(0), ConstraintError);
}

TEST_CASE("all_spectra matches per-component transforms and the definition") {
    SpreadFamily sp = desarguesian_spread(3);
    const VectorialFunction G = spread_bent(sp, 3);
    const ComponentSpectra s = all_spectra(G);
    std::mt19937_64 rng(21);
    for (u32 mu = 1; mu < G.mu_count(); ++mu) {
        CHECK(s.row(mu).values == component_spectrum(G, mu).values);
        CHECK(s.row(mu).parseval_sum() == (i64(1) << (2 * G.n)));
        // Signed sum identity for F(0) = 0.
        i64 sum = 0;
        for (i64 v : s.row(mu).values) sum += v;
        CHECK(sum == (i64(1) << G.n));
        // Spot-check the definition.
        for (int t = 0; t < 5; ++t) {
            const u32 nu = rng() & (G.size() - 1);
            CHECK(s.row(mu).values[nu] == oracle::naive_component_walsh(G, mu, nu));
        }
    }

    // m = 1 wraps a single Boolean function.
    BooleanFunction f = oracle::random_function(5, rng);
    const VectorialFunction Fb = VectorialFunction::from_boolean(f);
    const ComponentSpectra sb = all_spectra(Fb);
    REQUIRE(sb.rows.size() == 1);
    CHECK(sb.row(1).values == fwht(f).values);
}

TEST_CASE("trace-paired spectra match the naive trace-character sum") {
    auto ctx = std::make_shared<const FieldContext>(6);
    const GoldFunction g = gold(ctx, 2);
    std::mt19937_64 rng(22);
    for (int s = 0; s < 12; ++s) {
        const u32 mu = 1 + (rng() % (g.F.mu_count() - 1));
        const WalshSpectrum w = component_spectrum(g.F, mu);
        for (int t = 0; t < 8; ++t) {
            const u32 nu = rng() & (g.F.size() - 1);
            CHECK(w.values[nu] == oracle::naive_component_walsh(g.F, mu, nu));
        }
    }
}

TEST_CASE("Gold function spectra and classification") {
    auto ctx6 = std::make_shared<const FieldContext>(6);
    const GoldFunction g6 = gold(ctx6, 2);
    CHECK(g6.params.lambda == 2);
    for_each_spectrum(g6.F, [](u32, const WalshSpectrum& w) {
        for (i64 v : w.values) CHECK((v == 0 || v == 16 || v == -16));
    });
    const Classification c6 = classify_vectorial(g6.F);
    CHECK(c6.cls == VectorialClass::PlateauedSingle);
    CHECK(c6.amplitude == 16);
    CHECK(c6.nonlinearity == 24);

    auto ctx7 = std::make_shared<const FieldContext>(7);
    const Classification c7 = classify_vectorial(gold(ctx7, 1).F);
    CHECK(c7.cls == VectorialClass::AlmostBent);
    CHECK(c7.amplitude == 16);
}

TEST_CASE("spread-based vectorial functions are bent") {
    SpreadFamily sp = desarguesian_spread(3);
    for (int r : {2, 3}) {
        const Classification c = classify_vectorial(spread_bent(sp, r));
        CHECK(c.cls == VectorialClass::Bent);
        CHECK(c.amplitude == 8);
    }
}

TEST_CASE("concatenation splits into the expected rows") {
    SpreadFamily sp = desarguesian_spread(3);
    std::mt19937_64 rng(23);
    const BooleanFunction f = two_indicator_function(sp);
    const VectorialFunction G = spread_bent(sp, 2);
    const VectorialFunction F = concat(f, G);
    REQUIRE(F.m == 3);
    CHECK(F.table[0] == 0);

    // Row (1, 0~) is W_f.
    CHECK(component_spectrum(F, 1).values == fwht(f).values);
    for (u32 mu_t = 1; mu_t < 4; ++mu_t) {
        // Row (0, mu~) is the G row.
        CHECK(component_spectrum(F, mu_t << 1).values ==
              component_spectrum(G, mu_t).values);
        // Row (1, mu~) is the spectrum of f + mu~.G.
        const BooleanFunction a = f ^ G.component(mu_t);
        CHECK(component_spectrum(F, (mu_t << 1) | 1).values == fwht(a).values);
    }
}

TEST_CASE("single-amplitude support counts follow the frequency identities") {
    // For a single-amplitude plateaued component: 2^(n-lambda) nonzero spectrum
    // entries, and the signed counts satisfy amp * (|S+| - |S-|) = 2^n.
    auto ctx = std::make_shared<const FieldContext>(6);
    const VectorialFunction F = gold(ctx, 2).F;  // lambda = 2, amp = 16
    for_each_spectrum(F, [&](u32, const WalshSpectrum& w) {
        i64 nonzero = 0, plus = 0, minus = 0;
        for (i64 v : w.values) {
            if (v) ++nonzero;
            if (v > 0) ++plus;
            if (v < 0) ++minus;
        }
        CHECK(nonzero == (i64(1) << (6 - 2)));
        CHECK(16 * (plus - minus) == 64);
    });
}

TEST_CASE("plateaued-mixed and general classifications are reachable") {
    // Distinct spike heights: two affine components with different... a function with
    // one bent and one affine-free mixture: use coordinate functions of unequal type.
    VectorialFunction F;
    F.n = 4;
    F.m = 2;
    F.table.resize(16);
    for (u32 x = 0; x < 16; ++x) {
        const u32 bent_bit = ((x & 1) & ((x >> 1) & 1)) ^ (((x >> 2) & 1) & ((x >> 3) & 1));
        const u32 lin_bit = x & 1;
        F.table[x] = bent_bit | (lin_bit << 1);
    }
    const Classification c = classify_vectorial(F);
    CHECK(c.cls == VectorialClass::PlateauedMixed);  // amplitudes 4 and 16 mix

    VectorialFunction G;
    G.n = 3;
    G.m = 1;
    G.table = {0, 0, 0, 0, 0, 0, 0, 1};  // 3-input AND: not plateaued
    CHECK(classify_vectorial(G).cls == VectorialClass::General);
}
