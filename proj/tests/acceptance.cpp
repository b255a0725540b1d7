// Acceptance suite: one pass/fail line per criterion, exact integer checks
// throughout, with the stated runtime budgets enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "mlc/codes.hpp"
#include "oracles.hpp"

using namespace mlc;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double limit_s,
               const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
        err = body();
    } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (err.empty() && elapsed > limit_s)
        err = "runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(limit_s) + " s";
    if (err.empty()) {
        std::printf("criterion %d: PASS  %-58s (%.2f s)\n", id, name.c_str(), elapsed);
    } else {
        std::printf("criterion %d: FAIL  %-58s (%.2f s): %s\n", id, name.c_str(), elapsed,
                    err.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

#define EXPECT(cond, msg) do { if (!(cond)) return std::string(msg); } while (0)

BuiltFamily make_theorem6(int n, int i) {
    FamilySpec s;
    s.kind = FamilyKind::Theorem6;
    s.n = n;
    s.i = i;
    return build_family(s);
}

BuiltFamily make_theorem8(int n, int r) {
    FamilySpec s;
    s.kind = FamilyKind::Theorem8;
    s.n = n;
    s.r = r;
    return build_family(s);
}

std::string check_code(const VectorialFunction& F, u64 N, int k, u64 d,
                       const std::string& enumerator) {
    const LinearCode code = build_code(F);
    EXPECT(code.length == N, "wrong length");
    EXPECT(code.dimension == k, "wrong dimension");
    const WeightDistribution dist = weight_distribution(F, code);
    EXPECT(dist.w_min() == d, "wrong minimum distance");
    EXPECT(dist.total() == (u64(1) << k), "frequencies do not sum to 2^k");
    EXPECT(dist.enumerator_string() == enumerator, "wrong enumerator");
    return "";
}

// Exhaustive popcount-vs-Walsh equality over every codeword of a built code.
std::string weight_routes_agree(const VectorialFunction& F) {
    const LinearCode code = build_code(F);
    for (u32 mu = 0; mu < F.mu_count(); ++mu) {
        const WalshSpectrum row = mu ? component_spectrum(F, mu) : WalshSpectrum{};
        for (u32 nu = 0; nu < F.size(); ++nu) {
            i64 expect;
            if (mu == 0 && nu == 0) expect = 0;
            else if (mu == 0) expect = i64(1) << (F.n - 1);
            else expect = (i64(1) << (F.n - 1)) - row.values[nu] / 2;
            if (static_cast<i64>(code.codeword_weight(code.index_of(mu, nu))) != expect)
                return "popcount and Walsh weights disagree at mu=" + std::to_string(mu) +
                       " nu=" + std::to_string(nu);
        }
    }
    return "";
}

}  // namespace

int main() {
    criterion(1, "bent n=6 m=3 code [63,9,28] with exact enumerator", 1.0, [] {
        const VectorialFunction F = spread_bent(desarguesian_spread(3), 3);
        return check_code(F, 63, 9, 28, "1+252z^28+63z^32+196z^36");
    });

    criterion(2, "almost-bent n=7 Gold i=1 code [127,14,56] exact", 5.0, [] {
        auto ctx = std::make_shared<const FieldContext>(7);
        return check_code(gold(ctx, 1).F, 127, 14, 56, "1+4572z^56+8255z^64+3556z^72");
    });

    criterion(3, "theorem6 n=6, every i: [63,8,14], minimal, ratio 14/38", 5.0, [] {
        for (int i = 0; i < 3; ++i) {
            const BuiltFamily fam = make_theorem6(6, i);
            std::string err = check_code(fam.F, 63, 8, 14,
                                         "1+z^14+72z^28+49z^30+63z^32+56z^36+14z^38");
            if (!err.empty()) return err + " (i=" + std::to_string(i) + ")";
            const LinearCode code = build_code(fam.F);
            const MinimalityReport rep = is_minimal_bruteforce(code);
            EXPECT(rep.minimal, "brute force says not minimal");
            EXPECT(rep.covering_checked, "covering cross-check did not run");
            const ABReport ab = ab_check(weight_distribution(fam.F), fam.F);
            EXPECT(!ab.satisfies_ab, "AB condition unexpectedly satisfied");
            EXPECT(ab.w_min == 14 && ab.w_max == 38, "AB ratio is not exactly 14/38");
        }
        return std::string();
    });

    criterion(4, "closed-form tables equal enumeration (n <= 8 points)", 60.0, [] {
        // Bent points: spread bundles for n = 6, 8 and every legal m.
        for (int t : {3, 4}) {
            SpreadFamily sp = desarguesian_spread(t);
            const int n = 2 * t;
            for (int m = 1; m <= t; ++m) {
                const VectorialFunction F =
                    m == 1 ? VectorialFunction::from_boolean(select_bent(sp, 0))
                           : spread_bent(sp, m);
                const WeightDistribution table = table_frequencies(TableKind::Bent, n, m);
                if (table.freq != weight_distribution(F).freq)
                    return "bent table mismatch at n=" + std::to_string(n) +
                           " m=" + std::to_string(m);
                if (table.total() != (u64(1) << (n + m))) return std::string("bent table sum");
            }
        }
        // Almost-bent points: Gold with i = 1 at n = 7 and n = 9.
        for (int n : {7, 9}) {
            auto ctx = std::make_shared<const FieldContext>(n);
            const VectorialFunction F = gold(ctx, 1).F;
            const WeightDistribution table = table_frequencies(TableKind::AlmostBent, n, n);
            if (table.freq != weight_distribution(F).freq)
                return "almost-bent table mismatch at n=" + std::to_string(n);
            if (table.total() != (u64(1) << (2 * n))) return std::string("ab table sum");
        }
        // Plateaued points with lambda = 2: Gold n=6 i=2 projected to m output bits
        // (components stay single-amplitude); lambda = 0 is the bent case above.
        {
            auto ctx = std::make_shared<const FieldContext>(6);
            const VectorialFunction full = gold(ctx, 2).F;
            for (int m : {1, 2, 3}) {
                VectorialFunction P;
                P.n = 6;
                P.m = m;
                P.table.resize(64);
                for (u32 x = 0; x < 64; ++x) P.table[x] = full.table[x] & ((u32(1) << m) - 1);
                const Classification c = classify_vectorial(P);
                if (c.cls != VectorialClass::PlateauedSingle || c.amplitude != 16)
                    return std::string("projected Gold is not single-amplitude plateaued");
                const WeightDistribution table =
                    table_frequencies(TableKind::PlateauedSingle, 6, m, 2);
                if (table.freq != weight_distribution(P).freq)
                    return "plateaued table mismatch at m=" + std::to_string(m);
                if (table.total() != (u64(1) << (6 + m)))
                    return std::string("plateaued table sum");
            }
        }
        // theorem6 table at n = 6 and n = 8.
        for (int n : {6, 8}) {
            const BuiltFamily fam = make_theorem6(n, 0);
            const WeightDistribution table = table_frequencies(TableKind::Theorem6, n, 2);
            if (table.freq != weight_distribution(fam.F).freq)
                return "theorem6 table mismatch at n=" + std::to_string(n);
            if (table.total() != (u64(1) << (n + 2))) return std::string("theorem6 table sum");
        }
        return std::string();
    });

    criterion(5, "checker cross-validation on every family with k <= 16", 600.0, [] {
        std::vector<std::pair<std::string, VectorialFunction>> cases;
        cases.emplace_back("theorem6 n=6", make_theorem6(6, 0).F);
        cases.emplace_back("theorem6 n=8", make_theorem6(8, 0).F);
        cases.emplace_back("theorem8 n=6 r=2", make_theorem8(6, 2).F);
        cases.emplace_back("theorem8 n=6 r=3", make_theorem8(6, 3).F);
        cases.emplace_back("bent n=6 m=2", spread_bent(desarguesian_spread(3), 2));
        cases.emplace_back("bent n=6 m=3", spread_bent(desarguesian_spread(3), 3));
        cases.emplace_back("ab n=5", gold(std::make_shared<const FieldContext>(5), 1).F);
        cases.emplace_back("ab n=7", gold(std::make_shared<const FieldContext>(7), 1).F);
        for (const auto& [name, F] : cases) {
            const LinearCode code = build_code(F);
            if (code.dimension > 16) return name + ": unexpected dimension";
            const MinimalityReport ding = ding_scan(code);
            const MinimalityReport cover = covering_scan(code);
            const MinimalityReport walsh = minimality_walsh_criterion(F);
            if (ding.minimal != cover.minimal || ding.minimal != walsh.minimal)
                return name + ": verdicts disagree";
            if (!ding.minimal) return name + ": expected minimal";
        }
        return std::string();
    });

    criterion(6, "negative fixtures: augmented code and dual-pair seed", 60.0, [] {
        const VectorialFunction F = spread_bent(desarguesian_spread(3), 3);
        const LinearCode aug = build_code_augmented(F);
        const MinimalityReport rep = is_minimal_bruteforce(aug);
        EXPECT(!rep.minimal, "augmented fixture reported minimal");
        EXPECT(rep.witness && witness_holds(aug, *rep.witness), "witness does not re-check");
        u32 mu, nu;
        int lambda;
        aug.decode_index(rep.witness->c2, mu, nu, lambda);
        EXPECT(mu == 0 && nu == 0 && lambda == 1 &&
               aug.codeword_weight(rep.witness->c2) == 64,
               "witness does not include the all-ones word");

        SpreadFamily sp = desarguesian_spread(3);
        const auto delems = dual_subspace(sp.member(0)).elements();
        const ModifiedIndicator mi = modified_indicator(sp.member(0), delems[1], delems[2]);
        EXPECT(!mi.condition_ok, "dual pair unexpectedly passed the condition");
        const WalshSpectrum w = fwht(mi.f);
        EXPECT(w.values[delems[1] ^ delems[2]] - w.values[delems[1]] == 64,
               "exact witness W(a+b) - W(a) = 2^n does not hold");
        const SeedPremises pre = seed_premises(mi.f);
        EXPECT(!pre.cond_a && pre.witness_a.has_value(), "premise (a) violation missing");
        EXPECT(w.values[pre.witness_a->nu] +
                   pre.witness_a->sign * w.values[pre.witness_a->nu_prime] == 64,
               "premise witness does not re-check");
        return std::string();
    });

    criterion(7, "theorem8 n=6, r in {2,3}: [63,7+r,20], minimal, AB violated", 120.0, [] {
        for (int r : {2, 3}) {
            const BuiltFamily fam = make_theorem8(6, r);
            const LinearCode code = build_code(fam.F);
            EXPECT(code.length == 63, "wrong length");
            EXPECT(code.dimension == 6 + r + 1, "wrong dimension");
            const WeightDistribution dist = weight_distribution(fam.F, code);
            EXPECT(dist.w_min() == 20, "wrong minimum distance");
            const MinimalityReport brute = is_minimal_bruteforce(code);
            const GenericABResult gen = genericAB_criterion(fam.f, fam.G);
            EXPECT(gen.premises_ok, "premises failed");
            EXPECT(brute.minimal && gen.minimality.minimal, "not minimal");
            EXPECT(!gen.ab.satisfies_ab && gen.ab.spectral_violation, "AB not violated");
            const ABReport ab = ab_check(dist, fam.F);
            EXPECT(!ab.satisfies_ab, "distribution AB check disagrees");
        }
        return std::string();
    });

    criterion(8, "theorem10 n=10 i=2: [1023,21,272], bound route, sampling", 600.0, [] {
        FamilySpec spec;
        spec.kind = FamilyKind::Theorem10;
        spec.n = 10;
        spec.i = 2;
        const BuiltFamily fam = build_family(spec);
        const LinearCode code = build_code(fam.F);
        EXPECT(code.length == 1023, "wrong length");
        EXPECT(code.dimension == 21, "wrong dimension");
        const WeightDistribution dist = weight_distribution(fam.F, code);  // popcount-verified
        EXPECT(dist.w_min() == 272, "wrong minimum distance");
        EXPECT(dist.total() == (u64(1) << 21), "frequencies do not sum to 2^21");

        // Mixed-lemma spectra: phi = Tr(mu~ x^(2^i+1)) + 1_E over all mu~ != 0 stays in
        // the ten-value set, here {0, +/-16, +/-48, +/-64, +/-80, -128}.
        const Subspace E = subfield_subspace(*fam.ctx, 5);
        const VectorialFunction phiF = concat(BooleanFunction::from_indicator(E), fam.G);
        const std::set<i64> allowed = {0, 16, -16, 48, -48, 64, -64, 80, -80, -128};
        for (u32 mu_t = 1; mu_t < (u32(1) << 10); ++mu_t) {
            const WalshSpectrum w = component_spectrum(phiF, (mu_t << 1) | 1);
            for (i64 v : w.values)
                if (!allowed.count(v))
                    return "phi spectrum value " + std::to_string(v) +
                           " outside the ten-value set at mu~=" + std::to_string(mu_t);
        }

        const BoundArgumentReport rep = bound_argument_theorem10(fam, 1000000);
        EXPECT(rep.minimality.minimal && rep.minimality.route == Route::BoundArgument,
               "bound route did not conclude minimal");
        EXPECT(rep.anchor_ok && rep.ineq1 && rep.ineq2 && rep.ineq3,
               "a proof inequality failed");
        EXPECT(rep.max_abs_wa <= 256, "max |W_A| exceeds the instantiated bound 256");
        EXPECT(rep.sampled == 1000000 && rep.sample_ok, "sampling found a violation");

        const ABReport ab = ab_check(dist, fam.F);
        EXPECT(!ab.satisfies_ab, "AB condition unexpectedly satisfied");
        EXPECT(ab.w_min == 272 && ab.w_max == 752, "AB ratio is not 272/752");
        return std::string();
    });

    criterion(9, "property suites: Parseval, FWHT oracle, spreads, duals, routes", 300.0, [] {
        std::mt19937_64 rng(0xACCE97);
        // Parseval on 1000 random functions per n <= 10.
        for (int n = 1; n <= 10; ++n)
            for (int s = 0; s < 1000; ++s) {
                const BooleanFunction f = oracle::random_function(n, rng);
                if (fwht(f).parseval_sum() != (i64(1) << (2 * n)))
                    return "Parseval failed at n=" + std::to_string(n);
            }
        // FWHT equals the naive double sum for n <= 8.
        for (int n = 1; n <= 8; ++n)
            for (int s = 0; s < 100; ++s) {
                const BooleanFunction f = oracle::random_function(n, rng);
                if (fwht(f).values != oracle::naive_walsh(f).values)
                    return "FWHT disagrees with the naive oracle at n=" + std::to_string(n);
            }
        // Spread invariants for t <= 5 plus dual-of-dual.
        for (int t = 2; t <= 5; ++t) {
            SpreadFamily sp = desarguesian_spread(t);  // construction self-verifies
            u64 nonzero = 0;
            for (const Subspace& e : sp.subspaces) {
                nonzero += e.size() - 1;
                if (dual_subspace(dual_subspace(e)) != e) return std::string("dual-of-dual failed");
            }
            if (nonzero != (u64(1) << (2 * t)) - 1) return std::string("spread cover failed");
        }
        // Weight-route equality on all enumerated codes.
        for (const auto& [name, F] :
             std::vector<std::pair<std::string, VectorialFunction>>{
                 {"theorem6 n=6", make_theorem6(6, 0).F},
                 {"theorem8 n=6 r=2", make_theorem8(6, 2).F},
                 {"bent n=6 m=3", spread_bent(desarguesian_spread(3), 3)},
                 {"ab n=7", gold(std::make_shared<const FieldContext>(7), 1).F}}) {
            const std::string err = weight_routes_agree(F);
            if (!err.empty()) return name + ": " + err;
        }
        return std::string();
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
