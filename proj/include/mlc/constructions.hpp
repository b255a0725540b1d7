#pragma once

// The concrete function families behind the code constructions: Desarguesian partial
// spreads, the spread-indicator functions, bit-select bent functions and their
// vectorial bundles, quadratically modified indicators, Gold power functions, and the
// composed families addressed by the CLI as theorem6 / theorem8 / theorem10.

#include <optional>
#include <string>

#include "mlc/vectorial.hpp"

namespace mlc {

// 2^t + 1 pairwise trivially-intersecting t-dimensional subspaces of F_2^(2t); their
// nonzero parts partition the nonzero vectors.
struct SpreadFamily {
    int t = 0;
    int n = 0;  // 2t
    u32 modulus_t = 0;  // GF(2^t) modulus used to build the family
    std::vector<Subspace> subspaces;  // indexed 0 .. 2^t

    const Subspace& member(int k) const { return subspaces[k]; }
    int count() const { return static_cast<int>(subspaces.size()); }
};

// Field-line spread on GF(2^t)^2, encoded (x, y) -> x | (y << t): member k < 2^t is
// {(x, k·x)} with k read as the field element of that encoding; member 2^t is {(0, y)}.
// All family invariants are verified on construction.
SpreadFamily desarguesian_spread(int t);
SpreadFamily desarguesian_spread(const FieldContext& ctx_t);

// f = 1_{E_first} + 1_{E_last}; f(0) = 0 and weight 2(2^t - 1).
// first = 0 for the standard family, 2^t - 1 for the complemented variant.
BooleanFunction two_indicator_function(const SpreadFamily& spread, int first = 0);

// Bent bit-select function g_i: sum of 1_{E_k} over k with bit i of k equal to 1
// (0 when complemented), plus 1_{E_{2^t}} plus the constant 1.  g_i(0) = 0.
BooleanFunction select_bent(const SpreadFamily& spread, int i, bool complemented = false);

// G = (g_0, ..., g_{r-1}) for 2 <= r <= t; vectorial bent, G(0) = 0.
VectorialFunction spread_bent(const SpreadFamily& spread, int r, bool complemented = false);

// f = 1_E + (a.x)(b.x) + 1 under the given pairing, with the predicted five-case
// spectrum when a, b, a+b all lie outside the dual of E:
//   -2^(n-1)+2^t on {0,a,b};  2^(n-1)-2^t at a+b;  +2^t on E*,a+E*,b+E* cosets;
//   -2^t on the a+b+E* coset;  0 elsewhere.
struct ModifiedIndicator {
    BooleanFunction f;
    bool condition_ok = false;      // a, b, a+b all outside dual(E)
    WalshSpectrum predicted;        // five-case closed form; empty unless condition_ok
    Subspace dual;                  // dual of E under the pairing in use
};
ModifiedIndicator modified_indicator(const Subspace& E, u32 a, u32 b);
ModifiedIndicator modified_indicator(const Subspace& E, u32 a, u32 b,
                                     const FieldContext& ctx);  // trace pairing

struct GoldParams {
    int n = 0;
    int i = 0;
    int lambda = 0;  // gcd(n, i); n / lambda must be odd
};

// G(x) = x^(2^i + 1) on GF(2^n); vectorial plateaued with single amplitude
// 2^((n + lambda)/2).  Rejects exponents with n / gcd(n,i) even.
struct GoldFunction {
    VectorialFunction F;  // FieldTrace pairing
    GoldParams params;
};
GoldFunction gold(std::shared_ptr<const FieldContext> ctx, int i);

// F = (f, G) with output bit 0 carrying f.
VectorialFunction concat(const BooleanFunction& f, const VectorialFunction& G);

enum class FamilyKind { Theorem6, Theorem8, Theorem10 };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Theorem6;
    int n = 0;
    int i = 0;                 // theorem6: selected bit; theorem10: Gold exponent
    int r = 0;                 // theorem8: output bits of G
    std::optional<u32> a, b;   // theorem8/theorem10; defaulted deterministically
    bool complemented = false; // theorem6 variant with the k_i = 0 selection
    std::optional<u32> modulus;    // GF(2^n) override (theorem10)
    std::optional<u32> modulus_t;  // GF(2^t) override (spread families)
};

struct BuiltFamily {
    FamilySpec spec;           // with defaults resolved (a, b, moduli filled in)
    VectorialFunction F;
    BooleanFunction f;
    VectorialFunction G;
    std::shared_ptr<const FieldContext> ctx;  // GF(2^n), theorem10 only
    std::optional<GoldParams> gold_params;
    std::string note;          // surfaced interpretation/defaulting decisions
};

// theorem6(n=2t, t>=3, i<t):   F = (two_indicator_function, g_i), vector pairing.
// theorem8(n=2t, t>=3, 2<=r<=t): f = 1_{E_{2^t}} + (a.x)(b.x) + 1 with a, b, a+b in
//   dual(E_0)*, G = spread_bent(r); vector pairing.
// theorem10(n=2t>8, i):        f = 1_{F_{2^t}} + Tr(ax)Tr(bx) + 1 with a, b outside
//   F_{2^t} and a+b outside it too, G = gold(i); trace pairing.
// Violated constraints raise ConstraintError naming the clause.
BuiltFamily build_family(const FamilySpec& spec);

const char* to_string(FamilyKind k);
FamilyKind family_kind_from_string(const std::string& s);

}  // namespace mlc
