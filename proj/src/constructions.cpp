#include "mlc/constructions.hpp"

#include <numeric>
#include <string>

namespace mlc {

namespace {

void verify_spread(const SpreadFamily& s) {
    const u32 expected = (u32(1) << s.t) + 1;
    if (s.subspaces.size() != expected) throw VerifyError("spread has wrong member count");
    std::vector<u64> uni(s.subspaces[0].members.size(), 0);
    for (const Subspace& e : s.subspaces) {
        if (e.dim() != s.t) throw VerifyError("spread member has wrong dimension");
        for (std::size_t w = 0; w < uni.size(); ++w) uni[w] |= e.members[w];
    }
    // Pairwise intersections must be exactly {0}.
    for (std::size_t i = 0; i < s.subspaces.size(); ++i) {
        for (std::size_t j = i + 1; j < s.subspaces.size(); ++j) {
            u64 common = 0;
            const auto& a = s.subspaces[i].members;
            const auto& b = s.subspaces[j].members;
            for (std::size_t w = 0; w < a.size(); ++w) common += std::popcount(a[w] & b[w]);
            if (common != 1) throw VerifyError("spread members intersect nontrivially");
        }
    }
    u64 covered = 0;
    for (u64 w : uni) covered += std::popcount(w);
    if (covered != (u64(1) << s.n)) throw VerifyError("spread does not cover the space");
}

}  // namespace

SpreadFamily desarguesian_spread(int t) {
    if (t < 2 || t > 8) throw ConstraintError("spread parameter t must be in [2, 8]");
    return desarguesian_spread(FieldContext(t));
}

SpreadFamily desarguesian_spread(const FieldContext& ctx_t) {
    const int t = ctx_t.n();
    if (t < 2 || t > 8) throw ConstraintError("spread parameter t must be in [2, 8]");
    SpreadFamily s;
    s.t = t;
    s.n = 2 * t;
    s.modulus_t = ctx_t.modulus();
    s.subspaces.reserve((u32(1) << t) + 1);
    for (u32 k = 0; k < (u32(1) << t); ++k) {
        std::vector<u32> gens(t);
        for (int j = 0; j < t; ++j)
            gens[j] = (u32(1) << j) | (ctx_t.mul(k, u32(1) << j) << t);
        s.subspaces.push_back(Subspace::span(s.n, gens));
    }
    std::vector<u32> vertical(t);
    for (int j = 0; j < t; ++j) vertical[j] = u32(1) << (t + j);
    s.subspaces.push_back(Subspace::span(s.n, vertical));
    verify_spread(s);
    return s;
}

BooleanFunction two_indicator_function(const SpreadFamily& spread, int first) {
    if (first < 0 || first >= spread.count() - 1)
        throw ConstraintError("first index must name a non-vertical spread member");
    return BooleanFunction::from_indicator(spread.member(first)) ^
           BooleanFunction::from_indicator(spread.subspaces.back());
}

BooleanFunction select_bent(const SpreadFamily& spread, int i, bool complemented) {
    if (i < 0 || i >= spread.t) throw ConstraintError("selected bit out of range [0, t)");
    std::vector<int> indices;
    for (int k = 0; k < (1 << spread.t); ++k)
        if (((k >> i) & 1) == (complemented ? 0 : 1)) indices.push_back(k);
    indices.push_back(1 << spread.t);
    return ~indicator_sum_function(spread, indices);
}

VectorialFunction spread_bent(const SpreadFamily& spread, int r, bool complemented) {
    if (r < 2 || r > spread.t) throw ConstraintError("output bits r must be in [2, t]");
    VectorialFunction G;
    G.n = spread.n;
    G.m = r;
    G.table.assign(u64(1) << G.n, 0);
    for (int j = 0; j < r; ++j) {
        const BooleanFunction g = select_bent(spread, j, complemented);
        for (u32 x = 0; x < G.size(); ++x)
            G.table[x] |= static_cast<u32>(g.get(x)) << j;
    }
    return G;
}

namespace {

ModifiedIndicator modified_indicator_impl(const Subspace& E, u32 a, u32 b,
                                          const FieldContext* ctx) {
    const int n = E.n;
    if (n % 2) throw ConstraintError("modified indicator needs even n");
    const int t = n / 2;
    if (E.dim() != t) throw ConstraintError("subspace must have dimension n/2");
    if (a == 0 || b == 0 || a == b) throw ConstraintError("a, b must be distinct and nonzero");
    if (a >= (u32(1) << n) || b >= (u32(1) << n)) throw ConstraintError("a, b out of range");

    ModifiedIndicator r;
    r.dual = ctx ? dual_subspace(E, *ctx) : dual_subspace(E);
    r.condition_ok = !r.dual.contains(a) && !r.dual.contains(b) && !r.dual.contains(a ^ b);

    r.f = BooleanFunction(n);
    for (u32 x = 0; x < (u32(1) << n); ++x) {
        const int pa = ctx ? ctx->trace_bit(ctx->mul(a, x)) : dot(a, x);
        const int pb = ctx ? ctx->trace_bit(ctx->mul(b, x)) : dot(b, x);
        r.f.set(x, E.contains(x) ^ (pa & pb) ^ 1);
    }

    if (r.condition_ok) {
        r.predicted.n = n;
        r.predicted.values.assign(u64(1) << n, 0);
        const i64 big = (i64(1) << (n - 1)) - (i64(1) << t);
        const i64 small = i64(1) << t;
        for (u32 nu = 0; nu < (u32(1) << n); ++nu) {
            if (nu == 0 || nu == a || nu == b) r.predicted.values[nu] = -big;
            else if (nu == (a ^ b)) r.predicted.values[nu] = big;
            else if (r.dual.contains(nu) || r.dual.contains(nu ^ a) || r.dual.contains(nu ^ b))
                r.predicted.values[nu] = small;
            else if (r.dual.contains(nu ^ a ^ b))
                r.predicted.values[nu] = -small;
        }
    }
    return r;
}

}  // namespace

ModifiedIndicator modified_indicator(const Subspace& E, u32 a, u32 b) {
    return modified_indicator_impl(E, a, b, nullptr);
}

ModifiedIndicator modified_indicator(const Subspace& E, u32 a, u32 b,
                                     const FieldContext& ctx) {
    if (ctx.n() != E.n) throw ConstraintError("field context dimension mismatch");
    return modified_indicator_impl(E, a, b, &ctx);
}

GoldFunction gold(std::shared_ptr<const FieldContext> ctx, int i) {
    const int n = ctx->n();
    if (i < 1 || i > n - 1) throw ConstraintError("Gold exponent i must be in [1, n-1]");
    const int lambda = std::gcd(n, i);
    if ((n / lambda) % 2 == 0)
        throw ConstraintError("Gold precondition violated: n/gcd(n,i) must be odd "
                              "(gcd = " + std::to_string(lambda) + ")");
    GoldFunction g;
    g.params = {n, i, lambda};
    g.F.n = n;
    g.F.m = n;
    g.F.pairing = Pairing::FieldTrace;
    g.F.ctx = ctx;
    g.F.out_ctx = ctx;
    g.F.table.resize(ctx->size());
    for (u32 x = 0; x < ctx->size(); ++x)
        g.F.table[x] = ctx->mul(ctx->frobenius(x, i), x);
    return g;
}

VectorialFunction concat(const BooleanFunction& f, const VectorialFunction& G) {
    if (f.n != G.n) throw ConstraintError("dimension mismatch between f and G");
    if (G.split_bit0) throw ConstraintError("G already carries a concatenated bit");
    VectorialFunction F;
    F.n = f.n;
    F.m = G.m + 1;
    F.pairing = G.pairing;
    F.ctx = G.ctx;
    F.out_ctx = G.out_ctx;
    F.split_bit0 = (G.pairing == Pairing::FieldTrace);
    F.table.resize(u64(1) << F.n);
    for (u32 x = 0; x < F.size(); ++x)
        F.table[x] = static_cast<u32>(f.get(x)) | (G.table[x] << 1);
    return F;
}

namespace {

BuiltFamily build_theorem6(FamilySpec spec) {
    if (spec.n % 2 || spec.n < 6) throw ConstraintError("theorem6 needs n = 2t with t >= 3");
    const int t = spec.n / 2;
    if (spec.i < 0 || spec.i >= t) throw ConstraintError("theorem6 bit index i must be in [0, t)");
    if (!spec.modulus_t) spec.modulus_t = default_modulus(t);
    const SpreadFamily spread = desarguesian_spread(FieldContext(t, *spec.modulus_t));

    BuiltFamily out;
    out.f = two_indicator_function(spread, spec.complemented ? (1 << t) - 1 : 0);
    out.G = VectorialFunction::from_boolean(select_bent(spread, spec.i, spec.complemented));
    out.F = concat(out.f, out.G);
    out.spec = spec;
    if (spec.complemented)
        out.note = "complemented variant: selection k_i = 0 and first indicator at index 2^t - 1";
    return out;
}

BuiltFamily build_theorem8(FamilySpec spec) {
    if (spec.n % 2 || spec.n < 6) throw ConstraintError("theorem8 needs n = 2t with t >= 3");
    const int t = spec.n / 2;
    if (spec.r < 2 || spec.r > t) throw ConstraintError("theorem8 needs 2 <= r <= t");
    if (!spec.modulus_t) spec.modulus_t = default_modulus(t);
    const SpreadFamily spread = desarguesian_spread(FieldContext(t, *spec.modulus_t));

    const Subspace e0_dual = dual_subspace(spread.member(0));
    if (!spec.a || !spec.b) {
        // Deterministic default: the two smallest nonzero elements of dual(E_0).
        std::vector<u32> elems = e0_dual.elements();
        spec.a = elems[1];
        spec.b = elems[2];
    }
    const u32 a = *spec.a, b = *spec.b;
    if (a == 0 || b == 0 || a == b || !e0_dual.contains(a) || !e0_dual.contains(b) ||
        !e0_dual.contains(a ^ b))
        throw ConstraintError("theorem8 needs a, b, a+b in dual(E_0) \\ {0}");

    // The "E^{2^t}" indicator is read as the subspace E_{2^t} (the vertical member).
    ModifiedIndicator mi = modified_indicator(spread.subspaces.back(), a, b);
    if (!mi.condition_ok)
        throw VerifyError("theorem8 seed function failed its spectrum condition");

    BuiltFamily out;
    out.f = mi.f;
    out.G = spread_bent(spread, spec.r);
    out.F = concat(out.f, out.G);
    out.spec = spec;
    out.note = "indicator superscript read as subspace index 2^t (the vertical member)";
    return out;
}

BuiltFamily build_theorem10(FamilySpec spec) {
    if (spec.n % 2 || spec.n <= 8) throw ConstraintError("theorem10 needs n = 2t > 8");
    const int t = spec.n / 2;
    if (!spec.modulus) spec.modulus = default_modulus(spec.n);
    auto ctx = std::make_shared<const FieldContext>(spec.n, *spec.modulus);
    GoldFunction g = gold(ctx, spec.i);

    const Subspace E = subfield_subspace(*ctx, t);
    if (!spec.a || !spec.b) {
        // Smallest elements outside the subfield with a + b also outside it.
        u32 a = 0, b = 0;
        for (u32 x = 1; x < ctx->size() && !b; ++x) {
            if (E.contains(x)) continue;
            if (!a) { a = x; continue; }
            if (!E.contains(a ^ x)) b = x;
        }
        spec.a = a;
        spec.b = b;
    }
    const u32 a = *spec.a, b = *spec.b;
    if (a == 0 || b == 0 || a == b || E.contains(a) || E.contains(b) || E.contains(a ^ b))
        throw ConstraintError("theorem10 needs a, b outside F_{2^t} with a + b outside too");

    ModifiedIndicator mi = modified_indicator(E, a, b, *ctx);
    if (!mi.condition_ok)
        throw VerifyError("theorem10 seed function failed its spectrum condition");

    BuiltFamily out;
    out.f = mi.f;
    out.G = g.F;
    out.F = concat(out.f, out.G);
    out.spec = spec;
    out.ctx = ctx;
    out.gold_params = g.params;
    return out;
}

}  // namespace

BuiltFamily build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Theorem6: return build_theorem6(spec);
        case FamilyKind::Theorem8: return build_theorem8(spec);
        case FamilyKind::Theorem10: return build_theorem10(spec);
    }
    throw ConstraintError("unknown family kind");
}

const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Theorem6: return "theorem6";
        case FamilyKind::Theorem8: return "theorem8";
        case FamilyKind::Theorem10: return "theorem10";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "theorem6") return FamilyKind::Theorem6;
    if (s == "theorem8") return FamilyKind::Theorem8;
    if (s == "theorem10") return FamilyKind::Theorem10;
    throw ConstraintError("unknown family: " + s);
}

}  // namespace mlc
