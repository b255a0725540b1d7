#include "mlc/gf2.hpp"

#include <algorithm>
#include <string>

namespace mlc {

namespace {

int poly_degree(u32 p) {
    return p == 0 ? -1 : 31 - std::countl_zero(p);
}

u32 poly_mod(u32 a, u32 divisor) {
    const int dd = poly_degree(divisor);
    int da = poly_degree(a);
    while (da >= dd) {
        a ^= divisor << (da - dd);
        da = poly_degree(a);
    }
    return a;
}

}  // namespace

bool is_irreducible(u32 poly, int n) {
    if (n < 1 || poly_degree(poly) != n) return false;
    if ((poly & 1) == 0) return false;  // x divides
    // No divisor of degree 1 .. n/2 suffices for irreducibility.
    for (int d = 1; 2 * d <= n; ++d) {
        for (u32 q = (u32(1) << d); q < (u32(1) << (d + 1)); ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

u32 default_modulus(int n) {
    // One irreducible polynomial per degree; every entry is re-verified here rather
    // than trusted as transcribed.
    static const u32 table[17] = {
        0, 0,
        0x7,      // x^2 + x + 1
        0xB,      // x^3 + x + 1
        0x13,     // x^4 + x + 1
        0x25,     // x^5 + x^2 + 1
        0x43,     // x^6 + x + 1
        0x83,     // x^7 + x + 1
        0x11B,    // x^8 + x^4 + x^3 + x + 1
        0x211,    // x^9 + x^4 + 1
        0x409,    // x^10 + x^3 + 1
        0x805,    // x^11 + x^2 + 1
        0x1053,   // x^12 + x^6 + x^4 + x + 1
        0x201B,   // x^13 + x^4 + x^3 + x + 1
        0x4443,   // x^14 + x^10 + x^6 + x + 1
        0x8003,   // x^15 + x + 1
        0x1100B,  // x^16 + x^12 + x^3 + x + 1
    };
    if (n < 2 || n > 16) throw ConstraintError("field degree n must be in [2, 16]");
    u32 p = table[n];
    if (!is_irreducible(p, n))
        throw VerifyError("built-in modulus for n=" + std::to_string(n) + " failed the irreducibility check");
    return p;
}

FieldContext::FieldContext(int n) : FieldContext(n, default_modulus(n)) {}

FieldContext::FieldContext(int n, u32 modulus) : n_(n), modulus_(modulus) {
    if (n < 2 || n > 16) throw ConstraintError("field degree n must be in [2, 16]");
    if (!is_irreducible(modulus, n))
        throw ConstraintError("modulus is not an irreducible polynomial of degree n");
    init();
}

u32 FieldContext::mul(u32 a, u32 b) const {
    u32 r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> n_) a ^= modulus_;
    }
    return r;
}

u32 FieldContext::pow(u32 a, u64 e) const {
    u32 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u32 FieldContext::frobenius(u32 a, int k) const {
    for (int j = 0; j < k; ++j) a = mul(a, a);
    return a;
}

u32 FieldContext::inverse(u32 a) const {
    if (a == 0) throw ConstraintError("zero has no inverse");
    return pow(a, (u64(1) << n_) - 2);
}

u32 FieldContext::trace_to(int r, u32 x) const {
    if (r < 1 || n_ % r != 0) throw ConstraintError("trace subfield degree must divide n");
    u32 acc = 0, t = x;
    for (int j = 0; j < n_ / r; ++j) {
        acc ^= t;
        t = frobenius(t, r);
    }
    return acc;
}

void FieldContext::init() {
    const u32 size = u32(1) << n_;
    tr1_.resize(size);
    for (u32 x = 0; x < size; ++x) tr1_[x] = static_cast<std::uint8_t>(trace_to(1, x));

    tcoord_.resize(size);
    for (u32 nu = 0; nu < size; ++nu) {
        u32 t = 0;
        for (int i = 0; i < n_; ++i)
            t |= u32(tr1_[mul(nu, u32(1) << i)]) << i;
        tcoord_[nu] = t;
    }
    // Trace form nondegeneracy: the coordinate map has trivial kernel.
    for (u32 nu = 1; nu < size; ++nu)
        if (tcoord_[nu] == 0)
            throw VerifyError("trace bilinear form is degenerate for this modulus");
}

Subspace Subspace::zero(int n) {
    Subspace s;
    s.n = n;
    s.members.assign((u64(1) << n) <= 64 ? 1 : ((u64(1) << n) >> 6), 0);
    s.members[0] |= 1;  // 0 is always a member
    return s;
}

Subspace Subspace::full(int n) {
    std::vector<u32> gens(n);
    for (int i = 0; i < n; ++i) gens[i] = u32(1) << i;
    return span(n, gens);
}

Subspace Subspace::span(int n, std::span<const u32> generators) {
    if (n < 1 || n > 16) throw ConstraintError("subspace ambient dimension must be in [1, 16]");
    Subspace s = zero(n);
    // Reduced echelon basis keyed by leading bit.
    std::vector<u32> pivot(n, 0);
    for (u32 g : generators) {
        if (g >= (u32(1) << n)) throw ConstraintError("generator outside the ambient space");
        for (int bit = n - 1; bit >= 0 && g; --bit) {
            if (!((g >> bit) & 1)) continue;
            if (pivot[bit]) { g ^= pivot[bit]; continue; }
            pivot[bit] = g;
            g = 0;
        }
    }
    // Back-substitute for a canonical reduced basis.
    for (int bit = 0; bit < n; ++bit) {
        if (!pivot[bit]) continue;
        for (int hi = bit + 1; hi < n; ++hi)
            if (pivot[hi] && ((pivot[hi] >> bit) & 1)) pivot[hi] ^= pivot[bit];
    }
    for (int bit = 0; bit < n; ++bit)
        if (pivot[bit]) s.basis.push_back(pivot[bit]);

    // Membership by explicit span enumeration.
    std::vector<u32> elems{0};
    elems.reserve(u64(1) << s.basis.size());
    for (u32 b : s.basis) {
        const std::size_t count = elems.size();
        for (std::size_t j = 0; j < count; ++j) elems.push_back(elems[j] ^ b);
    }
    for (u32 e : elems) s.members[e >> 6] |= u64(1) << (e & 63);
    return s;
}

Subspace Subspace::from_members(int n, const std::vector<u64>& members) {
    std::vector<u32> gens;
    const u32 size = u32(1) << n;
    for (u32 x = 1; x < size; ++x)
        if ((members[x >> 6] >> (x & 63)) & 1) gens.push_back(x);
    Subspace s = span(n, gens);
    if (s.members != members) throw ConstraintError("member set is not XOR-closed");
    return s;
}

std::vector<u32> Subspace::elements() const {
    std::vector<u32> out;
    out.reserve(size());
    const u32 total = u32(1) << n;
    for (u32 x = 0; x < total; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

namespace {

template <class PairBit>
Subspace dual_impl(const Subspace& E, const PairBit& pair_bit) {
    const u32 size = u32(1) << E.n;
    std::vector<u32> gens;
    for (u32 w = 0; w < size; ++w) {
        bool ok = true;
        for (u32 e : E.basis)
            if (pair_bit(w, e)) { ok = false; break; }
        if (ok) gens.push_back(w);
    }
    Subspace d = Subspace::span(E.n, gens);
    if (d.dim() != E.n - E.dim()) throw VerifyError("dual dimension mismatch");
    return d;
}

}  // namespace

Subspace dual_subspace(const Subspace& E) {
    return dual_impl(E, [](u32 w, u32 e) { return dot(w, e); });
}

Subspace dual_subspace(const Subspace& E, const FieldContext& ctx) {
    if (ctx.n() != E.n) throw ConstraintError("field context dimension mismatch");
    return dual_impl(E, [&ctx](u32 w, u32 e) { return ctx.trace_bit(ctx.mul(w, e)); });
}

Subspace subfield_subspace(const FieldContext& ctx, int t) {
    if (t < 1 || ctx.n() % t != 0) throw ConstraintError("subfield degree must divide n");
    std::vector<u32> gens;
    const u32 size = ctx.size();
    for (u32 x = 0; x < size; ++x)
        if (ctx.frobenius(x, t) == x) gens.push_back(x);
    Subspace s = Subspace::span(ctx.n(), gens);
    if (s.dim() != t) throw VerifyError("subfield has wrong dimension");
    return s;
}

}  // namespace mlc
