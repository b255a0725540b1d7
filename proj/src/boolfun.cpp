#include "mlc/boolfun.hpp"

#include <algorithm>

#include "mlc/constructions.hpp"

namespace mlc {

BooleanFunction::BooleanFunction(int n_) : n(n_) {
    if (n < 1 || n > 16) throw ConstraintError("truth table dimension must be in [1, 16]");
    bits.assign(((u64(1) << n) + 63) / 64, 0);
}

BooleanFunction BooleanFunction::from_indicator(const Subspace& E) {
    BooleanFunction f(E.n);
    f.bits = E.members;  // identical packing: bit x = membership
    return f;
}

u64 BooleanFunction::weight() const {
    u64 w = 0;
    for (u64 word : bits) w += std::popcount(word);
    return w;
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& g) const {
    if (n != g.n) throw ConstraintError("dimension mismatch");
    BooleanFunction r(n);
    for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] = bits[i] ^ g.bits[i];
    return r;
}

BooleanFunction BooleanFunction::operator&(const BooleanFunction& g) const {
    if (n != g.n) throw ConstraintError("dimension mismatch");
    BooleanFunction r(n);
    for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] = bits[i] & g.bits[i];
    return r;
}

BooleanFunction BooleanFunction::operator~() const {
    BooleanFunction r(n);
    for (std::size_t i = 0; i < bits.size(); ++i) r.bits[i] = ~bits[i];
    if (n < 6) r.bits[0] &= (u64(1) << (u64(1) << n)) - 1;
    return r;
}

WalshSpectrum fwht(const BooleanFunction& f) {
    const u32 size = f.size();
    WalshSpectrum w;
    w.n = f.n;
    w.values.resize(size);
    for (u32 x = 0; x < size; ++x) w.values[x] = f.get(x) ? -1 : 1;
    for (u32 len = 1; len < size; len <<= 1) {
        for (u32 i = 0; i < size; i += len << 1) {
            for (u32 j = i; j < i + len; ++j) {
                const i64 a = w.values[j], b = w.values[j + len];
                w.values[j] = a + b;
                w.values[j + len] = a - b;
            }
        }
    }
    return w;
}

WalshSpectrum fwht(const BooleanFunction& f, const FieldContext& ctx) {
    if (ctx.n() != f.n) throw ConstraintError("field context dimension mismatch");
    WalshSpectrum raw = fwht(f);
    WalshSpectrum out;
    out.n = f.n;
    out.values.resize(raw.values.size());
    for (u32 nu = 0; nu < f.size(); ++nu) out.values[nu] = raw.values[ctx.trace_coords(nu)];
    return out;
}

i64 WalshSpectrum::max_value() const { return *std::max_element(values.begin(), values.end()); }
i64 WalshSpectrum::min_value() const { return *std::min_element(values.begin(), values.end()); }

i64 WalshSpectrum::max_abs() const {
    i64 m = 0;
    for (i64 v : values) m = std::max(m, v < 0 ? -v : v);
    return m;
}

i64 WalshSpectrum::parseval_sum() const {
    i64 s = 0;
    for (i64 v : values) s += v * v;
    return s;
}

int nonlinearity(const WalshSpectrum& w) {
    return static_cast<int>((i64(1) << (w.n - 1)) - w.max_abs() / 2);
}

int nonlinearity(const BooleanFunction& f) { return nonlinearity(fwht(f)); }

std::optional<i64> plateaued_amplitude(const WalshSpectrum& w) {
    i64 lambda = 0;
    for (i64 v : w.values) {
        const i64 a = v < 0 ? -v : v;
        if (a == 0) continue;
        if (lambda == 0) lambda = a;
        else if (a != lambda) return std::nullopt;
    }
    return lambda;  // lambda = 0 impossible: Parseval forbids the all-zero spectrum
}

std::optional<i64> plateaued_amplitude(const BooleanFunction& f) {
    return plateaued_amplitude(fwht(f));
}

bool is_bent(const WalshSpectrum& w) {
    if (w.n % 2) return false;
    const i64 amp = i64(1) << (w.n / 2);
    for (i64 v : w.values)
        if (v != amp && v != -amp) return false;
    return true;
}

SignProfile sign_profile(const WalshSpectrum& w) {
    bool has_neg = false, has_pos = false;
    for (i64 v : w.values) {
        if (v > 0) has_pos = true;
        if (v < 0) has_neg = true;
    }
    if (!has_neg) return SignProfile::AllNonNegative;
    if (!has_pos) return SignProfile::AllNonPositive;
    return SignProfile::Mixed;
}

int algebraic_degree(const BooleanFunction& f) {
    const u32 size = f.size();
    std::vector<std::uint8_t> g(size);
    for (u32 x = 0; x < size; ++x) g[x] = static_cast<std::uint8_t>(f.get(x));
    // Binary Moebius transform: ANF coefficient at x.
    for (int i = 0; i < f.n; ++i) {
        const u32 bit = u32(1) << i;
        for (u32 x = 0; x < size; ++x)
            if (x & bit) g[x] ^= g[x ^ bit];
    }
    int deg = 0;
    for (u32 x = 0; x < size; ++x)
        if (g[x]) deg = std::max(deg, std::popcount(x));
    return deg;
}

bool is_affine(const BooleanFunction& f) { return algebraic_degree(f) <= 1; }

BooleanFunction indicator_sum_function(const SpreadFamily& spread,
                                       std::span<const int> indices) {
    if (indices.empty()) throw ConstraintError("indicator sum needs at least one index");
    BooleanFunction f(spread.n);
    for (int idx : indices) {
        if (idx < 0 || idx >= spread.count())
            throw ConstraintError("spread index out of range");
        f = f ^ BooleanFunction::from_indicator(spread.member(idx));
    }
    return f;
}

WalshSpectrum indicator_sum_walsh(const SpreadFamily& spread,
                                  std::span<const int> indices) {
    if (indices.empty()) throw ConstraintError("indicator sum needs at least one index");
    const int n = spread.n, t = spread.t;
    const i64 s = static_cast<i64>(indices.size());
    const i64 f0 = s & 1;  // every indicator is 1 at 0

    WalshSpectrum w;
    w.n = n;
    w.values.assign(u64(1) << n, 2 * s - 2 * f0);
    for (int idx : indices) {
        const Subspace d = dual_subspace(spread.member(idx));
        for (u32 nu : d.elements())
            if (nu) w.values[nu] = -(i64(1) << (t + 1)) + 2 * s - 2 * f0;
    }
    w.values[0] = (i64(1) << n) - 2 * s * ((i64(1) << t) - 1) - 2 * f0;
    return w;
}

Combine3Result combine3(const BooleanFunction& p1, const BooleanFunction& p2,
                        const BooleanFunction& p3) {
    if (p1.n != p2.n || p1.n != p3.n) throw ConstraintError("dimension mismatch");
    Combine3Result r;
    r.majority = (p1 & p2) ^ (p1 & p3) ^ (p2 & p3);
    const WalshSpectrum w1 = fwht(p1), w2 = fwht(p2), w3 = fwht(p3),
                        w4 = fwht(p1 ^ p2 ^ p3);
    r.predicted.n = p1.n;
    r.predicted.values.resize(w1.values.size());
    for (std::size_t i = 0; i < w1.values.size(); ++i)
        r.predicted.values[i] =
            (w1.values[i] + w2.values[i] + w3.values[i] - w4.values[i]) / 2;
    return r;
}

}  // namespace mlc
