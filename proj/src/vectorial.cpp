#include "mlc/vectorial.hpp"

#include <string>

#include "mlc/parallel.hpp"

namespace mlc {

VectorialFunction VectorialFunction::from_boolean(const BooleanFunction& f) {
    VectorialFunction F;
    F.n = f.n;
    F.m = 1;
    F.table.resize(f.size());
    for (u32 x = 0; x < f.size(); ++x) F.table[x] = static_cast<u32>(f.get(x));
    return F;
}

int VectorialFunction::component_bit(u32 mu, u32 x) const {
    const u32 y = table[x];
    switch (pairing) {
        case Pairing::VectorDot:
            return dot(mu, y);
        case Pairing::FieldTrace:
            if (!split_bit0) return out_ctx->trace_bit(out_ctx->mul(mu, y));
            return ((mu & y & 1) ^ out_ctx->trace_bit(out_ctx->mul(mu >> 1, y >> 1)));
    }
    return 0;
}

BooleanFunction VectorialFunction::component(u32 mu) const {
    if (mu == 0) throw ConstraintError("the zero component is excluded");
    if (mu >= mu_count()) throw ConstraintError("component mask out of range");
    BooleanFunction f(n);
    for (u32 x = 0; x < size(); ++x)
        if (component_bit(mu, x)) f.set(x, 1);
    return f;
}

int VectorialFunction::character_bit(u32 nu, u32 x) const {
    if (pairing == Pairing::VectorDot) return dot(nu, x);
    return ctx->trace_bit(ctx->mul(nu, x));
}

WalshSpectrum component_spectrum(const VectorialFunction& F, u32 mu) {
    const BooleanFunction comp = F.component(mu);
    if (F.pairing == Pairing::VectorDot) return fwht(comp);
    return fwht(comp, *F.ctx);
}

ComponentSpectra all_spectra(const VectorialFunction& F) {
    if (F.n + F.m > 26)
        throw BudgetError("spectra matrix too large to materialize (n + m > 26); "
                          "use for_each_spectrum");
    ComponentSpectra s;
    s.n = F.n;
    s.m = F.m;
    s.rows.resize(F.mu_count() - 1);
    parallel_chunks(1, F.mu_count(), [&](unsigned, u64 lo, u64 hi) {
        for (u64 mu = lo; mu < hi; ++mu)
            s.rows[mu - 1] = component_spectrum(F, static_cast<u32>(mu));
    });
    return s;
}

void for_each_spectrum(const VectorialFunction& F,
                       const std::function<void(u32, const WalshSpectrum&)>& fn) {
    for (u32 mu = 1; mu < F.mu_count(); ++mu) fn(mu, component_spectrum(F, mu));
}

Classification classify_vectorial(const VectorialFunction& F) {
    Classification c;
    c.all_components_plateaued = true;
    std::optional<i64> shared_amp;
    bool single = true;
    i64 max_abs = 0;
    for_each_spectrum(F, [&](u32, const WalshSpectrum& w) {
        max_abs = std::max(max_abs, w.max_abs());
        const auto amp = plateaued_amplitude(w);
        if (!amp) {
            c.all_components_plateaued = false;
            return;
        }
        if (!shared_amp) shared_amp = amp;
        else if (*shared_amp != *amp) single = false;
    });
    c.max_abs_walsh = max_abs;
    c.nonlinearity = static_cast<int>((i64(1) << (F.n - 1)) - max_abs / 2);
    if (!c.all_components_plateaued) {
        c.cls = VectorialClass::General;
        return c;
    }
    if (!single) {
        c.cls = VectorialClass::PlateauedMixed;
        return c;
    }
    c.amplitude = shared_amp;
    const i64 amp = *shared_amp;
    if (F.n % 2 == 0 && amp == (i64(1) << (F.n / 2))) c.cls = VectorialClass::Bent;
    else if (F.n % 2 == 1 && amp == (i64(1) << ((F.n + 1) / 2))) c.cls = VectorialClass::AlmostBent;
    else c.cls = VectorialClass::PlateauedSingle;
    return c;
}

const char* to_string(VectorialClass c) {
    switch (c) {
        case VectorialClass::Bent: return "bent";
        case VectorialClass::AlmostBent: return "almost-bent";
        case VectorialClass::PlateauedSingle: return "plateaued";
        case VectorialClass::PlateauedMixed: return "plateaued-mixed";
        case VectorialClass::General: return "general";
    }
    return "?";
}

}  // namespace mlc
