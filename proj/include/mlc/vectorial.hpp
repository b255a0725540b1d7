#pragma once

// (n,m)-functions, their component spectra W_F(mu,nu), and vectorial classification.
//
// Two pairings exist and are never conflated:
//   VectorDot  — components mu.F(x), characters nu.x (plain dot products);
//   FieldTrace — components Tr_1^m(mu F(x)), characters Tr_1^n(nu x).
// A FieldTrace function may additionally carry a plain Boolean in output bit 0
// (split_bit0), the concatenated form (f(x), G(x)) with G field-valued: the
// component for mask mu = (mu1, mu~) is mu1 f(x) + Tr(mu~ G(x)).

#include <functional>
#include <memory>

#include "mlc/boolfun.hpp"

namespace mlc {

enum class Pairing { VectorDot, FieldTrace };

struct VectorialFunction {
    int n = 0, m = 0;
    Pairing pairing = Pairing::VectorDot;
    bool split_bit0 = false;
    std::shared_ptr<const FieldContext> ctx;      // GF(2^n); required for FieldTrace
    std::shared_ptr<const FieldContext> out_ctx;  // output-side field; defaults to ctx
    std::vector<u32> table;                       // entry x = F(x), m-bit values

    static VectorialFunction from_boolean(const BooleanFunction& f);

    u32 size() const { return u32(1) << n; }
    u32 mu_count() const { return u32(1) << m; }

    int component_bit(u32 mu, u32 x) const;
    // Truth table x -> mu.F(x); the zero mask is rejected (excluded throughout).
    BooleanFunction component(u32 mu) const;

    // Character bit nu.x (dot) or Tr(nu x) (trace) for the nu-side of codes/spectra.
    int character_bit(u32 nu, u32 x) const;
};

// One spectrum row W_F(mu, .) under the function's pairing.
WalshSpectrum component_spectrum(const VectorialFunction& F, u32 mu);

struct ComponentSpectra {
    int n = 0, m = 0;
    std::vector<WalshSpectrum> rows;  // row mu at index mu-1, mu = 1 .. 2^m - 1

    const WalshSpectrum& row(u32 mu) const { return rows[mu - 1]; }
};

// Materializes all 2^m - 1 rows; refuses above n + m <= 26 (stream instead).
ComponentSpectra all_spectra(const VectorialFunction& F);

// Streams rows in ascending mu without materializing the matrix.
void for_each_spectrum(const VectorialFunction& F,
                       const std::function<void(u32 mu, const WalshSpectrum&)>& fn);

enum class VectorialClass { Bent, AlmostBent, PlateauedSingle, PlateauedMixed, General };

struct Classification {
    VectorialClass cls = VectorialClass::General;
    std::optional<i64> amplitude;  // single amplitude when PlateauedSingle/Bent/AlmostBent
    i64 max_abs_walsh = 0;         // over mu != 0 and all nu
    int nonlinearity = 0;          // 2^(n-1) - max_abs_walsh / 2
    bool all_components_plateaued = false;
};

Classification classify_vectorial(const VectorialFunction& F);

const char* to_string(VectorialClass c);

}  // namespace mlc
