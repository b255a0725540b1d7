#pragma once

// Boolean functions as bit-packed truth tables and their Walsh-Hadamard spectra.
//
// Conventions fixed once and used everywhere: the integer value of x is its
// truth-table index, bit i of x is the (i+1)-th input coordinate, and spectra are
// exact signed 64-bit integers (no floating point anywhere).
// W_f(nu) = sum_x (-1)^(f(x) + nu.x).

#include <optional>
#include <vector>

#include "mlc/gf2.hpp"

namespace mlc {

struct BooleanFunction {
    int n = 0;
    std::vector<u64> bits;  // 2^n truth-table bits, 64 per word

    BooleanFunction() = default;
    explicit BooleanFunction(int n);
    static BooleanFunction from_indicator(const Subspace& E);

    u32 size() const { return u32(1) << n; }
    int get(u32 x) const { return (bits[x >> 6] >> (x & 63)) & 1; }
    void set(u32 x, int v) {
        u64 mask = u64(1) << (x & 63);
        if (v) bits[x >> 6] |= mask; else bits[x >> 6] &= ~mask;
    }
    u64 weight() const;

    BooleanFunction operator^(const BooleanFunction& g) const;  // pointwise sum over F_2
    BooleanFunction operator&(const BooleanFunction& g) const;  // pointwise product
    BooleanFunction operator~() const;                          // complement

    bool operator==(const BooleanFunction&) const = default;
};

struct WalshSpectrum {
    int n = 0;
    std::vector<i64> values;  // entry nu = W_f(nu)

    i64 max_value() const;
    i64 min_value() const;
    i64 max_abs() const;
    i64 parseval_sum() const;  // sum of squares; equals 2^(2n) for a valid spectrum
};

// Radix-2 butterfly, O(n * 2^n).
WalshSpectrum fwht(const BooleanFunction& f);

// Spectrum with trace characters: W(nu) = sum_x (-1)^(f(x) + Tr(nu x)).
// One FWHT plus a reindex through ctx.trace_coords.
WalshSpectrum fwht(const BooleanFunction& f, const FieldContext& ctx);

int nonlinearity(const WalshSpectrum& w);                    // 2^(n-1) - max|W|/2
int nonlinearity(const BooleanFunction& f);

// Amplitude when the spectrum takes values only in {0, +/-Lambda}; absent otherwise.
// Bent means present with Lambda = 2^(n/2) and a zero-free spectrum.
std::optional<i64> plateaued_amplitude(const WalshSpectrum& w);
std::optional<i64> plateaued_amplitude(const BooleanFunction& f);
bool is_bent(const WalshSpectrum& w);

enum class SignProfile { AllNonNegative, AllNonPositive, Mixed };
// A one-signed spectrum characterizes affine functions (the sign is fixed by f(0)).
SignProfile sign_profile(const WalshSpectrum& w);

// Degree of the algebraic normal form via the binary Moebius transform.
// Exposed only as a degree check; full ANF arithmetic is out of scope.
int algebraic_degree(const BooleanFunction& f);
bool is_affine(const BooleanFunction& f);

struct SpreadFamily;  // constructions.hpp

// f = sum over i in `indices` of the indicator of spread member E_i (F_2-valued sum).
BooleanFunction indicator_sum_function(const SpreadFamily& spread,
                                       std::span<const int> indices);

// Closed-form spectrum of indicator_sum_function, s = |indices| >= 1:
//   W(0)                            = 2^n - 2s(2^t - 1) - 2 f(0)
//   W(nu), nu in a selected dual    = -2^(t+1) + 2s - 2 f(0)   (nu != 0)
//   W(nu), otherwise                = 2s - 2 f(0)
// Must match fwht of the built truth table; tests enforce the equality.
WalshSpectrum indicator_sum_walsh(const SpreadFamily& spread,
                                  std::span<const int> indices);

// Pointwise majority f = p1 p2 + p1 p3 + p2 p3 together with its predicted spectrum
// (W1 + W2 + W3 - W4)/2 where p4 = p1 + p2 + p3.
struct Combine3Result {
    BooleanFunction majority;
    WalshSpectrum predicted;
};
Combine3Result combine3(const BooleanFunction& p1, const BooleanFunction& p2,
                        const BooleanFunction& p3);

}  // namespace mlc
