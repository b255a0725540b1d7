#pragma once

// GF(2) substrate: vectors of F_2^n packed into integers (bit i = coordinate i),
// the field GF(2^n) for 2 <= n <= 16, traces, and linear subspaces with their duals.

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace mlc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// A precondition or parameter constraint was violated (CLI exit code 2).
struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation exceeded its declared budget; the message names the fallback route (exit 4).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verification that should hold failed (exit 3).
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int dot(u32 u, u32 v) { return std::popcount(u & v) & 1; }

bool is_irreducible(u32 poly, int n);
u32 default_modulus(int n);  // built-in table entry, re-verified irreducible at lookup

// GF(2^n) in the polynomial basis {1, alpha, ..., alpha^(n-1)}; coordinate i of an
// element's encoding is the coefficient of alpha^i.  The vector dot product and the
// trace form Tr(nu*x) are different pairings; nothing here conflates them.
class FieldContext {
  public:
    explicit FieldContext(int n);
    FieldContext(int n, u32 modulus);

    int n() const { return n_; }
    u32 modulus() const { return modulus_; }
    u32 size() const { return u32(1) << n_; }

    u32 mul(u32 a, u32 b) const;
    u32 sqr(u32 a) const { return mul(a, a); }
    u32 pow(u32 a, u64 e) const;
    u32 frobenius(u32 a, int k) const;  // a^(2^k)
    u32 inverse(u32 a) const;           // a^(2^n - 2), a != 0

    // Tr_r^n(x) = x + x^(2^r) + ... + x^(2^(n-r)); requires r | n.  The result is an
    // element of GF(2^n) lying in the subfield fixed by Frobenius^r.
    u32 trace_to(int r, u32 x) const;

    // Absolute trace Tr_1^n as a bit, via a precomputed table.
    int trace_bit(u32 x) const { return tr1_[x]; }

    // T(nu) with bit i = Tr(nu * alpha^i).  Tr(nu*x) = dot(T(nu), x) for all x, and T
    // is a linear bijection (the trace form is nondegenerate), so trace-paired Walsh
    // spectra are dot-paired spectra reindexed through T.
    u32 trace_coords(u32 nu) const { return tcoord_[nu]; }

  private:
    void init();
    int n_;
    u32 modulus_;
    std::vector<std::uint8_t> tr1_;
    std::vector<u32> tcoord_;
};

// Linear subspace of F_2^n: reduced basis plus an explicit 2^n-bit membership set
// (bit x of members = x in the subspace), sized for O(1) indicator lookups at n <= 16.
struct Subspace {
    int n = 0;
    std::vector<u32> basis;    // reduced echelon, ascending leading bit
    std::vector<u64> members;  // 2^n bits, packed 64 per word

    static Subspace span(int n, std::span<const u32> generators);
    static Subspace zero(int n);
    static Subspace full(int n);
    static Subspace from_members(int n, const std::vector<u64>& members);

    int dim() const { return static_cast<int>(basis.size()); }
    u64 size() const { return u64(1) << dim(); }
    bool contains(u32 x) const { return (members[x >> 6] >> (x & 63)) & 1; }
    std::vector<u32> elements() const;

    bool operator==(const Subspace& other) const {
        return n == other.n && members == other.members;
    }
};

// Dual with respect to the dot pairing: all w with dot(w, e) = 0 for every e in E.
Subspace dual_subspace(const Subspace& E);

// Dual with respect to the trace pairing Tr(w*e) on GF(2^n).
Subspace dual_subspace(const Subspace& E, const FieldContext& ctx);

// The subfield GF(2^t) inside GF(2^n) (elements fixed by Frobenius^t) as a subspace.
Subspace subfield_subspace(const FieldContext& ctx, int t);

}  // namespace mlc
