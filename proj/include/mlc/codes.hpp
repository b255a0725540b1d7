#pragma once

// Binary linear codes C_F = { (mu.F(x) + nu.x)_{x != 0} }: generator construction,
// exact weight distributions through the Walsh spectra, closed-form tables, and the
// independent minimality / AB-condition checkers.

#include <map>
#include <optional>
#include <string>

#include "mlc/constructions.hpp"

namespace mlc {

// Codeword index = mu | (nu << m) | (lambda << (m+n)); rows are the m mu-unit rows
// (ascending bit), then the n nu-unit rows (ascending bit), then the all-ones row for
// the augmented fixture.  Coordinates are x = 1 .. 2^n - 1 ascending (bit x-1), or
// x = 0 .. 2^n - 1 for the augmented fixture.
struct LinearCode {
    int n = 0, m = 0;
    Pairing pairing = Pairing::VectorDot;
    bool augmented = false;
    u64 length = 0;
    int dimension = 0;  // rank-verified
    std::vector<std::vector<u64>> rows;  // dimension rows of `length` packed bits

    static LinearCode from_rows(u64 length, const std::vector<std::vector<u64>>& rows);

    u64 codewords() const { return u64(1) << dimension; }
    std::vector<u64> codeword(u64 index) const;
    u64 codeword_weight(u64 index) const;  // popcount route
    u64 index_of(u32 mu, u32 nu, int lambda = 0) const;
    void decode_index(u64 index, u32& mu, u32& nu, int& lambda) const;
    u64 word_count() const { return (length + 63) / 64; }
};

// Generator matrix for C_F.  Requires F(0) = 0; refuses (ConstraintError naming the
// offending mask) when some component is linear, since the dimension claim n+m would
// fail.  The built rank is verified.
LinearCode build_code(const VectorialFunction& F);

// Negative fixture: length-2^n code with the constant row appended (dimension n+m+1).
// Not minimal by construction; built only behind this explicit call.
LinearCode build_code_augmented(const VectorialFunction& F);

// Walsh route for wt(c(mu,nu)): 0 at (0,0); 2^(n-1) for mu = 0, nu != 0;
// 2^(n-1) - W_F(mu,nu)/2 otherwise.  Agrees with the popcount route for every codeword.
i64 codeword_weight_walsh(const VectorialFunction& F, u32 mu, u32 nu);

struct WeightDistribution {
    std::map<u64, u64> freq;  // weight -> count, includes weight 0 once

    u64 w_min() const;  // minimum nonzero weight (= minimum distance d)
    u64 w_max() const;
    u64 total() const;
    std::string enumerator_string() const;  // "1+252z^28+63z^32+196z^36"
};

// Full distribution via the Walsh route.  With `code` given, cross-verified against
// popcount enumeration: fully for dimension <= 24, else on >= `samples` random
// codewords (seeded).  Disagreement raises VerifyError.
WeightDistribution weight_distribution(const VectorialFunction& F);
WeightDistribution weight_distribution(const VectorialFunction& F, const LinearCode& code,
                                       u64 samples = 100000, u64 seed = 0xD15EA5E);

// Popcount enumeration of all 2^k codewords (Gray order); dimension <= 24.
WeightDistribution weight_distribution_popcount(const LinearCode& code);

enum class TableKind { PlateauedSingle, Bent, AlmostBent, Theorem6 };

// Closed-form distributions.  PlateauedSingle(n, m, lambda) needs n > 4,
// 0 <= lambda <= n-4, lambda = n mod 2; Bent(n, m) is lambda = 0 with m <= n/2;
// AlmostBent(n) is m = n, lambda = 1, n odd; Theorem6(n) needs n = 2t, t >= 3.
WeightDistribution table_frequencies(TableKind kind, int n, int m, int lambda = 0);
TableKind table_kind_from_string(const std::string& s);

enum class Route { BruteForce, WalshCriterion, GenericABCriterion, BoundArgument };
const char* to_string(Route r);

// Codeword pair violating the minimality criterion: wt(c1+c2) = wt(c2) - wt(c1) with
// c1, c2, c1+c2 all nonzero.  Indices refer to LinearCode::codeword.
struct Witness {
    u64 c1 = 0, c2 = 0;
};

struct MinimalityReport {
    bool minimal = false;
    Route route = Route::BruteForce;
    std::optional<Witness> witness;       // present iff not minimal
    bool covering_checked = false;        // bruteforce cross-check ran
    std::string detail;
};

// Re-check a claimed witness by popcount.
bool witness_holds(const LinearCode& code, const Witness& w);

// Exhaustive pair scan of wt(c1+c2) != wt(c2) - wt(c1) over a precomputed weight
// table; dimension <= 24.  Cross-checked against the covering-definition scan when
// the codewords fit in memory (dimension <= 16); the two must agree.
MinimalityReport is_minimal_bruteforce(const LinearCode& code);

// The two scans individually (for checker cross-validation).
MinimalityReport ding_scan(const LinearCode& code);
MinimalityReport covering_scan(const LinearCode& code);

// Spectral necessary-and-sufficient criterion on W_F:
//  (1) W_F(mu,nu) +/- W_F(mu,nu') != 2^n for mu != 0, nu != nu';
//  (2) W_F(mu,nu) + W_F(mu',nu') - W_F(mu+mu',nu+nu') != 2^n for mu != mu', both != 0.
// Requires F(0) = 0 and no affine component; loop budget (m+n) <= 18 per side.
MinimalityReport minimality_walsh_criterion(const VectorialFunction& F);

// Premises on a seed Boolean function f with f(0) = 0:
//  (a) W_f(nu) +/- W_f(nu') != 2^n for nu != nu';
//  (b) 2 max W_f - min W_f >= 2^n.
struct SeedPremises {
    bool cond_a = false;
    bool cond_b = false;
    i64 max_walsh = 0, min_walsh = 0;
    // (a)-violation witness: W(nu) + sign * W(nu') = 2^n.
    struct AWitness { u32 nu, nu_prime; int sign; };
    std::optional<AWitness> witness_a;
};
SeedPremises seed_premises(const WalshSpectrum& w);
SeedPremises seed_premises(const BooleanFunction& f);

struct ABReport {
    u64 w_min = 0, w_max = 0;
    bool satisfies_ab = false;     // 2 w_min > w_max
    bool spectral_violation = false;  // 2 max W_F - min W_F >= 2^n (over mu != 0)
};

// Both the weight-ratio test and the spectral test; they must agree (VerifyError
// otherwise, which would contradict their proved equivalence).
ABReport ab_check(const WeightDistribution& dist, const VectorialFunction& F);

// Structured criterion for the concatenated family F = (f, G): premises (a), (b) on
// f, C_G minimal, no affine component, then the three sum conditions on
// (W_f, W_G rows, W_A rows) with A_mu~ = f + mu~.G.  For one-bit G the third
// condition is vacuous.  The AB condition is violated whenever the premises hold.
struct GenericABResult {
    bool premises_ok = false;
    std::string failed_premise;  // empty when premises_ok
    MinimalityReport minimality;
    ABReport ab;
    SeedPremises premise_f;
};
GenericABResult genericAB_criterion(const BooleanFunction& f, const VectorialFunction& G);

// Scalable route for the Gold-based family: streams all component spectra, computes
// the exact maxima, and asserts the bound chain that implies the three conditions:
//   max |W_A| <= 2^((n+lambda)/2 + 1) + 2^(t+2)            (anchor bound)
//   2 max|W_A| < 2^n;  max|W_f| + max|W_G| + max|W_A| < 2^n;  2 max|W_A| + max|W_G| < 2^n
// plus >= `samples` random codeword triples through the pair criterion.  An
// inequality failure raises VerifyError naming the display (do not conclude).
struct BoundArgumentReport {
    MinimalityReport minimality;
    i64 max_abs_wf = 0, max_abs_wg = 0, max_abs_wa = 0;
    i64 anchor_bound = 0;  // 2^((n+lambda)/2+1) + 2^(t+2)
    bool anchor_ok = false, ineq1 = false, ineq2 = false, ineq3 = false;
    u64 sampled = 0;
    bool sample_ok = false;
};
BoundArgumentReport bound_argument_theorem10(const BuiltFamily& family,
                                             u64 samples = 1000000,
                                             u64 seed = 0xD15EA5E);

}  // namespace mlc
