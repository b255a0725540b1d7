#include "mlc/codes.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "mlc/parallel.hpp"

namespace mlc {

namespace {

int matrix_rank(std::vector<std::vector<u64>> rows) {
    int rank = 0;
    const std::size_t words = rows.empty() ? 0 : rows[0].size();
    for (std::size_t w = 0; w < words; ++w) {
        for (int bit = 0; bit < 64; ++bit) {
            const u64 mask = u64(1) << bit;
            std::size_t pivot = rows.size();
            for (std::size_t r = rank; r < rows.size(); ++r)
                if (rows[r][w] & mask) { pivot = r; break; }
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<int>(r) != rank && (rows[r][w] & mask))
                    for (std::size_t ww = 0; ww < words; ++ww) rows[r][ww] ^= rows[rank][ww];
            }
            ++rank;
            if (rank == static_cast<int>(rows.size())) return rank;
        }
    }
    return rank;
}

u64 popcount_words(const std::vector<u64>& words) {
    u64 w = 0;
    for (u64 word : words) w += std::popcount(word);
    return w;
}

LinearCode build_code_impl(const VectorialFunction& F, bool augmented) {
    if (F.table[0] != 0) throw ConstraintError("construction requires F(0) = 0");
    // A linear component would drop the dimension below n + m; refuse with the mask.
    // (With F(0) = 0 an affine component is automatically linear.)
    if (F.n + F.m <= 26) {
        for (u32 mu = 1; mu < F.mu_count(); ++mu) {
            if (component_spectrum(F, mu).max_abs() == (i64(1) << F.n))
                throw ConstraintError("component mu=" + std::to_string(mu) +
                                      " is linear; the dimension claim would fail");
        }
    }

    LinearCode code;
    code.n = F.n;
    code.m = F.m;
    code.pairing = F.pairing;
    code.augmented = augmented;
    code.length = augmented ? (u64(1) << F.n) : (u64(1) << F.n) - 1;
    const u64 words = code.word_count();
    const u32 x0 = augmented ? 0 : 1;  // coordinate of x starts at 1 unless augmented

    auto coord = [&](u32 x) { return x - x0; };
    for (int j = 0; j < F.m; ++j) {
        std::vector<u64> row(words, 0);
        for (u32 x = x0; x < F.size(); ++x)
            if (F.component_bit(u32(1) << j, x)) row[coord(x) >> 6] |= u64(1) << (coord(x) & 63);
        code.rows.push_back(std::move(row));
    }
    for (int j = 0; j < F.n; ++j) {
        std::vector<u64> row(words, 0);
        for (u32 x = x0; x < F.size(); ++x)
            if (F.character_bit(u32(1) << j, x)) row[coord(x) >> 6] |= u64(1) << (coord(x) & 63);
        code.rows.push_back(std::move(row));
    }
    if (augmented) {
        std::vector<u64> ones(words, ~u64(0));
        if (code.length & 63) ones.back() = (u64(1) << (code.length & 63)) - 1;
        code.rows.push_back(std::move(ones));
    }

    code.dimension = static_cast<int>(code.rows.size());
    if (matrix_rank(code.rows) != code.dimension)
        throw VerifyError("generator rank below the claimed dimension");
    return code;
}

}  // namespace

LinearCode LinearCode::from_rows(u64 length, const std::vector<std::vector<u64>>& rows) {
    LinearCode code;
    code.length = length;
    code.rows = rows;
    code.dimension = static_cast<int>(rows.size());
    if (matrix_rank(rows) != code.dimension)
        throw ConstraintError("rows are linearly dependent");
    return code;
}

std::vector<u64> LinearCode::codeword(u64 index) const {
    std::vector<u64> c(word_count(), 0);
    for (int r = 0; r < dimension; ++r)
        if ((index >> r) & 1)
            for (std::size_t w = 0; w < c.size(); ++w) c[w] ^= rows[r][w];
    return c;
}

u64 LinearCode::codeword_weight(u64 index) const { return popcount_words(codeword(index)); }

u64 LinearCode::index_of(u32 mu, u32 nu, int lambda) const {
    return u64(mu) | (u64(nu) << m) | (u64(lambda) << (m + n));
}

void LinearCode::decode_index(u64 index, u32& mu, u32& nu, int& lambda) const {
    mu = static_cast<u32>(index & ((u64(1) << m) - 1));
    nu = static_cast<u32>((index >> m) & ((u64(1) << n) - 1));
    lambda = augmented ? static_cast<int>((index >> (m + n)) & 1) : 0;
}

LinearCode build_code(const VectorialFunction& F) { return build_code_impl(F, false); }
LinearCode build_code_augmented(const VectorialFunction& F) { return build_code_impl(F, true); }

i64 codeword_weight_walsh(const VectorialFunction& F, u32 mu, u32 nu) {
    if (mu == 0 && nu == 0) return 0;
    if (mu == 0) return i64(1) << (F.n - 1);
    const WalshSpectrum w = component_spectrum(F, mu);
    return (i64(1) << (F.n - 1)) - w.values[nu] / 2;
}

u64 WeightDistribution::w_min() const {
    for (const auto& [w, c] : freq)
        if (w != 0 && c != 0) return w;
    throw VerifyError("distribution has no nonzero weight");
}

u64 WeightDistribution::w_max() const {
    for (auto it = freq.rbegin(); it != freq.rend(); ++it)
        if (it->first != 0 && it->second != 0) return it->first;
    throw VerifyError("distribution has no nonzero weight");
}

u64 WeightDistribution::total() const {
    u64 t = 0;
    for (const auto& [w, c] : freq) t += c;
    return t;
}

std::string WeightDistribution::enumerator_string() const {
    std::ostringstream out;
    out << "1";
    for (const auto& [w, c] : freq) {
        if (w == 0 || c == 0) continue;
        out << "+";
        if (c != 1) out << c;
        out << "z^" << w;
    }
    return out.str();
}

WeightDistribution weight_distribution(const VectorialFunction& F) {
    WeightDistribution dist;
    dist.freq[0] = 1;
    dist.freq[u64(1) << (F.n - 1)] += (u64(1) << F.n) - 1;
    const i64 half = i64(1) << (F.n - 1);
    for_each_spectrum(F, [&](u32, const WalshSpectrum& w) {
        for (i64 v : w.values) dist.freq[static_cast<u64>(half - v / 2)] += 1;
    });
    return dist;
}

WeightDistribution weight_distribution_popcount(const LinearCode& code) {
    if (code.dimension > 24)
        throw BudgetError("popcount enumeration capped at dimension 24; use the Walsh route");
    WeightDistribution dist;
    std::vector<u64> cur(code.word_count(), 0);
    dist.freq[0] = 1;
    const u64 total = code.codewords();
    for (u64 i = 1; i < total; ++i) {
        const int bit = std::countr_zero(i);  // Gray-code step
        for (std::size_t w = 0; w < cur.size(); ++w) cur[w] ^= code.rows[bit][w];
        dist.freq[popcount_words(cur)] += 1;
    }
    return dist;
}

WeightDistribution weight_distribution(const VectorialFunction& F, const LinearCode& code,
                                       u64 samples, u64 seed) {
    WeightDistribution walsh = weight_distribution(F);
    if (code.dimension <= 24) {
        const WeightDistribution pop = weight_distribution_popcount(code);
        if (pop.freq != walsh.freq)
            throw VerifyError("Walsh-route distribution disagrees with popcount enumeration");
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<u64> pick(1, code.codewords() - 1);
        u64 checked = 0;
        u32 last_mu = 0;
        WalshSpectrum row;
        std::vector<u64> idx(samples);
        for (u64 s = 0; s < samples; ++s) idx[s] = pick(rng);
        std::sort(idx.begin(), idx.end());  // group by mu to reuse spectrum rows
        for (u64 index : idx) {
            u32 mu, nu;
            int lambda;
            code.decode_index(index, mu, nu, lambda);
            i64 expect;
            if (mu == 0) expect = i64(1) << (F.n - 1);
            else {
                if (mu != last_mu || row.values.empty()) {
                    row = component_spectrum(F, mu);
                    last_mu = mu;
                }
                expect = (i64(1) << (F.n - 1)) - row.values[nu] / 2;
            }
            if (static_cast<i64>(code.codeword_weight(index)) != expect)
                throw VerifyError("sampled codeword weight disagrees with the Walsh formula");
            ++checked;
        }
        (void)checked;
    }
    return walsh;
}

WeightDistribution table_frequencies(TableKind kind, int n, int m, int lambda) {
    WeightDistribution d;
    auto add = [&d](i64 w, i64 c) {
        if (c < 0) throw VerifyError("negative closed-form frequency");
        if (c) d.freq[static_cast<u64>(w)] += static_cast<u64>(c);
    };
    switch (kind) {
        case TableKind::Bent:
            lambda = 0;
            if (n <= 4 || n % 2) throw ConstraintError("bent table needs even n > 4");
            if (m < 1 || m > n / 2) throw ConstraintError("bent table needs 1 <= m <= n/2");
            break;
        case TableKind::AlmostBent:
            if (n <= 4 || n % 2 == 0) throw ConstraintError("almost-bent table needs odd n > 4");
            m = n;
            lambda = 1;
            break;
        case TableKind::PlateauedSingle:
            if (n <= 4) throw ConstraintError("plateaued table needs n > 4");
            if (lambda < 0 || lambda > n - 4 || (lambda % 2) != (n % 2))
                throw ConstraintError("plateaued table needs 0 <= lambda <= n-4 with the parity of n");
            if (m < 1) throw ConstraintError("plateaued table needs m >= 1");
            break;
        case TableKind::Theorem6: {
            if (n % 2 || n < 6) throw ConstraintError("theorem6 table needs n = 2t, t >= 3");
            const int t = n / 2;
            const i64 N = i64(1) << n, T = i64(1) << t, half = i64(1) << (n - 1);
            add(0, 1);
            add(half, N - 1);
            add(2 * T - 2, 1);
            add(half + T - 2, 2 * T - 2);
            add(half - 2, N - 2 * T + 1);
            add(half - T / 2, N + T);
            add(half + T / 2, N - T);
            return d;
        }
    }
    // Single-amplitude plateaued family (bent = lambda 0, almost-bent = lambda 1, m = n).
    const i64 N = i64(1) << n, M = i64(1) << m, half = i64(1) << (n - 1);
    const i64 amp_half = i64(1) << ((n + lambda) / 2 - 1);
    const i64 support = i64(1) << (n - lambda);         // |S_F| per component
    const i64 plus = (support / 2) + (i64(1) << ((n - lambda) / 2 - 1));
    const i64 minus = (support / 2) - (i64(1) << ((n - lambda) / 2 - 1));
    add(0, 1);
    add(half, N - 1 + (M - 1) * (N - support));
    add(half + amp_half, (M - 1) * minus);
    add(half - amp_half, (M - 1) * plus);
    return d;
}

TableKind table_kind_from_string(const std::string& s) {
    if (s == "plateaued") return TableKind::PlateauedSingle;
    if (s == "bent") return TableKind::Bent;
    if (s == "ab") return TableKind::AlmostBent;
    if (s == "theorem6") return TableKind::Theorem6;
    throw ConstraintError("unknown table kind: " + s);
}

const char* to_string(Route r) {
    switch (r) {
        case Route::BruteForce: return "bruteforce";
        case Route::WalshCriterion: return "walsh-criterion";
        case Route::GenericABCriterion: return "genericAB-criterion";
        case Route::BoundArgument: return "bound-argument";
    }
    return "?";
}

bool witness_holds(const LinearCode& code, const Witness& w) {
    if (w.c1 == 0 || w.c2 == 0 || w.c1 == w.c2) return false;
    const std::vector<u64> c1 = code.codeword(w.c1), c2 = code.codeword(w.c2);
    u64 w1 = 0, w2 = 0, w12 = 0;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        w1 += std::popcount(c1[i]);
        w2 += std::popcount(c2[i]);
        w12 += std::popcount(c1[i] ^ c2[i]);
    }
    return w1 != 0 && w2 != 0 && w12 != 0 &&
           static_cast<i64>(w12) == static_cast<i64>(w2) - static_cast<i64>(w1);
}

namespace {

std::vector<u32> all_weights(const LinearCode& code) {
    std::vector<u32> wt(code.codewords());
    std::vector<u64> cur(code.word_count(), 0);
    u64 gray = 0;
    wt[0] = 0;
    for (u64 i = 1; i < code.codewords(); ++i) {
        const int bit = std::countr_zero(i);
        for (std::size_t w = 0; w < cur.size(); ++w) cur[w] ^= code.rows[bit][w];
        gray = i ^ (i >> 1);
        wt[gray] = static_cast<u32>(popcount_words(cur));
    }
    return wt;
}

}  // namespace

MinimalityReport ding_scan(const LinearCode& code) {
    if (code.dimension > 24)
        throw BudgetError("pair scan capped at dimension 24; use the spectral route");
    const std::vector<u32> wt = all_weights(code);
    const u64 total = code.codewords();

    // First witness per chunk; merged to the globally first (c1, c2).
    std::vector<std::optional<Witness>> found(thread_count() + 1);
    parallel_chunks(1, total, [&](unsigned chunk, u64 lo, u64 hi) {
        for (u64 c1 = lo; c1 < hi; ++c1) {
            const i64 w1 = wt[c1];
            for (u64 c2 = 1; c2 < total; ++c2) {
                if (c2 == c1) continue;
                if (static_cast<i64>(wt[c1 ^ c2]) == static_cast<i64>(wt[c2]) - w1) {
                    found[chunk] = Witness{c1, c2};
                    return;
                }
            }
        }
    });
    MinimalityReport rep;
    rep.route = Route::BruteForce;
    rep.minimal = true;
    for (const auto& w : found) {
        if (!w) continue;
        if (rep.minimal || w->c1 < rep.witness->c1 ||
            (w->c1 == rep.witness->c1 && w->c2 < rep.witness->c2)) {
            rep.minimal = false;
            rep.witness = w;
        }
    }
    rep.detail = "pair scan over wt(c1+c2) != wt(c2) - wt(c1)";
    return rep;
}

MinimalityReport covering_scan(const LinearCode& code) {
    if (code.dimension > 16)
        throw BudgetError("covering scan capped at dimension 16 (codeword storage)");
    const u64 total = code.codewords();
    const u64 words = code.word_count();
    if (total * words * 8 > (u64(256) << 20))
        throw BudgetError("covering scan exceeds the 256 MB codeword storage budget");

    // Materialize every codeword in index order.
    std::vector<u64> cw(total * words, 0);
    {
        std::vector<u64> cur(words, 0);
        for (u64 i = 1; i < total; ++i) {
            const int bit = std::countr_zero(i);
            for (u64 w = 0; w < words; ++w) cur[w] ^= code.rows[bit][w];
            std::copy(cur.begin(), cur.end(), cw.begin() + static_cast<std::size_t>((i ^ (i >> 1)) * words));
        }
    }
    std::vector<std::optional<Witness>> found(thread_count() + 1);
    parallel_chunks(1, total, [&](unsigned chunk, u64 lo, u64 hi) {
        for (u64 c1 = lo; c1 < hi; ++c1) {
            const u64* v1 = &cw[c1 * words];
            for (u64 c2 = 1; c2 < total; ++c2) {
                if (c2 == c1) continue;
                const u64* v2 = &cw[c2 * words];
                bool subset = true;
                for (u64 w = 0; w < words; ++w)
                    if (v1[w] & ~v2[w]) { subset = false; break; }
                if (subset) {
                    found[chunk] = Witness{c1, c2};  // suppt(c1) inside suppt(c2)
                    return;
                }
            }
        }
    });
    MinimalityReport rep;
    rep.route = Route::BruteForce;
    rep.minimal = true;
    for (const auto& w : found) {
        if (!w) continue;
        if (rep.minimal || w->c1 < rep.witness->c1 ||
            (w->c1 == rep.witness->c1 && w->c2 < rep.witness->c2)) {
            rep.minimal = false;
            rep.witness = w;
        }
    }
    rep.detail = "covering scan over suppt(c1) subset of suppt(c2)";
    return rep;
}

MinimalityReport is_minimal_bruteforce(const LinearCode& code) {
    MinimalityReport ding = ding_scan(code);
    ding.detail = "pair scan";
    if (code.dimension <= 16) {
        const MinimalityReport cover = covering_scan(code);
        if (cover.minimal != ding.minimal)
            throw VerifyError("pair-scan and covering verdicts disagree");
        if (!ding.minimal &&
            (cover.witness->c1 != ding.witness->c1 || cover.witness->c2 != ding.witness->c2))
            throw VerifyError("pair-scan and covering witnesses disagree");
        ding.covering_checked = true;
        ding.detail = "pair scan, cross-checked against the covering definition";
    }
    if (!ding.minimal && !witness_holds(code, *ding.witness))
        throw VerifyError("reported witness fails its own re-check");
    return ding;
}

namespace {

struct CriterionScan {
    // Spectra rows for mu = 1 .. 2^m - 1 plus the constant row for mu = 0:
    // W_F(0, nu) = 2^n [nu = 0] which never enters the loops.
    const ComponentSpectra& spectra;
    int n, m;
    i64 target;  // 2^n

    const std::vector<i64>& row(u32 mu) const { return spectra.row(mu).values; }

    // Condition (1): W(mu,nu) +/- W(mu,nu') != 2^n for nu != nu'.
    std::optional<Witness> condition1(const LinearCode& code) const {
        for (u32 mu = 1; mu < (u32(1) << m); ++mu) {
            const auto& w = row(mu);
            for (u32 nu = 0; nu < w.size(); ++nu) {
                for (u32 nup = nu + 1; nup < w.size(); ++nup) {
                    if (w[nu] + w[nup] == target)
                        return Witness{code.index_of(mu, nu), code.index_of(0, nu ^ nup)};
                    if (w[nu] - w[nup] == target)
                        return Witness{code.index_of(mu, nu), code.index_of(mu, nup)};
                    if (w[nup] - w[nu] == target)
                        return Witness{code.index_of(mu, nup), code.index_of(mu, nu)};
                }
            }
        }
        return std::nullopt;
    }

    // Condition (2): W(mu,nu) + W(mu',nu') - W(mu+mu',nu+nu') != 2^n, mu != mu' nonzero.
    std::optional<Witness> condition2(const LinearCode& code) const {
        const u32 nus = u32(1) << n;
        for (u32 mu = 1; mu < (u32(1) << m); ++mu) {
            for (u32 mup = mu + 1; mup < (u32(1) << m); ++mup) {
                const auto& wa = row(mu);
                const auto& wb = row(mup);
                const auto& wc = row(mu ^ mup);
                for (u32 nu = 0; nu < nus; ++nu)
                    for (u32 nup = 0; nup < nus; ++nup)
                        if (wa[nu] + wb[nup] - wc[nu ^ nup] == target)
                            return Witness{code.index_of(mup, nup),
                                           code.index_of(mu ^ mup, nu ^ nup)};
            }
        }
        return std::nullopt;
    }
};

}  // namespace

MinimalityReport minimality_walsh_criterion(const VectorialFunction& F) {
    if (F.table[0] != 0) throw ConstraintError("criterion requires F(0) = 0");
    if (F.n + F.m > 18)
        throw BudgetError("spectral pair criterion capped at m + n <= 18; "
                          "use the bound-argument route");
    const ComponentSpectra spectra = all_spectra(F);
    const i64 spike = i64(1) << F.n;
    for (u32 mu = 1; mu < F.mu_count(); ++mu)
        if (spectra.row(mu).max_abs() == spike)
            throw ConstraintError("component mu=" + std::to_string(mu) +
                                  " is affine; the criterion hypotheses exclude it");

    const LinearCode code = build_code(F);  // index arithmetic for witnesses
    CriterionScan scan{spectra, F.n, F.m, spike};
    MinimalityReport rep;
    rep.route = Route::WalshCriterion;
    std::optional<Witness> w = scan.condition1(code);
    if (!w) w = scan.condition2(code);
    rep.minimal = !w;
    rep.witness = w;
    if (w && !witness_holds(code, *w))
        throw VerifyError("spectral witness fails the popcount re-check");
    rep.detail = "spectral pair criterion over W_F";
    return rep;
}

SeedPremises seed_premises(const WalshSpectrum& w) {
    SeedPremises rep;
    rep.max_walsh = w.max_value();
    rep.min_walsh = w.min_value();
    const i64 target = i64(1) << w.n;
    rep.cond_a = true;
    for (u32 nu = 0; nu < w.values.size() && rep.cond_a; ++nu) {
        for (u32 nup = nu + 1; nup < w.values.size(); ++nup) {
            if (w.values[nu] + w.values[nup] == target) {
                rep.witness_a = {nu, nup, +1};
            } else if (w.values[nu] - w.values[nup] == target) {
                rep.witness_a = {nu, nup, -1};
            } else if (w.values[nup] - w.values[nu] == target) {
                rep.witness_a = {nup, nu, -1};
            } else {
                continue;
            }
            rep.cond_a = false;
            break;
        }
    }
    rep.cond_b = (2 * rep.max_walsh - rep.min_walsh) >= target;
    return rep;
}

SeedPremises seed_premises(const BooleanFunction& f) {
    if (f.get(0) != 0) throw ConstraintError("premises require f(0) = 0");
    return seed_premises(fwht(f));
}

ABReport ab_check(const WeightDistribution& dist, const VectorialFunction& F) {
    ABReport rep;
    rep.w_min = dist.w_min();
    rep.w_max = dist.w_max();
    rep.satisfies_ab = 2 * rep.w_min > rep.w_max;
    i64 max_w = std::numeric_limits<i64>::min(), min_w = std::numeric_limits<i64>::max();
    for_each_spectrum(F, [&](u32, const WalshSpectrum& w) {
        max_w = std::max(max_w, w.max_value());
        min_w = std::min(min_w, w.min_value());
    });
    rep.spectral_violation = (2 * max_w - min_w) >= (i64(1) << F.n);
    if (rep.spectral_violation == rep.satisfies_ab)
        throw VerifyError("weight-ratio and spectral AB tests disagree");
    return rep;
}

GenericABResult genericAB_criterion(const BooleanFunction& f, const VectorialFunction& G) {
    if (f.n != G.n) throw ConstraintError("dimension mismatch between f and G");
    if (f.get(0) != 0) throw ConstraintError("construction requires f(0) = 0");
    if (G.table[0] != 0) throw ConstraintError("construction requires G(0) = 0");

    const VectorialFunction F = concat(f, G);
    if (F.n + F.m > 18)
        throw BudgetError("structured criterion capped at m + n <= 18; "
                          "use the bound-argument route");

    GenericABResult out;
    const i64 target = i64(1) << F.n;
    const ComponentSpectra spectra = all_spectra(F);
    auto row_f = [&]() -> const std::vector<i64>& { return spectra.row(1).values; };
    auto row_g = [&](u32 mu_t) -> const std::vector<i64>& {
        return spectra.row(mu_t << 1).values;
    };
    auto row_a = [&](u32 mu_t) -> const std::vector<i64>& {
        return spectra.row((mu_t << 1) | 1).values;
    };

    // Premises: (a)/(b) on f, C_G minimal, no affine component anywhere.
    WalshSpectrum wf;
    wf.n = F.n;
    wf.values = row_f();
    out.premise_f = seed_premises(wf);
    if (!out.premise_f.cond_a) {
        out.failed_premise = "condition (a) on f";
        return out;
    }
    if (!out.premise_f.cond_b) {
        out.failed_premise = "condition (b) on f";
        return out;
    }
    for (u32 mu = 1; mu < F.mu_count(); ++mu) {
        if (spectra.row(mu).max_abs() == target) {
            out.failed_premise = "component mu=" + std::to_string(mu) + " is affine";
            return out;
        }
    }
    {
        const MinimalityReport g_rep = minimality_walsh_criterion(G);
        if (!g_rep.minimal) {
            out.failed_premise = "C_G is not minimal";
            return out;
        }
    }
    out.premises_ok = true;

    const LinearCode code = build_code(F);
    const u32 nus = u32(1) << F.n;
    const u32 mu_ts = u32(1) << G.m;
    std::optional<Witness> witness;

    // Condition (1) on every A row.
    for (u32 mu_t = 1; mu_t < mu_ts && !witness; ++mu_t) {
        const auto& wa = row_a(mu_t);
        const u32 mu = (mu_t << 1) | 1;
        for (u32 nu = 0; nu < nus && !witness; ++nu) {
            for (u32 nup = nu + 1; nup < nus; ++nup) {
                if (wa[nu] + wa[nup] == target) {
                    witness = Witness{code.index_of(mu, nu), code.index_of(0, nu ^ nup)};
                    break;
                }
                if (wa[nu] - wa[nup] == target) {
                    witness = Witness{code.index_of(mu, nu), code.index_of(mu, nup)};
                    break;
                }
                if (wa[nup] - wa[nu] == target) {
                    witness = Witness{code.index_of(mu, nup), code.index_of(mu, nu)};
                    break;
                }
            }
        }
    }

    // Condition (2): sign patterns with exactly two of (i, j, k) zero.
    for (u32 mu_t = 1; mu_t < mu_ts && !witness; ++mu_t) {
        const auto& wg = row_g(mu_t);
        const auto& wa = row_a(mu_t);
        const auto& wf_row = row_f();
        const u32 enc_g = mu_t << 1, enc_a = (mu_t << 1) | 1;
        for (u32 nu = 0; nu < nus && !witness; ++nu) {
            for (u32 nup = 0; nup < nus; ++nup) {
                const i64 a = wf_row[nu], g = wg[nup], s = wa[nu ^ nup];
                if (-a + g + s == target) {
                    witness = Witness{code.index_of(enc_a, nu ^ nup), code.index_of(1, nu)};
                    break;
                }
                if (a - g + s == target) {
                    witness = Witness{code.index_of(enc_a, nu ^ nup), code.index_of(enc_g, nup)};
                    break;
                }
                if (a + g - s == target) {
                    witness = Witness{code.index_of(enc_g, nup), code.index_of(enc_a, nu ^ nup)};
                    break;
                }
            }
        }
    }

    // Condition (3): vacuous for one-bit G.
    for (u32 mu_t = 1; mu_t < mu_ts && !witness; ++mu_t) {
        for (u32 mu_tp = 1; mu_tp < mu_ts && !witness; ++mu_tp) {
            if (mu_tp == mu_t) continue;
            const auto& wa = row_a(mu_t);
            const auto& wg = row_g(mu_tp);
            const auto& was = row_a(mu_t ^ mu_tp);
            const u32 enc_gp = mu_tp << 1, enc_as = ((mu_t ^ mu_tp) << 1) | 1;
            for (u32 nu = 0; nu < nus && !witness; ++nu) {
                for (u32 nup = 0; nup < nus; ++nup) {
                    const i64 a = wa[nu], g = wg[nup], s = was[nu ^ nup];
                    if (a + g - s == target) {
                        witness = Witness{code.index_of(enc_gp, nup), code.index_of(enc_as, nu ^ nup)};
                        break;
                    }
                    if (a - g + s == target) {
                        witness = Witness{code.index_of(enc_as, nu ^ nup), code.index_of(enc_gp, nup)};
                        break;
                    }
                }
            }
        }
    }

    out.minimality.route = Route::GenericABCriterion;
    out.minimality.minimal = !witness;
    out.minimality.witness = witness;
    out.minimality.detail = "structured criterion on (W_f, W_G, W_A)";
    if (witness && !witness_holds(code, *witness))
        throw VerifyError("structured-criterion witness fails the popcount re-check");

    // AB status from the spectra extremes (premise (b) forces the violation).
    i64 max_w = std::numeric_limits<i64>::min(), min_w = std::numeric_limits<i64>::max();
    for (u32 mu = 1; mu < F.mu_count(); ++mu) {
        max_w = std::max(max_w, spectra.row(mu).max_value());
        min_w = std::min(min_w, spectra.row(mu).min_value());
    }
    out.ab.spectral_violation = (2 * max_w - min_w) >= target;
    out.ab.w_min = static_cast<u64>((target >> 1) - max_w / 2);
    out.ab.w_max = static_cast<u64>((target >> 1) - min_w / 2);
    out.ab.satisfies_ab = 2 * out.ab.w_min > out.ab.w_max;
    if (out.ab.satisfies_ab == out.ab.spectral_violation)
        throw VerifyError("weight-ratio and spectral AB tests disagree");
    return out;
}

BoundArgumentReport bound_argument_theorem10(const BuiltFamily& family, u64 samples, u64 seed) {
    if (family.spec.kind != FamilyKind::Theorem10 || !family.gold_params)
        throw ConstraintError("bound argument applies to the theorem10 family");
    const VectorialFunction& F = family.F;
    const int n = F.n, t = n / 2, lambda = family.gold_params->lambda;
    const i64 target = i64(1) << n;

    BoundArgumentReport rep;
    rep.anchor_bound = (i64(1) << ((n + lambda) / 2 + 1)) + (i64(1) << (t + 2));

    // W_f row and the seed premises.
    {
        const WalshSpectrum wf = component_spectrum(F, 1);
        rep.max_abs_wf = wf.max_abs();
        const SeedPremises pre = seed_premises(wf);
        if (!pre.cond_a || !pre.cond_b)
            throw VerifyError("theorem10 seed premises failed; this contradicts the construction");
    }

    // Stream the G and A rows, tracking exact maxima.
    const u32 mu_ts = u32(1) << (F.m - 1);
    std::optional<i64> g_amplitude;
    bool g_single = true;
    for (u32 mu_t = 1; mu_t < mu_ts; ++mu_t) {
        const WalshSpectrum wg = component_spectrum(F, mu_t << 1);
        const WalshSpectrum wa = component_spectrum(F, (mu_t << 1) | 1);
        rep.max_abs_wg = std::max(rep.max_abs_wg, wg.max_abs());
        rep.max_abs_wa = std::max(rep.max_abs_wa, wa.max_abs());
        if (wg.max_abs() == target || wa.max_abs() == target)
            throw VerifyError("affine component found; this contradicts the construction");
        const auto amp = plateaued_amplitude(wg);
        if (!amp) g_single = false;
        else if (!g_amplitude) g_amplitude = amp;
        else if (*amp != *g_amplitude) g_single = false;
    }

    // C_G minimality by the single-amplitude bound: lambda <= n - 4 makes both
    // pair sums strictly smaller than 2^n.
    if (!g_single || !g_amplitude || *g_amplitude != (i64(1) << ((n + lambda) / 2)))
        throw VerifyError("G is not single-amplitude plateaued at 2^((n+lambda)/2)");
    if (lambda > n - 4 || 2 * *g_amplitude >= target || 3 * *g_amplitude >= target)
        throw VerifyError("amplitude bound for C_G minimality fails");

    rep.anchor_ok = rep.max_abs_wa <= rep.anchor_bound;
    rep.ineq1 = 2 * rep.max_abs_wa < target;
    rep.ineq2 = rep.max_abs_wf + rep.max_abs_wg + rep.max_abs_wa < target;
    rep.ineq3 = 2 * rep.max_abs_wa + rep.max_abs_wg < target;
    if (!rep.anchor_ok) throw VerifyError("max |W_A| exceeds 2^((n+lambda)/2+1) + 2^(t+2)");
    if (!rep.ineq1) throw VerifyError("bound failed: 2 max|W_A| < 2^n");
    if (!rep.ineq2) throw VerifyError("bound failed: max|W_f| + max|W_G| + max|W_A| < 2^n");
    if (!rep.ineq3) throw VerifyError("bound failed: 2 max|W_A| + max|W_G| < 2^n");

    // Independent spot check: random codeword triples through the pair criterion.
    const LinearCode code = build_code(F);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> pick(1, code.codewords() - 1);
    const u64 words = code.word_count();
    rep.sample_ok = true;
    for (u64 s = 0; s < samples; ++s) {
        const u64 i1 = pick(rng);
        u64 i2 = pick(rng);
        while (i2 == i1) i2 = pick(rng);
        const std::vector<u64> c1 = code.codeword(i1), c2 = code.codeword(i2);
        u64 w1 = 0, w2 = 0, w12 = 0;
        for (u64 w = 0; w < words; ++w) {
            w1 += std::popcount(c1[w]);
            w2 += std::popcount(c2[w]);
            w12 += std::popcount(c1[w] ^ c2[w]);
        }
        if (static_cast<i64>(w12) == static_cast<i64>(w2) - static_cast<i64>(w1)) {
            rep.sample_ok = false;
            rep.minimality.witness = Witness{i1, i2};
            break;
        }
        ++rep.sampled;
    }
    if (!rep.sample_ok)
        throw VerifyError("sampled triple violates the pair criterion; "
                          "this contradicts the bound argument");

    rep.minimality.route = Route::BoundArgument;
    rep.minimality.minimal = true;
    rep.minimality.detail = "amplitude bounds on (W_f, W_G, W_A) plus sampled triples";
    return rep;
}

}  // namespace mlc
