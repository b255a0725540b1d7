// mlc: construct code-generating functions, build the codes, and verify
// minimality and AB status.  Subcommands: construct, code, verify, table, spectrum.
//
// Exit codes: 0 success, 2 constraint violation, 3 verification failure,
// 4 budget refusal.  MLC_THREADS bounds worker threads; every randomized check
// takes an explicit --seed with a fixed default.

#include <iostream>
#include <numeric>
#include <optional>

#include <CLI11.hpp>

#include "mlc/io.hpp"

using namespace mlc;

namespace {

struct ConstructArgs {
    std::string family;
    int n = 0, i = 0, r = 0, m = 0;
    bool complemented = false;
    std::string a, b, modulus, modulus_t;
    std::vector<std::string> basis;
    std::string pairing = "dot";
    std::string out;
};

std::string default_name(const ConstructArgs& a) {
    std::string s = a.family + "_n" + std::to_string(a.n);
    if (a.family == "theorem6" || a.family == "theorem10" || a.family == "gold")
        s += "_i" + std::to_string(a.i);
    if (a.family == "theorem8") s += "_r" + std::to_string(a.r);
    if (a.family == "bent") s += "_m" + std::to_string(a.m);
    if (a.complemented) s += "_c";
    return s + ".json";
}

int cmd_construct(const ConstructArgs& args) {
    ordered_json fn_json;
    ordered_json params;
    params["family"] = args.family;
    params["n"] = args.n;

    if (args.family == "theorem6" || args.family == "theorem8" || args.family == "theorem10") {
        FamilySpec spec;
        spec.kind = family_kind_from_string(args.family);
        spec.n = args.n;
        spec.i = args.i;
        spec.r = args.r;
        spec.complemented = args.complemented;
        if (!args.a.empty()) spec.a = parse_hex_u32(args.a);
        if (!args.b.empty()) spec.b = parse_hex_u32(args.b);
        if (!args.modulus.empty()) spec.modulus = parse_hex_u32(args.modulus);
        if (!args.modulus_t.empty()) spec.modulus_t = parse_hex_u32(args.modulus_t);
        const BuiltFamily fam = build_family(spec);
        if (!fam.note.empty()) std::cerr << "note: " << fam.note << "\n";
        fn_json = family_to_json(fam);
        params = fn_json["construction"];
    } else if (args.family == "gold") {
        auto ctx = std::make_shared<const FieldContext>(
            args.n, args.modulus.empty() ? default_modulus(args.n) : parse_hex_u32(args.modulus));
        const GoldFunction g = gold(ctx, args.i);
        fn_json = function_to_json(g.F);
        params["i"] = args.i;
        params["modulus"] = hex_u32(ctx->modulus());
    } else if (args.family == "indicator-quad") {
        // f = 1_E + (a.x)(b.x) + 1 from an explicit subspace basis.
        if (args.basis.empty()) throw ConstraintError("indicator-quad needs --basis");
        if (args.a.empty() || args.b.empty()) throw ConstraintError("indicator-quad needs --a and --b");
        std::vector<u32> gens;
        for (const auto& h : args.basis) gens.push_back(parse_hex_u32(h));
        const Subspace E = Subspace::span(args.n, gens);
        const u32 a = parse_hex_u32(args.a), b = parse_hex_u32(args.b);
        ModifiedIndicator mi;
        if (args.pairing == "trace") {
            FieldContext ctx(args.n, args.modulus.empty() ? default_modulus(args.n)
                                                          : parse_hex_u32(args.modulus));
            mi = modified_indicator(E, a, b, ctx);
            params["modulus"] = hex_u32(ctx.modulus());
        } else if (args.pairing == "dot") {
            mi = modified_indicator(E, a, b);
        } else {
            throw ConstraintError("pairing must be dot or trace");
        }
        std::cerr << "note: spectrum condition (a, b, a+b outside the dual) "
                  << (mi.condition_ok ? "holds" : "fails") << "\n";
        fn_json = function_to_json(VectorialFunction::from_boolean(mi.f));
        ordered_json basis_json = ordered_json::array();
        for (u32 g : gens) basis_json.push_back(hex_u32(g));
        params["basis"] = std::move(basis_json);
        params["a"] = hex_u32(a);
        params["b"] = hex_u32(b);
        params["pairing"] = args.pairing;
        params["condition_ok"] = mi.condition_ok;
    } else if (args.family == "bent") {
        if (args.n % 2 || args.n < 4) throw ConstraintError("bent family needs even n >= 4");
        if (args.m < 1) throw ConstraintError("bent family needs m >= 1");
        const int t = args.n / 2;
        FieldContext ctx_t(t, args.modulus_t.empty() ? default_modulus(t)
                                                     : parse_hex_u32(args.modulus_t));
        SpreadFamily sp = desarguesian_spread(ctx_t);
        const VectorialFunction F =
            args.m == 1 ? VectorialFunction::from_boolean(select_bent(sp, 0))
                        : spread_bent(sp, args.m);
        fn_json = function_to_json(F);
        params["m"] = args.m;
        params["modulus_t"] = hex_u32(ctx_t.modulus());
    } else {
        throw ConstraintError("unknown family: " + args.family);
    }

    const std::string out = args.out.empty() ? default_name(args) : args.out;
    write_file_atomic(out, dump_json(fn_json));
    const std::string run_path = out.substr(0, out.rfind(".json")) + ".run.json";
    write_file_atomic(run_path, dump_json(run_record("construct", params, {out})));
    std::cout << "wrote " << out << " and " << run_path << "\n";
    return 0;
}

std::string strip_json_suffix(const std::string& path) {
    const auto pos = path.rfind(".json");
    return pos == std::string::npos ? path : path.substr(0, pos);
}

int cmd_code(const std::string& fn_path, std::string prefix, bool augmented) {
    const LoadedFunction loaded = function_from_json(ordered_json::parse(read_file(fn_path)));
    const VectorialFunction& F = loaded.F;
    if (prefix.empty()) prefix = strip_json_suffix(fn_path);

    const LinearCode code = augmented ? build_code_augmented(F) : build_code(F);
    const WeightDistribution dist =
        augmented ? weight_distribution_popcount(code) : weight_distribution(F, code);

    const std::string gen_path = prefix + ".gen.hex";
    const std::string csv_path = prefix + ".weights.csv";
    write_file_atomic(gen_path, generator_to_hex_lines(code));
    write_file_atomic(csv_path, weights_to_csv(dist));

    ordered_json summary;
    summary["format"] = "mlc-code";
    summary["version"] = kToolVersion;
    summary["source"] = fn_path;
    summary["augmented"] = augmented;
    summary["parameters"] = {{"N", code.length}, {"k", code.dimension}, {"d", dist.w_min()}};
    summary["enumerator"] = dist.enumerator_string();
    summary["files"] = {{"generator", gen_path}, {"weights", csv_path}};
    const std::string sum_path = prefix + ".code.json";
    write_file_atomic(sum_path, dump_json(summary));

    std::cout << "[" << code.length << "," << code.dimension << "," << dist.w_min()
              << "]  " << dist.enumerator_string() << "\n"
              << "wrote " << sum_path << ", " << gen_path << ", " << csv_path << "\n";
    return 0;
}

int cmd_verify(const std::string& fn_path, const std::string& route, bool augmented,
               const std::string& out, u64 samples, u64 seed) {
    const LoadedFunction loaded = function_from_json(ordered_json::parse(read_file(fn_path)));
    const VectorialFunction& F = loaded.F;

    ordered_json report;
    report["format"] = "mlc-verify";
    report["version"] = kToolVersion;
    report["source"] = fn_path;

    MinimalityReport rep;
    LinearCode code = augmented ? build_code_augmented(F) : build_code(F);
    if (augmented) {
        if (route != "auto" && route != "bruteforce")
            throw ConstraintError("the augmented fixture is checked by brute force only");
        rep = is_minimal_bruteforce(code);
    } else if (route == "bruteforce") {
        rep = is_minimal_bruteforce(code);
    } else if (route == "walsh") {
        rep = minimality_walsh_criterion(F);
    } else if (route == "generic") {
        if (!loaded.family)
            throw ConstraintError("the structured route needs a construction record (f, G)");
        const GenericABResult gen = genericAB_criterion(loaded.family->f, loaded.family->G);
        if (!gen.premises_ok)
            throw ConstraintError("construction premises failed: " + gen.failed_premise);
        rep = gen.minimality;
    } else if (route == "bound") {
        if (!loaded.family || loaded.family->spec.kind != FamilyKind::Theorem10)
            throw ConstraintError("the bound route applies to the theorem10 family");
        rep = bound_argument_theorem10(*loaded.family, samples, seed).minimality;
    } else if (route == "auto") {
        if (F.n + F.m <= 18) {
            rep = minimality_walsh_criterion(F);
        } else if (loaded.family && loaded.family->spec.kind == FamilyKind::Theorem10) {
            rep = bound_argument_theorem10(*loaded.family, samples, seed).minimality;
        } else if (code.dimension <= 24) {
            rep = is_minimal_bruteforce(code);
        } else {
            throw BudgetError("no route fits: spectral needs m+n <= 18, brute force k <= 24, "
                              "bound route needs the theorem10 family");
        }
    } else {
        throw ConstraintError("unknown route: " + route);
    }

    report["minimality"] = minimality_to_json(rep, code);
    if (!augmented) {
        const WeightDistribution dist = weight_distribution(F);
        report["ab"] = ab_to_json(ab_check(dist, F));
    }
    report["checks_passed"] = rep.minimal;

    const std::string out_path = out.empty() ? strip_json_suffix(fn_path) + ".verify.json" : out;
    write_file_atomic(out_path, dump_json(report));
    std::cout << (rep.minimal ? "minimal" : "NOT minimal") << " (route "
              << to_string(rep.route) << "); report in " << out_path << "\n";
    return rep.minimal ? 0 : 3;
}

int cmd_table(const std::string& kind_s, int n, int m, int lambda) {
    const TableKind kind = table_kind_from_string(kind_s);
    WeightDistribution closed, enumerated;
    switch (kind) {
        case TableKind::Bent: {
            closed = table_frequencies(TableKind::Bent, n, m);
            SpreadFamily sp = desarguesian_spread(n / 2);
            enumerated = weight_distribution(
                m == 1 ? VectorialFunction::from_boolean(select_bent(sp, 0))
                       : spread_bent(sp, m));
            break;
        }
        case TableKind::AlmostBent: {
            closed = table_frequencies(TableKind::AlmostBent, n, n);
            enumerated =
                weight_distribution(gold(std::make_shared<const FieldContext>(n), 1).F);
            break;
        }
        case TableKind::PlateauedSingle: {
            closed = table_frequencies(TableKind::PlateauedSingle, n, m, lambda);
            if (lambda == 0) {
                SpreadFamily sp = desarguesian_spread(n / 2);
                enumerated = weight_distribution(
                    m == 1 ? VectorialFunction::from_boolean(select_bent(sp, 0))
                           : spread_bent(sp, m));
                break;
            }
            // Find a Gold exponent realizing the amplitude, then project to m bits.
            int exponent = 0;
            for (int i = 1; i < n; ++i)
                if (std::gcd(n, i) == lambda && (n / lambda) % 2 == 1) { exponent = i; break; }
            if (!exponent)
                throw ConstraintError("no Gold exponent has gcd(n,i) = lambda with n/lambda odd");
            const VectorialFunction full =
                gold(std::make_shared<const FieldContext>(n), exponent).F;
            VectorialFunction P;
            P.n = n;
            P.m = m;
            P.table.resize(full.table.size());
            for (u32 x = 0; x < P.table.size(); ++x)
                P.table[x] = full.table[x] & ((u32(1) << m) - 1);
            enumerated = weight_distribution(P);
            break;
        }
        case TableKind::Theorem6: {
            closed = table_frequencies(TableKind::Theorem6, n, 2);
            FamilySpec spec;
            spec.kind = FamilyKind::Theorem6;
            spec.n = n;
            spec.i = 0;
            enumerated = weight_distribution(build_family(spec).F);
            break;
        }
    }

    std::cout << "weight  closed-form  enumerated\n";
    std::map<u64, std::pair<u64, u64>> merged;
    for (const auto& [w, c] : closed.freq) merged[w].first = c;
    for (const auto& [w, c] : enumerated.freq) merged[w].second = c;
    bool match = true;
    for (const auto& [w, pair] : merged) {
        std::cout << w << "\t" << pair.first << "\t" << pair.second
                  << (pair.first == pair.second ? "" : "   <-- MISMATCH") << "\n";
        if (pair.first != pair.second) match = false;
    }
    std::cout << (match ? "RESULT: MATCH" : "RESULT: MISMATCH") << "\n";
    return match ? 0 : 3;
}

int cmd_spectrum(const std::string& fn_path, const std::string& mu_s, const std::string& out) {
    const LoadedFunction loaded = function_from_json(ordered_json::parse(read_file(fn_path)));
    const u32 mu = parse_hex_u32(mu_s);
    const WalshSpectrum w = component_spectrum(loaded.F, mu);
    std::string text = "nu,walsh\n";
    for (u32 nu = 0; nu < w.values.size(); ++nu)
        text += hex_u32(nu) + "," + std::to_string(w.values[nu]) + "\n";
    if (out.empty()) std::cout << text;
    else {
        write_file_atomic(out, text);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary linear codes from (vectorial) Boolean functions"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build a function family");
    construct->add_option("--family", ca.family,
                          "theorem6 | theorem8 | theorem10 | gold | bent | indicator-quad")
        ->required();
    construct->add_option("--n", ca.n, "input dimension")->required();
    construct->add_option("--i", ca.i, "bit index / Gold exponent");
    construct->add_option("--r", ca.r, "output bits of G (theorem8)");
    construct->add_option("--m", ca.m, "output bits (bent family)");
    construct->add_flag("--complemented", ca.complemented, "k_i = 0 selection variant");
    construct->add_option("--a", ca.a, "hex vector a");
    construct->add_option("--b", ca.b, "hex vector b");
    construct->add_option("--modulus", ca.modulus, "GF(2^n) modulus, hex mask");
    construct->add_option("--modulus-t", ca.modulus_t, "GF(2^t) modulus, hex mask");
    construct->add_option("--basis", ca.basis, "subspace basis, hex vectors (indicator-quad)");
    construct->add_option("--pairing", ca.pairing, "dot | trace (indicator-quad)");
    construct->add_option("-o,--out", ca.out, "output function file");

    std::string code_fn, code_prefix;
    bool code_aug = false;
    CLI::App* code = app.add_subcommand("code", "generator matrix, weights, enumerator");
    code->add_option("function", code_fn, "function JSON file")->required();
    code->add_option("--out-prefix", code_prefix, "output file prefix");
    code->add_flag("--augmented", code_aug, "constant-row negative fixture");

    std::string ver_fn, ver_route = "auto", ver_out;
    bool ver_aug = false;
    u64 ver_samples = 1000000, ver_seed = 0xD15EA5E;
    CLI::App* verify = app.add_subcommand("verify", "minimality and AB reports");
    verify->add_option("function", ver_fn, "function JSON file")->required();
    verify->add_option("--route", ver_route, "auto | bruteforce | walsh | generic | bound");
    verify->add_flag("--augmented", ver_aug, "check the constant-row fixture");
    verify->add_option("-o,--out", ver_out, "report file");
    verify->add_option("--samples", ver_samples, "triples for the bound route");
    verify->add_option("--seed", ver_seed, "RNG seed for sampling");

    std::string tab_kind;
    int tab_n = 0, tab_m = 1, tab_lambda = 0;
    CLI::App* table = app.add_subcommand("table", "closed form vs enumeration");
    table->add_option("kind", tab_kind, "plateaued | bent | ab | theorem6")->required();
    table->add_option("--n", tab_n, "input dimension")->required();
    table->add_option("--m", tab_m, "output dimension");
    table->add_option("--lambda", tab_lambda, "plateau parameter");

    std::string spec_fn, spec_mu, spec_out;
    CLI::App* spectrum = app.add_subcommand("spectrum", "dump one component spectrum");
    spectrum->add_option("function", spec_fn, "function JSON file")->required();
    spectrum->add_option("--mu", spec_mu, "component mask, hex")->required();
    spectrum->add_option("-o,--out", spec_out, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(ca);
        if (code->parsed()) return cmd_code(code_fn, code_prefix, code_aug);
        if (verify->parsed())
            return cmd_verify(ver_fn, ver_route, ver_aug, ver_out, ver_samples, ver_seed);
        if (table->parsed()) return cmd_table(tab_kind, tab_n, tab_m, tab_lambda);
        if (spectrum->parsed()) return cmd_spectrum(spec_fn, spec_mu, spec_out);
    } catch (const ConstraintError& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 4;
    } catch (const VerifyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
