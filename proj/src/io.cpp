#include "mlc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mlc {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ConstraintError(std::string("invalid hex digit: ") + c);
}

}  // namespace

std::string bits_to_hex(const std::vector<u64>& bits, u64 nbits) {
    static const char* digits = "0123456789abcdef";
    const u64 nbytes = (nbits + 7) / 8;
    std::string out;
    out.reserve(nbytes * 2);
    for (u64 j = 0; j < nbytes; ++j) {
        const unsigned byte = static_cast<unsigned>((bits[j >> 3] >> ((j & 7) * 8)) & 0xFF);
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 15]);
    }
    return out;
}

std::vector<u64> hex_to_bits(const std::string& hex, u64 nbits) {
    const u64 nbytes = (nbits + 7) / 8;
    if (hex.size() != nbytes * 2)
        throw ConstraintError("hex string has the wrong length for " + std::to_string(nbits) + " bits");
    std::vector<u64> bits((nbits + 63) / 64, 0);
    for (u64 j = 0; j < nbytes; ++j) {
        const u64 byte = u64(hex_digit(hex[2 * j])) << 4 | u64(hex_digit(hex[2 * j + 1]));
        bits[j >> 3] |= byte << ((j & 7) * 8);
    }
    return bits;
}

std::string hex_u32(u32 v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", v);
    return buf;
}

u32 parse_hex_u32(const std::string& s) {
    std::string body = s;
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
    if (body.empty() || body.size() > 8) throw ConstraintError("bad hex scalar: " + s);
    u32 v = 0;
    for (char c : body) v = (v << 4) | static_cast<u32>(hex_digit(c));
    return v;
}

namespace {

const char* pairing_name(Pairing p) {
    return p == Pairing::VectorDot ? "vector-dot" : "field-trace";
}

Pairing pairing_from_name(const std::string& s) {
    if (s == "vector-dot") return Pairing::VectorDot;
    if (s == "field-trace") return Pairing::FieldTrace;
    throw ConstraintError("unknown pairing: " + s);
}

ordered_json construction_record(const FamilySpec& spec) {
    ordered_json c;
    c["family"] = to_string(spec.kind);
    c["n"] = spec.n;
    switch (spec.kind) {
        case FamilyKind::Theorem6:
            c["i"] = spec.i;
            c["complemented"] = spec.complemented;
            c["modulus_t"] = hex_u32(*spec.modulus_t);
            break;
        case FamilyKind::Theorem8:
            c["r"] = spec.r;
            c["a"] = hex_u32(*spec.a);
            c["b"] = hex_u32(*spec.b);
            c["modulus_t"] = hex_u32(*spec.modulus_t);
            break;
        case FamilyKind::Theorem10:
            c["i"] = spec.i;
            c["a"] = hex_u32(*spec.a);
            c["b"] = hex_u32(*spec.b);
            c["modulus"] = hex_u32(*spec.modulus);
            break;
    }
    return c;
}

FamilySpec spec_from_record(const ordered_json& c) {
    FamilySpec spec;
    spec.kind = family_kind_from_string(c.at("family").get<std::string>());
    spec.n = c.at("n").get<int>();
    if (c.contains("i")) spec.i = c["i"].get<int>();
    if (c.contains("r")) spec.r = c["r"].get<int>();
    if (c.contains("complemented")) spec.complemented = c["complemented"].get<bool>();
    if (c.contains("a")) spec.a = parse_hex_u32(c["a"].get<std::string>());
    if (c.contains("b")) spec.b = parse_hex_u32(c["b"].get<std::string>());
    if (c.contains("modulus")) spec.modulus = parse_hex_u32(c["modulus"].get<std::string>());
    if (c.contains("modulus_t")) spec.modulus_t = parse_hex_u32(c["modulus_t"].get<std::string>());
    return spec;
}

ordered_json function_header(const VectorialFunction& F) {
    ordered_json j;
    j["format"] = "mlc-function";
    j["version"] = kToolVersion;
    j["n"] = F.n;
    j["m"] = F.m;
    j["pairing"] = pairing_name(F.pairing);
    if (F.pairing == Pairing::FieldTrace) {
        j["modulus"] = hex_u32(F.ctx->modulus());
        if (F.out_ctx != F.ctx) j["out_modulus"] = hex_u32(F.out_ctx->modulus());
        j["split_bit0"] = F.split_bit0;
    }
    return j;
}

}  // namespace

ordered_json function_to_json(const VectorialFunction& F) {
    ordered_json j = function_header(F);
    ordered_json table = ordered_json::array();
    for (u32 v : F.table) table.push_back(hex_u32(v));
    j["table"] = std::move(table);
    return j;
}

ordered_json family_to_json(const BuiltFamily& built) {
    ordered_json j = function_header(built.F);
    j["construction"] = construction_record(built.spec);
    return j;
}

LoadedFunction function_from_json(const ordered_json& j) {
    if (j.value("format", "") != "mlc-function")
        throw ConstraintError("not an mlc-function file");
    LoadedFunction out;
    if (j.contains("construction")) {
        out.family = build_family(spec_from_record(j["construction"]));
        out.F = out.family->F;
        if (out.F.n != j.at("n").get<int>() || out.F.m != j.at("m").get<int>())
            throw ConstraintError("construction record disagrees with the declared n, m");
        return out;
    }
    VectorialFunction F;
    F.n = j.at("n").get<int>();
    F.m = j.at("m").get<int>();
    F.pairing = pairing_from_name(j.at("pairing").get<std::string>());
    if (F.pairing == Pairing::FieldTrace) {
        F.split_bit0 = j.value("split_bit0", false);
        F.ctx = std::make_shared<const FieldContext>(
            F.n, parse_hex_u32(j.at("modulus").get<std::string>()));
        const int out_n = F.split_bit0 ? F.m - 1 : F.m;
        if (j.contains("out_modulus"))
            F.out_ctx = std::make_shared<const FieldContext>(
                out_n, parse_hex_u32(j["out_modulus"].get<std::string>()));
        else if (out_n == F.n)
            F.out_ctx = F.ctx;
        else
            F.out_ctx = std::make_shared<const FieldContext>(out_n);
    }
    const auto& table = j.at("table");
    if (table.size() != (u64(1) << F.n))
        throw ConstraintError("table length is not 2^n");
    F.table.reserve(table.size());
    for (const auto& v : table) {
        const u32 value = parse_hex_u32(v.get<std::string>());
        if (value >> F.m) throw ConstraintError("table entry exceeds m bits");
        F.table.push_back(value);
    }
    out.F = std::move(F);
    return out;
}

ordered_json run_record(const std::string& command, const ordered_json& params,
                        const std::vector<std::string>& outputs) {
    ordered_json j;
    j["format"] = "mlc-run";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["params"] = params;
    j["outputs"] = outputs;
    return j;
}

std::string weights_to_csv(const WeightDistribution& dist) {
    std::ostringstream out;
    out << "weight,frequency\n";
    for (const auto& [w, c] : dist.freq)
        if (c) out << w << "," << c << "\n";
    return out.str();
}

std::string generator_to_hex_lines(const LinearCode& code) {
    std::ostringstream out;
    for (const auto& row : code.rows) out << bits_to_hex(row, code.length) << "\n";
    return out.str();
}

ordered_json minimality_to_json(const MinimalityReport& rep, const LinearCode& code) {
    ordered_json j;
    j["minimal"] = rep.minimal;
    j["route"] = to_string(rep.route);
    j["detail"] = rep.detail;
    if (rep.witness) {
        u32 mu1, nu1, mu2, nu2;
        int lam1, lam2;
        code.decode_index(rep.witness->c1, mu1, nu1, lam1);
        code.decode_index(rep.witness->c2, mu2, nu2, lam2);
        ordered_json w;
        w["c1"] = {{"mu", hex_u32(mu1)}, {"nu", hex_u32(nu1)}};
        w["c2"] = {{"mu", hex_u32(mu2)}, {"nu", hex_u32(nu2)}};
        if (code.augmented) {
            w["c1"]["lambda"] = lam1;
            w["c2"]["lambda"] = lam2;
        }
        w["wt_c1"] = code.codeword_weight(rep.witness->c1);
        w["wt_c2"] = code.codeword_weight(rep.witness->c2);
        w["wt_sum"] = code.codeword_weight(rep.witness->c1 ^ rep.witness->c2);
        j["witness"] = std::move(w);
    }
    return j;
}

ordered_json ab_to_json(const ABReport& ab) {
    ordered_json j;
    j["w_min"] = ab.w_min;
    j["w_max"] = ab.w_max;
    j["ratio"] = std::to_string(ab.w_min) + "/" + std::to_string(ab.w_max);
    j["satisfied"] = ab.satisfies_ab;
    j["spectral"] = ab.spectral_violation;
    return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mlc
