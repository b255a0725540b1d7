#pragma once

// Serialization: JSON function files and verification reports, CSV weight
// distributions, hex generator matrices, and reproducible run records.
//
// Bit arrays serialize as hex strings, little-endian by index: truth-table index
// 8j + i maps to bit i of byte j, bytes emitted in ascending j as two lowercase hex
// digits each.  Scalars over F_2^n serialize as "0x..." hex.

#include <string>

#include <json.hpp>

#include "mlc/codes.hpp"

namespace mlc {

inline constexpr const char* kToolVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

std::string bits_to_hex(const std::vector<u64>& bits, u64 nbits);
std::vector<u64> hex_to_bits(const std::string& hex, u64 nbits);

std::string hex_u32(u32 v);        // "0x2b"
u32 parse_hex_u32(const std::string& s);

// Function files: {format, version, n, m, pairing, modulus?, split_bit0?,
// construction? | table}.  A construction record reconstructs the table
// deterministically; otherwise the raw value table is stored.
ordered_json function_to_json(const VectorialFunction& F);
ordered_json family_to_json(const BuiltFamily& built);
struct LoadedFunction {
    VectorialFunction F;
    std::optional<BuiltFamily> family;  // present when rebuilt from a construction record
};
LoadedFunction function_from_json(const ordered_json& j);

ordered_json run_record(const std::string& command, const ordered_json& params,
                        const std::vector<std::string>& outputs);

std::string weights_to_csv(const WeightDistribution& dist);
std::string generator_to_hex_lines(const LinearCode& code);

ordered_json minimality_to_json(const MinimalityReport& rep, const LinearCode& code);
ordered_json ab_to_json(const ABReport& ab);

// Serialize -> parse -> serialize is byte-identical; files are written atomically.
std::string dump_json(const ordered_json& j);
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace mlc
