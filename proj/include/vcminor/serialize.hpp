#pragma once

#include <string>

#include "vcminor/directed.hpp"
#include "vcminor/undirected.hpp"

namespace vcminor {

/// Versioned binary container. Layout: magic, format version, oracle kind,
/// header (n, r), division, boundary rows (delta-encoded), per-cluster
/// pattern/restriction tables and payloads, per-(vertex,cluster) records,
/// then a checksum of everything before it. Loading rejects bad magic,
/// version mismatches, wrong kinds, and checksum failures.
inline constexpr std::uint32_t kOracleFormatVersion = 1;

void save_oracle(const UndirectedOracle& o, const std::string& path);
void save_oracle(const DirectedOracle& o, const std::string& path);

UndirectedOracle load_undirected_oracle(const std::string& path);
DirectedOracle load_directed_oracle(const std::string& path);

/// Peeks at the kind byte: false = undirected, true = directed.
bool oracle_file_is_directed(const std::string& path);

}  // namespace vcminor
