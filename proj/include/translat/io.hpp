#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "translat/enumeration.hpp"

namespace translat {

inline constexpr const char* kCodeVersion = "translat 0.1.0";

// Lattice file: { "labels": [...], "leq": [[0/1,...],...],
//                 "action_generators": [[...],...] }
nlohmann::json lattice_to_json(const Lattice& l, const LatticeAction& a);
std::pair<Lattice, LatticeAction> lattice_from_json(const nlohmann::json& j);

// Transfer-system file: { "lattice": "<spec or hash>", "edges": [[k,h],...] },
// non-reflexive edges only.
struct TsFile {
  std::string lattice_ref;
  EdgeSet edges;
};

nlohmann::json ts_to_json(const Lattice& l, const TransferSystem& ts);
TsFile ts_file_from_json(const nlohmann::json& j);
bool lattice_ref_matches(const Lattice& l, const std::string& ref);

/// Builds the system from a file; `close` applies the closure, otherwise
/// the relation must already be closed (validated, throws on violations).
TransferSystem load_transfer_system(const Lattice& l, const LatticeAction& a,
                                    const TsFile& file, bool close);

nlohmann::json tslattice_to_json(const Lattice& l, const TsLattice& tsl);
TsLattice tslattice_from_json(const Lattice& l, const nlohmann::json& j);

/// Disk cache, one file per group spec. Loads return nothing when the
/// file is absent, was written by another code version, hashes to a
/// different lattice, or fails the spot-check (one recomputed closure).
std::string cache_file_path(const std::string& dir, const std::string& spec);
void write_cache(const std::string& dir, const Lattice& l, const TsLattice& tsl);
std::optional<TsLattice> load_cache(const std::string& dir, const Lattice& l,
                                    const LatticeAction& a);

nlohmann::json audit_to_json(const TsLattice& tsl, const LspAudit& lsp,
                             const BisatPathAudit& paths);

}  // namespace translat
