#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace dic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;    // audit False / tag_invalid, or an accepted forgery
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;  // I/O, transport or store failure

inline constexpr const char* kStoreEnv = "DIC_STORE_DIR";
inline constexpr const char* kDefaultStore = "dic-store";

/// --store flag, else $DIC_STORE_DIR, else ./dic-store.
std::filesystem::path resolve_store(const std::string& flag);

/// Runs one subcommand; the report goes to `out` as key=value lines.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dic::cli
