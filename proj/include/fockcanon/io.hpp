#pragma once

// Serialization of decomposition matrices and the on-disk matrix cache.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "fockcanon/canonical.hpp"

namespace fockcanon {

/// Changes whenever an engine convention changes, so stale cache files are never read.
extern const std::string_view kConventionFingerprint;

/// {"e", "charge", "n", "rows", "cols", "entries": [{"row", "col", "poly": {"min_deg", "coeffs"}}]}.
/// Coefficients outside the 64-bit range are written as decimal strings.
/// with_audit adds the intermediate degrees and the convention fingerprint.
std::string to_json(const DecompositionMatrix& d, bool with_audit = false);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
DecompositionMatrix matrix_from_json(std::string_view text);

/// One line per nonzero entry: "row","col",poly. Labels are quoted since they contain commas.
void write_csv(std::ostream& os, const DecompositionMatrix& d);

/// Aligned grid, rows down and columns across; zero entries print as ".".
void write_table(std::ostream& os, const DecompositionMatrix& d);

/// Writes to a temporary sibling and renames it into place, creating parent directories.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Filename-safe digest of (e, charge, n, fingerprint), e.g. "canon-3f2a...".
std::string cache_key(const FockContext& ctx, int n);

/// The --cache-dir value if given, else $FOCKCANON_CACHE, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// Missing, unreadable or mismatching files count as misses.
std::optional<DecompositionMatrix> load_cached(const std::filesystem::path& dir, const FockContext& ctx, int n);
void store_cached(const std::filesystem::path& dir, const DecompositionMatrix& d);

}  // namespace fockcanon
