#pragma once

// Interchange formats for CoeffTable.
//
// CSV: header "n,h", then one "n,h(n)" row per n = 1..X, '\n' line endings.
// Binary cache: magic "HLS1", X as 64-bit little-endian, then h(1..X) as
// 32-bit little-endian values.

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "hls/hcoeff.hpp"

namespace hls {

void write_csv(const CoeffTable& table, std::ostream& out);
/// Throws FormatError on a bad header, a gap in n, or a malformed row.
CoeffTable read_csv(std::istream& in);

/// Throws FormatError if some h(n) does not fit in 32 bits, std::ios_base::failure on I/O errors.
void write_cache(const CoeffTable& table, std::ostream& out);
void write_cache(const CoeffTable& table, const std::filesystem::path& path);

/// Throws FormatError on bad magic, truncation, or trailing bytes.
CoeffTable read_cache(std::istream& in);
CoeffTable read_cache(const std::filesystem::path& path);

/// Loads the cache at `path` if it covers X, otherwise sieves and rewrites it.
/// Returns the table truncated to X. `cache_written` reports whether the file
/// was (re)written.
CoeffTable load_or_sieve(std::uint64_t x, unsigned workers,
                         const std::optional<std::filesystem::path>& path,
                         bool* cache_written = nullptr);

} // namespace hls
