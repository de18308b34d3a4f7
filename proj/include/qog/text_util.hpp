#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qog {

// Strip leading/trailing ASCII whitespace.
std::string trim(std::string_view s);

// Collapse runs of whitespace to a single space and trim the ends.
std::string collapse_whitespace(std::string_view s);

// ASCII lowercase.
std::string to_lower(std::string_view s);

// Dedup key used across the toolkit: case-folded + whitespace-collapsed.
std::string fold_key(std::string_view s);

bool contains(std::string_view haystack, std::string_view needle);

// Split on an exact separator string. "a, b" split on ", " -> {"a","b"}.
// Adjacent separators yield empty pieces; callers decide what to drop.
std::vector<std::string> split_on(std::string_view s, std::string_view sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// FNV-1a, used for cache keys and seed derivation. Stable across platforms.
std::uint64_t fnv1a64(std::string_view s, std::uint64_t seed = 0xcbf29ce484222325ULL);

// Derive a purpose-specific seed from a master seed and a label, so one
// --seed flag can fan out to independent streams.
std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
// Write to a sibling temp file, then rename over the target.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace qog
