#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sketcher {

// FNV-1a, used for stable content hashes and per-record seed streams.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = kFnvOffset) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

/// Mixes a run-level seed with a record identifier so parallel workers never
/// share RNG state.
std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view record_id);

bool is_valid_utf8(std::string_view data);

// String helpers.
std::string trim(std::string_view s);
std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split(std::string_view s, char sep);
bool starts_with(std::string_view s, std::string_view prefix);

/// Numeric-aware ordering: "cell_2" sorts before "cell_10".
bool natural_less(std::string_view a, std::string_view b);

// Whole-file IO. read_text_file throws Error{FileNotFound} when missing.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);
/// Write via temp file + rename in the target directory.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace sketcher
