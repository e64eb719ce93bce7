#include "sketcher/util.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sketcher/error.hpp"

namespace sketcher {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::UnsupportedNbformat: return "UnsupportedNbformat";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::SandboxEscape: return "SandboxEscape";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::BackendRefusal: return "BackendRefusal";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::EmptyReference: return "EmptyReference";
    case ErrorCode::BothEmpty: return "BothEmpty";
    case ErrorCode::EmbedderUnavailable: return "EmbedderUnavailable";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::TooFewPairs: return "TooFewPairs";
    case ErrorCode::DecodeFailure: return "DecodeFailure";
    case ErrorCode::UnrecognizedLabelFormat: return "UnrecognizedLabelFormat";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view record_id) {
  std::uint64_t h = fnv1a(record_id);
  // splitmix64 finalizer over the combined state
  std::uint64_t z = h ^ (run_seed + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool is_valid_utf8(std::string_view data) {
  size_t i = 0;
  const size_t n = data.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(data[i]);
    size_t extra;
    if (c < 0x80) {
      i += 1;
      continue;
    } else if ((c & 0xe0) == 0xc0) {
      extra = 1;
      if (c < 0xc2) return false;  // overlong
    } else if ((c & 0xf0) == 0xe0) {
      extra = 2;
    } else if ((c & 0xf8) == 0xf0) {
      extra = 3;
      if (c > 0xf4) return false;  // beyond U+10FFFF
    } else {
      return false;
    }
    if (i + extra >= n) return false;
    for (size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(data[i + k]) & 0xc0) != 0x80) return false;
    }
    // Reject surrogates and overlong 3/4-byte forms.
    if (extra == 2) {
      unsigned char c1 = static_cast<unsigned char>(data[i + 1]);
      if (c == 0xe0 && c1 < 0xa0) return false;
      if (c == 0xed && c1 > 0x9f) return false;
    }
    if (extra == 3) {
      unsigned char c1 = static_cast<unsigned char>(data[i + 1]);
      if (c == 0xf0 && c1 < 0x90) return false;
      if (c == 0xf4 && c1 > 0x8f) return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::string line(text.substr(start, i - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
      start = i + 1;
    }
  }
  // A trailing newline does not introduce an extra empty line.
  if (!text.empty() && text.back() == '\n') lines.pop_back();
  return lines;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool natural_less(std::string_view a, std::string_view b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) &&
        std::isdigit(static_cast<unsigned char>(b[j]))) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string_view da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      std::string_view ta = da.substr(da.find_first_not_of('0') == std::string_view::npos
                                          ? da.size() - 1
                                          : da.find_first_not_of('0'));
      std::string_view tb = db.substr(db.find_first_not_of('0') == std::string_view::npos
                                          ? db.size() - 1
                                          : db.find_first_not_of('0'));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::FileNotFound, "cannot open for write: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  write_text_file(tmp, content);
  std::filesystem::rename(tmp, path);
}

}  // namespace sketcher
