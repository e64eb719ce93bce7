#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace sketcher {

enum class CellKind { code, markdown, raw };

struct Cell {
  int index = 0;  // position in the notebook, contiguous from 0
  CellKind kind = CellKind::code;
  std::string source;
};

/// A parsed nbformat-v4 notebook. Only the fields this toolkit reads are
/// retained; everything else in the file is ignored.
struct Notebook {
  std::string id;  // file stem
  std::vector<Cell> cells;
  std::map<std::string, std::string> metadata;  // scalar metadata entries, stringified

  std::optional<int> performance_tier() const;
};

struct ComplexityStats {
  int loc = 0;  // nonblank, non-comment-only lines across code cells
  int cc = 0;   // number of code cells
  std::optional<int> pt;  // performance tier 0..5, absent when not recorded
};

/// Parse raw `.ipynb` content. Throws Error{MalformedJson} on bad bytes/JSON
/// and Error{UnsupportedNbformat} when the major version is not 4.
Notebook parse_notebook(const std::string& content, const std::string& id);

/// Convenience wrapper; the notebook id is the file stem.
Notebook load_notebook(const std::filesystem::path& path);

/// Minimal nbformat-4 serialization of the fields parse_notebook reads.
nlohmann::json notebook_to_json(const Notebook& nb);

/// Code cells only, original indices retained.
std::vector<Cell> extract_notebook_cells(const Notebook& nb);

ComplexityStats complexity(const Notebook& nb);

/// Code cell sources joined with newline separation; the "original code"
/// side of every similarity comparison.
std::string notebook_code(const Notebook& nb);

}  // namespace sketcher
