#include "sketcher/notebook.hpp"

#include <nlohmann/json.hpp>

#include "sketcher/error.hpp"
#include "sketcher/util.hpp"

namespace sketcher {

using nlohmann::json;

std::optional<int> Notebook::performance_tier() const {
  auto it = metadata.find("performance_tier");
  if (it == metadata.end()) return std::nullopt;
  try {
    size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) return std::nullopt;
    if (v < 0 || v > 5) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

namespace {

CellKind cell_kind_from(const std::string& s) {
  if (s == "code") return CellKind::code;
  if (s == "markdown") return CellKind::markdown;
  return CellKind::raw;
}

const char* cell_kind_name(CellKind k) {
  switch (k) {
    case CellKind::code: return "code";
    case CellKind::markdown: return "markdown";
    case CellKind::raw: return "raw";
  }
  return "raw";
}

// nbformat allows source as a single string or an array of line strings.
std::string join_source(const json& src) {
  if (src.is_string()) return src.get<std::string>();
  if (src.is_array()) {
    std::string out;
    for (const auto& part : src) {
      if (part.is_string()) out += part.get<std::string>();
    }
    return out;
  }
  return {};
}

}  // namespace

Notebook parse_notebook(const std::string& content, const std::string& id) {
  if (!is_valid_utf8(content)) {
    throw Error(ErrorCode::MalformedJson, "notebook content is not valid UTF-8");
  }
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::MalformedJson, "top level is not an object");
  }
  if (!doc.contains("nbformat") || !doc["nbformat"].is_number_integer() ||
      doc["nbformat"].get<int>() != 4) {
    throw Error(ErrorCode::UnsupportedNbformat,
                "expected nbformat major version 4");
  }

  Notebook nb;
  nb.id = id.empty() ? "notebook" : id;
  if (doc.contains("metadata") && doc["metadata"].is_object()) {
    for (const auto& [key, value] : doc["metadata"].items()) {
      if (value.is_string()) {
        nb.metadata[key] = value.get<std::string>();
      } else if (value.is_number_integer()) {
        nb.metadata[key] = std::to_string(value.get<long long>());
      } else if (value.is_number_float()) {
        nb.metadata[key] = std::to_string(value.get<double>());
      } else if (value.is_boolean()) {
        nb.metadata[key] = value.get<bool>() ? "true" : "false";
      }
      // nested metadata is outside this module's contract
    }
  }

  if (doc.contains("cells")) {
    if (!doc["cells"].is_array()) {
      throw Error(ErrorCode::MalformedJson, "cells is not an array");
    }
    int index = 0;
    for (const auto& c : doc["cells"]) {
      if (!c.is_object()) {
        throw Error(ErrorCode::MalformedJson, "cell is not an object");
      }
      Cell cell;
      cell.index = index++;
      cell.kind = c.contains("cell_type") && c["cell_type"].is_string()
                      ? cell_kind_from(c["cell_type"].get<std::string>())
                      : CellKind::raw;
      if (c.contains("source")) cell.source = join_source(c["source"]);
      nb.cells.push_back(std::move(cell));
    }
  }
  return nb;
}

Notebook load_notebook(const std::filesystem::path& path) {
  return parse_notebook(read_text_file(path), path.stem().string());
}

json notebook_to_json(const Notebook& nb) {
  json meta = json::object();
  for (const auto& [k, v] : nb.metadata) {
    // performance_tier is numeric in nbformat metadata
    if (k == "performance_tier" && nb.performance_tier()) {
      meta[k] = *nb.performance_tier();
    } else {
      meta[k] = v;
    }
  }
  json cells = json::array();
  for (const auto& c : nb.cells) {
    cells.push_back({{"cell_type", cell_kind_name(c.kind)},
                     {"metadata", json::object()},
                     {"source", c.source}});
  }
  return json{{"nbformat", 4},
              {"nbformat_minor", 5},
              {"metadata", meta},
              {"cells", cells}};
}

std::vector<Cell> extract_notebook_cells(const Notebook& nb) {
  std::vector<Cell> out;
  for (const auto& c : nb.cells) {
    if (c.kind == CellKind::code) out.push_back(c);
  }
  return out;
}

namespace {

bool counts_as_loc(const std::string& line) {
  std::string t = trim(line);
  return !t.empty() && t[0] != '#';
}

}  // namespace

ComplexityStats complexity(const Notebook& nb) {
  ComplexityStats stats;
  for (const auto& c : nb.cells) {
    if (c.kind != CellKind::code) continue;
    stats.cc += 1;
    for (const auto& line : split_lines(c.source)) {
      if (counts_as_loc(line)) stats.loc += 1;
    }
  }
  stats.pt = nb.performance_tier();
  return stats;
}

std::string notebook_code(const Notebook& nb) {
  std::string out;
  for (const auto& c : nb.cells) {
    if (c.kind != CellKind::code) continue;
    if (!out.empty() && out.back() != '\n') out += '\n';
    out += c.source;
  }
  return out;
}

}  // namespace sketcher
