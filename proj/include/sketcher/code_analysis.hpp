#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sketcher/notebook.hpp"

namespace sketcher {

// ---------------------------------------------------------------------------
// Lexing
// ---------------------------------------------------------------------------

enum class TokenKind {
  identifier,
  keyword,
  number,
  string,
  op,
  punct,
  newline,
  indent,
  dedent,
  comment,
};

struct Token {
  TokenKind kind;
  std::string text;  // empty for synthetic indent/dedent
  int line = 1;      // 1-based
  int col = 0;       // 0-based byte offset within the line
};

struct LexDiagnostic {
  int line = 0;
  std::string message;
};

bool is_python_keyword(std::string_view word);

/// Lossless lexer for a Python-style syntax subset. Never throws; recoverable
/// problems (unterminated strings) are reported through `diagnostics` and
/// lexing resumes on the next line.
std::vector<Token> tokenize(std::string_view source,
                            std::vector<LexDiagnostic>& diagnostics);
std::vector<Token> tokenize(std::string_view source);

// ---------------------------------------------------------------------------
// Statement parsing
// ---------------------------------------------------------------------------

enum class StatementKind {
  assign,
  aug_assign,
  expr,
  import_stmt,
  func_def,
  class_def,
  for_header,
  while_header,
  if_header,
  return_stmt,
  other,
};

const char* statement_kind_name(StatementKind kind);

struct Statement {
  int index = 0;  // 0-based, global across concatenated cells
  StatementKind kind = StatementKind::other;
  std::vector<std::string> defs;    // ordered, deduped
  std::vector<std::string> uses;    // ordered, deduped
  std::vector<std::string> idents;  // every identifier on the line (for tagging)
  int depth = 0;
  int cell = -1;  // original notebook cell, -1 outside notebook analysis
  std::vector<Statement> children;
};

struct StatementTree {
  std::vector<Statement> roots;
  std::string source_hash;
};

struct AnalyzerConfig {
  std::set<std::string> builtins;  // names excluded from uses
  // Identifier -> node kind (data/process/model/plot/eval). Contents are
  // configuration, not contract.
  std::map<std::string, std::string> ml_table;

  static const AnalyzerConfig& defaults();
};

/// One Statement per logical line; block headers own their indented children.
/// Robust by construction: arbitrary token streams never raise.
StatementTree parse_statements(const std::vector<Token>& tokens,
                               const AnalyzerConfig& cfg = AnalyzerConfig::defaults());

/// Pre-order (== statement-index order) traversal.
std::vector<const Statement*> all_statements(const StatementTree& tree);

// ---------------------------------------------------------------------------
// Dataflow
// ---------------------------------------------------------------------------

enum class NodeRole { def, use };

struct DataflowNode {
  std::string var;
  int stmt = 0;
  NodeRole role = NodeRole::def;
};

struct DataflowEdge {
  int from = 0;  // def node index
  int to = 0;    // use node index
};

struct DataflowGraph {
  std::vector<DataflowNode> nodes;
  std::vector<DataflowEdge> edges;
};

/// Reaching definitions at statement granularity over the linear statement
/// order. A statement's own definitions are registered before its uses
/// resolve, so a statement that both defines and uses a name links the use to
/// itself (the loop-carried/augmented case). Uses with no definition anywhere
/// before them stay unlinked.
DataflowGraph build_dataflow_graph_ast(const StatementTree& tree);

/// Direct (non-transitive) dependencies: v depends on u iff some statement
/// defines v and uses u. Unlinked uses still name dependencies.
std::map<std::string, std::set<std::string>> extract_variable_dependencies(
    const DataflowGraph& g);

/// Def-use edge normalized for cross-program comparison: variable names
/// replaced by first-occurrence index over the node list, statement indices
/// re-based so the first statement mentioned is 0.
struct NormalizedEdge {
  int def_var = 0;
  int use_var = 0;
  int def_stmt = 0;
  auto operator<=>(const NormalizedEdge&) const = default;
};

/// Sorted multiset of normalized edges; invariant under bijective renaming.
std::vector<NormalizedEdge> anonymize_dataflow(const DataflowGraph& g);

// ---------------------------------------------------------------------------
// Notebook-level analysis
// ---------------------------------------------------------------------------

struct MlComponent {
  std::string name;
  std::string kind;
  int stmt = 0;
};

struct NotebookAnalysis {
  StatementTree tree;  // statements carry their original cell index
  DataflowGraph graph;
  std::map<std::string, std::set<std::string>> dependencies;
  std::vector<MlComponent> ml_components;
  std::vector<int> code_cell_indices;
};

NotebookAnalysis analyze_cells(const std::vector<Cell>& code_cells,
                               const AnalyzerConfig& cfg = AnalyzerConfig::defaults());
NotebookAnalysis analyze_notebook(const Notebook& nb,
                                  const AnalyzerConfig& cfg = AnalyzerConfig::defaults());

/// The Analyser agent's intermediate file:
/// {sections: [...], dataflow_edges: [...], dependencies: {...}, ml_components: [...]}
nlohmann::json analysis_to_json(const NotebookAnalysis& analysis);

// Convenience for the metric path.
StatementTree parse_source(std::string_view source,
                           const AnalyzerConfig& cfg = AnalyzerConfig::defaults());
DataflowGraph dataflow_of_source(std::string_view source,
                                 const AnalyzerConfig& cfg = AnalyzerConfig::defaults());

}  // namespace sketcher
