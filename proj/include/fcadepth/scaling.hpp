#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fcadepth/context.hpp"

namespace fcadepth {

// ---------------------------------------------------------------------------
// Raw data

enum class ColumnKind { categorical, numeric, hierarchical };

/// One column of a many-valued table. Only the vector matching `kind` is
/// populated.
struct DataColumn {
  std::string name;
  ColumnKind kind = ColumnKind::categorical;
  std::vector<std::string> categories;              // categorical
  std::vector<double> numbers;                      // numeric
  std::vector<std::vector<std::string>> paths;      // hierarchical, root first
};

struct DataTable {
  std::vector<std::string> row_labels;
  std::vector<DataColumn> columns;

  std::size_t row_count() const { return row_labels.size(); }
  /// Throws ValidationError when a column is ragged or a path is empty.
  void validate() const;
};

/// Header row = column names, first column = row labels. Cells are kept as
/// text; `scale_table` types them according to the scaling spec.
struct RawTable {
  std::vector<std::string> header;  // without the label column
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;  // [row][column]
};

RawTable read_csv(std::istream& in);
RawTable read_csv_file(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Scaling directives

struct NominalScale {
  /// Declared categories; empty means "sorted distinct observed values".
  std::vector<std::string> categories;
};

enum class OrdinalDirection { at_most, at_least };

struct OrdinalScale {
  std::vector<double> thresholds;  // empty = sorted distinct observed values
  OrdinalDirection direction = OrdinalDirection::at_most;
};

struct InterordinalScale {
  std::vector<double> thresholds;  // empty = sorted distinct observed values
};

struct HierarchicalScale {
  std::string separator = "/";
};

using ScaleDirective = std::variant<NominalScale, OrdinalScale, InterordinalScale, HierarchicalScale>;

struct ScalingSpec {
  std::map<std::string, ScaleDirective> columns;

  /// {"columns": {"<name>": {"kind": "nominal", "categories": [...]},
  ///              "<name>": {"kind": "ordinal", "thresholds": [...], "direction": "le"|"ge"},
  ///              "<name>": {"kind": "interordinal", "thresholds": [...]},
  ///              "<name>": {"kind": "hierarchical", "separator": "/"}}}
  static ScalingSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Types raw CSV cells according to the spec (ingestion/type errors carry
/// row and column coordinates, 1-based, counting the header and label column).
DataTable type_table(const RawTable& raw, const ScalingSpec& spec);

/// Apposition of per-column scales, in table column order. Labels:
/// "<col>=<cat>", "<col>≤<t>", "<col>≥<t>", hierarchical nodes "<col>=<node>".
FormalContext scale_table(const DataTable& table, const ScalingSpec& spec);

/// Shortest round-tripping decimal rendering used in threshold labels.
std::string format_threshold(double t);

// ---------------------------------------------------------------------------
// Partial orders

/// Strict partial order on n items; dominates[i][j] means i ≺ j ("i dominates j").
class PartialOrder {
 public:
  PartialOrder() = default;
  explicit PartialOrder(std::size_t n) : n_(n), rel_(n, std::vector<bool>(n, false)) {}

  /// Adjacency lists: successors[i] lists the items dominated by i.
  static PartialOrder from_adjacency(std::size_t n, const std::vector<std::vector<std::size_t>>& successors);

  std::size_t size() const { return n_; }
  bool dominates(std::size_t i, std::size_t j) const { return rel_.at(i).at(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rel_.at(i).at(j) = v; }

  /// Throws ValidationError naming the violated axiom (irreflexivity,
  /// antisymmetry, transitivity).
  void validate() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<bool>> rel_;
};

struct PosetScalingOptions {
  /// Drop the "¬(i≺j)" block (sensitivity studies).
  bool include_non_dominance = true;
  /// Item names in labels; default "1".."n".
  std::vector<std::string> item_labels;
};

/// Objects are the posets; 2·n·(n−1) attributes "i≺j" then "¬(i≺j)".
FormalContext scale_posets(std::size_t n_items, const std::vector<PartialOrder>& posets,
                           const std::vector<std::string>& poset_labels = {},
                           const PosetScalingOptions& options = {});

/// Every strict partial order on n labelled items (brute force; n ≤ 4).
std::vector<PartialOrder> enumerate_posets(std::size_t n);

// ---------------------------------------------------------------------------
// Point clouds

using Vector = std::vector<double>;

/// Closed halfspaces ⟨u,·⟩ ≤ t and ⟨u,·⟩ ≥ t for each direction u and each
/// observed projection t. Empty `directions` means the coordinate axes.
FormalContext scale_halfspaces(const std::vector<Vector>& points, std::vector<Vector> directions = {},
                               const std::vector<std::string>& point_labels = {});

// ---------------------------------------------------------------------------
// Hierarchies

/// One attribute per tree node (each distinct path prefix); an object has the
/// node iff the node is a prefix of its path. Throws ValidationError when a
/// node name occurs under two parents.
FormalContext scale_hierarchical(const std::vector<std::vector<std::string>>& paths,
                                 const std::vector<std::string>& object_labels = {},
                                 const std::string& column_name = "");

std::vector<std::string> split_path(const std::string& text, const std::string& separator);

// ---------------------------------------------------------------------------
// JSON inputs for the CLI

struct PosetInput {
  std::size_t n_items = 0;
  std::vector<std::string> item_labels;
  std::vector<std::string> poset_labels;
  std::vector<PartialOrder> posets;
};

/// {"n_items": n, "item_labels": [...]?, "posets": [{"label": "p1", "adjacency": [[1], [], ...]}]}
/// Indices are 0-based.
PosetInput posets_from_json(const nlohmann::json& j);

struct PointInput {
  std::vector<std::string> labels;
  std::vector<Vector> points;
  std::vector<Vector> directions;
};

/// {"labels": [...]?, "points": [[x, y], ...], "directions": [[1, 0], ...]?}
PointInput points_from_json(const nlohmann::json& j);

}  // namespace fcadepth
