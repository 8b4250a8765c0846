#include "fcadepth/scaling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "fcadepth/errors.hpp"

namespace fcadepth {

namespace {

constexpr const char* kLe = "\xE2\x89\xA4";  // ≤
constexpr const char* kGe = "\xE2\x89\xA5";  // ≥
constexpr const char* kPrec = "\xE2\x89\xBA";  // ≺
constexpr const char* kNot = "\xC2\xAC";  // ¬

// Splits one CSV record, honouring double quotes. Returns false at EOF.
bool read_record(std::istream& in, std::vector<std::string>& fields, long& lineno) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++lineno;
        field += c;
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      ++lineno;
      fields.push_back(std::move(field));
      return true;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (in_quotes) throw IngestionError("csv: unterminated quoted field", lineno);
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_number(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) return std::nullopt;
  double v = 0;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::vector<double> checked_thresholds(const std::vector<double>& declared, const std::vector<double>& observed,
                                       const std::string& column) {
  if (declared.empty()) {
    std::vector<double> t = observed;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
  }
  for (std::size_t i = 1; i < declared.size(); ++i)
    if (!(declared[i - 1] < declared[i]))
      throw ValidationError("thresholds of column '" + column + "' must be strictly increasing");
  return declared;
}

const char* directive_name(const ScaleDirective& d) {
  switch (d.index()) {
    case 0: return "nominal";
    case 1: return "ordinal";
    case 2: return "interordinal";
    default: return "hierarchical";
  }
}

ColumnKind expected_kind(const ScaleDirective& d) {
  if (std::holds_alternative<NominalScale>(d)) return ColumnKind::categorical;
  if (std::holds_alternative<HierarchicalScale>(d)) return ColumnKind::hierarchical;
  return ColumnKind::numeric;
}

// Per-column sub-context rows (objects x column attributes).
struct SubContext {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> grid;  // [object][attribute]
};

SubContext nominal_sub(const DataColumn& col, const NominalScale& scale) {
  std::vector<std::string> cats = scale.categories;
  if (cats.empty()) {
    std::set<std::string> seen(col.categories.begin(), col.categories.end());
    cats.assign(seen.begin(), seen.end());
  }
  SubContext sub;
  for (const auto& c : cats) sub.labels.push_back(col.name + "=" + c);
  for (std::size_t g = 0; g < col.categories.size(); ++g) {
    auto it = std::find(cats.begin(), cats.end(), col.categories[g]);
    if (it == cats.end())
      throw IngestionError("value '" + col.categories[g] + "' is not a declared category of column '" + col.name + "'",
                           static_cast<long>(g + 2));
    std::vector<bool> row(cats.size(), false);
    row[static_cast<std::size_t>(it - cats.begin())] = true;
    sub.grid.push_back(std::move(row));
  }
  return sub;
}

SubContext threshold_sub(const DataColumn& col, const std::vector<double>& thresholds, bool with_le, bool with_ge) {
  SubContext sub;
  if (with_le)
    for (double t : thresholds) sub.labels.push_back(col.name + kLe + format_threshold(t));
  if (with_ge)
    for (double t : thresholds) sub.labels.push_back(col.name + kGe + format_threshold(t));
  for (double v : col.numbers) {
    std::vector<bool> row;
    if (with_le)
      for (double t : thresholds) row.push_back(v <= t);
    if (with_ge)
      for (double t : thresholds) row.push_back(v >= t);
    sub.grid.push_back(std::move(row));
  }
  return sub;
}

SubContext to_sub(const FormalContext& ctx) {
  SubContext sub;
  sub.labels = ctx.attribute_labels();
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    std::vector<bool> row(ctx.attribute_count(), false);
    ctx.row(g).for_each([&](std::size_t m) { row[m] = true; });
    sub.grid.push_back(std::move(row));
  }
  return sub;
}

}  // namespace

// ---------------------------------------------------------------------------

void DataTable::validate() const {
  const std::size_t n = row_labels.size();
  for (const auto& c : columns) {
    std::size_t len = 0;
    switch (c.kind) {
      case ColumnKind::categorical: len = c.categories.size(); break;
      case ColumnKind::numeric: len = c.numbers.size(); break;
      case ColumnKind::hierarchical:
        len = c.paths.size();
        for (std::size_t g = 0; g < c.paths.size(); ++g)
          if (c.paths[g].empty())
            throw ValidationError("empty hierarchical path in column '" + c.name + "', row " + std::to_string(g + 1));
        break;
    }
    if (len != n)
      throw ValidationError("column '" + c.name + "' has " + std::to_string(len) + " values for " + std::to_string(n) +
                            " rows");
  }
}

RawTable read_csv(std::istream& in) {
  RawTable t;
  std::vector<std::string> fields;
  long lineno = 0;
  if (!read_record(in, fields, lineno)) throw IngestionError("csv: empty input");
  if (fields.size() < 2) throw IngestionError("csv: header needs a label column and at least one data column", 1);
  for (std::size_t k = 1; k < fields.size(); ++k) t.header.push_back(trim(fields[k]));
  while (read_record(in, fields, lineno)) {
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;
    if (fields.size() != t.header.size() + 1)
      throw IngestionError("csv: expected " + std::to_string(t.header.size() + 1) + " fields, got " +
                               std::to_string(fields.size()),
                           lineno);
    t.row_labels.push_back(trim(fields[0]));
    std::vector<std::string> row;
    for (std::size_t k = 1; k < fields.size(); ++k) row.push_back(trim(fields[k]));
    t.cells.push_back(std::move(row));
  }
  return t;
}

RawTable read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open '" + path.string() + "'");
  return read_csv(in);
}

ScalingSpec ScalingSpec::from_json(const nlohmann::json& j) {
  ScalingSpec spec;
  try {
    for (const auto& [name, d] : j.at("columns").items()) {
      const auto kind = d.at("kind").get<std::string>();
      if (kind == "nominal") {
        NominalScale s;
        if (d.contains("categories")) s.categories = d.at("categories").get<std::vector<std::string>>();
        spec.columns[name] = s;
      } else if (kind == "ordinal") {
        OrdinalScale s;
        if (d.contains("thresholds")) s.thresholds = d.at("thresholds").get<std::vector<double>>();
        checked_thresholds(s.thresholds, {}, name);
        const auto dir = d.value("direction", std::string("le"));
        if (dir == "le")
          s.direction = OrdinalDirection::at_most;
        else if (dir == "ge")
          s.direction = OrdinalDirection::at_least;
        else
          throw ValidationError("ordinal direction must be 'le' or 'ge', got '" + dir + "'");
        spec.columns[name] = s;
      } else if (kind == "interordinal") {
        InterordinalScale s;
        if (d.contains("thresholds")) s.thresholds = d.at("thresholds").get<std::vector<double>>();
        checked_thresholds(s.thresholds, {}, name);
        spec.columns[name] = s;
      } else if (kind == "hierarchical") {
        HierarchicalScale s;
        s.separator = d.value("separator", std::string("/"));
        if (s.separator.empty()) throw ValidationError("hierarchical separator must be non-empty");
        spec.columns[name] = s;
      } else {
        throw ValidationError("unknown scaling kind '" + kind + "' for column '" + name + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("scaling spec: ") + e.what());
  }
  return spec;
}

nlohmann::json ScalingSpec::to_json() const {
  nlohmann::json cols = nlohmann::json::object();
  for (const auto& [name, d] : columns) {
    nlohmann::json c;
    c["kind"] = directive_name(d);
    if (const auto* n = std::get_if<NominalScale>(&d)) {
      if (!n->categories.empty()) c["categories"] = n->categories;
    } else if (const auto* o = std::get_if<OrdinalScale>(&d)) {
      if (!o->thresholds.empty()) c["thresholds"] = o->thresholds;
      c["direction"] = o->direction == OrdinalDirection::at_most ? "le" : "ge";
    } else if (const auto* i = std::get_if<InterordinalScale>(&d)) {
      if (!i->thresholds.empty()) c["thresholds"] = i->thresholds;
    } else if (const auto* h = std::get_if<HierarchicalScale>(&d)) {
      c["separator"] = h->separator;
    }
    cols[name] = c;
  }
  return {{"columns", cols}};
}

DataTable type_table(const RawTable& raw, const ScalingSpec& spec) {
  DataTable t;
  t.row_labels = raw.row_labels;
  for (std::size_t k = 0; k < raw.header.size(); ++k) {
    const auto& name = raw.header[k];
    auto it = spec.columns.find(name);
    if (it == spec.columns.end())
      throw IngestionError("no scaling directive for column '" + name + "'", 1, static_cast<long>(k + 2));
    DataColumn col;
    col.name = name;
    col.kind = expected_kind(it->second);
    for (std::size_t g = 0; g < raw.cells.size(); ++g) {
      const auto& cell = raw.cells[g][k];
      const long row = static_cast<long>(g + 2), column = static_cast<long>(k + 2);
      switch (col.kind) {
        case ColumnKind::categorical: col.categories.push_back(cell); break;
        case ColumnKind::numeric: {
          auto v = parse_number(cell);
          if (!v)
            throw IngestionError("non-numeric value '" + cell + "' in " + directive_name(it->second) + " column '" +
                                     name + "'",
                                 row, column);
          col.numbers.push_back(*v);
          break;
        }
        case ColumnKind::hierarchical: {
          auto path = split_path(cell, std::get<HierarchicalScale>(it->second).separator);
          if (path.empty()) throw IngestionError("empty hierarchical path in column '" + name + "'", row, column);
          col.paths.push_back(std::move(path));
          break;
        }
      }
    }
    t.columns.push_back(std::move(col));
  }
  for (const auto& [name, d] : spec.columns)
    if (std::find(raw.header.begin(), raw.header.end(), name) == raw.header.end())
      throw IngestionError("scaling spec names unknown column '" + name + "'");
  return t;
}

std::string format_threshold(double t) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, t);
  return std::string(buf, ptr);
}

FormalContext scale_table(const DataTable& table, const ScalingSpec& spec) {
  table.validate();
  const std::size_t n = table.row_count();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> grid(n);
  for (const auto& col : table.columns) {
    auto it = spec.columns.find(col.name);
    if (it == spec.columns.end()) throw ValidationError("no scaling directive for column '" + col.name + "'");
    const ScaleDirective& d = it->second;
    if (expected_kind(d) != col.kind)
      throw ValidationError(std::string(directive_name(d)) + " scaling does not match the kind of column '" +
                            col.name + "'");
    SubContext sub;
    if (const auto* nom = std::get_if<NominalScale>(&d)) {
      sub = nominal_sub(col, *nom);
    } else if (const auto* ord = std::get_if<OrdinalScale>(&d)) {
      auto t = checked_thresholds(ord->thresholds, col.numbers, col.name);
      const bool le = ord->direction == OrdinalDirection::at_most;
      sub = threshold_sub(col, t, le, !le);
    } else if (const auto* inter = std::get_if<InterordinalScale>(&d)) {
      sub = threshold_sub(col, checked_thresholds(inter->thresholds, col.numbers, col.name), true, true);
    } else {
      auto ctx = scale_hierarchical(col.paths, table.row_labels, col.name);
      sub = to_sub(ctx);
    }
    labels.insert(labels.end(), sub.labels.begin(), sub.labels.end());
    for (std::size_t g = 0; g < n; ++g) grid[g].insert(grid[g].end(), sub.grid[g].begin(), sub.grid[g].end());
  }
  return FormalContext::from_grid(table.row_labels, std::move(labels), grid);
}

// ---------------------------------------------------------------------------

PartialOrder PartialOrder::from_adjacency(std::size_t n, const std::vector<std::vector<std::size_t>>& successors) {
  if (successors.size() != n)
    throw ValidationError("adjacency has " + std::to_string(successors.size()) + " lists for " + std::to_string(n) +
                          " items");
  PartialOrder p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : successors[i]) {
      if (j >= n) throw ValidationError("adjacency entry " + std::to_string(j) + " out of range");
      p.set(i, j);
    }
  return p;
}

void PartialOrder::validate() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (rel_[i][i]) throw ValidationError("irreflexivity violated: item " + std::to_string(i) + " dominates itself");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (rel_[i][j] && rel_[j][i])
        throw ValidationError("antisymmetry violated: items " + std::to_string(i) + " and " + std::to_string(j) +
                              " dominate each other");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (rel_[i][j])
        for (std::size_t k = 0; k < n_; ++k)
          if (rel_[j][k] && !rel_[i][k])
            throw ValidationError("transitivity violated: " + std::to_string(i) + "≺" + std::to_string(j) + " and " +
                                  std::to_string(j) + "≺" + std::to_string(k) + " but not " + std::to_string(i) +
                                  "≺" + std::to_string(k));
}

FormalContext scale_posets(std::size_t n_items, const std::vector<PartialOrder>& posets,
                           const std::vector<std::string>& poset_labels, const PosetScalingOptions& options) {
  std::vector<std::string> items = options.item_labels;
  if (items.empty())
    for (std::size_t i = 0; i < n_items; ++i) items.push_back(std::to_string(i + 1));
  if (items.size() != n_items) throw ValidationError("item label count does not match n_items");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n_items; ++i)
    for (std::size_t j = 0; j < n_items; ++j)
      if (i != j) pairs.emplace_back(i, j);

  std::vector<std::string> labels;
  for (auto [i, j] : pairs) labels.push_back(items[i] + kPrec + items[j]);
  if (options.include_non_dominance)
    for (auto [i, j] : pairs) labels.push_back(std::string(kNot) + "(" + items[i] + kPrec + items[j] + ")");

  std::vector<std::string> objects = poset_labels;
  if (objects.empty())
    for (std::size_t p = 0; p < posets.size(); ++p) objects.push_back("p" + std::to_string(p + 1));
  if (objects.size() != posets.size()) throw ValidationError("poset label count does not match poset count");

  std::vector<std::vector<bool>> grid;
  for (std::size_t p = 0; p < posets.size(); ++p) {
    const auto& po = posets[p];
    if (po.size() != n_items)
      throw ValidationError("poset '" + objects[p] + "' is over " + std::to_string(po.size()) + " items, expected " +
                            std::to_string(n_items));
    try {
      po.validate();
    } catch (const ValidationError& e) {
      throw ValidationError("poset '" + objects[p] + "': " + e.what());
    }
    std::vector<bool> row;
    for (auto [i, j] : pairs) row.push_back(po.dominates(i, j));
    if (options.include_non_dominance)
      for (auto [i, j] : pairs) row.push_back(!po.dominates(i, j));
    grid.push_back(std::move(row));
  }
  return FormalContext::from_grid(std::move(objects), std::move(labels), grid);
}

std::vector<PartialOrder> enumerate_posets(std::size_t n) {
  if (n > 4) throw SizeLimitError("poset enumeration capped at 4 items");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<PartialOrder> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    PartialOrder p(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) p.set(pairs[k].first, pairs[k].second);
    try {
      p.validate();
      out.push_back(std::move(p));
    } catch (const ValidationError&) {
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FormalContext scale_halfspaces(const std::vector<Vector>& points, std::vector<Vector> directions,
                               const std::vector<std::string>& point_labels) {
  if (points.empty()) throw ValidationError("halfspace scaling needs at least one point");
  const std::size_t d = points.front().size();
  for (std::size_t k = 0; k < points.size(); ++k)
    if (points[k].size() != d)
      throw DimensionError("point " + std::to_string(k) + " has dimension " + std::to_string(points[k].size()) +
                           ", expected " + std::to_string(d));
  if (directions.empty())
    for (std::size_t a = 0; a < d; ++a) {
      Vector e(d, 0.0);
      e[a] = 1.0;
      directions.push_back(std::move(e));
    }
  for (std::size_t k = 0; k < directions.size(); ++k)
    if (directions[k].size() != d)
      throw DimensionError("direction " + std::to_string(k) + " has dimension " +
                           std::to_string(directions[k].size()) + ", expected " + std::to_string(d));

  std::vector<std::string> objects = point_labels;
  if (objects.empty())
    for (std::size_t k = 0; k < points.size(); ++k) objects.push_back("x" + std::to_string(k + 1));

  auto dot = [](const Vector& u, const Vector& x) {
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * x[i];
    return s;
  };

  std::vector<std::string> labels;
  std::vector<std::vector<bool>> grid(points.size());
  for (const auto& u : directions) {
    std::string uname = "(";
    for (std::size_t i = 0; i < u.size(); ++i) uname += (i ? "," : "") + format_threshold(u[i]);
    uname += ")";
    std::vector<double> proj;
    for (const auto& x : points) proj.push_back(dot(u, x));
    std::vector<double> t = proj;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (double v : t) labels.push_back("\xE2\x9F\xA8" + uname + ",\xC2\xB7\xE2\x9F\xA9" + kLe + format_threshold(v));
    for (double v : t) labels.push_back("\xE2\x9F\xA8" + uname + ",\xC2\xB7\xE2\x9F\xA9" + kGe + format_threshold(v));
    for (std::size_t k = 0; k < points.size(); ++k) {
      for (double v : t) grid[k].push_back(proj[k] <= v);
      for (double v : t) grid[k].push_back(proj[k] >= v);
    }
  }
  return FormalContext::from_grid(std::move(objects), std::move(labels), grid);
}

// ---------------------------------------------------------------------------

std::vector<std::string> split_path(const std::string& text, const std::string& separator) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(separator, start);
    auto part = trim(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (!part.empty()) out.push_back(std::move(part));
    if (pos == std::string::npos) break;
    start = pos + separator.size();
  }
  return out;
}

FormalContext scale_hierarchical(const std::vector<std::vector<std::string>>& paths,
                                 const std::vector<std::string>& object_labels, const std::string& column_name) {
  // node name -> parent name ("" for level 1)
  std::map<std::string, std::string> parent;
  std::vector<std::vector<std::string>> levels;
  for (std::size_t g = 0; g < paths.size(); ++g) {
    const auto& p = paths[g];
    if (p.empty()) throw ValidationError("empty hierarchical path for object " + std::to_string(g + 1));
    for (std::size_t l = 0; l < p.size(); ++l) {
      const std::string& up = l ? p[l - 1] : std::string();
      auto [it, fresh] = parent.emplace(p[l], up);
      if (!fresh && it->second != up)
        throw ValidationError("inconsistent hierarchy: node '" + p[l] + "' appears under '" +
                              (it->second.empty() ? std::string("<root>") : it->second) + "' and '" +
                              (up.empty() ? std::string("<root>") : up) + "'");
      if (fresh) {
        if (levels.size() <= l) levels.resize(l + 1);
        levels[l].push_back(p[l]);
      }
    }
  }
  std::vector<std::string> nodes;
  for (const auto& lv : levels) nodes.insert(nodes.end(), lv.begin(), lv.end());

  std::vector<std::string> objects = object_labels;
  if (objects.empty()) {
    // Leaf names when they identify the objects, positional names otherwise.
    std::set<std::string> leaves;
    for (const auto& p : paths) leaves.insert(p.back());
    for (std::size_t g = 0; g < paths.size(); ++g)
      objects.push_back(leaves.size() == paths.size() ? paths[g].back() : "o" + std::to_string(g + 1));
  }
  if (objects.size() != paths.size()) throw ValidationError("object label count does not match path count");

  std::vector<std::string> labels;
  for (const auto& node : nodes) labels.push_back(column_name.empty() ? node : column_name + "=" + node);
  std::vector<std::vector<bool>> grid;
  for (const auto& p : paths) {
    std::vector<bool> row(nodes.size(), false);
    for (const auto& part : p)
      row[static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), part) - nodes.begin())] = true;
    grid.push_back(std::move(row));
  }
  return FormalContext::from_grid(std::move(objects), std::move(labels), grid);
}

// ---------------------------------------------------------------------------

PosetInput posets_from_json(const nlohmann::json& j) {
  PosetInput in;
  try {
    in.n_items = j.at("n_items").get<std::size_t>();
    if (j.contains("item_labels")) in.item_labels = j.at("item_labels").get<std::vector<std::string>>();
    std::size_t k = 0;
    for (const auto& p : j.at("posets")) {
      ++k;
      in.poset_labels.push_back(p.value("label", "p" + std::to_string(k + 1)));
      auto adj = p.at("adjacency").get<std::vector<std::vector<std::size_t>>>();
      in.posets.push_back(PartialOrder::from_adjacency(in.n_items, adj));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("poset json: ") + e.what());
  }
  return in;
}

PointInput points_from_json(const nlohmann::json& j) {
  PointInput in;
  try {
    in.points = j.at("points").get<std::vector<Vector>>();
    if (j.contains("labels")) in.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("directions")) in.directions = j.at("directions").get<std::vector<Vector>>();
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("point json: ") + e.what());
  }
  if (!in.labels.empty() && in.labels.size() != in.points.size())
    throw IngestionError("point json: label count does not match point count");
  return in;
}

}  // namespace fcadepth
