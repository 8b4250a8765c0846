#include "fcadepth/context.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace fcadepth {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw ValidationError(std::string("duplicate ") + what + " label '" + l + "'");
}

std::vector<std::string> default_labels(char prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, prefix) + std::to_string(i + 1));
  return out;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> object_labels, std::vector<std::string> attribute_labels,
                             std::vector<AttributeSet> incidence_rows)
    : object_labels_(std::move(object_labels)),
      attribute_labels_(std::move(attribute_labels)),
      rows_(std::move(incidence_rows)) {
  require_unique(object_labels_, "object");
  require_unique(attribute_labels_, "attribute");
  if (rows_.size() != object_labels_.size())
    throw DimensionError("incidence has " + std::to_string(rows_.size()) + " rows for " +
                         std::to_string(object_labels_.size()) + " objects");
  cols_.assign(attribute_labels_.size(), ObjectSet(object_labels_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g) {
    if (rows_[g].universe() != attribute_labels_.size())
      throw DimensionError("row " + std::to_string(g) + " has universe " + std::to_string(rows_[g].universe()) +
                           ", expected " + std::to_string(attribute_labels_.size()));
    rows_[g].for_each([&](std::size_t m) { cols_[m].insert(g); });
  }
}

FormalContext FormalContext::from_grid(std::vector<std::string> object_labels, std::vector<std::string> attribute_labels,
                                       const std::vector<std::vector<bool>>& grid) {
  std::vector<AttributeSet> rows;
  rows.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (grid[g].size() != attribute_labels.size())
      throw DimensionError("grid row " + std::to_string(g) + " has wrong length");
    AttributeSet r(attribute_labels.size());
    for (std::size_t m = 0; m < grid[g].size(); ++m)
      if (grid[g][m]) r.insert(m);
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(object_labels), std::move(attribute_labels), std::move(rows));
}

FormalContext FormalContext::from_cross_strings(const std::vector<std::string>& rows,
                                                std::vector<std::string> object_labels,
                                                std::vector<std::string> attribute_labels) {
  const std::size_t width = rows.empty() ? attribute_labels.size() : rows.front().size();
  if (object_labels.empty()) object_labels = default_labels('g', rows.size());
  if (attribute_labels.empty()) attribute_labels = default_labels('m', width);
  std::vector<std::vector<bool>> grid;
  for (const auto& r : rows) {
    std::vector<bool> line;
    for (char c : r) line.push_back(c == 'X' || c == 'x');
    grid.push_back(std::move(line));
  }
  return from_grid(std::move(object_labels), std::move(attribute_labels), grid);
}

const AttributeSet& FormalContext::row(std::size_t object) const {
  if (object >= rows_.size()) throw DimensionError("object index " + std::to_string(object) + " out of range");
  return rows_[object];
}

const ObjectSet& FormalContext::column(std::size_t attribute) const {
  if (attribute >= cols_.size()) throw DimensionError("attribute index " + std::to_string(attribute) + " out of range");
  return cols_[attribute];
}

std::size_t FormalContext::object_index(const std::string& label) const {
  auto it = std::find(object_labels_.begin(), object_labels_.end(), label);
  if (it == object_labels_.end()) throw std::out_of_range("unknown object '" + label + "'");
  return static_cast<std::size_t>(it - object_labels_.begin());
}

std::size_t FormalContext::attribute_index(const std::string& label) const {
  auto it = std::find(attribute_labels_.begin(), attribute_labels_.end(), label);
  if (it == attribute_labels_.end()) throw std::out_of_range("unknown attribute '" + label + "'");
  return static_cast<std::size_t>(it - attribute_labels_.begin());
}

FormalContext FormalContext::appose(const FormalContext& right) const {
  if (right.object_count() != object_count()) throw DimensionError("apposition needs equal object sets");
  auto labels = attribute_labels_;
  labels.insert(labels.end(), right.attribute_labels_.begin(), right.attribute_labels_.end());
  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < object_count(); ++g) {
    AttributeSet r(labels.size());
    rows_[g].for_each([&](std::size_t m) { r.insert(m); });
    right.rows_[g].for_each([&](std::size_t m) { r.insert(attribute_count() + m); });
    rows.push_back(std::move(r));
  }
  return FormalContext(object_labels_, std::move(labels), std::move(rows));
}

FormalContext FormalContext::with_attribute_order(const std::vector<std::size_t>& order) const {
  if (order.size() != attribute_count()) throw DimensionError("attribute permutation has wrong length");
  std::vector<std::string> labels;
  for (auto old : order) labels.push_back(attribute_labels_.at(old));
  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < object_count(); ++g) {
    AttributeSet r(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      if (rows_[g].contains(order[k])) r.insert(k);
    rows.push_back(std::move(r));
  }
  return FormalContext(object_labels_, std::move(labels), std::move(rows));
}

AttributeSet intent(const FormalContext& ctx, const ObjectSet& objects) {
  if (objects.universe() != ctx.object_count())
    throw DimensionError("object set universe " + std::to_string(objects.universe()) + " does not match |G| = " +
                         std::to_string(ctx.object_count()));
  AttributeSet result = ctx.all_attributes();
  objects.for_each([&](std::size_t g) { result &= ctx.row(g); });
  return result;
}

ObjectSet extent_of(const FormalContext& ctx, const AttributeSet& attributes) {
  if (attributes.universe() != ctx.attribute_count())
    throw DimensionError("attribute set universe " + std::to_string(attributes.universe()) +
                         " does not match |M| = " + std::to_string(ctx.attribute_count()));
  ObjectSet result = ctx.all_objects();
  attributes.for_each([&](std::size_t m) { result &= ctx.column(m); });
  return result;
}

ObjectSet closure(const FormalContext& ctx, const ObjectSet& objects) {
  return extent_of(ctx, intent(ctx, objects));
}

bool is_extent(const FormalContext& ctx, const ObjectSet& objects) { return closure(ctx, objects) == objects; }

bool ExtentFamily::contains(const ObjectSet& s) const {
  return std::binary_search(extents.begin(), extents.end(), s,
                            [](const ObjectSet& a, const ObjectSet& b) { return canonical_less(a, b); });
}

ExtentFamily make_extent_family(std::vector<ObjectSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const ObjectSet& a, const ObjectSet& b) { return canonical_less(a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return ExtentFamily{std::move(sets)};
}

namespace {

// Close-by-One: each concept is generated exactly once from its canonical
// parent; the canonicity test compares intents on attributes below j.
void close_by_one(const FormalContext& ctx, const ObjectSet& extent, const AttributeSet& intent_set,
                  std::size_t start, std::vector<ObjectSet>& out) {
  out.push_back(extent);
  for (std::size_t j = start; j < ctx.attribute_count(); ++j) {
    if (intent_set.contains(j)) continue;
    ObjectSet next_extent = extent & ctx.column(j);
    AttributeSet next_intent = intent(ctx, next_extent);
    if (next_intent.equal_below(intent_set, j)) close_by_one(ctx, next_extent, next_intent, j + 1, out);
  }
}

}  // namespace

ExtentFamily all_extents(const FormalContext& ctx, std::size_t object_cap) {
  if (ctx.object_count() > object_cap)
    throw SizeLimitError("extent enumeration capped at |G| <= " + std::to_string(object_cap) + ", context has " +
                         std::to_string(ctx.object_count()) + " objects");
  std::vector<ObjectSet> out;
  const ObjectSet top = ctx.all_objects();
  close_by_one(ctx, top, intent(ctx, top), 0, out);
  return make_extent_family(std::move(out));
}

ObjectClassification classify_objects(const FormalContext& ctx) {
  ObjectClassification c;
  const std::size_t n = ctx.object_count();
  std::vector<bool> grouped(n, false);
  for (std::size_t g = 0; g < n; ++g) {
    if (grouped[g]) continue;
    std::vector<std::size_t> group{g};
    grouped[g] = true;
    for (std::size_t h = g + 1; h < n; ++h)
      if (!grouped[h] && ctx.row(h) == ctx.row(g)) {
        group.push_back(h);
        grouped[h] = true;
      }
    c.duplicate_groups.push_back(std::move(group));
  }
  c.g_all = extent_of(ctx, ctx.all_attributes());
  c.g_non = ctx.no_objects();
  const ObjectSet everything = ctx.all_objects();
  for (std::size_t g = 0; g < n; ++g) {
    ObjectSet single(n);
    single.insert(g);
    if (closure(ctx, single) == everything) c.g_non.insert(g);
  }
  return c;
}

std::vector<std::string> object_names(const FormalContext& ctx, const ObjectSet& s) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t g) { out.push_back(ctx.object_labels()[g]); });
  return out;
}

}  // namespace fcadepth
