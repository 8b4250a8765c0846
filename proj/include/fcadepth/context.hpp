#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fcadepth/index_set.hpp"

namespace fcadepth {

/// A finite formal context (G, M, I). Immutable once built; the incidence is
/// stored both row-wise (object -> attributes) and column-wise
/// (attribute -> objects).
class FormalContext {
 public:
  FormalContext() = default;

  /// Throws ValidationError on duplicate labels and DimensionError when a row
  /// does not match the attribute count.
  FormalContext(std::vector<std::string> object_labels, std::vector<std::string> attribute_labels,
                std::vector<AttributeSet> incidence_rows);

  /// Convenience constructor from a boolean grid, rows indexed by object.
  static FormalContext from_grid(std::vector<std::string> object_labels, std::vector<std::string> attribute_labels,
                                 const std::vector<std::vector<bool>>& grid);

  /// Rows given as cross strings ("X.X"); labels default to g1.. / m1...
  static FormalContext from_cross_strings(const std::vector<std::string>& rows,
                                          std::vector<std::string> object_labels = {},
                                          std::vector<std::string> attribute_labels = {});

  std::size_t object_count() const { return object_labels_.size(); }
  std::size_t attribute_count() const { return attribute_labels_.size(); }

  const std::vector<std::string>& object_labels() const { return object_labels_; }
  const std::vector<std::string>& attribute_labels() const { return attribute_labels_; }

  const AttributeSet& row(std::size_t object) const;
  const ObjectSet& column(std::size_t attribute) const;
  const std::vector<AttributeSet>& rows() const { return rows_; }
  const std::vector<ObjectSet>& columns() const { return cols_; }

  bool has(std::size_t object, std::size_t attribute) const { return row(object).contains(attribute); }

  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

  ObjectSet objects(std::initializer_list<std::size_t> members) const { return ObjectSet(object_count(), members); }

  /// Index of a label; throws std::out_of_range when absent.
  std::size_t object_index(const std::string& label) const;
  std::size_t attribute_index(const std::string& label) const;

  /// Apposition: same objects, attribute lists concatenated.
  FormalContext appose(const FormalContext& right) const;

  /// Copy with attribute columns reordered; `order[k]` is the old index placed at k.
  FormalContext with_attribute_order(const std::vector<std::size_t>& order) const;

  friend bool operator==(const FormalContext&, const FormalContext&) = default;

 private:
  std::vector<std::string> object_labels_;
  std::vector<std::string> attribute_labels_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> cols_;
};

/// Attributes shared by every object of A; intent(∅) = M.
AttributeSet intent(const FormalContext& ctx, const ObjectSet& objects);

/// Objects having every attribute of B; extent_of(∅) = G.
ObjectSet extent_of(const FormalContext& ctx, const AttributeSet& attributes);

/// gamma(A) = extent_of(intent(A)).
ObjectSet closure(const FormalContext& ctx, const ObjectSet& objects);

inline AttributeSet object_intent(const FormalContext& ctx, std::size_t g) { return ctx.row(g); }

bool is_extent(const FormalContext& ctx, const ObjectSet& objects);

/// Deduplicated closure system, canonically ordered (see canonical_less).
struct ExtentFamily {
  std::vector<ObjectSet> extents;

  std::size_t size() const { return extents.size(); }
  bool contains(const ObjectSet& s) const;
  friend bool operator==(const ExtentFamily&, const ExtentFamily&) = default;
};

inline constexpr std::size_t kDefaultExtentCap = 24;

/// All extents via Close-by-One. Throws SizeLimitError if |G| > cap.
ExtentFamily all_extents(const FormalContext& ctx, std::size_t object_cap = kDefaultExtentCap);

/// Sorts and deduplicates into canonical order.
ExtentFamily make_extent_family(std::vector<ObjectSet> sets);

struct ObjectClassification {
  /// Objects grouped by equal intents; groups ordered by smallest member,
  /// members increasing.
  std::vector<std::vector<std::size_t>> duplicate_groups;
  /// Objects lying in every extent (= extent_of(M)).
  ObjectSet g_all;
  /// Objects whose only extent is G (closure of the singleton is G).
  ObjectSet g_non;
};

ObjectClassification classify_objects(const FormalContext& ctx);

/// Labels of the members, for reports.
std::vector<std::string> object_names(const FormalContext& ctx, const ObjectSet& s);

}  // namespace fcadepth
