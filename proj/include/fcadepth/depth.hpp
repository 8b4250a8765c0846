#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fcadepth/context.hpp"
#include "fcadepth/measure.hpp"
#include "fcadepth/rational.hpp"

namespace fcadepth {

/// Depth value per object plus where it came from.
struct DepthMap {
  std::vector<Rational> values;
  std::string context_id;
  std::string measure_id;
  std::string depth_name;

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t g) const { return values.at(g); }
};

/// A named depth evaluator D(g, K, P). Evaluators must be pure.
struct DepthFunctionHandle {
  std::string name;
  std::function<Rational(std::size_t, const FormalContext&, const DiscreteMeasure&)> evaluator;

  Rational operator()(std::size_t g, const FormalContext& ctx, const DiscreteMeasure& m) const {
    return evaluator(g, ctx, m);
  }
};

/// Evaluates the handle on every object.
DepthMap evaluate_depth(const DepthFunctionHandle& depth, const FormalContext& ctx, const DiscreteMeasure& measure);

/// Wraps a fixed value vector (ignores context and measure); for adversarial
/// or externally supplied depth maps.
DepthFunctionHandle constant_handle(std::string name, std::vector<Rational> values);

// --- generalised Tukey depth ----------------------------------------------

/// measure(extent_of({m})) for every attribute m.
std::vector<Rational> attribute_masses(const FormalContext& ctx, const DiscreteMeasure& measure);

/// 1 − max over attributes m that g lacks of measure(extent_of({m})); 1 when
/// g has every attribute.
Rational tukey_depth(std::size_t g, const FormalContext& ctx, const DiscreteMeasure& measure);

/// All objects at once (shares the attribute masses).
DepthMap tukey_depths(const FormalContext& ctx, const DiscreteMeasure& measure);

/// Tukey depth under the empirical measure of `sample`. Evaluated both via
/// the measure and via the counting closed form; the two must agree.
Rational empirical_tukey(std::size_t g, const FormalContext& ctx, const Sample& sample);

enum class OracleMode { attribute_subsets, extents };

inline constexpr std::size_t kOracleCap = 20;

/// Independent enumeration routes:
///  attribute_subsets: 1 − max over non-empty B ⊆ M∖intent(g) of measure(extent_of(B));
///  extents:           1 − max over extents A ⊆ G∖{g} of measure(A).
/// Throws SizeLimitError when the enumerated universe exceeds `cap`.
Rational tukey_oracle(std::size_t g, const FormalContext& ctx, const DiscreteMeasure& measure, OracleMode mode,
                      std::size_t cap = kOracleCap);

// --- derived views --------------------------------------------------------

/// (α, Cont_α = {g | depth(g) ≥ α}) for each α in the image, decreasing α.
std::vector<std::pair<Rational, ObjectSet>> contour_sets(const FormalContext& ctx, const DepthMap& depth);

/// Tie groups in descending depth; members in index order.
std::vector<std::vector<std::size_t>> rank_groups(const DepthMap& depth);

/// Looks up the depth function by name and ranks. Throws std::invalid_argument
/// for unknown names.
std::vector<std::vector<std::size_t>> rank(const FormalContext& ctx, const DiscreteMeasure& measure,
                                           const std::string& depth_fn_name);

// --- strongly free depth on hierarchical contexts -------------------------

/// Level structure recovered from a hierarchical nominal context: attribute
/// extents are laminar and the maximal ones partition G.
struct Hierarchy {
  /// Level-1 class (index into `top_classes`) of every object.
  std::vector<std::size_t> top_class_of;
  std::vector<ObjectSet> top_classes;
  std::size_t levels = 0;
};

/// Throws ValidationError when the context is not hierarchical with ≥ 2 levels.
Hierarchy detect_hierarchy(const FormalContext& ctx);

/// 1 at g* = argmax measure({g}) (lowest index on ties), 1/2 on the rest of
/// g*'s level-1 class, 0 elsewhere.
DepthMap hierarchical_free_depth(const FormalContext& ctx, const DiscreteMeasure& measure);

// --- registry -------------------------------------------------------------

/// "tukey" and "hier-free".
DepthFunctionHandle depth_function(const std::string& name);
std::vector<std::string> depth_function_names();

// --- serialization --------------------------------------------------------

struct DepthTableOptions {
  bool with_float = false;
};

/// Columns: object, depth (p/q), [depth_float], rank, tie_group.
std::string depth_to_tsv(const FormalContext& ctx, const DepthMap& depth, const DepthTableOptions& options = {});
nlohmann::json depth_to_json(const FormalContext& ctx, const DepthMap& depth, const DepthTableOptions& options = {});

}  // namespace fcadepth
