#include "fcadepth/depth.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fcadepth/errors.hpp"

namespace fcadepth {

DepthMap evaluate_depth(const DepthFunctionHandle& depth, const FormalContext& ctx, const DiscreteMeasure& measure) {
  if (measure.universe() != ctx.object_count())
    throw DimensionError("measure over " + std::to_string(measure.universe()) + " objects for a context with " +
                         std::to_string(ctx.object_count()));
  DepthMap out;
  out.values.reserve(ctx.object_count());
  for (std::size_t g = 0; g < ctx.object_count(); ++g) out.values.push_back(depth(g, ctx, measure));
  out.measure_id = measure.description();
  out.depth_name = depth.name;
  return out;
}

DepthFunctionHandle constant_handle(std::string name, std::vector<Rational> values) {
  return {std::move(name), [values = std::move(values)](std::size_t g, const FormalContext&, const DiscreteMeasure&) {
            return values.at(g);
          }};
}

std::vector<Rational> attribute_masses(const FormalContext& ctx, const DiscreteMeasure& measure) {
  std::vector<Rational> masses;
  masses.reserve(ctx.attribute_count());
  for (const auto& col : ctx.columns()) masses.push_back(measure_of(measure, col));
  return masses;
}

namespace {

Rational tukey_from_masses(std::size_t g, const FormalContext& ctx, const std::vector<Rational>& masses) {
  Rational sup = 0;  // sup over the empty set is 0
  const AttributeSet missing = ctx.row(g).complement();
  missing.for_each([&](std::size_t m) {
    if (masses[m] > sup) sup = masses[m];
  });
  return 1 - sup;
}

}  // namespace

Rational tukey_depth(std::size_t g, const FormalContext& ctx, const DiscreteMeasure& measure) {
  if (measure.universe() != ctx.object_count()) throw DimensionError("measure does not match the context");
  return tukey_from_masses(g, ctx, attribute_masses(ctx, measure));
}

DepthMap tukey_depths(const FormalContext& ctx, const DiscreteMeasure& measure) {
  if (measure.universe() != ctx.object_count()) throw DimensionError("measure does not match the context");
  const auto masses = attribute_masses(ctx, measure);
  DepthMap out;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) out.values.push_back(tukey_from_masses(g, ctx, masses));
  out.measure_id = measure.description();
  out.depth_name = "tukey";
  return out;
}

Rational empirical_tukey(std::size_t g, const FormalContext& ctx, const Sample& sample) {
  if (sample.objects.empty()) throw std::invalid_argument("empirical Tukey depth needs a non-empty sample");
  const auto via_measure = tukey_depth(g, ctx, DiscreteMeasure::empirical(sample, ctx.object_count()));

  std::size_t best = 0;
  const AttributeSet missing = ctx.row(g).complement();
  missing.for_each([&](std::size_t m) {
    std::size_t count = 0;
    for (auto s : sample.objects)
      if (ctx.has(s, m)) ++count;
    best = std::max(best, count);
  });
  const Rational closed_form =
      1 - Rational(static_cast<long long>(best), static_cast<long long>(sample.objects.size()));
  if (closed_form != via_measure)
    throw std::logic_error("empirical Tukey: counting form " + to_string(closed_form) + " disagrees with measure form " +
                           to_string(via_measure));
  return closed_form;
}

Rational tukey_oracle(std::size_t g, const FormalContext& ctx, const DiscreteMeasure& measure, OracleMode mode,
                      std::size_t cap) {
  if (measure.universe() != ctx.object_count()) throw DimensionError("measure does not match the context");
  Rational sup = 0;
  if (mode == OracleMode::attribute_subsets) {
    const auto missing = ctx.row(g).complement().indices();
    if (missing.size() > cap)
      throw SizeLimitError("attribute-subset oracle capped at " + std::to_string(cap) + " attributes, need " +
                           std::to_string(missing.size()));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << missing.size()); ++mask) {
      AttributeSet b = ctx.no_attributes();
      for (std::size_t k = 0; k < missing.size(); ++k)
        if (mask >> k & 1U) b.insert(missing[k]);
      sup = std::max(sup, measure_of(measure, extent_of(ctx, b)));
    }
  } else {
    std::vector<std::size_t> others;
    for (std::size_t h = 0; h < ctx.object_count(); ++h)
      if (h != g) others.push_back(h);
    if (ctx.object_count() > cap)
      throw SizeLimitError("extent oracle capped at " + std::to_string(cap) + " objects, context has " +
                           std::to_string(ctx.object_count()));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
      ObjectSet a = ctx.no_objects();
      for (std::size_t k = 0; k < others.size(); ++k)
        if (mask >> k & 1U) a.insert(others[k]);
      if (closure(ctx, a) == a) sup = std::max(sup, measure_of(measure, a));
    }
  }
  return 1 - sup;
}

std::vector<std::pair<Rational, ObjectSet>> contour_sets(const FormalContext& ctx, const DepthMap& depth) {
  if (depth.size() != ctx.object_count()) throw DimensionError("depth map does not match the context");
  std::vector<Rational> levels = depth.values;
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::pair<Rational, ObjectSet>> out;
  for (const auto& alpha : levels) {
    ObjectSet s = ctx.no_objects();
    for (std::size_t g = 0; g < depth.size(); ++g)
      if (depth[g] >= alpha) s.insert(g);
    out.emplace_back(alpha, std::move(s));
  }
  return out;
}

std::vector<std::vector<std::size_t>> rank_groups(const DepthMap& depth) {
  std::map<Rational, std::vector<std::size_t>, std::greater<>> groups;
  for (std::size_t g = 0; g < depth.size(); ++g) groups[depth[g]].push_back(g);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [value, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<std::size_t>> rank(const FormalContext& ctx, const DiscreteMeasure& measure,
                                           const std::string& depth_fn_name) {
  return rank_groups(evaluate_depth(depth_function(depth_fn_name), ctx, measure));
}

Hierarchy detect_hierarchy(const FormalContext& ctx) {
  const std::size_t n = ctx.object_count();
  std::vector<ObjectSet> classes;
  for (const auto& col : ctx.columns())
    if (!col.empty() && std::find(classes.begin(), classes.end(), col) == classes.end()) classes.push_back(col);
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      const auto& x = classes[a];
      const auto& y = classes[b];
      if (x.intersects(y) && !x.is_subset_of(y) && !y.is_subset_of(x))
        throw ValidationError("context is not hierarchical: attribute extents overlap without nesting");
    }
  Hierarchy h;
  h.top_class_of.assign(n, 0);
  for (const auto& c : classes) {
    bool maximal = true;
    for (const auto& d : classes)
      if (c != d && c.is_subset_of(d)) maximal = false;
    if (maximal) h.top_classes.push_back(c);
  }
  ObjectSet covered = ctx.no_objects();
  for (std::size_t k = 0; k < h.top_classes.size(); ++k) {
    covered |= h.top_classes[k];
    h.top_classes[k].for_each([&](std::size_t g) { h.top_class_of[g] = k; });
  }
  if (!covered.is_full())
    throw ValidationError("context is not hierarchical: some object has no level-1 category");
  // Depth of the laminar forest = longest chain of strictly nested classes.
  std::vector<std::size_t> depth_of(classes.size(), 1);
  std::vector<std::size_t> order(classes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return classes[a].count() > classes[b].count(); });
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (classes[order[i]] != classes[order[j]] && classes[order[i]].is_subset_of(classes[order[j]]))
        depth_of[order[i]] = std::max(depth_of[order[i]], depth_of[order[j]] + 1);
  for (auto d : depth_of) h.levels = std::max(h.levels, d);
  if (h.levels < 2) throw ValidationError("hierarchical depth needs at least two levels");
  return h;
}

DepthMap hierarchical_free_depth(const FormalContext& ctx, const DiscreteMeasure& measure) {
  if (measure.universe() != ctx.object_count()) throw DimensionError("measure does not match the context");
  const Hierarchy h = detect_hierarchy(ctx);
  std::size_t star = 0;
  for (std::size_t g = 1; g < ctx.object_count(); ++g)
    if (measure.weight(g) > measure.weight(star)) star = g;
  DepthMap out;
  out.values.assign(ctx.object_count(), Rational(0));
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    if (h.top_class_of[g] == h.top_class_of[star]) out.values[g] = Rational(1, 2);
  out.values[star] = 1;
  out.measure_id = measure.description();
  out.depth_name = "hier-free";
  return out;
}

DepthFunctionHandle depth_function(const std::string& name) {
  if (name == "tukey") return {"tukey", [](std::size_t g, const FormalContext& c, const DiscreteMeasure& m) {
                                 return tukey_depth(g, c, m);
                               }};
  if (name == "hier-free")
    return {"hier-free", [](std::size_t g, const FormalContext& c, const DiscreteMeasure& m) {
              return hierarchical_free_depth(c, m)[g];
            }};
  throw std::invalid_argument("unknown depth function '" + name + "' (known: tukey, hier-free)");
}

std::vector<std::string> depth_function_names() { return {"tukey", "hier-free"}; }

namespace {

struct RankInfo {
  std::vector<std::size_t> rank;
  std::vector<std::size_t> group;
};

RankInfo rank_info(const DepthMap& depth) {
  RankInfo info{std::vector<std::size_t>(depth.size()), std::vector<std::size_t>(depth.size())};
  std::size_t above = 0;
  const auto groups = rank_groups(depth);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    for (auto g : groups[k]) {
      info.rank[g] = above + 1;
      info.group[g] = k + 1;
    }
    above += groups[k].size();
  }
  return info;
}

std::string float_text(const Rational& r) {
  std::ostringstream s;
  s.precision(6);
  s << std::fixed << to_double(r);
  return s.str();
}

}  // namespace

std::string depth_to_tsv(const FormalContext& ctx, const DepthMap& depth, const DepthTableOptions& options) {
  if (depth.size() != ctx.object_count()) throw DimensionError("depth map does not match the context");
  const auto info = rank_info(depth);
  std::ostringstream out;
  out << "object\tdepth";
  if (options.with_float) out << "\tdepth_float";
  out << "\trank\ttie_group\n";
  for (std::size_t g = 0; g < depth.size(); ++g) {
    out << ctx.object_labels()[g] << '\t' << to_string(depth[g]);
    if (options.with_float) out << '\t' << float_text(depth[g]);
    out << '\t' << info.rank[g] << '\t' << info.group[g] << '\n';
  }
  return out.str();
}

nlohmann::json depth_to_json(const FormalContext& ctx, const DepthMap& depth, const DepthTableOptions& options) {
  if (depth.size() != ctx.object_count()) throw DimensionError("depth map does not match the context");
  const auto info = rank_info(depth);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t g = 0; g < depth.size(); ++g) {
    nlohmann::json r = {{"object", ctx.object_labels()[g]},
                        {"depth", to_string(depth[g])},
                        {"rank", info.rank[g]},
                        {"tie_group", info.group[g]}};
    if (options.with_float) r["depth_float"] = to_double(depth[g]);
    rows.push_back(std::move(r));
  }
  return {{"context", depth.context_id}, {"measure", depth.measure_id}, {"depth_function", depth.depth_name},
          {"objects", rows}};
}

}  // namespace fcadepth
