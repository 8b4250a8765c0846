#include "fcadepth/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fcadepth/errors.hpp"

namespace fcadepth {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::premise_not_met: return "premise-not-met";
    case Verdict::inconclusive_cap: return "inconclusive-cap";
  }
  return "?";
}

const PropertyReport* PropertyReport::part(const std::string& id) const {
  for (const auto& p : parts)
    if (p.property == id) return &p;
  return nullptr;
}

json to_json(const PropertyReport& report, bool with_timing) {
  json j = {{"property", report.property},
            {"verdict", to_string(report.verdict)},
            {"witness", report.witness},
            {"notes", report.notes}};
  if (with_timing && report.runtime_ms) j["runtime_ms"] = *report.runtime_ms;
  if (!report.parts.empty()) {
    j["parts"] = json::array();
    for (const auto& p : report.parts) j["parts"].push_back(to_json(p, with_timing));
  }
  return j;
}

namespace {

json names(const FormalContext& ctx, const ObjectSet& s) { return object_names(ctx, s); }

json names(const FormalContext& ctx, const std::vector<std::size_t>& objects) {
  json out = json::array();
  for (auto g : objects) out.push_back(ctx.object_labels()[g]);
  return out;
}

std::string label(const FormalContext& ctx, std::size_t g) { return ctx.object_labels()[g]; }

json depth_values(const FormalContext& ctx, const DepthMap& d) {
  json out = json::object();
  for (std::size_t g = 0; g < d.size(); ++g) out[label(ctx, g)] = to_string(d[g]);
  return out;
}

PropertyReport make(std::string id, Verdict v) {
  PropertyReport r;
  r.property = std::move(id);
  r.verdict = v;
  return r;
}

PropertyReport capped(std::string id, std::size_t n, std::size_t cap) {
  auto r = make(std::move(id), Verdict::inconclusive_cap);
  r.notes.push_back(std::to_string(n) + " objects exceed the exhaustive cap of " + std::to_string(cap));
  return r;
}

ObjectSet from_mask(std::size_t n, std::uint64_t mask) {
  ObjectSet s(n);
  for (std::size_t g = 0; g < n; ++g)
    if (mask >> g & 1U) s.insert(g);
  return s;
}

std::uint64_t to_mask(const ObjectSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](std::size_t g) { m |= std::uint64_t{1} << g; });
  return m;
}

/// γ of every subset, indexed by bitmask. Only for small |G|.
std::vector<std::uint64_t> closure_table(const FormalContext& ctx) {
  const std::size_t n = ctx.object_count();
  std::vector<std::uint64_t> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = to_mask(closure(ctx, from_mask(n, mask)));
  return table;
}

Rational min_over(const DepthMap& d, const ObjectSet& a) {
  std::optional<Rational> lo;
  a.for_each([&](std::size_t g) {
    if (!lo || d[g] < *lo) lo = d[g];
  });
  return *lo;
}

Rational max_value(const DepthMap& d) { return *std::max_element(d.values.begin(), d.values.end()); }
Rational min_value(const DepthMap& d) { return *std::min_element(d.values.begin(), d.values.end()); }

void check_map(const ObjectMap& map, std::size_t n, const char* what) {
  if (map.size() != n) throw DimensionError(std::string(what) + " has " + std::to_string(map.size()) +
                                            " entries for " + std::to_string(n) + " objects");
  std::vector<bool> seen(n, false);
  for (auto g : map) {
    if (g >= n || seen[g]) throw ValidationError(std::string(what) + " is not a permutation of the objects");
    seen[g] = true;
  }
}

ObjectSet image(const ObjectSet& s, const ObjectMap& map) {
  ObjectSet out(map.size());
  s.for_each([&](std::size_t g) { out.insert(map[g]); });
  return out;
}

/// First pair (g, h) where "a[g] <= a[h]" and "b[map g] <= b[map h]" disagree.
std::optional<std::pair<std::size_t, std::size_t>> order_mismatch(const std::vector<std::size_t>& objects,
                                                                  const DepthMap& a, const DepthMap& b,
                                                                  const ObjectMap* map = nullptr) {
  auto at = [&](std::size_t g) { return map ? (*map)[g] : g; };
  for (auto g : objects)
    for (auto h : objects)
      if ((a[g] <= a[h]) != (b[at(g)] <= b[at(h)])) return std::make_pair(g, h);
  return std::nullopt;
}

/// Empty when the premises hold; otherwise a description.
std::optional<json> p1_premise_failure(const FormalContext& ctx1, const FormalContext& ctx2,
                                       const ExtentFamily& f1, const ExtentFamily& f2, const DiscreteMeasure& m1,
                                       const DiscreteMeasure& m2, const ObjectMap& map) {
  if (f1.size() != f2.size())
    return json{{"reason", "extent families differ in size"}, {"left", f1.size()}, {"right", f2.size()}};
  for (const auto& e : f1.extents) {
    const ObjectSet img = image(e, map);
    if (!f2.contains(img))
      return json{{"reason", "extent not mapped to an extent"}, {"extent", names(ctx1, e)}, {"image", names(ctx2, img)}};
    if (measure_of(m1, e) != measure_of(m2, img))
      return json{{"reason", "measure not preserved"},
                  {"extent", names(ctx1, e)},
                  {"left", to_string(measure_of(m1, e))},
                  {"right", to_string(measure_of(m2, img))}};
  }
  return std::nullopt;
}

}  // namespace

// --- P1 / P2 ---------------------------------------------------------------

PropertyReport check_p1(const FormalContext& ctx1, const FormalContext& ctx2, const DiscreteMeasure& m1,
                        const DiscreteMeasure& m2, const ObjectMap& bijection, const DepthFunctionHandle& depth) {
  const std::size_t n = ctx1.object_count();
  if (ctx2.object_count() != n)
    throw DimensionError("contexts have " + std::to_string(n) + " and " + std::to_string(ctx2.object_count()) +
                         " objects");
  check_map(bijection, n, "bijection");
  ExtentFamily f1, f2;
  try {
    f1 = all_extents(ctx1);
    f2 = all_extents(ctx2);
  } catch (const SizeLimitError& e) {
    auto r = make("P1", Verdict::inconclusive_cap);
    r.notes.push_back(e.what());
    return r;
  }
  if (auto failure = p1_premise_failure(ctx1, ctx2, f1, f2, m1, m2, bijection)) {
    auto r = make("P1", Verdict::premise_not_met);
    r.witness = *failure;
    return r;
  }
  const DepthMap d1 = evaluate_depth(depth, ctx1, m1);
  const DepthMap d2 = evaluate_depth(depth, ctx2, m2);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (auto bad = order_mismatch(all, d1, d2, &bijection)) {
    auto r = make("P1", Verdict::fails);
    const auto [g, h] = *bad;
    r.witness = {{"pair", {label(ctx1, g), label(ctx1, h)}},
                 {"left", {to_string(d1[g]), to_string(d1[h])}},
                 {"right", {to_string(d2[bijection[g]]), to_string(d2[bijection[h]])}}};
    return r;
  }
  auto r = make("P1", Verdict::holds);
  r.witness = {{"left", depth_values(ctx1, d1)}, {"right", depth_values(ctx2, d2)}};
  return r;
}

std::optional<ObjectMap> find_p1_bijection(const FormalContext& ctx1, const FormalContext& ctx2,
                                           const DiscreteMeasure& m1, const DiscreteMeasure& m2, std::size_t cap) {
  const std::size_t n = ctx1.object_count();
  if (ctx2.object_count() != n) throw DimensionError("contexts differ in object count");
  if (n > cap) throw SizeLimitError("bijection search capped at " + std::to_string(cap) + " objects");
  const auto f1 = all_extents(ctx1);
  const auto f2 = all_extents(ctx2);
  ObjectMap perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (!p1_premise_failure(ctx1, ctx2, f1, f2, m1, m2, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

PropertyReport check_p2(const FormalContext& ctx, const DiscreteMeasure& measure, const DepthFunctionHandle& depth) {
  const DepthMap d = evaluate_depth(depth, ctx, measure);
  const auto cls = classify_objects(ctx);
  std::size_t groups = 0;
  for (const auto& group : cls.duplicate_groups) {
    if (group.size() < 2) continue;
    ++groups;
    for (auto g : group)
      if (d[g] != d[group.front()]) {
        auto r = make("P2", Verdict::fails);
        r.witness = {{"pair", {label(ctx, group.front()), label(ctx, g)}},
                     {"depths", {to_string(d[group.front()]), to_string(d[g])}}};
        return r;
      }
  }
  auto r = make("P2", Verdict::holds);
  r.witness = {{"duplicate_groups", groups}};
  if (groups == 0) r.notes.push_back("no duplicate objects; holds vacuously");
  return r;
}

// --- P3 to P5 ------------------------------------------------------------------

PropertyReport check_order_basics(const FormalContext& ctx, const DiscreteMeasure& measure,
                                  const DepthFunctionHandle& depth) {
  const DepthMap d = evaluate_depth(depth, ctx, measure);
  const auto cls = classify_objects(ctx);
  const Rational lo = min_value(d);
  const Rational hi = max_value(d);

  auto extreme_part = [&](const char* id, const ObjectSet& special, const Rational& target, const char* kind) {
    if (special.empty()) {
      auto r = make(id, Verdict::premise_not_met);
      r.notes.push_back(std::string("no ") + kind + " object");
      return r;
    }
    for (auto g : special.indices())
      if (d[g] != target) {
        auto r = make(id, Verdict::fails);
        r.witness = {{"object", label(ctx, g)}, {"depth", to_string(d[g])}, {"expected", to_string(target)}};
        return r;
      }
    auto r = make(id, Verdict::holds);
    r.witness = {{"objects", names(ctx, special)}, {"depth", to_string(target)}};
    return r;
  };

  PropertyReport basics = make("P3-P5", Verdict::holds);
  basics.parts.push_back(extreme_part("P3", cls.g_non, lo, "g_non"));
  basics.parts.push_back(extreme_part("P4", cls.g_all, hi, "g_all"));

  std::vector<ObjectSet> single;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) single.push_back(closure(ctx, ctx.objects({g})));
  PropertyReport p5 = make("P5", Verdict::holds);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < single.size() && p5.verdict == Verdict::holds; ++a)
    for (std::size_t b = 0; b < single.size(); ++b) {
      if (a == b || !single[b].is_subset_of(single[a])) continue;
      ++pairs;
      if (d[a] > d[b]) {
        p5.verdict = Verdict::fails;
        p5.witness = {{"general", label(ctx, a)},
                      {"specific", label(ctx, b)},
                      {"depths", {to_string(d[a]), to_string(d[b])}}};
        break;
      }
    }
  if (p5.verdict == Verdict::holds) p5.witness = {{"comparable_pairs", pairs}};
  basics.parts.push_back(std::move(p5));

  for (const auto& p : basics.parts)
    if (p.verdict == Verdict::fails) basics.verdict = Verdict::fails;
  return basics;
}

// --- P6 ------------------------------------------------------------------------

std::vector<std::size_t> star_centers(const FormalContext& ctx, const DepthMap& d) {
  const std::size_t n = ctx.object_count();
  std::vector<std::size_t> centers;
  for (std::size_t c = 0; c < n; ++c) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) {
      const ObjectSet between = closure(ctx, ctx.objects({c, g}));
      between.for_each([&](std::size_t h) {
        if (d[h] < d[g]) ok = false;
      });
    }
    if (ok) centers.push_back(c);
  }
  return centers;
}

PropertyReport check_starshaped(const FormalContext& ctx, const DiscreteMeasure& measure,
                                const DepthFunctionHandle& depth, std::size_t cap) {
  if (ctx.object_count() > cap) return capped("P6", ctx.object_count(), cap);
  const DepthMap d = evaluate_depth(depth, ctx, measure);
  const auto centers = star_centers(ctx, d);

  const bool quasiconcave =
      check_quasiconcavity(ctx, d, QuasiconcavityMode::contour).report.verdict == Verdict::holds;
  const Rational hi = max_value(d);
  for (std::size_t g = 0; g < d.size(); ++g)
    if (quasiconcave && d[g] == hi && std::find(centers.begin(), centers.end(), g) == centers.end())
      throw std::logic_error("quasiconcave depth whose maximiser " + label(ctx, g) + " is not a star center");

  auto r = make("P6", centers.empty() ? Verdict::fails : Verdict::holds);
  r.witness = {{"centers", names(ctx, centers)}};
  if (centers.empty()) {
    // Reproducible counterexample for the argmax candidate.
    std::size_t c = 0;
    for (std::size_t g = 1; g < d.size(); ++g)
      if (d[g] > d[c]) c = g;
    for (std::size_t g = 0; g < d.size(); ++g) {
      const ObjectSet between = closure(ctx, ctx.objects({c, g}));
      for (auto h : between.indices())
        if (d[h] < d[g]) {
          r.witness["candidate"] = label(ctx, c);
          r.witness["from"] = label(ctx, g);
          r.witness["between"] = label(ctx, h);
          r.witness["depths"] = {to_string(d[g]), to_string(d[h])};
          return r;
        }
    }
  }
  return r;
}

// --- P7 / P8 -----------------------------------------------------------------------

QuasiconcavityResult check_quasiconcavity(const FormalContext& ctx, const DiscreteMeasure& measure,
                                          const DepthFunctionHandle& depth, QuasiconcavityMode mode,
                                          std::size_t cap) {
  return check_quasiconcavity(ctx, evaluate_depth(depth, ctx, measure), mode, cap);
}

QuasiconcavityResult check_quasiconcavity(const FormalContext& ctx, const DepthMap& d, QuasiconcavityMode mode,
                                          std::size_t cap) {
  if (d.size() != ctx.object_count()) throw DimensionError("depth map does not match the context");
  const std::size_t n = ctx.object_count();
  QuasiconcavityResult result;
  result.report = make("P7", Verdict::holds);

  if (mode != QuasiconcavityMode::bruteforce) {
    PropertyReport contour = make("P7i", Verdict::holds);
    json levels = json::array();
    for (const auto& [alpha, set] : contour_sets(ctx, d)) {
      const ObjectSet closed = closure(ctx, set);
      if (closed != set) {
        const std::size_t g = (closed - set).indices().front();
        contour.verdict = Verdict::fails;
        contour.witness = {{"alpha", to_string(alpha)},
                           {"A", names(ctx, set)},
                           {"object", label(ctx, g)},
                           {"depth", to_string(d[g])},
                           {"min_over_A", to_string(min_over(d, set))}};
        break;
      }
      levels.push_back({{"alpha", to_string(alpha)}, {"contour", names(ctx, set)}});
    }
    if (contour.verdict == Verdict::holds) contour.witness = {{"contours", levels}};
    result.report.parts.push_back(std::move(contour));
  }

  if (mode != QuasiconcavityMode::contour) {
    if (n > cap) {
      result.report.parts.push_back(capped("P7ii", n, cap));
    } else {
      PropertyReport pairwise = make("P7ii", Verdict::holds);
      const auto table = closure_table(ctx);
      for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
        const ObjectSet a = from_mask(n, mask);
        const Rational lo = min_over(d, a);
        const std::uint64_t extra = table[mask] & ~mask;
        for (std::size_t g = 0; g < n; ++g) {
          if (!(extra >> g & 1U)) continue;
          if (d[g] == lo) result.quasiker.push_back({a, g});
          if (d[g] < lo && pairwise.verdict == Verdict::holds) {
            pairwise.verdict = Verdict::fails;
            pairwise.witness = {{"A", names(ctx, a)},
                                {"object", label(ctx, g)},
                                {"depth", to_string(d[g])},
                                {"min_over_A", to_string(lo)}};
          }
        }
      }
      if (pairwise.verdict == Verdict::holds) pairwise.witness = {{"quasiker_size", result.quasiker.size()}};
      result.report.parts.push_back(std::move(pairwise));
    }
  }

  const PropertyReport* first = &result.report.parts.front();
  const PropertyReport* second = result.report.parts.size() > 1 ? &result.report.parts.back() : nullptr;
  if (second && first->verdict != Verdict::inconclusive_cap && second->verdict != Verdict::inconclusive_cap &&
      first->verdict != second->verdict)
    throw std::logic_error("contour and pairwise quasiconcavity disagree");
  result.report.verdict = first->verdict;
  if (second && first->verdict == Verdict::inconclusive_cap) result.report.verdict = second->verdict;
  for (const auto& p : result.report.parts)
    if (p.verdict == Verdict::fails) result.report.witness = p.witness;
  return result;
}

PropertyReport check_strict_quasiconcavity(const FormalContext& ctx, const DiscreteMeasure& measure,
                                           const DepthFunctionHandle& depth, std::size_t cap) {
  return check_strict_quasiconcavity(ctx, evaluate_depth(depth, ctx, measure), cap);
}

PropertyReport check_strict_quasiconcavity(const FormalContext& ctx, const DepthMap& d, std::size_t cap) {
  if (d.size() != ctx.object_count()) throw DimensionError("depth map does not match the context");
  const std::size_t n = ctx.object_count();
  if (n > cap) return capped("P8", n, cap);
  const auto table = closure_table(ctx);
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    const std::uint64_t extra = table[mask] & ~mask;
    if (!extra) continue;
    const ObjectSet a = from_mask(n, mask);
    const Rational lo = min_over(d, a);
    for (std::size_t g = 0; g < n; ++g)
      if ((extra >> g & 1U) && d[g] <= lo) {
        auto r = make("P8", Verdict::fails);
        r.witness = {{"A", names(ctx, a)},
                     {"object", label(ctx, g)},
                     {"depth", to_string(d[g])},
                     {"min_over_A", to_string(lo)}};
        return r;
      }
  }
  auto r = make("P8", Verdict::holds);
  r.notes.push_back("quantified over non-empty A");
  return r;
}

PeelResult peel_extreme_points(const FormalContext& ctx) {
  const std::size_t n = ctx.object_count();
  PeelResult out{std::vector<std::size_t>(n, 0), ctx.no_objects()};
  ObjectSet remaining = ctx.all_objects();
  for (std::size_t round = 1; !remaining.empty(); ++round) {
    ObjectSet extreme = ctx.no_objects();
    remaining.for_each([&](std::size_t g) {
      ObjectSet rest = remaining;
      rest.erase(g);
      if (rest.empty() || !closure(ctx, rest).contains(g)) extreme.insert(g);
    });
    if (extreme.empty()) {
      out.core = remaining;
      return out;
    }
    extreme.for_each([&](std::size_t g) { out.round[g] = round; });
    remaining -= extreme;
  }
  return out;
}

PropertyReport detect_p8_blocked(const FormalContext& ctx, std::size_t cap) {
  const std::size_t n = ctx.object_count();
  auto blocked = [](json witness) {
    auto r = make("C_notP8", Verdict::holds);
    r.witness = std::move(witness);
    r.notes.push_back("no depth function on this context satisfies P8");
    return r;
  };

  for (const auto& group : classify_objects(ctx).duplicate_groups)
    if (group.size() >= 2)
      return blocked({{"certificate", "duplicates"},
                      {"A", {label(ctx, group[0])}},
                      {"A_tilde", {label(ctx, group[1])}}});

  std::vector<std::string> notes;
  if (n <= cap) {
    const auto table = closure_table(ctx);
    for (std::uint64_t a = 1; a < table.size(); ++a) {
      const std::uint64_t room = table[a] & ~a;
      for (std::uint64_t b = room; b; b = (b - 1) & room)
        if ((table[b] & a) == a)
          return blocked({{"certificate", "disjoint-pair"},
                          {"A", names(ctx, from_mask(n, a))},
                          {"A_tilde", names(ctx, from_mask(n, b))}});
    }
  } else {
    notes.push_back("disjoint-pair search skipped above " + std::to_string(cap) + " objects");
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (closure(ctx, ctx.objects({x, y})).contains(z) && closure(ctx, ctx.objects({y, z})).contains(x) &&
            closure(ctx, ctx.objects({x, z})).contains(y)) {
          auto r = blocked({{"certificate", "cyclic-triple"}, {"objects", names(ctx, std::vector<std::size_t>{x, y, z})}});
          r.notes.insert(r.notes.end(), notes.begin(), notes.end());
          return r;
        }

  const PeelResult peel = peel_extreme_points(ctx);
  if (!peel.core.empty()) {
    auto r = blocked({{"certificate", "core"}, {"core", names(ctx, peel.core)}});
    r.notes.push_back("every object of the core lies in the closure of the rest of the core");
    r.notes.insert(r.notes.end(), notes.begin(), notes.end());
    return r;
  }

  DepthMap witness_depth;
  for (auto round : peel.round) witness_depth.values.emplace_back(static_cast<long long>(round));
  if (n <= cap && check_strict_quasiconcavity(ctx, witness_depth, cap).verdict != Verdict::holds)
    throw std::logic_error("peel-round depth is not strictly quasiconcave");
  auto r = make("C_notP8", Verdict::fails);
  r.witness = {{"certificate", nullptr}, {"strictly_quasiconcave_depth", depth_values(ctx, witness_depth)}};
  r.notes.push_back("not blocked: the witness depth satisfies P8");
  r.notes.insert(r.notes.end(), notes.begin(), notes.end());
  return r;
}

PropertyReport check_c_p8_membership(const FormalContext& ctx, const DiscreteMeasure& measure, std::size_t cap) {
  const std::size_t n = ctx.object_count();
  if (n > cap) return capped("C_P8", n, cap);
  for (const auto& group : classify_objects(ctx).duplicate_groups)
    if (group.size() >= 2) {
      auto r = make("C_P8", Verdict::fails);
      r.witness = {{"reason", "duplicate intents"}, {"pair", {label(ctx, group[0]), label(ctx, group[1])}}};
      return r;
    }
  const auto masses = attribute_masses(ctx, measure);
  const auto table = closure_table(ctx);
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    const std::uint64_t extra = table[mask] & ~mask;
    if (!extra) continue;
    const ObjectSet a = from_mask(n, mask);
    const AttributeSet common = intent(ctx, a);
    AttributeSet any = ctx.no_attributes();
    a.for_each([&](std::size_t h) { any |= ctx.row(h); });
    for (std::size_t g = 0; g < n; ++g) {
      if (!(extra >> g & 1U)) continue;
      const AttributeSet& own = ctx.row(g);
      auto fail = [&](const char* reason) {
        auto r = make("C_P8", Verdict::fails);
        r.witness = {{"reason", reason}, {"A", names(ctx, a)}, {"object", label(ctx, g)}};
        return r;
      };
      if (!any.is_subset_of(own)) return fail("intent does not contain every intent of A");
      Rational outside = 0;
      own.complement().for_each([&](std::size_t m) { outside = std::max(outside, masses[m]); });
      bool separated = false;
      (own - common).for_each([&](std::size_t m) { separated = separated || masses[m] > outside; });
      if (!separated) return fail("no separating attribute outweighs the missing ones");
    }
  }
  const DepthMap tukey = tukey_depths(ctx, measure);
  if (check_strict_quasiconcavity(ctx, tukey, cap).verdict != Verdict::holds)
    throw std::logic_error("member context where Tukey depth is not strictly quasiconcave");
  auto r = make("C_P8", Verdict::holds);
  r.notes.push_back("Tukey depth is strictly quasiconcave here (cross-checked)");
  return r;
}

// --- P9 / P10 ------------------------------------------------------------------------

PropertyReport check_p9(const FormalContext& ctx, const Sample& sample, std::pair<std::size_t, std::size_t> dup,
                        const DepthFunctionHandle& depth) {
  const auto [i, j] = dup;
  const std::size_t n = ctx.object_count();
  if (i >= n || j >= n) throw DimensionError("duplicate index outside the context");
  if (ctx.row(i) != ctx.row(j))
    throw ValidationError(label(ctx, i) + " and " + label(ctx, j) + " do not have equal intents");
  const auto pos = std::find(sample.objects.begin(), sample.objects.end(), i);
  if (pos == sample.objects.end()) throw ValidationError(label(ctx, i) + " does not occur in the sample");
  const Sample reduced = sample.without_position(static_cast<std::size_t>(pos - sample.objects.begin()));
  if (reduced.objects.empty()) throw ValidationError("removing the duplicate leaves an empty sample");

  const auto with = DiscreteMeasure::empirical(sample, n);
  const auto without = DiscreteMeasure::empirical(reduced, n);
  const Rational d_with = depth(j, ctx, with);
  const Rational d_without = depth(j, ctx, without);
  json witness = {{"object", label(ctx, j)}, {"with", to_string(d_with)}, {"without", to_string(d_without)}};
  if (d_with > d_without) {
    auto r = make("P9", Verdict::holds);
    r.witness = witness;
    return r;
  }
  if (d_with == d_without && tukey_depth(j, ctx, with) == 1 && tukey_depth(j, ctx, without) == 1) {
    auto r = make("P9", Verdict::premise_not_met);
    r.witness = witness;
    r.notes.push_back("no sampled object lacks an attribute of " + label(ctx, j) +
                      ", so the supremum term is 0 with and without the copy; strict increase impossible");
    return r;
  }
  auto r = make("P9", Verdict::fails);
  r.witness = witness;
  return r;
}

PropertyReport check_p10(const FormalContext& ctx, const Sample& sample, std::size_t outlier,
                         const DepthFunctionHandle& depth) {
  const std::size_t n = ctx.object_count();
  if (outlier >= n) throw DimensionError("outlier index outside the context");
  if (std::find(sample.objects.begin(), sample.objects.end(), outlier) == sample.objects.end())
    throw ValidationError(label(ctx, outlier) + " does not occur in the sample");
  Sample reduced;
  std::vector<std::size_t> others;
  for (auto g : sample.objects)
    if (g != outlier) {
      reduced.objects.push_back(g);
      if (std::find(others.begin(), others.end(), g) == others.end()) others.push_back(g);
    }
  if (reduced.objects.empty()) throw ValidationError("sample consists of the outlier only");
  std::sort(others.begin(), others.end());

  for (auto g : others) {
    const ObjectSet joint = closure(ctx, ctx.objects({outlier, g}));
    if (!joint.is_full()) {
      auto r = make("P10", Verdict::premise_not_met);
      r.witness = {{"shared_extent", names(ctx, joint)}, {"object", label(ctx, g)}};
      r.notes.push_back("the outlier shares a proper extent with a sampled object");
      return r;
    }
  }
  const DepthMap with = evaluate_depth(depth, ctx, DiscreteMeasure::empirical(sample, n));
  const DepthMap without = evaluate_depth(depth, ctx, DiscreteMeasure::empirical(reduced, n));
  if (auto bad = order_mismatch(others, with, without)) {
    const auto [g, h] = *bad;
    auto r = make("P10", Verdict::fails);
    r.witness = {{"pair", {label(ctx, g), label(ctx, h)}},
                 {"with_outlier", {to_string(with[g]), to_string(with[h])}},
                 {"without_outlier", {to_string(without[g]), to_string(without[h])}}};
    r.notes.push_back("order of the pair changes when the outlier is removed");
    return r;
  }
  auto r = make("P10", Verdict::holds);
  r.witness = {{"objects", names(ctx, others)}};
  return r;
}

// --- P11 -------------------------------------------------------------------------------

Rational sup_gap(const FormalContext& ctx, const DiscreteMeasure& measure, const Sample& sample) {
  const DepthMap truth = tukey_depths(ctx, measure);
  const DepthMap est = tukey_depths(ctx, DiscreteMeasure::empirical(sample, ctx.object_count()));
  Rational gap = 0;
  for (std::size_t g = 0; g < truth.size(); ++g) gap = std::max(gap, Rational(abs(est[g] - truth[g])));
  return gap;
}

std::vector<ConsistencyRow> simulate_consistency(const FormalContext& ctx, const DiscreteMeasure& measure,
                                                 const std::vector<std::size_t>& sample_sizes, std::size_t trials,
                                                 std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("consistency simulation needs at least one trial");
  if (sample_sizes.empty()) throw std::invalid_argument("consistency simulation needs sample sizes");
  if (measure.universe() != ctx.object_count()) throw DimensionError("measure does not match the context");

  std::vector<double> cumulative;
  double acc = 0;
  std::size_t last = 0;
  for (std::size_t g = 0; g < measure.universe(); ++g) {
    acc += to_double(measure.weight(g));
    cumulative.push_back(acc);
    if (measure.weight(g) > 0) last = g;
  }
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    const auto g = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                            cumulative.begin());
    return std::min(g, last);
  };

  std::vector<ConsistencyRow> table;
  for (auto n : sample_sizes) {
    if (n == 0) throw std::invalid_argument("sample size 0");
    std::vector<double> gaps;
    for (std::size_t t = 0; t < trials; ++t) {
      Sample s;
      s.objects.reserve(n);
      for (std::size_t k = 0; k < n; ++k) s.objects.push_back(draw());
      gaps.push_back(to_double(sup_gap(ctx, measure, s)));
    }
    std::sort(gaps.begin(), gaps.end());
    ConsistencyRow row;
    row.n = n;
    row.mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());
    const std::size_t mid = gaps.size() / 2;
    row.median = gaps.size() % 2 ? gaps[mid] : (gaps[mid - 1] + gaps[mid]) / 2;
    row.max = gaps.back();
    table.push_back(row);
  }
  return table;
}

PropertyReport consistency_report(const std::vector<ConsistencyRow>& table, double noise, double final_bound) {
  auto r = make("P11", Verdict::holds);
  r.witness["table"] = json::array();
  for (const auto& row : table)
    r.witness["table"].push_back({{"n", row.n}, {"mean", row.mean}, {"median", row.median}, {"max", row.max}});
  for (std::size_t k = 1; k < table.size(); ++k)
    if (table[k].mean > table[k - 1].mean + noise) {
      r.verdict = Verdict::fails;
      r.notes.push_back("mean sup-gap rises from n=" + std::to_string(table[k - 1].n) + " to n=" +
                        std::to_string(table[k].n));
    }
  if (!table.empty() && table.back().mean >= final_bound) {
    r.verdict = Verdict::fails;
    r.notes.push_back("mean sup-gap at the largest n is not below the bound");
  }
  return r;
}

// --- symmetry / freeness ---------------------------------------------------------------

PropertyReport check_symmetry_center(const FormalContext& ctx, const DiscreteMeasure& measure,
                                     const ObjectMap& involution, std::size_t s, const DepthFunctionHandle& depth) {
  const std::size_t n = ctx.object_count();
  check_map(involution, n, "involution");
  for (std::size_t g = 0; g < n; ++g)
    if (involution[involution[g]] != g) throw ValidationError("map is not an involution at " + label(ctx, g));
  if (s >= n) throw DimensionError("center candidate outside the context");

  ExtentFamily family;
  try {
    family = all_extents(ctx);
  } catch (const SizeLimitError& e) {
    auto r = make("SYM", Verdict::inconclusive_cap);
    r.notes.push_back(e.what());
    return r;
  }
  for (const auto& e : family.extents) {
    const ObjectSet img = image(e, involution);
    if (!family.contains(img) || measure_of(measure, img) != measure_of(measure, e)) {
      auto r = make("SYM", Verdict::premise_not_met);
      r.witness = {{"extent", names(ctx, e)}, {"image", names(ctx, img)}};
      r.notes.push_back("involution does not preserve extents and their measure");
      return r;
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    const ObjectSet between = closure(ctx, ctx.objects({g, involution[g]}));
    if (!between.contains(s)) {
      auto r = make("SYM", Verdict::premise_not_met);
      r.witness = {{"object", label(ctx, g)}, {"closure", names(ctx, between)}, {"center", label(ctx, s)}};
      r.notes.push_back("center not in the closure of an object and its mirror image");
      return r;
    }
  }
  const DepthMap d = evaluate_depth(depth, ctx, measure);
  const Rational hi = max_value(d);
  auto r = make("SYM", d[s] == hi ? Verdict::holds : Verdict::fails);
  r.witness = {{"center", label(ctx, s)}, {"depth", to_string(d[s])}, {"max", to_string(hi)}};
  return r;
}

WeaklyFreeResult construct_weakly_free(const FormalContext& ctx, const DepthMap& target) {
  const std::size_t n = ctx.object_count();
  if (target.size() != n) throw DimensionError("target does not match the context");
  const auto qc = check_quasiconcavity(ctx, target, QuasiconcavityMode::contour);
  if (qc.report.verdict != Verdict::holds)
    throw ValidationError("target depth is not quasiconcave: " + qc.report.witness.dump());

  std::vector<Rational> levels = target.values;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Rational> weights(n);
  Rational below = 0;
  for (std::size_t layer = 0; layer < levels.size(); ++layer) {
    const Rational w = layer == 0 ? Rational(1) : below + 1;
    for (std::size_t g = 0; g < n; ++g)
      if (target[g] == levels[layer]) weights[g] = w;
    for (std::size_t g = 0; g < n; ++g)
      if (target[g] == levels[layer]) below += w;
  }

  WeaklyFreeResult out{DiscreteMeasure::explicit_weights(weights), {}, {}, make("WFREE", Verdict::holds)};
  out.tukey = tukey_depths(ctx, out.measure);

  std::map<Rational, Rational> f;
  std::vector<std::string> problems;
  for (std::size_t g = 0; g < n; ++g) {
    auto [it, fresh] = f.emplace(out.tukey[g], target[g]);
    if (!fresh && it->second != target[g])
      problems.push_back("Tukey value " + to_string(out.tukey[g]) + " maps to two target levels");
  }
  for (auto it = f.begin(); it != f.end(); ++it) {
    out.level_map.emplace_back(it->first, it->second);
    if (it != f.begin() && std::prev(it)->second > it->second)
      problems.push_back("level map not isotone at Tukey value " + to_string(it->first));
  }

  json measure_json = json::object();
  for (std::size_t g = 0; g < n; ++g) measure_json[label(ctx, g)] = to_string(out.measure.weight(g));
  json f_json = json::array();
  for (const auto& [t, v] : out.level_map) f_json.push_back({to_string(t), to_string(v)});
  out.report.witness = {{"measure", measure_json}, {"tukey", depth_values(ctx, out.tukey)}, {"level_map", f_json}};
  if (!problems.empty()) {
    out.report.verdict = Verdict::fails;
    out.report.notes = problems;
  }
  return out;
}

// --- suite -------------------------------------------------------------------------------

AxiomSuite run_axiom_suite(const FormalContext& ctx, const DiscreteMeasure& measure, const DepthFunctionHandle& depth) {
  return {check_p2(ctx, measure, depth), check_order_basics(ctx, measure, depth),
          check_starshaped(ctx, measure, depth),
          check_quasiconcavity(ctx, measure, depth, QuasiconcavityMode::both).report,
          check_strict_quasiconcavity(ctx, measure, depth)};
}

std::vector<std::string> chain_violations(const AxiomSuite& s) {
  auto verdict = [](const PropertyReport& r, const char* part) {
    const PropertyReport* p = r.part(part);
    return p ? p->verdict : Verdict::inconclusive_cap;
  };
  const Verdict p3 = verdict(s.basics, "P3");
  const Verdict p4 = verdict(s.basics, "P4");
  const Verdict p5 = verdict(s.basics, "P5");
  const Verdict p7i = verdict(s.p7, "P7i");
  Verdict p7ii = verdict(s.p7, "P7ii");
  if (p7ii == Verdict::inconclusive_cap) p7ii = p7i;
  const Verdict p6 = s.p6.verdict;
  const Verdict p8 = s.p8.verdict;

  std::vector<std::string> out;
  auto implies = [&](Verdict a, Verdict b, const char* text) {
    if (a == Verdict::holds && b == Verdict::fails) out.emplace_back(text);
  };
  implies(p8, p7ii, "P8 => P7ii");
  implies(p7ii, p6, "P7ii => P6");
  implies(p7ii, p5, "P7ii => P5");
  implies(p6, p5, "P6 => P5");
  implies(p5, p3, "P5 => P3");
  implies(p5, p4, "P5 => P4");
  implies(p7i, p7ii, "P7i => P7ii");
  implies(p7ii, p7i, "P7ii => P7i");
  return out;
}

}  // namespace fcadepth
