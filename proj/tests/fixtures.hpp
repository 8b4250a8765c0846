#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fcadepth/context.hpp"
#include "fcadepth/depth.hpp"
#include "fcadepth/measure.hpp"
#include "fcadepth/scaling.hpp"

namespace fixtures {

using namespace fcadepth;

inline const char* kTitanicCsv =
    "passenger,sex,class,age\n"
    "g1,m,III,34.5\n"
    "g2,f,III,47\n"
    "g3,f,II,67\n"
    "g4,f,I,23\n"
    "g5,m,II,35\n";

inline ScalingSpec titanic_spec() {
  ScalingSpec spec;
  spec.columns["sex"] = NominalScale{{"f", "m"}};
  spec.columns["class"] = NominalScale{{"I", "II", "III"}};
  spec.columns["age"] = InterordinalScale{};
  return spec;
}

inline FormalContext titanic() {
  std::istringstream in(kTitanicCsv);
  const auto spec = titanic_spec();
  return scale_table(type_table(read_csv(in), spec), spec);
}

/// Interordinal age scale alone.
inline FormalContext titanic_age() {
  std::istringstream in("passenger,age\ng1,34.5\ng2,47\ng3,67\ng4,23\ng5,35\n");
  ScalingSpec spec;
  spec.columns["age"] = InterordinalScale{};
  return scale_table(type_table(read_csv(in), spec), spec);
}

inline FormalContext hierarchical() {
  return FormalContext::from_cross_strings({"X.X...", "X..X..", ".X..X.", ".X...X"},
                                           {"a1a2", "a1b2", "b1a2", "b1b2"},
                                           {"a1", "b1", "a1a2", "a1b2", "b1a2", "b1b2"});
}

inline FormalContext table4_left() { return FormalContext::from_cross_strings({"X..", ".X.", "..X"}); }
inline FormalContext table4_k1() { return FormalContext::from_cross_strings({"X..X", ".XX.", "..XX"}); }
inline FormalContext table4_k2() { return FormalContext::from_cross_strings({"X..X", ".XX.", ".XXX"}); }
inline FormalContext table5_left() { return FormalContext::from_cross_strings({"XXX.", "XX.X", "XXXX"}); }
inline FormalContext table5_right() { return FormalContext::from_cross_strings({"X..", ".X.", ".XX"}); }

inline std::vector<Rational> rationals(std::initializer_list<std::pair<long long, long long>> values) {
  std::vector<Rational> out;
  for (auto [p, q] : values) out.emplace_back(p, q);
  return out;
}

inline ObjectSet set_of(const FormalContext& ctx, std::initializer_list<std::size_t> members) {
  return ctx.objects(members);
}

/// Seeded generator of small random contexts and measures.
class RandomCorpus {
 public:
  explicit RandomCorpus(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  FormalContext context(std::size_t max_objects = 8, std::size_t max_attributes = 8) {
    const std::size_t n = uniform(1, max_objects);
    const std::size_t m = uniform(1, max_attributes);
    const double density = 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng_);
    std::bernoulli_distribution cross(density);
    std::vector<std::string> rows(n, std::string(m, '.'));
    for (auto& row : rows)
      for (auto& c : row)
        if (cross(rng_)) c = 'X';
    return FormalContext::from_cross_strings(rows);
  }

  DiscreteMeasure measure(std::size_t objects) {
    std::vector<Rational> w;
    bool any = false;
    for (std::size_t g = 0; g < objects; ++g) {
      const auto v = static_cast<long long>(uniform(0, 9));
      any = any || v > 0;
      w.emplace_back(v, static_cast<long long>(uniform(1, 4)));
    }
    if (!any) w[uniform(0, objects - 1)] = 1;
    return DiscreteMeasure::explicit_weights(std::move(w));
  }

  /// Arbitrary depth values with deliberate ties.
  std::vector<Rational> values(std::size_t objects) {
    std::vector<Rational> out;
    for (std::size_t g = 0; g < objects; ++g) out.emplace_back(static_cast<long long>(uniform(0, 3)), 3);
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Random quasiconcave target: levels on a random chain of extents G ⊋ E1 ⊋ ...
inline DepthMap random_quasiconcave_target(const FormalContext& ctx, RandomCorpus& rnd) {
  const auto family = all_extents(ctx);
  std::vector<ObjectSet> chain{ctx.all_objects()};
  while (true) {
    std::vector<ObjectSet> below;
    for (const auto& e : family.extents)
      if (!e.empty() && e != chain.back() && e.is_subset_of(chain.back())) below.push_back(e);
    if (below.empty() || rnd.uniform(0, 3) == 0) break;
    chain.push_back(below[rnd.uniform(0, below.size() - 1)]);
  }
  DepthMap target;
  target.values.assign(ctx.object_count(), Rational(0));
  for (std::size_t level = 0; level < chain.size(); ++level)
    chain[level].for_each([&](std::size_t g) { target.values[g] = Rational(static_cast<long long>(level), 4); });
  return target;
}

}  // namespace fixtures
