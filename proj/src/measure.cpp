#include "fcadepth/measure.hpp"

#include <stdexcept>

#include "fcadepth/errors.hpp"

namespace fcadepth {

Sample Sample::without_position(std::size_t position) const {
  if (position >= objects.size()) throw std::out_of_range("sample position out of range");
  Sample s = *this;
  s.objects.erase(s.objects.begin() + static_cast<std::ptrdiff_t>(position));
  return s;
}

DiscreteMeasure DiscreteMeasure::uniform(std::size_t objects) {
  if (objects == 0) throw std::invalid_argument("uniform measure on an empty object set");
  return DiscreteMeasure(std::vector<Rational>(objects, Rational(1, static_cast<long long>(objects))), "uniform");
}

DiscreteMeasure DiscreteMeasure::empirical(const Sample& sample, std::size_t objects) {
  if (sample.objects.empty()) throw std::invalid_argument("empirical measure of an empty sample");
  std::vector<long long> counts(objects, 0);
  for (auto g : sample.objects) {
    if (g >= objects)
      throw DimensionError("sample index " + std::to_string(g) + " outside universe of size " +
                           std::to_string(objects));
    ++counts[g];
  }
  std::vector<Rational> w;
  const auto n = static_cast<long long>(sample.objects.size());
  for (auto c : counts) w.emplace_back(c, n);
  return DiscreteMeasure(std::move(w), "empirical(n=" + std::to_string(n) + ")");
}

DiscreteMeasure DiscreteMeasure::explicit_weights(std::vector<Rational> weights) {
  Rational total = 0;
  for (std::size_t g = 0; g < weights.size(); ++g) {
    if (weights[g] < 0) throw std::invalid_argument("negative weight for object " + std::to_string(g));
    total += weights[g];
  }
  if (total == 0) throw std::invalid_argument("weights sum to zero");
  for (auto& w : weights) w /= total;
  return DiscreteMeasure(std::move(weights), "explicit");
}

DiscreteMeasure DiscreteMeasure::dirac(std::size_t object, std::size_t objects) {
  if (object >= objects) throw DimensionError("dirac object outside universe");
  std::vector<Rational> w(objects, Rational(0));
  w[object] = 1;
  return DiscreteMeasure(std::move(w), "dirac");
}

ObjectSet DiscreteMeasure::support() const {
  ObjectSet s(weights_.size());
  for (std::size_t g = 0; g < weights_.size(); ++g)
    if (weights_[g] > 0) s.insert(g);
  return s;
}

DiscreteMeasure make_measure(MeasureKind kind, const FormalContext& ctx, const Sample& sample,
                             const std::vector<Rational>& weights) {
  switch (kind) {
    case MeasureKind::uniform: return DiscreteMeasure::uniform(ctx.object_count());
    case MeasureKind::empirical: return DiscreteMeasure::empirical(sample, ctx.object_count());
    case MeasureKind::explicit_weights:
      if (weights.size() != ctx.object_count())
        throw DimensionError(std::to_string(weights.size()) + " weights for " + std::to_string(ctx.object_count()) +
                             " objects");
      return DiscreteMeasure::explicit_weights(weights);
  }
  throw std::logic_error("unknown measure kind");
}

Rational measure_of(const DiscreteMeasure& measure, const ObjectSet& objects) {
  if (objects.universe() != measure.universe())
    throw DimensionError("object set universe " + std::to_string(objects.universe()) + " does not match measure over " +
                         std::to_string(measure.universe()) + " objects");
  Rational total = 0;
  objects.for_each([&](std::size_t g) { total += measure.weight(g); });
  return total;
}

Rational total_variation(const DiscreteMeasure& p, const DiscreteMeasure& q) {
  if (p.universe() != q.universe()) throw DimensionError("measures over different universes");
  // max_A |P(A) − Q(A)| is attained at A = {P > Q}.
  Rational excess = 0;
  for (std::size_t g = 0; g < p.universe(); ++g)
    if (p.weight(g) > q.weight(g)) excess += p.weight(g) - q.weight(g);
  return excess;
}

Rational measure_diameter(const std::vector<DiscreteMeasure>& family) {
  Rational d = 0;
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) d = std::max(d, total_variation(family[a], family[b]));
  return d;
}

}  // namespace fcadepth
