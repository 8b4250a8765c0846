#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fcadepth/context.hpp"
#include "fcadepth/rational.hpp"

namespace fcadepth {

/// Multiset of object indices (n ≥ 1 for empirical use).
struct Sample {
  std::vector<std::size_t> objects;

  std::size_t size() const { return objects.size(); }
  /// Sample with the element at `position` removed.
  Sample without_position(std::size_t position) const;
};

/// Exact probability measure on the objects of one context.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;

  static DiscreteMeasure uniform(std::size_t objects);
  /// count(g)/n. Throws std::invalid_argument on an empty sample and
  /// DimensionError on indices outside the universe.
  static DiscreteMeasure empirical(const Sample& sample, std::size_t objects);
  /// Normalises non-negative weights. Throws on negative weights or zero sum.
  static DiscreteMeasure explicit_weights(std::vector<Rational> weights);
  /// Point mass on one object.
  static DiscreteMeasure dirac(std::size_t object, std::size_t objects);

  std::size_t universe() const { return weights_.size(); }
  const Rational& weight(std::size_t g) const { return weights_.at(g); }
  const std::vector<Rational>& weights() const { return weights_; }

  /// Short provenance string ("uniform", "empirical(n=3)", "explicit").
  const std::string& description() const { return description_; }

  /// Objects with positive weight.
  ObjectSet support() const;

  friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) { return a.weights_ == b.weights_; }

 private:
  DiscreteMeasure(std::vector<Rational> w, std::string d) : weights_(std::move(w)), description_(std::move(d)) {}
  std::vector<Rational> weights_;
  std::string description_;
};

enum class MeasureKind { uniform, empirical, explicit_weights };

/// Builds a measure for a context. `sample` is read for empirical, `weights`
/// for explicit.
DiscreteMeasure make_measure(MeasureKind kind, const FormalContext& ctx, const Sample& sample = {},
                             const std::vector<Rational>& weights = {});

/// Σ of weights over A. Throws DimensionError on universe mismatch.
Rational measure_of(const DiscreteMeasure& measure, const ObjectSet& objects);

/// Total-variation distance over the power set: max_A |P(A) − Q(A)|.
Rational total_variation(const DiscreteMeasure& p, const DiscreteMeasure& q);

/// Diameter of a finite family: the largest pairwise total-variation distance.
Rational measure_diameter(const std::vector<DiscreteMeasure>& family);

}  // namespace fcadepth
