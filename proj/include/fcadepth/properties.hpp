#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fcadepth/context.hpp"
#include "fcadepth/depth.hpp"
#include "fcadepth/measure.hpp"
#include "fcadepth/rational.hpp"

namespace fcadepth {

enum class Verdict { holds, fails, premise_not_met, inconclusive_cap };

std::string to_string(Verdict v);

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  nlohmann::json witness = nlohmann::json::object();
  std::vector<std::string> notes;
  std::optional<double> runtime_ms;
  /// Sub-verdicts of joint checks (P3/P4/P5, P7i/P7ii).
  std::vector<PropertyReport> parts;

  const PropertyReport* part(const std::string& id) const;
};

nlohmann::json to_json(const PropertyReport& report, bool with_timing = false);

/// Runs `check` and stores its wall time in the returned report.
template <class F>
PropertyReport timed(F&& check) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport r = check();
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline constexpr std::size_t kBruteForceCap = 12;
inline constexpr std::size_t kStarshapedCap = 16;
inline constexpr std::size_t kBijectionSearchCap = 7;

/// Object permutation; perm[g] is the image of g.
using ObjectMap = std::vector<std::size_t>;

// --- P1 / P2 ---------------------------------------------------------------

/// Premises: the map carries the extent family of ctx1 onto that of ctx2 and
/// preserves measure on extents. Conclusion: the depth maps are
/// order-isomorphic along the map.
PropertyReport check_p1(const FormalContext& ctx1, const FormalContext& ctx2, const DiscreteMeasure& m1,
                        const DiscreteMeasure& m2, const ObjectMap& bijection, const DepthFunctionHandle& depth);

/// First permutation (lexicographic) satisfying the P1 premises, if any.
/// Throws SizeLimitError above `cap` objects.
std::optional<ObjectMap> find_p1_bijection(const FormalContext& ctx1, const FormalContext& ctx2,
                                           const DiscreteMeasure& m1, const DiscreteMeasure& m2,
                                           std::size_t cap = kBijectionSearchCap);

PropertyReport check_p2(const FormalContext& ctx, const DiscreteMeasure& measure, const DepthFunctionHandle& depth);

// --- P3 to P8 ----------------------------------------------------------------

/// P3, P4, P5 as parts; the top-level verdict fails iff a part fails.
PropertyReport check_order_basics(const FormalContext& ctx, const DiscreteMeasure& measure,
                                  const DepthFunctionHandle& depth);

/// P6. witness["centers"] lists every center. Throws std::logic_error if the
/// depth is quasiconcave but an argmax is not a center.
PropertyReport check_starshaped(const FormalContext& ctx, const DiscreteMeasure& measure,
                                const DepthFunctionHandle& depth, std::size_t cap = kStarshapedCap);

/// Centers of a starshaped depth map; empty when none.
std::vector<std::size_t> star_centers(const FormalContext& ctx, const DepthMap& depth);

enum class QuasiconcavityMode { contour, bruteforce, both };

struct QuasiKerPair {
  ObjectSet implying;
  std::size_t object;
};

struct QuasiconcavityResult {
  PropertyReport report;
  /// Pairs (A, g), g ∈ γ(A)∖A, with D(g) equal to the minimum over A. Only
  /// filled by the brute-force pass.
  std::vector<QuasiKerPair> quasiker;
};

/// P7 with parts P7i (contour sets are extents) and P7ii (pairwise form).
QuasiconcavityResult check_quasiconcavity(const FormalContext& ctx, const DiscreteMeasure& measure,
                                          const DepthFunctionHandle& depth,
                                          QuasiconcavityMode mode = QuasiconcavityMode::both,
                                          std::size_t cap = kBruteForceCap);

QuasiconcavityResult check_quasiconcavity(const FormalContext& ctx, const DepthMap& depth,
                                          QuasiconcavityMode mode = QuasiconcavityMode::both,
                                          std::size_t cap = kBruteForceCap);

/// P8 over non-empty A.
PropertyReport check_strict_quasiconcavity(const FormalContext& ctx, const DiscreteMeasure& measure,
                                           const DepthFunctionHandle& depth, std::size_t cap = kBruteForceCap);

PropertyReport check_strict_quasiconcavity(const FormalContext& ctx, const DepthMap& depth,
                                           std::size_t cap = kBruteForceCap);

/// Decides whether no depth function on ctx can satisfy P8. holds = blocked,
/// with witness["certificate"] one of duplicates, disjoint-pair,
/// cyclic-triple, core. fails = not blocked; the witness then carries an
/// explicit strictly quasiconcave depth.
PropertyReport detect_p8_blocked(const FormalContext& ctx, std::size_t cap = kBruteForceCap);

/// Peel-round depth: strictly quasiconcave whenever ctx is not blocked.
/// Returns the stuck core instead when peeling cannot exhaust G.
struct PeelResult {
  std::vector<std::size_t> round;  // 1-based peel round per object, 0 if in core
  ObjectSet core;
};
PeelResult peel_extreme_points(const FormalContext& ctx);

/// Sufficient condition for Tukey depth to satisfy P8 (literal membership test).
/// Throws std::logic_error if membership holds while Tukey violates P8.
PropertyReport check_c_p8_membership(const FormalContext& ctx, const DiscreteMeasure& measure,
                                     std::size_t cap = kBruteForceCap);

// --- P9 to P11 ---------------------------------------------------------------

/// `dup` = (i, j): objects with equal intents. Compares D(g_j) under the
/// sample with and without one copy of g_i.
PropertyReport check_p9(const FormalContext& ctx, const Sample& sample, std::pair<std::size_t, std::size_t> dup,
                        const DepthFunctionHandle& depth);

PropertyReport check_p10(const FormalContext& ctx, const Sample& sample, std::size_t outlier,
                         const DepthFunctionHandle& depth);

struct ConsistencyRow {
  std::size_t n = 0;
  double mean = 0;
  double median = 0;
  double max = 0;
};

/// Sup-gap of empirical Tukey depth per sample size, over seeded i.i.d. draws.
std::vector<ConsistencyRow> simulate_consistency(const FormalContext& ctx, const DiscreteMeasure& measure,
                                                 const std::vector<std::size_t>& sample_sizes, std::size_t trials,
                                                 std::uint64_t seed);

/// max_g |T_sample(g) − T(g)|, exact.
Rational sup_gap(const FormalContext& ctx, const DiscreteMeasure& measure, const Sample& sample);

/// P11 verdict: the mean sup-gap may rise by at most `noise` between
/// consecutive sizes and must end below `final_bound`.
PropertyReport consistency_report(const std::vector<ConsistencyRow>& table, double noise = 0.01,
                                  double final_bound = 0.05);

// --- symmetry and freeness ----------------------------------------------------

/// Premises: `involution` maps extents to extents of equal measure, and s ∈
/// γ({g, i(g)}) for every g. Conclusion: D(s) is maximal.
PropertyReport check_symmetry_center(const FormalContext& ctx, const DiscreteMeasure& measure,
                                     const ObjectMap& involution, std::size_t s, const DepthFunctionHandle& depth);

struct WeaklyFreeResult {
  DiscreteMeasure measure;
  DepthMap tukey;
  /// Isotone f as sorted (Tukey value, target value) pairs.
  std::vector<std::pair<Rational, Rational>> level_map;
  PropertyReport report;
};

/// Builds a measure whose Tukey depth reproduces the order of `target` up to
/// an isotone map. Throws ValidationError if target is not quasiconcave.
WeaklyFreeResult construct_weakly_free(const FormalContext& ctx, const DepthMap& target);

// --- implication chain ----------------------------------------------------------

struct AxiomSuite {
  PropertyReport p2;
  PropertyReport basics;  // parts P3, P4, P5
  PropertyReport p6;
  PropertyReport p7;  // parts P7i, P7ii
  PropertyReport p8;
};

AxiomSuite run_axiom_suite(const FormalContext& ctx, const DiscreteMeasure& measure, const DepthFunctionHandle& depth);

/// Implications whose antecedent holds while the consequent fails.
std::vector<std::string> chain_violations(const AxiomSuite& suite);

}  // namespace fcadepth
