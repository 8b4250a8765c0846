#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "fcadepth/errors.hpp"
#include "fcadepth/properties.hpp"
#include "fixtures.hpp"

using namespace fcadepth;
using fixtures::rationals;
using fixtures::RandomCorpus;

namespace {

DepthFunctionHandle tukey() { return depth_function("tukey"); }

DepthFunctionHandle fixed(std::vector<Rational> values) { return constant_handle("fixed", std::move(values)); }

DepthFunctionHandle constant(std::size_t n) { return fixed(std::vector<Rational>(n, Rational(1, 2))); }

DepthMap map_of(std::vector<Rational> values) {
  DepthMap d;
  d.values = std::move(values);
  return d;
}

FormalContext titanic_with_duplicate() {
  std::istringstream in(std::string(fixtures::kTitanicCsv) + "g6,f,III,47\n");
  const auto spec = fixtures::titanic_spec();
  return scale_table(type_table(read_csv(in), spec), spec);
}

FormalContext titanic_redundant() {
  std::istringstream in(fixtures::kTitanicCsv);
  auto spec = fixtures::titanic_spec();
  spec.columns["age"] = InterordinalScale{{23, 30, 34.5, 35, 47, 67}};
  return scale_table(type_table(read_csv(in), spec), spec);
}

FormalContext with_duplicate_rows() { return FormalContext::from_cross_strings({"X..", "X..", ".X.", "..X"}); }

std::vector<std::string> witness_names(const nlohmann::json& j) { return j.get<std::vector<std::string>>(); }

/// Exhaustive: does any map G -> {0..n-1} satisfy P8?
bool some_depth_is_strict(const FormalContext& ctx) {
  const std::size_t n = ctx.object_count();
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    DepthMap d;
    for (auto v : digits) d.values.emplace_back(static_cast<long long>(v));
    if (check_strict_quasiconcavity(ctx, d).verdict == Verdict::holds) return true;
    std::size_t k = 0;
    while (k < n && ++digits[k] == n) digits[k++] = 0;
    if (k == n) return false;
  }
}

}  // namespace

TEST_CASE("report serialization") {
  const auto ctx = fixtures::titanic();
  const auto r = timed([&] { return check_p2(ctx, DiscreteMeasure::uniform(5), tukey()); });
  const auto plain = to_json(r);
  CHECK(plain["property"] == "P2");
  CHECK(plain["verdict"] == "holds");
  CHECK(plain.contains("witness"));
  CHECK(plain.contains("notes"));
  CHECK_FALSE(plain.contains("runtime_ms"));
  CHECK(to_json(r, true).contains("runtime_ms"));
  CHECK(to_string(Verdict::premise_not_met) == "premise-not-met");
  CHECK(to_string(Verdict::inconclusive_cap) == "inconclusive-cap");
}

TEST_CASE("P1") {
  const auto ctx = fixtures::titanic();
  const auto u = DiscreteMeasure::uniform(5);
  const ObjectMap id{0, 1, 2, 3, 4};
  std::vector<std::size_t> order(ctx.attribute_count());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = order.size() - 1 - k;
  CHECK(check_p1(ctx, ctx.with_attribute_order(order), u, u, id, tukey()).verdict == Verdict::holds);

  const auto redundant = titanic_redundant();
  CHECK(redundant.attribute_count() > ctx.attribute_count());
  CHECK(check_p1(ctx, redundant, u, u, id, tukey()).verdict == Verdict::holds);

  const auto u3 = DiscreteMeasure::uniform(3);
  const auto k = check_p1(fixtures::table4_k1(), fixtures::table4_k2(), u3, u3, {0, 1, 2}, tukey());
  CHECK(k.verdict == Verdict::premise_not_met);

  // Swapping two objects breaks the premises unless the extents are symmetric.
  const auto swapped = check_p1(ctx, ctx, u, u, {1, 0, 2, 3, 4}, tukey());
  CHECK(swapped.verdict == Verdict::premise_not_met);

  const auto same = check_p1(ctx, ctx, u, u, id, fixed(rationals({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}})));
  CHECK(same.verdict == Verdict::holds);  // same handle on both sides: trivially isomorphic

  CHECK_THROWS_AS(check_p1(ctx, fixtures::table4_k1(), u, u3, id, tukey()), DimensionError);
  CHECK_THROWS_AS(check_p1(ctx, ctx, u, u, {0, 0, 1, 2, 3}, tukey()), ValidationError);
}

TEST_CASE("P1 fails for a depth that ignores the extents") {
  // Same extents, but the handle reads the attribute count.
  const DepthFunctionHandle by_width{"width", [](std::size_t g, const FormalContext& c, const DiscreteMeasure&) {
                                       return Rational(static_cast<long long>(c.row(g).count()));
                                     }};
  const auto k = FormalContext::from_cross_strings({"X.", ".X"});
  const auto k_wide = FormalContext::from_cross_strings({"XX.", "..X"});
  const auto u = DiscreteMeasure::uniform(2);
  const auto r = check_p1(k, k_wide, u, u, {0, 1}, by_width);
  CHECK(r.verdict == Verdict::fails);
  CHECK(check_p1(k, k_wide, u, u, {0, 1}, tukey()).verdict == Verdict::holds);
}

TEST_CASE("P1 bijection search") {
  const auto u3 = DiscreteMeasure::uniform(3);
  CHECK_FALSE(find_p1_bijection(fixtures::table4_k1(), fixtures::table4_k2(), u3, u3).has_value());
  const auto k = fixtures::table5_right();
  const auto relabelled = FormalContext::from_cross_strings({".X.", ".XX", "X.."});
  const auto found = find_p1_bijection(k, relabelled, u3, u3);
  REQUIRE(found.has_value());
  CHECK(*found == ObjectMap{2, 0, 1});
  CHECK(check_p1(k, relabelled, u3, u3, *found, tukey()).verdict == Verdict::holds);
  std::vector<std::string> rows(8, "X");
  const auto big = FormalContext::from_cross_strings(rows);
  CHECK_THROWS_AS(find_p1_bijection(big, big, DiscreteMeasure::uniform(8), DiscreteMeasure::uniform(8)),
                  SizeLimitError);
}

TEST_CASE("P2") {
  const auto titanic = fixtures::titanic();
  const auto vacuous = check_p2(titanic, DiscreteMeasure::uniform(5), tukey());
  CHECK(vacuous.verdict == Verdict::holds);
  CHECK_FALSE(vacuous.notes.empty());
  const auto dup = with_duplicate_rows();
  CHECK(check_p2(dup, DiscreteMeasure::uniform(4), tukey()).verdict == Verdict::holds);
  const auto bad = check_p2(dup, DiscreteMeasure::uniform(4), fixed(rationals({{0, 1}, {1, 1}, {2, 1}, {3, 1}})));
  CHECK(bad.verdict == Verdict::fails);
  CHECK(witness_names(bad.witness["pair"]) == std::vector<std::string>{"g1", "g2"});
}

TEST_CASE("P3 P4 P5") {
  const auto left = fixtures::table5_left();
  const auto r = check_order_basics(left, DiscreteMeasure::uniform(3), tukey());
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.part("P4")->verdict == Verdict::holds);
  CHECK(witness_names(r.part("P4")->witness["objects"]) == std::vector<std::string>{"g3"});
  CHECK(r.part("P4")->witness["depth"] == "1/1");
  CHECK(r.part("P3")->verdict == Verdict::premise_not_met);

  const auto blank = FormalContext::from_cross_strings({"XX.", "X.X", "...", "XXX"});
  const auto b = check_order_basics(blank, DiscreteMeasure::uniform(4), tukey());
  CHECK(b.part("P3")->verdict == Verdict::holds);
  CHECK(b.part("P4")->verdict == Verdict::holds);

  const auto t = check_order_basics(fixtures::titanic(), DiscreteMeasure::uniform(5), tukey());
  CHECK(t.part("P3")->verdict == Verdict::premise_not_met);
  CHECK(t.part("P4")->verdict == Verdict::premise_not_met);
  CHECK(t.part("P5")->verdict == Verdict::holds);

  const auto adversarial = check_order_basics(left, DiscreteMeasure::uniform(3), fixed(rationals({{1, 1}, {1, 1}, {0, 1}})));
  CHECK(adversarial.verdict == Verdict::fails);
  CHECK(adversarial.part("P4")->verdict == Verdict::fails);
  CHECK(adversarial.part("P5")->verdict == Verdict::fails);
}

TEST_CASE("P6 starshapedness") {
  const auto titanic = fixtures::titanic();
  const auto r = check_starshaped(titanic, DiscreteMeasure::uniform(5), tukey());
  CHECK(r.verdict == Verdict::holds);
  const auto centers = witness_names(r.witness["centers"]);
  for (const char* g : {"g1", "g2", "g5"}) CHECK(std::find(centers.begin(), centers.end(), g) != centers.end());

  const auto all = check_starshaped(titanic, DiscreteMeasure::uniform(5), constant(5));
  CHECK(witness_names(all.witness["centers"]).size() == 5);

  const auto bad = check_starshaped(fixtures::table5_left(), DiscreteMeasure::uniform(3),
                                    fixed(rationals({{1, 1}, {1, 1}, {0, 1}})));
  CHECK(bad.verdict == Verdict::fails);
  CHECK(witness_names(bad.witness["centers"]).empty());
  CHECK(bad.witness.contains("between"));

  std::vector<std::string> rows(17, "X");
  const auto big = FormalContext::from_cross_strings(rows);
  CHECK(check_starshaped(big, DiscreteMeasure::uniform(17), tukey()).verdict == Verdict::inconclusive_cap);
}

TEST_CASE("P7 quasiconcavity") {
  const auto titanic = fixtures::titanic();
  const auto t = check_quasiconcavity(titanic, DiscreteMeasure::uniform(5), tukey());
  CHECK(t.report.verdict == Verdict::holds);
  CHECK(t.report.part("P7i")->verdict == Verdict::holds);
  CHECK(t.report.part("P7ii")->verdict == Verdict::holds);

  const auto hier = fixtures::hierarchical();
  const auto h = check_quasiconcavity(hier, DiscreteMeasure::uniform(4), depth_function("hier-free"));
  CHECK(h.report.verdict == Verdict::holds);
  const auto& contours = h.report.part("P7i")->witness["contours"];
  REQUIRE(contours.size() == 3);
  CHECK(witness_names(contours[0]["contour"]) == std::vector<std::string>{"a1a2"});
  CHECK(witness_names(contours[1]["contour"]) == std::vector<std::string>{"a1a2", "a1b2"});
  CHECK(witness_names(contours[2]["contour"]).size() == 4);

  const auto left = fixtures::table5_left();
  const auto bad = check_quasiconcavity(left, DiscreteMeasure::uniform(3), fixed(rationals({{2, 1}, {1, 1}, {0, 1}})));
  CHECK(bad.report.verdict == Verdict::fails);
  const auto& w = bad.report.part("P7ii")->witness;
  CHECK(witness_names(w["A"]) == std::vector<std::string>{"g1"});
  CHECK(w["object"] == "g3");
  CHECK(bad.report.part("P7i")->verdict == Verdict::fails);

  const auto contour_only = check_quasiconcavity(left, map_of(rationals({{2, 1}, {1, 1}, {0, 1}})),
                                                 QuasiconcavityMode::contour);
  CHECK(contour_only.report.parts.size() == 1);
  CHECK(contour_only.quasiker.empty());
}

TEST_CASE("P7 over the cap falls back to contour sets") {
  std::vector<std::string> rows;
  for (int k = 0; k < 13; ++k) rows.push_back(k % 2 ? "X." : ".X");
  const auto ctx = FormalContext::from_cross_strings(rows);
  const auto r = check_quasiconcavity(ctx, DiscreteMeasure::uniform(13), tukey());
  CHECK(r.report.part("P7ii")->verdict == Verdict::inconclusive_cap);
  CHECK(r.report.verdict == Verdict::holds);
}

TEST_CASE("quasiker pairs satisfy the defining equality") {
  RandomCorpus rnd(3);
  for (int round = 0; round < 100; ++round) {
    const auto ctx = rnd.context();
    const auto m = rnd.measure(ctx.object_count());
    const auto d = tukey_depths(ctx, m);
    const auto r = check_quasiconcavity(ctx, d, QuasiconcavityMode::bruteforce);
    for (const auto& [a, g] : r.quasiker) {
      const auto c = closure(ctx, a);
      CHECK(c.contains(g));
      CHECK_FALSE(a.contains(g));
      Rational lo = d[a.indices().front()];
      for (auto h : a.indices()) lo = std::min(lo, d[h]);
      CHECK(d[g] == lo);
    }
  }
}

TEST_CASE("P8 strict quasiconcavity") {
  CHECK(check_strict_quasiconcavity(fixtures::table5_left(), DiscreteMeasure::uniform(3), tukey()).verdict ==
        Verdict::holds);
  const auto left4 = fixtures::table4_left();
  for (const auto& d : {tukey(), constant(3), fixed(rationals({{1, 1}, {2, 1}, {3, 1}}))})
    CHECK(check_strict_quasiconcavity(left4, DiscreteMeasure::uniform(3), d).verdict == Verdict::fails);
  const auto dup = check_strict_quasiconcavity(with_duplicate_rows(), DiscreteMeasure::uniform(4), tukey());
  CHECK(dup.verdict == Verdict::fails);
  CHECK(witness_names(dup.witness["A"]) == std::vector<std::string>{"g1"});
  CHECK(dup.witness["object"] == "g2");
}

TEST_CASE("P8-blocked detector") {
  const auto t4 = detect_p8_blocked(fixtures::table4_left());
  CHECK(t4.verdict == Verdict::holds);
  CHECK(t4.witness["certificate"] == "cyclic-triple");
  CHECK(witness_names(t4.witness["objects"]) == std::vector<std::string>{"g1", "g2", "g3"});

  const auto dup = detect_p8_blocked(with_duplicate_rows());
  CHECK(dup.witness["certificate"] == "duplicates");
  CHECK(witness_names(dup.witness["A"]) == std::vector<std::string>{"g1"});
  CHECK(witness_names(dup.witness["A_tilde"]) == std::vector<std::string>{"g2"});

  const auto t5 = detect_p8_blocked(fixtures::table5_left());
  CHECK(t5.verdict == Verdict::fails);
  CHECK(t5.witness["certificate"].is_null());
  CHECK(t5.witness["strictly_quasiconcave_depth"]["g3"] == "2/1");

  // Two disjoint pairs implying each other, with no triple.
  const auto square = FormalContext::from_cross_strings({"XX..", "..XX", "X.X.", ".X.X"});
  const auto sq = detect_p8_blocked(square);
  CHECK(sq.verdict == Verdict::holds);
  CHECK(sq.witness["certificate"] == "disjoint-pair");
}

TEST_CASE("P8-blocked detector is exact on small random contexts") {
  RandomCorpus rnd(99);
  for (int round = 0; round < 150; ++round) {
    const auto ctx = rnd.context(5, 6);
    const auto r = detect_p8_blocked(ctx);
    const bool blocked = r.verdict == Verdict::holds;
    CHECK(blocked != some_depth_is_strict(ctx));
    if (blocked) {
      for (int k = 0; k < 5; ++k)
        CHECK(check_strict_quasiconcavity(ctx, map_of(rnd.values(ctx.object_count()))).verdict == Verdict::fails);
      CHECK(check_strict_quasiconcavity(ctx, tukey_depths(ctx, rnd.measure(ctx.object_count()))).verdict ==
            Verdict::fails);
    }
  }
}

TEST_CASE("peeling beyond the brute-force cap") {
  std::vector<std::string> rows;
  for (int k = 0; k < 14; ++k) {
    std::string row(14, '.');
    for (int j = 0; j <= k; ++j) row[j] = 'X';
    rows.push_back(row);
  }
  const auto chain = FormalContext::from_cross_strings(rows);
  const auto r = detect_p8_blocked(chain);
  CHECK(r.verdict == Verdict::fails);
  CHECK(r.notes.size() >= 2);
  const auto peel = peel_extreme_points(chain);
  CHECK(peel.core.empty());
}

TEST_CASE("C_P8 membership") {
  const auto m = check_c_p8_membership(fixtures::table5_left(), DiscreteMeasure::uniform(3));
  CHECK(m.verdict == Verdict::holds);
  CHECK(check_strict_quasiconcavity(fixtures::table5_left(), DiscreteMeasure::uniform(3), tukey()).verdict ==
        Verdict::holds);
  CHECK(check_c_p8_membership(with_duplicate_rows(), DiscreteMeasure::uniform(4)).verdict == Verdict::fails);
  CHECK(check_c_p8_membership(fixtures::table4_left(), DiscreteMeasure::uniform(3)).verdict == Verdict::fails);

  RandomCorpus rnd(5);
  for (int round = 0; round < 200; ++round) {
    const auto ctx = rnd.context(6, 6);
    const auto measure = rnd.measure(ctx.object_count());
    CHECK_NOTHROW(check_c_p8_membership(ctx, measure));
  }
}

TEST_CASE("P9 duplicates") {
  const auto ctx = titanic_with_duplicate();
  const Sample all{{0, 1, 2, 3, 4, 5}};
  const auto r = check_p9(ctx, all, {5, 1}, tukey());
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.witness["with"] == "1/2");
  CHECK(r.witness["without"] == "2/5");
  CHECK(check_p9(ctx, all, {5, 1}, constant(6)).verdict == Verdict::fails);
  CHECK_THROWS_AS(check_p9(ctx, all, {0, 1}, tukey()), ValidationError);

  const auto pair = FormalContext::from_cross_strings({"X", "."});
  const auto edge = check_p9(pair, Sample{{0, 0}}, {0, 0}, tukey());
  CHECK(edge.verdict == Verdict::premise_not_met);
  CHECK_FALSE(edge.notes.empty());
  CHECK_THROWS_AS(check_p9(pair, Sample{{0}}, {0, 0}, tukey()), ValidationError);
}

TEST_CASE("P10 outliers") {
  const auto ctx = fixtures::table5_right();
  const Sample s{{0, 1, 2}};
  const auto r = check_p10(ctx, s, 0, tukey());
  CHECK(r.verdict == Verdict::fails);
  CHECK(r.witness["with_outlier"] == nlohmann::json{"2/3", "2/3"});
  CHECK(check_p10(ctx, s, 0, constant(3)).verdict == Verdict::holds);

  const auto titanic = fixtures::titanic();
  const Sample t{{0, 1, 2, 3, 4}};
  for (std::size_t g = 0; g < 5; ++g) CHECK(check_p10(titanic, t, g, tukey()).verdict == Verdict::premise_not_met);
  CHECK_THROWS_AS(check_p10(ctx, Sample{{1, 2}}, 0, tukey()), ValidationError);
}

TEST_CASE("P11 consistency simulation") {
  const auto ctx = fixtures::titanic();
  const auto u = DiscreteMeasure::uniform(5);
  const auto a = simulate_consistency(ctx, u, {10, 100, 1000}, 20, 42);
  const auto b = simulate_consistency(ctx, u, {10, 100, 1000}, 20, 42);
  REQUIRE(a.size() == 3);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].mean == b[k].mean);
    CHECK(a[k].max == b[k].max);
    CHECK(a[k].median <= a[k].max);
  }
  CHECK(a[2].mean < a[0].mean);
  CHECK(to_json(consistency_report(a)) == to_json(consistency_report(b)));

  CHECK(sup_gap(ctx, u, Sample{{0, 1, 2, 3, 4}}) == 0);
  const auto degenerate = simulate_consistency(ctx, DiscreteMeasure::dirac(2, 5), {1, 10, 100}, 5, 1);
  for (const auto& row : degenerate) CHECK(row.max == 0);
  CHECK_THROWS_AS(simulate_consistency(ctx, u, {10}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(simulate_consistency(ctx, u, {}, 3, 1), std::invalid_argument);

  const std::vector<ConsistencyRow> rising{{10, 0.1, 0.1, 0.2}, {100, 0.2, 0.2, 0.3}};
  CHECK(consistency_report(rising).verdict == Verdict::fails);
}

TEST_CASE("symmetry center") {
  const auto hier = fixtures::hierarchical();
  const auto u4 = DiscreteMeasure::uniform(4);
  CHECK(check_symmetry_center(hier, u4, {1, 0, 3, 2}, 0, tukey()).verdict == Verdict::premise_not_met);
  const auto full = check_symmetry_center(hier, u4, {3, 2, 1, 0}, 0, tukey());
  CHECK(full.verdict == Verdict::holds);

  const auto anti = fixtures::table4_left();
  const auto u3 = DiscreteMeasure::uniform(3);
  CHECK(check_symmetry_center(anti, u3, {1, 0, 2}, 2, tukey()).verdict == Verdict::holds);
  CHECK(check_symmetry_center(anti, u3, {1, 0, 2}, 0, tukey()).verdict == Verdict::premise_not_met);

  const auto left = fixtures::table5_left();
  CHECK(check_symmetry_center(left, u3, {0, 1, 2}, 2, tukey()).verdict == Verdict::holds);
  CHECK(check_symmetry_center(left, u3, {0, 1, 2}, 0, tukey()).verdict == Verdict::premise_not_met);
  CHECK(check_symmetry_center(left, u3, {0, 1, 2}, 2, fixed(rationals({{1, 1}, {1, 1}, {0, 1}}))).verdict ==
        Verdict::fails);
  CHECK_THROWS_AS(check_symmetry_center(left, u3, {1, 2, 0}, 2, tukey()), ValidationError);

  // Swapping the two classes is not measure preserving when their masses differ.
  const auto skewed = DiscreteMeasure::explicit_weights(rationals({{2, 1}, {1, 1}, {1, 1}, {1, 1}}));
  CHECK(check_symmetry_center(hier, skewed, {3, 2, 1, 0}, 0, tukey()).verdict == Verdict::premise_not_met);
}

TEST_CASE("weakly free construction") {
  const auto hier = fixtures::hierarchical();
  const auto r = construct_weakly_free(hier, map_of(rationals({{1, 1}, {1, 2}, {0, 1}, {0, 1}})));
  CHECK(r.report.verdict == Verdict::holds);
  CHECK(r.measure.weights() == rationals({{6, 11}, {3, 11}, {1, 11}, {1, 11}}));
  CHECK(r.tukey.values == rationals({{8, 11}, {5, 11}, {2, 11}, {2, 11}}));
  REQUIRE(r.level_map.size() == 3);
  CHECK(r.level_map[0] == std::make_pair(Rational(2, 11), Rational(0)));
  CHECK(r.level_map[2] == std::make_pair(Rational(8, 11), Rational(1)));

  const auto flat = construct_weakly_free(hier, map_of(std::vector<Rational>(4, Rational(1, 3))));
  CHECK(flat.report.verdict == Verdict::holds);
  CHECK(flat.level_map.size() == 1);

  const auto titanic = fixtures::titanic();
  const auto target = tukey_depths(titanic, DiscreteMeasure::uniform(5));
  const auto t = construct_weakly_free(titanic, target);
  CHECK(t.report.verdict == Verdict::holds);
  std::set<Rational> levels;
  for (const auto& [from, to] : t.level_map) levels.insert(to);
  CHECK(levels.size() == 2);

  CHECK_THROWS_AS(construct_weakly_free(fixtures::table5_left(), map_of(rationals({{2, 1}, {1, 1}, {0, 1}}))),
                  ValidationError);
}

TEST_CASE("weakly free construction on random quasiconcave targets") {
  RandomCorpus rnd(17);
  for (int round = 0; round < 150; ++round) {
    const auto ctx = rnd.context(6, 6);
    const auto target = fixtures::random_quasiconcave_target(ctx, rnd);
    const auto r = construct_weakly_free(ctx, target);
    CHECK(r.report.verdict == Verdict::holds);
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
      const auto it = std::find_if(r.level_map.begin(), r.level_map.end(),
                                   [&](const auto& p) { return p.first == r.tukey[g]; });
      REQUIRE(it != r.level_map.end());
      CHECK(it->second == target[g]);
    }
  }
}

TEST_CASE("Tukey satisfies P2 to P7 on random contexts; chain holds for arbitrary depths") {
  RandomCorpus rnd(23);
  for (int round = 0; round < 200; ++round) {
    const auto ctx = rnd.context();
    const auto m = rnd.measure(ctx.object_count());
    const auto suite = run_axiom_suite(ctx, m, tukey());
    CHECK(suite.p2.verdict == Verdict::holds);
    CHECK(suite.basics.verdict == Verdict::holds);
    CHECK(suite.p6.verdict == Verdict::holds);
    CHECK(suite.p7.verdict == Verdict::holds);
    CHECK(chain_violations(suite).empty());

    const auto arbitrary = run_axiom_suite(ctx, m, fixed(rnd.values(ctx.object_count())));
    CHECK(chain_violations(arbitrary).empty());
  }
}
