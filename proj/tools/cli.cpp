#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcadepth/context_io.hpp"
#include "fcadepth/depth.hpp"
#include "fcadepth/errors.hpp"
#include "fcadepth/properties.hpp"
#include "fcadepth/scaling.hpp"

namespace fcadepth::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  // inputs
  std::string context, data, spec, posets, points;
  std::string context2;
  // measure
  std::string measure;
  std::string sample, weights;
  // depth
  std::string depth = "tukey";
  std::string format;
  bool with_float = false;
  // checks
  std::string checks = "P2-P7";
  std::optional<std::uint64_t> seed;
  std::string sizes = "10,100,1000,4000";
  std::size_t trials = 50;
  std::string outlier, duplicate, bijection, involution, center, target;
  std::string qc_mode = "both";
  bool timing = false;
  // misc
  std::size_t cap_extents = kDefaultExtentCap;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw IngestionError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::size_t object_of(const FormalContext& ctx, const std::string& label) {
  try {
    return ctx.object_index(label);
  } catch (const std::out_of_range&) {
    throw ValidationError("unknown object '" + label + "'");
  }
}

FormalContext load_input(const Options& o) {
  const int kinds = !o.context.empty() + !o.data.empty() + !o.posets.empty() + !o.points.empty();
  if (kinds != 1) throw ValidationError("give exactly one of --context, --data, --posets, --points");
  if (!o.context.empty()) return load_context(o.context);
  if (!o.data.empty()) {
    if (o.spec.empty()) throw ValidationError("--data needs --spec");
    const auto spec = ScalingSpec::from_json(read_json(o.spec));
    return scale_table(type_table(read_csv_file(o.data), spec), spec);
  }
  if (!o.posets.empty()) {
    const auto in = posets_from_json(read_json(o.posets));
    PosetScalingOptions options;
    options.item_labels = in.item_labels;
    return scale_posets(in.n_items, in.posets, in.poset_labels, options);
  }
  const auto in = points_from_json(read_json(o.points));
  return scale_halfspaces(in.points, in.directions, in.labels);
}

std::string input_id(const Options& o) {
  for (const auto* p : {&o.context, &o.data, &o.posets, &o.points})
    if (!p->empty()) return *p;
  return "";
}

/// JSON array of labels, or whitespace separated labels.
Sample read_sample(const std::string& path, const FormalContext& ctx) {
  const std::string text = read_file(path);
  std::vector<std::string> labels;
  const auto j = json::parse(text, nullptr, false);
  if (!j.is_discarded()) {
    const json& list = j.is_object() ? j.at("sample") : j;
    labels = list.get<std::vector<std::string>>();
  } else {
    std::istringstream in(text);
    for (std::string l; in >> l;) labels.push_back(l);
  }
  Sample s;
  for (const auto& l : labels) s.objects.push_back(object_of(ctx, l));
  if (s.objects.empty()) throw ValidationError("sample '" + path + "' is empty");
  return s;
}

Rational json_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return parse_rational(v.dump());
  throw ValidationError("expected a number or \"p/q\" string, got " + v.dump());
}

/// {"label": value} or an array aligned with the objects.
std::vector<Rational> read_values(const std::string& path, const FormalContext& ctx) {
  const json j = read_json(path);
  std::vector<Rational> out(ctx.object_count());
  if (j.is_array()) {
    if (j.size() != ctx.object_count())
      throw DimensionError(std::to_string(j.size()) + " values for " + std::to_string(ctx.object_count()) + " objects");
    for (std::size_t g = 0; g < j.size(); ++g) out[g] = json_rational(j[g]);
    return out;
  }
  std::vector<bool> seen(ctx.object_count(), false);
  for (const auto& [label, v] : j.items()) {
    const auto g = object_of(ctx, label);
    out[g] = json_rational(v);
    seen[g] = true;
  }
  for (std::size_t g = 0; g < seen.size(); ++g)
    if (!seen[g]) throw ValidationError("no value for object '" + ctx.object_labels()[g] + "'");
  return out;
}

struct ResolvedMeasure {
  DiscreteMeasure measure;
  std::optional<Sample> sample;
};

ResolvedMeasure resolve_measure(const Options& o, const FormalContext& ctx) {
  std::string kind = o.measure;
  if (kind.empty()) kind = !o.sample.empty() ? "empirical" : !o.weights.empty() ? "explicit" : "uniform";
  ResolvedMeasure r;
  if (!o.sample.empty()) r.sample = read_sample(o.sample, ctx);
  if (kind == "uniform") {
    r.measure = make_measure(MeasureKind::uniform, ctx);
  } else if (kind == "empirical") {
    if (!r.sample) throw ValidationError("--measure empirical needs --sample");
    r.measure = make_measure(MeasureKind::empirical, ctx, *r.sample);
  } else if (kind == "explicit") {
    if (o.weights.empty()) throw ValidationError("--measure explicit needs --weights");
    r.measure = make_measure(MeasureKind::explicit_weights, ctx, {}, read_values(o.weights, ctx));
  } else {
    throw ValidationError("unknown measure '" + kind + "' (uniform, empirical, explicit)");
  }
  return r;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw IngestionError("cannot write '" + o.out + "'");
  f << text;
}

// --- scale -------------------------------------------------------------------

int cmd_scale(const Options& o, std::ostream& out, std::ostream& err) {
  const FormalContext ctx = load_input(o);
  std::ostringstream summary;
  summary << "objects: " << ctx.object_count() << '\n' << "attributes: " << ctx.attribute_count() << '\n';
  if (ctx.object_count() <= o.cap_extents)
    summary << "extents: " << all_extents(ctx, o.cap_extents).size() << '\n';
  else
    summary << "extents: skipped (more than " << o.cap_extents << " objects)\n";

  if (o.out.empty()) {
    out << write_cxt(ctx);
    err << summary.str();
    return kOk;
  }
  fs::path base(o.out);
  if (base.extension() == ".cxt" || base.extension() == ".json") base.replace_extension();
  fs::path cxt = base, js = base;
  cxt += ".cxt";
  js += ".json";
  save_context(ctx, cxt);
  save_context(ctx, js);
  out << summary.str() << "wrote: " << cxt.string() << '\n' << "wrote: " << js.string() << '\n';
  return kOk;
}

// --- depth -------------------------------------------------------------------

int cmd_depth(const Options& o, std::ostream& out) {
  const FormalContext ctx = load_input(o);
  const auto measure = resolve_measure(o, ctx).measure;
  DepthMap d = evaluate_depth(depth_function(o.depth), ctx, measure);
  d.context_id = input_id(o);
  std::string format = o.format;
  if (format.empty()) format = fs::path(o.out).extension() == ".json" ? "json" : "tsv";
  DepthTableOptions options{o.with_float};
  if (format == "tsv")
    emit(o, depth_to_tsv(ctx, d, options), out);
  else if (format == "json")
    emit(o, depth_to_json(ctx, d, options).dump(2) + "\n", out);
  else
    throw ValidationError("unknown format '" + format + "' (tsv, json)");
  return kOk;
}

// --- check -------------------------------------------------------------------

const std::vector<std::string> kCheckIds{"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "P11",
                                         "C_P8", "C_notP8", "SYM", "WFREE"};

std::vector<std::string> parse_checks(const std::string& text) {
  std::vector<std::string> out;
  auto add = [&](const std::string& id) {
    if (std::find(kCheckIds.begin(), kCheckIds.end(), id) == kCheckIds.end())
      throw ValidationError("unknown check '" + id + "'");
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& item : split(text, ',')) {
    const auto dash = item.find('-');
    if (item == "all") {
      for (const char* id : {"P2", "P3", "P4", "P5", "P6", "P7", "P8"}) add(id);
    } else if (dash != std::string::npos && item[0] == 'P' && dash + 1 < item.size() && item[dash + 1] == 'P') {
      const int lo = std::stoi(item.substr(1, dash - 1));
      const int hi = std::stoi(item.substr(dash + 2));
      if (lo > hi || lo < 1 || hi > 11) throw ValidationError("bad check range '" + item + "'");
      for (int k = lo; k <= hi; ++k) add("P" + std::to_string(k));
    } else {
      add(item);
    }
  }
  if (out.empty()) throw ValidationError("no checks requested");
  return out;
}

ObjectMap parse_pairs(const std::string& text, const FormalContext& ctx, bool symmetric) {
  ObjectMap map(ctx.object_count());
  for (std::size_t g = 0; g < map.size(); ++g) map[g] = g;
  for (const auto& pair : split(text, ',')) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) throw ValidationError("expected 'a:b' pairs, got '" + pair + "'");
    const auto a = object_of(ctx, pair.substr(0, colon));
    const auto b = pair.substr(colon + 1);
    map[a] = symmetric ? object_of(ctx, b) : std::stoul(b);
    if (symmetric) map[map[a]] = a;
  }
  return map;
}

ObjectMap parse_bijection(const std::string& text, const FormalContext& from, const FormalContext& to) {
  ObjectMap map(from.object_count());
  for (std::size_t g = 0; g < map.size(); ++g) map[g] = g;
  for (const auto& pair : split(text, ',')) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) throw ValidationError("expected 'a:b' pairs, got '" + pair + "'");
    map[object_of(from, pair.substr(0, colon))] = object_of(to, pair.substr(colon + 1));
  }
  return map;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& s : split(text, ',')) {
    std::size_t pos = 0;
    const auto v = std::stoul(s, &pos);
    if (pos != s.size()) throw ValidationError("bad sample size '" + s + "'");
    out.push_back(v);
  }
  return out;
}

PropertyReport run_check(const std::string& id, const Options& o, const FormalContext& ctx,
                         const ResolvedMeasure& rm, const DepthFunctionHandle& depth) {
  const auto& m = rm.measure;
  auto need_sample = [&]() -> const Sample& {
    if (!rm.sample) throw ValidationError(id + " needs --sample");
    return *rm.sample;
  };
  if (id == "P1") {
    if (o.context2.empty()) throw ValidationError("P1 needs --context2");
    const FormalContext other = load_context(o.context2);
    const auto m2 = resolve_measure(o, other).measure;
    if (!o.bijection.empty()) return check_p1(ctx, other, m, m2, parse_bijection(o.bijection, ctx, other), depth);
    const auto found = find_p1_bijection(ctx, other, m, m2);
    if (!found) {
      PropertyReport r;
      r.property = "P1";
      r.verdict = Verdict::premise_not_met;
      r.notes.push_back("no bijection preserves extents and measure");
      return r;
    }
    auto r = check_p1(ctx, other, m, m2, *found, depth);
    r.notes.push_back("bijection found by exhaustive search");
    return r;
  }
  if (id == "P2") return check_p2(ctx, m, depth);
  if (id == "P3" || id == "P4" || id == "P5") return check_order_basics(ctx, m, depth);
  if (id == "P6") return check_starshaped(ctx, m, depth);
  if (id == "P7") {
    QuasiconcavityMode mode = QuasiconcavityMode::both;
    if (o.qc_mode == "contour")
      mode = QuasiconcavityMode::contour;
    else if (o.qc_mode == "bruteforce")
      mode = QuasiconcavityMode::bruteforce;
    else if (o.qc_mode != "both")
      throw ValidationError("unknown quasiconcavity mode '" + o.qc_mode + "'");
    const auto r = check_quasiconcavity(ctx, m, depth, mode);
    auto report = r.report;
    if (!r.quasiker.empty()) {
      json pairs = json::array();
      for (const auto& [a, g] : r.quasiker) pairs.push_back({{"A", object_names(ctx, a)}, {"object", ctx.object_labels()[g]}});
      report.witness["quasiker"] = pairs;
    }
    return report;
  }
  if (id == "P8") return check_strict_quasiconcavity(ctx, m, depth);
  if (id == "P9") {
    const auto pair = split(o.duplicate, ',');
    if (pair.size() != 2) throw ValidationError("P9 needs --duplicate a,b");
    return check_p9(ctx, need_sample(), {object_of(ctx, pair[0]), object_of(ctx, pair[1])}, depth);
  }
  if (id == "P10") {
    if (o.outlier.empty()) throw ValidationError("P10 needs --outlier");
    return check_p10(ctx, need_sample(), object_of(ctx, o.outlier), depth);
  }
  if (id == "P11") {
    if (!o.seed) throw ValidationError("P11 needs --seed");
    return consistency_report(simulate_consistency(ctx, m, parse_sizes(o.sizes), o.trials, *o.seed));
  }
  if (id == "C_P8") return check_c_p8_membership(ctx, m);
  if (id == "C_notP8") return detect_p8_blocked(ctx);
  if (id == "SYM") {
    if (o.center.empty()) throw ValidationError("SYM needs --center");
    return check_symmetry_center(ctx, m, parse_pairs(o.involution, ctx, true), object_of(ctx, o.center), depth);
  }
  if (id == "WFREE") {
    DepthMap target;
    target.values = o.target.empty() ? evaluate_depth(depth, ctx, m).values : read_values(o.target, ctx);
    return construct_weakly_free(ctx, target).report;
  }
  throw ValidationError("unknown check '" + id + "'");
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto ids = parse_checks(o.checks);
  const FormalContext ctx = load_input(o);
  const auto rm = resolve_measure(o, ctx);
  const auto depth = depth_function(o.depth);

  json reports = json::array();
  bool failed = false, capped = false, basics_done = false;
  for (const auto& id : ids) {
    const bool basics = id == "P3" || id == "P4" || id == "P5";
    if (basics && basics_done) continue;
    basics_done = basics_done || basics;
    PropertyReport r;
    try {
      r = timed([&] { return run_check(id, o, ctx, rm, depth); });
    } catch (const SizeLimitError& e) {
      r.property = id;
      r.verdict = Verdict::inconclusive_cap;
      r.notes.push_back(e.what());
    }
    failed = failed || r.verdict == Verdict::fails;
    capped = capped || r.verdict == Verdict::inconclusive_cap;
    reports.push_back(to_json(r, o.timing));
  }
  const json bundle = {{"context", input_id(o)},
                       {"measure", rm.measure.description()},
                       {"depth_function", o.depth},
                       {"reports", reports}};
  emit(o, bundle.dump(2) + "\n", out);
  return failed ? kPropertyFailed : capped ? kCapExceeded : kOk;
}

void add_input_flags(CLI::App* app, Options& o) {
  app->add_option("--context", o.context, "Context file (.cxt or .json)");
  app->add_option("--data", o.data, "CSV table; needs --spec");
  app->add_option("--spec", o.spec, "Scaling spec (JSON)");
  app->add_option("--posets", o.posets, "Partial orders (JSON)");
  app->add_option("--points", o.points, "Point cloud (JSON)");
  app->add_option("--cap-extents", o.cap_extents, "Largest object count for extent enumeration");
  app->add_option("--out", o.out, "Output path (default stdout)");
}

void add_measure_flags(CLI::App* app, Options& o) {
  app->add_option("--measure", o.measure, "uniform | empirical | explicit");
  app->add_option("--sample", o.sample, "Sample file: JSON array of object labels or whitespace separated labels");
  app->add_option("--weights", o.weights, "Weights file: JSON {label: \"p/q\"} or array");
  app->add_option("--depth", o.depth, "Depth function: tukey | hier-free");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Depth functions on formal contexts"};
  app.require_subcommand(1);

  auto* scale = app.add_subcommand("scale", "Scale raw data into a formal context");
  add_input_flags(scale, o);

  auto* depth = app.add_subcommand("depth", "Compute a depth map");
  add_input_flags(depth, o);
  add_measure_flags(depth, o);
  depth->add_option("--format", o.format, "tsv | json (default from --out extension)");
  depth->add_flag("--float", o.with_float, "Add a decimal column next to the exact value");

  auto* check = app.add_subcommand("check", "Check structural properties of a depth function");
  add_input_flags(check, o);
  add_measure_flags(check, o);
  check->add_option("--check", o.checks, "Comma separated ids or ranges, e.g. P2-P7,C_notP8,SYM (default P2-P7)");
  check->add_option("--seed", o.seed, "Seed for the consistency simulation");
  check->add_option("--sizes", o.sizes, "Sample sizes for P11");
  check->add_option("--trials", o.trials, "Trials per sample size for P11");
  check->add_option("--context2", o.context2, "Second context for P1");
  check->add_option("--bijection", o.bijection, "P1 object map as a:b pairs (default: search)");
  check->add_option("--duplicate", o.duplicate, "P9 duplicate pair i,j");
  check->add_option("--outlier", o.outlier, "P10 outlier object");
  check->add_option("--involution", o.involution, "SYM involution as a:b pairs");
  check->add_option("--center", o.center, "SYM center candidate");
  check->add_option("--target", o.target, "WFREE target depth file (default: the chosen depth)");
  check->add_option("--qc-mode", o.qc_mode, "P7 mode: contour | bruteforce | both");
  check->add_flag("--timing", o.timing, "Include runtime_ms in reports");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*scale) return cmd_scale(o, out, err);
    if (*depth) return cmd_depth(o, out);
    return cmd_check(o, out);
  } catch (const SizeLimitError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const IngestionError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "malformed JSON input: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace fcadepth::cli
