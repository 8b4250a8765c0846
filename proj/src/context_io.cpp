#include "fcadepth/context_io.hpp"

#include <fstream>
#include <sstream>

#include "fcadepth/errors.hpp"

namespace fcadepth {

namespace {

bool next_line(std::istream& in, std::string& line, long& lineno) {
  if (!std::getline(in, line)) return false;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::size_t parse_count(const std::string& line, long lineno) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(line, &used);
    if (v < 0 || line.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(line);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw IngestionError("expected a non-negative count, got '" + line + "'", lineno);
  }
}

std::string extension_of(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

}  // namespace

std::string write_cxt(const FormalContext& ctx) {
  std::ostringstream out;
  out << "B\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
  for (const auto& l : ctx.object_labels()) out << l << '\n';
  for (const auto& l : ctx.attribute_labels()) out << l << '\n';
  for (const auto& r : ctx.rows()) out << r.to_cross_string('X', '.') << '\n';
  return out.str();
}

FormalContext read_cxt(std::istream& in) {
  std::string line;
  long lineno = 0;
  if (!next_line(in, line, lineno) || line != "B") throw IngestionError("cxt: missing 'B' header", lineno);
  // An optional context name may precede the counts; blank lines are skipped.
  auto is_count = [](const std::string& l) {
    return !l.empty() && l.find_first_not_of("0123456789 \t") == std::string::npos;
  };
  std::vector<std::size_t> counts;
  bool seen_name = false;
  while (counts.size() < 2) {
    if (!next_line(in, line, lineno)) throw IngestionError("cxt: truncated header", lineno);
    if (line.empty()) continue;
    if (!is_count(line) && counts.empty() && !seen_name) {
      seen_name = true;
      continue;
    }
    counts.push_back(parse_count(line, lineno));
  }
  const std::size_t n_obj = counts[0], n_att = counts[1];
  std::vector<std::string> objects, attributes;
  // Labels start after the blank separator; labels themselves are non-empty.
  while (objects.size() < n_obj) {
    if (!next_line(in, line, lineno)) throw IngestionError("cxt: missing object labels", lineno);
    if (line.empty() && objects.empty()) continue;
    objects.push_back(line);
  }
  while (attributes.size() < n_att) {
    if (!next_line(in, line, lineno)) throw IngestionError("cxt: missing attribute labels", lineno);
    if (line.empty() && n_obj == 0 && attributes.empty()) continue;
    attributes.push_back(line);
  }
  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < n_obj; ++g) {
    if (!next_line(in, line, lineno)) throw IngestionError("cxt: missing incidence row", lineno);
    if (line.size() != n_att)
      throw IngestionError("cxt: incidence row has " + std::to_string(line.size()) + " cells, expected " +
                               std::to_string(n_att),
                           lineno);
    AttributeSet r(n_att);
    for (std::size_t m = 0; m < n_att; ++m) {
      const char c = line[m];
      if (c == 'X' || c == 'x')
        r.insert(m);
      else if (c != '.')
        throw IngestionError(std::string("cxt: unexpected cell '") + c + "'", lineno, static_cast<long>(m + 1));
    }
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext read_cxt_string(const std::string& text) {
  std::istringstream in(text);
  return read_cxt(in);
}

nlohmann::json context_to_json(const FormalContext& ctx) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : ctx.rows()) rows.push_back(r.indices());
  return {{"object_labels", ctx.object_labels()}, {"attribute_labels", ctx.attribute_labels()}, {"incidence_rows", rows}};
}

FormalContext context_from_json(const nlohmann::json& j) {
  try {
    auto objects = j.at("object_labels").get<std::vector<std::string>>();
    auto attributes = j.at("attribute_labels").get<std::vector<std::string>>();
    const auto& raw = j.at("incidence_rows");
    if (raw.size() != objects.size())
      throw IngestionError("json context: " + std::to_string(raw.size()) + " incidence rows for " +
                           std::to_string(objects.size()) + " objects");
    std::vector<AttributeSet> rows;
    for (std::size_t g = 0; g < raw.size(); ++g) {
      AttributeSet r(attributes.size());
      for (const auto& m : raw[g]) {
        const auto idx = m.get<std::size_t>();
        if (idx >= attributes.size())
          throw IngestionError("json context: attribute index " + std::to_string(idx) + " out of range",
                               static_cast<long>(g));
        r.insert(idx);
      }
      rows.push_back(std::move(r));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("json context: ") + e.what());
  }
}

FormalContext load_context(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open '" + path.string() + "'");
  if (extension_of(path) == ".json") {
    try {
      return context_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw IngestionError("'" + path.string() + "': " + e.what());
    }
  }
  return read_cxt(in);
}

void save_context(const FormalContext& ctx, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestionError("cannot write '" + path.string() + "'");
  if (extension_of(path) == ".json")
    out << context_to_json(ctx).dump(2) << '\n';
  else
    out << write_cxt(ctx);
}

}  // namespace fcadepth
