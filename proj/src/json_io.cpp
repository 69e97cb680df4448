#include "ordfactor/json_io.hpp"

#include <cctype>

#include "ordfactor/error.hpp"

namespace ordfactor {

nlohmann::json context_to_json(const FormalContext& ctx) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    std::string row(ctx.attribute_count(), '.');
    for_each_bit(ctx.row(g), [&](std::size_t m) { row[m] = 'X'; });
    rows.push_back(row);
  }
  return {{"title", ctx.title()},
          {"objects", ctx.objects()},
          {"attributes", ctx.attributes()},
          {"rows", rows}};
}

namespace {

std::vector<std::string> string_array(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw Error(Errc::malformed_header, std::string("context JSON needs a \"") + key + "\" array");
  std::vector<std::string> out;
  for (const auto& v : doc[key]) {
    if (!v.is_string()) throw Error(Errc::malformed_header, std::string("\"") + key + "\" entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

FormalContext context_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(Errc::malformed_header, "context JSON must be an object");
  auto objects = string_array(doc, "objects");
  auto attributes = string_array(doc, "attributes");
  auto lines = string_array(doc, "rows");
  if (lines.size() != objects.size())
    throw Error(Errc::count_mismatch, "expected " + std::to_string(objects.size()) + " rows");
  std::vector<Bitset> rows;
  for (const auto& line : lines) {
    if (line.size() != attributes.size())
      throw Error(Errc::count_mismatch, "row '" + line + "' has wrong length");
    Bitset row(attributes.size());
    for (std::size_t m = 0; m < line.size(); ++m) {
      if (line[m] == 'X' || line[m] == 'x') row.set(m);
      else if (line[m] != '.') throw Error(Errc::illegal_character, "unexpected '" + std::string(1, line[m]) + "'");
    }
    rows.push_back(std::move(row));
  }
  std::string title;
  if (doc.contains("title") && doc["title"].is_string()) title = doc["title"].get<std::string>();
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows), std::move(title));
}

nlohmann::json pairs_to_json(const FormalContext& ctx, const PairSet& pairs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pairs) out.push_back({ctx.objects().at(p.object), ctx.attributes().at(p.attribute)});
  return out;
}

FormalContext read_context(std::string_view text) {
  std::size_t i = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text.substr(i));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::malformed_header, std::string("context JSON: ") + e.what());
    }
    return context_from_json(doc);
  }
  return parse_cxt(text);
}

}  // namespace ordfactor
