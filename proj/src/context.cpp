#include "ordfactor/context.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "ordfactor/error.hpp"

namespace ordfactor {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::illegal_character: return "IllegalCharacter";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::pair_not_incident: return "PairNotIncident";
    case Errc::concept_budget_exceeded: return "ConceptBudgetExceeded";
    case Errc::not_two_dimensional: return "NotTwoDimensional";
    case Errc::not_two_factorizable: return "NotTwoFactorizable";
    case Errc::invalid_factorization: return "InvalidFactorization";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_a_partial_order: return "NotAPartialOrder";
    case Errc::not_ferrers: return "NotFerrers";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

PairSet normalized(PairSet pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

PairSet set_union(const PairSet& a, const PairSet& b) {
  PairSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PairSet set_intersection(const PairSet& a, const PairSet& b) {
  PairSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PairSet set_difference(const PairSet& a, const PairSet& b) {
  PairSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const PairSet& a, const PairSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void check_names(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (name.empty()) throw Error(Errc::invalid_argument, std::string("empty ") + what + " name");
    if (name.find('\n') != std::string::npos)
      throw Error(Errc::invalid_argument, std::string(what) + " name contains a newline");
    if (!seen.insert(name).second)
      throw Error(Errc::duplicate_name, std::string(what) + " '" + name + "' declared twice");
  }
}

std::optional<std::size_t> find_name(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<Bitset> rows, std::string title)
    : title_(std::move(title)),
      objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)) {
  check_names(objects_, "object");
  check_names(attributes_, "attribute");
  if (rows_.size() != objects_.size())
    throw Error(Errc::count_mismatch, "expected " + std::to_string(objects_.size()) + " rows, got " +
                                          std::to_string(rows_.size()));
  columns_.assign(attributes_.size(), Bitset(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g) {
    if (rows_[g].size() != attributes_.size())
      throw Error(Errc::count_mismatch, "row " + std::to_string(g) + " has " +
                                            std::to_string(rows_[g].size()) + " entries, expected " +
                                            std::to_string(attributes_.size()));
    incidence_count_ += rows_[g].count();
    for_each_bit(rows_[g], [&](std::size_t m) { columns_[m].set(g); });
  }
}

FormalContext FormalContext::from_pairs(std::vector<std::string> objects,
                                        std::vector<std::string> attributes,
                                        std::span<const IncidencePair> pairs, std::string title) {
  std::vector<Bitset> rows(objects.size(), Bitset(attributes.size()));
  for (const auto& p : pairs) {
    if (p.object >= objects.size() || p.attribute >= attributes.size())
      throw Error(Errc::index_out_of_range, "pair outside G x M");
    rows[p.object].set(p.attribute);
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows), std::move(title));
}

bool FormalContext::incident(std::size_t object, std::size_t attribute) const {
  return rows_.at(object).test(attribute);
}

PairSet FormalContext::incidence() const {
  PairSet out;
  out.reserve(incidence_count_);
  for (std::size_t g = 0; g < rows_.size(); ++g)
    for_each_bit(rows_[g], [&](std::size_t m) { out.push_back({g, m}); });
  return out;
}

Bitset FormalContext::intent(const Bitset& objects) const {
  Bitset result(attributes_.size());
  result.set();
  for_each_bit(objects, [&](std::size_t g) { result &= rows_[g]; });
  return result;
}

Bitset FormalContext::extent(const Bitset& attributes) const {
  Bitset result(objects_.size());
  result.set();
  for_each_bit(attributes, [&](std::size_t m) { result &= columns_[m]; });
  return result;
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
  return find_name(objects_, name);
}

std::optional<std::size_t> FormalContext::attribute_index(std::string_view name) const {
  return find_name(attributes_, name);
}

FormalContext FormalContext::with_incidence(std::span<const IncidencePair> pairs) const {
  return from_pairs(objects_, attributes_, pairs, title_);
}

bool operator==(const FormalContext& a, const FormalContext& b) {
  return a.title_ == b.title_ && a.objects_ == b.objects_ && a.attributes_ == b.attributes_ &&
         a.rows_ == b.rows_;
}

// ---------------------------------------------------------------------------
// Burmeister format

namespace {

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  s = trim_right(s);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(trim_right(text.substr(start)));
      break;
    }
    lines.push_back(trim_right(text.substr(start, end - start)));
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(std::string_view s) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::malformed_header, "expected a count, got '" + std::string(s) + "'");
  return value;
}

bool blank(std::string_view s) { return trim(s).empty(); }

}  // namespace

FormalContext parse_cxt(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && blank(lines[i])) ++i;
  if (i == lines.size() || trim(lines[i]) != "B")
    throw Error(Errc::malformed_header, "missing 'B' marker line");
  ++i;
  while (i < lines.size() && blank(lines[i])) ++i;

  std::vector<std::string_view> header;
  while (i < lines.size() && !blank(lines[i])) header.push_back(lines[i++]);
  std::string title;
  if (header.size() == 3) {
    title = std::string(trim(header[0]));
    header.erase(header.begin());
  } else if (header.size() != 2) {
    throw Error(Errc::malformed_header,
                "expected optional title and two count lines before the first blank line");
  }
  const auto n_objects = parse_count(header[0]);
  const auto n_attributes = parse_count(header[1]);

  std::vector<std::string_view> body;
  for (; i < lines.size(); ++i)
    if (!blank(lines[i])) body.push_back(lines[i]);
  const std::size_t n_rows = n_attributes == 0 ? 0 : n_objects;
  if (body.size() != n_objects + n_attributes + n_rows)
    throw Error(Errc::count_mismatch, "expected " + std::to_string(n_objects + n_attributes + n_rows) +
                                          " name and row lines, found " + std::to_string(body.size()));

  std::vector<std::string> objects(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(n_objects));
  std::vector<std::string> attributes(body.begin() + static_cast<std::ptrdiff_t>(n_objects),
                                      body.begin() + static_cast<std::ptrdiff_t>(n_objects + n_attributes));
  std::vector<Bitset> rows(n_objects, Bitset(n_attributes));
  for (std::size_t g = 0; g < n_rows; ++g) {
    const auto row = trim(body[n_objects + n_attributes + g]);
    if (row.size() != n_attributes)
      throw Error(Errc::count_mismatch, "row for '" + objects[g] + "' has " + std::to_string(row.size()) +
                                            " cells, expected " + std::to_string(n_attributes));
    for (std::size_t m = 0; m < row.size(); ++m) {
      switch (row[m]) {
        case 'X':
        case 'x': rows[g].set(m); break;
        case '.': break;
        default:
          throw Error(Errc::illegal_character,
                      "'" + std::string(1, row[m]) + "' in row for '" + objects[g] + "'");
      }
    }
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows), std::move(title));
}

std::string serialize_cxt(const FormalContext& ctx) {
  std::ostringstream out;
  out << "B\n" << ctx.title() << "\n" << ctx.object_count() << "\n" << ctx.attribute_count() << "\n\n";
  for (const auto& name : ctx.objects()) out << name << "\n";
  for (const auto& name : ctx.attributes()) out << name << "\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out << (ctx.incident(g, m) ? 'X' : '.');
    out << "\n";
  }
  return out.str();
}

std::vector<std::size_t> derive(const FormalContext& ctx, Side side, std::span<const std::size_t> subset) {
  const auto n = side == Side::objects ? ctx.object_count() : ctx.attribute_count();
  Bitset chosen(n);
  for (auto i : subset) {
    if (i >= n) throw Error(Errc::index_out_of_range, "index " + std::to_string(i) + " out of range");
    chosen.set(i);
  }
  return to_indices(side == Side::objects ? ctx.intent(chosen) : ctx.extent(chosen));
}

FormalContext complement(const FormalContext& ctx) {
  std::vector<Bitset> rows;
  rows.reserve(ctx.object_count());
  for (std::size_t g = 0; g < ctx.object_count(); ++g) rows.push_back(~ctx.row(g));
  return FormalContext(ctx.objects(), ctx.attributes(), std::move(rows), ctx.title());
}

FormalContext remove_incidences(const FormalContext& ctx, std::span<const IncidencePair> pairs) {
  std::vector<Bitset> rows;
  rows.reserve(ctx.object_count());
  for (std::size_t g = 0; g < ctx.object_count(); ++g) rows.push_back(ctx.row(g));
  for (const auto& p : pairs) {
    if (p.object >= ctx.object_count() || p.attribute >= ctx.attribute_count())
      throw Error(Errc::index_out_of_range, "pair outside G x M");
    if (!ctx.incident(p))
      throw Error(Errc::pair_not_incident, "(" + ctx.objects()[p.object] + ", " +
                                               ctx.attributes()[p.attribute] + ") is not in I");
    rows[p.object].reset(p.attribute);
  }
  return FormalContext(ctx.objects(), ctx.attributes(), std::move(rows), ctx.title());
}

}  // namespace ordfactor
