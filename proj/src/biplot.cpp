#include "ordfactor/biplot.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "ordfactor/error.hpp"

namespace ordfactor {

FactorAxis factor_axis(const FormalContext& ctx, std::span<const IncidencePair> factor) {
  if (!is_ferrers(ctx, factor)) throw Error(Errc::not_ferrers, "factor is not a Ferrers relation");
  std::vector<Bitset> support(ctx.attribute_count(), Bitset(ctx.object_count()));
  for (const auto& p : factor) support[p.attribute].set(p.object);

  std::vector<std::size_t> attrs;
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    if (support[m].any()) attrs.push_back(m);
  // Supports form a chain, so equal size means equal set.
  std::stable_sort(attrs.begin(), attrs.end(),
                   [&](std::size_t a, std::size_t b) { return support[a].count() > support[b].count(); });

  FactorAxis axis;
  for (auto m : attrs) {
    if (axis.groups.empty() || axis.groups.back().support != support[m])
      axis.groups.push_back({{}, support[m]});
    axis.groups.back().attributes.push_back(m);
  }
  axis.object_position.assign(ctx.object_count(), 0);
  for (const auto& group : axis.groups)
    for_each_bit(group.support, [&](std::size_t g) { ++axis.object_position[g]; });
  return axis;
}

PairSet reconstruct(const FactorAxis& first, const FactorAxis& second) {
  PairSet out;
  for (const auto* axis : {&first, &second})
    for (std::size_t g = 0; g < axis->object_position.size(); ++g)
      for (std::size_t p = 0; p < axis->object_position[g]; ++p)
        for (auto m : axis->groups[p].attributes) out.push_back({g, m});
  return normalized(std::move(out));
}

Biplot make_biplot(const FormalContext& ctx, const FactorizationResult& result) {
  return {factor_axis(ctx, result.factor2.pairs), factor_axis(ctx, result.factor1.pairs)};
}

PlotFormat parse_plot_format(std::string_view name) {
  if (name == "svg") return PlotFormat::svg;
  if (name == "tikz") return PlotFormat::tikz;
  if (name == "csv") return PlotFormat::csv;
  throw Error(Errc::unsupported_format, "unknown plot format '" + std::string(name) + "'");
}

std::string group_label(const FormalContext& ctx, const AxisGroup& group) {
  std::string label;
  for (auto m : group.attributes) {
    if (!label.empty()) label += ",";
    label += ctx.attributes()[m];
  }
  return label;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n;") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': case '%': case '$': case '#': case '_': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_csv(const FormalContext& ctx, const Biplot& plot) {
  std::ostringstream out;
  out << "object,x,y\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    out << csv_field(ctx.objects()[g]) << ',' << plot.horizontal.object_position[g] << ','
        << plot.vertical.object_position[g] << '\n';
  const std::pair<const char*, const FactorAxis*> axes[] = {{"#axis1:", &plot.horizontal},
                                                            {"#axis2:", &plot.vertical}};
  for (const auto& [tag, axis] : axes) {
    out << tag;
    for (std::size_t i = 0; i < axis->groups.size(); ++i)
      out << (i ? "," : "") << csv_field(group_label(ctx, axis->groups[i]));
    out << '\n';
  }
  return out.str();
}

// Objects sharing a cell are spread on a small circle, in object order.
std::vector<std::pair<double, double>> jitter(const FormalContext& ctx, const Biplot& plot, double radius) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> cells;
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    cells[{plot.horizontal.object_position[g], plot.vertical.object_position[g]}].push_back(g);
  std::vector<std::pair<double, double>> offset(ctx.object_count(), {0.0, 0.0});
  for (const auto& [cell, members] : cells) {
    if (members.size() < 2) continue;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(members.size());
      offset[members[i]] = {radius * std::cos(angle), radius * std::sin(angle)};
    }
  }
  return offset;
}

std::string render_svg(const FormalContext& ctx, const Biplot& plot) {
  constexpr double cell = 70.0, left = 140.0, top = 30.0, bottom = 140.0, right = 60.0;
  const auto nx = plot.horizontal.groups.size();
  const auto ny = plot.vertical.groups.size();
  const double width = left + static_cast<double>(nx) * cell + right;
  const double height = top + static_cast<double>(ny) * cell + bottom;
  const double ox = left, oy = top + static_cast<double>(ny) * cell;
  auto px = [&](double x) { return ox + x * cell; };
  auto py = [&](double y) { return oy - y * cell; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "  <g class=\"axes\" stroke=\"black\" stroke-width=\"1.5\">\n"
      << "    <line x1=\"" << ox << "\" y1=\"" << oy << "\" x2=\"" << px(static_cast<double>(nx) + 0.5)
      << "\" y2=\"" << oy << "\"/>\n"
      << "    <line x1=\"" << ox << "\" y1=\"" << oy << "\" x2=\"" << ox << "\" y2=\""
      << py(static_cast<double>(ny) + 0.3) << "\"/>\n"
      << "  </g>\n";
  out << "  <g class=\"ticks\">\n";
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = px(static_cast<double>(i + 1));
    out << "    <line x1=\"" << x << "\" y1=\"" << oy << "\" x2=\"" << x << "\" y2=\"" << oy + 5
        << "\" stroke=\"black\"/>\n"
        << "    <text x=\"" << x << "\" y=\"" << oy + 16 << "\" text-anchor=\"end\" transform=\"rotate(-45 " << x
        << ' ' << oy + 16 << ")\">" << xml_escape(group_label(ctx, plot.horizontal.groups[i])) << "</text>\n";
  }
  for (std::size_t i = 0; i < ny; ++i) {
    const double y = py(static_cast<double>(i + 1));
    out << "    <line x1=\"" << ox - 5 << "\" y1=\"" << y << "\" x2=\"" << ox << "\" y2=\"" << y
        << "\" stroke=\"black\"/>\n"
        << "    <text x=\"" << ox - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
        << xml_escape(group_label(ctx, plot.vertical.groups[i])) << "</text>\n";
  }
  out << "  </g>\n  <g class=\"objects\">\n";
  const auto offset = jitter(ctx, plot, 14.0);
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    const double x = px(static_cast<double>(plot.horizontal.object_position[g])) + offset[g].first;
    const double y = py(static_cast<double>(plot.vertical.object_position[g])) - offset[g].second;
    const auto name = xml_escape(ctx.objects()[g]);
    out << "    <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"steelblue\"><title>" << name
        << "</title></circle>\n"
        << "    <text x=\"" << x + 6 << "\" y=\"" << y - 6 << "\" font-size=\"9\">" << name << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string render_tikz(const FormalContext& ctx, const Biplot& plot) {
  const auto nx = plot.horizontal.groups.size();
  const auto ny = plot.vertical.groups.size();
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "\\documentclass[tikz,border=5pt]{standalone}\n\\begin{document}\n"
      << "\\begin{tikzpicture}[x=1.4cm,y=1.4cm,font=\\scriptsize]\n"
      << "  \\draw[->] (0,0) -- (" << static_cast<double>(nx) + 0.5 << ",0);\n"
      << "  \\draw[->] (0,0) -- (0," << static_cast<double>(ny) + 0.5 << ");\n";
  for (std::size_t i = 0; i < nx; ++i)
    out << "  \\draw (" << i + 1 << ",0) -- (" << i + 1 << ",-0.08) node[below,rotate=45,anchor=north east] {"
        << tex_escape(group_label(ctx, plot.horizontal.groups[i])) << "};\n";
  for (std::size_t i = 0; i < ny; ++i)
    out << "  \\draw (0," << i + 1 << ") -- (-0.08," << i + 1 << ") node[left] {"
        << tex_escape(group_label(ctx, plot.vertical.groups[i])) << "};\n";
  const auto offset = jitter(ctx, plot, 0.2);
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    const double x = static_cast<double>(plot.horizontal.object_position[g]) + offset[g].first;
    const double y = static_cast<double>(plot.vertical.object_position[g]) + offset[g].second;
    out << "  \\fill (" << x << ',' << y << ") circle (1.5pt) node[above right,font=\\tiny] {"
        << tex_escape(ctx.objects()[g]) << "};\n";
  }
  out << "\\end{tikzpicture}\n\\end{document}\n";
  return out.str();
}

}  // namespace

std::string render(const FormalContext& ctx, const Biplot& plot, PlotFormat format) {
  switch (format) {
    case PlotFormat::csv: return render_csv(ctx, plot);
    case PlotFormat::svg: return render_svg(ctx, plot);
    case PlotFormat::tikz: return render_tikz(ctx, plot);
  }
  throw Error(Errc::unsupported_format, "unknown plot format");
}

}  // namespace ordfactor
