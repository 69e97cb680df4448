#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordfactor/context.hpp"
#include "ordfactor/twofactor.hpp"

namespace ordfactor {

/// Attributes sharing one support set inside a factor.
struct AxisGroup {
  std::vector<std::size_t> attributes;
  Bitset support;
};

/// One biplot axis. Groups are ordered by strictly shrinking support;
/// `object_position[g]` counts the leading groups whose attributes g has.
struct FactorAxis {
  std::vector<AxisGroup> groups;
  std::vector<std::size_t> object_position;
};

/// Throws Errc::not_ferrers if `factor` is not a Ferrers relation, and
/// Errc::pair_not_incident if it leaves I.
FactorAxis factor_axis(const FormalContext& ctx, std::span<const IncidencePair> factor);

/// Incidence readable from the two axes.
PairSet reconstruct(const FactorAxis& first, const FactorAxis& second);

struct Biplot {
  FactorAxis horizontal;  ///< factor2, the x coordinate
  FactorAxis vertical;    ///< factor1, the y coordinate
};

Biplot make_biplot(const FormalContext& ctx, const FactorizationResult& result);

enum class PlotFormat { svg, tikz, csv };

/// Throws Errc::unsupported_format.
PlotFormat parse_plot_format(std::string_view name);

std::string group_label(const FormalContext& ctx, const AxisGroup& group);

std::string render(const FormalContext& ctx, const Biplot& plot, PlotFormat format);

}  // namespace ordfactor
