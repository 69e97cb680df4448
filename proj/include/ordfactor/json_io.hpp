#pragma once

#include <string_view>

#include "json.hpp"
#include "ordfactor/context.hpp"

namespace ordfactor {

/// JSON mirror of `.cxt`: {"title", "objects", "attributes", "rows": ["X.X", ...]}.
nlohmann::json context_to_json(const FormalContext& ctx);
FormalContext context_from_json(const nlohmann::json& doc);

/// Pairs as [[object name, attribute name], ...].
nlohmann::json pairs_to_json(const FormalContext& ctx, const PairSet& pairs);

/// Reads `.cxt`, or the JSON mirror when the first non-space byte is `{`.
FormalContext read_context(std::string_view text);

}  // namespace ordfactor
