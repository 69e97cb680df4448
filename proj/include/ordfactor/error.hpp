#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordfactor {

enum class Errc {
  malformed_header,
  count_mismatch,
  illegal_character,
  duplicate_name,
  index_out_of_range,
  pair_not_incident,
  concept_budget_exceeded,
  not_two_dimensional,
  not_two_factorizable,
  invalid_factorization,
  budget_exceeded,
  not_a_partial_order,
  not_ferrers,
  unsupported_format,
  invalid_argument,
};

/// CamelCase name of an error code, as it appears in CLI reports.
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ordfactor
