#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bandbraid {

enum class ErrorCode {
  syntax = 1,
  index_out_of_range,
  degenerate_letter,
  misordered_letter,
  invalid_strand_count,
  mismatched_strands,
  not_canonical_factor,
  crossing_cycles,
  overlapping_cycles,
  not_positive,
  cap_exceeded,
  invalid_argument,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `position()` is a 0-based byte offset
/// into the parsed text for parse errors and empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace bandbraid
