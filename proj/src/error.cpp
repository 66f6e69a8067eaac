#include "bandbraid/error.hpp"

namespace bandbraid {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax: return "syntax error";
    case ErrorCode::index_out_of_range: return "index out of range";
    case ErrorCode::degenerate_letter: return "degenerate letter";
    case ErrorCode::misordered_letter: return "misordered letter";
    case ErrorCode::invalid_strand_count: return "invalid strand count";
    case ErrorCode::mismatched_strands: return "mismatched strand counts";
    case ErrorCode::not_canonical_factor: return "not a canonical factor";
    case ErrorCode::crossing_cycles: return "crossing cycles";
    case ErrorCode::overlapping_cycles: return "overlapping cycles";
    case ErrorCode::not_positive: return "word is not positive";
    case ErrorCode::cap_exceeded: return "cap exceeded";
    case ErrorCode::invalid_argument: return "invalid argument";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(message), code_(code), position_(position) {}

}  // namespace bandbraid
