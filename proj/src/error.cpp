#include "huffman/error.hpp"

namespace huffman {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_length: return "invalid-length";
    case Errc::degenerate_scale: return "degenerate-scale";
    case Errc::pole_singularity: return "pole-singularity";
    case Errc::synthesis_failure: return "synthesis-failure";
    case Errc::rotation_failure: return "rotation-failure";
    case Errc::out_of_range_shift: return "out-of-range-shift";
    case Errc::wrong_mode: return "wrong-mode";
    case Errc::degenerate_input: return "degenerate-input";
    case Errc::series_undefined: return "series-undefined";
    case Errc::bound_undefined: return "bound-undefined";
    case Errc::degenerate_polynomial: return "degenerate-polynomial";
    case Errc::invalid_identity_case: return "invalid-identity-case";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace huffman
