#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace huffman {

enum class Errc {
  invalid_length,
  degenerate_scale,
  pole_singularity,
  synthesis_failure,
  rotation_failure,
  out_of_range_shift,
  wrong_mode,
  degenerate_input,
  series_undefined,
  bound_undefined,
  degenerate_polynomial,
  invalid_identity_case,
  invalid_argument,
  parse_error,
};

/// Machine-readable name, e.g. "invalid-length".
std::string_view to_string(Errc code) noexcept;

/// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace huffman
