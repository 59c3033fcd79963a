#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pellfrac {

enum class errc {
  invalid_field,
  field_mismatch,
  division_by_zero,
  parse_error,
  unsupported_quartic,
  not_squarefree,
  degenerate_parameters,
  structural_violation,
  singular_curve,
  not_on_curve,
  pole,
  reconstruction_mismatch,
  inadmissible,
  unsupported_curve,
  transcription_fault,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_field: return "invalid_field";
    case errc::field_mismatch: return "field_mismatch";
    case errc::division_by_zero: return "division_by_zero";
    case errc::parse_error: return "parse_error";
    case errc::unsupported_quartic: return "unsupported_quartic";
    case errc::not_squarefree: return "not_squarefree";
    case errc::degenerate_parameters: return "degenerate_parameters";
    case errc::structural_violation: return "structural_violation";
    case errc::singular_curve: return "singular_curve";
    case errc::not_on_curve: return "not_on_curve";
    case errc::pole: return "pole";
    case errc::reconstruction_mismatch: return "reconstruction_mismatch";
    case errc::inadmissible: return "inadmissible";
    case errc::unsupported_curve: return "unsupported_curve";
    case errc::transcription_fault: return "transcription_fault";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace pellfrac
