#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsim {

inline constexpr std::string_view kToolName = "qsim";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Numerical tolerances used by invariant checks throughout the library.
/// Defaults are the desk-scale values every operation is specified against;
/// adjust (before constructing any states) only for experiments.
struct Tolerances {
  double norm = 1e-10;              // pure-state normalization
  double hermiticity = 1e-10;       // elementwise Hermiticity of operators
  double trace = 1e-10;             // |tr(rho) - 1|
  double eigenvalue_floor = -1e-9;  // below this a spectrum is invalid; [floor, 0) clips to 0
  double orthogonality = 1e-10;     // basis vectors pairwise
  double unitarity = 1e-10;         // max |U†U - I|
  double zero_probability = 1e-12;  // outcomes below this are "undefined", never divided by
  std::size_t dimension_cap = std::size_t{1} << 14;  // dense exact algebra stays tractable
};

/// Process-wide tolerance configuration. Intended to be set once at startup;
/// not synchronized.
Tolerances& tolerances();

/// A state or operator violated one of its declared invariants.
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

/// A composite Hilbert space exceeded the configured dimension cap.
class dimension_cap_error : public std::runtime_error {
 public:
  explicit dimension_cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsim
