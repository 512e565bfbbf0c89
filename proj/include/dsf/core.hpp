#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dsf {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

/// Failure categories surfaced by the library. Every operation that can fail
/// throws dsf::Error carrying one of these.
enum class ErrorKind {
  Domain,             // argument outside the domain of the operation
  Singular,           // division by a vanishing factor on a grid or a path
  NotAGenerator,      // Berkson-Porta positivity violated
  IntegrationFailure, // ODE state escaped the invariant set
  Inconsistency,      // cross-check between two routes failed
  Lookup,             // unknown gallery id / builtin name
  Misuse,             // operation called on the wrong kind of object
  InversionFailure,   // Newton stagnation
  Ambiguity,          // two-sided boundary point without a side flag
  TheoremD,           // fixed-point status changed with t
  Parse,              // malformed model spec / CLI argument
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline cplx unit(double angle) { return std::polar(1.0, angle); }

inline void require_in_disk(cplx z, std::string_view where) {
  if (!(std::abs(z) < 1.0))
    throw Error(ErrorKind::Domain,
                std::string(where) + ": point must satisfy |z| < 1");
}

inline void require_right_half_plane(cplx z, std::string_view where) {
  if (!(z.real() > 0.0))
    throw Error(ErrorKind::Domain,
                std::string(where) + ": point must satisfy Re z > 0");
}

/// Parses "0.5+0i", "-0.3-0.2i", "1e-3i", "2", "i", "-i".
cplx parse_complex(std::string_view text);

/// Shortest round-trip decimal form; "-0" is printed as "0".
std::string format_double(double x);

}  // namespace dsf
