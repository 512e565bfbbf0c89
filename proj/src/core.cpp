#include "dsf/core.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace dsf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::NotAGenerator: return "not-a-generator";
    case ErrorKind::IntegrationFailure: return "integration-failure";
    case ErrorKind::Inconsistency: return "inconsistency";
    case ErrorKind::Lookup: return "lookup";
    case ErrorKind::Misuse: return "misuse";
    case ErrorKind::InversionFailure: return "inversion-failure";
    case ErrorKind::Ambiguity: return "ambiguity";
    case ErrorKind::TheoremD: return "fixed-point-status-varies-with-t";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

// Reads a signed real number starting at pos; returns false if none.
bool read_real(std::string_view s, std::size_t& pos, double& out) {
  const char* begin = s.data() + pos;
  const char* end = s.data() + s.size();
  // from_chars does not accept a leading '+'.
  bool plus = false;
  if (begin != end && *begin == '+') {
    plus = true;
    ++begin;
  }
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr == begin) return false;
  if (plus && begin != end && *begin == '-') return false;
  pos = static_cast<std::size_t>(ptr - s.data());
  return true;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&]() -> cplx {
    throw Error(ErrorKind::Parse,
                "cannot parse complex number '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();

  double re = 0.0, im = 0.0;
  std::size_t pos = 0;
  bool have_re = false, have_im = false;
  while (pos < s.size()) {
    std::size_t start = pos;
    double value = 0.0;
    if (read_real(s, pos, value)) {
      if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j')) {
        if (have_im) return fail();
        im = value;
        have_im = true;
        ++pos;
      } else {
        if (have_re) return fail();
        re = value;
        have_re = true;
      }
    } else {
      // bare "i", "+i", "-i"
      double sign = 1.0;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1.0 : 1.0;
        ++pos;
      }
      if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j') && !have_im) {
        im = sign;
        have_im = true;
        ++pos;
      } else {
        return fail();
      }
    }
    if (pos == start) return fail();
  }
  return {re, im};
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

}  // namespace dsf
