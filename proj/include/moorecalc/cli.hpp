#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "moorecalc/fga.hpp"

namespace moorecalc::cli {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

// expr := term ('+' term)* | '0'
// term := 'Z' ('^' k)? | 'Z/' n ('^' k)? | '(' 'Z/' n ')' '^' k
// with n >= 2 and k >= 1. Whitespace between tokens is ignored; the result is
// in canonical form.
AbelianGroup parse_group(std::string_view text);

// "Z^2 + Z/4 + Z/24", or "0"; the unicode form uses the double-struck Z and
// the circled plus.
std::string format_group(const AbelianGroup& g, bool unicode = false);

struct StemsOptions {
  bool json = false;
  bool unicode = false;
  std::optional<long> degree;
};

std::string render_stems(const AbelianGroup& a, const StemsOptions& options);
std::string render_maps(const AbelianGroup& a, const AbelianGroup& b, bool json, bool unicode);
std::string render_couple(const AbelianGroup& a, bool json);

struct Rendered {
  int exit_code = 0;
  std::string text;
};

// Reads, validates and normalizes a couple file's contents.
Rendered render_normalize(const std::string& file_text, bool json, bool unicode);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMath = 2;

// The whole command line: stems, maps, couple, normalize, check.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moorecalc::cli
