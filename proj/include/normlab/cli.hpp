#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "normlab/clutter.hpp"
#include "normlab/core.hpp"

namespace normlab::cli {

enum class Command { Closure, Normal, Indices, Hilbert, Sally, Clutter, ColonVerify };

std::string to_string(Command c);
/// Throws InputError for an unknown name.
Command parse_command(const std::string& name);

inline constexpr std::int64_t kMaxPower = 10;
inline constexpr std::int64_t kMaxTableLength = 25;
inline constexpr std::size_t kMaxDimension = 8;
inline constexpr std::uint64_t kDefaultSeed = 1;

struct JobSpec {
  Command command = Command::Closure;
  std::string input;
  std::optional<std::int64_t> power;
  std::optional<std::int64_t> table_length;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool oracle = false;
  bool banner = true;
};

/// Throws InputError when an option is outside its documented range.
void validate(const JobSpec& job);

struct ParsedInput {
  MonomialIdeal ideal;
  std::optional<Clutter> clutter;
  std::vector<std::string> warnings;
};

/// Parses an ideal or clutter description. Throws ParseError (with line or
/// field context), DimensionMismatch or InputError.
ParsedInput parse_input_text(const std::string& text, const std::string& source = "<input>");
ParsedInput parse_input_file(const std::string& path);

/// "x1*x2^3" over `ring`; "1" is the unit monomial.
ExponentVector parse_monomial(const RingDescriptor& ring, const std::string& text);

/// Runs a job, writing the report to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 on input errors, 2 on a falsification alert.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Command-line entry point.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace normlab::cli
