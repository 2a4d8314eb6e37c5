#pragma once

// Subcommands of the weylarr executable. Each command writes its complete
// result to the given stream only after every computation has finished, so
// a failing run leaves no partial output behind.

#include "weylarr/counting.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace weylarr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagreement = 3;
inline constexpr int kExitIo = 4;

enum class Method { enumerate, recurrence, series, closed_form, oracle, all };
enum class Format { text, json, csv, dot };

/// Invalid arguments discovered after parsing (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string target;  // enumerate: chambers, faces or flats
  CountKind kind = CountKind::faces;
  int n = 0;
  std::optional<int> k;
  Method method = Method::recurrence;
  std::optional<Format> format;  // unset: the command's default
  std::string out;               // empty: standard output
  int oracle_cap_cells = 4;
  int oracle_cap_flats = 6;
  unsigned threads = 1;
  bool timing = false;
  std::uint64_t max_records = 1000000;
  bool oracle = false;
  bool non_simply_laced = false;
  std::optional<int> verify_n;
  std::string errata_path;
};

/// Largest n accepted by the enumeration method of `count`.
inline constexpr int kCountEnumerateMax = 12;
/// Largest n accepted by `graph`.
inline constexpr int kGraphMax = 12;
/// Largest n accepted by the counting methods.
inline constexpr int kCountMax = 400;

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_graph(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line (flags, then WEYLARR_* environment variables) and
/// dispatches. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string to_string(Method method);

}  // namespace weylarr::cli
