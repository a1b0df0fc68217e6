#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyltrunc/caps.hpp"
#include "weyltrunc/orders.hpp"
#include "weyltrunc/root_system.hpp"

namespace weyltrunc::cli {

enum class Command { Describe, Truncate, Verify, Poset, Explore };
enum class Emit { Json, Dot, Csv };
enum class PosetSet { Lambda, LambdaPY, Gamma };

/// Inclusive integer range; a single value has lo == hi.
struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

struct RunConfig {
  Command command = Command::Describe;
  RootSystemSpec spec;
  int max_rank = kDefaultRankCap;
  std::string p_text;                  // "7", "5,7,11" or "5..13" (explore only for the last two)
  IntRange m;
  std::optional<OrderTag> order;       // per-command default when unset
  ExcellentReading reading = ExcellentReading::SameOrbit;
  Emit emit = Emit::Json;
  PosetSet set = PosetSet::Lambda;
  bool allow_small_p = false;
  bool strict = false;                 // verify: assert the informational checks too
  bool timing = false;
  Caps caps;
};

struct Outcome {
  int exit_code = 0;
  std::string output;
  std::vector<std::string> warnings;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// "3" or "1..3"; rejects anything else, including reals, with ConfigError.
IntRange parse_int_range(const std::string& text, const std::string& what);
/// A single integer, a comma list, or a range a..b (primes in [a, b]).
std::vector<std::int64_t> parse_p_values(const std::string& text, bool allow_list);
Emit parse_emit(const std::string& text);
PosetSet parse_set(const std::string& text);
RootSystemSpec parse_type(const std::string& letter, int rank);

/// Runs one command. Throws the library's error types; the caller maps them
/// to exit codes.
Outcome run(const RunConfig& cfg);

/// Graphviz digraph of the cover relation, edges pointing upward.
std::string hasse_dot(const std::string& name, const std::vector<Weight>& nodes,
                      const std::vector<std::pair<std::size_t, std::size_t>>& covers);

}  // namespace weyltrunc::cli
