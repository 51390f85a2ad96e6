#ifndef LEXCONTRAST_CLI_H_
#define LEXCONTRAST_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lexcontrast {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Everything a run depends on. Populated from an optional key=value config
// file and command-line flags (flags win).
struct RunConfig {
  std::string thesaurus;
  bool affix = true;
  std::vector<int> patterns;  // empty: all fifteen
  std::vector<std::string> seed_lists;
  std::string adjacency = "heuristic";  // off | heuristic | manual
  std::string adjacency_file;
  std::string counts;
  std::string corpus;
  int window = 5;
  uint64_t rng_seed = 0;
  std::string fallback = "refrain";  // refrain | random | predominant
  std::string output = "-";
  std::string metrics = "-";

  std::string questions;
  std::string pairs;
  std::string dt;
  std::string opposites;
  std::string targets;
  std::vector<std::string> sets;  // name=path
  std::vector<std::string> tiers = {"I", "II"};
  std::string gloss_scope = "paragraph";
  std::string baseline = "none";  // none | random | seed-lookup
  int trials = 10000;
};

// Runs the tool. `out` receives anything written to "-", `err` receives
// diagnostics. Returns one of the exit codes above.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace lexcontrast

#endif  // LEXCONTRAST_CLI_H_
