// Subcommand bodies of the symdg CLI; argument parsing lives in tools/symdg.cpp.
#ifndef SYMDG_CLI_COMMANDS_HPP
#define SYMDG_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symdg/digraph.hpp"
#include "symdg/group.hpp"
#include "symdg/io.hpp"

namespace symdg::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::uint64_t enumeration_bound = kDefaultEnumerationBound;
  std::uint64_t max_arcs = kDefaultMaxArcs;
  std::size_t jobs = 1;
};

struct ConstructOptions {
  std::string family;
  std::size_t s = 2;
  std::size_t power = 1;
  std::string format = "json";
  std::string out;
  std::size_t dot_cap = kDefaultDotVertexCap;
};

struct VerifyCli {
  std::string scope = "all";
  std::vector<std::size_t> s_values{2, 3, 4, 5};
  std::size_t power = 2;
  std::string report;
  std::string format = "text";
  bool inject_fault = false;
  bool quiet = false;
};

/// Writes to stdout for an empty path or "-", otherwise atomically to the file.
void emit(std::string const &out, std::string const &content);

int run_construct(ConstructOptions const &opt, GlobalOptions const &global);
int run_verify(VerifyCli const &opt, GlobalOptions const &global);
int run_minpoly(std::string const &path);
int run_group(std::string const &path);
int run_inspect(std::string const &path);
int run_fixtures(std::string const &out);

} // namespace symdg::cli

#endif // SYMDG_CLI_COMMANDS_HPP
