#pragma once

// Shared helpers for the test suite: deterministic random functions and a
// tiny process runner for exercising the command-line tool.

#include <array>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

#include "bfca/truth_table.hpp"

namespace testsupport {

inline bfca::TruthTable random_table(std::mt19937_64& rng, int arity) {
  bfca::TruthTable t = bfca::TruthTable::zero(arity);
  const std::uint32_t size = 1u << arity;
  for (std::uint32_t x = 0; x < size; ++x)
    if (rng() & 1) t.set_bit(x, true);
  return t;
}

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout only
};

inline RunResult run_command(const std::string& command) {
  RunResult r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

} // namespace testsupport
