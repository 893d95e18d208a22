#pragma once

// Command-line driver.  Subcommands:
//
//   bound        closed-form h_f(Phi, q, n) with its certificate decomposition
//   certify      end-to-end certificate: build U, check genericity, induce,
//                check irreducibility, count orbits, assert the bound
//   heis-verify  commutator formula, torus action and Heisenberg cross-checks
//   svn          Stone-von Neumann checks plus the character-table oracle
//   oracle       m_f by exact character table vs h_f
//   selftest     quick structural smoke across small instances
//
// Exit codes: 0 pass, 1 check failure, 2 usage or constraint error.

#include <string>
#include <vector>

namespace chevrep::cli {

int run_cli(int argc, const char* const* argv);

// Convenience wrapper: args without the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace chevrep::cli
