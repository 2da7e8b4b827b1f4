#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atl/numerics.hpp"

namespace atl::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAudit = 1;  // strict audit failure or torus-det mismatch
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

// "x,y" -> x + iy. Throws DomainError on malformed text or y <= 0.
UpperHalfPoint parse_tau(std::string_view text);

// Default precision with rel_tol taken from `env_value` (the ATL_PRECISION variable)
// when present. Throws DomainError if the value is not a positive number.
Precision precision_from_env(const char* env_value);

// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atl::cli
