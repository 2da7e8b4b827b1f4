#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "atl/numerics.hpp"

// Registry of the published numeric assertions, each recomputed by the library
// and classified. Status semantics:
//   CONFIRMED  |delta| within the claim's tolerance, or the predicate holds on the whole sweep
//   DISCREPANT recomputation disagrees
//   ASSUMED    externally cited input that cannot be recomputed here
//   AMBIGUOUS  the outcome depends on an unresolved reading of the source
//   ERRORED    a numeric kernel threw while evaluating the claim
namespace atl {

enum class ClaimKind { equality, inequality, sweep, ambiguous };
enum class ClaimStatus { confirmed, discrepant, assumed, ambiguous, errored };

// Real value, free-form description, or absent.
using ClaimValue = std::variant<std::monostate, double, std::string>;

struct ClaimRecord {
  std::string id;
  std::string location;
  std::string quote;
  ClaimKind kind = ClaimKind::equality;
  ClaimValue claimed;
  ClaimValue computed;
  std::optional<double> delta;
  ClaimStatus status = ClaimStatus::errored;
  std::string note;

  friend bool operator==(const ClaimRecord&, const ClaimRecord&) = default;
};

struct ClaimOutcome {
  ClaimValue computed;
  std::optional<double> delta;
  ClaimStatus status = ClaimStatus::errored;
  std::string note;
};

struct Claim {
  std::string id;
  std::string location;
  std::string quote;
  ClaimKind kind = ClaimKind::equality;
  ClaimValue claimed;
  std::function<ClaimOutcome(const Precision&)> check;
};

struct ClaimSummary {
  int confirmed = 0;
  int discrepant = 0;
  int assumed = 0;
  int ambiguous = 0;
  int errored = 0;

  friend bool operator==(const ClaimSummary&, const ClaimSummary&) = default;
};

struct ClaimReport {
  Precision precision;
  std::vector<ClaimRecord> records;
  ClaimSummary summary;
  std::vector<std::string> warnings;

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

// Ids (or "PREFIX*" patterns) of claims expected to come out DISCREPANT.
class Allowlist {
 public:
  Allowlist() = default;
  explicit Allowlist(std::vector<std::string> patterns) : patterns_(std::move(patterns)) {}

  // The list shipped in data/expected_discrepancies.json.
  static Allowlist builtin();
  // {"expected_discrepant": [...]}; throws std::invalid_argument on malformed input.
  static Allowlist parse(std::string_view json_text);

  bool contains(std::string_view id) const;
  const std::vector<std::string>& patterns() const { return patterns_; }

 private:
  std::vector<std::string> patterns_;
};

const std::vector<Claim>& builtin_registry();
const Claim* find_claim(std::string_view id);

ClaimRecord evaluate(const Claim& claim, const Precision& prec = {});

// Evaluates every registered claim (or only `ids`, in registry order). Throws
// std::invalid_argument for an unknown id.
ClaimReport run_all(const Precision& prec = {}, const Allowlist& allowlist = Allowlist::builtin());
ClaimReport run_selected(std::span<const std::string> ids, const Precision& prec = {},
                         const Allowlist& allowlist = Allowlist::builtin());

// 1 if a claim outside the allowlist is DISCREPANT or any claim ERRORED, else 0.
int strict_exit_code(const ClaimReport& report, const Allowlist& allowlist);

std::string to_string(ClaimKind kind);
std::string to_string(ClaimStatus status);
ClaimKind claim_kind_from_string(std::string_view s);
ClaimStatus claim_status_from_string(std::string_view s);

}  // namespace atl
