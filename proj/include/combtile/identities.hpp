#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "combtile/board.hpp"
#include "combtile/integer.hpp"

namespace combtile {

// Identities are data: each descriptor carries exact evaluators for both
// sides, so the verifier and the CLI can list, select and report uniformly.

enum class Variant { as_stated, corrected };
std::string_view variant_name(Variant v);

enum class CheckMode { statement, cross_check };

struct Counterexample {
  long long n = 0;
  std::optional<int> j;
  Int lhs;
  Int rhs;
};

struct VerificationReport {
  std::string id;
  Variant variant = Variant::as_stated;
  CheckMode mode = CheckMode::statement;
  long long n_min = 0;
  long long n_max = 0;  // for cross-checks: the board-length bound
  std::vector<int> j_values;
  bool pass = false;
  std::optional<Counterexample> first_counterexample;
  std::chrono::microseconds elapsed{0};
};

struct IdentityDescriptor {
  std::string id;
  std::string statement;
  long long n_min = 0;
  std::vector<int> j_values;  // empty when the identity has no j parameter
  bool has_corrected = false;
  std::function<Int(long long n, int j)> lhs;
  std::function<Int(long long n, int j, Variant v)> rhs;

  // Cross-check wiring, present for identities that count one family of
  // tilings two ways: the family's board length, the complementary count
  // subtracted from both sides, and the membership predicate.
  bool cross_checkable = false;
  std::function<long long(long long n, int j)> board_length;
  std::function<Int(long long n, int j)> offset;
  std::function<bool(int cells, std::span<const TilePlacement>)> predicate;
};

const std::vector<IdentityDescriptor>& registry();
const IdentityDescriptor* find_identity(std::string_view id);

// Compares lhs and rhs exactly over [n_min, n_max] x j_values (j outer, n
// inner) and stops at the first counterexample. Requesting the corrected
// variant of an identity that has none runs its only (as-stated) form.
// Throws std::invalid_argument for an unknown id.
VerificationReport verify(std::string_view id, Variant variant, long long n_max);

// Re-derives the combinatorial quantity the identity's proof counts (by
// exhaustive enumeration with the descriptor's predicate, over every board
// of length <= board_max reachable from the parameter domain) and checks it
// against both lhs - offset and rhs - offset. The rhs uses the corrected
// variant where one exists. Refuses board_max beyond the enumeration cap.
VerificationReport cross_check(std::string_view id, int board_max,
                               int cap = kDefaultEnumerationCap);

}  // namespace combtile
