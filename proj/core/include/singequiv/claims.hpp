#pragma once

#include <string>
#include <vector>

namespace singequiv {

enum class ClaimKind { Exact, Evidence };
std::string to_string(ClaimKind k);

// EVIDENCE claims are bounded computations consistent with a statement that
// cannot be decided by finite search; they never certify it.
struct Claim {
  std::string id;
  std::string statement;
  ClaimKind kind = ClaimKind::Exact;
  bool passed = false;
  std::string observed;
  std::string note;
};

struct ExampleReport {
  std::string fixture;
  int r = 0;  // e33 only
  std::vector<Claim> claims;
  bool all_passed() const;
};

// Fixture ids: dual, a2, e31, e32, e33 (r >= 2).
ExampleReport verify_example(const std::string& id, int r = 2);

}  // namespace singequiv
