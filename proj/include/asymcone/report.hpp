#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymcone/charcycle.hpp"
#include "asymcone/oracle.hpp"

namespace asymcone::report {

using Json = nlohmann::ordered_json;

// All reports use a fixed key order and render big integers as decimal
// strings, so serialized output is byte-stable and exact.

Json lattice_json(const IntersectionPoset& p);
Json charpoly_json(const IntersectionPoset& p);
Json euler_json(const IntersectionPoset& p);
Json cc_json(const IntersectionPoset& p);
Json rank_json(const IntersectionPoset& p);

std::string lattice_text(const Json& doc);
std::string charpoly_text(const Json& doc);
std::string euler_text(const Json& doc);
std::string cc_text(const Json& doc);
std::string rank_text(const Json& doc);

struct VerifyOptions {
  std::vector<std::int64_t> primes{5, 7, 11};
  Int budget = oracle::kDefaultPointBudget;
  std::size_t flat_cap = kDefaultFlatCap;
  // Test hook: perturbs the stratum codimension used by the residual
  // recomputation, so a deliberate fault trips the exit-4 path.
  int fault_c_offset = 0;
};

struct VerifyOutcome {
  Json doc;
  bool ok = false;
  bool had_warnings = false;
};

// Runs every oracle cross-check that fits the budget: finite-field counts
// against the characteristic polynomial, the brute-force multiplicity
// system, slice-independence of the decone characteristic, and the
// alternating-sum residual at every localization.
VerifyOutcome run_verify(const Arrangement& a, const VerifyOptions& opt);

std::string verify_text(const Json& doc);

}  // namespace asymcone::report
