#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/fat_points.hpp"
#include "homlab/plane_type.hpp"

namespace homlab {

struct SessionConfig {
  std::uint32_t prime = 32003;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  int degree_cap = 12;
  int parallelism = 1;

  void validate() const;
};

enum class Verdict { confirmed, falsified, skipped };
std::string to_string(Verdict v);

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool ok = false;
};

/// One verification record per (claim, type, seed); the optional fields are
/// populated by the net-based claims.
struct ClaimOutcome {
  std::string claim;
  std::string type_literal;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;

  std::optional<int> s;
  std::vector<std::pair<int, int>> n;
  std::vector<std::pair<int, int>> syz;
  std::optional<bool> saturated;
  std::vector<std::pair<int, int>> gap;
  std::optional<int> linear_block_dim;
  std::optional<bool> theorem48;
  std::optional<bool> prop49;

  std::vector<Check> checks;
  Verdict verdict = Verdict::skipped;
  std::string note;
};

struct ClaimOptions {
  std::optional<std::string> type_literal;  // restricts type-parametrized claims
  std::optional<int> s;                     // restricts the degree-parameter claims
};

/// Frozen claim identifiers (documented in docs/claims.md).
const std::vector<std::string>& claim_ids();
bool is_claim_id(const std::string& id);

std::vector<ClaimOutcome> run_claim(const std::string& id, const SessionConfig& cfg,
                                    const ClaimOptions& opts = {});
/// Every claim, merged and sorted by (claim, type, seed); uses a work pool of
/// cfg.parallelism workers.
std::vector<ClaimOutcome> run_all_claims(const SessionConfig& cfg);

// ---------------------------------------------------------------------------
// scheme literals ("p=32003 seed=7 type=5;2^6 pin=false", or mults=4^2,1^10)

struct SchemeSpec {
  std::optional<std::uint32_t> prime;
  std::uint64_t seed = 1;
  bool pin = false;
  std::optional<PlaneType> type;
  std::optional<MultiplicitySet> mults;
};

SchemeSpec parse_scheme_literal(const std::string& literal);
FatScheme realize_scheme(const SchemeSpec& spec, std::uint32_t default_p);

// ---------------------------------------------------------------------------
// exploratory tabulation (no assertions)

struct Q41Row {
  std::string type;
  int degree = 0;
  int mu1 = 0;
  int half_degree = 0;
  std::vector<bool> saturated_by_seed;
  bool consistent = true;
};

std::vector<Q41Row> experiment_q41(int degree_lo, int degree_hi, const SessionConfig& cfg);

}  // namespace homlab
