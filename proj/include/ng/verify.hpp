#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ng/group.hpp"
#include "ng/nilgraph.hpp"

namespace ng {

struct Check {
  std::string name;
  std::string ref;  // the statement being verified, in plain words
  std::string status;  // "pass" | "fail" | "skipped"
  nlohmann::json expected;
  nlohmann::json actual;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  long elapsed_ms = 0;

  bool all_passed() const;
  void add(const std::string& name, const std::string& ref, bool ok,
           nlohmann::json expected, nlohmann::json actual);
  void skip(const std::string& name, const std::string& ref,
            const std::string& reason);
  void merge(const VerificationReport& other);
  nlohmann::ordered_json to_json() const;
  std::string summary() const;  // one line per check
};

struct VerifyOptions {
  int workers = 1;
  int clique_budget = kDefaultCliqueBudget;
  std::size_t max_order = kDefaultMaxOrder;
  // Oracle cross-check: exhaustive pair coverage up to this group order,
  // then this many seeded random pairs.
  std::size_t oracle_exhaustive_limit = 200;
  int oracle_samples = 10000;
  // Degree-formula recomputation: exhaustive up to this order, sampled above.
  std::size_t degree_exhaustive_limit = 1000;
  int degree_samples = 300;
};

// kappa(D_n): n odd -> n+1; n = 2^k m with odd m >= 3 -> m+1. Throws for
// n < 3 and for powers of two (the group is nilpotent, graph undefined).
int predict_kappa_dihedral(int n);

// kappa(PSL(2,q)): fixed small values for q in {2,3,5}, the residue-class
// formula otherwise. Throws if q is not a prime power.
long predict_kappa_psl2(long q);

// True iff n or n-1 is prime; n >= 3.
bool predict_sn_disconnected(int n);

VerificationReport verify_group(const PermGroup& g, const std::string& subject,
                                const VerifyOptions& opts = {});

VerificationReport verify_product(const PermGroup& g, const PermGroup& h,
                                  const std::string& subject,
                                  const VerifyOptions& opts = {});

VerificationReport verify_quotient_iso(const PermGroup& g,
                                       const std::string& subject,
                                       const VerifyOptions& opts = {});

VerificationReport verify_family_dihedral(int n_max,
                                          const VerifyOptions& opts = {});
VerificationReport verify_family_psl2(long q_max,
                                      const VerifyOptions& opts = {});
VerificationReport verify_family_symmetric(int n_max, bool stretch,
                                           const VerifyOptions& opts = {});

}  // namespace ng
