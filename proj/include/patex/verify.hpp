#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace patex {

struct CheckInstance {
    std::string parameters;
    bool pass = true;
    std::string detail;
    /// File name -> contents; enough to replay a failure (pattern, witness, seed).
    std::map<std::string, std::string> payload;
};

struct CheckResult {
    std::string claim;
    std::string parameter_range;
    std::vector<CheckInstance> instances;

    bool passed() const;
    std::size_t failures() const;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string to_text() const;
    std::string to_json() const;
};

struct VerifyConfig {
    /// Largest n for the exact-solver comparisons.
    int budget = 4;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    int density_n = 8;
    int density_trials = 100;
};

/// Claim identifiers accepted by run_verification, in report order.
const std::vector<std::string>& known_claims();

/// Runs the named claims (all of them when `claims` is empty); unknown names raise InputError.
VerificationReport run_verification(const std::vector<std::string>& claims, const VerifyConfig& cfg);

// Individual checks.

/// gex(Q, n) <= ex(P, n) for every P of shape <= 3x3, weight <= 3, with a 1-entry at (k1, 1); Q is P's associated graph.
CheckResult check_doubling_upper_bound(const VerifyConfig& cfg);

/// Blow-ups of extremal bipartite avoiders have (t-1) ex(P, n) edges and avoid Q.
CheckResult check_blowup_lower_bound(const VerifyConfig& cfg);

/// Every 2-uniform avoider of a boundary-condition H on [n] has at most f(P, 2, n) edges.
CheckResult check_uniform_edge_bound(const VerifyConfig& cfg);

/// cyclic_pad and two chain steps over every d-permutation matrix, d in {2, 3}, k <= 3.
CheckResult check_cyclic_pad_chain(const VerifyConfig& cfg);

/// |M(H, tn)| <= (2^t - 1)^ex_i(H, n) |M(H, n)| for H = the single edge {1,2}, n in {1, 2}, t = 2.
CheckResult check_avoider_count_recurrence(const VerifyConfig& cfg);

/// The same inequality for the two 2-permutation hypergraphs of length 2. Fails at n = 1 and n = 2:
/// several edges of G may contract to one edge, so a contracted hypergraph has more preimages than the bound allows.
CheckResult check_avoider_count_recurrence_permutation(const VerifyConfig& cfg);

/// Interval contraction of an avoider on [tn] avoids H (exhaustive over small instances).
CheckResult check_contraction_avoidance(const VerifyConfig& cfg);

/// Deletion-repair avoiders for the 2x2 all-ones pattern: every output avoids it, mean weight >= 0.9 x expectation.
CheckResult check_deletion_density(const VerifyConfig& cfg);

/// Hypergraph containment agrees with associated-matrix containment for every d = 2 host with parts of size <= 3.
CheckResult check_partite_equivalence(const VerifyConfig& cfg);

/// ex_i(H, n) <= (2kd - 1)(k - 1) ex_e(H, n) for 2-permutation hypergraphs of length 2 and 3.
CheckResult check_weight_edge_ratio(const VerifyConfig& cfg);

}  // namespace patex
