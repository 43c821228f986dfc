#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omcg/axioms.hpp"
#include "omcg/graphs.hpp"
#include "omcg/lattice.hpp"

namespace omcg {

/// A check's hypothesis does not hold for the input: (C0)-(C2) fail, (C3)
/// fails where an oriented matroid is required, or the system is not uniform.
class HypothesisError : public Error {
public:
    HypothesisError(AxiomViolation v, const GroundSet& ground)
        : Error("hypothesis not met: " + v.describe(ground)), violation_(std::move(v)) {}

    explicit HypothesisError(const std::string& message)
        : Error("hypothesis not met: " + message) {}

    const std::optional<AxiomViolation>& violation() const { return violation_; }

private:
    std::optional<AxiomViolation> violation_;
};

/// Tuple-enumeration policy for the hull-quantified checks. All subsets are
/// enumerated when |C*| <= exhaustive_cap; otherwise all pairs plus a seeded
/// random sample of larger subsets. Hulls are deduplicated by signature.
struct EnumerationPolicy {
    std::size_t exhaustive_cap = 16;
    std::size_t sample_count = 1000;
    std::size_t max_sample_size = 10;
    std::uint64_t seed = 0;
};

struct PairWitness {
    SignVector x, y;
};

/// Result of the crabbed-path condition: pass, or the canonically first pair
/// with no crabbed path.
struct ConditionVerdict {
    bool pass = true;
    std::optional<PairWitness> counterexample;
};

/// One deduplicated crabbed hull with its connectivity and target.
struct HullRecord {
    std::vector<std::size_t> generators; // member indices of the defining tuple
    HullSignature signature;
    std::size_t hull_size = 0;
    int kappa = 0;
    int target = 0; // h(composition) - 1
    bool ok = true;
};

struct ConditionIIResult {
    bool pass = true;
    std::vector<HullRecord> hulls;
    std::size_t tuples_enumerated = 0;
    std::optional<std::size_t> first_failure; // index into hulls
};

struct EquivalenceReport {
    Verdict verdict_i;
    ConditionIIResult verdict_ii;
    ConditionVerdict verdict_iii;
    bool agree = true;         // (i) pass <=> (iii) pass
    bool i_implies_ii = true;  // (i) pass => (ii) pass
    std::uint64_t cost_naive = 0;
    std::uint64_t cost_graph = 0;
};

/// Theorem condition (iii): every pair X != ±Y admits a crabbed (X,Y)-path in
/// the cocircuit graph. Per-pair hull-restricted BFS in canonical pair order;
/// `cost` accumulates BFS edge relaxations plus hull-membership tests over
/// the pairs up to and including the first failing one. `jobs` > 1 evaluates
/// pairs concurrently with a deterministic index-ordered reduction, so the
/// verdict and cost are identical for every job count.
/// Throws HypothesisError when (C0)-(C2) fail.
ConditionVerdict check_condition_iii(const SignSystem& s, const Budget& budget = {},
                                     std::uint64_t* cost = nullptr, unsigned jobs = 1);

/// Theorem condition (ii) in its provable direction: every enumerated crabbed
/// hull [X1..Xk] has κ >= h(X1∘...∘Xk) - 1.
ConditionIIResult check_condition_ii(const SignSystem& s, const EnumerationPolicy& policy = {},
                                     const Budget& budget = {});

/// Runs (i), (iii) and (ii) on one lattice and reports agreement plus both
/// cost counters.
EquivalenceReport equivalence_harness(const SignSystem& s, const EnumerationPolicy& policy = {},
                                      const Budget& budget = {}, unsigned jobs = 1);

struct LemmaResult {
    bool pass = true;
    std::vector<SignVector> witness;
    std::string note;
};

/// Crabbed tope paths: for every tope pair there is a crabbed path in the
/// tope graph. Requires a system passing (C0)-(C3).
LemmaResult lemma31_check(const SignSystem& s, const Budget& budget = {});

/// Every tope subgraph G(U) of the cocircuit graph is (r-1)-connected.
LemmaResult lemma32_check(const SignSystem& s, const Budget& budget = {});

/// True when the lattice is graded and every member's zero-support has size
/// exactly rank-1 (general position).
bool is_uniform(const SignSystem& s, const FaceLattice& lattice);

struct NeighborCheckResult {
    bool pass = true;
    std::vector<SignVector> tuple;
    std::optional<SignVector> generator;
    int degree = 0;
    int target = 0;
};

/// Degree version of the hull-connectivity bound on uniform systems: for each
/// enumerated tuple and each of its generators, the generator's degree inside
/// the hull must equal h(composition) - 1. Requires a uniform system passing
/// (C0)-(C3).
NeighborCheckResult uniform_neighbor_check(const SignSystem& s,
                                           const EnumerationPolicy& policy = {},
                                           const Budget& budget = {});

/// Instrumented comparison of the naive (C3) check against the graph route.
struct CostReport {
    std::size_t cocircuits = 0;
    std::size_t edges = 0;
    std::uint64_t cost_naive = 0;
    std::uint64_t cost_graph = 0;
    double naive_ms = 0.0;
    double graph_ms = 0.0;
    bool naive_pass = true;
    bool graph_pass = true;
};

CostReport cost_comparison(const SignSystem& s, const Budget& budget = {});

} // namespace omcg
