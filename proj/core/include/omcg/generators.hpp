#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "omcg/sign_vector.hpp"

namespace omcg {

/// Integer vector configuration: r coordinate rows, n columns. All sign
/// decisions downstream are made in exact arithmetic.
struct VectorConfiguration {
    std::size_t rank = 0; // number of coordinate rows
    std::vector<std::vector<long long>> columns;

    std::size_t n() const { return columns.size(); }

    /// Text format: one row per line, integers whitespace-separated.
    static VectorConfiguration parse(std::string_view text);
    static VectorConfiguration read(std::istream& in);
};

/// Cocircuits of the realizable oriented matroid of the configuration: for
/// every (r-1)-subset of columns spanning a hyperplane, a nonzero integer
/// normal signs the columns; both the vector and its negation are emitted.
/// Hyperplanes are deduplicated by canonical normal (gcd-reduced, first
/// nonzero coordinate positive). The output is verified to satisfy (C0)-(C3).
/// Throws InvalidArgumentError on rank mismatch or a zero column.
SignSystem from_matrix(const VectorConfiguration& m);

/// Ranks 2 uniform family on n pairwise-independent plane vectors (1,k),
/// k = 0..n-1: 2n cocircuits whose cocircuit graph is a 2n-cycle.
SignSystem u2n(std::size_t n);

/// Moment-curve (Vandermonde) uniform family: columns (1, t, ..., t^{r-1})
/// for t = 1..n. Every zero-support has size exactly r-1 and there are
/// 2*C(n, r-1) cocircuits. Requires 2 <= r <= n <= 10.
SignSystem cyclic(std::size_t r, std::size_t n);

enum class MutationKind { DropPair, FlipEntry, AddRandom };

/// Seeded near-miss mutations. DropPair removes a random antipodal pair,
/// FlipEntry changes one entry of X and -X symmetrically, AddRandom inserts
/// a fresh random antipodal pair. The result is not filtered for (C3);
/// callers re-check (C0)-(C2) and discard mutants failing them.
SignSystem mutate(const SignSystem& s, MutationKind kind, std::uint64_t seed);

/// Rejection-samples `pairs` antipodal pairs of nonzero vectors on n elements
/// until (C0)-(C2) hold. Deterministic given the seed. Requires n <= 12 and
/// pairs <= 200; throws ResourceError when the sampling budget is exhausted.
SignSystem random_c0c2(std::size_t n, std::size_t pairs, std::uint64_t seed);

} // namespace omcg
