#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "omcg/axioms.hpp"
#include "omcg/sign_vector.hpp"

namespace omcg {

/// Budgets for the composition closure, which is worst-case exponential.
/// A zero time limit disables the wall-clock check.
struct Budget {
    std::size_t max_covectors = 200'000;
    std::chrono::milliseconds time_limit{0};
};

/// Least set containing the zero vector and S, closed under composition.
/// Throws ResourceError when a budget is exceeded.
SignSystem closure(const SignSystem& s, const Budget& budget = {});

/// The composition closure L(S) ordered conformally, with an implicit global
/// maximum 1̂ on top. Height is the longest-chain length from the zero vector;
/// on graded lattices it coincides with the rank function h.
class FaceLattice {
public:
    const SignSystem& base() const { return base_; }
    const SignSystem& covectors() const { return covectors_; }
    std::size_t size() const { return covectors_.size(); }

    int height(std::size_t covector_index) const { return heights_[covector_index]; }
    /// Height of 1̂: one more than the tallest covector.
    int top_rank() const { return top_rank_; }
    bool graded() const { return graded_; }
    /// r(M) = h(1̂) - 1. Throws NotGradedError when no rank function exists.
    int rank() const;

    std::optional<std::size_t> index_of(const SignVector& v) const {
        return covectors_.index_of(v);
    }

    /// Minimal nonzero covectors (indices into covectors(), canonical order).
    const std::vector<std::size_t>& atom_indices() const { return atoms_; }
    /// Maximal proper covectors, i.e. the topes (indices, canonical order).
    const std::vector<std::size_t>& coatom_indices() const { return coatoms_; }

    bool is_atom(std::size_t covector_index) const;
    bool is_coatom(std::size_t covector_index) const;

    /// Cover relations among covectors, as (lower, upper) index pairs in
    /// canonical order. Covers of 1̂ are exactly the coatoms.
    const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const {
        return hasse_;
    }

    /// Diagnostic: do pairwise meets and joins exist (including 1̂)? True for
    /// oriented matroids; not assumed for arbitrary candidate systems.
    bool is_lattice() const;

    friend FaceLattice build_lattice(const SignSystem&, const Budget&);

private:
    FaceLattice() : base_(SignSystem::empty(GroundSet::with_labels({}))),
                    covectors_(base_) {}

    SignSystem base_;
    SignSystem covectors_;
    std::vector<int> heights_;
    std::vector<std::size_t> atoms_;
    std::vector<std::size_t> coatoms_;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_;
    int top_rank_ = 1;
    bool graded_ = true;
};

FaceLattice build_lattice(const SignSystem& s, const Budget& budget = {});

/// Atoms as a system; coatoms as vectors.
SignSystem atoms(const FaceLattice& lattice);
std::vector<SignVector> topes(const FaceLattice& lattice);

/// Contraction S/A: members vanishing on A, restricted to E\A. The result
/// lives on a fresh densely re-indexed ground set with default labels;
/// `kept` records, per new element, the original index.
struct Contraction {
    SignSystem system;
    std::vector<std::size_t> kept;
};

Contraction contract(const SignSystem& s, ElementSet a);

/// r(M/U⁰) = h(U), both sides computed independently.
struct RankIdentityResult {
    bool pass = false;
    int contraction_rank = 0;
    int covector_height = 0;
};

/// Throws InvalidArgumentError when U is not a covector of closure(S).
RankIdentityResult contraction_rank_identity(const SignSystem& s, const SignVector& u,
                                             const Budget& budget = {});

} // namespace omcg
