#include "omcg/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace omcg {

namespace {

struct MaskPair {
    std::uint64_t pos, neg;
    bool operator==(const MaskPair&) const = default;
};

struct MaskPairHash {
    std::size_t operator()(const MaskPair& m) const {
        std::uint64_t h = m.pos * 0x9e3779b97f4a7c15ull;
        h ^= m.neg + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Y < X strictly, on raw masks.
bool strictly_below(const SignVector& y, const SignVector& x) {
    return !(y == x) && leq(y, x);
}

} // namespace

SignSystem closure(const SignSystem& s, const Budget& budget) {
    const auto start = std::chrono::steady_clock::now();
    auto check_time = [&] {
        if (budget.time_limit.count() <= 0) return;
        if (std::chrono::steady_clock::now() - start > budget.time_limit) {
            throw ResourceError("time", "closure exceeded the wall-clock budget of " +
                                            std::to_string(budget.time_limit.count()) + " ms");
        }
    };

    std::vector<SignVector> elems;
    std::unordered_set<MaskPair, MaskPairHash> seen;
    auto add = [&](const SignVector& v) {
        MaskPair key{v.positive_part().bits, v.negative_part().bits};
        if (!seen.insert(key).second) return false;
        if (seen.size() > budget.max_covectors) {
            throw ResourceError("covectors",
                                "closure exceeded the covector budget of " +
                                    std::to_string(budget.max_covectors));
        }
        elems.push_back(v);
        return true;
    };

    add(SignVector::zero(s.ground()));
    for (const SignVector& m : s.members()) add(m);

    // Fixed-point over binary composition; associativity makes this reach
    // every finite composition.
    std::size_t frontier_begin = 0;
    while (frontier_begin < elems.size()) {
        const std::size_t frontier_end = elems.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (std::size_t j = 0; j < elems.size(); ++j) {
                add(compose(elems[i], elems[j]));
                add(compose(elems[j], elems[i]));
            }
            check_time();
        }
        frontier_begin = frontier_end;
    }

    return SignSystem(s.ground(), std::move(elems));
}

FaceLattice build_lattice(const SignSystem& s, const Budget& budget) {
    FaceLattice lat;
    lat.base_ = s;
    lat.covectors_ = closure(s, budget);

    const std::size_t n = lat.covectors_.size();
    const auto& cov = lat.covectors_;

    // Topological order by support size: Y < X implies supp(Y) ⊊ supp(X)
    // or equal support with Y == X, so support count is monotone.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cov[a].support().count() < cov[b].support().count();
    });

    lat.heights_.assign(n, 0);
    for (std::size_t idx : order) {
        int h = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != idx && strictly_below(cov[j], cov[idx])) {
                h = std::max(h, lat.heights_[j] + 1);
            }
        }
        lat.heights_[idx] = h;
    }
    lat.top_rank_ = 1;
    for (std::size_t i = 0; i < n; ++i) lat.top_rank_ = std::max(lat.top_rank_, lat.heights_[i] + 1);

    lat.atoms_.clear();
    lat.coatoms_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (cov[i].is_zero()) continue;
        if (lat.heights_[i] == 1) lat.atoms_.push_back(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < n && maximal; ++j) {
            if (j != i && strictly_below(cov[i], cov[j])) maximal = false;
        }
        if (maximal) lat.coatoms_.push_back(i);
    }

    // Hasse edges: j is covered by i iff j < i and j is maximal in {k : k < i}.
    lat.hasse_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> below;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && strictly_below(cov[j], cov[i])) below.push_back(j);
        }
        for (std::size_t j : below) {
            bool covered = true;
            for (std::size_t k : below) {
                if (k != j && strictly_below(cov[j], cov[k])) {
                    covered = false;
                    break;
                }
            }
            if (covered) lat.hasse_.emplace_back(j, i);
        }
    }
    std::sort(lat.hasse_.begin(), lat.hasse_.end());

    // Graded iff every cover (including the covers of 1̂, i.e. the coatoms)
    // raises the longest-chain height by exactly one.
    lat.graded_ = true;
    for (auto [j, i] : lat.hasse_) {
        if (lat.heights_[i] != lat.heights_[j] + 1) {
            lat.graded_ = false;
            break;
        }
    }
    if (lat.graded_) {
        for (std::size_t c : lat.coatoms_) {
            if (lat.heights_[c] != lat.top_rank_ - 1) {
                lat.graded_ = false;
                break;
            }
        }
    }
    return lat;
}

int FaceLattice::rank() const {
    if (!graded_) throw NotGradedError("lattice is not graded; rank is undefined");
    return top_rank_ - 1;
}

bool FaceLattice::is_atom(std::size_t covector_index) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), covector_index);
}

bool FaceLattice::is_coatom(std::size_t covector_index) const {
    return std::binary_search(coatoms_.begin(), coatoms_.end(), covector_index);
}

bool FaceLattice::is_lattice() const {
    const std::size_t n = covectors_.size();
    const auto& cov = covectors_;
    // leq matrix; index n stands for 1̂.
    auto below = [&](std::size_t a, std::size_t b) {
        if (b == n) return true;
        if (a == n) return false;
        return leq(cov[a], cov[b]);
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            // join: the common upper bounds (1̂ is always one) need a least element
            std::vector<std::size_t> uppers;
            for (std::size_t c = 0; c <= n; ++c) {
                if (below(a, c) && below(b, c)) uppers.push_back(c);
            }
            bool join_ok = false;
            for (std::size_t u : uppers) {
                bool le_all = true;
                for (std::size_t v : uppers) {
                    if (!below(u, v)) { le_all = false; break; }
                }
                if (le_all) { join_ok = true; break; }
            }
            if (!join_ok) return false;
            // meet: the common lower bounds (zero is always one) need a greatest
            std::vector<std::size_t> lowers;
            for (std::size_t c = 0; c < n; ++c) {
                if (below(c, a) && below(c, b)) lowers.push_back(c);
            }
            bool meet_ok = false;
            for (std::size_t l : lowers) {
                bool ge_all = true;
                for (std::size_t m : lowers) {
                    if (!below(m, l)) { ge_all = false; break; }
                }
                if (ge_all) { meet_ok = true; break; }
            }
            if (!meet_ok) return false;
        }
    }
    return true;
}

SignSystem atoms(const FaceLattice& lattice) {
    std::vector<SignVector> out;
    out.reserve(lattice.atom_indices().size());
    for (std::size_t i : lattice.atom_indices()) out.push_back(lattice.covectors()[i]);
    return SignSystem(lattice.covectors().ground(), std::move(out));
}

std::vector<SignVector> topes(const FaceLattice& lattice) {
    std::vector<SignVector> out;
    out.reserve(lattice.coatom_indices().size());
    for (std::size_t i : lattice.coatom_indices()) out.push_back(lattice.covectors()[i]);
    return out;
}

Contraction contract(const SignSystem& s, ElementSet a) {
    const std::size_t n = s.ground()->size();
    if (!a.subset_of(ElementSet::full(n))) {
        throw InvalidArgumentError("contraction set references elements outside the ground set");
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.contains(i)) kept.push_back(i);
    }
    GroundPtr ground = GroundSet::of_size(kept.size());

    std::vector<SignVector> members;
    for (const SignVector& x : s.members()) {
        if (!(x.support() & a).empty()) continue; // must vanish on A
        ElementSet pos, neg;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (x.positive_part().contains(kept[j])) pos.bits |= std::uint64_t{1} << j;
            if (x.negative_part().contains(kept[j])) neg.bits |= std::uint64_t{1} << j;
        }
        members.emplace_back(ground, pos, neg);
    }
    return Contraction{SignSystem(std::move(ground), std::move(members)), std::move(kept)};
}

RankIdentityResult contraction_rank_identity(const SignSystem& s, const SignVector& u,
                                             const Budget& budget) {
    FaceLattice lat = build_lattice(s, budget);
    auto idx = lat.index_of(u);
    if (!idx) throw InvalidArgumentError("vector is not a covector of the system's closure");

    const Contraction minor = contract(s, u.zero_support());
    FaceLattice minor_lat = build_lattice(minor.system, budget);

    RankIdentityResult r;
    r.contraction_rank = minor_lat.rank();
    r.covector_height = lat.height(*idx);
    r.pass = r.contraction_rank == r.covector_height;
    return r;
}

} // namespace omcg
