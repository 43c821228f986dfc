#pragma once

// Shared instance corpus: hand-listed integer matrices with parallel,
// antiparallel, repeated and degenerate-position columns, plus builders for
// the generated families and the mutant/fuzz negatives.

#include <string>
#include <vector>

#include "omcg/axioms.hpp"
#include "omcg/generators.hpp"

namespace corpus {

struct HandMatrix {
    const char* name;
    const char* rows;
};

// Rank = number of rows; columns are the generated elements.
inline const std::vector<HandMatrix>& hand_matrices() {
    static const std::vector<HandMatrix> ms = {
        {"u23-identity-sum", "1 0 1\n0 1 1"},
        {"rank2-parallel-pair", "1 2 0 1\n0 0 1 1"},
        {"rank2-repeated-column", "1 1 0\n0 0 1"},
        {"rank2-antiparallel", "1 -2 0 1\n0 0 3 1"},
        {"rank2-three-parallel", "1 2 3 0\n0 0 0 1"},
        {"rank2-parallel-scaled", "1 1 2 0 1\n1 -1 2 1 0"},
        {"rank3-coplanar-triple", "1 0 1 0\n0 1 1 0\n0 0 0 1"},
        {"rank3-parallel-pair", "1 2 0 0 1\n0 0 1 0 1\n0 0 0 1 1"},
        {"rank3-triangle-edges", "1 0 0 1 1 0\n0 1 0 1 0 1\n0 0 1 0 1 1"},
        {"rank3-coplanar-mixed", "1 0 1 1\n0 1 1 0\n0 0 0 1"},
        {"rank3-antiparallel", "1 -2 0 1\n1 -2 1 0\n1 -2 0 0"},
        {"rank4-degenerate-plane", "1 0 0 0 1 1\n0 1 0 0 1 1\n0 0 1 0 0 1\n0 0 0 1 0 1"},
        {"rank4-coplanar-pair", "1 0 0 0 1\n0 1 0 0 -1\n0 0 1 0 0\n0 0 0 1 0"},
    };
    return ms;
}

inline omcg::SignSystem hand_system(const HandMatrix& m) {
    return omcg::from_matrix(omcg::VectorConfiguration::parse(m.rows));
}

struct NamedSystem {
    std::string name;
    omcg::SignSystem system;
};

// Realizable oriented matroids: cyclic(r,n) for 2<=r<=4, r<=n<=7, u2n(n) for
// n=2..16, and the hand matrices above.
inline std::vector<NamedSystem> positive_corpus() {
    std::vector<NamedSystem> out;
    for (std::size_t r = 2; r <= 4; ++r) {
        for (std::size_t n = r; n <= 7; ++n) {
            out.push_back({"cyclic(" + std::to_string(r) + "," + std::to_string(n) + ")",
                           omcg::cyclic(r, n)});
        }
    }
    for (std::size_t n = 2; n <= 16; ++n) {
        out.push_back({"u2n(" + std::to_string(n) + ")", omcg::u2n(n)});
    }
    for (const HandMatrix& m : hand_matrices()) {
        out.push_back({m.name, hand_system(m)});
    }
    return out;
}

// Seeded mutants and random systems, filtered to satisfy (C0)-(C2); mixed
// verdicts under (C3) by design. At least `minimum` instances.
inline std::vector<NamedSystem> hypothesis_corpus(std::size_t minimum = 200) {
    using namespace omcg;
    std::vector<NamedSystem> out;

    std::vector<NamedSystem> bases;
    for (std::size_t n = 3; n <= 8; ++n) {
        bases.push_back({"u2n(" + std::to_string(n) + ")", u2n(n)});
    }
    for (std::size_t n = 4; n <= 6; ++n) {
        bases.push_back({"cyclic(3," + std::to_string(n) + ")", cyclic(3, n)});
    }
    bases.push_back({"cyclic(4,5)", cyclic(4, 5)});

    const MutationKind kinds[] = {MutationKind::DropPair, MutationKind::FlipEntry,
                                  MutationKind::AddRandom};
    const char* kind_names[] = {"drop", "flip", "add"};
    for (const auto& base : bases) {
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                SignSystem m = mutate(base.system, kinds[k], seed);
                if (!check_c0(m).pass || !check_c1(m).pass || !check_c2(m).pass) continue;
                out.push_back({base.name + "/" + kind_names[k] + "#" + std::to_string(seed),
                               std::move(m)});
            }
        }
    }

    for (std::uint64_t seed = 0; out.size() < minimum || seed < 40; ++seed) {
        if (seed >= 400) break;
        const std::size_t n = 3 + seed % 4;      // 3..6
        const std::size_t pairs = 1 + seed % n;  // feasible under (C2) for every n
        out.push_back({"random(n=" + std::to_string(n) + ",p=" + std::to_string(pairs) +
                           ",s=" + std::to_string(seed) + ")",
                       random_c0c2(n, pairs, seed)});
    }
    return out;
}

} // namespace corpus
