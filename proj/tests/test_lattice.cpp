#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "omcg/generators.hpp"
#include "omcg/lattice.hpp"
#include "omcg/system_io.hpp"
#include "support/oracles.hpp"

using namespace omcg;

namespace {

SignSystem u23() {
    return from_matrix(VectorConfiguration::parse("1 0 1\n0 1 1"));
}

std::vector<std::string> strings_of(const SignSystem& s) {
    std::vector<std::string> out;
    for (const auto& m : s.members()) out.push_back(m.to_string());
    return out;
}

} // namespace

TEST_CASE("closure of U(2,3) is the 13-covector face set") {
    const SignSystem cov = closure(u23());
    // derived with the string oracle and frozen: 6 cocircuits, 6 topes, zero
    const std::vector<std::string> expected = {
        "+++", "+0+", "+-+", "+-0", "+--", "0++", "000",
        "0--", "-++", "-+0", "-+-", "-0-", "---"};
    std::vector<std::string> sorted_expected = expected;
    std::sort(sorted_expected.begin(), sorted_expected.end());

    std::vector<std::string> got = strings_of(cov);
    std::vector<std::string> sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    CHECK(sorted_got == sorted_expected);

    const auto oracle_closure = oracle::closure_str(strings_of(u23()), 3);
    CHECK(std::set<std::string>(got.begin(), got.end()) == oracle_closure);
}

TEST_CASE("closure edge cases") {
    CHECK(closure(SignSystem::empty(GroundSet::of_size(3))).size() == 1);
    const SignSystem s = parse_system("+00\n-00\n");
    const SignSystem cov = closure(s);
    CHECK(cov.size() == 3);
    CHECK(cov.contains(SignVector::parse("000", s.ground())));
}

TEST_CASE("closure is idempotent") {
    const SignSystem cov = closure(u23());
    CHECK(closure(cov) == cov);
}

TEST_CASE("closure budget errors") {
    CHECK_THROWS_AS((void)closure(u23(), Budget{.max_covectors = 5}), ResourceError);
    try {
        (void)closure(u23(), Budget{.max_covectors = 5});
    } catch (const ResourceError& e) {
        CHECK(e.budget() == "covectors");
    }
}

TEST_CASE("U(2,3) lattice structure") {
    const FaceLattice lat = build_lattice(u23());
    CHECK(lat.size() == 13);
    CHECK(lat.graded());
    CHECK(lat.top_rank() == 3);
    CHECK(lat.rank() == 2);

    const auto oracle_h = oracle::heights_str(oracle::closure_str(strings_of(u23()), 3));
    for (std::size_t i = 0; i < lat.size(); ++i) {
        CHECK(lat.height(i) == oracle_h.at(lat.covectors()[i].to_string()));
    }

    CHECK(atoms(lat) == u23());
    CHECK(topes(lat).size() == 6);
    for (const SignVector& t : topes(lat)) CHECK(t.support() == ElementSet::full(3));
}

TEST_CASE("degenerate lattices") {
    SUBCASE("empty system") {
        const FaceLattice lat = build_lattice(SignSystem::empty(GroundSet::of_size(3)));
        CHECK(lat.size() == 1);
        CHECK(lat.top_rank() == 1);
        CHECK(lat.rank() == 0);
        CHECK(lat.atom_indices().empty());
        const auto ts = topes(lat);
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].is_zero());
    }
    SUBCASE("single antipodal pair") {
        const FaceLattice lat = build_lattice(parse_system("+00\n-00\n"));
        CHECK(lat.rank() == 1);
        CHECK(lat.atom_indices().size() == 2);
        CHECK(lat.coatom_indices().size() == 2);
    }
}

TEST_CASE("rank of generated families") {
    CHECK(build_lattice(u23()).rank() == 2);
    CHECK(build_lattice(cyclic(3, 4)).rank() == 3);
    CHECK(build_lattice(cyclic(4, 5)).rank() == 4);
}

TEST_CASE("U(2,4) and U(2,n) atom/coatom counts") {
    const FaceLattice lat = build_lattice(u2n(4));
    CHECK(lat.atom_indices().size() == 8);
    CHECK(lat.coatom_indices().size() == 8);
}

TEST_CASE("atoms equal the base exactly for C0-C2 systems") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SignSystem s = random_c0c2(4, 1 + seed % 4, seed);
        if (s.empty()) continue;
        const FaceLattice lat = build_lattice(s);
        CHECK(atoms(lat) == s);
    }
}

TEST_CASE("is_lattice diagnostic holds on oriented matroids") {
    CHECK(build_lattice(u23()).is_lattice());
    CHECK(build_lattice(cyclic(3, 5)).is_lattice());
    CHECK(build_lattice(SignSystem::empty(GroundSet::of_size(2))).is_lattice());
}

TEST_CASE("hasse edges of U(2,3)") {
    const FaceLattice lat = build_lattice(u23());
    // every cover raises height by one; atoms cover zero; topes are covered by nothing
    for (auto [lo, hi] : lat.hasse_edges()) {
        CHECK(lat.height(hi) == lat.height(lo) + 1);
    }
    // 6 zero->cocircuit covers + 12 cocircuit->tope covers (each tope covers 2)
    CHECK(lat.hasse_edges().size() == 18);
}

TEST_CASE("contract") {
    const SignSystem s = u23();
    SUBCASE("single element") {
        const Contraction c = contract(s, ElementSet::single(0));
        CHECK(to_text(c.system) == "++\n--\n");
        CHECK(c.kept == std::vector<std::size_t>{1, 2});
    }
    SUBCASE("empty set is the identity up to relabeling") {
        const Contraction c = contract(s, ElementSet{});
        CHECK(strings_of(c.system) == strings_of(s));
        CHECK(c.kept == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("two elements leave nothing") {
        const Contraction c = contract(s, ElementSet::single(0) | ElementSet::single(1));
        CHECK(c.system.empty());
        CHECK(c.system.ground()->size() == 1);
    }
    SUBCASE("full ground set gives the empty-ground degenerate system") {
        const Contraction c = contract(s, ElementSet::full(3));
        CHECK(c.system.empty());
        CHECK(c.system.ground()->size() == 0);
        CHECK(build_lattice(c.system).rank() == 0);
    }
}

TEST_CASE("contraction commutes with closure (covector identity)") {
    const SignSystem s = u23();
    const SignSystem cov = closure(s);
    for (ElementSet a :
         {ElementSet{}, ElementSet::single(0), ElementSet::single(2),
          ElementSet::single(0) | ElementSet::single(1)}) {
        const SignSystem lhs = closure(contract(s, a).system);
        const SignSystem rhs = contract(cov, a).system; // restrict-and-filter L(S)
        CHECK(lhs == rhs);
    }
}

TEST_CASE("contraction rank identity on U(2,3)") {
    const SignSystem s = u23();
    SUBCASE("cocircuit") {
        const auto r = contraction_rank_identity(s, SignVector::parse("0++", s.ground()));
        CHECK(r.pass);
        CHECK(r.contraction_rank == 1);
        CHECK(r.covector_height == 1);
    }
    SUBCASE("zero covector") {
        const auto r = contraction_rank_identity(s, SignVector::parse("000", s.ground()));
        CHECK(r.pass);
        CHECK(r.contraction_rank == 0);
    }
    SUBCASE("tope") {
        const auto r = contraction_rank_identity(s, SignVector::parse("+++", s.ground()));
        CHECK(r.pass);
        CHECK(r.contraction_rank == 2);
    }
    SUBCASE("non-covector is an error") {
        CHECK_THROWS_AS(
            (void)contraction_rank_identity(s, SignVector::parse("++0", s.ground())),
            InvalidArgumentError);
    }
}

TEST_CASE("covector count stays strictly below 3^n for nonempty C0 systems") {
    for (const SignSystem& s : {u23(), u2n(4), cyclic(3, 4)}) {
        const std::size_t n = s.ground()->size();
        std::size_t bound = 1;
        for (std::size_t i = 0; i < n; ++i) bound *= 3;
        CHECK(closure(s).size() < bound);
    }
}

TEST_CASE("composition zero-support is order independent") {
    std::mt19937_64 rng(19);
    const SignSystem s = cyclic(3, 5);
    std::vector<SignVector> tuple;
    for (int i = 0; i < 4; ++i) tuple.push_back(s[rng() % s.size()]);
    const SignVector u = compose_seq(s.ground(), tuple);
    for (int perm = 0; perm < 10; ++perm) {
        std::shuffle(tuple.begin(), tuple.end(), rng);
        CHECK(compose_seq(s.ground(), tuple).zero_support() == u.zero_support());
    }
}
