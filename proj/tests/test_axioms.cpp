#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omcg/axioms.hpp"
#include "omcg/generators.hpp"
#include "omcg/system_io.hpp"
#include "support/oracles.hpp"

using namespace omcg;

namespace {

SignSystem sys(const std::string& text) { return parse_system(text); }

SignSystem u23() {
    return from_matrix(VectorConfiguration::parse("1 0 1\n0 1 1"));
}

} // namespace

TEST_CASE("C0") {
    CHECK(check_c0(sys("0++\n0--\n")).pass);
    const Verdict v = check_c0(sys("000\n"));
    CHECK_FALSE(v.pass);
    CHECK(v.violation->axiom == Axiom::C0);
    CHECK(v.violation->vectors.empty());
    CHECK(check_c0(sys("# ground: a,b\n")).pass);
}

TEST_CASE("C1") {
    CHECK(check_c1(sys("0++\n0--\n")).pass);
    const Verdict v = check_c1(sys("0++\n"));
    CHECK_FALSE(v.pass);
    CHECK(v.violation->vectors.at(0).to_string() == "0++");
    CHECK(check_c1(u23()).pass);
}

TEST_CASE("C2") {
    CHECK(check_c2(u23()).pass);
    const Verdict v = check_c2(sys("0++\n0--\n0+0\n0-0\n"));
    CHECK_FALSE(v.pass);
    // canonically first offending pair
    CHECK(v.violation->vectors.at(0).to_string() == "0+0");
    CHECK(v.violation->vectors.at(1).to_string() == "0++");
    CHECK(check_c2(sys("+++\n---\n")).pass);
}

TEST_CASE("C3") {
    SUBCASE("oriented matroid passes") {
        std::uint64_t count = 0;
        CHECK(check_c3(u23(), &count).pass);
        CHECK(count > 0);
    }
    SUBCASE("dropping a pair breaks elimination") {
        const SignSystem s = sys("0++\n0--\n+0+\n-0-\n");
        const Verdict v = check_c3(s);
        REQUIRE_FALSE(v.pass);
        // canonical scan order: members sort as +0+, 0++, 0--, -0-
        CHECK(v.violation->vectors.at(0).to_string() == "+0+");
        CHECK(v.violation->vectors.at(1).to_string() == "0--");
        CHECK(v.violation->element == 2);
        // the oracle agrees there is no eliminating member for that triple
        auto w = oracle::c3_witness_str({"+0+", "0++", "0--", "-0-"});
        REQUIRE(w.has_value());
        CHECK(std::get<0>(*w) == "+0+");
        CHECK(std::get<1>(*w) == "0--");
        CHECK(std::get<2>(*w) == 2);
    }
    SUBCASE("vacuous cases pass") {
        CHECK(check_c3(sys("+00\n-00\n")).pass);
        CHECK(check_c3(sys("+00\n")).pass);
    }
}

TEST_CASE("check_all") {
    CHECK(check_all(u23()).pass);

    const Verdict empty = check_all(SignSystem::empty(GroundSet::of_size(3)));
    CHECK(empty.pass);
    CHECK_FALSE(empty.warning.empty());

    const Verdict zero = check_all(sys("000\n"));
    CHECK_FALSE(zero.pass);
    CHECK(zero.violation->axiom == Axiom::C0);
}

TEST_CASE("C3 verdict is invariant under member order and global negation") {
    const SignSystem base = u23();
    CHECK(check_c3(base).pass == check_c3(base.negated()).pass);

    // feeding members in reverse produces the same canonical system
    std::vector<SignVector> reversed(base.members().rbegin(), base.members().rend());
    CHECK(SignSystem(base.ground(), reversed) == base);

    const SignSystem broken = sys("0++\n0--\n+0+\n-0-\n");
    CHECK(check_c3(broken).pass == check_c3(broken.negated()).pass);
    // the witness maps to its negation under global negation
    const Verdict v = check_c3(broken);
    const Verdict vn = check_c3(broken.negated());
    CHECK(v.violation->element == vn.violation->element);
}

TEST_CASE("check_all agrees with the string oracle on random C0-C2 systems") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const SignSystem s = random_c0c2(4, 1 + seed % 4, seed);
        std::vector<std::string> strs;
        for (const auto& m : s.members()) strs.push_back(m.to_string());
        const bool oracle_pass = !oracle::c3_witness_str(strs).has_value();
        CHECK(check_all(s).pass == oracle_pass);
    }
}
