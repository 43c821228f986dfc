#include "omcg/axioms.hpp"

namespace omcg {

std::string_view axiom_name(Axiom a) {
    switch (a) {
        case Axiom::C0: return "C0";
        case Axiom::C1: return "C1";
        case Axiom::C2: return "C2";
        default: return "C3";
    }
}

std::string AxiomViolation::describe(const GroundSet& ground) const {
    std::string out(axiom_name(axiom));
    switch (axiom) {
        case Axiom::C0:
            out += ": the zero vector is a member";
            break;
        case Axiom::C1:
            out += ": negation of " + vectors.at(0).to_string() + " is missing";
            break;
        case Axiom::C2:
            out += ": support(" + vectors.at(0).to_string() + ") ⊆ support(" +
                   vectors.at(1).to_string() + ") but the vectors differ by more than sign";
            break;
        case Axiom::C3:
            out += ": no member eliminates " + ground.label(element.value()) + " between " +
                   vectors.at(0).to_string() + " and " + vectors.at(1).to_string();
            break;
    }
    return out;
}

Verdict check_c0(const SignSystem& s) {
    for (const SignVector& x : s.members()) {
        if (x.is_zero()) return Verdict::fail({Axiom::C0, {}, std::nullopt});
    }
    return Verdict::ok();
}

Verdict check_c1(const SignSystem& s) {
    for (const SignVector& x : s.members()) {
        if (!s.contains(x.negated())) return Verdict::fail({Axiom::C1, {x}, std::nullopt});
    }
    return Verdict::ok();
}

Verdict check_c2(const SignSystem& s) {
    for (const SignVector& x : s.members()) {
        for (const SignVector& y : s.members()) {
            if (x == y || x == y.negated()) continue;
            if (x.support().subset_of(y.support())) {
                return Verdict::fail({Axiom::C2, {x, y}, std::nullopt});
            }
        }
    }
    return Verdict::ok();
}

namespace {

bool eliminates(const SignVector& z, const SignVector& x, const SignVector& y, std::size_t e) {
    if (z.sign(e) != Sign::Zero) return false;
    const ElementSet pos = x.positive_part() | y.positive_part();
    const ElementSet neg = x.negative_part() | y.negative_part();
    return z.positive_part().subset_of(pos) && z.negative_part().subset_of(neg);
}

} // namespace

Verdict check_c3(const SignSystem& s, std::uint64_t* inspections) {
    for (const SignVector& x : s.members()) {
        for (const SignVector& y : s.members()) {
            if (x == y || x == y.negated()) continue;
            for (std::size_t e : separator(x, y).indices()) {
                bool found = false;
                for (const SignVector& z : s.members()) {
                    if (inspections) ++*inspections;
                    if (eliminates(z, x, y, e)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return Verdict::fail({Axiom::C3, {x, y}, e});
            }
        }
    }
    return Verdict::ok();
}

Verdict check_all(const SignSystem& s, std::uint64_t* c3_inspections) {
    if (auto v = check_c0(s); !v.pass) return v;
    if (auto v = check_c1(s); !v.pass) return v;
    if (auto v = check_c2(s); !v.pass) return v;
    if (auto v = check_c3(s, c3_inspections); !v.pass) return v;
    if (s.empty()) {
        return Verdict::ok_with_warning("empty system: degenerate rank-0 oriented matroid");
    }
    return Verdict::ok();
}

} // namespace omcg
