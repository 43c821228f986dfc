#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omcg/sign_vector.hpp"

namespace omcg {

enum class Axiom { C0, C1, C2, C3 };

std::string_view axiom_name(Axiom a);

/// Concrete counterexample to one of (C0)-(C3). For C0 the witness is the
/// presence of the zero vector itself, so no vectors are listed; C1 and C2
/// list the implicated vector(s); C3 lists the pair and the separating element.
struct AxiomViolation {
    Axiom axiom;
    std::vector<SignVector> vectors;
    std::optional<std::size_t> element;

    std::string describe(const GroundSet& ground) const;
};

struct Verdict {
    bool pass = true;
    std::optional<AxiomViolation> violation;
    std::string warning;

    static Verdict ok() { return {}; }
    static Verdict ok_with_warning(std::string w) { return {true, std::nullopt, std::move(w)}; }
    static Verdict fail(AxiomViolation v) { return {false, std::move(v), {}}; }
};

/// (C0): the zero signed set is not a member.
Verdict check_c0(const SignSystem& s);

/// (C1): the system is closed under negation.
Verdict check_c1(const SignSystem& s);

/// (C2): support inclusion forces equality up to sign.
Verdict check_c2(const SignSystem& s);

/// (C3) elimination, by the naive triple loop. For every ordered pair X != ±Y
/// and every e in S(X,Y) there must be a member Z with Z(e)=0, Z+ ⊆ X+∪Y+ and
/// Z- ⊆ X-∪Y-. When `inspections` is non-null it accumulates one count per
/// candidate Z examined, the unit of the naive-route cost model.
Verdict check_c3(const SignSystem& s, std::uint64_t* inspections = nullptr);

/// Runs C0..C3 in order and reports the first violation. An empty system
/// passes with a warning (degenerate rank-0 oriented matroid).
Verdict check_all(const SignSystem& s, std::uint64_t* c3_inspections = nullptr);

} // namespace omcg
