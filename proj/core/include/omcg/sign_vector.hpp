#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omcg/errors.hpp"

namespace omcg {

/// Ground sets are capped so that each sign part fits in one machine word.
inline constexpr std::size_t kMaxGroundSize = 64;

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

char sign_to_char(Sign s);
Sign sign_from_char(char c); // throws ParseError on anything but '+', '-', '0'

/// Canonical comparison rank: + < 0 < -. Fixed once so every serialization,
/// witness and traversal order is reproducible bit-exactly.
int canonical_rank(Sign s);

/// Indexed ground set E. Elements are 0-based indices; labels are cosmetic.
/// An empty ground set is allowed: it arises when contracting by all of E.
class GroundSet {
public:
    static std::shared_ptr<const GroundSet> of_size(std::size_t n);
    static std::shared_ptr<const GroundSet> with_labels(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    /// True when the labels are the default "e0".."e{n-1}".
    bool default_labels() const;

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.labels_ == b.labels_;
    }

private:
    explicit GroundSet(std::vector<std::string> labels);
    std::vector<std::string> labels_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

/// Subset of ground-set elements, stored as a bit mask.
struct ElementSet {
    std::uint64_t bits = 0;

    ElementSet() = default;
    explicit ElementSet(std::uint64_t b) : bits(b) {}

    static ElementSet single(std::size_t i) { return ElementSet(std::uint64_t{1} << i); }
    static ElementSet full(std::size_t n) {
        return ElementSet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
    }

    bool contains(std::size_t i) const { return (bits >> i) & 1; }
    bool empty() const { return bits == 0; }
    std::size_t count() const;
    std::vector<std::size_t> indices() const; // ascending

    ElementSet operator|(ElementSet o) const { return ElementSet(bits | o.bits); }
    ElementSet operator&(ElementSet o) const { return ElementSet(bits & o.bits); }
    ElementSet operator-(ElementSet o) const { return ElementSet(bits & ~o.bits); }
    bool subset_of(ElementSet o) const { return (bits & ~o.bits) == 0; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

/// Render an element set as comma-separated labels, e.g. "{e0,e2}".
std::string to_string(ElementSet s, const GroundSet& ground);

/// A signed set X = (X+, X-) on a ground set: a ternary assignment E -> {+,0,-}.
/// Immutable after construction; all operations are pure.
class SignVector {
public:
    SignVector(GroundPtr ground, ElementSet positive, ElementSet negative);

    static SignVector zero(GroundPtr ground);
    /// Parse a string over {'+','-','0'} of length |E|.
    static SignVector parse(std::string_view text, GroundPtr ground);

    const GroundPtr& ground() const { return ground_; }
    std::size_t size() const { return ground_->size(); }

    Sign sign(std::size_t e) const;
    ElementSet positive_part() const { return pos_; }
    ElementSet negative_part() const { return neg_; }

    ElementSet support() const { return pos_ | neg_; }
    ElementSet zero_support() const { return ElementSet::full(size()) - support(); }
    bool is_zero() const { return pos_.empty() && neg_.empty(); }

    SignVector negated() const { return SignVector(ground_, neg_, pos_); }

    std::string to_string() const;

    friend bool operator==(const SignVector& a, const SignVector& b) {
        return a.pos_ == b.pos_ && a.neg_ == b.neg_ && *a.ground_ == *b.ground_;
    }

private:
    GroundPtr ground_;
    ElementSet pos_;
    ElementSet neg_;
};

/// S(X,Y) = (X+ ∩ Y-) ∪ (X- ∩ Y+).
ElementSet separator(const SignVector& x, const SignVector& y);

/// X∘Y: first nonzero sign wins, element-wise.
SignVector compose(const SignVector& x, const SignVector& y);

/// Left fold of compose; the empty sequence yields the zero vector.
SignVector compose_seq(const GroundPtr& ground, std::span<const SignVector> xs);

/// Conformal order: Y <= X iff S(X,Y) = ∅ and supp(Y) ⊆ supp(X).
bool leq(const SignVector& y, const SignVector& x);

/// Total order used everywhere output must be deterministic:
/// lexicographic on the sign sequence with + < 0 < -.
bool canonical_less(const SignVector& a, const SignVector& b);

/// Deduplicated collection of sign vectors on one ground set, kept in
/// canonical order.
class SignSystem {
public:
    explicit SignSystem(GroundPtr ground, std::vector<SignVector> members = {});
    static SignSystem empty(GroundPtr ground) { return SignSystem(std::move(ground)); }

    const GroundPtr& ground() const { return ground_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const SignVector& operator[](std::size_t i) const { return members_[i]; }
    std::span<const SignVector> members() const { return members_; }

    bool contains(const SignVector& v) const;
    std::optional<std::size_t> index_of(const SignVector& v) const;

    SignSystem negated() const;

    friend bool operator==(const SignSystem& a, const SignSystem& b) {
        return *a.ground_ == *b.ground_ && a.members_ == b.members_;
    }

private:
    GroundPtr ground_;
    std::vector<SignVector> members_;
};

namespace detail {
void require_same_ground(const SignVector& a, const SignVector& b);
}

} // namespace omcg
