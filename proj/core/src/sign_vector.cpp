#include "omcg/sign_vector.hpp"

#include <algorithm>
#include <bit>

namespace omcg {

char sign_to_char(Sign s) {
    switch (s) {
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
        default: return '0';
    }
}

Sign sign_from_char(char c) {
    switch (c) {
        case '+': return Sign::Plus;
        case '-': return Sign::Minus;
        case '0': return Sign::Zero;
        default:
            throw ParseError(std::string("invalid sign character '") + c +
                             "' (expected '+', '-' or '0')");
    }
}

int canonical_rank(Sign s) {
    switch (s) {
        case Sign::Plus: return 0;
        case Sign::Zero: return 1;
        default: return 2;
    }
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {}

std::shared_ptr<const GroundSet> GroundSet::of_size(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return with_labels(std::move(labels));
}

std::shared_ptr<const GroundSet> GroundSet::with_labels(std::vector<std::string> labels) {
    if (labels.size() > kMaxGroundSize) {
        throw ResourceError("ground-size",
                            "ground set of size " + std::to_string(labels.size()) +
                                " exceeds the supported maximum of " +
                                std::to_string(kMaxGroundSize));
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) throw ParseError("empty ground-set label");
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                throw ParseError("duplicate ground-set label '" + labels[i] + "'");
            }
        }
    }
    return std::shared_ptr<const GroundSet>(new GroundSet(std::move(labels)));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

bool GroundSet::default_labels() const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] != "e" + std::to_string(i)) return false;
    }
    return true;
}

std::size_t ElementSet::count() const {
    return static_cast<std::size_t>(std::popcount(bits));
}

std::vector<std::size_t> ElementSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::uint64_t b = bits; b != 0; b &= b - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
}

std::string to_string(ElementSet s, const GroundSet& ground) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : s.indices()) {
        if (!first) out += ',';
        out += ground.label(i);
        first = false;
    }
    out += '}';
    return out;
}

SignVector::SignVector(GroundPtr ground, ElementSet positive, ElementSet negative)
    : ground_(std::move(ground)), pos_(positive), neg_(negative) {
    const ElementSet universe = ElementSet::full(ground_->size());
    if (!pos_.subset_of(universe) || !neg_.subset_of(universe)) {
        throw InvalidArgumentError("sign part references elements outside the ground set");
    }
    if (!(pos_ & neg_).empty()) {
        throw InvalidArgumentError("positive and negative parts must be disjoint");
    }
}

SignVector SignVector::zero(GroundPtr ground) {
    return SignVector(std::move(ground), ElementSet{}, ElementSet{});
}

SignVector SignVector::parse(std::string_view text, GroundPtr ground) {
    if (text.size() != ground->size()) {
        throw ParseError("sign string '" + std::string(text) + "' has length " +
                         std::to_string(text.size()) + ", expected " +
                         std::to_string(ground->size()));
    }
    ElementSet pos, neg;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (sign_from_char(text[i])) {
            case Sign::Plus: pos.bits |= std::uint64_t{1} << i; break;
            case Sign::Minus: neg.bits |= std::uint64_t{1} << i; break;
            default: break;
        }
    }
    return SignVector(std::move(ground), pos, neg);
}

Sign SignVector::sign(std::size_t e) const {
    if (pos_.contains(e)) return Sign::Plus;
    if (neg_.contains(e)) return Sign::Minus;
    return Sign::Zero;
}

std::string SignVector::to_string() const {
    std::string out(size(), '0');
    for (std::size_t i : pos_.indices()) out[i] = '+';
    for (std::size_t i : neg_.indices()) out[i] = '-';
    return out;
}

namespace detail {
void require_same_ground(const SignVector& a, const SignVector& b) {
    if (a.ground() == b.ground()) return; // same object, fast path
    if (*a.ground() == *b.ground()) return;
    throw GroundMismatchError("operands live on different ground sets");
}
} // namespace detail

ElementSet separator(const SignVector& x, const SignVector& y) {
    detail::require_same_ground(x, y);
    return (x.positive_part() & y.negative_part()) | (x.negative_part() & y.positive_part());
}

SignVector compose(const SignVector& x, const SignVector& y) {
    detail::require_same_ground(x, y);
    const ElementSet pos = x.positive_part() | (y.positive_part() - x.negative_part());
    const ElementSet neg = x.negative_part() | (y.negative_part() - x.positive_part());
    return SignVector(x.ground(), pos, neg);
}

SignVector compose_seq(const GroundPtr& ground, std::span<const SignVector> xs) {
    SignVector acc = SignVector::zero(ground);
    for (const SignVector& x : xs) acc = compose(acc, x);
    return acc;
}

bool leq(const SignVector& y, const SignVector& x) {
    detail::require_same_ground(x, y);
    return separator(x, y).empty() && y.support().subset_of(x.support());
}

bool canonical_less(const SignVector& a, const SignVector& b) {
    detail::require_same_ground(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int ra = canonical_rank(a.sign(i));
        const int rb = canonical_rank(b.sign(i));
        if (ra != rb) return ra < rb;
    }
    return false;
}

SignSystem::SignSystem(GroundPtr ground, std::vector<SignVector> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    for (const SignVector& m : members_) {
        if (!(*m.ground() == *ground_)) {
            throw GroundMismatchError("system member does not match the system's ground set");
        }
    }
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SignSystem::contains(const SignVector& v) const {
    return index_of(v).has_value();
}

std::optional<std::size_t> SignSystem::index_of(const SignVector& v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v, canonical_less);
    if (it != members_.end() && *it == v) {
        return static_cast<std::size_t>(it - members_.begin());
    }
    return std::nullopt;
}

SignSystem SignSystem::negated() const {
    std::vector<SignVector> out;
    out.reserve(members_.size());
    for (const SignVector& m : members_) out.push_back(m.negated());
    return SignSystem(ground_, std::move(out));
}

} // namespace omcg
