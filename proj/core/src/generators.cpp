#include "omcg/generators.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <istream>
#include <random>
#include <set>
#include <sstream>

#include "omcg/axioms.hpp"

namespace omcg {

namespace {

using BigMatrix = std::vector<std::vector<mpz_class>>;

// gmpxx has no long long conversions; long is 64-bit on every supported target.
mpz_class big(long long v) { return mpz_class(static_cast<long>(v)); }

// Fraction-free (Bareiss) elimination; returns the rank. Destroys its input.
std::size_t exact_rank(BigMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

mpz_class exact_det(BigMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

// Canonical normal: divide by gcd, make the first nonzero coordinate positive.
// Returns false when the vector is zero.
bool canonicalize(std::vector<mpz_class>& f) {
    mpz_class g = 0;
    for (const mpz_class& x : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return false;
    for (mpz_class& x : f) x /= g;
    for (const mpz_class& x : f) {
        if (x != 0) {
            if (x < 0) {
                for (mpz_class& y : f) y = -y;
            }
            break;
        }
    }
    return true;
}

SignVector sign_columns(const GroundPtr& ground, const VectorConfiguration& m,
                        const std::vector<mpz_class>& f) {
    ElementSet pos, neg;
    for (std::size_t j = 0; j < m.n(); ++j) {
        mpz_class dot = 0;
        for (std::size_t i = 0; i < m.rank; ++i) dot += f[i] * big(m.columns[j][i]);
        if (dot > 0) pos.bits |= std::uint64_t{1} << j;
        if (dot < 0) neg.bits |= std::uint64_t{1} << j;
    }
    return SignVector(ground, pos, neg);
}

} // namespace

VectorConfiguration VectorConfiguration::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read(in);
}

VectorConfiguration VectorConfiguration::read(std::istream& in) {
    std::vector<std::vector<long long>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<long long> row;
        long long v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw ParseError("matrix row contains a non-integer token: " + line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix input contains no rows");
    for (const auto& row : rows) {
        if (row.size() != rows[0].size()) {
            throw ParseError("matrix rows have inconsistent lengths");
        }
    }
    VectorConfiguration m;
    m.rank = rows.size();
    m.columns.assign(rows[0].size(), std::vector<long long>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.columns[j][i] = rows[i][j];
    }
    return m;
}

SignSystem from_matrix(const VectorConfiguration& m) {
    const std::size_t r = m.rank;
    const std::size_t n = m.n();
    if (r < 1 || n < r) throw InvalidArgumentError("require 1 <= rank <= n");
    if (n > kMaxGroundSize) {
        throw ResourceError("ground-size", "matrix has more than " +
                                               std::to_string(kMaxGroundSize) + " columns");
    }
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (long long c : m.columns[j]) zero = zero && c == 0;
        if (zero) {
            throw InvalidArgumentError("column " + std::to_string(j) +
                                       " is the zero vector (loops are not supported)");
        }
    }

    BigMatrix full(r, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j) full[i][j] = big(m.columns[j][i]);
    }
    if (exact_rank(full) != r) {
        throw InvalidArgumentError("matrix rank differs from its row count");
    }

    GroundPtr ground = GroundSet::of_size(n);

    // Enumerate (r-1)-subsets of columns; each spanning subset determines a
    // hyperplane whose normal is built from signed maximal minors.
    std::set<std::vector<mpz_class>> normals;
    std::vector<std::size_t> subset(r - 1);
    for (std::size_t i = 0; i < r - 1; ++i) subset[i] = i;

    auto next_subset = [&]() -> bool {
        if (subset.empty()) return false;
        std::size_t i = subset.size();
        while (i-- > 0) {
            if (subset[i] + (subset.size() - i) < n) {
                ++subset[i];
                for (std::size_t j = i + 1; j < subset.size(); ++j) subset[j] = subset[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        // A is (r-1) x r with the chosen columns as rows; f_i = (-1)^i det(A_-i)
        std::vector<mpz_class> f(r);
        for (std::size_t i = 0; i < r; ++i) {
            BigMatrix sub(r - 1, std::vector<mpz_class>(r - 1));
            for (std::size_t a = 0; a < r - 1; ++a) {
                std::size_t cc = 0;
                for (std::size_t b = 0; b < r; ++b) {
                    if (b == i) continue;
                    sub[a][cc++] = big(m.columns[subset[a]][b]);
                }
            }
            mpz_class d = exact_det(std::move(sub));
            f[i] = (i % 2 == 0) ? d : mpz_class(-d);
        }
        if (canonicalize(f)) normals.insert(std::move(f));
    } while (next_subset());

    std::vector<SignVector> members;
    members.reserve(2 * normals.size());
    for (const auto& f : normals) {
        SignVector x = sign_columns(ground, m, f);
        members.push_back(x.negated());
        members.push_back(std::move(x));
    }
    SignSystem out(std::move(ground), std::move(members));

    if (Verdict v = check_all(out); !v.pass) {
        throw Error("realizability construction produced a non-oriented-matroid system: " +
                    v.violation->describe(*out.ground()));
    }
    return out;
}

SignSystem u2n(std::size_t n) {
    if (n < 2) throw InvalidArgumentError("u2n requires n >= 2");
    VectorConfiguration m;
    m.rank = 2;
    m.columns.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        m.columns.push_back({1, static_cast<long long>(k)});
    }
    return from_matrix(m);
}

SignSystem cyclic(std::size_t r, std::size_t n) {
    if (r < 2 || r > n || n > 10) throw InvalidArgumentError("cyclic requires 2 <= r <= n <= 10");
    VectorConfiguration m;
    m.rank = r;
    m.columns.reserve(n);
    for (std::size_t t = 1; t <= n; ++t) {
        std::vector<long long> col(r);
        long long p = 1;
        for (std::size_t i = 0; i < r; ++i) {
            col[i] = p;
            p *= static_cast<long long>(t);
        }
        m.columns.push_back(std::move(col));
    }
    SignSystem out = from_matrix(m);

    // Vandermonde structure guarantees uniformity; verify it anyway.
    for (const SignVector& x : out.members()) {
        if (x.zero_support().count() != r - 1) {
            throw Error("cyclic generator produced a non-uniform cocircuit");
        }
    }
    return out;
}

namespace {

// All randomness below uses mt19937_64 with plain modulo mapping; the engine
// is pinned by the standard, so outputs are identical across platforms.
SignVector random_nonzero_vector(std::mt19937_64& rng, const GroundPtr& ground) {
    const std::size_t n = ground->size();
    for (;;) {
        ElementSet pos, neg;
        for (std::size_t i = 0; i < n; ++i) {
            switch (rng() % 3) {
                case 0: pos.bits |= std::uint64_t{1} << i; break;
                case 2: neg.bits |= std::uint64_t{1} << i; break;
                default: break;
            }
        }
        if (pos.bits != 0 || neg.bits != 0) return SignVector(ground, pos, neg);
    }
}

} // namespace

SignSystem mutate(const SignSystem& s, MutationKind kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const GroundPtr& ground = s.ground();

    if (kind == MutationKind::AddRandom) {
        std::vector<SignVector> members(s.members().begin(), s.members().end());
        SignVector z = random_nonzero_vector(rng, ground);
        members.push_back(z.negated());
        members.push_back(std::move(z));
        return SignSystem(ground, std::move(members));
    }

    if (s.empty()) throw InvalidArgumentError("cannot mutate an empty system");

    // Canonical representatives of antipodal pairs (members whose negation
    // sorts after them, or is absent).
    std::vector<SignVector> reps;
    for (const SignVector& x : s.members()) {
        const SignVector nx = x.negated();
        if (!s.contains(nx) || canonical_less(x, nx)) reps.push_back(x);
    }

    if (kind == MutationKind::DropPair) {
        const SignVector& victim = reps[rng() % reps.size()];
        std::vector<SignVector> members;
        for (const SignVector& x : s.members()) {
            if (x == victim || x == victim.negated()) continue;
            members.push_back(x);
        }
        return SignSystem(ground, std::move(members));
    }

    // FlipEntry: replace one entry of X (and of -X, symmetrically).
    const SignVector& victim = reps[rng() % reps.size()];
    const std::size_t e = rng() % ground->size();
    const Sign old = victim.sign(e);
    const Sign choices[2] = {old == Sign::Plus ? Sign::Zero : Sign::Plus,
                             old == Sign::Minus ? Sign::Zero : Sign::Minus};
    const Sign next = choices[rng() % 2];

    ElementSet pos = victim.positive_part() - ElementSet::single(e);
    ElementSet neg = victim.negative_part() - ElementSet::single(e);
    if (next == Sign::Plus) pos = pos | ElementSet::single(e);
    if (next == Sign::Minus) neg = neg | ElementSet::single(e);
    SignVector flipped(ground, pos, neg);

    std::vector<SignVector> members;
    for (const SignVector& x : s.members()) {
        if (x == victim || x == victim.negated()) continue;
        members.push_back(x);
    }
    members.push_back(flipped.negated());
    members.push_back(std::move(flipped));
    return SignSystem(ground, std::move(members));
}

SignSystem random_c0c2(std::size_t n, std::size_t pairs, std::uint64_t seed) {
    if (n > 12) throw InvalidArgumentError("random_c0c2 requires n <= 12");
    if (pairs > 200) throw InvalidArgumentError("random_c0c2 requires pairs <= 200");
    GroundPtr ground = GroundSet::of_size(n);
    if (pairs == 0) return SignSystem::empty(std::move(ground));
    if (n == 0) throw InvalidArgumentError("cannot sample nonzero vectors on an empty ground set");

    std::mt19937_64 rng(seed);
    constexpr std::size_t kMaxAttempts = 100'000;
    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<SignVector> members;
        for (std::size_t p = 0; p < pairs; ++p) {
            SignVector x = random_nonzero_vector(rng, ground);
            members.push_back(x.negated());
            members.push_back(std::move(x));
        }
        SignSystem candidate(ground, std::move(members));
        if (candidate.size() != 2 * pairs) continue; // pair collision
        if (!check_c2(candidate).pass) continue;
        return candidate;
    }
    throw ResourceError("sampling", "random_c0c2 exhausted its sampling budget");
}

} // namespace omcg
