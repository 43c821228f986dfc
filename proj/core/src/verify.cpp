#include "omcg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace omcg {

namespace {

void require_c0c2(const SignSystem& s) {
    if (auto v = check_c0(s); !v.pass) throw HypothesisError(*v.violation, *s.ground());
    if (auto v = check_c1(s); !v.pass) throw HypothesisError(*v.violation, *s.ground());
    if (auto v = check_c2(s); !v.pass) throw HypothesisError(*v.violation, *s.ground());
}

void require_oriented_matroid(const SignSystem& s) {
    require_c0c2(s);
    if (auto v = check_c3(s); !v.pass) throw HypothesisError(*v.violation, *s.ground());
}

struct SignatureKey {
    std::uint64_t pos, neg;
    bool operator==(const SignatureKey&) const = default;
};

struct SignatureKeyHash {
    std::size_t operator()(const SignatureKey& k) const {
        std::uint64_t h = k.pos * 0x9e3779b97f4a7c15ull;
        h ^= k.neg + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

SignatureKey key_of(const HullSignature& sig) {
    return {sig.allow_pos.bits, sig.allow_neg.bits};
}

// Pairs (i, j), i < j, X_j != -X_i, in canonical order.
std::vector<std::pair<std::size_t, std::size_t>> qualifying_pairs(const SignSystem& s) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[j] == s[i].negated()) continue;
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

struct PairOutcome {
    bool ok = true;
    TraversalCost cost;
};

ConditionVerdict condition_iii_on_graph(const SignSystem& s, const SignedGraph& graph,
                                        std::uint64_t* cost, unsigned jobs) {
    const auto pairs = qualifying_pairs(s);
    std::vector<PairOutcome> outcomes(pairs.size());

    auto run_pair = [&](std::size_t k) {
        PairOutcome& o = outcomes[k];
        o.ok = crabbed_path_exists(graph, s[pairs[k].first], s[pairs[k].second], &o.cost);
    };

    std::size_t fail_at = pairs.size();
    if (jobs <= 1 || pairs.size() < 2) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            run_pair(k);
            if (!outcomes[k].ok) {
                fail_at = k;
                break;
            }
        }
    } else {
        // Deterministic parallel reduction: every pair below the first failing
        // index is evaluated, later pairs may be skipped; cost sums only the
        // prefix up to the failure, so the result is independent of scheduling.
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> min_fail{pairs.size()};
        auto worker = [&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= pairs.size()) return;
                if (k > min_fail.load()) continue;
                run_pair(k);
                if (!outcomes[k].ok) {
                    std::size_t cur = min_fail.load();
                    while (k < cur && !min_fail.compare_exchange_weak(cur, k)) {
                    }
                }
            }
        };
        std::vector<std::thread> threads;
        const unsigned count = std::min<unsigned>(jobs, std::thread::hardware_concurrency() * 2 + 2);
        for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        fail_at = min_fail.load();
    }

    if (cost) {
        const std::size_t upto = std::min(fail_at + 1, pairs.size());
        for (std::size_t k = 0; k < upto; ++k) *cost += outcomes[k].cost.total();
    }
    if (fail_at < pairs.size()) {
        return {false, PairWitness{s[pairs[fail_at].first], s[pairs[fail_at].second]}};
    }
    return {true, std::nullopt};
}

// Deterministic tuple enumeration shared by condition (ii) and the uniform
// neighbor check: calls fn(indices) for each tuple, in canonical order.
template <typename Fn>
std::size_t enumerate_tuples(std::size_t m, const EnumerationPolicy& policy, Fn&& fn) {
    std::size_t count = 0;
    if (m == 0) return 0;
    if (m <= policy.exhaustive_cap && m < 64) {
        const std::uint64_t limit = std::uint64_t{1} << m;
        std::vector<std::size_t> indices;
        for (std::uint64_t mask = 1; mask < limit; ++mask) {
            indices.clear();
            for (std::size_t i = 0; i < m; ++i) {
                if ((mask >> i) & 1) indices.push_back(i);
            }
            fn(indices);
            ++count;
        }
        return count;
    }
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            indices = {i, j};
            fn(indices);
            ++count;
        }
    }
    std::mt19937_64 rng(policy.seed);
    const std::size_t max_k = std::min(m, policy.max_sample_size);
    if (max_k < 3) return count;
    std::vector<std::size_t> pool(m);
    for (std::size_t s = 0; s < policy.sample_count; ++s) {
        const std::size_t k = 3 + static_cast<std::size_t>(rng() % (max_k - 2));
        for (std::size_t i = 0; i < m; ++i) pool[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (m - i));
            std::swap(pool[i], pool[j]);
        }
        indices.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(indices.begin(), indices.end());
        fn(indices);
        ++count;
    }
    return count;
}

struct HullContext {
    FaceLattice lattice;
    SignedGraph graph;
};

HullContext make_context(const SignSystem& s, const Budget& budget) {
    FaceLattice lattice = build_lattice(s, budget);
    SignedGraph graph = cocircuit_graph(lattice);
    return {std::move(lattice), std::move(graph)};
}

int composition_target(const SignSystem& s, const FaceLattice& lattice,
                       const std::vector<std::size_t>& tuple) {
    std::vector<SignVector> vs;
    vs.reserve(tuple.size());
    for (std::size_t i : tuple) vs.push_back(s[i]);
    const SignVector u = compose_seq(s.ground(), vs);
    const auto idx = lattice.index_of(u);
    if (!idx) throw Error("composition of members is missing from the closure");
    return lattice.height(*idx) - 1;
}

ConditionIIResult condition_ii_on_context(const SignSystem& s, const HullContext& ctx,
                                          const EnumerationPolicy& policy) {
    ConditionIIResult result;
    std::unordered_set<SignatureKey, SignatureKeyHash> seen;

    result.tuples_enumerated =
        enumerate_tuples(s.size(), policy, [&](const std::vector<std::size_t>& tuple) {
            std::vector<SignVector> vs;
            vs.reserve(tuple.size());
            for (std::size_t i : tuple) vs.push_back(s[i]);
            const HullSignature sig = hull_signature(vs);
            if (!seen.insert(key_of(sig)).second) return;

            HullRecord rec;
            rec.generators = tuple;
            rec.signature = sig;
            rec.target = composition_target(s, ctx.lattice, tuple);
            const SignedGraph hull = crabbed_hull(ctx.graph, sig);
            rec.hull_size = hull.vertex_count();
            rec.kappa = vertex_connectivity(hull);
            rec.ok = rec.kappa >= rec.target;
            if (!rec.ok && !result.first_failure) {
                result.first_failure = result.hulls.size();
                result.pass = false;
            }
            result.hulls.push_back(std::move(rec));
        });
    return result;
}

} // namespace

ConditionVerdict check_condition_iii(const SignSystem& s, const Budget& budget,
                                     std::uint64_t* cost, unsigned jobs) {
    require_c0c2(s);
    const HullContext ctx = make_context(s, budget);
    return condition_iii_on_graph(s, ctx.graph, cost, jobs);
}

ConditionIIResult check_condition_ii(const SignSystem& s, const EnumerationPolicy& policy,
                                     const Budget& budget) {
    require_c0c2(s);
    const HullContext ctx = make_context(s, budget);
    return condition_ii_on_context(s, ctx, policy);
}

EquivalenceReport equivalence_harness(const SignSystem& s, const EnumerationPolicy& policy,
                                      const Budget& budget, unsigned jobs) {
    require_c0c2(s);
    EquivalenceReport report;
    report.verdict_i = check_all(s, &report.cost_naive);

    const HullContext ctx = make_context(s, budget);
    report.verdict_iii = condition_iii_on_graph(s, ctx.graph, &report.cost_graph, jobs);
    report.verdict_ii = condition_ii_on_context(s, ctx, policy);

    report.agree = report.verdict_i.pass == report.verdict_iii.pass;
    report.i_implies_ii = !report.verdict_i.pass || report.verdict_ii.pass;
    return report;
}

LemmaResult lemma31_check(const SignSystem& s, const Budget& budget) {
    require_oriented_matroid(s);
    const FaceLattice lattice = build_lattice(s, budget);
    const SignedGraph gt = tope_graph(lattice);

    for (std::size_t i = 0; i < gt.vertex_count(); ++i) {
        for (std::size_t j = i + 1; j < gt.vertex_count(); ++j) {
            if (!crabbed_path_exists(gt, gt.vertices()[i], gt.vertices()[j])) {
                return {false,
                        {gt.vertices()[i], gt.vertices()[j]},
                        "no crabbed path between topes"};
            }
        }
    }
    return {};
}

LemmaResult lemma32_check(const SignSystem& s, const Budget& budget) {
    require_oriented_matroid(s);
    const FaceLattice lattice = build_lattice(s, budget);
    const SignedGraph gc = cocircuit_graph(lattice);
    const int r = lattice.rank();

    for (std::size_t t : lattice.coatom_indices()) {
        const SignVector& tope = lattice.covectors()[t];
        const SignedGraph sub = tope_subgraph(lattice, gc, tope);
        const int kappa = vertex_connectivity(sub);
        if (kappa < r - 1) {
            return {false,
                    {tope},
                    "tope subgraph has connectivity " + std::to_string(kappa) +
                        " < " + std::to_string(r - 1)};
        }
    }
    return {};
}

bool is_uniform(const SignSystem& s, const FaceLattice& lattice) {
    if (!lattice.graded()) return false;
    const std::size_t r = static_cast<std::size_t>(lattice.rank());
    for (const SignVector& x : s.members()) {
        if (x.zero_support().count() + 1 != r) return false;
    }
    return true;
}

NeighborCheckResult uniform_neighbor_check(const SignSystem& s, const EnumerationPolicy& policy,
                                           const Budget& budget) {
    require_oriented_matroid(s);
    const HullContext ctx = make_context(s, budget);
    if (!is_uniform(s, ctx.lattice)) {
        throw HypothesisError("system is not uniform");
    }

    // Cache per signature: hull membership and each member's degree inside it.
    struct HullInfo {
        std::vector<char> in_hull;          // by member index
        std::vector<std::size_t> degree;    // by member index
        int target = 0;
    };
    std::unordered_map<SignatureKey, HullInfo, SignatureKeyHash> cache;

    NeighborCheckResult result;
    enumerate_tuples(s.size(), policy, [&](const std::vector<std::size_t>& tuple) {
        if (!result.pass) return;
        std::vector<SignVector> vs;
        vs.reserve(tuple.size());
        for (std::size_t i : tuple) vs.push_back(s[i]);
        const HullSignature sig = hull_signature(vs);
        auto [it, fresh] = cache.try_emplace(key_of(sig));
        HullInfo& info = it->second;
        if (fresh) {
            info.in_hull.assign(s.size(), 0);
            info.degree.assign(s.size(), 0);
            for (std::size_t v = 0; v < s.size(); ++v) {
                info.in_hull[v] = sig.admits(ctx.graph.vertices()[v]) ? 1 : 0;
            }
            for (std::size_t v = 0; v < s.size(); ++v) {
                if (!info.in_hull[v]) continue;
                for (std::size_t w : ctx.graph.neighbors(v)) {
                    if (info.in_hull[w]) ++info.degree[v];
                }
            }
            info.target = composition_target(s, ctx.lattice, tuple);
        }
        for (std::size_t g : tuple) {
            if (static_cast<int>(info.degree[g]) != info.target) {
                result.pass = false;
                result.tuple = vs;
                result.generator = s[g];
                result.degree = static_cast<int>(info.degree[g]);
                result.target = info.target;
                return;
            }
        }
    });
    return result;
}

CostReport cost_comparison(const SignSystem& s, const Budget& budget) {
    require_c0c2(s);
    CostReport report;
    report.cocircuits = s.size();

    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const Verdict naive = check_c3(s, &report.cost_naive);
    const auto t1 = clock::now();
    report.naive_pass = naive.pass;
    report.naive_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    const HullContext ctx = make_context(s, budget);
    report.edges = ctx.graph.edge_count();
    const auto t2 = clock::now();
    const ConditionVerdict graph = condition_iii_on_graph(s, ctx.graph, &report.cost_graph, 1);
    const auto t3 = clock::now();
    report.graph_pass = graph.pass;
    report.graph_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
    return report;
}

} // namespace omcg
