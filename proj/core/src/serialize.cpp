#include "omcg/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace omcg {

namespace {

using ordered = nlohmann::ordered_json;

const char* kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Cocircuit: return "cocircuit";
        case GraphKind::Tope: return "tope";
        default: return "induced";
    }
}

ordered json_of_verdict(const Verdict& v, const GroundSet& ground) {
    ordered out;
    out["pass"] = v.pass;
    if (!v.warning.empty()) out["warning"] = v.warning;
    if (v.violation) {
        ordered w;
        w["axiom"] = std::string(axiom_name(v.violation->axiom));
        ordered vecs = ordered::array();
        for (const SignVector& x : v.violation->vectors) vecs.push_back(x.to_string());
        w["vectors"] = std::move(vecs);
        if (v.violation->element) w["element"] = ground.label(*v.violation->element);
        out["violation"] = std::move(w);
    }
    return out;
}

} // namespace

std::string to_dot(const SignedGraph& g) {
    std::ostringstream out;
    out << "graph " << kind_name(g.kind()) << " {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v << " [label=\"" << g.vertices()[v].to_string() << "\"];\n";
    }
    for (auto [a, b] : g.edges()) {
        out << "  v" << a << " -- v" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_json(const SignedGraph& g) {
    ordered out;
    out["kind"] = kind_name(g.kind());
    out["ground"] = g.vertices().ground()->labels();
    ordered verts = ordered::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) verts.push_back(g.vertices()[v].to_string());
    out["vertices"] = std::move(verts);
    ordered edges = ordered::array();
    for (auto [a, b] : g.edges()) edges.push_back(ordered::array({a, b}));
    out["edges"] = std::move(edges);
    return out.dump(2) + "\n";
}

std::string lattice_json(const FaceLattice& lattice) {
    ordered out;
    out["ground"] = lattice.covectors().ground()->labels();
    ordered covs = ordered::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        covs.push_back(lattice.covectors()[i].to_string());
    }
    out["covectors"] = std::move(covs);
    ordered heights = ordered::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) heights.push_back(lattice.height(i));
    out["height"] = std::move(heights);
    out["top_rank"] = lattice.top_rank();
    out["graded"] = lattice.graded();
    ordered hasse = ordered::array();
    for (auto [lo, hi] : lattice.hasse_edges()) hasse.push_back(ordered::array({lo, hi}));
    out["hasse"] = std::move(hasse);
    ordered top_covers = ordered::array();
    for (std::size_t c : lattice.coatom_indices()) top_covers.push_back(c);
    out["covered_by_top"] = std::move(top_covers);
    ordered atoms_arr = ordered::array();
    for (std::size_t a : lattice.atom_indices()) atoms_arr.push_back(a);
    out["atoms"] = std::move(atoms_arr);
    return out.dump(2) + "\n";
}

std::string verdict_json(const Verdict& v, const GroundSet& ground) {
    return json_of_verdict(v, ground).dump(2) + "\n";
}

std::string equivalence_report_json(const EquivalenceReport& r, const GroundSet& ground) {
    ordered out;
    out["i"] = json_of_verdict(r.verdict_i, ground);

    ordered iii;
    iii["pass"] = r.verdict_iii.pass;
    if (r.verdict_iii.counterexample) {
        iii["counterexample"] = ordered::array({r.verdict_iii.counterexample->x.to_string(),
                                                r.verdict_iii.counterexample->y.to_string()});
    }
    out["iii"] = std::move(iii);

    ordered ii;
    ii["pass"] = r.verdict_ii.pass;
    ii["tuples_enumerated"] = r.verdict_ii.tuples_enumerated;
    ii["hulls_checked"] = r.verdict_ii.hulls.size();
    ordered failures = ordered::array();
    for (const HullRecord& rec : r.verdict_ii.hulls) {
        if (!rec.ok) {
            ordered h;
            ordered gens = ordered::array();
            for (std::size_t g : rec.generators) gens.push_back(g);
            h["generator_indices"] = std::move(gens);
            h["hull_size"] = rec.hull_size;
            h["kappa"] = rec.kappa;
            h["target"] = rec.target;
            failures.push_back(std::move(h));
        }
    }
    ii["failures"] = std::move(failures);
    out["ii"] = std::move(ii);

    out["agree"] = r.agree;
    out["i_implies_ii"] = r.i_implies_ii;
    out["cost_naive"] = r.cost_naive;
    out["cost_graph"] = r.cost_graph;
    return out.dump(2) + "\n";
}

std::string cost_report_json(const CostReport& r, bool include_times) {
    ordered out;
    out["cocircuits"] = r.cocircuits;
    out["edges"] = r.edges;
    out["cost_naive"] = r.cost_naive;
    out["cost_graph"] = r.cost_graph;
    out["naive_pass"] = r.naive_pass;
    out["graph_pass"] = r.graph_pass;
    if (include_times) {
        out["naive_ms"] = r.naive_ms;
        out["graph_ms"] = r.graph_ms;
    }
    return out.dump(2) + "\n";
}

} // namespace omcg
