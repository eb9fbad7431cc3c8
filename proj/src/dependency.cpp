#include "sm_checker.hpp"

#include <fosm/dependency.hpp>
#include <fosm/error.hpp>
#include <fosm/printer.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace fosm {

namespace {

// Positive occurrences (even antecedent depth within `g`) of members of `p`
// that lie outside every subformula of `g` negative on `p`.
void body_dependencies(const Formula& g, int depth, const PredicateList& p, std::set<Predicate>& out) {
    if (is_negative_on(g, p))
        return;
    switch (g.kind()) {
        case Formula::Kind::Atom:
            if (depth % 2 == 0 && contains(p, g.predicate()))
                out.insert(g.predicate());
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
            body_dependencies(g.left(), depth, p, out);
            body_dependencies(g.right(), depth, p, out);
            return;
        case Formula::Kind::Implies:
            body_dependencies(g.left(), depth + 1, p, out);
            body_dependencies(g.right(), depth, p, out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: body_dependencies(g.body(), depth, p, out); return;
        default: return;
    }
}

} // namespace

DependencyGraph dependency_graph(const Formula& f, const PredicateList& p) {
    DependencyGraph g;
    g.vertices = list_union({}, p);
    for (const auto& rule : rules_of(f)) {
        std::set<Predicate> body;
        body_dependencies(rule.left(), 0, g.vertices, body);
        if (body.empty())
            continue;
        for (const auto& head : head_predicates(rule.right())) {
            if (!contains(g.vertices, head))
                continue;
            for (const auto& b : body)
                g.edges.emplace(head, b);
        }
    }
    return g;
}

std::vector<PredicateList> strongly_connected_components(const DependencyGraph& g) {
    PredicateList vertices = sorted(g.vertices);
    std::map<Predicate, int> id;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        id[vertices[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& [from, to] : g.edges)
        adj[static_cast<std::size_t>(id.at(from))].push_back(id.at(to));

    // Tarjan's algorithm.
    int counter = 0;
    std::vector<int> index(vertices.size(), -1), low(vertices.size(), 0);
    std::vector<bool> on_stack(vertices.size(), false);
    std::vector<int> stack;
    std::vector<PredicateList> out;
    std::function<void(int)> visit = [&](int v) {
        auto vi = static_cast<std::size_t>(v);
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = true;
        for (int w : adj[vi]) {
            auto wi = static_cast<std::size_t>(w);
            if (index[wi] < 0) {
                visit(w);
                low[vi] = std::min(low[vi], low[wi]);
            } else if (on_stack[wi]) {
                low[vi] = std::min(low[vi], index[wi]);
            }
        }
        if (low[vi] == index[vi]) {
            PredicateList comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = false;
                comp.push_back(vertices[static_cast<std::size_t>(w)]);
            } while (w != v);
            out.push_back(sorted(comp));
        }
    };
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (index[v] < 0)
            visit(static_cast<int>(v));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::string to_dot(const DependencyGraph& g) {
    auto quote = [](const Predicate& p) { return "\"" + to_string(p) + "\""; };
    std::string out = "digraph dependencies {\n";
    for (const auto& v : sorted(g.vertices))
        out += "  " + quote(v) + ";\n";
    for (const auto& [from, to] : g.edges)
        out += "  " + quote(from) + " -> " + quote(to) + ";\n";
    return out + "}\n";
}

std::optional<Predicate> positive_witness(const Formula& f, const PredicateList& preds) {
    for (const auto& h : head_predicates(f))
        if (contains(preds, h))
            return h;
    return std::nullopt;
}

std::string SplitReport::describe() const {
    std::string out = "(a) every strongly connected component within p or within q: ";
    out += components_ok ? "yes\n" : "no, component " + to_string(*bad_component) + "\n";
    out += "(b) F negative on q: ";
    out += f_negative_on_q ? "yes\n" : "no, " + to_string(*f_witness) + " occurs strictly positively in F\n";
    out += "(c) G negative on p: ";
    out += g_negative_on_p ? "yes\n" : "no, " + to_string(*g_witness) + " occurs strictly positively in G\n";
    out += ok() ? "split applies\n" : "split does not apply\n";
    return out;
}

SplitReport check_split(const Formula& f, const Formula& g, const Formula& h, const PredicateList& p,
                        const PredicateList& q) {
    SplitReport report;
    PredicateList pq = list_union(p, q);
    for (const auto& comp : strongly_connected_components(dependency_graph(Formula::conj(Formula::conj(f, g), h), pq))) {
        auto within = [&](const PredicateList& side) {
            return std::all_of(comp.begin(), comp.end(), [&](const Predicate& x) { return contains(side, x); });
        };
        if (!within(p) && !within(q)) {
            report.components_ok = false;
            report.bad_component = comp;
            break;
        }
    }
    report.f_witness = positive_witness(f, q);
    report.f_negative_on_q = !report.f_witness;
    report.g_witness = positive_witness(g, p);
    report.g_negative_on_p = !report.g_witness;
    return report;
}

bool verify_split_equivalence(const Formula& f, const Formula& g, const Formula& h, const PredicateList& p,
                              const PredicateList& q, int bound, const EngineOptions& opts) {
    Formula whole = Formula::conj(Formula::conj(f, g), h);
    Formula left = Formula::conj(f, h);
    Formula right = Formula::conj(g, h);
    Signature sig = symbols_of(whole);
    if (!sig.function_free())
        throw UnsupportedError("split verification requires function-free sentences");
    sig.predicates.insert(p.begin(), p.end());
    sig.predicates.insert(q.begin(), q.end());
    PredicateList preds = sig.predicate_list();
    std::vector<std::string> objects(sig.objects.begin(), sig.objects.end());
    PredicateList pq = list_union(p, q);

    for (int n = 1; n <= bound; ++n) {
        std::vector<std::string> universe;
        for (int e = 0; e < n; ++e)
            universe.push_back("#" + std::to_string(e));
        std::size_t atoms = 0;
        for (const auto& pred : preds)
            atoms += Extent(pred.arity, static_cast<std::size_t>(n)).size();
        std::uint64_t space = detail::checked_space(atoms, opts, "split verification");

        std::vector<int> assignment(objects.size(), 0);
        while (true) {
            PartialInterpretation frame(universe);
            for (std::size_t i = 0; i < objects.size(); ++i)
                frame.set_object(objects[i], assignment[i]);
            for (const auto& pred : preds)
                frame.cover(pred);
            detail::SmChecker cw(whole, pq, frame, opts), cl(left, p, frame, opts), cr(right, q, frame, opts);
            std::vector<std::vector<Extent*>> extents(3);
            for (const auto& pred : preds) {
                extents[0].push_back(&cw.frame().extent(pred));
                extents[1].push_back(&cl.frame().extent(pred));
                extents[2].push_back(&cr.frame().extent(pred));
            }
            for (std::uint64_t mask = 0; mask < space; ++mask) {
                for (auto& list : extents) {
                    std::size_t bit = 0;
                    for (auto* e : list) {
                        for (std::size_t k = 0; k < e->size(); ++k, ++bit)
                            e->set(k, mask >> bit & 1U);
                    }
                }
                bool lhs = cw.model() && cw.stable();
                bool rhs = cl.model() && cl.stable() && cr.model() && cr.stable();
                if (lhs != rhs)
                    return false;
            }
            std::size_t i = 0;
            while (i < assignment.size() && ++assignment[i] == n)
                assignment[i++] = 0;
            if (i == assignment.size())
                break;
        }
    }
    return true;
}

} // namespace fosm
