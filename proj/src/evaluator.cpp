#include "evaluator.hpp"

#include <fosm/error.hpp>

#include <algorithm>

namespace fosm::detail {

CompiledFormula::CompiledFormula(const Formula& f, const PartialInterpretation& frame,
                                 const std::map<Predicate, const Extent*>& overrides)
    : frame_(frame), overrides_(overrides), base_(static_cast<int>(frame.size())) {
    std::vector<std::pair<std::string, int>> scope;
    root_ = compile(f, scope, 0);
}

CompiledFormula::Term CompiledFormula::compile_term(const fosm::Term& t,
                                                    const std::vector<std::pair<std::string, int>>& scope) const {
    Term out{Term::Kind::Element, 0, nullptr, {}};
    switch (t.kind()) {
        case fosm::Term::Kind::Variable: {
            for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
                if (it->first == t.name()) {
                    out.kind = Term::Kind::Slot;
                    out.value = it->second;
                    return out;
                }
            }
            throw Error("free variable '" + t.name() + "' in a formula being evaluated");
        }
        case fosm::Term::Kind::Constant: {
            auto it = frame_.objects().find(t.name());
            if (it == frame_.objects().end())
                throw UncoveredConstantError("object constant '" + t.name() + "' is not covered");
            out.value = it->second;
            return out;
        }
        case fosm::Term::Kind::Function: {
            auto it = frame_.functions().find(t.name());
            if (it == frame_.functions().end() || it->second.first != static_cast<int>(t.args().size()))
                throw UncoveredConstantError("function constant '" + t.name() + "' is not covered");
            out.kind = Term::Kind::Apply;
            out.table = &it->second.second;
            for (const auto& a : t.args())
                out.args.push_back(compile_term(a, scope));
            return out;
        }
    }
    return out;
}

int CompiledFormula::compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope, int depth) {
    Node n{f.kind(), -1, -1, -1, nullptr, {}};
    switch (f.kind()) {
        case Formula::Kind::False: break;
        case Formula::Kind::Atom: {
            auto it = overrides_.find(f.predicate());
            n.extent = it != overrides_.end() ? it->second : &frame_.extent(f.predicate());
            for (const auto& t : f.args())
                n.terms.push_back(compile_term(t, scope));
            break;
        }
        case Formula::Kind::Equal:
            n.terms.push_back(compile_term(f.lhs_term(), scope));
            n.terms.push_back(compile_term(f.rhs_term(), scope));
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            n.left = compile(f.left(), scope, depth);
            n.right = compile(f.right(), scope, depth);
            break;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            n.slot = depth;
            slots_ = std::max(slots_, depth + 1);
            scope.emplace_back(f.variable(), depth);
            n.left = compile(f.body(), scope, depth + 1);
            scope.pop_back();
            break;
    }
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
}

int CompiledFormula::value(const Term& t, std::vector<int>& env) const {
    switch (t.kind) {
        case Term::Kind::Slot: return env[static_cast<std::size_t>(t.value)];
        case Term::Kind::Element: return t.value;
        case Term::Kind::Apply: {
            std::size_t idx = 0;
            for (const auto& a : t.args)
                idx = idx * static_cast<std::size_t>(base_) + static_cast<std::size_t>(value(a, env));
            return (*t.table)[idx];
        }
    }
    return 0;
}

bool CompiledFormula::eval(int node, std::vector<int>& env) const {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    switch (n.op) {
        case Formula::Kind::False: return false;
        case Formula::Kind::Atom: {
            std::size_t idx = 0;
            for (const auto& t : n.terms)
                idx = idx * static_cast<std::size_t>(base_) + static_cast<std::size_t>(value(t, env));
            return n.extent->test(idx);
        }
        case Formula::Kind::Equal: return value(n.terms[0], env) == value(n.terms[1], env);
        case Formula::Kind::And: return eval(n.left, env) && eval(n.right, env);
        case Formula::Kind::Or: return eval(n.left, env) || eval(n.right, env);
        case Formula::Kind::Implies: return !eval(n.left, env) || eval(n.right, env);
        case Formula::Kind::Forall:
            for (int e = 0; e < base_; ++e) {
                env[static_cast<std::size_t>(n.slot)] = e;
                if (!eval(n.left, env))
                    return false;
            }
            return true;
        case Formula::Kind::Exists:
            for (int e = 0; e < base_; ++e) {
                env[static_cast<std::size_t>(n.slot)] = e;
                if (eval(n.left, env))
                    return true;
            }
            return false;
    }
    return false;
}

bool CompiledFormula::eval() const {
    std::vector<int> env(static_cast<std::size_t>(slots_), 0);
    return eval(root_, env);
}

} // namespace fosm::detail
