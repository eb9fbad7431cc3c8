#include <fosm/printer.hpp>

namespace fosm {

std::string to_string(const Term& t) {
    if (t.kind() != Term::Kind::Function)
        return t.name();
    std::string out = t.name() + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i)
            out += ",";
        out += to_string(t.args()[i]);
    }
    return out + ")";
}

std::string to_string(const StepExpr& s) {
    switch (s.kind) {
        case StepExpr::Kind::Counter: return "t";
        case StepExpr::Kind::Plus: return "t+" + std::to_string(s.offset);
        case StepExpr::Kind::Minus: return "t-" + std::to_string(s.offset);
        case StepExpr::Kind::Constant: return std::to_string(s.offset);
    }
    return "t";
}

std::string to_string(const Predicate& p) {
    return p.arity == 0 ? p.name : p.name + "/" + std::to_string(p.arity);
}

std::string to_string(const PredicateList& list) {
    std::string out = "{";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(list[i]);
    }
    return out + "}";
}

namespace {

struct Symbols {
    const char* top;
    const char* bot;
    const char* neg;
    const char* conj;
    const char* disj;
    const char* impl;
    const char* all;
    const char* ex;
};

constexpr Symbols unicode{"⊤", "⊥", "¬", " ∧ ", " ∨ ", " → ", "∀", "∃"};
constexpr Symbols ascii{"#true", "#false", "~", " & ", " | ", " -> ", "forall ", "exists "};

// Binding strength: higher binds tighter.
enum Level { LImpl = 0, LDisj = 1, LConj = 2, LUnary = 3 };

Level level_of(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::And: return LConj;
        case Formula::Kind::Or: return LDisj;
        case Formula::Kind::Implies: return f.is_negation() ? LUnary : LImpl;
        default: return LUnary;
    }
}

class Printer {
public:
    explicit Printer(const PrintOptions& opts) : s_(opts.ascii ? ascii : unicode), ascii_(opts.ascii) {}

    std::string print(const Formula& f) {
        switch (f.kind()) {
            case Formula::Kind::False: return s_.bot;
            case Formula::Kind::Atom: return atom(f);
            case Formula::Kind::Equal: return to_string(f.lhs_term()) + " = " + to_string(f.rhs_term());
            case Formula::Kind::And: return chain(f, Formula::Kind::And, s_.conj, LConj);
            case Formula::Kind::Or: return chain(f, Formula::Kind::Or, s_.disj, LDisj);
            case Formula::Kind::Implies: {
                if (f.is_truth())
                    return s_.top;
                if (f.is_negation())
                    return s_.neg + operand(f.left(), /*needs_atomic=*/true);
                return side(f.left()) + s_.impl + side(f.right());
            }
            case Formula::Kind::Forall:
            case Formula::Kind::Exists: return quantifier(f);
        }
        return {};
    }

private:
    std::string atom(const Formula& f) {
        std::string out = f.predicate().name;
        if (f.step())
            out += "@(" + to_string(*f.step()) + ")";
        if (!f.args().empty()) {
            out += "(";
            for (std::size_t i = 0; i < f.args().size(); ++i) {
                if (i)
                    out += ",";
                out += to_string(f.args()[i]);
            }
            out += ")";
        }
        return out;
    }

    // Operand of ¬ or body of a quantifier: atomic-looking forms print bare.
    std::string operand(const Formula& f, bool needs_atomic) {
        bool bare = level_of(f) == LUnary && f.kind() != Formula::Kind::Equal;
        if (bare || !needs_atomic)
            return print(f);
        return "(" + print(f) + ")";
    }

    // Operand of an implication; nested implications are always parenthesized.
    std::string side(const Formula& f) {
        if (level_of(f) == LImpl)
            return "(" + print(f) + ")";
        return print(f);
    }

    std::string chain(const Formula& f, Formula::Kind kind, const char* sep, Level lvl) {
        // Chains are left-nested; a right operand of the same kind keeps its parentheses.
        auto part = [&](const Formula& g, bool left) {
            if ((left && g.kind() == kind) || level_of(g) > lvl)
                return print(g);
            return "(" + print(g) + ")";
        };
        return part(f.left(), true) + sep + part(f.right(), false);
    }

    std::string quantifier(const Formula& f) {
        std::string out = f.kind() == Formula::Kind::Forall ? s_.all : s_.ex;
        out += f.variable();
        const Formula& body = f.body();
        if (body.is_quantifier())
            return out + (ascii_ ? " " : "") + print(body);
        if (level_of(body) == LUnary && body.kind() != Formula::Kind::Equal)
            return out + " " + print(body);
        return out + "(" + print(body) + ")";
    }

    Symbols s_;
    bool ascii_;
};

} // namespace

std::string to_string(const Formula& f, const PrintOptions& opts) { return Printer(opts).print(f); }

} // namespace fosm
