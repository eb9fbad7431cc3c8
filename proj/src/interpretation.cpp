#include <fosm/error.hpp>
#include <fosm/interpretation.hpp>

#include <algorithm>

namespace fosm {

std::string to_string(const GroundAtom& a) {
    if (a.args.empty())
        return a.predicate;
    std::string out = a.predicate + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i)
        out += (i ? "," : "") + a.args[i];
    return out + ")";
}

std::string to_string(const AtomSet& atoms) {
    std::string out = "{";
    bool first = true;
    for (const auto& a : atoms) {
        out += (first ? "" : ", ") + to_string(a);
        first = false;
    }
    return out + "}";
}

GroundAtom parse_ground_atom(const std::string& text) {
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string s = trim(text);
    GroundAtom a;
    auto open = s.find('(');
    if (open == std::string::npos) {
        a.predicate = s;
    } else {
        if (s.back() != ')')
            throw Error("malformed ground atom '" + text + "'");
        a.predicate = trim(s.substr(0, open));
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        std::size_t start = 0;
        while (true) {
            auto comma = inner.find(',', start);
            a.args.push_back(trim(inner.substr(start, comma - start)));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    if (a.predicate.empty())
        throw Error("malformed ground atom '" + text + "'");
    for (const auto& arg : a.args)
        if (arg.empty())
            throw Error("malformed ground atom '" + text + "'");
    return a;
}

// ---------------------------------------------------------------------------

Extent::Extent(int arity, std::size_t base) : arity_(arity), base_(base) {
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i)
        n *= base;
    bits_.assign(n, 0);
}

void Extent::clear() { std::fill(bits_.begin(), bits_.end(), 0); }

std::size_t Extent::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

std::size_t Extent::index(const std::vector<int>& tuple) const {
    std::size_t idx = 0;
    for (int e : tuple)
        idx = idx * base_ + static_cast<std::size_t>(e);
    return idx;
}

std::vector<int> Extent::tuple(std::size_t index) const {
    std::vector<int> out(static_cast<std::size_t>(arity_));
    for (int i = arity_ - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(index % base_);
        index /= base_;
    }
    return out;
}

// ---------------------------------------------------------------------------

PartialInterpretation::PartialInterpretation(std::vector<std::string> universe) : universe_(std::move(universe)) {
    std::sort(universe_.begin(), universe_.end());
    if (std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
        throw Error("duplicate universe element");
}

PartialInterpretation PartialInterpretation::herbrand(const Signature& sig, const AtomSet& atoms) {
    if (!sig.function_free())
        throw UnsupportedError("Herbrand interpretations require a function-free signature");
    PartialInterpretation out(std::vector<std::string>(sig.objects.begin(), sig.objects.end()));
    for (std::size_t i = 0; i < out.universe_.size(); ++i)
        out.objects_[out.universe_[i]] = static_cast<int>(i);
    for (const auto& p : sig.predicates)
        out.cover(p);
    for (const auto& a : atoms)
        out.add(a);
    return out;
}

int PartialInterpretation::element(const std::string& name) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), name);
    if (it == universe_.end() || *it != name)
        throw Error("'" + name + "' is not a universe element");
    return static_cast<int>(it - universe_.begin());
}

void PartialInterpretation::set_object(const std::string& name, int element) {
    if (element < 0 || static_cast<std::size_t>(element) >= universe_.size())
        throw Error("object '" + name + "' mapped outside the universe");
    objects_[name] = element;
}

void PartialInterpretation::set_function(const std::string& name, int arity, std::vector<int> table) {
    Extent shape(arity, universe_.size());
    if (table.size() != shape.size())
        throw Error("function table of '" + name + "' has the wrong size");
    functions_[name] = {arity, std::move(table)};
}

Extent& PartialInterpretation::cover(const Predicate& p) {
    auto it = extents_.find(p);
    if (it == extents_.end())
        it = extents_.emplace(p, Extent(p.arity, universe_.size())).first;
    return it->second;
}

const Extent& PartialInterpretation::extent(const Predicate& p) const {
    auto it = extents_.find(p);
    if (it == extents_.end())
        throw UncoveredConstantError("predicate '" + p.name + "/" + std::to_string(p.arity) + "' is not covered");
    return it->second;
}

Extent& PartialInterpretation::extent(const Predicate& p) {
    auto it = extents_.find(p);
    if (it == extents_.end())
        throw UncoveredConstantError("predicate '" + p.name + "/" + std::to_string(p.arity) + "' is not covered");
    return it->second;
}

PredicateList PartialInterpretation::predicates() const {
    PredicateList out;
    for (const auto& [p, e] : extents_)
        out.push_back(p);
    return out;
}

namespace {
std::vector<int> positions(const PartialInterpretation& I, const GroundAtom& a) {
    std::vector<int> tuple;
    for (const auto& arg : a.args)
        tuple.push_back(I.element(arg));
    return tuple;
}
} // namespace

void PartialInterpretation::add(const GroundAtom& a) {
    Predicate p{a.predicate, static_cast<int>(a.args.size())};
    Extent& e = extent(p);
    e.set(e.index(positions(*this, a)));
}

bool PartialInterpretation::holds(const GroundAtom& a) const {
    Predicate p{a.predicate, static_cast<int>(a.args.size())};
    const Extent& e = extent(p);
    return e.test(e.index(positions(*this, a)));
}

AtomSet PartialInterpretation::atoms() const { return atoms(predicates()); }

AtomSet PartialInterpretation::atoms(const PredicateList& only) const {
    AtomSet out;
    for (const auto& [p, e] : extents_) {
        if (!contains(only, p))
            continue;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e.test(i))
                continue;
            GroundAtom a{p.name, {}};
            for (int el : e.tuple(i))
                a.args.push_back(universe_[static_cast<std::size_t>(el)]);
            out.insert(std::move(a));
        }
    }
    return out;
}

PartialInterpretation PartialInterpretation::restrict(const Signature& c) const {
    PartialInterpretation out;
    out.universe_ = universe_;
    for (const auto& [name, el] : objects_)
        if (c.objects.count(name))
            out.objects_.emplace(name, el);
    for (const auto& [name, fn] : functions_)
        if (c.functions.count(name))
            out.functions_.emplace(name, fn);
    for (const auto& [p, e] : extents_)
        if (c.predicates.count(p))
            out.extents_.emplace(p, e);
    return out;
}

PartialInterpretation PartialInterpretation::restrict(const PredicateList& preds) const {
    PartialInterpretation out = *this;
    for (auto it = out.extents_.begin(); it != out.extents_.end();)
        it = contains(preds, it->first) ? std::next(it) : out.extents_.erase(it);
    return out;
}

bool compatible(const PartialInterpretation& a, const PartialInterpretation& b) {
    if (a.universe() != b.universe())
        return false;
    for (const auto& [name, el] : a.objects()) {
        auto it = b.objects().find(name);
        if (it != b.objects().end() && it->second != el)
            return false;
    }
    for (const auto& [name, fn] : a.functions()) {
        auto it = b.functions().find(name);
        if (it != b.functions().end() && it->second != fn)
            return false;
    }
    for (const auto& [p, e] : a.extents()) {
        auto it = b.extents().find(p);
        if (it != b.extents().end() && !(it->second == e))
            return false;
    }
    return true;
}

PartialInterpretation unite(const PartialInterpretation& a, const PartialInterpretation& b) {
    if (!compatible(a, b))
        throw IncompatibleError("partial interpretations are not compatible");
    PartialInterpretation out = a;
    for (const auto& [name, el] : b.objects())
        out.set_object(name, el);
    for (const auto& [name, fn] : b.functions())
        out.set_function(name, fn.first, fn.second);
    for (const auto& [p, e] : b.extents())
        out.cover(p) = e;
    return out;
}

std::string to_string(const PartialInterpretation& i) { return to_string(i.atoms()); }

} // namespace fosm
