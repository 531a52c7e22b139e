#pragma once
// Shorthands shared by the rule modules.

#include <algorithm>
#include <optional>
#include <vector>

#include "topos/engine.hpp"

namespace topos::ru {

inline Atom A(Rel r, uint32_t a0, uint32_t a1 = kNone, uint32_t a2 = kNone, uint32_t a3 = kNone) {
    return make_atom(r, a0, a1, a2, a3);
}

inline std::optional<FactId> yes(const Kb& kb, Rel r, uint32_t a0, uint32_t a1 = kNone, uint32_t a2 = kNone,
                                 uint32_t a3 = kNone) {
    return kb.lookup(A(r, a0, a1, a2, a3), true);
}

inline std::optional<FactId> no(const Kb& kb, Rel r, uint32_t a0, uint32_t a1 = kNone, uint32_t a2 = kNone,
                                uint32_t a3 = kNone) {
    return kb.lookup(A(r, a0, a1, a2, a3), false);
}

// Facts of relation r with the given sign whose argument at pos equals arg.
inline std::vector<FactId> with(const Kb& kb, Rel r, bool positive, int pos, uint32_t arg) {
    return kb.facts_with(r, positive, pos, arg);
}

inline const Term& term(const Kb& kb, IndId x) { return kb.terms().term(kb.terms().canon(x)); }

inline std::optional<IndId> existing(const Kb& kb, TermKind k, std::vector<IndId> args) {
    return kb.terms().find_existing(k, args);
}

inline std::optional<IndId> interior_term(const Kb& kb, IndId x) {
    if (term(kb, x).kind == TermKind::Interior) return kb.terms().canon(x);
    return existing(kb, TermKind::Interior, {x});
}

inline std::optional<IndId> closure_term(const Kb& kb, IndId x) {
    x = kb.terms().canon(x);
    if (x == kb.universal() || term(kb, x).kind == TermKind::Closure) return x;
    return existing(kb, TermKind::Closure, {x});
}

inline std::optional<IndId> compl_term(const Kb& kb, IndId x) {
    if (term(kb, x).kind == TermKind::Compl) return kb.terms().canon(term(kb, x).args[0]);
    return existing(kb, TermKind::Compl, {x});
}

// Constructs a term if the depth bound allows it.
template <class F>
std::optional<IndId> try_make(F&& f) {
    try {
        return f();
    } catch (const TermError&) {
        return std::nullopt;
    }
}

}  // namespace topos::ru

namespace topos::ru {

// Canonical classes holding a sum term that has x among its summands.
inline std::vector<IndId> sums_containing(const Kb& kb, IndId x) {
    std::vector<IndId> out;
    const auto& ts = kb.terms();
    x = ts.canon(x);
    for (IndId i = 0; i < ts.size(); ++i) {
        if (ts.term(i).kind != TermKind::Sum) continue;
        for (IndId a : ts.term(i).args)
            if (ts.canon(a) == x) {
                out.push_back(ts.canon(i));
                break;
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Every way the class of s is written as a sum (summands canonical).
inline std::vector<std::vector<IndId>> sum_forms(const Kb& kb, IndId s) {
    std::vector<std::vector<IndId>> out;
    const auto& ts = kb.terms();
    s = ts.canon(s);
    for (IndId i = 0; i < ts.size(); ++i) {
        if (ts.term(i).kind != TermKind::Sum || ts.canon(i) != s) continue;
        std::vector<IndId> args;
        for (IndId a : ts.term(i).args) args.push_back(ts.canon(a));
        out.push_back(std::move(args));
    }
    return out;
}

// Terms of the given kind in the class of x, by their canonical argument lists.
inline std::vector<std::vector<IndId>> forms(const Kb& kb, IndId x, TermKind k) {
    std::vector<std::vector<IndId>> out;
    const auto& ts = kb.terms();
    x = ts.canon(x);
    for (IndId i = 0; i < ts.size(); ++i) {
        if (ts.term(i).kind != k || ts.canon(i) != x) continue;
        std::vector<IndId> args;
        for (IndId a : ts.term(i).args) args.push_back(ts.canon(a));
        out.push_back(std::move(args));
    }
    return out;
}

}  // namespace topos::ru
