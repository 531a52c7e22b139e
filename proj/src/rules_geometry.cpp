// Connection calculus, boolean/topological constructors and the boundary tiers.
#include "rule_util.hpp"

namespace topos {

using namespace ru;

namespace {

using R = RuleId;

struct Ctx {
    Kb& kb;
    FactId id;
    bool pos;
    IndId x, y;

    FactId d(Rel r, bool p, RuleId rule, std::initializer_list<FactId> more, IndId a, IndId b = kNone,
             IndId c = kNone) {
        std::vector<FactId> prem{id};
        for (FactId f : more)
            if (f != kNone) prem.push_back(f);
        return kb.derive_v(A(r, a, b, c), p, rule, prem);
    }
};

IndId other_arg(const Kb& kb, FactId f, int pos) { return kb.fact(f).atom.a[size_t(pos)]; }

// x is c(a) for some a in its class
std::vector<IndId> closure_args(const Kb& kb, IndId x) {
    std::vector<IndId> out;
    for (auto& f : forms(kb, x, TermKind::Closure)) out.push_back(f[0]);
    return out;
}

std::vector<IndId> compl_args(const Kb& kb, IndId x) {
    std::vector<IndId> out;
    for (auto& f : forms(kb, x, TermKind::Compl)) out.push_back(f[0]);
    return out;
}

std::optional<IndId> make_closure(Kb& kb, IndId x) {
    if (auto c = closure_term(kb, x)) return c;
    return try_make([&] { return kb.construct_closure(x); });
}

// A4 read backward: C(z, a+b+...) from one summand, not C from all.
void sum_contacts(Ctx& c, IndId z, IndId a) {
    for (IndId s : sums_containing(c.kb, a)) {
        if (c.pos) {
            c.d(Rel::C, true, R::A4, {}, z, s);
        } else {
            for (auto& args : sum_forms(c.kb, s)) {
                std::vector<FactId> prem{c.id};
                bool all = true;
                for (IndId b : args) {
                    if (b == a) continue;
                    auto f = no(c.kb, Rel::C, z, b);
                    if (!f) {
                        all = false;
                        break;
                    }
                    prem.push_back(*f);
                }
                if (all) c.kb.derive_v(A(Rel::C, z, s), false, R::A4, prem);
            }
        }
    }
}

void sum_split(Kb& kb, IndId x, IndId s, FactId p_fact) {
    // P(x, y+z) & ~O(x,y) -> P(x,z)
    for (auto& args : sum_forms(kb, s)) {
        std::vector<FactId> prem{p_fact};
        std::vector<IndId> open;
        for (IndId b : args) {
            if (auto f = no(kb, Rel::O, x, b)) prem.push_back(*f);
            else open.push_back(b);
        }
        if (open.size() == 1 && prem.size() > 1) kb.derive_v(A(Rel::P, x, open[0]), true, R::SumSplit, prem);
    }
}

void sum_lub(Kb& kb, IndId a, IndId w) {
    // P(x,z) & P(y,z) -> P(x+y,z)
    for (IndId s : sums_containing(kb, a)) {
        if (s == w) continue;
        for (auto& args : sum_forms(kb, s)) {
            std::vector<FactId> prem;
            bool all = true;
            for (IndId b : args) {
                if (b == w) continue;
                auto f = yes(kb, Rel::P, b, w);
                if (!f) {
                    all = false;
                    break;
                }
                prem.push_back(*f);
            }
            if (all) kb.derive_v(A(Rel::P, s, w), true, R::SumLub, prem);
        }
    }
}

void int_mono(Kb& kb, FactId id, IndId x, IndId y) {
    bool xi = !forms(kb, x, TermKind::Interior).empty();
    bool yi = !forms(kb, y, TermKind::Interior).empty();
    auto ix = interior_term(kb, x);
    std::optional<IndId> iy = interior_term(kb, y);
    if (!iy && xi) {
        // P(ix, y) -> P(ix, iy): the interior of the bigger individual is needed
        iy = try_make([&] { return kb.construct_interior(y); });
    }
    if (xi) ix = kb.terms().canon(x);
    if (yi) iy = kb.terms().canon(y);
    if (ix && iy && *ix != *iy) kb.derive(A(Rel::P, *ix, *iy), true, R::IntMono, {id});
}

void fire_c(Ctx& c) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (c.pos) {
        if (x == y) return;
        c.d(Rel::C, true, R::A2, {}, y, x);
        for (FactId p : with(kb, Rel::P, true, 0, y)) c.d(Rel::C, true, R::D1F, {p}, x, other_arg(kb, p, 1));
        for (FactId n : with(kb, Rel::C, false, 0, x)) c.d(Rel::P, false, R::D1N, {n}, y, other_arg(kb, n, 1));
        if (auto n = no(kb, Rel::O, x, y)) c.d(Rel::EC, true, R::D4B, {*n}, x, y);
        c.d(Rel::ICont, false, R::ContExcl, {}, x, y);
        c.d(Rel::WCont, false, R::ContExcl, {}, x, y);
        c.d(Rel::Sp, false, R::SpC, {}, x, y);
        for (IndId a : closure_args(kb, x))
            for (IndId b : closure_args(kb, y)) {
                c.d(Rel::Sp, false, R::D10, {}, a, b);
                if (auto n = no(kb, Rel::C, a, b)) c.d(Rel::ICont, true, R::D12, {*n}, a, b);
            }
        if (auto ec = no(kb, Rel::EC, x, y)) c.d(Rel::O, true, R::D4B, {*ec}, x, y);
        sum_contacts(c, x, y);
    } else {
        c.d(Rel::C, false, R::A2, {}, y, x);
        for (FactId p : with(kb, Rel::P, true, 1, y)) c.d(Rel::C, false, R::D1F, {p}, x, other_arg(kb, p, 0));
        for (FactId p : with(kb, Rel::C, true, 0, x)) c.d(Rel::P, false, R::D1N, {p}, other_arg(kb, p, 1), y);
        c.d(Rel::O, false, R::OC, {}, x, y);
        c.d(Rel::EC, false, R::D4N, {}, x, y);
        c.d(Rel::P, false, R::D1N, {}, x, y);
        c.d(Rel::P, false, R::D1N, {}, y, x);
        for (IndId a : closure_args(kb, x))
            for (IndId b : closure_args(kb, y)) c.d(Rel::Sp, true, R::D10, {}, a, b);
        // ICont(x,y) <-> ~C(x,y) & C(cx,cy)
        auto cx = closure_term(kb, x), cy = closure_term(kb, y);
        if (cx && cy) {
            if (auto f = yes(kb, Rel::C, *cx, *cy)) c.d(Rel::ICont, true, R::D12, {*f}, x, y);
            if (auto f = no(kb, Rel::ICont, x, y)) c.d(Rel::C, false, R::D12, {*f}, *cx, *cy);
        }
        sum_contacts(c, x, y);
    }
}

void fire_p(Ctx& c) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (c.pos) {
        if (x == y) return;
        c.d(Rel::C, true, R::D1F, {}, x, y);
        c.d(Rel::O, true, R::D3B, {}, x, y);
        for (FactId f : with(kb, Rel::C, true, 1, x)) c.d(Rel::C, true, R::D1F, {f}, other_arg(kb, f, 0), y);
        for (FactId f : with(kb, Rel::C, false, 0, y)) c.d(Rel::C, false, R::D1F, {f}, other_arg(kb, f, 1), x);
        for (FactId f : with(kb, Rel::C, false, 1, y)) c.d(Rel::C, false, R::D1F, {f}, other_arg(kb, f, 0), x);
        for (FactId f : with(kb, Rel::P, true, 0, y)) {
            IndId w = other_arg(kb, f, 1);
            if (w != x) c.d(Rel::P, true, R::PTrans, {f}, x, w);
        }
        for (FactId f : with(kb, Rel::P, true, 1, x)) {
            IndId w = other_arg(kb, f, 0);
            if (w != y) c.d(Rel::P, true, R::PTrans, {f}, w, y);
        }
        if (auto f = yes(kb, Rel::P, y, x)) {
            c.d(Rel::Eqs, true, R::A3P, {*f}, x, y);
            c.d(Rel::PP, false, R::D2N, {*f}, x, y);
        }
        if (auto f = no(kb, Rel::P, y, x)) c.d(Rel::PP, true, R::D2B, {*f}, x, y);
        if (auto f = no(kb, Rel::PP, x, y)) c.d(Rel::P, true, R::D2F, {*f}, y, x);
        for (FactId f : with(kb, Rel::P, true, 0, x)) {
            IndId w = other_arg(kb, f, 1);
            if (w != y) c.d(Rel::O, true, R::D3B, {f}, y, w);
        }
        for (FactId f : with(kb, Rel::O, false, 0, y)) c.d(Rel::P, false, R::D3N, {f}, x, other_arg(kb, f, 1));
        for (FactId f : with(kb, Rel::O, false, 0, y)) c.d(Rel::O, false, R::D3N, {f}, x, other_arg(kb, f, 1));
        for (FactId f : with(kb, Rel::O, true, 0, x)) c.d(Rel::O, true, R::OUp, {f}, y, other_arg(kb, f, 1));
        for (IndId b : compl_args(kb, y)) c.d(Rel::O, false, R::A6, {}, x, b);
        for (FactId ec : with(kb, Rel::EC, true, 1, x)) {
            IndId z = other_arg(kb, ec, 0);
            if (auto ec2 = yes(kb, Rel::EC, z, y)) c.d(Rel::TP, true, R::D5B, {ec, *ec2}, x, y);
        }
        if (auto f = no(kb, Rel::TP, x, y)) c.d(Rel::NTP, true, R::D56, {*f}, x, y);
        if (auto f = no(kb, Rel::NTP, x, y)) c.d(Rel::TP, true, R::D56, {*f}, x, y);
        sum_split(kb, x, y, c.id);
        sum_lub(kb, x, y);
        int_mono(kb, c.id, x, y);
        // A19 and Fn4 are read by the distance and Allen modules
    } else {
        c.d(Rel::PP, false, R::D2N, {}, x, y);
        c.d(Rel::TP, false, R::D56N, {}, x, y);
        c.d(Rel::NTP, false, R::D56N, {}, x, y);
        if (auto f = yes(kb, Rel::P, y, x)) c.d(Rel::PP, true, R::D2B, {*f}, y, x);
        for (IndId b : compl_args(kb, y)) c.d(Rel::O, true, R::A6, {}, x, b);
        // P(x,z) & P(z,y) would give P(x,y)
        for (FactId f : with(kb, Rel::P, true, 0, x)) {
            IndId z = other_arg(kb, f, 1);
            if (z != y) c.d(Rel::P, false, R::PTrans, {f}, z, y);
        }
        for (FactId f : with(kb, Rel::P, true, 1, y)) {
            IndId z = other_arg(kb, f, 0);
            if (z != x) c.d(Rel::P, false, R::PTrans, {f}, x, z);
        }
    }
}

void fire_pp(Ctx& c) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (c.pos) {
        c.d(Rel::P, true, R::D2F, {}, x, y);
        c.d(Rel::P, false, R::D2F, {}, y, x);
        for (FactId f : with(kb, Rel::PP, true, 0, y)) c.d(Rel::PP, true, R::PPTrans, {f}, x, other_arg(kb, f, 1));
        for (FactId f : with(kb, Rel::PP, true, 1, x)) c.d(Rel::PP, true, R::PPTrans, {f}, other_arg(kb, f, 0), y);
    } else {
        if (auto f = yes(kb, Rel::P, x, y)) c.d(Rel::P, true, R::D2F, {*f}, y, x);
    }
}

void fire_o(Ctx& c) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (c.pos) {
        if (x == y) return;
        c.d(Rel::O, true, R::D3B, {}, y, x);
        c.d(Rel::C, true, R::OC, {}, x, y);
        c.d(Rel::EC, false, R::D4N, {}, x, y);
        c.d(Rel::ICont, false, R::ContExcl, {}, x, y);
        c.d(Rel::WCont, false, R::ContExcl, {}, x, y);
        c.d(Rel::Cont, false, R::ContExcl, {}, x, y);
        for (FactId f : with(kb, Rel::P, true, 0, x)) c.d(Rel::O, true, R::OUp, {f}, other_arg(kb, f, 1), y);
        // A6 with -(-b) = b
        if (auto cy = compl_term(kb, y)) c.d(Rel::P, false, R::A6, {}, x, *cy);
        // A10
        auto ox = yes(kb, Rel::OP, x), oy = yes(kb, Rel::OP, y);
        if (ox && oy)
            if (auto xy = existing(kb, TermKind::Inter, {std::min(x, y), std::max(x, y)}))
                c.d(Rel::OP, true, R::A10, {*ox, *oy}, *xy);
    } else {
        c.d(Rel::O, false, R::D3N, {}, y, x);
        c.d(Rel::P, false, R::D3N, {}, x, y);
        c.d(Rel::P, false, R::D3N, {}, y, x);
        for (FactId f : with(kb, Rel::P, true, 1, x)) {
            IndId w = other_arg(kb, f, 0);
            c.d(Rel::P, false, R::D3N, {f}, w, y);
            c.d(Rel::O, false, R::D3N, {f}, w, y);
        }
        if (auto f = yes(kb, Rel::C, x, y)) c.d(Rel::EC, true, R::D4B, {*f}, x, y);
        if (auto cy = compl_term(kb, y)) c.d(Rel::P, true, R::A6, {}, x, *cy);
        for (IndId s : sums_containing(kb, y))
            if (auto f = yes(kb, Rel::P, x, s)) sum_split(kb, x, s, *f);
    }
}

void fire_ec(Ctx& c) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (c.pos) {
        c.d(Rel::C, true, R::D4F, {}, x, y);
        c.d(Rel::O, false, R::D4F, {}, x, y);
        c.d(Rel::EC, true, R::D4F, {}, y, x);
        c.d(Rel::Cont, true, R::D14, {}, x, y);
        c.d(Rel::ICont, false, R::ContExcl, {}, x, y);
        c.d(Rel::WCont, false, R::ContExcl, {}, x, y);
        for (FactId f : with(kb, Rel::NTP, true, 0, x)) c.d(Rel::O, true, R::NtpEcO, {f}, other_arg(kb, f, 1), y);
        for (FactId f : with(kb, Rel::NTP, true, 0, y)) c.d(Rel::EC, false, R::D6F, {f}, x, other_arg(kb, f, 1));
        // D5: P(y,w) & EC(x,y) & EC(x,w) -> TP(y,w)
        for (FactId f : with(kb, Rel::P, true, 0, y)) {
            IndId w = other_arg(kb, f, 1);
            if (auto e2 = yes(kb, Rel::EC, x, w)) c.d(Rel::TP, true, R::D5B, {f, *e2}, y, w);
        }
        for (FactId f : with(kb, Rel::P, true, 1, y)) {
            IndId w = other_arg(kb, f, 0);
            if (auto e2 = yes(kb, Rel::EC, x, w)) c.d(Rel::TP, true, R::D5B, {f, *e2}, w, y);
        }
    } else {
        c.d(Rel::EC, false, R::D4N, {}, y, x);
        if (auto f = yes(kb, Rel::C, x, y)) c.d(Rel::O, true, R::D4B, {*f}, x, y);
    }
}

void fire_tp(Ctx& c, bool ntp) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    Rel other = ntp ? Rel::TP : Rel::NTP;
    if (c.pos) {
        c.d(Rel::P, true, ntp ? R::D6F : R::D5F, {}, x, y);
        c.d(other, false, ntp ? R::D6F : R::D5F, {}, x, y);
        if (ntp) {
            for (FactId f : with(kb, Rel::NTP, true, 0, y)) c.d(Rel::NTP, true, R::NTPTrans, {f}, x, other_arg(kb, f, 1));
            for (FactId f : with(kb, Rel::NTP, true, 1, x)) c.d(Rel::NTP, true, R::NTPTrans, {f}, other_arg(kb, f, 0), y);
            for (FactId f : with(kb, Rel::EC, true, 0, x)) c.d(Rel::O, true, R::NtpEcO, {f}, y, other_arg(kb, f, 1));
            for (FactId f : with(kb, Rel::EC, true, 1, x)) c.d(Rel::EC, false, R::D6F, {f}, other_arg(kb, f, 0), y);
        }
    } else {
        if (auto f = yes(kb, Rel::P, x, y)) c.d(other, true, R::D56, {*f}, x, y);
    }
}

void contact_resolution(Ctx& c, IndId x, IndId y) {
    Kb& kb = c.kb;
    // D14 with two of the three kinds refuted
    auto ec = no(kb, Rel::EC, x, y), ic = no(kb, Rel::ICont, x, y), wc = no(kb, Rel::WCont, x, y);
    if (auto cont = yes(kb, Rel::Cont, x, y)) {
        if (ec && ic) kb.derive(A(Rel::WCont, x, y), true, R::D14, {*cont, *ec, *ic});
        if (ec && wc) kb.derive(A(Rel::ICont, x, y), true, R::D14, {*cont, *ec, *wc});
        if (ic && wc) kb.derive(A(Rel::EC, x, y), true, R::D14, {*cont, *ic, *wc});
    }
    if (ec && ic && wc) kb.derive(A(Rel::Cont, x, y), false, R::D14, {*ec, *ic, *wc});
}

void fire_icont(Ctx& c) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (c.pos) {
        c.d(Rel::ICont, true, R::D12, {}, y, x);
        c.d(Rel::C, false, R::D12, {}, x, y);
        c.d(Rel::Cont, true, R::D14, {}, x, y);
        c.d(Rel::EC, false, R::ContExcl, {}, x, y);
        c.d(Rel::WCont, false, R::ContExcl, {}, x, y);
        auto cx = make_closure(kb, x), cy = make_closure(kb, y);
        if (cx && cy) c.d(Rel::C, true, R::D12, {}, *cx, *cy);
    } else {
        c.d(Rel::ICont, false, R::D12, {}, y, x);
        auto cx = closure_term(kb, x), cy = closure_term(kb, y);
        if (cx && cy) {
            if (auto f = no(kb, Rel::C, x, y)) c.d(Rel::C, false, R::D12, {*f}, *cx, *cy);
        }
    }
    contact_resolution(c, x, y);
}

void fire_wcont(Ctx& c) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (c.pos) {
        c.d(Rel::C, false, R::D13, {}, x, y);
        c.d(Rel::Cont, true, R::D14, {}, x, y);
        c.d(Rel::EC, false, R::ContExcl, {}, x, y);
        c.d(Rel::ICont, false, R::ContExcl, {}, x, y);
        auto cx = make_closure(kb, x), cy = make_closure(kb, y);
        if (cx && cy) c.d(Rel::C, false, R::D13, {}, *cx, *cy);
    }
    contact_resolution(c, x, y);
}

void fire_cont(Ctx& c) {
    if (c.pos) {
        c.d(Rel::O, false, R::ContExcl, {}, c.x, c.y);
    } else {
        c.d(Rel::EC, false, R::D14, {}, c.x, c.y);
        c.d(Rel::ICont, false, R::D14, {}, c.x, c.y);
        c.d(Rel::WCont, false, R::D14, {}, c.x, c.y);
    }
    contact_resolution(c, c.x, c.y);
}

void fire_sp(Ctx& c) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (c.pos) {
        c.d(Rel::Sp, true, R::D10, {}, y, x);
        c.d(Rel::C, false, R::SpC, {}, x, y);
        auto cx = make_closure(kb, x), cy = make_closure(kb, y);
        if (cx && cy) c.d(Rel::C, false, R::D10, {}, *cx, *cy);
        if (auto s = existing(kb, TermKind::Sum, {x, y})) c.d(Rel::Con, false, R::D11, {}, *s);
    } else {
        c.d(Rel::Sp, false, R::D10, {}, y, x);
        auto cx = closure_term(kb, x), cy = closure_term(kb, y);
        if (cx && cy) c.d(Rel::C, true, R::D10, {}, *cx, *cy);
    }
}

void fire_op_cl(Ctx& c, bool open) {
    if (!c.pos) return;
    Kb& kb = c.kb;
    auto t = try_make([&] { return open ? kb.construct_interior(c.x) : kb.construct_closure(c.x); });
    if (t) c.d(Rel::Eqs, true, open ? R::D8 : R::D9, {}, c.x, *t);
    if (open)
        for (FactId f : with(kb, Rel::O, true, 0, c.x)) {
            IndId y = other_arg(kb, f, 1);
            if (auto oy = yes(kb, Rel::OP, y))
                if (auto xy = existing(kb, TermKind::Inter, {std::min(c.x, y), std::max(c.x, y)}))
                    c.d(Rel::OP, true, R::A10, {f, *oy}, *xy);
        }
}

// D17, D20, D23 backward; D24-D26 both ways.
void fire_boundary(Ctx& c, Rel r) {
    Kb& kb = c.kb;
    IndId x = c.x, y = c.y;
    if (!c.pos) {
        if (r == Rel::Surface) {
            auto con = yes(kb, Rel::Con, x), l1 = yes(kb, Rel::Lim1, x, y);
            if (con && l1) c.d(Rel::Lim2, true, R::D24, {*con, *l1}, x, y);
        }
        if (r == Rel::Lim2) {
            auto con = yes(kb, Rel::Con, x), l1 = yes(kb, Rel::Lim1, x, y);
            if (con && l1) c.d(Rel::Surface, true, R::D24, {*con, *l1}, x, y);
        }
        if (r == Rel::Lim3) {
            auto con = yes(kb, Rel::Con, x), l2 = yes(kb, Rel::Lim2, x, y);
            if (con && l2) c.d(Rel::Line, true, R::D24, {*con, *l2}, x, y);
        }
        return;
    }
    switch (r) {
    case Rel::Env:
        // Env(x, y) & TP(w, x) -> Lim1(w, y)
        c.d(Rel::TP, true, R::D15, {}, x, y);
        for (FactId f : with(kb, Rel::TP, true, 1, x)) c.d(Rel::Lim1, true, R::D17, {f}, other_arg(kb, f, 0), y);
        break;
    case Rel::Contour:
        // Contour(x, w') & Lim1(w', y) & TP(v, x) -> Lim2(v, y)
        for (FactId l : with(kb, Rel::Lim1, true, 0, y))
            for (FactId f : with(kb, Rel::TP, true, 1, x))
                c.d(Rel::Lim2, true, R::D17, {l, f}, other_arg(kb, f, 0), other_arg(kb, l, 1));
        break;
    case Rel::Ends:
        for (FactId l : with(kb, Rel::Lim2, true, 0, y))
            for (FactId f : with(kb, Rel::TP, true, 1, x))
                c.d(Rel::Lim3, true, R::D17, {l, f}, other_arg(kb, f, 0), other_arg(kb, l, 1));
        break;
    case Rel::Lim1:
        for (FactId f : with(kb, Rel::Contour, true, 1, x))
            for (FactId t : with(kb, Rel::TP, true, 1, other_arg(kb, f, 0)))
                c.d(Rel::Lim2, true, R::D17, {f, t}, other_arg(kb, t, 0), y);
        if (auto con = yes(kb, Rel::Con, x))
            if (auto n2 = no(kb, Rel::Lim2, x, y)) c.d(Rel::Surface, true, R::D24, {*con, *n2}, x, y);
        break;
    case Rel::Lim2:
        for (FactId f : with(kb, Rel::Ends, true, 1, x))
            for (FactId t : with(kb, Rel::TP, true, 1, other_arg(kb, f, 0)))
                c.d(Rel::Lim3, true, R::D17, {f, t}, other_arg(kb, t, 0), y);
        c.d(Rel::Surface, false, R::D24, {}, x, y);
        if (auto con = yes(kb, Rel::Con, x))
            if (auto n3 = no(kb, Rel::Lim3, x, y)) c.d(Rel::Line, true, R::D24, {*con, *n3}, x, y);
        break;
    case Rel::Lim3:
        c.d(Rel::Line, false, R::D24, {}, x, y);
        if (auto con = yes(kb, Rel::Con, x)) c.d(Rel::Point, true, R::D24, {*con}, x, y);
        break;
    case Rel::Surface:
        c.d(Rel::Con, true, R::D24, {}, x);
        c.d(Rel::Lim1, true, R::D24, {}, x, y);
        c.d(Rel::Lim2, false, R::D24, {}, x, y);
        break;
    case Rel::Line:
        c.d(Rel::Con, true, R::D24, {}, x);
        c.d(Rel::Lim2, true, R::D24, {}, x, y);
        c.d(Rel::Lim3, false, R::D24, {}, x, y);
        break;
    case Rel::Point:
        c.d(Rel::Con, true, R::D24, {}, x);
        c.d(Rel::Lim3, true, R::D24, {}, x, y);
        break;
    default: break;
    }
}

void fire_con(Ctx& c) {
    Kb& kb = c.kb;
    if (!c.pos) return;
    IndId x = c.x;
    for (Rel r : {Rel::Lim1, Rel::Lim2, Rel::Lim3})
        for (FactId f : with(kb, r, true, 0, x)) kb.enqueue(f);
}

void fire_tp_env(Ctx& c) {
    // TP(x, z) & Env(z, y) -> Lim1(x, y)
    Kb& kb = c.kb;
    if (!c.pos) return;
    for (FactId f : with(kb, Rel::Env, true, 0, c.y)) c.d(Rel::Lim1, true, R::D17, {f}, c.x, other_arg(kb, f, 1));
    for (FactId f : with(kb, Rel::Contour, true, 0, c.y))
        for (FactId l : with(kb, Rel::Lim1, true, 0, other_arg(kb, f, 1)))
            c.d(Rel::Lim2, true, R::D17, {f, l}, c.x, other_arg(kb, l, 1));
    for (FactId f : with(kb, Rel::Ends, true, 0, c.y))
        for (FactId l : with(kb, Rel::Lim2, true, 0, other_arg(kb, f, 1)))
            c.d(Rel::Lim3, true, R::D17, {f, l}, c.x, other_arg(kb, l, 1));
}

}  // namespace

void fire_geometry(Kb& kb, FactId id) {
    const Fact& f = kb.fact(id);
    Atom a = kb.canonical(f.atom);
    const auto& sig = rel_info(a.rel).sig;
    if (sig.empty() || sig[0] != Sort::Individual) return;
    if (a.rel == Rel::Allen || a.rel == Rel::Closer || a.rel == Rel::Equidist) return;
    Ctx c{kb, id, f.positive, a.a[0], a.a[1]};
    switch (a.rel) {
    case Rel::C: fire_c(c); break;
    case Rel::Eqs:
        if (c.pos) {
            if (c.x != c.y) kb.merge_individuals(c.x, c.y);
        } else {
            c.d(Rel::Eqs, false, R::EqsSym, {}, c.y, c.x);
        }
        break;
    case Rel::P: fire_p(c); break;
    case Rel::PP: fire_pp(c); break;
    case Rel::O: fire_o(c); break;
    case Rel::EC: fire_ec(c); break;
    case Rel::TP: fire_tp(c, false); fire_tp_env(c); break;
    case Rel::NTP: fire_tp(c, true); break;
    case Rel::ICont: fire_icont(c); break;
    case Rel::WCont: fire_wcont(c); break;
    case Rel::Cont: fire_cont(c); break;
    case Rel::Sp: fire_sp(c); break;
    case Rel::Con: fire_con(c); break;
    case Rel::OP: fire_op_cl(c, true); break;
    case Rel::CL: fire_op_cl(c, false); break;
    case Rel::Env:
    case Rel::Contour:
    case Rel::Ends:
    case Rel::Lim1:
    case Rel::Lim2:
    case Rel::Lim3:
    case Rel::Surface:
    case Rel::Line:
    case Rel::Point: fire_boundary(c, a.rel); break;
    default: break;
    }
}

void term_axioms(Kb& kb, IndId t) {
    const Term& term = kb.terms().term(t);
    auto args = term.args;
    switch (term.kind) {
    case TermKind::Sum:
        for (IndId a : args) kb.derive(A(Rel::P, a, t), true, RuleId::A4, {});
        for (size_t i = 0; i < args.size(); ++i)
            for (size_t j = 0; j < args.size(); ++j)
                if (i != j)
                    if (auto sp = yes(kb, Rel::Sp, args[i], args[j]); sp && args.size() == 2)
                        kb.derive(A(Rel::Con, t), false, RuleId::D11, {*sp});
        for (IndId a : args)
            for (FactId f : with(kb, Rel::C, true, 1, a)) kb.enqueue(f);
        break;
    case TermKind::Inter:
        for (IndId a : args) kb.derive(A(Rel::P, t, a), true, RuleId::A7, {});
        break;
    case TermKind::Compl:
        kb.derive(A(Rel::O, args[0], t), false, RuleId::A6, {});
        for (FactId f : with(kb, Rel::O, false, 1, args[0])) kb.enqueue(f);
        for (FactId f : with(kb, Rel::O, true, 1, args[0])) kb.enqueue(f);
        break;
    case TermKind::Interior:
        kb.derive(A(Rel::P, t, args[0]), true, RuleId::A8, {});
        kb.derive(A(Rel::OP, t), true, RuleId::A8, {});
        for (FactId f : with(kb, Rel::P, true, 0, args[0])) kb.enqueue(f);
        for (FactId f : with(kb, Rel::P, true, 1, args[0])) kb.enqueue(f);
        break;
    case TermKind::Closure:
        kb.derive(A(Rel::P, args[0], t), true, RuleId::A9, {});
        kb.derive(A(Rel::CL, t), true, RuleId::A9, {});
        for (FactId f : with(kb, Rel::C, true, 0, args[0])) kb.enqueue(f);
        for (FactId f : with(kb, Rel::C, false, 0, args[0])) kb.enqueue(f);
        break;
    case TermKind::Skolem:
        if (term.tag == "env") {
            kb.derive(A(Rel::Env, t, args[0]), true, RuleId::D15, {});
        } else if (term.tag == "contour") {
            kb.derive(A(Rel::Contour, t, args[0]), true, RuleId::D15, {});
        } else if (term.tag == "ends") {
            kb.derive(A(Rel::Ends, t, args[0]), true, RuleId::D15, {});
        }
        break;
    case TermKind::Atom:
    case TermKind::Universal: break;
    }
}

}  // namespace topos
