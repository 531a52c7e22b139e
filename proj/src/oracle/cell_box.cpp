#include "topos/oracle/cell_box.hpp"

#include <set>

namespace topos::oracle {

std::array<int, 2> CellBox::coords(int cell) { return {cell % kSide, cell / kSide}; }

int CellBox::dimension(int cell) {
    int d = 0;
    for (int c : coords(cell)) d += c % 2;
    return d;
}

std::string CellBox::cell_name(int cell) {
    auto c = coords(cell);
    return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
}

AlexandrovSpace CellBox::space() {
    std::vector<PointSet> up(size_t(kCells), 0);
    for (int a = 0; a < kCells; ++a)
        for (int b = 0; b < kCells; ++b) {
            // b is a face of a when every coordinate matches or a is open there and b is an adjacent vertex
            auto ca = coords(a), cb = coords(b);
            bool face = true;
            for (size_t k = 0; k < 2; ++k)
                face &= ca[k] == cb[k] || (ca[k] % 2 == 1 && (cb[k] == ca[k] - 1 || cb[k] == ca[k] + 1));
            if (face) up[size_t(a)] |= PointSet(1) << b;
        }
    return AlexandrovSpace(kCells, up);
}

std::vector<Region> CellBox::regular_regions() {
    auto sp = space();
    std::vector<PointSet> gens;
    for (int c = 0; c < kCells; ++c) {
        gens.push_back(sp.down(c));
        gens.push_back(sp.up(c));
    }
    std::set<PointSet> seen;
    auto add = [&](PointSet s) {
        PointSet ci = sp.closure(sp.interior(s));
        if (s && ci == sp.closure(s) && sp.interior(sp.closure(s)) == sp.interior(s)) seen.insert(s);
    };
    for (size_t i = 0; i < gens.size(); ++i) {
        add(gens[i]);
        add(sp.closure(sp.interior(gens[i])));
        add(sp.interior(sp.closure(gens[i])));
        for (size_t j = i + 1; j < gens.size(); ++j) {
            add(gens[i] | gens[j]);
            add(sp.interior(sp.closure(gens[i] | gens[j])));
            add(sp.closure(sp.interior(gens[i] | gens[j])));
        }
    }
    std::vector<Region> out;
    for (PointSet s : seen) out.push_back({s, (s & ~sp.closure(sp.interior(s))) == 0});
    return out;
}

}  // namespace topos::oracle
