#pragma once

#include <array>
#include <string>
#include <vector>

#include "topos/oracle/alexandrov.hpp"

namespace topos::oracle {

// Square cell complex of a 2x2 grid: 5 positions per axis (vertex, open edge, vertex,
// open edge, vertex), 25 cells. A cell precedes its faces, so opens are the
// down-closed sets.
struct CellBox {
    static constexpr int kSide = 5;
    static constexpr int kCells = kSide * kSide;

    static AlexandrovSpace space();
    static std::array<int, 2> coords(int cell);
    static int dimension(int cell);
    static std::string cell_name(int cell);
    // Regular regions reachable as unions of open stars and closed cells, deduplicated
    // and in ascending order. Deterministic.
    static std::vector<Region> regular_regions();
};

}  // namespace topos::oracle
