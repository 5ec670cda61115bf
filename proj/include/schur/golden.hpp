#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace schur::golden {

/// One row of the LG(5,10) reference table: partition, a:J (absent for the
/// two extremal classes) and the rigidity star.
struct LGRow {
    std::array<int, 5> lambda;
    int a;                  // -1 for the extremal rows
    std::array<int, 4> J;   // zero-padded
    int j_count;
    bool rigid;
};

/// One row of the S_6 reference table, with the extra r column.
struct SpinorRow {
    std::array<int, 6> lambda;
    int a; // -1 for the extremal rows
    std::array<int, 4> J;
    int j_count;
    int r; // -1 for the extremal rows
    bool rigid;
};

/// One node of an exceptional Hasse-poset figure.
struct FigureNode {
    int dim;
    std::uint64_t degree;
    bool rigid;
};

extern const std::vector<LGRow> lg510_table;
extern const std::vector<SpinorRow> s6_table;
extern const std::vector<FigureNode> e6_figure; // 27 nodes, 8 rigid
extern const std::vector<FigureNode> e7_figure; // 56 nodes, 14 rigid

} // namespace schur::golden
