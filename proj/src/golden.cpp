#include "schur/golden.hpp"

namespace schur::golden {

// Schubert varieties of LG(5,10): partition, a:J, Schur-rigid star.
const std::vector<LGRow> lg510_table = {
    {{1, 2, 3, 4, 5}, -1, {0, 0, 0, 0}, 0, true},
    {{1, 2, 3, 4, 6}, 0, {4, 0, 0, 0}, 1, false},
    {{1, 2, 3, 5, 7}, 1, {3, 4, 0, 0}, 2, false},
    {{1, 2, 4, 5, 8}, 1, {2, 4, 0, 0}, 2, false},
    {{1, 2, 3, 6, 7}, 0, {3, 0, 0, 0}, 1, true},
    {{1, 3, 4, 5, 9}, 1, {1, 4, 0, 0}, 2, false},
    {{1, 2, 4, 6, 8}, 2, {2, 3, 4, 0}, 3, false},
    {{2, 3, 4, 5, 10}, 1, {4, 0, 0, 0}, 1, true},
    {{1, 3, 4, 6, 9}, 2, {1, 3, 4, 0}, 3, false},
    {{1, 2, 5, 7, 8}, 1, {2, 3, 0, 0}, 2, false},
    {{2, 3, 4, 6, 10}, 2, {3, 4, 0, 0}, 2, false},
    {{1, 3, 5, 7, 9}, 3, {1, 2, 3, 4}, 4, false},
    {{1, 2, 6, 7, 8}, 0, {2, 0, 0, 0}, 1, true},
    {{2, 3, 5, 7, 10}, 3, {2, 3, 4, 0}, 3, false},
    {{1, 4, 5, 8, 9}, 1, {1, 3, 0, 0}, 2, true},
    {{1, 3, 6, 7, 9}, 2, {1, 2, 4, 0}, 3, false},
    {{2, 4, 5, 8, 10}, 3, {1, 3, 4, 0}, 3, false},
    {{2, 3, 6, 7, 10}, 2, {2, 4, 0, 0}, 2, true},
    {{1, 4, 6, 8, 9}, 2, {1, 2, 3, 0}, 3, false},
    {{3, 4, 5, 9, 10}, 1, {3, 0, 0, 0}, 1, true},
    {{2, 4, 6, 8, 10}, 4, {1, 2, 3, 4}, 4, false},
    {{1, 5, 7, 8, 9}, 1, {1, 2, 0, 0}, 2, false},
    {{3, 4, 6, 9, 10}, 2, {2, 3, 0, 0}, 2, false},
    {{2, 5, 7, 8, 10}, 3, {1, 2, 4, 0}, 3, false},
    {{1, 6, 7, 8, 9}, 0, {1, 0, 0, 0}, 1, true},
    {{3, 5, 7, 9, 10}, 3, {1, 2, 3, 0}, 3, false},
    {{2, 6, 7, 8, 10}, 2, {1, 4, 0, 0}, 2, false},
    {{4, 5, 8, 9, 10}, 1, {2, 0, 0, 0}, 1, true},
    {{3, 6, 7, 9, 10}, 2, {1, 3, 0, 0}, 2, false},
    {{4, 6, 8, 9, 10}, 2, {1, 2, 0, 0}, 2, false},
    {{5, 7, 8, 9, 10}, 1, {1, 0, 0, 0}, 1, false},
    {{6, 7, 8, 9, 10}, -1, {0, 0, 0, 0}, 0, true},
};

// Schubert varieties of the spinor variety S_6: partition, a:J, r, star.
const std::vector<SpinorRow> s6_table = {
    {{1, 2, 3, 4, 5, 6}, -1, {0, 0, 0, 0}, 0, -1, true},
    {{1, 2, 3, 4, 7, 8}, 0, {4, 0, 0, 0}, 1, 0, false},
    {{1, 2, 3, 5, 7, 9}, 0, {3, 5, 0, 0}, 2, 1, false},
    {{1, 2, 4, 5, 7, 10}, 0, {2, 5, 0, 0}, 2, 1, false},
    {{1, 2, 3, 6, 8, 9}, 0, {3, 0, 0, 0}, 1, 0, true},
    {{1, 3, 4, 5, 7, 11}, 0, {1, 5, 0, 0}, 2, 1, false},
    {{1, 2, 4, 6, 8, 10}, 1, {2, 3, 5, 0}, 3, 1, false},
    {{2, 3, 4, 5, 7, 12}, 0, {5, 0, 0, 0}, 1, 1, true},
    {{1, 3, 4, 6, 8, 11}, 1, {1, 3, 5, 0}, 3, 1, false},
    {{1, 2, 5, 6, 9, 10}, 1, {2, 4, 0, 0}, 2, 1, false},
    {{2, 3, 4, 6, 8, 12}, 1, {3, 5, 0, 0}, 2, 1, false},
    {{1, 3, 5, 6, 9, 11}, 2, {1, 2, 4, 5}, 4, 2, false},
    {{1, 2, 7, 8, 9, 10}, 0, {2, 0, 0, 0}, 1, 0, true},
    {{2, 3, 5, 6, 9, 12}, 2, {2, 4, 5, 0}, 3, 2, false},
    {{1, 4, 5, 6, 10, 11}, 1, {1, 4, 0, 0}, 2, 1, true},
    {{1, 3, 7, 8, 9, 11}, 1, {1, 2, 5, 0}, 3, 1, false},
    {{2, 4, 5, 6, 10, 12}, 2, {1, 4, 5, 0}, 3, 2, false},
    {{2, 3, 7, 8, 9, 12}, 1, {2, 5, 0, 0}, 2, 1, true},
    {{1, 4, 7, 8, 10, 11}, 2, {1, 2, 4, 0}, 3, 1, false},
    {{3, 4, 5, 6, 11, 12}, 1, {4, 0, 0, 0}, 1, 1, true},
    {{2, 4, 7, 8, 10, 12}, 3, {1, 2, 4, 5}, 4, 2, false},
    {{1, 5, 7, 9, 10, 11}, 1, {1, 3, 0, 0}, 2, 1, false},
    {{3, 4, 7, 8, 11, 12}, 2, {2, 4, 0, 0}, 2, 1, false},
    {{2, 5, 7, 9, 10, 12}, 2, {1, 3, 5, 0}, 3, 2, false},
    {{1, 6, 8, 9, 10, 11}, 0, {1, 0, 0, 0}, 1, 0, true},
    {{3, 5, 7, 9, 11, 12}, 3, {1, 3, 4, 0}, 3, 2, false},
    {{2, 6, 8, 9, 10, 12}, 1, {1, 5, 0, 0}, 2, 1, false},
    {{4, 5, 7, 10, 11, 12}, 1, {3, 0, 0, 0}, 1, 1, true},
    {{3, 6, 8, 9, 11, 12}, 2, {1, 4, 0, 0}, 2, 1, false},
    {{4, 6, 8, 10, 11, 12}, 2, {1, 3, 0, 0}, 2, 1, false},
    {{5, 6, 9, 10, 11, 12}, 1, {2, 0, 0, 0}, 1, 1, false},
    {{7, 8, 9, 10, 11, 12}, -1, {0, 0, 0, 0}, 0, -1, true},
};

// Hasse poset of the Cayley plane E6/P6: (dimension, degree, circled).
const std::vector<FigureNode> e6_figure = {
    {0, 1, true},
    {1, 1, false},
    {2, 1, false},
    {3, 1, false},
    {4, 1, false},
    {4, 1, true},
    {5, 1, true},
    {5, 2, false},
    {6, 2, false},
    {6, 3, false},
    {7, 2, false},
    {7, 5, false},
    {8, 2, true},
    {8, 5, true},
    {8, 7, false},
    {9, 9, false},
    {9, 12, false},
    {10, 12, false},
    {10, 21, false},
    {11, 12, true},
    {11, 33, false},
    {12, 33, true},
    {12, 45, false},
    {13, 78, false},
    {14, 78, false},
    {15, 78, false},
    {16, 78, true},
};

// Hasse poset of the Freudenthal variety E7/P7: (dimension, degree, circled).
const std::vector<FigureNode> e7_figure = {
    {0, 1, true},
    {1, 1, false},
    {2, 1, false},
    {3, 1, false},
    {4, 1, false},
    {5, 1, false},
    {5, 1, true},
    {6, 1, true},
    {6, 2, false},
    {7, 2, false},
    {7, 3, false},
    // The source prints 5 for both dimension-8 nodes, but its own
    // neighbouring labels (7 = 5+2, 2, 9 = 7+2, 11 = 9+2) force 2 on the
    // short-branch node; the chain count reproduces every other label.
    {8, 2, false},
    {8, 5, false},
    {9, 2, false},
    {9, 5, true},
    {9, 7, false},
    {10, 2, true},
    {10, 9, false},
    {10, 12, false},
    {11, 11, false},
    {11, 12, false},
    {11, 21, false},
    {12, 12, true},
    {12, 32, false},
    {12, 33, false},
    {13, 33, true},
    {13, 45, false},
    {13, 65, false},
    {14, 78, false},
    {14, 98, false},
    {14, 110, true},
    {15, 78, false},
    {15, 98, true},
    {15, 286, false},
    {16, 78, false},
    {16, 364, false},
    {16, 384, false},
    {17, 78, true},
    {17, 442, false},
    {17, 748, false},
    {18, 520, false},
    {18, 748, true},
    {18, 1190, false},
    {19, 1710, false},
    {19, 1938, false},
    {20, 1938, false},
    {20, 3648, false},
    {21, 1938, true},
    {21, 5586, false},
    {22, 5586, true},
    {22, 7524, false},
    {23, 13110, false},
    {24, 13110, false},
    {25, 13110, false},
    {26, 13110, false},
    {27, 13110, true},
};

} // namespace schur::golden
