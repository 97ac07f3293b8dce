#pragma once

// Frozen reference matrices used by the unit and acceptance tests.

namespace fixtures {

inline constexpr int kKirkmanBlocks[35][3] = {
    {0,5,10},
    {1,6,11},
    {2,7,12},
    {3,8,13},
    {4,9,14},
    {0,1,4},
    {2,3,6},
    {7,8,11},
    {9,10,13},
    {5,12,14},
    {1,2,5},
    {3,4,7},
    {8,9,12},
    {10,11,14},
    {0,6,13},
    {4,5,8},
    {6,7,10},
    {0,11,12},
    {2,13,14},
    {1,3,9},
    {2,4,10},
    {3,5,11},
    {6,8,14},
    {0,7,9},
    {1,12,13},
    {4,6,12},
    {5,7,13},
    {1,8,10},
    {2,9,11},
    {0,3,14},
    {3,10,12},
    {4,11,13},
    {1,7,14},
    {0,2,8},
    {5,6,9}};

inline constexpr int kPaleyMosaic7[7][7] = {
    {2,3,3,1,3,1,1},
    {1,2,3,3,1,3,1},
    {1,1,2,3,3,1,3},
    {3,1,1,2,3,3,1},
    {1,3,1,1,2,3,3},
    {3,1,3,1,1,2,3},
    {3,3,1,3,1,1,2}};

inline constexpr int kAffineMosaic3[9][12] = {
    {1,1,2,3,3,3,1,2,2,2,3,1},
    {1,3,1,2,3,2,3,1,2,1,2,3},
    {1,2,3,1,3,1,2,3,2,3,1,2},
    {2,1,2,3,1,2,3,1,3,3,1,2},
    {2,3,1,2,1,1,2,3,3,2,3,1},
    {2,2,3,1,1,3,1,2,3,1,2,3},
    {3,1,2,3,2,1,2,3,1,1,2,3},
    {3,3,1,2,2,3,1,2,1,3,1,2},
    {3,2,3,1,2,2,3,1,1,2,3,1}};

inline constexpr int kAffineMosaic4[16][20] = {
    {0,0,1,2,3,1,0,1,2,3,2,0,1,2,3,3,0,1,2,3},
    {0,1,0,3,2,1,1,0,3,2,2,1,0,3,2,3,1,0,3,2},
    {0,2,3,0,1,1,2,3,0,1,2,2,3,0,1,3,2,3,0,1},
    {0,3,2,1,0,1,3,2,1,0,2,3,2,1,0,3,3,2,1,0},
    {1,0,1,2,3,0,1,0,3,2,3,2,3,0,1,2,3,2,1,0},
    {1,1,0,3,2,0,0,1,2,3,3,3,2,1,0,2,2,3,0,1},
    {1,2,3,0,1,0,3,2,1,0,3,0,1,2,3,2,1,0,3,2},
    {1,3,2,1,0,0,2,3,0,1,3,1,0,3,2,2,0,1,2,3},
    {2,0,1,2,3,3,2,3,0,1,0,3,2,1,0,1,1,0,3,2},
    {2,1,0,3,2,3,3,2,1,0,0,2,3,0,1,1,0,1,2,3},
    {2,2,3,0,1,3,0,1,2,3,0,1,0,3,2,1,3,2,1,0},
    {2,3,2,1,0,3,1,0,3,2,0,0,1,2,3,1,2,3,0,1},
    {3,0,1,2,3,2,3,2,1,0,1,1,0,3,2,0,2,3,0,1},
    {3,1,0,3,2,2,2,3,0,1,1,0,1,2,3,0,3,2,1,0},
    {3,2,3,0,1,2,1,0,3,2,1,3,2,1,0,0,0,1,2,3},
    {3,3,2,1,0,2,0,1,2,3,1,2,3,0,1,0,1,0,3,2}};

inline constexpr int kResolvableMosaic15[15][35] = {
    {1,5,4,3,2,1,5,4,3,2,5,4,3,2,1,3,2,1,5,4,4,3,2,1,5,5,4,3,2,1,4,3,2,1,5},
    {2,1,5,4,3,1,5,4,3,2,1,5,4,3,2,5,4,3,2,1,5,4,3,2,1,3,2,1,5,4,3,2,1,5,4},
    {3,2,1,5,4,2,1,5,4,3,1,5,4,3,2,4,3,2,1,5,1,5,4,3,2,4,3,2,1,5,4,3,2,1,5},
    {4,3,2,1,5,2,1,5,4,3,2,1,5,4,3,5,4,3,2,1,2,1,5,4,3,5,4,3,2,1,1,5,4,3,2},
    {5,4,3,2,1,1,5,4,3,2,2,1,5,4,3,1,5,4,3,2,1,5,4,3,2,1,5,4,3,2,2,1,5,4,3},
    {1,5,4,3,2,5,4,3,2,1,1,5,4,3,2,1,5,4,3,2,2,1,5,4,3,2,1,5,4,3,5,4,3,2,1},
    {2,1,5,4,3,2,1,5,4,3,5,4,3,2,1,2,1,5,4,3,3,2,1,5,4,1,5,4,3,2,5,4,3,2,1},
    {3,2,1,5,4,3,2,1,5,4,2,1,5,4,3,2,1,5,4,3,4,3,2,1,5,2,1,5,4,3,3,2,1,5,4},
    {4,3,2,1,5,3,2,1,5,4,3,2,1,5,4,1,5,4,3,2,3,2,1,5,4,3,2,1,5,4,4,3,2,1,5},
    {5,4,3,2,1,4,3,2,1,5,3,2,1,5,4,5,4,3,2,1,4,3,2,1,5,4,3,2,1,5,5,4,3,2,1},
    {1,5,4,3,2,4,3,2,1,5,4,3,2,1,5,2,1,5,4,3,1,5,4,3,2,3,2,1,5,4,1,5,4,3,2},
    {2,1,5,4,3,3,2,1,5,4,4,3,2,1,5,3,2,1,5,4,2,1,5,4,3,4,3,2,1,5,2,1,5,4,3},
    {3,2,1,5,4,5,4,3,2,1,3,2,1,5,4,3,2,1,5,4,5,4,3,2,1,1,5,4,3,2,1,5,4,3,2},
    {4,3,2,1,5,4,3,2,1,5,5,4,3,2,1,4,3,2,1,5,5,4,3,2,1,2,1,5,4,3,2,1,5,4,3},
    {5,4,3,2,1,5,4,3,2,1,4,3,2,1,5,4,3,2,1,5,3,2,1,5,4,5,4,3,2,1,3,2,1,5,4}};

inline constexpr int kLatin5[5][5] = {
    {1,5,4,3,2},
    {2,1,5,4,3},
    {3,2,1,5,4},
    {4,3,2,1,5},
    {5,4,3,2,1}};

inline constexpr int kOrbitReps[15][7] = {
    {0,1,1249,5040,7258,7978,8105},
    {0,7,1857,6681,7259,7381,7908},
    {0,9,1144,1945,6771,7714,8102},
    {0,11,209,1941,2926,3565,6579},
    {0,12,2181,2519,3696,6673,6965},
    {0,13,4821,5178,7823,8052,8110},
    {0,17,291,1199,5132,6266,8057},
    {0,20,1075,3939,3996,4776,7313},
    {0,21,2900,4226,4915,6087,8008},
    {0,27,1190,3572,4989,5199,6710},
    {0,30,141,682,2024,6256,6406},
    {0,31,814,1161,1243,4434,6254},
    {0,37,258,2093,4703,5396,6469},
    {0,115,949,1272,1580,4539,4873},
    {0,119,490,5941,6670,6812,7312}};

inline constexpr int kQuadOffsets[15][4] = {
    {0,2,4,8},
    {0,1,4,12},
    {0,1,2,3},
    {0,1,2,3},
    {0,1,2,3},
    {0,1,2,3},
    {0,1,2,3},
    {0,1,2,3},
    {0,1,2,3},
    {0,1,2,3},
    {0,1,2,3},
    {0,1,2,4},
    {0,1,2,4},
    {0,1,2,3},
    {0,1,2,4}};

}  // namespace fixtures
