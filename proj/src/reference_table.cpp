#include "tauenum/reference_table.hpp"

#include <array>

namespace tauenum {

namespace {

constexpr std::array<ReferenceRow, 21> kRows{{
    {1, 1, 1, 1},
    {2, 2, 2, 2},
    {3, 4, 4, 4},
    {4, 8, 8, 8},
    {5, 16, 18, 19},
    {6, 33, 42, 46},
    {7, 69, 105, 118},
    {8, 144, 270, 318},
    {9, 303, 718, 881},
    {10, 641, 1939, 2480},
    {11, 1361, 5312, 7084},
    {12, 2895, 14719, 20374},
    {13, 6174, 41161, 59061},
    {14, 13188, 115856, 172016},
    {15, 28229, 328098, 503018},
    {16, 60515, 933719, 1475478},
    {17, 129940, 2668241, 4338715},
    {18, 279415, 7652212, 12785056},
    {19, 601742, 22013683, 37739184},
    {20, 1297671, 63497798, 111562926},
    {21, 2802318, 183589726, 330215133},
}};

}  // namespace

std::span<const ReferenceRow> reference_table() { return kRows; }

}  // namespace tauenum
