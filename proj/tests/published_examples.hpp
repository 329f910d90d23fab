#pragma once

// Published example states, copied verbatim (33 cells each).

#include <array>
#include <string_view>

namespace published {

inline constexpr std::array<std::string_view, 4> monochrome{
    "....22222......222.2.............",
    ".........22222....2.222..........",
    "..............2222.2...2222......",
    "..................2.222....22222.",
};

inline constexpr std::array<std::string_view, 4> coloured{
    "55432.....542....2...............",
    ".....55432...542..2..............",
    "..........55432.54.22............",
    "...............5435..54222.......",
};

struct SeparationTable {
  std::array<std::string_view, 9> rows;
};

// Decoding tables for the coloured states t = 0, 1, 2, 3.
inline constexpr std::array<SeparationTable, 4> separations{{
    {{
        "55432.....542....2...............",
        ".55422.....532...4...............",
        "..55222.....432..5...............",
        "...52222....543...2..............",
        "....22222...554...3..............",
        "....22222....552..4..............",
        "....22222.....522.5..............",
        "....22222......2225..............",
        "....22222......222.2.............",
    }},
    {{
        ".....55432...542..2..............",
        "......55422...532.4..............",
        ".......55222...4325..............",
        "........52222..543.2.............",
        ".........22222.554.3.............",
        ".........22222..5524.............",
        ".........22222...5252............",
        ".........22222....2522...........",
        ".........22222....2.222..........",
    }},
    {{
        "..........55432.54.22............",
        "...........55422.5342............",
        "............55222.4532...........",
        ".............522225.432..........",
        "..............222252543..........",
        "..............2222.25542.........",
        "..............2222.2.5522........",
        "..............2222.2..5222.......",
        "..............2222.2...2222......",
    }},
    {{
        "...............5435..54222.......",
        "................5423.55422.......",
        ".................5242.55322......",
        "..................2522.54322.....",
        "..................2.22255432.....",
        "..................2.222.55422....",
        "..................2.222..55222...",
        "..................2.222...52222..",
        "..................2.222....22222.",
    }},
}};

inline constexpr std::array<int, 8> removed{2, 4, 5, 2, 3, 4, 5, 5};
inline constexpr std::string_view word = "55432542";

}  // namespace published
