#ifndef OCTMINOR_FIXED_GRAPHS_HPP
#define OCTMINOR_FIXED_GRAPHS_HPP

#include <array>

#include "graph.hpp"

// Fixed adjacency for the sporadic Oct-free building blocks.
//
// Reading convention: L_n is the circular ladder C_n x K_2 with outer rim
// 0..n-1, inner rim n..2n-1 and rungs i ~ i+n. L'_n is the Moebius ladder on
// 2n vertices: the cycle 0..2n-1 plus the n long diagonals i ~ i+n. P10 is the
// Petersen graph with outer 5-cycle 0..4, spokes i ~ i+5 and inner pentagram
// 5+i ~ 5+(i+2 mod 5).
//
// L''_5 has no transcription here; building it raises a DomainError.

namespace octminor::fixed {

inline constexpr std::array<Edge, 12> kL4Prime = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7},
    {0, 4}, {1, 5}, {2, 6}, {3, 7},
}};

inline constexpr std::array<Edge, 15> kL5 = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
    {5, 6}, {6, 7}, {7, 8}, {8, 9}, {5, 9},
    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
}};

inline constexpr std::array<Edge, 15> kL5Prime = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {0, 9},
    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
}};

inline constexpr std::array<Edge, 15> kP10 = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
    {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
}};

} // namespace octminor::fixed

#endif // OCTMINOR_FIXED_GRAPHS_HPP
