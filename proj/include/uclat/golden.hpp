#pragma once

#include <optional>

#include "uclat/rational.hpp"

namespace uclat {

/**
 * Reference values of uc(d, n) for the nine lattices and n = 3..10, kept as
 * reduced fractions. Each entry notes the factored form it was reduced from;
 * in that notation a/b*c means a/(b*c).
 */
struct GoldenCell {
    int d;
    int n;
    long long num;
    long long den;
};

inline constexpr GoldenCell kGoldenTable[] = {
    // d = 1
    {1, 3, 25, 18},          // 5^2 / 2*3^2
    {1, 4, 1, 2},            // 1/2
    {1, 5, 625, 18},         // 5^4 / 2*3^2
    {1, 6, 25, 4},           // 5^2 / 2^2
    {1, 7, 138125, 242},     // 5^4*13*17 / 2*11^2
    {1, 8, 5, 2},            // 5/2
    {1, 9, 4225, 18},        // 5^2*13^2 / 2*3^2
    {1, 10, 625, 4},         // 5^4 / 2^2
    // d = 2
    {2, 3, 9, 8},            // 3^2 / 2^3
    {2, 4, 3, 4},            // 3 / 2^2
    {2, 5, 81, 8},           // 3^4 / 2^3
    {2, 6, 9, 4},            // 3^2 / 2^2
    {2, 7, 729, 8},          // 3^6 / 2^3
    {2, 8, 27, 4},           // 3^3 / 2^2
    {2, 9, 1089, 8},         // 3^2*11^2 / 2^3
    {2, 10, 81, 4},          // 3^4 / 2^2
    // d = 3
    {3, 3, 1, 3},            // 1/3
    {3, 4, 7, 4},            // 7 / 2^2
    {3, 5, 8281, 121},       // 7^2*13^2 / 11^2
    {3, 6, 1, 1},            // 1
    {3, 7, 520429, 363},     // 7^2*13*19*43 / 3*11^2
    {3, 8, 91, 4},           // 7*13 / 2^2
    {3, 9, 49, 3},           // 7^2 / 3
    {3, 10, 2401, 4},        // 7^4 / 2^2
    // d = 7
    {7, 3, 4, 7},            // 2^2 / 7
    {7, 4, 8, 7},            // 2^3 / 7
    {7, 5, 16, 7},           // 2^4 / 7
    {7, 6, 4, 1},            // 2^2
    {7, 7, 64, 7},           // 2^6 / 7
    {7, 8, 8, 1},            // 2^3
    {7, 9, 256, 7},          // 2^8 / 7
    {7, 10, 16, 1},          // 2^4
    // d = 11
    {11, 3, 9, 11},          // 3^2 / 11
    {11, 4, 15, 11},         // 3*5 / 11
    {11, 5, 81, 11},         // 3^4 / 11
    {11, 6, 45, 11},         // 3^2*5 / 11
    {11, 7, 729, 11},        // 3^6 / 11
    {11, 8, 135, 11},        // 3^3*5 / 11
    {11, 9, 225, 11},        // 3^2*5^2 / 11
    {11, 10, 405, 11},       // 3^4*5 / 11
    // d = 19
    {19, 3, 25, 19},         // 5^2 / 19
    {19, 4, 35, 19},         // 5*7 / 19
    {19, 5, 625, 19},        // 5^4 / 19
    {19, 6, 175, 19},        // 5^2*7 / 19
    {19, 7, 45815, 171},     // 5*7^2*11*17 / 3^2*19
    {19, 8, 385, 19},        // 5*7*11 / 19
    {19, 9, 1225, 19},       // 5^2*7^2 / 19
    {19, 10, 4375, 19},      // 5^4*7 / 19
    // d = 43
    {43, 3, 121, 43},        // 11^2 / 43
    {43, 4, 143, 43},        // 11*13 / 43
    {43, 5, 55913, 172},     // 11*13*17*23 / 2^2*43
    {43, 6, 1573, 43},       // 11^2*13 / 43
    {43, 7, 726869, 387},    // 11*13^2*17*23 / 3^2*43
    {43, 8, 2431, 43},       // 11*13*17 / 43
    {43, 9, 20449, 43},      // 11^2*13^2 / 43
    {43, 10, 190333, 43},    // 11^4*13 / 43
    // d = 67
    {67, 3, 289, 67},        // 17^2 / 67
    {67, 4, 323, 67},        // 17*19 / 67
    {67, 5, 215441, 268},    // 17*19*23*29 / 2^2*67
    {67, 6, 5491, 67},       // 17^2*19 / 67
    {67, 7, 4093379, 603},   // 17*19^2*23*29 / 3^2*67
    {67, 8, 7429, 67},       // 17*19*23 / 67
    {67, 9, 104329, 67},     // 17^2*19^2 / 67
    {67, 10, 1586899, 67},   // 17^4*19 / 67
    // d = 163
    {163, 3, 1681, 163},          // 41^2 / 163
    {163, 4, 1763, 163},          // 41*43 / 163
    {163, 5, 6880129, 1467},      // 43^2*61^2 / 3^2*163
    {163, 6, 72283, 163},         // 41^2*43 / 163
    {163, 7, 633750899, 5868},    // 41*43*61*71*83 / 2^2*3^2*163
    {163, 8, 82861, 163},         // 41*43*47 / 163
    {163, 9, 3108169, 163},       // 41^2*43^2 / 163
    {163, 10, 601857983, 1467},   // 41*47*53*71*83 / 3^2*163
};

inline std::optional<BigRat> golden_uc(int d, int n) {
    for (const auto& cell : kGoldenTable) {
        if (cell.d == d && cell.n == n) return BigRat(cell.num, cell.den);
    }
    return std::nullopt;
}

}  // namespace uclat
