#pragma once

#include <cstdint>

// Entry position tables for the big printed matrices. Row/col are 0-based;
// coef indexes the coefficient list of the owning matrix (0 = literal sign).

namespace d23::tables {

struct REnt {
  std::uint8_t row, col;
  std::int8_t coef, sign;
};

// rsp: 24 rows
inline constexpr REnt kRspEntries[] = {
    {0, 0, 1, 1},
    {1, 1, 1, 1},
    {2, 2, 3, 1},
    {2, 3, 5, 1},
    {2, 7, 19, 1},
    {2, 12, 23, 1},
    {3, 2, 6, 1},
    {3, 3, 4, 1},
    {3, 7, 20, 1},
    {3, 12, 24, 1},
    {4, 4, 2, 1},
    {4, 8, 21, 1},
    {4, 9, 22, 1},
    {4, 18, 15, 1},
    {5, 5, 2, 1},
    {5, 14, 21, -1},
    {5, 15, 22, -1},
    {5, 19, 15, -1},
    {6, 6, 1, 1},
    {7, 2, 25, 1},
    {7, 3, 26, 1},
    {7, 7, 2, 1},
    {7, 12, 16, 1},
    {8, 4, 27, 1},
    {8, 8, 7, 1},
    {8, 18, 31, 1},
    {9, 4, 28, 1},
    {9, 8, 14, 1},
    {9, 9, 8, 1},
    {9, 18, 32, 1},
    {10, 10, 2, 1},
    {11, 11, 1, 1},
    {11, 16, 16, -1},
    {11, 20, 33, 1},
    {11, 21, 34, 1},
    {12, 2, 29, 1},
    {12, 3, 30, 1},
    {12, 7, 17, 1},
    {12, 12, 2, 1},
    {13, 13, 1, 1},
    {14, 5, 27, -1},
    {14, 14, 7, 1},
    {14, 19, 31, -1},
    {15, 5, 28, -1},
    {15, 14, 14, -1},
    {15, 15, 8, 1},
    {15, 19, 32, 1},
    {16, 11, 17, -1},
    {16, 16, 2, 1},
    {16, 20, 35, 1},
    {16, 21, 36, 1},
    {17, 17, 1, 1},
    {18, 4, 18, 1},
    {18, 8, 37, 1},
    {18, 9, 38, 1},
    {18, 18, 2, 1},
    {19, 5, 18, -1},
    {19, 14, 37, 1},
    {19, 15, 38, -1},
    {19, 19, 2, 1},
    {20, 11, 39, 1},
    {20, 16, 11, 1},
    {20, 20, 9, 1},
    {20, 21, 5, -1},
    {21, 11, 40, 1},
    {21, 16, 12, 1},
    {21, 20, 13, 1},
    {21, 21, 10, 1},
    {22, 22, 1, 1},
    {23, 23, 1, 1},
};

// rsn: 24 rows
inline constexpr REnt kRsnEntries[] = {
    {0, 0, 1, 1},
    {1, 1, 1, 1},
    {2, 2, 3, 1},
    {2, 3, 5, 1},
    {2, 7, 19, 1},
    {2, 12, 23, 1},
    {3, 2, 6, 1},
    {3, 3, 4, 1},
    {3, 7, 20, 1},
    {3, 12, 24, 1},
    {4, 4, 2, 1},
    {4, 8, 21, 1},
    {4, 9, 22, 1},
    {4, 18, 15, 1},
    {5, 5, 2, 1},
    {5, 14, 21, 1},
    {5, 15, 22, 1},
    {5, 19, 15, -1},
    {6, 6, 1, 1},
    {7, 2, 25, 1},
    {7, 3, 26, 1},
    {7, 7, 2, 1},
    {7, 12, 16, 1},
    {8, 4, 27, 1},
    {8, 8, 7, 1},
    {8, 18, 31, 1},
    {9, 4, 28, 1},
    {9, 8, 14, 1},
    {9, 9, 8, 1},
    {9, 18, 32, 1},
    {10, 10, 2, 1},
    {11, 11, 1, 1},
    {11, 16, 16, -1},
    {11, 20, 33, 1},
    {11, 21, 34, 1},
    {12, 2, 29, 1},
    {12, 3, 30, 1},
    {12, 7, 17, 1},
    {12, 12, 2, 1},
    {13, 13, 1, 1},
    {14, 5, 27, 1},
    {14, 14, 7, 1},
    {14, 19, 31, -1},
    {15, 5, 28, 1},
    {15, 14, 14, 1},
    {15, 15, 8, 1},
    {15, 19, 32, -1},
    {16, 11, 17, -1},
    {16, 16, 2, 1},
    {16, 20, 35, 1},
    {16, 21, 36, 1},
    {17, 17, 1, 1},
    {18, 4, 18, 1},
    {18, 8, 37, 1},
    {18, 9, 38, 1},  /* printed r^+ */
    {18, 18, 2, 1},
    {19, 5, 18, -1},
    {19, 14, 37, -1},
    {19, 15, 38, -1},
    {19, 19, 2, 1},
    {20, 11, 39, 1},
    {20, 16, 11, 1},
    {20, 20, 9, 1},
    {20, 21, 5, -1},
    {21, 11, 40, 1},
    {21, 16, 12, 1},
    {21, 20, 13, 1},
    {21, 21, 10, 1},
    {22, 22, 1, 1},
    {23, 23, 1, 1},
};

// Rsspm: 16 rows
inline constexpr REnt kRssEntries[] = {
    {0, 0, 1, 1},
    {1, 1, 2, 1},
    {1, 4, 3, 1},
    {2, 2, 2, 1},
    {2, 8, 3, -1},
    {3, 3, 5, 1},
    {3, 6, 7, -1},
    {3, 9, 6, 1},
    {3, 12, 10, 1},
    {4, 1, 4, 1},
    {4, 4, 2, 1},
    {5, 5, 1, 1},
    {6, 3, 9, -1},
    {6, 6, 5, 1},
    {6, 9, 12, 1},
    {6, 12, 6, -1},
    {7, 7, 2, 1},
    {7, 13, 3, 1},
    {8, 2, 4, -1},
    {8, 8, 2, 1},
    {9, 3, 8, -1},
    {9, 6, 13, 1},
    {9, 9, 5, 1},
    {9, 12, 7, 1},
    {10, 10, 1, 1},
    {11, 11, 2, 1},
    {11, 14, 3, -1},
    {12, 3, 11, 1},
    {12, 6, 8, 1},
    {12, 9, 9, 1},
    {12, 12, 5, 1},
    {13, 7, 4, 1},
    {13, 13, 2, 1},
    {14, 11, 4, -1},
    {14, 14, 2, 1},
    {15, 15, 1, 1},
};

// Tra1: 16 rows
inline constexpr REnt kSmatEntries[] = {
    {0, 0, 0, 1},  // literal
    {1, 1, 1, 1},
    {1, 4, 2, 1},
    {2, 1, 3, 1},
    {2, 4, 4, 1},
    {3, 5, 0, -1},  // literal
    {4, 3, 5, 1},
    {4, 6, 6, 1},
    {4, 9, 7, 1},
    {4, 12, 8, 1},
    {5, 2, 1, -1},
    {5, 8, 2, 1},
    {6, 2, 3, -1},
    {6, 8, 4, 1},
    {7, 3, 9, 1},
    {7, 6, 10, 1},
    {7, 12, 11, 1},
    {8, 10, 0, -1},  // literal
    {9, 3, 12, 1},
    {9, 12, 13, 1},
    {10, 3, 14, 1},
    {10, 12, 15, 1},
    {11, 7, 1, 1},
    {11, 13, 2, 1},
    {12, 11, 1, -1},
    {12, 14, 2, 1},
    {13, 7, 3, 1},
    {13, 13, 4, 1},
    {14, 11, 3, -1},
    {14, 14, 4, 1},
    {15, 15, 0, -1},  // literal
};


}  // namespace d23::tables
