#pragma once

// Reference character tables for C_3 wr S_1, S_2, S_3 and the digit-sum
// table matching S_9 mod 3, as published. Entries are polynomial strings
// in w, compared as exact cyclotomic values (the printed forms are the
// compact ones, not the canonical standard form).

#include <array>

namespace wreathchar::golden {

// --- C_3 wr S_1 -------------------------------------------------------------

inline constexpr std::array<const char*, 3> kTable1Characters = {
    "[[1],[],[]]",
    "[[],[1],[]]",
    "[[],[],[1]]",
};

// Classes are the characters in reverse order (c_i = gamma_{N+1-i}).
inline constexpr std::array<std::array<const char*, 3>, 3> kTable1Values = {{
    {"1", "1", "1"},
    {"w", "w^2", "1"},
    {"w^2", "w", "1"},
}};

// --- C_3 wr S_2 -------------------------------------------------------------

inline constexpr std::array<const char*, 9> kTable2Characters = {
    "[[2],[],[]]",  "[[1,1],[],[]]", "[[1],[1],[]]", "[[1],[],[1]]", "[[],[2],[]]",
    "[[],[1,1],[]]", "[[],[1],[1]]", "[[],[],[2]]",  "[[],[],[1,1]]",
};

inline constexpr std::array<std::array<const char*, 9>, 9> kTable2Values = {{
    {"1", "1", "1", "1", "1", "1", "1", "1", "1"},
    {"1", "-1", "1", "1", "-1", "1", "1", "1", "-1"},
    {"2*w", "0", "-1", "2*w^2", "0", "-w^2", "-w", "2", "0"},
    {"2*w^2", "0", "-1", "2*w", "0", "-w", "-w^2", "2", "0"},
    {"w^2", "w", "1", "w", "w^2", "w", "w^2", "1", "1"},
    {"w^2", "-w", "1", "w", "-w^2", "w", "w^2", "1", "-1"},
    {"2", "0", "-1", "2", "0", "-1", "-1", "2", "0"},
    {"w", "w^2", "1", "w^2", "w", "w^2", "w", "1", "1"},
    {"w", "-w^2", "1", "w^2", "-w", "w^2", "w", "1", "-1"},
}};

// --- C_3 wr S_3 -------------------------------------------------------------

inline constexpr std::array<const char*, 22> kTable3Characters = {
    "[[3],[],[]]",   "[[2,1],[],[]]", "[[1,1,1],[],[]]", "[[2],[1],[]]",  "[[1,1],[1],[]]",
    "[[2],[],[1]]",  "[[1,1],[],[1]]", "[[1],[2],[]]",   "[[1],[1,1],[]]", "[[1],[1],[1]]",
    "[[1],[],[2]]",  "[[1],[],[1,1]]", "[[],[3],[]]",    "[[],[2,1],[]]",  "[[],[1,1,1],[]]",
    "[[],[2],[1]]",  "[[],[1,1],[1]]", "[[],[1],[2]]",   "[[],[1],[1,1]]", "[[],[],[3]]",
    "[[],[],[2,1]]", "[[],[],[1,1,1]]",
};

inline constexpr std::array<std::array<const char*, 22>, 22> kTable3Values = {{
    {"1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1",
     "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"},
    {"2", "0", "-1", "2", "0", "2", "0", "2", "0", "-1", "2",
     "0", "2", "2", "0", "2", "0", "2", "0", "2", "0", "-1"},
    {"1", "-1", "1", "1", "-1", "1", "-1", "1", "-1", "1", "1",
     "-1", "1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1"},
    {"3*w", "w", "0", "w-1", "w^2", "w^2-1", "w", "3*w^2", "w^2", "0", "w-w^2",
     "1", "0", "w^2-w", "1", "1-w^2", "w", "1-w", "w^2", "3", "1", "0"},
    {"3*w", "-w", "0", "w-1", "-w^2", "w^2-1", "-w", "3*w^2", "-w^2", "0", "w-w^2",
     "-1", "0", "w^2-w", "-1", "1-w^2", "-w", "1-w", "-w^2", "3", "-1", "0"},
    {"3*w^2", "w^2", "0", "w^2-1", "w", "w-1", "w^2", "3*w", "w", "0", "w^2-w",
     "1", "0", "w-w^2", "1", "1-w", "w^2", "1-w^2", "w", "3", "1", "0"},
    {"3*w^2", "-w^2", "0", "w^2-1", "-w", "w-1", "-w^2", "3*w", "-w", "0", "w^2-w",
     "-1", "0", "w-w^2", "-1", "1-w", "-w^2", "1-w^2", "-w", "3", "-1", "0"},
    {"3*w^2", "w", "0", "1-w", "w", "1-w^2", "w^2", "3*w", "w^2", "0", "w-1",
     "w", "0", "w^2-1", "w^2", "w-w^2", "1", "w^2-w", "1", "3", "1", "0"},
    {"3*w^2", "-w", "0", "1-w", "-w", "1-w^2", "-w^2", "3*w", "-w^2", "0", "w-1",
     "-w", "0", "w^2-1", "-w^2", "w-w^2", "-1", "w^2-w", "-1", "3", "-1", "0"},
    {"6", "0", "0", "0", "0", "0", "0", "6", "0", "0", "0",
     "0", "-3", "0", "0", "0", "0", "0", "0", "6", "0", "0"},
    {"3*w", "w^2", "0", "1-w^2", "w^2", "1-w", "w", "3*w^2", "w", "0", "w^2-1",
     "w^2", "0", "w-1", "w", "w^2-w", "1", "w-w^2", "1", "3", "1", "0"},
    {"3*w", "-w^2", "0", "1-w^2", "-w^2", "1-w", "-w", "3*w^2", "-w", "0", "w^2-1",
     "-w^2", "0", "w-1", "-w", "w^2-w", "-1", "w-w^2", "-1", "3", "-1", "0"},
    {"1", "w^2", "w", "w", "1", "w^2", "1", "1", "w", "w^2", "w^2",
     "w", "1", "w", "w^2", "w", "w", "w^2", "w^2", "1", "1", "1"},
    {"2", "0", "-w", "2*w", "0", "2*w^2", "0", "2", "0", "-w^2", "2*w^2",
     "0", "2", "2*w", "0", "2*w", "0", "2*w^2", "0", "2", "0", "-1"},
    {"1", "-w^2", "w", "w", "-1", "w^2", "-1", "1", "-w", "w^2", "w^2",
     "-w", "1", "w", "-w^2", "w", "-w", "w^2", "-w^2", "1", "-1", "1"},
    {"3*w", "1", "0", "w^2-w", "w^2", "w-w^2", "w", "3*w^2", "1", "0", "1-w",
     "w", "0", "1-w^2", "w^2", "w-1", "w^2", "w^2-1", "w", "3", "1", "0"},
    {"3*w", "-1", "0", "w^2-w", "-w^2", "w-w^2", "-w", "3*w^2", "-1", "0", "1-w",
     "-w", "0", "1-w^2", "-w^2", "w-1", "-w^2", "w^2-1", "-w", "3", "-1", "0"},
    {"3*w^2", "1", "0", "w-w^2", "w", "w^2-w", "w^2", "3*w", "1", "0", "1-w^2",
     "w^2", "0", "1-w", "w", "w^2-1", "w", "w-1", "w^2", "3", "1", "0"},
    {"3*w^2", "-1", "0", "w-w^2", "-w", "w^2-w", "-w^2", "3*w", "-1", "0", "1-w^2",
     "-w^2", "0", "1-w", "-w", "w^2-1", "-w", "w-1", "-w^2", "3", "-1", "0"},
    {"1", "w", "w^2", "w^2", "1", "w", "1", "1", "w^2", "w", "w",
     "w^2", "1", "w^2", "w", "w^2", "w^2", "w", "w", "1", "1", "1"},
    {"2", "0", "-w^2", "2*w^2", "0", "2*w", "0", "2", "0", "-w", "2*w",
     "0", "2", "2*w^2", "0", "2*w^2", "0", "2*w", "0", "2", "0", "-1"},
    {"1", "-w", "w^2", "w^2", "-1", "w", "-1", "1", "-w^2", "w", "w",
     "-w^2", "1", "w^2", "-w", "w^2", "-w^2", "w", "-w", "1", "-1", "1"},
}};

// --- S_9 character values mod 3 ----------------------------------------------

// Rows follow the character order above; the row label is the partition of
// 9 with empty 3-core whose 3-quotient is the character label. Columns are
// the classes (9), (6,3), (3,3,3). Entries are the S_9 character values
// mod 3, i.e. sigma(label) times the digit sum of the wreath value.
inline constexpr std::array<const char*, 22> kTable4BigPartitions = {
    "[7,1,1]", "[4,1,1,1,1,1]", "[1,1,1,1,1,1,1,1,1]", "[4,3,2]", "[2,2,2,1,1,1]",
    "[4,4,1]", "[3,2,1,1,1,1]", "[5,2,2]", "[2,2,2,2,1]", "[3,3,3]",
    "[6,2,1]", "[3,2,2,2]", "[8,1]", "[5,1,1,1,1]", "[2,1,1,1,1,1,1,1]",
    "[5,4]", "[3,3,1,1,1]", "[6,3]", "[3,3,2,1]", "[9]",
    "[6,1,1,1]", "[3,1,1,1,1,1,1]",
};

inline constexpr std::array<std::array<int, 3>, 22> kTable4ModValues = {{
    {1, 1, 1}, {2, 0, 2}, {1, 2, 1}, {0, 2, 0}, {0, 2, 0}, {0, 1, 0}, {0, 1, 0}, {0, 1, 0},
    {0, 1, 0}, {0, 0, 0}, {0, 2, 0}, {0, 2, 0}, {2, 2, 2}, {1, 0, 1}, {2, 1, 2}, {0, 2, 0},
    {0, 2, 0}, {0, 1, 0}, {0, 1, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 1},
}};

} // namespace wreathchar::golden
