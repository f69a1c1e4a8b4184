#pragma once

// Literal tables of published values. Each entry is a claim that the test
// suites recompute with the engine; nothing here is trusted on its own.

#include <array>
#include <cstdint>
#include <vector>

#include "msum/modular.hpp"

namespace msum::known {

/// A pair (e, q) together with the m value stated for it. m = 0 means the
/// value is determined by the list's rule (2 * e1 for the n = 2 list).
struct ListedPair {
    Int e;
    Int q;
    Int m;
};

/// Pairs with m(q, e) = 2 among the large-m exceptions.
inline const std::vector<ListedPair> kLargeMTwo{
    {5, 2, 2},  {5, 3, 2},  {7, 3, 2},  {7, 5, 2},  {9, 2, 2},  {9, 5, 2},
    {10, 3, 2}, {10, 7, 2}, {11, 2, 2}, {11, 6, 2}, {11, 7, 2}, {11, 8, 2},
};

/// Pairs with n = 2 and m(q, e) = 2 * e1 > 2.
inline const std::vector<ListedPair> kLargeMOrderTwo{
    {8, 3, 0},   {15, 4, 0},  {16, 7, 0},  {21, 13, 0}, {24, 5, 0},  {24, 11, 0},
    {33, 10, 0}, {35, 6, 0},  {40, 29, 0}, {45, 26, 0}, {48, 7, 0},  {55, 21, 0},
    {63, 8, 0},  {77, 43, 0}, {80, 9, 0},  {99, 10, 0}, {120, 11, 0},
};

/// Remaining sporadic large-m pairs with their m.
inline const std::vector<ListedPair> kLargeMSporadic{
    {7, 2, 3},   {7, 4, 3},   {11, 3, 3},  {11, 4, 3},  {11, 5, 3},  {11, 9, 3},
    {13, 3, 3},  {13, 9, 3},  {14, 9, 4},  {14, 11, 4}, {15, 2, 4},  {15, 8, 4},
    {16, 3, 4},  {16, 11, 4}, {20, 3, 4},  {20, 7, 4},  {22, 3, 4},  {22, 5, 4},
    {22, 9, 4},  {22, 15, 4}, {26, 3, 6},  {26, 9, 6},  {48, 5, 8},  {48, 29, 8},
};

/// m for an order-5 subgroup mod p^k when it differs from 5 (all at k = 1).
struct PrimeException {
    Int p;
    Int m;
};

inline const std::vector<PrimeException> kOrderFiveExceptions{{11, 3}, {61, 4}};

inline const std::vector<PrimeException> kOrderSevenExceptions{
    {29, 4},  {43, 3},  {71, 4},  {113, 5}, {197, 5}, {211, 6},  {379, 6},
    {421, 5}, {449, 6}, {463, 5}, {547, 4}, {757, 6}, {2689, 6},
};

/// Sequence (m at p, p^2, ...) for the order-n subgroup, up to the first level
/// where m equals the smallest prime divisor of n.
struct TowerRow {
    Int p;
    Int n;
    std::vector<Int> sequence;
};

inline const std::vector<TowerRow> kPrimeOrderTowers{
    {23, 11, {3, 5, 9, 9, 11}},
    {67, 11, {4, 8, 11}},
    {89, 11, {4, 9, 11}},
    {199, 11, {6, 11}},
    {353, 11, {5, 11}},
    {397, 11, {5, 11}},
    {53, 13, {3, 7, 12, 13}},
    {79, 13, {4, 8, 12, 13}},
    {157, 13, {4, 8, 12, 13}},
    {131, 13, {4, 8, 13}},
    {313, 13, {5, 10, 13}},
    {521, 13, {7, 13}},
    {547, 13, {5, 13}},
    {677, 13, {5, 13}},
    {937, 13, {5, 13}},
    {911, 13, {6, 13}},
    {239, 17, {3, 9, 15, 17}},
    {307, 17, {4, 9, 14, 17}},
    {409, 17, {5, 10, 15, 17}},
    {613, 17, {5, 10, 17}},
    {919, 17, {5, 12, 17}},
    {953, 17, {4, 11, 17}},
    {229, 19, {5, 8, 11, 19}},
    {571, 19, {4, 9, 16, 19}},
    {761, 19, {5, 7, 17, 19}},
};

/// Composite-order towers: smallest prime divisor 7.
inline const std::vector<TowerRow> kCompositeOrderTowers{
    {239, 119, {3, 4, 6, 7}},
    {547, 91, {3, 4, 7}},
    {911, 91, {4, 6, 7}},
};

/// Composite orders with smallest prime divisor 5: stated prefix of the tower.
inline const std::vector<TowerRow> kSmallestPrimeFiveTowers{
    {71, 35, {3, 5}},    {101, 25, {3, 5}},   {131, 65, {3, 5}},   {211, 35, {3, 5}},
    {281, 35, {3, 5}},   {521, 65, {3, 5}},   {571, 95, {3, 5}},   {631, 35, {3, 5}},
    {911, 35, {3, 5}},   {421, 35, {4, 5}},   {491, 35, {4, 5}},   {701, 35, {4, 5}},
    {761, 95, {4, 5}},   {911, 65, {4, 5}},   {1051, 35, {4, 5}},  {1471, 35, {4, 5}},
    {2311, 35, {4, 5}},  {2521, 35, {4, 5}},  {2591, 35, {4, 5}},  {2731, 35, {4, 5}},
    {3221, 35, {4, 5}},  {3361, 35, {4, 5}},  {3571, 35, {4, 5}},  {3851, 35, {4, 5}},
    {1151, 25, {5}},     {1201, 25, {5}},     {1301, 25, {5}},     {1801, 25, {5}},
    {2381, 35, {5}},     {2801, 35, {5}},     {2861, 55, {5}},     {3011, 35, {5}},
};

}  // namespace msum::known
