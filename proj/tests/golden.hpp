#pragma once

// Reference values for N=30/32/64, epsilon=1.

#include <array>

namespace golden {

inline constexpr double kExactEnergyN30 = -18.916414;

struct BetaRow {
    int cutoff;
    double beta;
};

// vbar = 2.0; even cutoffs share the value of the preceding odd one.
inline constexpr std::array<BetaRow, 16> kBetaVbar2{{
    {1, 1.047}, {3, 1.016}, {5, 0.977}, {7, 0.906}, {9, 0.791}, {11, 0.664}, {13, 0.538}, {15, 0.415},
    {17, 0.289}, {19, 0.150}, {21, 0.0}, {23, 0.0}, {25, 0.0}, {27, 0.0}, {29, 0.0}, {31, 0.0},
}};

inline constexpr std::array<BetaRow, 5> kBetaVbar1p2{{
    {1, 0.586}, {3, 0.496}, {5, 0.371}, {7, 0.113}, {9, 0.000},
}};

struct DeltaRow {
    int cutoff;
    double naive;
    double effective;
    double projected;
};

inline constexpr std::array<DeltaRow, 16> kDeltaN32{{
    {2, 4.1650, 1.6497e-1, 1.6497e-1},
    {4, 3.4144, 1.5623e-2, 1.5619e-2},
    {6, 2.4775, 2.0314e-3, 1.9222e-3},
    {8, 1.6218, 6.9980e-4, 2.3089e-4},
    {10, 9.5918e-1, 5.5488e-4, 2.4225e-5},
    {12, 4.9318e-1, 5.3602e-4, 4.0713e-6},
    {14, 2.0974e-1, 5.3282e-4, 9.5794e-7},
    {16, 6.9504e-2, 5.3203e-4, 2.3434e-7},
    {18, 1.7265e-2, 5.3168e-4, 1.2486e-7},
    {20, 3.6812e-3, 5.3131e-4, 3.5171e-7},
    {22, 8.9597e-4, 5.2763e-4, 1.0558e-5},
    {24, 7.4972e-5, 7.4972e-5, 7.4972e-5},
    {26, 3.7240e-6, 3.7240e-6, 3.7240e-6},
    {28, 9.6145e-8, 9.6145e-8, 9.6145e-8},
    {30, 9.7540e-10, 9.7541e-10, 9.7541e-10},
    {32, 0.0, 0.0, 0.0},
}};

inline constexpr std::array<DeltaRow, 28> kDeltaN64{{
    {2, 8.1569, 1.5689e-1, 1.5689e-1},
    {4, 7.4157, 1.3157e-2, 1.3157e-2},
    {6, 6.3471, 1.0902e-3, 1.0902e-3},
    {8, 5.2706, 9.0117e-5, 9.0117e-5},
    {10, 4.2615, 7.7929e-6, 7.7886e-6},
    {12, 3.3392, 8.2237e-7, 7.8705e-7},
    {14, 2.5243, 2.0110e-7, 9.6436e-8},
    {16, 1.8297, 1.4181e-7, 6.4595e-9},
    {18, 1.2606, 1.3566e-7, 9.1655e-10},
    {20, 8.1584e-1, 1.3495e-7, 1.0981e-10},
    {22, 4.8843e-1, 1.3486e-7, 1.6069e-11},
    {24, 2.6531e-1, 1.3485e-7, 2.9514e-12},
    {26, 1.2783e-1, 1.3484e-7, 6.7541e-13},
    {28, 5.3358e-2, 1.3484e-7, 1.8833e-13},
    {30, 1.8905e-2, 1.3484e-7, 6.1047e-14},
    {32, 5.6094e-3, 1.3484e-7, 2.5971e-14},
    {34, 1.3850e-3, 1.3484e-7, 8.9075e-15},
    {36, 2.8397e-4, 1.3484e-7, 9.2551e-15},
    {38, 4.8379e-5, 1.3484e-7, 7.0723e-15},
    {40, 6.9896e-6, 1.3484e-7, 4.9407e-15},
    {42, 1.0368e-6, 1.3484e-7, 4.7592e-14},
    {44, 2.3949e-7, 1.3477e-7, 2.7661e-10},
    {46, 1.9755e-8, 1.9755e-8, 1.9755e-8},
    {48, 1.2852e-9, 1.2852e-9, 1.2852e-9},
    {50, 6.445e-11, 6.445e-11, 6.445e-11},
    {52, 2.417e-12, 2.417e-12, 2.417e-12},
    {54, 6.5e-14, 6.5e-14, 6.5e-14},
    {56, 1.1e-15, 1.1e-15, 1.1e-15},
}};

}  // namespace golden
