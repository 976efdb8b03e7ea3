#pragma once

// Generated by cstar_gen_calibration. Do not edit by hand.

#include <array>

namespace cstar {

/// Lattice normal form (d, c) of extract_dpd(V_{d,e}) and the isomorphism-class
/// representative e = min(e, e^-1 mod d).
struct CalibrationEntry {
    long d;
    long c;
    long e;
};

inline constexpr long kCalibrationMaxD = 12;

inline constexpr std::array<CalibrationEntry, 36> kCalibrationTable{{
    {1, 0, 0},
    {2, 1, 1},
    {3, 1, 1},
    {3, 2, 2},
    {4, 1, 1},
    {4, 3, 3},
    {5, 1, 1},
    {5, 2, 2},
    {5, 4, 4},
    {6, 1, 1},
    {6, 5, 5},
    {7, 1, 1},
    {7, 2, 2},
    {7, 3, 3},
    {7, 6, 6},
    {8, 1, 1},
    {8, 3, 3},
    {8, 5, 5},
    {8, 7, 7},
    {9, 1, 1},
    {9, 2, 2},
    {9, 4, 4},
    {9, 8, 8},
    {10, 1, 1},
    {10, 3, 3},
    {10, 9, 9},
    {11, 1, 1},
    {11, 2, 2},
    {11, 3, 3},
    {11, 5, 5},
    {11, 7, 7},
    {11, 10, 10},
    {12, 1, 1},
    {12, 5, 5},
    {12, 7, 7},
    {12, 11, 11},
}};

}  // namespace cstar
