#pragma once

// PD codes shared by the unit tests.
namespace fx {

inline constexpr const char* hopf = "PD[X[2,4,3,1], X[4,2,1,3]]";
inline constexpr const char* trefoil = "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]";
inline constexpr const char* figure_eight = "PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]";
inline constexpr const char* whitehead =
    "PD[X[6,1,7,2], X[10,7,5,8], X[4,5,1,6], X[2,10,3,9], X[8,4,9,3]]";
inline constexpr const char* kink = "PD[X[1,1,2,2]]";
inline constexpr const char* kinked_unlink = "PD[X[1,1,2,2], U[3]]";
inline constexpr const char* unlink = "PD[U[1], U[2]]";

}  // namespace fx
