#pragma once

#include "exclusion/sdp.hpp"

namespace exclusion {

struct BoundTable {
    int n = 0;
    double theta_min = 0.0;
    double d_n = 0.0;  // sin(theta_min)
};

// Smallest angle at which the n-qubit product family admits exclusion:
// 2*arctan(2^(1/n) - 1). Throws InvalidN for n < 1.
double theta_min(int n);

// sin(theta_min(n)). Note this is the sine of the angle, not the angle
// itself; the two differ in the third decimal already at n = 4.
double onset_sin(int n);

BoundTable bound_table_row(int n);

// Lifts an n_small-qubit POVM by one fresh (noisy) qubit in front: each
// effect E_k becomes two copies of (1/2) identity (x) E_k, assigned to the
// two bitstrings that extend k's bitstring by the new leading bit. The
// result is exactly PSD and complete, no reprojection involved.
Povm lift_measurement(const Povm& m_small, int n_small);

}  // namespace exclusion
