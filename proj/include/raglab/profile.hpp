#pragma once

#include <vector>

#include "raglab/rational.hpp"

namespace raglab {

/**
 * A symmetric function on {+1,-1}^d stored as its d+1 values by class:
 * values[i] is the function at any point with exactly i coordinates +1.
 * (The Hamming class w of an element counts -1 coordinates, so the value
 * at class w is values[d - w].)
 */
struct SymmetricProfile {
    int d = 0;
    std::vector<double> values;  // size d+1, indexed by #(+1) coordinates

    SymmetricProfile() = default;
    SymmetricProfile(int dim, std::vector<double> vals);

    double at_plus_count(int i) const { return values[std::size_t(i)]; }
    double at_class(int w) const { return values[std::size_t(d - w)]; }

    /// Binomially weighted mean 2^-d sum_i C(d,i) values[i], exact.
    Rational mean_exact() const;
    double mean() const { return to_double(mean_exact()); }

    bool in_unit_interval(double tol = 0.0) const;
};

/// Total profile fluctuation sum_j |f_{j+1} - f_j|.
double fluctuation(const SymmetricProfile& profile);

}  // namespace raglab
