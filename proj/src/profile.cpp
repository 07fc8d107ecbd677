#include "raglab/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace raglab {

SymmetricProfile::SymmetricProfile(int dim, std::vector<double> vals)
    : d(dim), values(std::move(vals)) {
    if (d < 1 || values.size() != std::size_t(d) + 1)
        throw std::invalid_argument("SymmetricProfile: need d+1 values");
}

Rational SymmetricProfile::mean_exact() const {
    Rational acc(0);
    for (int i = 0; i <= d; ++i)
        acc += Rational(binomial(d, i)) * rational_from_double(values[std::size_t(i)]);
    acc /= Rational(BigInt(1) << d);
    return acc;
}

bool SymmetricProfile::in_unit_interval(double tol) const {
    for (double v : values)
        if (!(v >= -tol && v <= 1.0 + tol)) return false;
    return true;
}

double fluctuation(const SymmetricProfile& profile) {
    double s = 0.0;
    for (int i = 0; i + 1 <= profile.d; ++i)
        s += std::abs(profile.values[std::size_t(i) + 1] - profile.values[std::size_t(i)]);
    return s;
}

}  // namespace raglab
