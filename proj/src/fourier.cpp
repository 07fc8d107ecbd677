#include "raglab/fourier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace raglab {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;
constexpr double kE = 2.7182818284590452353602874713526625;

void check_dw(int d, int w) {
    if (d < 1 || w < 0 || w > d) throw std::invalid_argument("krawtchouk: index out of range");
}

}  // namespace

std::vector<BigInt> krawtchouk_column(int d, int w) {
    check_dw(d, w);
    // (l+1) K_{l+1}(w) = (d-2w) K_l(w) - (d-l+1) K_{l-1}(w)
    std::vector<BigInt> k(std::size_t(d) + 1);
    k[0] = 1;
    if (d >= 1) k[1] = d - 2 * w;
    for (int l = 1; l < d; ++l)
        k[std::size_t(l) + 1] = ((d - 2 * w) * k[std::size_t(l)] - BigInt(d - l + 1) * k[std::size_t(l) - 1]) / (l + 1);
    return k;
}

BigInt krawtchouk(int d, int l, int w) {
    check_dw(d, w);
    if (l < 0 || l > d) throw std::invalid_argument("krawtchouk: level out of range");
    return krawtchouk_column(d, w)[std::size_t(l)];
}

std::vector<double> krawtchouk_column_normalized(int d, int w) {
    check_dw(d, w);
    // Kt_{l+1} = ((d-2w) Kt_l - l Kt_{l-1}) / (d-l); all values in [-1,1].
    std::vector<double> k(std::size_t(d) + 1);
    k[0] = 1.0;
    if (d >= 1) k[1] = double(d - 2 * w) / double(d);
    for (int l = 1; l < d; ++l)
        k[std::size_t(l) + 1] = (double(d - 2 * w) * k[std::size_t(l)] - double(l) * k[std::size_t(l) - 1]) / double(d - l);
    return k;
}

std::vector<double> krawtchouk_column_orthonormal(int d, int w) {
    check_dw(d, w);
    std::vector<double> u(std::size_t(d) + 1);
    const double log_bw = log_binomial(d, w) - d * kLn2;
    u[0] = std::exp(0.5 * log_bw);
    if (d >= 1) u[1] = double(d - 2 * w) * u[0] / std::sqrt(double(d));
    for (int l = 1; l < d; ++l) {
        const double a = double(d - 2 * w);
        const double b = std::sqrt(double(l) * double(d - l + 1));
        const double c = std::sqrt(double(l + 1) * double(d - l));
        u[std::size_t(l) + 1] = (a * u[std::size_t(l)] - b * u[std::size_t(l) - 1]) / c;
    }
    return u;
}

double FourierLevels::mean() const {
    if (exact) return to_double(coeff_exact[0]);
    return signed_sqrt_weight.empty() ? std::sqrt(weight[0]) : signed_sqrt_weight[0];
}

Rational FourierLevels::mean_exact() const {
    if (!exact) throw std::logic_error("FourierLevels: exact path absent");
    return coeff_exact[0];
}

double FourierLevels::coeff(int l) const {
    if (exact) return to_double(coeff_exact[std::size_t(l)]);
    if (!symmetric) throw std::logic_error("FourierLevels: coeff undefined for non-symmetric levels");
    const double v = signed_sqrt_weight[std::size_t(l)];
    if (v == 0.0) return 0.0;
    const double lg = std::log(std::abs(v)) - 0.5 * log_binomial(d, l);
    return std::copysign(std::exp(lg), v);
}

double FourierLevels::variance() const {
    double s = 0.0;
    for (int l = 1; l <= d; ++l) s += weight[std::size_t(l)];
    return s;
}

double FourierLevels::power_sum(int k) const {
    if (!symmetric) throw std::logic_error("power_sum: symmetric levels required");
    if (k < 1) throw std::invalid_argument("power_sum: k >= 1");
    // sum_l C(d,l) c_l^k = sum_l sign(v_l)^k exp((1-k/2) log C(d,l) + k log|v_l|)
    double pos = -std::numeric_limits<double>::infinity();
    double neg = -std::numeric_limits<double>::infinity();
    std::vector<double> pos_terms, neg_terms;
    for (int l = 1; l <= d; ++l) {
        const double v = signed_sqrt_weight[std::size_t(l)];
        if (v == 0.0) continue;
        const double lg = (1.0 - 0.5 * k) * log_binomial(d, l) + k * std::log(std::abs(v));
        const bool negative = (v < 0.0) && (k % 2 == 1);
        (negative ? neg_terms : pos_terms).push_back(lg);
    }
    pos = log_sum_exp(pos_terms);
    neg = log_sum_exp(neg_terms);
    double a = std::isfinite(pos) ? std::exp(pos) : 0.0;
    double b = std::isfinite(neg) ? std::exp(neg) : 0.0;
    return a - b;
}

Rational FourierLevels::power_sum_exact(int k) const {
    if (!exact) throw std::logic_error("power_sum_exact: exact path absent");
    Rational s(0);
    for (int l = 1; l <= d; ++l)
        s += Rational(binomial(d, l)) * rational_pow(coeff_exact[std::size_t(l)], k);
    return s;
}

FourierLevels levels_from_profile(const SymmetricProfile& profile) {
    const int d = profile.d;
    FourierLevels out;
    out.d = d;
    out.symmetric = true;
    out.signed_sqrt_weight.assign(std::size_t(d) + 1, 0.0);
    out.weight.assign(std::size_t(d) + 1, 0.0);
    out.maxabs.assign(std::size_t(d) + 1, 0.0);

    // v_l = sum_w g_w sqrt(C(d,w) 2^-d) u_l(w) with orthonormal Krawtchouks;
    // every summand is bounded, so this is stable for d in the thousands.
    std::vector<double> v(std::size_t(d) + 1, 0.0);
    for (int w = 0; w <= d; ++w) {
        const double g = profile.at_class(w);
        if (g == 0.0) continue;
        const double h = g * std::exp(0.5 * (log_binomial(d, w) - d * kLn2));
        const auto u = krawtchouk_column_orthonormal(d, w);
        for (int l = 0; l <= d; ++l) v[std::size_t(l)] += h * u[std::size_t(l)];
    }
    for (int l = 0; l <= d; ++l) {
        out.signed_sqrt_weight[std::size_t(l)] = v[std::size_t(l)];
        out.weight[std::size_t(l)] = v[std::size_t(l)] * v[std::size_t(l)];
        out.maxabs[std::size_t(l)] = std::abs(v[std::size_t(l)]);
    }

    if (d <= FourierLevels::kExactCap) {
        out.exact = true;
        out.coeff_exact.assign(std::size_t(d) + 1, Rational(0));
        out.weight_exact.assign(std::size_t(d) + 1, Rational(0));
        std::vector<Rational> gq(std::size_t(d) + 1);
        for (int w = 0; w <= d; ++w) gq[std::size_t(w)] = rational_from_double(profile.at_class(w));
        std::vector<std::vector<BigInt>> kraw(std::size_t(d) + 1);
        for (int w = 0; w <= d; ++w) kraw[std::size_t(w)] = krawtchouk_column(d, w);
        const Rational two_pow_d(BigInt(1) << d);
        for (int l = 0; l <= d; ++l) {
            Rational acc(0);
            for (int w = 0; w <= d; ++w)
                acc += Rational(binomial(d, w)) * gq[std::size_t(w)] * Rational(kraw[std::size_t(w)][std::size_t(l)]);
            acc /= two_pow_d * Rational(binomial(d, l));
            out.coeff_exact[std::size_t(l)] = acc;
            out.weight_exact[std::size_t(l)] = Rational(binomial(d, l)) * acc * acc;
            // Exact values supersede the float recurrences where both exist.
            const double w_d = to_double(out.weight_exact[std::size_t(l)]);
            out.weight[std::size_t(l)] = w_d;
            out.signed_sqrt_weight[std::size_t(l)] = acc >= 0 ? std::sqrt(w_d) : -std::sqrt(w_d);
            out.maxabs[std::size_t(l)] = std::sqrt(w_d);
        }
    }
    return out;
}

SymmetricProfile profile_from_levels(const std::vector<Rational>& coeff, int d) {
    if (coeff.size() != std::size_t(d) + 1)
        throw std::invalid_argument("profile_from_levels: need d+1 coefficients");
    std::vector<double> vals(std::size_t(d) + 1, 0.0);
    for (int w = 0; w <= d; ++w) {
        const auto kraw = krawtchouk_column(d, w);
        Rational acc(0);
        for (int l = 0; l <= d; ++l) acc += coeff[std::size_t(l)] * Rational(kraw[std::size_t(l)]);
        vals[std::size_t(d - w)] = to_double(acc);
    }
    return SymmetricProfile(d, std::move(vals));
}

Rational last_level_via_differences(const SymmetricProfile& profile) {
    const int d = profile.d;
    Rational acc(0);
    for (int j = 1; j <= d; ++j) {
        const Rational a = rational_from_double(profile.values[std::size_t(j)]) -
                           rational_from_double(profile.values[std::size_t(j) - 1]);
        if (a == 0) continue;
        Rational term = a * Rational(binomial(d - 1, j - 1));
        if ((d - j) % 2 == 1) term = -term;
        acc += term;
    }
    acc /= Rational(BigInt(1) << d);
    return acc;
}

double GammaProfile::moment(int t) const {
    if (t < 0) throw std::invalid_argument("moment: t >= 0");
    if (t == 0) return 1.0;
    std::vector<double> pos, neg;
    for (int w = 0; w <= d; ++w) {
        const double g = values[std::size_t(w)];
        if (g == 0.0) continue;
        const double lg = log_binomial(d, w) - d * kLn2 + t * std::log(std::abs(g));
        const bool negative = (g < 0.0) && (t % 2 == 1);
        (negative ? neg : pos).push_back(lg);
    }
    const double lp = log_sum_exp(pos), ln = log_sum_exp(neg);
    const double a = std::isfinite(lp) ? std::exp(lp) : 0.0;
    const double b = std::isfinite(ln) ? std::exp(ln) : 0.0;
    return a - b;
}

Rational GammaProfile::moment_exact(int t) const {
    if (!exact) throw std::logic_error("moment_exact: exact path absent");
    if (t == 0) return Rational(1);
    Rational acc(0);
    for (int w = 0; w <= d; ++w)
        acc += Rational(binomial(d, w)) * rational_pow(values_q[std::size_t(w)], t);
    acc /= Rational(BigInt(1) << d);
    return acc;
}

namespace {

GammaProfile gamma_from_level_masses(const FourierLevels& levels, double p_center,
                                     const std::vector<double>& mass,
                                     const std::vector<Rational>* mass_q) {
    const int d = levels.d;
    GammaProfile g;
    g.d = d;
    g.p_center = p_center;
    g.values.assign(std::size_t(d) + 1, 0.0);

    const double shift = (levels.mean() - p_center) * (levels.mean() - p_center);
    for (int w = 0; w <= d; ++w) {
        const auto kt = krawtchouk_column_normalized(d, w);
        double acc = shift;
        for (int l = 1; l <= d; ++l) acc += mass[std::size_t(l)] * kt[std::size_t(l)];
        g.values[std::size_t(w)] = acc;
    }

    if (levels.exact && mass_q) {
        g.exact = true;
        g.values_q.assign(std::size_t(d) + 1, Rational(0));
        const Rational shift_q =
            (levels.mean_exact() - rational_from_double(p_center)) *
            (levels.mean_exact() - rational_from_double(p_center));
        for (int w = 0; w <= d; ++w) {
            const auto kraw = krawtchouk_column(d, w);
            Rational acc = shift_q;
            for (int l = 1; l <= d; ++l)
                acc += (*mass_q)[std::size_t(l)] * Rational(kraw[std::size_t(l)]) / Rational(binomial(d, l));
            g.values_q[std::size_t(w)] = acc;
            g.values[std::size_t(w)] = to_double(acc);
        }
    }
    return g;
}

}  // namespace

GammaProfile gamma_profile(const FourierLevels& levels, double p_center) {
    if (levels.exact)
        return gamma_from_level_masses(levels, p_center, levels.weight, &levels.weight_exact);
    return gamma_from_level_masses(levels, p_center, levels.weight, nullptr);
}

GammaProfile symmetrized_profile(const FourierLevels& levels, double p_center) {
    std::vector<double> mass(std::size_t(levels.d) + 1, 0.0);
    for (int l = 0; l <= levels.d; ++l)
        mass[std::size_t(l)] = levels.maxabs[std::size_t(l)] * levels.maxabs[std::size_t(l)];
    if (levels.exact) {
        // For the symmetric exact path B_l^2 == W_l, so reuse the weights.
        return gamma_from_level_masses(levels, p_center, mass, &levels.weight_exact);
    }
    return gamma_from_level_masses(levels, p_center, mass, nullptr);
}

ElemSymMoment elem_sym_moment(int d, int s, int t) {
    if (t < 1) throw std::invalid_argument("elem_sym_moment: t >= 1");
    if (s < 0 || s > d) throw std::invalid_argument("elem_sym_moment: s out of range");
    // E|e_s|^t = 2^-d sum_w C(d,w) |K_s(w)|^t, exact in big integers.
    BigInt total = 0;
    for (int w = 0; w <= d; ++w) {
        BigInt k = krawtchouk(d, s, w);
        if (k < 0) k = -k;
        if (k == 0) continue;
        total += binomial(d, w) * bigint_pow(k, t);
    }
    ElemSymMoment m{};
    if (total == 0) {
        m.log_norm = -std::numeric_limits<double>::infinity();
        m.norm = 0.0;
        return m;
    }
    m.log_norm = (log_bigint(total) - d * kLn2) / double(t);
    m.norm = std::exp(m.log_norm);
    return m;
}

ElemSymBounds elem_sym_bounds(int d, int s, int t) {
    if (t < 2) throw std::invalid_argument("elem_sym_bounds: t >= 2");
    if (s < 0 || s > d) throw std::invalid_argument("elem_sym_bounds: s out of range");
    const int sm = std::min(s, d - s);
    const double lc = log_binomial(d, s);
    ElemSymBounds b{};
    b.log_upper_hc = 0.5 * lc + 0.5 * sm * std::log(double(t - 1));
    b.log_lower = lc - (double(d) / double(t)) * kLn2;
    if (d > 2 * t * kE && double(sm) >= double(d) / (2.0 * t * kE))
        b.log_upper_mid = lc - double(d) / (4.0 * t * kE);
    return b;
}

LevelKReport level_k_inequality_check(const FourierLevels& levels, int k, double alpha) {
    LevelKReport r{};
    if (k < 1 || alpha <= 0.0 || alpha > 1.0) return r;
    if (alpha >= 1.0 || double(k) > 2.0 * std::log(1.0 / alpha)) return r;  // not applicable
    r.applicable = true;
    double lhs = 0.0;
    for (int l = 0; l <= std::min(k, levels.d); ++l) lhs += levels.weight[std::size_t(l)];
    r.lhs = lhs;
    r.rhs = std::pow(2.0 * kE * std::log(1.0 / alpha) / double(k), double(k)) * alpha * alpha;
    r.holds = lhs <= r.rhs * (1.0 + 1e-12);
    return r;
}

LevelKReport level_k_inequality_check(const SymmetricProfile& profile, int k) {
    double alpha = 0.0;
    for (int i = 0; i <= profile.d; ++i)
        alpha += std::exp(log_binomial(profile.d, i) - profile.d * kLn2) *
                 std::abs(profile.values[std::size_t(i)]);
    return level_k_inequality_check(levels_from_profile(profile), k, alpha);
}

WalshSpectrum::WalshSpectrum(int d, const std::function<double(std::uint32_t)>& value_of_mask)
    : d_(d) {
    if (d < 1 || d > 24) throw std::invalid_argument("WalshSpectrum: d must be in [1,24]");
    const std::size_t n = std::size_t(1) << d;
    coeffs_.resize(n);
    for (std::size_t m = 0; m < n; ++m) coeffs_[m] = value_of_mask(std::uint32_t(m));
    // In-place Walsh-Hadamard butterfly, then normalize by 2^-d.
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const double a = coeffs_[j], b = coeffs_[j + len];
                coeffs_[j] = a + b;
                coeffs_[j + len] = a - b;
            }
        }
    }
    const double scale = std::ldexp(1.0, -d);
    for (auto& c : coeffs_) c *= scale;
}

std::vector<double> WalshSpectrum::level_weights() const {
    std::vector<double> w(std::size_t(d_) + 1, 0.0);
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
        w[std::size_t(std::popcount(std::uint32_t(s)))] += coeffs_[s] * coeffs_[s];
    return w;
}

std::vector<double> WalshSpectrum::level_maxabs() const {
    std::vector<double> m(std::size_t(d_) + 1, 0.0);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) {
        auto& slot = m[std::size_t(std::popcount(std::uint32_t(s)))];
        slot = std::max(slot, std::abs(coeffs_[s]));
    }
    for (int l = 0; l <= d_; ++l) m[std::size_t(l)] *= std::exp(0.5 * log_binomial(d_, l));
    return m;
}

double WalshSpectrum::power_sum(int k) const {
    double acc = 0.0;
    for (std::size_t s = 1; s < coeffs_.size(); ++s) acc += std::pow(coeffs_[s], k);
    return acc;
}

FourierLevels WalshSpectrum::to_levels() const {
    FourierLevels out;
    out.d = d_;
    out.symmetric = false;
    out.weight = level_weights();
    out.maxabs = level_maxabs();
    out.signed_sqrt_weight.assign(std::size_t(d_) + 1, 0.0);
    out.signed_sqrt_weight[0] = coeffs_[0];
    return out;
}

}  // namespace raglab
