#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "raglab/profile.hpp"
#include "raglab/rational.hpp"

namespace raglab {

/// Exact Krawtchouk value K_l(w) over dimension d: the elementary symmetric
/// character sum of degree l evaluated at any point of Hamming class w,
/// K_l(w) = sum_j (-1)^j C(w,j) C(d-w, l-j).
BigInt krawtchouk(int d, int l, int w);

/// All-l column of exact Krawtchouk values at class w (two-term recurrence).
std::vector<BigInt> krawtchouk_column(int d, int w);

/// Normalized K_l(w)/C(d,l) for l = 0..d; all values lie in [-1, 1].
std::vector<double> krawtchouk_column_normalized(int d, int w);

/// Orthonormal Krawtchouk column u_l(w) = K_l(w) sqrt( C(d,w) 2^-d / C(d,l) ),
/// satisfying sum_w u_l(w)^2 = 1. Stable for d in the thousands.
std::vector<double> krawtchouk_column_orthonormal(int d, int w);

/**
 * Per-level Fourier data of a function on {+-1}^d.
 *
 * For symmetric functions all coefficients on a level share one value c_l;
 * then v_l = sign(c_l) sqrt(W_l) and B_l = |v_l|. Levels built from an
 * exhaustive spectrum of a non-symmetric function carry weights W_l and
 * per-level maxima B_l only (symmetric == false).
 *
 * Exact rationals are kept alongside doubles whenever d <= kExactCap.
 */
struct FourierLevels {
    int d = 0;
    bool symmetric = false;
    bool exact = false;

    std::vector<double> signed_sqrt_weight;  // v_l, symmetric only
    std::vector<double> weight;              // W_l
    std::vector<double> maxabs;              // B_l = max |coeff| * C(d,l)^(1/2)

    std::vector<Rational> coeff_exact;   // c_l, symmetric exact path
    std::vector<Rational> weight_exact;  // W_l, exact path

    static constexpr int kExactCap = 128;

    double mean() const;          // c_0
    Rational mean_exact() const;  // exact path only
    /// c_l as a double; may underflow to 0 for mid levels at very large d.
    double coeff(int l) const;
    double variance() const;  // sum of W_l, l >= 1

    /// sum over nonempty S of coeff(S)^k; symmetric levels only.
    double power_sum(int k) const;
    Rational power_sum_exact(int k) const;
};

/// Exact + stable per-level coefficients of a symmetric profile.
FourierLevels levels_from_profile(const SymmetricProfile& profile);

/// Reconstruct the profile of sum_l c_l * (level-l character sum).
SymmetricProfile profile_from_levels(const std::vector<Rational>& coeff, int d);

/// Coefficient on the top set [d], computed from the alternating-difference
/// identity sigma_hat([d]) = 2^-d sum_j (f_j - f_{j-1}) (-1)^{d-j} C(d-1,j-1).
Rational last_level_via_differences(const SymmetricProfile& profile);

/**
 * Profile of the centered autocorrelation gamma = (sigma - p) * (sigma - p)
 * by Hamming class, gamma_w = (c_0-p)^2 + sum_{l>=1} W_l K_l(w)/C(d,l),
 * plus its binomially weighted moments.
 */
struct GammaProfile {
    int d = 0;
    double p_center = 0.0;
    bool exact = false;
    std::vector<double> values;      // gamma_w for w = 0..d
    std::vector<Rational> values_q;  // exact path

    double moment(int t) const;  // E[gamma^t], sign-split log-sum-exp
    Rational moment_exact(int t) const;
};

GammaProfile gamma_profile(const FourierLevels& levels, double p_center);

/// Same shape as gamma_profile but driven by per-level maxima B_l^2 instead
/// of weights; dominates the gamma moments of any function with those maxima
/// and coincides with gamma when the function is symmetric.
GammaProfile symmetrized_profile(const FourierLevels& levels, double p_center);

/// Exact L_t norm of the elementary symmetric polynomial e_s over {+-1}^d:
/// E|e_s|^t = 2^-d sum_w C(d,w) |K_s(w)|^t, reported as log E|e_s|^t / t.
struct ElemSymMoment {
    double log_norm;  // log ||e_s||_t
    double norm;      // exp(log_norm); +inf if out of double range
};
ElemSymMoment elem_sym_moment(int d, int s, int t);

/// The two upper bounds and the tightness lower bound for ||e_s||_t,
/// as comparable log-values. The mid bound requires d > 2te, t > 1 and
/// min(s, d-s) >= d/(2te); absent otherwise.
struct ElemSymBounds {
    double log_upper_hc;                  // 1/2 log C(d,s) + sm(s)/2 log(t-1)
    std::optional<double> log_upper_mid;  // log C(d,s) - d/(4te)
    double log_lower;                     // log C(d,s) - (d/t) log 2
};
ElemSymBounds elem_sym_bounds(int d, int s, int t);

/// Level-k inequality W^{<=k}[f] <= (2e ln(1/alpha) / k)^k alpha^2 for
/// [-1,1]-valued f with ||f||_1 = alpha; applicable when k <= 2 ln(1/alpha).
struct LevelKReport {
    bool applicable = false;
    double lhs = 0.0;  // W^{<=k}
    double rhs = 0.0;
    bool holds = false;
};
LevelKReport level_k_inequality_check(const FourierLevels& levels, int k, double alpha);
LevelKReport level_k_inequality_check(const SymmetricProfile& profile, int k);

/**
 * Exhaustive Walsh spectrum of a function on {+-1}^d, d <= 24. Subsets are
 * bit masks; the input element mask has bit i set when coordinate i is -1.
 */
class WalshSpectrum {
  public:
    WalshSpectrum(int d, const std::function<double(std::uint32_t)>& value_of_mask);

    int dim() const { return d_; }
    double coeff(std::uint32_t s) const { return coeffs_[s]; }
    double mean() const { return coeffs_[0]; }

    std::vector<double> level_weights() const;
    std::vector<double> level_maxabs() const;
    double power_sum(int k) const;  // sum over S != 0 of coeff^k
    FourierLevels to_levels() const;

  private:
    int d_;
    std::vector<double> coeffs_;
};

}  // namespace raglab
