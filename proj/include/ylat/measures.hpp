#pragma once

#include <map>

#include "ylat/graph.hpp"

namespace ylat {

struct DegenerateParameterError : Error {
    using Error::Error;
};

/// True when z lies in Z + Z*theta (with z real this is exact: writing
/// theta = p/q in lowest terms, Zq + Zp = Z, so the test is q*z integral).
/// Such z are excluded for the z-family below.
bool z_is_degenerate(const GaussianRational& z, const Rational& theta);

/// One of the three harmonic-measure families on the weighted lattice:
///  - plancherel_jack(theta):   phi = theta^n / H'_theta(la)
///  - z_measure(theta, z):      phi = prod |z + c_theta(b)|^2 / ((|z|^2/theta)_n H'_theta(la))
///  - kingman_t(t):             psi = prod (la_i - 1)! / prod r_k! * t^rows / (t)_n
/// Each family pairs with its multiplicity spec (Jack for the first two,
/// Kingman for the third); the pairing is fixed, not user-selectable.
struct MeasureSpec {
    enum class Family { plancherel_jack, z_measure, kingman_t };

    Family family = Family::plancherel_jack;
    Rational theta = 1;
    GaussianRational z;
    Rational t = 1;

    static MeasureSpec plancherel_jack(Rational theta);
    static MeasureSpec z_measure(Rational theta, GaussianRational z);
    static MeasureSpec kingman_t(Rational t);

    MultiplicitySpec multiplicity() const;
    std::string cache_key() const;
    std::string name() const;
};

/// The three harmonic functions individually (exact, nonnegative).
Rational phi_plancherel(const Partition& la, const Rational& theta);
Rational phi_z(const Partition& la, const Rational& theta, const GaussianRational& z);
Rational psi_t(const Partition& la, const Rational& t);

/// Family dispatch, memoized per (measure, la).
Rational phi(const MeasureSpec& measure, const Partition& la);

/// Forward one-step probability kappa(mu,la) * phi(la) / phi(mu).
Rational transition(const MeasureSpec& measure, const Partition& mu, const Partition& la);

/// Distribution of the walk's diagram at a fixed level: la |-> dim * phi.
struct LevelDistribution {
    long level = 0;
    std::map<Partition, Rational> weights;  // sums to exactly 1
};
LevelDistribution level_distribution(const MeasureSpec& measure, long n, long cap = 40);

/// Exact check of the balance condition phi(mu) = sum_{la > mu} kappa * phi(la).
bool check_harmonicity(const MeasureSpec& measure, const Partition& mu);

}  // namespace ylat
