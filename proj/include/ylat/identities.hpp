#pragma once

#include <optional>
#include <vector>

#include "ylat/measures.hpp"

namespace ylat {

struct InvalidIndexTupleError : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};

/// The verified summation identities. Each one states that a family of
/// nonnegative terms sums to exactly 1; every term is the probability that
/// a fixed box enters the random diagram at a specific step, so terms group
/// naturally by the step ("level") n = |la| of the underlying diagram.
///
///  - plancherel_young_box(k, l): unweighted lattice, box (k+1, l+1),
///    terms indexed by strictly decreasing tuples p (length k) and q
///    (length l); k + l >= 1.
///  - theta_plancherel_hook(k, theta): Jack weights, box (k+1, 1), terms
///    indexed by weakly decreasing a_1 >= ... >= a_k >= 1.
///  - z_measure_hook(k, theta, z): z-family, box (k+1, 1), same index set.
///  - kingman_t(k, l, t): Kingman weights, box (k+1, l+1), terms indexed by
///    r in N^l and s in N^k; l >= 1.
///  - special_case(box, theta): the separately printed expansions for the
///    boxes (2,1), (2,2), (3,1), (4,1), (5,1) under Jack weights, kept as
///    literal formulas so they can be cross-checked against the generic
///    machinery.
///  - fk_form(k) / gk_form(k): the two equivalent shapes of the
///    theta = 1 hook identity, kept separate to test their term-by-term
///    equivalence under p_j = mu_j + k - j.
struct IdentitySpec {
    enum class Kind {
        plancherel_young_box,
        theta_plancherel_hook,
        z_measure_hook,
        kingman_t,
        special_case,
        fk_form,
        gk_form,
    };

    Kind kind = Kind::fk_form;
    int k = 1;
    int l = 0;
    Rational theta = 1;
    Rational t = 1;
    GaussianRational z;
    Box box;  // special_case only

    static IdentitySpec plancherel_young_box(int k, int l);
    static IdentitySpec theta_plancherel_hook(int k, Rational theta);
    static IdentitySpec z_measure_hook(int k, Rational theta, GaussianRational z);
    static IdentitySpec kingman_t(int k, int l, Rational t);
    static IdentitySpec special_case(Box box, Rational theta);
    static IdentitySpec fk_form(int k);
    static IdentitySpec gk_form(int k);

    std::string name() const;
};

/// One level of a truncated identity evaluation. All fields are exact;
/// cumulative is nondecreasing in the level and residual = 1 - cumulative.
struct ConvergenceRow {
    long level = 0;
    Rational mass;
    Rational cumulative;
    Rational residual;
};

struct ConvergenceReport {
    std::string title;
    long max_level = 0;
    std::vector<ConvergenceRow> rows;  // one row per level 1..max_level
    double wall_ms = 0.0;              // informational; never serialized

    const Rational& total() const;
    const Rational& residual() const;
};

/// Diagrams mu of size m to which the given box is addable (row i equals
/// j-1, the row above reaches j); the level-m slice of the index set behind
/// every identity above.
std::vector<Partition> upper_hook_set(Box box, long m);

/// Probability that the box receives entry n: sum over the size-(n-1)
/// slice of upper_hook_set of dim(mu) * kappa(mu, mu+box) * phi(mu+box).
Rational box_probability_term(const MeasureSpec& measure, Box box, long n);

/// Cumulative version of the above for n = 1..max_level.
ConvergenceReport box_probability_cumulative(const MeasureSpec& measure, Box box, long max_level);

/// Individual summands of the printed identities (exact; argument tuples
/// are validated and rejected with InvalidIndexTupleError).
Rational term_plancherel_young(int k, int l, const std::vector<int>& p, const std::vector<int>& q);
Rational term_theta_plancherel_hook(int k, const Rational& theta, const std::vector<int>& a);
Rational term_z_measure_hook(int k, const Rational& theta, const GaussianRational& z,
                             const std::vector<int>& mu);
Rational term_kingman_t(int k, int l, const Rational& t, const std::vector<int>& r,
                        const std::vector<int>& s);
Rational special_case_term(Box box, const Rational& theta, const std::vector<int>& indices);
Rational f_k_term(int k, const std::vector<int>& p);
Rational g_k_term(int k, const std::vector<int>& mu);

/// Level of the diagram underlying one summand (the step at which the box
/// is entered); used to group index tuples into a monotone truncation.
long level_of_tuple(const IdentitySpec& spec, const std::vector<int>& first,
                    const std::vector<int>& second = {});

/// Sums the identity level by level up to max_level.
ConvergenceReport evaluate_identity(const IdentitySpec& spec, long max_level);

/// Exact partial sum of 3F2(a1,a2,a3; b1,b2; 1) through m = N. Demands that
/// no denominator parameter hits a nonpositive integer within range and
/// that the sum is exactly real (parameters in conjugate pairs).
Rational hyp3f2_partial_sum(const GaussianRational& a1, const GaussianRational& a2,
                            const GaussianRational& a3, const GaussianRational& b1,
                            const GaussianRational& b2, long n_terms);

/// Closed-form value (theta+1)(|z|^2+theta) / |z-theta|^2 that the hook
/// identity's k = 1 case assigns to
/// 3F2(z+1, zbar+1, 2; theta+2, |z|^2/theta+2; 1).
Rational hyp3f2_closed_form(const Rational& theta, const GaussianRational& z);

/// Quadrature check of the integral form of the Kingman identity:
///   integral_0^1 (1-v)^(t-1) v^l exp(t*y(v)) (-ln(1-v) - y(v))^k dv
/// with y(v) = v + v^2/2 + ... + v^l/l must equal k!/t^(k+1). For t < 1
/// the substitution u = (1-v)^t removes the endpoint singularity.
struct IntegralCheck {
    double value = 0.0;
    double target = 0.0;
    double error_estimate = 0.0;
};
IntegralCheck integral_check(int k, int l, const Rational& t, double quad_tol = 1e-10);

}  // namespace ylat
