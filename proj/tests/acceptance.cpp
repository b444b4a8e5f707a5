// Acceptance suite: one line per criterion. Exit status is the number of
// failed criteria. Criteria are pinned, including two residual tolerances
// and one series tolerance that the underlying mathematics cannot meet
// (the affected series converge at polynomial rates); those lines report
// FAIL with the exact achieved values rather than loosening the check.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ylat/report.hpp"

using namespace ylat;

namespace {

int failures = 0;

void report_line(const std::string& id, bool ok, const std::string& detail = "") {
    std::printf("%s - %s%s%s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.empty() ? "" : ": ",
                detail.c_str());
    if (!ok) ++failures;
}

Rational rat(const char* s) { return parse_rational(s); }
GaussianRational cpx(const char* s) { return parse_complex(s); }

std::vector<Partition> all_partitions_up_to(long n) {
    std::vector<Partition> out;
    for (long m = 0; m <= n; ++m)
        for (const Partition& la : partitions_of(m)) out.push_back(la);
    return out;
}

const Rational theta_grid[] = {parse_rational("1/2"), Rational(1), Rational(2)};
const Rational t_grid[] = {parse_rational("1/2"), Rational(1), Rational(3)};

// 1. harmonicity, exact, |mu| <= 6, full measure grid
void criterion_harmonicity() {
    const MeasureSpec measures[] = {
        MeasureSpec::plancherel_jack(rat("1/2")),  MeasureSpec::plancherel_jack(Rational(1)),
        MeasureSpec::plancherel_jack(Rational(2)), MeasureSpec::z_measure(Rational(1), cpx("i")),
        MeasureSpec::z_measure(Rational(1), cpx("3/2+1/2i")),
        MeasureSpec::z_measure(rat("1/2"), cpx("1/3+i")),
        MeasureSpec::kingman_t(rat("1/2")),        MeasureSpec::kingman_t(Rational(1)),
        MeasureSpec::kingman_t(Rational(3)),
    };
    bool ok = true;
    for (const MeasureSpec& m : measures)
        for (const Partition& mu : all_partitions_up_to(6)) ok &= check_harmonicity(m, mu);
    report_line("1 harmonicity |mu|<=6, all nine measures", ok);
}

// 2. dimension recurrence == path oracle == closed forms; hook-product forms agree
void criterion_dimensions() {
    bool ok = true;
    const Rational thetas[] = {rat("1/3"), rat("1/2"), Rational(1), Rational(2)};
    for (const Partition& mu : all_partitions_up_to(7)) {
        for (const Rational& th : thetas) {
            MultiplicitySpec jack = MultiplicitySpec::jack(th);
            Rational recurrence = dim_kappa(jack, mu);
            ok &= recurrence == dim_kappa_by_paths(jack, mu);
            ok &= recurrence == dim_theta_hook(mu, th);
            ok &= big_h_theta(mu, th) == big_h_theta_alt(mu, th);
            ok &= big_h_prime_theta(mu, th) == big_h_prime_theta_alt(mu, th);
        }
        MultiplicitySpec kingman = MultiplicitySpec::kingman();
        Rational recurrence = dim_kappa(kingman, mu);
        ok &= recurrence == dim_kappa_by_paths(kingman, mu);
        ok &= recurrence == Rational(dim_kingman(mu));
    }
    report_line("2 dimension oracles |mu|<=7, theta in {1/3,1/2,1,2}", ok);
}

// 3. printed identities match the generic machinery term by term, n <= 12
void criterion_oracle() {
    const long N = 12;
    bool ok = true;
    auto pair_ok = [&](const IdentitySpec& spec, const MeasureSpec& measure, Box box) {
        ConvergenceReport report = evaluate_identity(spec, N);
        for (const ConvergenceRow& row : report.rows)
            if (row.mass != box_probability_term(measure, box, row.level)) {
                std::printf("     mismatch: %s at level %ld\n", spec.name().c_str(), row.level);
                return false;
            }
        return true;
    };
    for (int k = 1; k <= 3; ++k)
        for (const Rational& th : theta_grid)
            ok &= pair_ok(IdentitySpec::theta_plancherel_hook(k, th),
                          MeasureSpec::plancherel_jack(th), {k + 1, 1});
    for (int k = 1; k <= 3; ++k)
        for (const Rational& th : theta_grid)
            for (const char* zs : {"i", "3/2+1/2i"})
                ok &= pair_ok(IdentitySpec::z_measure_hook(k, th, cpx(zs)),
                              MeasureSpec::z_measure(th, cpx(zs)), {k + 1, 1});
    for (int k = 0; k <= 3; ++k)
        for (int l = 1; l <= 2; ++l)
            for (const Rational& t : t_grid)
                ok &= pair_ok(IdentitySpec::kingman_t(k, l, t), MeasureSpec::kingman_t(t),
                              {k + 1, l + 1});
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 2; ++l) {
            if (k + l < 1) continue;
            ok &= pair_ok(IdentitySpec::plancherel_young_box(k, l),
                          MeasureSpec::plancherel_jack(Rational(1)), {k + 1, l + 1});
        }
    for (const Rational& th : theta_grid)
        for (Box box : {Box{2, 1}, Box{2, 2}, Box{3, 1}, Box{4, 1}, Box{5, 1}})
            ok &= pair_ok(IdentitySpec::special_case(box, th), MeasureSpec::plancherel_jack(th),
                          box);
    report_line("3 generic-vs-printed level masses, n<=12, full parameter grid", ok);
}

// 4. residual tolerances at pinned truncation levels
void criterion_convergence() {
    struct Case {
        IdentitySpec spec;
        long level;
        double tol;
    };
    const Case cases[] = {
        {IdentitySpec::theta_plancherel_hook(1, Rational(2)), 30, 1e-12},
        {IdentitySpec::theta_plancherel_hook(2, rat("1/2")), 50, 1e-4},
        {IdentitySpec::kingman_t(1, 1, Rational(1)), 60, 1e-4},
        {IdentitySpec::z_measure_hook(1, Rational(1), cpx("i")), 60, 1e-4},
    };
    for (const Case& c : cases) {
        ConvergenceReport report = evaluate_identity(c.spec, c.level);
        bool monotone = true;
        Rational prev(0);
        for (const ConvergenceRow& row : report.rows) {
            monotone &= row.cumulative >= prev && row.cumulative <= 1;
            prev = row.cumulative;
        }
        double residual = to_double(report.residual());
        bool ok = monotone && report.residual() < Rational(c.tol);
        char detail[160];
        std::snprintf(detail, sizeof(detail), "residual %.6e at N=%ld (required < %.0e)", residual,
                      c.level, c.tol);
        report_line("4 convergence " + c.spec.name(), ok, detail);
    }
}

// 5. hook-case truncations telescope exactly
void criterion_telescoping() {
    ConvergenceReport report = evaluate_identity(IdentitySpec::plancherel_young_box(1, 0), 21);
    bool ok = true;
    for (const ConvergenceRow& row : report.rows) {
        // level n gathers the single index p = n - 1
        if (row.level < 2) {
            ok &= row.mass == 0;
            continue;
        }
        Rational expected = 1 - Rational(1) / Rational(factorial(static_cast<unsigned long>(row.level)));
        ok &= row.cumulative == expected;
    }
    report_line("5 telescoping partial sums, p <= 20, exact", ok);
}

// 6. the two printed forms of the theta=1 hook identity are the same identity
void criterion_fk_gk() {
    bool ok = true;
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> mu(k, 1);
        auto advance = [&]() {
            for (int i = k - 1; i >= 0; --i) {
                int cap = (i == 0) ? 8 : mu[i - 1];
                if (mu[i] < cap) {
                    ++mu[i];
                    for (int j = i + 1; j < k; ++j) mu[j] = 1;
                    return true;
                }
            }
            return false;
        };
        do {
            std::vector<int> p(k);
            for (int j = 0; j < k; ++j) p[j] = mu[j] + k - (j + 1);
            ok &= f_k_term(k, p) == g_k_term(k, mu);
            if (k <= 3) ok &= term_theta_plancherel_hook(k, Rational(1), mu) == g_k_term(k, mu);
        } while (advance());
    }
    report_line("6 fk/gk equivalence under p_j = mu_j + k - j, mu_1 <= 8, k <= 4", ok);
}

// 7. 3F2 partial sums against the closed form
void criterion_hypergeometric() {
    GaussianRational one{Rational(1)}, two{Rational(2)}, three{Rational(3)};
    bool exact_value_ok = hyp3f2_closed_form(Rational(1), cpx("i")) == 2;
    report_line("7 closed form equals 2 at (theta,z)=(1,i)", exact_value_ok);
    for (const char* zs : {"i", "3/2+1/2i"}) {
        GaussianRational z = cpx(zs);
        Rational partial = hyp3f2_partial_sum(z + one, conjugate(z) + one, two, three,
                                              GaussianRational{norm_sq(z) + 2}, 500);
        Rational closed = hyp3f2_closed_form(Rational(1), z);
        double gap = std::abs(to_double(partial - closed));
        char detail[160];
        std::snprintf(detail, sizeof(detail), "|S_500 - closed| = %.6e (required < 1e-8)", gap);
        report_line(std::string("7 3F2 partial sum, z=") + zs, gap < 1e-8, detail);
    }
}

// 8. quadrature against k!/t^(k+1)
void criterion_integral() {
    bool ok = true;
    char detail[160] = "";
    for (int l = 1; l <= 2 && ok; ++l)
        for (const Rational& t : {rat("3/2"), Rational(2), Rational(3)}) {
            double prev = 0.0;
            for (int k = 0; k <= 3; ++k) {
                IntegralCheck c = integral_check(k, l, t);
                if (std::abs(c.value - c.target) >= 1e-8) {
                    std::snprintf(detail, sizeof(detail), "k=%d l=%d t=%s gap %.3e", k, l,
                                  format(t).c_str(), std::abs(c.value - c.target));
                    ok = false;
                    break;
                }
                if (k == 0 && std::abs(c.value - to_double(1 / t)) >= 1e-8) ok = false;
                if (k > 0 && std::abs(c.value / prev - to_double(Rational(k) / t)) >= 1e-6)
                    ok = false;
                prev = c.value;
            }
            if (!ok) break;
        }
    report_line("8 integral identity, k<=3, l<=2, t in {3/2,2,3}", ok, detail);
}

// 9. Monte Carlo against the exact entry distribution
void criterion_monte_carlo() {
    MeasureSpec m = MeasureSpec::plancherel_jack(Rational(1));
    EntryHistogram hist = entry_distribution(m, {2, 1}, 20, 100000, 0);
    bool ok = true;
    double worst = 0.0;
    for (const ComparisonRow& row : compare_empirical_analytic(hist, m)) {
        if (row.n > 8) continue;
        worst = std::max(worst, std::abs(row.z_score));
        ok &= std::abs(row.z_score) < 4.0;
    }
    ok &= hist.counts.count(2) && std::abs(hist.counts.at(2) / 100000.0 - 0.5) < 0.01;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max |z| = %.3f over n <= 8", worst);
    report_line("9 Monte Carlo box (2,1), T=1e5, N=20, seed 0", ok, detail);
}

// 10. Jack weights near theta = 0 approach the Kingman weights
void criterion_kingman_limit() {
    Rational tiny = make_rational(1, 1000000);
    bool ok = true;
    double worst = 0.0;
    for (const Partition& la : all_partitions_up_to(7))
        for (Box b : removable_boxes(la)) {
            Partition mu = la.without_box(b);
            double gap = std::abs(to_double(kappa_jack(mu, la, tiny)) -
                                  static_cast<double>(kappa_kingman(mu, la)));
            worst = std::max(worst, gap);
            ok &= gap < 1e-4;
        }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max gap %.3e at theta = 1e-6", worst);
    report_line("10 kingman limit of jack weights, |la| <= 7", ok, detail);
}

}  // namespace

int main() {
    criterion_harmonicity();
    criterion_dimensions();
    criterion_oracle();
    criterion_convergence();
    criterion_telescoping();
    criterion_fk_gk();
    criterion_hypergeometric();
    criterion_integral();
    criterion_monte_carlo();
    criterion_kingman_limit();
    std::printf("%d criterion check(s) failed\n", failures);
    return failures;
}
