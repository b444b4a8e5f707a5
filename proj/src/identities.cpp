#include "ylat/identities.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

#include "ylat/quadrature.hpp"

namespace ylat {

namespace {

long sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

void require(bool ok, const char* what) {
    if (!ok) throw InvalidIndexTupleError(what);
}

void require_weakly_decreasing_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        require(v[i] >= 1, "index tuple entries must be >= 1");
        require(i == 0 || v[i - 1] >= v[i], "index tuple must be weakly decreasing");
    }
}

void require_strictly_decreasing_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        require(v[i] >= 1, "index tuple entries must be >= 1");
        require(i == 0 || v[i - 1] > v[i], "index tuple must be strictly decreasing");
    }
}

Integer fact(long n) { return factorial(static_cast<unsigned long>(n)); }

Rational poch(const Rational& x, long n) { return pochhammer(x, static_cast<unsigned long>(n)); }

// ---- index-tuple enumeration (all desk-scale) ----

using TupleFn = const std::function<void(const std::vector<int>&)>&;

// Weakly decreasing tuples with `slots` entries >= min_entry summing to `sum`.
void each_weakly_decreasing(long sum, int slots, int min_entry, int max_entry, std::vector<int>& buf,
                            TupleFn fn) {
    if (slots == 0) {
        if (sum == 0) fn(buf);
        return;
    }
    long hi = std::min<long>(max_entry, sum - static_cast<long>(slots - 1) * min_entry);
    for (long p = hi; p >= min_entry; --p) {
        if (p * slots < sum) break;  // smaller leading parts cannot reach the sum
        buf.push_back(static_cast<int>(p));
        each_weakly_decreasing(sum - p, slots - 1, min_entry, static_cast<int>(p), buf, fn);
        buf.pop_back();
    }
}

// Strictly decreasing tuples with `slots` entries >= 1 summing to `sum`.
void each_strictly_decreasing(long sum, int slots, int max_entry, std::vector<int>& buf, TupleFn fn) {
    if (slots == 0) {
        if (sum == 0) fn(buf);
        return;
    }
    long tail_min = static_cast<long>(slots - 1) * slots / 2;  // 1 + 2 + ... + (slots-1)
    for (long p = std::min<long>(max_entry, sum - tail_min); p >= slots; --p) {
        // remaining parts are distinct and < p, so their sum is at most
        // (p-1) + ... + (p-slots+1)
        long tail_max = static_cast<long>(slots - 1) * (2 * p - slots) / 2;
        if (sum - p > tail_max) break;
        buf.push_back(static_cast<int>(p));
        each_strictly_decreasing(sum - p, slots - 1, static_cast<int>(p) - 1, buf, fn);
        buf.pop_back();
    }
}

// Nondecreasing chains 0 <= x_1 <= ... <= x_slots summing to `sum`.
void each_chain(long sum, int slots, TupleFn fn) {
    if (slots == 0) {
        if (sum == 0) fn({});
        return;
    }
    // enumerate the largest entry first, then reverse on emission
    std::vector<int> rev;
    std::function<void(long, int, long)> rec = [&](long rem, int left, long cap) {
        if (left == 0) {
            if (rem == 0) {
                std::vector<int> chain(rev.rbegin(), rev.rend());
                fn(chain);
            }
            return;
        }
        for (long p = std::min<long>(cap, rem); p >= 0; --p) {
            if (p * left < rem) break;
            rev.push_back(static_cast<int>(p));
            rec(rem - p, left - 1, p);
            rev.pop_back();
        }
    };
    rec(sum, slots, sum);
}

// Ordered tuples of `slots` nonnegative entries summing to `sum`.
void each_composition(long sum, int slots, std::vector<int>& buf, TupleFn fn) {
    if (slots == 0) {
        if (sum == 0) fn(buf);
        return;
    }
    for (long p = 0; p <= sum; ++p) {
        buf.push_back(static_cast<int>(p));
        each_composition(sum - p, slots - 1, buf, fn);
        buf.pop_back();
    }
}

// Tuples (r_1 .. r_slots) of nonnegatives with weighted sum
// 1*r_1 + 2*r_2 + ... <= `budget` (the caller spends the remainder elsewhere).
void each_weighted(long budget, int slots, int weight, std::vector<int>& buf, TupleFn fn) {
    if (weight > slots) {
        fn(buf);
        return;
    }
    for (long r = 0; weight * r <= budget; ++r) {
        buf.push_back(static_cast<int>(r));
        each_weighted(budget - weight * r, slots, weight + 1, buf, fn);
        buf.pop_back();
    }
}

}  // namespace

// ---- IdentitySpec ----

IdentitySpec IdentitySpec::plancherel_young_box(int k, int l) {
    if (k < 0 || l < 0 || k + l < 1) throw Error("plancherel-young-box requires k, l >= 0 and k + l >= 1");
    IdentitySpec s;
    s.kind = Kind::plancherel_young_box;
    s.k = k;
    s.l = l;
    return s;
}

IdentitySpec IdentitySpec::theta_plancherel_hook(int k, Rational theta) {
    if (k < 1) throw Error("theta-plancherel-hook requires k >= 1");
    if (theta <= 0) throw DegenerateParameterError("theta must be positive");
    IdentitySpec s;
    s.kind = Kind::theta_plancherel_hook;
    s.k = k;
    s.theta = std::move(theta);
    return s;
}

IdentitySpec IdentitySpec::z_measure_hook(int k, Rational theta, GaussianRational z) {
    if (k < 1) throw Error("z-measure-hook requires k >= 1");
    MeasureSpec::z_measure(theta, z);  // parameter validation
    IdentitySpec s;
    s.kind = Kind::z_measure_hook;
    s.k = k;
    s.theta = std::move(theta);
    s.z = std::move(z);
    return s;
}

IdentitySpec IdentitySpec::kingman_t(int k, int l, Rational t) {
    if (k < 0) throw Error("kingman-t requires k >= 0");
    if (l < 1) throw Error("kingman-t requires l >= 1");
    if (t <= 0) throw DegenerateParameterError("t must be positive");
    IdentitySpec s;
    s.kind = Kind::kingman_t;
    s.k = k;
    s.l = l;
    s.t = std::move(t);
    return s;
}

IdentitySpec IdentitySpec::special_case(Box box, Rational theta) {
    bool known = (box == Box{2, 1}) || (box == Box{2, 2}) || (box == Box{3, 1}) ||
                 (box == Box{4, 1}) || (box == Box{5, 1});
    if (!known) throw Error("no special-case expansion for this box");
    if (theta <= 0) throw DegenerateParameterError("theta must be positive");
    IdentitySpec s;
    s.kind = Kind::special_case;
    s.box = box;
    s.theta = std::move(theta);
    return s;
}

IdentitySpec IdentitySpec::fk_form(int k) {
    if (k < 1) throw Error("fk-form requires k >= 1");
    IdentitySpec s;
    s.kind = Kind::fk_form;
    s.k = k;
    return s;
}

IdentitySpec IdentitySpec::gk_form(int k) {
    if (k < 1) throw Error("gk-form requires k >= 1");
    IdentitySpec s;
    s.kind = Kind::gk_form;
    s.k = k;
    return s;
}

std::string IdentitySpec::name() const {
    switch (kind) {
        case Kind::plancherel_young_box:
            return "plancherel-young-box k=" + std::to_string(k) + " l=" + std::to_string(l);
        case Kind::theta_plancherel_hook:
            return "theta-plancherel-hook k=" + std::to_string(k) + " theta=" + format(theta);
        case Kind::z_measure_hook:
            return "z-measure-hook k=" + std::to_string(k) + " theta=" + format(theta) +
                   " z=" + format(z);
        case Kind::kingman_t:
            return "kingman-t k=" + std::to_string(k) + " l=" + std::to_string(l) +
                   " t=" + format(t);
        case Kind::special_case:
            return "special-case box=" + std::to_string(box.row) + "," + std::to_string(box.col) +
                   " theta=" + format(theta);
        case Kind::fk_form: return "fk-form k=" + std::to_string(k);
        case Kind::gk_form: return "gk-form k=" + std::to_string(k);
    }
    return {};
}

const Rational& ConvergenceReport::total() const {
    static const Rational zero(0);
    return rows.empty() ? zero : rows.back().cumulative;
}

const Rational& ConvergenceReport::residual() const {
    static const Rational one(1);
    return rows.empty() ? one : rows.back().residual;
}

// ---- generic machinery ----

std::vector<Partition> upper_hook_set(Box box, long m) {
    if (m < 0) return {};
    int i = box.row, j = box.col;
    std::vector<Partition> out;
    auto emit = [&](const std::vector<int>& top, const std::vector<int>& tail) {
        std::vector<int> parts = top;
        if (j >= 2) parts.push_back(j - 1);
        parts.insert(parts.end(), tail.begin(), tail.end());
        out.emplace_back(std::move(parts));
    };
    long fixed = (j >= 2) ? j - 1 : 0;
    std::vector<int> buf;
    if (j == 1) {
        // row i must be empty, so the diagram has exactly i-1 rows
        each_weakly_decreasing(m, i - 1, 1, static_cast<int>(m), buf,
                               [&](const std::vector<int>& top) { emit(top, {}); });
        return out;
    }
    for (long top_sum = 0; top_sum + fixed <= m; ++top_sum) {
        long tail_sum = m - fixed - top_sum;
        // tail rows have at most j-1 boxes, any number of rows
        std::vector<Partition> tails = partitions_of(tail_sum, j - 1);
        std::vector<int> top_buf;
        each_weakly_decreasing(top_sum, i - 1, j, static_cast<int>(top_sum), top_buf,
                               [&](const std::vector<int>& top) {
                                   for (const Partition& q : tails) emit(top, q.parts());
                               });
    }
    return out;
}

Rational box_probability_term(const MeasureSpec& measure, Box box, long n) {
    if (n < 1) throw Error("entry index must be >= 1");
    MultiplicitySpec mult = measure.multiplicity();
    Rational acc(0);
    for (const Partition& mu : upper_hook_set(box, n - 1)) {
        Partition la = mu.with_box(box);
        acc += dim_kappa(mult, mu) * kappa(mult, mu, la) * phi(measure, la);
    }
    return acc;
}

ConvergenceReport box_probability_cumulative(const MeasureSpec& measure, Box box, long max_level) {
    auto start = std::chrono::steady_clock::now();
    ConvergenceReport report;
    report.title = "box-entry " + std::to_string(box.row) + "," + std::to_string(box.col) +
                   " under " + measure.name();
    report.max_level = max_level;
    Rational cumulative(0);
    for (long n = 1; n <= max_level; ++n) {
        Rational mass = box_probability_term(measure, box, n);
        cumulative += mass;
        report.rows.push_back({n, mass, cumulative, Rational(1) - cumulative});
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---- printed summands ----

Rational term_plancherel_young(int k, int l, const std::vector<int>& p, const std::vector<int>& q) {
    require(k >= 0 && l >= 0 && k + l >= 1, "requires k, l >= 0 with k + l >= 1");
    require(static_cast<int>(p.size()) == k && static_cast<int>(q.size()) == l,
            "tuple lengths must match k and l");
    require_strictly_decreasing_positive(p);
    require_strictly_decreasing_positive(q);
    long arg = sum_of(p) + sum_of(q) + (k + l - static_cast<long>(k - l) * (k - l)) / 2;
    Rational term(fact(arg));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) term *= Rational(p[i] - p[j]) * (p[i] - p[j]);
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) term *= Rational(q[i] - q[j]) * (q[i] - q[j]);
    for (int x : p) {
        Integer fx = fact(x);
        term /= Rational(fx * fx);
        term *= make_rational(x, x + 1);
    }
    for (int y : q) {
        Integer fy = fact(y);
        term /= Rational(fy * fy);
        term *= make_rational(y, y + 1);
    }
    for (int x : p)
        for (int y : q) term /= Rational(x + y + 1) * (x + y + 1);
    return term;
}

namespace {

// Shared first fraction of the two hook-box identities: with a_{k+1} = 1 and
// a_{k+2} = 0,
//   |a|! * prod_{i<j<=k} ((j-i)theta + a_i - a_j)
//   / [ prod_i (a_i - a_{i+1})! * prod_{i<j<=k+1} ((j-i)theta + a_i - a_{j-1})_{a_{j-1}-a_{j+1}+1} ]
Rational hook_fraction(int k, const Rational& theta, const std::vector<int>& a) {
    auto at = [&](int idx) -> long {  // 1-based with the two trailing conventions
        if (idx <= k) return a[idx - 1];
        return idx == k + 1 ? 1 : 0;
    };
    Rational num(fact(sum_of(a)));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) num *= Rational(j - i) * theta + Rational(at(i) - at(j));
    Rational den(1);
    for (int i = 1; i <= k; ++i) den *= Rational(fact(at(i) - at(i + 1)));
    for (int i = 1; i <= k + 1; ++i)
        for (int j = i + 1; j <= k + 1; ++j)
            den *= poch(Rational(j - i) * theta + Rational(at(i) - at(j - 1)),
                        at(j - 1) - at(j + 1) + 1);
    return num / den;
}

}  // namespace

Rational term_theta_plancherel_hook(int k, const Rational& theta, const std::vector<int>& a) {
    require(k >= 1, "requires k >= 1");
    require(static_cast<int>(a.size()) == k, "tuple length must be k");
    require_weakly_decreasing_positive(a);
    if (theta <= 0) throw DegenerateParameterError("theta must be positive");
    return hook_fraction(k, theta, a) * rational_pow(theta, sum_of(a));
}

Rational term_z_measure_hook(int k, const Rational& theta, const GaussianRational& z,
                             const std::vector<int>& mu) {
    require(k >= 1, "requires k >= 1");
    require(static_cast<int>(mu.size()) == k, "tuple length must be k");
    require_weakly_decreasing_positive(mu);
    if (theta <= 0) throw DegenerateParameterError("theta must be positive");
    if (z_is_degenerate(z, theta))
        throw DegenerateParameterError("z lies in Z + Z*theta; the measure degenerates");
    Rational first = hook_fraction(k, theta, mu) / theta;
    GaussianRational zbar = conjugate(z);
    GaussianRational prod_z = z - GaussianRational(Rational(k) * theta);
    GaussianRational prod_zbar = zbar - GaussianRational(Rational(k) * theta);
    for (int i = 1; i <= k; ++i) {
        GaussianRational shift(Rational(i - 1) * theta);
        prod_z = prod_z * pochhammer(z - shift, static_cast<unsigned long>(mu[i - 1]));
        prod_zbar = prod_zbar * pochhammer(zbar - shift, static_cast<unsigned long>(mu[i - 1]));
    }
    GaussianRational full = prod_z * prod_zbar;
    if (!full.is_real()) throw Error("conjugate pairing violated: z-dependent factor is not real");
    Rational second = full.re / poch(norm_sq(z) / theta, sum_of(mu) + 1);
    return first * second;
}

Rational term_kingman_t(int k, int l, const Rational& t, const std::vector<int>& r,
                        const std::vector<int>& s) {
    require(k >= 0, "requires k >= 0");
    require(l >= 1, "requires l >= 1");
    require(static_cast<int>(r.size()) == l && static_cast<int>(s.size()) == k,
            "tuple lengths must match l and k");
    for (int x : r) require(x >= 0, "index tuple entries must be >= 0");
    for (int x : s) require(x >= 0, "index tuple entries must be >= 0");
    if (t <= 0) throw DegenerateParameterError("t must be positive");
    long weighted = 0;
    for (int j = 1; j <= l; ++j) weighted += static_cast<long>(j) * r[j - 1];
    long n_arg = sum_of(s) + weighted + static_cast<long>(k) * l + k + l;
    Rational term(fact(n_arg));
    term *= rational_pow(t, k + sum_of(r) + 1);
    term /= poch(t, n_arg + 1);
    for (int x : s) term /= Rational(x + l + 1);
    for (int j = 1; j <= l; ++j) {
        term /= rational_pow(Rational(j), r[j - 1]);
        term /= Rational(fact(r[j - 1]));
    }
    term /= Rational(fact(k));
    return term;
}

Rational f_k_term(int k, const std::vector<int>& p) {
    require(k >= 1, "requires k >= 1");
    require(static_cast<int>(p.size()) == k, "tuple length must be k");
    require_strictly_decreasing_positive(p);
    long arg = sum_of(p) - static_cast<long>(k) * (k - 1) / 2;
    Rational term(fact(arg));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) term *= Rational(p[i] - p[j]) * (p[i] - p[j]);
    for (int x : p) term /= Rational(fact(x - 1) * fact(x + 1));
    return term;
}

Rational g_k_term(int k, const std::vector<int>& mu) {
    require(k >= 1, "requires k >= 1");
    require(static_cast<int>(mu.size()) == k, "tuple length must be k");
    require_weakly_decreasing_positive(mu);
    return hook_fraction(k, Rational(1), mu);
}

Rational special_case_term(Box box, const Rational& theta, const std::vector<int>& idx) {
    if (theta <= 0) throw DegenerateParameterError("theta must be positive");
    for (int x : idx) require(x >= 0, "special-case indices must be >= 0");
    // the first-column boxes sum over nondecreasing chains; (2,2) has free indices
    if (box.col == 1 || box == Box{3, 1} || box == Box{4, 1} || box == Box{5, 1})
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            require(idx[i] <= idx[i + 1], "special-case indices must be nondecreasing");

    if (box == Box{2, 1}) {
        require(idx.size() == 1, "box 2,1 takes one index");
        long r = idx[0];
        return Rational(r + 1) * rational_pow(theta, r + 1) / poch(theta, r + 2);
    }
    if (box == Box{2, 2}) {
        require(idx.size() == 2, "box 2,2 takes two indices");
        // indices are independent here; nondecreasing was checked above, but
        // both orders are generated by the evaluator through (r, s) directly
        long r = idx[0], s = idx[1];
        Rational num = Rational(fact(r + s + 3)) * rational_pow(theta, r - s + 2) *
                       (Rational(r) + 2 * theta) * Rational(r + 1);
        Rational den = (Rational(r + 2) + Rational(s + 1) * theta) * Rational(fact(r + 1)) *
                       poch(Rational(1) / theta, s + 1) *
                       (Rational(r + 1) + Rational(s + 2) * theta) * (Rational(r) + 2 * theta) *
                       (Rational(1) + Rational(s + 1) * theta) * poch(theta, r) *
                       Rational(fact(s)) * (Rational(r + 1) + theta) * (Rational(r) + theta);
        return num / den;
    }
    if (box == Box{3, 1}) {
        require(idx.size() == 2, "box 3,1 takes two indices");
        long r = idx[0], s = idx[1];
        Rational num = Rational(fact(s + r + 2)) * rational_pow(theta, s + r + 2) *
                       (theta + Rational(s - r));
        Rational den = Rational(fact(r)) * Rational(fact(s - r)) * poch(theta, r + 2) *
                       poch(theta, s + 1) * poch(2 * theta + Rational(s - r), r + 2);
        return num / den;
    }
    if (box == Box{4, 1}) {
        require(idx.size() == 3, "box 4,1 takes three indices");
        long r = idx[0], s = idx[1], u = idx[2];
        Rational num = Rational(fact(r + s + u + 3)) * rational_pow(theta, r + s + u + 3) *
                       (theta + Rational(s - r)) * (theta + Rational(u - s)) *
                       (2 * theta + Rational(u - r));
        Rational den = Rational(fact(r) * fact(s - r) * fact(u - s)) * poch(theta, r + 2) *
                       poch(theta, s + 1) * poch(theta, u - r + 1) *
                       poch(2 * theta + Rational(s - r), r + 2) *
                       poch(2 * theta + Rational(u - s), s + 1) *
                       poch(3 * theta + Rational(u - r), r + 2);
        return num / den;
    }
    if (box == Box{5, 1}) {
        require(idx.size() == 4, "box 5,1 takes four indices");
        long r = idx[0], s = idx[1], u = idx[2], v = idx[3];
        Rational num = Rational(fact(r + s + u + v + 4)) * rational_pow(theta, r + s + u + v + 4) *
                       (theta + Rational(s - r)) * (theta + Rational(u - s)) *
                       (2 * theta + Rational(u - r)) * (theta + Rational(v - u)) *
                       (2 * theta + Rational(v - s)) * (3 * theta + Rational(v - r));
        Rational den = Rational(fact(r) * fact(s - r) * fact(u - s) * fact(v - u)) *
                       poch(theta, r + 2) * poch(theta, s + 1) * poch(theta, u - r + 1) *
                       poch(2 * theta + Rational(s - r), r + 2) *
                       poch(2 * theta + Rational(u - s), s + 1) *
                       poch(3 * theta + Rational(u - r), r + 2) * poch(theta, v - s + 1) *
                       poch(2 * theta + Rational(v - u), u - r + 1) *
                       poch(3 * theta + Rational(v - s), s + 1) *
                       poch(4 * theta + Rational(v - r), r + 2);
        return num / den;
    }
    throw Error("no special-case expansion for this box");
}

// ---- level grouping and evaluation ----

long level_of_tuple(const IdentitySpec& spec, const std::vector<int>& first,
                    const std::vector<int>& second) {
    switch (spec.kind) {
        case IdentitySpec::Kind::theta_plancherel_hook:
        case IdentitySpec::Kind::z_measure_hook:
        case IdentitySpec::Kind::gk_form: return sum_of(first) + 1;
        case IdentitySpec::Kind::fk_form:
            return sum_of(first) - static_cast<long>(spec.k) * (spec.k - 1) / 2 + 1;
        case IdentitySpec::Kind::plancherel_young_box:
            return sum_of(first) + sum_of(second) +
                   (spec.k + spec.l - static_cast<long>(spec.k - spec.l) * (spec.k - spec.l)) / 2 +
                   1;
        case IdentitySpec::Kind::kingman_t: {
            long weighted = 0;
            for (int j = 1; j <= spec.l; ++j) weighted += static_cast<long>(j) * first[j - 1];
            return sum_of(second) + weighted + static_cast<long>(spec.k) * spec.l + spec.k +
                   spec.l + 1;
        }
        case IdentitySpec::Kind::special_case: {
            long s = sum_of(first);
            if (spec.box == Box{2, 1}) return s + 2;
            if (spec.box == Box{2, 2}) return s + 4;
            if (spec.box == Box{3, 1}) return s + 3;
            if (spec.box == Box{4, 1}) return s + 4;
            return s + 5;  // box (5,1)
        }
    }
    throw Error("unknown identity kind");
}

namespace {

// Sum of all summands whose underlying diagram has exactly `level` boxes.
Rational level_mass(const IdentitySpec& spec, long level) {
    Rational mass(0);
    std::vector<int> buf;
    switch (spec.kind) {
        case IdentitySpec::Kind::theta_plancherel_hook:
            each_weakly_decreasing(level - 1, spec.k, 1, static_cast<int>(level), buf,
                                   [&](const std::vector<int>& a) {
                                       mass += term_theta_plancherel_hook(spec.k, spec.theta, a);
                                   });
            break;
        case IdentitySpec::Kind::z_measure_hook:
            each_weakly_decreasing(
                level - 1, spec.k, 1, static_cast<int>(level), buf,
                [&](const std::vector<int>& a) {
                    mass += term_z_measure_hook(spec.k, spec.theta, spec.z, a);
                });
            break;
        case IdentitySpec::Kind::gk_form:
            each_weakly_decreasing(level - 1, spec.k, 1, static_cast<int>(level), buf,
                                   [&](const std::vector<int>& a) { mass += g_k_term(spec.k, a); });
            break;
        case IdentitySpec::Kind::fk_form: {
            long target = level - 1 + static_cast<long>(spec.k) * (spec.k - 1) / 2;
            each_strictly_decreasing(target, spec.k, static_cast<int>(target), buf,
                                     [&](const std::vector<int>& p) { mass += f_k_term(spec.k, p); });
            break;
        }
        case IdentitySpec::Kind::plancherel_young_box: {
            long total = level - 1 -
                         (spec.k + spec.l -
                          static_cast<long>(spec.k - spec.l) * (spec.k - spec.l)) /
                             2;
            if (total < 0) break;
            for (long sp = 0; sp <= total; ++sp) {
                std::vector<int> pbuf;
                each_strictly_decreasing(
                    sp, spec.k, static_cast<int>(sp), pbuf, [&](const std::vector<int>& p) {
                        std::vector<int> qbuf;
                        each_strictly_decreasing(total - sp, spec.l, static_cast<int>(total - sp),
                                                 qbuf, [&](const std::vector<int>& q) {
                                                     mass += term_plancherel_young(spec.k, spec.l,
                                                                                   p, q);
                                                 });
                    });
            }
            break;
        }
        case IdentitySpec::Kind::kingman_t: {
            long budget = level - 1 - (static_cast<long>(spec.k) * spec.l + spec.k + spec.l);
            if (budget < 0) break;
            std::vector<int> rbuf;
            each_weighted(budget, spec.l, 1, rbuf, [&](const std::vector<int>& r) {
                long weighted = 0;
                for (int j = 1; j <= spec.l; ++j) weighted += static_cast<long>(j) * r[j - 1];
                std::vector<int> sbuf;
                each_composition(budget - weighted, spec.k, sbuf,
                                 [&](const std::vector<int>& s) {
                                     mass += term_kingman_t(spec.k, spec.l, spec.t, r, s);
                                 });
            });
            break;
        }
        case IdentitySpec::Kind::special_case: {
            int arity = (spec.box == Box{2, 1})   ? 1
                        : (spec.box == Box{5, 1}) ? 4
                        : (spec.box == Box{4, 1}) ? 3
                                                  : 2;
            long target = level - level_of_tuple(spec, std::vector<int>(arity, 0));
            if (target < 0) break;
            if (spec.box == Box{2, 2}) {
                // independent indices (r, s)
                for (long r = 0; r <= target; ++r)
                    mass += special_case_term(spec.box, spec.theta,
                                              {static_cast<int>(r), static_cast<int>(target - r)});
            } else {
                each_chain(target, arity, [&](const std::vector<int>& chain) {
                    mass += special_case_term(spec.box, spec.theta, chain);
                });
            }
            break;
        }
    }
    return mass;
}

}  // namespace

ConvergenceReport evaluate_identity(const IdentitySpec& spec, long max_level) {
    auto start = std::chrono::steady_clock::now();
    ConvergenceReport report;
    report.title = spec.name();
    report.max_level = max_level;
    Rational cumulative(0);
    for (long n = 1; n <= max_level; ++n) {
        Rational mass = level_mass(spec, n);
        if (mass < 0) throw Error("negative level mass; identity terms must be nonnegative");
        cumulative += mass;
        if (cumulative > 1) throw Error("partial sum exceeded 1; identity terms are inconsistent");
        report.rows.push_back({n, mass, cumulative, Rational(1) - cumulative});
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---- hypergeometric cross-check ----

Rational hyp3f2_partial_sum(const GaussianRational& a1, const GaussianRational& a2,
                            const GaussianRational& a3, const GaussianRational& b1,
                            const GaussianRational& b2, long n_terms) {
    if (n_terms < 0) throw Error("series length must be >= 0");
    GaussianRational sum(Rational(1));  // m = 0 term
    GaussianRational term(Rational(1));
    for (long m = 0; m < n_terms; ++m) {
        GaussianRational shift{Rational(m)};
        GaussianRational d1 = b1 + shift, d2 = b2 + shift;
        if (d1.is_zero() || d2.is_zero())
            throw PoleError("denominator parameter hits a nonpositive integer at m=" +
                            std::to_string(m));
        term = term * (a1 + shift) * (a2 + shift) * (a3 + shift);
        term = term / (d1 * d2 * GaussianRational(Rational(m + 1)));
        sum = sum + term;
    }
    if (!sum.is_real()) throw Error("partial sum is not real; parameters must pair conjugately");
    return sum.re;
}

Rational hyp3f2_closed_form(const Rational& theta, const GaussianRational& z) {
    Rational denom = norm_sq(z - GaussianRational(theta));
    if (denom == 0) throw PoleError("closed form has a pole at z = theta");
    return (theta + 1) * (norm_sq(z) + theta) / denom;
}

// ---- integral form of the Kingman identity ----

IntegralCheck integral_check(int k, int l, const Rational& t, double quad_tol) {
    if (k < 0) throw Error("integral check requires k >= 0");
    if (l < 1) throw Error("integral check requires l >= 1");
    if (t <= 0) throw DegenerateParameterError("t must be positive");
    double td = to_double(t);
    auto y_of = [l](double v) {
        double y = 0.0, vp = 1.0;
        for (int j = 1; j <= l; ++j) {
            vp *= v;
            y += vp / j;
        }
        return y;
    };
    QuadratureResult quad;
    if (td >= 1.0) {
        auto f = [&](double v) {
            double y = y_of(v);
            double log_factor = -std::log1p(-v) - y;
            return std::pow(1.0 - v, td - 1.0) * std::pow(v, l) * std::exp(td * y) *
                   std::pow(log_factor, k);
        };
        quad = integrate_adaptive(f, 0.0, 1.0, quad_tol);
    } else {
        // u = (1-v)^t absorbs the unbounded endpoint factor: dv (1-v)^(t-1) = du / t
        auto f = [&](double u) {
            double v = 1.0 - std::pow(u, 1.0 / td);
            double y = y_of(v);
            double log_factor = -std::log(u) / td - y;
            return std::pow(v, l) * std::exp(td * y) * std::pow(log_factor, k) / td;
        };
        quad = integrate_adaptive(f, 0.0, 1.0, quad_tol);
    }
    IntegralCheck out;
    out.value = quad.value;
    out.error_estimate = quad.error_estimate;
    out.target = to_double(Rational(fact(k)) / rational_pow(t, k + 1));
    return out;
}

}  // namespace ylat
