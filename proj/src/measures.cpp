#include "ylat/measures.hpp"

#include <mutex>
#include <utility>

namespace ylat {

bool z_is_degenerate(const GaussianRational& z, const Rational& theta) {
    if (!z.is_real()) return false;
    Rational scaled = z.re * theta.get_den();
    return scaled.get_den() == 1;
}

MeasureSpec MeasureSpec::plancherel_jack(Rational theta) {
    if (theta <= 0) throw DegenerateParameterError("Plancherel family requires theta > 0");
    MeasureSpec m;
    m.family = Family::plancherel_jack;
    m.theta = std::move(theta);
    return m;
}

MeasureSpec MeasureSpec::z_measure(Rational theta, GaussianRational z) {
    if (theta <= 0) throw DegenerateParameterError("z family requires theta > 0");
    if (z_is_degenerate(z, theta))
        throw DegenerateParameterError("z lies in Z + Z*theta; the measure degenerates");
    MeasureSpec m;
    m.family = Family::z_measure;
    m.theta = std::move(theta);
    m.z = std::move(z);
    return m;
}

MeasureSpec MeasureSpec::kingman_t(Rational t) {
    if (t <= 0) throw DegenerateParameterError("Kingman family requires t > 0");
    MeasureSpec m;
    m.family = Family::kingman_t;
    m.t = std::move(t);
    return m;
}

MultiplicitySpec MeasureSpec::multiplicity() const {
    switch (family) {
        case Family::plancherel_jack:
        case Family::z_measure: return MultiplicitySpec::jack(theta);
        case Family::kingman_t: return MultiplicitySpec::kingman();
    }
    throw Error("unknown measure family");
}

std::string MeasureSpec::cache_key() const {
    switch (family) {
        case Family::plancherel_jack: return "P:" + format(theta);
        case Family::z_measure: return "Z:" + format(theta) + ":" + format(z);
        case Family::kingman_t: return "T:" + format(t);
    }
    return {};
}

std::string MeasureSpec::name() const {
    switch (family) {
        case Family::plancherel_jack: return "plancherel-jack(theta=" + format(theta) + ")";
        case Family::z_measure:
            return "z-measure(theta=" + format(theta) + ", z=" + format(z) + ")";
        case Family::kingman_t: return "kingman-t(t=" + format(t) + ")";
    }
    return {};
}

Rational phi_plancherel(const Partition& la, const Rational& theta) {
    if (theta <= 0) throw DegenerateParameterError("theta must be positive");
    return rational_pow(theta, la.size()) / big_h_prime_theta(la, theta);
}

Rational phi_z(const Partition& la, const Rational& theta, const GaussianRational& z) {
    if (theta <= 0) throw DegenerateParameterError("theta must be positive");
    if (z_is_degenerate(z, theta))
        throw DegenerateParameterError("z lies in Z + Z*theta; the measure degenerates");
    unsigned long n = static_cast<unsigned long>(la.size());
    GaussianRational prod_z(Rational(1)), prod_zbar(Rational(1));
    GaussianRational zbar = conjugate(z);
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j) {
            GaussianRational c(content_theta(Box{i, j}, theta));
            prod_z = prod_z * (z + c);
            prod_zbar = prod_zbar * (zbar + c);
        }
    GaussianRational full = prod_z * prod_zbar;
    if (!full.is_real()) throw Error("conjugate pairing violated: complex product is not real");
    Rational value = full.re / (pochhammer(norm_sq(z) / theta, n) * big_h_prime_theta(la, theta));
    if (value < 0) throw Error("z-family harmonic function must be nonnegative");
    return value;
}

Rational psi_t(const Partition& la, const Rational& t) {
    if (t <= 0) throw DegenerateParameterError("t must be positive");
    Rational acc(1);
    for (int p : la.parts()) acc *= factorial(static_cast<unsigned long>(p - 1));
    int run = 1;
    for (int i = 1; i <= la.rows(); ++i) {
        if (la.part(i) == la.part(i + 1)) {
            ++run;
        } else {
            acc /= factorial(static_cast<unsigned long>(run));
            run = 1;
        }
    }
    acc *= rational_pow(t, la.rows());
    acc /= pochhammer(t, static_cast<unsigned long>(la.size()));
    return acc;
}

namespace {

std::mutex phi_cache_mutex;
std::map<std::pair<std::string, Partition>, Rational> phi_cache;

Rational phi_uncached(const MeasureSpec& measure, const Partition& la) {
    switch (measure.family) {
        case MeasureSpec::Family::plancherel_jack: return phi_plancherel(la, measure.theta);
        case MeasureSpec::Family::z_measure: return phi_z(la, measure.theta, measure.z);
        case MeasureSpec::Family::kingman_t: return psi_t(la, measure.t);
    }
    throw Error("unknown measure family");
}

}  // namespace

Rational phi(const MeasureSpec& measure, const Partition& la) {
    auto key = std::make_pair(measure.cache_key(), la);
    {
        std::lock_guard<std::mutex> lock(phi_cache_mutex);
        auto it = phi_cache.find(key);
        if (it != phi_cache.end()) return it->second;
    }
    Rational value = phi_uncached(measure, la);
    std::lock_guard<std::mutex> lock(phi_cache_mutex);
    return phi_cache.emplace(std::move(key), std::move(value)).first->second;
}

Rational transition(const MeasureSpec& measure, const Partition& mu, const Partition& la) {
    edge_box(mu, la);
    Rational denom = phi(measure, mu);
    if (denom == 0) throw Error("transition undefined: phi(mu) = 0");
    return kappa(measure.multiplicity(), mu, la) * phi(measure, la) / denom;
}

LevelDistribution level_distribution(const MeasureSpec& measure, long n, long cap) {
    if (n > cap) throw CapExceededError("level enumeration cap exceeded");
    LevelDistribution dist;
    dist.level = n;
    MultiplicitySpec mult = measure.multiplicity();
    for (const Partition& la : partitions_of(n))
        dist.weights.emplace(la, dim_kappa(mult, la) * phi(measure, la));
    return dist;
}

bool check_harmonicity(const MeasureSpec& measure, const Partition& mu) {
    MultiplicitySpec mult = measure.multiplicity();
    Rational sum(0);
    for (Box b : addable_boxes(mu)) {
        Partition la = mu.with_box(b);
        sum += kappa(mult, mu, la) * phi(measure, la);
    }
    return sum == phi(measure, mu);
}

}  // namespace ylat
