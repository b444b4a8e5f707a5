#include "ylat/graph.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace ylat {

MultiplicitySpec MultiplicitySpec::jack(Rational theta) {
    if (theta <= 0) throw Error("Jack weights require theta > 0");
    return {Family::jack, std::move(theta)};
}

std::string MultiplicitySpec::cache_key() const {
    switch (family) {
        case Family::jack: return "J:" + format(theta);
        case Family::kingman: return "K";
        case Family::young: return "Y";
    }
    return {};
}

std::string MultiplicitySpec::name() const {
    switch (family) {
        case Family::jack: return "jack(" + format(theta) + ")";
        case Family::kingman: return "kingman";
        case Family::young: return "young";
    }
    return {};
}

Box edge_box(const Partition& mu, const Partition& la) {
    if (la.size() != mu.size() + 1) throw NotAnEdgeError("not an edge: sizes differ by " +
                                                         std::to_string(la.size() - mu.size()));
    for (int i = 1; i <= la.rows(); ++i) {
        int diff = la.part(i) - mu.part(i);
        if (diff == 0) continue;
        if (diff != 1) throw NotAnEdgeError("not an edge: row " + std::to_string(i) + " grew by " +
                                            std::to_string(diff));
        // remaining rows must agree
        for (int k = i + 1; k <= la.rows(); ++k)
            if (la.part(k) != mu.part(k)) throw NotAnEdgeError("not an edge: multiple rows differ");
        return Box{i, la.part(i)};
    }
    throw NotAnEdgeError("not an edge: diagrams are equal");
}

Rational kappa_jack(const Partition& mu, const Partition& la, const Rational& theta) {
    if (theta <= 0) throw Error("Jack weights require theta > 0");
    Box box = edge_box(mu, la);
    Rational acc(1);
    for (int k = 1; k < box.row; ++k) {
        Rational a(arm(mu, Box{k, box.col}));
        Rational l(leg(mu, Box{k, box.col}));
        acc *= (a + (l + 2) * theta) * (a + 1 + l * theta);
        acc /= (a + (l + 1) * theta) * (a + 1 + (l + 1) * theta);
    }
    return acc;
}

long kappa_kingman(const Partition& mu, const Partition& la) {
    Box box = edge_box(mu, la);
    int len = la.part(box.row);
    long mult = 0;
    for (int p : la.parts())
        if (p == len) ++mult;
    return mult;
}

Rational kappa(const MultiplicitySpec& spec, const Partition& mu, const Partition& la) {
    switch (spec.family) {
        case MultiplicitySpec::Family::jack: return kappa_jack(mu, la, spec.theta);
        case MultiplicitySpec::Family::kingman: return Rational(kappa_kingman(mu, la));
        case MultiplicitySpec::Family::young: edge_box(mu, la); return Rational(1);
    }
    throw Error("unknown multiplicity family");
}

namespace {

std::mutex dim_cache_mutex;
std::map<std::pair<std::string, Partition>, Rational> dim_cache;

}  // namespace

Rational dim_kappa(const MultiplicitySpec& spec, const Partition& la) {
    if (la.empty()) return Rational(1);
    auto key = std::make_pair(spec.cache_key(), la);
    {
        std::lock_guard<std::mutex> lock(dim_cache_mutex);
        auto it = dim_cache.find(key);
        if (it != dim_cache.end()) return it->second;
    }
    Rational acc(0);
    for (Box b : removable_boxes(la)) {
        Partition mu = la.without_box(b);
        acc += dim_kappa(spec, mu) * kappa(spec, mu, la);
    }
    std::lock_guard<std::mutex> lock(dim_cache_mutex);
    return dim_cache.emplace(std::move(key), std::move(acc)).first->second;
}

Rational dim_kappa_by_paths(const MultiplicitySpec& spec, const Partition& la, long cap) {
    Rational total(0);
    for (const StandardTableau& t : enumerate_standard_tableaux(la, cap)) {
        Rational weight(1);
        for (std::size_t n = 1; n < t.chain.size(); ++n)
            weight *= kappa(spec, t.chain[n - 1], t.chain[n]);
        total += weight;
    }
    return total;
}

Rational cotransition(const MultiplicitySpec& spec, const Partition& mu, const Partition& la) {
    Rational denom = dim_kappa(spec, la);
    if (denom <= 0) throw Error("cotransition needs dim(la) > 0");
    return dim_kappa(spec, mu) * kappa(spec, mu, la) / denom;
}

}  // namespace ylat
