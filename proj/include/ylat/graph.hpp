#pragma once

#include <string>

#include "ylat/partition.hpp"

namespace ylat {

struct NotAnEdgeError : Error {
    using Error::Error;
};

/// Which family of edge weights is in force on the lattice. Young is the
/// unweighted lattice (all edges 1, same values as Jack at theta = 1);
/// Kingman is the theta -> 0 degeneration of the Jack family and is kept
/// as its own family because the Jack product formula needs theta > 0.
struct MultiplicitySpec {
    enum class Family { jack, kingman, young };

    Family family = Family::young;
    Rational theta = 1;

    static MultiplicitySpec jack(Rational theta);
    static MultiplicitySpec kingman() { return {Family::kingman, 0}; }
    static MultiplicitySpec young() { return {Family::young, 1}; }

    std::string cache_key() const;
    std::string name() const;
};

/// Requires mu < la with exactly one extra box; returns that box.
Box edge_box(const Partition& mu, const Partition& la);

/// Jack edge weight for the edge mu -> la: with (i,j) the added box and
/// a, l the arm/leg lengths taken in mu at (k,j) for k < i,
///   prod_k (a+(l+2)theta)(a+1+l*theta) / ((a+(l+1)theta)(a+1+(l+1)theta)).
/// Strictly positive; equals 1 whenever the box lands in row 1.
Rational kappa_jack(const Partition& mu, const Partition& la, const Rational& theta);

/// Kingman edge weight: the multiplicity in la of the length of the row
/// that received the new box. A strictly positive integer.
long kappa_kingman(const Partition& mu, const Partition& la);

/// Dispatch over the families.
Rational kappa(const MultiplicitySpec& spec, const Partition& mu, const Partition& la);

/// Weighted dimension: sum over all growth paths to la of the product of
/// edge weights, computed by the one-box recurrence with dim(empty) = 1.
/// Memoized per (spec, la); safe for concurrent use.
Rational dim_kappa(const MultiplicitySpec& spec, const Partition& la);

/// Same quantity by brute force: enumerate every standard tableau of shape
/// la and sum the edge-weight products along each path. Oracle for
/// dim_kappa; |la| above the cap throws.
Rational dim_kappa_by_paths(const MultiplicitySpec& spec, const Partition& la, long cap = 10);

/// Backward one-step probability dim(mu) * kappa(mu,la) / dim(la); the
/// values over all mu below a fixed la sum to 1.
Rational cotransition(const MultiplicitySpec& spec, const Partition& mu, const Partition& la);

}  // namespace ylat
