#pragma once

#include <compare>
#include <vector>

#include "ylat/rational.hpp"

namespace ylat {

struct CapExceededError : Error {
    using Error::Error;
};

/// A box of a diagram, 1-based: row i, column j.
struct Box {
    int row = 1;
    int col = 1;
    friend bool operator==(const Box&, const Box&) = default;
};

/// Integer partition / Young diagram: weakly decreasing positive parts.
/// The empty partition is the empty sequence. Value type with canonical
/// form (no zero parts), so equality and ordering are structural.
class Partition {
  public:
    Partition() = default;
    /// Validates weak decrease; trailing zeros are stripped, interior zeros
    /// or negative parts are rejected.
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);  // "4,3,1"; "-" or "" is empty
    std::string format() const;

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    long size() const;  // number of boxes
    bool empty() const { return parts_.empty(); }

    /// Length of row i (1-based); 0 beyond the last row.
    int part(int i) const;
    /// Length of column j (1-based): number of rows with at least j boxes.
    int col_length(int j) const;
    bool contains(Box b) const { return b.col >= 1 && b.col <= part(b.row); }

    /// Diagram with box b added / removed; throws Error when the result
    /// would not be a partition.
    Partition with_box(Box b) const;
    Partition without_box(Box b) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

/// Transpose of the diagram (column lengths).
Partition conjugate(const Partition& la);

/// Arm a(b) = boxes right of b in its row; leg l(b) = boxes below b in its
/// column. Both require b inside the diagram.
int arm(const Partition& mu, Box b);
int leg(const Partition& mu, Box b);

/// theta-content of a box: (j-1) - (i-1)*theta.
Rational content_theta(Box b, const Rational& theta);

/// Corners where a box can be added / removed, in increasing row order.
/// Every diagram has exactly one more addable corner than removable ones.
std::vector<Box> addable_boxes(const Partition& mu);
std::vector<Box> removable_boxes(const Partition& la);

/// Deformed hook lengths: a + theta*l + 1 and a + theta*l + theta.
Rational hook_theta(const Partition& mu, Box b, const Rational& theta);
Rational hook_prime_theta(const Partition& mu, Box b, const Rational& theta);

/// Products of the deformed hooks over all boxes (1 for the empty diagram),
/// plus equivalent double-product/Pochhammer forms used as cross-checks.
Rational big_h_theta(const Partition& mu, const Rational& theta);
Rational big_h_prime_theta(const Partition& mu, const Rational& theta);
Rational big_h_theta_alt(const Partition& mu, const Rational& theta);
Rational big_h_prime_theta_alt(const Partition& mu, const Rational& theta);

/// Closed-form dimension |mu|! / H_theta(mu) for the Jack-weighted lattice.
Rational dim_theta_hook(const Partition& mu, const Rational& theta);

/// Closed-form dimension |mu|! / (mu_1! ... mu_l!) for the Kingman lattice.
Integer dim_kingman(const Partition& mu);

/// A standard tableau stored as its growth chain empty = c[0] < c[1] < ... < c[n].
struct StandardTableau {
    Partition shape;
    std::vector<Partition> chain;

    /// Label assigned to a box (1..n); throws if the box is outside the shape.
    int entry(Box b) const;
};

/// All standard tableaux of shape la (equivalently, all growth paths from
/// the empty diagram). Desk-scale oracle only: |la| above the cap throws.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& la, long cap = 10);

/// All partitions of n, in lexicographically decreasing part order;
/// the bounded form restricts every part to at most max_part.
std::vector<Partition> partitions_of(long n);
std::vector<Partition> partitions_of(long n, int max_part);

}  // namespace ylat
