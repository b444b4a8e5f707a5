#include "ylat/partition.hpp"

#include <algorithm>
#include <cctype>

namespace ylat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i]) throw Error("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    if (text.empty() || text == "-") return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t start = pos;
        long value = 0;
        bool any = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000000L) throw ParseError("part too large", start);
            ++pos;
            any = true;
        }
        if (!any) throw ParseError("expected a positive integer part", pos);
        if (value == 0) throw ParseError("parts must be positive", start);
        if (!parts.empty() && parts.back() < value)
            throw ParseError("parts must be weakly decreasing", start);
        parts.push_back(static_cast<int>(value));
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return Partition(std::move(parts));
}

std::string Partition::format() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

long Partition::size() const {
    long n = 0;
    for (int p : parts_) n += p;
    return n;
}

int Partition::part(int i) const {
    if (i < 1) throw Error("row index must be >= 1");
    return i <= rows() ? parts_[i - 1] : 0;
}

int Partition::col_length(int j) const {
    if (j < 1) throw Error("column index must be >= 1");
    int count = 0;
    for (int p : parts_) {
        if (p >= j)
            ++count;
        else
            break;
    }
    return count;
}

Partition Partition::with_box(Box b) const {
    if (b.col != part(b.row) + 1 || (b.row >= 2 && part(b.row - 1) < b.col))
        throw Error("box is not addable");
    std::vector<int> p = parts_;
    if (b.row > rows()) p.push_back(0);
    p[b.row - 1] += 1;
    return Partition(std::move(p));
}

Partition Partition::without_box(Box b) const {
    if (b.row > rows() || b.col != part(b.row) || part(b.row + 1) >= b.col)
        throw Error("box is not removable");
    std::vector<int> p = parts_;
    p[b.row - 1] -= 1;
    return Partition(std::move(p));
}

Partition conjugate(const Partition& la) {
    std::vector<int> cols;
    for (int j = 1; j <= la.part(1); ++j) cols.push_back(la.col_length(j));
    return Partition(std::move(cols));
}

int arm(const Partition& mu, Box b) {
    if (!mu.contains(b)) throw Error("box outside diagram");
    return mu.part(b.row) - b.col;
}

int leg(const Partition& mu, Box b) {
    if (!mu.contains(b)) throw Error("box outside diagram");
    return mu.col_length(b.col) - b.row;
}

Rational content_theta(Box b, const Rational& theta) {
    return Rational(b.col - 1) - Rational(b.row - 1) * theta;
}

std::vector<Box> addable_boxes(const Partition& mu) {
    std::vector<Box> out;
    for (int i = 1; i <= mu.rows() + 1; ++i) {
        int len = mu.part(i);
        if (i == 1 || mu.part(i - 1) > len) out.push_back({i, len + 1});
    }
    return out;
}

std::vector<Box> removable_boxes(const Partition& la) {
    std::vector<Box> out;
    for (int i = 1; i <= la.rows(); ++i) {
        if (la.part(i) > la.part(i + 1)) out.push_back({i, la.part(i)});
    }
    return out;
}

Rational hook_theta(const Partition& mu, Box b, const Rational& theta) {
    return Rational(arm(mu, b)) + theta * leg(mu, b) + 1;
}

Rational hook_prime_theta(const Partition& mu, Box b, const Rational& theta) {
    return Rational(arm(mu, b)) + theta * leg(mu, b) + theta;
}

namespace {

template <typename HookFn>
Rational hook_product(const Partition& mu, HookFn&& hook) {
    Rational acc(1);
    for (int i = 1; i <= mu.rows(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) acc *= hook(Box{i, j});
    return acc;
}

}  // namespace

Rational big_h_theta(const Partition& mu, const Rational& theta) {
    return hook_product(mu, [&](Box b) { return hook_theta(mu, b, theta); });
}

Rational big_h_prime_theta(const Partition& mu, const Rational& theta) {
    return hook_product(mu, [&](Box b) { return hook_prime_theta(mu, b, theta); });
}

Rational big_h_theta_alt(const Partition& mu, const Rational& theta) {
    int l = mu.rows();
    Rational acc(1);
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            unsigned long d = static_cast<unsigned long>(mu.part(i) - mu.part(j));
            acc *= pochhammer(Rational(1) + Rational(j - i - 1) * theta, d);
            acc /= pochhammer(Rational(1) + Rational(j - i) * theta, d);
        }
    for (int i = 1; i <= l; ++i)
        acc *= pochhammer(Rational(1) + Rational(l - i) * theta, static_cast<unsigned long>(mu.part(i)));
    return acc;
}

Rational big_h_prime_theta_alt(const Partition& mu, const Rational& theta) {
    int l = mu.rows();
    Rational acc(1);
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            unsigned long d = static_cast<unsigned long>(mu.part(i) - mu.part(j));
            acc *= pochhammer(Rational(j - i) * theta, d);
            acc /= pochhammer(Rational(j - i + 1) * theta, d);
        }
    for (int i = 1; i <= l; ++i)
        acc *= pochhammer(Rational(l + 1 - i) * theta, static_cast<unsigned long>(mu.part(i)));
    return acc;
}

Rational dim_theta_hook(const Partition& mu, const Rational& theta) {
    if (theta <= 0) throw Error("theta must be positive");
    return Rational(factorial(static_cast<unsigned long>(mu.size()))) / big_h_theta(mu, theta);
}

Integer dim_kingman(const Partition& mu) {
    Integer d = factorial(static_cast<unsigned long>(mu.size()));
    for (int p : mu.parts()) d /= factorial(static_cast<unsigned long>(p));
    return d;
}

int StandardTableau::entry(Box b) const {
    if (!shape.contains(b)) throw Error("box outside tableau shape");
    for (std::size_t n = 1; n < chain.size(); ++n)
        if (chain[n].contains(b)) return static_cast<int>(n);
    throw Error("corrupt tableau chain");
}

namespace {

void tableaux_rec(const Partition& la, std::vector<Partition>& suffix,
                  std::vector<StandardTableau>& out) {
    suffix.push_back(la);
    if (la.empty()) {
        StandardTableau t;
        t.chain.assign(suffix.rbegin(), suffix.rend());
        t.shape = t.chain.back();
        out.push_back(std::move(t));
    } else {
        for (Box b : removable_boxes(la)) tableaux_rec(la.without_box(b), suffix, out);
    }
    suffix.pop_back();
}

}  // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& la, long cap) {
    if (la.size() > cap) throw CapExceededError("tableau enumeration cap exceeded");
    std::vector<StandardTableau> out;
    std::vector<Partition> suffix;
    tableaux_rec(la, suffix, out);
    return out;
}

namespace {

void partitions_rec(long n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = static_cast<int>(std::min<long>(max_part, n)); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long n) {
    return partitions_of(n, n > 0 ? static_cast<int>(n) : 1);
}

std::vector<Partition> partitions_of(long n, int max_part) {
    if (n < 0) throw Error("negative partition size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, max_part, prefix, out);
    return out;
}

}  // namespace ylat
