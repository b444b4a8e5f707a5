#include "ylat/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace ylat {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational pochhammer(const Rational& x, unsigned long n) {
    Rational acc(1);
    Rational term(x);
    for (unsigned long i = 0; i < n; ++i) {
        acc *= term;
        term += 1;
    }
    return acc;
}

GaussianRational pochhammer(const GaussianRational& x, unsigned long n) {
    GaussianRational acc(Rational(1));
    GaussianRational term(x);
    for (unsigned long i = 0; i < n; ++i) {
        acc = acc * term;
        term.re += 1;
    }
    return acc;
}

Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0 && e < 0) throw Error("zero raised to a negative power");
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), a);
    if (e < 0) {
        Rational inv;
        mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
        return inv;
    }
    return r;
}

double to_double(const Rational& x, unsigned precision_bits) {
    if (precision_bits < 53) throw Error("precision below binary64 is not supported");
    if (x == 0) return 0.0;

    Integer num = abs(x.get_num());
    Integer den = x.get_den();
    bool negative = sgn(x) < 0;

    // Scale so that q = floor(num * 2^shift / den) carries exactly 54 bits:
    // 53 for the significand plus one round bit; the division remainder is
    // the sticky bit. Then round half to even.
    long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    long shift = 54 - (nb - db);
    Integer q, r;
    auto divide = [&](long s) {
        Integer n2 = num, d2 = den;
        if (s >= 0)
            mpz_mul_2exp(n2.get_mpz_t(), n2.get_mpz_t(), static_cast<unsigned long>(s));
        else
            mpz_mul_2exp(d2.get_mpz_t(), d2.get_mpz_t(), static_cast<unsigned long>(-s));
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    };
    divide(shift);
    while (mpz_sizeinbase(q.get_mpz_t(), 2) < 54) divide(++shift);
    while (mpz_sizeinbase(q.get_mpz_t(), 2) > 54) divide(--shift);

    bool round_bit = mpz_tstbit(q.get_mpz_t(), 0) != 0;
    bool sticky = (r != 0);
    Integer mant = q >> 1;
    if (round_bit && (sticky || mpz_tstbit(mant.get_mpz_t(), 0))) mant += 1;
    int exp2 = static_cast<int>(1 - shift);
    if (mpz_sizeinbase(mant.get_mpz_t(), 2) > 53) {  // rounding carried into a new bit
        mant >>= 1;
        exp2 += 1;
    }
    double d = std::ldexp(mant.get_d(), exp2);  // mant < 2^53, exact as double
    return negative ? -d : d;
}

std::string format(const Rational& x) { return x.get_str(); }

std::string format(const GaussianRational& z) {
    if (z.im == 0) return format(z.re);
    std::string s;
    if (z.re != 0) s = format(z.re);
    if (sgn(z.im) > 0 && !s.empty()) s += "+";
    if (z.im == 1)
        s += "i";
    else if (z.im == -1)
        s += "-i";
    else
        s += format(z.im) + "i";
    return s;
}

namespace {

// Scans [sign]digits[/digits] starting at pos; advances pos past the token.
Rational scan_rational(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    std::string digits;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') digits += '-';
        ++pos;
    }
    std::size_t num_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
    if (pos == num_start) throw ParseError("expected a number", pos);
    Integer num(digits);
    Integer den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t den_start = pos;
        std::string dd;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) dd += text[pos++];
        if (pos == den_start) throw ParseError("expected a denominator", pos);
        den = Integer(dd);
        if (den == 0) throw ParseError("zero denominator", den_start);
    }
    (void)start;
    return make_rational(num, den);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    Rational r = scan_rational(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after rational", pos);
    return r;
}

GaussianRational parse_complex(std::string_view text) {
    std::size_t pos = 0;
    auto scan_part = [&](bool leading) -> Rational {
        // A bare 'i' (optionally signed) stands for coefficient +/-1.
        Rational sign(1);
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -1;
            if (pos + 1 < text.size() && text[pos + 1] == 'i') {
                pos += 1;
                return sign;
            }
            if (!leading) {
                ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("expected a number", pos);
                return sign * scan_rational(text, pos);
            }
        } else if (pos < text.size() && text[pos] == 'i') {
            return sign;
        }
        return scan_rational(text, pos);
    };

    Rational first = scan_part(true);
    if (pos < text.size() && text[pos] == 'i') {
        ++pos;
        if (pos != text.size()) throw ParseError("trailing characters after imaginary part", pos);
        return GaussianRational(Rational(0), first);
    }
    if (pos == text.size()) return GaussianRational(first);
    if (text[pos] != '+' && text[pos] != '-') throw ParseError("expected '+' or '-' before imaginary part", pos);
    Rational second = scan_part(false);
    if (pos >= text.size() || text[pos] != 'i') throw ParseError("expected 'i' after imaginary part", pos);
    ++pos;
    if (pos != text.size()) throw ParseError("trailing characters after complex number", pos);
    return GaussianRational(first, second);
}

}  // namespace ylat
