#include "pointsep/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "pointsep/errors.hpp"

namespace pointsep {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw SchemaError("empty number");

    // fraction form p/q
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        bool nneg = !num.empty() && (num[0] == '-' || num[0] == '+');
        std::string ndig = nneg ? num.substr(1) : num;
        if (!all_digits(ndig) || !all_digits(den))
            throw SchemaError("malformed fraction: " + s);
        mpz_class n(num), d(den);
        if (d == 0) throw SchemaError("zero denominator: " + s);
        Rational q(n, d);
        q.canonicalize();
        return q;
    }

    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    std::string intpart, fracpart;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) intpart += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fracpart += s[i++];
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        std::string edig;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) edig += s[i++];
        if (edig.empty()) throw SchemaError("malformed exponent: " + s);
        exp10 = std::strtol(edig.c_str(), nullptr, 10);
        if (eneg) exp10 = -exp10;
    }
    if (i != s.size() || (intpart.empty() && fracpart.empty()))
        throw SchemaError("malformed decimal: " + s);

    mpz_class digits((intpart.empty() ? "0" : intpart) + fracpart);
    long shift = exp10 - static_cast<long>(fracpart.size());
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift < 0 ? Rational(digits, pow10) : Rational(digits * pow10);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

bool has_finite_decimal(const Rational& q) {
    mpz_class d = q.get_den();
    for (int p : {2, 5})
        while (mpz_divisible_ui_p(d.get_mpz_t(), p)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
    return d == 1;
}

std::string rational_to_string(const Rational& q) {
    if (!has_finite_decimal(q)) return q.get_str();

    mpz_class num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    // scale denominator 2^a 5^b up to 10^max(a,b)
    unsigned long a = 0, b = 0;
    mpz_class d = den;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
        ++a;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
        ++b;
    }
    unsigned long k = a > b ? a : b;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    mpz_class scaled = num * (scale / den);
    std::string digits = scaled.get_str();
    std::string out;
    if (k == 0) {
        out = digits;
    } else {
        if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

Rational floor_rational(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(r);
}

Rational ceil_rational(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(r);
}

std::int64_t floor_to_int(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return static_cast<std::int64_t>(r.get_si());
}

std::int64_t ceil_alpha_sqrt(const Rational& alpha, std::int64_t n) {
    if (n <= 0) return 0;
    // smallest k with (k*q)^2 >= p^2*n for alpha = p/q
    mpz_class p = alpha.get_num(), q = alpha.get_den();
    mpz_class m = p * p * n;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    if (r * r < m) r += 1;  // ceil(sqrt(m))
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
    return static_cast<std::int64_t>(k.get_si());
}

}  // namespace pointsep
