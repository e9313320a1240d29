#include "freezetag/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "freezetag/errors.hpp"

namespace freezetag {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw SyntaxError("rational with zero denominator");
    v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
        throw SyntaxError("bad rational: '" + std::string(text) + "'");

    mpq_class v;
    mpz_set_str(mpq_numref(v.get_mpq_t()), std::string(num).c_str(), 10);
    mpz_set_str(mpq_denref(v.get_mpq_t()), std::string(den).c_str(), 10);
    if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
        throw SyntaxError("bad rational: '" + std::string(text) + "' (zero denominator)");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) throw SyntaxError("non-finite double");
    mpq_class v;
    mpq_set_d(v.get_mpq_t(), d);
    return Rational(std::move(v));
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw SyntaxError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::size_t Rational::hash() const {
    auto mix = [](std::size_t h, std::size_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    auto hash_mpz = [&](const mpz_srcptr z, std::size_t h) {
        h = mix(h, static_cast<std::size_t>(mpz_sgn(z)) + 3);
        for (std::size_t i = 0, n = mpz_size(z); i < n; ++i)
            h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
        return h;
    };
    std::size_t h = 0x51ed270b;
    h = hash_mpz(mpq_numref(v_.get_mpq_t()), h);
    h = hash_mpz(mpq_denref(v_.get_mpq_t()), h);
    return h;
}

Rational abs(const Rational& r) { return r.abs(); }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace freezetag
