#include "hyperspec/rational.hpp"

#include <ostream>

namespace hyperspec {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
        case Errc::BadPrime: return "BadPrime";
        case Errc::InsufficientModuli: return "InsufficientModuli";
        case Errc::DimMismatch: return "DimMismatch";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::NotSquare: return "NotSquare";
        case Errc::DegenerateMinor: return "DegenerateMinor";
        case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
        case Errc::TooManyDegeneratePoints: return "TooManyDegeneratePoints";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::BadSetSize: return "BadSetSize";
        case Errc::BadSize: return "BadSize";
        case Errc::BadPartition: return "BadPartition";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::OddV1: return "OddV1";
        case Errc::ConditionAViolated: return "ConditionAViolated";
        case Errc::ConditionBViolated: return "ConditionBViolated";
        case Errc::Parse: return "ParseError";
    }
    return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return Error(Errc::Parse, "not a rational: '" + std::string(text) + "'"); };
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    auto to_big = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return BigInt(std::string(s), 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw bad();
        return Rational(to_big(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    return Rational(to_big(num), to_big(den));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    Rational r;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    r.q_ = mpq_class(n, d);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace hyperspec
