#include "hyperspec/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hyperspec {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(Rational::parse(s));
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::normalized() const {
    if (is_zero()) return {};
    BigInt lcm = 1;
    for (const auto& c : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(c_.size());
    BigInt g = 0;
    for (const auto& c : c_) {
        ints.push_back(c.num() * (lcm / c.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (c_.back().sign() < 0) g = -g;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const auto& v : ints) out.emplace_back(BigInt(v / g));
    return UniPoly(std::move(out));
}

std::vector<std::string> UniPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
}

std::string UniPoly::pretty(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = c_.size(); d-- > 0;) {
        const auto& c = c_[d];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rational(1);
        if (!unit || d == 0) os << mag.str();
        if (d > 0) {
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(UniPoly a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw Error(Errc::DimMismatch, "exponent vector length differs from variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

long MultiPoly::homogeneous_degree() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (auto v : e) d += v;
        if (deg == -1) deg = d;
        else if (deg != d) return -1;
    }
    return deg;
}

Rational MultiPoly::evaluate(std::span<const Rational> x) const {
    if (x.size() != nvars_) throw Error(Errc::DimMismatch, "point dimension differs from variable count");
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= x[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw Error(Errc::DimMismatch, "variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw Error(Errc::DimMismatch, "variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error(Errc::DimMismatch, "variable counts differ");
    MultiPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly operator*(MultiPoly a, const Rational& s) {
    if (s.is_zero()) return MultiPoly(a.nvars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Rational(1));
    return p;
}

UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
    const std::size_t n = points.size();
    if (n == 0) return {};
    std::vector<Rational> xs;
    xs.reserve(n);
    for (const auto& pt : points) xs.push_back(pt.first);
    {
        auto sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) throw Error(Errc::DuplicateAbscissa, "abscissa " + dup->str() + " repeated");
    }
    std::vector<Rational> coef;
    coef.reserve(n);
    for (const auto& pt : points) coef.push_back(pt.second);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);

    // Horner on the Newton form: p = c_{n-1}; p = p (X - x_i) + c_i.
    std::vector<Rational> acc{coef[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        std::vector<Rational> next(acc.size() + 1);
        for (std::size_t d = 0; d < acc.size(); ++d) {
            next[d + 1] += acc[d];
            next[d] -= acc[d] * xs[i];
        }
        next[0] += coef[i];
        acc = std::move(next);
    }
    return UniPoly(std::move(acc));
}

std::vector<Rational> sample_abscissae(std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (long i = 0; out.size() < count; ++i) {
        if (i == 0) {
            out.emplace_back(0);
            continue;
        }
        out.emplace_back(i);
        if (out.size() < count) out.emplace_back(-i);
    }
    return out;
}

}  // namespace hyperspec
