#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/rational.hpp"

namespace hyperspec {

/// Univariate polynomial over Q, coefficients indexed by degree. The highest
/// stored coefficient is nonzero; the zero polynomial stores nothing.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly monomial(const Rational& c, std::size_t degree);
    static UniPoly constant(const Rational& c) { return monomial(c, 0); }
    static UniPoly from_strings(const std::vector<std::string>& coeffs);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

    Rational evaluate(const Rational& x) const;

    /// Positive leading coefficient, integer coefficients with gcd 1.
    UniPoly normalized() const;

    std::vector<std::string> coeff_strings() const;
    /// Human-readable form in the variable λ, highest degree first.
    std::string pretty(std::string_view var = "λ") const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& s);
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Exponent vector of a monomial.
using Exponents = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^e; cancelling terms are erased.
    void add_term(const Exponents& e, const Rational& c);

    /// Total degree if every term has the same total degree, otherwise -1.
    /// The zero polynomial reports -1 as well.
    long homogeneous_degree() const;

    Rational evaluate(std::span<const Rational> x) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    /// Single variable x_i.
    static MultiPoly variable(std::size_t nvars, std::size_t i);

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

/// Newton divided-difference interpolation through distinct abscissae.
/// Throws DuplicateAbscissa.
UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points);

/// 0, 1, -1, 2, -2, ... (first `count` values).
std::vector<Rational> sample_abscissae(std::size_t count);

}  // namespace hyperspec
