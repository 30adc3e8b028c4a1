#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hyperspec/rational.hpp"

namespace hyperspec {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Word-size primes just below 2^62, largest first. The list is fixed; a
/// nonzero seed only reorders it.
std::vector<std::uint64_t> prime_list(std::size_t count, std::uint64_t seed = 0);

/// Arithmetic modulo an odd prime p < 2^62 in Montgomery form (R = 2^64).
class MontgomeryField {
public:
    explicit MontgomeryField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t to_mont(std::uint64_t a) const;  // a < p
    std::uint64_t from_mont(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        std::uint64_t m = static_cast<std::uint64_t>(t) * pinv_;
        unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
        auto r = static_cast<std::uint64_t>(u);
        return r >= p_ ? r - p_ : r;
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t one() const { return r1_; }
    /// Inverse of a nonzero Montgomery-form value, in Montgomery form.
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

private:
    std::uint64_t p_;
    std::uint64_t pinv_;  // -p^{-1} mod 2^64
    std::uint64_t r1_;    // R mod p
    std::uint64_t r2_;    // R^2 mod p
};

/// Reduce x modulo p into [0, p).
std::uint64_t mod_u64(const BigInt& x, std::uint64_t p);

/// Dense square matrix of residues modulo a word-size prime.
class ModMatrix {
public:
    ModMatrix(std::size_t dim, std::uint64_t p);
    ModMatrix(std::size_t dim, std::uint64_t p, std::vector<std::uint64_t> entries);

    /// Reduces a row-major square rational matrix mod p. Throws BadPrime when
    /// p divides one of the denominators.
    static ModMatrix from_rational(std::span<const Rational> entries, std::size_t dim, std::uint64_t p);

    std::size_t dim() const { return dim_; }
    std::uint64_t prime() const { return p_; }
    std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
    const std::vector<std::uint64_t>& entries() const { return a_; }

private:
    std::size_t dim_;
    std::uint64_t p_;
    std::vector<std::uint64_t> a_;
};

/// Determinant mod p by Gaussian elimination.
std::uint64_t det_mod(const ModMatrix& m);

/// Coefficients c_0..c_N of det(u I + M) mod p, via Hessenberg reduction.
std::vector<std::uint64_t> shifted_det_mod(const ModMatrix& m);

/// Residue/modulus pair.
struct Residue {
    std::uint64_t value;
    std::uint64_t prime;
};

/// Chinese remaindering: the unique r in [0, prod p) with r = value mod prime.
std::pair<BigInt, BigInt> crt_combine(std::span<const Residue> residues);

/// Wang's rational reconstruction: a/b with |a| <= num_bound, 0 < b <= den_bound
/// and a = b*r mod modulus. Requires modulus > 2*num_bound*den_bound.
Rational rational_reconstruct(const BigInt& r, const BigInt& modulus, const BigInt& num_bound,
                              const BigInt& den_bound);

/// CRT followed by rational reconstruction with balanced bounds
/// N = D = floor(sqrt((M - 1) / 2)). Throws InsufficientModuli if no rational
/// within those bounds matches.
Rational crt_reconstruct(std::span<const Residue> residues);

/// As above with explicit bounds; throws InsufficientModuli when the primes'
/// product does not exceed 2 * num_bound * den_bound.
Rational crt_reconstruct(std::span<const Residue> residues, const BigInt& num_bound,
                         const BigInt& den_bound);

}  // namespace hyperspec
