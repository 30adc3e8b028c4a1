#include "hyperspec/linalg.hpp"

#include "hyperspec/modular.hpp"
#include "hyperspec/parallel.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

namespace {

BigInt ceil_sqrt(const BigInt& v) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r * r < v) ++r;
    return r;
}

BigInt symmetric(const BigInt& x, const BigInt& modulus) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    if (2 * r > modulus) r -= modulus;
    return r;
}

/// Primes whose product exceeds 2 * bound.
std::vector<std::uint64_t> primes_for_bound(const BigInt& bound, std::uint64_t seed) {
    BigInt target = 2 * bound + 1;
    std::size_t bits = mpz_sizeinbase(target.get_mpz_t(), 2);
    // every prime in the list exceeds 2^61
    std::size_t count = bits / 61 + 1;
    return prime_list(count, seed);
}

std::vector<std::uint64_t> reduce_mod(const std::vector<BigInt>& entries, std::uint64_t p) {
    std::vector<std::uint64_t> out(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (sgn(entries[i]) == 0) continue;
        out[i] = mpz_fdiv_ui(entries[i].get_mpz_t(), p);
    }
    return out;
}

}  // namespace

std::pair<std::vector<BigInt>, BigInt> integerize_rows(const std::vector<Rational>& entries, std::size_t dim) {
    std::vector<BigInt> out(entries.size());
    BigInt scale = 1;
    for (std::size_t r = 0; r < dim; ++r) {
        BigInt lcm = 1;
        for (std::size_t c = 0; c < dim; ++c) {
            const auto& q = entries[r * dim + c];
            if (!q.is_integer()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.raw().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < dim; ++c) {
            const auto& q = entries[r * dim + c];
            if (q.is_zero()) continue;
            out[r * dim + c] = q.raw().get_num() * (lcm / q.raw().get_den());
        }
        scale *= lcm;
    }
    return {std::move(out), scale};
}

BigInt hadamard_bound(const std::vector<BigInt>& entries, std::size_t dim) {
    BigInt prod = 1;
    for (std::size_t r = 0; r < dim; ++r) {
        BigInt norm2 = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            const auto& v = entries[r * dim + c];
            if (sgn(v) != 0) norm2 += v * v;
        }
        if (norm2 == 0) return 0;
        prod *= norm2;
    }
    return ceil_sqrt(prod);
}

BigInt det_bareiss(std::vector<BigInt> a, std::size_t n) {
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k * n + k]) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && sgn(a[piv * n + k]) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

BigInt det_modular(const std::vector<BigInt>& entries, std::size_t dim, const DetOptions& opts) {
    if (dim == 0) return 1;
    BigInt bound = hadamard_bound(entries, dim);
    if (bound == 0) return 0;
    auto primes = primes_for_bound(bound, opts.prime_seed);
    std::vector<Residue> residues(primes.size());
    parallel_for(primes.size(), opts.workers, [&](std::size_t i) {
        ModMatrix m(dim, primes[i], reduce_mod(entries, primes[i]));
        residues[i] = {det_mod(m), primes[i]};
    });
    auto [x, modulus] = crt_combine(residues);
    return symmetric(x, modulus);
}

Rational det_exact(const std::vector<Rational>& entries, std::size_t dim, const DetOptions& opts) {
    if (entries.size() != dim * dim) throw Error(Errc::NotSquare, "entry count is not dim^2");
    if (dim == 0) return Rational(1);
    auto [ints, scale] = integerize_rows(entries, dim);
    BigInt det = dim <= kBareissMaxDim ? det_bareiss(std::move(ints), dim) : det_modular(ints, dim, opts);
    return Rational(det, scale);
}

Rational det_exact(const Tensor& m, const DetOptions& opts) {
    if (m.order() != 2) throw Error(Errc::NotSquare, "determinant needs an order-2 tensor");
    return det_exact(m.data(), m.dim(), opts);
}

std::vector<BigInt> shifted_det(const std::vector<BigInt>& entries, std::size_t dim, const DetOptions& opts) {
    if (dim == 0) return {BigInt(1)};
    // Coefficient of u^(N-s) is a sum of s x s principal minors, each bounded by
    // the product of its rows' norms: all coefficients are <= prod (1 + |row|).
    BigInt bound = 1;
    for (std::size_t r = 0; r < dim; ++r) {
        BigInt norm2 = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            const auto& v = entries[r * dim + c];
            if (sgn(v) != 0) norm2 += v * v;
        }
        bound *= 1 + ceil_sqrt(norm2);
    }
    auto primes = primes_for_bound(bound, opts.prime_seed);
    std::vector<std::vector<std::uint64_t>> coeffs(primes.size());
    parallel_for(primes.size(), opts.workers, [&](std::size_t i) {
        coeffs[i] = shifted_det_mod(ModMatrix(dim, primes[i], reduce_mod(entries, primes[i])));
    });
    std::vector<BigInt> out(dim + 1);
    std::vector<Residue> res(primes.size());
    for (std::size_t d = 0; d <= dim; ++d) {
        for (std::size_t i = 0; i < primes.size(); ++i) res[i] = {coeffs[i][d], primes[i]};
        auto [x, modulus] = crt_combine(res);
        out[d] = symmetric(x, modulus);
    }
    return out;
}

}  // namespace hyperspec
