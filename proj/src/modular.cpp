#include "hyperspec/modular.hpp"

#include <algorithm>
#include <mutex>
#include <random>

namespace hyperspec {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

constexpr u64 kPrimeCeiling = u64{1} << 62;
constexpr std::size_t kPrimePool = 512;

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> prime_list(std::size_t count, u64 seed) {
    static std::mutex mutex;
    static std::vector<u64> pool;
    std::vector<u64> base;
    {
        std::lock_guard lock(mutex);
        std::size_t want = std::max(count, kPrimePool);
        u64 candidate = pool.empty() ? kPrimeCeiling - 1 : pool.back() - 2;
        while (pool.size() < want) {
            if (is_prime_u64(candidate)) pool.push_back(candidate);
            candidate -= 2;
        }
        base.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(want));
    }
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(kPrimePool), rng);
    }
    base.resize(count);
    return base;
}

MontgomeryField::MontgomeryField(u64 p) : p_(p) {
    u64 inv = p;  // p * p = 1 mod 8 for odd p
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    pinv_ = ~inv + 1;
    r1_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<u64>(static_cast<u128>(r1_) * r1_ % p);
}

u64 MontgomeryField::to_mont(u64 a) const { return mul(a, r2_); }

u64 MontgomeryField::from_mont(u64 a) const { return mul(a, 1); }

u64 MontgomeryField::pow(u64 a, u64 e) const {
    u64 r = r1_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 MontgomeryField::inv(u64 a) const { return pow(a, p_ - 2); }

u64 mod_u64(const BigInt& x, u64 p) {
    static_assert(sizeof(unsigned long) == sizeof(u64));
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

ModMatrix::ModMatrix(std::size_t dim, u64 p) : dim_(dim), p_(p), a_(dim * dim, 0) {}

ModMatrix::ModMatrix(std::size_t dim, u64 p, std::vector<u64> entries)
    : dim_(dim), p_(p), a_(std::move(entries)) {
    if (a_.size() != dim * dim) throw Error(Errc::NotSquare, "entry count is not dim^2");
    for (auto& v : a_) v %= p;
}

ModMatrix ModMatrix::from_rational(std::span<const Rational> entries, std::size_t dim, u64 p) {
    if (entries.size() != dim * dim) throw Error(Errc::NotSquare, "entry count is not dim^2");
    ModMatrix out(dim, p);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& q = entries[i];
        if (q.is_zero()) continue;
        u64 d = mod_u64(q.den(), p);
        if (d == 0) throw Error(Errc::BadPrime, std::to_string(p) + " divides a denominator");
        out.a_[i] = mulmod(mod_u64(q.num(), p), powmod(d, p - 2, p), p);
    }
    return out;
}

u64 det_mod(const ModMatrix& m) {
    const std::size_t n = m.dim();
    const u64 p = m.prime();
    if (n == 0) return 1 % p;
    if (p == 2) {  // Montgomery needs an odd modulus
        std::vector<u64> a = m.entries();
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && a[piv * n + c] == 0) ++piv;
            if (piv == n) return 0;
            if (piv != c)
                for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            for (std::size_t r = c + 1; r < n; ++r)
                if (a[r * n + c])
                    for (std::size_t j = c; j < n; ++j) a[r * n + j] ^= a[c * n + j];
        }
        return 1;
    }
    MontgomeryField f(p);
    std::vector<u64> a(m.entries().size());
    std::transform(m.entries().begin(), m.entries().end(), a.begin(), [&](u64 v) { return f.to_mont(v); });
    u64 det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * n),
                             a.begin() + static_cast<std::ptrdiff_t>(piv * n + n),
                             a.begin() + static_cast<std::ptrdiff_t>(c * n));
            det = f.neg(det);
        }
        const u64 pivot = a[c * n + c];
        det = f.mul(det, pivot);
        const u64 pinv = f.inv(pivot);
        const u64* prow = &a[c * n];
        for (std::size_t r = c + 1; r < n; ++r) {
            u64* row = &a[r * n];
            if (row[c] == 0) continue;
            const u64 factor = f.mul(row[c], pinv);
            row[c] = 0;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (prow[j] != 0) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
            }
        }
    }
    return f.from_mont(det);
}

std::vector<u64> shifted_det_mod(const ModMatrix& m) {
    const std::size_t n = m.dim();
    const u64 p = m.prime();
    MontgomeryField f(p);
    // Characteristic polynomial of A = -M: det(u I - A) = det(u I + M).
    std::vector<u64> h(n * n);
    for (std::size_t i = 0; i < n * n; ++i) h[i] = f.neg(f.to_mont(m.entries()[i]));
    auto H = [&](std::size_t r, std::size_t c) -> u64& { return h[r * n + c]; };

    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && H(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(H(piv, c), H(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(H(r, piv), H(r, j + 1));
        }
        const u64 tinv = f.inv(H(j + 1, j));
        for (std::size_t r = j + 2; r < n; ++r) {
            if (H(r, j) == 0) continue;
            const u64 u = f.mul(H(r, j), tinv);
            for (std::size_t c = 0; c < n; ++c) H(r, c) = f.sub(H(r, c), f.mul(u, H(j + 1, c)));
            for (std::size_t rr = 0; rr < n; ++rr) H(rr, j + 1) = f.add(H(rr, j + 1), f.mul(u, H(rr, r)));
        }
    }

    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_{i,m} (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {f.one()};
    for (std::size_t m1 = 1; m1 <= n; ++m1) {
        const auto& prev = polys[m1 - 1];
        std::vector<u64> cur(m1 + 1, 0);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = f.add(cur[d + 1], prev[d]);
            cur[d] = f.sub(cur[d], f.mul(H(m1 - 1, m1 - 1), prev[d]));
        }
        u64 t = f.one();
        for (std::size_t i = m1 - 1; i >= 1; --i) {
            t = f.mul(t, H(i, i - 1));
            if (t == 0) break;
            const u64 coef = f.mul(H(i - 1, m1 - 1), t);
            if (coef != 0) {
                for (std::size_t d = 0; d < polys[i - 1].size(); ++d)
                    cur[d] = f.sub(cur[d], f.mul(coef, polys[i - 1][d]));
            }
        }
        polys[m1] = std::move(cur);
    }
    std::vector<u64> out(polys[n].size());
    std::transform(polys[n].begin(), polys[n].end(), out.begin(), [&](u64 v) { return f.from_mont(v); });
    return out;
}

std::pair<BigInt, BigInt> crt_combine(std::span<const Residue> residues) {
    BigInt x = 0, modulus = 1;
    for (const auto& [value, prime] : residues) {
        BigInt p(static_cast<unsigned long>(prime));
        BigInt g;
        mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
        if (g != 1) throw Error(Errc::BadPrime, "moduli are not pairwise coprime");
        BigInt diff = BigInt(static_cast<unsigned long>(value)) - x;
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
        BigInt t = diff * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        x += modulus * t;
        modulus *= p;
    }
    return {x, modulus};
}

Rational rational_reconstruct(const BigInt& r, const BigInt& modulus, const BigInt& num_bound,
                              const BigInt& den_bound) {
    if (modulus <= 2 * num_bound * den_bound)
        throw Error(Errc::InsufficientModuli, "modulus does not exceed 2*N*D");
    BigInt r0 = modulus, r1;
    mpz_fdiv_r(r1.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    BigInt s0 = 0, s1 = 1;
    while (r1 > num_bound) {
        BigInt q = r0 / r1;
        BigInt t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (abs(s1) > den_bound || s1 == 0 || g != 1)
        throw Error(Errc::InsufficientModuli, "no rational within the bounds; add primes");
    return Rational(r1, s1);
}

Rational crt_reconstruct(std::span<const Residue> residues) {
    if (residues.empty()) throw Error(Errc::InsufficientModuli, "no residues");
    auto [x, modulus] = crt_combine(residues);
    BigInt bound;
    BigInt half = (modulus - 1) / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    return rational_reconstruct(x, modulus, bound, bound);
}

Rational crt_reconstruct(std::span<const Residue> residues, const BigInt& num_bound, const BigInt& den_bound) {
    if (residues.empty()) throw Error(Errc::InsufficientModuli, "no residues");
    auto [x, modulus] = crt_combine(residues);
    return rational_reconstruct(x, modulus, num_bound, den_bound);
}

}  // namespace hyperspec
