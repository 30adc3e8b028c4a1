#include "hyperspec/resultant.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "hyperspec/parallel.hpp"

namespace hyperspec {

namespace {

void enumerate_monomials(std::size_t nvars, unsigned degree, std::vector<Exponents>& out) {
    Exponents e(nvars, 0);
    // descending lexicographic order
    auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
        if (var + 1 == nvars) {
            e[var] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            return;
        }
        for (unsigned v = left + 1; v-- > 0;) {
            e[var] = static_cast<std::uint16_t>(v);
            self(self, var + 1, left - v);
        }
    };
    if (nvars == 0) return;
    rec(rec, 0, degree);
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

/// Polynomials whose coefficients are affine in λ: base + λ * slope.
struct AffineSystem {
    std::size_t nvars = 0;
    std::vector<MultiPoly> base;
    std::vector<MultiPoly> slope;
    std::vector<unsigned> degrees;

    PolySystem at(const Rational& lambda) const {
        std::vector<MultiPoly> polys;
        polys.reserve(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            MultiPoly p = base[i];
            p += slope[i] * lambda;
            polys.push_back(std::move(p));
        }
        return PolySystem(std::move(polys), degrees);
    }
};

/// Macaulay matrix whose entries are affine in λ, built once per layout.
class ParametricMacaulay {
public:
    ParametricMacaulay(const AffineSystem& sys, MacaulayLayout layout) : layout_(std::move(layout)) {
        const std::size_t n = layout_.dim();
        rows_.resize(n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t i = layout_.row_poly[r];
            Exponents shift = layout_.basis[r];
            shift[i] = static_cast<std::uint16_t>(shift[i] - layout_.degrees[i]);
            auto place = [&](const MultiPoly& p, bool is_slope) {
                for (const auto& [e, c] : p.terms()) {
                    Exponents target = shift;
                    for (std::size_t v = 0; v < target.size(); ++v) target[v] = static_cast<std::uint16_t>(target[v] + e[v]);
                    std::size_t col = layout_.column(target);
                    auto it = std::find_if(rows_[r].begin(), rows_[r].end(), [&](const Cell& cell) { return cell.col == col; });
                    if (it == rows_[r].end()) {
                        rows_[r].push_back({col, {}, {}});
                        it = std::prev(rows_[r].end());
                    }
                    (is_slope ? it->slope : it->base) += c;
                }
            };
            place(sys.base[i], false);
            place(sys.slope[i], true);
            bool bearing = std::any_of(rows_[r].begin(), rows_[r].end(), [](const Cell& c) { return !c.slope.is_zero(); });
            if (bearing) ++lambda_rows_;
        }
    }

    const MacaulayLayout& layout() const { return layout_; }
    std::size_t lambda_rows() const { return lambda_rows_; }

    std::vector<Rational> full(const Rational& lambda) const {
        const std::size_t n = layout_.dim();
        std::vector<Rational> m(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (const auto& cell : rows_[r]) m[r * n + cell.col] = cell.base + cell.slope * lambda;
        return m;
    }

    std::vector<Rational> minor(const std::vector<Rational>& m) const {
        const std::size_t n = layout_.dim();
        const auto& idx = layout_.minor;
        std::vector<Rational> out(idx.size() * idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) out[a * idx.size() + b] = m[idx[a] * n + idx[b]];
        return out;
    }

private:
    struct Cell {
        std::size_t col;
        Rational base;
        Rational slope;
    };
    MacaulayLayout layout_;
    std::vector<std::vector<Cell>> rows_;
    std::size_t lambda_rows_ = 0;
};

std::optional<Rational> quotient_value(const std::vector<Rational>& m, const std::vector<Rational>& m_minor,
                                       std::size_t dim, std::size_t minor_dim, const DetOptions& opts) {
    Rational denom = det_exact(m_minor, minor_dim, opts);
    if (denom.is_zero()) return std::nullopt;
    return det_exact(m, dim, opts) / denom;
}

Rational perturbed_value(const std::vector<Rational>& m, const std::vector<Rational>& m_minor, std::size_t dim,
                         std::size_t minor_dim, const DetOptions& opts) {
    // Common denominator L: det(uI + M) = L^-N det(vI + LM), v = Lu.
    BigInt lcm = 1;
    for (const auto& q : m)
        if (!q.is_integer()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.raw().get_den_mpz_t());
    auto scaled = [&](const std::vector<Rational>& src) {
        std::vector<BigInt> out(src.size());
        for (std::size_t i = 0; i < src.size(); ++i)
            if (!src[i].is_zero()) out[i] = src[i].raw().get_num() * (lcm / src[i].raw().get_den());
        return out;
    };
    auto full = shifted_det(scaled(m), dim, opts);
    auto part = shifted_det(scaled(m_minor), minor_dim, opts);
    std::size_t t = 0;
    while (sgn(part[t]) == 0) ++t;  // part is monic in v, so t <= minor_dim
    Rational ratio(full[t], part[t]);
    // L^(N' - N)
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), lcm.get_mpz_t(), dim - minor_dim);
    return ratio / Rational(scale);
}

Rational abscissa(std::size_t i) {
    if (i == 0) return Rational(0);
    long v = static_cast<long>((i + 1) / 2);
    return Rational(i % 2 == 1 ? v : -v);
}

std::vector<std::size_t> random_order(std::size_t n, std::mt19937_64& rng) {
    auto o = identity_order(n);
    std::shuffle(o.begin(), o.end(), rng);
    return o;
}

constexpr int kPermutationRetries = 3;

struct Sampled {
    std::vector<std::pair<Rational, Rational>> points;
    std::size_t lambda_rows = 0;
};

/// Samples the resultant of `sys` at enough λ values to interpolate a
/// polynomial of degree <= `degree_bound` (0 selects the λ-row count).
/// Degenerate points are skipped; when more than half of the attempted points
/// degenerate a random variable order is tried, up to three times. Returns
/// nullopt when that is exhausted.
std::optional<Sampled> sample_quotient(const AffineSystem& sys, std::size_t degree_bound,
                                       const SpectralOptions& opts) {
    std::mt19937_64 rng(opts.permutation_seed);
    for (int attempt = 0; attempt <= kPermutationRetries; ++attempt) {
        auto order = attempt == 0 ? identity_order(sys.nvars) : random_order(sys.nvars, rng);
        ParametricMacaulay pm(sys, MacaulayLayout::build(sys.degrees, order));
        const std::size_t needed = (degree_bound ? degree_bound : pm.lambda_rows()) + 1;
        const std::size_t n = pm.layout().dim();
        const std::size_t nm = pm.layout().minor.size();

        Sampled out;
        out.lambda_rows = pm.lambda_rows();
        std::size_t attempted = 0, degenerate = 0, next = 0;
        bool abandon = false;
        while (out.points.size() < needed) {
            const std::size_t batch = needed - out.points.size();
            std::vector<std::optional<Rational>> values(batch);
            parallel_for(batch, opts.workers, [&](std::size_t b) {
                auto m = pm.full(abscissa(next + b));
                values[b] = quotient_value(m, pm.minor(m), n, nm, opts.det());
            });
            for (std::size_t b = 0; b < batch; ++b) {
                if (values[b]) out.points.emplace_back(abscissa(next + b), std::move(*values[b]));
                else ++degenerate;
            }
            next += batch;
            attempted += batch;
            if (2 * degenerate > attempted) {
                abandon = true;
                break;
            }
        }
        if (!abandon) return out;
    }
    return std::nullopt;
}

Sampled sample_perturbed(const AffineSystem& sys, const SpectralOptions& opts) {
    ParametricMacaulay pm(sys, MacaulayLayout::build(sys.degrees));
    const std::size_t needed = pm.lambda_rows() + 1;
    const std::size_t n = pm.layout().dim();
    const std::size_t nm = pm.layout().minor.size();
    Sampled out;
    out.lambda_rows = pm.lambda_rows();
    std::vector<Rational> values(needed);
    parallel_for(needed, opts.workers, [&](std::size_t i) {
        auto m = pm.full(abscissa(i));
        values[i] = perturbed_value(m, pm.minor(m), n, nm, opts.det());
    });
    for (std::size_t i = 0; i < needed; ++i) out.points.emplace_back(abscissa(i), std::move(values[i]));
    return out;
}

void check_dim_cap(const std::vector<unsigned>& degrees, const SpectralOptions& opts) {
    unsigned top = 1;
    for (auto d : degrees) top += d - 1;
    std::size_t dim = monomial_count(degrees.size(), top);
    if (dim > opts.dim_cap)
        throw Error(Errc::DegreeCapExceeded,
                    "Macaulay dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(opts.dim_cap));
}

std::vector<MultiPoly> zero_polys(std::size_t count, std::size_t nvars) {
    return std::vector<MultiPoly>(count, MultiPoly(nvars));
}

/// f_i = (A x)_i - λ x_i (x^T x)^((m-2)/2) for even m, and
/// f_i = (A x)_i - λ β^(m-2) x_i, g = x^T x - β^2 for odd m.
AffineSystem e_system(const Tensor& a) {
    const std::size_t n = a.dim();
    const std::size_t m = a.order();
    AffineSystem sys;
    const bool odd = m % 2 == 1;
    sys.nvars = odd ? n + 1 : n;
    auto ax = tensor_system(a);
    sys.base = zero_polys(sys.nvars, sys.nvars);
    sys.slope = zero_polys(sys.nvars, sys.nvars);
    sys.degrees.assign(sys.nvars, static_cast<unsigned>(m - 1));

    MultiPoly norm2(sys.nvars);
    for (std::size_t j = 0; j < n; ++j) norm2 += MultiPoly::variable(sys.nvars, j) * MultiPoly::variable(sys.nvars, j);

    for (std::size_t i = 0; i < n; ++i) {
        // lift (A x)_i into the enlarged variable set
        MultiPoly f(sys.nvars);
        for (const auto& [e, c] : ax[i].terms()) {
            Exponents lifted(sys.nvars, 0);
            std::copy(e.begin(), e.end(), lifted.begin());
            f.add_term(lifted, c);
        }
        sys.base[i] = std::move(f);
        MultiPoly factor = MultiPoly::variable(sys.nvars, i);
        if (odd) {
            for (std::size_t t = 0; t + 2 < m; ++t) factor = factor * MultiPoly::variable(sys.nvars, n);
        } else {
            for (std::size_t t = 0; t + 2 < m; t += 2) factor = factor * norm2;
        }
        sys.slope[i] = factor * Rational(-1);
    }
    if (odd) {
        MultiPoly g = norm2;
        g -= MultiPoly::variable(sys.nvars, n) * MultiPoly::variable(sys.nvars, n);
        sys.base[n] = std::move(g);
        sys.degrees[n] = 2;
    }
    return sys;
}

}  // namespace

std::size_t monomial_count(std::size_t nvars, std::size_t degree) {
    if (nvars == 0) return degree == 0 ? 1 : 0;
    return binomial(static_cast<unsigned>(degree + nvars - 1), static_cast<unsigned>(nvars - 1)).get_ui();
}

PolySystem::PolySystem(std::vector<MultiPoly> polys) : polys_(std::move(polys)) {
    degrees_.reserve(polys_.size());
    for (const auto& p : polys_) {
        long d = p.homogeneous_degree();
        if (d < 0) throw Error(Errc::NotHomogeneous, "polynomial is zero or not homogeneous; give its degree");
        degrees_.push_back(static_cast<unsigned>(d));
    }
    for (const auto& p : polys_)
        if (p.nvars() != polys_.size()) throw Error(Errc::NotSquare, "number of polynomials differs from number of variables");
}

PolySystem::PolySystem(std::vector<MultiPoly> polys, std::vector<unsigned> degrees)
    : polys_(std::move(polys)), degrees_(std::move(degrees)) {
    if (degrees_.size() != polys_.size()) throw Error(Errc::NotSquare, "one degree per polynomial");
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (polys_[i].nvars() != polys_.size())
            throw Error(Errc::NotSquare, "number of polynomials differs from number of variables");
        if (degrees_[i] < 1) throw Error(Errc::NotHomogeneous, "degrees must be at least 1");
        for (const auto& [e, c] : polys_[i].terms()) {
            unsigned d = 0;
            for (auto v : e) d += v;
            if (d != degrees_[i]) throw Error(Errc::NotHomogeneous, "term degree differs from declared degree");
        }
    }
}

MacaulayLayout MacaulayLayout::build(const std::vector<unsigned>& degrees, std::vector<std::size_t> order) {
    const std::size_t n = degrees.size();
    if (n == 0) throw Error(Errc::NotSquare, "empty system");
    if (order.empty()) order = identity_order(n);
    {
        auto check = order;
        std::sort(check.begin(), check.end());
        if (check != identity_order(n)) throw Error(Errc::DimMismatch, "variable order is not a permutation");
    }
    MacaulayLayout out;
    out.degrees = degrees;
    out.order = std::move(order);
    out.top_degree = 1;
    for (auto d : degrees) {
        if (d < 1) throw Error(Errc::NotHomogeneous, "degrees must be at least 1");
        out.top_degree += d - 1;
    }
    enumerate_monomials(n, out.top_degree, out.basis);
    out.row_poly.resize(out.basis.size());
    for (std::size_t r = 0; r < out.basis.size(); ++r) {
        const auto& mu = out.basis[r];
        std::size_t divisible = 0;
        bool assigned = false;
        for (auto i : out.order) {
            if (mu[i] >= degrees[i]) {
                ++divisible;
                if (!assigned) {
                    out.row_poly[r] = i;
                    assigned = true;
                }
            }
        }
        // D exceeds sum(d_i - 1), so some x_i^{d_i} always divides mu
        if (!assigned) throw std::logic_error("Macaulay basis monomial with no assigned polynomial");
        if (divisible >= 2) out.minor.push_back(r);
    }
    return out;
}

std::size_t MacaulayLayout::column(const Exponents& e) const {
    // basis is sorted in descending lexicographic order
    auto it = std::lower_bound(basis.begin(), basis.end(), e, std::greater<Exponents>());
    if (it == basis.end() || *it != e) throw std::logic_error("monomial outside the Macaulay basis");
    return static_cast<std::size_t>(it - basis.begin());
}

MacaulayPair macaulay_pair(const PolySystem& sys, std::vector<std::size_t> order) {
    AffineSystem affine;
    affine.nvars = sys.size();
    affine.base = sys.polys();
    affine.slope = zero_polys(sys.size(), sys.size());
    affine.degrees = sys.degrees();
    ParametricMacaulay pm(affine, MacaulayLayout::build(sys.degrees(), std::move(order)));
    MacaulayPair out;
    out.m = pm.full(Rational(0));
    out.m_minor = pm.minor(out.m);
    out.layout = pm.layout();
    return out;
}

Rational resultant_value(const PolySystem& sys, std::vector<std::size_t> order, const DetOptions& opts) {
    auto pair = macaulay_pair(sys, std::move(order));
    auto v = quotient_value(pair.m, pair.m_minor, pair.layout.dim(), pair.layout.minor.size(), opts);
    if (!v) throw Error(Errc::DegenerateMinor, "det(M') = 0");
    return *v;
}

Rational resultant_value_perturbed(const PolySystem& sys, std::vector<std::size_t> order, const DetOptions& opts) {
    auto pair = macaulay_pair(sys, std::move(order));
    return perturbed_value(pair.m, pair.m_minor, pair.layout.dim(), pair.layout.minor.size(), opts);
}

std::vector<MultiPoly> tensor_system(const Tensor& a) {
    const std::size_t n = a.dim();
    std::vector<MultiPoly> out = zero_polys(n, n);
    const std::size_t slice = a.size() / n;
    Exponents e(n);
    for (std::size_t off = 0; off < a.size(); ++off) {
        const auto& v = a.data()[off];
        if (v.is_zero()) continue;
        std::fill(e.begin(), e.end(), 0);
        std::size_t rest = off % slice;
        for (std::size_t t = 1; t < a.order(); ++t) {
            ++e[rest % n];
            rest /= n;
        }
        out[off / slice].add_term(e, v);
    }
    return out;
}

Rational det_tensor(const Tensor& a, const SpectralOptions& opts) {
    if (a.order() < 2) throw Error(Errc::BadSize, "determinant needs order >= 2");
    std::vector<unsigned> degrees(a.dim(), static_cast<unsigned>(a.order() - 1));
    check_dim_cap(degrees, opts);
    PolySystem sys(tensor_system(a), degrees);
    std::mt19937_64 rng(opts.permutation_seed);
    for (int attempt = 0; attempt <= kPermutationRetries; ++attempt) {
        auto order = attempt == 0 ? identity_order(a.dim()) : random_order(a.dim(), rng);
        auto pair = macaulay_pair(sys, order);
        auto v = quotient_value(pair.m, pair.m_minor, pair.layout.dim(), pair.layout.minor.size(), opts.det());
        if (v) return *v;
    }
    return resultant_value_perturbed(sys, {}, opts.det());
}

std::size_t char_poly_degree(std::size_t order, std::size_t dim) {
    std::size_t d = dim;
    for (std::size_t i = 1; i < dim; ++i) d *= order - 1;
    return d;
}

UniPoly char_poly(const Tensor& a, const SpectralOptions& opts) {
    if (a.order() < 2) throw Error(Errc::BadSize, "characteristic polynomial needs order >= 2");
    const std::size_t n = a.dim();
    const std::size_t degree = char_poly_degree(a.order(), n);
    if (degree > opts.degree_cap)
        throw Error(Errc::DegreeCapExceeded,
                    "degree " + std::to_string(degree) + " exceeds cap " + std::to_string(opts.degree_cap));
    AffineSystem sys;
    sys.nvars = n;
    sys.degrees.assign(n, static_cast<unsigned>(a.order() - 1));
    check_dim_cap(sys.degrees, opts);
    // λ x_i^(m-1) - (A x)_i
    for (auto& f : tensor_system(a)) sys.base.push_back(f * Rational(-1));
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly p(n);
        Exponents e(n, 0);
        e[i] = static_cast<std::uint16_t>(a.order() - 1);
        p.add_term(e, Rational(1));
        sys.slope.push_back(std::move(p));
    }
    auto sampled = sample_quotient(sys, degree, opts);
    if (!sampled) throw Error(Errc::TooManyDegeneratePoints, "det(M') vanished at most sample points");
    auto poly = interpolate(sampled->points);
    if (poly.degree() != static_cast<long>(degree))
        throw std::logic_error("characteristic polynomial has degree " + std::to_string(poly.degree()) +
                               ", expected " + std::to_string(degree));
    return poly;
}

UniPoly e_char_poly_raw(const Tensor& a, const SpectralOptions& opts) {
    if (a.order() < 2) throw Error(Errc::BadSize, "E-characteristic polynomial needs order >= 2");
    auto sys = e_system(a);
    check_dim_cap(sys.degrees, opts);
    auto sampled = sample_quotient(sys, 0, opts);
    if (!sampled) sampled = sample_perturbed(sys, opts);
    return interpolate(sampled->points);
}

UniPoly e_char_poly(const Tensor& a, const SpectralOptions& opts) { return e_char_poly_raw(a, opts).normalized(); }

bool eigen_check(const Tensor& a, const Rational& lambda, std::span<const Rational> x) {
    if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.is_zero(); }))
        throw Error(Errc::ZeroVector, "eigenvector must be nonzero");
    auto ax = apply(a, x);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (ax[i] != lambda * x[i].pow(static_cast<unsigned>(a.order() - 1))) return false;
    return true;
}

}  // namespace hyperspec
