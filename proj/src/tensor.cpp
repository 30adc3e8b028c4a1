#include "hyperspec/tensor.hpp"

#include <algorithm>

namespace hyperspec {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

Tensor::Tensor(std::size_t order, std::size_t dim) : order_(order), dim_(dim), data_(ipow(dim, order)) {
    if (order < 1 || dim < 1) throw Error(Errc::BadSize, "tensor order and dimension must be positive");
}

Tensor::Tensor(std::size_t order, std::size_t dim, std::vector<Rational> entries)
    : order_(order), dim_(dim), data_(std::move(entries)) {
    if (order < 1 || dim < 1) throw Error(Errc::BadSize, "tensor order and dimension must be positive");
    if (data_.size() != ipow(dim, order)) throw Error(Errc::DimMismatch, "entry count is not dim^order");
}

std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
    if (idx.size() != order_) throw Error(Errc::DimMismatch, "index length differs from tensor order");
    std::size_t off = 0;
    for (auto i : idx) {
        if (i >= dim_) throw Error(Errc::DimMismatch, "index out of range");
        off = off * dim_ + i;
    }
    return off;
}

Index Tensor::index_of(std::size_t off) const {
    Index idx(order_);
    for (std::size_t t = order_; t-- > 0;) {
        idx[t] = off % dim_;
        off /= dim_;
    }
    return idx;
}

const Rational& Tensor::at(std::initializer_list<std::size_t> idx) const {
    return data_[offset(std::span<const std::size_t>(idx.begin(), idx.size()))];
}

Rational& Tensor::at(std::initializer_list<std::size_t> idx) {
    return data_[offset(std::span<const std::size_t>(idx.begin(), idx.size()))];
}

std::size_t Tensor::nonzeros() const {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](const Rational& q) { return !q.is_zero(); }));
}

Tensor unit_tensor(std::size_t order, std::size_t dim) {
    if (order < 2) throw Error(Errc::BadSize, "unit tensor needs order >= 2");
    Tensor t(order, dim);
    Index idx(order);
    for (std::size_t i = 0; i < dim; ++i) {
        std::fill(idx.begin(), idx.end(), i);
        t[idx] = Rational(1);
    }
    return t;
}

RationalMatrix identity_matrix(std::size_t dim) { return unit_tensor(2, dim); }

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.order() != 2 || b.order() != 2 || a.dim() != b.dim()) throw Error(Errc::DimMismatch, "matmul shapes");
    const std::size_t n = a.dim();
    RationalMatrix c(2, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (a(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, l) * b(l, j);
        }
    return c;
}

RationalMatrix transpose(const RationalMatrix& a) {
    if (a.order() != 2) throw Error(Errc::DimMismatch, "transpose needs a matrix");
    RationalMatrix t(2, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
    return t;
}

Tensor vector_tensor(std::span<const Rational> x) {
    return Tensor(1, x.size(), std::vector<Rational>(x.begin(), x.end()));
}

Tensor shao_product(const Tensor& a, const Tensor& b) {
    if (a.dim() != b.dim()) throw Error(Errc::DimMismatch, "shao_product needs equal dimensions");
    if (a.order() < 2) throw Error(Errc::DimMismatch, "left factor needs order >= 2");
    const std::size_t n = a.dim();
    const std::size_t m = a.order();
    const std::size_t k = b.order();
    const std::size_t tail = k - 1;  // length of each alpha block
    const std::size_t out_order = (m - 1) * (k - 1) + 1;
    const std::size_t block = ipow(n, tail);
    const std::size_t slice = ipow(n, m - 1);

    Tensor c(out_order, n);
    for (std::size_t i = 0; i < n; ++i) {
        // nonzero a[i, i_2..i_m]
        std::vector<std::pair<Index, const Rational*>> terms;
        for (std::size_t s = 0; s < slice; ++s) {
            const auto& v = a.data()[i * slice + s];
            if (v.is_zero()) continue;
            Index rest(m - 1);
            std::size_t off = s;
            for (std::size_t t = m - 1; t-- > 0;) {
                rest[t] = off % n;
                off /= n;
            }
            terms.emplace_back(std::move(rest), &v);
        }
        if (terms.empty()) continue;
        const std::size_t out_slice = ipow(block, m - 1);
        for (std::size_t o = 0; o < out_slice; ++o) {
            // split o into alpha_1..alpha_{m-1}, each an offset into [n]^(k-1)
            std::vector<std::size_t> alpha(m - 1);
            std::size_t off = o;
            for (std::size_t t = m - 1; t-- > 0;) {
                alpha[t] = off % block;
                off /= block;
            }
            Rational sum;
            for (const auto& [rest, val] : terms) {
                Rational prod = *val;
                for (std::size_t t = 0; t + 1 < m && !prod.is_zero(); ++t)
                    prod *= b.data()[rest[t] * block + alpha[t]];
                sum += prod;
            }
            c.data()[i * out_slice + o] = std::move(sum);
        }
    }
    return c;
}

std::vector<Rational> apply(const Tensor& a, std::span<const Rational> x) {
    if (x.size() != a.dim()) throw Error(Errc::DimMismatch, "vector length differs from tensor dimension");
    const std::size_t n = a.dim();
    const std::size_t slice = ipow(n, a.order() - 1);
    std::vector<Rational> out(n);
    for (std::size_t off = 0; off < a.size(); ++off) {
        const auto& v = a.data()[off];
        if (v.is_zero()) continue;
        Rational prod = v;
        std::size_t rest = off % slice;
        for (std::size_t t = 1; t < a.order(); ++t) {
            prod *= x[rest % n];
            rest /= n;
        }
        out[off / slice] += prod;
    }
    return out;
}

Tensor mat_sim(const RationalMatrix& p, const Tensor& a) {
    if (p.order() != 2 || p.dim() != a.dim()) throw Error(Errc::DimMismatch, "mat_sim needs an n x n matrix");
    const std::size_t n = a.dim();
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!p(i, j).is_zero()) rows[i].emplace_back(j, p(i, j));

    Tensor cur = a;
    for (std::size_t mode = 0; mode < a.order(); ++mode) {
        const std::size_t stride = ipow(n, a.order() - 1 - mode);
        Tensor next(a.order(), n);
        for (std::size_t off = 0; off < cur.size(); ++off) {
            const std::size_t i = (off / stride) % n;
            const std::size_t base = off - i * stride;
            Rational sum;
            for (const auto& [j, pij] : rows[i]) {
                const auto& v = cur.data()[base + j * stride];
                if (!v.is_zero()) sum += pij * v;
            }
            next.data()[off] = std::move(sum);
        }
        cur = std::move(next);
    }
    return cur;
}

bool is_symmetric(const Tensor& a) {
    bool ok = true;
    for_each_index(a.order(), a.dim(), [&](const Index& idx) {
        if (!ok) return;
        Index sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != idx && a[idx] != a[sorted]) ok = false;
    });
    return ok;
}

}  // namespace hyperspec
