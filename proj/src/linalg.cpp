/*
   Copyright 2026 The qps Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qps/linalg.hpp"

#include <algorithm>

namespace qps {
namespace la {

Matrix::Matrix(const FieldSpec& fs, size_t rows, size_t cols)
    : fs_(fs), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(fs)) {}

Matrix Matrix::identity(const FieldSpec& fs, size_t n) {
    Matrix m(fs, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(fs);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& fs, size_t cols, const std::vector<Vec>& rows) {
    Matrix m(fs, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(size_t r) const {
    Vec v(data_.begin() + static_cast<long>(r * cols_),
          data_.begin() + static_cast<long>((r + 1) * cols_));
    return v;
}

Vec Matrix::col(size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

void Matrix::set_row(size_t r, const Vec& v) {
    if (v.size() != cols_) throw ConfigError("row length mismatch");
    for (size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw ConfigError("block does not fit");
    for (size_t r = 0; r < b.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) at(r0 + r, c0 + c) = b.at(r, c);
}

Matrix Matrix::transpose() const {
    Matrix t(fs_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ConfigError("matrix product dimension mismatch");
    Matrix r(fs_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ConfigError("matrix sum dimension mismatch");
    Matrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ConfigError("matrix sum dimension mismatch");
    Matrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(*this);
    for (auto& v : r.data_) v *= c;
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw ConfigError("apply dimension mismatch");
    Vec r(rows_, Scalar::zero(fs_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && fs_ == o.fs_ && data_ == o.data_;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
    Vec r(a);
    for (auto& v : r) v *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& v : a)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

Echelon rref_impl(Matrix& a, Matrix* transform) {
    const FieldSpec& fs = a.spec();
    if (transform) *transform = Matrix::identity(fs, a.rows());
    std::vector<size_t> pivots;
    size_t prow = 0;
    for (size_t col = 0; col < a.cols() && prow < a.rows(); ++col) {
        size_t sel = a.rows();
        for (size_t r = prow; r < a.rows(); ++r) {
            if (!a.at(r, col).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == a.rows()) continue;
        if (sel != prow) {
            for (size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(prow, c));
            if (transform)
                for (size_t c = 0; c < transform->cols(); ++c)
                    std::swap(transform->at(sel, c), transform->at(prow, c));
        }
        Scalar inv = a.at(prow, col).inv();
        for (size_t c = col; c < a.cols(); ++c) a.at(prow, c) *= inv;
        if (transform)
            for (size_t c = 0; c < transform->cols(); ++c) transform->at(prow, c) *= inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == prow) continue;
            const Scalar f = a.at(r, col);
            if (f.is_zero()) continue;
            for (size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(prow, c);
            if (transform)
                for (size_t c = 0; c < transform->cols(); ++c)
                    transform->at(r, c) -= f * transform->at(prow, c);
        }
        pivots.push_back(col);
        ++prow;
    }
    Echelon e{std::move(a), std::move(pivots), 0};
    e.rank = e.pivots.size();
    return e;
}

}  // namespace

Echelon rref(Matrix a) { return rref_impl(a, nullptr); }

Echelon rref_with_transform(Matrix a, Matrix& transform) { return rref_impl(a, &transform); }

size_t rank(const Matrix& a) { return rref(a).rank; }

Matrix kernel_basis(const Matrix& a) {
    Echelon e = rref(a);
    const FieldSpec& fs = a.spec();
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(fs, free_cols.size(), a.cols());
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t fc = free_cols[i];
        k.at(i, fc) = Scalar::one(fs);
        for (size_t r = 0; r < e.rank; ++r) k.at(i, e.pivots[r]) = -e.rref.at(r, fc);
    }
    return k;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw ConfigError("solve dimension mismatch");
    const FieldSpec& fs = a.spec();
    Matrix aug(fs, a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (size_t r = 0; r < a.rows(); ++r) aug.at(r, a.cols()) = b[r];
    Echelon e = rref(std::move(aug));
    Vec x(a.cols(), Scalar::zero(fs));
    for (size_t r = 0; r < e.rank; ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;  // inconsistent
        x[e.pivots[r]] = e.rref.at(r, a.cols());
    }
    return x;
}

Subspace::Subspace(const FieldSpec& fs, size_t ambient)
    : fs_(fs), ambient_(ambient), basis_(fs, 0, ambient) {}

Subspace Subspace::from_span(const FieldSpec& fs, size_t ambient,
                             const std::vector<Vec>& spanning) {
    Echelon e = rref(Matrix::from_rows(fs, ambient, spanning));
    Subspace s(fs, ambient);
    Matrix b(fs, e.rank, ambient);
    for (size_t r = 0; r < e.rank; ++r) b.set_row(r, e.rref.row(r));
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::full(const FieldSpec& fs, size_t ambient) {
    Subspace s(fs, ambient);
    s.basis_ = Matrix::identity(fs, ambient);
    return s;
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw ConfigError("reduce dimension mismatch");
    for (size_t r = 0; r < basis_.rows(); ++r) {
        // pivot of row r is its first nonzero column; stored in RREF order
        size_t pc = 0;
        while (pc < ambient_ && basis_.at(r, pc).is_zero()) ++pc;
        if (pc == ambient_) continue;
        if (v[pc].is_zero()) continue;
        const Scalar f = v[pc];
        for (size_t c = pc; c < ambient_; ++c) v[c] -= f * basis_.at(r, c);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw ConfigError("subspace ambient mismatch");
    std::vector<Vec> rows;
    for (size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
    for (size_t r = 0; r < other.basis_.rows(); ++r) rows.push_back(other.basis_.row(r));
    return from_span(fs_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw ConfigError("subspace ambient mismatch");
    // Zassenhaus: rows [u | u] and [w | 0]; rows with zero left half carry
    // the intersection in the right half.
    size_t n = ambient_;
    Matrix z(fs_, dim() + other.dim(), 2 * n);
    for (size_t r = 0; r < dim(); ++r) {
        for (size_t c = 0; c < n; ++c) {
            z.at(r, c) = basis_.at(r, c);
            z.at(r, n + c) = basis_.at(r, c);
        }
    }
    for (size_t r = 0; r < other.dim(); ++r)
        for (size_t c = 0; c < n; ++c) z.at(dim() + r, c) = other.basis_.at(r, c);
    Echelon e = rref(std::move(z));
    std::vector<Vec> rows;
    for (size_t r = 0; r < e.rank; ++r) {
        if (e.pivots[r] >= n) {
            Vec v;
            for (size_t c = n; c < 2 * n; ++c) v.push_back(e.rref.at(r, c));
            rows.push_back(std::move(v));
        }
    }
    return from_span(fs_, n, rows);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace image_subspace(const Matrix& a) {
    std::vector<Vec> rows;
    for (size_t c = 0; c < a.cols(); ++c) rows.push_back(a.col(c));
    return Subspace::from_span(a.spec(), a.rows(), rows);
}

Subspace kernel_subspace(const Matrix& a) {
    Matrix k = kernel_basis(a);
    std::vector<Vec> rows;
    for (size_t r = 0; r < k.rows(); ++r) rows.push_back(k.row(r));
    return Subspace::from_span(a.spec(), a.cols(), rows);
}

QuotientSpace::QuotientSpace(const Subspace& numer, const Subspace& denom)
    : denom_(denom), reps_(numer.spec(), 0, numer.ambient()) {
    if (numer.ambient() != denom.ambient()) throw ConfigError("quotient ambient mismatch");
    if (!numer.contains(denom))
        throw ConfigError("quotient denominator is not contained in the numerator");
    std::vector<Vec> reduced;
    for (size_t r = 0; r < numer.dim(); ++r) reduced.push_back(denom_.reduce(numer.basis_vector(r)));
    Echelon e = rref(Matrix::from_rows(numer.spec(), numer.ambient(), reduced));
    Matrix b(numer.spec(), e.rank, numer.ambient());
    for (size_t r = 0; r < e.rank; ++r) b.set_row(r, e.rref.row(r));
    reps_ = std::move(b);
    pivots_ = e.pivots;
    pivots_.resize(e.rank);
}

Vec QuotientSpace::coordinates(const Vec& v) const {
    Vec r = denom_.reduce(v);
    Vec coords(reps_.rows(), Scalar::zero(denom_.spec()));
    for (size_t i = 0; i < reps_.rows(); ++i) {
        const Scalar c = r[pivots_[i]];
        if (c.is_zero()) continue;
        coords[i] = c;
        for (size_t j = 0; j < r.size(); ++j) r[j] -= c * reps_.at(i, j);
    }
    if (!vec_is_zero(r))
        throw ConfigError("vector is not in the quotient's numerator subspace");
    return coords;
}

bool maps_into(const Matrix& f, const Subspace& u, const Subspace& v) {
    for (size_t i = 0; i < u.dim(); ++i)
        if (!v.contains(f.apply(u.basis_vector(i)))) return false;
    return true;
}

Matrix restricted_matrix(const Matrix& f, const Subspace& u, const Subspace& v) {
    QuotientSpace coords(v, Subspace(v.spec(), v.ambient()));
    Matrix r(f.spec(), v.dim(), u.dim());
    for (size_t j = 0; j < u.dim(); ++j) {
        Vec img = f.apply(u.basis_vector(j));
        Vec c = coords.coordinates(img);
        for (size_t i = 0; i < v.dim(); ++i) r.at(i, j) = c[i];
    }
    return r;
}

Matrix induced_on_quotients(const Matrix& f, const QuotientSpace& src,
                            const QuotientSpace& dst) {
    Matrix r(f.spec(), dst.dim(), src.dim());
    for (size_t j = 0; j < src.dim(); ++j) {
        Vec img = f.apply(src.representative(j));
        Vec c = dst.coordinates(img);
        for (size_t i = 0; i < dst.dim(); ++i) r.at(i, j) = c[i];
    }
    return r;
}

ExactnessReport exact_at(const Matrix& map_in, const Matrix& map_out) {
    if (map_in.rows() != map_out.cols()) throw ConfigError("exactness shape mismatch");
    ExactnessReport rep;
    rep.composes_to_zero = (map_out * map_in).is_zero();
    Subspace img = image_subspace(map_in);
    Subspace ker = kernel_subspace(map_out);
    rep.exact = rep.composes_to_zero && img == ker;
    if (!rep.exact) {
        // prefer a witness in ker \ im; otherwise an image vector outside ker
        for (size_t i = 0; i < ker.dim(); ++i) {
            if (!img.contains(ker.basis_vector(i))) {
                rep.witness = ker.basis_vector(i);
                return rep;
            }
        }
        for (size_t i = 0; i < img.dim(); ++i) {
            if (!ker.contains(img.basis_vector(i))) {
                rep.witness = img.basis_vector(i);
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace la
}  // namespace qps
