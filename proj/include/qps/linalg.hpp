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

#pragma once

#include <optional>
#include <vector>

#include "qps/scalar.hpp"

namespace qps {
namespace la {

using field::FieldSpec;
using field::Scalar;
using Vec = std::vector<Scalar>;

// Dense matrix over an exact ground field. Maps are matrices acting on
// column vectors: rows = target dimension, cols = source dimension.
class Matrix {
public:
    Matrix(const FieldSpec& fs, size_t rows, size_t cols);
    static Matrix identity(const FieldSpec& fs, size_t n);
    static Matrix from_rows(const FieldSpec& fs, size_t cols, const std::vector<Vec>& rows);

    const FieldSpec& spec() const { return fs_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Vec row(size_t r) const;
    Vec col(size_t c) const;
    void set_row(size_t r, const Vec& v);
    void set_block(size_t r0, size_t c0, const Matrix& b);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    FieldSpec fs_;
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& a);

// Reduced row echelon form. Pivot choice is the first nonzero entry in
// deterministic order (no pivoting by magnitude).
struct Echelon {
    Matrix rref;
    std::vector<size_t> pivots;  // pivot column of each nonzero row
    size_t rank = 0;
};

Echelon rref(Matrix a);
// Also returns T with T * input = rref (T square, invertible).
Echelon rref_with_transform(Matrix a, Matrix& transform);

size_t rank(const Matrix& a);

// Basis of {x : A x = 0} as rows, canonicalized.
Matrix kernel_basis(const Matrix& a);

// Deterministic solution of A x = b, free coordinates set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Subspace of k^ambient spanned by row vectors; canonical RREF row basis,
// so equality of subspaces is structural equality of the representation.
class Subspace {
public:
    Subspace(const FieldSpec& fs, size_t ambient);  // zero subspace
    static Subspace from_span(const FieldSpec& fs, size_t ambient,
                              const std::vector<Vec>& spanning);
    static Subspace full(const FieldSpec& fs, size_t ambient);

    const FieldSpec& spec() const { return fs_; }
    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Residue of v after eliminating this subspace's pivot coordinates.
    Vec reduce(Vec v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;  // Zassenhaus

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    FieldSpec fs_;
    size_t ambient_;
    Matrix basis_;
};

// Image of a map (column span) as a canonical subspace of the target.
Subspace image_subspace(const Matrix& a);
// Kernel of a map as a canonical subspace of the source.
Subspace kernel_subspace(const Matrix& a);

// numer/denom quotient with deterministic representatives: given
// denom <= numer <= k^ambient, picks a canonical reduced row basis of
// numer/denom and provides exact coordinates.
class QuotientSpace {
public:
    QuotientSpace(const Subspace& numer, const Subspace& denom);

    size_t dim() const { return reps_.rows(); }
    size_t ambient() const { return denom_.ambient(); }
    const Matrix& representatives() const { return reps_; }
    Vec representative(size_t i) const { return reps_.row(i); }
    const Subspace& denominator() const { return denom_; }

    // Coordinates of the class of v; throws if v is not in numer + denom.
    Vec coordinates(const Vec& v) const;

private:
    Subspace denom_;
    Matrix reps_;                 // RREF rows, reduced mod denom_
    std::vector<size_t> pivots_;  // pivot columns of reps_
};

// Does f map U into V? (U in the source, V in the target of f.)
bool maps_into(const Matrix& f, const Subspace& u, const Subspace& v);

// Matrix of f restricted to U -> V in the canonical bases of U and V;
// requires f(U) <= V.
Matrix restricted_matrix(const Matrix& f, const Subspace& u, const Subspace& v);

// Matrix of the map induced by f on numerator/denominator quotients;
// requires f(numer_src) <= numer_dst and f(denom_src) <= denom_dst.
Matrix induced_on_quotients(const Matrix& f, const QuotientSpace& src,
                            const QuotientSpace& dst);

struct ExactnessReport {
    bool composes_to_zero = false;
    bool exact = false;                  // image(in) == kernel(out)
    std::optional<Vec> witness;          // middle-space vector in ker \ im
};

// Exactness of  .. --in--> B --out--> ..  at B.
ExactnessReport exact_at(const Matrix& map_in, const Matrix& map_out);

}  // namespace la
}  // namespace qps
