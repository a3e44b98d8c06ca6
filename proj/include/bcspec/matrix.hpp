#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bcspec/bicomplex.hpp"
#include "bcspec/errors.hpp"
#include "bcspec/tolerances.hpp"

namespace bcspec {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Dense matrix of bicomplex entries, row-major. The idempotent split
/// M = M' e1 + M'' e2 into two complex matrices is an exact ring
/// isomorphism; all rank/inverse/singular-value decisions happen on the
/// split components.
class BCMatrix {
public:
    BCMatrix() : rows_(0), cols_(0) {}
    BCMatrix(Index rows, Index cols);

    static BCMatrix identity(Index n);
    static BCMatrix zero(Index rows, Index cols) { return BCMatrix(rows, cols); }
    /// Entrywise join of two equally-shaped complex matrices:
    /// M = left e1 + right e2.
    static BCMatrix join(const ComplexMatrix& left, const ComplexMatrix& right);
    /// Embed a complex matrix diagonally (both split components equal).
    static BCMatrix embed(const ComplexMatrix& m) { return join(m, m); }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const BiComplex& operator()(Index i, Index j) const {
        return entries_[static_cast<size_t>(i * cols_ + j)];
    }
    BiComplex& operator()(Index i, Index j) {
        return entries_[static_cast<size_t>(i * cols_ + j)];
    }

    /// Entrywise idempotent split (M', M'').
    std::pair<ComplexMatrix, ComplexMatrix> split() const;
    ComplexMatrix left() const { return split().first; }
    ComplexMatrix right() const { return split().second; }

    /// Star-conjugate transpose; splits to the componentwise conjugate
    /// transposes.
    BCMatrix adjoint() const;

    double frobenius_norm() const;

    friend BCMatrix operator+(const BCMatrix& a, const BCMatrix& b);
    friend BCMatrix operator-(const BCMatrix& a, const BCMatrix& b);
    friend BCMatrix operator*(const BCMatrix& a, const BCMatrix& b);
    friend BCMatrix operator*(const BiComplex& s, const BCMatrix& m);
    friend BCMatrix operator*(const BCMatrix& m, const BiComplex& s) { return s * m; }

private:
    Index rows_;
    Index cols_;
    std::vector<BiComplex> entries_;
};

class BCVector {
public:
    BCVector() : dim_(0) {}
    explicit BCVector(Index dim) : dim_(dim), entries_(static_cast<size_t>(dim)) {}

    static BCVector join(const ComplexVector& left, const ComplexVector& right);

    Index dim() const { return dim_; }
    const BiComplex& operator[](Index i) const { return entries_[static_cast<size_t>(i)]; }
    BiComplex& operator[](Index i) { return entries_[static_cast<size_t>(i)]; }

    std::pair<ComplexVector, ComplexVector> split() const;

    friend BCVector operator+(const BCVector& a, const BCVector& b);
    friend BCVector operator*(const BiComplex& s, const BCVector& x);

private:
    Index dim_;
    std::vector<BiComplex> entries_;
};

BCVector operator*(const BCMatrix& a, const BCVector& x);

/// <x, y> = sum_i x_i * star(y_i); linear in the first slot, and
/// <x, x> lies in D+.
BiComplex bc_inner(const BCVector& x, const BCVector& y);

/// Real norm ||x|| = sqrt((||x1||^2 + ||x2||^2) / 2) over the split
/// complex vectors.
double vector_norm(const BCVector& x);

/// True iff every pairwise commutator is small relative to the norm
/// product. The worst relative residual is written to max_residual when
/// given.
bool is_commuting_tuple(const std::vector<BCMatrix>& mats, const Tolerances& tol = {},
                        double* max_residual = nullptr);

/// Invertible iff both split components have smallest singular value
/// above tol.sing times the largest one.
bool is_invertible(const BCMatrix& m, const Tolerances& tol = {});

bool is_unitary(const BCMatrix& m, const Tolerances& tol = {});

/// Componentwise inverse (both split components must be invertible).
BCMatrix inverse(const BCMatrix& m, const Tolerances& tol = {});

}  // namespace bcspec
