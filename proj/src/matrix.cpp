#include "bcspec/matrix.hpp"

#include <cmath>

namespace bcspec {

namespace {

void check_same_shape(Index r1, Index c1, Index r2, Index c2, const char* what) {
    if (r1 != r2 || c1 != c2)
        throw DimensionMismatch(std::string(what) + ": shapes differ");
}

}  // namespace

BCMatrix::BCMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

BCMatrix BCMatrix::identity(Index n) {
    BCMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = BiComplex::one();
    return m;
}

BCMatrix BCMatrix::join(const ComplexMatrix& left, const ComplexMatrix& right) {
    check_same_shape(left.rows(), left.cols(), right.rows(), right.cols(), "join");
    BCMatrix m(left.rows(), left.cols());
    for (Index i = 0; i < m.rows_; ++i)
        for (Index j = 0; j < m.cols_; ++j)
            m(i, j) = from_idempotent(IdempotentPair{left(i, j), right(i, j)});
    return m;
}

std::pair<ComplexMatrix, ComplexMatrix> BCMatrix::split() const {
    ComplexMatrix left(rows_, cols_), right(rows_, cols_);
    for (Index i = 0; i < rows_; ++i) {
        for (Index j = 0; j < cols_; ++j) {
            const IdempotentPair p = to_idempotent((*this)(i, j));
            left(i, j) = p.beta1;
            right(i, j) = p.beta2;
        }
    }
    return {left, right};
}

BCMatrix BCMatrix::adjoint() const {
    BCMatrix m(cols_, rows_);
    for (Index i = 0; i < rows_; ++i)
        for (Index j = 0; j < cols_; ++j)
            m(j, i) = star((*this)(i, j));
    return m;
}

double BCMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const BiComplex& z : entries_) {
        const double n = euclid_norm(z);
        s += n * n;
    }
    return std::sqrt(s);
}

BCMatrix operator+(const BCMatrix& a, const BCMatrix& b) {
    check_same_shape(a.rows_, a.cols_, b.rows_, b.cols_, "add");
    BCMatrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

BCMatrix operator-(const BCMatrix& a, const BCMatrix& b) {
    check_same_shape(a.rows_, a.cols_, b.rows_, b.cols_, "sub");
    BCMatrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
}

// Direct bicomplex product; intentionally not routed through the split so
// the split-homomorphism property is testable against it.
BCMatrix operator*(const BCMatrix& a, const BCMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matmul: inner dimensions disagree");
    BCMatrix m(a.rows_, b.cols_);
    for (Index i = 0; i < a.rows_; ++i) {
        for (Index j = 0; j < b.cols_; ++j) {
            BiComplex acc;
            for (Index k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
            m(i, j) = acc;
        }
    }
    return m;
}

BCMatrix operator*(const BiComplex& s, const BCMatrix& m) {
    BCMatrix r(m.rows_, m.cols_);
    for (size_t k = 0; k < m.entries_.size(); ++k) r.entries_[k] = s * m.entries_[k];
    return r;
}

BCVector BCVector::join(const ComplexVector& left, const ComplexVector& right) {
    if (left.size() != right.size()) throw DimensionMismatch("join: vector lengths differ");
    BCVector x(left.size());
    for (Index i = 0; i < x.dim_; ++i)
        x[i] = from_idempotent(IdempotentPair{left(i), right(i)});
    return x;
}

std::pair<ComplexVector, ComplexVector> BCVector::split() const {
    ComplexVector left(dim_), right(dim_);
    for (Index i = 0; i < dim_; ++i) {
        const IdempotentPair p = to_idempotent((*this)[i]);
        left(i) = p.beta1;
        right(i) = p.beta2;
    }
    return {left, right};
}

BCVector operator+(const BCVector& a, const BCVector& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("add: vector lengths differ");
    BCVector x(a.dim_);
    for (Index i = 0; i < a.dim_; ++i) x[i] = a[i] + b[i];
    return x;
}

BCVector operator*(const BiComplex& s, const BCVector& x) {
    BCVector r(x.dim());
    for (Index i = 0; i < x.dim(); ++i) r[i] = s * x[i];
    return r;
}

BCVector operator*(const BCMatrix& a, const BCVector& x) {
    if (a.cols() != x.dim()) throw DimensionMismatch("matvec: dimensions disagree");
    BCVector y(a.rows());
    for (Index i = 0; i < a.rows(); ++i) {
        BiComplex acc;
        for (Index k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
        y[i] = acc;
    }
    return y;
}

BiComplex bc_inner(const BCVector& x, const BCVector& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("inner: vector lengths differ");
    BiComplex acc;
    for (Index i = 0; i < x.dim(); ++i) acc += x[i] * star(y[i]);
    return acc;
}

double vector_norm(const BCVector& x) {
    const auto [x1, x2] = x.split();
    return std::sqrt(0.5 * (x1.squaredNorm() + x2.squaredNorm()));
}

bool is_commuting_tuple(const std::vector<BCMatrix>& mats, const Tolerances& tol,
                        double* max_residual) {
    double worst = 0.0;
    bool ok = true;
    for (size_t i = 0; i < mats.size(); ++i) {
        if (!mats[i].is_square()) throw DimensionMismatch("commutation test needs square matrices");
        if (mats[i].rows() != mats[0].rows())
            throw DimensionMismatch("commutation test needs equal dimensions");
    }
    for (size_t i = 0; i < mats.size(); ++i) {
        for (size_t j = i + 1; j < mats.size(); ++j) {
            const double scale = mats[i].frobenius_norm() * mats[j].frobenius_norm();
            const double resid = (mats[i] * mats[j] - mats[j] * mats[i]).frobenius_norm();
            const double rel = scale > 0.0 ? resid / scale : resid;
            worst = std::max(worst, rel);
            if (rel > tol.commute) ok = false;
        }
    }
    if (max_residual) *max_residual = worst;
    return ok;
}

namespace {

std::pair<double, double> singular_extremes(const ComplexMatrix& m) {
    const Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return {0.0, 0.0};
    return {sv(0), sv(sv.size() - 1)};
}

}  // namespace

bool is_invertible(const BCMatrix& m, const Tolerances& tol) {
    if (!m.is_square()) throw NotSquare("invertibility needs a square matrix");
    const auto [left, right] = m.split();
    const auto [lmax, lmin] = singular_extremes(left);
    const auto [rmax, rmin] = singular_extremes(right);
    const double scale = std::max(lmax, rmax);
    return lmin > tol.sing * scale && rmin > tol.sing * scale;
}

bool is_unitary(const BCMatrix& m, const Tolerances& tol) {
    if (!m.is_square()) throw NotSquare("unitarity needs a square matrix");
    const auto [left, right] = m.split();
    const Index n = m.rows();
    const double scale = std::max(1.0, std::max(left.squaredNorm(), right.squaredNorm()));
    const double dev = std::max(
        (left.adjoint() * left - ComplexMatrix::Identity(n, n)).norm(),
        (right.adjoint() * right - ComplexMatrix::Identity(n, n)).norm());
    return dev <= tol.sing * scale * static_cast<double>(n);
}

BCMatrix inverse(const BCMatrix& m, const Tolerances& tol) {
    if (!is_invertible(m, tol)) {
        const auto [left, right] = m.split();
        const auto [lmax, lmin] = singular_extremes(left);
        const auto [rmax, rmin] = singular_extremes(right);
        const double scale = std::max(lmax, rmax);
        const bool l_sing = lmin <= tol.sing * scale;
        const bool r_sing = rmin <= tol.sing * scale;
        if (l_sing && r_sing) throw ZeroInput("matrix has no invertible split component");
        throw ZeroDivisor("matrix is a zero divisor (one split component is singular)");
    }
    const auto [left, right] = m.split();
    return BCMatrix::join(left.inverse(), right.inverse());
}

}  // namespace bcspec
