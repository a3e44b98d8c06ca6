#pragma once

#include <vector>

#include "bcspec/matrix.hpp"

namespace bcspec {

/// A joint eigenvalue tuple with its witnessing common unit eigenvector
/// and the residual max_i ||A_i v - lambda_i v||.
struct JointEigenpair {
    std::vector<Complex> lambdas;
    ComplexVector vec;
    double residual = 0.0;
};

/// All joint eigenvalue tuples of a commuting complex matrix tuple,
/// found by restricting the tuple to nested common eigenspaces.
/// Deterministically ordered (lexicographic by coordinates).
std::vector<JointEigenpair> complex_joint_point_spectrum(
    const std::vector<ComplexMatrix>& mats, const Tolerances& tol = {});

/// Joint point spectrum of a bicomplex matrix tuple. The full set is
///   left_finite e1 + C^m e2  union  C^m e1 + right_finite e2,
/// so it is unbounded whenever a finite part is non-empty; only the two
/// finite parts are stored.
struct SpectrumSet {
    std::vector<std::vector<Complex>> left_finite;
    std::vector<std::vector<Complex>> right_finite;
    std::vector<JointEigenpair> left_pairs;
    std::vector<JointEigenpair> right_pairs;
    size_t tuple_len = 0;

    /// Membership of a bicomplex m-tuple: its e1 projection matches a
    /// left tuple or its e2 projection matches a right tuple, each
    /// coordinate within tau_match.
    bool contains(const std::vector<BiComplex>& lambda, double tau_match = 1e-8) const;
    bool unbounded() const { return !left_finite.empty() || !right_finite.empty(); }
};

SpectrumSet bc_joint_point_spectrum(const std::vector<BCMatrix>& mats,
                                    const Tolerances& tol = {});

/// The d diagonal points of one fixed simultaneous triangularization,
/// pairing the i-th left diagonal tuple with the i-th right one.
struct RestrictedSpectrum {
    std::vector<std::vector<BiComplex>> points;

    std::vector<Complex> left_projection(size_t i) const;
    std::vector<Complex> right_projection(size_t i) const;

    /// Diagonal-pairing membership by default; with cross_pairing the
    /// two projections may match different points (the set-sum reading).
    bool contains(const std::vector<BiComplex>& lambda, double tau_match = 1e-8,
                  bool cross_pairing = false) const;
};

struct Triangularization {
    BCMatrix v;                  // unitary
    std::vector<BCMatrix> t;     // t[j] = v * A_j * adjoint(v), upper triangular
};

Triangularization simultaneous_triangularize(const std::vector<BCMatrix>& mats,
                                             const Tolerances& tol = {});

RestrictedSpectrum restricted_spectrum(const std::vector<BCMatrix>& mats,
                                       const Tolerances& tol = {});

/// (sum_k |x_k|^p)^(1/p).
double complex_p_norm(const std::vector<Complex>& xs, double p);

/// Norm of a restricted-spectrum point:
///   ||lambda||_p^2 = ((sum_k |mu_k|^p)^(1/p) + (sum_k |gamma_k|^p)^(1/p)) / 2
/// with lambda_k = mu_k e1 + gamma_k e2. The square on the left side is
/// deliberate; the displayed value is the square root of that average.
double tuple_norm(const std::vector<BiComplex>& lambda, double p);

/// max over restricted-spectrum points of tuple_norm.
double geometric_spectral_radius(const std::vector<BCMatrix>& mats, double p,
                                 const Tolerances& tol = {});

/// max over points of the p-norm of one projection (0 = left, 1 = right).
double component_spectral_radius(const RestrictedSpectrum& rs, int side, double p);

/// Lower/upper enclosure of sup_{||x||_p = 1} (sum_j ||A_j x||_p^p)^(1/p).
/// Exact (lower == upper) for p = 2 via the stacked singular value.
struct NormBracket {
    double lower = 0.0;
    double upper = 0.0;
    bool exact = false;
    double value() const { return upper; }
};

NormBracket component_tuple_norm(const std::vector<ComplexMatrix>& mats, double p,
                                 int samples = 512);

/// ||T||_p = sqrt((||T1||_p + ||T2||_p) / 2) over the split tuples.
struct OperatorNormReport {
    NormBracket left;
    NormBracket right;
    double lower = 0.0;
    double upper = 0.0;
    bool exact = false;
    double value() const { return upper; }
};

OperatorNormReport operator_tuple_norm(const std::vector<BCMatrix>& mats, double p,
                                       int samples = 512);

struct RadiusBoundReport {
    double r_p = 0.0;
    double norm_p = 0.0;  // upper enclosure of ||T||_p (exact for p = 2)
    bool holds = false;
    double r_left = 0.0;
    double r_right = 0.0;
    OperatorNormReport norm;
};

/// Evaluates r_p(T) <= ||T||_p, with tol.ineq slack.
RadiusBoundReport check_radius_bound(const std::vector<BCMatrix>& mats, double p,
                                     const Tolerances& tol = {});

}  // namespace bcspec
