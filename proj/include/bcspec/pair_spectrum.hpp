#pragma once

#include <array>
#include <vector>

#include "bcspec/spectra.hpp"

namespace bcspec {

/// The 2d x 2d operator block for a query point (z1, z2):
///   [ z1 I - T1        z2 I - T2      ]
///   [ -star(z2) I + T2*   star(z1) I - T1* ]
/// Its idempotent split is the pair of complex blocks assembled from the
/// split components of z1, z2, T1, T2.
BCMatrix block_matrix(const BiComplex& z1, const BiComplex& z2, const BCMatrix& t1,
                      const BCMatrix& t2);

enum class Side { none, e1, e2 };

/// Outcome of a pointwise spectrum query: the witnessed side, the
/// smallest singular value per side, the scale those are measured
/// against, and a kernel vector when singular.
struct MembershipReport {
    bool member = false;
    Side side = Side::none;
    double smin_e1 = 0.0;
    double smin_e2 = 0.0;
    double scale_e1 = 0.0;
    double scale_e2 = 0.0;
    ComplexVector witness;
};

/// (z1, z2) is in the joint spectrum of the commuting pair iff at least
/// one split component of the block matrix is singular.
MembershipReport in_joint_spectrum(const BiComplex& z1, const BiComplex& z2,
                                   const BCMatrix& t1, const BCMatrix& t2,
                                   const Tolerances& tol = {});

/// Finite-dimensional approximate-point criterion: the stacked matrix
/// [T1' - z1' I; T2' - z2' I] (or the e2 analogue) is near-singular on
/// the witnessed side.
MembershipReport in_approximate_point_spectrum(const BiComplex& z1, const BiComplex& z2,
                                               const BCMatrix& t1, const BCMatrix& t2,
                                               const Tolerances& tol = {});

enum class SpectrumKind { point, approximate, residual, joint };

/// Spectrum of a commuting pair, stored through its finite parts. The
/// full set is left_finite e1 + (C x C) e2  union  (C x C) e1 +
/// right_finite e2, unbounded for the point/residual/joint kinds
/// whenever a finite part is non-empty.
struct PairSpectrumSet {
    std::vector<std::array<Complex, 2>> left_finite;
    std::vector<std::array<Complex, 2>> right_finite;
    SpectrumKind kind = SpectrumKind::point;

    bool contains(const BiComplex& lambda1, const BiComplex& lambda2,
                  double tau_match = 1e-8) const;
    bool unbounded() const {
        return kind != SpectrumKind::approximate &&
               (!left_finite.empty() || !right_finite.empty());
    }
};

/// Joint eigenvalue pairs of the split pairs.
PairSpectrumSet pair_point_spectrum(const BCMatrix& t1, const BCMatrix& t2,
                                    const Tolerances& tol = {});

/// At finite dimension the finite parts coincide with the point
/// spectrum's finite parts.
PairSpectrumSet pair_approximate_point_spectrum(const BCMatrix& t1, const BCMatrix& t2,
                                                const Tolerances& tol = {});

/// Conjugated joint point spectra of the adjoint split pairs.
PairSpectrumSet pair_residual_spectrum(const BCMatrix& t1, const BCMatrix& t2,
                                       const Tolerances& tol = {});

/// Union of the point and residual finite parts; exactly the pairs whose
/// block matrix goes singular on the matching side.
PairSpectrumSet pair_joint_spectrum(const BCMatrix& t1, const BCMatrix& t2,
                                    const Tolerances& tol = {});

}  // namespace bcspec
