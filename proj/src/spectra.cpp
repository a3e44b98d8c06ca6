#include "bcspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bcspec/rng.hpp"

namespace bcspec {

namespace {

double tuple_scale(const std::vector<ComplexMatrix>& mats) {
    double s = 1.0;
    for (const auto& a : mats) s = std::max(s, a.norm());
    return s;
}

void check_complex_tuple(const std::vector<ComplexMatrix>& mats, const Tolerances& tol) {
    if (mats.empty()) throw Error("empty matrix tuple");
    const Index n = mats[0].rows();
    for (const auto& a : mats) {
        if (a.rows() != a.cols()) throw NotSquare("joint spectrum needs square matrices");
        if (a.rows() != n) throw DimensionMismatch("joint spectrum needs equal dimensions");
    }
    double worst = 0.0;
    for (size_t i = 0; i < mats.size(); ++i) {
        for (size_t j = i + 1; j < mats.size(); ++j) {
            const double scale = mats[i].norm() * mats[j].norm();
            const double resid = (mats[i] * mats[j] - mats[j] * mats[i]).norm();
            worst = std::max(worst, scale > 0.0 ? resid / scale : resid);
        }
    }
    if (worst > tol.commute) throw NotCommuting(worst);
}

bool lex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

bool lex_less_tuple(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

// Merge eigenvalues within radius of each other (transitively) and return
// the cluster means, lexicographically ordered.
std::vector<Complex> cluster_values(const ComplexVector& vals, double radius) {
    const Index n = vals.size();
    std::vector<Index> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), Index{0});
    const auto find = [&](Index i) {
        while (parent[static_cast<size_t>(i)] != i) i = parent[static_cast<size_t>(i)];
        return i;
    };
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (std::abs(vals(i) - vals(j)) <= radius)
                parent[static_cast<size_t>(find(j))] = find(i);

    std::vector<Complex> sums(static_cast<size_t>(n), Complex(0.0, 0.0));
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (Index i = 0; i < n; ++i) {
        const auto r = static_cast<size_t>(find(i));
        sums[r] += vals(i);
        counts[r] += 1;
    }
    std::vector<Complex> reps;
    for (size_t r = 0; r < sums.size(); ++r)
        if (counts[r] > 0) reps.push_back(sums[r] / static_cast<double>(counts[r]));
    std::sort(reps.begin(), reps.end(), lex_less);
    return reps;
}

// Orthonormal basis of the numerical kernel; never empty (falls back to
// the direction of smallest singular value).
ComplexMatrix kernel_basis(const ComplexMatrix& m, double thr) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Index k = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) <= thr) ++k;
    if (k == 0) k = 1;
    return svd.matrixV().rightCols(k);
}

void search_joint(const std::vector<ComplexMatrix>& mats, size_t idx,
                  const ComplexMatrix& basis, double scale, const Tolerances& tol,
                  std::vector<JointEigenpair>& out) {
    if (idx == mats.size()) {
        ComplexVector v = basis.col(0);
        v.normalize();
        JointEigenpair pair;
        pair.vec = v;
        double resid = 0.0;
        for (const auto& a : mats) {
            const Complex lam = (v.adjoint() * (a * v)).value();
            pair.lambdas.push_back(lam);
            resid = std::max(resid, (a * v - lam * v).norm());
        }
        pair.residual = resid;
        out.push_back(std::move(pair));
        return;
    }
    const ComplexMatrix b = basis.adjoint() * mats[idx] * basis;
    const Eigen::ComplexEigenSolver<ComplexMatrix> es(b, /*computeEigenvectors=*/false);
    const double radius = tol.cluster * scale;
    for (const Complex& rep : cluster_values(es.eigenvalues(), radius)) {
        const ComplexMatrix shifted =
            b - rep * ComplexMatrix::Identity(b.rows(), b.cols());
        search_joint(mats, idx + 1, basis * kernel_basis(shifted, radius), scale, tol, out);
    }
}

double tuple_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

std::vector<JointEigenpair> dedupe_and_sort(std::vector<JointEigenpair> pairs,
                                            double merge_radius) {
    std::vector<JointEigenpair> kept;
    for (auto& p : pairs) {
        bool merged = false;
        for (auto& q : kept) {
            if (tuple_distance(p.lambdas, q.lambdas) <= merge_radius) {
                if (p.residual < q.residual) q = p;
                merged = true;
                break;
            }
        }
        if (!merged) kept.push_back(std::move(p));
    }
    std::sort(kept.begin(), kept.end(), [](const JointEigenpair& a, const JointEigenpair& b) {
        return lex_less_tuple(a.lambdas, b.lambdas);
    });
    return kept;
}

ComplexVector common_eigenvector(const std::vector<ComplexMatrix>& mats, double scale,
                                 const Tolerances& tol) {
    const Index n = mats[0].rows();
    ComplexMatrix basis = ComplexMatrix::Identity(n, n);
    const double radius = tol.cluster * scale;
    for (const auto& a : mats) {
        const ComplexMatrix b = basis.adjoint() * a * basis;
        const Eigen::ComplexEigenSolver<ComplexMatrix> es(b, false);
        const auto reps = cluster_values(es.eigenvalues(), radius);
        const ComplexMatrix shifted =
            b - reps.front() * ComplexMatrix::Identity(b.rows(), b.cols());
        basis = basis * kernel_basis(shifted, radius);
    }
    ComplexVector v = basis.col(0);
    v.normalize();
    return v;
}

// One unitary u with u^* A_j u upper triangular for every j; the
// transformed matrices are written back into work.
ComplexMatrix complex_triangularize(std::vector<ComplexMatrix>& work, const Tolerances& tol) {
    const Index n = work[0].rows();
    const double scale = tuple_scale(work);
    ComplexMatrix u = ComplexMatrix::Identity(n, n);
    for (Index pos = 0; pos + 1 < n; ++pos) {
        const Index k = n - pos;
        std::vector<ComplexMatrix> subs;
        subs.reserve(work.size());
        for (const auto& w : work) subs.push_back(w.bottomRightCorner(k, k));
        const ComplexVector v = common_eigenvector(subs, scale, tol);

        // Hermitian unitary reflector p with p e_1 proportional to v.
        Complex phase = v(0);
        const double a0 = std::abs(phase);
        phase = a0 > 1e-300 ? phase / a0 : Complex(1.0, 0.0);
        ComplexVector w = v;
        w(0) += phase;
        ComplexMatrix p = ComplexMatrix::Identity(k, k);
        const double wn2 = w.squaredNorm();
        if (wn2 > 0.0) p -= (2.0 / wn2) * (w * w.adjoint());

        for (auto& m : work) {
            m.bottomRightCorner(k, k) = (p * m.bottomRightCorner(k, k) * p).eval();
            if (pos > 0) {
                m.topRightCorner(pos, k) = (m.topRightCorner(pos, k) * p).eval();
                m.bottomLeftCorner(k, pos) = (p * m.bottomLeftCorner(k, pos)).eval();
            }
        }
        u.rightCols(k) = (u.rightCols(k) * p).eval();
    }
    return u;
}

std::vector<Complex> projection(const std::vector<BiComplex>& lambda, int side) {
    std::vector<Complex> out;
    out.reserve(lambda.size());
    for (const auto& z : lambda) {
        const IdempotentPair p = to_idempotent(z);
        out.push_back(side == 0 ? p.beta1 : p.beta2);
    }
    return out;
}

double vector_p_norm(const ComplexVector& x, double p) {
    double s = 0.0;
    for (Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
    return std::pow(s, 1.0 / p);
}

}  // namespace

std::vector<JointEigenpair> complex_joint_point_spectrum(
    const std::vector<ComplexMatrix>& mats, const Tolerances& tol) {
    check_complex_tuple(mats, tol);
    const double scale = tuple_scale(mats);
    const Index n = mats[0].rows();
    std::vector<JointEigenpair> found;
    search_joint(mats, 0, ComplexMatrix::Identity(n, n), scale, tol, found);

    std::vector<JointEigenpair> kept;
    for (auto& p : found)
        if (p.residual <= tol.eig * scale) kept.push_back(p);
    if (kept.empty() && !found.empty()) {
        // a commuting tuple always has a joint eigenpair; keep the best
        // witness if rounding pushed every leaf past the cutoff
        auto best = std::min_element(found.begin(), found.end(),
                                     [](const JointEigenpair& a, const JointEigenpair& b) {
                                         return a.residual < b.residual;
                                     });
        kept.push_back(*best);
    }
    return dedupe_and_sort(std::move(kept), tol.cluster * scale);
}

bool SpectrumSet::contains(const std::vector<BiComplex>& lambda, double tau_match) const {
    if (lambda.size() != tuple_len)
        throw DimensionMismatch("membership query has wrong tuple length");
    const auto match = [&](const std::vector<std::vector<Complex>>& fin,
                           const std::vector<Complex>& probe) {
        for (const auto& t : fin)
            if (tuple_distance(t, probe) <= tau_match) return true;
        return false;
    };
    return match(left_finite, projection(lambda, 0)) ||
           match(right_finite, projection(lambda, 1));
}

SpectrumSet bc_joint_point_spectrum(const std::vector<BCMatrix>& mats, const Tolerances& tol) {
    if (mats.empty()) throw Error("empty matrix tuple");
    double resid = 0.0;
    if (!is_commuting_tuple(mats, tol, &resid)) throw NotCommuting(resid);

    std::vector<ComplexMatrix> lefts, rights;
    for (const auto& m : mats) {
        auto [l, r] = m.split();
        lefts.push_back(std::move(l));
        rights.push_back(std::move(r));
    }
    SpectrumSet s;
    s.tuple_len = mats.size();
    s.left_pairs = complex_joint_point_spectrum(lefts, tol);
    s.right_pairs = complex_joint_point_spectrum(rights, tol);
    for (const auto& p : s.left_pairs) s.left_finite.push_back(p.lambdas);
    for (const auto& p : s.right_pairs) s.right_finite.push_back(p.lambdas);
    return s;
}

std::vector<Complex> RestrictedSpectrum::left_projection(size_t i) const {
    return projection(points[i], 0);
}

std::vector<Complex> RestrictedSpectrum::right_projection(size_t i) const {
    return projection(points[i], 1);
}

bool RestrictedSpectrum::contains(const std::vector<BiComplex>& lambda, double tau_match,
                                  bool cross_pairing) const {
    const auto lp = projection(lambda, 0);
    const auto rp = projection(lambda, 1);
    bool left_hit = false, right_hit = false;
    for (size_t i = 0; i < points.size(); ++i) {
        const bool l = tuple_distance(left_projection(i), lp) <= tau_match;
        const bool r = tuple_distance(right_projection(i), rp) <= tau_match;
        if (l && r) return true;
        left_hit = left_hit || l;
        right_hit = right_hit || r;
    }
    return cross_pairing && left_hit && right_hit;
}

Triangularization simultaneous_triangularize(const std::vector<BCMatrix>& mats,
                                             const Tolerances& tol) {
    if (mats.empty()) throw Error("empty matrix tuple");
    double resid = 0.0;
    if (!is_commuting_tuple(mats, tol, &resid)) throw NotCommuting(resid);
    for (const auto& m : mats)
        if (!m.is_square()) throw NotSquare("triangularization needs square matrices");

    std::vector<ComplexMatrix> lefts, rights;
    for (const auto& m : mats) {
        auto [l, r] = m.split();
        lefts.push_back(std::move(l));
        rights.push_back(std::move(r));
    }
    const ComplexMatrix ul = complex_triangularize(lefts, tol);
    const ComplexMatrix ur = complex_triangularize(rights, tol);

    Triangularization out;
    out.v = BCMatrix::join(ul.adjoint(), ur.adjoint());
    for (size_t j = 0; j < mats.size(); ++j)
        out.t.push_back(BCMatrix::join(lefts[j], rights[j]));
    return out;
}

RestrictedSpectrum restricted_spectrum(const std::vector<BCMatrix>& mats, const Tolerances& tol) {
    const Triangularization tri = simultaneous_triangularize(mats, tol);
    const Index d = mats[0].rows();
    RestrictedSpectrum rs;
    for (Index i = 0; i < d; ++i) {
        std::vector<BiComplex> point;
        point.reserve(mats.size());
        for (const auto& t : tri.t) point.push_back(t(i, i));
        rs.points.push_back(std::move(point));
    }
    return rs;
}

double complex_p_norm(const std::vector<Complex>& xs, double p) {
    if (p < 1.0) throw BadExponent("p-norm needs p >= 1");
    double s = 0.0;
    for (const auto& x : xs) s += std::pow(std::abs(x), p);
    return std::pow(s, 1.0 / p);
}

double tuple_norm(const std::vector<BiComplex>& lambda, double p) {
    if (p < 1.0) throw BadExponent("tuple norm needs p >= 1");
    return std::sqrt(0.5 * (complex_p_norm(projection(lambda, 0), p) +
                            complex_p_norm(projection(lambda, 1), p)));
}

double geometric_spectral_radius(const std::vector<BCMatrix>& mats, double p,
                                 const Tolerances& tol) {
    if (p < 1.0) throw BadExponent("spectral radius needs p >= 1");
    const RestrictedSpectrum rs = restricted_spectrum(mats, tol);
    double r = 0.0;
    for (const auto& pt : rs.points) r = std::max(r, tuple_norm(pt, p));
    return r;
}

double component_spectral_radius(const RestrictedSpectrum& rs, int side, double p) {
    double r = 0.0;
    for (const auto& pt : rs.points) r = std::max(r, complex_p_norm(projection(pt, side), p));
    return r;
}

NormBracket component_tuple_norm(const std::vector<ComplexMatrix>& mats, double p,
                                 int samples) {
    if (p < 1.0) throw BadExponent("operator tuple norm needs p >= 1");
    if (mats.empty()) throw Error("empty matrix tuple");
    const Index d = mats[0].rows();
    for (const auto& a : mats)
        if (a.rows() != d || a.cols() != d)
            throw DimensionMismatch("operator tuple norm needs equal square matrices");
    const auto m = static_cast<Index>(mats.size());

    ComplexMatrix stack(m * d, d);
    for (Index j = 0; j < m; ++j) stack.middleRows(j * d, d) = mats[static_cast<size_t>(j)];
    const Eigen::JacobiSVD<ComplexMatrix> svd(stack, Eigen::ComputeFullV);
    const double s2 = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;

    if (p == 2.0) return NormBracket{s2, s2, true};

    const auto objective = [&](ComplexVector x) {
        const double xp = vector_p_norm(x, p);
        if (xp == 0.0) return 0.0;
        x /= xp;
        double s = 0.0;
        for (const auto& a : mats) s += std::pow(vector_p_norm(a * x, p), p);
        return std::pow(s, 1.0 / p);
    };

    double lower = 0.0;
    for (Index i = 0; i < d; ++i)
        lower = std::max(lower, objective(ComplexVector::Unit(d, i)));
    lower = std::max(lower, objective(svd.matrixV().col(0)));
    Rng rng(0x5eedULL);
    for (int s = 0; s < samples; ++s) {
        ComplexVector x(d);
        for (Index i = 0; i < d; ++i) x(i) = rng.cnormal();
        lower = std::max(lower, objective(std::move(x)));
    }

    const double md = static_cast<double>(m) * static_cast<double>(d);
    const double factor = p < 2.0 ? std::pow(md, 1.0 / p - 0.5)
                                  : std::pow(static_cast<double>(d), 0.5 - 1.0 / p);
    return NormBracket{lower, s2 * factor, false};
}

OperatorNormReport operator_tuple_norm(const std::vector<BCMatrix>& mats, double p,
                                       int samples) {
    if (mats.empty()) throw Error("empty matrix tuple");
    std::vector<ComplexMatrix> lefts, rights;
    for (const auto& m : mats) {
        auto [l, r] = m.split();
        lefts.push_back(std::move(l));
        rights.push_back(std::move(r));
    }
    OperatorNormReport rep;
    rep.left = component_tuple_norm(lefts, p, samples);
    rep.right = component_tuple_norm(rights, p, samples);
    rep.lower = std::sqrt(0.5 * (rep.left.lower + rep.right.lower));
    rep.upper = std::sqrt(0.5 * (rep.left.upper + rep.right.upper));
    rep.exact = rep.left.exact && rep.right.exact;
    return rep;
}

RadiusBoundReport check_radius_bound(const std::vector<BCMatrix>& mats, double p,
                                     const Tolerances& tol) {
    if (p < 1.0) throw BadExponent("radius bound needs p >= 1");
    const RestrictedSpectrum rs = restricted_spectrum(mats, tol);
    RadiusBoundReport rep;
    for (const auto& pt : rs.points) rep.r_p = std::max(rep.r_p, tuple_norm(pt, p));
    rep.r_left = component_spectral_radius(rs, 0, p);
    rep.r_right = component_spectral_radius(rs, 1, p);
    rep.norm = operator_tuple_norm(mats, p);
    rep.norm_p = rep.norm.upper;
    rep.holds = rep.r_p <= rep.norm_p + tol.ineq;
    return rep;
}

}  // namespace bcspec
