#include "bcspec/pair_spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace bcspec {

namespace {

void check_pair(const BCMatrix& t1, const BCMatrix& t2) {
    if (!t1.is_square() || !t2.is_square())
        throw NotSquare("pair spectrum needs square matrices");
    if (t1.rows() != t2.rows())
        throw DimensionMismatch("pair spectrum needs equal dimensions");
}

void check_commuting_pair(const BCMatrix& t1, const BCMatrix& t2, const Tolerances& tol) {
    check_pair(t1, t2);
    double resid = 0.0;
    if (!is_commuting_tuple({t1, t2}, tol, &resid)) throw NotCommuting(resid);
}

struct SingularInfo {
    double smin = 0.0;
    double scale = 0.0;
    ComplexVector kernel;
};

SingularInfo singular_info(const ComplexMatrix& m) {
    const Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    SingularInfo info;
    info.smin = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
    info.scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    info.kernel = svd.matrixV().col(svd.matrixV().cols() - 1);
    return info;
}

MembershipReport side_report(const SingularInfo& e1, const SingularInfo& e2, double tau) {
    MembershipReport rep;
    rep.smin_e1 = e1.smin;
    rep.smin_e2 = e2.smin;
    rep.scale_e1 = e1.scale;
    rep.scale_e2 = e2.scale;
    if (e1.smin <= tau * e1.scale) {
        rep.member = true;
        rep.side = Side::e1;
        rep.witness = e1.kernel;
    } else if (e2.smin <= tau * e2.scale) {
        rep.member = true;
        rep.side = Side::e2;
        rep.witness = e2.kernel;
    }
    return rep;
}

std::vector<std::array<Complex, 2>> to_pairs(const std::vector<JointEigenpair>& eigs) {
    std::vector<std::array<Complex, 2>> out;
    out.reserve(eigs.size());
    for (const auto& e : eigs) out.push_back({e.lambdas[0], e.lambdas[1]});
    return out;
}

void sort_pairs(std::vector<std::array<Complex, 2>>& ps) {
    std::sort(ps.begin(), ps.end(), [](const auto& x, const auto& y) {
        const auto key = [](const Complex& z) { return std::make_pair(z.real(), z.imag()); };
        return std::make_pair(key(x[0]), key(x[1])) < std::make_pair(key(y[0]), key(y[1]));
    });
}

std::vector<std::array<Complex, 2>> conj_pairs(std::vector<std::array<Complex, 2>> ps) {
    for (auto& p : ps) {
        p[0] = std::conj(p[0]);
        p[1] = std::conj(p[1]);
    }
    sort_pairs(ps);
    return ps;
}

bool pair_match(const std::vector<std::array<Complex, 2>>& fin, const Complex& a,
                const Complex& b, double tau) {
    for (const auto& p : fin)
        if (std::abs(p[0] - a) <= tau && std::abs(p[1] - b) <= tau) return true;
    return false;
}

std::vector<std::array<Complex, 2>> merge_pairs(std::vector<std::array<Complex, 2>> a,
                                                const std::vector<std::array<Complex, 2>>& b,
                                                double tau) {
    for (const auto& p : b)
        if (!pair_match(a, p[0], p[1], tau)) a.push_back(p);
    sort_pairs(a);
    return a;
}

}  // namespace

BCMatrix block_matrix(const BiComplex& z1, const BiComplex& z2, const BCMatrix& t1,
                      const BCMatrix& t2) {
    check_pair(t1, t2);
    const Index d = t1.rows();
    const BCMatrix id = BCMatrix::identity(d);
    const BCMatrix tl = z1 * id - t1;
    const BCMatrix tr = z2 * id - t2;
    const BCMatrix bl = (-star(z2)) * id + t2.adjoint();
    const BCMatrix br = star(z1) * id - t1.adjoint();

    BCMatrix block(2 * d, 2 * d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            block(i, j) = tl(i, j);
            block(i, d + j) = tr(i, j);
            block(d + i, j) = bl(i, j);
            block(d + i, d + j) = br(i, j);
        }
    }
    return block;
}

MembershipReport in_joint_spectrum(const BiComplex& z1, const BiComplex& z2,
                                   const BCMatrix& t1, const BCMatrix& t2,
                                   const Tolerances& tol) {
    check_commuting_pair(t1, t2, tol);
    const auto [left, right] = block_matrix(z1, z2, t1, t2).split();
    return side_report(singular_info(left), singular_info(right), tol.sing);
}

MembershipReport in_approximate_point_spectrum(const BiComplex& z1, const BiComplex& z2,
                                               const BCMatrix& t1, const BCMatrix& t2,
                                               const Tolerances& tol) {
    check_commuting_pair(t1, t2, tol);
    const Index d = t1.rows();
    const auto [t1l, t1r] = t1.split();
    const auto [t2l, t2r] = t2.split();
    const IdempotentPair p1 = to_idempotent(z1);
    const IdempotentPair p2 = to_idempotent(z2);

    const auto stack = [d](const ComplexMatrix& a, const Complex& la, const ComplexMatrix& b,
                           const Complex& lb) {
        ComplexMatrix s(2 * d, d);
        s.topRows(d) = a - la * ComplexMatrix::Identity(d, d);
        s.bottomRows(d) = b - lb * ComplexMatrix::Identity(d, d);
        return s;
    };
    return side_report(singular_info(stack(t1l, p1.beta1, t2l, p2.beta1)),
                       singular_info(stack(t1r, p1.beta2, t2r, p2.beta2)), tol.sing);
}

bool PairSpectrumSet::contains(const BiComplex& lambda1, const BiComplex& lambda2,
                               double tau_match) const {
    const IdempotentPair p1 = to_idempotent(lambda1);
    const IdempotentPair p2 = to_idempotent(lambda2);
    return pair_match(left_finite, p1.beta1, p2.beta1, tau_match) ||
           pair_match(right_finite, p1.beta2, p2.beta2, tau_match);
}

PairSpectrumSet pair_point_spectrum(const BCMatrix& t1, const BCMatrix& t2,
                                    const Tolerances& tol) {
    check_commuting_pair(t1, t2, tol);
    const auto [t1l, t1r] = t1.split();
    const auto [t2l, t2r] = t2.split();
    PairSpectrumSet s;
    s.kind = SpectrumKind::point;
    s.left_finite = to_pairs(complex_joint_point_spectrum({t1l, t2l}, tol));
    s.right_finite = to_pairs(complex_joint_point_spectrum({t1r, t2r}, tol));
    return s;
}

PairSpectrumSet pair_approximate_point_spectrum(const BCMatrix& t1, const BCMatrix& t2,
                                                const Tolerances& tol) {
    PairSpectrumSet s = pair_point_spectrum(t1, t2, tol);
    s.kind = SpectrumKind::approximate;
    return s;
}

PairSpectrumSet pair_residual_spectrum(const BCMatrix& t1, const BCMatrix& t2,
                                       const Tolerances& tol) {
    check_commuting_pair(t1, t2, tol);
    const auto [t1l, t1r] = t1.split();
    const auto [t2l, t2r] = t2.split();
    PairSpectrumSet s;
    s.kind = SpectrumKind::residual;
    s.left_finite = conj_pairs(to_pairs(
        complex_joint_point_spectrum({t1l.adjoint().eval(), t2l.adjoint().eval()}, tol)));
    s.right_finite = conj_pairs(to_pairs(
        complex_joint_point_spectrum({t1r.adjoint().eval(), t2r.adjoint().eval()}, tol)));
    return s;
}

PairSpectrumSet pair_joint_spectrum(const BCMatrix& t1, const BCMatrix& t2,
                                    const Tolerances& tol) {
    const PairSpectrumSet pt = pair_point_spectrum(t1, t2, tol);
    const PairSpectrumSet rs = pair_residual_spectrum(t1, t2, tol);
    PairSpectrumSet s;
    s.kind = SpectrumKind::joint;
    s.left_finite = merge_pairs(pt.left_finite, rs.left_finite, tol.match);
    s.right_finite = merge_pairs(pt.right_finite, rs.right_finite, tol.match);
    return s;
}

}  // namespace bcspec
