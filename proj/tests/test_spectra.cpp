#include <doctest.h>

#include <cmath>
#include <complex>

#include "bcspec/spectra.hpp"
#include "bcspec/verify.hpp"
#include "support/oracles.hpp"

using namespace bcspec;

namespace {

ComplexMatrix diag2(const Complex& a, const Complex& b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

BCMatrix scalar_matrix(const BiComplex& z) {
    BCMatrix m(1, 1);
    m(0, 0) = z;
    return m;
}

const BiComplex kE1 = BiComplex::e1();
const BiComplex kE2 = BiComplex::e2();

}  // namespace

TEST_CASE("complex joint point spectrum of diagonal tuples") {
    const auto eigs = complex_joint_point_spectrum({diag2(1.0, 2.0), diag2(3.0, 4.0)});
    REQUIRE(eigs.size() == 2);
    CHECK(std::abs(eigs[0].lambdas[0] - Complex(1.0)) < 1e-12);
    CHECK(std::abs(eigs[0].lambdas[1] - Complex(3.0)) < 1e-12);
    CHECK(std::abs(eigs[1].lambdas[0] - Complex(2.0)) < 1e-12);
    CHECK(std::abs(eigs[1].lambdas[1] - Complex(4.0)) < 1e-12);
    for (const auto& e : eigs) CHECK(e.residual < 1e-12);
}

TEST_CASE("identity pair has one joint eigenvalue with full eigenspace") {
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const auto eigs = complex_joint_point_spectrum({id, id});
    REQUIRE(eigs.size() == 1);
    CHECK(std::abs(eigs[0].lambdas[0] - Complex(1.0)) < 1e-12);
    CHECK(std::abs(eigs[0].lambdas[1] - Complex(1.0)) < 1e-12);
}

TEST_CASE("defective single matrix") {
    ComplexMatrix jordan(2, 2);
    jordan << Complex(2.0), Complex(1.0), Complex(0.0), Complex(2.0);
    const auto eigs = complex_joint_point_spectrum({jordan});
    REQUIRE(eigs.size() == 1);
    CHECK(std::abs(eigs[0].lambdas[0] - Complex(2.0)) < 1e-10);
    // the only eigendirection is (1, 0), up to phase
    CHECK(std::abs(eigs[0].vec(1)) < 1e-10);
    CHECK(std::abs(std::abs(eigs[0].vec(0)) - 1.0) < 1e-10);
}

TEST_CASE("joint spectrum preconditions") {
    ComplexMatrix up = ComplexMatrix::Zero(2, 2), lo = ComplexMatrix::Zero(2, 2);
    up(0, 1) = 1.0;
    lo(1, 0) = 1.0;
    CHECK_THROWS_AS(complex_joint_point_spectrum({up, lo}), NotCommuting);
    CHECK_THROWS_AS(complex_joint_point_spectrum({ComplexMatrix::Zero(2, 3)}), NotSquare);
    CHECK_THROWS_AS(bc_joint_point_spectrum({}), Error);
}

TEST_CASE("implementation agrees with the brute-force oracle") {
    Rng rng(101);
    for (int t = 0; t < 25; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));
        const int m = 1 + static_cast<int>(rng.integer(3));
        const auto mats = random_commuting_tuple(rng, d, m);
        std::vector<ComplexMatrix> lefts;
        for (const auto& a : mats) lefts.push_back(a.split().first);

        const auto found = complex_joint_point_spectrum(lefts);
        std::vector<std::vector<Complex>> got;
        for (const auto& e : found) got.push_back(e.lambdas);
        const auto expected = oracles::brute_force_joint_tuples(lefts, 1e-7, 1e-7);
        CHECK(oracles::tuple_sets_equal(got, expected, 1e-7));
    }
}

TEST_CASE("bicomplex joint point spectrum, diagonal demo") {
    const BCMatrix a = BCMatrix::join(diag2(1.0, 2.0), diag2(3.0, 4.0));
    const SpectrumSet s = bc_joint_point_spectrum({a});
    REQUIRE(s.left_finite.size() == 2);
    REQUIRE(s.right_finite.size() == 2);
    CHECK(std::abs(s.left_finite[0][0] - Complex(1.0)) < 1e-12);
    CHECK(std::abs(s.left_finite[1][0] - Complex(2.0)) < 1e-12);
    CHECK(std::abs(s.right_finite[0][0] - Complex(3.0)) < 1e-12);
    CHECK(std::abs(s.right_finite[1][0] - Complex(4.0)) < 1e-12);

    // membership of 1*e1 + w*e2 for arbitrary w, small and far
    for (const Complex w : {Complex(0.0), Complex(2.5, -7.0), Complex(1e6, 1e6)}) {
        const BiComplex lambda = from_idempotent({Complex(1.0), w});
        CHECK(s.contains({lambda}));
    }
    CHECK(s.unbounded());
    // a point with both projections off the finite parts is not a member
    CHECK_FALSE(s.contains({from_idempotent({Complex(7.0), Complex(8.0)})}));

    const SpectrumSet sid = bc_joint_point_spectrum(
        {BCMatrix::identity(2), BCMatrix::identity(2)});
    REQUIRE(sid.left_finite.size() == 1);
    CHECK(std::abs(sid.left_finite[0][0] - Complex(1.0)) < 1e-12);
    CHECK(std::abs(sid.left_finite[0][1] - Complex(1.0)) < 1e-12);
}

TEST_CASE("split-shape membership matches the direct oracle on a grid") {
    // m = 1, d = 2; the grid crosses both finite parts and far points
    const BCMatrix a = BCMatrix::join(diag2(Complex(1.0, 1.0), Complex(-2.0, 0.5)),
                                      diag2(Complex(0.0, -1.0), Complex(3.0, 0.0)));
    const SpectrumSet s = bc_joint_point_spectrum({a});
    std::vector<Complex> grid;
    for (double re : {-2.0, 0.0, 1.0, 3.0})
        for (double im : {-1.0, 0.0, 0.5, 1.0}) grid.emplace_back(re, im);
    grid.emplace_back(1e6, 0.0);
    grid.emplace_back(-1e6, 1e6);

    int members = 0;
    for (const Complex& g1 : grid) {
        for (const Complex& g2 : grid) {
            const std::vector<BiComplex> lambda = {from_idempotent({g1, g2})};
            const bool direct = oracles::direct_membership({a}, lambda, 1e-8);
            const bool via_set = s.contains(lambda);
            CHECK(direct == via_set);
            members += via_set ? 1 : 0;
        }
    }
    CHECK(members > 0);
    // unboundedness: far free side stays inside
    CHECK(s.contains({from_idempotent({Complex(1.0, 1.0), Complex(1e6, -1e6)})}));
}

TEST_CASE("restricted spectrum, diagonal pairing") {
    const BCMatrix a = BCMatrix::join(diag2(1.0, 2.0), diag2(3.0, 4.0));
    const RestrictedSpectrum rs = restricted_spectrum({a});
    REQUIRE(rs.points.size() == 2);
    CHECK(euclid_norm(rs.points[0][0] - (1.0 * kE1 + 3.0 * kE2)) < 1e-10);
    CHECK(euclid_norm(rs.points[1][0] - (2.0 * kE1 + 4.0 * kE2)) < 1e-10);

    CHECK(rs.contains({1.0 * kE1 + 3.0 * kE2}));
    CHECK_FALSE(rs.contains({1.0 * kE1 + 4.0 * kE2}));
    // the set-sum reading admits cross pairings
    CHECK(rs.contains({1.0 * kE1 + 4.0 * kE2}, 1e-8, /*cross_pairing=*/true));
}

TEST_CASE("restricted spectrum of (I, k I)") {
    const std::vector<BCMatrix> mats = {scalar_matrix(BiComplex::one()),
                                        scalar_matrix(BiComplex::k())};
    const RestrictedSpectrum rs = restricted_spectrum(mats);
    REQUIRE(rs.points.size() == 1);
    CHECK(euclid_norm(rs.points[0][0] - BiComplex::one()) < 1e-12);
    CHECK(euclid_norm(rs.points[0][1] - (kE1 - kE2)) < 1e-12);
}

TEST_CASE("simultaneous triangularization") {
    Rng rng(103);
    SUBCASE("already triangular input") {
        ComplexMatrix t(3, 3);
        t << Complex(1.0), Complex(2.0), Complex(3.0), Complex(0.0), Complex(4.0), Complex(5.0),
            Complex(0.0), Complex(0.0), Complex(6.0);
        const auto tri = simultaneous_triangularize({BCMatrix::embed(t)});
        CHECK(is_unitary(tri.v));
        for (Index r = 0; r < 3; ++r)
            for (Index c = 0; c < r; ++c) CHECK(euclid_norm(tri.t[0](r, c)) < 1e-9);
    }

    SUBCASE("random commuting tuples") {
        for (int t = 0; t < 15; ++t) {
            const Index d = 2 + static_cast<Index>(rng.integer(4));  // 2..5
            const int m = 1 + static_cast<int>(rng.integer(3));
            const auto mats = random_commuting_tuple(rng, d, m);
            const auto tri = simultaneous_triangularize(mats);

            CHECK(is_unitary(tri.v));
            CHECK((tri.v.adjoint() * tri.v - BCMatrix::identity(d)).frobenius_norm() < 1e-10);

            for (size_t j = 0; j < mats.size(); ++j) {
                const BCMatrix w = tri.v * mats[j] * tri.v.adjoint();
                double low = 0.0;
                for (Index r = 0; r < d; ++r)
                    for (Index c = 0; c < r; ++c) low += std::pow(euclid_norm(w(r, c)), 2);
                CHECK(std::sqrt(low) <= 1e-9 * mats[j].frobenius_norm());

                // diagonal multisets = component eigenvalues
                const auto [wl, wr] = tri.t[j].split();
                const auto [al, ar] = mats[j].split();
                std::vector<Complex> dl, dr, el, er;
                for (Index i = 0; i < d; ++i) {
                    dl.push_back(wl(i, i));
                    dr.push_back(wr(i, i));
                }
                const Eigen::ComplexEigenSolver<ComplexMatrix> esl(al, false), esr(ar, false);
                for (Index i = 0; i < d; ++i) {
                    el.push_back(esl.eigenvalues()(i));
                    er.push_back(esr.eigenvalues()(i));
                }
                CHECK(oracles::multisets_match(dl, el, 1e-8));
                CHECK(oracles::multisets_match(dr, er, 1e-8));
            }
        }
    }

    SUBCASE("non-commuting input is rejected") {
        ComplexMatrix up = ComplexMatrix::Zero(2, 2), lo = ComplexMatrix::Zero(2, 2);
        up(0, 1) = 1.0;
        lo(1, 0) = 1.0;
        CHECK_THROWS_AS(simultaneous_triangularize({BCMatrix::embed(up), BCMatrix::embed(lo)}),
                        NotCommuting);
    }
}

TEST_CASE("restricted spectrum is unitarily invariant") {
    Rng rng(107);
    for (int t = 0; t < 10; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));
        const auto mats = random_commuting_tuple(rng, d, 2);
        const BCMatrix u = BCMatrix::join(random_unitary(rng, d), random_unitary(rng, d));
        std::vector<BCMatrix> rotated;
        for (const auto& a : mats) rotated.push_back(u * a * u.adjoint());

        const RestrictedSpectrum rs0 = restricted_spectrum(mats);
        const RestrictedSpectrum rs1 = restricted_spectrum(rotated);
        REQUIRE(rs0.points.size() == rs1.points.size());
        // equal as multisets of diagonal points, up to re-pairing across
        // positions we only require every point of one to appear in the other
        for (const auto& pt : rs0.points) CHECK(rs1.contains(pt, 1e-7));
        for (const auto& pt : rs1.points) CHECK(rs0.contains(pt, 1e-7));
    }
}

TEST_CASE("tuple norm") {
    CHECK(tuple_norm({BiComplex::zero(), BiComplex::zero()}, 2.0) == 0.0);

    const BiComplex lam = 3.0 * kE1 + 5.0 * kE2;
    CHECK(tuple_norm({lam}, 2.0) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK(tuple_norm({kE1, kE2}, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(tuple_norm({lam}, 0.5), BadExponent);
}

TEST_CASE("geometric spectral radius") {
    const std::vector<BCMatrix> single = {scalar_matrix(3.0 * kE1 + 5.0 * kE2)};
    CHECK(geometric_spectral_radius(single, 2.0) == doctest::Approx(2.0).epsilon(1e-12));

    for (const double p : {1.0, 2.0, 3.0}) {
        const double expect = std::pow(2.0, 1.0 / (2.0 * p));
        CHECK(geometric_spectral_radius({BCMatrix::identity(3), BCMatrix::identity(3)}, p) ==
              doctest::Approx(expect).epsilon(1e-12));
    }

    CHECK(geometric_spectral_radius({BCMatrix::zero(2, 2)}, 2.0) == 0.0);
}

TEST_CASE("operator tuple norm") {
    const std::vector<BCMatrix> single = {scalar_matrix(3.0 * kE1 + 5.0 * kE2)};
    const OperatorNormReport rep = operator_tuple_norm(single, 2.0);
    CHECK(rep.exact);
    CHECK(rep.value() == doctest::Approx(2.0).epsilon(1e-12));

    CHECK(operator_tuple_norm({BCMatrix::zero(3, 3)}, 2.0).value() == 0.0);

    Rng rng(109);
    SUBCASE("p = 2 equals the sampled supremum up to a small gap") {
        const auto mats = random_commuting_tuple(rng, 3, 2);
        std::vector<ComplexMatrix> lefts;
        for (const auto& a : mats) lefts.push_back(a.split().first);
        const NormBracket nb = component_tuple_norm(lefts, 2.0);
        double sampled = 0.0;
        for (int s = 0; s < 10000; ++s) {
            ComplexVector x(3);
            for (Index i = 0; i < 3; ++i) x(i) = rng.cnormal();
            x.normalize();
            double acc = 0.0;
            for (const auto& a : lefts) acc += (a * x).squaredNorm();
            sampled = std::max(sampled, std::sqrt(acc));
        }
        CHECK(sampled <= nb.value() * (1.0 + 1e-12));
        CHECK(sampled >= nb.value() * 0.95);
    }

    SUBCASE("p != 2 brackets are ordered and contain the sampled value") {
        for (const double p : {1.0, 3.0}) {
            const auto mats = random_commuting_tuple(rng, 3, 2);
            const OperatorNormReport r = operator_tuple_norm(mats, p);
            CHECK_FALSE(r.exact);
            CHECK(r.lower <= r.upper * (1.0 + 1e-12));
            CHECK(r.lower > 0.0);
        }
    }

    CHECK_THROWS_AS(operator_tuple_norm(single, 0.9), BadExponent);
}

TEST_CASE("radius bound") {
    const std::vector<BCMatrix> single = {scalar_matrix(3.0 * kE1 + 5.0 * kE2)};
    const RadiusBoundReport eq = check_radius_bound(single, 2.0);
    CHECK(eq.holds);
    CHECK(eq.r_p == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(eq.norm_p == doctest::Approx(2.0).epsilon(1e-12));

    // nilpotent single matrix, embedded: r = 0 <= ||T|| = 1
    ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
    nil(0, 1) = 1.0;
    const RadiusBoundReport nr = check_radius_bound({BCMatrix::embed(nil)}, 2.0);
    CHECK(nr.holds);
    CHECK(nr.r_p <= 1e-10);
    CHECK(nr.norm_p == doctest::Approx(1.0).epsilon(1e-12));

    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        const auto mats = random_commuting_tuple(rng, 1 + static_cast<Index>(rng.integer(4)),
                                                 1 + static_cast<int>(rng.integer(3)));
        for (const double p : {1.0, 2.0, 3.0}) CHECK(check_radius_bound(mats, p).holds);
    }
}

TEST_CASE("repeated eigenvalues split along later tuple members") {
    // A1 = diag(0, 0, 2) has a two-dimensional eigenspace at 0 that
    // A2 = diag(0, 1, 2) separates
    ComplexMatrix a1 = ComplexMatrix::Zero(3, 3), a2 = ComplexMatrix::Zero(3, 3);
    a1(2, 2) = 2.0;
    a2(1, 1) = 1.0;
    a2(2, 2) = 2.0;
    const auto eigs = complex_joint_point_spectrum({a1, a2});
    REQUIRE(eigs.size() == 3);
    CHECK(std::abs(eigs[0].lambdas[0]) < 1e-10);
    CHECK(std::abs(eigs[0].lambdas[1]) < 1e-10);
    CHECK(std::abs(eigs[1].lambdas[0]) < 1e-10);
    CHECK(std::abs(eigs[1].lambdas[1] - Complex(1.0)) < 1e-10);
    CHECK(std::abs(eigs[2].lambdas[0] - Complex(2.0)) < 1e-10);
    CHECK(std::abs(eigs[2].lambdas[1] - Complex(2.0)) < 1e-10);

    // under a random unitary similarity as well
    Rng rng(65537);
    const ComplexMatrix u = random_unitary(rng, 3);
    const auto eigs2 = complex_joint_point_spectrum(
        {(u * a1 * u.adjoint()).eval(), (u * a2 * u.adjoint()).eval()});
    std::vector<std::vector<Complex>> got;
    for (const auto& e : eigs2) got.push_back(e.lambdas);
    CHECK(oracles::tuple_sets_equal(got, {{0.0, 0.0}, {0.0, 1.0}, {2.0, 2.0}}, 1e-8));
}

TEST_CASE("fully defective matrix under unitary similarity") {
    // A rotated 3x3 Jordan block. A defective eigenvalue of index k can
    // only be located to about eps^(1/k) by any backward-stable method,
    // so the search may report up to k eigenpairs scattered at that
    // radius; each one is still a genuine eigenpair with a tiny residual.
    ComplexMatrix j3 = ComplexMatrix::Zero(3, 3);
    j3(0, 1) = 1.0;
    j3(1, 2) = 1.0;
    Rng rng(257);
    const ComplexMatrix u = random_unitary(rng, 3);
    const ComplexMatrix a = u * j3 * u.adjoint();

    const auto eigs = complex_joint_point_spectrum({a});
    REQUIRE(eigs.size() >= 1);
    CHECK(eigs.size() <= 3);
    for (const auto& e : eigs) {
        CHECK(std::abs(e.lambdas[0]) < 1e-4);
        CHECK(e.residual < 1e-10);
    }

    const auto tri = simultaneous_triangularize({BCMatrix::embed(a)});
    CHECK(is_unitary(tri.v));
    const BCMatrix w = tri.v * BCMatrix::embed(a) * tri.v.adjoint();
    for (Index r = 0; r < 3; ++r) {
        for (Index c = 0; c < r; ++c) CHECK(euclid_norm(w(r, c)) < 1e-9);
        CHECK(euclid_norm(w(r, r)) < 1e-4);
    }
}

TEST_CASE("classical quantities appear squared for embedded complex matrices") {
    // m = 1, both split components equal: the restricted points are the
    // eigenvalues themselves, and under the squared tuple norm
    // r_2(T)^2 is the classical spectral radius while ||T||_2^2 is the
    // classical operator 2-norm.
    Rng rng(131071);
    for (int t = 0; t < 10; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));
        // a normal matrix: unitary conjugation of a diagonal
        const ComplexMatrix u = random_unitary(rng, d);
        ComplexMatrix diag = ComplexMatrix::Zero(d, d);
        for (Index i = 0; i < d; ++i) diag(i, i) = rng.cnormal();
        const ComplexMatrix n = u * diag * u.adjoint();

        double classical_radius = 0.0;
        for (Index i = 0; i < d; ++i)
            classical_radius = std::max(classical_radius, std::abs(diag(i, i)));
        const double classical_norm =
            Eigen::JacobiSVD<ComplexMatrix>(n).singularValues()(0);

        const std::vector<BCMatrix> tup = {BCMatrix::embed(n)};
        const double r2 = geometric_spectral_radius(tup, 2.0);
        const double n2 = operator_tuple_norm(tup, 2.0).value();
        CHECK(r2 * r2 == doctest::Approx(classical_radius).epsilon(1e-10));
        CHECK(n2 * n2 == doctest::Approx(classical_norm).epsilon(1e-10));
        // normal matrices sit at equality
        CHECK(r2 == doctest::Approx(n2).epsilon(1e-10));
    }
}

TEST_CASE("triangular diagonal tuples coincide with the joint point spectrum") {
    // not addressed by the theory for every commuting tuple; computed and
    // compared here so a discrepancy would surface as a failure
    Rng rng(524287);
    for (int t = 0; t < 15; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));
        const int m = 1 + static_cast<int>(rng.integer(3));
        const auto mats = random_commuting_tuple(rng, d, m);
        const SpectrumSet s = bc_joint_point_spectrum(mats);
        const RestrictedSpectrum rs = restricted_spectrum(mats);

        std::vector<std::vector<Complex>> diag_left, diag_right;
        for (size_t i = 0; i < rs.points.size(); ++i) {
            diag_left.push_back(rs.left_projection(i));
            diag_right.push_back(rs.right_projection(i));
        }
        CHECK(oracles::tuple_sets_equal(diag_left, s.left_finite, 1e-7));
        CHECK(oracles::tuple_sets_equal(diag_right, s.right_finite, 1e-7));
    }
}

TEST_CASE("non-emptiness on random commuting tuples") {
    Rng rng(127);
    for (int t = 0; t < 20; ++t) {
        const auto mats = random_commuting_tuple(rng, 2 + static_cast<Index>(rng.integer(3)),
                                                 1 + static_cast<int>(rng.integer(3)));
        const SpectrumSet s = bc_joint_point_spectrum(mats);
        CHECK_FALSE(s.left_finite.empty());
        CHECK_FALSE(s.right_finite.empty());
    }
}
