#include <doctest.h>

#include <cmath>

#include "bcspec/matrix.hpp"
#include "bcspec/rng.hpp"
#include "bcspec/verify.hpp"

using namespace bcspec;

TEST_CASE("split and join") {
    const BCMatrix id = BCMatrix::identity(3);
    const auto [il, ir] = id.split();
    CHECK((il - ComplexMatrix::Identity(3, 3)).norm() == 0.0);
    CHECK((ir - ComplexMatrix::Identity(3, 3)).norm() == 0.0);

    // k = e1 - e2, so k*I splits to (I, -I)
    const BCMatrix kid = BiComplex::k() * BCMatrix::identity(2);
    const auto [kl, kr] = kid.split();
    CHECK((kl - ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
    CHECK((kr + ComplexMatrix::Identity(2, 2)).norm() < 1e-15);

    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        const BCMatrix m = random_bc_matrix(rng, 4, 3);
        const auto [l, r] = m.split();
        CHECK((BCMatrix::join(l, r) - m).frobenius_norm() <=
              1e-12 * std::max(1.0, m.frobenius_norm()));
    }

    CHECK_THROWS_AS(BCMatrix::join(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 2)),
                    DimensionMismatch);
}

TEST_CASE("products commute with the split") {
    Rng rng(43);
    for (int t = 0; t < 30; ++t) {
        const BCMatrix a = random_bc_matrix(rng, 4, 4);
        const BCMatrix b = random_bc_matrix(rng, 4, 4);
        const auto [al, ar] = a.split();
        const auto [bl, br] = b.split();
        const auto [pl, pr] = (a * b).split();
        const double scale = std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
        CHECK((pl - al * bl).norm() <= 1e-12 * scale);
        CHECK((pr - ar * br).norm() <= 1e-12 * scale);
    }

    const BCMatrix i4 = BCMatrix::identity(4);
    Rng rng2(44);
    const BCMatrix b2 = random_bc_matrix(rng2, 4, 4);
    CHECK((i4 * b2 - b2).frobenius_norm() == 0.0);

    // zero-divisor annihilation
    const BCMatrix p1 = BiComplex::e1() * BCMatrix::identity(3);
    const BCMatrix p2 = BiComplex::e2() * BCMatrix::identity(3);
    CHECK((p1 * p2).frobenius_norm() == 0.0);

    CHECK_THROWS_AS(BCMatrix::zero(2, 3) * BCMatrix::zero(2, 3), DimensionMismatch);
}

TEST_CASE("adjoint") {
    const BCMatrix id = BCMatrix::identity(3);
    CHECK((id.adjoint() - id).frobenius_norm() == 0.0);

    const BCMatrix ji = BiComplex::j() * BCMatrix::identity(2);
    CHECK((ji.adjoint() + ji).frobenius_norm() == 0.0);  // star(j) = -j

    Rng rng(47);
    for (int t = 0; t < 30; ++t) {
        const BCMatrix m = random_bc_matrix(rng, 3, 4);
        CHECK((m.adjoint().adjoint() - m).frobenius_norm() == 0.0);
        // adjoint defines the inner-product transpose
        BCVector x(4), y(3);
        for (Index i = 0; i < 4; ++i) x[i] = random_bicomplex(rng);
        for (Index i = 0; i < 3; ++i) y[i] = random_bicomplex(rng);
        const BiComplex lhs = bc_inner(m * x, y);
        const BiComplex rhs = bc_inner(x, m.adjoint() * y);
        CHECK(euclid_norm(lhs - rhs) <= 1e-12 * std::max(1.0, euclid_norm(lhs)));
    }
}

TEST_CASE("inner product") {
    BCVector e(3);
    e[0] = BiComplex::one();
    CHECK(euclid_norm(bc_inner(e, e) - BiComplex::one()) == 0.0);

    Rng rng(53);
    for (int t = 0; t < 50; ++t) {
        BCVector x(3), y(3);
        for (Index i = 0; i < 3; ++i) {
            x[i] = random_bicomplex(rng);
            y[i] = random_bicomplex(rng);
        }
        const BiComplex alpha = random_bicomplex(rng);
        CHECK(euclid_norm(bc_inner(alpha * x, y) - alpha * bc_inner(x, y)) <=
              1e-12 * std::max(1.0, euclid_norm(alpha * bc_inner(x, y))));
        CHECK(euclid_norm(bc_inner(x, y) - star(bc_inner(y, x))) <= 1e-13);
        CHECK(hyper_norm(bc_inner(x, x)).in_d_plus());

        // x supported on e1 only: <x, x> has no e2 component
        BCVector xe1(3);
        for (Index i = 0; i < 3; ++i) xe1[i] = BiComplex::e1() * random_bicomplex(rng);
        const IdempotentPair ip = to_idempotent(bc_inner(xe1, xe1));
        CHECK(std::abs(ip.beta2) <= 1e-14);
    }
    CHECK_THROWS_AS(bc_inner(BCVector(2), BCVector(3)), DimensionMismatch);
}

TEST_CASE("vector norm") {
    CHECK(vector_norm(BCVector(3)) == 0.0);

    // x = e1 * u for a complex unit vector u: ||x1|| = 1, ||x2|| = 0
    BCVector x(2);
    x[0] = BiComplex::e1() * BiComplex(Complex(0.6, 0.0));
    x[1] = BiComplex::e1() * BiComplex(Complex(0.8, 0.0));
    CHECK(vector_norm(x) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    // both component norms 1
    BCVector y(1);
    y[0] = from_idempotent({Complex(1.0, 0.0), Complex(0.0, 1.0)});
    CHECK(vector_norm(y) == doctest::Approx(1.0).epsilon(1e-14));

    // scalar action scales the component norms by |beta1|, |beta2|
    Rng rng(59);
    for (int t = 0; t < 30; ++t) {
        BCVector v(3);
        for (Index i = 0; i < 3; ++i) v[i] = random_bicomplex(rng);
        const BiComplex z = random_bicomplex(rng);
        const IdempotentPair pz = to_idempotent(z);
        const auto [v1, v2] = v.split();
        const double expect = std::sqrt(0.5 * (std::norm(pz.beta1) * v1.squaredNorm() +
                                               std::norm(pz.beta2) * v2.squaredNorm()));
        CHECK(vector_norm(z * v) == doctest::Approx(expect).epsilon(1e-12));
        CHECK((vector_norm(v) == 0.0) == (v1.norm() == 0.0 && v2.norm() == 0.0));
    }
}

TEST_CASE("commutation test") {
    const BCMatrix id = BCMatrix::identity(2);
    BCMatrix d(2, 2);
    d(0, 0) = BiComplex(1.0);
    d(1, 1) = BiComplex(2.0);
    CHECK(is_commuting_tuple({id, d}));

    Rng rng(61);
    const BCMatrix a = random_bc_matrix(rng, 3, 3);
    CHECK(is_commuting_tuple({a, a * a}));

    // classic non-commuting pair, embedded with equal components
    ComplexMatrix up = ComplexMatrix::Zero(2, 2), lo = ComplexMatrix::Zero(2, 2);
    up(0, 1) = 1.0;
    lo(1, 0) = 1.0;
    double resid = 0.0;
    CHECK_FALSE(is_commuting_tuple({BCMatrix::embed(up), BCMatrix::embed(lo)}, {}, &resid));
    CHECK(resid > 0.1);
}

TEST_CASE("invertibility and unitarity") {
    CHECK_FALSE(is_invertible(BiComplex::e1() * BCMatrix::identity(3)));
    CHECK(is_invertible(BCMatrix::identity(3)));

    // Z = 1 + j has beta components 1 -+ i, both of modulus sqrt(2)
    const BCMatrix m = (BiComplex::one() + BiComplex::j()) * BCMatrix::identity(2);
    CHECK(is_invertible(m));
    const BCMatrix minv = inverse(m);
    CHECK((m * minv - BCMatrix::identity(2)).frobenius_norm() <= 1e-10);

    CHECK_THROWS_AS(inverse(BiComplex::e1() * BCMatrix::identity(2)), ZeroDivisor);

    Rng rng(67);
    for (int t = 0; t < 20; ++t) {
        const BCMatrix u = BCMatrix::join(random_unitary(rng, 3), random_unitary(rng, 3));
        CHECK(is_unitary(u));
        CHECK(is_invertible(u));
        const BCMatrix g = random_bc_matrix(rng, 3, 3);
        if (is_invertible(g))
            CHECK((g * inverse(g) - BCMatrix::identity(3)).frobenius_norm() <= 1e-10);
    }
    CHECK_FALSE(is_unitary(BiComplex(2.0) * BCMatrix::identity(2)));
}
