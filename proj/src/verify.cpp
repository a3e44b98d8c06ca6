#include "bcspec/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace bcspec {

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

double bc_rel_err(const BiComplex& got, const BiComplex& want) {
    return euclid_norm(got - want) / std::max(1.0, euclid_norm(want));
}

double tuple_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

double distance_to_set(const std::vector<std::vector<Complex>>& fin,
                       const std::vector<Complex>& probe) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : fin) best = std::min(best, tuple_distance(t, probe));
    return best;
}

std::vector<BiComplex> join_tuple(const std::vector<Complex>& left,
                                  const std::vector<Complex>& right) {
    std::vector<BiComplex> out;
    out.reserve(left.size());
    for (size_t i = 0; i < left.size(); ++i)
        out.push_back(from_idempotent(IdempotentPair{left[i], right[i]}));
    return out;
}

// Direct eigenvector-existence test: a nonzero bicomplex x with
// A_i x = lambda_i x exists iff one of the split stacked matrices
// [A_i - mu_i I] is singular. Independent of the recursive search.
bool direct_membership_oracle(const std::vector<ComplexMatrix>& lefts,
                              const std::vector<ComplexMatrix>& rights,
                              const std::vector<BiComplex>& lambda, double tau,
                              double* witnessed_ratio = nullptr) {
    const auto side_singular = [tau](const std::vector<ComplexMatrix>& mats,
                                     const std::vector<Complex>& mu, double* ratio) {
        const Index d = mats[0].rows();
        const auto m = static_cast<Index>(mats.size());
        ComplexMatrix stack(m * d, d);
        for (Index j = 0; j < m; ++j)
            stack.middleRows(j * d, d) =
                mats[static_cast<size_t>(j)] -
                mu[static_cast<size_t>(j)] * ComplexMatrix::Identity(d, d);
        const Eigen::JacobiSVD<ComplexMatrix> svd(stack);
        const auto& sv = svd.singularValues();
        const double smin = sv(sv.size() - 1);
        const double scale = std::max(1.0, sv(0));
        if (ratio) *ratio = smin / scale;
        return smin <= tau * scale;
    };

    std::vector<Complex> mu, ga;
    for (const auto& z : lambda) {
        const IdempotentPair p = to_idempotent(z);
        mu.push_back(p.beta1);
        ga.push_back(p.beta2);
    }
    double rl = 0.0, rr = 0.0;
    const bool left = side_singular(lefts, mu, &rl);
    const bool right = side_singular(rights, ga, &rr);
    if (witnessed_ratio) *witnessed_ratio = std::min(rl, rr);
    return left || right;
}

// Enumerates all eigenvalue pairs of (a, b) and keeps those with a common
// eigenvector, decided by the stacked smallest singular value.
std::vector<std::array<Complex, 2>> brute_force_joint_pairs(const ComplexMatrix& a,
                                                            const ComplexMatrix& b,
                                                            double tau) {
    const Index d = a.rows();
    const Eigen::ComplexEigenSolver<ComplexMatrix> ea(a, false), eb(b, false);
    std::vector<std::array<Complex, 2>> out;
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            const Complex la = ea.eigenvalues()(i);
            const Complex lb = eb.eigenvalues()(j);
            ComplexMatrix stack(2 * d, d);
            stack.topRows(d) = a - la * ComplexMatrix::Identity(d, d);
            stack.bottomRows(d) = b - lb * ComplexMatrix::Identity(d, d);
            const Eigen::JacobiSVD<ComplexMatrix> svd(stack);
            const auto& sv = svd.singularValues();
            if (sv(sv.size() - 1) <= tau * std::max(1.0, sv(0))) {
                bool dup = false;
                for (const auto& p : out)
                    dup = dup || (std::abs(p[0] - la) <= tau && std::abs(p[1] - lb) <= tau);
                if (!dup) out.push_back({la, lb});
            }
        }
    }
    return out;
}

bool pair_sets_equal(const std::vector<std::array<Complex, 2>>& a,
                     const std::vector<std::array<Complex, 2>>& b, double tau) {
    const auto covered = [tau](const std::vector<std::array<Complex, 2>>& xs,
                               const std::vector<std::array<Complex, 2>>& ys) {
        for (const auto& x : xs) {
            bool hit = false;
            for (const auto& y : ys)
                hit = hit || (std::abs(x[0] - y[0]) <= tau && std::abs(x[1] - y[1]) <= tau);
            if (!hit) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

// Multiset match within tau (greedy bipartite, fine for well-separated values).
bool multiset_match(std::vector<Complex> a, std::vector<Complex> b, double tau) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        double best = std::numeric_limits<double>::infinity();
        size_t best_i = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            const double d = std::abs(x - b[i]);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        if (b.empty() || best > tau) return false;
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best_i));
    }
    return true;
}

// Base matrix with well-separated eigenvalues and a modestly conditioned
// eigenvector basis, so oracle margins in the property suite are meaningful.
ComplexMatrix random_base_matrix(Rng& rng, Index d) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        ComplexMatrix b = random_complex_matrix(rng, d, d) / std::sqrt(static_cast<double>(d));
        const Eigen::ComplexEigenSolver<ComplexMatrix> es(b, true);
        double gap = std::numeric_limits<double>::infinity();
        for (Index i = 0; i < d; ++i)
            for (Index j = i + 1; j < d; ++j)
                gap = std::min(gap, std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)));
        const Eigen::JacobiSVD<ComplexMatrix> svd(es.eigenvectors());
        const auto& sv = svd.singularValues();
        const double cond = sv(0) / std::max(sv(sv.size() - 1), 1e-300);
        if ((d == 1 || gap >= 0.1) && cond <= 1e3) return b;
    }
    return ComplexMatrix::Identity(d, d);  // unreachable in practice
}

std::vector<Complex> random_complex_tuple(Rng& rng, size_t m, double scale) {
    std::vector<Complex> t;
    for (size_t i = 0; i < m; ++i) t.push_back(scale * rng.cnormal());
    return t;
}

// Random tuple at distance >= margin from every element of fin.
std::vector<Complex> random_offset_tuple(Rng& rng, const std::vector<std::vector<Complex>>& fin,
                                         size_t m, double margin, double scale) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto t = random_complex_tuple(rng, m, scale);
        if (distance_to_set(fin, t) >= margin) return t;
    }
    // fall back to a far shift, always clear of a bounded finite set
    auto t = random_complex_tuple(rng, m, scale);
    for (auto& x : t) x += Complex(1e6, 1e6);
    return t;
}

}  // namespace

BiComplex random_bicomplex(Rng& rng, double scale) {
    return BiComplex(scale * rng.cnormal(), scale * rng.cnormal());
}

ComplexMatrix random_complex_matrix(Rng& rng, Index rows, Index cols) {
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
    return m;
}

ComplexMatrix random_unitary(Rng& rng, Index n) {
    const ComplexMatrix g = random_complex_matrix(rng, n, n);
    const Eigen::HouseholderQR<ComplexMatrix> qr(g);
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

BCMatrix random_bc_matrix(Rng& rng, Index rows, Index cols) {
    return BCMatrix::join(random_complex_matrix(rng, rows, cols),
                          random_complex_matrix(rng, rows, cols));
}

std::vector<BCMatrix> random_commuting_tuple(Rng& rng, Index d, int m) {
    const ComplexMatrix base_l = random_base_matrix(rng, d);
    const ComplexMatrix base_r = random_base_matrix(rng, d);
    const auto poly = [&](const ComplexMatrix& base) {
        ComplexMatrix acc = ComplexMatrix::Zero(d, d);
        ComplexMatrix power = ComplexMatrix::Identity(d, d);
        for (Index k = 0; k < d; ++k) {
            acc += rng.cnormal() * power;
            power = (power * base).eval();
        }
        const double n = acc.norm();
        if (n > 3.0) acc *= 3.0 / n;
        return acc;
    };
    std::vector<BCMatrix> mats;
    for (int i = 0; i < m; ++i) mats.push_back(BCMatrix::join(poly(base_l), poly(base_r)));
    return mats;
}

namespace {

PropertyResult prop_ring_idempotent(uint64_t seed, int trials, const Tolerances&) {
    PropertyResult res{"ring_idempotent", 0, 0, 0.0};
    Rng rng(seed);
    const BiComplex e1 = BiComplex::e1(), e2 = BiComplex::e2(), k = BiComplex::k();
    const auto check = [&](double err, double bound) {
        res.trials += 1;
        res.worst = std::max(res.worst, err);
        if (err > bound) res.failures += 1;
    };
    check(euclid_norm(e1 * e1 - e1), 0.0);
    check(euclid_norm(e2 * e2 - e2), 0.0);
    check(euclid_norm(e1 * e2), 0.0);
    check(euclid_norm(e1 + e2 - BiComplex::one()), 0.0);
    check(euclid_norm(e1 - e2 - k), 0.0);
    check(euclid_norm(k * k - BiComplex::one()), 0.0);

    for (int t = 0; t < trials * 10; ++t) {
        const BiComplex z = random_bicomplex(rng), w = random_bicomplex(rng);
        const IdempotentPair pz = to_idempotent(z), pw = to_idempotent(w);
        // idempotent decomposition is a ring homomorphism onto C x C
        const BiComplex prod_idem =
            from_idempotent(IdempotentPair{pz.beta1 * pw.beta1, pz.beta2 * pw.beta2});
        check(bc_rel_err(z * w, prod_idem), 1e-12);
        check(bc_rel_err(from_idempotent(pz), z), 1e-12);
        check(bc_rel_err(star(z * w), star(z) * star(w)), 1e-12);
        check(bc_rel_err(star(star(z)), z), 1e-12);
        check(bc_rel_err(star(z), dagger(bar(z))), 0.0);
        check(bc_rel_err(star(z), bar(dagger(z))), 0.0);
        try {
            check(bc_rel_err(invert(z) * z, BiComplex::one()), 1e-12);
        } catch (const Error&) {
            res.trials += 1;
            res.failures += 1;  // a random scalar is never a zero divisor
        }
        // partial order sanity
        const Hyperbolic hz = hyper_norm(z), hw = hyper_norm(w);
        res.trials += 1;
        if (d_plus_compare(hz, hz) != Ordering::equal) res.failures += 1;
        res.trials += 1;
        const Ordering ab = d_plus_compare(hz, hw), ba = d_plus_compare(hw, hz);
        const bool consistent =
            (ab == Ordering::equal) == (ba == Ordering::equal) &&
            ((ab == Ordering::less_or_equal) == (ba == Ordering::greater_or_equal));
        if (!consistent) res.failures += 1;
    }
    return res;
}

PropertyResult prop_hyper_norm(uint64_t seed, int trials, const Tolerances&) {
    PropertyResult res{"hyper_norm_axioms", 0, 0, 0.0};
    Rng rng(seed);
    const auto check = [&](bool ok, double err) {
        res.trials += 1;
        res.worst = std::max(res.worst, err);
        if (!ok) res.failures += 1;
    };
    check(hyper_norm(BiComplex::zero()) == Hyperbolic(0.0, 0.0), 0.0);
    for (int t = 0; t < trials * 10; ++t) {
        const BiComplex z = random_bicomplex(rng), w = random_bicomplex(rng);
        const Hyperbolic hz = hyper_norm(z), hw = hyper_norm(w), hzw = hyper_norm(z * w);
        const Hyperbolic prod = hz * hw;
        const double mult_err = std::max(rel_err(hzw.a1(), prod.a1()),
                                         rel_err(hzw.a2(), prod.a2()));
        check(mult_err <= 1e-12, mult_err);
        check(hz.in_d_plus(), 0.0);
        check(euclid_norm(z) > 0.0 ? (hz.a1() > 0.0 || hz.a2() > 0.0) : true, 0.0);
        const Ordering sub = d_plus_compare(hyper_norm(z + w), hz + hw);
        check(sub == Ordering::less_or_equal || sub == Ordering::equal, 0.0);
        const double euclid_err =
            rel_err(euclid_norm(z) * euclid_norm(z), 0.5 * (hz.a1() * hz.a1() + hz.a2() * hz.a2()));
        check(euclid_err <= 1e-12, euclid_err);
    }
    return res;
}

PropertyResult prop_split_homomorphism(uint64_t seed, int trials, const Tolerances&) {
    PropertyResult res{"split_homomorphism", 0, 0, 0.0};
    Rng rng(seed);
    const auto check = [&](double err, double bound) {
        res.trials += 1;
        res.worst = std::max(res.worst, err);
        if (err > bound) res.failures += 1;
    };
    for (int t = 0; t < trials; ++t) {
        const Index n = 2 + static_cast<Index>(rng.integer(4));  // 2..5
        const BCMatrix a = random_bc_matrix(rng, n, n), b = random_bc_matrix(rng, n, n);
        const auto [al, ar] = a.split();
        const auto [bl, br] = b.split();
        const double scale = std::max(1.0, a.frobenius_norm() * b.frobenius_norm());

        const auto [pl, pr] = (a * b).split();
        check((pl - al * bl).norm() / scale, 1e-12);
        check((pr - ar * br).norm() / scale, 1e-12);
        const auto [sl, sr] = (a + b).split();
        check((sl - (al + bl)).norm() / scale, 1e-12);
        check((sr - (ar + br)).norm() / scale, 1e-12);
        const auto [dl, dr] = a.adjoint().split();
        check((dl - al.adjoint()).norm() / scale, 1e-12);
        check((dr - ar.adjoint()).norm() / scale, 1e-12);
        const BiComplex z = random_bicomplex(rng);
        const IdempotentPair pz = to_idempotent(z);
        const auto [zl, zr] = (z * a).split();
        check((zl - pz.beta1 * al).norm() / scale, 1e-12);
        check((zr - pz.beta2 * ar).norm() / scale, 1e-12);
        check((BCMatrix::join(al, ar) - a).frobenius_norm() / scale, 1e-12);

        // inner product and adjoint compatibility
        BCVector x(n), y(n);
        for (Index i = 0; i < n; ++i) {
            x[i] = random_bicomplex(rng);
            y[i] = random_bicomplex(rng);
        }
        const auto [x1, x2] = x.split();
        const auto [y1, y2] = y.split();
        const BiComplex ip = bc_inner(x, y);
        // componentwise: <x, y> = <x1, y1> e1 + <x2, y2> e2
        const BiComplex ip_split =
            from_idempotent(IdempotentPair{y1.dot(x1), y2.dot(x2)});
        check(bc_rel_err(ip, ip_split), 1e-12);
        check(bc_rel_err(bc_inner(a * x, y), bc_inner(x, a.adjoint() * y)), 1e-11);
        check(std::abs(vector_norm(x) -
                       std::sqrt(0.5 * (x1.squaredNorm() + x2.squaredNorm()))),
              1e-12);
        check(hyper_norm(bc_inner(x, x)).in_d_plus() ? 0.0 : 1.0, 0.5);
    }
    return res;
}

PropertyResult prop_membership_oracle(uint64_t seed, int trials, const Tolerances& tol) {
    PropertyResult res{"membership_oracle_agreement", 0, 0, 0.0};
    Rng rng(seed);
    const double tau_oracle = 1e-7;
    const int tuples = std::max(1, trials / 2);
    for (int t = 0; t < tuples; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));  // 2..4
        const int m = 1 + static_cast<int>(rng.integer(3));      // 1..3
        const auto mats = random_commuting_tuple(rng, d, m);
        const SpectrumSet s = bc_joint_point_spectrum(mats, tol);

        res.trials += 1;
        if (s.left_finite.empty() || s.right_finite.empty()) {
            res.failures += 1;  // non-emptiness (commuting tuple)
            continue;
        }

        std::vector<ComplexMatrix> lefts, rights;
        for (const auto& a : mats) {
            auto [l, r] = a.split();
            lefts.push_back(std::move(l));
            rights.push_back(std::move(r));
        }

        std::vector<std::vector<BiComplex>> probes;
        const size_t mm = static_cast<size_t>(m);
        for (size_t i = 0; i < s.left_finite.size() && i < 4; ++i) {
            probes.push_back(join_tuple(s.left_finite[i], random_complex_tuple(rng, mm, 1.0)));
            probes.push_back(join_tuple(s.left_finite[i], random_complex_tuple(rng, mm, 1e6)));
        }
        for (size_t i = 0; i < s.right_finite.size() && i < 4; ++i) {
            probes.push_back(join_tuple(random_complex_tuple(rng, mm, 1.0), s.right_finite[i]));
            probes.push_back(join_tuple(random_complex_tuple(rng, mm, 1e6), s.right_finite[i]));
        }
        for (int k = 0; k < 3; ++k) {
            probes.push_back(join_tuple(random_offset_tuple(rng, s.left_finite, mm, 0.5, 2.0),
                                        random_offset_tuple(rng, s.right_finite, mm, 0.5, 2.0)));
        }
        probes.push_back(join_tuple(random_complex_tuple(rng, mm, 1e6),
                                    random_complex_tuple(rng, mm, 1e6)));

        for (const auto& probe : probes) {
            res.trials += 1;
            double ratio = 0.0;
            const bool direct = direct_membership_oracle(lefts, rights, probe, tau_oracle, &ratio);
            const bool via_set = s.contains(probe, tol.match);
            if (via_set) res.worst = std::max(res.worst, ratio);
            if (direct != via_set) res.failures += 1;
        }
    }
    return res;
}

PropertyResult prop_triangularization(uint64_t seed, int trials, const Tolerances& tol) {
    PropertyResult res{"triangularization", 0, 0, 0.0};
    Rng rng(seed);
    const int tuples = std::max(1, trials / 2);
    for (int t = 0; t < tuples; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));
        const int m = 1 + static_cast<int>(rng.integer(3));
        const auto mats = random_commuting_tuple(rng, d, m);
        const Triangularization tri = simultaneous_triangularize(mats, tol);

        res.trials += 1;
        const BCMatrix gram = tri.v.adjoint() * tri.v - BCMatrix::identity(d);
        const double udev = gram.frobenius_norm();
        res.worst = std::max(res.worst, udev);
        if (udev > 1e-10 || !is_unitary(tri.v, tol)) res.failures += 1;

        for (size_t j = 0; j < mats.size(); ++j) {
            const BCMatrix w = tri.v * mats[j] * tri.v.adjoint();
            double low = 0.0;
            for (Index r = 0; r < d; ++r)
                for (Index c = 0; c < r; ++c) {
                    const double n = euclid_norm(w(r, c));
                    low += n * n;
                }
            low = std::sqrt(low);
            const double bound = tol.tri * std::max(1e-300, mats[j].frobenius_norm());
            res.trials += 1;
            if (low > bound) res.failures += 1;
            res.trials += 1;
            if ((w - tri.t[j]).frobenius_norm() > 1e-10 * std::max(1.0, mats[j].frobenius_norm()))
                res.failures += 1;

            // diagonal multisets match the component eigenvalues
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
            const double tau = tol.match * std::max(1.0, mats[j].frobenius_norm());
            res.trials += 1;
            if (!multiset_match(dl, el, tau) || !multiset_match(dr, er, tau)) res.failures += 1;
        }
    }
    return res;
}

PropertyResult prop_bound_chain(uint64_t seed, int trials, const Tolerances& tol) {
    PropertyResult res{"bound_chain", 0, 0, 0.0};
    Rng rng(seed);
    const int tuples = std::max(1, trials / 2);
    for (int t = 0; t < tuples; ++t) {
        const Index d = 1 + static_cast<Index>(rng.integer(4));  // 1..4
        const int m = 1 + static_cast<int>(rng.integer(3));
        const auto mats = random_commuting_tuple(rng, d, m);
        const RestrictedSpectrum rs = restricted_spectrum(mats, tol);
        for (const double p : {1.0, 2.0, 3.0}) {
            const double r_left = component_spectral_radius(rs, 0, p);
            const double r_right = component_spectral_radius(rs, 1, p);
            const OperatorNormReport norm = operator_tuple_norm(mats, p);
            const double mid = std::sqrt(0.5 * (r_left + r_right));

            for (const auto& pt : rs.points) {
                const double lam = tuple_norm(pt, p);
                res.trials += 1;
                res.worst = std::max(res.worst, lam - mid);
                if (lam > mid + tol.ineq) res.failures += 1;
            }
            res.trials += 1;
            res.worst = std::max(res.worst, mid - norm.upper);
            if (mid > norm.upper + tol.ineq) res.failures += 1;

            double r_p = 0.0;
            for (const auto& pt : rs.points) r_p = std::max(r_p, tuple_norm(pt, p));
            res.trials += 1;
            res.worst = std::max(res.worst, r_p - norm.upper);
            if (r_p > norm.upper + tol.ineq) res.failures += 1;
            // sampled lower bound never exceeds the reported enclosure
            res.trials += 1;
            if (norm.lower > norm.upper + tol.ineq) res.failures += 1;
        }
    }
    return res;
}

PropertyResult prop_pair_consistency(uint64_t seed, int trials, const Tolerances& tol) {
    PropertyResult res{"pair_consistency", 0, 0, 0.0};
    Rng rng(seed);
    const int pairs = std::max(1, trials / 2);
    for (int t = 0; t < pairs; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));
        const auto mats = random_commuting_tuple(rng, d, 2);
        const BCMatrix& t1 = mats[0];
        const BCMatrix& t2 = mats[1];
        const PairSpectrumSet pt = pair_point_spectrum(t1, t2, tol);
        // far free-side projections cost ~|beta|*eps of absolute precision
        // in the (z1, z2) representation; query at the matching threshold
        Tolerances qtol = tol;
        qtol.sing = std::max(tol.sing, 1e-8);

        const auto probe_side = [&](const std::vector<std::array<Complex, 2>>& fin, bool left) {
            for (size_t i = 0; i < fin.size() && i < 3; ++i) {
                for (const double far : {1.0, 1e6}) {
                    const Complex w1 = far * rng.cnormal(), w2 = far * rng.cnormal();
                    const BiComplex l1 = left
                        ? from_idempotent(IdempotentPair{fin[i][0], w1})
                        : from_idempotent(IdempotentPair{w1, fin[i][0]});
                    const BiComplex l2 = left
                        ? from_idempotent(IdempotentPair{fin[i][1], w2})
                        : from_idempotent(IdempotentPair{w2, fin[i][1]});
                    const MembershipReport joint = in_joint_spectrum(l1, l2, t1, t2, qtol);
                    const MembershipReport ap = in_approximate_point_spectrum(l1, l2, t1, t2, qtol);
                    res.trials += 1;
                    if (!joint.member || !ap.member) res.failures += 1;
                    const double ratio = left ? joint.smin_e1 / joint.scale_e1
                                              : joint.smin_e2 / joint.scale_e2;
                    res.worst = std::max(res.worst, ratio);
                }
            }
        };
        probe_side(pt.left_finite, true);
        probe_side(pt.right_finite, false);
    }
    return res;
}

PropertyResult prop_ap_inclusion(uint64_t seed, int trials, const Tolerances& tol) {
    PropertyResult res{"ap_inclusion", 0, 0, 0.0};
    Rng rng(seed);
    const int pairs = std::max(1, trials / 2);
    for (int t = 0; t < pairs; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));
        const auto mats = random_commuting_tuple(rng, d, 2);
        const BCMatrix& t1 = mats[0];
        const BCMatrix& t2 = mats[1];
        const PairSpectrumSet ap_set = pair_approximate_point_spectrum(t1, t2, tol);

        std::vector<std::pair<BiComplex, BiComplex>> probes;
        for (size_t i = 0; i < ap_set.left_finite.size() && i < 3; ++i)
            probes.emplace_back(
                from_idempotent(IdempotentPair{ap_set.left_finite[i][0], rng.cnormal()}),
                from_idempotent(IdempotentPair{ap_set.left_finite[i][1], rng.cnormal()}));
        for (int k = 0; k < 3; ++k)
            probes.emplace_back(random_bicomplex(rng, 2.0), random_bicomplex(rng, 2.0));

        for (const auto& [l1, l2] : probes) {
            const MembershipReport ap = in_approximate_point_spectrum(l1, l2, t1, t2, tol);
            if (!ap.member) continue;
            res.trials += 1;
            // the positive must sit inside the inclusion set on its witnessed side
            if (!ap_set.contains(l1, l2, 1e-6)) res.failures += 1;
            const double ratio = ap.side == Side::e1 ? ap.smin_e1 / ap.scale_e1
                                                     : ap.smin_e2 / ap.scale_e2;
            res.worst = std::max(res.worst, ratio);
        }
        if (probes.empty()) res.trials += 1;
    }
    return res;
}

PropertyResult prop_residual_formula(uint64_t seed, int trials, const Tolerances& tol) {
    PropertyResult res{"residual_formula", 0, 0, 0.0};
    Rng rng(seed);
    const int pairs = std::max(1, trials / 2);
    for (int t = 0; t < pairs; ++t) {
        const Index d = 2 + static_cast<Index>(rng.integer(3));
        const auto mats = random_commuting_tuple(rng, d, 2);
        const PairSpectrumSet sr = pair_residual_spectrum(mats[0], mats[1], tol);

        const auto [t1l, t1r] = mats[0].split();
        const auto [t2l, t2r] = mats[1].split();
        const auto conj_all = [](std::vector<std::array<Complex, 2>> ps) {
            for (auto& p : ps) {
                p[0] = std::conj(p[0]);
                p[1] = std::conj(p[1]);
            }
            return ps;
        };
        const auto bf_left = conj_all(
            brute_force_joint_pairs(t1l.adjoint(), t2l.adjoint(), tol.match));
        const auto bf_right = conj_all(
            brute_force_joint_pairs(t1r.adjoint(), t2r.adjoint(), tol.match));

        res.trials += 1;
        if (!pair_sets_equal(sr.left_finite, bf_left, tol.match * 10.0) ||
            !pair_sets_equal(sr.right_finite, bf_right, tol.match * 10.0))
            res.failures += 1;
    }
    return res;
}

}  // namespace

VerifyReport run_property_suite(uint64_t seed, int trials, const Tolerances& tol) {
    if (trials < 1) throw Error("verify needs at least one trial");
    VerifyReport rep;
    rep.seed = seed;
    rep.trials = trials;
    using Prop = PropertyResult (*)(uint64_t, int, const Tolerances&);
    const Prop props[] = {
        prop_ring_idempotent,  prop_hyper_norm,       prop_split_homomorphism,
        prop_membership_oracle, prop_triangularization, prop_bound_chain,
        prop_pair_consistency, prop_ap_inclusion,     prop_residual_formula,
    };
    uint64_t salt = 0;
    for (const Prop p : props) {
        salt += 0x9e3779b97f4a7c15ULL;
        rep.properties.push_back(p(seed ^ salt, trials, tol));
    }
    rep.all_passed = true;
    for (const auto& p : rep.properties) rep.all_passed = rep.all_passed && p.failures == 0;
    return rep;
}

}  // namespace bcspec
