#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcspec/pair_spectrum.hpp"
#include "bcspec/rng.hpp"
#include "bcspec/spectra.hpp"

namespace bcspec {

// Random instance generators used by the property suite.
BiComplex random_bicomplex(Rng& rng, double scale = 1.0);
ComplexMatrix random_complex_matrix(Rng& rng, Index rows, Index cols);
ComplexMatrix random_unitary(Rng& rng, Index n);
BCMatrix random_bc_matrix(Rng& rng, Index rows, Index cols);

/// Commuting tuple of m bicomplex d x d matrices: each split component is
/// a random polynomial in one random base matrix per side.
std::vector<BCMatrix> random_commuting_tuple(Rng& rng, Index d, int m);

struct PropertyResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    double worst = 0.0;  // worst deviation seen, in the property's own units
};

struct VerifyReport {
    uint64_t seed = 0;
    int trials = 0;
    std::vector<PropertyResult> properties;
    bool all_passed = false;
};

/// Randomized property suite behind `verify`: ring and idempotent
/// identities, hyperbolic norm axioms, split homomorphism, joint-spectrum
/// oracle agreement (with non-emptiness), triangularization residuals,
/// the radius/norm bound chain, pair-spectrum consistency, approximate
/// point spectrum inclusion, and the residual spectrum formula.
/// Deterministic for a fixed seed and trial count.
VerifyReport run_property_suite(uint64_t seed, int trials, const Tolerances& tol = {});

}  // namespace bcspec
