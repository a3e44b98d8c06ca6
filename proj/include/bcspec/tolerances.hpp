#pragma once

namespace bcspec {

// Numerical tolerances shared across the library. All are relative to the
// scale of the data they test (see each use site); overrides flow in from
// the CLI.
struct Tolerances {
    double zero = 1e-12;     // beta component counts as zero (zero-divisor test)
    double sing = 1e-10;     // singular / rank decisions, relative to sigma_max
    double commute = 1e-10;  // commutator residual, relative to the norm product
    double eig = 1e-8;       // joint eigenpair residual
    double match = 1e-8;     // spectrum point matching distance
    double cluster = 1e-8;   // eigenvalue cluster merge radius, relative to the norm
    double tri = 1e-9;       // triangularization subdiagonal residual
    double ineq = 1e-9;      // slack admitted when checking inequalities
};

}  // namespace bcspec
