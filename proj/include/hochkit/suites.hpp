#pragma once

// Seeded randomized property suites. Instances are drawn sequentially from
// one generator and then checked in parallel, so reports depend only on the
// seed.

#include "hochkit/structures.hpp"

#include <cstdint>
#include <random>

namespace hochkit {

/// Operator with entries drawn from {-2..2}; each entry is nonzero with
/// probability about density_percent / 100.
MultilinearOp random_op(const AlgebraPtr& algebra, int k, int l, std::mt19937_64& rng, int density_percent = 40);

/// Builtin algebras of dimension <= max_dim used by the suites.
std::vector<AlgebraPtr> small_algebras(int max_dim);

/// insertion_commutator_oracle(f, g, k1 + k2) against the insertion of
/// bracket(f, g), dim <= 3, arities <= 3.
Report oracle_identity_suite(std::uint64_t seed, int count, int parallelism = 1);

/// Graded antisymmetry and Jacobi on random triples (dim <= 2, arities <= 2),
/// the derivation property of [m, -], and the associativity detector.
Report lie_suite(std::uint64_t seed, int count, int parallelism = 1);

/// d1² = 0, d2² = 0, d1d2 + d2d1 = 0 and [m, ψ] = {d1ψ, d2ψ} (plus the
/// row-0 coupling) on random ψ.
Report bidifferential_suite(std::uint64_t seed, int count, int parallelism = 1);

/// Hochschild, Gerstenhaber and bar oracles on C, dual, poly0-n2-D2, k <= 3.
Report classical_recovery_suite(std::uint64_t seed, int parallelism = 1);

/// Q-complex and Chevalley-Eilenberg checks, gauge invariance under
/// `conjugations` random changes of basis, and the Maurer-Cartan instances.
Report toolkit_suite(std::uint64_t seed, int conjugations = 50);

/// Every suite and theorem check at desk scale, keyed by claim.
Report full_report(std::uint64_t seed, int parallelism = 1);

}  // namespace hochkit
