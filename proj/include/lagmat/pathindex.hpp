#pragma once

// Height-increasing paths and the index of an oriented Lagrangian matroid:
// the number of sign changes along any strictly height-increasing path from
// the fundamental basis to a basis of maximal height.  Well-definedness is
// a theorem; verify_index_well_defined checks it by exhausting all such
// paths.  crosscheck_quadratic ties the combinatorial index to the inertia
// of the fundamental reduction's symmetric matrix.

#include "lagmat/inertia.hpp"
#include "lagmat/orient.hpp"
#include "lagmat/polytope.hpp"
#include "lagmat/represent.hpp"

namespace lagmat {

inline constexpr long long kMaxPathEnumeration = 100000;

struct IncreasingPath {
  Transversal fundamental;
  std::vector<Transversal> vertices;  // starts at fundamental
};

struct IndexReport {
  int index = 0;
  int max_height = 0;
  IncreasingPath path;
};

// Greedy ascent from f: among adjacent bases of strictly greater height,
// step to the one of least (height, notation); ends at maximal height.
IncreasingPath find_increasing_path(const BasisSystem& m, const Transversal& f);

// Sign changes of s(f, v_0), s(f, v_1), ... along the greedy path.
IndexReport index_relative(const BasisSystem& m, const SignTable& st,
                           const Transversal& f);

// True iff every strictly height-increasing maximal path from f yields the
// same sign-change count.  Guarded by kMaxPathEnumeration.
bool verify_index_well_defined(const BasisSystem& m, const SignTable& st,
                               const Transversal& f);

// Inducing edges (vertical long, or short directed downwards) crossed by the
// greedy path through an oriented skeleton; equals the index.
int count_inducing_edges(const OrientedSkeleton& os, const Transversal& f);

struct QuadraticCrosscheck {
  Transversal fundamental;
  int matroid_index = 0;    // sign changes along an increasing path
  int kronecker_index = 0;  // principal-minor method on C_F
  int oracle_index = 0;     // congruence diagonalization of C_F
  int max_height = 0;
  int rank = 0;             // exact rank of C_F
  bool agree = false;       // indices all equal and rank == max_height
};

QuadraticCrosscheck crosscheck_quadratic(const Representation<Rat>& rep,
                                         const Transversal& f);

}  // namespace lagmat
