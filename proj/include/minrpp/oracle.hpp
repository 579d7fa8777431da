#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "minrpp/bijection.hpp"
#include "minrpp/heap.hpp"
#include "minrpp/partition.hpp"

namespace minrpp {

// Dense matrix over F_p.
struct FpMatrix {
  long long p = 2;
  int rows = 0, cols = 0;
  std::vector<long long> a;  // row major

  static FpMatrix zero(int r, int c, long long p);
  static FpMatrix identity(int n, long long p);
  long long& at(int r, int c) { return a[(size_t)r * cols + c]; }
  long long at(int r, int c) const { return a[(size_t)r * cols + c]; }
  FpMatrix mul(const FpMatrix& o) const;
  int rank() const;
  // Column-space basis of the nullspace.
  FpMatrix nullspace() const;
  FpMatrix hstack(const FpMatrix& o) const;
  FpMatrix inverse() const;  // requires square nonsingular
};

// Representation of Q over F_p: one matrix per arrow, in the order of
// q.arrows; f[a] maps V_{s(a)} to V_{t(a)} (shape dim_t x dim_s).
struct MatrixRep {
  DynkinQuiver q;
  long long p = 2;
  std::vector<int> dim;       // per vertex
  std::vector<FpMatrix> f;    // per arrow
  Root dim_vector() const;
};

MatrixRep simple_rep(const DynkinQuiver& q, int i, long long p);
MatrixRep direct_sum(const MatrixRep& x, const MatrixRep& y);

// Explicit indecomposable with the given root as dimension vector, built by
// matrix-level reflection functors from a simple; certified by dim End = 1.
MatrixRep indec_matrices(const DynkinQuiver& q, const Root& root, long long p);

// Basis of Hom(X, Y): each element is one matrix per vertex.
std::vector<std::vector<FpMatrix>> hom_basis(const MatrixRep& x, const MatrixRep& y);

struct OracleConfig {
  long long prime = 32003;
  int samples = 8;
  uint64_t seed = 12345;
  static OracleConfig from_env();  // ORACLE_PRIME / ORACLE_SAMPLES / ORACLE_SEED
};

struct GenJfResult {
  PartitionTuple jf;
  bool samples_agree = true;
};

// Jordan form of a nilpotent matrix via ranks of powers.
Partition jordan_type(const FpMatrix& n);

// Generic Jordan form of a direct sum of indecomposables, by sampling
// nilpotent endomorphisms and taking the dominance maximum.
GenJfResult gen_jf(const DynkinQuiver& q, const std::vector<std::pair<Root, long long>>& summands,
                   const OracleConfig& cfg);
GenJfResult gen_jf(const MinusculeHeap& h, const MultVector& c, const OracleConfig& cfg);

// Jordan type of N on the cokernel of a random compatible map
// k[N]/N^b -> k[N]/N^a (+) k[N]/N^c, for a >= b >= c >= 0.
Partition generic_coker_jf(int a, int b, int c, long long p, uint64_t seed);

// Greene-Kleitman: partition (Delta_1 - Delta_0, Delta_2 - Delta_1, ...) of a
// finite poset, where Delta_k is the largest size of a union of k chains.
Partition gk_partition(const Poset& p);

// Type-A auxiliary poset: summands of M supported at vertex i, each replaced
// by a chain of length equal to its multiplicity.
Poset build_tilde_poset(const MinusculeHeap& h, const MultVector& c, int i);

}  // namespace minrpp
