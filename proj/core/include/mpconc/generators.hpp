#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mpconc/tensor.hpp"

namespace mpconc {

/// Split of parties {0..N-1} into two nonempty groups. The canonical form
/// keeps party 0 on the left; both sides are sorted.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  /// 1-based label such as "12|3".
  std::string label() const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// All 2^(n-1) - 1 canonical bipartitions, ordered lexicographically by
/// their left party sets.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// Selects the antisymmetric generator E_pq (p < q) of SO(D).
struct GeneratorIndex {
  int p = 0;
  int q = 1;
  friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
};

/// D(D-1)/2
int generator_count(int dim);

/// Generator indices for SO(dim) in lexicographic (p, q) order.
std::vector<GeneratorIndex> generator_indices(int dim);

/// E with E[p,q] = 1, E[q,p] = -1, zero elsewhere.
Matrix so_generator(int dim, GeneratorIndex idx);

/// L_left ⊗ L_right lifted to the full space in canonical party order.
struct SOperator {
  Bipartition bipartition;
  GeneratorIndex left_gen;
  GeneratorIndex right_gen;
  Matrix matrix;
};

/// Builds S for one generator pair. The left factor acts on the grouped
/// parties bip.left (lexicographic basis over ascending party order), the
/// right factor on bip.right.
SOperator embed_pair_operator(const Bipartition& bip, GeneratorIndex left_idx,
                              GeneratorIndex right_idx, const Dims& dims);

/// [D_left(D_left-1)/2] * [D_right(D_right-1)/2]
int pair_count(const Bipartition& bip, const Dims& dims);

/// Total pair count summed over every bipartition of dims.
int total_pair_count(const Dims& dims);

/// One work item of the generator-pair sum.
struct PairKey {
  int bipartition = 0;  // index into enumerate_bipartitions(N)
  GeneratorIndex left_gen;
  GeneratorIndex right_gen;
};

/// Every (bipartition, left generator, right generator) in the fixed
/// iteration order: bipartitions in enumeration order, then left index, then
/// right index.
std::vector<PairKey> enumerate_pairs(const Dims& dims);

/// Visits every embedded S operator in enumeration order, building one at a
/// time.
void for_each_pair_operator(const Dims& dims, const std::function<void(const SOperator&)>& visit);

}  // namespace mpconc
