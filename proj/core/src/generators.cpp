#include "mpconc/generators.hpp"

#include <algorithm>
#include <sstream>

namespace mpconc {

std::string Bipartition::label() const {
  std::ostringstream os;
  for (int p : left) os << p + 1;
  os << '|';
  for (int p : right) os << p + 1;
  return os.str();
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 2) throw InputError("bipartitions need at least two parties");
  if (n > 20) throw InputError("too many parties");
  std::vector<Bipartition> out;
  // Subsets of {1..n-1} joined with party 0; the full set is excluded.
  for (unsigned mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    Bipartition b;
    b.left.push_back(0);
    for (int p = 1; p < n; ++p) ((mask >> (p - 1)) & 1u ? b.left : b.right).push_back(p);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const Bipartition& a, const Bipartition& b) { return a.left < b.left; });
  return out;
}

int generator_count(int dim) { return dim * (dim - 1) / 2; }

std::vector<GeneratorIndex> generator_indices(int dim) {
  std::vector<GeneratorIndex> out;
  out.reserve(static_cast<std::size_t>(generator_count(dim)));
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q) out.push_back({p, q});
  return out;
}

Matrix so_generator(int dim, GeneratorIndex idx) {
  if (idx.p < 0 || idx.q >= dim || idx.p >= idx.q) {
    std::ostringstream os;
    os << "generator index (" << idx.p << "," << idx.q << ") invalid for SO(" << dim << ")";
    throw InputError(os.str());
  }
  Matrix e = Matrix::Zero(dim, dim);
  e(idx.p, idx.q) = 1.0;
  e(idx.q, idx.p) = -1.0;
  return e;
}

namespace {

void check_bipartition(const Bipartition& bip, std::size_t n) {
  std::vector<int> all(bip.left);
  all.insert(all.end(), bip.right.begin(), bip.right.end());
  std::sort(all.begin(), all.end());
  bool ok = !bip.left.empty() && !bip.right.empty() && all.size() == n;
  for (std::size_t i = 0; ok && i < all.size(); ++i) ok = all[i] == static_cast<int>(i);
  if (!ok) throw InputError("bipartition " + bip.label() + " does not match the party count");
}

}  // namespace

SOperator embed_pair_operator(const Bipartition& bip, GeneratorIndex left_idx,
                              GeneratorIndex right_idx, const Dims& dims) {
  check_bipartition(bip, dims.parties());
  const int dl = dims.total(bip.left);
  const int dr = dims.total(bip.right);
  const Matrix grouped = kron(so_generator(dl, left_idx), so_generator(dr, right_idx));

  // `grouped` acts on parties ordered (left..., right...); move them back.
  std::vector<int> order(bip.left);
  order.insert(order.end(), bip.right.begin(), bip.right.end());
  const Dims grouped_dims = dims.select(order);
  Matrix full = permute_subsystems(grouped, grouped_dims, inverse_permutation(order));
  return SOperator{bip, left_idx, right_idx, std::move(full)};
}

int pair_count(const Bipartition& bip, const Dims& dims) {
  return generator_count(dims.total(bip.left)) * generator_count(dims.total(bip.right));
}

int total_pair_count(const Dims& dims) {
  int total = 0;
  for (const auto& bip : enumerate_bipartitions(static_cast<int>(dims.parties())))
    total += pair_count(bip, dims);
  return total;
}

std::vector<PairKey> enumerate_pairs(const Dims& dims) {
  const auto bips = enumerate_bipartitions(static_cast<int>(dims.parties()));
  std::vector<PairKey> out;
  for (std::size_t b = 0; b < bips.size(); ++b) {
    const auto left = generator_indices(dims.total(bips[b].left));
    const auto right = generator_indices(dims.total(bips[b].right));
    for (const auto& l : left)
      for (const auto& r : right) out.push_back({static_cast<int>(b), l, r});
  }
  return out;
}

void for_each_pair_operator(const Dims& dims, const std::function<void(const SOperator&)>& visit) {
  const auto bips = enumerate_bipartitions(static_cast<int>(dims.parties()));
  for (const auto& key : enumerate_pairs(dims))
    visit(embed_pair_operator(bips[static_cast<std::size_t>(key.bipartition)], key.left_gen,
                              key.right_gen, dims));
}

}  // namespace mpconc
