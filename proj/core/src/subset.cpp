#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fakepolisher/dictlearn.hpp"
#include "fakepolisher/errors.hpp"
#include "fakepolisher/parallel.hpp"
#include "fakepolisher/sparse_coding.hpp"

namespace fakepolisher {

Dictionary subset_atoms(const Dictionary& dict, int count, const PatchMatrix& reference) {
  const int m = dict.size();
  if (count < 1 || count > m) {
    throw ParameterError("subset size " + std::to_string(count) + " outside [1, " +
                         std::to_string(m) + "]");
  }
  if (count == m) return dict;

  std::vector<int> keep(static_cast<std::size_t>(count));
  if (dict.kind() == DictionaryKind::Pca) {
    std::iota(keep.begin(), keep.end(), 0);
  } else {
    if (reference.rows() != dict.dim() || reference.cols() < 1) {
      throw DimensionError("reference set must have dimension " + std::to_string(dict.dim()) +
                           " and at least one column");
    }
    const int sparsity = std::min<int>(dict.meta().sparsity_k > 0 ? dict.meta().sparsity_k : 1,
                                       std::min(dict.dim(), m));
    std::vector<SparseCode> codes(static_cast<std::size_t>(reference.cols()));
    parallel_for(codes.size(), [&](std::size_t i) {
      codes[i] = omp(dict, reference.col(static_cast<Eigen::Index>(i)), sparsity);
    });
    std::vector<double> mass(static_cast<std::size_t>(m), 0.0);
    for (const auto& code : codes) {
      for (std::size_t k = 0; k < code.support.size(); ++k) {
        mass[static_cast<std::size_t>(code.support[k])] += std::abs(code.values[k]);
      }
    }
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return mass[static_cast<std::size_t>(a)] > mass[static_cast<std::size_t>(b)];
    });
    std::copy_n(order.begin(), count, keep.begin());
    std::sort(keep.begin(), keep.end());
  }

  Eigen::MatrixXd atoms(dict.dim(), count);
  for (int j = 0; j < count; ++j) atoms.col(j) = dict.atoms().col(keep[static_cast<std::size_t>(j)]);
  return Dictionary(dict.kind(), std::move(atoms), dict.mean(), dict.geometry(), dict.meta());
}

} // namespace fakepolisher
