#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hca/rational.hpp"

namespace hca {

// Finite-dimensional Lie algebra presented by structure constants over a
// labelled basis, together with its Killing form (x,y) = tr(ad x ad y).
// Construction validates antisymmetry and the Jacobi identity exactly.
class SimpleLieAlgebra {
  public:
    using Combination = std::vector<std::pair<int, Rational>>;  // basis index -> coeff

    // Basis e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    static SimpleLieAlgebra sl2();
    // sl_m in the elementary-matrix basis E_ij (i != j) and
    // h_i = E_ii - E_{i+1,i+1}.
    static SimpleLieAlgebra sl(int m);
    // rows (i, j, k, c) meaning [x_i, x_j] has coefficient c on x_k; missing
    // (j, i) rows are filled by antisymmetry, present ones are checked.
    static SimpleLieAlgebra from_structure_constants(
        std::vector<std::string> labels,
        const std::vector<std::tuple<int, int, int, Rational>>& rows);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    int index_of(const std::string& label) const;  // -1 when absent

    // [x_i, x_j] as a sparse combination.
    const Combination& bracket(int i, int j) const;
    const Rational& killing(int i, int j) const;

  private:
    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, Combination> table_;
    std::vector<std::vector<Rational>> killing_;
    static const Combination empty_;

    void finalize();  // antisymmetry fill/check, Jacobi check, Killing form
    Combination ad_apply(int i, const Combination& v) const;
};

}  // namespace hca
