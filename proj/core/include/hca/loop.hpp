#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "hca/central.hpp"
#include "hca/coeffs.hpp"
#include "hca/lie.hpp"
#include "hca/reduce.hpp"

namespace hca {

// Element of the centrally extended current algebra
//   (g ⊗ C[t,t^-1]) ⊕ (g ⊗ C[t,t^-1]u) ⊕ span(omega_0..omega_n):
// sparse (basis index, t-exponent) -> coefficient maps for the even and odd
// sectors plus a central vector.
class LoopElement {
  public:
    using Key = std::pair<int, long>;

    LoopElement() = default;
    explicit LoopElement(int n) : central(n) {}

    std::map<Key, ParamPoly> even;
    std::map<Key, ParamPoly> odd;
    CentralVector central;

    void add(bool odd_sector, int x, long exp, const ParamPoly& c);
    LoopElement& operator+=(const LoopElement& o);
    bool is_zero() const { return even.empty() && odd.empty() && central.is_zero(); }

    friend bool operator==(const LoopElement& a, const LoopElement& b) {
        return a.even == b.even && a.odd == b.odd && a.central == b.central;
    }
    friend bool operator!=(const LoopElement& a, const LoopElement& b) { return !(a == b); }

    std::string to_string(const SimpleLieAlgebra& g) const;
};

// The bracket
//   [x ⊗ f, y ⊗ g] = [x,y] ⊗ fg + (x,y) * class(f dg),
// with the center central. The odd-odd central term carries the bilinear
// form factor exactly like the other sectors; keep_odd_odd_form(false)
// drops it as a negative control - Jacobi then fails, which the
// verification suite demonstrates.
class LoopAlgebra {
  public:
    LoopAlgebra(SimpleLieAlgebra g, std::shared_ptr<const CoeffTables> tables);

    const SimpleLieAlgebra& algebra() const { return g_; }
    const CoeffTables& tables() const { return *tables_; }
    int n() const { return tables_->degree(); }

    LoopElement zero() const { return LoopElement(n()); }
    LoopElement generator(int x, long exp, bool odd_sector) const;
    LoopElement generator(const std::string& label, long exp, bool odd_sector) const;
    LoopElement central_omega(int k) const;

    // psi_{ij}: P-branch sum_k P_{i+j-1,-k} omega_k when i+j >= -n+1, else
    // the Q-branch; no j factor (that sits in the bracket).
    CentralVector psi(long i, long j) const;

    LoopElement bracket(const LoopElement& a, const LoopElement& b) const;

    void keep_odd_odd_form(bool on) { odd_odd_form_ = on; }

    struct JacobiReport {
        long trials = 0;
        long failures = 0;
        std::string first_failure;
        bool passed() const { return failures == 0; }
    };
    // Random homogeneous triples x ⊗ t^e u^eps with exponents in
    // [-max_abs_exp, max_abs_exp]; exact check of the cyclic bracket sum.
    JacobiReport verify_jacobi(long trials, std::uint64_t seed, long max_abs_exp) const;

  private:
    SimpleLieAlgebra g_;
    std::shared_ptr<const CoeffTables> tables_;
    bool odd_odd_form_ = true;
};

// Bracket table of the R-monomial pairs t^i u^a, t^j u^b over an exponent
// range: the ring product and the cocycle class of the pair (the Lie part
// of any [x ⊗ left, y ⊗ right] is [x,y] tensored with the product, and the
// central part is (x,y) times the cocycle column).
struct StructureRow {
    long left_exp = 0;
    bool left_odd = false;
    long right_exp = 0;
    bool right_odd = false;
    std::vector<std::tuple<long, bool, ParamPoly>> product;
    CentralVector central;
};
enum class ParityFilter { all, even_only, odd_only };
std::vector<StructureRow> structure_table(const CoeffTables& tables, long lo, long hi,
                                          ParityFilter filter = ParityFilter::all);

}  // namespace hca
