#pragma once

// Chain complexes of finitely generated free abelian groups: homology,
// cohomology with Z and Z/m coefficients, the universal-coefficient split,
// the cochain-level Bockstein, tensor products and truncation.

#include <cstddef>
#include <map>
#include <vector>

#include "brauer/abgroup.hpp"
#include "brauer/intlin.hpp"

namespace brauer {

/// C_0 <- C_1 <- ... <- C_top with C_n = Z^rank(n). The boundary of degree n
/// is a rank(n-1) x rank(n) matrix; construction rejects shape mismatches
/// and any composite boundary that is not zero.
class ChainComplex {
 public:
  ChainComplex();
  /// `boundaries[k]` is the boundary of degree k + 1, so there must be
  /// exactly ranks.size() - 1 of them.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);
  /// Degrees absent from `boundaries` get zero maps.
  static ChainComplex from_sparse(std::vector<std::size_t> ranks,
                                  const std::map<std::size_t, IntMatrix>& boundaries);

  std::size_t top_degree() const noexcept { return ranks_.size() - 1; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  /// Zero outside [0, top_degree].
  std::size_t rank(std::size_t n) const noexcept {
    return n < ranks_.size() ? ranks_[n] : 0;
  }
  /// Boundary C_n -> C_{n-1}, zero-shaped for n == 0 or n > top_degree.
  IntMatrix boundary(std::size_t n) const;
  /// Coboundary C^n -> C^{n+1}, the transpose of boundary(n + 1).
  IntMatrix coboundary(std::size_t n) const;

  /// Largest degree with a nonzero chain group (0 for the empty complex).
  std::size_t dimension() const noexcept;
  long euler_characteristic() const noexcept;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
};

/// Quotient of a lattice of cycles by a sublattice of boundaries, with
/// explicit representatives for the canonical generators and a coordinate
/// map back from cycles.
class Subquotient {
 public:
  /// `cycle_basis` has full column rank; every column of
  /// `boundary_generators` must lie in its span.
  Subquotient(IntMatrix cycle_basis, const IntMatrix& boundary_generators);

  const FgAbGroup& group() const noexcept { return group_; }
  /// Column g is a cycle representing canonical generator g of group().
  const IntMatrix& representatives() const noexcept { return representatives_; }
  /// Canonical coordinates of the class of `cycle`; throws SemanticError when
  /// the vector is not in the cycle lattice.
  IntVector coordinates(const IntVector& cycle) const;

 private:
  IntMatrix cycle_basis_;
  IntMatrix to_diagonal_;  // U from the Smith form of the boundary coordinates
  std::vector<std::size_t> canonical_rows_;
  FgAbGroup group_;
  IntMatrix representatives_;
};

/// ker d_n / im d_{n+1}.
Subquotient cycle_subquotient(const ChainComplex& c, std::size_t n);
/// n-cocycles mod boundaries; modulus 0 means integer coefficients,
/// otherwise Z/modulus with modulus >= 2. Cochains are integer vectors, taken
/// mod the modulus when it is nonzero.
Subquotient cocycle_subquotient(const ChainComplex& c, std::size_t n,
                                const Integer& modulus = 0);

FgAbGroup homology(const ChainComplex& c, std::size_t n);
FgAbGroup cohomology(const ChainComplex& c, std::size_t n, const Integer& modulus = 0);

/// 0 -> Ext^1(H_{n-1}, Z) -> H^n -> Hom(H_n, Z) -> 0 evaluated on both sides.
struct UctDecomposition {
  std::size_t degree = 0;
  FgAbGroup ext_part;
  FgAbGroup hom_part;
  FgAbGroup total;

  bool splits() const { return direct_sum(ext_part, hom_part) == total; }
};

UctDecomposition uct_decompose(const ChainComplex& c, std::size_t n);

/// Connecting map H^n(C; Z/m) -> H^{n+1}(C; Z) of 0 -> Z -> Z -> Z/m -> 0,
/// evaluated on cochain representatives: lift, apply the coboundary, divide
/// by m.
GroupHom bockstein(const ChainComplex& c, std::size_t n, const Integer& m);

/// (C (x) D)_n = sum over p + q = n of C_p (x) D_q, basis ordered by p, then
/// the C index, then the D index; d(x (x) y) = dx (x) y + (-1)^p x (x) dy.
ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d);

/// Drops every degree above k.
ChainComplex truncate(const ChainComplex& c, std::size_t k);

/// Cochain complex read as a chain complex: D_k = C^{top-k}.
ChainComplex dual(const ChainComplex& c);

}  // namespace brauer
