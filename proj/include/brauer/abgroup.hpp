#pragma once

// Finitely generated abelian groups in invariant-factor form, homomorphisms
// between them, and the functors Hom, Ext^1, tensor, Tor_1 and the exterior
// square.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "brauer/intlin.hpp"

namespace brauer {

/// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk. The
/// representation is canonical, so equality of values is isomorphism.
///
/// Canonical generators are ordered free generators first, then one generator
/// per invariant factor in increasing order; GroupHom matrices and all
/// coordinate vectors refer to this order.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  static FgAbGroup free(std::size_t rank);
  /// Z/n, with n = 0 meaning Z and n = 1 the trivial group.
  static FgAbGroup cyclic(const Integer& n);
  /// Direct sum of cyclic groups of the given orders (0 = Z, 1 = trivial),
  /// in any order.
  static FgAbGroup from_cyclic_orders(const IntVector& orders);
  /// Checked constructor for data that is already canonical.
  static FgAbGroup from_invariants(std::size_t free_rank, IntVector factors);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const IntVector& invariant_factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_free() const noexcept { return factors_.empty(); }

  /// Cardinality, or nullopt for infinite groups.
  std::optional<Integer> order() const;
  /// Least e > 0 with e G = 0; 0 when G is infinite.
  Integer exponent() const;

  std::size_t generator_count() const noexcept {
    return free_rank_ + factors_.size();
  }
  /// Order of each canonical generator, 0 for free generators.
  IntVector generator_orders() const;

  /// `0`, `Z`, `Z^3 + Z/2 + Z/4`, ...
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  IntVector factors_;
};

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g);

/// Invariant factors (>= 2, divisibility chain) of a direct sum of finite
/// cyclic groups of the given positive orders.
IntVector canonical_factors(IntVector orders);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Z^rows / (column span of the relation matrix).
FgAbGroup from_presentation(const IntMatrix& relations);
/// Same quotient as from_presentation; named for its role in intlin-style
/// computations on boundary matrices.
FgAbGroup cokernel_structure(const IntMatrix& a);

FgAbGroup torsion_part(const FgAbGroup& g);
FgAbGroup free_quotient(const FgAbGroup& g);
/// {x in G : m x = 0}
FgAbGroup m_torsion(const FgAbGroup& g, const Integer& m);

FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup ext1(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tor1(const FgAbGroup& a, const FgAbGroup& b);

/// Lambda^2(G) as the sum over pairs i < j of C_i (x) C_j for the canonical
/// cyclic decomposition (free summands first).
FgAbGroup exterior_square(const FgAbGroup& g);
/// H_2 of G regarded as a discrete group; equals the exterior square.
FgAbGroup h2_of_abelian_group(const FgAbGroup& g);

/// Br'(K(G,2)) = Torsion Ext^1(G, Z) together with the upper bound
/// Ext^1(G/Torsion, Z) for Br(K(G,2)). For finitely generated G the bound is
/// zero, so any nonzero Br' is strictly larger than Br.
struct KG2Brauer {
  FgAbGroup br_prime;
  FgAbGroup br_upper_bound;
  bool strict = false;
  /// Open conjecture: Br(K(G,2)) = 0 for arbitrary abelian G. Surfaced as
  /// text only.
  std::string conjecture;
};

KG2Brauer brauer_of_k_g_2(const FgAbGroup& g);

/// Reduces torsion coordinates into [0, d) and checks the vector length.
IntVector normalize_coordinates(const FgAbGroup& g, IntVector coords);

/// Generators-by-relations matrix: one column d_i e_i per torsion generator.
IntMatrix relation_matrix(const FgAbGroup& g);

/// Homomorphism between canonical groups, given by its action on canonical
/// generators (column j is the image of domain generator j).
class GroupHom {
 public:
  GroupHom(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix);

  static GroupHom zero(const FgAbGroup& domain, const FgAbGroup& codomain);
  static GroupHom identity(const FgAbGroup& g);
  static GroupHom multiplication(const FgAbGroup& g, const Integer& k);

  const FgAbGroup& domain() const noexcept { return domain_; }
  const FgAbGroup& codomain() const noexcept { return codomain_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector apply(const IntVector& x) const;

  FgAbGroup image() const;
  FgAbGroup kernel() const;
  bool image_contains(const IntVector& y) const;
  bool is_zero() const { return matrix_.is_zero(); }
  bool is_injective() const { return kernel().is_trivial(); }
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  // Basis (columns) of {x in Z^domain_gens : matrix * x lies in the
  // relation lattice of the codomain}.
  IntMatrix preimage_of_zero() const;

  FgAbGroup domain_;
  FgAbGroup codomain_;
  IntMatrix matrix_;
};

/// after o before
GroupHom compose(const GroupHom& after, const GroupHom& before);

}  // namespace brauer
