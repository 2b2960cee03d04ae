#include "brauer/abgroup.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "brauer/errors.hpp"

namespace brauer {

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace

IntVector canonical_factors(IntVector orders) {
  for (const auto& d : orders) {
    if (sgn(d) <= 0) throw SemanticError("canonical_factors expects positive orders");
  }
  std::erase_if(orders, [](const Integer& d) { return d == 1; });
  std::sort(orders.begin(), orders.end());
  // Pairwise (gcd, lcm) replacement: after pass i, orders[i] divides every
  // later entry, and Z/a + Z/b = Z/gcd + Z/lcm keeps the group unchanged.
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      if (mpz_divisible_p(orders[j].get_mpz_t(), orders[i].get_mpz_t())) continue;
      Integer g = gcd_of(orders[i], orders[j]);
      Integer l = lcm_of(orders[i], orders[j]);
      orders[i] = std::move(g);
      orders[j] = std::move(l);
    }
  }
  std::erase_if(orders, [](const Integer& d) { return d == 1; });
  return orders;
}

FgAbGroup FgAbGroup::free(std::size_t rank) {
  FgAbGroup g;
  g.free_rank_ = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
  return from_cyclic_orders({n});
}

FgAbGroup FgAbGroup::from_cyclic_orders(const IntVector& orders) {
  FgAbGroup g;
  IntVector finite;
  for (const auto& d : orders) {
    if (sgn(d) < 0) throw SemanticError("cyclic order must be nonnegative");
    if (sgn(d) == 0) {
      ++g.free_rank_;
    } else {
      finite.push_back(d);
    }
  }
  g.factors_ = canonical_factors(std::move(finite));
  return g;
}

FgAbGroup FgAbGroup::from_invariants(std::size_t free_rank, IntVector factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw SemanticError("invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(factors[i].get_mpz_t(), factors[i - 1].get_mpz_t())) {
      throw SemanticError("invariant factors must form a divisibility chain");
    }
  }
  FgAbGroup g;
  g.free_rank_ = free_rank;
  g.factors_ = std::move(factors);
  return g;
}

std::optional<Integer> FgAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Integer FgAbGroup::exponent() const {
  if (free_rank_ > 0) return 0;
  return factors_.empty() ? Integer(1) : factors_.back();
}

IntVector FgAbGroup::generator_orders() const {
  IntVector orders(free_rank_, Integer(0));
  orders.insert(orders.end(), factors_.begin(), factors_.end());
  return orders;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << "Z";
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g) {
  return os << g.to_string();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  IntVector orders = a.generator_orders();
  IntVector more = b.generator_orders();
  orders.insert(orders.end(), more.begin(), more.end());
  return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup from_presentation(const IntMatrix& relations) {
  IntVector diag = smith_diagonal(relations);
  std::size_t rank = 0;
  IntVector torsion;
  for (const auto& d : diag) {
    if (sgn(d) == 0) continue;
    ++rank;
    if (d != 1) torsion.push_back(d);
  }
  return FgAbGroup::from_invariants(relations.rows() - rank, std::move(torsion));
}

FgAbGroup cokernel_structure(const IntMatrix& a) { return from_presentation(a); }

FgAbGroup torsion_part(const FgAbGroup& g) {
  return FgAbGroup::from_invariants(0, g.invariant_factors());
}

FgAbGroup free_quotient(const FgAbGroup& g) { return FgAbGroup::free(g.free_rank()); }

FgAbGroup m_torsion(const FgAbGroup& g, const Integer& m) {
  if (sgn(m) == 0) return torsion_part(g);
  IntVector orders;
  for (const auto& d : g.invariant_factors()) orders.push_back(gcd_of(d, m));
  return FgAbGroup::from_cyclic_orders(orders);
}

namespace {

// Applies a bilinear table entry to every pair of cyclic summands. The table
// returns the order of the resulting cyclic group (0 = Z) or nullopt for the
// trivial group.
template <class Table>
FgAbGroup bilinear(const FgAbGroup& a, const FgAbGroup& b, Table table) {
  IntVector orders;
  for (const auto& d : a.generator_orders()) {
    for (const auto& e : b.generator_orders()) {
      if (auto o = table(d, e)) orders.push_back(*o);
    }
  }
  return FgAbGroup::from_cyclic_orders(orders);
}

// Z/d (x) Z/e with 0 standing for Z.
std::optional<Integer> tensor_entry(const Integer& d, const Integer& e) {
  if (sgn(d) == 0) return e;
  if (sgn(e) == 0) return d;
  return gcd_of(d, e);
}

}  // namespace

FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b) {
  return bilinear(a, b, [](const Integer& d, const Integer& e) -> std::optional<Integer> {
    if (sgn(d) == 0) return e;
    if (sgn(e) == 0) return std::nullopt;
    return gcd_of(d, e);
  });
}

FgAbGroup ext1(const FgAbGroup& a, const FgAbGroup& b) {
  return bilinear(a, b, [](const Integer& d, const Integer& e) -> std::optional<Integer> {
    if (sgn(d) == 0) return std::nullopt;
    if (sgn(e) == 0) return d;
    return gcd_of(d, e);
  });
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
  return bilinear(a, b, tensor_entry);
}

FgAbGroup tor1(const FgAbGroup& a, const FgAbGroup& b) {
  return bilinear(a, b, [](const Integer& d, const Integer& e) -> std::optional<Integer> {
    if (sgn(d) == 0 || sgn(e) == 0) return std::nullopt;
    return gcd_of(d, e);
  });
}

FgAbGroup exterior_square(const FgAbGroup& g) {
  const IntVector summands = g.generator_orders();
  IntVector orders;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    for (std::size_t j = i + 1; j < summands.size(); ++j) {
      orders.push_back(*tensor_entry(summands[i], summands[j]));
    }
  }
  return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup h2_of_abelian_group(const FgAbGroup& g) { return exterior_square(g); }

KG2Brauer brauer_of_k_g_2(const FgAbGroup& g) {
  KG2Brauer r;
  r.br_prime = torsion_part(ext1(g, FgAbGroup::free(1)));
  r.br_upper_bound = ext1(free_quotient(g), FgAbGroup::free(1));
  r.strict = !r.br_prime.is_trivial();
  r.conjecture = "conjectured: Br(K(G,2)) = 0 for every abelian group G";
  return r;
}

IntVector normalize_coordinates(const FgAbGroup& g, IntVector coords) {
  if (coords.size() != g.generator_count()) {
    throw SemanticError("coordinate vector has length " + std::to_string(coords.size()) +
                        ", group has " + std::to_string(g.generator_count()) +
                        " generators");
  }
  const auto& f = g.invariant_factors();
  for (std::size_t k = 0; k < f.size(); ++k) {
    Integer& c = coords[g.free_rank() + k];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), f[k].get_mpz_t());
  }
  return coords;
}

IntMatrix relation_matrix(const FgAbGroup& g) {
  const auto& f = g.invariant_factors();
  IntMatrix r(g.generator_count(), f.size());
  for (std::size_t k = 0; k < f.size(); ++k) r(g.free_rank() + k, k) = f[k];
  return r;
}

GroupHom::GroupHom(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.generator_count() ||
      matrix_.cols() != domain_.generator_count()) {
    throw SemanticError("homomorphism matrix shape does not match its groups");
  }
  const IntVector dom_orders = domain_.generator_orders();
  const IntVector cod_orders = codomain_.generator_orders();
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      Integer& v = matrix_(i, j);
      if (sgn(cod_orders[i]) != 0) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), cod_orders[i].get_mpz_t());
      }
      if (sgn(dom_orders[j]) == 0 || sgn(v) == 0) continue;
      // A generator of order d must land in the d-torsion.
      Integer dv = dom_orders[j] * v;
      bool ok = sgn(cod_orders[i]) != 0 &&
                mpz_divisible_p(dv.get_mpz_t(), cod_orders[i].get_mpz_t());
      if (!ok) {
        throw SemanticError("matrix does not respect relations: generator " +
                            std::to_string(j) + " of order " + dom_orders[j].get_str() +
                            " cannot map to coordinate " + std::to_string(i) + " value " +
                            v.get_str() + " of " + codomain_.to_string());
      }
    }
  }
}

GroupHom GroupHom::zero(const FgAbGroup& domain, const FgAbGroup& codomain) {
  return GroupHom(domain, codomain, IntMatrix(codomain.generator_count(), domain.generator_count()));
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.generator_count()));
}

GroupHom GroupHom::multiplication(const FgAbGroup& g, const Integer& k) {
  IntMatrix m = IntMatrix::identity(g.generator_count());
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = k;
  return GroupHom(g, g, std::move(m));
}

IntVector GroupHom::apply(const IntVector& x) const {
  return normalize_coordinates(codomain_, matrix_ * x);
}

IntMatrix GroupHom::preimage_of_zero() const {
  IntMatrix joint = matrix_.hstack(relation_matrix(codomain_));
  IntMatrix ker = kernel_basis(joint);
  IntMatrix x_part(domain_.generator_count(), ker.cols());
  for (std::size_t i = 0; i < x_part.rows(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) x_part(i, j) = ker(i, j);
  return image_basis(x_part);
}

FgAbGroup GroupHom::image() const {
  // image = Z^a / f^{-1}(relations of B); the relations of A lie inside.
  return cokernel_structure(preimage_of_zero());
}

FgAbGroup GroupHom::kernel() const {
  IntMatrix basis = preimage_of_zero();
  IntMatrix rel = relation_matrix(domain_);
  IntMatrix coords(basis.cols(), rel.cols());
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    auto c = solve_integral(basis, rel.column(j));
    if (!c) throw std::logic_error("domain relation outside kernel lattice");
    for (std::size_t i = 0; i < c->size(); ++i) coords(i, j) = (*c)[i];
  }
  return cokernel_structure(coords);
}

bool GroupHom::image_contains(const IntVector& y) const {
  IntMatrix joint = matrix_.hstack(relation_matrix(codomain_));
  return solve_integral(joint, y).has_value();
}

bool GroupHom::is_surjective() const {
  for (std::size_t i = 0; i < codomain_.generator_count(); ++i) {
    IntVector e(codomain_.generator_count(), 0);
    e[i] = 1;
    if (!image_contains(e)) return false;
  }
  return true;
}

GroupHom compose(const GroupHom& after, const GroupHom& before) {
  if (!(after.domain() == before.codomain())) {
    throw SemanticError("cannot compose: " + before.codomain().to_string() + " vs " +
                        after.domain().to_string());
  }
  return GroupHom(before.domain(), after.codomain(), after.matrix() * before.matrix());
}

}  // namespace brauer
