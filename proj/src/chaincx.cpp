#include "brauer/chaincx.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "brauer/errors.hpp"

namespace brauer {

ChainComplex::ChainComplex() : ranks_{0} {}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) throw SemanticError("chain complex needs at least degree 0");
  if (boundaries_.size() + 1 != ranks_.size()) {
    throw SemanticError("chain complex needs one boundary per positive degree");
  }
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    const IntMatrix& d = boundaries_[n - 1];
    if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n]) {
      throw SemanticError("boundary " + std::to_string(n) + " has shape " +
                          std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                          ", expected " + std::to_string(ranks_[n - 1]) + "x" +
                          std::to_string(ranks_[n]));
    }
  }
  for (std::size_t n = 2; n < ranks_.size(); ++n) {
    if (!(boundaries_[n - 2] * boundaries_[n - 1]).is_zero()) {
      throw SemanticError("boundary " + std::to_string(n - 1) + " composed with boundary " +
                          std::to_string(n) + " is not zero");
    }
  }
}

ChainComplex ChainComplex::from_sparse(std::vector<std::size_t> ranks,
                                       const std::map<std::size_t, IntMatrix>& boundaries) {
  if (ranks.empty()) throw SemanticError("chain complex needs at least degree 0");
  std::vector<IntMatrix> full;
  for (std::size_t n = 1; n < ranks.size(); ++n) {
    auto it = boundaries.find(n);
    full.push_back(it != boundaries.end() ? it->second : IntMatrix(ranks[n - 1], ranks[n]));
  }
  for (const auto& [n, _] : boundaries) {
    if (n == 0 || n >= ranks.size()) {
      throw SemanticError("boundary given for degree " + std::to_string(n) +
                          " outside 1.." + std::to_string(ranks.size() - 1));
    }
  }
  return ChainComplex(std::move(ranks), std::move(full));
}

IntMatrix ChainComplex::boundary(std::size_t n) const {
  if (n >= 1 && n < ranks_.size()) return boundaries_[n - 1];
  return IntMatrix(n == 0 ? 0 : rank(n - 1), rank(n));
}

IntMatrix ChainComplex::coboundary(std::size_t n) const {
  return boundary(n + 1).transpose();
}

std::size_t ChainComplex::dimension() const noexcept {
  for (std::size_t n = ranks_.size(); n-- > 0;)
    if (ranks_[n] > 0) return n;
  return 0;
}

long ChainComplex::euler_characteristic() const noexcept {
  long chi = 0;
  for (std::size_t n = 0; n < ranks_.size(); ++n) {
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(ranks_[n]);
  }
  return chi;
}

Subquotient::Subquotient(IntMatrix cycle_basis, const IntMatrix& boundary_generators)
    : cycle_basis_(std::move(cycle_basis)) {
  if (boundary_generators.rows() != cycle_basis_.rows()) {
    throw SemanticError("boundary generators live in a different ambient lattice");
  }
  const std::size_t k = cycle_basis_.cols();
  IntMatrix coords(k, boundary_generators.cols());
  for (std::size_t j = 0; j < boundary_generators.cols(); ++j) {
    auto c = solve_integral(cycle_basis_, boundary_generators.column(j));
    if (!c) throw SemanticError("boundary generator is not a cycle");
    for (std::size_t i = 0; i < k; ++i) coords(i, j) = (*c)[i];
  }
  SmithForm f = smith_normal_form(coords);
  // Canonical order: free directions (indices >= rank), then torsion with
  // nontrivial invariant factor in increasing order.
  IntVector torsion;
  for (std::size_t s = f.rank; s < k; ++s) canonical_rows_.push_back(s);
  for (std::size_t s = 0; s < f.rank; ++s) {
    if (f.diagonal[s] != 1) {
      canonical_rows_.push_back(s);
      torsion.push_back(f.diagonal[s]);
    }
  }
  group_ = FgAbGroup::from_invariants(k - f.rank, std::move(torsion));
  IntMatrix gens(k, canonical_rows_.size());
  for (std::size_t g = 0; g < canonical_rows_.size(); ++g)
    for (std::size_t i = 0; i < k; ++i) gens(i, g) = f.U_inverse(i, canonical_rows_[g]);
  representatives_ = cycle_basis_ * gens;
  to_diagonal_ = std::move(f.U);
}

IntVector Subquotient::coordinates(const IntVector& cycle) const {
  auto c = solve_integral(cycle_basis_, cycle);
  if (!c) throw SemanticError("vector is not in the cycle lattice");
  IntVector y = to_diagonal_ * *c;
  IntVector out(canonical_rows_.size());
  for (std::size_t g = 0; g < canonical_rows_.size(); ++g) out[g] = y[canonical_rows_[g]];
  return normalize_coordinates(group_, std::move(out));
}

Subquotient cycle_subquotient(const ChainComplex& c, std::size_t n) {
  return Subquotient(kernel_basis(c.boundary(n)), c.boundary(n + 1));
}

Subquotient cocycle_subquotient(const ChainComplex& c, std::size_t n, const Integer& modulus) {
  if (sgn(modulus) < 0 || modulus == 1) {
    throw SemanticError("coefficient modulus must be 0 (integers) or at least 2");
  }
  const IntMatrix delta = c.coboundary(n);
  const IntMatrix prev = n == 0 ? IntMatrix(c.rank(0), 0) : c.coboundary(n - 1);
  if (sgn(modulus) == 0) return Subquotient(kernel_basis(delta), prev);

  // Cocycles mod m: x with delta x in m Z^{next}; boundaries: im delta + m Z^n.
  const std::size_t here = c.rank(n);
  IntMatrix m_next = IntMatrix::identity(delta.rows());
  for (std::size_t i = 0; i < m_next.rows(); ++i) m_next(i, i) = modulus;
  IntMatrix ker = kernel_basis(delta.hstack(m_next));
  IntMatrix x_part(here, ker.cols());
  for (std::size_t i = 0; i < here; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) x_part(i, j) = ker(i, j);
  IntMatrix m_here = IntMatrix::identity(here);
  for (std::size_t i = 0; i < here; ++i) m_here(i, i) = modulus;
  return Subquotient(image_basis(x_part), prev.hstack(m_here));
}

FgAbGroup homology(const ChainComplex& c, std::size_t n) {
  if (n > c.top_degree()) return FgAbGroup();
  return cycle_subquotient(c, n).group();
}

FgAbGroup cohomology(const ChainComplex& c, std::size_t n, const Integer& modulus) {
  if (n > c.top_degree()) {
    if (sgn(modulus) < 0 || modulus == 1) {
      throw SemanticError("coefficient modulus must be 0 (integers) or at least 2");
    }
    return FgAbGroup();
  }
  return cocycle_subquotient(c, n, modulus).group();
}

UctDecomposition uct_decompose(const ChainComplex& c, std::size_t n) {
  UctDecomposition u;
  u.degree = n;
  const FgAbGroup z = FgAbGroup::free(1);
  u.ext_part = n == 0 ? FgAbGroup() : ext1(homology(c, n - 1), z);
  u.hom_part = hom(homology(c, n), z);
  u.total = cohomology(c, n);
  return u;
}

GroupHom bockstein(const ChainComplex& c, std::size_t n, const Integer& m) {
  if (m < 2) throw SemanticError("Bockstein modulus must be at least 2");
  const Subquotient source = cocycle_subquotient(c, n, m);
  if (n + 1 > c.top_degree()) {
    return GroupHom::zero(source.group(), FgAbGroup());
  }
  const Subquotient target = cocycle_subquotient(c, n + 1, 0);
  const IntMatrix delta = c.coboundary(n);
  const IntMatrix& reps = source.representatives();
  IntMatrix images(target.group().generator_count(), reps.cols());
  for (std::size_t g = 0; g < reps.cols(); ++g) {
    IntVector lifted = delta * reps.column(g);
    for (auto& v : lifted) {
      if (!mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t())) {
        throw std::logic_error("mod-m cocycle representative has coboundary not divisible by m");
      }
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    }
    IntVector coords = target.coordinates(lifted);
    for (std::size_t i = 0; i < coords.size(); ++i) images(i, g) = coords[i];
  }
  return GroupHom(source.group(), target.group(), std::move(images));
}

ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d) {
  const std::size_t top = c.top_degree() + d.top_degree();
  // offsets[n][p]: position of the C_p (x) D_{n-p} block inside degree n.
  std::vector<std::vector<std::size_t>> offsets(top + 1, std::vector<std::size_t>(c.top_degree() + 1, 0));
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t n = 0; n <= top; ++n) {
    for (std::size_t p = 0; p <= c.top_degree() && p <= n; ++p) {
      const std::size_t q = n - p;
      if (q > d.top_degree()) continue;
      offsets[n][p] = ranks[n];
      ranks[n] += c.rank(p) * d.rank(q);
    }
  }
  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= top; ++n) {
    IntMatrix b(ranks[n - 1], ranks[n]);
    for (std::size_t p = 0; p <= c.top_degree() && p <= n; ++p) {
      const std::size_t q = n - p;
      if (q > d.top_degree()) continue;
      const IntMatrix dc = c.boundary(p);
      const IntMatrix dd = d.boundary(q);
      const std::size_t rc = c.rank(p), rd = d.rank(q);
      for (std::size_t i = 0; i < rc; ++i) {
        for (std::size_t j = 0; j < rd; ++j) {
          const std::size_t col = offsets[n][p] + i * rd + j;
          if (p >= 1) {
            // dx (x) y in C_{p-1} (x) D_q
            for (std::size_t k = 0; k < c.rank(p - 1); ++k) {
              b(offsets[n - 1][p - 1] + k * rd + j, col) += dc(k, i);
            }
          }
          if (q >= 1) {
            // (-1)^p x (x) dy in C_p (x) D_{q-1}
            const std::size_t rd_below = d.rank(q - 1);
            for (std::size_t l = 0; l < rd_below; ++l) {
              if (p % 2 == 0) {
                b(offsets[n - 1][p] + i * rd_below + l, col) += dd(l, j);
              } else {
                b(offsets[n - 1][p] + i * rd_below + l, col) -= dd(l, j);
              }
            }
          }
        }
      }
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex truncate(const ChainComplex& c, std::size_t k) {
  if (k > c.top_degree()) {
    throw SemanticError("cannot truncate at degree " + std::to_string(k) +
                        " above the top degree " + std::to_string(c.top_degree()));
  }
  std::vector<std::size_t> ranks(c.ranks().begin(), c.ranks().begin() + static_cast<std::ptrdiff_t>(k + 1));
  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= k; ++n) boundaries.push_back(c.boundary(n));
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex dual(const ChainComplex& c) {
  const std::size_t top = c.top_degree();
  std::vector<std::size_t> ranks(top + 1);
  for (std::size_t k = 0; k <= top; ++k) ranks[k] = c.rank(top - k);
  std::vector<IntMatrix> boundaries;
  for (std::size_t k = 1; k <= top; ++k) boundaries.push_back(c.boundary(top - k + 1).transpose());
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

}  // namespace brauer
