#pragma once

// Max-plus polynomials without constant terms: finite sets of integer
// exponent vectors, each read as a linear form, the polynomial being their
// pointwise maximum. The empty set is the constant -inf.
//
// Two such functions are compared by convex domination. A form e is bounded
// by max_s <s, x> for every x
//   * in R^d      iff e lies in the convex hull of S;
//   * in R^d_{>=0} iff some convex combination of S dominates e
//                     componentwise.
// Both are decided by an exact LP. When domination fails the Farkas ray of
// the LP is turned into a point of the cone at which e strictly exceeds
// every form of S. The forms are positively homogeneous, so agreement on
// N^d, Q^d_{>=0} and R^d_{>=0} coincide, which is what lets the bicyclic
// checker work over the real orthant.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropid/words.hpp"

namespace tropid::polyfun {

  enum class Slot { a, b, c };

  struct Coordinate {
    words::Var var;
    Slot       slot;

    bool        operator==(Coordinate const&) const = default;
    auto        operator<=>(Coordinate const&) const = default;
    std::string to_string() const;
  };

  using Basis    = std::vector<Coordinate>;
  using Exponent = std::vector<std::int64_t>;
  using Point    = std::vector<mpq_class>;

  enum class Cone { full_space, nonnegative_orthant };

  class MaxPlusPoly {
   public:
    explicit MaxPlusPoly(Basis basis) : _basis(std::move(basis)) {}
    MaxPlusPoly(Basis basis, std::vector<Exponent> monomials);

    Basis const& basis() const noexcept {
      return _basis;
    }
    // Sorted, duplicate-free.
    std::vector<Exponent> const& monomials() const noexcept {
      return _monomials;
    }
    bool is_bottom() const noexcept {
      return _monomials.empty();
    }
    std::size_t size() const noexcept {
      return _monomials.size();
    }

    void insert(Exponent e);
    // Pointwise maximum; nullopt for the constant -inf.
    std::optional<mpq_class> evaluate(Point const& x) const;

    bool operator==(MaxPlusPoly const&) const = default;

    // Basis header, then one monomial per line as `coord^k` terms joined by
    // " + ", in sorted monomial order.
    std::string dump() const;

   private:
    Basis                 _basis;
    std::vector<Exponent> _monomials;
  };

  struct DominationResult {
    bool  dominated = false;
    Point weights;     // convex weights over S, when dominated
    Point separation;  // a point of the cone with <e,x> > max_s <s,x>, otherwise
  };

  DominationResult dominated(Exponent const& e, std::vector<Exponent> const& s, Cone cone);

  // Drops every monomial dominated by the remaining ones over the cone.
  MaxPlusPoly canonicalize(MaxPlusPoly const& p, Cone cone);

  struct EquivalenceResult {
    bool equivalent = false;
    // When not equivalent: a point of the cone at which the two functions
    // differ, and which side is larger there.
    Point separation;
    bool  lhs_larger = false;
  };

  EquivalenceResult equivalent(MaxPlusPoly const& p, MaxPlusPoly const& q, Cone cone);

  // Coordinate basis a_x, b_x, c_x (or a_x, b_x) for the content of the word,
  // variables sorted by name.
  Basis u2_basis(words::VarSet const& vars);
  Basis bicyclic_basis(words::VarSet const& vars);

  struct U2Entries {
    MaxPlusPoly p11, p12, p22;
  };

  // Symbolic product of upper-triangular 2×2 matrices [[a_x, b_x], [-inf, c_x]]
  // along the word, over the given basis. Not canonicalised: p12 has one
  // monomial per position of w (fewer only if two positions coincide).
  U2Entries u2_entry_polys(words::Word const& w, Basis const& basis);
  U2Entries u2_entry_polys(words::Word const& w);

  struct BicyclicPolys {
    MaxPlusPoly p_b;  // exponent of B in the normal form
    MaxPlusPoly p_a;  // exponent of A in the normal form
  };

  // Symbolic left fold of the bicyclic product with x -> B^{a_x} A^{b_x},
  // canonicalised over the orthant after every step.
  BicyclicPolys bicyclic_value_polys(words::Word const& w, Basis const& basis);
  BicyclicPolys bicyclic_value_polys(words::Word const& w);

  // Substitutes identified coordinates: coordinate i of the source basis is
  // sent to target index map[i].
  MaxPlusPoly reindex(MaxPlusPoly const& p, Basis const& target, std::vector<std::size_t> const& map);

  // Scales a rational point by the least common multiple of its
  // denominators. Preserves strict inequalities between homogeneous forms.
  std::vector<mpz_class> scale_to_integers(Point const& x);

}  // namespace tropid::polyfun
