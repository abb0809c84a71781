#include <stdexcept>

#include "tropid/decide.hpp"
#include "tropid/polyfun.hpp"

namespace tropid::decide {

  namespace {

    using polyfun::Cone;

    std::optional<bicyclic::BicyclicAssignment> witness_from_point(words::Identity const& id,
                                                                   polyfun::Basis const&  basis,
                                                                   polyfun::Point const&  point) {
      auto                         scaled = polyfun::scale_to_integers(point);
      bicyclic::BicyclicAssignment phi;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        mpz_class v = scaled[i] < 0 ? mpz_class(0) : scaled[i];
        auto&     e = phi.try_emplace(basis[i].var, bicyclic::BicyclicElement::identity()).first->second;
        (basis[i].slot == polyfun::Slot::a ? e.a : e.b) = v;
      }
      if (witness_separates(id, phi)) {
        return phi;
      }
      return std::nullopt;
    }

  }  // namespace

  Verdict holds_bicyclic(words::Identity const& id, Options const& opts) {
    Verdict verdict;
    if (auto w = bicyclic::imbalance_witness(id)) {
      verdict.status  = Status::fails;
      verdict.witness = std::move(*w);
      return verdict;
    }
    if (id.trivial()) {
      return verdict;
    }
    auto basis = polyfun::bicyclic_basis(words::content(id.lhs + id.rhs));
    auto lhs   = polyfun::bicyclic_value_polys(id.lhs, basis);
    auto rhs   = polyfun::bicyclic_value_polys(id.rhs, basis);

    for (auto [l, r] : {std::pair{&lhs.p_b, &rhs.p_b}, std::pair{&lhs.p_a, &rhs.p_a}}) {
      auto eq = polyfun::equivalent(*l, *r, Cone::nonnegative_orthant);
      if (eq.equivalent) {
        continue;
      }
      verdict.status = Status::fails;
      if (auto w = witness_from_point(id, basis, eq.separation)) {
        verdict.witness = std::move(*w);
        return verdict;
      }
      // Degenerate direction; search nearby with the seeded falsifier.
      for (std::uint64_t bound = opts.falsifier_bound; bound <= 1024; bound *= 4) {
        if (auto w = bicyclic::random_falsify(id, bound, opts.falsifier_trials, opts.seed)) {
          verdict.witness = std::move(*w);
          return verdict;
        }
      }
      throw std::logic_error("holds_bicyclic: separation found but no witness for " + id.to_string());
    }
    return verdict;
  }

}  // namespace tropid::decide
