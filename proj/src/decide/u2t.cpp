#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "tropid/decide.hpp"
#include "tropid/error.hpp"
#include "tropid/polyfun.hpp"

namespace tropid::decide {

  namespace {

    using polyfun::Basis;
    using polyfun::Coordinate;
    using polyfun::MaxPlusPoly;
    using polyfun::Slot;

    // Representative variable for the diagonal entries of each variable.
    std::map<words::Var, words::Var> diagonal_representatives(words::VarSet const&              vars,
                                                              std::optional<DiagClasses> const& classes) {
      std::map<words::Var, words::Var> rep;
      for (auto const& v : vars) {
        rep.insert_or_assign(v, v);
      }
      if (!classes) {
        return rep;
      }
      words::VarSet seen;
      for (auto const& cls : *classes) {
        if (cls.empty()) {
          continue;
        }
        for (auto const& v : cls) {
          if (!seen.insert(v).second) {
            throw UsageError("variable '" + v.name() + "' appears in two diagonal classes");
          }
          rep.insert_or_assign(v, *cls.begin());
        }
      }
      return rep;
    }

    struct ReducedSystem {
      Basis                                 basis;
      std::map<words::Var, std::size_t>     a_index, b_index, c_index;
      std::vector<std::vector<MaxPlusPoly>> entries;  // [side][entry]
    };

    ReducedSystem reduce(words::Identity const& id, std::optional<DiagClasses> const& classes) {
      auto vars = words::content(id.lhs + id.rhs);
      auto rep  = diagonal_representatives(vars, classes);

      std::set<Coordinate> coords;
      for (auto const& v : vars) {
        coords.insert({rep.at(v), Slot::a});
        coords.insert({v, Slot::b});
        coords.insert({rep.at(v), Slot::c});
      }
      ReducedSystem sys;
      sys.basis.assign(coords.begin(), coords.end());
      auto index = [&](Coordinate const& c) {
        return static_cast<std::size_t>(std::lower_bound(sys.basis.begin(), sys.basis.end(), c) - sys.basis.begin());
      };
      for (auto const& v : vars) {
        sys.a_index[v] = index({rep.at(v), Slot::a});
        sys.b_index[v] = index({v, Slot::b});
        sys.c_index[v] = index({rep.at(v), Slot::c});
      }

      auto                     full = polyfun::u2_basis(vars);
      std::vector<std::size_t> map(full.size());
      for (std::size_t i = 0; i < full.size(); ++i) {
        auto const& c = full[i];
        map[i]        = c.slot == Slot::a ? sys.a_index[c.var] : c.slot == Slot::b ? sys.b_index[c.var] : sys.c_index[c.var];
      }
      for (auto const* w : {&id.lhs, &id.rhs}) {
        auto polys = polyfun::u2_entry_polys(*w, full);
        sys.entries.push_back({polyfun::reindex(polys.p11, sys.basis, map),
                               polyfun::reindex(polys.p12, sys.basis, map),
                               polyfun::reindex(polys.p22, sys.basis, map)});
      }
      return sys;
    }

    std::uint32_t support(polyfun::Exponent const& e) {
      std::uint32_t s = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) {
          s |= 1u << i;
        }
      }
      return s;
    }

    trop::MatrixAssignment witness_matrices(ReducedSystem const& sys, std::uint32_t finite, std::vector<mpz_class> const& x) {
      trop::MatrixAssignment phi;
      auto entry = [&](std::size_t i) {
        return (finite >> i & 1u) ? trop::TropScalar(mpq_class(x[i])) : trop::TropScalar::bottom();
      };
      for (auto const& [v, ia] : sys.a_index) {
        trop::TropMatrix m(2);
        m(0, 0) = entry(ia);
        m(0, 1) = entry(sys.b_index.at(v));
        m(1, 1) = entry(sys.c_index.at(v));
        phi.set(v, std::move(m));
      }
      return phi;
    }

  }  // namespace

  DiagClasses parse_diag_classes(std::string_view text) {
    DiagClasses out;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end   = text.find(';', start);
      auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      if (piece.find_first_not_of(" \t") != std::string_view::npos) {
        auto w = words::parse_word(piece);
        for (auto const& v : words::content(w)) {
          for (auto const& c : out) {
            if (c.contains(v)) {
              throw UsageError("variable '" + v.name() + "' appears in two diagonal classes");
            }
          }
        }
        out.push_back(words::content(w));
      }
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    if (out.empty()) {
      throw UsageError("no diagonal classes given");
    }
    return out;
  }

  std::optional<trop::MatrixAssignment> random_falsify_u2(words::Identity const&            id,
                                                          std::optional<DiagClasses> const& classes,
                                                          Scalars                           scalars,
                                                          std::uint64_t                     trials,
                                                          std::uint64_t                     seed) {
    auto vars = words::content(id.lhs + id.rhs);
    auto rep  = diagonal_representatives(vars, classes);
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::seed_seq                        sseq{seed, t, std::uint64_t{2}};
      std::mt19937_64                      rng(sseq);
      std::uniform_int_distribution<long>  value(-6, 6);
      std::uniform_int_distribution<long>  den(1, 4);
      std::uniform_int_distribution<int>   dead(0, 5);
      auto draw = [&]() {
        if (dead(rng) == 0) {
          return trop::TropScalar::bottom();
        }
        long num = value(rng);
        return scalars == Scalars::integers ? trop::TropScalar(num) : trop::TropScalar(mpq_class(num, den(rng)));
      };
      std::map<words::Var, std::pair<trop::TropScalar, trop::TropScalar>> diag;
      for (auto const& v : vars) {
        auto r = rep.at(v);
        if (!diag.contains(r)) {
          auto a = draw();
          auto c = draw();
          diag.emplace(r, std::make_pair(a, c));
        }
      }
      trop::MatrixAssignment phi;
      for (auto const& v : vars) {
        trop::TropMatrix m(2);
        m(0, 0) = diag.at(rep.at(v)).first;
        m(0, 1) = draw();
        m(1, 1) = diag.at(rep.at(v)).second;
        phi.set(v, std::move(m));
      }
      if (!(trop::eval_word_matrix(id.lhs, phi) == trop::eval_word_matrix(id.rhs, phi))) {
        return phi;
      }
    }
    return std::nullopt;
  }

  Verdict holds_u2t(words::Identity const&            id,
                    std::optional<DiagClasses> const& classes,
                    Scalars                           scalars,
                    Options const&                    opts) {
    if (id.lhs.empty() || id.rhs.empty()) {
      throw UsageError("identity sides must be nonempty");
    }
    Verdict verdict;
    if (id.trivial()) {
      return verdict;
    }
    auto vars = words::content(id.lhs + id.rhs);
    if (vars.size() > opts.max_exact_u2_vars) {
      verdict.method = Method::falsifier;
      if (auto w = random_falsify_u2(id, classes, scalars, opts.falsifier_trials, opts.seed)) {
        verdict.status  = Status::fails;
        verdict.witness = std::move(*w);
      }
      return verdict;
    }

    auto        sys = reduce(id, classes);
    std::size_t d   = sys.basis.size();

    std::vector<std::vector<std::vector<std::uint32_t>>> supports(2, std::vector<std::vector<std::uint32_t>>(3));
    for (std::size_t side = 0; side < 2; ++side) {
      for (std::size_t e = 0; e < 3; ++e) {
        for (auto const& m : sys.entries[side][e].monomials()) {
          supports[side][e].push_back(support(m));
        }
      }
    }

    // Patterns with the same surviving monomials give the same comparison.
    std::set<std::tuple<std::size_t, std::vector<bool>, std::vector<bool>>> done;
    for (std::uint32_t finite = 0; finite < (1u << d); ++finite) {
      for (std::size_t e = 0; e < 3; ++e) {
        std::vector<bool> alive[2];
        for (std::size_t side = 0; side < 2; ++side) {
          for (auto s : supports[side][e]) {
            alive[side].push_back((s & ~finite) == 0);
          }
        }
        if (!done.emplace(e, alive[0], alive[1]).second) {
          continue;
        }
        MaxPlusPoly sides[2] = {MaxPlusPoly(sys.basis), MaxPlusPoly(sys.basis)};
        for (std::size_t side = 0; side < 2; ++side) {
          auto const& ms = sys.entries[side][e].monomials();
          for (std::size_t k = 0; k < ms.size(); ++k) {
            if (alive[side][k]) {
              sides[side].insert(ms[k]);
            }
          }
        }
        auto eq = polyfun::equivalent(sides[0], sides[1], polyfun::Cone::full_space);
        if (eq.equivalent) {
          continue;
        }
        verdict.status = Status::fails;
        auto phi       = witness_matrices(sys, finite, polyfun::scale_to_integers(eq.separation));
        if (witness_separates(id, phi)) {
          verdict.witness = std::move(phi);
          return verdict;
        }
        if (auto w = random_falsify_u2(id, classes, scalars, opts.falsifier_trials, opts.seed)) {
          verdict.witness = std::move(*w);
          return verdict;
        }
        throw std::logic_error("holds_u2t: separation found but no witness for " + id.to_string());
      }
    }
    return verdict;
  }

}  // namespace tropid::decide
