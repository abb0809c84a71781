#include "tropid/polyfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tropid/error.hpp"
#include "tropid/lp.hpp"

namespace tropid::polyfun {

  namespace {

    mpq_class dot(Exponent const& e, Point const& x) {
      mpq_class s = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) {
          s += mpq_class(static_cast<long>(e[i])) * x[i];
        }
      }
      return s;
    }

    bool componentwise_geq(Exponent const& s, Exponent const& e) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (s[i] < e[i]) {
          return false;
        }
      }
      return true;
    }

    void require_same_basis(MaxPlusPoly const& p, MaxPlusPoly const& q) {
      if (p.basis() != q.basis()) {
        throw UsageError("max-plus polynomials over different coordinate bases");
      }
    }

    char slot_name(Slot s) {
      switch (s) {
        case Slot::a:
          return 'a';
        case Slot::b:
          return 'b';
        case Slot::c:
          return 'c';
      }
      return '?';
    }

    std::size_t index_of(Basis const& basis, Coordinate const& c) {
      auto it = std::lower_bound(basis.begin(), basis.end(), c);
      if (it == basis.end() || !(*it == c)) {
        throw UsageError("coordinate " + c.to_string() + " is not in the basis");
      }
      return static_cast<std::size_t>(it - basis.begin());
    }

  }  // namespace

  std::string Coordinate::to_string() const {
    return std::string(1, slot_name(slot)) + "_" + var.name();
  }

  MaxPlusPoly::MaxPlusPoly(Basis basis, std::vector<Exponent> monomials) : _basis(std::move(basis)) {
    for (auto& e : monomials) {
      insert(std::move(e));
    }
  }

  void MaxPlusPoly::insert(Exponent e) {
    if (e.size() != _basis.size()) {
      throw UsageError("exponent vector length does not match the basis");
    }
    auto it = std::lower_bound(_monomials.begin(), _monomials.end(), e);
    if (it == _monomials.end() || *it != e) {
      _monomials.insert(it, std::move(e));
    }
  }

  std::optional<mpq_class> MaxPlusPoly::evaluate(Point const& x) const {
    if (x.size() != _basis.size()) {
      throw UsageError("evaluation point has the wrong dimension");
    }
    std::optional<mpq_class> best;
    for (auto const& e : _monomials) {
      mpq_class v = dot(e, x);
      if (!best || v > *best) {
        best = std::move(v);
      }
    }
    return best;
  }

  std::string MaxPlusPoly::dump() const {
    std::string out = "basis:";
    for (auto const& c : _basis) {
      out += " " + c.to_string();
    }
    out += "\n";
    if (_monomials.empty()) {
      return out + "-inf\n";
    }
    for (auto const& e : _monomials) {
      std::string line;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
          continue;
        }
        if (!line.empty()) {
          line += " + ";
        }
        line += _basis[i].to_string() + "^" + std::to_string(e[i]);
      }
      out += (line.empty() ? "0" : line) + "\n";
    }
    return out;
  }

  DominationResult dominated(Exponent const& e, std::vector<Exponent> const& s, Cone cone) {
    for (auto const& t : s) {
      if (t.size() != e.size()) {
        throw UsageError("dominated: exponent vectors over different bases");
      }
    }
    std::size_t const d = e.size();
    DominationResult  result;

    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == e || (cone == Cone::nonnegative_orthant && componentwise_geq(s[k], e))) {
        result.dominated = true;
        result.weights.assign(s.size(), mpq_class(0));
        result.weights[k] = 1;
        return result;
      }
    }

    // Coordinates on which every vector vanishes impose nothing.
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < d; ++i) {
      bool used = e[i] != 0 || std::any_of(s.begin(), s.end(), [i](Exponent const& t) { return t[i] != 0; });
      if (used) {
        rows.push_back(i);
      }
    }

    std::size_t const r     = rows.size();
    std::size_t const slack = cone == Cone::nonnegative_orthant ? r : 0;
    lp::Matrix        a(r + 1, s.size() + slack);
    lp::Vector        b(r + 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        a(i, k) = static_cast<long>(s[k][rows[i]]);
      }
      if (slack != 0) {
        a(i, s.size() + i) = -1;
      }
      b[i] = static_cast<long>(e[rows[i]]);
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      a(r, k) = 1;
    }
    b[r] = 1;

    auto lp_result = lp::solve_feasibility(a, b);
    if (lp_result.feasible) {
      result.dominated = true;
      result.weights.assign(lp_result.primal.begin(), lp_result.primal.begin() + static_cast<long>(s.size()));
      return result;
    }

    result.separation.assign(d, mpq_class(0));
    for (std::size_t i = 0; i < r; ++i) {
      result.separation[rows[i]] = -lp_result.farkas[i];
    }
    mpq_class ev = dot(e, result.separation);
    for (auto const& t : s) {
      if (!(dot(t, result.separation) < ev)) {
        throw std::logic_error("dominated: separating point does not separate");
      }
    }
    return result;
  }

  MaxPlusPoly canonicalize(MaxPlusPoly const& p, Cone cone) {
    std::vector<Exponent> keep = p.monomials();
    for (std::size_t i = 0; i < keep.size();) {
      std::vector<Exponent> rest;
      rest.reserve(keep.size() - 1);
      for (std::size_t k = 0; k < keep.size(); ++k) {
        if (k != i) {
          rest.push_back(keep[k]);
        }
      }
      if (!rest.empty() && dominated(keep[i], rest, cone).dominated) {
        keep.erase(keep.begin() + static_cast<long>(i));
      } else {
        ++i;
      }
    }
    return MaxPlusPoly(p.basis(), std::move(keep));
  }

  EquivalenceResult equivalent(MaxPlusPoly const& p, MaxPlusPoly const& q, Cone cone) {
    require_same_basis(p, q);
    EquivalenceResult result;
    if (p.monomials() == q.monomials()) {
      result.equivalent = true;
      return result;
    }
    if (p.is_bottom() || q.is_bottom()) {
      result.separation.assign(p.basis().size(), mpq_class(0));
      result.lhs_larger = q.is_bottom();
      return result;
    }
    auto one_way = [&](MaxPlusPoly const& lo, MaxPlusPoly const& hi) -> std::optional<Point> {
      for (auto const& e : lo.monomials()) {
        if (std::binary_search(hi.monomials().begin(), hi.monomials().end(), e)) {
          continue;
        }
        auto d = dominated(e, hi.monomials(), cone);
        if (!d.dominated) {
          return d.separation;
        }
      }
      return std::nullopt;
    };
    if (auto sep = one_way(p, q)) {
      result.separation = std::move(*sep);
      result.lhs_larger = true;
      return result;
    }
    if (auto sep = one_way(q, p)) {
      result.separation = std::move(*sep);
      result.lhs_larger = false;
      return result;
    }
    result.equivalent = true;
    return result;
  }

  Basis u2_basis(words::VarSet const& vars) {
    Basis basis;
    for (auto const& v : vars) {
      for (Slot s : {Slot::a, Slot::b, Slot::c}) {
        basis.push_back({v, s});
      }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
  }

  Basis bicyclic_basis(words::VarSet const& vars) {
    Basis basis;
    for (auto const& v : vars) {
      for (Slot s : {Slot::a, Slot::b}) {
        basis.push_back({v, s});
      }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
  }

  U2Entries u2_entry_polys(words::Word const& w, Basis const& basis) {
    if (w.empty()) {
      throw UsageError("u2_entry_polys: empty word");
    }
    std::size_t const        d = basis.size(), n = w.size();
    std::vector<std::size_t> ia(n), ib(n), ic(n);
    for (std::size_t j = 0; j < n; ++j) {
      ia[j] = index_of(basis, {w[j], Slot::a});
      ib[j] = index_of(basis, {w[j], Slot::b});
      ic[j] = index_of(basis, {w[j], Slot::c});
    }
    Exponent diag_a(d, 0), diag_c(d, 0);
    for (std::size_t j = 0; j < n; ++j) {
      ++diag_a[ia[j]];
      ++diag_c[ic[j]];
    }
    U2Entries out{MaxPlusPoly(basis), MaxPlusPoly(basis), MaxPlusPoly(basis)};
    out.p11.insert(diag_a);
    out.p22.insert(diag_c);
    // Position j: a's of the prefix, b of letter j, c's of the suffix.
    Exponent prefix(d, 0), suffix = diag_c;
    for (std::size_t j = 0; j < n; ++j) {
      --suffix[ic[j]];
      Exponent m(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        m[i] = prefix[i] + suffix[i];
      }
      ++m[ib[j]];
      out.p12.insert(std::move(m));
      ++prefix[ia[j]];
    }
    return out;
  }

  U2Entries u2_entry_polys(words::Word const& w) {
    return u2_entry_polys(w, u2_basis(words::content(w)));
  }

  BicyclicPolys bicyclic_value_polys(words::Word const& w, Basis const& basis) {
    if (w.empty()) {
      throw UsageError("bicyclic_value_polys: empty word");
    }
    std::size_t const d = basis.size();
    // State: P (B-exponent) and the linear form L = (A-exponent) - P.
    MaxPlusPoly p(basis);
    Exponent    level(d, 0);
    for (std::size_t j = 0; j < w.size(); ++j) {
      std::size_t ia = index_of(basis, {w[j], Slot::a});
      std::size_t ib = index_of(basis, {w[j], Slot::b});
      // max(P, a_x - L)
      Exponent m(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        m[i] = -level[i];
      }
      ++m[ia];
      p.insert(std::move(m));
      if (j > 0) {
        p = canonicalize(p, Cone::nonnegative_orthant);
      }
      ++level[ib];
      --level[ia];
    }
    MaxPlusPoly q(basis);
    for (auto const& m : p.monomials()) {
      Exponent shifted = m;
      for (std::size_t i = 0; i < d; ++i) {
        shifted[i] += level[i];
      }
      q.insert(std::move(shifted));
    }
    return {std::move(p), std::move(q)};
  }

  BicyclicPolys bicyclic_value_polys(words::Word const& w) {
    return bicyclic_value_polys(w, bicyclic_basis(words::content(w)));
  }

  MaxPlusPoly reindex(MaxPlusPoly const& p, Basis const& target, std::vector<std::size_t> const& map) {
    if (map.size() != p.basis().size()) {
      throw UsageError("reindex: map length does not match the source basis");
    }
    MaxPlusPoly out(target);
    for (auto const& e : p.monomials()) {
      Exponent t(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        t.at(map[i]) += e[i];
      }
      out.insert(std::move(t));
    }
    return out;
  }

  std::vector<mpz_class> scale_to_integers(Point const& x) {
    mpz_class l = 1;
    for (auto const& v : x) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<mpz_class> out;
    out.reserve(x.size());
    for (auto const& v : x) {
      out.push_back(v.get_num() * (l / v.get_den()));
    }
    return out;
  }

}  // namespace tropid::polyfun
