#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "tropid/bicyclic.hpp"
#include "tropid/error.hpp"
#include "tropid/polyfun.hpp"

using namespace tropid;
using namespace tropid::polyfun;

namespace {

  mpq_class dot(Exponent const& e, Point const& x) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      s += mpq_class(static_cast<long>(e[i])) * x[i];
    }
    return s;
  }

  mpq_class max_dot(std::vector<Exponent> const& s, Point const& x) {
    mpq_class best = dot(s.front(), x);
    for (auto const& t : s) {
      best = std::max(best, dot(t, x));
    }
    return best;
  }

  bool in_cone(Point const& x, Cone cone) {
    return cone == Cone::full_space || std::all_of(x.begin(), x.end(), [](mpq_class const& v) { return v >= 0; });
  }

  Point random_point(std::mt19937_64& rng, std::size_t d, Cone cone) {
    std::uniform_int_distribution<int> num(cone == Cone::full_space ? -9 : 0, 9), den(1, 4);
    Point                              x;
    for (std::size_t i = 0; i < d; ++i) {
      x.emplace_back(num(rng), den(rng));
      x.back().canonicalize();
    }
    return x;
  }

  std::vector<Exponent> random_exponents(std::mt19937_64& rng, std::size_t count, std::size_t d) {
    std::uniform_int_distribution<int> v(-2, 3);
    std::vector<Exponent>              s(count, Exponent(d));
    for (auto& e : s) {
      for (auto& c : e) {
        c = v(rng);
      }
    }
    return s;
  }

  void check_certificate(Exponent const& e, std::vector<Exponent> const& s, Cone cone, DominationResult const& r) {
    if (r.dominated) {
      REQUIRE(r.weights.size() == s.size());
      mpq_class total = 0;
      Point     combo(e.size(), mpq_class(0));
      for (std::size_t k = 0; k < s.size(); ++k) {
        REQUIRE(r.weights[k] >= 0);
        total += r.weights[k];
        for (std::size_t i = 0; i < e.size(); ++i) {
          combo[i] += r.weights[k] * s[k][i];
        }
      }
      CHECK(total == 1);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (cone == Cone::full_space) {
          CHECK(combo[i] == e[i]);
        } else {
          CHECK(combo[i] >= e[i]);
        }
      }
    } else {
      REQUIRE(r.separation.size() == e.size());
      CHECK(in_cone(r.separation, cone));
      CHECK(dot(e, r.separation) > max_dot(s, r.separation));
    }
  }

}  // namespace

TEST_CASE("domination examples") {
  // Only the midpoint (1, 1) of (0, 2) and (2, 0) reaches (1, 1) on both coordinates.
  std::vector<Exponent> s{{0, 2}, {2, 0}};
  auto                  orth = dominated({1, 1}, s, Cone::nonnegative_orthant);
  REQUIRE(orth.dominated);
  CHECK(orth.weights == Point{mpq_class(1, 2), mpq_class(1, 2)});
  check_certificate({1, 1}, s, Cone::nonnegative_orthant, orth);

  // (1, 0) is below (2, 0) but off the segment.
  auto below = dominated({1, 0}, s, Cone::nonnegative_orthant);
  REQUIRE(below.dominated);
  check_certificate({1, 0}, s, Cone::nonnegative_orthant, below);
  auto full = dominated({1, 0}, s, Cone::full_space);
  CHECK_FALSE(full.dominated);
  check_certificate({1, 0}, s, Cone::full_space, full);

  std::vector<Exponent> diag{{0, 0}, {2, 2}};
  auto                  mid = dominated({1, 1}, diag, Cone::full_space);
  REQUIRE(mid.dominated);
  CHECK(mid.weights == Point{mpq_class(1, 2), mpq_class(1, 2)});

  auto outside = dominated({3, 0}, diag, Cone::nonnegative_orthant);
  CHECK_FALSE(outside.dominated);
  check_certificate({3, 0}, diag, Cone::nonnegative_orthant, outside);

  CHECK_FALSE(dominated({0, 0}, {}, Cone::full_space).dominated);
  CHECK_THROWS_AS(dominated({0, 0}, {{1, 2, 3}}, Cone::full_space), UsageError);
}

TEST_CASE("domination certificates on random sets") {
  std::mt19937_64 rng(31);
  int             yes = 0, no = 0;
  for (int t = 0; t < 600; ++t) {
    std::size_t d    = 1 + t % 4;
    Cone        cone = t % 2 ? Cone::full_space : Cone::nonnegative_orthant;
    auto        s    = random_exponents(rng, 1 + t % 5, d);
    auto        e    = random_exponents(rng, 1, d).front();
    auto        r    = dominated(e, s, cone);
    check_certificate(e, s, cone, r);
    (r.dominated ? yes : no)++;
    if (r.dominated) {
      for (int k = 0; k < 10; ++k) {
        auto x = random_point(rng, d, cone);
        CHECK(dot(e, x) <= max_dot(s, x));
      }
    }
  }
  CHECK(yes > 50);
  CHECK(no > 50);
}

TEST_CASE("equivalence examples") {
  Basis       xy = bicyclic_basis(words::content(words::Word::compact("x")));
  MaxPlusPoly p(xy, {{2, 0}, {0, 2}});
  MaxPlusPoly q(xy, {{2, 0}, {0, 2}, {1, 1}});
  CHECK(equivalent(p, q, Cone::full_space).equivalent);
  CHECK(equivalent(p, q, Cone::nonnegative_orthant).equivalent);

  MaxPlusPoly lin(xy, {{1, 0}});
  MaxPlusPoly clipped(xy, {{1, 0}, {0, 0}});
  CHECK(equivalent(lin, clipped, Cone::nonnegative_orthant).equivalent);
  auto r = equivalent(lin, clipped, Cone::full_space);
  REQUIRE_FALSE(r.equivalent);
  auto lv = lin.evaluate(r.separation), rv = clipped.evaluate(r.separation);
  REQUIRE(lv);
  REQUIRE(rv);
  CHECK(*lv != *rv);
  CHECK(r.lhs_larger == (*lv > *rv));

  MaxPlusPoly bottom(xy);
  CHECK(equivalent(bottom, MaxPlusPoly(xy), Cone::full_space).equivalent);
  CHECK_FALSE(equivalent(bottom, lin, Cone::full_space).equivalent);
}

TEST_CASE("canonicalize keeps the function and is idempotent") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    std::size_t d    = 1 + t % 3;
    Cone        cone = t % 2 ? Cone::full_space : Cone::nonnegative_orthant;
    Basis       basis;
    for (std::size_t i = 0; i < d; ++i) {
      basis.push_back({words::Var("x" + std::to_string(i + 1)), Slot::a});
    }
    MaxPlusPoly p(basis, random_exponents(rng, 1 + t % 6, d));
    auto        c = canonicalize(p, cone);
    CHECK(c.size() <= p.size());
    CHECK(canonicalize(c, cone) == c);
    CHECK(equivalent(p, c, cone).equivalent);
    for (int k = 0; k < 10; ++k) {
      auto x = random_point(rng, d, cone);
      CHECK(p.evaluate(x) == c.evaluate(x));
    }
  }
}

TEST_CASE("bicyclic value polynomials of xy") {
  auto w     = words::Word::compact("xy");
  auto polys = bicyclic_value_polys(w);
  // a_x + max(a_y - b_x, 0) and b_y + max(b_x - a_y, 0).
  CHECK(polys.p_b.monomials() == std::vector<Exponent>{{1, -1, 1, 0}, {1, 0, 0, 0}});
  CHECK(polys.p_a.monomials() == std::vector<Exponent>{{0, 0, 0, 1}, {0, 1, -1, 1}});
  CHECK(polys.p_b.dump() == "basis: a_x b_x a_y b_y\na_x^1 + b_x^-1 + a_y^1\na_x^1\n");
  CHECK(MaxPlusPoly(polys.p_b.basis()).dump() == "basis: a_x b_x a_y b_y\n-inf\n");
  CHECK(MaxPlusPoly(polys.p_b.basis(), {{0, 0, 0, 0}}).dump() == "basis: a_x b_x a_y b_y\n0\n");
}

TEST_CASE("bicyclic value polynomials agree with evaluation on every short word") {
  std::vector<std::string> all{""};
  std::vector<std::string> words_;
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::string> next;
    for (auto const& s : all) {
      for (char c : std::string("xyz")) {
        next.push_back(s + c);
      }
    }
    all = next;
    words_.insert(words_.end(), all.begin(), all.end());
  }
  words::Var const vars[] = {words::Var("x"), words::Var("y"), words::Var("z")};
  std::mt19937_64  rng(33);
  for (auto const& s : words_) {
    auto w     = words::Word::compact(s);
    auto basis = bicyclic_basis(words::content(words::Word::compact("xyz")));
    auto polys = bicyclic_value_polys(w, basis);
    for (int k = 0; k < 12; ++k) {
      std::uniform_int_distribution<long> ex(0, 4);
      bicyclic::BicyclicAssignment        phi;
      Point                               x;
      for (auto const& v : vars) {
        mpz_class a = ex(rng), b = ex(rng);
        phi[v]      = {a, b};
        x.emplace_back(a);
        x.emplace_back(b);
      }
      auto e = bicyclic::b_eval(w, phi);
      REQUIRE(polys.p_b.evaluate(x) == std::optional<mpq_class>(mpq_class(e.a)));
      REQUIRE(polys.p_a.evaluate(x) == std::optional<mpq_class>(mpq_class(e.b)));
    }
  }
}

TEST_CASE("upper-triangular entry polynomials agree with matrix products") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 300; ++t) {
    auto w       = testing::random_word(rng, "xyz", 1 + t % 9);
    auto vars    = words::content(w);
    auto basis   = u2_basis(vars);
    auto entries = u2_entry_polys(w, basis);
    CHECK(entries.p12.size() <= w.size());
    trop::MatrixAssignment phi;
    Point                  x;
    for (auto const& v : vars) {
      auto m = testing::random_upper(rng, false);
      phi.set(v, m);
      x.push_back(m(0, 0).value());
      x.push_back(m(0, 1).value());
      x.push_back(m(1, 1).value());
    }
    auto m = trop::eval_word_matrix(w, phi);
    CHECK(entries.p11.evaluate(x) == std::optional<mpq_class>(m(0, 0).value()));
    CHECK(entries.p12.evaluate(x) == std::optional<mpq_class>(m(0, 1).value()));
    CHECK(entries.p22.evaluate(x) == std::optional<mpq_class>(m(1, 1).value()));
  }
}

TEST_CASE("reindex identifies coordinates") {
  auto        w     = words::Word::compact("xy");
  auto        polys = bicyclic_value_polys(w);
  Basis       one{{words::Var("x"), Slot::a}, {words::Var("x"), Slot::b}};
  auto        p     = reindex(polys.p_b, one, {0, 1, 0, 1});
  MaxPlusPoly expected(one, {{2, -1}, {1, 0}});
  CHECK(p == expected);
}

TEST_CASE("scaling rational points to integers") {
  CHECK(scale_to_integers({mpq_class(1, 2), mpq_class(2, 3)}) == std::vector<mpz_class>{3, 4});
  CHECK(scale_to_integers({mpq_class(0), mpq_class(5)}) == std::vector<mpz_class>{0, 5});
  CHECK(scale_to_integers({mpq_class(-3, 4), mpq_class(1, 6)}) == std::vector<mpz_class>{-9, 2});
  std::mt19937_64 rng(35);
  for (int t = 0; t < 200; ++t) {
    auto x = random_point(rng, 3, Cone::full_space);
    auto z = scale_to_integers(x);
    REQUIRE(z.size() == 3);
    // One common positive factor maps x onto z.
    std::optional<mpq_class> factor;
    for (std::size_t i = 0; i < 3; ++i) {
      if (x[i] != 0) {
        mpq_class f = mpq_class(z[i]) / x[i];
        CHECK(f > 0);
        if (factor) {
          CHECK(*factor == f);
        }
        factor = f;
      } else {
        CHECK(z[i] == 0);
      }
    }
  }
}
