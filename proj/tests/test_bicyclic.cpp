#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "tropid/bicyclic.hpp"
#include "tropid/error.hpp"

using namespace tropid;
using namespace tropid::bicyclic;

namespace {

  BicyclicElement el(long a, long b) {
    return {mpz_class(a), mpz_class(b)};
  }

  // Evaluation by concatenating generator strings and reducing once.
  BicyclicElement eval_by_rewriting(words::Word const& w, BicyclicAssignment const& phi) {
    std::string s;
    for (auto const& v : w) {
      s += generator_string(phi.at(v));
    }
    return rewrite_oracle(s);
  }

  words::Identity id(std::string_view text) {
    return words::parse_identity(text);
  }

}  // namespace

TEST_CASE("rewriting oracle on hand examples") {
  CHECK(rewrite_oracle("") == el(0, 0));
  CHECK(rewrite_oracle("AB") == el(0, 0));
  CHECK(rewrite_oracle("BA") == el(1, 1));
  CHECK(rewrite_oracle("AAB") == el(0, 1));
  CHECK(rewrite_oracle("ABB") == el(1, 0));
  CHECK(rewrite_oracle("BBAAAB") == el(2, 2));
  CHECK(rewrite_oracle("AABBBAB") == el(1, 0));
  CHECK(generator_string(el(2, 3)) == "BBAAA");
  CHECK(generator_string(el(0, 0)).empty());
}

TEST_CASE("product agrees with rewriting for all exponents up to 10") {
  std::size_t checked = 0;
  for (long a = 0; a <= 10; ++a) {
    for (long b = 0; b <= 10; ++b) {
      for (long c = 0; c <= 10; ++c) {
        for (long d = 0; d <= 10; ++d) {
          auto p = el(a, b), q = el(c, d);
          REQUIRE(b_mul(p, q) == rewrite_oracle(generator_string(p) + generator_string(q)));
          SmallElement sp{a, b}, sq{c, d};
          auto         s = small_mul(sp, sq);
          REQUIRE(el(s.a, s.b) == b_mul(p, q));
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 14641);
}

TEST_CASE("product is associative with identity 1 and AB = 1") {
  for (long a = 0; a <= 5; ++a) {
    for (long b = 0; b <= 5; ++b) {
      auto p = el(a, b);
      CHECK(b_mul(p, BicyclicElement::identity()) == p);
      CHECK(b_mul(BicyclicElement::identity(), p) == p);
      for (long c = 0; c <= 5; ++c) {
        for (long d = 0; d <= 5; ++d) {
          auto q = el(c, d);
          for (long e = 0; e <= 5; ++e) {
            for (long f = 0; f <= 5; ++f) {
              auto r = el(e, f);
              REQUIRE(b_mul(b_mul(p, q), r) == b_mul(p, b_mul(q, r)));
            }
          }
        }
      }
    }
  }
  CHECK(b_mul(BicyclicElement::gen_a(), BicyclicElement::gen_b()) == BicyclicElement::identity());
  CHECK(b_mul(BicyclicElement::gen_b(), BicyclicElement::gen_a()) == el(1, 1));
}

TEST_CASE("word evaluation matches rewriting and is a homomorphism") {
  std::mt19937_64                       rng(11);
  std::uniform_int_distribution<long>   exp(0, 6);
  for (int t = 0; t < 500; ++t) {
    auto               w = testing::random_word(rng, "xyz", 1 + t % 12);
    BicyclicAssignment phi;
    for (auto const& v : words::content(words::Word::compact("xyz"))) {
      phi[v] = el(exp(rng), exp(rng));
    }
    CHECK(b_eval(w, phi) == eval_by_rewriting(w, phi));
    if (w.size() >= 2) {
      std::size_t k = 1 + t % (w.size() - 1);
      CHECK(b_eval(w, phi) == b_mul(b_eval(w.slice(0, k), phi), b_eval(w.slice(k, w.size() - k), phi)));
    }
  }
  CHECK(b_eval(words::Word{}, {}) == BicyclicElement::identity());
  CHECK_THROWS_AS(b_eval(words::Word::compact("q"), {}), UsageError);
}

TEST_CASE("the stated assignments separate the length-12 words") {
  words::Var         x("x"), y("y"), z("z");
  BicyclicAssignment first{{x, el(0, 2)}, {y, el(3, 0)}, {z, el(0, 3)}};
  CHECK(b_eval(words::Word::compact("xyzyxxyxyzyx"), first) == el(1, 2));
  CHECK(b_eval(words::Word::compact("xyzyxyxxyzyx"), first) == el(2, 3));
  CHECK(eval_by_rewriting(words::Word::compact("xyzyxxyxyzyx"), first) == el(1, 2));
  CHECK(eval_by_rewriting(words::Word::compact("xyzyxyxxyzyx"), first) == el(2, 3));

  BicyclicAssignment second{{x, el(2, 0)}, {y, el(0, 3)}, {z, el(3, 0)}};
  CHECK(b_eval(words::Word::compact("xyyzxxyxyyzx"), second) == el(3, 2));
  CHECK(b_eval(words::Word::compact("xyyzxyxxyyzx"), second) == el(2, 1));
  CHECK(eval_by_rewriting(words::Word::compact("xyyzxxyxyyzx"), second) == el(3, 2));
  CHECK(eval_by_rewriting(words::Word::compact("xyyzxyxxyyzx"), second) == el(2, 1));
}

TEST_CASE("random falsifier") {
  auto commutative = id("xy == yx");
  auto w           = random_falsify(commutative, 8, 1000, 7);
  REQUIRE(w);
  CHECK(b_eval(commutative.lhs, *w) != b_eval(commutative.rhs, *w));
  CHECK(eval_by_rewriting(commutative.lhs, *w) != eval_by_rewriting(commutative.rhs, *w));

  // Reproducible from the seed.
  auto again = random_falsify(commutative, 8, 1000, 7);
  REQUIRE(again);
  CHECK(*again == *w);

  CHECK_FALSE(random_falsify(words::adjan_identity(), 8, 2000, 7));
  CHECK_FALSE(random_falsify(id("xyyxxyxyyx == xyyxyxxyyx"), 8, 2000, 7));
  CHECK_FALSE(random_falsify(id("xy == xy"), 8, 10, 7));

  auto l12 = id("xyzyxxyxyzyx == xyzyxyxxyzyx");
  auto w12 = random_falsify(l12, 8, 10000, 1);
  REQUIRE(w12);
  CHECK(eval_by_rewriting(l12.lhs, *w12) != eval_by_rewriting(l12.rhs, *w12));
}

TEST_CASE("imbalance witness") {
  auto unbalanced = id("xxy == xy");
  auto w          = imbalance_witness(unbalanced);
  REQUIRE(w);
  CHECK(w->at(words::Var("x")) == BicyclicElement::gen_a());
  CHECK(w->at(words::Var("y")) == BicyclicElement::identity());
  CHECK(b_eval(unbalanced.lhs, *w) != b_eval(unbalanced.rhs, *w));
  CHECK_FALSE(imbalance_witness(id("xy == yx")));

  auto missing = id("xy == x");
  auto m       = imbalance_witness(missing);
  REQUIRE(m);
  CHECK(b_eval(missing.lhs, *m) != b_eval(missing.rhs, *m));
}

TEST_CASE("assignment bank fingerprints") {
  AssignmentBank bank(3, 16, 8, 5);
  CHECK(bank.size() == 16);
  std::vector<words::Var>   names{words::Var("x"), words::Var("y"), words::Var("z")};
  std::vector<std::uint8_t> word{0, 1, 2, 1, 0, 0};
  auto                      ww = words::Word::compact("xyzyxx");
  auto                      fp = bank.fingerprint(word);
  REQUIRE(fp.size() == 16);
  for (std::size_t i = 0; i < bank.size(); ++i) {
    for (std::size_t l = 0; l < 3; ++l) {
      CHECK(bank.value(i, l).a >= 0);
      CHECK(bank.value(i, l).a <= 8);
      CHECK(bank.value(i, l).b >= 0);
      CHECK(bank.value(i, l).b <= 8);
    }
    auto e = b_eval(ww, bank.to_assignment(i, names));
    CHECK(el(fp[i].a, fp[i].b) == e);
    CHECK(bank.eval(i, word) == fp[i]);
  }
  AssignmentBank same(3, 16, 8, 5);
  CHECK(same.fingerprint(word) == fp);
}

TEST_CASE("element text format") {
  CHECK(el(0, 0).to_string() == "1");
  CHECK(el(2, 0).to_string() == "B^2");
  CHECK(el(0, 3).to_string() == "A^3");
  CHECK(el(1, 2).to_string() == "B^1 A^2");
  CHECK(BicyclicElement::parse("A") == el(0, 1));
  CHECK(BicyclicElement::parse("B A^2") == el(1, 2));
  CHECK(BicyclicElement::parse("1") == el(0, 0));
  CHECK_THROWS_AS(BicyclicElement::parse("A B"), UsageError);
  CHECK_THROWS_AS(BicyclicElement::parse("A^-1"), UsageError);
  CHECK_THROWS_AS(BicyclicElement::parse(""), UsageError);
  CHECK_THROWS_AS(BicyclicElement::parse("C^2"), UsageError);
  for (long a = 0; a <= 4; ++a) {
    for (long b = 0; b <= 4; ++b) {
      CHECK(BicyclicElement::parse(el(a, b).to_string()) == el(a, b));
    }
  }
}
