#pragma once

// The bicyclic monoid <A, B | AB = 1>. Every element has the normal form
// B^a A^b, stored as the exponent pair (a, b).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropid/words.hpp"

namespace tropid::bicyclic {

  struct BicyclicElement {
    mpz_class a;  // exponent of B
    mpz_class b;  // exponent of A

    static BicyclicElement identity() {
      return {0, 0};
    }
    static BicyclicElement gen_a() {
      return {0, 1};
    }
    static BicyclicElement gen_b() {
      return {1, 0};
    }

    bool operator==(BicyclicElement const& that) const {
      return a == that.a && b == that.b;
    }

    // "B^a A^b" with zero factors omitted; the identity is "1".
    std::string            to_string() const;
    static BicyclicElement parse(std::string_view text);
  };

  // (a,b)(c,d) = (a + max(c-b, 0), d + max(b-c, 0)).
  BicyclicElement b_mul(BicyclicElement const& p, BicyclicElement const& q);

  using BicyclicAssignment = std::map<words::Var, BicyclicElement>;

  BicyclicElement b_eval(words::Word const& w, BicyclicAssignment const& phi);

  // Deletes factors "AB" until none remain. Independent of b_mul.
  BicyclicElement rewrite_oracle(std::string_view s);
  // The generator string B^a A^b of an element.
  std::string generator_string(BicyclicElement const& e);

  // Evaluates both sides under seeded random assignments with exponents
  // uniform in [0, exponent_bound]. Trial t draws from an mt19937_64 seeded
  // with seed_seq{seed, t}, so trials are reproducible and shardable. Any
  // returned witness has been re-verified with b_eval.
  std::optional<BicyclicAssignment> random_falsify(words::Identity const& id,
                                                   std::uint64_t          exponent_bound,
                                                   std::uint64_t          trials,
                                                   std::uint64_t          seed);

  // For an unbalanced identity: x -> A for a variable x whose occurrence
  // counts differ, everything else -> 1.
  std::optional<BicyclicAssignment> imbalance_witness(words::Identity const& id);

  // Fixed-width evaluation for enumeration hot loops. Words are index
  // sequences into a small alphabet. Values stay far below 2^62 as long as
  // exponent_bound * word length does, which callers check.
  struct SmallElement {
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool         operator==(SmallElement const&) const = default;
    auto         operator<=>(SmallElement const&) const = default;
  };

  inline SmallElement small_mul(SmallElement p, SmallElement q) {
    std::int64_t cut = p.b < q.a ? p.b : q.a;
    return {p.a + q.a - cut, p.b + q.b - cut};
  }

  class AssignmentBank {
   public:
    AssignmentBank(std::size_t alphabet_size, std::size_t count, std::int64_t exponent_bound, std::uint64_t seed);

    std::size_t size() const noexcept {
      return _count;
    }
    SmallElement value(std::size_t assignment, std::size_t letter) const {
      return _values[assignment * _alphabet + letter];
    }
    SmallElement eval(std::size_t assignment, std::vector<std::uint8_t> const& word) const;
    std::vector<SmallElement> fingerprint(std::vector<std::uint8_t> const& word) const;
    // Converts an assignment to a BicyclicAssignment over the given names.
    BicyclicAssignment to_assignment(std::size_t assignment, std::vector<words::Var> const& alphabet) const;

   private:
    std::size_t               _alphabet;
    std::size_t               _count;
    std::vector<SmallElement> _values;
  };

}  // namespace tropid::bicyclic
