#pragma once

#include <random>
#include <string>
#include <vector>

#include "tropid/trop.hpp"
#include "tropid/words.hpp"

namespace tropid::testing {

  inline words::Word random_word(std::mt19937_64& rng, std::string const& alphabet, std::size_t length) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string                                s;
    for (std::size_t i = 0; i < length; ++i) {
      s.push_back(alphabet[pick(rng)]);
    }
    return words::Word::compact(s);
  }

  // Finite with probability 5/6; values p/q with |p| <= 6, 1 <= q <= 3.
  inline trop::TropScalar random_scalar(std::mt19937_64& rng, bool allow_bottom = true) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3), dead(0, 5);
    if (allow_bottom && dead(rng) == 0) {
      return trop::TropScalar::bottom();
    }
    return trop::TropScalar(mpq_class(num(rng), den(rng)));
  }

  inline trop::TropMatrix random_upper(std::mt19937_64& rng, bool allow_bottom = true) {
    trop::TropMatrix m(2);
    m(0, 0) = random_scalar(rng, allow_bottom);
    m(0, 1) = random_scalar(rng, allow_bottom);
    m(1, 1) = random_scalar(rng, allow_bottom);
    return m;
  }

  inline trop::TropMatrix random_square(std::mt19937_64& rng, std::size_t n) {
    trop::TropMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = random_scalar(rng);
      }
    }
    return m;
  }

  inline trop::MatrixAssignment random_upper_assignment(std::mt19937_64& rng, words::VarSet const& vars) {
    trop::MatrixAssignment phi;
    for (auto const& v : vars) {
      phi.set(v, random_upper(rng));
    }
    return phi;
  }

}  // namespace tropid::testing
