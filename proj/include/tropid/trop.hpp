#pragma once

// Exact max-plus arithmetic over Q ∪ {-inf}.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropid/words.hpp"

namespace tropid::trop {

  class TropScalar {
   public:
    // Default-constructed scalars are -inf, the zero of the semiring.
    TropScalar() = default;
    TropScalar(mpq_class value) : _finite(true), _value(std::move(value)) {  // NOLINT(runtime/explicit)
      _value.canonicalize();
    }
    TropScalar(long value) : _finite(true), _value(value) {}  // NOLINT(runtime/explicit)

    static TropScalar bottom() {
      return TropScalar();
    }
    static TropScalar unit() {
      return TropScalar(0L);
    }

    bool is_finite() const noexcept {
      return _finite;
    }
    bool is_bottom() const noexcept {
      return !_finite;
    }
    // Requires is_finite().
    mpq_class const& value() const;
    bool             is_integer() const;

    bool operator==(TropScalar const& that) const {
      return _finite == that._finite && (!_finite || _value == that._value);
    }
    // -inf is the least element.
    bool operator<(TropScalar const& that) const;

    // Integers or p/q; bottom is spelled -inf.
    std::string       to_string() const;
    static TropScalar parse(std::string_view text);

   private:
    bool      _finite = false;
    mpq_class _value;
  };

  TropScalar oplus(TropScalar const& a, TropScalar const& b);
  TropScalar otimes(TropScalar const& a, TropScalar const& b);

  struct ScalarOps {
    TropScalar sum;
    TropScalar product;
  };
  ScalarOps scalar_ops(TropScalar const& a, TropScalar const& b);

  class TropMatrix {
   public:
    // n×n matrix of -inf.
    explicit TropMatrix(std::size_t n);
    TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows);

    static TropMatrix identity(std::size_t n);
    static TropMatrix zero(std::size_t n);

    std::size_t dim() const noexcept {
      return _n;
    }
    TropScalar const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _n + j];
    }
    TropScalar& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _n + j];
    }

    bool operator==(TropMatrix const&) const = default;
    bool is_upper_triangular() const;
    bool has_integer_entries() const;

    // "[a,b;c,d]" with -inf and p/q entries.
    std::string       to_string() const;
    static TropMatrix parse(std::string_view text);

   private:
    std::size_t             _n;
    std::vector<TropScalar> _entries;
  };

  TropMatrix mat_mul(TropMatrix const& a, TropMatrix const& b);
  TropMatrix mat_pow(TropMatrix const& a, std::size_t k);
  bool       diag_equiv(TropMatrix const& a, TropMatrix const& b);

  // All images share one dimension.
  class MatrixAssignment {
   public:
    MatrixAssignment() = default;

    void              set(words::Var v, TropMatrix m);
    TropMatrix const& at(words::Var v) const;
    bool              contains(words::Var v) const {
      return _images.contains(v);
    }
    std::size_t dim() const noexcept {
      return _dim;
    }
    std::map<words::Var, TropMatrix> const& images() const noexcept {
      return _images;
    }

   private:
    std::size_t                      _dim = 0;
    std::map<words::Var, TropMatrix> _images;
  };

  // Left-to-right product of the images; requires a nonempty word.
  TropMatrix eval_word_matrix(words::Word const& w, MatrixAssignment const& phi);

}  // namespace tropid::trop
