#pragma once

// Exact rational feasibility for { x >= 0 : A x = b } by a phase-one
// tableau simplex with Bland's rule. Both outcomes carry a certificate that
// has been checked against the input before it is returned:
//   feasible   -> x with x >= 0 and A x = b
//   infeasible -> y with A^T y >= 0 and b . y < 0 (Farkas)

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace tropid::lp {

  using Vector = std::vector<mpq_class>;

  class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols) {}

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    mpq_class& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    mpq_class const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

   private:
    std::size_t _rows, _cols;
    Vector      _data;
  };

  struct FeasibilityResult {
    bool   feasible = false;
    Vector primal;  // x, when feasible
    Vector farkas;  // y, when infeasible
    std::size_t pivots = 0;
  };

  FeasibilityResult solve_feasibility(Matrix const& a, Vector const& b);

}  // namespace tropid::lp
