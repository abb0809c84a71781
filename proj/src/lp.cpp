#include "tropid/lp.hpp"

#include <stdexcept>

#include "tropid/error.hpp"

namespace tropid::lp {

  namespace {

    bool verify_primal(Matrix const& a, Vector const& b, Vector const& x) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (x[j] < 0) {
          return false;
        }
      }
      for (std::size_t i = 0; i < a.rows(); ++i) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
          s += a(i, j) * x[j];
        }
        if (s != b[i]) {
          return false;
        }
      }
      return true;
    }

    bool verify_farkas(Matrix const& a, Vector const& b, Vector const& y) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
          s += a(i, j) * y[i];
        }
        if (s < 0) {
          return false;
        }
      }
      mpq_class s = 0;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        s += b[i] * y[i];
      }
      return s < 0;
    }

  }  // namespace

  FeasibilityResult solve_feasibility(Matrix const& a, Vector const& b) {
    std::size_t const m = a.rows(), n = a.cols(), width = n + m;
    if (b.size() != m) {
      throw UsageError("solve_feasibility: rhs length does not match row count");
    }

    // Row-normalised so that the right-hand side is nonnegative, with one
    // artificial column per row forming the starting basis.
    std::vector<int>         sign(m, 1);
    Matrix                   t(m, width);
    Vector                   rhs(m);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
      sign[i] = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n; ++j) {
        t(i, j) = sign[i] < 0 ? mpq_class(-a(i, j)) : a(i, j);
      }
      t(i, n + i) = 1;
      rhs[i]      = sign[i] < 0 ? mpq_class(-b[i]) : b[i];
      basis[i]    = n + i;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    Vector reduced(width);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        reduced[j] -= t(i, j);
      }
    }
    mpq_class objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
      objective += rhs[i];
    }

    FeasibilityResult result;
    while (true) {
      std::size_t enter = width;
      for (std::size_t j = 0; j < width; ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width) {
        break;
      }
      std::size_t leave = m;
      mpq_class   best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t(i, enter) > 0) {
          mpq_class ratio = rhs[i] / t(i, enter);
          if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
            leave = i;
            best  = ratio;
          }
        }
      }
      if (leave == m) {
        // Phase one is bounded below by zero, so this cannot happen.
        throw std::logic_error("solve_feasibility: unbounded phase-one direction");
      }

      mpq_class pivot = t(leave, enter);
      for (std::size_t j = 0; j < width; ++j) {
        t(leave, j) /= pivot;
      }
      rhs[leave] /= pivot;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == leave || t(i, enter) == 0) {
          continue;
        }
        mpq_class f = t(i, enter);
        for (std::size_t j = 0; j < width; ++j) {
          if (t(leave, j) != 0) {
            t(i, j) -= f * t(leave, j);
          }
        }
        rhs[i] -= f * rhs[leave];
      }
      if (reduced[enter] != 0) {
        mpq_class f = reduced[enter];
        for (std::size_t j = 0; j < width; ++j) {
          if (t(leave, j) != 0) {
            reduced[j] -= f * t(leave, j);
          }
        }
        objective += f * rhs[leave];
      }
      basis[leave] = enter;
      ++result.pivots;
    }

    if (objective == 0) {
      result.feasible = true;
      result.primal.assign(n, mpq_class(0));
      for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
          result.primal[basis[i]] = rhs[i];
        }
      }
      if (!verify_primal(a, b, result.primal)) {
        throw std::logic_error("solve_feasibility: primal certificate failed verification");
      }
      return result;
    }

    // y' = c_B B^-1 for the normalised system, read off the artificial
    // columns (reduced cost = 1 - y'_i); the Farkas ray for the input is -S y'.
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      mpq_class y      = 1 - reduced[n + i];
      result.farkas[i] = sign[i] < 0 ? y : mpq_class(-y);
    }
    if (!verify_farkas(a, b, result.farkas)) {
      throw std::logic_error("solve_feasibility: Farkas certificate failed verification");
    }
    return result;
  }

}  // namespace tropid::lp
