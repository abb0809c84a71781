#include <set>

#include "tropid/decide.hpp"
#include "tropid/error.hpp"

namespace tropid::decide {

  using trop::TropMatrix;
  using trop::TropScalar;

  TropMatrix embedding_a() {
    return {{-1L, 1L}, {TropScalar::bottom(), 1L}};
  }

  TropMatrix embedding_b() {
    return {{1L, 1L}, {TropScalar::bottom(), -1L}};
  }

  TropMatrix embedding_map(std::size_t a, std::size_t b) {
    auto e = trop::mat_mul(embedding_a(), embedding_b());
    return trop::mat_mul(trop::mat_mul(e, trop::mat_pow(embedding_b(), a)), trop::mat_pow(embedding_a(), b));
  }

  EmbeddingReport verify_embedding(std::size_t bound) {
    if (bound == 0) {
      throw UsageError("embed: bound must be at least 1");
    }
    EmbeddingReport report;
    report.bound = bound;
    auto const a = embedding_a(), b = embedding_b();
    auto const e = trop::mat_mul(a, b);

    report.unit_on_generators = trop::mat_mul(e, a) == a && trop::mat_mul(a, e) == a && trop::mat_mul(e, b) == b
                                && trop::mat_mul(b, e) == b;
    if (!report.unit_on_generators) {
      report.failures.push_back("E = AB is not a two-sided identity on A and B");
    }

    // Images of every normal form with exponents up to 2 * bound, so that
    // products of in-range elements can be looked up.
    std::size_t const       top = 2 * bound;
    std::vector<TropMatrix> left{e}, right{TropMatrix::identity(2)};
    for (std::size_t k = 1; k <= top; ++k) {
      left.push_back(trop::mat_mul(left.back(), b));
      right.push_back(trop::mat_mul(right.back(), a));
    }
    std::vector<TropMatrix> image;
    image.reserve((top + 1) * (top + 1));
    for (std::size_t i = 0; i <= top; ++i) {
      for (std::size_t j = 0; j <= top; ++j) {
        image.push_back(trop::mat_mul(left[i], right[j]));
      }
    }
    auto at = [&](std::size_t i, std::size_t j) -> TropMatrix const& { return image[i * (top + 1) + j]; };

    std::set<std::string> seen;
    report.unit_on_products = true;
    report.integral         = true;
    for (std::size_t i = 0; i <= bound; ++i) {
      for (std::size_t j = 0; j <= bound; ++j) {
        auto const& m = at(i, j);
        seen.insert(m.to_string());
        if (!(trop::mat_mul(e, m) == m && trop::mat_mul(m, e) == m)) {
          report.unit_on_products = false;
          report.failures.push_back("E is not an identity on the image of B^" + std::to_string(i) + " A^" + std::to_string(j));
        }
        if (!m.has_integer_entries()) {
          report.integral = false;
          report.failures.push_back("image of B^" + std::to_string(i) + " A^" + std::to_string(j) + " has a non-integer entry");
        }
      }
    }
    report.distinct  = seen.size();
    report.injective = report.distinct == (bound + 1) * (bound + 1);
    if (!report.injective) {
      report.failures.push_back("map is not injective: " + std::to_string(report.distinct) + " distinct images");
    }

    report.multiplicative = true;
    for (std::size_t p = 0; p <= bound; ++p) {
      for (std::size_t q = 0; q <= bound; ++q) {
        for (std::size_t r = 0; r <= bound; ++r) {
          for (std::size_t s = 0; s <= bound; ++s) {
            ++report.products_checked;
            std::size_t x = p + (r > q ? r - q : 0), y = s + (q > r ? q - r : 0);
            if (!(trop::mat_mul(at(p, q), at(r, s)) == at(x, y))) {
              report.multiplicative = false;
              report.failures.push_back("map is not multiplicative at (" + std::to_string(p) + "," + std::to_string(q) + ")("
                                        + std::to_string(r) + "," + std::to_string(s) + ")");
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace tropid::decide
