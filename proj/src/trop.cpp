#include "tropid/trop.hpp"

#include <cctype>

#include "tropid/error.hpp"

namespace tropid::trop {

  namespace {
    std::string trim(std::string_view s) {
      std::size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }

    bool is_integer_literal(std::string const& s) {
      std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()) {
        return false;
      }
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  mpq_class const& TropScalar::value() const {
    if (!_finite) {
      throw UsageError("value() of -inf");
    }
    return _value;
  }

  bool TropScalar::is_integer() const {
    return _finite && _value.get_den() == 1;
  }

  bool TropScalar::operator<(TropScalar const& that) const {
    if (!_finite) {
      return that._finite;
    }
    return that._finite && _value < that._value;
  }

  std::string TropScalar::to_string() const {
    return _finite ? _value.get_str() : "-inf";
  }

  TropScalar TropScalar::parse(std::string_view text) {
    std::string s = trim(text);
    if (s == "-inf") {
      return bottom();
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      if (!is_integer_literal(s)) {
        throw UsageError("invalid tropical scalar '" + s + "'");
      }
      return TropScalar(mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
      throw UsageError("invalid tropical scalar '" + s + "'");
    }
    mpz_class d(den);
    if (d == 0) {
      throw UsageError("zero denominator in '" + s + "'");
    }
    return TropScalar(mpq_class(mpz_class(num[0] == '+' ? num.substr(1) : num), d));
  }

  TropScalar oplus(TropScalar const& a, TropScalar const& b) {
    return a < b ? b : a;
  }

  TropScalar otimes(TropScalar const& a, TropScalar const& b) {
    if (a.is_bottom() || b.is_bottom()) {
      return TropScalar::bottom();
    }
    return TropScalar(mpq_class(a.value() + b.value()));
  }

  ScalarOps scalar_ops(TropScalar const& a, TropScalar const& b) {
    return {oplus(a, b), otimes(a, b)};
  }

  TropMatrix::TropMatrix(std::size_t n) : _n(n), _entries(n * n) {
    if (n == 0) {
      throw UsageError("matrix dimension must be positive");
    }
  }

  TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows) : TropMatrix(rows.size()) {
    std::size_t i = 0;
    for (auto const& row : rows) {
      if (row.size() != _n) {
        throw UsageError("matrix literal is not square");
      }
      std::size_t j = 0;
      for (auto const& x : row) {
        (*this)(i, j++) = x;
      }
      ++i;
    }
  }

  TropMatrix TropMatrix::identity(std::size_t n) {
    TropMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = TropScalar::unit();
    }
    return m;
  }

  TropMatrix TropMatrix::zero(std::size_t n) {
    return TropMatrix(n);
  }

  bool TropMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if ((*this)(i, j).is_finite()) {
          return false;
        }
      }
    }
    return true;
  }

  bool TropMatrix::has_integer_entries() const {
    for (auto const& x : _entries) {
      if (x.is_finite() && !x.is_integer()) {
        return false;
      }
    }
    return true;
  }

  std::string TropMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _n; ++i) {
      if (i > 0) {
        out += ';';
      }
      for (std::size_t j = 0; j < _n; ++j) {
        if (j > 0) {
          out += ',';
        }
        out += (*this)(i, j).to_string();
      }
    }
    return out + "]";
  }

  TropMatrix TropMatrix::parse(std::string_view text) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
      throw UsageError("matrix literal must be enclosed in [ ]: '" + s + "'");
    }
    std::vector<std::vector<TropScalar>> rows;
    std::string_view                     body(s.data() + 1, s.size() - 2);
    std::size_t                          start = 0;
    while (true) {
      auto             end = body.find(';', start);
      std::string_view row = body.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      std::vector<TropScalar> entries;
      std::size_t             cs = 0;
      while (true) {
        auto ce = row.find(',', cs);
        entries.push_back(TropScalar::parse(row.substr(cs, ce == std::string_view::npos ? std::string_view::npos : ce - cs)));
        if (ce == std::string_view::npos) {
          break;
        }
        cs = ce + 1;
      }
      rows.push_back(std::move(entries));
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    TropMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw UsageError("matrix literal is not square: '" + s + "'");
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  TropMatrix mat_mul(TropMatrix const& a, TropMatrix const& b) {
    if (a.dim() != b.dim()) {
      throw UsageError("mat_mul: dimension mismatch " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    std::size_t n = a.dim();
    TropMatrix  c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        TropScalar acc;
        for (std::size_t j = 0; j < n; ++j) {
          if (a(i, j).is_finite() && b(j, k).is_finite()) {
            acc = oplus(acc, otimes(a(i, j), b(j, k)));
          }
        }
        c(i, k) = std::move(acc);
      }
    }
    return c;
  }

  TropMatrix mat_pow(TropMatrix const& a, std::size_t k) {
    TropMatrix out = TropMatrix::identity(a.dim());
    for (std::size_t i = 0; i < k; ++i) {
      out = mat_mul(out, a);
    }
    return out;
  }

  bool diag_equiv(TropMatrix const& a, TropMatrix const& b) {
    if (a.dim() != b.dim()) {
      throw UsageError("diag_equiv: dimension mismatch");
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!(a(i, i) == b(i, i))) {
        return false;
      }
    }
    return true;
  }

  void MatrixAssignment::set(words::Var v, TropMatrix m) {
    if (_images.empty() || (_images.size() == 1 && _images.contains(v))) {
      _dim = m.dim();
    } else if (m.dim() != _dim) {
      throw UsageError("assignment images must share one dimension");
    }
    _images.insert_or_assign(v, std::move(m));
  }

  TropMatrix const& MatrixAssignment::at(words::Var v) const {
    auto it = _images.find(v);
    if (it == _images.end()) {
      throw UsageError("assignment has no image for variable '" + v.name() + "'");
    }
    return it->second;
  }

  TropMatrix eval_word_matrix(words::Word const& w, MatrixAssignment const& phi) {
    if (w.empty()) {
      throw UsageError("eval_word_matrix: empty word");
    }
    TropMatrix acc = phi.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      acc = mat_mul(acc, phi.at(w[i]));
    }
    return acc;
  }

}  // namespace tropid::trop
