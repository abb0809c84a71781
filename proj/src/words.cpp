#include "tropid/words.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_set>

#include "tropid/error.hpp"

namespace tropid::words {

  namespace {

    std::string const* intern(std::string_view name) {
      static std::mutex                      mtx;
      static std::unordered_set<std::string> table;
      std::lock_guard<std::mutex>            lock(mtx);
      return &*table.emplace(name).first;
    }

    bool is_alpha(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    struct Parser {
      std::string_view text;
      std::size_t      pos = 0;

      [[noreturn]] void fail(std::size_t at, std::string const& what) const {
        throw ParseError(std::string(text), at, what);
      }

      void skip_ws() {
        while (pos < text.size() && is_space(text[pos])) {
          ++pos;
        }
      }

      Word word() {
        skip_ws();
        if (pos >= text.size()) {
          fail(pos, "expected a word");
        }
        if (text[pos] == '"') {
          std::size_t open = pos++;
          std::vector<Var> letters;
          while (true) {
            skip_ws();
            if (pos >= text.size()) {
              fail(open, "unterminated quoted word");
            }
            if (text[pos] == '"') {
              ++pos;
              break;
            }
            std::size_t start = pos;
            if (!is_alpha(text[pos])) {
              fail(pos, "identifier must start with a letter");
            }
            while (pos < text.size() && !is_space(text[pos]) && text[pos] != '"') {
              char c = text[pos];
              if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
                fail(pos, std::string("invalid character '") + c + "' in identifier");
              }
              ++pos;
            }
            letters.emplace_back(text.substr(start, pos - start));
          }
          if (letters.empty()) {
            fail(open, "empty word");
          }
          return Word(std::move(letters));
        }
        if (!is_alpha(text[pos])) {
          fail(pos, std::string("unexpected character '") + text[pos] + "'");
        }
        std::vector<Var> letters;
        while (pos < text.size() && is_alpha(text[pos])) {
          letters.emplace_back(text.substr(pos, 1));
          ++pos;
        }
        if (pos < text.size() && !is_space(text[pos]) && text[pos] != '=') {
          fail(pos, std::string("unexpected character '") + text[pos] + "' in compact word");
        }
        return Word(std::move(letters));
      }

      void expect_end() {
        skip_ws();
        if (pos != text.size()) {
          fail(pos, "trailing input");
        }
      }
    };

    struct MorphismSearch {
      std::vector<Var> const&     pattern;
      std::vector<Var> const&     target;
      std::size_t                 limit;
      std::map<Var, std::pair<std::size_t, std::size_t>> bound;  // var -> (start, length)
      std::vector<Substitution>   found;

      // Minimum number of target letters the pattern suffix from i still needs.
      std::size_t min_needed(std::size_t i) const {
        std::size_t need = 0;
        for (std::size_t k = i; k < pattern.size(); ++k) {
          auto it = bound.find(pattern[k]);
          need += it == bound.end() ? 1 : it->second.second;
        }
        return need;
      }

      void run(std::size_t i, std::size_t p) {
        if (found.size() >= limit) {
          return;
        }
        if (i == pattern.size()) {
          if (p == target.size()) {
            Substitution theta;
            for (auto const& [v, span] : bound) {
              theta.set(v,
                        Word(std::vector<Var>(target.begin() + span.first,
                                              target.begin() + span.first + span.second)));
            }
            found.push_back(std::move(theta));
          }
          return;
        }
        if (target.size() - p < min_needed(i)) {
          return;
        }
        Var  v  = pattern[i];
        auto it = bound.find(v);
        if (it != bound.end()) {
          auto [start, len] = it->second;
          if (std::equal(target.begin() + start, target.begin() + start + len, target.begin() + p)) {
            run(i + 1, p + len);
          }
          return;
        }
        std::size_t rest = min_needed(i + 1);
        for (std::size_t len = 1; p + len + rest <= target.size(); ++len) {
          bound.emplace(v, std::make_pair(p, len));
          run(i + 1, p + len);
          bound.erase(v);
          if (found.size() >= limit) {
            return;
          }
        }
      }
    };

  }  // namespace

  Var::Var(std::string_view name) : _name(intern(name)) {
    if (!is_identifier(name)) {
      throw UsageError("invalid variable identifier '" + std::string(name) + "'");
    }
  }

  bool is_identifier(std::string_view s) {
    if (s.empty() || !is_alpha(s.front())) {
      return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  Word Word::compact(std::string_view letters) {
    std::vector<Var> out;
    for (char c : letters) {
      if (!is_alpha(c)) {
        throw UsageError(std::string("compact words use letters only, got '") + c + "'");
      }
      out.emplace_back(std::string_view(&c, 1));
    }
    return Word(std::move(out));
  }

  Word Word::extended(std::string_view identifiers) {
    std::vector<Var> out;
    std::size_t      i = 0;
    while (i < identifiers.size()) {
      while (i < identifiers.size() && is_space(identifiers[i])) {
        ++i;
      }
      std::size_t start = i;
      while (i < identifiers.size() && !is_space(identifiers[i])) {
        ++i;
      }
      if (i > start) {
        out.emplace_back(identifiers.substr(start, i - start));
      }
    }
    return Word(std::move(out));
  }

  Word& Word::operator+=(Word const& that) {
    _letters.insert(_letters.end(), that._letters.begin(), that._letters.end());
    return *this;
  }

  Word Word::slice(std::size_t first, std::size_t count) const {
    return Word(std::vector<Var>(_letters.begin() + first, _letters.begin() + first + count));
  }

  std::strong_ordering Word::operator<=>(Word const& that) const {
    return std::lexicographical_compare_three_way(
        _letters.begin(), _letters.end(), that._letters.begin(), that._letters.end());
  }

  bool Word::is_compactable() const {
    return std::all_of(_letters.begin(), _letters.end(), [](Var const& v) { return v.name().size() == 1; });
  }

  std::string Word::to_compact() const {
    if (!is_compactable()) {
      throw UsageError("word has multi-character variables; use the extended form");
    }
    if (empty()) {
      return "1";
    }
    std::string out;
    for (auto const& v : _letters) {
      out += v.name();
    }
    return out;
  }

  std::string Word::to_extended() const {
    std::string out = "\"";
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += _letters[i].name();
    }
    return out + "\"";
  }

  std::string Word::to_string() const {
    return is_compactable() ? to_compact() : to_extended();
  }

  Word operator+(Word lhs, Word const& rhs) {
    lhs += rhs;
    return lhs;
  }

  Word power(Word const& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < k; ++i) {
      out += w;
    }
    return out;
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + " == " + rhs.to_string();
  }

  Substitution::Substitution(std::initializer_list<std::pair<Var const, Word>> images) {
    for (auto const& [v, w] : images) {
      set(v, w);
    }
  }

  void Substitution::set(Var v, Word image) {
    if (image.empty()) {
      throw UsageError("substitution image of '" + v.name() + "' is empty");
    }
    _images.insert_or_assign(v, std::move(image));
  }

  Word const& Substitution::at(Var v) const {
    auto it = _images.find(v);
    if (it == _images.end()) {
      throw UsageError("substitution has no image for variable '" + v.name() + "'");
    }
    return it->second;
  }

  VarSet Substitution::preimage(VarSet const& targets) const {
    VarSet out;
    for (auto const& [v, image] : _images) {
      if (std::any_of(image.begin(), image.end(), [&](Var const& t) { return targets.contains(t); })) {
        out.insert(v);
      }
    }
    return out;
  }

  std::string Substitution::to_string() const {
    std::string out;
    for (auto const& [v, image] : _images) {
      if (!out.empty()) {
        out += ", ";
      }
      out += v.name() + "->" + image.to_string();
    }
    return out;
  }

  Analysis analyze(Word const& w) {
    Analysis a;
    for (auto const& v : w) {
      a.content.insert(v);
      ++a.occ[v];
    }
    a.length = w.size();
    return a;
  }

  VarSet content(Word const& w) {
    return VarSet(w.begin(), w.end());
  }

  std::size_t occ(Var x, Word const& w) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
  }

  bool balanced(Identity const& id) {
    return analyze(id.lhs).occ == analyze(id.rhs).occ;
  }

  Word delete_to(Word const& w, VarSet const& keep) {
    std::vector<Var> out;
    std::copy_if(w.begin(), w.end(), std::back_inserter(out), [&](Var const& v) { return keep.contains(v); });
    return Word(std::move(out));
  }

  Word substitute(Word const& w, Substitution const& theta) {
    Word out;
    for (auto const& v : w) {
      out += theta.at(v);
    }
    return out;
  }

  std::vector<Substitution> find_morphisms(Word const& pattern, Word const& target, std::size_t limit) {
    if (pattern.empty() || target.empty() || limit == 0) {
      return {};
    }
    MorphismSearch search{pattern.letters(), target.letters(), limit, {}, {}};
    search.run(0, 0);
    for (auto const& theta : search.found) {
      if (substitute(pattern, theta) != target) {
        throw std::logic_error("find_morphisms produced a non-matching substitution");
      }
    }
    return std::move(search.found);
  }

  Adjacency adjacent_pairs(Word const& w) {
    Adjacency adj;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Var p = w[i], q = w[i + 1];
      if (p == q) {
        adj.self.insert(p);
      } else {
        adj.pairs.insert(p < q ? std::make_pair(p, q) : std::make_pair(q, p));
      }
    }
    return adj;
  }

  bool is_stable(Identity const& id, VarSet const& subset) {
    return delete_to(id.lhs, subset) == delete_to(id.rhs, subset);
  }

  Word canonical_rename(Word const& w, std::vector<Var> const& names) {
    std::map<Var, Var> rename;
    std::vector<Var>   out;
    out.reserve(w.size());
    for (auto const& v : w) {
      auto it = rename.find(v);
      if (it == rename.end()) {
        if (rename.size() >= names.size()) {
          throw UsageError("not enough names to rename word " + w.to_string());
        }
        it = rename.emplace(v, names[rename.size()]).first;
      }
      out.push_back(it->second);
    }
    return Word(std::move(out));
  }

  Word normal_form_up_to_renaming(Word const& w) {
    auto c = content(w);
    return canonical_rename(w, std::vector<Var>(c.begin(), c.end()));
  }

  bool equal_up_to_renaming(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    auto names = indexed_variables("t", std::max(content(a).size(), content(b).size()));
    return canonical_rename(a, names) == canonical_rename(b, names);
  }

  std::vector<Var> indexed_variables(std::string_view stem, std::size_t n) {
    std::vector<Var> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
      out.emplace_back(std::string(stem) + std::to_string(i));
    }
    return out;
  }

  Identity adjan_identity() {
    return {Word::compact("xyyxxyxyyx"), Word::compact("xyyxyxxyyx")};
  }

  Identity adjan_family(std::size_t n) {
    if (n == 0) {
      throw UsageError("adjan_family needs n >= 1");
    }
    auto             xs = indexed_variables("x", n);
    Word             up(xs);
    std::vector<Var> rev(xs.rbegin(), xs.rend());
    Word             down(rev);
    return {up + down + up + up + down, up + down + down + up + down};
  }

  namespace {
    Word condition_iii_impl(int i1, int i2, int i3, bool same_z, bool swapped) {
      if (i1 < 0 || i2 < 0 || i3 < 0 || i1 > 1 || i2 > 1 || i3 > 1 || i1 + i2 + i3 != 1) {
        throw UsageError("condition (iii) exponents must be bits summing to 1");
      }
      Var  x("x"), y("y"), z("z"), z1(same_z ? "z" : "z1");
      auto block = [&](Var zz) {
        Word b{x, y};
        if (i1 == 1) {
          b.push_back(zz);
        }
        b.push_back(y);
        if (i2 == 1) {
          b.push_back(zz);
        }
        b.push_back(x);
        if (i3 == 1) {
          b.push_back(zz);
        }
        return b;
      };
      Word middle = swapped ? Word{y, x} : Word{x, y};
      return block(z) + middle + block(z1);
    }
  }  // namespace

  Word condition_iii_word(int i1, int i2, int i3, bool same_z) {
    return condition_iii_impl(i1, i2, i3, same_z, false);
  }

  Word condition_iii_partner(int i1, int i2, int i3, bool same_z) {
    return condition_iii_impl(i1, i2, i3, same_z, true);
  }

  Word parse_word(std::string_view text) {
    Parser p{text};
    Word   w = p.word();
    p.expect_end();
    return w;
  }

  Identity parse_identity(std::string_view text) {
    Parser p{text};
    Word   lhs = p.word();
    p.skip_ws();
    if (p.pos + 1 >= text.size() || text.substr(p.pos, 2) != "==") {
      p.fail(p.pos, "expected '=='");
    }
    p.pos += 2;
    Word rhs = p.word();
    p.expect_end();
    return {std::move(lhs), std::move(rhs)};
  }

}  // namespace tropid::words
