#pragma once

// Word combinatorics: variables, words, identities, deletion, substitution,
// nonerasing pattern matching and the word families used by the decision
// procedures.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropid::words {

  // An interned variable identifier. Equality is pointer identity; ordering is
  // by name so that every container keyed by Var iterates deterministically.
  class Var {
   public:
    Var() = delete;
    explicit Var(std::string_view name);

    std::string const& name() const noexcept {
      return *_name;
    }

    bool operator==(Var const& that) const noexcept {
      return _name == that._name;
    }
    std::strong_ordering operator<=>(Var const& that) const noexcept {
      if (_name == that._name) {
        return std::strong_ordering::equal;
      }
      return *_name <=> *that._name;
    }

    std::size_t hash() const noexcept {
      return std::hash<std::string const*>{}(_name);
    }

   private:
    std::string const* _name;
  };

  bool is_identifier(std::string_view s);

  using VarSet = std::set<Var>;

  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Var> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Var> letters) : _letters(letters) {}

    // Each character of a string matching [A-Za-z]+ is one variable.
    static Word compact(std::string_view letters);
    // Whitespace separated identifiers, e.g. "x1 x2 x3".
    static Word extended(std::string_view identifiers);

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Var const& operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }
    std::vector<Var> const& letters() const noexcept {
      return _letters;
    }

    void push_back(Var v) {
      _letters.push_back(v);
    }
    Word& operator+=(Word const& that);
    Word slice(std::size_t first, std::size_t count) const;

    bool operator==(Word const& that) const = default;
    // Lexicographic by letter names; a proper prefix sorts first.
    std::strong_ordering operator<=>(Word const& that) const;

    bool is_compactable() const;
    // Compact text when every variable is a single letter, extended otherwise.
    std::string to_string() const;
    std::string to_compact() const;
    // Quoted extended form; reparses to an equal word.
    std::string to_extended() const;

   private:
    std::vector<Var> _letters;
  };

  Word operator+(Word lhs, Word const& rhs);
  Word power(Word const& w, std::size_t k);

  struct Identity {
    Word lhs;
    Word rhs;

    bool trivial() const {
      return lhs == rhs;
    }
    bool operator==(Identity const&) const = default;
    auto operator<=>(Identity const&) const = default;
    std::string to_string() const;
  };

  // Nonerasing substitution: every image must be nonempty.
  class Substitution {
   public:
    Substitution() = default;
    Substitution(std::initializer_list<std::pair<Var const, Word>> images);

    void set(Var v, Word image);
    Word const& at(Var v) const;
    bool contains(Var v) const {
      return _images.contains(v);
    }
    std::map<Var, Word> const& images() const noexcept {
      return _images;
    }
    // Θ⁻¹(Y): the variables whose image meets Y.
    VarSet preimage(VarSet const& targets) const;

    bool operator==(Substitution const&) const = default;
    std::string to_string() const;

   private:
    std::map<Var, Word> _images;
  };

  struct Analysis {
    VarSet content;
    std::map<Var, std::size_t> occ;
    std::size_t length = 0;
  };

  Analysis analyze(Word const& w);
  VarSet content(Word const& w);
  std::size_t occ(Var x, Word const& w);
  bool balanced(Identity const& id);

  // w(A): keep exactly the letters of A. May return the empty word.
  Word delete_to(Word const& w, VarSet const& keep);
  Word substitute(Word const& w, Substitution const& theta);

  // Every nonerasing Θ with Θ(pattern) = target, in lexicographic order of
  // split positions, at most `limit` of them.
  std::vector<Substitution> find_morphisms(Word const& pattern, Word const& target, std::size_t limit = SIZE_MAX);

  struct Adjacency {
    std::set<std::pair<Var, Var>> pairs;  // p < q
    VarSet self;                           // variables with an xx factor
  };
  Adjacency adjacent_pairs(Word const& w);

  bool is_stable(Identity const& id, VarSet const& subset);

  // Rename variables in order of first occurrence to the given names.
  Word canonical_rename(Word const& w, std::vector<Var> const& names);
  // First-occurrence renaming onto the word's own content sorted by name. Two
  // words are equal up to renaming iff their normal forms agree.
  Word normal_form_up_to_renaming(Word const& w);
  bool equal_up_to_renaming(Word const& a, Word const& b);

  // x_1 .. x_n as Var objects named "x1".."xn".
  std::vector<Var> indexed_variables(std::string_view stem, std::size_t n);
  Identity adjan_identity();
  // u_n ≈ v_n.
  Identity adjan_family(std::size_t n);
  // x y z^{i1} y z^{i2} x z^{i3} x y x y z1^{i1} y z1^{i2} x z1^{i3}; z1 = z when same_z.
  Word condition_iii_word(int i1, int i2, int i3, bool same_z);
  // The same word with the middle "x y" swapped to "y x".
  Word condition_iii_partner(int i1, int i2, int i3, bool same_z);

  // Grammar:
  //   word     := compact | '"' identifier (ws identifier)* '"'
  //   compact  := [A-Za-z]+
  //   identity := word ws* '==' ws* word
  Word parse_word(std::string_view text);
  Identity parse_identity(std::string_view text);

}  // namespace tropid::words

template <>
struct std::hash<tropid::words::Var> {
  std::size_t operator()(tropid::words::Var const& v) const noexcept {
    return v.hash();
  }
};
