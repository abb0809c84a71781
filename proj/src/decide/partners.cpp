#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "tropid/decide.hpp"
#include "tropid/error.hpp"
#include "tropid/parallel.hpp"

namespace tropid::decide {

  namespace {

    using bicyclic::AssignmentBank;
    using bicyclic::SmallElement;
    using Letters = std::vector<std::uint8_t>;

    struct Indexed {
      std::vector<words::Var> alphabet;  // sorted by name
      Letters                 letters;
    };

    Indexed index_word(words::Word const& w) {
      auto    c = words::content(w);
      Indexed out{{c.begin(), c.end()}, {}};
      for (auto const& v : w) {
        out.letters.push_back(
            static_cast<std::uint8_t>(std::lower_bound(out.alphabet.begin(), out.alphabet.end(), v) - out.alphabet.begin()));
      }
      return out;
    }

    words::Word to_word(std::vector<words::Var> const& alphabet, Letters const& letters) {
      std::vector<words::Var> out;
      out.reserve(letters.size());
      for (auto l : letters) {
        out.push_back(alphabet[l]);
      }
      return words::Word(std::move(out));
    }

    bool same_fingerprint(AssignmentBank const& bank, std::vector<SmallElement> const& fp, Letters const& v) {
      for (std::size_t t = 0; t < bank.size(); ++t) {
        if (!(bank.eval(t, v) == fp[t])) {
          return false;
        }
      }
      return true;
    }

    void check_cap(words::Word const& u, Options const& opts) {
      if (u.empty()) {
        throw UsageError("partners: word must be nonempty");
      }
      if (u.size() > opts.max_partner_length) {
        throw LimitExceeded("partners: |u| = " + std::to_string(u.size()) + " exceeds the cap "
                            + std::to_string(opts.max_partner_length) + " (raise --max-len)");
      }
      if (words::content(u).size() > 255) {
        throw LimitExceeded("partners: too many distinct variables");
      }
    }

    // Exact confirmation of a fingerprint match.
    bool confirm(Indexed const& u, Letters const& v, Options const& opts, std::size_t& exact_checks) {
      ++exact_checks;
      return holds_bicyclic({to_word(u.alphabet, u.letters), to_word(u.alphabet, v)}, opts).holds();
    }

    std::vector<Letters> brute_partners(Indexed const& u, Options const& opts, std::size_t& candidates, std::size_t& exact_checks) {
      auto    bank = AssignmentBank(u.alphabet.size(), 8, 8, opts.seed);
      auto    fp   = bank.fingerprint(u.letters);
      Letters v    = u.letters;
      std::sort(v.begin(), v.end());
      std::vector<Letters> out;
      do {
        ++candidates;
        if (v == u.letters) {
          out.push_back(v);
          continue;
        }
        if (same_fingerprint(bank, fp, v) && confirm(u, v, opts, exact_checks)) {
          out.push_back(v);
        }
      } while (std::next_permutation(v.begin(), v.end()));
      return out;
    }

    // Partner sets of two-letter words, keyed by the word written over {0, 1}
    // with 0 first. Shared by every pruned search in the process.
    std::mutex                             pair_mtx;
    std::map<Letters, std::vector<Letters>> pair_partners;

    std::vector<Letters> partners_of_pair_word(Letters const& w, Options const& opts) {
      {
        std::lock_guard<std::mutex> lock(pair_mtx);
        if (auto it = pair_partners.find(w); it != pair_partners.end()) {
          return it->second;
        }
      }
      Indexed     u{{words::Var("x"), words::Var("y")}, w};
      std::size_t candidates = 0, checks = 0;
      auto ps = brute_partners(u, opts, candidates, checks);
      std::lock_guard<std::mutex> lock(pair_mtx);
      return pair_partners.emplace(w, std::move(ps)).first->second;
    }

    struct Trie {
      std::vector<std::array<int, 2>> next{{-1, -1}};

      void insert(Letters const& w) {
        int node = 0;
        for (auto l : w) {
          if (next[node][l] < 0) {
            next[node][l] = static_cast<int>(next.size());
            next.push_back({-1, -1});
          }
          node = next[node][l];
        }
      }
    };

    struct PairFilter {
      std::uint8_t p, q;
      bool         flip;  // letter p is written as 1 in the trie
      Trie         trie;
    };

    class PrunedSearch {
     public:
      PrunedSearch(Indexed const& u, Options const& opts)
          : _u(u), _opts(opts), _bank(AssignmentBank(u.alphabet.size(), 8, 8, opts.seed)), _fp(_bank.fingerprint(u.letters)) {
        std::size_t k = u.alphabet.size();
        _remaining.assign(k, 0);
        for (auto l : u.letters) {
          ++_remaining[l];
        }
        _pairs_of.assign(k, {});
        for (std::uint8_t p = 0; p < k; ++p) {
          for (std::uint8_t q = p + 1; q < k; ++q) {
            Letters proj;
            for (auto l : u.letters) {
              if (l == p || l == q) {
                proj.push_back(l);
              }
            }
            bool    flip = proj.front() == q;
            Letters key;
            for (auto l : proj) {
              key.push_back((l == p) != flip ? 0 : 1);
            }
            PairFilter f{p, q, flip, {}};
            for (auto const& w : partners_of_pair_word(key, opts)) {
              f.trie.insert(w);
            }
            _pairs_of[p].push_back(_filters.size());
            _pairs_of[q].push_back(_filters.size());
            _filters.push_back(std::move(f));
          }
        }
        _state.assign(_filters.size(), 0);
      }

      std::vector<Letters> run() {
        _prefix.clear();
        dfs();
        return std::move(_found);
      }

      std::size_t candidates   = 0;
      std::size_t exact_checks = 0;

     private:
      void dfs() {
        if (_prefix.size() == _u.letters.size()) {
          ++candidates;
          if (_prefix == _u.letters
              || (same_fingerprint(_bank, _fp, _prefix) && confirm(_u, _prefix, _opts, exact_checks))) {
            _found.push_back(_prefix);
          }
          return;
        }
        for (std::uint8_t c = 0; c < _remaining.size(); ++c) {
          if (_remaining[c] == 0) {
            continue;
          }
          std::vector<std::pair<std::size_t, int>> saved;
          bool                                     ok = true;
          for (auto fi : _pairs_of[c]) {
            auto const& f    = _filters[fi];
            int         bit  = (c == f.p) != f.flip ? 0 : 1;
            int         next = f.trie.next[_state[fi]][bit];
            if (next < 0) {
              ok = false;
              break;
            }
            saved.emplace_back(fi, _state[fi]);
            _state[fi] = next;
          }
          if (ok) {
            --_remaining[c];
            _prefix.push_back(c);
            dfs();
            _prefix.pop_back();
            ++_remaining[c];
          }
          for (auto const& [fi, s] : saved) {
            _state[fi] = s;
          }
        }
      }

      Indexed const&                        _u;
      Options const&                        _opts;
      AssignmentBank                        _bank;
      std::vector<SmallElement>             _fp;
      std::vector<std::size_t>              _remaining;
      std::vector<PairFilter>               _filters;
      std::vector<std::vector<std::size_t>> _pairs_of;
      std::vector<int>                      _state;
      Letters                               _prefix;
      std::vector<Letters>                  _found;
    };

    // All arrangements of a letter multiset, in lexicographic order.
    std::vector<Letters> arrangements(Letters multiset) {
      std::sort(multiset.begin(), multiset.end());
      std::vector<Letters> out;
      do {
        out.push_back(multiset);
      } while (std::next_permutation(multiset.begin(), multiset.end()));
      return out;
    }

    // Splits words into classes that agree under two independent banks of
    // assignments. Words in different classes are distinct in the monoid.
    std::vector<std::vector<std::size_t>> fingerprint_classes(std::vector<Letters> const& ws,
                                                              std::size_t                 alphabet,
                                                              Options const&              opts) {
      auto const bank = AssignmentBank(alphabet, 8, 8, opts.seed);
      std::vector<std::vector<SmallElement>> fps(ws.size());
      parallel_for(ws.size(), opts.jobs, [&](std::size_t i) { fps[i] = bank.fingerprint(ws[i]); });

      std::vector<std::size_t> order(ws.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](auto i, auto j) { return fps[i] < fps[j] || (fps[i] == fps[j] && i < j); });

      auto const refine = AssignmentBank(alphabet, 16, 32, opts.seed + 1);
      std::vector<std::vector<std::size_t>> out;
      for (std::size_t s = 0; s < order.size();) {
        std::size_t e = s + 1;
        while (e < order.size() && fps[order[e]] == fps[order[s]]) {
          ++e;
        }
        if (e - s > 1) {
          std::map<std::vector<SmallElement>, std::vector<std::size_t>> sub;
          for (std::size_t k = s; k < e; ++k) {
            sub[refine.fingerprint(ws[order[k]])].push_back(order[k]);
          }
          for (auto& [key, members] : sub) {
            if (members.size() > 1) {
              std::sort(members.begin(), members.end());
              out.push_back(std::move(members));
            }
          }
        }
        s = e;
      }
      return out;
    }

    // Exact checks on every pair inside each class; returns holding pairs.
    std::vector<std::pair<std::size_t, std::size_t>> exact_pairs(std::vector<std::vector<std::size_t>> const& classes,
                                                                 std::vector<Letters> const&                  ws,
                                                                 std::vector<words::Var> const&               alphabet,
                                                                 Options const&                               opts,
                                                                 std::size_t&                                 checks) {
      std::vector<std::pair<std::size_t, std::size_t>> todo, out;
      for (auto const& cls : classes) {
        for (std::size_t a = 0; a < cls.size(); ++a) {
          for (std::size_t b = a + 1; b < cls.size(); ++b) {
            todo.emplace_back(cls[a], cls[b]);
          }
        }
      }
      std::vector<char> holds(todo.size(), 0);
      parallel_for(todo.size(), opts.jobs, [&](std::size_t i) {
        holds[i] = holds_bicyclic({to_word(alphabet, ws[todo[i].first]), to_word(alphabet, ws[todo[i].second])}, opts).holds();
      });
      checks += todo.size();
      for (std::size_t i = 0; i < todo.size(); ++i) {
        if (holds[i]) {
          out.push_back(todo[i]);
        }
      }
      return out;
    }

    void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
      if (n == 0) {
        out.push_back(cur);
        return;
      }
      for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
      }
    }

  }  // namespace

  PartnerReport partners_bicyclic(words::Word const& u, PartnerStrategy strategy, Options const& opts) {
    check_cap(u, opts);
    auto          iu = index_word(u);
    PartnerReport report;
    report.word     = u;
    report.strategy = strategy;
    std::vector<Letters> found;
    if (strategy == PartnerStrategy::brute_force) {
      found = brute_partners(iu, opts, report.candidates, report.exact_checks);
    } else {
      PrunedSearch search(iu, opts);
      found               = search.run();
      report.candidates   = search.candidates;
      report.exact_checks = search.exact_checks;
    }
    for (auto const& v : found) {
      report.partners.push_back(to_word(iu.alphabet, v));
    }
    std::sort(report.partners.begin(), report.partners.end());
    return report;
  }

  bool is_isoterm_bicyclic(words::Word const& u, Options const& opts) {
    return partners_bicyclic(u, PartnerStrategy::pruned, opts).isoterm();
  }

  CensusReport isoterm_census(std::size_t max_length, std::size_t min_vars, Options const& opts) {
    if (max_length > opts.max_partner_length) {
      throw LimitExceeded("census: length " + std::to_string(max_length) + " exceeds the cap "
                          + std::to_string(opts.max_partner_length));
    }
    CensusReport report;
    report.max_length = max_length;
    report.min_vars   = min_vars;
    auto names        = words::indexed_variables("x", max_length);
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::vector<std::size_t>> shapes;
      std::vector<std::size_t>              cur;
      partitions(len, len, cur, shapes);
      for (auto const& shape : shapes) {
        if (shape.size() < min_vars) {
          continue;
        }
        Letters multiset;
        for (std::size_t i = 0; i < shape.size(); ++i) {
          multiset.insert(multiset.end(), shape[i], static_cast<std::uint8_t>(i));
        }
        auto ws = arrangements(multiset);
        ++report.classes;
        report.words += ws.size();
        report.pairs += static_cast<std::uint64_t>(ws.size()) * (ws.size() - 1) / 2;
        std::vector<words::Var> alphabet(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(shape.size()));
        auto classes = fingerprint_classes(ws, shape.size(), opts);
        for (auto [i, j] : exact_pairs(classes, ws, alphabet, opts, report.exact_checks)) {
          report.identities.push_back({to_word(alphabet, ws[i]), to_word(alphabet, ws[j])});
        }
      }
    }
    return report;
  }

  words::Identity symmetry_representative(words::Identity const& id) {
    words::Var x("x"), y("y");
    auto       swap = [&](words::Word const& w) {
      std::vector<words::Var> out;
      for (auto const& v : w) {
        out.push_back(v == x ? y : v == y ? x : v);
      }
      return words::Word(std::move(out));
    };
    std::vector<words::Identity> variants{
        id, {id.rhs, id.lhs}, {swap(id.lhs), swap(id.rhs)}, {swap(id.rhs), swap(id.lhs)}};
    return *std::min_element(variants.begin(), variants.end());
  }

  ShleiferReport shleifer_scan(Options const& opts) {
    words::Var              x("x"), y("y");
    std::vector<words::Var> alphabet{x, y};
    Letters                 multiset(10, 0);
    std::fill(multiset.begin() + 5, multiset.end(), 1);
    auto ws = arrangements(multiset);

    ShleiferReport report;
    report.words         = ws.size();
    report.pairs_checked = static_cast<std::uint64_t>(ws.size()) * (ws.size() - 1) / 2;
    auto classes         = fingerprint_classes(ws, 2, opts);
    std::set<words::Identity> reps;
    for (auto [i, j] : exact_pairs(classes, ws, alphabet, opts, report.exact_checks)) {
      ++report.raw_identities;
      reps.insert(symmetry_representative({to_word(alphabet, ws[i]), to_word(alphabet, ws[j])}));
    }
    report.identities.assign(reps.begin(), reps.end());
    return report;
  }

}  // namespace tropid::decide
