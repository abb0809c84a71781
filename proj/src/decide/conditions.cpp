#include <algorithm>
#include <map>
#include <set>

#include "tropid/decide.hpp"
#include "tropid/error.hpp"
#include "tropid/parallel.hpp"

namespace tropid::decide {

  namespace {

    // Restricted growth strings of length n: every word up to renaming, or
    // every set partition of n items, over labels 0, 1, ... in order of
    // first occurrence.
    void growth_strings(std::size_t n, std::vector<std::size_t>& cur, std::size_t used, std::vector<std::vector<std::size_t>>& out) {
      if (cur.size() == n) {
        out.push_back(cur);
        return;
      }
      for (std::size_t l = 0; l <= used && l < n; ++l) {
        cur.push_back(l);
        growth_strings(n, cur, std::max(used, l + 1), out);
        cur.pop_back();
      }
    }

    words::Word spell(std::vector<std::size_t> const& letters, std::vector<words::Var> const& names) {
      std::vector<words::Var> out;
      for (auto l : letters) {
        out.push_back(names[l]);
      }
      return words::Word(std::move(out));
    }

    ConditionReport condition_i(Options const& opts) {
      ConditionReport report;
      report.tag    = "i";
      report.bounds = {{"length", 5}, {"min_vars", 2}};
      std::vector<std::vector<std::size_t>> rgs;
      std::vector<std::size_t>              cur;
      growth_strings(5, cur, 0, rgs);
      auto names = std::vector<words::Var>{words::Var("x"), words::Var("y"), words::Var("z"), words::Var("t"), words::Var("s")};
      std::vector<words::Word> ws;
      for (auto const& g : rgs) {
        if (*std::max_element(g.begin(), g.end()) >= 1) {
          ws.push_back(spell(g, names));
        }
      }
      std::vector<PartnerReport> results(ws.size());
      parallel_for(ws.size(), opts.jobs,
                   [&](std::size_t i) { results[i] = partners_bicyclic(ws[i], PartnerStrategy::brute_force, opts); });
      std::size_t candidates = 0;
      for (auto const& r : results) {
        ++report.cases;
        candidates += r.candidates;
        if (!r.isoterm()) {
          report.failures.push_back(r.word.to_string() + " has partners");
        }
      }
      report.details = {{"words", ws.size()}, {"candidates", candidates}};
      return report;
    }

    ConditionReport condition_ii(Options const& opts) {
      ConditionReport report;
      report.tag    = "ii";
      report.bounds = {{"target", "xyyxxyxyyx"}, {"min_vars", 3}, {"compositions", 512}};
      auto ws       = adjan_preimages(3);
      std::vector<char>        iso(ws.size(), 0);
      std::vector<std::size_t> candidates(ws.size(), 0);
      parallel_for(ws.size(), opts.jobs, [&](std::size_t i) {
        auto r        = partners_bicyclic(ws[i], PartnerStrategy::pruned, opts);
        iso[i]        = r.isoterm();
        candidates[i] = r.candidates;
      });
      std::size_t total = 0;
      std::map<std::size_t, std::size_t> by_vars;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        ++report.cases;
        total += candidates[i];
        ++by_vars[words::content(ws[i]).size()];
        if (!iso[i]) {
          report.failures.push_back(ws[i].to_string() + " is not an isoterm");
        }
      }
      json hist = json::object();
      for (auto [k, c] : by_vars) {
        hist[std::to_string(k)] = c;
      }
      report.details = {{"preimages", ws.size()}, {"candidates", total}, {"by_variable_count", hist}};
      return report;
    }

    ConditionReport condition_iii(Options const& opts) {
      ConditionReport report;
      report.tag    = "iii";
      report.bounds = {{"words", 6}, {"strategy", "brute-force"}};
      json words_out = json::array();
      for (bool same_z : {true, false}) {
        for (auto [i1, i2, i3] : {std::tuple{1, 0, 0}, std::tuple{0, 1, 0}, std::tuple{0, 0, 1}}) {
          auto w = words::condition_iii_word(i1, i2, i3, same_z);
          auto r = partners_bicyclic(w, PartnerStrategy::brute_force, opts);
          ++report.cases;
          if (!r.isoterm()) {
            report.failures.push_back(w.to_string() + " has " + std::to_string(r.partners.size() - 1) + " partners");
          }
          words_out.push_back({{"word", w.to_string()},
                               {"exponents", {i1, i2, i3}},
                               {"same_z", same_z},
                               {"candidates", r.candidates},
                               {"exact_checks", r.exact_checks},
                               {"isoterm", r.isoterm()}});
        }
      }
      report.details = {{"words", words_out}};
      return report;
    }

  }  // namespace

  std::vector<words::Word> adjan_preimages(std::size_t min_vars) {
    auto const target = words::Word::compact("xyyxxyxyyx");
    auto const n      = target.size();
    auto const names  = words::indexed_variables("x", n);
    std::set<words::Word> out;
    for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
      std::vector<words::Word> blocks;
      std::size_t              start = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || (cuts >> (i - 1) & 1u)) {
          blocks.push_back(target.slice(start, i - start));
          start = i;
        }
      }
      // Blocks with equal contents may share a variable; every labeling
      // refines the partition of blocks by content.
      std::map<words::Word, std::vector<std::size_t>> by_content;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        by_content[blocks[b]].push_back(b);
      }
      std::vector<std::vector<std::vector<std::size_t>>> options;
      for (auto const& [content, members] : by_content) {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t>              cur;
        growth_strings(members.size(), cur, 0, parts);
        options.push_back(std::move(parts));
      }
      std::vector<std::size_t> choice(options.size(), 0);
      while (true) {
        std::vector<std::size_t> label(blocks.size());
        std::size_t              offset = 0, group = 0;
        for (auto const& [content, members] : by_content) {
          auto const& part = options[group][choice[group]];
          std::size_t used = 0;
          for (std::size_t m = 0; m < members.size(); ++m) {
            label[members[m]] = offset + part[m];
            used              = std::max(used, part[m] + 1);
          }
          offset += used;
          ++group;
        }
        if (offset >= min_vars) {
          out.insert(words::canonical_rename(spell(label, names), names));
        }
        std::size_t g = 0;
        while (g < choice.size() && ++choice[g] == options[g].size()) {
          choice[g++] = 0;
        }
        if (g == choice.size()) {
          break;
        }
      }
    }
    return {out.begin(), out.end()};
  }

  ConditionReport check_condition(std::string const& tag, Options const& opts) {
    if (tag == "i") {
      return condition_i(opts);
    }
    if (tag == "ii") {
      return condition_ii(opts);
    }
    if (tag == "iii") {
      return condition_iii(opts);
    }
    if (tag == "iv") {
      throw UsageError("condition iv quantifies over all n; use `adjan --n N` for a concrete n");
    }
    throw UsageError("unknown condition tag '" + tag + "' (expected i, ii or iii)");
  }

}  // namespace tropid::decide
