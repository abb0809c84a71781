#include <algorithm>
#include <map>

#include "tropid/decide.hpp"
#include "tropid/error.hpp"
#include "tropid/parallel.hpp"

namespace tropid::decide {

  namespace {

    std::vector<words::Var> const& replay_names() {
      static std::vector<words::Var> const names{words::Var("x"), words::Var("y"), words::Var("z"),
                                                 words::Var("t"), words::Var("s"), words::Var("r")};
      return names;
    }

    struct PreimageSearch {
      words::Word const&       target;
      std::size_t              max_vars;
      std::vector<words::Word> images;
      std::vector<words::Var>  letters;
      std::vector<Preimage>    out;

      bool matches(words::Word const& image, std::size_t pos) const {
        if (pos + image.size() > target.size()) {
          return false;
        }
        return std::equal(image.begin(), image.end(), target.begin() + static_cast<std::ptrdiff_t>(pos));
      }

      void run(std::size_t pos) {
        auto const& names = replay_names();
        if (pos == target.size()) {
          Preimage p{words::Word(letters), {}};
          for (std::size_t i = 0; i < images.size(); ++i) {
            p.theta.set(names[i], images[i]);
          }
          out.push_back(std::move(p));
          return;
        }
        for (std::size_t i = 0; i < images.size(); ++i) {
          if (matches(images[i], pos)) {
            letters.push_back(names[i]);
            run(pos + images[i].size());
            letters.pop_back();
          }
        }
        if (images.size() < max_vars) {
          for (std::size_t len = 1; pos + len <= target.size(); ++len) {
            images.push_back(target.slice(pos, len));
            letters.push_back(names[images.size() - 1]);
            run(pos + len);
            letters.pop_back();
            images.pop_back();
          }
        }
      }
    };

    // Index i of the variable named x<i>.
    std::size_t subscript(words::Var v) {
      return std::stoul(v.name().substr(1));
    }

    bool matches_any(words::Word const& w, std::initializer_list<char const*> shapes) {
      return std::any_of(shapes.begin(), shapes.end(),
                         [&](char const* s) { return words::equal_up_to_renaming(w, words::Word::compact(s)); });
    }

    // A condition-(iii) word that u deletes to, with x, y the given pair.
    std::optional<std::string> condition_iii_deletion(words::Word const& u, words::VarSet const& pair) {
      auto others = words::content(u);
      for (auto const& v : pair) {
        others.erase(v);
      }
      std::vector<words::Word> shapes;
      for (bool same_z : {true, false}) {
        for (auto [i1, i2, i3] : {std::tuple{1, 0, 0}, std::tuple{0, 1, 0}, std::tuple{0, 0, 1}}) {
          shapes.push_back(words::condition_iii_word(i1, i2, i3, same_z));
        }
      }
      for (auto const& z : others) {
        for (auto const& z1 : others) {
          if (z1 < z) {
            continue;
          }
          auto keep = pair;
          keep.insert(z);
          keep.insert(z1);
          auto w = words::delete_to(u, keep);
          for (auto const& s : shapes) {
            if (words::equal_up_to_renaming(w, s)) {
              return s.to_string();
            }
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::vector<Preimage> enumerate_preimages(words::Word const& target, std::size_t max_vars) {
    if (target.empty()) {
      throw UsageError("enumerate_preimages: target must be nonempty");
    }
    if (max_vars == 0 || max_vars > replay_names().size()) {
      throw UsageError("enumerate_preimages: max_vars must be between 1 and " + std::to_string(replay_names().size()));
    }
    PreimageSearch search{target, max_vars, {}, {}, {}};
    search.run(0);
    return std::move(search.out);
  }

  CandidateClassification classify_candidate(std::size_t n, Preimage const& candidate) {
    CandidateClassification out;
    auto const&             u    = candidate.word;
    auto const              vars = words::content(u);
    out.outside_hypothesis       = 2 * vars.size() >= n;
    auto fail = [&](std::string why) {
      out.classified = false;
      out.problem    = std::move(why);
      return out;
    };

    if (vars.size() == 1) {
      if (u.size() != 1) {
        return fail("one-variable word " + u.to_string() + " is not a single letter");
      }
      out.labels.push_back("one-variable");
      return out;
    }

    auto const                     target = words::adjan_family(n).lhs;
    auto const                     adj    = words::adjacent_pairs(target);
    std::vector<words::VarSet>     pairs;
    for (auto const& [p, q] : adj.pairs) {
      pairs.push_back({p, q});
    }
    for (auto const& p : adj.self) {
      pairs.push_back({p});
    }

    for (auto const& pq : pairs) {
      auto t = candidate.theta.preimage(pq);
      if (t.size() < 2) {
        continue;
      }
      auto w     = words::delete_to(u, t);
      auto label = [&] {
        std::string s;
        for (auto const& v : pq) {
          s += (s.empty() ? "{" : ",") + v.name();
        }
        return s + "}";
      }();
      if (pq.size() == 1) {
        if (w.size() > 5) {
          return fail(label + ": u(T) = " + w.to_string() + " is longer than 5");
        }
        out.labels.push_back("self-pair");
        continue;
      }
      if (t.size() > 2) {
        if (words::find_morphisms(w, words::Word::compact("xyyxxyxyyx"), 1).empty()) {
          return fail(label + ": u(T) = " + w.to_string() + " is not applicable to xyyxxyxyyx");
        }
        out.labels.push_back("condition-ii");
        continue;
      }
      if (w.size() < 10) {
        if (!matches_any(w, {"xy", "xyx", "xyxxy"})) {
          return fail(label + ": u(T) = " + w.to_string() + " is not xy, xyx or xyxxy up to renaming");
        }
        out.labels.push_back("short-pair");
        continue;
      }
      if (w.size() > 10) {
        return fail(label + ": u(T) = " + w.to_string() + " is longer than 10");
      }
      std::size_t i = subscript(*pq.begin()), j = subscript(*pq.rbegin());
      if (i > j) {
        std::swap(i, j);
      }
      std::string kind;
      if (i == 1 && j == n) {
        kind = "case-3";
      } else if (j == i + 1 && 2 * i <= n) {
        kind = "case-1";
      } else if (j == i + 1) {
        kind = "case-2";
      } else {
        return fail(label + ": pair is not adjacent in U_n");
      }
      auto match = condition_iii_deletion(u, t);
      if (!match) {
        return fail(label + " (" + kind + "): no deletion of u matches a condition (iii) word");
      }
      out.labels.push_back(kind + ":" + *match);
    }
    return out;
  }

  ConditionReport theorem_replay(std::size_t n, ReplayOptions const& ropts, Options const& opts) {
    if (n < 4) {
      throw UsageError("replay needs n >= 4");
    }
    if (n > opts.max_replay_n) {
      throw LimitExceeded("replay: n = " + std::to_string(n) + " exceeds the cap " + std::to_string(opts.max_replay_n));
    }
    auto const target     = words::adjan_family(n).lhs;
    auto const candidates = enumerate_preimages(target, ropts.max_vars);

    std::vector<CandidateClassification> classes(candidates.size());
    std::vector<signed char>             iso(candidates.size(), -1);
    parallel_for(candidates.size(), opts.jobs, [&](std::size_t k) {
      classes[k] = classify_candidate(n, candidates[k]);
      auto const& u = candidates[k].word;
      if (ropts.check_isoterms && !classes[k].outside_hypothesis && u.size() <= opts.max_partner_length) {
        iso[k] = is_isoterm_bicyclic(u, opts);
      }
    });

    ConditionReport report;
    report.tag    = "replay";
    report.bounds = {{"n", n}, {"max_vars", ropts.max_vars}, {"isoterm_max_length", opts.max_partner_length}};
    std::map<std::string, std::size_t> kinds;
    std::size_t                        outside = 0, checked = 0, classified = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      ++report.cases;
      auto const& c = classes[k];
      auto const  desc = candidates[k].word.to_string() + " under " + candidates[k].theta.to_string();
      if (c.outside_hypothesis) {
        ++outside;
      }
      if (c.classified) {
        ++classified;
      } else {
        report.failures.push_back(desc + ": " + c.problem);
      }
      for (auto const& l : c.labels) {
        ++kinds[l.substr(0, l.find(':'))];
      }
      if (iso[k] >= 0) {
        ++checked;
        if (iso[k] == 0) {
          report.failures.push_back(desc + ": not an isoterm");
        }
      }
    }
    json hist = json::object();
    for (auto const& [k, v] : kinds) {
      hist[k] = v;
    }
    report.details = {{"candidates", candidates.size()},
                      {"classified", classified},
                      {"unclassified", candidates.size() - classified},
                      {"outside_hypothesis", outside},
                      {"isoterms_checked", checked},
                      {"labels", hist}};
    return report;
  }

}  // namespace tropid::decide
