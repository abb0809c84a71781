#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "tropid/cli.hpp"
#include "tropid/decide.hpp"
#include "tropid/error.hpp"

namespace tropid::cli {

  namespace {

    struct Globals {
      bool          json     = false;
      std::uint64_t seed     = decide::Options{}.seed;
      unsigned      jobs     = 1;
      bool          no_cache = false;
      bool          timings  = false;

      decide::Options options() const {
        decide::Options o;
        o.seed = seed;
        o.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
        return o;
      }
    };

    // One computed command: the cache key and a function producing its JSON.
    struct Job {
      std::string           op;
      json                  args;
      std::function<json()> compute;
      bool                  cacheable = true;
    };

    std::string scalar_text(json const& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    }

    void render(json const& j, std::ostream& out, std::size_t indent) {
      std::size_t width = 0;
      for (auto const& [k, v] : j.items()) {
        width = std::max(width, k.size());
      }
      std::string pad(indent, ' ');
      for (auto const& [k, v] : j.items()) {
        if (v.is_object()) {
          out << pad << k << ":\n";
          if (v.empty()) {
            out << pad << "  (none)\n";
          }
          render(v, out, indent + 2);
        } else if (v.is_array()) {
          out << pad << k << ":" << (v.empty() ? " (none)" : "") << "\n";
          for (auto const& item : v) {
            if (item.is_object()) {
              out << pad << "  -\n";
              render(item, out, indent + 4);
            } else {
              out << pad << "  - " << scalar_text(item) << "\n";
            }
          }
        } else {
          out << pad << std::left << std::setw(static_cast<int>(width)) << k << "  " << scalar_text(v) << "\n";
        }
      }
    }

    void render_report(json const& report, std::ostream& out) {
      std::size_t width = 0;
      for (auto const& c : report["claims"]) {
        width = std::max(width, c["id"].get<std::string>().size());
      }
      out << "reproduction report (" << report["mode"].get<std::string>() << ")\n";
      for (auto const& c : report["claims"]) {
        out << "  " << std::left << std::setw(16) << c["status"].get<std::string>() << std::setw(static_cast<int>(width))
            << c["id"].get<std::string>() << "  " << c["command"].get<std::string>();
        if (c.contains("runtime_s")) {
          out << "  (" << std::fixed << std::setprecision(2) << c["runtime_s"].get<double>() << " s)";
        }
        out << "\n";
        if (c.contains("reason")) {
          out << "      " << c["reason"].get<std::string>() << "\n";
        }
        if (c.contains("mismatches")) {
          for (auto const& m : c["mismatches"]) {
            out << "      " << m["pointer"].get<std::string>() << ": expected " << m["expected"].dump() << ", got "
                << m["actual"].dump() << "\n";
          }
        }
      }
      auto const& s = report["summary"];
      out << "reproduced " << s["reproduced"] << ", failed " << s["failed"] << ", skipped " << s["skipped"] << " of "
          << s["total"] << "\n";
    }

    int execute(Job const& job, Globals const& g, std::ostream& out) {
      auto        start = std::chrono::steady_clock::now();
      json        result;
      std::string cache_state = "off";
      if (job.cacheable && !g.no_cache) {
        Cache cache(Cache::default_directory());
        json  key_args = job.args;
        key_args["seed"] = g.seed;
        if (auto hit = cache.lookup(job.op, key_args)) {
          result      = std::move(*hit);
          cache_state = "hit";
        } else {
          result = job.compute();
          cache.store(job.op, key_args, result);
          cache_state = "miss";
        }
      } else {
        result = job.compute();
      }
      double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      if (g.json) {
        json shown = result;
        if (g.timings) {
          shown["runtime_s"] = seconds;
          shown["cache"]     = cache_state;
        }
        out << shown.dump(2) << "\n";
      } else {
        if (job.op == "verify-paper") {
          render_report(result, out);
        } else {
          render(result, out, 0);
        }
        if (g.timings) {
          out << "runtime  " << std::fixed << std::setprecision(3) << seconds << " s (cache " << cache_state << ")\n";
        }
      }
      return ok;
    }

    std::optional<decide::DiagClasses> diag_option(std::string const& text) {
      if (text.empty()) {
        return std::nullopt;
      }
      return decide::parse_diag_classes(text);
    }

    decide::Verdict check_in(std::string const& monoid, words::Identity const& id,
                             std::optional<decide::DiagClasses> const& classes, decide::Options const& opts) {
      if (monoid == "bicyclic") {
        if (classes) {
          throw UsageError("--diag-classes applies only to u2t and u2z");
        }
        return decide::holds_bicyclic(id, opts);
      }
      auto scalars = monoid == "u2z" ? decide::Scalars::integers : decide::Scalars::reals;
      return decide::holds_u2t(id, classes, scalars, opts);
    }

    json eval_assignment(words::Word const& w, std::vector<std::string> const& assigns) {
      bicyclic::BicyclicAssignment b;
      trop::MatrixAssignment       m;
      for (auto const& a : assigns) {
        auto eq = a.find('=');
        if (eq == std::string::npos) {
          throw UsageError("--assign expects var=value, got '" + a + "'");
        }
        auto name  = a.substr(0, eq);
        auto value = a.substr(eq + 1);
        if (!words::is_identifier(name)) {
          throw UsageError("'" + name + "' is not a variable identifier");
        }
        if (value.starts_with("[")) {
          m.set(words::Var(name), trop::TropMatrix::parse(value));
        } else {
          b.insert_or_assign(words::Var(name), bicyclic::BicyclicElement::parse(value));
        }
      }
      if (!b.empty() && !m.images().empty()) {
        throw UsageError("--assign mixes bicyclic elements and matrices");
      }
      json out{{"word", w.to_string()}};
      if (!m.images().empty()) {
        out["monoid"] = "matrix";
        out["value"]  = trop::eval_word_matrix(w, m).to_string();
        return out;
      }
      auto e        = bicyclic::b_eval(w, b);
      out["monoid"] = "bicyclic";
      out["value"]  = e.to_string();
      out["pair"]   = {e.a.get_str(), e.b.get_str()};
      return out;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide identities of the bicyclic monoid and of 2x2 upper-triangular tropical matrices.", "tropid"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit JSON instead of tables");
    app.add_option("--seed", g.seed, "Seed for randomized refuters and fingerprints")->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_flag("--no-cache", g.no_cache, "Neither read nor write the result cache");
    app.add_flag("--timings", g.timings, "Report wall-clock runtimes (output is then not deterministic)");

    Job job;

    // check
    std::string monoid = "bicyclic", identity_text, diag_text;
    auto*       check  = app.add_subcommand("check", "Decide whether an identity holds");
    check->add_option("--monoid", monoid, "bicyclic, u2t (U_2 over T) or u2z (integer entries)")
        ->check(CLI::IsMember({"bicyclic", "u2t", "u2z"}))
        ->capture_default_str();
    check->add_option("--identity", identity_text, "\"<word> == <word>\"")->required();
    check->add_option("--diag-classes", diag_text, "Variables sharing diagonal entries, e.g. \"AB;C\"");
    check->callback([&] {
      auto id      = words::parse_identity(identity_text);
      auto classes = diag_option(diag_text);
      job          = {"check", {{"monoid", monoid}, {"identity", id.to_string()}, {"diag", diag_text}}, [=, &g] {
                        return check_in(monoid, id, classes, g.options()).to_json();
                      }};
    });

    // partners
    std::string word_text, strategy = "pruned";
    std::size_t max_len  = decide::Options{}.max_partner_length;
    auto*       partners = app.add_subcommand("partners", "All words equal to a word in the bicyclic monoid");
    partners->add_option("--word", word_text, "The word u")->required();
    partners->add_option("--max-len", max_len, "Refuse words longer than this")->capture_default_str();
    partners->add_option("--strategy", strategy, "pruned or brute-force")
        ->check(CLI::IsMember({"pruned", "brute-force"}))
        ->capture_default_str();
    partners->callback([&] {
      auto w = words::parse_word(word_text);
      auto s = strategy == "pruned" ? decide::PartnerStrategy::pruned : decide::PartnerStrategy::brute_force;
      job    = {"partners", {{"word", w.to_string()}, {"strategy", strategy}, {"max_len", max_len}}, [=, &g] {
              auto o               = g.options();
              o.max_partner_length = max_len;
              return decide::partners_bicyclic(w, s, o).to_json();
            }};
    });

    // shleifer
    auto* shleifer = app.add_subcommand("shleifer", "All identities of length 10 in x, y that hold in the bicyclic monoid");
    shleifer->callback([&] { job = {"shleifer", json::object(), [&g] { return decide::shleifer_scan(g.options()).to_json(); }}; });

    // adjan
    std::size_t n          = 0;
    std::string adjan_mono = "bicyclic";
    auto*       adjan      = app.add_subcommand("adjan", "Check u_n == v_n");
    adjan->add_option("--n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
    adjan->add_option("--check", adjan_mono, "bicyclic, u2t or u2z")
        ->check(CLI::IsMember({"bicyclic", "u2t", "u2z"}))
        ->capture_default_str();
    adjan->callback([&] {
      job = {"adjan", {{"n", n}, {"monoid", adjan_mono}}, [&] {
               auto id = words::adjan_family(n);
               return json{{"n", n},
                           {"monoid", adjan_mono},
                           {"identity", id.to_string()},
                           {"verdict", check_in(adjan_mono, id, std::nullopt, g.options()).to_json()}};
             }};
    });

    // conditions
    std::string tag;
    auto*       conditions = app.add_subcommand("conditions", "Bounded check of one sufficient-condition predicate");
    conditions->add_option("--tag", tag, "i, ii or iii")->required()->check(CLI::IsMember({"i", "ii", "iii"}));
    conditions->callback([&] {
      job = {"conditions", {{"tag", tag}}, [&] { return decide::check_condition(tag, g.options()).to_json(); }};
    });

    // replay
    std::size_t replay_n = 0, max_vars = decide::ReplayOptions{}.max_vars, max_n = decide::Options{}.max_replay_n;
    bool        skip_iso = false;
    auto*       replay   = app.add_subcommand("replay", "Classify every small preimage of U_n by the proof's cases");
    replay->add_option("--n", replay_n, "n >= 4")->required();
    replay->add_option("--max-vars", max_vars, "Largest preimage alphabet (at most 6)")->capture_default_str();
    replay->add_option("--max-n", max_n, "Refuse n above this")->capture_default_str();
    replay->add_flag("--skip-isoterms", skip_iso, "Do not confirm each candidate is an isoterm");
    replay->callback([&] {
      job = {"replay", {{"n", replay_n}, {"max_vars", max_vars}, {"max_n", max_n}, {"isoterms", !skip_iso}}, [&] {
               auto o         = g.options();
               o.max_replay_n = max_n;
               return decide::theorem_replay(replay_n, {max_vars, !skip_iso}, o).to_json();
             }};
    });

    // embed
    std::size_t bound = 20;
    auto*       embed = app.add_subcommand("embed", "Check the matrix representation of the bicyclic monoid");
    embed->add_option("--bound", bound, "Exponent range 0..bound")->capture_default_str()->check(CLI::PositiveNumber);
    embed->callback([&] { job = {"embed", {{"bound", bound}}, [&] { return decide::verify_embedding(bound).to_json(); }}; });

    // census
    std::size_t census_len = 8, min_vars = 1;
    auto*       census     = app.add_subcommand("census", "Search all balanced pairs of short words for identities");
    census->add_option("--max-len", census_len, "Longest word length")->capture_default_str();
    census->add_option("--min-vars", min_vars, "Fewest variables")->capture_default_str();
    census->callback([&] {
      job = {"census", {{"max_len", census_len}, {"min_vars", min_vars}}, [&] {
               return decide::isoterm_census(census_len, min_vars, g.options()).to_json();
             }};
    });

    // eval
    std::string              eval_word;
    std::vector<std::string> assigns;
    auto*                    eval = app.add_subcommand("eval", "Evaluate a word under an assignment");
    eval->add_option("--word", eval_word, "The word")->required();
    eval->add_option("--assign", assigns, "var=value; value is B^a A^b or a matrix literal")->required();
    eval->callback([&] {
      auto w = words::parse_word(eval_word);
      job    = {"eval", json::object(), [=] { return eval_assignment(w, assigns); }, false};
    });

    // verify-paper
    bool        fast = false;
    std::string manifest_path;
    auto*       verify = app.add_subcommand("verify-paper", "Reproduce every claim of the manifest");
    verify->add_flag("--fast", fast, "Use the reduced arguments where a claim provides them");
    verify->add_option("--manifest", manifest_path, "Manifest file")->default_str(default_manifest_path().string());
    verify->callback([&] {
      auto path     = manifest_path.empty() ? default_manifest_path() : std::filesystem::path(manifest_path);
      auto manifest = load_manifest(path);
      job           = {"verify-paper", json::object(), [=, &g] {
                std::vector<std::string> forwarded{"--seed", std::to_string(g.seed), "--jobs", std::to_string(g.jobs)};
                if (g.no_cache) {
                  forwarded.push_back("--no-cache");
                }
                return verify_manifest(manifest, fast, forwarded, g.timings);
              },
                       false};
    });

    std::vector<char const*> argv{"tropid"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
      return execute(job, g, out);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? ok : usage_error;
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    } catch (LimitExceeded const& e) {
      err << "refused: " << e.what() << "\n";
      return internal_error;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << "\n";
      return internal_error;
    }
  }

}  // namespace tropid::cli
