#pragma once

// Decision procedures for identities of the bicyclic monoid and of U_2(T),
// plus the enumerations that reproduce the isoterm and identity results for
// the bicyclic monoid and the nonfinite-basis sufficient condition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropid/bicyclic.hpp"
#include "tropid/trop.hpp"
#include "tropid/words.hpp"

namespace tropid::decide {

  using nlohmann::json;

  struct Options {
    std::uint64_t seed                = 20240917;
    unsigned      jobs                = 1;
    std::size_t   max_partner_length  = 12;
    std::size_t   max_replay_n        = 8;
    std::size_t   max_exact_u2_vars   = 5;
    std::uint64_t falsifier_trials    = 10000;
    std::uint64_t falsifier_bound     = 8;
  };

  enum class Status { holds, fails };
  enum class Method { exact, falsifier };

  using Witness = std::variant<bicyclic::BicyclicAssignment, trop::MatrixAssignment>;

  struct Verdict {
    Status                 status = Status::holds;
    Method                 method = Method::exact;
    std::optional<Witness> witness;

    bool holds() const noexcept {
      return status == Status::holds;
    }
    // {"status": ..., "method": ..., "witness": {var: text} | null}
    json to_json() const;
  };

  // Rebuilds a verdict from its JSON form. Throws UsageError on schema
  // violations; matrix witnesses are recognised by their bracket syntax.
  Verdict verdict_from_json(json const& j);
  // True when the JSON object matches the verdict schema exactly.
  bool valid_verdict_json(json const& j);

  // Re-evaluates a fails verdict's witness on both sides.
  bool witness_separates(words::Identity const& id, Witness const& w);

  Verdict holds_bicyclic(words::Identity const& id, Options const& opts = {});

  // Variables within one class share their diagonal (a- and c-) entries.
  using DiagClasses = std::vector<words::VarSet>;
  DiagClasses parse_diag_classes(std::string_view text);

  enum class Scalars { reals, integers };

  // Exact for at most opts.max_exact_u2_vars variables: every finite/-inf
  // support pattern of the coordinates is checked, and within a pattern the
  // surviving monomials of each entry are compared over the full space.
  // Beyond the cap the randomized falsifier is used and the verdict says so.
  Verdict holds_u2t(words::Identity const&            id,
                    std::optional<DiagClasses> const& classes = std::nullopt,
                    Scalars                           scalars = Scalars::reals,
                    Options const&                    opts    = {});

  std::optional<trop::MatrixAssignment> random_falsify_u2(words::Identity const&            id,
                                                          std::optional<DiagClasses> const& classes,
                                                          Scalars                           scalars,
                                                          std::uint64_t                     trials,
                                                          std::uint64_t                     seed);

  enum class PartnerStrategy {
    // All words with the same letter multiset, prefiltered by fingerprints.
    brute_force,
    // Depth-first over the multiset, cutting every prefix whose projection
    // onto some pair of letters cannot extend to a partner of the matching
    // projection of u. Projections of a partner are partners, since a
    // monoid identity survives deleting variables.
    pruned
  };

  struct PartnerReport {
    words::Word              word;
    std::vector<words::Word> partners;  // sorted, always contains word
    std::size_t              candidates   = 0;
    std::size_t              exact_checks = 0;
    PartnerStrategy          strategy     = PartnerStrategy::pruned;

    bool isoterm() const {
      return partners.size() == 1;
    }
    json to_json() const;
  };

  PartnerReport partners_bicyclic(words::Word const& u,
                                  PartnerStrategy    strategy = PartnerStrategy::pruned,
                                  Options const&     opts     = {});
  bool          is_isoterm_bicyclic(words::Word const& u, Options const& opts = {});

  struct CensusReport {
    std::size_t                  max_length = 0;
    std::size_t                  min_vars   = 1;
    std::size_t                  classes    = 0;  // occurrence shapes scanned
    std::size_t                  words      = 0;
    std::uint64_t                pairs      = 0;  // balanced pairs covered
    std::size_t                  exact_checks = 0;
    std::vector<words::Identity> identities;  // nontrivial identities that hold

    json to_json() const;
  };

  // Every word of length <= max_length in at least min_vars variables, one
  // letter multiset per occurrence shape, split into classes of words that
  // are equal in the bicyclic monoid.
  CensusReport isoterm_census(std::size_t max_length, std::size_t min_vars = 1, Options const& opts = {});

  struct ShleiferReport {
    std::size_t                  words         = 0;
    std::uint64_t                pairs_checked = 0;
    std::size_t                  exact_checks  = 0;
    std::size_t                  raw_identities = 0;  // holding unordered pairs
    std::vector<words::Identity> identities;          // up to side and letter swap

    json to_json() const;
  };

  ShleiferReport shleifer_scan(Options const& opts = {});

  // Canonical representative of an identity in two letters x, y under
  // swapping sides and swapping the letters.
  words::Identity symmetry_representative(words::Identity const& id);

  struct ConditionReport {
    std::string              tag;
    json                     bounds;
    std::size_t              cases = 0;
    std::vector<std::string> failures;
    json                     details;

    bool passed() const {
      return failures.empty();
    }
    json to_json() const;
  };

  // tag "i", "ii" or "iii".
  ConditionReport check_condition(std::string const& tag, Options const& opts = {});

  // Preimages of u under nonerasing substitutions onto the length-10 word
  // xyyxxyxyyx with at least min_vars variables, up to renaming.
  std::vector<words::Word> adjan_preimages(std::size_t min_vars);

  struct ReplayOptions {
    std::size_t max_vars         = 2;
    bool        check_isoterms   = true;
  };

  struct Preimage {
    words::Word         word;
    words::Substitution theta;
  };

  // All (u, Θ) with Θ(u) = target and u in at most max_vars variables,
  // variables named by first occurrence from x, y, z, t, s, r.
  std::vector<Preimage> enumerate_preimages(words::Word const& target, std::size_t max_vars);

  struct CandidateClassification {
    bool                     classified = true;
    bool                     outside_hypothesis = false;
    std::vector<std::string> labels;  // one per non-trivial adjacent pair
    std::string              problem;
  };

  CandidateClassification classify_candidate(std::size_t n, Preimage const& candidate);

  ConditionReport theorem_replay(std::size_t n, ReplayOptions const& ropts = {}, Options const& opts = {});

  struct EmbeddingReport {
    std::size_t              bound            = 0;
    std::size_t              distinct         = 0;
    std::uint64_t            products_checked = 0;
    bool                     unit_on_generators = false;
    bool                     unit_on_products   = false;
    bool                     injective          = false;
    bool                     multiplicative     = false;
    bool                     integral           = false;
    std::vector<std::string> failures;

    bool passed() const {
      return failures.empty();
    }
    json to_json() const;
  };

  trop::TropMatrix embedding_a();
  trop::TropMatrix embedding_b();
  // B^a ⊙ A^b, with the empty product read as E = A ⊙ B.
  trop::TropMatrix embedding_map(std::size_t a, std::size_t b);

  EmbeddingReport verify_embedding(std::size_t bound);

  std::string to_string(Status s);
  std::string to_string(Method m);

}  // namespace tropid::decide
