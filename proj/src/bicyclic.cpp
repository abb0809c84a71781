#include "tropid/bicyclic.hpp"

#include <cctype>
#include <random>
#include <sstream>

#include "tropid/error.hpp"

namespace tropid::bicyclic {

  std::string BicyclicElement::to_string() const {
    if (a == 0 && b == 0) {
      return "1";
    }
    std::string out;
    if (a != 0) {
      out += "B^" + a.get_str();
    }
    if (b != 0) {
      if (!out.empty()) {
        out += ' ';
      }
      out += "A^" + b.get_str();
    }
    return out;
  }

  BicyclicElement BicyclicElement::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        token;
    BicyclicElement    e;
    bool               seen_a = false, seen_b = false, seen_one = false, any = false;
    auto bad = [&](std::string const& why) {
      return UsageError("invalid bicyclic element '" + std::string(text) + "': " + why);
    };
    while (in >> token) {
      any = true;
      if (token == "1") {
        seen_one = true;
        continue;
      }
      char gen = token[0];
      if (gen != 'A' && gen != 'B') {
        throw bad("expected A, B or 1");
      }
      mpz_class k = 1;
      if (token.size() > 1) {
        if (token[1] != '^' || token.size() == 2) {
          throw bad("expected '^' and an exponent");
        }
        for (std::size_t i = 2; i < token.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
            throw bad("exponent must be a nonnegative integer");
          }
        }
        k = mpz_class(token.substr(2));
      }
      if (gen == 'B') {
        if (seen_b || seen_a) {
          throw bad("normal form is B^a A^b");
        }
        seen_b = true;
        e.a    = k;
      } else {
        if (seen_a) {
          throw bad("repeated A factor");
        }
        seen_a = true;
        e.b    = k;
      }
    }
    if (!any || (seen_one && (seen_a || seen_b))) {
      throw bad("empty or mixed identity");
    }
    return e;
  }

  BicyclicElement b_mul(BicyclicElement const& p, BicyclicElement const& q) {
    if (q.a >= p.b) {
      return {p.a + (q.a - p.b), q.b};
    }
    return {p.a, q.b + (p.b - q.a)};
  }

  BicyclicElement b_eval(words::Word const& w, BicyclicAssignment const& phi) {
    BicyclicElement acc = BicyclicElement::identity();
    for (auto const& v : w) {
      auto it = phi.find(v);
      if (it == phi.end()) {
        throw UsageError("bicyclic assignment has no image for variable '" + v.name() + "'");
      }
      acc = b_mul(acc, it->second);
    }
    return acc;
  }

  BicyclicElement rewrite_oracle(std::string_view s) {
    std::string str(s);
    for (char c : str) {
      if (c != 'A' && c != 'B') {
        throw UsageError("rewrite_oracle expects a string over {A,B}");
      }
    }
    for (auto pos = str.find("AB"); pos != std::string::npos; pos = str.find("AB")) {
      str.erase(pos, 2);
    }
    auto first_a = str.find('A');
    std::size_t bs = first_a == std::string::npos ? str.size() : first_a;
    return {mpz_class(static_cast<unsigned long>(bs)), mpz_class(static_cast<unsigned long>(str.size() - bs))};
  }

  std::string generator_string(BicyclicElement const& e) {
    return std::string(e.a.get_ui(), 'B') + std::string(e.b.get_ui(), 'A');
  }

  std::optional<BicyclicAssignment> random_falsify(words::Identity const& id,
                                                   std::uint64_t          exponent_bound,
                                                   std::uint64_t          trials,
                                                   std::uint64_t          seed) {
    if (auto w = imbalance_witness(id)) {
      return w;
    }
    auto vars = words::content(id.lhs + id.rhs);
    std::uniform_int_distribution<std::uint64_t> dist(0, exponent_bound);
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::seed_seq      sseq{seed, t};
      std::mt19937_64    rng(sseq);
      BicyclicAssignment phi;
      for (auto const& v : vars) {
        auto a = dist(rng);
        auto b = dist(rng);
        phi.insert_or_assign(v, BicyclicElement{mpz_class(static_cast<unsigned long>(a)),
                                                mpz_class(static_cast<unsigned long>(b))});
      }
      if (!(b_eval(id.lhs, phi) == b_eval(id.rhs, phi))) {
        return phi;
      }
    }
    return std::nullopt;
  }

  std::optional<BicyclicAssignment> imbalance_witness(words::Identity const& id) {
    auto l = words::analyze(id.lhs), r = words::analyze(id.rhs);
    auto vars = l.content;
    vars.insert(r.content.begin(), r.content.end());
    for (auto const& x : vars) {
      if (l.occ[x] != r.occ[x]) {
        BicyclicAssignment phi;
        for (auto const& v : vars) {
          phi.insert_or_assign(v, v == x ? BicyclicElement::gen_a() : BicyclicElement::identity());
        }
        if (b_eval(id.lhs, phi) == b_eval(id.rhs, phi)) {
          throw std::logic_error("imbalance witness failed to separate");
        }
        return phi;
      }
    }
    return std::nullopt;
  }

  AssignmentBank::AssignmentBank(std::size_t alphabet_size, std::size_t count, std::int64_t exponent_bound, std::uint64_t seed)
      : _alphabet(alphabet_size), _count(count), _values(alphabet_size * count) {
    std::uniform_int_distribution<std::int64_t> dist(0, exponent_bound);
    for (std::size_t t = 0; t < count; ++t) {
      std::seed_seq   sseq{seed, static_cast<std::uint64_t>(t)};
      std::mt19937_64 rng(sseq);
      for (std::size_t x = 0; x < alphabet_size; ++x) {
        auto a                         = dist(rng);
        auto b                         = dist(rng);
        _values[t * _alphabet + x] = {a, b};
      }
    }
  }

  SmallElement AssignmentBank::eval(std::size_t assignment, std::vector<std::uint8_t> const& word) const {
    SmallElement        acc;
    SmallElement const* row = _values.data() + assignment * _alphabet;
    for (auto letter : word) {
      acc = small_mul(acc, row[letter]);
    }
    return acc;
  }

  std::vector<SmallElement> AssignmentBank::fingerprint(std::vector<std::uint8_t> const& word) const {
    std::vector<SmallElement> out(_count);
    for (std::size_t t = 0; t < _count; ++t) {
      out[t] = eval(t, word);
    }
    return out;
  }

  BicyclicAssignment AssignmentBank::to_assignment(std::size_t assignment, std::vector<words::Var> const& alphabet) const {
    BicyclicAssignment phi;
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
      auto v = value(assignment, x);
      phi.insert_or_assign(alphabet[x], BicyclicElement{mpz_class(static_cast<long>(v.a)), mpz_class(static_cast<long>(v.b))});
    }
    return phi;
  }

}  // namespace tropid::bicyclic
