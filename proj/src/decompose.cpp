#include "reesfb/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "reesfb/satisfaction.hpp"

namespace reesfb {

  char const* to_string(DecompositionCase c) {
    switch (c) {
      case DecompositionCase::none:
        return "none";
      case DecompositionCase::block_1_simple:
        return "block-1-simple";
      case DecompositionCase::hereditary_fb:
        return "hereditary-fb";
      case DecompositionCase::at_least_3_occurring:
        return "at-least-3-occurring";
      case DecompositionCase::block_2_simple_no_sigma:
        return "block-2-simple-no-sigma";
      case DecompositionCase::block_2_simple_no_xtxyty:
        return "block-2-simple-no-xtxyty";
      case DecompositionCase::conditions_only:
        return "conditions-only";
    }
    return "?";
  }

  namespace {
    using Pair = std::pair<Variable, Variable>;

    Pair unordered(Variable x, Variable y) {
      return x < y ? Pair(x, y) : Pair(y, x);
    }

    // Block is x1^e1 ... xk^ek with the xi pairwise distinct.
    bool powers_of_distinct(Word const& block) {
      VariableSet seen;
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0 && block[i] == block[i - 1]) {
          continue;
        }
        if (!seen.insert(block[i]).second) {
          return false;
        }
      }
      return true;
    }

    std::set<Pair> adjacent_pairs(Word const& block) {
      std::set<Pair> result;
      for (std::size_t i = 0; i + 1 < block.size(); ++i) {
        if (block[i] != block[i + 1]) {
          result.insert(unordered(block[i], block[i + 1]));
        }
      }
      return result;
    }
  }  // namespace

  Eligibility delblock_eligibility(Word const& u) {
    Eligibility e;
    e.T           = u.linear_variables();
    auto nonlinear = u.non_linear_variables();
    if (nonlinear.size() < 2) {
      e.reason = "fewer than two non-linear variables";
      return e;
    }
    auto bs = blocks(u);
    for (auto const& b : bs) {
      if (!powers_of_distinct(b)) {
        e.reason = "block " + b.str() + " is not a product of powers of distinct variables";
        return e;
      }
    }
    for (auto const& b : bs) {
      for (auto const& [x, y] : adjacent_pairs(b)) {
        for (auto const& other : bs) {
          if (other.contains(x) && other.contains(y)
              && !adjacent_pairs(other).contains(unordered(x, y))) {
            e.reason = x.display() + " and " + y.display() + " are adjacent in block " + b.str()
                       + " but not in block " + other.str();
            return e;
          }
        }
      }
    }
    e.eligible  = true;
    auto counts = u.content();
    for (auto x : nonlinear) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != x) {
          continue;
        }
        bool left  = i > 0 && counts[u[i - 1]] == 1;
        bool right = i + 1 < u.size() && counts[u[i + 1]] == 1;
        if (left || right) {
          e.A.push_back(x);
          break;
        }
      }
    }
    std::set<Pair> pairs;
    for (auto const& b : bs) {
      auto p = adjacent_pairs(b);
      pairs.insert(p.begin(), p.end());
    }
    e.B.assign(pairs.begin(), pairs.end());

    auto profile = structure_profile(u);
    if (profile.is_block_n_simple(1)) {
      e.tag = DecompositionCase::block_1_simple;
      return e;
    }
    IsotermEngine engine(WordSet({u}));
    bool xtxyty   = engine.is_isoterm(battery::xtxyty());
    bool xyt1xt2y = engine.is_isoterm(battery::xyt1xt2y());
    bool xt1yt2xy = engine.is_isoterm(battery::xt1yt2xy());
    bool thrice   = std::all_of(
        nonlinear.begin(), nonlinear.end(), [&](Variable x) { return counts[x] >= 3; });
    if (!xtxyty && (!xyt1xt2y || !xt1yt2xy)) {
      e.tag = DecompositionCase::hereditary_fb;
    } else if (!xyt1xt2y && !xt1yt2xy && thrice) {
      e.tag = DecompositionCase::at_least_3_occurring;
    } else if (profile.is_block_n_simple(2) && !xyt1xt2y && !xt1yt2xy) {
      e.tag = DecompositionCase::block_2_simple_no_sigma;
    } else if (profile.is_block_n_simple(2) && !xtxyty) {
      e.tag = DecompositionCase::block_2_simple_no_xtxyty;
    } else {
      e.tag = DecompositionCase::conditions_only;
    }
    return e;
  }

  Decomposition decompose(Word const& u, bool canonical) {
    Decomposition d;
    d.source      = u;
    d.eligibility = delblock_eligibility(u);
    if (!d.eligibility.eligible) {
      throw IneligibleError(u.str() + " cannot be decomposed: " + d.eligibility.reason);
    }
    VariableSet       T(d.eligibility.T.begin(), d.eligibility.T.end());
    std::vector<Word> words;
    for (auto x : d.eligibility.A) {
      auto keep = T;
      keep.insert(x);
      words.push_back(project(u, keep));
    }
    for (auto const& [x, y] : d.eligibility.B) {
      auto keep = T;
      keep.insert(x);
      keep.insert(y);
      words.push_back(project(u, keep));
    }
    d.result = WordSet(std::move(words));
    if (canonical) {
      d.result = d.result.canonical();
    }
    return d;
  }

  namespace {
    struct Signature {
      std::uint64_t h1 = 0;
      std::uint64_t h2 = 0;

      friend bool operator==(Signature const&, Signature const&) = default;
    };

    struct SignatureHash {
      std::size_t operator()(Signature const& s) const noexcept {
        return static_cast<std::size_t>(s.h1 ^ (s.h2 * 0x9e3779b97f4a7c15ULL));
      }
    };

    std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
      // splitmix64 finaliser over the running state
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= h >> 30;
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 27;
      h *= 0x94d049bb133111ebULL;
      h ^= h >> 31;
      return h;
    }

    std::uint64_t mix(std::uint64_t h, std::uint64_t v, std::uint64_t salt) {
      return mix(h ^ salt, v);
    }

    // Order-free hash of the instance set {(θ, θ(w))} with every θ(x) != 1;
    // θ is read in sorted variable order so that words with equal content
    // are comparable.
    class Signatures {
     public:
      explicit Signatures(ReesMonoid const& m) : _m(m) {}

      Signature full(Word const& w) {
        auto it = _memo.find(w);
        if (it != _memo.end()) {
          return it->second;
        }
        auto                     vars = w.variables();
        std::vector<std::size_t> slot(vars.size());
        {
          auto sorted = vars;
          std::sort(sorted.begin(), sorted.end());
          for (std::size_t i = 0; i < vars.size(); ++i) {
            slot[i] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), vars[i]) - sorted.begin());
          }
        }
        std::vector<Element> ordered(vars.size());
        Signature            s;
        std::uint64_t        count = 0;
        for_each_instance(
            _m,
            w,
            [&](std::span<Element const> images, Element value) {
              for (std::size_t i = 0; i < images.size(); ++i) {
                ordered[slot[i]] = images[i];
              }
              std::uint64_t h1 = 0x243f6a8885a308d3ULL, h2 = 0x13198a2e03707344ULL;
              for (auto e : ordered) {
                h1 = mix(h1, e);
                h2 = mix(h2, e, 0xa4093822299f31d0ULL);
              }
              s.h1 += mix(h1, value);
              s.h2 += mix(h2, value, 0x082efa98ec4e6c89ULL);
              ++count;
              return true;
            },
            true);
        s.h1 = mix(s.h1, count);
        return _memo.emplace(w, s).first->second;
      }

      // S |= u = v iff the full signatures agree after deleting each subset
      // of the (common) content.
      Signature of(Word const& u) {
        auto vars = u.variables();
        std::sort(vars.begin(), vars.end());
        Signature s{0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL};
        for (std::size_t mask = 0; mask < (std::size_t(1) << vars.size()); ++mask) {
          VariableSet gone;
          for (std::size_t i = 0; i < vars.size(); ++i) {
            if (mask >> i & 1) {
              gone.insert(vars[i]);
            }
          }
          auto f = full(delete_vars(u, gone));
          s.h1   = mix(s.h1, f.h1);
          s.h2   = mix(s.h2, f.h2, 0xc0ac29b7c97c50ddULL);
        }
        return s;
      }

     private:
      ReesMonoid const&                   _m;
      std::unordered_map<Word, Signature> _memo;
    };

    // Words over the first m canonical variables using all of them, with
    // lengths in [m, bound] and at most max_nonlinear repeated variables.
    void for_each_word(std::size_t                                  m,
                       std::size_t                                  bound,
                       std::size_t                                  max_nonlinear,
                       std::function<void(Word const&)> const&     f) {
      std::vector<Variable> vars;
      for (std::size_t i = 0; i < m; ++i) {
        vars.push_back(canonical_variable(i, m));
      }
      std::vector<std::size_t> counts(m, 0);
      std::vector<Variable>    letters;
      std::size_t              unused = m, repeated = 0;
      std::function<void()>    grow = [&]() {
        if (unused == 0) {
          f(Word(letters));
        }
        if (letters.size() == bound) {
          return;
        }
        for (std::size_t i = 0; i < m; ++i) {
          std::size_t r = repeated + (counts[i] == 1 ? 1 : 0);
          std::size_t n = unused - (counts[i] == 0 ? 1 : 0);
          if (r > max_nonlinear || n > bound - letters.size() - 1) {
            continue;
          }
          ++counts[i];
          letters.push_back(vars[i]);
          std::swap(r, repeated);
          std::swap(n, unused);
          grow();
          std::swap(r, repeated);
          std::swap(n, unused);
          letters.pop_back();
          --counts[i];
        }
      };
      grow();
    }
  }  // namespace

  Agreement bounded_identity_agreement(WordSet const& a,
                                       WordSet const& b,
                                       std::size_t    bound,
                                       std::size_t    max_nonlinear) {
    ReesMonoid ma(a), mb(b);
    Signatures siga(ma), sigb(mb);
    Agreement  result;
    for (std::size_t m = 1; m <= bound && result.agree; ++m) {
      // Words of different content never form identities of either monoid,
      // so classes are compared within one content at a time.
      std::unordered_map<Signature, std::pair<Signature, Word>, SignatureHash> by_a, by_b;
      for_each_word(m, bound, max_nonlinear, [&](Word const& w) {
        if (!result.agree) {
          return;
        }
        ++result.words;
        auto sa = siga.of(w);
        auto sb = sigb.of(w);
        auto [ia, new_a] = by_a.try_emplace(sa, sb, w);
        auto [ib, new_b] = by_b.try_emplace(sb, sa, w);
        if (!new_a && !(ia->second.first == sb)) {
          result.agree          = false;
          result.counterexample = Identity(ia->second.second, w);
        } else if (!new_b && !(ib->second.first == sa)) {
          result.agree          = false;
          result.counterexample = Identity(ib->second.second, w);
        }
      });
    }
    return result;
  }

  EquivalenceCheck check_equivalence_bounded(Word const& u, Decomposition const& d, std::size_t bound) {
    EquivalenceCheck c;
    c.bound = bound;
    WordSet       source({u});
    IsotermEngine eu(source);
    IsotermEngine er(d.result);
    c.preceq_forward = std::all_of(d.result.words().begin(), d.result.words().end(),
                                   [&](Word const& w) { return eu.is_isoterm(w); });
    c.preceq_backward = er.is_isoterm(u);
    c.isot2_agree     = true;
    for (auto const& p : isot2_catalog(default_isot2_bounds(source.united(d.result)))) {
      if (p.size() > bound) {
        continue;
      }
      if (eu.is_isoterm(p) != er.is_isoterm(p)) {
        c.isot2_agree      = false;
        c.isot2_difference = p;
        break;
      }
    }
    c.identities = bounded_identity_agreement(source, d.result, bound);
    return c;
  }

}  // namespace reesfb
