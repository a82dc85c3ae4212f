#include "reesfb/isoterm.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace reesfb {

  char const* to_string(PartnerMode m) {
    return m == PartnerMode::balanced ? "balanced" : "bounded";
  }

  ////////////////////////////////////////////////////////////////////////
  // Battery
  ////////////////////////////////////////////////////////////////////////

  namespace battery {
    // clang-format off
    Word const& xtxyty()   { static Word const w = Word::parse("x[t1]xy[t2]y"); return w; }
    Word const& xyyx()     { static Word const w = Word::parse("xyyx"); return w; }
    Word const& yxxty()    { static Word const w = Word::parse("yxxty"); return w; }
    Word const& ytxxy()    { static Word const w = Word::parse("ytxxy"); return w; }
    Word const& xytxy()    { static Word const w = Word::parse("xytxy"); return w; }
    Word const& xytyx()    { static Word const w = Word::parse("xytyx"); return w; }
    Word const& xyt1xt2y() { static Word const w = Word::parse("xy[t1]x[t2]y"); return w; }
    Word const& xt1yt2xy() { static Word const w = Word::parse("x[t1]y[t2]xy"); return w; }
    Word const& xxyy()     { static Word const w = Word::parse("xxyy"); return w; }
    Word const& xyxy()     { static Word const w = Word::parse("xyxy"); return w; }
    // clang-format on

    std::vector<Word> const& all() {
      static std::vector<Word> const words{
          xtxyty(), xyyx(), yxxty(), ytxxy(), xytxy(), xytyx(), xyt1xt2y(), xt1yt2xy(), xxyy(), xyxy()};
      return words;
    }

    std::string name(Word const& p) {
      if (p == xtxyty()) {
        return "xtxyty";  // both t's distinct, as usual
      }
      std::string result;
      for (auto x : p) {
        result += x.name();
      }
      return result;
    }
  }  // namespace battery

  ////////////////////////////////////////////////////////////////////////
  // IsotermEngine
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_prefix(ReesMonoid const& m, Element a, Element f) {
      if (a == ReesMonoid::zero) {
        return false;
      }
      auto const& wa = m.word(a);
      auto const& wf = m.word(f);
      return wa.size() <= wf.size() && std::equal(wa.begin(), wa.end(), wf.begin());
    }

    Word const& xtx() {
      static Word const w = Word::parse("xtx");
      return w;
    }

    Word const& xx() {
      static Word const w = Word::parse("xx");
      return w;
    }
  }  // namespace

  IsotermEngine::IsotermEngine(WordSet w) : _words(std::move(w)), _monoid(_words) {}

  bool IsotermEngine::xtx_is_isoterm() {
    if (!_xtx) {
      _xtx = report(xtx()).is_isoterm;
    }
    return *_xtx;
  }

  bool IsotermEngine::xx_is_isoterm() {
    if (!_xx) {
      _xx = report(xx()).is_isoterm;
    }
    return *_xx;
  }

  // Rearrangements suffice when every identity u = v of S(W) is balanced.
  // Linear letters stay linear once xtx is an isoterm.  A letter x occurring
  // twice keeps two occurrences if a linear t of u sits between them
  // (u(x,t) = xtx) or if xx is an isoterm; xx = xxx holds in S({abtab}), so
  // xtx alone is not enough.
  PartnerMode IsotermEngine::mode_for(Word const& u) {
    if (equal_up_to_renaming(u, xtx()) || equal_up_to_renaming(u, xx())) {
      return PartnerMode::bounded;
    }
    if (!xtx_is_isoterm()) {
      return PartnerMode::bounded;
    }
    auto counts = u.content();
    for (auto const& [x, n] : counts) {
      if (n == 1) {
        continue;
      }
      if (n > 2) {
        return PartnerMode::bounded;
      }
      std::size_t first = u.size(), last = 0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == x) {
          first = std::min(first, i);
          last  = i;
        }
      }
      bool separated = false;
      for (std::size_t i = first + 1; i < last; ++i) {
        separated = separated || counts[u[i]] == 1;
      }
      if (!separated && !xx_is_isoterm()) {
        return PartnerMode::bounded;
      }
    }
    return PartnerMode::balanced;
  }

  IsotermReport const& IsotermEngine::report(Word const& u) {
    auto it = _cache.find(u);
    if (it != _cache.end()) {
      return it->second;
    }
    IsotermReport r;
    r.word         = u;
    r.mode         = mode_for(u);
    auto max_len   = r.mode == PartnerMode::balanced ? u.size() : u.size() + 1;
    auto partner   = least_partner(u, r.mode, max_len, &r.candidates_examined);
    r.is_isoterm   = !partner.has_value();
    if (partner) {
      r.partner = Identity(u, *partner);
    }
    return _cache.emplace(u, std::move(r)).first->second;
  }

  std::optional<Word> IsotermEngine::least_partner(Word const& u,
                                                   PartnerMode mode,
                                                   std::size_t max_length,
                                                   std::size_t* examined) {
    auto const vars = u.variables();
    auto const k    = vars.size();
    if (k == 0) {
      return std::nullopt;
    }
    std::vector<std::size_t> quota(k);
    for (std::size_t i = 0; i < k; ++i) {
      quota[i] = u.occurrences(vars[i]);
    }
    if (mode == PartnerMode::balanced) {
      max_length = u.size();
    }

    // Every instance θ(u) = f must survive as θ(v) = f, so θ(prefix of v) is a
    // prefix of f all along the search.
    auto const                        inst = instances(_monoid, u);
    std::size_t const                 N    = inst.size();
    std::vector<std::vector<Element>> acc(max_length + 1, std::vector<Element>(N));
    std::fill(acc[0].begin(), acc[0].end(), ReesMonoid::one);

    std::vector<std::size_t> used(k, 0);
    std::vector<Variable>    letters;
    std::size_t              missing = k;  // variables not yet used
    std::size_t              count   = 0;
    std::optional<Word>      found;

    auto complete = [&](std::size_t depth) {
      if (mode == PartnerMode::balanced) {
        return depth == u.size();
      }
      return depth > 0 && missing == 0;
    };

    std::function<bool(std::size_t)> visit = [&](std::size_t depth) -> bool {
      if (complete(depth)) {
        Word v(letters);
        if (v != u) {
          bool exact = true;
          for (std::size_t i = 0; i < N && exact; ++i) {
            exact = acc[depth][i] == inst[i].value;
          }
          if (exact) {
            ++count;
            // Inst(u) is inside Inst(v) now, and v has the variables of u, so
            // u = v holds iff v has no further instance.
            std::size_t more = 0;
            for_each_instance(_monoid, v, [&](std::span<Element const>, Element) {
              return ++more <= N;
            });
            if (more == N) {
              found = std::move(v);
              return false;
            }
          }
        }
      }
      if (depth == max_length) {
        return true;
      }
      for (std::size_t z = 0; z < k; ++z) {
        if (mode == PartnerMode::balanced && used[z] == quota[z]) {
          continue;
        }
        std::size_t still = missing - (used[z] == 0 ? 1 : 0);
        if (still > max_length - depth - 1) {
          continue;
        }
        auto const& prev = acc[depth];
        auto&       next = acc[depth + 1];
        bool        ok   = true;
        for (std::size_t i = 0; i < N; ++i) {
          next[i] = _monoid.multiply(prev[i], inst[i].images[z]);
          if (!is_prefix(_monoid, next[i], inst[i].value)) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          continue;
        }
        letters.push_back(vars[z]);
        ++used[z];
        missing = still;
        bool go = visit(depth + 1);
        letters.pop_back();
        --used[z];
        missing += used[z] == 0 ? 1 : 0;
        if (!go) {
          return false;
        }
      }
      return true;
    };
    visit(0);
    if (examined != nullptr) {
      *examined = count;
    }
    return found;
  }

  std::optional<bool> IsotermEngine::is_isoterm_fast(Word const& p) {
    if (equal_up_to_renaming(p, battery::xtxyty())) {
      for (auto const& u : _words.words()) {
        for (auto const& pair : adjacency_pairs(u)) {
          if (!pair.first_first() && !pair.last_last()) {
            return true;
          }
        }
      }
      return false;
    }
    auto const& all = battery::all();
    if (std::none_of(
            all.begin(), all.end(), [&](Word const& b) { return equal_up_to_renaming(p, b); })) {
      return std::nullopt;
    }
    auto nonlinear = p.non_linear_variables();
    if (nonlinear.size() != 2) {
      return std::nullopt;
    }
    auto const vars = p.variables();
    auto       ix   = static_cast<std::size_t>(
        std::find(vars.begin(), vars.end(), nonlinear[0]) - vars.begin());
    auto iy = static_cast<std::size_t>(
        std::find(vars.begin(), vars.end(), nonlinear[1]) - vars.begin());
    bool separated = false;
    for_each_instance(_monoid, p, [&](std::span<Element const> images, Element) {
      auto const& a = _monoid.word(images[ix]);
      auto const& b = _monoid.word(images[iy]);
      if (a + b != b + a) {
        separated = true;
        return false;
      }
      return true;
    });
    if (!separated) {
      return std::nullopt;
    }
    auto linear = p.linear_variables();
    for (auto x : nonlinear) {
      VariableSet keep(linear.begin(), linear.end());
      keep.insert(x);
      if (!is_isoterm(project(p, keep))) {
        return std::nullopt;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> candidate_partners(Word const& u, WordSet const& w) {
    IsotermEngine     engine(w);
    auto              vars = u.variables();
    std::set<Word>    result;
    if (engine.mode_for(u) == PartnerMode::balanced) {
      std::vector<Variable> letters(u.begin(), u.end());
      std::sort(letters.begin(), letters.end());
      do {
        Word v(letters);
        if (v != u) {
          result.insert(std::move(v));
        }
      } while (std::next_permutation(letters.begin(), letters.end()));
      return {result.begin(), result.end()};
    }
    Variable    fresh("t");
    std::size_t i = 1;
    while (u.contains(fresh)) {
      fresh = Variable("t" + std::to_string(i++));
    }
    auto alphabet = vars;
    alphabet.push_back(fresh);
    std::vector<Variable>       letters;
    std::function<void(bool)> grow = [&](bool fresh_used) {
      if (!letters.empty()) {
        Word v(letters);
        if (v != u) {
          result.insert(std::move(v));
        }
      }
      if (letters.size() == u.size() + 1) {
        return;
      }
      for (auto x : alphabet) {
        bool is_fresh = x == fresh;
        if (is_fresh && fresh_used) {
          continue;
        }
        letters.push_back(x);
        grow(fresh_used || is_fresh);
        letters.pop_back();
      }
    };
    grow(false);
    return {result.begin(), result.end()};
  }

  IsotermReport is_isoterm(Word const& u, WordSet const& w) {
    IsotermEngine engine(w);
    return engine.report(u);
  }

  std::optional<bool> is_isoterm_fast(Word const& p, WordSet const& w) {
    IsotermEngine engine(w);
    return engine.is_isoterm_fast(p);
  }

  bool preceq(WordSet const& w, WordSet const& w2) {
    IsotermEngine engine(w);
    for (auto const& u : w2.words()) {
      if (!engine.is_isoterm(u)) {
        return false;
      }
    }
    return true;
  }

  bool equiv(WordSet const& w, WordSet const& w2) {
    return preceq(w, w2) && preceq(w2, w);
  }

  bool below_basis(WordSet const& w, IdentitySet const& sigma) {
    return satisfies_all(ReesMonoid(w), sigma).holds;
  }

  std::vector<Word> isot2_catalog(Isot2Bounds const& bounds) {
    Variable const           x("x"), y("y");
    std::set<Word, ShortLex> result;
    for (std::size_t cx = 1; cx <= bounds.max_occ; ++cx) {
      for (std::size_t cy = 0; cy <= bounds.max_occ; ++cy) {
        std::vector<Variable> skeleton(cx, x);
        skeleton.insert(skeleton.end(), cy, y);
        std::sort(skeleton.begin(), skeleton.end());
        do {
          std::size_t gaps = skeleton.size() + 1;
          for (std::size_t mask = 0; mask < (std::size_t(1) << gaps); ++mask) {
            if (!bounds.allow_end_gaps && (mask & 1 || mask >> (gaps - 1) & 1)) {
              continue;
            }
            std::vector<Variable> letters;
            std::size_t           t = 0;
            for (std::size_t g = 0; g < gaps; ++g) {
              if (mask >> g & 1) {
                letters.emplace_back("t" + std::to_string(++t));
              }
              if (g < skeleton.size()) {
                letters.push_back(skeleton[g]);
              }
            }
            result.insert(canonical_form(Word(std::move(letters))));
          }
        } while (std::next_permutation(skeleton.begin(), skeleton.end()));
      }
    }
    return {result.begin(), result.end()};
  }

  std::vector<Word> isot2(IsotermEngine& engine, Isot2Bounds const& bounds) {
    std::vector<Word> result;
    for (auto const& p : isot2_catalog(bounds)) {
      if (engine.is_isoterm(p)) {
        result.push_back(p);
      }
    }
    return result;
  }

  std::vector<Word> isot2(WordSet const& w, Isot2Bounds const& bounds) {
    IsotermEngine engine(w);
    return isot2(engine, bounds);
  }

  Isot2Bounds default_isot2_bounds(WordSet const& w) {
    Isot2Bounds b;
    for (auto const& u : w.words()) {
      b.max_occ = std::max(b.max_occ, structure_profile(u).max_occurrence);
    }
    return b;
  }

}  // namespace reesfb
