#include "reesfb/derivation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "reesfb/families.hpp"

namespace reesfb {

  IdentitySet delta_closure(IdentitySet const& delta) {
    std::set<Identity> result;
    for (auto const& id : delta) {
      auto vars = id.variables();
      if (vars.size() >= 8 * sizeof(std::size_t) - 1) {
        throw std::invalid_argument("too many variables for a deletion closure");
      }
      for (std::size_t mask = 0; mask < (std::size_t(1) << vars.size()); ++mask) {
        VariableSet xs;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (mask >> i & 1) {
            xs.insert(vars[i]);
          }
        }
        Identity d(delete_vars(id.lhs, xs), delete_vars(id.rhs, xs));
        if (!d.is_trivial()) {
          result.insert(d.normalized());
        }
      }
    }
    return {result.begin(), result.end()};
  }

  bool deletes_to_square_pattern(Word const& u, std::size_t k) {
    if (k == 0) {
      throw std::invalid_argument("deletes_to_square_pattern needs k >= 1");
    }
    // Positions of the variables occurring exactly twice.
    std::map<Variable, std::vector<std::size_t>> at;
    for (std::size_t i = 0; i < u.size(); ++i) {
      at[u[i]].push_back(i);
    }
    std::vector<Variable> twice;
    for (auto const& [x, pos] : at) {
      if (pos.size() == 2) {
        twice.push_back(x);
      }
    }
    for (auto x : twice) {
      for (auto y : twice) {
        if (x == y) {
          continue;
        }
        auto const& px = at[x];
        auto const& py = at[y];
        // u(x, y) = xyxy
        if (!(px[0] < py[0] && py[0] < px[1] && px[1] < py[1])) {
          continue;
        }
        // Squares sit strictly between the first y and the second x, in
        // disjoint consecutive intervals; pick greedily by right end.
        std::vector<std::pair<std::size_t, std::size_t>> intervals;
        for (auto a : twice) {
          if (a == x || a == y) {
            continue;
          }
          auto const& pa = at[a];
          if (pa[0] > py[0] && pa[1] < px[1]) {
            intervals.emplace_back(pa[1], pa[0]);
          }
        }
        std::sort(intervals.begin(), intervals.end());
        std::size_t count = 0, end = py[0];
        for (auto [right, left] : intervals) {
          if (left > end) {
            ++count;
            end = right;
          }
        }
        if (count >= k) {
          return true;
        }
      }
    }
    return false;
  }

  IdentitySet sigma_k(std::size_t k, std::size_t n_cap) {
    if (k == 0 || n_cap < 2) {
      throw std::invalid_argument("sigma_k needs k >= 1 and n_cap >= 2");
    }
    IdentitySet seeds;
    for (std::size_t n = 2; n <= n_cap; ++n) {
      seeds.push_back(jackson(n));
    }
    IdentitySet result;
    for (auto const& id : delta_closure(seeds)) {
      if (!deletes_to_square_pattern(id.lhs, k) && !deletes_to_square_pattern(id.rhs, k)) {
        result.push_back(id);
      }
    }
    return result;
  }

  std::vector<Application> one_step_applications(Word const&     u,
                                                 Identity const& id,
                                                 bool            forward_only) {
    std::vector<Application> result;
    auto apply = [&](Word const& from, Word const& to, bool forward) {
      auto vars = from.variables();
      for (std::size_t pos = 0; pos <= u.size(); ++pos) {
        for (std::size_t len = 0; pos + len <= u.size(); ++len) {
          auto f = u.factor(pos, len);
          for_each_match(from, f, [&](std::vector<Word> const& images) {
            WordSubstitution theta;
            for (std::size_t i = 0; i < vars.size(); ++i) {
              theta.emplace(vars[i], images[i]);
            }
            for (auto x : to) {
              theta.try_emplace(x, Word());
            }
            Application a;
            a.result = u.factor(0, pos) + substitute(to, theta)
                       + u.factor(pos + len, u.size() - pos - len);
            a.position = pos;
            a.length   = len;
            a.theta    = std::move(theta);
            a.forward  = forward;
            result.push_back(std::move(a));
            return true;
          });
        }
      }
    };
    apply(id.lhs, id.rhs, true);
    if (!forward_only) {
      apply(id.rhs, id.lhs, false);
    }
    return result;
  }

  std::set<Word> one_step_apply(Word const& u, Identity const& id, bool forward_only) {
    std::set<Word> result;
    for (auto& a : one_step_applications(u, id, forward_only)) {
      result.insert(std::move(a.result));
    }
    return result;
  }

  bool is_isoterm_wrt(Word const& u, IdentitySet const& sigma) {
    for (auto const& id : sigma) {
      for (auto const& w : one_step_apply(u, id)) {
        if (w != u) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<Derivation> derive_bounded(Word const&        u,
                                           Word const&        v,
                                           IdentitySet const& sigma,
                                           std::size_t        depth) {
    if (depth == 0) {
      throw std::invalid_argument("derive_bounded needs depth >= 1");
    }
    if (u == v) {
      return Derivation{};
    }
    // Breadth first; within a level words are expanded in lexicographic
    // order, so the derivation found is the least among the shortest.
    std::map<Word, DerivationStep> parent;
    std::vector<Word>              level{u};
    std::set<Word>                 seen{u};
    for (std::size_t d = 0; d < depth; ++d) {
      std::set<Word> next;
      for (auto const& w : level) {
        for (auto const& id : sigma) {
          auto apps = one_step_applications(w, id);
          std::sort(apps.begin(), apps.end(), [](auto const& a, auto const& b) {
            return a.result < b.result;
          });
          for (auto& a : apps) {
            if (seen.contains(a.result)) {
              continue;
            }
            seen.insert(a.result);
            next.insert(a.result);
            parent.emplace(a.result, DerivationStep{w, a.result, id, a});
            if (a.result == v) {
              Derivation result;
              for (Word cur = v; cur != u;) {
                auto const& step = parent.at(cur);
                result.steps.push_back(step);
                cur = step.from;
              }
              std::reverse(result.steps.begin(), result.steps.end());
              return result;
            }
          }
        }
      }
      level.assign(next.begin(), next.end());
    }
    return std::nullopt;
  }

}  // namespace reesfb
