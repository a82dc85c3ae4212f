#include "reesfb/satisfaction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "reesfb/kernels.hpp"

namespace reesfb {

  namespace {
    // Budget for the plain enumeration before switching to instances.
    constexpr double exhaustive_budget = 4.0e6;

    std::vector<std::size_t> codes_of(Word const& u, std::vector<Variable> const& vars) {
      std::vector<std::size_t> codes;
      codes.reserve(u.size());
      for (auto x : u) {
        codes.push_back(
            static_cast<std::size_t>(std::find(vars.begin(), vars.end(), x) - vars.begin()));
      }
      return codes;
    }

    Assignment make_assignment(std::vector<Variable> const& vars,
                               std::vector<Element> const&  values) {
      Assignment theta;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        theta.emplace_back(vars[i], values[i]);
      }
      return theta;
    }

    class Exhaustive {
     public:
      Exhaustive(ReesMonoid const& m, Identity const& id)
          : _m(m),
            _n(static_cast<Element>(m.size())),
            _vars(id.variables()),
            _lhs(codes_of(id.lhs, _vars)),
            _rhs(codes_of(id.rhs, _vars)),
            _values(_vars.size(), 0),
            _images(_n),
            _out_l(_n),
            _out_r(_n) {
        for (Element e = 0; e < _n; ++e) {
          _images[e] = e;
        }
      }

      SatisfactionResult run() {
        SatisfactionResult r;
        r.method = SatisfactionMethod::exhaustive;
        if (_vars.empty()) {
          return r;
        }
        if (!visit(0)) {
          r.holds     = false;
          r.witness   = make_assignment(_vars, _values);
          r.lhs_value = product(_lhs);
          r.rhs_value = product(_rhs);
        }
        return r;
      }

     private:
      Element product(std::vector<std::size_t> const& side) const {
        Element acc = ReesMonoid::one;
        for (auto c : side) {
          acc = _m.multiply(acc, _values[c]);
        }
        return acc;
      }

      // Some run of letters among the first `depth` variables multiplies to 0,
      // so the side is 0 whatever the remaining images are.
      bool dead(std::vector<std::size_t> const& side, std::size_t depth) const {
        Element acc = ReesMonoid::one;
        for (auto c : side) {
          if (c < depth) {
            acc = _m.multiply(acc, _values[c]);
            if (acc == ReesMonoid::zero) {
              return true;
            }
          } else {
            acc = ReesMonoid::one;
          }
        }
        return false;
      }

      // Splits a side into the constants between occurrences of the last variable.
      void segments(std::vector<std::size_t> const& side, std::vector<Element>& consts) const {
        std::size_t last = _vars.size() - 1;
        consts.clear();
        Element acc = ReesMonoid::one;
        for (auto c : side) {
          if (c == last) {
            consts.push_back(acc);
            acc = ReesMonoid::one;
          } else {
            acc = _m.multiply(acc, _values[c]);
          }
        }
        consts.push_back(acc);
      }

      bool visit(std::size_t depth) {
        if (depth + 1 == _vars.size()) {
          segments(_lhs, _consts_l);
          segments(_rhs, _consts_r);
          auto const* table = _m.table().data();
          kernels::eval_segments(
              table, _n, _consts_l.data(), _consts_l.size(), _images.data(), _n, _out_l.data());
          kernels::eval_segments(
              table, _n, _consts_r.data(), _consts_r.size(), _images.data(), _n, _out_r.data());
          auto j = kernels::first_mismatch(_out_l.data(), _out_r.data(), _n);
          if (j < _n) {
            _values[depth] = static_cast<Element>(j);
            return false;
          }
          return true;
        }
        for (Element e = 0; e < _n; ++e) {
          _values[depth] = e;
          if (dead(_lhs, depth + 1) && dead(_rhs, depth + 1)) {
            continue;
          }
          if (!visit(depth + 1)) {
            return false;
          }
        }
        return true;
      }

      ReesMonoid const&        _m;
      Element                  _n;
      std::vector<Variable>    _vars;
      std::vector<std::size_t> _lhs;
      std::vector<std::size_t> _rhs;
      std::vector<Element>     _values;
      std::vector<Element>     _images;
      std::vector<Element>     _out_l;
      std::vector<Element>     _out_r;
      std::vector<Element>     _consts_l;
      std::vector<Element>     _consts_r;
    };

    SatisfactionResult by_instances(ReesMonoid const& m, Identity const& id) {
      SatisfactionResult r;
      r.method  = SatisfactionMethod::instances;
      auto vars = id.variables();
      // A variable on one side only: send it to 0 and everything else to 1.
      for (auto x : vars) {
        if (id.lhs.contains(x) != id.rhs.contains(x)) {
          for (auto y : vars) {
            r.witness.emplace_back(y, y == x ? ReesMonoid::zero : ReesMonoid::one);
          }
          r.holds     = false;
          r.lhs_value = evaluate(m, id.lhs, r.witness);
          r.rhs_value = evaluate(m, id.rhs, r.witness);
          return r;
        }
      }
      // With equal contents any 0 image kills both sides, and a failure needs
      // one side to be a nonzero element.
      auto check = [&](Word const& u, Word const& v) {
        auto uvars = u.variables();
        for_each_instance(m, u, [&](std::span<Element const> images, Element value) {
          Assignment theta;
          for (std::size_t i = 0; i < uvars.size(); ++i) {
            theta.emplace_back(uvars[i], images[i]);
          }
          if (evaluate(m, v, theta) != value) {
            r.holds = false;
            for (auto x : vars) {
              auto it = std::find(uvars.begin(), uvars.end(), x);
              r.witness.emplace_back(x, images[static_cast<std::size_t>(it - uvars.begin())]);
            }
            return false;
          }
          return true;
        });
      };
      check(id.lhs, id.rhs);
      if (r.holds) {
        check(id.rhs, id.lhs);
      }
      if (!r.holds) {
        r.lhs_value = evaluate(m, id.lhs, r.witness);
        r.rhs_value = evaluate(m, id.rhs, r.witness);
      }
      return r;
    }
  }  // namespace

  Element evaluate(ReesMonoid const& m, Word const& u, Assignment const& theta) {
    Element acc = ReesMonoid::one;
    for (auto x : u) {
      auto it = std::find_if(
          theta.begin(), theta.end(), [x](auto const& p) { return p.first == x; });
      if (it == theta.end()) {
        throw std::invalid_argument("no image for variable " + x.display());
      }
      acc = m.multiply(acc, it->second);
    }
    return acc;
  }

  char const* to_string(SatisfactionMethod m) {
    switch (m) {
      case SatisfactionMethod::automatic:
        return "automatic";
      case SatisfactionMethod::exhaustive:
        return "exhaustive";
      case SatisfactionMethod::instances:
        return "instances";
    }
    return "?";
  }

  SatisfactionResult satisfies(ReesMonoid const& m, Identity const& id, SatisfactionMethod method) {
    if (method == SatisfactionMethod::automatic) {
      double work = std::pow(static_cast<double>(m.size()),
                             static_cast<double>(id.variables().size()));
      method = work <= exhaustive_budget ? SatisfactionMethod::exhaustive
                                         : SatisfactionMethod::instances;
    }
    if (method == SatisfactionMethod::exhaustive) {
      return Exhaustive(m, id).run();
    }
    return by_instances(m, id);
  }

  SatisfiesAllResult satisfies_all(ReesMonoid const&  m,
                                   IdentitySet const& ids,
                                   SatisfactionMethod method) {
    SatisfiesAllResult result;
    for (auto const& id : ids) {
      auto r = satisfies(m, id, method);
      if (!r.holds) {
        result.holds  = false;
        result.failed = id;
        result.detail = std::move(r);
        break;
      }
    }
    return result;
  }

  void for_each_instance(ReesMonoid const&                                             m,
                         Word const&                                                   u,
                         std::function<bool(std::span<Element const>, Element)> const& f,
                         bool                                                          nonempty) {
    auto                 vars  = u.variables();
    auto                 codes = codes_of(u, vars);
    std::vector<Element> images(vars.size(), ReesMonoid::zero);
    std::vector<bool>    bound(vars.size(), false);

    std::function<bool(std::size_t, Element)> visit = [&](std::size_t i, Element acc) -> bool {
      while (i < codes.size() && bound[codes[i]]) {
        acc = m.multiply(acc, images[codes[i]]);
        if (acc == ReesMonoid::zero) {
          return true;
        }
        ++i;
      }
      if (i == codes.size()) {
        return f(images, acc);
      }
      auto v   = codes[i];
      bound[v] = true;
      for (Element e : m.right_extensions(acc)) {
        if (nonempty && e == ReesMonoid::one) {
          continue;
        }
        Element next = m.multiply(acc, e);
        images[v]    = e;
        if (!visit(i + 1, next)) {
          bound[v] = false;
          return false;
        }
      }
      bound[v] = false;
      return true;
    };
    visit(0, ReesMonoid::one);
  }

  std::vector<Instance> instances(ReesMonoid const& m, Word const& u) {
    std::vector<Instance> result;
    for_each_instance(m, u, [&](std::span<Element const> images, Element value) {
      result.push_back({std::vector<Element>(images.begin(), images.end()), value});
      return true;
    });
    return result;
  }

  std::string to_string(ReesMonoid const& m, Assignment const& theta) {
    std::string result;
    for (auto const& [x, e] : theta) {
      if (!result.empty()) {
        result += ", ";
      }
      result += x.display() + "->" + m.element_name(e);
    }
    return result;
  }

}  // namespace reesfb
