#include "reesfb/identity.hpp"

#include <algorithm>
#include <cctype>

namespace reesfb {

  Identity Identity::parse(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
      throw ParseError("identity must have the form lhs=rhs: \"" + std::string(text) + "\"");
    }
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    return Identity(Word::parse(trim(text.substr(0, eq))), Word::parse(trim(text.substr(eq + 1))));
  }

  std::string Identity::str() const {
    return lhs.str() + "=" + rhs.str();
  }

  bool Identity::is_balanced() const {
    return lhs.content() == rhs.content();
  }

  std::vector<Variable> Identity::variables() const {
    auto result = lhs.variables();
    for (auto x : rhs.variables()) {
      if (std::find(result.begin(), result.end(), x) == result.end()) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<std::pair<Variable, Variable>> Identity::unstable_pairs() const {
    auto                                       vars = variables();
    std::vector<std::pair<Variable, Variable>> result;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        VariableSet xy{vars[i], vars[j]};
        if (project(lhs, xy) != project(rhs, xy)) {
          result.emplace_back(vars[i], vars[j]);
        }
      }
    }
    return result;
  }

  Identity Identity::reversed() const {
    return Identity(reverse(lhs), reverse(rhs));
  }

  namespace {
    Identity rename_through(Word const& first, Word const& second) {
      auto vars = first.variables();
      for (auto x : second.variables()) {
        if (std::find(vars.begin(), vars.end(), x) == vars.end()) {
          vars.push_back(x);
        }
      }
      auto rename = [&](Word const& u) {
        std::vector<Variable> letters;
        for (auto x : u) {
          auto i = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), x) - vars.begin());
          letters.push_back(canonical_variable(i, vars.size()));
        }
        return Word(std::move(letters));
      };
      return Identity(rename(first), rename(second));
    }
  }  // namespace

  Identity Identity::normalized() const {
    auto a = rename_through(lhs, rhs);
    auto b = rename_through(rhs, lhs);
    return std::min(a, b);
  }

  std::string to_string(IdentitySet const& s) {
    std::string result;
    for (auto const& id : s) {
      result += id.str();
      result += '\n';
    }
    return result;
  }

}  // namespace reesfb
