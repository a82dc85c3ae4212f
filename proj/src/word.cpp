#include "reesfb/word.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace reesfb {

  namespace {
    class Interner {
     public:
      Interner() {
        intern("");
      }

      std::uint32_t intern(std::string_view name) {
        {
          std::shared_lock lock(_mutex);
          auto it = _ids.find(std::string(name));
          if (it != _ids.end()) {
            return it->second;
          }
        }
        std::unique_lock lock(_mutex);
        auto [it, inserted] = _ids.try_emplace(std::string(name), 0);
        if (inserted) {
          it->second = static_cast<std::uint32_t>(_names.size());
          _names.emplace_back(name);
        }
        return it->second;
      }

      std::string const& name(std::uint32_t id) const {
        std::shared_lock lock(_mutex);
        return _names.at(id);
      }

     private:
      mutable std::shared_mutex                      _mutex;
      std::deque<std::string>                        _names;
      std::unordered_map<std::string, std::uint32_t> _ids;
    };

    Interner& interner() {
      static Interner instance;
      return instance;
    }

    bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Variable
  ////////////////////////////////////////////////////////////////////////

  Variable::Variable(std::string_view name) : _id(interner().intern(name)) {}

  std::string const& Variable::name() const {
    return interner().name(_id);
  }

  std::string Variable::display() const {
    auto const& n = name();
    return n.size() == 1 ? n : "[" + n + "]";
  }

  std::strong_ordering operator<=>(Variable a, Variable b) {
    if (a._id == b._id) {
      return std::strong_ordering::equal;
    }
    auto const& x = a.name();
    auto const& y = b.name();
    // Shorter names first so that x < [x1] < [x10] reads naturally.
    if (x.size() != y.size()) {
      return x.size() <=> y.size();
    }
    return x.compare(y) <=> 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word Word::parse(std::string_view text) {
    std::vector<Variable> letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '[') {
        auto close = text.find(']', i + 1);
        if (close == std::string_view::npos) {
          throw ParseError("unbalanced bracket in word \"" + std::string(text) + "\"");
        }
        auto name = text.substr(i + 1, close - i - 1);
        if (name.empty()) {
          throw ParseError("empty bracket in word \"" + std::string(text) + "\"");
        }
        if (!std::all_of(name.begin(), name.end(), is_name_char)) {
          throw ParseError("illegal character in variable name \"" + std::string(name)
                           + "\"");
        }
        letters.emplace_back(name);
        i = close;
      } else if (c == ']') {
        throw ParseError("unbalanced bracket in word \"" + std::string(text) + "\"");
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        letters.emplace_back(std::string_view(&text[i], 1));
      } else {
        throw ParseError(std::string("illegal character '") + c + "' in word \""
                         + std::string(text) + "\"");
      }
    }
    return Word(std::move(letters));
  }

  std::size_t Word::occurrences(Variable x) const {
    return static_cast<std::size_t>(std::count(_letters.begin(), _letters.end(), x));
  }

  std::map<Variable, std::size_t> Word::content() const {
    std::map<Variable, std::size_t> result;
    for (auto x : _letters) {
      ++result[x];
    }
    return result;
  }

  std::vector<Variable> Word::variables() const {
    std::vector<Variable> result;
    for (auto x : _letters) {
      if (std::find(result.begin(), result.end(), x) == result.end()) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<Variable> Word::linear_variables() const {
    std::vector<Variable> result;
    for (auto x : variables()) {
      if (occurrences(x) == 1) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<Variable> Word::non_linear_variables() const {
    std::vector<Variable> result;
    for (auto x : variables()) {
      if (occurrences(x) > 1) {
        result.push_back(x);
      }
    }
    return result;
  }

  bool Word::contains(Variable x) const {
    return std::find(_letters.begin(), _letters.end(), x) != _letters.end();
  }

  Word Word::factor(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Variable>(_letters.begin() + pos, _letters.begin() + pos + len));
  }

  bool Word::has_factor(Word const& f) const {
    return std::search(_letters.begin(), _letters.end(), f._letters.begin(), f._letters.end())
           != _letters.end();
  }

  Word Word::operator+(Word const& other) const {
    std::vector<Variable> letters = _letters;
    letters.insert(letters.end(), other._letters.begin(), other._letters.end());
    return Word(std::move(letters));
  }

  std::string Word::str() const {
    std::string result;
    for (auto x : _letters) {
      result += x.display();
    }
    return result;
  }

  std::strong_ordering operator<=>(Word const& a, Word const& b) {
    return std::lexicographical_compare_three_way(
        a._letters.begin(), a._letters.end(), b._letters.begin(), b._letters.end());
  }

  bool ShortLex::operator()(Word const& a, Word const& b) const {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  OccurrenceRef occurrence_at(Word const& u, std::size_t position) {
    OccurrenceRef ref;
    ref.variable = u[position];
    ref.position = position;
    std::size_t before = 0, total = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == ref.variable) {
        ++total;
        if (i <= position) {
          ++before;
        }
      }
    }
    ref.index    = before;
    ref.is_first = before == 1;
    ref.is_last  = before == total;
    return ref;
  }

  std::vector<Word> blocks(Word const& u) {
    auto                  counts = u.content();
    std::vector<Word>     result;
    std::vector<Variable> current;
    for (auto x : u) {
      if (counts[x] == 1) {
        if (!current.empty()) {
          result.emplace_back(std::move(current));
          current.clear();
        }
      } else {
        current.push_back(x);
      }
    }
    if (!current.empty()) {
      result.emplace_back(std::move(current));
    }
    return result;
  }

  StructureProfile structure_profile(Word const& u) {
    StructureProfile p;
    std::size_t      non_linear = 0;
    for (auto const& [x, n] : u.content()) {
      p.max_occurrence = std::max(p.max_occurrence, n);
      non_linear += n > 1;
    }
    p.is_almost_linear = non_linear <= 1;
    for (auto const& b : blocks(u)) {
      p.block_width = std::max(p.block_width, b.variables().size());
    }
    return p;
  }

  Word delete_vars(Word const& u, VariableSet const& xs) {
    std::vector<Variable> letters;
    for (auto x : u) {
      if (!xs.contains(x)) {
        letters.push_back(x);
      }
    }
    return Word(std::move(letters));
  }

  Word project(Word const& u, VariableSet const& xs) {
    std::vector<Variable> letters;
    for (auto x : u) {
      if (xs.contains(x)) {
        letters.push_back(x);
      }
    }
    return Word(std::move(letters));
  }

  Word reverse(Word const& u) {
    return Word(std::vector<Variable>(u.letters().rbegin(), u.letters().rend()));
  }

  Variable canonical_variable(std::size_t i, std::size_t total) {
    if (total <= 26) {
      char c = static_cast<char>('a' + i);
      return Variable(std::string_view(&c, 1));
    }
    return Variable("v" + std::to_string(i + 1));
  }

  Word canonical_form(Word const& u) {
    auto                  vars = u.variables();
    std::vector<Variable> letters;
    letters.reserve(u.size());
    for (auto x : u) {
      auto i = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), x) - vars.begin());
      letters.push_back(canonical_variable(i, vars.size()));
    }
    return Word(std::move(letters));
  }

  bool equal_up_to_renaming(Word const& u, Word const& v) {
    return canonical_form(u) == canonical_form(v);
  }

  std::vector<AdjacencyPair> adjacency_pairs(Word const& u) {
    auto                       counts = u.content();
    std::vector<AdjacencyPair> result;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] != u[i + 1] && counts[u[i]] > 1 && counts[u[i + 1]] > 1) {
        result.push_back({occurrence_at(u, i), occurrence_at(u, i + 1)});
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // WordSet
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> subword_closure(WordSet const& w) {
    std::set<Word, ShortLex> factors;
    factors.insert(Word());
    for (auto const& u : w.words()) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t len = 1; i + len <= u.size(); ++len) {
          factors.insert(u.factor(i, len));
        }
      }
    }
    return {factors.begin(), factors.end()};
  }

  WordSet::WordSet(std::vector<Word> words) : _words(std::move(words)) {
    std::sort(_words.begin(), _words.end());
    _words.erase(std::unique(_words.begin(), _words.end()), _words.end());
    _closure = subword_closure(*this);
  }

  WordSet::WordSet(std::initializer_list<char const*> texts) {
    std::vector<Word> words;
    for (auto t : texts) {
      words.push_back(Word::parse(t));
    }
    *this = WordSet(std::move(words));
  }

  WordSet WordSet::parse(std::string_view text) {
    std::vector<Word> words;
    while (true) {
      auto comma = text.find(',');
      words.push_back(Word::parse(trim(text.substr(0, comma))));
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    return WordSet(std::move(words));
  }

  WordSet WordSet::parse_lines(std::string_view text) {
    std::vector<Word> words;
    while (!text.empty()) {
      auto eol  = text.find('\n');
      auto line = text.substr(0, eol);
      auto hash = line.find('#');
      line      = trim(line.substr(0, hash));
      if (!line.empty()) {
        words.push_back(Word::parse(line));
      }
      if (eol == std::string_view::npos) {
        break;
      }
      text.remove_prefix(eol + 1);
    }
    return WordSet(std::move(words));
  }

  bool WordSet::in_closure(Word const& w) const {
    return std::binary_search(_closure.begin(), _closure.end(), w, ShortLex{});
  }

  WordSet WordSet::united(WordSet const& other) const {
    auto words = _words;
    words.insert(words.end(), other._words.begin(), other._words.end());
    return WordSet(std::move(words));
  }

  WordSet WordSet::reversed() const {
    std::vector<Word> words;
    for (auto const& u : _words) {
      words.push_back(reverse(u));
    }
    return WordSet(std::move(words));
  }

  WordSet WordSet::canonical() const {
    // One renaming for the whole set, by first appearance across members.
    std::vector<Variable> all;
    for (auto const& u : _words) {
      for (auto x : u) {
        if (std::find(all.begin(), all.end(), x) == all.end()) {
          all.push_back(x);
        }
      }
    }
    std::vector<Word> words;
    for (auto const& u : _words) {
      std::vector<Variable> letters;
      for (auto x : u) {
        auto i = static_cast<std::size_t>(std::find(all.begin(), all.end(), x) - all.begin());
        letters.push_back(canonical_variable(i, all.size()));
      }
      words.emplace_back(std::move(letters));
    }
    return WordSet(std::move(words));
  }

  std::string WordSet::str() const {
    std::string result;
    for (auto const& u : _words) {
      if (!result.empty()) {
        result += ',';
      }
      result += u.str();
    }
    return result;
  }

}  // namespace reesfb

std::size_t std::hash<reesfb::Word>::operator()(reesfb::Word const& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : w) {
    h ^= x.id() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
