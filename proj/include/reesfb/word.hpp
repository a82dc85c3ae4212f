// Words over an abstract variable alphabet.
//
// A Word is a finite (possibly empty) sequence of Variables.  Variables are
// interned symbols: equality is by id, ordering is by name so that every
// sorted output is independent of interning order.

#ifndef REESFB_WORD_HPP_
#define REESFB_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reesfb {

  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class Variable {
   public:
    Variable() = default;
    explicit Variable(std::string_view name);

    std::uint32_t id() const noexcept {
      return _id;
    }
    std::string const& name() const;
    // Single-character names print bare, longer names in brackets.
    std::string display() const;

    friend bool operator==(Variable a, Variable b) noexcept {
      return a._id == b._id;
    }
    friend std::strong_ordering operator<=>(Variable a, Variable b);

   private:
    std::uint32_t _id = 0;
  };

  using VariableSet = std::set<Variable>;

  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Variable> letters) : _letters(std::move(letters)) {}

    // One ASCII letter per variable, or `[name]` for longer names.
    static Word parse(std::string_view text);

    std::span<Variable const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Variable operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    std::size_t occurrences(Variable x) const;
    std::map<Variable, std::size_t> content() const;
    // Distinct variables in order of first appearance.
    std::vector<Variable> variables() const;
    std::vector<Variable> linear_variables() const;
    std::vector<Variable> non_linear_variables() const;
    bool contains(Variable x) const;
    bool is_linear(Variable x) const {
      return occurrences(x) == 1;
    }

    Word factor(std::size_t pos, std::size_t len) const;
    bool has_factor(Word const& f) const;
    Word operator+(Word const& other) const;

    std::string str() const;

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& a, Word const& b);

   private:
    std::vector<Variable> _letters;
  };

  // Shorter words first, then lexicographic.
  struct ShortLex {
    bool operator()(Word const& a, Word const& b) const;
  };

  struct OccurrenceRef {
    Variable variable;
    std::size_t index = 0;  // 1-based, k-th occurrence from the left
    std::size_t position = 0;
    bool is_first = false;
    bool is_last = false;

    friend bool operator==(OccurrenceRef const&, OccurrenceRef const&) = default;
  };

  OccurrenceRef occurrence_at(Word const& u, std::size_t position);

  struct AdjacencyPair {
    OccurrenceRef left;
    OccurrenceRef right;

    bool first_first() const {
      return left.is_first && right.is_first;
    }
    bool last_last() const {
      return left.is_last && right.is_last;
    }
  };

  struct StructureProfile {
    std::size_t max_occurrence = 0;
    std::size_t block_width = 0;
    bool is_almost_linear = true;

    bool is_k_limited(std::size_t k) const {
      return max_occurrence <= k;
    }
    bool is_block_n_simple(std::size_t n) const {
      return block_width <= n;
    }
    friend bool operator==(StructureProfile const&, StructureProfile const&) = default;
  };

  // Maximal nonempty factors of u free of linear variables of u.
  std::vector<Word> blocks(Word const& u);
  StructureProfile structure_profile(Word const& u);

  Word delete_vars(Word const& u, VariableSet const& xs);
  Word project(Word const& u, VariableSet const& xs);
  Word reverse(Word const& u);

  // Renames variables by first appearance: a, b, c, ... (v1, v2, ... past 26).
  Word canonical_form(Word const& u);
  bool equal_up_to_renaming(Word const& u, Word const& v);
  // Name of the i-th (0-based) canonical variable when `total` are needed.
  Variable canonical_variable(std::size_t i, std::size_t total);

  // Adjacent occurrences of two distinct non-linear variables.
  std::vector<AdjacencyPair> adjacency_pairs(Word const& u);

  // A finite set of words with its cached factor closure.
  class WordSet {
   public:
    WordSet() = default;
    explicit WordSet(std::vector<Word> words);
    WordSet(std::initializer_list<char const*> texts);

    // Comma-separated word texts.
    static WordSet parse(std::string_view text);
    // One word per line, `#` starts a comment.
    static WordSet parse_lines(std::string_view text);

    std::vector<Word> const& words() const noexcept {
      return _words;
    }
    std::size_t size() const noexcept {
      return _words.size();
    }
    bool empty() const noexcept {
      return _words.empty();
    }
    // All factors of all members, the empty word included, in short-lex order.
    std::vector<Word> const& closure() const noexcept {
      return _closure;
    }
    bool in_closure(Word const& w) const;

    WordSet united(WordSet const& other) const;
    WordSet reversed() const;
    // One variable renaming applied to every member.
    WordSet canonical() const;

    std::string str() const;

    friend bool operator==(WordSet const& a, WordSet const& b) {
      return a._words == b._words;
    }

   private:
    std::vector<Word> _words;
    std::vector<Word> _closure;
  };

  std::vector<Word> subword_closure(WordSet const& w);

}  // namespace reesfb

template <>
struct std::hash<reesfb::Variable> {
  std::size_t operator()(reesfb::Variable x) const noexcept {
    return std::hash<std::uint32_t>{}(x.id());
  }
};

template <>
struct std::hash<reesfb::Word> {
  std::size_t operator()(reesfb::Word const& w) const noexcept;
};

#endif  // REESFB_WORD_HPP_
