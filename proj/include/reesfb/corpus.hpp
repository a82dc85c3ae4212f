// Word-set corpora shared by the acceptance suite, the tests and the CLI.

#ifndef REESFB_CORPUS_HPP_
#define REESFB_CORPUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "reesfb/classifier.hpp"

namespace reesfb {

  struct CorpusEntry {
    WordSet                    words;
    std::optional<VerdictKind> expected;
    std::optional<CaseId>      expected_case;
  };

  // Canonical words over the first `letters` letters, length 1..max_length,
  // in short-lex order.
  std::vector<Word> canonical_words(std::size_t letters, std::size_t max_length);

  // 2-limited words a^n b^m or a^n b a^m (m may be 0).
  bool two_letter_fb_shape(Word const& u);

  // Known sets with their verdicts, then every canonical 2-limited word over
  // {a, b} with the verdict the two-letter rule predicts.
  std::vector<CorpusEntry> corpus1();

  // Single canonical words over at most three letters, length <= 6, that are
  // 2-limited and block-2-simple.
  std::vector<WordSet> corpus2();

  // corpus1 sets followed by corpus2 sets.
  std::vector<WordSet> corpus_all();

}  // namespace reesfb

#endif  // REESFB_CORPUS_HPP_
