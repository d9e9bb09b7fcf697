// ============================================================================
// letf/corpus.hpp — sequent syntax and corpus files
// ============================================================================
//
// Corpus line grammar, one entry per line:
//
//   premise (, premise)* |- conclusion [=> provable|not_provable] [# note]
//
// An empty premise list is written `|- conclusion`.  Blank lines and lines
// whose first non-blank character is '#' are skipped.  Because '#' is also
// the bullet operator, an inline note marker is only recognized when the
// '#' is followed by whitespace or ends the line; `#p` stays a formula.
//
// ============================================================================

#ifndef LETF_CORPUS_HPP
#define LETF_CORPUS_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "letf/formula.hpp"
#include "letf/parser.hpp"
#include "letf/tableau.hpp"

namespace letf {

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;

  std::string text(RenderStyle style = RenderStyle::Ascii) const;
};

// "p, q |- r" or "|- r".
Sequent parse_sequent(std::string_view text);

struct CorpusEntry {
  Sequent sequent;
  std::optional<Verdict> expected;
  std::string note;
  int line = 0;  // 1-based source line
};

std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

struct CorpusOutcome {
  CorpusEntry entry;
  Verdict actual;
  bool pass;  // entries without an expectation always pass
};

struct CorpusReport {
  std::vector<CorpusOutcome> outcomes;
  int failures = 0;

  bool all_passed() const noexcept { return failures == 0; }
};

CorpusReport run_corpus(std::span<const CorpusEntry> entries,
                        const ExpandOptions& opts = {});

}  // namespace letf

#endif  // LETF_CORPUS_HPP
