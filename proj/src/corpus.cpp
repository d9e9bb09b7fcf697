#include "letf/corpus.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace letf {

std::string Sequent::text(RenderStyle style) const {
  std::string out;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (i) out += ", ";
    out += render(premises[i], style);
  }
  if (!premises.empty()) out += ' ';
  out += "|- ";
  out += render(conclusion, style);
  return out;
}

Sequent parse_sequent(std::string_view text) {
  std::size_t turnstile = text.find("|-");
  if (turnstile == std::string_view::npos)
    throw ParseError("sequent is missing '|-'", 0);
  Sequent s;
  s.premises = parse_formula_list(text.substr(0, turnstile));
  std::string_view rhs = text.substr(turnstile + 2);
  if (rhs.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw ParseError("sequent is missing a conclusion", turnstile + 2);
  s.conclusion = parse(rhs);
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Split off an inline note: the first '#' preceded by nothing/whitespace and
// followed by whitespace/end-of-line.  '#' glued to a formula is the bullet
// operator and stays put.
std::pair<std::string_view, std::string_view> split_note(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '#') continue;
    bool starts_token = i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t';
    bool ends_token = i + 1 == line.size() || line[i + 1] == ' ' || line[i + 1] == '\t';
    if (starts_token && ends_token)
      return {line.substr(0, i), trim(line.substr(i + 1))};
  }
  return {line, {}};
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto [body, note] = split_note(raw);
    body = trim(body);
    if (body.empty()) continue;

    CorpusEntry e;
    e.line = line_no;
    e.note = std::string(note);

    std::string_view sequent_part = body;
    std::size_t arrow = body.find("=>");
    if (arrow != std::string_view::npos) {
      sequent_part = body.substr(0, arrow);
      std::string_view verdict = trim(body.substr(arrow + 2));
      if (verdict == "provable")
        e.expected = Verdict::Provable;
      else if (verdict == "not_provable")
        e.expected = Verdict::NotProvable;
      else
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected verdict 'provable' or 'not_provable'",
                         arrow + 2);
    }
    try {
      e.sequent = parse_sequent(sequent_part);
    } catch (const ParseError& pe) {
      throw ParseError("line " + std::to_string(line_no) + ": " + pe.what(),
                       pe.position);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return parse_corpus(in);
}

CorpusReport run_corpus(std::span<const CorpusEntry> entries, const ExpandOptions& opts) {
  CorpusReport report;
  report.outcomes.reserve(entries.size());
  for (const CorpusEntry& e : entries) {
    ProofResult r = prove(e.sequent.premises, e.sequent.conclusion, opts);
    bool pass = !e.expected || *e.expected == r.verdict;
    if (!pass) ++report.failures;
    report.outcomes.push_back({e, r.verdict, pass});
  }
  return report;
}

}  // namespace letf
