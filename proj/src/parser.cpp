#include "letf/parser.hpp"

namespace letf {

namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty input", 0);
    Formula f = imp();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  Formula imp() {
    Formula left = disj();
    if (eat("->")) {
      Formula right = imp();  // right associative
      return Formula::disj(Formula::neg(std::move(left)), std::move(right));
    }
    return left;
  }

  Formula disj() {
    Formula f = conj();
    for (;;) {
      // "->" starts with neither '|' nor '∨', so no lookahead conflict.
      if (eat("|") || eat("∨"))
        f = Formula::disj(std::move(f), conj());
      else
        return f;
    }
  }

  Formula conj() {
    Formula f = unary();
    for (;;) {
      if (eat("&") || eat("∧"))
        f = Formula::conj(std::move(f), unary());
      else
        return f;
    }
  }

  Formula unary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected formula", pos_);

    if (eat("~") || eat("¬")) return Formula::neg(unary());
    if (eat("@") || eat("∘")) return Formula::circ(unary());
    if (eat("#") || eat("•")) return Formula::bullet(unary());

    if (eat("(")) {
      Formula f = imp();
      if (!eat(")")) throw ParseError("expected ')'", pos_);
      return f;
    }

    char c = text_[pos_];
    if (!is_ident_start(c))
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);

    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string_view ident = text_.substr(start, pos_ - start);

    if (ident == "sim") {
      Formula a = unary();
      return Formula::conj(Formula::circ(a), Formula::neg(a));
    }
    if (ident == "approx") {
      Formula a = unary();
      return Formula::disj(Formula::bullet(a), Formula::neg(a));
    }
    if (ident == "bot" && peek("(")) {
      eat("(");
      skip_ws();
      std::size_t astart = pos_;
      if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
        throw ParseError("expected atom name in bot(...)", pos_);
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      Formula p = Formula::atom(std::string(text_.substr(astart, pos_ - astart)));
      if (!eat(")")) throw ParseError("expected ')' after bot(", pos_);
      return Formula::conj(Formula::conj(p, Formula::neg(p)), Formula::circ(p));
    }
    return Formula::atom(std::string(ident));
  }
};

const char* conn_token(Conn c, RenderStyle style) {
  bool uni = style == RenderStyle::Unicode;
  switch (c) {
    case Conn::Neg: return uni ? "¬" : "~";
    case Conn::And: return uni ? "∧" : "&";
    case Conn::Or: return uni ? "∨" : "|";
    case Conn::Circ: return uni ? "∘" : "@";
    case Conn::Bullet: return uni ? "•" : "#";
    case Conn::Atom: break;
  }
  return "";
}

// & binds tighter than |; prefix operators bind tightest; both binary
// connectives associate left when re-parsed.
void render_into(const Formula& f, RenderStyle style, std::string& out) {
  auto wrapped = [&](const Formula& g, bool need) {
    if (need) out += '(';
    render_into(g, style, out);
    if (need) out += ')';
  };
  switch (f.kind()) {
    case Conn::Atom:
      out += f.atom_name();
      break;
    case Conn::Neg:
    case Conn::Circ:
    case Conn::Bullet: {
      out += conn_token(f.kind(), style);
      Conn ck = f.child().kind();
      wrapped(f.child(), ck == Conn::And || ck == Conn::Or);
      break;
    }
    case Conn::And: {
      wrapped(f.lhs(), f.lhs().kind() == Conn::Or);
      out += ' ';
      out += conn_token(Conn::And, style);
      out += ' ';
      Conn rk = f.rhs().kind();
      wrapped(f.rhs(), rk == Conn::Or || rk == Conn::And);
      break;
    }
    case Conn::Or: {
      render_into(f.lhs(), style, out);
      out += ' ';
      out += conn_token(Conn::Or, style);
      out += ' ';
      wrapped(f.rhs(), f.rhs().kind() == Conn::Or);
      break;
    }
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::vector<Formula> parse_formula_list(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  std::vector<Formula> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string_view piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw ParseError("empty formula in list", start);
      out.push_back(parse(piece));
      start = i + 1;
    }
  }
  return out;
}

std::string render(const Formula& f, RenderStyle style) {
  std::string out;
  render_into(f, style, out);
  return out;
}

}  // namespace letf
