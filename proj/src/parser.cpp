#include "dpl/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "dpl/sugar.hpp"

namespace dpl {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Tilde,
  Amp,
  Pipe,
  Arrow,
  LBracket,     // "[" opening a plan box
  RBracket,     // "]"
  Bang,         // "!" right after "["
  BoxLeqP,      // "[<=P]"
  BoxLtP,
  BoxLeqD,
  BoxLtD,
  DiamLeqP,     // "<<=P>"
  DiamLtP,
  DiamLeqD,
  DiamLtD,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, column_});
        return out;
      }
      out.push_back(next_token());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++column_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool match(const std::string& lit) {
    if (text_.compare(pos_, lit.size(), lit) != 0) return false;
    pos_ += lit.size();
    column_ += static_cast<int>(lit.size());
    return true;
  }

  Token next_token() {
    const int line = line_;
    const int col = column_;
    char c = text_[pos_];
    auto tok = [&](Tok k, std::string s) { return Token{k, std::move(s), line, col}; };
    if (c == '(') { advance(); return tok(Tok::LParen, "("); }
    if (c == ')') { advance(); return tok(Tok::RParen, ")"); }
    if (c == '~') { advance(); return tok(Tok::Tilde, "~"); }
    if (c == '&') { advance(); return tok(Tok::Amp, "&"); }
    if (c == '|') { advance(); return tok(Tok::Pipe, "|"); }
    if (c == ']') { advance(); return tok(Tok::RBracket, "]"); }
    if (c == '-') {
      if (match("->")) return tok(Tok::Arrow, "->");
      throw ParseError("stray '-'", line, col);
    }
    if (c == '[') {
      if (match("[<=P]")) return tok(Tok::BoxLeqP, "[<=P]");
      if (match("[<=D]")) return tok(Tok::BoxLeqD, "[<=D]");
      if (match("[<P]")) return tok(Tok::BoxLtP, "[<P]");
      if (match("[<D]")) return tok(Tok::BoxLtD, "[<D]");
      if (match("[!")) return tok(Tok::Bang, "[!");
      advance();
      return tok(Tok::LBracket, "[");
    }
    if (c == '<') {
      if (match("<<=P>")) return tok(Tok::DiamLeqP, "<<=P>");
      if (match("<<=D>")) return tok(Tok::DiamLeqD, "<<=D>");
      if (match("<<P>")) return tok(Tok::DiamLtP, "<<P>");
      if (match("<<D>")) return tok(Tok::DiamLtD, "<<D>");
      throw ParseError("stray '<'", line, col);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        name += text_[pos_];
        advance();
      }
      return tok(Tok::Ident, std::move(name));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

  void advance() {
    ++pos_;
    ++column_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_named_abbrev(const std::string& s) {
  return s == "A" || s == "E" || s == "K" || s == "B" || s == "G" ||
         s == "AdmInt" || s == "Int" || s == "min_P" || s == "min_D";
}

bool is_dyn_keyword(const std::string& s) {
  return s == "upP" || s == "upD" || s == "downP" || s == "downD";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Vocabulary& vocab,
         const PlanLibrary& plans)
      : tokens_(std::move(tokens)), vocab_(vocab), plans_(plans) {}

  FormulaPtr run() {
    FormulaPtr f = parse_implication();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  Token take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  void expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind)
      throw ParseError("expected " + what +
                           (t.text.empty() ? "" : ", found '" + t.text + "'"),
                       t.line, t.column);
    ++pos_;
  }

  // Right-associative chain of "->".
  FormulaPtr parse_implication() {
    FormulaPtr left = parse_or();
    if (peek().kind != Tok::Arrow) return left;
    take();
    FormulaPtr right = parse_implication();
    return enc::implies(std::move(left), std::move(right));
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (peek().kind == Tok::Pipe) {
      take();
      f = Formula::lor(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (peek().kind == Tok::Amp) {
      take();
      f = Formula::land(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        take();
        return Formula::lnot(parse_unary());
      case Tok::BoxLeqP:
        take();
        return Formula::box(Op::BoxLeqP, parse_unary());
      case Tok::BoxLtP:
        take();
        return Formula::box(Op::BoxLtP, parse_unary());
      case Tok::BoxLeqD:
        take();
        return Formula::box(Op::BoxLeqD, parse_unary());
      case Tok::BoxLtD:
        take();
        return Formula::box(Op::BoxLtD, parse_unary());
      case Tok::DiamLeqP:
        take();
        return enc::diamond(Op::BoxLeqP, parse_unary());
      case Tok::DiamLtP:
        take();
        return enc::diamond(Op::BoxLtP, parse_unary());
      case Tok::DiamLeqD:
        take();
        return enc::diamond(Op::BoxLeqD, parse_unary());
      case Tok::DiamLtD:
        take();
        return enc::diamond(Op::BoxLtD, parse_unary());
      case Tok::Bang:
        return parse_dynamic(Op::DynAnnounce, take());
      case Tok::LBracket:
        return parse_bracket();
      case Tok::Ident:
        return parse_ident();
      case Tok::LParen: {
        take();
        FormulaPtr f = parse_implication();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula" + (t.text.empty()
                             ? std::string()
                             : ", found '" + t.text + "'"),
                         t.line, t.column);
    }
  }

  FormulaPtr parse_dynamic(Op op, const Token& at) {
    (void)at;
    FormulaPtr arg = parse_implication();
    expect(Tok::RBracket, "']'");
    FormulaPtr body = parse_unary();
    if (!is_propositional(arg)) {
      const Token& t = peek();
      throw ParseError("dynamic operation argument must be propositional",
                       t.line, t.column);
    }
    return Formula::dynamic(op, std::move(arg), std::move(body));
  }

  // After a plain "[": either a dynamic keyword or a plan symbol.
  FormulaPtr parse_bracket() {
    Token open = take();
    const Token& t = peek();
    if (t.kind != Tok::Ident)
      throw ParseError("expected a plan symbol or dynamic operation after '['",
                       open.line, open.column);
    if (is_dyn_keyword(t.text) && peek(1).kind != Tok::RBracket) {
      Token kw = take();
      Op op = kw.text == "upP"     ? Op::DynUpgradeP
              : kw.text == "upD"   ? Op::DynUpgradeD
              : kw.text == "downP" ? Op::DynContractP
                                   : Op::DynContractD;
      return parse_dynamic(op, kw);
    }
    Token name = take();
    if (!plans_.contains(name.text))
      throw ParseError("unknown plan symbol '" + name.text + "'", name.line,
                       name.column);
    expect(Tok::RBracket, "']'");
    return Formula::plan_box(name.text, parse_unary());
  }

  FormulaPtr parse_ident() {
    Token t = take();
    if (t.text == "top") return Formula::top();
    if (t.text == "bot") return Formula::bot();
    if (t.text == "I" && peek().kind == Tok::LParen) {
      take();
      const Token& name = peek();
      expect(Tok::Ident, "a plan symbol");
      if (!plans_.contains(name.text))
        throw ParseError("unknown plan symbol '" + name.text + "'", name.line,
                         name.column);
      FormulaPtr f = Formula::intends_plan(name.text);
      expect(Tok::RParen, "')'");
      return f;
    }
    if (is_named_abbrev(t.text) && peek().kind == Tok::LParen) {
      take();
      FormulaPtr arg = parse_implication();
      expect(Tok::RParen, "')'");
      return desugar(t.text, {arg}, plans_);
    }
    if (!vocab_.contains(t.text))
      throw ParseError("unknown symbol '" + t.text + "'", t.line, t.column);
    return Formula::atom(t.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Vocabulary& vocab_;
  const PlanLibrary& plans_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Vocabulary& vocab,
                         const PlanLibrary& plans) {
  Lexer lexer(text);
  Parser parser(lexer.run(), vocab, plans);
  return parser.run();
}

}  // namespace dpl
