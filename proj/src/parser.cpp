#include "termpred/parser.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace termpred {

namespace {

enum class Tok {
  AtomName,  // lowercase identifier or integer
  VarName,   // uppercase or underscore identifier
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Bar,
  Dot,
  Neck,  // :-
  Naf,   // \+
  End
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

  Token next() {
    skip_space();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    char c = text_[pos_];
    if (c == '(') return take(Tok::LParen, 1);
    if (c == ')') return take(Tok::RParen, 1);
    if (c == '[') return take(Tok::LBracket, 1);
    if (c == ']') return take(Tok::RBracket, 1);
    if (c == ',') return take(Tok::Comma, 1);
    if (c == '|') return take(Tok::Bar, 1);
    if (c == '.') return take(Tok::Dot, 1);
    if (c == ':' && peek(1) == '-') return take(Tok::Neck, 2);
    if (c == '\\' && peek(1) == '+') return take(Tok::Naf, 2);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        advance();
      return {Tok::AtomName, text_.substr(start, pos_ - start), line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        advance();
      std::string word = text_.substr(start, pos_ - start);
      bool var = std::isupper(static_cast<unsigned char>(word[0])) ||
                 word[0] == '_';
      return {var ? Tok::VarName : Tok::AtomName, word, line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c +
                                    "'");
  }

 private:
  char peek(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token take(Tok kind, std::size_t len) {
    Token t{kind, text_.substr(pos_, len), line_, col_};
    for (std::size_t i = 0; i < len; ++i) advance();
    return t;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { shift(); }

  Program parse_program() {
    Program p;
    while (cur_.kind != Tok::End) {
      p.clauses.push_back(parse_clause(p.clauses.size() + 1));
    }
    p.max_var = gen_.next > 1 ? gen_.next - 1 : 0;
    p.index();
    return p;
  }

  Query parse_query() {
    Query q;
    if (cur_.kind != Tok::AtomName)
      throw err("expected predicate name");
    q.pred = cur_.text;
    shift();
    if (cur_.kind == Tok::LParen) {
      shift();
      while (true) {
        q.args.push_back(parse_query_arg(q.args.size() + 1));
        if (cur_.kind == Tok::Comma) {
          shift();
          continue;
        }
        break;
      }
      expect(Tok::RParen, "expected ')'");
    }
    if (cur_.kind != Tok::End) throw err("trailing input after query");
    q.max_var = gen_.next > 1 ? gen_.next - 1 : 0;
    return q;
  }

 private:
  Token cur_{Tok::End, "", 0, 0};
  Lexer lex_;
  VarGen gen_;
  std::unordered_map<std::string, TermPtr> clause_vars_;
  int fresh_counter_ = 0;

  void shift() { cur_ = lex_.next(); }

  ParseError err(const std::string& msg) const {
    return ParseError(cur_.line, cur_.column, msg);
  }

  void expect(Tok kind, const std::string& msg) {
    if (cur_.kind != kind) throw err(msg);
    shift();
  }

  Clause parse_clause(std::size_t index) {
    clause_vars_.clear();
    Clause c;
    c.label = "C_" + std::to_string(index);
    c.head = parse_atom();
    if (cur_.kind == Tok::Neck) {
      shift();
      while (true) {
        BodyLiteral lit;
        if (cur_.kind == Tok::Naf) {
          shift();
          lit.negative = true;
        }
        lit.atom = parse_atom();
        c.body.push_back(std::move(lit));
        if (cur_.kind == Tok::Comma) {
          shift();
          continue;
        }
        break;
      }
    }
    expect(Tok::Dot, "expected '.' at end of clause");
    return c;
  }

  Atom parse_atom() {
    if (cur_.kind != Tok::AtomName)
      throw err("expected predicate name");
    Atom a;
    a.pred = cur_.text;
    shift();
    if (cur_.kind == Tok::LParen) {
      shift();
      while (true) {
        a.args.push_back(parse_term());
        if (cur_.kind == Tok::Comma) {
          shift();
          continue;
        }
        break;
      }
      expect(Tok::RParen, "expected ')'");
    }
    return a;
  }

  TermPtr named_var(const std::string& name) {
    if (name == "_") {
      return Term::make_var(gen_.fresh(),
                            "_G" + std::to_string(++fresh_counter_));
    }
    auto it = clause_vars_.find(name);
    if (it != clause_vars_.end()) return it->second;
    TermPtr v = Term::make_var(gen_.fresh(), name);
    clause_vars_.emplace(name, v);
    return v;
  }

  TermPtr parse_term() {
    if (cur_.kind == Tok::VarName) {
      std::string name = cur_.text;
      shift();
      return named_var(name);
    }
    if (cur_.kind == Tok::AtomName) {
      std::string name = cur_.text;
      shift();
      if (cur_.kind == Tok::LParen) {
        shift();
        std::vector<TermPtr> args;
        while (true) {
          args.push_back(parse_term());
          if (cur_.kind == Tok::Comma) {
            shift();
            continue;
          }
          break;
        }
        expect(Tok::RParen, "expected ')'");
        return Term::make_func(name, std::move(args));
      }
      return Term::make_const(name);
    }
    if (cur_.kind == Tok::LBracket) return parse_list();
    throw err("expected term");
  }

  TermPtr parse_list() {
    expect(Tok::LBracket, "expected '['");
    if (cur_.kind == Tok::RBracket) {
      shift();
      return Term::make_const(kNilConstant);
    }
    std::vector<TermPtr> items;
    items.push_back(parse_term());
    while (cur_.kind == Tok::Comma) {
      shift();
      items.push_back(parse_term());
    }
    TermPtr tail = Term::make_const(kNilConstant);
    if (cur_.kind == Tok::Bar) {
      shift();
      tail = parse_term();
    }
    expect(Tok::RBracket, "expected ']'");
    for (auto it = items.rbegin(); it != items.rend(); ++it)
      tail = Term::make_func(kConsFunctor, {*it, tail});
    return tail;
  }

  QueryArg parse_query_arg(std::size_t position) {
    if (cur_.kind == Tok::AtomName && cur_.text == "i") {
      Token save = cur_;
      shift();
      if (cur_.kind == Tok::LParen)
        throw ParseError(save.line, save.column,
                         "'i' is reserved for input modes in queries");
      return QueryArg{true, nullptr};
    }
    if (cur_.kind == Tok::AtomName && cur_.text == "o") {
      Token save = cur_;
      shift();
      if (cur_.kind == Tok::LParen)
        throw ParseError(save.line, save.column,
                         "'o' is reserved for mode variables in queries");
      return QueryArg{false, Term::make_var(gen_.fresh(),
                                            "V" + std::to_string(position))};
    }
    TermPtr t = parse_term();
    if (mentions_input_mode(t))
      throw err("input modes are only supported as whole arguments");
    return QueryArg{false, t};
  }

  static bool mentions_input_mode(const TermPtr& t) {
    if (t->tag == Term::Tag::Const && t->name == "i") return true;
    if (t->tag == Term::Tag::Func) {
      for (const auto& a : t->args)
        if (mentions_input_mode(a)) return true;
    }
    return false;
  }
};

}  // namespace

Program parse_program(const std::string& text) {
  Parser p(text);
  return p.parse_program();
}

Query parse_query(const std::string& text) {
  Parser p(text);
  return p.parse_query();
}

std::string to_string(const Clause& c) {
  std::ostringstream os;
  os << to_string(c.head);
  if (!c.body.empty()) {
    os << " :- ";
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      if (i) os << ", ";
      if (c.body[i].negative) os << "\\+ ";
      os << to_string(c.body[i].atom);
    }
  }
  os << '.';
  return os.str();
}

std::string to_string(const Program& p) {
  std::ostringstream os;
  for (const auto& c : p.clauses) os << to_string(c) << '\n';
  return os.str();
}

}  // namespace termpred
