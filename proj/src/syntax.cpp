#include "sesstype/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "sesstype/errors.hpp"

namespace sesstype {

SyntaxError::SyntaxError(std::size_t position, const std::string& detail)
    : Error("syntax error at offset " + std::to_string(position) + ": " + detail),
      position_(position),
      detail_(detail) {}

namespace {

enum class Tok {
  Ident,     // lowercase- or uppercase-initial identifier
  Zero,      // 0
  One,       // 1
  Bang,      // !
  Dot,       // .
  Plus,      // +
  OPlus,     // (+)
  LParen,    // (
  RParen,    // )
  Amp,       // &
  Bar,       // |
  Arrow,     // ->
  Colon,     // :
  Semi,      // ;
  Box,       // []
  Eof,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  return t.kind == Tok::Eof ? std::string("end of input") : "'" + std::string(t.text) + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, src.substr(start, len), start});
      i = start + len;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      emit(Tok::Ident, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      const auto word = src.substr(i, j - i);
      if (word == "0") {
        emit(Tok::Zero, 1);
      } else if (word == "1") {
        emit(Tok::One, 1);
      } else {
        throw SyntaxError(start, "unexpected '" + std::string(word) + "' (only 0 and 1 are literals)");
      }
      continue;
    }
    switch (c) {
      case '!': emit(Tok::Bang, 1); continue;
      case '.': emit(Tok::Dot, 1); continue;
      case '+': emit(Tok::Plus, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '&': emit(Tok::Amp, 1); continue;
      case '|': emit(Tok::Bar, 1); continue;
      case ':': emit(Tok::Colon, 1); continue;
      case ';': emit(Tok::Semi, 1); continue;
      case '(':
        if (src.substr(i, 3) == "(+)") {
          emit(Tok::OPlus, 3);
        } else {
          emit(Tok::LParen, 1);
        }
        continue;
      case '-':
        if (src.substr(i, 2) == "->") {
          emit(Tok::Arrow, 2);
          continue;
        }
        break;
      case '[':
        if (src.substr(i, 2) == "[]") {
          emit(Tok::Box, 2);
          continue;
        }
        break;
      default:
        break;
    }
    throw SyntaxError(start, "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::Eof, {}, src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  ProcessTerm whole_process() {
    auto p = process();
    expect_eof();
    return p;
  }

  SessionType whole_type() {
    auto t = type();
    expect_eof();
    return t;
  }

  GlobalType whole_global() {
    auto g = global();
    expect_eof();
    return g;
  }

 private:
  // process := echoice { "(+)" echoice }
  ProcessTerm process() {
    auto p = echoice();
    while (accept(Tok::OPlus)) p = ProcessTerm::internal_choice(std::move(p), echoice());
    return p;
  }

  // echoice := pfx { "+" pfx }
  ProcessTerm echoice() {
    auto p = process_prefix();
    while (accept(Tok::Plus)) p = ProcessTerm::external_choice(std::move(p), process_prefix());
    return p;
  }

  // pfx := act "." pfx | act | "0" | "1" | "(" process ")"
  ProcessTerm process_prefix() {
    if (accept(Tok::Zero)) return ProcessTerm::deadlock();
    if (accept(Tok::One)) return ProcessTerm::success();
    if (accept(Tok::LParen)) {
      auto p = process();
      expect(Tok::RParen, "')'");
      return p;
    }
    auto act = action("a process");
    if (!accept(Tok::Dot)) return ProcessTerm::prefix(std::move(act), ProcessTerm::success());
    return ProcessTerm::prefix(std::move(act), process_prefix());
  }

  // type := tinter { "|" tinter }
  SessionType type() {
    auto t = tinter();
    while (accept(Tok::Bar)) t = SessionType::union_of(std::move(t), tinter());
    return t;
  }

  // tinter := tpfx { "&" tpfx }
  SessionType tinter() {
    auto t = type_prefix();
    while (accept(Tok::Amp)) t = SessionType::intersection(std::move(t), type_prefix());
    return t;
  }

  // tpfx := act "." tpfx | act | "Bot" | "Top" | "end" | "(" type ")"
  SessionType type_prefix() {
    if (peek().kind == Tok::Ident) {
      const auto word = peek().text;
      if (word == "Bot") return advance(), SessionType::bottom();
      if (word == "Top") return advance(), SessionType::top();
      if (word == "end") return advance(), SessionType::end();
    }
    if (accept(Tok::LParen)) {
      auto t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    auto act = action("a session type");
    if (!accept(Tok::Dot)) return SessionType::prefix(std::move(act), SessionType::end());
    return SessionType::prefix(std::move(act), type_prefix());
  }

  // global := gseq { "[]" gseq }
  GlobalType global() {
    auto g = gseq();
    while (accept(Tok::Box)) g = GlobalType::choice(std::move(g), gseq());
    return g;
  }

  // gseq := Role "->" Role ":" name ";" gseq | "end" | "(" global ")"
  GlobalType gseq() {
    if (peek().kind == Tok::Ident && peek().text == "end") {
      advance();
      return GlobalType::end();
    }
    if (accept(Tok::LParen)) {
      auto g = global();
      expect(Tok::RParen, "')'");
      return g;
    }
    auto sender = role();
    expect(Tok::Arrow, "'->'");
    auto receiver = role();
    expect(Tok::Colon, "':'");
    const auto& tok = peek();
    if (tok.kind != Tok::Ident || !ActionName::is_valid(tok.text)) {
      throw SyntaxError(tok.pos, "expected a message name, found " + describe(tok));
    }
    ActionName label{std::string(advance().text)};
    expect(Tok::Semi, "';'");
    return GlobalType::message(std::move(sender), std::move(receiver), std::move(label), gseq());
  }

  RoleName role() {
    const auto& tok = peek();
    if (tok.kind != Tok::Ident || !RoleName::is_valid(tok.text)) {
      throw SyntaxError(tok.pos, "expected a role name, found " + describe(tok));
    }
    return RoleName(std::string(advance().text));
  }

  Action action(const char* what) {
    const bool output = accept(Tok::Bang);
    const auto& tok = peek();
    if (tok.kind != Tok::Ident || !ActionName::is_valid(tok.text)) {
      throw SyntaxError(tok.pos, std::string("expected ") + (output ? "an action name" : what) +
                                     ", found " + describe(tok));
    }
    return {output ? Polarity::Output : Polarity::Input, ActionName(std::string(advance().text))};
  }

  const Token& peek() const { return tokens_[pos_]; }

  const Token& advance() {
    const auto& t = tokens_[pos_];
    if (t.kind != Tok::Eof) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
  }

  void expect(Tok kind, const char* what) {
    if (!accept(kind)) {
      throw SyntaxError(peek().pos, std::string("expected ") + what + ", found " + describe(peek()));
    }
  }

  void expect_eof() {
    if (peek().kind != Tok::Eof) {
      throw SyntaxError(peek().pos, "unexpected " + describe(peek()) + " after a complete term");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength used by the renderers; higher binds tighter.
constexpr int kLoose = 0;
constexpr int kOuter = 1;   // (+)  |   []
constexpr int kInner = 2;   // +    &
constexpr int kAtomic = 3;  // prefixes and literals

int level(const ProcessTerm& p) {
  switch (p.kind()) {
    case ProcessKind::InternalChoice: return kOuter;
    case ProcessKind::ExternalChoice: return kInner;
    default: return kAtomic;
  }
}

void render(const ProcessTerm& p, int min_level, std::string& out) {
  if (level(p) < min_level) {
    out += '(';
    render(p, kLoose, out);
    out += ')';
    return;
  }
  switch (p.kind()) {
    case ProcessKind::Deadlock:
      out += '0';
      return;
    case ProcessKind::Success:
      out += '1';
      return;
    case ProcessKind::Prefix:
      out += to_string(p.action());
      if (p.continuation().kind() != ProcessKind::Success) {
        out += '.';
        render(p.continuation(), kAtomic, out);
      }
      return;
    case ProcessKind::InternalChoice:
      render(p.left(), kOuter, out);
      out += " (+) ";
      render(p.right(), kInner, out);
      return;
    case ProcessKind::ExternalChoice:
      render(p.left(), kInner, out);
      out += " + ";
      render(p.right(), kAtomic, out);
      return;
  }
}

int level(const SessionType& t) {
  switch (t.kind()) {
    case TypeKind::Union: return kOuter;
    case TypeKind::Intersection: return kInner;
    default: return kAtomic;
  }
}

void render(const SessionType& t, int min_level, std::string& out) {
  if (level(t) < min_level) {
    out += '(';
    render(t, kLoose, out);
    out += ')';
    return;
  }
  switch (t.kind()) {
    case TypeKind::Bottom:
      out += "Bot";
      return;
    case TypeKind::Top:
      out += "Top";
      return;
    case TypeKind::End:
      out += "end";
      return;
    case TypeKind::Prefix:
      out += to_string(t.action());
      out += '.';
      render(t.continuation(), kAtomic, out);
      return;
    case TypeKind::Union:
      render(t.left(), kOuter, out);
      out += " | ";
      render(t.right(), kInner, out);
      return;
    case TypeKind::Intersection:
      render(t.left(), kInner, out);
      out += " & ";
      render(t.right(), kAtomic, out);
      return;
  }
}

void render(const GlobalType& g, int min_level, std::string& out) {
  const int own = g.kind() == GlobalType::Kind::Choice ? kOuter : kAtomic;
  if (own < min_level) {
    out += '(';
    render(g, kLoose, out);
    out += ')';
    return;
  }
  switch (g.kind()) {
    case GlobalType::Kind::End:
      out += "end";
      return;
    case GlobalType::Kind::Message:
      out += g.sender().str() + "->" + g.receiver().str() + ":" + g.label().str() + "; ";
      render(g.continuation(), kAtomic, out);
      return;
    case GlobalType::Kind::Choice:
      render(g.left(), kOuter, out);
      out += " [] ";
      render(g.right(), kAtomic, out);
      return;
  }
}

}  // namespace

ProcessTerm parse_process(std::string_view text) { return Parser(text).whole_process(); }
SessionType parse_type(std::string_view text) { return Parser(text).whole_type(); }
GlobalType parse_global(std::string_view text) { return Parser(text).whole_global(); }

std::string render_process(const ProcessTerm& p) {
  std::string out;
  render(p, kLoose, out);
  return out;
}

std::string render_type(const SessionType& t) {
  std::string out;
  render(t, kLoose, out);
  return out;
}

std::string render_global(const GlobalType& g) {
  std::string out;
  render(g, kLoose, out);
  return out;
}

}  // namespace sesstype
