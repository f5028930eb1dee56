#include "gradual/frontend/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace gradual::frontend {
namespace {

constexpr std::array kKeywords = {
    std::string_view("method"), std::string_view("var"),    std::string_view("def"),
    std::string_view("type"),   std::string_view("interface"), std::string_view("object"),
    std::string_view("is"),     std::string_view("public"), std::string_view("if"),
    std::string_view("then"),   std::string_view("else"),   std::string_view("elseif"),
    std::string_view("while"),  std::string_view("do"),     std::string_view("return"),
    std::string_view("self"),   std::string_view("true"),   std::string_view("false"),
    std::string_view("nil"),
};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool isIdentPart(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

class Lexer {
 public:
  Lexer(std::string_view source, std::string_view file, SourceLocation origin)
      : src_(source), file_(file), line_(origin.line), column_(origin.column) {}

  std::vector<Token> run() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        pushNewline();
        advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        lexNumber();
      } else if (isIdentStart(c)) {
        lexWord();
      } else if (c == '"') {
        lexString();
      } else {
        lexPunctuation();
      }
    }
    Token end;
    end.kind = TokenKind::End;
    end.location = here();
    tokens_.push_back(std::move(end));
    return std::move(tokens_);
  }

 private:
  SourceLocation here() const { return {line_, column_}; }
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(SourceLocation at, const std::string& message) const {
    throw ParseError(std::string(file_), at, message);
  }

  void push(TokenKind kind, std::string text, SourceLocation at) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.location = at;
    tokens_.push_back(std::move(t));
  }

  void pushNewline() {
    if (!tokens_.empty() && tokens_.back().kind != TokenKind::Newline) {
      push(TokenKind::Newline, "\n", here());
    }
  }

  void lexNumber() {
    const auto at = here();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek(0))) != 0) advance();
    if (peek(0) == '.' && std::isdigit(static_cast<unsigned char>(peek(1))) != 0) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek(0))) != 0) advance();
    }
    const std::string_view text = src_.substr(start, pos_ - start);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail(at, "malformed number literal");
    Token t;
    t.kind = TokenKind::Number;
    t.text = std::string(text);
    t.number = value;
    t.location = at;
    tokens_.push_back(std::move(t));
  }

  void lexWord() {
    const auto at = here();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && isIdentPart(src_[pos_])) advance();
    std::string word(src_.substr(start, pos_ - start));
    const TokenKind kind = isKeyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
    push(kind, std::move(word), at);
  }

  void lexString() {
    Token t;
    t.kind = TokenKind::String;
    t.location = here();
    advance();  // opening quote
    StringSegment literal;
    literal.location = here();
    auto flushLiteral = [&] {
      if (!literal.text.empty()) t.segments.push_back(literal);
      literal.text.clear();
    };
    for (;;) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') fail(t.location, "unterminated string literal");
      const char c = src_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (pos_ >= src_.size()) fail(t.location, "unterminated string literal");
        const char e = src_[pos_];
        switch (e) {
          case 'n': literal.text += '\n'; break;
          case 't': literal.text += '\t'; break;
          case '"': literal.text += '"'; break;
          case '\\': literal.text += '\\'; break;
          case '{': literal.text += '{'; break;
          case '}': literal.text += '}'; break;
          default: fail(here(), std::string("unknown escape \\") + e);
        }
        advance();
        continue;
      }
      if (c == '{') {
        flushLiteral();
        advance();
        StringSegment expr;
        expr.isExpression = true;
        expr.location = here();
        int depth = 1;
        for (;;) {
          if (pos_ >= src_.size() || src_[pos_] == '\n') {
            fail(expr.location, "unterminated interpolation in string literal");
          }
          const char d = src_[pos_];
          if (d == '"') fail(here(), "string literals are not supported inside interpolations");
          if (d == '{') ++depth;
          if (d == '}' && --depth == 0) {
            advance();
            break;
          }
          expr.text += d;
          advance();
        }
        t.segments.push_back(std::move(expr));
        literal.location = here();
        continue;
      }
      if (literal.text.empty()) literal.location = here();
      literal.text += c;
      advance();
    }
    flushLiteral();
    for (const auto& seg : t.segments) {
      if (!seg.isExpression) t.text += seg.text;
    }
    tokens_.push_back(std::move(t));
  }

  void lexPunctuation() {
    const auto at = here();
    const char c = src_[pos_];
    const char n = peek(1);
    auto two = [&](TokenKind kind, const char* text) {
      advance();
      advance();
      push(kind, text, at);
    };
    auto one = [&](TokenKind kind) {
      advance();
      push(kind, std::string(1, c), at);
    };
    switch (c) {
      case '(': return one(TokenKind::LParen);
      case ')': return one(TokenKind::RParen);
      case '{': return one(TokenKind::LBrace);
      case '}': return one(TokenKind::RBrace);
      case ',': return one(TokenKind::Comma);
      case '.': return one(TokenKind::Dot);
      case ';': return one(TokenKind::Semicolon);
      case '_': return one(TokenKind::Underscore);
      case ':':
        if (n == '=') return two(TokenKind::Assign, ":=");
        return one(TokenKind::Colon);
      case '=':
        if (n == '=') return two(TokenKind::Operator, "==");
        return one(TokenKind::Equals);
      case '-':
        if (n == '>') return two(TokenKind::Arrow, "->");
        return one(TokenKind::Operator);
      case '!':
        if (n == '=') return two(TokenKind::Operator, "!=");
        return one(TokenKind::Operator);
      case '<':
        if (n == '=') return two(TokenKind::Operator, "<=");
        return one(TokenKind::Operator);
      case '>':
        if (n == '=') return two(TokenKind::Operator, ">=");
        return one(TokenKind::Operator);
      case '&':
        if (n == '&') return two(TokenKind::Operator, "&&");
        break;
      case '|':
        if (n == '|') return two(TokenKind::Operator, "||");
        break;
      case '+':
      case '*':
      case '/':
      case '%': return one(TokenKind::Operator);
      default: break;
    }
    fail(at, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::string_view file_;
  std::size_t pos_ = 0;
  std::uint32_t line_;
  std::uint32_t column_;
  std::vector<Token> tokens_;
};

}  // namespace

bool isKeyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view source, std::string_view fileName,
                            SourceLocation origin) {
  return Lexer(source, fileName, origin).run();
}

}  // namespace gradual::frontend
