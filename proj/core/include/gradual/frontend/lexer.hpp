#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gradual/frontend/ast.hpp"

namespace gradual::frontend {

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,
  Number,
  String,
  Operator,  // + - * / % < > <= >= == != && || !
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Colon,
  Semicolon,
  Assign,  // :=
  Equals,  // =
  Arrow,   // ->
  Underscore,
  Newline,
  End,
};

struct StringSegment {
  bool isExpression = false;
  std::string text;  // literal text, or the raw source of an interpolated expression
  SourceLocation location;
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLocation location;
  double number = 0.0;
  std::vector<StringSegment> segments;  // String tokens only

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool isKeyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

/// Splits source into tokens. Newlines are significant (statement separators)
/// and emitted as tokens; consecutive newlines collapse into one.
std::vector<Token> tokenize(std::string_view source, std::string_view fileName,
                            SourceLocation origin = {1, 1});

bool isKeyword(std::string_view word);

}  // namespace gradual::frontend
