#include "gradual/frontend/parser.hpp"

#include <fstream>
#include <sstream>

#include "gradual/frontend/lexer.hpp"

namespace gradual::frontend {
namespace {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file) : tokens_(std::move(tokens)), file_(std::move(file)) {}

  void parseProgram(Program& program) {
    skipSeparators();
    while (!at(TokenKind::End)) {
      if (peek().isKeyword("type")) {
        program.typeDecls.push_back(parseTypeDecl());
      } else {
        program.statements.push_back(parseStatement(/*topLevel=*/true));
      }
      expectSeparatorOr(TokenKind::End);
    }
  }

  NodePtr parseStandaloneExpression() {
    skipNewlines();
    auto expr = parseExpression();
    skipNewlines();
    if (!at(TokenKind::End)) fail(peek().location, "unexpected '" + peek().text + "' in interpolation");
    return expr;
  }

 private:
  // ---- token helpers --------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool atOperator(std::string_view op) const { return peek().is(TokenKind::Operator, op); }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(SourceLocation at, const std::string& message) const {
    throw ParseError(file_, at, message);
  }

  std::string describe(const Token& t) const {
    switch (t.kind) {
      case TokenKind::End: return "end of input";
      case TokenKind::Newline: return "newline";
      case TokenKind::String: return "string literal";
      default: return "'" + t.text + "'";
    }
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (!at(kind)) fail(peek().location, "expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }

  void expectKeyword(std::string_view word) {
    if (!peek().isKeyword(word)) {
      fail(peek().location, "expected '" + std::string(word) + "', found " + describe(peek()));
    }
    next();
  }

  std::string expectIdentifier(std::string_view what) { return expect(TokenKind::Identifier, what).text; }

  void skipNewlines() {
    while (at(TokenKind::Newline)) next();
  }

  void skipSeparators() {
    while (at(TokenKind::Newline) || at(TokenKind::Semicolon)) next();
  }

  // Newlines before a continuation token (else, then, do, '.') do not end the
  // construct.
  bool continuesWith(TokenKind kind, std::string_view text = {}) const {
    std::size_t i = 0;
    while (peek(i).kind == TokenKind::Newline) ++i;
    const Token& t = peek(i);
    return t.kind == kind && (text.empty() || t.text == text);
  }

  void expectSeparatorOr(TokenKind closing) {
    if (at(closing)) return;
    if (!at(TokenKind::Newline) && !at(TokenKind::Semicolon)) {
      fail(peek().location, "expected end of statement, found " + describe(peek()));
    }
    skipSeparators();
  }

  // ---- declarations ---------------------------------------------------------

  std::unique_ptr<TypeDecl> parseTypeDecl() {
    auto decl = std::make_unique<TypeDecl>();
    decl->location = peek().location;
    expectKeyword("type");
    decl->name = expectIdentifier("type name");
    expect(TokenKind::Equals, "'='");
    skipNewlines();
    expectKeyword("interface");
    expect(TokenKind::LBrace, "'{'");
    for (;;) {
      while (at(TokenKind::Newline) || at(TokenKind::Semicolon) || at(TokenKind::Comma)) next();
      if (at(TokenKind::RBrace)) break;
      decl->members.push_back(parseMemberSig());
    }
    expect(TokenKind::RBrace, "'}'");
    return decl;
  }

  MemberSig parseMemberSig() {
    MemberSig sig;
    if (at(TokenKind::Identifier)) {
      sig.name = next().text;
      if (at(TokenKind::Assign)) {
        next();
        sig.name += ":=";
      }
    } else if (at(TokenKind::Operator)) {
      sig.name = next().text;
    } else {
      fail(peek().location, "expected member signature, found " + describe(peek()));
    }
    if (at(TokenKind::LParen)) {
      next();
      if (!at(TokenKind::RParen)) {
        for (;;) {
          if (at(TokenKind::Underscore) || at(TokenKind::Identifier)) {
            next();
          } else {
            fail(peek().location, "expected '_' in member signature");
          }
          ++sig.arity;
          if (!at(TokenKind::Comma)) break;
          next();
        }
      }
      expect(TokenKind::RParen, "')'");
    }
    return sig;
  }

  Annotation parseOptionalAnnotation(TokenKind introducer) {
    Annotation a;
    a.location = peek().location;
    if (at(introducer)) {
      next();
      const Token& name = expect(TokenKind::Identifier, "type name");
      a.typeName = name.text;
      a.location = name.location;
    }
    return a;
  }

  std::unique_ptr<MethodDecl> parseMethodDecl() {
    const auto loc = peek().location;
    expectKeyword("method");
    auto method = std::make_unique<MethodDecl>(loc, expectIdentifier("method name"));
    if (at(TokenKind::LParen)) {
      next();
      skipNewlines();
      if (!at(TokenKind::RParen)) {
        for (;;) {
          Parameter p;
          p.location = peek().location;
          p.name = expectIdentifier("parameter name");
          p.annotation = parseOptionalAnnotation(TokenKind::Colon);
          if (!p.annotation.typeName) p.annotation.location = p.location;
          method->params.push_back(std::move(p));
          skipNewlines();
          if (!at(TokenKind::Comma)) break;
          next();
          skipNewlines();
        }
      }
      expect(TokenKind::RParen, "')'");
    }
    method->returnAnnotation = parseOptionalAnnotation(TokenKind::Arrow);
    if (!method->returnAnnotation.typeName) method->returnAnnotation.location = loc;
    const bool saved = returnAllowed_;
    returnAllowed_ = true;
    method->body = parseBody();
    returnAllowed_ = saved;
    return method;
  }

  std::unique_ptr<VarDecl> parseVarDecl(bool allowPublic) {
    const auto loc = peek().location;
    const bool isDef = peek().isKeyword("def");
    next();
    auto decl = std::make_unique<VarDecl>(loc, expectIdentifier("variable name"), isDef);
    decl->annotation = parseOptionalAnnotation(TokenKind::Colon);
    if (!decl->annotation.typeName) decl->annotation.location = loc;
    if (peek().isKeyword("is")) {
      const auto isLoc = peek().location;
      next();
      expectKeyword("public");
      if (!allowPublic) fail(isLoc, "'is public' is only allowed on object fields");
      decl->isPublic = true;
    }
    if (isDef) {
      expect(TokenKind::Equals, "'=' in def declaration");
      skipNewlines();
      decl->initializer = parseExpression();
    } else if (at(TokenKind::Assign)) {
      next();
      skipNewlines();
      decl->initializer = parseExpression();
    }
    return decl;
  }

  // ---- statements -----------------------------------------------------------

  NodePtr parseStatement(bool topLevel = false) {
    const Token& t = peek();
    if (t.isKeyword("method")) {
      if (!topLevel) fail(t.location, "methods may only be declared at top level or in objects");
      return parseMethodDecl();
    }
    if (t.isKeyword("var") || t.isKeyword("def")) return parseVarDecl(false);
    if (t.isKeyword("type")) fail(t.location, "type declarations are only allowed at top level");
    if (t.isKeyword("return")) {
      if (!returnAllowed_) fail(t.location, "'return' is only allowed in method bodies");
      auto ret = std::make_unique<Return>(t.location);
      next();
      if (!at(TokenKind::Newline) && !at(TokenKind::Semicolon) && !at(TokenKind::RBrace) &&
          !at(TokenKind::End)) {
        ret->value = parseExpression();
      }
      return ret;
    }
    if (t.isKeyword("if") || t.isKeyword("while")) {
      // Statement-position control flow keeps the current return permission.
      return t.isKeyword("if") ? parseIf() : parseWhile();
    }
    NodePtr expr = parseExpressionNoReturn();
    if (at(TokenKind::Assign)) {
      const auto loc = next().location;
      skipNewlines();
      NodePtr value = parseExpressionNoReturn();
      return makeAssignment(std::move(expr), std::move(value), loc);
    }
    return expr;
  }

  NodePtr makeAssignment(NodePtr target, NodePtr value, SourceLocation loc) {
    if (target->kind == NodeKind::ImplicitRequest) {
      auto& req = as<ImplicitRequest>(*target);
      if (!req.args.empty()) fail(loc, "cannot assign to a request with arguments");
      return std::make_unique<Assign>(req.location, req.name, std::move(value));
    }
    if (target->kind == NodeKind::ExplicitRequest) {
      auto& req = as<ExplicitRequest>(*target);
      if (req.syntax != RequestSyntax::Dotted || !req.args.empty()) {
        fail(loc, "invalid assignment target");
      }
      auto writer = std::make_unique<ExplicitRequest>(req.location, std::move(req.receiver),
                                                      req.selector + ":=");
      writer->syntax = RequestSyntax::Writer;
      writer->args.push_back(std::move(value));
      return writer;
    }
    fail(loc, "invalid assignment target");
  }

  NodeList parseBody() {
    expect(TokenKind::LBrace, "'{'");
    NodeList body = parseStatementsUntilBrace();
    expect(TokenKind::RBrace, "'}'");
    return body;
  }

  NodeList parseStatementsUntilBrace() {
    NodeList body;
    skipSeparators();
    while (!at(TokenKind::RBrace)) {
      if (at(TokenKind::End)) fail(peek().location, "expected '}', found end of input");
      body.push_back(parseStatement());
      expectSeparatorOr(TokenKind::RBrace);
    }
    return body;
  }

  // ---- expressions ----------------------------------------------------------

  NodePtr parseExpressionNoReturn() {
    const bool saved = returnAllowed_;
    returnAllowed_ = false;
    auto e = parseExpression();
    returnAllowed_ = saved;
    return e;
  }

  NodePtr parseExpression() { return parseBinary(0); }

  static int precedence(std::string_view op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=") return 3;
    if (op == "+" || op == "-") return 4;
    if (op == "*" || op == "/" || op == "%") return 5;
    return -1;
  }

  NodePtr parseBinary(int minPrecedence) {
    NodePtr left = parseUnary();
    for (;;) {
      if (!at(TokenKind::Operator)) return left;
      const int prec = precedence(peek().text);
      if (prec < 0 || prec < minPrecedence) return left;
      const Token op = next();
      skipNewlines();
      NodePtr right = parseBinary(prec + 1);
      auto req = std::make_unique<ExplicitRequest>(op.location, std::move(left), op.text);
      req->syntax = RequestSyntax::Binary;
      req->args.push_back(std::move(right));
      left = std::move(req);
    }
  }

  NodePtr parseUnary() {
    if (atOperator("-")) {
      const auto loc = next().location;
      if (at(TokenKind::Number)) {
        const Token& num = next();
        return parsePostfix(std::make_unique<NumberLiteral>(loc, -num.number));
      }
      NodePtr operand = parseUnary();
      auto req = std::make_unique<ExplicitRequest>(loc, std::make_unique<NumberLiteral>(loc, 0.0), "-");
      req->syntax = RequestSyntax::Binary;
      req->args.push_back(std::move(operand));
      return req;
    }
    if (atOperator("!")) {
      const auto loc = next().location;
      auto req = std::make_unique<ExplicitRequest>(loc, parseUnary(), "not");
      req->syntax = RequestSyntax::Prefix;
      return req;
    }
    return parsePostfix(parsePrimary());
  }

  void parseArguments(NodeList& args, bool& stringArgument) {
    if (at(TokenKind::LParen)) {
      next();
      skipNewlines();
      if (!at(TokenKind::RParen)) {
        for (;;) {
          args.push_back(parseExpressionNoReturn());
          skipNewlines();
          if (!at(TokenKind::Comma)) break;
          next();
          skipNewlines();
        }
      }
      expect(TokenKind::RParen, "')'");
    } else if (at(TokenKind::String)) {
      args.push_back(parseString(next()));
      stringArgument = true;
    }
  }

  NodePtr parsePostfix(NodePtr receiver) {
    while (at(TokenKind::Dot) || continuesWith(TokenKind::Dot)) {
      skipNewlines();
      next();
      const Token& name = expect(TokenKind::Identifier, "method name after '.'");
      auto req = std::make_unique<ExplicitRequest>(name.location, std::move(receiver), name.text);
      parseArguments(req->args, req->stringArgument);
      receiver = std::move(req);
    }
    return receiver;
  }

  NodePtr parsePrimary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        next();
        return std::make_unique<NumberLiteral>(t.location, t.number);
      }
      case TokenKind::String: return parseString(next());
      case TokenKind::LParen: {
        next();
        skipNewlines();
        auto inner = parseExpressionNoReturn();
        skipNewlines();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::LBrace: return parseBlock();
      case TokenKind::Identifier: {
        next();
        auto req = std::make_unique<ImplicitRequest>(t.location, t.text);
        parseArguments(req->args, req->stringArgument);
        return req;
      }
      case TokenKind::Keyword: {
        if (t.isKeyword("true") || t.isKeyword("false")) {
          next();
          return std::make_unique<BooleanLiteral>(t.location, t.text == "true");
        }
        if (t.isKeyword("nil")) {
          next();
          return std::make_unique<NilLiteral>(t.location);
        }
        if (t.isKeyword("self")) {
          next();
          return std::make_unique<SelfExpr>(t.location);
        }
        if (t.isKeyword("object")) return parseObject();
        if (t.isKeyword("if") || t.isKeyword("while")) {
          const bool saved = returnAllowed_;
          returnAllowed_ = false;
          NodePtr n = t.isKeyword("if") ? parseIf() : parseWhile();
          returnAllowed_ = saved;
          return n;
        }
        break;
      }
      default: break;
    }
    fail(t.location, "expected expression, found " + describe(t));
  }

  NodePtr parseString(const Token& t) {
    bool hasExpr = false;
    for (const auto& seg : t.segments) hasExpr |= seg.isExpression;
    if (!hasExpr) return std::make_unique<StringLiteral>(t.location, t.text);
    auto interp = std::make_unique<Interpolation>(t.location);
    for (const auto& seg : t.segments) {
      if (!seg.isExpression) {
        interp->parts.push_back(std::make_unique<StringLiteral>(seg.location, seg.text));
        continue;
      }
      Parser sub(tokenize(seg.text, file_, seg.location), file_);
      interp->parts.push_back(sub.parseStandaloneExpression());
    }
    return interp;
  }

  NodePtr parseObject() {
    auto obj = std::make_unique<ObjectLiteral>(next().location);
    expect(TokenKind::LBrace, "'{' after 'object'");
    skipSeparators();
    const bool saved = returnAllowed_;
    returnAllowed_ = false;
    while (!at(TokenKind::RBrace)) {
      const Token& t = peek();
      if (t.isKeyword("var") || t.isKeyword("def")) {
        obj->members.push_back(parseVarDecl(true));
      } else if (t.isKeyword("method")) {
        obj->members.push_back(parseMethodDecl());
      } else {
        fail(t.location, "object bodies may only contain var, def and method declarations");
      }
      expectSeparatorOr(TokenKind::RBrace);
    }
    returnAllowed_ = saved;
    expect(TokenKind::RBrace, "'}'");
    return obj;
  }

  bool blockHasParameters() const {
    std::size_t i = 0;
    while (peek(i).kind == TokenKind::Newline) ++i;
    for (;;) {
      if (peek(i).kind != TokenKind::Identifier) return false;
      ++i;
      if (peek(i).kind == TokenKind::Arrow) return true;
      if (peek(i).kind != TokenKind::Comma) return false;
      ++i;
    }
  }

  NodePtr parseBlock() {
    auto block = std::make_unique<BlockLiteral>(next().location);
    if (blockHasParameters()) {
      skipNewlines();
      for (;;) {
        const Token& p = expect(TokenKind::Identifier, "block parameter");
        block->params.push_back({p.text, p.location});
        if (!at(TokenKind::Comma)) break;
        next();
      }
      expect(TokenKind::Arrow, "'->'");
    }
    const bool saved = returnAllowed_;
    returnAllowed_ = false;
    block->body = parseStatementsUntilBrace();
    returnAllowed_ = saved;
    expect(TokenKind::RBrace, "'}'");
    return block;
  }

  NodePtr parseCondition() {
    if (at(TokenKind::LBrace)) {
      next();
      skipNewlines();
      auto cond = parseExpressionNoReturn();
      skipNewlines();
      expect(TokenKind::RBrace, "'}'");
      return cond;
    }
    expect(TokenKind::LParen, "'(' before condition");
    skipNewlines();
    auto cond = parseExpressionNoReturn();
    skipNewlines();
    expect(TokenKind::RParen, "')'");
    return cond;
  }

  NodePtr parseIf() {
    auto node = std::make_unique<If>(next().location);
    node->condition = parseCondition();
    skipNewlines();
    expectKeyword("then");
    node->thenBody = parseBody();
    if (continuesWith(TokenKind::Keyword, "elseif")) {
      skipNewlines();
      node->hasElse = true;
      node->elseBody.push_back(parseIf());  // `elseif` shares the if grammar
    } else if (continuesWith(TokenKind::Keyword, "else")) {
      skipNewlines();
      next();
      node->hasElse = true;
      node->elseBody = parseBody();
    }
    return node;
  }

  NodePtr parseWhile() {
    auto node = std::make_unique<While>(next().location);
    node->condition = parseCondition();
    skipNewlines();
    expectKeyword("do");
    node->body = parseBody();
    return node;
  }

  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
  bool returnAllowed_ = false;
};

}  // namespace

Program parseUnresolved(std::string_view source, std::string fileName) {
  Program program;
  program.fileName = fileName;
  Parser parser(tokenize(source, fileName), fileName);
  parser.parseProgram(program);
  return program;
}

Program parse(std::string_view source, std::string fileName) {
  Program program = parseUnresolved(source, std::move(fileName));
  resolve(program);
  return program;
}

Program parseFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

}  // namespace gradual::frontend
