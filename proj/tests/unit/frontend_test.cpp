#include <gtest/gtest.h>

#include "gradual/frontend/completeness.hpp"
#include "gradual/frontend/lexer.hpp"
#include "gradual/frontend/parser.hpp"
#include "gradual/frontend/printer.hpp"
#include "gradual/harness/microbench.hpp"
#include "program_generator.hpp"
#include "test_util.hpp"

using namespace gradual;
using namespace gradual::frontend;
using gradual::fixtures::corpusPath;
using gradual::fixtures::readFile;

namespace {

const ObjectLiteral* firstObject(const Program& program) {
  const ObjectLiteral* found = nullptr;
  walk(program, [&](const Node& n) {
    if (found == nullptr && n.kind == NodeKind::ObjectLiteral) found = &as<ObjectLiteral>(n);
  });
  return found;
}

std::size_t count(const Program& program, NodeKind kind) {
  std::size_t n = 0;
  walk(program, [&](const Node& node) { n += node.kind == kind; });
  return n;
}

}  // namespace

TEST(Lexer, KeywordsAndIdentifiers) {
  const auto tokens = tokenize("def car = object { }", "t");
  ASSERT_GE(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].kind, TokenKind::Keyword);
  EXPECT_EQ(tokens[1].kind, TokenKind::Identifier);
  EXPECT_EQ(tokens[2].kind, TokenKind::Equals);
  EXPECT_EQ(tokens[3].kind, TokenKind::Keyword);
}

TEST(Lexer, InterpolationSegments) {
  const auto tokens = tokenize("\"Registration: {v.registration}\"", "t");
  ASSERT_EQ(tokens[0].kind, TokenKind::String);
  ASSERT_EQ(tokens[0].segments.size(), 2u);
  EXPECT_FALSE(tokens[0].segments[0].isExpression);
  EXPECT_TRUE(tokens[0].segments[1].isExpression);
  EXPECT_EQ(tokens[0].segments[1].text, "v.registration");
}

TEST(Lexer, UnterminatedStringIsParseError) {
  EXPECT_THROW(tokenize("\"abc", "t"), ParseError);
}

TEST(Parse, UntypedRegistrationStructure) {
  const Program p = parseFile(corpusPath("vehicles/untyped_registration.grace"));
  const ObjectLiteral* car = firstObject(p);
  ASSERT_NE(car, nullptr);
  ASSERT_EQ(car->fields.size(), 1u);
  EXPECT_EQ(car->fields[0]->name, "registration");
  EXPECT_TRUE(car->fields[0]->isPublic);
  EXPECT_FALSE(car->fields[0]->isDef);
  const MethodDecl* print = p.findMethod("printRegistration", 1);
  ASSERT_NE(print, nullptr);
  EXPECT_TRUE(print->params[0].annotation.isUnknownMarker());
  EXPECT_EQ(print->params[0].site, kNoSite);
}

TEST(Parse, AbsentAnnotationIsUnknownMarker) {
  const Program p = parse("method m(v) {}");
  const MethodDecl* m = p.findMethod("m", 1);
  ASSERT_NE(m, nullptr);
  EXPECT_TRUE(m->params[0].annotation.isUnknownMarker());
  EXPECT_TRUE(m->returnAnnotation.isUnknownMarker());
}

TEST(Parse, DepartmentMismatchStructure) {
  const Program p = parseFile(corpusPath("vehicles/department_mismatch.grace"));
  ASSERT_EQ(p.typeDecls.size(), 3u);
  EXPECT_EQ(p.typeDecls[0]->name, "Vehicle");
  EXPECT_EQ(p.typeDecls[1]->name, "Person");
  EXPECT_EQ(p.typeDecls[2]->name, "Department");
  EXPECT_EQ(p.typeDecls[0]->members, (std::vector<MemberSig>{{"registration", 0}, {"registerTo", 1}}));

  std::size_t annotatedVars = 0;
  for (const auto& stmt : p.statements) {
    if (stmt->kind == NodeKind::VarDecl && as<VarDecl>(*stmt).annotation.typeName) ++annotatedVars;
  }
  EXPECT_EQ(annotatedVars, 2u);

  std::size_t registerRequests = 0;
  walk(p, [&](const Node& n) {
    if (n.kind == NodeKind::ExplicitRequest) {
      const auto& r = as<ExplicitRequest>(n);
      if (r.selector == "registerTo" && r.args.size() == 1) ++registerRequests;
    }
  });
  EXPECT_EQ(registerRequests, 1u);
}

TEST(Parse, MemberSignatureArity) {
  const Program p = parse("type T = interface { registration\n registerTo(_)\n at(_, _)\n x:=(_)\n +(_) }");
  EXPECT_EQ(p.typeDecls[0]->members,
            (std::vector<MemberSig>{{"registration", 0}, {"registerTo", 1}, {"at", 2}, {"x:=", 1}, {"+", 1}}));
}

TEST(Parse, AcceptsTheWholeSubset) {
  const char* source = R"(
type T = interface { x }
def d: T = object { var x is public := 1; def y = 2 }
var v := d.x
method m(a: T, b) -> Unknown {
  var r := 0
  while (r < 3) do { r := r + 1 }
  if (r == 3) then { return a } elseif (r > 3) then { return b } else { r := 0 }
  { q -> q + 1 }.apply(r)
}
print "v is {v} and {m(d, 2).x}"
d.x := -4
print(!true)
)";
  const Program p = parse(source);
  EXPECT_EQ(count(p, NodeKind::While), 1u);
  EXPECT_EQ(count(p, NodeKind::If), 2u);
  EXPECT_EQ(count(p, NodeKind::BlockLiteral), 1u);
  EXPECT_EQ(count(p, NodeKind::Interpolation), 1u);
}

TEST(Parse, SemicolonsAndNewlinesBothSeparate) {
  EXPECT_EQ(dumpTree(parse("var a := 1; var b := 2")), dumpTree(parse("var a := 1\nvar b := 2")));
}

TEST(Parse, MalformedInputCarriesLocation) {
  try {
    parse("var x := \nvar := 3", "bad.grace");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.file(), "bad.grace");
    EXPECT_EQ(e.location().line, 2u);
  }
  EXPECT_THROW(parse("method m( {"), ParseError);
  EXPECT_THROW(parse("object { print(1) }"), ParseError);
  EXPECT_THROW(parse("{ return 1 }"), ParseError);
  EXPECT_THROW(parse("return 1"), ParseError);
}

TEST(Resolve, UnresolvedIdentifiersAndTypes) {
  EXPECT_THROW(parse("print(y)"), ResolveError);
  EXPECT_THROW(parse("method m(p: Missing) {}"), ResolveError);
  EXPECT_THROW(parse("def a = 1\na := 2"), ResolveError);
  EXPECT_THROW(parse("method m(p) { p := 1 }"), ResolveError);
  EXPECT_THROW(parse("self"), ResolveError);
  EXPECT_THROW(parse("type T = interface { a, a }"), ResolveError);
  EXPECT_THROW(parse("var a := 1\nvar a := 2"), ResolveError);
  EXPECT_NO_THROW(parse("method m(p: Unknown) { p }"));
}

TEST(Resolve, CheckSitesOnlyForTypedPositions) {
  const Program p = parse(R"(
type T = interface { }
method m(a: T, b, c: Unknown) -> T { a }
var v: T := 1
var u := v
def d: T = 2
v := d
)");
  std::size_t arguments = 0, returns = 0, reads = 0, writes = 0;
  for (const auto& s : p.sites) {
    arguments += s.kind == SiteKind::Argument;
    returns += s.kind == SiteKind::Return;
    reads += s.kind == SiteKind::VarRead;
    writes += s.kind == SiteKind::VarWrite;
  }
  EXPECT_EQ(arguments, 1u);
  EXPECT_EQ(returns, 1u);
  EXPECT_EQ(reads, 1u);   // `var u := v`; def reads are not checked
  EXPECT_EQ(writes, 3u);  // v's initializer, d's initializer, `v := d`
}

TEST(Completeness, UntypedRegistrationReportsEveryMissingPosition) {
  const Program p = parseFile(corpusPath("vehicles/untyped_registration.grace"));
  const auto missing = checkCompleteness(p);
  std::vector<std::string> descriptions;
  for (const auto& m : missing) descriptions.push_back(m.description);
  EXPECT_EQ(descriptions, (std::vector<std::string>{"def car", "var registration", "parameter v of printRegistration",
                                                    "result of printRegistration"}));
}

TEST(Completeness, FullyAnnotatedMicrobenchmarkIsComplete) {
  for (auto kind : {harness::MicroKind::Check, harness::MicroKind::Nest}) {
    EXPECT_TRUE(checkCompleteness(parse(harness::microbenchmarkSource(kind, 5))).empty());
  }
}

TEST(Completeness, EmptyProgram) {
  EXPECT_TRUE(checkCompleteness(parse("")).empty());
  EXPECT_EQ(countAnnotationSlots(parse("")), 0u);
}

TEST(Completeness, SlotCountMatchesDeclarations) {
  const Program p = parse(R"(
method a(x, y: Unknown) { var q := 1 }
def o = object { var f is public := 1; method g(z) -> Unknown { z } }
)");
  // params x y z, results a g, vars q o f
  EXPECT_EQ(countAnnotationSlots(p), 8u);
  EXPECT_EQ(checkCompleteness(p).size(), 6u);
}

TEST(Completeness, CorpusIsCompletelyTyped) {
  for (const char* name : {"list", "towers", "permute", "queens", "sieve", "storage", "check_5", "nest_5"}) {
    const Program p = parseFile(corpusPath(std::string(name) + ".grace"));
    EXPECT_TRUE(checkCompleteness(p).empty()) << name;
  }
}

TEST(Printer, RoundTripsTheCorpus) {
  for (const char* name : {"vehicles/untyped_registration", "vehicles/typed_registration", "vehicles/department_mismatch", "list", "towers", "permute",
                           "queens", "sieve", "storage", "check_5", "nest_5"}) {
    const Program p = parseFile(corpusPath(std::string(name) + ".grace"));
    const Program again = parse(printProgram(p), p.fileName);
    EXPECT_EQ(dumpTree(again), dumpTree(p)) << name;
  }
}

TEST(Printer, UntypedCorpusIsTheErasure) {
  for (const char* name : {"list", "towers", "permute", "queens", "sieve", "storage", "check_5", "nest_5"}) {
    const Program typed = parseFile(corpusPath(std::string(name) + ".grace"));
    const Program untyped = parseFile(corpusPath(std::string(name) + "_untyped.grace"));
    EXPECT_EQ(dumpTree(untyped), dumpTree(parse(printProgram(typed, {true}))))
        << name;
    EXPECT_EQ(countAnnotationSlots(untyped), checkCompleteness(untyped).size()) << name;
  }
}

TEST(Printer, FormatsNumbers) {
  EXPECT_EQ(formatNumber(3), "3");
  EXPECT_EQ(formatNumber(-4), "-4");
  EXPECT_EQ(formatNumber(0.5), "0.5");
  EXPECT_EQ(formatNumber(1124250), "1124250");
}

TEST(Property, ParsingIsDeterministicAndRoundTrips) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::string source = gradual::fixtures::generateProgram(seed);
    Program first, second;
    try {
      first = parse(source);
      second = parse(source);
    } catch (const FrontendError& e) {
      FAIL() << "seed " << seed << ": " << e.what() << "\n" << source;
    }
    ASSERT_EQ(dumpTree(first), dumpTree(second)) << seed;
    ASSERT_EQ(dumpTree(parse(printProgram(first))), dumpTree(first)) << seed << "\n" << source;
  }
}
