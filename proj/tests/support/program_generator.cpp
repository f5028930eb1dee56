#include "program_generator.hpp"

#include <algorithm>
#include <sstream>

namespace gradual::fixtures {
namespace {

struct Member {
  std::string name;
  int arity;
  bool field;
};

// Fields contribute a reader and, as vars, a writer; methods have fixed arity.
const std::vector<Member> kObjectMembers = {
    {"x", 0, true}, {"y", 0, true}, {"m", 0, false}, {"n", 1, false}, {"k", 2, false},
};

const std::vector<std::string> kTypeMembers = {"x", "y", "x:=(_)", "m", "n(_)", "k(_, _)", "+(_)", "size"};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::string run() {
    typeCount_ = pick(1, 3);
    factoryCount_ = pick(2, 4);
    methodCount_ = pick(1, 3);
    for (int t = 0; t < typeCount_; ++t) emitType(t);
    for (int f = 0; f < factoryCount_; ++f) emitFactory(f);
    for (int m = 0; m < methodCount_; ++m) emitMethod(m);
    emitMain();
    return out_.str();
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return pick(1, 100) <= percent; }

  std::string annotation(int untypedPercent = 35) {
    if (chance(untypedPercent)) return "";
    if (chance(10)) return ": Unknown";
    return ": T" + std::to_string(pick(0, typeCount_ - 1));
  }

  std::string returnAnnotation() {
    if (chance(40)) return "";
    return " -> T" + std::to_string(pick(0, typeCount_ - 1));
  }

  void emitType(int t) {
    std::vector<std::string> members = kTypeMembers;
    std::shuffle(members.begin(), members.end(), rng_);
    members.resize(static_cast<std::size_t>(chance(25) ? 2 : pick(0, 1)));
    out_ << "type T" << t << " = interface {";
    for (std::size_t i = 0; i < members.size(); ++i) out_ << (i ? ", " : " ") << members[i];
    out_ << " }\n";
  }

  std::string literal() {
    switch (pick(0, 5)) {
      case 0: return std::to_string(pick(0, 9));
      case 1: return "\"s" + std::to_string(pick(0, 9)) + "\"";
      case 2: return chance(50) ? "true" : "false";
      case 3: return "nil";
      case 4: return "newArray(" + std::to_string(pick(0, 3)) + ")";
      default: return "{ " + std::to_string(pick(0, 9)) + " }";
    }
  }

  std::string value() {
    if (chance(85)) return "make" + std::to_string(pick(0, factoryCount_ - 1));
    return literal();
  }

  void emitFactory(int f) {
    out_ << "method make" << f << returnAnnotation() << " {\n  object {\n";
    for (const auto& m : kObjectMembers) {
      if (!chance(75)) continue;
      if (m.field) {
        const bool isDef = chance(30);
        out_ << "    " << (isDef ? "def " : "var ") << m.name << annotation(90) << " is public "
             << (isDef ? "= " : ":= ") << literal() << "\n";
      } else {
        out_ << "    method " << m.name;
        if (m.arity > 0) {
          out_ << "(";
          for (int i = 0; i < m.arity; ++i) out_ << (i ? ", " : "") << "a" << i << annotation(60);
          out_ << ")";
        }
        out_ << returnAnnotation() << " { " << literal() << " }\n";
      }
    }
    out_ << "  }\n}\n";
  }

  void emitMethod(int m) {
    out_ << "method use" << m << "(p" << annotation() << ", q" << annotation() << ")" << returnAnnotation()
         << " {\n";
    out_ << "  var local" << annotation() << " := q\n";
    if (chance(40)) out_ << "  local := p\n";
    if (chance(30)) out_ << "  print(p." << (chance(50) ? "x" : "m") << ")\n";
    if (chance(50)) out_ << "  print(local)\n";
    out_ << "  " << (chance(50) ? "p" : "local") << "\n}\n";
  }

  void emitMain() {
    out_ << "var v" << annotation() << " := " << value() << "\n";
    out_ << "var w := " << value() << "\n";
    const int steps = pick(2, 6);
    for (int s = 0; s < steps; ++s) {
      switch (pick(0, 4)) {
        case 0:
          out_ << "v := " << value() << "\n";
          break;
        case 1:
          out_ << "w := use" << pick(0, methodCount_ - 1) << "(" << operand() << ", " << operand() << ")\n";
          break;
        case 2: {
          out_ << "var i" << s << " := 0\n";
          out_ << "while (i" << s << " < " << pick(2, 12) << ") do {\n";
          out_ << "  w := use" << pick(0, methodCount_ - 1) << "(" << operand() << ", " << operand() << ")\n";
          if (chance(50)) out_ << "  v := make" << pick(0, factoryCount_ - 1) << "\n";
          out_ << "  i" << s << " := i" << s << " + 1\n}\n";
          break;
        }
        case 3:
          out_ << "print(" << operand() << ")\n";
          break;
        default:
          out_ << "if (" << (chance(50) ? "true" : "false") << ") then {\n  v := " << value()
               << "\n} else {\n  w := " << value() << "\n}\n";
          break;
      }
    }
    out_ << "print(\"done {w}\")\n";
  }

  std::string operand() {
    switch (pick(0, 3)) {
      case 0: return "v";
      case 1: return "w";
      default: return value();
    }
  }

  std::mt19937_64 rng_;
  std::ostringstream out_;
  int typeCount_ = 1;
  int factoryCount_ = 1;
  int methodCount_ = 1;
};

}  // namespace

std::string generateProgram(std::uint64_t seed) { return Generator(seed).run(); }

const std::vector<frontend::MemberSig>& memberPool() {
  static const std::vector<frontend::MemberSig> pool = {
      {"a", 0}, {"a", 1}, {"b", 0}, {"b:=", 1}, {"c", 2}, {"d", 0}, {"e", 1}, {"f", 0}, {"+", 1}, {"size", 0},
  };
  return pool;
}

std::vector<frontend::MemberSig> randomMembers(std::mt19937_64& rng, std::size_t maxSize) {
  const auto& pool = memberPool();
  std::uniform_int_distribution<std::size_t> size(0, maxSize);
  std::uniform_int_distribution<std::size_t> index(0, pool.size() - 1);
  std::vector<frontend::MemberSig> members;
  const std::size_t n = size(rng);
  for (std::size_t i = 0; i < n; ++i) members.push_back(pool[index(rng)]);
  return members;
}

}  // namespace gradual::fixtures
