#include "gradual/frontend/printer.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace gradual::frontend {

std::string formatNumber(double value) {
  if (std::isfinite(value) && value == std::trunc(value) && std::fabs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc() ? std::string(buffer, ptr) : std::string("nan");
}

namespace {

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

class Printer {
 public:
  explicit Printer(PrintOptions options) : options_(options) {}

  std::string run(const Program& program) {
    for (const auto& decl : program.typeDecls) {
      out_ << "type " << decl->name << " = interface {\n";
      for (const auto& m : decl->members) out_ << "    " << formatMember(m) << "\n";
      out_ << "}\n";
    }
    for (const auto& stmt : program.statements) {
      statement(*stmt, 0);
      out_ << "\n";
    }
    return out_.str();
  }

 private:
  void indent(int depth) {
    for (int i = 0; i < depth; ++i) out_ << "    ";
  }

  void annotation(const Annotation& a, const char* introducer) {
    if (options_.eraseAnnotations || !a.typeName) return;
    out_ << introducer << *a.typeName;
  }

  void body(const NodeList& nodes, int depth) {
    out_ << "{\n";
    for (const auto& n : nodes) {
      statement(*n, depth + 1);
      out_ << "\n";
    }
    indent(depth);
    out_ << "}";
  }

  void statement(const Node& node, int depth) {
    indent(depth);
    switch (node.kind) {
      case NodeKind::VarDecl: {
        const auto& v = as<VarDecl>(node);
        out_ << (v.isDef ? "def " : "var ") << v.name;
        annotation(v.annotation, ": ");
        if (v.isPublic) out_ << " is public";
        if (v.initializer) {
          out_ << (v.isDef ? " = " : " := ");
          expression(*v.initializer, depth);
        }
        return;
      }
      case NodeKind::MethodDecl: {
        const auto& m = as<MethodDecl>(node);
        out_ << "method " << m.name;
        if (!m.params.empty()) {
          out_ << "(";
          for (std::size_t i = 0; i < m.params.size(); ++i) {
            if (i != 0) out_ << ", ";
            out_ << m.params[i].name;
            annotation(m.params[i].annotation, ": ");
          }
          out_ << ")";
        }
        annotation(m.returnAnnotation, " -> ");
        out_ << " ";
        body(m.body, depth);
        return;
      }
      case NodeKind::Return: {
        const auto& r = as<Return>(node);
        out_ << "return";
        if (r.value) {
          out_ << " ";
          expression(*r.value, depth);
        }
        return;
      }
      default: expression(node, depth);
    }
  }

  // Operands of operators and receivers are parenthesized unless atomic, so
  // the printed text reparses to the same tree regardless of precedence.
  void operand(const Node& node, int depth) {
    const bool atomic = node.kind == NodeKind::NumberLiteral || node.kind == NodeKind::StringLiteral ||
                        node.kind == NodeKind::BooleanLiteral || node.kind == NodeKind::NilLiteral ||
                        node.kind == NodeKind::Self || node.kind == NodeKind::Interpolation ||
                        node.kind == NodeKind::ImplicitRequest ||
                        (node.kind == NodeKind::ExplicitRequest &&
                         as<ExplicitRequest>(node).syntax == RequestSyntax::Dotted);
    if (atomic && !(node.kind == NodeKind::NumberLiteral && as<NumberLiteral>(node).value < 0)) {
      expression(node, depth);
    } else {
      out_ << "(";
      expression(node, depth);
      out_ << ")";
    }
  }

  void arguments(const NodeList& args, bool stringArgument, int depth) {
    if (args.empty()) return;
    if (stringArgument && args.size() == 1 && args[0]->kind == NodeKind::StringLiteral) {
      out_ << " ";
      expression(*args[0], depth);
      return;
    }
    out_ << "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i != 0) out_ << ", ";
      expression(*args[i], depth);
    }
    out_ << ")";
  }

  void expression(const Node& node, int depth) {
    switch (node.kind) {
      case NodeKind::NumberLiteral: out_ << formatNumber(as<NumberLiteral>(node).value); return;
      case NodeKind::StringLiteral: out_ << '"' << escape(as<StringLiteral>(node).value) << '"'; return;
      case NodeKind::BooleanLiteral: out_ << (as<BooleanLiteral>(node).value ? "true" : "false"); return;
      case NodeKind::NilLiteral: out_ << "nil"; return;
      case NodeKind::Self: out_ << "self"; return;
      case NodeKind::Interpolation: {
        out_ << '"';
        for (const auto& part : as<Interpolation>(node).parts) {
          if (part->kind == NodeKind::StringLiteral) {
            out_ << escape(as<StringLiteral>(*part).value);
          } else {
            out_ << "{";
            expression(*part, depth);
            out_ << "}";
          }
        }
        out_ << '"';
        return;
      }
      case NodeKind::ObjectLiteral: {
        out_ << "object ";
        body(as<ObjectLiteral>(node).members, depth);
        return;
      }
      case NodeKind::BlockLiteral: {
        const auto& b = as<BlockLiteral>(node);
        out_ << "{";
        for (std::size_t i = 0; i < b.params.size(); ++i) {
          out_ << (i == 0 ? " " : ", ") << b.params[i].name;
        }
        if (!b.params.empty()) out_ << " ->";
        out_ << "\n";
        for (const auto& n : b.body) {
          statement(*n, depth + 1);
          out_ << "\n";
        }
        indent(depth);
        out_ << "}";
        return;
      }
      case NodeKind::ImplicitRequest: {
        const auto& r = as<ImplicitRequest>(node);
        out_ << r.name;
        arguments(r.args, r.stringArgument, depth);
        return;
      }
      case NodeKind::ExplicitRequest: {
        const auto& r = as<ExplicitRequest>(node);
        switch (r.syntax) {
          case RequestSyntax::Binary:
            operand(*r.receiver, depth);
            out_ << " " << r.selector << " ";
            operand(*r.args[0], depth);
            return;
          case RequestSyntax::Prefix:
            out_ << "!";
            operand(*r.receiver, depth);
            return;
          case RequestSyntax::Writer:
            operand(*r.receiver, depth);
            out_ << "." << r.selector.substr(0, r.selector.size() - 2) << " := ";
            expression(*r.args[0], depth);
            return;
          case RequestSyntax::Dotted:
            operand(*r.receiver, depth);
            out_ << "." << r.selector;
            arguments(r.args, r.stringArgument, depth);
            return;
        }
        return;
      }
      case NodeKind::Assign: {
        const auto& a = as<Assign>(node);
        out_ << a.name << " := ";
        expression(*a.value, depth);
        return;
      }
      case NodeKind::If: {
        const auto& n = as<If>(node);
        out_ << "if (";
        expression(*n.condition, depth);
        out_ << ") then ";
        body(n.thenBody, depth);
        if (n.hasElse) {
          out_ << " else ";
          body(n.elseBody, depth);
        }
        return;
      }
      case NodeKind::While: {
        const auto& n = as<While>(node);
        out_ << "while (";
        expression(*n.condition, depth);
        out_ << ") do ";
        body(n.body, depth);
        return;
      }
      case NodeKind::Return:
      case NodeKind::VarDecl:
      case NodeKind::MethodDecl:
        // Only reachable for object members printed through body().
        statement(node, 0);
        return;
    }
  }

  PrintOptions options_;
  std::ostringstream out_;
};

class Dumper {
 public:
  std::string run(const Program& program) {
    for (const auto& decl : program.typeDecls) {
      out_ << "(type " << decl->name;
      for (const auto& m : decl->members) out_ << " " << m.name << "/" << m.arity;
      out_ << ")\n";
    }
    for (const auto& stmt : program.statements) {
      node(*stmt);
      out_ << "\n";
    }
    return out_.str();
  }

 private:
  void annotation(const Annotation& a) { out_ << ":" << (a.typeName ? *a.typeName : std::string("?")); }

  void list(const NodeList& nodes) {
    out_ << "[";
    for (const auto& n : nodes) {
      out_ << " ";
      node(*n);
    }
    out_ << " ]";
  }

  void node(const Node& n) {
    switch (n.kind) {
      case NodeKind::NumberLiteral: out_ << "(num " << formatNumber(as<NumberLiteral>(n).value) << ")"; return;
      case NodeKind::StringLiteral: out_ << "(str \"" << escape(as<StringLiteral>(n).value) << "\")"; return;
      case NodeKind::BooleanLiteral: out_ << (as<BooleanLiteral>(n).value ? "(true)" : "(false)"); return;
      case NodeKind::NilLiteral: out_ << "(nil)"; return;
      case NodeKind::Self: out_ << "(self)"; return;
      case NodeKind::Interpolation: out_ << "(interp "; list(as<Interpolation>(n).parts); out_ << ")"; return;
      case NodeKind::ObjectLiteral: out_ << "(object "; list(as<ObjectLiteral>(n).members); out_ << ")"; return;
      case NodeKind::BlockLiteral: {
        const auto& b = as<BlockLiteral>(n);
        out_ << "(block (";
        for (const auto& p : b.params) out_ << " " << p.name;
        out_ << " ) ";
        list(b.body);
        out_ << ")";
        return;
      }
      case NodeKind::ImplicitRequest: {
        const auto& r = as<ImplicitRequest>(n);
        out_ << "(implicit " << r.name << " ";
        list(r.args);
        out_ << ")";
        return;
      }
      case NodeKind::ExplicitRequest: {
        const auto& r = as<ExplicitRequest>(n);
        out_ << "(request " << r.selector << " " << static_cast<int>(r.syntax) << " ";
        node(*r.receiver);
        out_ << " ";
        list(r.args);
        out_ << ")";
        return;
      }
      case NodeKind::Assign:
        out_ << "(assign " << as<Assign>(n).name << " ";
        node(*as<Assign>(n).value);
        out_ << ")";
        return;
      case NodeKind::If: {
        const auto& i = as<If>(n);
        out_ << "(if ";
        node(*i.condition);
        out_ << " ";
        list(i.thenBody);
        if (i.hasElse) {
          out_ << " else ";
          list(i.elseBody);
        }
        out_ << ")";
        return;
      }
      case NodeKind::While:
        out_ << "(while ";
        node(*as<While>(n).condition);
        out_ << " ";
        list(as<While>(n).body);
        out_ << ")";
        return;
      case NodeKind::Return:
        out_ << "(return";
        if (as<Return>(n).value) {
          out_ << " ";
          node(*as<Return>(n).value);
        }
        out_ << ")";
        return;
      case NodeKind::VarDecl: {
        const auto& v = as<VarDecl>(n);
        out_ << (v.isDef ? "(def " : "(var ") << v.name;
        annotation(v.annotation);
        if (v.isPublic) out_ << " public";
        if (v.initializer) {
          out_ << " ";
          node(*v.initializer);
        }
        out_ << ")";
        return;
      }
      case NodeKind::MethodDecl: {
        const auto& m = as<MethodDecl>(n);
        out_ << "(method " << m.name << " (";
        for (const auto& p : m.params) {
          out_ << " " << p.name;
          annotation(p.annotation);
        }
        out_ << " ) ";
        annotation(m.returnAnnotation);
        out_ << " ";
        list(m.body);
        out_ << ")";
        return;
      }
    }
  }

  std::ostringstream out_;
};

}  // namespace

std::string printProgram(const Program& program, PrintOptions options) {
  return Printer(options).run(program);
}

std::string dumpTree(const Program& program) { return Dumper().run(program); }

}  // namespace gradual::frontend
