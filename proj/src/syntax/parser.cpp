// Copyright 2026 The rjanus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <map>
#include <optional>

#include "lexer.hpp"
#include "rjanus/syntax.hpp"

namespace rjanus {

using detail::Tok;
using detail::Token;

namespace {

struct SyntaxError {
  Diagnostic diag;
};

std::optional<BinOp> binary_op(Tok kind) {
  switch (kind) {
    case Tok::Plus: return BinOp::Add;
    case Tok::Minus: return BinOp::Sub;
    case Tok::Caret: return BinOp::Xor;
    case Tok::Star: return BinOp::Mul;
    case Tok::Slash: return BinOp::Div;
    case Tok::Percent: return BinOp::Mod;
    case Tok::Amp: return BinOp::BitAnd;
    case Tok::Pipe: return BinOp::BitOr;
    case Tok::AmpAmp: return BinOp::LogAnd;
    case Tok::PipePipe: return BinOp::LogOr;
    case Tok::Less: return BinOp::Lt;
    case Tok::Greater: return BinOp::Gt;
    case Tok::LessEq: return BinOp::Le;
    case Tok::GreaterEq: return BinOp::Ge;
    case Tok::Equal: return BinOp::Eq;
    case Tok::NotEqual: return BinOp::Ne;
    default: return std::nullopt;
  }
}

std::optional<ModOp> update_op(Tok kind) {
  switch (kind) {
    case Tok::PlusAssign: return ModOp::Plus;
    case Tok::MinusAssign: return ModOp::Minus;
    case Tok::XorAssign: return ModOp::Xor;
    default: return std::nullopt;
  }
}

// Tokens that close a statement list.
bool ends_statements(Tok kind) {
  switch (kind) {
    case Tok::Eof:
    case Tok::KwProcedure:
    case Tok::KwThen:
    case Tok::KwElse:
    case Tok::KwFi:
    case Tok::KwDo:
    case Tok::KwLoop:
    case Tok::KwUntil:
      return true;
    default:
      return false;
  }
}

Span join(const Span& first, const Span& last) {
  return Span{first.begin, last.end, first.line, first.column};
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : tokens_(std::move(tokens)), options_(options) {}

  Program program() {
    Program prog;
    prog.main = statements("program body");
    while (peek().kind == Tok::KwProcedure) {
      const Token& kw = advance();
      const Token& name = expect(Tok::Ident, "procedure name");
      Procedure proc;
      proc.name = std::string(name.text);
      if (ends_statements(peek().kind) && peek().kind != Tok::KwProcedure &&
          peek().kind != Tok::Eof) {
        fail("expected statement in procedure body", peek().span);
      }
      if (peek().kind == Tok::KwProcedure || peek().kind == Tok::Eof) {
        if (options_.strict) fail("procedure '" + proc.name + "' has an empty body", name.span);
        proc.span = join(kw.span, name.span);
      } else {
        proc.body = statements("procedure body");
        proc.span = join(kw.span, proc.body->span);
      }
      prog.procedures.push_back(std::move(proc));
    }
    if (peek().kind != Tok::Eof) {
      fail("unexpected " + std::string(detail::describe(peek().kind)) +
               " at top level",
           peek().span);
    }
    if (options_.strict && prog.procedures.empty()) {
      fail("strict grammar requires at least one procedure declaration", peek().span);
    }
    return prog;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  const Token& previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }

  [[noreturn]] void fail(std::string message, Span span) {
    throw SyntaxError{Diagnostic{Severity::Error, std::move(message), span}};
  }

  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) {
      fail("expected " + std::string(what) + ", found " +
               std::string(detail::describe(peek().kind)),
           peek().span);
    }
    return advance();
  }

  StmtPtr statements(std::string_view context) {
    std::vector<StmtPtr> parts;
    while (!ends_statements(peek().kind)) parts.push_back(statement());
    if (parts.empty()) {
      fail("expected statement in " + std::string(context) + ", found " +
               std::string(detail::describe(peek().kind)),
           peek().span);
    }
    return make_seq(parts);
  }

  StmtPtr statement() {
    const Token& first = peek();
    switch (first.kind) {
      case Tok::Ident: return assignment();
      case Tok::KwIf: return conditional();
      case Tok::KwFrom: return loop();
      case Tok::KwCall: {
        advance();
        const Token& name = expect(Tok::Ident, "procedure name after 'call'");
        return make_call(std::string(name.text), join(first.span, name.span));
      }
      case Tok::KwUncall: {
        advance();
        const Token& name = expect(Tok::Ident, "procedure name after 'uncall'");
        return make_uncall(std::string(name.text), join(first.span, name.span));
      }
      case Tok::KwSkip:
        advance();
        return make_skip(first.span);
      default:
        fail("expected statement, found " + std::string(detail::describe(first.kind)),
             first.span);
    }
  }

  StmtPtr assignment() {
    const Token& target = advance();
    ExprPtr index;
    if (peek().kind == Tok::LBracket) {
      advance();
      index = expression();
      expect(Tok::RBracket, "']'");
    }
    auto op = update_op(peek().kind);
    if (!op) {
      fail("expected '+=', '-=' or '^=' after '" + std::string(target.text) + "'",
           peek().span);
    }
    advance();
    ExprPtr value = expression();
    Span span = join(target.span, value->span);
    if (index) {
      return make_array_assign(std::string(target.text), std::move(index), *op,
                               std::move(value), span);
    }
    return make_assign(std::string(target.text), *op, std::move(value), span);
  }

  StmtPtr conditional() {
    const Token& kw = advance();
    ExprPtr test = expression();
    expect(Tok::KwThen, "'then'");
    StmtPtr then_body = statements("'then' branch");
    StmtPtr else_body;
    if (peek().kind == Tok::KwElse) {
      advance();
      else_body = statements("'else' branch");
    } else if (options_.strict) {
      fail("expected 'else' (required by the strict grammar)", peek().span);
    } else {
      else_body = make_skip(peek().span);
    }
    expect(Tok::KwFi, "'fi'");
    ExprPtr assertion = expression();
    Span span = join(kw.span, assertion->span);
    return make_if(std::move(test), std::move(then_body), std::move(else_body),
                   std::move(assertion), span);
  }

  StmtPtr loop() {
    const Token& kw = advance();
    ExprPtr entry = expression();
    expect(Tok::KwDo, "'do'");
    StmtPtr do_body = statements("'do' body");
    StmtPtr loop_body;
    if (peek().kind == Tok::KwLoop) {
      advance();
      loop_body = statements("'loop' body");
    } else if (options_.strict) {
      fail("expected 'loop' (required by the strict grammar)", peek().span);
    } else {
      loop_body = make_skip(peek().span);
    }
    expect(Tok::KwUntil, "'until'");
    ExprPtr exit = expression();
    Span span = join(kw.span, exit->span);
    return make_loop(std::move(entry), std::move(do_body), std::move(loop_body),
                     std::move(exit), span);
  }

  // Precedence climbing; every level is left-associative.
  ExprPtr expression(int min_prec = 1) {
    ExprPtr lhs = primary();
    for (;;) {
      auto op = binary_op(peek().kind);
      if (!op || precedence(*op) < min_prec) break;
      advance();
      ExprPtr rhs = expression(precedence(*op) + 1);
      Span span = join(lhs->span, rhs->span);
      lhs = make_binary(*op, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  ExprPtr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Int: {
        advance();
        if (tok.magnitude > 2147483647u) {
          fail("integer constant out of 32-bit range", tok.span);
        }
        return make_const(static_cast<std::int32_t>(tok.magnitude), tok.span);
      }
      case Tok::Minus: {
        // Negative constants; the grammar has no unary operators.
        advance();
        const Token& lit = peek();
        if (lit.kind != Tok::Int || lit.span.begin != tok.span.end) {
          fail("'-' in operand position must prefix an integer constant", tok.span);
        }
        advance();
        std::int64_t value = -static_cast<std::int64_t>(lit.magnitude);
        return make_const(static_cast<std::int32_t>(value), join(tok.span, lit.span));
      }
      case Tok::Ident: {
        advance();
        if (peek().kind == Tok::LBracket) {
          advance();
          ExprPtr index = expression();
          const Token& close = expect(Tok::RBracket, "']'");
          return make_index(std::string(tok.text), std::move(index),
                            join(tok.span, close.span));
        }
        return make_var(std::string(tok.text), tok.span);
      }
      case Tok::LParen: {
        advance();
        ExprPtr inner = expression();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("expected expression, found " + std::string(detail::describe(tok.kind)),
             tok.span);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
};

}  // namespace

ParseResult parse(std::string_view source, const ParseOptions& options) {
  ParseResult result;
  auto tokens = detail::tokenize(source, result.diagnostics);
  if (has_errors(result.diagnostics)) return result;

  Program program;
  try {
    program = Parser(std::move(tokens), options).program();
  } catch (const SyntaxError& err) {
    result.diagnostics.push_back(err.diag);
    return result;
  }

  std::map<std::string, Span, std::less<>> seen;
  for (const auto& proc : program.procedures) {
    auto [it, inserted] = seen.emplace(proc.name, proc.span);
    if (!inserted) {
      result.diagnostics.push_back(
          {Severity::Error, "duplicate procedure '" + proc.name + "'", proc.span});
    }
  }
  if (has_errors(result.diagnostics)) return result;
  result.program = std::move(program);
  return result;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity == Severity::Error) return true;
  }
  return false;
}

std::string format_diagnostic(const Diagnostic& diag, std::string_view file) {
  std::string out;
  if (!file.empty()) {
    out += file;
    out += ':';
  }
  if (!diag.span.synthesized()) {
    out += std::to_string(diag.span.line) + ":" + std::to_string(diag.span.column) + ": ";
  } else if (!file.empty()) {
    out += ' ';
  }
  out += diag.severity == Severity::Error ? "error: " : "warning: ";
  out += diag.message;
  return out;
}

}  // namespace rjanus
