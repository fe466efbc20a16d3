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

#include "lexer.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace rjanus::detail {

namespace {

constexpr std::array<std::pair<std::string_view, Tok>, 12> kKeywords{{
    {"procedure", Tok::KwProcedure},
    {"if", Tok::KwIf},
    {"then", Tok::KwThen},
    {"else", Tok::KwElse},
    {"fi", Tok::KwFi},
    {"from", Tok::KwFrom},
    {"do", Tok::KwDo},
    {"loop", Tok::KwLoop},
    {"until", Tok::KwUntil},
    {"call", Tok::KwCall},
    {"uncall", Tok::KwUncall},
    {"skip", Tok::KwSkip},
}};

// Longest match first.
constexpr std::array<std::pair<std::string_view, Tok>, 24> kPunct{{
    {"+=", Tok::PlusAssign},
    {"-=", Tok::MinusAssign},
    {"^=", Tok::XorAssign},
    {"&&", Tok::AmpAmp},
    {"||", Tok::PipePipe},
    {"<=", Tok::LessEq},
    {">=", Tok::GreaterEq},
    {"==", Tok::Equal},
    {"!=", Tok::NotEqual},
    {"+", Tok::Plus},
    {"-", Tok::Minus},
    {"^", Tok::Caret},
    {"*", Tok::Star},
    {"/", Tok::Slash},
    {"%", Tok::Percent},
    {"&", Tok::Amp},
    {"|", Tok::Pipe},
    {"<", Tok::Less},
    {">", Tok::Greater},
    {"=", Tok::Equal},
    {"(", Tok::LParen},
    {")", Tok::RParen},
    {"[", Tok::LBracket},
    {"]", Tok::RBracket},
}};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer constant";
    case Tok::Eof: return "end of input";
    default: break;
  }
  for (const auto& [text, tok] : kKeywords) {
    if (tok == kind) return text;
  }
  for (const auto& [text, tok] : kPunct) {
    if (tok == kind) return text;
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view source, std::vector<Diagnostic>& diags) {
  std::vector<Token> tokens;
  std::uint32_t pos = 0;
  std::uint32_t line = 1;
  std::uint32_t line_start = 0;
  const auto size = static_cast<std::uint32_t>(source.size());

  auto span_at = [&](std::uint32_t begin, std::uint32_t end) {
    return Span{begin, end, line, begin - line_start + 1};
  };

  while (pos < size) {
    const char c = source[pos];
    if (c == '\n') {
      ++pos;
      ++line;
      line_start = pos;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++pos;
      continue;
    }
    if (c == '/' && pos + 1 < size && source[pos + 1] == '/') {
      while (pos < size && source[pos] != '\n') ++pos;
      continue;
    }
    const std::uint32_t begin = pos;
    if (is_ident_start(c)) {
      while (pos < size && (is_ident_start(source[pos]) || is_digit(source[pos]))) ++pos;
      std::string_view text = source.substr(begin, pos - begin);
      Tok kind = Tok::Ident;
      for (const auto& [kw, tok] : kKeywords) {
        if (kw == text) kind = tok;
      }
      tokens.push_back(Token{kind, text, span_at(begin, pos)});
      continue;
    }
    if (is_digit(c)) {
      std::uint64_t magnitude = 0;
      bool overflow = false;
      while (pos < size && is_digit(source[pos])) {
        magnitude = magnitude * 10 + static_cast<std::uint64_t>(source[pos] - '0');
        if (magnitude > (std::uint64_t{1} << 31)) overflow = true;
        ++pos;
      }
      if (pos < size && is_ident_start(source[pos])) {
        diags.push_back({Severity::Error, "malformed integer constant", span_at(begin, pos + 1)});
        while (pos < size && (is_ident_start(source[pos]) || is_digit(source[pos]))) ++pos;
        continue;
      }
      if (overflow) {
        diags.push_back({Severity::Error, "integer constant out of 32-bit range",
                         span_at(begin, pos)});
        magnitude = 0;
      }
      Token tok{Tok::Int, source.substr(begin, pos - begin), span_at(begin, pos)};
      tok.magnitude = magnitude;
      tokens.push_back(tok);
      continue;
    }
    bool matched = false;
    for (const auto& [text, tok] : kPunct) {
      if (source.substr(pos, text.size()) == text) {
        pos += static_cast<std::uint32_t>(text.size());
        tokens.push_back(Token{tok, text, span_at(begin, pos)});
        matched = true;
        break;
      }
    }
    if (!matched) {
      // Consume a whole UTF-8 sequence so the diagnostic names one character.
      std::uint32_t len = 1;
      const auto byte = static_cast<unsigned char>(c);
      if (byte >= 0xF0) len = 4;
      else if (byte >= 0xE0) len = 3;
      else if (byte >= 0xC0) len = 2;
      pos = std::min(size, pos + len);
      diags.push_back({Severity::Error,
                       "unexpected character '" + std::string(source.substr(begin, pos - begin)) + "'",
                       span_at(begin, pos)});
    }
  }
  tokens.push_back(Token{Tok::Eof, {}, span_at(size, size)});
  return tokens;
}

}  // namespace rjanus::detail
