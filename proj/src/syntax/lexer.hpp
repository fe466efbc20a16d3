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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rjanus/syntax.hpp"

namespace rjanus::detail {

enum class Tok : std::uint8_t {
  Ident, Int,
  // keywords
  KwProcedure, KwIf, KwThen, KwElse, KwFi, KwFrom, KwDo, KwLoop, KwUntil,
  KwCall, KwUncall, KwSkip,
  // update operators
  PlusAssign, MinusAssign, XorAssign,
  // expression operators
  Plus, Minus, Caret, Star, Slash, Percent, Amp, AmpAmp, Pipe, PipePipe,
  Less, Greater, LessEq, GreaterEq, Equal, NotEqual,
  LParen, RParen, LBracket, RBracket,
  Eof,
};

struct Token {
  Tok kind;
  std::string_view text;
  Span span;
  /// Magnitude of an `Int` literal; may be 2^31 so that `-2147483648` parses.
  std::uint64_t magnitude = 0;
};

std::string_view describe(Tok kind);

/// Splits `source` into tokens ending with `Eof`. Lexical errors are appended
/// to `diags`; the offending characters are skipped.
std::vector<Token> tokenize(std::string_view source, std::vector<Diagnostic>& diags);

}  // namespace rjanus::detail
