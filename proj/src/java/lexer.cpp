// Copyright 2026 The eagertest Authors.
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

#include <array>
#include <cctype>

#include "eagertest/java/parser.hpp"

namespace eagertest::java {
namespace {

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || std::isdigit(c); }

// Longest match first. `>>`, `>>=`, `>>>` and `>>>=` are deliberately absent.
constexpr std::array<std::string_view, 37> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=",
    "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "<<", "(",  ")",  "{",  "}",  "[",
    "]",   ";",   ",",  ".",  "@",  "=",  "<",  ">",  "!",  "~",  "?",
};

constexpr std::string_view kSingleOperators = ":+-*/&|^%";

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    out.push_back(Token{TokenKind::End, "", line_, pos_});
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        int start = line_;
        advance();
        advance();
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= src_.size()) throw ParseError(start, "unterminated comment");
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  Token next() {
    Token tok;
    tok.line = line_;
    tok.offset = pos_;
    const std::size_t start = pos_;
    const auto c = static_cast<unsigned char>(peek());

    if (is_ident_start(c)) {
      while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(peek()))) advance();
      tok.kind = TokenKind::Identifier;
    } else if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      tok.kind = number();
    } else if (c == '"') {
      string_literal();
      tok.kind = TokenKind::StringLiteral;
    } else if (c == '\'') {
      quoted('\'');
      tok.kind = TokenKind::CharLiteral;
    } else {
      tok.kind = TokenKind::Operator;
      bool matched = false;
      for (std::string_view op : kOperators) {
        if (src_.substr(pos_, op.size()) == op) {
          for (std::size_t i = 0; i < op.size(); ++i) advance();
          matched = true;
          break;
        }
      }
      if (!matched) {
        if (kSingleOperators.find(static_cast<char>(c)) == std::string_view::npos) {
          throw ParseError(line_, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
        advance();
      }
    }
    tok.text = std::string(src_.substr(start, pos_ - start));
    return tok;
  }

  TokenKind number() {
    bool is_float = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
      advance();
      advance();
      while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
    } else {
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        is_float = true;
        advance();
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      } else if (peek() == '.' && !std::isalpha(static_cast<unsigned char>(peek(1))) && peek(1) != '.') {
        // "1." is a valid double literal.
        is_float = true;
        advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        is_float = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
    }
    char suffix = peek();
    if (suffix == 'f' || suffix == 'F' || suffix == 'd' || suffix == 'D') {
      is_float = true;
      advance();
    } else if (suffix == 'l' || suffix == 'L') {
      advance();
    }
    return is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral;
  }

  void string_literal() {
    if (src_.substr(pos_, 3) == "\"\"\"") {
      int start = line_;
      for (int i = 0; i < 3; ++i) advance();
      while (pos_ < src_.size() && src_.substr(pos_, 3) != "\"\"\"") {
        if (peek() == '\\') advance();
        advance();
      }
      if (pos_ >= src_.size()) throw ParseError(start, "unterminated text block");
      for (int i = 0; i < 3; ++i) advance();
      return;
    }
    quoted('"');
  }

  void quoted(char quote) {
    int start = line_;
    advance();
    while (pos_ < src_.size() && peek() != quote) {
      if (peek() == '\n') throw ParseError(start, "unterminated literal");
      if (peek() == '\\') advance();
      if (pos_ < src_.size()) advance();
    }
    if (pos_ >= src_.size()) throw ParseError(start, "unterminated literal");
    advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace eagertest::java
