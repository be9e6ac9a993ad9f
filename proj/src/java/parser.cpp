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

#include "eagertest/java/parser.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_set>

namespace eagertest::java {
namespace {

const std::unordered_set<std::string_view> kPrimitives = {
    "boolean", "byte", "short", "int", "long", "char", "float", "double", "void"};

const std::unordered_set<std::string_view> kModifierWords = {
    "public", "protected", "private",  "static",   "final",    "abstract", "native",
    "synchronized", "transient", "volatile", "strictfp", "sealed",
};

// Words that can never start a type in a local declaration.
const std::unordered_set<std::string_view> kReserved = {
    "if",     "else",  "while",  "do",     "for",    "try",      "catch",   "finally",
    "switch", "case",  "default", "return", "throw",  "break",    "continue", "new",
    "this",   "super", "true",   "false",  "null",   "instanceof", "class", "interface",
    "enum",   "assert", "synchronized", "throws", "import", "package",
};

const std::array<std::string_view, 11> kAssignOps = {"=",  "+=", "-=", "*=", "/=", "%=",
                                                     "&=", "|=", "^=", "<<=", ""};

class Parser {
 public:
  Parser(std::string_view source, std::string file, const ParseOptions& options)
      : source_(source), toks_(tokenize(source)), file_(std::move(file)), options_(options) {}

  CompilationUnit parse_unit() {
    CompilationUnit unit;
    skip_leading_annotations();
    if (is_word("package")) {
      take();
      unit.package_name = parse_qualified_name();
      expect(";");
    }
    while (is_word("import")) {
      take();
      bool is_static = false;
      if (is_word("static")) {
        take();
        is_static = true;
      }
      std::string name = parse_qualified_name();
      if (is_op(".") && is_op("*", 1)) {
        take();
        take();
        name += ".*";
      }
      expect(";");
      (is_static ? unit.static_imports : unit.imports).push_back(name);
    }
    unit_ = &unit;
    while (!at_end()) {
      if (is_op(";")) {
        take();
        continue;
      }
      Modifiers mods = parse_modifiers();
      if (!at_type_decl_keyword()) fail("expected type declaration");
      parse_type_decl(mods, "");
    }
    return unit;
  }

 private:
  struct Modifiers {
    bool is_static = false;
    bool is_final = false;
    bool is_abstract = false;
    Visibility visibility = Visibility::Package;
    std::vector<Annotation> annotations;
  };

  // ---- token helpers -------------------------------------------------------

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool is_op(std::string_view op, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Operator && peek(k).text == op;
  }
  bool is_ident(std::size_t k = 0) const { return peek(k).kind == TokenKind::Identifier; }
  bool is_word(std::string_view w, std::size_t k = 0) const { return is_ident(k) && peek(k).text == w; }
  bool is_name(std::size_t k = 0) const { return is_ident(k) && !kReserved.count(peek(k).text); }
  // Tokens k and k+1 touch with no whitespace between them.
  bool adjacent(std::size_t k) const {
    return peek(k).offset + peek(k).text.size() == peek(k + 1).offset;
  }

  const Token& take() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    last_line_ = t.line;
    return t;
  }

  void expect(std::string_view op) {
    if (!is_op(op)) fail("expected '" + std::string(op) + "'");
    take();
  }

  std::string expect_name() {
    if (!is_ident()) fail("expected identifier");
    return take().text;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = at_end() ? "end of file" : "'" + peek().text + "'";
    throw ParseError(peek().line, message + ", found " + found);
  }

  void skip_balanced(std::string_view open, std::string_view close) {
    expect(open);
    int depth = 1;
    while (depth > 0) {
      if (at_end()) fail("unbalanced '" + std::string(open) + "'");
      if (is_op(open)) ++depth;
      if (is_op(close)) --depth;
      take();
    }
  }

  std::string parse_qualified_name() {
    std::string name = expect_name();
    while (is_op(".") && is_ident(1)) {
      take();
      name += "." + take().text;
    }
    return name;
  }

  // ---- declarations ---------------------------------------------------------

  void skip_leading_annotations() {
    while (is_op("@") && !is_word("interface", 1)) {
      std::size_t save = pos_;
      take();
      parse_qualified_name();
      if (is_op("(")) skip_balanced("(", ")");
      if (is_word("package")) return;
      if (!is_op("@")) {
        pos_ = save;
        return;
      }
    }
  }

  Annotation parse_annotation() {
    expect("@");
    Annotation a;
    a.name = parse_qualified_name();
    if (is_op("(")) {
      std::size_t open = peek().offset;
      skip_balanced("(", ")");
      std::size_t close = toks_[pos_ - 1].offset;
      a.arguments = std::string(source_.substr(open + 1, close - open - 1));
    }
    return a;
  }

  Modifiers parse_modifiers() {
    Modifiers m;
    while (true) {
      if (is_op("@") && !is_word("interface", 1)) {
        m.annotations.push_back(parse_annotation());
      } else if (is_word("non") && is_op("-", 1) && is_word("sealed", 2)) {
        take();
        take();
        take();
      } else if (is_word("default") && !is_op(":", 1) && !is_op("->", 1)) {
        take();
      } else if (is_ident() && kModifierWords.count(peek().text)) {
        const std::string& w = take().text;
        if (w == "public") m.visibility = Visibility::Public;
        if (w == "protected") m.visibility = Visibility::Protected;
        if (w == "private") m.visibility = Visibility::Private;
        if (w == "static") m.is_static = true;
        if (w == "final") m.is_final = true;
        if (w == "abstract") m.is_abstract = true;
      } else {
        return m;
      }
    }
  }

  bool at_type_decl_keyword() const {
    if (is_word("class") || is_word("interface") || is_word("enum")) return true;
    if (is_op("@") && is_word("interface", 1)) return true;
    return is_word("record") && is_ident(1) && (is_op("(", 2) || is_op("<", 2));
  }

  void parse_type_decl(const Modifiers& mods, const std::string& outer) {
    TypeDecl t;
    t.span.begin = peek().line;
    if (is_op("@")) {
      take();
      take();
      t.kind = TypeKind::Annotation;
    } else {
      const std::string& kw = take().text;
      t.kind = kw == "class"       ? TypeKind::Class
               : kw == "interface" ? TypeKind::Interface
               : kw == "enum"      ? TypeKind::Enum
                                   : TypeKind::Record;
    }
    t.simple_name = expect_name();
    t.package_name = unit_->package_name;
    t.enclosing = outer;
    if (!outer.empty()) {
      t.qualified_name = outer + "." + t.simple_name;
    } else {
      t.qualified_name =
          t.package_name.empty() ? t.simple_name : t.package_name + "." + t.simple_name;
    }
    t.file = file_;
    t.is_abstract = mods.is_abstract || t.kind == TypeKind::Interface;
    t.imports = unit_->imports;
    t.static_imports = unit_->static_imports;
    if (is_op("<")) skip_type_args();
    if (t.kind == TypeKind::Record) {
      bool varargs = false;
      for (auto& p : parse_params(varargs)) {
        t.fields.push_back(FieldDecl{p.name, p.type, false, true, std::nullopt, last_line_});
      }
    }
    while (is_word("extends") || is_word("implements") || is_word("permits")) {
      bool permits = is_word("permits");
      take();
      do {
        std::string super = parse_type();
        if (!permits) t.supertypes.push_back(super);
      } while (is_op(",") && (take(), true));
    }

    // Reserve the slot so outer types precede nested ones.
    std::size_t slot = unit_->types.size();
    unit_->types.emplace_back();
    parse_class_body(t);
    t.span.end = last_line_;
    unit_->types[slot] = std::move(t);
  }

  void parse_class_body(TypeDecl& t) {
    expect("{");
    if (t.kind == TypeKind::Enum) parse_enum_constants(t);
    while (!is_op("}")) {
      if (at_end()) fail("unbalanced '{' in type " + t.simple_name);
      parse_member(t);
    }
    expect("}");
  }

  void parse_enum_constants(TypeDecl& t) {
    while (!is_op(";") && !is_op("}")) {
      while (is_op("@")) parse_annotation();
      FieldDecl f;
      f.line = peek().line;
      f.name = expect_name();
      f.type = t.simple_name;
      f.is_static = true;
      f.is_final = true;
      if (is_op("(")) skip_balanced("(", ")");
      if (is_op("{")) skip_balanced("{", "}");
      t.fields.push_back(std::move(f));
      if (is_op(",")) take();
    }
    if (is_op(";")) take();
  }

  void parse_member(TypeDecl& t) {
    if (is_op(";")) {
      take();
      return;
    }
    if (is_op("{") || (is_word("static") && is_op("{", 1))) {
      if (is_word("static")) take();
      next_call_id_ = 0;
      parse_block();
      return;
    }
    Modifiers mods = parse_modifiers();
    if (at_type_decl_keyword()) {
      parse_type_decl(mods, t.qualified_name);
      return;
    }
    if (is_op("<")) skip_type_args();

    MethodDecl m;
    m.span.begin = peek().line;
    m.annotations = mods.annotations;
    m.visibility = mods.visibility;
    m.is_static = mods.is_static;
    if (t.kind == TypeKind::Interface && mods.visibility == Visibility::Package) {
      m.visibility = Visibility::Public;
    }

    if (is_word(t.simple_name) && (is_op("(", 1) || (t.kind == TypeKind::Record && is_op("{", 1)))) {
      take();
      m.name = t.simple_name;
      m.is_constructor = true;
      m.return_type = t.simple_name;
      if (is_op("(")) m.params = parse_params(m.is_varargs);
      parse_method_rest(t, m, mods);
      return;
    }

    std::string type = parse_type();
    std::string name = expect_name();
    if (is_op("(")) {
      m.name = name;
      m.return_type = type;
      m.params = parse_params(m.is_varargs);
      while (is_op("[")) {
        take();
        expect("]");
        m.return_type += "[]";
      }
      parse_method_rest(t, m, mods);
      return;
    }

    // Field declarators.
    while (true) {
      FieldDecl f;
      f.line = last_line_;
      f.name = name;
      f.type = type;
      while (is_op("[")) {
        take();
        expect("]");
        f.type += "[]";
      }
      f.is_static = mods.is_static || t.kind == TypeKind::Interface;
      f.is_final = mods.is_final || t.kind == TypeKind::Interface;
      if (is_op("=")) {
        take();
        next_call_id_ = 0;
        f.initializer = parse_variable_initializer();
      }
      t.fields.push_back(std::move(f));
      if (!is_op(",")) break;
      take();
      name = expect_name();
    }
    expect(";");
  }

  void parse_method_rest(TypeDecl& t, MethodDecl& m, const Modifiers& mods) {
    if (is_word("throws")) {
      take();
      do {
        parse_type();
      } while (is_op(",") && (take(), true));
    }
    if (is_word("default")) {
      take();
      parse_variable_initializer();
    }
    if (is_op("{")) {
      next_call_id_ = 0;
      m.body = parse_block();
    } else {
      expect(";");
      m.is_abstract = true;
    }
    if (mods.is_abstract) m.is_abstract = true;
    m.span.end = last_line_;
    t.methods.push_back(std::move(m));
  }

  std::vector<Param> parse_params(bool& varargs) {
    expect("(");
    std::vector<Param> params;
    while (!is_op(")")) {
      parse_modifiers();
      Param p;
      p.type = parse_type();
      if (is_op("...")) {
        take();
        p.type += "[]";
        varargs = true;
      }
      if (is_word("this")) {
        take();
      } else {
        p.name = expect_name();
        while (is_op("[")) {
          take();
          expect("]");
          p.type += "[]";
        }
        params.push_back(std::move(p));
      }
      if (!is_op(",")) break;
      take();
    }
    expect(")");
    return params;
  }

  // ---- types ---------------------------------------------------------------

  void skip_type_args() {
    expect("<");
    int depth = 1;
    while (depth > 0) {
      if (at_end()) fail("unterminated type arguments");
      if (is_op("<")) ++depth;
      if (is_op(">")) --depth;
      if (is_op("(") || is_op(";") || is_op("{") || is_op("=")) fail("malformed type arguments");
      take();
    }
  }

  // Parses a type and returns it with generic arguments erased.
  std::string parse_type() {
    while (is_op("@")) parse_annotation();
    std::string out;
    if (is_ident() && kPrimitives.count(peek().text)) {
      out = take().text;
    } else {
      if (!is_name()) fail("expected type");
      out = take().text;
      if (is_op("<")) skip_type_args();
      while (is_op(".") && is_ident(1) && !is_word("class", 1) && !is_word("this", 1) &&
             !is_word("new", 1) && !is_word("super", 1)) {
        take();
        out += "." + take().text;
        if (is_op("<")) skip_type_args();
      }
    }
    while (is_op("[") && is_op("]", 1)) {
      take();
      take();
      out += "[]";
    }
    return out;
  }

  bool try_parse_type(std::string& out) {
    std::size_t save = pos_;
    try {
      out = parse_type();
      return true;
    } catch (const ParseError&) {
      pos_ = save;
      return false;
    }
  }

  // ---- statements ------------------------------------------------------------

  std::vector<Stmt> parse_block() {
    expect("{");
    std::vector<Stmt> out;
    while (!is_op("}")) {
      if (at_end()) fail("unbalanced '{'");
      parse_statement_into(out);
    }
    expect("}");
    return out;
  }

  // Statements of a block or a single statement body, flattened.
  std::vector<Stmt> parse_body() {
    if (is_op("{")) return parse_block();
    std::vector<Stmt> out;
    parse_statement_into(out);
    return out;
  }

  static void append(std::vector<Stmt>& dst, std::vector<Stmt>&& src) {
    for (auto& s : src) dst.push_back(std::move(s));
  }

  bool looks_like_local_decl() {
    std::size_t save = pos_;
    parse_modifiers();
    std::string type;
    bool decl = false;
    if (is_name() || (is_ident() && kPrimitives.count(peek().text))) {
      if (try_parse_type(type) && is_name()) {
        decl = is_op("=", 1) || is_op(";", 1) || is_op(",", 1) || is_op("[", 1) || is_op(":", 1);
      }
    }
    pos_ = save;
    return decl;
  }

  Stmt make_stmt(StmtKind kind, std::string keyword, int begin) {
    Stmt s;
    s.kind = kind;
    s.keyword = std::move(keyword);
    s.span.begin = begin;
    return s;
  }

  void finish(Stmt& s) {
    s.span.end = std::max(s.span.begin, last_line_);
    for (const auto& e : s.exprs) collect_calls(e, s.calls);
    bind_calls(s);
  }

  void parse_local_decl_into(std::vector<Stmt>& out, bool allow_init = true) {
    int begin = peek().line;
    parse_modifiers();
    std::string type = parse_type();
    while (true) {
      Stmt s = make_stmt(StmtKind::LocalDecl, "", begin);
      std::string name = expect_name();
      s.declared_type = type;
      while (is_op("[")) {
        take();
        expect("]");
        s.declared_type += "[]";
      }
      s.assigned_var = name;
      if (allow_init && is_op("=")) {
        take();
        s.exprs.push_back(parse_variable_initializer());
        bind_outermost_call(s.exprs.back(), name);
      }
      finish(s);
      out.push_back(std::move(s));
      if (!is_op(",")) break;
      take();
    }
  }

  void parse_statement_into(std::vector<Stmt>& out) {
    const int begin = peek().line;

    if (is_op(";")) {
      take();
      return;
    }
    if (is_op("{")) {
      Stmt s = make_stmt(StmtKind::Control, "block", begin);
      s.children = parse_block();
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    if (is_ident() && is_op(":", 1) && !kReserved.count(peek().text)) {
      take();
      take();
      parse_statement_into(out);
      return;
    }

    const std::string word = is_ident() ? peek().text : std::string();

    if (word == "if") {
      take();
      Stmt s = make_stmt(StmtKind::Control, "if", begin);
      s.exprs.push_back(parse_paren_expr());
      s.children = parse_body();
      if (is_word("else")) {
        take();
        append(s.children, parse_body());
      }
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    if (word == "while") {
      take();
      Stmt s = make_stmt(StmtKind::Control, "while", begin);
      s.exprs.push_back(parse_paren_expr());
      s.children = parse_body();
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    if (word == "do") {
      take();
      Stmt s = make_stmt(StmtKind::Control, "do", begin);
      s.children = parse_body();
      if (!is_word("while")) fail("expected 'while'");
      take();
      s.exprs.push_back(parse_paren_expr());
      expect(";");
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    if (word == "for") {
      parse_for_into(out, begin);
      return;
    }
    if (word == "try") {
      parse_try_into(out, begin);
      return;
    }
    if (word == "switch" && is_op("(", 1)) {
      take();
      Stmt s = make_stmt(StmtKind::Control, "switch", begin);
      s.exprs.push_back(parse_paren_expr());
      s.children = parse_switch_body();
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    if (word == "synchronized" && is_op("(", 1)) {
      take();
      Stmt s = make_stmt(StmtKind::Control, "synchronized", begin);
      s.exprs.push_back(parse_paren_expr());
      s.children = parse_block();
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    if (word == "return") {
      take();
      Stmt s = make_stmt(StmtKind::Return, "return", begin);
      if (!is_op(";")) s.exprs.push_back(parse_expr());
      expect(";");
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    if (word == "throw" || (word == "yield" && !is_op("=", 1) && !is_op("(", 1) && !is_op(".", 1)) ||
        word == "assert") {
      take();
      Stmt s = make_stmt(StmtKind::Other, word, begin);
      s.exprs.push_back(parse_expr());
      if (word == "assert" && is_op(":")) {
        take();
        s.exprs.push_back(parse_expr());
      }
      expect(";");
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    if (word == "break" || word == "continue") {
      take();
      if (is_ident()) take();
      expect(";");
      Stmt s = make_stmt(StmtKind::Other, word, begin);
      finish(s);
      out.push_back(std::move(s));
      return;
    }
    {
      std::size_t save = pos_;
      parse_modifiers();
      if (at_type_decl_keyword()) {
        // Local type declaration: kept out of the model.
        take();
        expect_name();
        while (!is_op("{")) {
          if (at_end()) fail("unterminated local type");
          take();
        }
        skip_balanced("{", "}");
        Stmt s = make_stmt(StmtKind::Other, "class", begin);
        finish(s);
        out.push_back(std::move(s));
        return;
      }
      pos_ = save;
    }
    if (looks_like_local_decl()) {
      parse_local_decl_into(out);
      expect(";");
      return;
    }

    Stmt s = make_stmt(StmtKind::Expression, "", begin);
    s.exprs.push_back(parse_expr());
    expect(";");
    classify_expression_stmt(s);
    finish(s);
    out.push_back(std::move(s));
  }

  void classify_expression_stmt(Stmt& s) {
    const Expr& e = s.exprs.front();
    if (e.kind == ExprKind::Call && is_assertion_call(e, options_)) {
      s.kind = StmtKind::AssertCall;
    }
    if (e.kind == ExprKind::Assign && e.operands[0].kind == ExprKind::Name) {
      s.assigned_var = e.operands[0].text;
      if (e.text == "=") bind_outermost_call(s.exprs.front().operands[1], e.operands[0].text);
    }
  }

  void parse_for_into(std::vector<Stmt>& out, int begin) {
    take();
    expect("(");
    Stmt s = make_stmt(StmtKind::Control, "for", begin);
    std::vector<Stmt> init;
    bool enhanced = false;
    if (looks_like_local_decl()) {
      std::size_t save = pos_;
      parse_modifiers();
      std::string type = parse_type();
      std::string name = expect_name();
      if (is_op(":")) {
        take();
        enhanced = true;
        Stmt var = make_stmt(StmtKind::LocalDecl, "", begin);
        var.declared_type = type;
        var.assigned_var = name;
        finish(var);
        init.push_back(std::move(var));
        s.exprs.push_back(parse_expr());
      } else {
        pos_ = save;
        parse_local_decl_into(init);
      }
    } else if (!is_op(";")) {
      while (true) {
        Stmt e = make_stmt(StmtKind::Expression, "", begin);
        e.exprs.push_back(parse_expr());
        classify_expression_stmt(e);
        finish(e);
        init.push_back(std::move(e));
        if (!is_op(",")) break;
        take();
      }
    }
    if (!enhanced) {
      expect(";");
      if (!is_op(";")) s.exprs.push_back(parse_expr());
      expect(";");
      while (!is_op(")")) {
        s.exprs.push_back(parse_expr());
        if (!is_op(",")) break;
        take();
      }
    }
    expect(")");
    s.children = std::move(init);
    append(s.children, parse_body());
    finish(s);
    out.push_back(std::move(s));
  }

  void parse_try_into(std::vector<Stmt>& out, int begin) {
    take();
    Stmt s = make_stmt(StmtKind::Control, "try", begin);
    if (is_op("(")) {
      take();
      while (!is_op(")")) {
        if (looks_like_local_decl()) {
          parse_local_decl_into(s.children);
        } else {
          Stmt e = make_stmt(StmtKind::Expression, "", peek().line);
          e.exprs.push_back(parse_expr());
          finish(e);
          s.children.push_back(std::move(e));
        }
        if (is_op(";")) take();
      }
      expect(")");
    }
    append(s.children, parse_block());
    while (is_word("catch")) {
      take();
      expect("(");
      parse_modifiers();
      Stmt param = make_stmt(StmtKind::LocalDecl, "catch", peek().line);
      param.declared_type = parse_type();
      while (is_op("|")) {
        take();
        parse_type();
      }
      param.assigned_var = expect_name();
      expect(")");
      finish(param);
      s.children.push_back(std::move(param));
      append(s.children, parse_block());
    }
    if (is_word("finally")) {
      take();
      append(s.children, parse_block());
    }
    finish(s);
    out.push_back(std::move(s));
  }

  // Case labels are parsed and dropped; case bodies are flattened.
  std::vector<Stmt> parse_switch_body() {
    expect("{");
    std::vector<Stmt> out;
    while (!is_op("}")) {
      if (at_end()) fail("unbalanced switch");
      if (is_word("case") || is_word("default")) {
        bool is_case = is_word("case");
        take();
        if (is_case) skip_case_labels();
        if (is_op("->")) {
          take();
          if (is_op("{")) {
            append(out, parse_block());
          } else if (is_word("throw")) {
            parse_statement_into(out);
          } else {
            Stmt s = make_stmt(StmtKind::Expression, "", peek().line);
            s.exprs.push_back(parse_expr());
            expect(";");
            classify_expression_stmt(s);
            finish(s);
            out.push_back(std::move(s));
          }
        } else {
          expect(":");
        }
        continue;
      }
      parse_statement_into(out);
    }
    expect("}");
    return out;
  }

  void skip_case_labels() {
    int depth = 0;
    while (!at_end()) {
      if (depth == 0 && (is_op(":") || is_op("->"))) return;
      if (is_op("(")) ++depth;
      if (is_op(")")) --depth;
      take();
    }
    fail("unterminated case label");
  }

  // ---- expressions -----------------------------------------------------------

  Expr node(ExprKind kind, int line) {
    Expr e;
    e.kind = kind;
    e.line = line;
    return e;
  }

  Expr parse_paren_expr() {
    expect("(");
    Expr e = parse_expr();
    expect(")");
    return e;
  }

  Expr parse_variable_initializer() {
    if (is_op("{")) return parse_array_init();
    return parse_expr();
  }

  Expr parse_array_init() {
    Expr e = node(ExprKind::ArrayInit, peek().line);
    expect("{");
    while (!is_op("}")) {
      e.operands.push_back(parse_variable_initializer());
      if (!is_op(",")) break;
      take();
    }
    expect("}");
    return e;
  }

  Expr parse_expr() { return parse_assignment(); }

  bool is_lambda_start() const {
    if (is_ident() && is_op("->", 1)) return true;
    if (!is_op("(")) return false;
    int depth = 0;
    for (std::size_t k = 0; peek(k).kind != TokenKind::End; ++k) {
      if (is_op("(", k)) ++depth;
      if (is_op(")", k) && --depth == 0) return is_op("->", k + 1);
    }
    return false;
  }

  Expr parse_lambda() {
    Expr e = node(ExprKind::Lambda, peek().line);
    if (is_ident()) {
      e.params.push_back(take().text);
    } else {
      expect("(");
      std::string last;
      int depth = 0;
      while (depth > 0 || !is_op(")")) {
        if (at_end()) fail("unterminated lambda parameters");
        if (is_op("<") || is_op("(")) ++depth;
        if (is_op(">") || is_op(")")) --depth;
        if (depth == 0 && is_op(",")) {
          e.params.push_back(last);
        } else if (is_ident()) {
          last = peek().text;
        }
        take();
      }
      if (!last.empty()) e.params.push_back(last);
      expect(")");
    }
    expect("->");
    if (is_op("{")) {
      e.body = parse_block();
    } else {
      Stmt s = make_stmt(StmtKind::Expression, "lambda", peek().line);
      s.exprs.push_back(parse_expr());
      classify_expression_stmt(s);
      finish(s);
      e.body.push_back(std::move(s));
    }
    return e;
  }

  // Returns the assignment operator at the cursor and its token count.
  std::pair<std::string, int> assignment_op() const {
    for (std::string_view op : kAssignOps) {
      if (!op.empty() && is_op(op)) return {std::string(op), 1};
    }
    if (is_op(">") && adjacent(0)) {
      if (is_op(">=", 1)) return {">>=", 2};
      if (is_op(">", 1) && adjacent(1) && is_op(">=", 2)) return {">>>=", 3};
    }
    return {"", 0};
  }

  Expr parse_assignment() {
    if (is_lambda_start()) return parse_lambda();
    Expr lhs = parse_ternary();
    auto [op, count] = assignment_op();
    if (count == 0) return lhs;
    Expr e = node(ExprKind::Assign, peek().line);
    for (int i = 0; i < count; ++i) take();
    e.text = op;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(parse_assignment());
    return e;
  }

  Expr parse_ternary() {
    Expr cond = parse_binary(1);
    if (!is_op("?")) return cond;
    Expr e = node(ExprKind::Conditional, peek().line);
    take();
    e.operands.push_back(std::move(cond));
    e.operands.push_back(parse_assignment());
    expect(":");
    e.operands.push_back(parse_assignment());
    return e;
  }

  // Binary operator at the cursor: text, precedence and token count.
  struct BinOp {
    std::string text;
    int prec = 0;
    int tokens = 0;
  };

  BinOp binary_op() const {
    if (is_word("instanceof")) return {"instanceof", 7, 1};
    if (peek().kind != TokenKind::Operator) return {};
    const std::string& t = peek().text;
    if (t == ">") {
      if (adjacent(0) && is_op(">", 1)) {
        if (adjacent(1) && is_op(">", 2)) {
          if (adjacent(2) && is_op(">=", 3)) return {};
          return {">>>", 8, 3};
        }
        if (adjacent(1) && is_op(">=", 2)) return {};
        return {">>", 8, 2};
      }
      if (adjacent(0) && is_op(">=", 1)) return {};
      return {">", 7, 1};
    }
    static const std::array<std::pair<std::string_view, int>, 17> table = {{
        {"||", 1}, {"&&", 2}, {"|", 3},  {"^", 4},  {"&", 5},  {"==", 6},
        {"!=", 6}, {"<", 7},  {"<=", 7}, {">=", 7}, {"<<", 8}, {"+", 9},
        {"-", 9},  {"*", 10}, {"/", 10}, {"%", 10}, {"", 0},
    }};
    for (const auto& [op, prec] : table) {
      if (!op.empty() && t == op) return {t, prec, 1};
    }
    return {};
  }

  Expr parse_binary(int min_prec) {
    Expr lhs = parse_unary();
    while (true) {
      BinOp op = binary_op();
      if (op.tokens == 0 || op.prec < min_prec) return lhs;
      int line = peek().line;
      for (int i = 0; i < op.tokens; ++i) take();
      if (op.text == "instanceof") {
        Expr e = node(ExprKind::InstanceOf, line);
        if (is_word("final")) take();
        e.type = parse_type();
        if (is_name()) take();  // pattern binding
        e.operands.push_back(std::move(lhs));
        lhs = std::move(e);
        continue;
      }
      Expr e = node(ExprKind::Binary, line);
      e.text = op.text;
      e.operands.push_back(std::move(lhs));
      e.operands.push_back(parse_binary(op.prec + 1));
      lhs = std::move(e);
    }
  }

  bool cast_follows(std::size_t k) const {
    const Token& t = peek(k);
    switch (t.kind) {
      case TokenKind::Identifier:
        return t.text != "instanceof";
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral:
        return true;
      case TokenKind::Operator:
        return t.text == "(" || t.text == "!" || t.text == "~";
      case TokenKind::End:
        return false;
    }
    return false;
  }

  Expr parse_unary() {
    const int line = peek().line;
    for (std::string_view op : {"+", "-", "++", "--", "!", "~"}) {
      if (is_op(op)) {
        take();
        Expr e = node(ExprKind::Unary, line);
        e.text = std::string(op);
        e.operands.push_back(parse_unary());
        return e;
      }
    }
    if (is_op("(")) {
      std::size_t save = pos_;
      take();
      std::string type;
      bool primitive = is_ident() && kPrimitives.count(peek().text);
      if ((primitive || is_name()) && try_parse_type(type)) {
        while (is_op("&")) {
          take();
          std::string extra;
          if (!try_parse_type(extra)) break;
        }
        if (is_op(")") && (primitive ? !is_op(".", 1) : cast_follows(1))) {
          take();
          Expr e = node(ExprKind::Cast, line);
          e.type = type;
          e.operands.push_back(is_lambda_start() ? parse_lambda() : parse_unary());
          return e;
        }
      }
      pos_ = save;
    }
    return parse_postfix(parse_primary());
  }

  std::vector<Expr> parse_args() {
    expect("(");
    std::vector<Expr> args;
    while (!is_op(")")) {
      args.push_back(parse_expr());
      if (!is_op(",")) break;
      take();
    }
    expect(")");
    return args;
  }

  Expr make_call(std::string name, std::optional<Expr> target, int line) {
    Expr e = node(ExprKind::Call, line);
    e.text = std::move(name);
    if (target) {
      e.has_target = true;
      e.operands.push_back(std::move(*target));
    }
    for (auto& a : parse_args()) e.operands.push_back(std::move(a));
    e.call_id = next_call_id_++;
    return e;
  }

  Expr parse_primary() {
    const Token& t = peek();
    const int line = t.line;
    switch (t.kind) {
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral: {
        Expr e = node(ExprKind::Literal, line);
        e.text = t.text;
        e.type = literal_type(t);
        take();
        return e;
      }
      case TokenKind::End:
        fail("unexpected end of input in expression");
      case TokenKind::Operator:
        if (is_op("(")) return parse_paren_expr();
        fail("unexpected token in expression");
      case TokenKind::Identifier:
        break;
    }

    const std::string word = t.text;
    if (word == "true" || word == "false" || word == "null") {
      take();
      Expr e = node(ExprKind::Literal, line);
      e.text = word;
      e.type = word == "null" ? "null" : "boolean";
      return e;
    }
    if (word == "this" || word == "super") {
      take();
      if (is_op("(")) return make_call(word, std::nullopt, line);
      return node(word == "this" ? ExprKind::This : ExprKind::Super, line);
    }
    if (word == "new") {
      take();
      return parse_creator(line);
    }
    if (word == "switch" && is_op("(", 1)) {
      take();
      Expr e = node(ExprKind::Switch, line);
      e.operands.push_back(parse_paren_expr());
      e.body = parse_switch_body();
      return e;
    }
    if (kPrimitives.count(word)) {
      std::string type = parse_type();
      if (is_op("::")) {
        take();
        Expr e = node(ExprKind::MethodRef, line);
        e.type = type;
        e.text = take().text;
        return e;
      }
      expect(".");
      if (!is_word("class")) fail("expected 'class'");
      take();
      Expr e = node(ExprKind::ClassLiteral, line);
      e.type = type;
      return e;
    }
    take();
    if (is_op("(")) return make_call(word, std::nullopt, line);
    Expr e = node(ExprKind::Name, line);
    e.text = word;
    return e;
  }

  Expr parse_creator(int line) {
    if (is_op("<")) skip_type_args();
    while (is_op("@")) parse_annotation();
    std::string type;
    if (is_ident() && kPrimitives.count(peek().text)) {
      type = take().text;
    } else {
      type = expect_name();
      if (is_op("<")) skip_type_args();
      while (is_op(".") && is_ident(1)) {
        take();
        type += "." + take().text;
        if (is_op("<")) skip_type_args();
      }
    }
    if (is_op("[")) {
      Expr e = node(ExprKind::NewArray, line);
      while (is_op("[")) {
        take();
        if (!is_op("]")) e.operands.push_back(parse_expr());
        expect("]");
        type += "[]";
      }
      e.type = type;
      if (is_op("{")) e.operands.push_back(parse_array_init());
      return e;
    }
    Expr e = node(ExprKind::New, line);
    e.type = type;
    e.operands = parse_args();
    e.call_id = next_call_id_++;
    if (is_op("{")) {
      skip_balanced("{", "}");
      e.text = "{anonymous}";
    }
    return e;
  }

  Expr parse_postfix(Expr e) {
    while (true) {
      const int line = peek().line;
      if (is_op(".")) {
        take();
        if (is_op("<")) skip_type_args();
        if (is_word("new")) {
          take();
          e = parse_creator(line);
          continue;
        }
        if (is_word("class")) {
          take();
          Expr c = node(ExprKind::ClassLiteral, line);
          c.type = render(e);
          e = std::move(c);
          continue;
        }
        if (is_word("this") || is_word("super")) {
          bool is_this = is_word("this");
          take();
          e = node(is_this ? ExprKind::This : ExprKind::Super, line);
          continue;
        }
        std::string name = expect_name();
        if (is_op("(")) {
          e = make_call(name, std::move(e), line);
        } else {
          Expr f = node(ExprKind::FieldAccess, line);
          f.text = name;
          f.operands.push_back(std::move(e));
          e = std::move(f);
        }
      } else if (is_op("[")) {
        if (is_op("]", 1)) {
          std::string type = render(e);
          while (is_op("[") && is_op("]", 1)) {
            take();
            take();
            type += "[]";
          }
          if (is_op("::")) {
            take();
            Expr m = node(ExprKind::MethodRef, line);
            m.type = type;
            m.text = take().text;
            e = std::move(m);
            continue;
          }
          expect(".");
          if (!is_word("class")) fail("expected 'class'");
          take();
          Expr c = node(ExprKind::ClassLiteral, line);
          c.type = type;
          e = std::move(c);
          continue;
        }
        take();
        Expr a = node(ExprKind::ArrayAccess, line);
        a.operands.push_back(std::move(e));
        a.operands.push_back(parse_expr());
        expect("]");
        e = std::move(a);
      } else if (is_op("++") || is_op("--")) {
        Expr p = node(ExprKind::Postfix, line);
        p.text = take().text;
        p.operands.push_back(std::move(e));
        e = std::move(p);
      } else if (is_op("::")) {
        take();
        Expr m = node(ExprKind::MethodRef, line);
        m.has_target = true;
        m.operands.push_back(std::move(e));
        m.text = take().text;
        e = std::move(m);
      } else {
        return e;
      }
    }
  }

  static std::string literal_type(const Token& t) {
    switch (t.kind) {
      case TokenKind::StringLiteral:
        return "String";
      case TokenKind::CharLiteral:
        return "char";
      case TokenKind::FloatLiteral:
        return (t.text.back() == 'f' || t.text.back() == 'F') ? "float" : "double";
      case TokenKind::IntLiteral:
        return (t.text.back() == 'l' || t.text.back() == 'L') ? "long" : "int";
      default:
        return "";
    }
  }

  // ---- call bookkeeping -------------------------------------------------------

  static void collect_calls(const Expr& e, std::vector<CallExpr>& out) {
    if (e.kind == ExprKind::Lambda || e.kind == ExprKind::Switch) {
      if (e.kind == ExprKind::Switch) collect_calls(e.operands[0], out);
      return;
    }
    for (const auto& child : e.operands) collect_calls(child, out);
    if (!e.is_call_like()) return;
    CallExpr c;
    c.callee_name = e.kind == ExprKind::New ? std::string(simple_name_of(e.type)) : e.text;
    c.is_constructor = e.kind == ExprKind::New;
    if (const Expr* target = e.target()) c.receiver = render(*target);
    for (const auto& a : e.args()) c.args.push_back(a);
    c.id = e.call_id;
    c.line = e.line;
    out.push_back(std::move(c));
  }

  // Remembers which call id receives the assigned variable; applied by bind_calls.
  void bind_outermost_call(const Expr& value, const std::string& var) {
    const Expr* v = &value;
    while (v->kind == ExprKind::Cast) v = &v->operands[0];
    pending_binding_ = v->is_call_like() ? std::make_optional(std::make_pair(v->call_id, var))
                                         : std::nullopt;
  }

  void bind_calls(Stmt& s) {
    if (!pending_binding_) return;
    for (auto& c : s.calls) {
      if (c.id == pending_binding_->first) c.bound_to = pending_binding_->second;
    }
    pending_binding_.reset();
  }

  std::string_view source_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int last_line_ = 1;
  std::string file_;
  const ParseOptions& options_;
  CompilationUnit* unit_ = nullptr;
  int next_call_id_ = 0;
  std::optional<std::pair<int, std::string>> pending_binding_;
};

}  // namespace

bool is_assertion_call(const Expr& call, const ParseOptions& options) {
  if (call.kind != ExprKind::Call) return false;
  if (std::find(options.assertion_apis.begin(), options.assertion_apis.end(), call.text) ==
      options.assertion_apis.end()) {
    return false;
  }
  const Expr* target = call.target();
  if (target == nullptr) return true;
  if (target->kind != ExprKind::Name && target->kind != ExprKind::FieldAccess) return false;
  std::string qualifier = render(*target);
  auto simple = simple_name_of(qualifier);
  return simple == "Assert" || simple == "Assertions" || simple == "MatcherAssert" ||
         simple == "TestCase";
}

CompilationUnit parse_compilation_unit(std::string_view source, const std::string& file,
                                       const ParseOptions& options) {
  return Parser(source, file, options).parse_unit();
}

}  // namespace eagertest::java
