#pragma once

// Reader and writer for the Turtle subset used as the interchange format:
// @prefix/@base directives, IRIs and prefixed names, literals with language
// tags or datatypes, `a`, predicate/object lists, and the blank-node
// cardinality restriction under rdfs:subClassOf. Collections, blank-node
// labels and other nested blank nodes are rejected with a diagnostic.
//
// Parsing is two-pass: triples are read first, declarations collected, and
// only then are axioms resolved, so terms may be used before they are
// declared.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oceval/model.hpp"

namespace oceval {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

inline std::string rdf(std::string_view local) { return std::string(kRdf) + std::string(local); }
inline std::string rdfs(std::string_view local) { return std::string(kRdfs) + std::string(local); }
inline std::string owl(std::string_view local) { return std::string(kOwl) + std::string(local); }
inline std::string xsd(std::string_view local) { return std::string(kXsd) + std::string(local); }
}  // namespace vocab

struct ParseDiagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;

  bool isError() const { return severity == Severity::Error; }
};

inline std::string formatDiagnostic(const ParseDiagnostic& d, std::string_view file = {}) {
  std::ostringstream os;
  if (!file.empty()) os << file << ':';
  os << d.line << ':' << d.column << ": " << (d.isError() ? "error" : "warning") << ": " << d.message;
  return os.str();
}

struct ParseResult {
  std::optional<Ontology> ontology;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return ontology.has_value(); }
  std::size_t errorCount() const {
    std::size_t n = 0;
    for (const auto& d : diagnostics) n += d.isError();
    return n;
  }
};

namespace turtle {

enum class Tok {
  IriRef,
  PName,
  A,
  PrefixDirective,
  BaseDirective,
  String,
  LangTag,
  DatatypeMark,
  Integer,
  Decimal,
  Boolean,
  Dot,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  LParen,
  RParen,
  BlankLabel,
  End,
  Invalid,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;  // decoded value; error message for Invalid
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipTrivia();
      Token t = next();
      bool end = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (end) break;
    }
    return out;
  }

 private:
  bool atEnd() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (atEnd()) return;
    unsigned char c = static_cast<unsigned char>(src_[pos_++]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
  }

  void skipTrivia() {
    while (!atEnd()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!atEnd() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token make(Tok kind, std::string text, std::size_t line, std::size_t col) const {
    return Token{kind, std::move(text), line, col};
  }

  static bool isNameChar(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':' || c == '%' || c >= 0x80;
  }

  static void appendUtf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  Token next() {
    const std::size_t line = line_, col = column_;
    if (atEnd()) return make(Tok::End, {}, line, col);
    const char c = peek();
    switch (c) {
      case '<': return iriRef(line, col);
      case '"':
      case '\'': return string(line, col);
      case '@': return atWord(line, col);
      case '.': advance(); return make(Tok::Dot, ".", line, col);
      case ';': advance(); return make(Tok::Semicolon, ";", line, col);
      case ',': advance(); return make(Tok::Comma, ",", line, col);
      case '[': advance(); return make(Tok::LBracket, "[", line, col);
      case ']': advance(); return make(Tok::RBracket, "]", line, col);
      case '(': advance(); return make(Tok::LParen, "(", line, col);
      case ')': advance(); return make(Tok::RParen, ")", line, col);
      case '^':
        if (peek(1) == '^') {
          advance();
          advance();
          return make(Tok::DatatypeMark, "^^", line, col);
        }
        advance();
        return make(Tok::Invalid, "unexpected '^'", line, col);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(peek(1)))))
      return number(line, col);
    if (c == '_' && peek(1) == ':') {
      advance();
      advance();
      std::string name;
      while (!atEnd() && isNameChar(static_cast<unsigned char>(peek()))) {
        name += peek();
        advance();
      }
      return make(Tok::BlankLabel, "_:" + name, line, col);
    }
    if (isNameChar(static_cast<unsigned char>(c))) return word(line, col);
    advance();
    return make(Tok::Invalid, std::string("unexpected character '") + c + "'", line, col);
  }

  Token iriRef(std::size_t line, std::size_t col) {
    advance();
    std::string value;
    while (true) {
      if (atEnd() || peek() == '\n') return make(Tok::Invalid, "unterminated IRI", line, col);
      char c = peek();
      if (c == '>') {
        advance();
        return make(Tok::IriRef, value, line, col);
      }
      if (c == ' ' || c == '\t' || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`' || c == '\\' || static_cast<unsigned char>(c) < 0x20) {
        advance();
        return make(Tok::Invalid, "invalid character in IRI", line, col);
      }
      value += c;
      advance();
    }
  }

  Token string(std::size_t line, std::size_t col) {
    const char quote = peek();
    const bool longForm = peek(1) == quote && peek(2) == quote;
    for (int i = 0; i < (longForm ? 3 : 1); ++i) advance();
    std::string value;
    while (true) {
      if (atEnd()) return make(Tok::Invalid, "unterminated string literal", line, col);
      char c = peek();
      if (longForm && c == quote && peek(1) == quote && peek(2) == quote) {
        for (int i = 0; i < 3; ++i) advance();
        return make(Tok::String, value, line, col);
      }
      if (!longForm && c == quote) {
        advance();
        return make(Tok::String, value, line, col);
      }
      if (!longForm && (c == '\n' || c == '\r'))
        return make(Tok::Invalid, "line break in string literal", line, col);
      if (c == '\\') {
        advance();
        char e = peek();
        advance();
        switch (e) {
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u':
          case 'U': {
            int digits = e == 'u' ? 4 : 8;
            std::uint32_t cp = 0;
            for (int i = 0; i < digits; ++i) {
              char h = peek();
              if (!std::isxdigit(static_cast<unsigned char>(h)))
                return make(Tok::Invalid, "invalid unicode escape", line, col);
              cp = cp * 16 + static_cast<std::uint32_t>(
                                 std::isdigit(static_cast<unsigned char>(h))
                                     ? h - '0'
                                     : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
              advance();
            }
            if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
              return make(Tok::Invalid, "invalid unicode code point", line, col);
            appendUtf8(value, cp);
            break;
          }
          default: return make(Tok::Invalid, "invalid escape sequence", line, col);
        }
        continue;
      }
      value += c;
      advance();
    }
  }

  Token atWord(std::size_t line, std::size_t col) {
    advance();
    std::string w;
    while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
      w += peek();
      advance();
    }
    if (w == "prefix") return make(Tok::PrefixDirective, w, line, col);
    if (w == "base") return make(Tok::BaseDirective, w, line, col);
    if (w.empty() || !std::isalpha(static_cast<unsigned char>(w[0])) || w.back() == '-')
      return make(Tok::Invalid, "malformed language tag", line, col);
    return make(Tok::LangTag, w, line, col);
  }

  Token number(std::size_t line, std::size_t col) {
    std::string text;
    if (peek() == '+' || peek() == '-') {
      text += peek();
      advance();
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      text += peek();
      advance();
    }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      text += '.';
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        text += peek();
        advance();
      }
      return make(Tok::Decimal, text, line, col);
    }
    return make(Tok::Integer, text, line, col);
  }

  Token word(std::size_t line, std::size_t col) {
    std::size_t start = pos_;
    std::size_t end = start;
    while (end < src_.size() && isNameChar(static_cast<unsigned char>(src_[end]))) ++end;
    while (end > start && src_[end - 1] == '.') --end;  // a trailing '.' ends the statement
    std::string w(src_.substr(start, end - start));
    while (pos_ < end) advance();
    if (w == "a") return make(Tok::A, w, line, col);
    if (w == "true" || w == "false") return make(Tok::Boolean, w, line, col);
    if (w == "PREFIX" || w == "prefix") return make(Tok::PrefixDirective, w, line, col);
    if (w == "BASE" || w == "base") return make(Tok::BaseDirective, w, line, col);
    if (w.find(':') == std::string::npos)
      return make(Tok::Invalid, "unexpected word '" + w + "'", line, col);
    return make(Tok::PName, w, line, col);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct SimpleTerm {
  enum class Kind { Iri, Literal };
  Kind kind = Kind::Iri;
  Iri iri;
  Literal literal;
  bool numeric = false;  // written as a bare integer
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Term : SimpleTerm {
  bool isRestriction = false;
  std::vector<std::pair<SimpleTerm, SimpleTerm>> restriction;
};

struct RawTriple {
  SimpleTerm subject;
  SimpleTerm predicate;
  Term object;
  bool sparqlStyle = false;
};

class SyntaxError {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column)
      : message(std::move(message)), line(line), column(column) {}
  std::string message;
  std::size_t line;
  std::size_t column;
};

// Token stream to raw triples, recovering at the next '.' after an error.
class TripleReader {
 public:
  TripleReader(std::vector<Token> tokens, std::vector<ParseDiagnostic>& diags)
      : tokens_(std::move(tokens)), diags_(diags) {
    prefixes_["rdf"] = std::string(vocab::kRdf);
    prefixes_["rdfs"] = std::string(vocab::kRdfs);
    prefixes_["owl"] = std::string(vocab::kOwl);
    prefixes_["xsd"] = std::string(vocab::kXsd);
  }

  std::vector<RawTriple> run() {
    while (cur().kind != Tok::End) {
      try {
        statement();
      } catch (const SyntaxError& e) {
        diags_.push_back({ParseDiagnostic::Severity::Error, e.line, e.column, e.message});
        recover();
      }
    }
    return std::move(triples_);
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    if (t.kind == Tok::Invalid) throw SyntaxError(t.text, t.line, t.column);
    if (t.kind == Tok::End) throw SyntaxError(message + " before end of input", t.line, t.column);
    throw SyntaxError(message, t.line, t.column);
  }

  void expect(Tok kind, const char* what) {
    if (cur().kind != kind) fail(cur(), std::string("expected ") + what);
    take();
  }

  void recover() {
    while (cur().kind != Tok::End) {
      Tok k = take().kind;
      if (k == Tok::Dot) break;
    }
  }

  void statement() {
    const Token& t = cur();
    if (t.kind == Tok::PrefixDirective) {
      const bool sparql = t.text == "PREFIX";
      take();
      prefixDirective(sparql);
      return;
    }
    if (t.kind == Tok::BaseDirective) {
      bool sparql = t.text == "BASE";
      take();
      const Token& iri = cur();
      if (iri.kind != Tok::IriRef) fail(iri, "expected <IRI> after base directive");
      base_ = resolveRelative(take());
      if (!sparql) expect(Tok::Dot, "'.'");
      return;
    }
    SimpleTerm subject = subjectTerm();
    predicateObjectList(subject);
    expect(Tok::Dot, "'.' at end of statement");
  }

  void prefixDirective(bool sparql) {
    const Token& name = cur();
    if (name.kind != Tok::PName || name.text.back() != ':' ||
        name.text.find(':') != name.text.size() - 1)
      fail(name, "expected prefix name ending in ':'");
    std::string prefix = name.text.substr(0, name.text.size() - 1);
    take();
    const Token& iri = cur();
    if (iri.kind != Tok::IriRef) fail(iri, "expected <IRI> in prefix directive");
    prefixes_[prefix] = resolveRelative(take());
    if (!sparql) expect(Tok::Dot, "'.' after prefix directive");
  }

  std::string resolveRelative(const Token& t) const {
    const std::string& v = t.text;
    if (v.find(':') != std::string::npos) return v;
    if (base_.empty()) throw SyntaxError("relative IRI <" + v + "> without a base", t.line, t.column);
    return base_ + v;
  }

  SimpleTerm iriTerm(const Token& t) const {
    SimpleTerm term;
    term.line = t.line;
    term.column = t.column;
    if (t.kind == Tok::A) {
      term.iri = Iri(vocab::rdf("type"));
    } else if (t.kind == Tok::IriRef) {
      term.iri = Iri(resolveRelative(t));
    } else {
      auto colon = t.text.find(':');
      std::string prefix = t.text.substr(0, colon);
      auto it = prefixes_.find(prefix);
      if (it == prefixes_.end())
        throw SyntaxError("undefined prefix '" + prefix + ":'", t.line, t.column);
      term.iri = Iri(it->second + t.text.substr(colon + 1));
    }
    if (term.iri.empty()) throw SyntaxError("empty IRI", t.line, t.column);
    return term;
  }

  SimpleTerm subjectTerm() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::IriRef:
      case Tok::PName: return iriTerm(take());
      case Tok::LBracket: fail(t, "blank node subjects are not supported");
      case Tok::BlankLabel: fail(t, "blank node labels are not supported");
      case Tok::LParen: fail(t, "collections are not supported");
      default: fail(t, "expected subject IRI");
    }
  }

  SimpleTerm verb() {
    const Token& t = cur();
    if (t.kind == Tok::A || t.kind == Tok::IriRef || t.kind == Tok::PName) return iriTerm(take());
    fail(t, "expected predicate");
  }

  void predicateObjectList(const SimpleTerm& subject) {
    while (true) {
      SimpleTerm predicate = verb();
      while (true) {
        Term object = objectTerm(/*allowRestriction=*/true);
        triples_.push_back({subject, predicate, std::move(object), false});
        if (cur().kind != Tok::Comma) break;
        take();
      }
      if (cur().kind != Tok::Semicolon) return;
      while (cur().kind == Tok::Semicolon) take();
      if (cur().kind == Tok::Dot || cur().kind == Tok::RBracket) return;
    }
  }

  SimpleTerm literalTerm() {
    const Token& t = take();
    SimpleTerm term;
    term.kind = SimpleTerm::Kind::Literal;
    term.line = t.line;
    term.column = t.column;
    term.literal.text = t.text;
    switch (t.kind) {
      case Tok::Integer:
        term.literal.datatype = vocab::xsd("integer");
        term.numeric = true;
        return term;
      case Tok::Decimal: term.literal.datatype = vocab::xsd("decimal"); return term;
      case Tok::Boolean: term.literal.datatype = vocab::xsd("boolean"); return term;
      default: break;
    }
    if (cur().kind == Tok::LangTag) {
      term.literal.lang = take().text;
    } else if (cur().kind == Tok::DatatypeMark) {
      take();
      const Token& dt = cur();
      if (dt.kind != Tok::IriRef && dt.kind != Tok::PName) fail(dt, "expected datatype IRI after '^^'");
      term.literal.datatype = iriTerm(take()).iri.str();
    }
    return term;
  }

  Term objectTerm(bool allowRestriction) {
    const Token& t = cur();
    Term term;
    switch (t.kind) {
      case Tok::IriRef:
      case Tok::PName:
        static_cast<SimpleTerm&>(term) = iriTerm(take());
        return term;
      case Tok::String:
      case Tok::Integer:
      case Tok::Decimal:
      case Tok::Boolean:
        static_cast<SimpleTerm&>(term) = literalTerm();
        return term;
      case Tok::LBracket: {
        if (!allowRestriction) fail(t, "nested blank nodes are not supported");
        term.isRestriction = true;
        term.line = t.line;
        term.column = t.column;
        take();
        while (cur().kind != Tok::RBracket) {
          SimpleTerm predicate = verb();
          Term value = objectTerm(false);
          term.restriction.emplace_back(predicate, static_cast<SimpleTerm&>(value));
          if (cur().kind == Tok::Semicolon) {
            while (cur().kind == Tok::Semicolon) take();
          } else if (cur().kind != Tok::RBracket) {
            fail(cur(), "expected ';' or ']' in restriction");
          }
        }
        take();
        return term;
      }
      case Tok::BlankLabel: fail(t, "blank node labels are not supported");
      case Tok::LParen: fail(t, "collections are not supported");
      default: fail(t, "expected object");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseDiagnostic>& diags_;
  std::map<std::string, std::string> prefixes_;
  std::string base_;
  std::vector<RawTriple> triples_;
};

// Raw triples to a validated ontology.
class Resolver {
 public:
  Resolver(std::vector<RawTriple> triples, std::vector<ParseDiagnostic>& diags)
      : triples_(std::move(triples)), diags_(diags) {}

  std::optional<Ontology> run() {
    declare();
    for (const auto& t : triples_) {
      if (isDeclaration(t)) continue;
      translate(t);
    }
    for (const auto& d : diags_)
      if (d.isError()) return std::nullopt;
    try {
      return builder_.build();
    } catch (const ModelError& e) {
      diags_.push_back({ParseDiagnostic::Severity::Error, 1, 1, e.what()});
      return std::nullopt;
    }
  }

 private:
  static const std::string& rdfType() {
    static const std::string s = vocab::rdf("type");
    return s;
  }

  void error(const SimpleTerm& at, std::string message) {
    diags_.push_back({ParseDiagnostic::Severity::Error, at.line, at.column, std::move(message)});
  }
  void warning(const SimpleTerm& at, std::string message) {
    diags_.push_back({ParseDiagnostic::Severity::Warning, at.line, at.column, std::move(message)});
  }

  static std::optional<EntityKind> declarationKind(const Term& object) {
    if (object.kind != SimpleTerm::Kind::Iri || object.isRestriction) return std::nullopt;
    const auto& v = object.iri.str();
    if (v == vocab::owl("Class")) return EntityKind::Class;
    if (v == vocab::owl("ObjectProperty")) return EntityKind::ObjectProperty;
    if (v == vocab::owl("DatatypeProperty")) return EntityKind::DataProperty;
    if (v == vocab::owl("NamedIndividual")) return EntityKind::Individual;
    return std::nullopt;
  }

  static bool isDeclaration(const RawTriple& t) {
    return t.predicate.iri.str() == rdfType() && declarationKind(t.object).has_value();
  }

  void declareAs(const SimpleTerm& at, EntityKind kind) {
    auto existing = builder_.kindOf(at.iri);
    if (existing && *existing != kind) {
      error(at, at.iri.str() + " is declared as both " + std::string(to_string(*existing)) + " and " +
                    std::string(to_string(kind)));
      return;
    }
    builder_.declare(at.iri, kind);
  }

  void declare() {
    for (const auto& t : triples_)
      if (isDeclaration(t)) declareAs(t.subject, *declarationKind(t.object));
    // `x a C` with C a declared class makes an undeclared x an individual.
    for (const auto& t : triples_) {
      if (t.predicate.iri.str() != rdfType() || t.object.isRestriction ||
          t.object.kind != SimpleTerm::Kind::Iri)
        continue;
      if (builder_.kindOf(t.object.iri) == EntityKind::Class && !builder_.kindOf(t.subject.iri))
        builder_.addIndividual(t.subject.iri);
    }
  }

  // Declared term of one of the given kinds, else an error diagnostic.
  bool require(const SimpleTerm& term, std::initializer_list<EntityKind> kinds, std::string_view role) {
    if (term.kind != SimpleTerm::Kind::Iri) {
      error(term, "expected " + std::string(role) + ", found a literal");
      return false;
    }
    auto kind = builder_.kindOf(term.iri);
    if (!kind) {
      error(term, "undeclared " + std::string(role) + " " + term.iri.str());
      return false;
    }
    for (auto k : kinds)
      if (k == *kind) return true;
    error(term, term.iri.str() + " is a " + std::string(to_string(*kind)) + ", expected " +
                    std::string(role));
    return false;
  }

  bool requireLiteral(const Term& term, std::string_view predicate) {
    if (term.kind == SimpleTerm::Kind::Literal && !term.isRestriction) return true;
    error(term, std::string(predicate) + " expects a literal value");
    return false;
  }

  bool requirePlain(const Term& term, std::string_view predicate) {
    if (!term.isRestriction) return true;
    error(term, "a restriction is only allowed as the object of rdfs:subClassOf, not " +
                    std::string(predicate));
    return false;
  }

  static bool isVocabulary(const std::string& iri) {
    return iri.starts_with(vocab::kRdf) || iri.starts_with(vocab::kRdfs) || iri.starts_with(vocab::kOwl) ||
           iri.starts_with(vocab::kXsd);
  }

  void translate(const RawTriple& t) {
    using K = EntityKind;
    const std::string& p = t.predicate.iri.str();
    const SimpleTerm& s = t.subject;
    const Term& o = t.object;

    if (p == rdfType()) {
      if (!requirePlain(o, "rdf:type")) return;
      if (o.kind == SimpleTerm::Kind::Literal) {
        error(o, "rdf:type expects a class, found a literal");
        return;
      }
      const auto& v = o.iri.str();
      if (v == vocab::owl("Ontology")) return;
      if (v == vocab::owl("Restriction")) {
        error(o, "owl:Restriction is only supported as a blank node under rdfs:subClassOf");
        return;
      }
      if (isVocabulary(v) && !builder_.kindOf(o.iri)) {
        warning(o, "unsupported type " + v + " skipped");
        return;
      }
      if (!require(o, {K::Class}, "class")) return;
      if (!require(s, {K::Individual}, "individual")) return;
      builder_.add(typeAssertion(s.iri, o.iri));
      return;
    }
    if (p == vocab::rdfs("subClassOf")) {
      if (!require(s, {K::Class}, "class")) return;
      if (o.isRestriction) {
        restriction(s, o);
        return;
      }
      if (!require(o, {K::Class}, "class")) return;
      builder_.add(subClassOf(s.iri, o.iri));
      return;
    }
    if (p == vocab::owl("equivalentClass") || p == vocab::owl("disjointWith")) {
      if (!requirePlain(o, p)) return;
      if (!require(s, {K::Class}, "class") || !require(o, {K::Class}, "class")) return;
      builder_.add(pairAxiom(p == vocab::owl("disjointWith") ? AxiomKind::DisjointClasses
                                                             : AxiomKind::EquivalentClasses,
                             s.iri, o.iri));
      return;
    }
    if (p == vocab::rdfs("subPropertyOf") || p == vocab::owl("equivalentProperty")) {
      if (!requirePlain(o, p)) return;
      if (!require(s, {K::ObjectProperty, K::DataProperty}, "property")) return;
      auto kind = *builder_.kindOf(s.iri);
      if (!require(o, {kind}, std::string(to_string(kind)))) return;
      if (p == vocab::rdfs("subPropertyOf")) {
        builder_.add(subPropertyOf(s.iri, o.iri));
      } else {
        builder_.add(pairAxiom(AxiomKind::EquivalentProperties, s.iri, o.iri));
      }
      return;
    }
    if (p == vocab::owl("inverseOf")) {
      if (!requirePlain(o, p)) return;
      if (!require(s, {K::ObjectProperty}, "object property") ||
          !require(o, {K::ObjectProperty}, "object property"))
        return;
      builder_.add(pairAxiom(AxiomKind::InverseOf, s.iri, o.iri));
      return;
    }
    if (p == vocab::rdfs("domain")) {
      if (!requirePlain(o, p)) return;
      if (!require(s, {K::ObjectProperty, K::DataProperty}, "property") || !require(o, {K::Class}, "class")) return;
      builder_.add(domainOf(s.iri, o.iri));
      return;
    }
    if (p == vocab::rdfs("range")) {
      if (!requirePlain(o, p)) return;
      if (!require(s, {K::ObjectProperty, K::DataProperty}, "property")) return;
      if (builder_.kindOf(s.iri) == K::ObjectProperty) {
        if (!require(o, {K::Class}, "class")) return;
      } else if (o.kind != SimpleTerm::Kind::Iri) {
        error(o, "rdfs:range expects a datatype IRI");
        return;
      } else if (auto k = builder_.kindOf(o.iri)) {
        error(o, o.iri.str() + " is a " + std::string(to_string(*k)) +
                     ", expected a datatype for a data property range");
        return;
      }
      builder_.add(rangeOf(s.iri, o.iri));
      return;
    }
    if (p == vocab::rdfs("label") || p == vocab::rdfs("comment")) {
      if (!require(s, {K::Class, K::ObjectProperty, K::DataProperty, K::Individual}, "entity")) return;
      if (!requireLiteral(o, p)) return;
      Axiom a;
      a.kind = p == vocab::rdfs("label") ? AxiomKind::Label : AxiomKind::Comment;
      a.subject = s.iri;
      a.literal = o.literal;
      builder_.add(std::move(a));
      return;
    }
    if (p == vocab::owl("imports")) {
      warning(t.predicate, "owl:imports is not resolved; the imported ontology is ignored");
      return;
    }
    if (auto kind = builder_.kindOf(t.predicate.iri)) {
      if (!isProperty(*kind)) {
        error(t.predicate, t.predicate.iri.str() + " is a " + std::string(to_string(*kind)) +
                               ", not a property");
        return;
      }
      if (!requirePlain(o, p)) return;
      if (!require(s, {K::Individual}, "individual")) return;
      if (*kind == K::ObjectProperty) {
        if (!require(o, {K::Individual}, "individual")) return;
        builder_.add(propertyAssertion(s.iri, t.predicate.iri, o.iri));
      } else {
        if (!requireLiteral(o, p)) return;
        builder_.add(propertyAssertion(s.iri, t.predicate.iri, o.literal));
      }
      return;
    }
    warning(t.predicate, "unknown predicate " + p + " skipped");
  }

  static std::optional<unsigned> cardinalityValue(const SimpleTerm& v) {
    if (v.kind != SimpleTerm::Kind::Literal) return std::nullopt;
    const auto& dt = v.literal.datatype;
    if (!v.numeric && dt != vocab::xsd("nonNegativeInteger") && dt != vocab::xsd("integer") &&
        !(dt.empty() && v.literal.lang.empty()))
      return std::nullopt;
    const auto& text = v.literal.text;
    if (text.empty() || text.size() > 9) return std::nullopt;
    unsigned n = 0;
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      n = n * 10 + static_cast<unsigned>(c - '0');
    }
    return n;
  }

  void restriction(const SimpleTerm& cls, const Term& r) {
    std::optional<SimpleTerm> onProperty;
    std::vector<std::pair<AxiomKind, unsigned>> bounds;
    bool ok = true;
    for (const auto& [pred, value] : r.restriction) {
      const auto& p = pred.iri.str();
      if (p == rdfType()) {
        if (value.kind != SimpleTerm::Kind::Iri || value.iri.str() != vocab::owl("Restriction")) {
          error(value, "only owl:Restriction blank nodes are supported");
          ok = false;
        }
      } else if (p == vocab::owl("onProperty")) {
        if (onProperty) {
          error(pred, "restriction has more than one owl:onProperty");
          ok = false;
        }
        onProperty = value;
      } else if (p == vocab::owl("minCardinality") || p == vocab::owl("maxCardinality") ||
                 p == vocab::owl("cardinality")) {
        auto n = cardinalityValue(value);
        if (!n) {
          error(value, "cardinality must be a non-negative integer");
          ok = false;
          continue;
        }
        if (p != vocab::owl("maxCardinality")) bounds.emplace_back(AxiomKind::MinCardinality, *n);
        if (p != vocab::owl("minCardinality")) bounds.emplace_back(AxiomKind::MaxCardinality, *n);
      } else {
        error(pred, "unsupported restriction predicate " + p);
        ok = false;
      }
    }
    if (!onProperty) {
      error(r, "restriction without owl:onProperty");
      return;
    }
    if (bounds.empty()) {
      error(r, "restriction without a cardinality bound");
      return;
    }
    if (!ok || !require(*onProperty, {EntityKind::ObjectProperty, EntityKind::DataProperty}, "property"))
      return;
    for (const auto& [kind, n] : bounds) builder_.add(cardinality(kind, cls.iri, onProperty->iri, n));
  }

  std::vector<RawTriple> triples_;
  std::vector<ParseDiagnostic>& diags_;
  OntologyBuilder builder_;
};

}  // namespace turtle

inline ParseResult parseOntology(std::string_view document) {
  ParseResult result;
  auto tokens = turtle::Lexer(document).run();
  auto triples = turtle::TripleReader(std::move(tokens), result.diagnostics).run();
  result.ontology = turtle::Resolver(std::move(triples), result.diagnostics).run();
  if (result.errorCount() > 0) result.ontology.reset();
  return result;
}

namespace turtle {

inline std::string quoteLiteral(const Literal& lit) {
  std::string out = "\"";
  for (unsigned char c : lit.text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          static const char* hex = "0123456789ABCDEF";
          out += "\\u00";
          out += hex[c >> 4];
          out += hex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
  if (!lit.lang.empty()) {
    out += '@' + lit.lang;
  } else if (!lit.datatype.empty()) {
    out += "^^<" + lit.datatype + ">";
  }
  return out;
}

inline std::string ref(const Iri& iri) { return "<" + iri.str() + ">"; }

}  // namespace turtle

// Deterministic output: prefixes, declarations sorted by IRI, then axioms
// sorted by kind and subject. Repeated axioms are written once per occurrence.
inline std::string serializeOntology(const Ontology& o) {
  using turtle::ref;
  std::ostringstream os;
  os << "@prefix owl: <" << vocab::kOwl << "> .\n";
  os << "@prefix rdf: <" << vocab::kRdf << "> .\n";
  os << "@prefix rdfs: <" << vocab::kRdfs << "> .\n";
  os << "@prefix xsd: <" << vocab::kXsd << "> .\n";

  std::vector<std::pair<Iri, const char*>> decls;
  for (const auto& c : o.classes()) decls.emplace_back(c, "owl:Class");
  for (const auto& p : o.objectProperties()) decls.emplace_back(p, "owl:ObjectProperty");
  for (const auto& p : o.dataProperties()) decls.emplace_back(p, "owl:DatatypeProperty");
  for (const auto& [x, ind] : o.individuals()) decls.emplace_back(x, "owl:NamedIndividual");
  std::sort(decls.begin(), decls.end());
  if (!decls.empty()) os << '\n';
  for (const auto& [iri, keyword] : decls) os << ref(iri) << " a " << keyword << " .\n";

  if (!o.axioms().empty()) os << '\n';
  for (const auto& a : o.axioms()) {
    std::string line;
    switch (a.kind) {
      case AxiomKind::SubClassOf: line = ref(a.subject) + " rdfs:subClassOf " + ref(a.object); break;
      case AxiomKind::EquivalentClasses:
        line = ref(a.subject) + " owl:equivalentClass " + ref(a.object);
        break;
      case AxiomKind::DisjointClasses: line = ref(a.subject) + " owl:disjointWith " + ref(a.object); break;
      case AxiomKind::SubPropertyOf: line = ref(a.subject) + " rdfs:subPropertyOf " + ref(a.object); break;
      case AxiomKind::EquivalentProperties:
        line = ref(a.subject) + " owl:equivalentProperty " + ref(a.object);
        break;
      case AxiomKind::InverseOf: line = ref(a.subject) + " owl:inverseOf " + ref(a.object); break;
      case AxiomKind::Domain: line = ref(a.subject) + " rdfs:domain " + ref(a.object); break;
      case AxiomKind::Range: line = ref(a.subject) + " rdfs:range " + ref(a.object); break;
      case AxiomKind::TypeAssertion: line = ref(a.subject) + " a " + ref(a.object); break;
      case AxiomKind::PropertyAssertion:
        line = ref(a.subject) + " " + ref(a.property) + " " +
               (a.literal ? turtle::quoteLiteral(*a.literal) : ref(a.object));
        break;
      case AxiomKind::MinCardinality:
      case AxiomKind::MaxCardinality:
        line = ref(a.subject) + " rdfs:subClassOf [ a owl:Restriction ; owl:onProperty " + ref(a.property) +
               (a.kind == AxiomKind::MinCardinality ? " ; owl:minCardinality " : " ; owl:maxCardinality ") +
               std::to_string(*a.cardinality) + " ]";
        break;
      case AxiomKind::Label: line = ref(a.subject) + " rdfs:label " + turtle::quoteLiteral(*a.literal); break;
      case AxiomKind::Comment:
        line = ref(a.subject) + " rdfs:comment " + turtle::quoteLiteral(*a.literal);
        break;
    }
    for (std::size_t i = 0; i < o.occurrences(a); ++i) os << line << " .\n";
  }
  return os.str();
}

}  // namespace oceval
