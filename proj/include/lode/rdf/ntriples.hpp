#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "lode/rdf/repository.hpp"

namespace lode {

namespace detail {

inline void append_utf8(std::string& out, char32_t cp) {
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

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t lineno) : s_(line), lineno_(lineno) {}

  Triple parse(Origin origin) {
    skip_ws();
    Iri subject = iri("subject");
    skip_ws();
    Iri predicate = iri("predicate");
    skip_ws();
    Term object = term();
    skip_ws();
    if (!consume('.')) fail("expected '.' terminating the statement");
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] != '#') fail("unexpected text after '.'");
    return Triple{std::move(subject), std::move(predicate), std::move(object), std::move(origin)};
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(ErrorCode::MalformedLine, lineno_, reason); }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Iri iri(const char* what) {
    if (s_.compare(pos_, 2, "_:") == 0) fail(std::string("blank node ") + what + " not supported");
    if (!consume('<')) fail(std::string("expected '<' starting the ") + what);
    auto end = s_.find('>', pos_);
    if (end == std::string_view::npos) fail(std::string("unterminated IRI in ") + what);
    auto text = s_.substr(pos_, end - pos_);
    pos_ = end + 1;
    if (!Iri::is_valid(text)) fail(std::string("invalid IRI <") + std::string(text) + ">");
    return Iri(std::string(text));
  }

  char32_t hex(std::size_t digits) {
    if (pos_ + digits > s_.size()) fail("truncated unicode escape");
    char32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      char c = s_[pos_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<char32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<char32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<char32_t>(c - 'A' + 10);
      else fail("invalid hex digit in unicode escape");
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("invalid code point in unicode escape");
    return cp;
  }

  Term term() {
    if (pos_ < s_.size() && s_[pos_] == '<') return iri("object");
    if (s_.compare(pos_, 2, "_:") == 0) fail("blank node object not supported");
    if (!consume('"')) fail("expected IRI or literal object");
    std::string lexical;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated literal");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lexical += c;
        continue;
      }
      if (pos_ >= s_.size()) fail("dangling escape");
      char e = s_[pos_++];
      switch (e) {
        case 't': lexical += '\t'; break;
        case 'b': lexical += '\b'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 'f': lexical += '\f'; break;
        case '"': lexical += '"'; break;
        case '\'': lexical += '\''; break;
        case '\\': lexical += '\\'; break;
        case 'u': append_utf8(lexical, hex(4)); break;
        case 'U': append_utf8(lexical, hex(8)); break;
        default: fail(std::string("unknown escape \\") + e);
      }
    }
    if (consume('@')) {
      auto start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
      auto tag = s_.substr(start, pos_ - start);
      if (tag.empty() || !std::isalpha(static_cast<unsigned char>(tag.front())) || tag.back() == '-')
        fail("invalid language tag");
      return Literal(std::move(lexical), std::string(tag));
    }
    if (s_.compare(pos_, 2, "^^") == 0) {
      pos_ += 2;
      return Literal(std::move(lexical), std::nullopt, iri("datatype"));
    }
    return Literal(std::move(lexical));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t lineno_;
};

}  // namespace detail

// Parses one N-Triples statement line.
inline Triple parse_ntriples_line(std::string_view line, std::size_t lineno = 1, Origin origin = Origin::local()) {
  return detail::LineParser(line, lineno).parse(std::move(origin));
}

// Adds every statement of the stream to repo. Stops at the first malformed
// line with ParseError carrying its 1-based number. Returns statements read.
inline std::size_t read_ntriples(std::istream& in, Repository& repo, const Origin& origin = Origin::local()) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    repo.add(parse_ntriples_line(view, lineno, origin));
    ++count;
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failure");
  return count;
}

inline Repository parse_ntriples(std::istream& in, const Origin& origin = Origin::local(), RepoConfig config = {}) {
  Repository repo(std::move(config));
  read_ntriples(in, repo, origin);
  return repo;
}

inline Repository parse_ntriples(std::string_view text, const Origin& origin = Origin::local(), RepoConfig config = {}) {
  std::istringstream in{std::string(text)};
  return parse_ntriples(in, origin, std::move(config));
}

// One statement per line, insertion order.
inline void write_ntriples(std::ostream& out, const Repository& repo) {
  repo.for_each([&](const Triple& t) { out << to_ntriples(t) << '\n'; });
}

inline std::string to_ntriples(const Repository& repo) {
  std::ostringstream out;
  write_ntriples(out, repo);
  return out.str();
}

}  // namespace lode
