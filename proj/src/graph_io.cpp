#include <cctype>
#include <sstream>

#include <json.hpp>

#include "racg/error.hpp"
#include "racg/graph.hpp"

namespace racg {

namespace {

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool has_space(std::string_view s) {
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c))) return true;
  return false;
}

DefiningGraph parse_edge_list(std::string_view text) {
  GraphBuilder b;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t sep = line.find("--");
    if (sep == std::string_view::npos) throw ParseError(line_no, "expected 'A -- B'");
    std::string_view lhs = trim(line.substr(0, sep));
    std::string_view rhs = trim(line.substr(sep + 2));
    if (lhs.empty() || rhs.empty()) throw ParseError(line_no, "missing endpoint");
    if (rhs.find("--") != std::string_view::npos) throw ParseError(line_no, "more than one edge on a line");
    if (has_space(lhs) || has_space(rhs)) throw ParseError(line_no, "vertex labels may not contain whitespace");
    try {
      b.add_edge(lhs, rhs);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SelfLoop)
        throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at '" + std::string(lhs) + "'");
      throw;
    }
  }
  return b.build();
}

// Tokenizer for the undirected DOT subset.
struct DotToken {
  enum Kind { Id, Punct, End } kind;
  std::string text;
  int line;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view s) : s_(s) {}

  DotToken next() {
    skip();
    if (i_ >= s_.size()) return {DotToken::End, "", line_};
    char c = s_[i_];
    if (c == '-' && i_ + 1 < s_.size() && (s_[i_ + 1] == '-' || s_[i_ + 1] == '>')) {
      i_ += 2;
      return {DotToken::Punct, std::string(s_.substr(i_ - 2, 2)), line_};
    }
    if (std::string_view("{}[];,=:").find(c) != std::string_view::npos) {
      ++i_;
      return {DotToken::Punct, std::string(1, c), line_};
    }
    if (c == '"') {
      int start_line = line_;
      std::string out;
      ++i_;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\' && i_ + 1 < s_.size() && s_[i_ + 1] == '"') ++i_;
        if (s_[i_] == '\n') ++line_;
        out += s_[i_++];
      }
      if (i_ >= s_.size()) throw ParseError(start_line, "unterminated string");
      ++i_;
      return {DotToken::Id, out, start_line};
    }
    if (c == '<') throw ParseError(line_, "HTML labels are not supported");
    std::string out;
    while (i_ < s_.size()) {
      char d = s_[i_];
      bool ok = std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.' ||
                static_cast<unsigned char>(d) >= 0x80 || (d == '-' && !(i_ + 1 < s_.size() && (s_[i_ + 1] == '-' || s_[i_ + 1] == '>')));
      if (!ok) break;
      out += d;
      ++i_;
    }
    if (out.empty()) throw ParseError(line_, std::string("unexpected character '") + c + "'");
    return {DotToken::Id, out, line_};
  }

 private:
  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else if (c == '#' && (i_ == 0 || s_[i_ - 1] == '\n')) {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else if (s_.substr(i_, 2) == "//") {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else if (s_.substr(i_, 2) == "/*") {
        std::size_t end = s_.find("*/", i_ + 2);
        if (end == std::string_view::npos) throw ParseError(line_, "unterminated comment");
        for (std::size_t k = i_; k < end; ++k)
          if (s_[k] == '\n') ++line_;
        i_ = end + 2;
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1;
};

bool keyword(const DotToken& t, std::string_view kw) {
  if (t.kind != DotToken::Id || t.text.size() != kw.size()) return false;
  for (std::size_t i = 0; i < kw.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(t.text[i])) != kw[i]) return false;
  return true;
}

DefiningGraph parse_dot(std::string_view text) {
  DotLexer lex(text);
  GraphBuilder b;
  DotToken t = lex.next();
  if (keyword(t, "strict")) t = lex.next();
  if (keyword(t, "digraph")) throw ParseError(t.line, "directed graphs are not supported");
  if (!keyword(t, "graph")) throw ParseError(t.line, "expected 'graph'");
  t = lex.next();
  if (t.kind == DotToken::Id) t = lex.next();
  if (t.text != "{" || t.kind != DotToken::Punct) throw ParseError(t.line, "expected '{'");

  auto skip_attrs = [&](DotToken& tok) {
    while (tok.kind == DotToken::Punct && tok.text == "[") {
      for (tok = lex.next(); !(tok.kind == DotToken::Punct && tok.text == "]"); tok = lex.next())
        if (tok.kind == DotToken::End) throw ParseError(tok.line, "unterminated attribute list");
      tok = lex.next();
    }
  };

  t = lex.next();
  while (true) {
    if (t.kind == DotToken::End) throw ParseError(t.line, "missing '}'");
    if (t.kind == DotToken::Punct && t.text == "}") break;
    if (t.kind == DotToken::Punct && t.text == ";") {
      t = lex.next();
      continue;
    }
    if (t.kind != DotToken::Id) throw ParseError(t.line, "unexpected '" + t.text + "'");
    if (keyword(t, "subgraph")) throw ParseError(t.line, "subgraphs are not supported");
    if (keyword(t, "node") || keyword(t, "edge") || keyword(t, "graph")) {
      t = lex.next();
      skip_attrs(t);
      continue;
    }
    std::string first = t.text;
    int first_line = t.line;
    t = lex.next();
    if (t.kind == DotToken::Punct && t.text == "=") {
      t = lex.next();  // graph attribute `key = value`
      if (t.kind != DotToken::Id) throw ParseError(t.line, "expected attribute value");
      t = lex.next();
      continue;
    }
    if (t.kind == DotToken::Punct && t.text == ":") throw ParseError(t.line, "ports are not supported");
    std::vector<std::string> chain{first};
    while (t.kind == DotToken::Punct && (t.text == "--" || t.text == "->")) {
      if (t.text == "->") throw ParseError(t.line, "directed edge '->' is not supported");
      t = lex.next();
      if (t.kind != DotToken::Id) throw ParseError(t.line, "expected vertex after '--'");
      chain.push_back(t.text);
      t = lex.next();
    }
    skip_attrs(t);
    if (chain.size() == 1) {
      b.add_vertex(first);
    } else {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i] == chain[i + 1])
          throw Error(ErrorCode::SelfLoop, "line " + std::to_string(first_line) + ": self-loop at '" + chain[i] + "'");
        b.add_edge(chain[i], chain[i + 1]);
      }
    }
  }
  t = lex.next();
  if (t.kind != DotToken::End) throw ParseError(t.line, "trailing content after '}'");
  return b.build();
}

int line_of_offset(std::string_view text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

DefiningGraph parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  if (!j.is_object()) throw ParseError(1, "expected a JSON object");
  GraphBuilder b;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError(1, "'vertices' must be an array");
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw ParseError(1, "vertex labels must be strings");
      const auto& s = v.get_ref<const std::string&>();
      if (b.find(s)) throw ParseError(1, "duplicate vertex '" + s + "'");
      b.add_vertex(s);
    }
  }
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError(1, "missing 'edges' array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError(1, "each edge must be a pair of strings");
    const auto& x = e[0].get_ref<const std::string&>();
    const auto& y = e[1].get_ref<const std::string&>();
    if (!b.find(x)) throw ParseError(1, "edge references undeclared vertex '" + x + "'");
    if (!b.find(y)) throw ParseError(1, "edge references undeclared vertex '" + y + "'");
    b.add_edge(x, y);
  }
  return b.build();
}

std::string dot_id(const std::string& s) {
  bool plain = !s.empty() && !std::isdigit(static_cast<unsigned char>(s[0]));
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) plain = false;
  if (plain) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

DefiningGraph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::DotSubset: return parse_dot(text);
    case GraphFormat::Json: return parse_json(text);
  }
  throw ParseError(0, "unknown format");
}

GraphFormat detect_format(std::string_view text) {
  // Skip leading blank and comment lines before sniffing.
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && (text[i] == '#' || text.substr(i, 2) == "//")) {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    break;
  }
  std::string_view rest = text.substr(i);
  if (!rest.empty() && rest[0] == '{') return GraphFormat::Json;
  auto starts = [&](std::string_view kw) {
    if (rest.size() < kw.size()) return false;
    for (std::size_t k = 0; k < kw.size(); ++k)
      if (std::tolower(static_cast<unsigned char>(rest[k])) != kw[k]) return false;
    return rest.size() == kw.size() || !std::isalnum(static_cast<unsigned char>(rest[kw.size()]));
  };
  if (starts("graph") || starts("strict") || starts("digraph")) return GraphFormat::DotSubset;
  return GraphFormat::EdgeList;
}

std::string serialize_graph(const DefiningGraph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::EdgeList:
      for (auto [u, v] : g.edges()) out << g.name(u) << " -- " << g.name(v) << "\n";
      break;
    case GraphFormat::DotSubset:
      out << "graph G {\n";
      for (VertexId v = 0; v < g.size(); ++v) out << "  " << dot_id(g.name(v)) << ";\n";
      for (auto [u, v] : g.edges()) out << "  " << dot_id(g.name(u)) << " -- " << dot_id(g.name(v)) << ";\n";
      out << "}\n";
      break;
    case GraphFormat::Json: {
      nlohmann::json j;
      j["vertices"] = g.names();
      j["edges"] = nlohmann::json::array();
      for (auto [u, v] : g.edges()) j["edges"].push_back({g.name(u), g.name(v)});
      out << j.dump() << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace racg
