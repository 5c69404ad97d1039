#include "hkprod/session.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hkprod/errors.hpp"
#include "hkprod/parse.hpp"

namespace hkprod {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string_view strip_brackets(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(line, "expected a [ ... ] list");
  return s.substr(1, s.size() - 2);
}

struct RingSpec {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  OrderKind kind = OrderKind::GRevLex;
  std::vector<std::string> precedence;
};

RingSpec parse_ring_line(std::string_view body, std::size_t line) {
  RingSpec spec;
  bool have_p = false;
  bool have_vars = false;
  for (auto field : split(body, ';')) {
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) fail(line, "expected key=value in ring block");
    auto key = trim(field.substr(0, eq));
    auto value = trim(field.substr(eq + 1));
    if (key == "p") {
      try {
        std::size_t used = 0;
        auto v = std::stoull(std::string(value), &used);
        if (used != value.size() || v > 0xffffffffULL) throw std::invalid_argument("p");
        spec.p = static_cast<std::uint32_t>(v);
      } catch (const std::exception&) {
        fail(line, "bad characteristic '" + std::string(value) + "'");
      }
      have_p = true;
    } else if (key == "vars") {
      for (auto v : split(value, ',')) spec.vars.emplace_back(v);
      have_vars = true;
    } else if (key == "mod") {
      for (auto g : split_generator_list(strip_brackets(value, line))) spec.relations.push_back(g);
    } else if (key == "order") {
      auto paren = value.find('(');
      auto name = trim(value.substr(0, paren));
      if (name == "grevlex")
        spec.kind = OrderKind::GRevLex;
      else if (name == "lex")
        spec.kind = OrderKind::Lex;
      else
        fail(line, "unknown order '" + std::string(name) + "'");
      if (paren != std::string_view::npos) {
        if (value.back() != ')') fail(line, "unterminated precedence list");
        auto inner = value.substr(paren + 1, value.size() - paren - 2);
        for (auto v : split(inner, '>')) spec.precedence.emplace_back(v);
      }
    } else {
      fail(line, "unknown ring key '" + std::string(key) + "'");
    }
  }
  if (!have_p || !have_vars) fail(line, "ring block needs p= and vars=");
  return spec;
}

RingPresentation build_ring(const RingSpec& spec, std::size_t line) {
  try {
    MonomialOrder order(spec.kind, spec.vars.size());
    if (!spec.precedence.empty()) {
      std::vector<std::size_t> prec;
      for (const auto& name : spec.precedence) {
        auto it = std::find(spec.vars.begin(), spec.vars.end(), name);
        if (it == spec.vars.end()) fail(line, "unknown variable '" + name + "' in precedence");
        prec.push_back(static_cast<std::size_t>(it - spec.vars.begin()));
      }
      order = MonomialOrder(spec.kind, prec);
    }
    auto base = std::make_shared<const PolynomialRing>(spec.p, spec.vars, order);
    std::vector<Polynomial> rels;
    for (const auto& r : spec.relations) rels.push_back(parse_polynomial(r, base));
    return RingPresentation(base, std::move(rels));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(line, e.what());
  }
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

std::vector<std::string> split_generator_list(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = trim(text.substr(1, text.size() - 2));
  std::vector<std::string> out;
  if (text.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || (text[k] == ',' && depth == 0)) {
      out.emplace_back(trim(text.substr(start, k - start)));
      start = k + 1;
    } else if (text[k] == '(') {
      ++depth;
    } else if (text[k] == ')') {
      --depth;
    }
  }
  return out;
}

Session::Session(RingPresentation ring, std::vector<std::pair<std::string, IdealHandle>> ideals)
    : ring_(std::move(ring)), ideals_(std::move(ideals)) {
  std::set<std::string> seen;
  for (const auto& [name, ideal] : ideals_) {
    if (!seen.insert(name).second) throw ParseError("duplicate ideal name '" + name + "'");
    require_same_ring(ring_, ideal.ring());
  }
}

bool Session::has_ideal(std::string_view name) const {
  for (const auto& entry : ideals_)
    if (entry.first == name) return true;
  return false;
}

const IdealHandle& Session::ideal(std::string_view name) const {
  for (const auto& entry : ideals_)
    if (entry.first == name) return entry.second;
  throw ParseError("unknown ideal '" + std::string(name) + "'");
}

std::string Session::serialize() const {
  std::ostringstream os;
  const auto& base = *ring_.base();
  os << "ring: p=" << ring_.characteristic() << "; vars=";
  for (std::size_t i = 0; i < base.nvars(); ++i) os << (i ? "," : "") << base.variables()[i];
  if (!ring_.relations().empty()) {
    os << "; mod=[";
    for (std::size_t i = 0; i < ring_.relations().size(); ++i)
      os << (i ? ", " : "") << ring_.relations()[i].to_string();
    os << "]";
  }
  os << "; order=" << (ring_.order().kind() == OrderKind::Lex ? "lex" : "grevlex") << "(";
  const auto& prec = ring_.order().precedence();
  for (std::size_t i = 0; i < prec.size(); ++i) os << (i ? ">" : "") << base.variables()[prec[i]];
  os << ")\n";
  for (const auto& [name, ideal] : ideals_) {
    os << "ideal " << name << " = [";
    const auto& gens = ideal.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].to_string();
    os << "]\n";
  }
  return os.str();
}

Session parse_session(std::string_view text) {
  std::optional<RingPresentation> ring;
  std::vector<std::pair<std::string, IdealHandle>> ideals;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("ring:")) {
      if (ring) fail(line_no, "more than one ring block");
      ring = build_ring(parse_ring_line(line.substr(5), line_no), line_no);
    } else if (line.starts_with("ideal ")) {
      if (!ring) fail(line_no, "ideal before ring block");
      auto rest = line.substr(6);
      auto eq = rest.find('=');
      if (eq == std::string_view::npos) fail(line_no, "expected 'ideal NAME = [...]'");
      std::string name(trim(rest.substr(0, eq)));
      if (!is_identifier(name)) fail(line_no, "bad ideal name '" + name + "'");
      for (const auto& entry : ideals)
        if (entry.first == name) fail(line_no, "duplicate ideal name '" + name + "'");
      std::vector<Polynomial> gens;
      for (const auto& g : split_generator_list(strip_brackets(rest.substr(eq + 1), line_no))) {
        try {
          gens.push_back(parse_polynomial(g, *ring));
        } catch (const ParseError& e) {
          fail(line_no, e.what());
        }
      }
      ideals.emplace_back(std::move(name), IdealHandle(*ring, std::move(gens)));
    } else {
      fail(line_no, "unrecognized line");
    }
  }
  if (!ring) throw ParseError("session has no ring block");
  return Session(*ring, std::move(ideals));
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

}  // namespace hkprod
