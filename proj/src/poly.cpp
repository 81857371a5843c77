#include "loghh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace loghh {

// ---- orders ----------------------------------------------------------------

MonomialOrder MonomialOrder::degrevlex(int nvars) {
  MonomialOrder o;
  o.blocks.emplace_back();
  for (int i = 0; i < nvars; ++i) o.blocks[0].push_back(i);
  return o;
}

MonomialOrder MonomialOrder::lex(int nvars) {
  MonomialOrder o;
  for (int i = 0; i < nvars; ++i) o.blocks.push_back({i});
  return o;
}

MonomialOrder MonomialOrder::elimination(const std::vector<int>& first_block, int nvars) {
  MonomialOrder o;
  o.blocks.push_back(first_block);
  std::vector<bool> used(nvars, false);
  for (int i : first_block) used[i] = true;
  o.blocks.emplace_back();
  for (int i = 0; i < nvars; ++i)
    if (!used[i]) o.blocks[1].push_back(i);
  if (o.blocks[1].empty()) o.blocks.pop_back();
  return o;
}

int MonomialOrder::compare(const Mono& a, const Mono& b) const {
  for (const auto& blk : blocks) {
    long da = 0, db = 0;
    for (int i : blk) da += a[i], db += b[i];
    if (da != db) return da < db ? -1 : 1;
    // graded reverse lex inside the block
    for (size_t k = blk.size(); k-- > 0;) {
      int i = blk[k];
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
  }
  return 0;
}

bool MonomialOrder::valid_for(int nvars) const {
  std::vector<bool> seen(nvars, false);
  for (const auto& blk : blocks)
    for (int i : blk) {
      if (i < 0 || i >= nvars || seen[i]) return false;
      seen[i] = true;
    }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

// ---- ring ------------------------------------------------------------------

PolyRing::PolyRing(Field field, std::vector<std::string> names)
    : field_(field), vars_(std::move(names)) {
  for (int i = 0; i < (int)vars_.size(); ++i) {
    if (index_.count(vars_[i])) fail(ErrorKind::SchemaError, "duplicate variable name " + vars_[i]);
    index_[vars_[i]] = i;
  }
  order_ = MonomialOrder::degrevlex(nvars());
}

std::optional<int> PolyRing::var_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void PolyRing::set_order(MonomialOrder o) {
  // polynomials built earlier are not re-sorted; set the order before use
  if (!o.valid_for(nvars())) fail(ErrorKind::Internal, "order does not cover ring variables");
  order_ = std::move(o);
}

void PolyRing::set_unit(int v, int v_inv) {
  if (v < 0 || v_inv < 0 || v >= nvars() || v_inv >= nvars() || v == v_inv)
    fail(ErrorKind::Internal, "bad unit pair");
  units_.push_back({v, v_inv});
}

bool PolyRing::is_unit_var(int i) const {
  for (const auto& [a, b] : units_)
    if (a == i || b == i) return true;
  return false;
}

void PolyRing::set_weights(std::vector<long> w) {
  if ((int)w.size() != nvars()) fail(ErrorKind::Internal, "weight count mismatch");
  weights_ = std::move(w);
  graded_ = true;
}

int PolyRing::add_var(const std::string& name) {
  if (index_.count(name)) fail(ErrorKind::SchemaError, "duplicate variable name " + name);
  int i = nvars();
  vars_.push_back(name);
  index_[name] = i;
  if (graded_) weights_.push_back(0);
  if (order_.blocks.empty()) order_.blocks.emplace_back();
  order_.blocks.back().push_back(i);
  return i;
}

long PolyRing::mono_weight(const Mono& m) const {
  if (!graded_) fail(ErrorKind::NotGraded, "ring carries no grading");
  long d = 0;
  for (int i = 0; i < nvars(); ++i) d += weights_[i] * m[i];
  return d;
}

long PolyRing::mono_total_degree(const Mono& m) const {
  long d = 0;
  for (int e : m) d += e;
  return d;
}

std::string PolyRing::mono_string(const Mono& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

// ---- monomial helpers -------------------------------------------------------

Mono mono_one(int nvars) { return Mono(nvars, 0); }

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
  Mono c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    c[i] = b[i] - a[i];
    if (c[i] < 0) fail(ErrorKind::Internal, "monomial division underflow");
  }
  return c;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// ---- polynomial arithmetic ---------------------------------------------------

Poly p_zero() { return Poly{}; }

Poly p_const(const PolyRing& r, const Rat& c) {
  Rat v = r.field().reduce(c);
  if (v == 0) return {};
  return Poly{{{mono_one(r.nvars()), v}}};
}

Poly p_one(const PolyRing& r) { return p_const(r, 1); }

Poly p_var(const PolyRing& r, int i, int exp) {
  if (i < 0 || i >= r.nvars()) fail(ErrorKind::Internal, "variable index out of range");
  Mono m = mono_one(r.nvars());
  m[i] = exp;
  return Poly{{{m, Rat(1)}}};
}

Poly p_term(const PolyRing& r, const Mono& m, const Rat& c) {
  if ((int)m.size() != r.nvars()) fail(ErrorKind::Internal, "monomial size mismatch");
  Rat v = r.field().reduce(c);
  if (v == 0) return {};
  return Poly{{{m, v}}};
}

Poly p_normalize(const PolyRing& r, std::vector<std::pair<Mono, Rat>> terms) {
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return r.order().compare(a.first, b.first) > 0;
  });
  Poly out;
  for (auto& [m, c] : terms) {
    Rat v = r.field().reduce(c);
    if (!out.t.empty() && out.t.back().first == m)
      out.t.back().second = r.field().add(out.t.back().second, v);
    else
      out.t.push_back({std::move(m), v});
    if (out.t.back().second == 0) out.t.pop_back();
  }
  return out;
}

Poly p_add(const PolyRing& r, const Poly& a, const Poly& b) {
  Poly out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    int cmp;
    if (i >= a.t.size())
      cmp = -1;
    else if (j >= b.t.size())
      cmp = 1;
    else
      cmp = r.order().compare(a.t[i].first, b.t[j].first);
    if (cmp > 0)
      out.t.push_back(a.t[i++]);
    else if (cmp < 0)
      out.t.push_back(b.t[j++]);
    else {
      Rat c = r.field().add(a.t[i].second, b.t[j].second);
      if (c != 0) out.t.push_back({a.t[i].first, c});
      ++i, ++j;
    }
  }
  return out;
}

Poly p_neg(const PolyRing& r, const Poly& a) {
  Poly out = a;
  for (auto& [m, c] : out.t) c = r.field().neg(c);
  return out;
}

Poly p_sub(const PolyRing& r, const Poly& a, const Poly& b) { return p_add(r, a, p_neg(r, b)); }

Poly p_scale(const PolyRing& r, const Poly& a, const Rat& c) {
  Rat v = r.field().reduce(c);
  if (v == 0) return {};
  Poly out = a;
  for (auto& [m, cc] : out.t) cc = r.field().mul(cc, v);
  return out;
}

Poly p_mul_term(const PolyRing& r, const Poly& a, const Mono& m, const Rat& c) {
  Rat v = r.field().reduce(c);
  if (v == 0) return {};
  Poly out;
  out.t.reserve(a.t.size());
  for (const auto& [am, ac] : a.t) out.t.push_back({mono_mul(am, m), r.field().mul(ac, v)});
  return out;  // multiplying by a fixed monomial preserves the term order
}

Poly p_mul(const PolyRing& r, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::pair<Mono, Rat>> acc;
  acc.reserve(a.t.size() * b.t.size());
  for (const auto& [am, ac] : a.t)
    for (const auto& [bm, bc] : b.t) acc.push_back({mono_mul(am, bm), ac * bc});
  return p_normalize(r, std::move(acc));
}

Poly p_pow(const PolyRing& r, const Poly& a, long e) {
  if (e < 0) fail(ErrorKind::Internal, "negative power");
  Poly out = p_one(r), base = a;
  while (e > 0) {
    if (e & 1) out = p_mul(r, out, base);
    e >>= 1;
    if (e) base = p_mul(r, base, base);
  }
  return out;
}

Poly p_monic(const PolyRing& r, const Poly& a) {
  if (a.is_zero()) return a;
  return p_scale(r, a, r.field().inv(a.lead_coeff()));
}

Poly p_substitute(const PolyRing& src, const Poly& p, const PolyRing& dst,
                  const std::vector<Poly>& images) {
  if ((int)images.size() != src.nvars()) fail(ErrorKind::Internal, "substitution image count mismatch");
  Poly out;
  for (const auto& [m, c] : p.t) {
    Poly term = p_const(dst, c);
    for (int i = 0; i < src.nvars(); ++i)
      if (m[i] != 0) term = p_mul(dst, term, p_pow(dst, images[i], m[i]));
    out = p_add(dst, out, term);
  }
  return out;
}

Poly p_rename(const PolyRing& src, const Poly& p, const PolyRing& dst,
              const std::vector<int>& var_map) {
  std::vector<std::pair<Mono, Rat>> acc;
  for (const auto& [m, c] : p.t) {
    Mono mm = mono_one(dst.nvars());
    for (int i = 0; i < src.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (var_map[i] < 0) fail(ErrorKind::Internal, "rename drops a used variable");
      mm[var_map[i]] += m[i];
    }
    acc.push_back({std::move(mm), c});
  }
  return p_normalize(dst, std::move(acc));
}

Poly p_partial(const PolyRing& r, const Poly& p, int v) {
  std::vector<std::pair<Mono, Rat>> acc;
  for (const auto& [m, c] : p.t) {
    if (m[v] == 0) continue;
    Mono mm = m;
    mm[v] -= 1;
    acc.push_back({std::move(mm), r.field().mul(c, Rat(m[v]))});
  }
  return p_normalize(r, std::move(acc));
}

bool p_homogeneous(const PolyRing& r, const Poly& p, long* degree_out) {
  if (p.is_zero()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  long d = r.mono_weight(p.t[0].first);
  for (const auto& [m, c] : p.t)
    if (r.mono_weight(m) != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

std::string p_string(const PolyRing& r, const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.t) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::string ms = r.mono_string(m);
    if (ms.empty())
      os << a;
    else if (a == 1)
      os << ms;
    else
      os << a << "*" << ms;
    first = false;
  }
  return os.str();
}

// ---- parser ------------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Integer, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& text) : s(text) {}

  [[noreturn]] void error(int l, int c, const std::string& msg) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg);
  }

  Token next() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) {
      if (s[pos] == '\n') ++line, col = 1;
      else ++col;
      ++pos;
    }
    int l = line, c = col;
    if (pos >= s.size()) return {Token::End, "", l, c};
    char ch = s[pos];
    auto one = [&](Token::Kind k) {
      ++pos, ++col;
      return Token{k, std::string(1, ch), l, c};
    };
    switch (ch) {
      case '+': return one(Token::Plus);
      case '-': return one(Token::Minus);
      case '*': return one(Token::Star);
      case '^': return one(Token::Caret);
      case '(': return one(Token::LParen);
      case ')': return one(Token::RParen);
      default: break;
    }
    if (std::isdigit((unsigned char)ch)) {
      std::string text;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) text += s[pos++], ++col;
      return {Token::Integer, text, l, c};
    }
    if (std::isalpha((unsigned char)ch) || ch == '_') {
      std::string text;
      while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        text += s[pos++], ++col;
      return {Token::Ident, text, l, c};
    }
    error(l, c, std::string("unexpected character '") + ch + "'");
  }
};

struct Parser {
  const PolyRing& ring;
  Lexer lex;
  Token tok;

  Parser(const PolyRing& r, const std::string& text) : ring(r), lex(text) { tok = lex.next(); }

  void advance() { tok = lex.next(); }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError,
         "line " + std::to_string(tok.line) + ", col " + std::to_string(tok.col) + ": " + msg);
  }

  Poly parse_expr() {
    bool neg = false;
    if (tok.kind == Token::Minus) {
      neg = true;
      advance();
    } else if (tok.kind == Token::Plus) {
      advance();
    }
    Poly acc = parse_term();
    if (neg) acc = p_neg(ring, acc);
    while (tok.kind == Token::Plus || tok.kind == Token::Minus) {
      bool minus = tok.kind == Token::Minus;
      advance();
      Poly rhs = parse_term();
      acc = minus ? p_sub(ring, acc, rhs) : p_add(ring, acc, rhs);
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (tok.kind == Token::Star) {
      advance();
      acc = p_mul(ring, acc, parse_factor());
    }
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    if (tok.kind == Token::Caret) {
      advance();
      if (tok.kind != Token::Integer) error("expected a nonnegative integer exponent after '^'");
      long e = 0;
      for (char ch : tok.text) {
        e = e * 10 + (ch - '0');
        if (e > 1000000) error("exponent too large");
      }
      advance();
      if (tok.kind == Token::Caret) error("chained '^' is not allowed");
      return p_pow(ring, base, e);
    }
    return base;
  }

  Poly parse_atom() {
    switch (tok.kind) {
      case Token::Integer: {
        Poly c = p_const(ring, Rat(Int(tok.text)));
        advance();
        return c;
      }
      case Token::Ident: {
        auto idx = ring.var_index(tok.text);
        if (!idx) fail(ErrorKind::SchemaError, "unknown identifier '" + tok.text + "'");
        advance();
        return p_var(ring, *idx);
      }
      case Token::LParen: {
        advance();
        Poly inner = parse_expr();
        if (tok.kind != Token::RParen) error("expected ')'");
        advance();
        return inner;
      }
      case Token::Minus: {
        advance();
        return p_neg(ring, parse_factor());
      }
      default:
        error("expected an integer, identifier, or '('");
    }
  }
};

}  // namespace

Poly p_parse(const PolyRing& r, const std::string& text) {
  Parser p(r, text);
  Poly out = p.parse_expr();
  if (p.tok.kind != Token::End) p.error("unexpected trailing input");
  return out;
}

}  // namespace loghh
