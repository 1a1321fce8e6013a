#include "hermform/textio.hpp"

#include <cctype>
#include <charconv>

namespace hermform {

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::string var) : s_(s), var_(std::move(var)) {}

  Poly expr() {
    Poly v = term();
    for (;;) {
      skip();
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  PolyMatrix matrix() {
    expect('[');
    std::vector<std::vector<Poly>> rows;
    skip();
    if (!eat(']')) {
      do rows.push_back(row());
      while (eat(','));
      expect(']');
    }
    const std::size_t n = rows.size();
    const std::size_t m = n == 0 ? 0 : rows[0].size();
    std::vector<Poly> flat;
    for (auto& r : rows) {
      if (r.size() != m) throw ParseError("matrix rows have different lengths");
      for (auto& e : r) flat.push_back(std::move(e));
    }
    return PolyMatrix(n, m, std::move(flat));
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

 private:
  std::vector<Poly> row() {
    expect('[');
    std::vector<Poly> r;
    do r.push_back(expr());
    while (eat(','));
    expect(']');
    return r;
  }

  Poly term() {
    Poly v = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        v *= unary();
      } else if (pos_ < s_.size() && starts_primary(s_[pos_])) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  Poly unary() {
    skip();
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    skip();
    if (!eat('^')) return base;
    skip();
    const long long e = integer();
    if (e < 0) fail("negative exponent");
    Poly r(Elem::one());
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (eat('(')) {
      Poly v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(Elem::from_int(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string id(s_.substr(pos_, end - pos_));
      pos_ = end;
      if (id == var_) return Poly::t();
      return Poly(generator(id));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Elem generator(const std::string& id) {
    std::size_t k = 0;
    if (id.size() < 2 || id[0] != 'u' || std::from_chars(id.data() + 1, id.data() + id.size(), k).ptr != id.data() + id.size() || k == 0)
      fail("unknown symbol '" + id + "'");
    const Tower& tw = Tower::current();
    if (k > tw.top()) fail("generator " + id + " is not defined");
    Digits d(tw.abs_degree(k - 1) + 1, 0);
    d.back() = 1;
    return Elem(std::move(d));
  }

  long long integer() {
    skip();
    const char* b = s_.data() + pos_;
    const char* e = s_.data() + s_.size();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr == b) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - b);
    return v;
  }

  bool starts_primary(char c) const {
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view s_;
  std::string var_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int bracket_depth(std::string_view s) {
  int d = 0;
  for (char c : s) d += c == '[' || c == '(' ? 1 : c == ']' || c == ')' ? -1 : 0;
  return d;
}

}  // namespace

Poly parse_poly(std::string_view s, const std::string& var) {
  Parser ps(s, var);
  Poly v = ps.expr();
  ps.finish();
  return v;
}

PolyMatrix parse_matrix(std::string_view s) {
  Parser ps(s, "t");
  PolyMatrix m = ps.matrix();
  ps.finish();
  return m;
}

const std::string* Document::find(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return &v;
  return nullptr;
}

Document parse_document(std::string_view text) {
  Document doc;
  std::vector<std::pair<std::string, std::string>> entries;
  std::size_t line_no = 0;
  std::string pending_key, pending;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (!pending_key.empty()) {
      pending += " " + std::string(line);
      if (bracket_depth(pending) <= 0) {
        entries.emplace_back(pending_key, trim(pending));
        pending_key.clear();
      }
      continue;
    }
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty key");
    if (bracket_depth(value) > 0) {
      pending_key = key;
      pending = value;
    } else {
      entries.emplace_back(key, value);
    }
  }
  if (!pending_key.empty()) throw ParseError("value of '" + pending_key + "' has unbalanced brackets");

  for (auto& [key, value] : entries) {
    if (key == "p") {
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), p);
      if (ec != std::errc() || ptr != value.data() + value.size()) throw ParseError("p: expected an integer");
      if (p < 3 || p > 0xffffffffULL || !is_prime(p)) throw ParseError("p must be an odd prime");
      doc.p = static_cast<std::uint32_t>(p);
    } else if (key == "epsilon") {
      if (value == "1" || value == "+1")
        doc.kind = FormKind::Hermitian;
      else if (value == "-1")
        doc.kind = FormKind::Skew;
      else
        throw ParseError("epsilon must be 1 or -1");
    } else if (key == "n") {
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || ptr != value.data() + value.size()) throw ParseError("n: expected an integer");
      doc.n = n;
    } else if (key.size() > 1 && key[0] == 'u' && key.find_first_not_of("0123456789", 1) == std::string::npos) {
      if (std::stoul(key.substr(1)) != doc.generators.size() + 1)
        throw ParseError("generator " + key + " is out of order");
      doc.generators.push_back(value);
    } else {
      if (doc.find(key)) throw ParseError("duplicate key '" + key + "'");
      doc.values.emplace_back(key, value);
    }
  }
  if (doc.p == 0) throw ParseError("missing 'p = ...'");
  return doc;
}

void install_generators(Tower& tw, const Document& doc) {
  TowerScope scope(tw);
  if (tw.p() != doc.p) throw DomainError("tower characteristic differs from the document");
  for (std::size_t k = 1; k <= doc.generators.size(); ++k) {
    const Poly m = parse_poly(doc.generators[k - 1], "x");
    if (m.degree() < 2 || !m.lead().is_one()) throw ParseError("u" + std::to_string(k) + ": expected a monic polynomial of degree >= 2");
    for (const auto& c : m.coeffs())
      if (c.level() >= k) throw ParseError("u" + std::to_string(k) + ": coefficients must lie below the new level");
    if (k <= tw.top()) {
      if (m.coeffs() != tw.level(k).minpoly) throw DomainError("u" + std::to_string(k) + " disagrees with the existing tower");
      continue;
    }
    if (m.degree() == 2 && m[1].is_zero() && -m[0] == tw.first_nonsquare(tw.top()))
      tw.append_standard_level();
    else
      tw.append_level(m.coeffs());
  }
}

PolyMatrix document_matrix(const Document& doc, const std::string& key) {
  const std::string* text = doc.find(key);
  if (!text) throw ParseError("missing '" + key + " = ...'");
  PolyMatrix m = parse_matrix(*text);
  if (!m.is_square()) throw ParseError(key + " is not square");
  if (doc.n && m.rows() != *doc.n) throw ParseError(key + " has size " + std::to_string(m.rows()) + ", expected n = " + std::to_string(*doc.n));
  if (doc.kind && !has_kind(m, *doc.kind))
    throw DomainError(key + " is not " + std::string(to_string(*doc.kind)));
  return m;
}

std::string format_matrix(const PolyMatrix& a) {
  if (a.rows() == 0) return "[]";
  std::string s = "[\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(a(i, j));
    }
    s += i + 1 < a.rows() ? "],\n" : "]\n";
  }
  return s + "]";
}

std::string format_header(std::optional<FormKind> kind, std::size_t n) {
  const Tower& tw = Tower::current();
  std::string s = "p = " + std::to_string(tw.p()) + "\n";
  if (kind) s += std::string("epsilon = ") + (*kind == FormKind::Hermitian ? "1" : "-1") + "\n";
  s += "n = " + std::to_string(n) + "\n";
  for (std::size_t k = 1; k <= tw.top(); ++k) s += tw.level(k).name + " = " + to_string(Poly(tw.level(k).minpoly), "x") + "\n";
  return s;
}

}  // namespace hermform
