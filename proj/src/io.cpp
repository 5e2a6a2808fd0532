#include "copoisson/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace copoisson {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Expression parser

namespace {

constexpr std::uint64_t kMaxExponent = 1000;

class PolyParser {
 public:
  PolyParser(std::string_view src, const std::vector<std::string>& variables)
      : src_(src), vars_(variables) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Poly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
    throw ParseError(msg, pos + 1);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Poly rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      skip_space();
      if (peek() != '*') {
        if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(' ||
                          peek() == '_')) {
          fail("missing operator (implicit multiplication is not allowed)");
        }
        return acc;
      }
      ++pos_;
      acc = acc * unary();
    }
  }

  Poly unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail_at("malformed exponent", start);
    std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 4 || std::stoull(digits) > kMaxExponent) {
      fail_at("exponent exceeds " + std::to_string(kMaxExponent), start);
    }
    std::uint64_t e = std::stoull(digits);
    Poly r = constant(vars_.size(), 1);
    for (std::uint64_t i = 0; i < e; ++i) r = r * base;
    return r;
  }

  Poly atom() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Poly inner = expr();
      skip_space();
      if (peek() != ')') fail_at("unbalanced parenthesis", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  Poly number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    Integer num(std::string(src_.substr(start, pos_ - start)));
    Integer den = 1;
    if (peek() == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail_at("malformed rational literal", start);
      den = Integer(std::string(src_.substr(dstart, pos_ - dstart)));
      if (den == 0) fail_at("zero denominator", dstart);
    }
    Rational r(num, den);
    r.canonicalize();
    return constant(vars_.size(), r);
  }

  Poly identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return variable(vars_.size(), i);
    }
    fail_at("unknown identifier " + name, start);
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, const std::vector<std::string>& variables) {
  if (variables.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables");
  }
  return PolyParser(src, variables).parse();
}

Monomial parse_monomial(std::string_view src, const std::vector<std::string>& variables) {
  Poly p = parse_poly(src, variables);
  if (p.size() != 1 || p.begin()->second != 1) throw ParseError("expected a monomial", 1);
  return p.begin()->first;
}

std::string to_string(SpecKind k) {
  switch (k) {
    case SpecKind::poisson: return "poisson";
    case SpecKind::copoisson: return "copoisson";
    case SpecKind::struct_consts: return "struct_consts";
    case SpecKind::finhopf: return "finhopf";
    case SpecKind::qmap: return "qmap";
    case SpecKind::pmap: return "pmap";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Loading

namespace {

std::string pointer_escape(const std::string& key) {
  std::string r;
  for (char c : key) {
    if (c == '~') {
      r += "~0";
    } else if (c == '/') {
      r += "~1";
    } else {
      r += c;
    }
  }
  return r;
}

// Tracks the JSON pointer of the parser position to report duplicate keys.
class DuplicateKeyGuard {
 public:
  bool operator()(int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        frames_.push_back({false, 0, "", {}});
        break;
      case json::parse_event_t::array_start:
        frames_.push_back({true, 0, "", {}});
        break;
      case json::parse_event_t::key: {
        Frame& f = frames_.back();
        std::string key = parsed.get<std::string>();
        if (!f.keys.insert(key).second) {
          throw SchemaError(location() + "/" + pointer_escape(key), "duplicate key");
        }
        f.key = key;
        break;
      }
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        frames_.pop_back();
        element_done();
        break;
      case json::parse_event_t::value:
        element_done();
        break;
    }
    return true;
  }

 private:
  struct Frame {
    bool is_array;
    std::size_t index;
    std::string key;
    std::set<std::string> keys;
  };

  void element_done() {
    if (!frames_.empty() && frames_.back().is_array) ++frames_.back().index;
  }

  std::string location() const {
    std::string r;
    for (std::size_t i = 0; i + 1 < frames_.size(); ++i) {
      const Frame& f = frames_[i];
      r += "/" + (f.is_array ? std::to_string(f.index) : pointer_escape(f.key));
    }
    return r;
  }

  std::vector<Frame> frames_;
};

std::string child(const std::string& path, const std::string& key) {
  return path + "/" + pointer_escape(key);
}
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path, "missing field \"" + key + "\"");
  return *it;
}

void only_fields(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw SchemaError(child(path, key), "unknown field");
  }
}

const json& array_at(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_array()) throw SchemaError(child(path, key), "expected an array");
  return v;
}

std::string string_value(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

std::size_t unsigned_value(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw SchemaError(path, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

Rational rational_value(const json& v, const std::string& path) {
  std::string s = string_value(v, path);
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, std::string("bad rational: ") + e.what());
  }
}

std::size_t index_value(const json& v, std::size_t d, const std::string& path) {
  std::size_t i = unsigned_value(v, path);
  if (i < 1 || i > d) {
    throw SchemaError(path, "index " + std::to_string(i) + " outside 1.." + std::to_string(d));
  }
  return i - 1;
}

Poly poly_value(const json& v, const std::vector<std::string>& vars, const std::string& path) {
  std::string s = string_value(v, path);
  try {
    return parse_poly(s, vars);
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

Monomial monomial_value(const json& v, const std::vector<std::string>& vars, const std::string& path) {
  std::string s = string_value(v, path);
  try {
    return parse_monomial(s, vars);
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

void require_degree(const Monomial& m, std::size_t n, const std::string& path) {
  if (m.degree() > n) {
    throw SchemaError(path, "degree " + std::to_string(m.degree()) + " exceeds max_degree " +
                                std::to_string(n));
  }
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

BracketTable load_poisson(const json& p, const StructureSpec& spec, const std::string& path) {
  only_fields(p, {"brackets", "mode"}, path);
  const std::size_t d = spec.variables.size();
  std::string mode = string_value(field(p, "mode", path), child(path, "mode"));
  BracketTable b;
  if (mode == "polynomial") {
    b = BracketTable(d);
  } else if (mode == "series") {
    b = BracketTable::series(d, spec.max_degree);
  } else {
    throw SchemaError(child(path, "mode"), "expected \"polynomial\" or \"series\"");
  }
  const json& brackets = field(p, "brackets", path);
  std::string bpath = child(path, "brackets");
  if (!brackets.is_object()) throw SchemaError(bpath, "expected an object");
  for (const auto& [key, value] : brackets.items()) {
    std::string kpath = child(bpath, key);
    std::size_t comma = key.find(',');
    std::size_t i = 0, j = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      std::size_t used = 0;
      i = std::stoul(key.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("trailing");
      j = std::stoul(key.substr(comma + 1), &used);
      if (used != key.size() - comma - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw SchemaError(kpath, "bracket keys have the form \"i,j\"");
    }
    if (i < 1 || j < 1 || i > d || j > d) throw SchemaError(kpath, "index outside 1.." + std::to_string(d));
    if (i >= j) throw SchemaError(kpath, "bracket keys must have i<j");
    Poly f = poly_value(value, spec.variables, kpath);
    if (b.truncation() && max_degree(f) > static_cast<long>(spec.max_degree)) {
      throw SchemaError(kpath, "series bracket has terms above max_degree " +
                                   std::to_string(spec.max_degree));
    }
    b.set(i - 1, j - 1, std::move(f));
  }
  return b;
}

ITable load_copoisson(const json& p, const StructureSpec& spec, const std::string& path) {
  only_fields(p, {"rows"}, path);
  const std::size_t d = spec.variables.size();
  ITable table(d, spec.max_degree);
  const json& rows = array_at(p, "rows", path);
  std::set<Monomial> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string rpath = child(child(path, "rows"), r);
    only_fields(rows[r], {"monomial", "lambda"}, rpath);
    Monomial a = monomial_value(field(rows[r], "monomial", rpath), spec.variables, child(rpath, "monomial"));
    require_degree(a, spec.max_degree, child(rpath, "monomial"));
    if (!seen.insert(a).second) throw SchemaError(child(rpath, "monomial"), "duplicate row");
    const json& lambda = array_at(rows[r], "lambda", rpath);
    SkewMatrix m(d);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t e = 0; e < lambda.size(); ++e) {
      std::string epath = child(child(rpath, "lambda"), e);
      const json& entry = lambda[e];
      if (!entry.is_array() || entry.size() != 3) throw SchemaError(epath, "expected [i, j, \"rational\"]");
      std::size_t i = index_value(entry[0], d, child(epath, 0));
      std::size_t j = index_value(entry[1], d, child(epath, 1));
      if (i >= j) throw SchemaError(epath, "entries must have i<j");
      if (!pairs.insert({i, j}).second) throw SchemaError(epath, "duplicate entry");
      m.set(i, j, rational_value(entry[2], child(epath, 2)));
    }
    table.set_row(a, std::move(m));
  }
  return table;
}

StructConsts load_struct_consts(const json& p, const StructureSpec& spec, const std::string& path) {
  only_fields(p, {"lambda"}, path);
  const std::size_t d = spec.variables.size();
  StructConsts c(d);
  const json& lambda = array_at(p, "lambda", path);
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t e = 0; e < lambda.size(); ++e) {
    std::string epath = child(child(path, "lambda"), e);
    const json& entry = lambda[e];
    if (!entry.is_array() || entry.size() != 4) {
      throw SchemaError(epath, "expected [i, j, l, \"rational\"]");
    }
    std::size_t i = index_value(entry[0], d, child(epath, 0));
    std::size_t j = index_value(entry[1], d, child(epath, 1));
    std::size_t l = index_value(entry[2], d, child(epath, 2));
    if (i >= j) throw SchemaError(epath, "entries must have i<j");
    if (!seen.insert({i, j, l}).second) throw SchemaError(epath, "duplicate entry");
    c.set(i, j, l, rational_value(entry[3], child(epath, 3)));
  }
  return c;
}

// Flattens a nested array of the given shape, row-major.
Vec dense_value(const json& v, const std::vector<std::size_t>& shape, std::size_t level,
                const std::string& path) {
  if (level == shape.size()) return Vec{rational_value(v, path)};
  if (!v.is_array() || v.size() != shape[level]) {
    throw SchemaError(path, "expected an array of length " + std::to_string(shape[level]));
  }
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec part = dense_value(v[i], shape, level + 1, child(path, i));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

FinHopf load_finhopf(const json& p, const StructureSpec& spec, const std::string& path) {
  only_fields(p, {"mult", "unit", "comult", "counit", "antipode"}, path);
  const std::size_t n = spec.variables.size();
  auto tensor = [&](const char* key, std::vector<std::size_t> shape) {
    return dense_value(field(p, key, path), shape, 0, child(path, key));
  };
  Vec mult = tensor("mult", {n, n, n});
  Vec unit = tensor("unit", {n});
  Vec comult = tensor("comult", {n, n, n});
  Vec counit = tensor("counit", {n});
  Vec antipode = tensor("antipode", {n, n});
  try {
    return FinHopf(spec.variables, std::move(mult), std::move(unit), std::move(comult),
                   std::move(counit), std::move(antipode));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

std::string role_value(const json& p, const std::string& path, const char* a, const char* b) {
  std::string role = string_value(field(p, "role", path), child(path, "role"));
  if (role != a && role != b) {
    throw SchemaError(child(path, "role"), std::string("expected \"") + a + "\" or \"" + b + "\"");
  }
  return role;
}

QMapPayload load_qmap(const json& p, const StructureSpec& spec, const std::string& path) {
  only_fields(p, {"role", "values"}, path);
  QMapPayload out{role_value(p, path, "q", "i"), QMap(spec.variables.size(), spec.max_degree)};
  const json& values = array_at(p, "values", path);
  std::set<Monomial> seen;
  for (std::size_t r = 0; r < values.size(); ++r) {
    std::string rpath = child(child(path, "values"), r);
    only_fields(values[r], {"monomial", "tensor"}, rpath);
    Monomial a = monomial_value(field(values[r], "monomial", rpath), spec.variables, child(rpath, "monomial"));
    require_degree(a, spec.max_degree, child(rpath, "monomial"));
    if (!seen.insert(a).second) throw SchemaError(child(rpath, "monomial"), "duplicate row");
    const json& terms = array_at(values[r], "tensor", rpath);
    Tensor2 t;
    std::set<std::pair<Monomial, Monomial>> keys;
    for (std::size_t e = 0; e < terms.size(); ++e) {
      std::string epath = child(child(rpath, "tensor"), e);
      const json& term = terms[e];
      if (!term.is_array() || term.size() != 3) {
        throw SchemaError(epath, "expected [\"left\", \"right\", \"rational\"]");
      }
      Monomial l = monomial_value(term[0], spec.variables, child(epath, 0));
      Monomial rr = monomial_value(term[1], spec.variables, child(epath, 1));
      if (!keys.insert({l, rr}).second) throw SchemaError(epath, "duplicate term");
      t.add({l, rr}, rational_value(term[2], child(epath, 2)));
    }
    out.map.set(a, std::move(t));
  }
  return out;
}

PMapPayload load_pmap(const json& p, const StructureSpec& spec, const std::string& path) {
  only_fields(p, {"role", "values"}, path);
  PMapPayload out{role_value(p, path, "p", "j"), PMap(spec.variables.size(), spec.max_degree)};
  const json& values = array_at(p, "values", path);
  std::set<std::pair<Monomial, Monomial>> seen;
  for (std::size_t r = 0; r < values.size(); ++r) {
    std::string rpath = child(child(path, "values"), r);
    only_fields(values[r], {"left", "right", "value"}, rpath);
    Monomial a = monomial_value(field(values[r], "left", rpath), spec.variables, child(rpath, "left"));
    Monomial b = monomial_value(field(values[r], "right", rpath), spec.variables, child(rpath, "right"));
    require_degree(a, spec.max_degree, child(rpath, "left"));
    require_degree(b, spec.max_degree, child(rpath, "right"));
    if (!seen.insert({a, b}).second) throw SchemaError(rpath, "duplicate pair");
    out.map.set(a, b, poly_value(field(values[r], "value", rpath), spec.variables, child(rpath, "value")));
  }
  return out;
}

}  // namespace

StructureSpec parse_spec(std::string_view json_text) {
  json doc;
  try {
    DuplicateKeyGuard guard;
    doc = json::parse(json_text.begin(), json_text.end(),
                      [&guard](int depth, json::parse_event_t ev, json& parsed) {
                        return guard(depth, ev, parsed);
                      });
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON", e.byte);
  }
  only_fields(doc, {"kind", "variables", "max_degree", "payload"}, "");
  StructureSpec spec;
  std::string kind = string_value(field(doc, "kind", ""), "/kind");
  if (kind == "poisson") {
    spec.kind = SpecKind::poisson;
  } else if (kind == "copoisson") {
    spec.kind = SpecKind::copoisson;
  } else if (kind == "struct_consts") {
    spec.kind = SpecKind::struct_consts;
  } else if (kind == "finhopf") {
    spec.kind = SpecKind::finhopf;
  } else if (kind == "qmap") {
    spec.kind = SpecKind::qmap;
  } else if (kind == "pmap") {
    spec.kind = SpecKind::pmap;
  } else {
    throw SchemaError("/kind", "unknown kind \"" + kind + "\"");
  }

  const json& vars = array_at(doc, "variables", "");
  std::set<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string name = string_value(vars[i], child("/variables", i));
    if (spec.kind != SpecKind::finhopf && !valid_identifier(name)) {
      throw SchemaError(child("/variables", i), "variable names are identifiers");
    }
    if (!names.insert(name).second) throw SchemaError(child("/variables", i), "duplicate variable name");
    spec.variables.push_back(name);
  }
  if (spec.variables.empty()) throw SchemaError("/variables", "at least one variable is required");
  if (spec.kind != SpecKind::finhopf && spec.variables.size() > kMaxVariables) {
    throw SchemaError("/variables", "at most " + std::to_string(kMaxVariables) + " variables");
  }
  if (doc.contains("max_degree")) {
    spec.max_degree = unsigned_value(doc["max_degree"], "/max_degree");
  } else if (spec.kind != SpecKind::finhopf) {
    throw SchemaError("", "missing field \"max_degree\"");
  }

  const json& payload = field(doc, "payload", "");
  switch (spec.kind) {
    case SpecKind::poisson: spec.payload = load_poisson(payload, spec, "/payload"); break;
    case SpecKind::copoisson: spec.payload = load_copoisson(payload, spec, "/payload"); break;
    case SpecKind::struct_consts: spec.payload = load_struct_consts(payload, spec, "/payload"); break;
    case SpecKind::finhopf: spec.payload = load_finhopf(payload, spec, "/payload"); break;
    case SpecKind::qmap: spec.payload = load_qmap(payload, spec, "/payload"); break;
    case SpecKind::pmap: spec.payload = load_pmap(payload, spec, "/payload"); break;
  }
  return spec;
}

StructureSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

json tensor2_json(const Tensor2& t, const std::vector<std::string>& names) {
  json terms = json::array();
  for (const auto& [k, c] : t) terms.push_back({to_string(k[0], names), to_string(k[1], names), to_string(c)});
  return terms;
}

json dense_json(const Vec& v, const std::vector<std::size_t>& shape, std::size_t level, std::size_t offset) {
  if (level == shape.size()) return to_string(v[offset]);
  std::size_t stride = 1;
  for (std::size_t i = level + 1; i < shape.size(); ++i) stride *= shape[i];
  json arr = json::array();
  for (std::size_t i = 0; i < shape[level]; ++i) arr.push_back(dense_json(v, shape, level + 1, offset + i * stride));
  return arr;
}

json payload_json(const StructureSpec& spec) {
  const auto& names = spec.variables;
  const std::size_t d = names.size();
  return std::visit(
      [&](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BracketTable>) {
          json brackets = json::object();
          for (const auto& [ij, f] : p.entries()) {
            brackets[std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] = to_string(f, names);
          }
          return {{"brackets", brackets}, {"mode", p.truncation() ? "series" : "polynomial"}};
        } else if constexpr (std::is_same_v<T, ITable>) {
          json rows = json::array();
          for (const auto& [a, m] : p.rows()) {
            json lambda = json::array();
            for (std::size_t i = 0; i < d; ++i) {
              for (std::size_t j = i + 1; j < d; ++j) {
                if (!copoisson::is_zero(m(i, j))) lambda.push_back({i + 1, j + 1, to_string(m(i, j))});
              }
            }
            rows.push_back({{"monomial", to_string(a, names)}, {"lambda", lambda}});
          }
          return {{"rows", rows}};
        } else if constexpr (std::is_same_v<T, StructConsts>) {
          json lambda = json::array();
          for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
              for (std::size_t l = 0; l < d; ++l) {
                if (!copoisson::is_zero(p(i, j, l))) lambda.push_back({i + 1, j + 1, l + 1, to_string(p(i, j, l))});
              }
            }
          }
          return {{"lambda", lambda}};
        } else if constexpr (std::is_same_v<T, FinHopf>) {
          const std::size_t n = p.dim();
          return {{"mult", dense_json(p.mult_table(), {n, n, n}, 0, 0)},
                  {"unit", dense_json(p.unit(), {n}, 0, 0)},
                  {"comult", dense_json(p.comult_table(), {n, n, n}, 0, 0)},
                  {"counit", dense_json(p.counit(), {n}, 0, 0)},
                  {"antipode", dense_json(p.antipode_table(), {n, n}, 0, 0)}};
        } else if constexpr (std::is_same_v<T, QMapPayload>) {
          json values = json::array();
          for (const auto& [a, t] : p.map.values()) {
            values.push_back({{"monomial", to_string(a, names)}, {"tensor", tensor2_json(t, names)}});
          }
          return {{"role", p.role}, {"values", values}};
        } else {
          json values = json::array();
          for (const auto& [ab, f] : p.map.values()) {
            values.push_back({{"left", to_string(ab.first, names)},
                              {"right", to_string(ab.second, names)},
                              {"value", to_string(f, names)}});
          }
          return {{"role", p.role}, {"values", values}};
        }
      },
      spec.payload);
}

}  // namespace

std::string serialize_spec(const StructureSpec& spec) {
  json doc = {{"kind", to_string(spec.kind)},
              {"variables", spec.variables},
              {"max_degree", spec.max_degree},
              {"payload", payload_json(spec)}};
  return doc.dump(2) + "\n";
}

}  // namespace copoisson
