// Copyright 2026 The arrangeops Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arrangeops/io.hpp"

#include <mpfr.h>

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "arrangeops/catalog.hpp"

#ifndef ARRANGEOPS_VERSION
#define ARRANGEOPS_VERSION "unknown"
#endif

namespace arrangeops {

namespace {

Rational parse_rational(const std::string& s) {
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos) {
    throw ParseError("not a rational: '" + s + "'");
  }
  try {
    Rational q(s[0] == '+' ? s.substr(1) : s, 10);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'");
  }
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of \"p/q\" strings");
  std::vector<Rational> out;
  for (const auto& c : j) {
    if (c.is_string()) {
      out.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      out.emplace_back(c.get<long>());
    } else {
      throw ParseError("coefficients must be \"p/q\" strings or integers");
    }
  }
  return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

FieldElement entry_from_json(const Json& j, const Field& field) {
  if (j.is_object()) {
    FieldElement x = element_from_json(j);
    if (!same_field(x.field(), field)) throw ParseError("element field differs from the container field");
    return FieldElement(field, x.coeffs());
  }
  try {
    return FieldElement(field, rationals_from_json(j));
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
}

template <typename T>
Json triples_to_json(const Configuration<T>& c, const char* key) {
  Json rows = Json::array();
  for (const auto& x : c.items()) {
    rows.push_back(Json::array({to_json(x[0]), to_json(x[1]), to_json(x[2])}));
  }
  return Json{{"field", to_json(c.field())}, {key, rows}};
}

template <typename T>
Configuration<T> triples_from_json(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains("field") || !j.contains(key)) {
    throw ParseError(std::string("expected {\"field\": ..., \"") + key + "\": [...]}");
  }
  const Field f = field_from_json(j.at("field"));
  Configuration<T> out(f);
  for (const auto& row : j.at(key)) {
    if (!row.is_array() || row.size() != 3) throw ParseError("each entry needs three coordinates");
    try {
      out.add(T(entry_from_json(row[0], f), entry_from_json(row[1], f), entry_from_json(row[2], f)));
    } catch (const GeometryError& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

// --- expressions -------------------------------------------------------------

struct Node {
  enum Kind { kNum, kZeta, kNeg, kAdd, kSub, kMul, kDiv, kPow, kSqrt } kind = kNum;
  Rational num;
  long order = 0;     // kZeta
  Integer exponent;   // kPow
  std::vector<std::unique_ptr<Node>> kids;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind kind) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  return n;
}

// Evaluates a subtree that must not contain roots of unity or square roots.
Rational fold(const Node& n, const std::string& text) {
  auto fail = [&](const std::string& msg) -> Rational { throw ParseError("expression '" + text + "': " + msg); };
  switch (n.kind) {
    case Node::kNum:
      return n.num;
    case Node::kNeg:
      return -fold(*n.kids[0], text);
    case Node::kAdd:
      return fold(*n.kids[0], text) + fold(*n.kids[1], text);
    case Node::kSub:
      return fold(*n.kids[0], text) - fold(*n.kids[1], text);
    case Node::kMul:
      return fold(*n.kids[0], text) * fold(*n.kids[1], text);
    case Node::kDiv: {
      const Rational d = fold(*n.kids[1], text);
      if (d == 0) return fail("division by zero");
      return fold(*n.kids[0], text) / d;
    }
    case Node::kPow: {
      const Rational b = fold(*n.kids[0], text);
      if (!n.exponent.fits_slong_p() || abs(n.exponent) > 4096) return fail("exponent too large");
      const long e = n.exponent.get_si();
      if (b == 0 && e < 0) return fail("0 to a negative power");
      Rational r(1), base = e < 0 ? Rational(1) / b : b;
      for (long k = 0; k < std::labs(e); ++k) r *= base;
      return r;
    }
    default:
      return fail("expected a rational expression");
  }
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string text) : s_(std::move(text)) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression '" + s_ + "': " + msg + " at offset " + std::to_string(pos_));
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr left = term();
    while (true) {
      Node::Kind k;
      if (accept('+')) {
        k = Node::kAdd;
      } else if (accept('-')) {
        k = Node::kSub;
      } else {
        return left;
      }
      NodePtr n = make_node(k);
      n->kids.push_back(std::move(left));
      n->kids.push_back(term());
      left = std::move(n);
    }
  }

  NodePtr term() {
    NodePtr left = unary();
    while (true) {
      Node::Kind k;
      if (accept('*')) {
        k = Node::kMul;
      } else if (accept('/')) {
        k = Node::kDiv;
      } else {
        return left;
      }
      NodePtr n = make_node(k);
      n->kids.push_back(std::move(left));
      n->kids.push_back(unary());
      left = std::move(n);
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      NodePtr n = make_node(Node::kNeg);
      n->kids.push_back(unary());
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    NodePtr e;
    if (accept('(')) {
      e = expr();
      if (!accept(')')) fail("missing ')'");
    } else {
      e = primary();
    }
    const Rational q = fold(*e, s_);
    if (q.get_den() != 1) fail("exponent must be an integer");
    NodePtr n = make_node(Node::kPow);
    n->exponent = negative ? Integer(-q.get_num()) : Integer(q.get_num());
    n->kids.push_back(std::move(base));
    return n;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (accept('(')) {
      NodePtr n = expr();
      if (!accept(')')) fail("missing ')'");
      return n;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      NodePtr n = make_node(Node::kNum);
      n->num = Rational(Integer(s_.substr(pos_, end - pos_), 10));
      pos_ = end;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string word = s_.substr(pos_, end - pos_);
      pos_ = end;
      return identifier(word);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr identifier(const std::string& word) {
    auto zeta = [](long n) {
      NodePtr z = make_node(Node::kZeta);
      z->order = n;
      return z;
    };
    if (word == "i") return zeta(4);
    if (word == "j") return zeta(3);
    auto digits_after = [&](const std::string& prefix) -> std::optional<long> {
      if (word.rfind(prefix, 0) != 0 || word.size() == prefix.size()) return std::nullopt;
      const std::string rest = word.substr(prefix.size());
      if (rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
      if (rest.size() > 9) fail("index too large in '" + word + "'");
      return std::stol(rest);
    };
    if (auto n = digits_after("zeta")) {
      if (*n < 1) fail("zeta needs a positive order");
      return zeta(*n);
    }
    if (word == "sqrt") {
      if (!accept('(')) fail("sqrt needs '('");
      NodePtr n = make_node(Node::kSqrt);
      n->kids.push_back(expr());
      if (!accept(')')) fail("missing ')'");
      return n;
    }
    if (auto d = digits_after("sqrt")) {
      NodePtr n = make_node(Node::kSqrt);
      NodePtr arg = make_node(Node::kNum);
      arg->num = Rational(*d);
      n->kids.push_back(std::move(arg));
      return n;
    }
    fail("unknown symbol '" + word + "'");
  }

  std::string s_;
  size_t pos_ = 0;
};

// Squarefree part of num * den; 1 when q is a rational square.
long squarefree_core(const Rational& q) {
  Integer m = q.get_num() * q.get_den();
  const int sign = sgn(m);
  m = abs(m);
  Integer core = 1;
  for (long p = 2; Integer(p) * p <= m; ++p) {
    if (p > 1000000) throw ParseError("radicand too large to factor");
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) core *= p;
  }
  core *= m;
  if (!core.fits_slong_p()) throw ParseError("radicand too large");
  return sign * core.get_si();
}

struct Requirements {
  std::set<long> orders;
  std::set<long> cores;
};

void collect(const Node& n, const std::string& text, Requirements& req) {
  if (n.kind == Node::kZeta && n.order > 2) req.orders.insert(n.order);
  if (n.kind == Node::kSqrt) {
    const Rational r = fold(*n.kids[0], text);
    if (r != 0) {
      const long core = squarefree_core(r);
      if (core != 1) req.cores.insert(core);
    }
    return;
  }
  for (const auto& k : n.kids) collect(*k, text, req);
}

Field infer_field(const Requirements& req) {
  if (req.orders.empty() && req.cores.empty()) return rational_field();
  if (req.orders.empty() && req.cores.size() == 1) return quadratic_field(*req.cores.begin());
  long m = 1;
  for (long n : req.orders) m = std::lcm(m, n);
  for (long d : req.cores) {
    const long a = std::labs(d);
    const long conductor = (((d % 4) + 4) % 4 == 1) ? a : 4 * a;
    m = std::lcm(m, conductor);
  }
  if (m % 4 == 2) m /= 2;
  return make_cyclotomic_field(m);
}

FieldElement root_in_field(const Field& f, long n) {
  if (n == 1) return FieldElement::one(f);
  if (n == 2) return -FieldElement::one(f);
  if (f->kind == FieldKind::kCyclotomic) {
    const long m = f->parameter;
    const FieldElement z = FieldElement::generator(f);
    if (m % n == 0) return z.pow(m / n);
    if (m % 2 == 1 && (2 * m) % n == 0) return (-z).pow(2 * m / n);
  }
  if (f->kind == FieldKind::kQuadratic) {
    const FieldElement r = FieldElement::generator(f);
    const FieldElement half(f, Rational(1, 2));
    if (f->parameter == -1 && n == 4) return r;
    if (f->parameter == -3 && n == 3) return (r - FieldElement::one(f)) * half;
    if (f->parameter == -3 && n == 6) return (r + FieldElement::one(f)) * half;
  }
  throw ParseError("zeta" + std::to_string(n) + " is not in " + describe(f));
}

FieldElement sqrt_in(const Field& f, const Rational& r) {
  if (r == 0) return FieldElement::zero(f);
  const auto root = sqrt_in_field(FieldElement(f, r));
  if (!root) throw ParseError("sqrt(" + r.get_str() + ") is not in " + describe(f));
  const ComplexApprox z = approx_complex(*root, 64);
  const bool keep = sgn(r) > 0 ? z.re > 0 : z.im > 0;
  return keep ? *root : -*root;
}

FieldElement evaluate(const Node& n, const Field& f, const std::string& text) {
  switch (n.kind) {
    case Node::kNum:
      return FieldElement(f, n.num);
    case Node::kZeta:
      return root_in_field(f, n.order);
    case Node::kNeg:
      return -evaluate(*n.kids[0], f, text);
    case Node::kAdd:
      return evaluate(*n.kids[0], f, text) + evaluate(*n.kids[1], f, text);
    case Node::kSub:
      return evaluate(*n.kids[0], f, text) - evaluate(*n.kids[1], f, text);
    case Node::kMul:
      return evaluate(*n.kids[0], f, text) * evaluate(*n.kids[1], f, text);
    case Node::kDiv: {
      const FieldElement d = evaluate(*n.kids[1], f, text);
      if (d.is_zero()) throw ParseError("expression '" + text + "': division by zero");
      return evaluate(*n.kids[0], f, text) / d;
    }
    case Node::kPow: {
      const FieldElement b = evaluate(*n.kids[0], f, text);
      if (b.is_zero() && sgn(n.exponent) < 0) throw ParseError("expression '" + text + "': 0 to a negative power");
      return b.pow(n.exponent);
    }
    case Node::kSqrt:
      return sqrt_in(f, fold(*n.kids[0], text));
  }
  throw ParseError("bad expression node");
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_positive(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(what + " needs a positive integer, got '" + s + "'");
  }
  const long n = std::stol(s);
  if (n < 1) throw ParseError(what + " needs a positive integer, got '" + s + "'");
  return n;
}

}  // namespace

// --- fields and elements -----------------------------------------------------

Json to_json(const Field& f) {
  switch (f->kind) {
    case FieldKind::kRational:
      return Json{{"kind", "rational"}};
    case FieldKind::kQuadratic:
      return Json{{"kind", "quadratic"}, {"d", f->parameter}};
    case FieldKind::kCyclotomic:
      return Json{{"kind", "cyclotomic"}, {"n", f->parameter}};
    case FieldKind::kSqrtExtension:
      return Json{{"kind", "sqrt_extension"}, {"base", to_json(f->base)}, {"delta", rationals_to_json(f->delta)}};
  }
  throw std::logic_error("unknown field kind");
}

Field field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("field descriptor needs a \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "rational") return rational_field();
    if (kind == "quadratic") return quadratic_field(j.at("d").get<long>());
    if (kind == "cyclotomic") {
      const long n = j.at("n").get<long>();
      if (n < 1) throw ParseError("cyclotomic order must be positive");
      return make_cyclotomic_field(n);
    }
    if (kind == "sqrt_extension") {
      const Field base = field_from_json(j.at("base"));
      return sqrt_extension_field(base, FieldElement(base, rationals_from_json(j.at("delta"))));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad field descriptor: ") + e.what());
  } catch (const FieldError& e) {
    throw ParseError(std::string("bad field descriptor: ") + e.what());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

Json to_json(const FieldElement& x) {
  return Json{{"field", to_json(x.field())}, {"coeffs", rationals_to_json(x.coeffs())}};
}

FieldElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("coeffs")) {
    throw ParseError("element needs \"field\" and \"coeffs\"");
  }
  try {
    return FieldElement(field_from_json(j.at("field")), rationals_from_json(j.at("coeffs")));
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Arrangement& a) { return triples_to_json(a, "lines"); }
Arrangement arrangement_from_json(const Json& j) { return triples_from_json<ProjLine>(j, "lines"); }
Json to_json(const PointSet& p) { return triples_to_json(p, "points"); }
PointSet point_set_from_json(const Json& j) { return triples_from_json<ProjPoint>(j, "points"); }

Json to_json(const NonBasisSpec& spec) {
  return Json{{"triples", spec.triples}, {"quintuples", spec.quintuples}};
}

NonBasisSpec non_basis_spec_from_json(const Json& j) {
  NonBasisSpec spec;
  try {
    spec.triples = j.at("triples").get<std::vector<std::array<int, 3>>>();
    spec.quintuples = j.at("quintuples").get<std::vector<std::array<int, 5>>>();
    spec.validate();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad non-basis spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad non-basis spec: ") + e.what());
  }
  return spec;
}

Json to_json(const OrbitReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back(to_json(t));
  Json out{{"seed", to_json(r.seed)},
           {"terms", terms},
           {"unassuming", r.unassuming},
           {"terminated", r.terminated},
           {"union", to_json(r.union_arrangement)},
           {"union_profile", r.union_profile.to_string()}};
  out["period"] = r.period ? Json(*r.period) : Json(nullptr);
  out["preperiod"] = r.preperiod ? Json(*r.preperiod) : Json(nullptr);
  return out;
}

Json to_json(const ModuliPoint& m) {
  Json out{{"class", to_string(m.klass)}};
  if (!m.value) {
    out["value"] = nullptr;
  } else if (m.value->is_infinite()) {
    out["value"] = "inf";
  } else {
    out["value"] = to_json(m.value->value());
    out["value_text"] = m.value->value().to_string();
  }
  return out;
}

// --- parsing -----------------------------------------------------------------

Field parse_field(const std::string& text) {
  const std::string t = text;
  if (t == "Q" || t == "rational" || t == "QQ") return rational_field();
  try {
    auto colon = t.find(':');
    if (colon != std::string::npos) {
      const std::string head = t.substr(0, colon), arg = t.substr(colon + 1);
      if (head == "cyclotomic") return make_cyclotomic_field(parse_positive(arg, "cyclotomic"));
      if (head == "quadratic") return quadratic_field(std::stol(arg));
      throw ParseError("unknown field '" + text + "'");
    }
    if (t.rfind("zeta", 0) == 0) return make_cyclotomic_field(parse_positive(t.substr(4), "zeta"));
    if (t.rfind("sqrt", 0) == 0) {
      std::string arg = t.substr(4);
      if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
      const long core = squarefree_core(parse_rational(arg));
      if (core == 1) throw ParseError("'" + text + "' is rational");
      return quadratic_field(core);
    }
  } catch (const FieldError& e) {
    throw ParseError("bad field '" + text + "': " + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError("bad field '" + text + "'");
  }
  throw ParseError("unknown field '" + text + "'");
}

std::vector<FieldElement> parse_expressions(const std::vector<std::string>& texts,
                                            const std::optional<Field>& field) {
  std::vector<NodePtr> trees;
  Requirements req;
  for (const auto& t : texts) {
    trees.push_back(ExpressionParser(t).parse());
    collect(*trees.back(), t, req);
  }
  const Field f = field ? *field : infer_field(req);
  std::vector<FieldElement> out;
  try {
    for (size_t i = 0; i < texts.size(); ++i) out.push_back(evaluate(*trees[i], f, texts[i]));
  } catch (const ParseError&) {
    throw;
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
  return out;
}

FieldElement parse_expression(const std::string& text, const std::optional<Field>& field) {
  return parse_expressions({text}, field)[0];
}

Arrangement parse_arrangement_spec(const std::string& spec, const std::optional<Field>& field) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    return arrangement_from_json(read_json_file(spec));
  }
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  auto no_arg = [&] {
    if (has_arg) throw ParseError("'" + head + "' takes no argument");
  };
  try {
    if (head == "ceva") return ceva(parse_positive(arg, "ceva"));
    if (head == "assembly") return two_power_assembly(parse_positive(arg, "assembly"));
    if (head == "quadrilateral") {
      no_arg();
      return complete_quadrilateral();
    }
    if (head == "hesse") {
      no_arg();
      return hesse_seed();
    }
    if (head == "hesse-union") {
      no_arg();
      return hesse_union();
    }
    if (head == "g26") {
      no_arg();
      return g26_union(hesse_seed());
    }
    if (head == "a15") {
      no_arg();
      return a15_120();
    }
    if (head == "p9-dual") {
      no_arg();
      return limit_objects().dual_p9;
    }
    if (head == "p9-joins") {
      no_arg();
      return limit_objects().joins_p9;
    }
    if (head == "c0") {
      const std::string t = arg.rfind("t=", 0) == 0 ? arg.substr(2) : arg;
      if (t == "inf") return c0_of(Extended::infinity(field ? *field : rational_field()));
      return c0_of(parse_expression(t, field));
    }
    if (head == "cabc") {
      const auto parts = split_top_level(arg, ',');
      if (parts.size() != 3) throw ParseError("cabc needs three comma-separated values");
      const auto v = parse_expressions(parts, field);
      return c_abc(v[0], v[1], v[2]);
    }
    if (head == "galois") return galois_orbit_union(parse_expression(arg, field));
    if (head == "lambda") return lambda_op(parse_arrangement_spec(arg, field), 2, 3);
    if (head == "dual15") return dual_15(parse_arrangement_spec(arg, field));
    if (head == "orbit") return iterate(parse_arrangement_spec(arg, field), 200).union_arrangement;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("cannot build '" + spec + "': " + e.what());
  }
  throw ParseError("unknown arrangement spec '" + spec + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

Json RunManifest::to_json() const {
  Json t = Json::object();
  for (const auto& [k, v] : timings) t[k] = v;
  return Json{{"command", command},
              {"inputs", inputs},
              {"outputs", outputs},
              {"timings", t},
              {"versions", {{"arrangeops", ARRANGEOPS_VERSION}, {"gmp", gmp_version}, {"mpfr", mpfr_get_version()}}}};
}

}  // namespace arrangeops
