#include "blring/ringspec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blring/ideals.hpp"

namespace blring {

namespace {

using nlohmann::json;

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  char take() { return eof() ? '\0' : text[pos++]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("ring spec: expected '" + std::string(1, c) +
                       "' at position " + std::to_string(pos) + " in '" +
                       text + "'");
  }
  bool eat_word(const std::string& w) {
    if (text.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  unsigned number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("ring spec: expected number at position " +
                       std::to_string(pos) + " in '" + text + "'");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + unsigned(take() - '0');
      if (v > 1000000) throw ParseError("ring spec: number too large");
    }
    return unsigned(v);
  }
};

RingSpec parse_spec(Cursor& c);

RingSpec parse_spec(Cursor& c) {
  RingSpec s;
  if (c.eat_word("zn:")) {
    s.kind = RingSpec::Kind::Zn;
    s.n = c.number();
    return s;
  }
  if (c.eat_word("polyquot:")) {
    s.kind = RingSpec::Kind::PolyQuot;
    s.n = c.number();
    c.expect(':');
    std::size_t start = c.pos;
    while (!c.eof() && c.peek() != ',' && c.peek() != ')') c.take();
    s.coeffs = parse_poly(c.text.substr(start, c.pos - start), s.n);
    return s;
  }
  if (c.eat_word("prod:(")) {
    s.kind = RingSpec::Kind::Product;
    s.factors.push_back(parse_spec(c));
    while (c.eat(',')) s.factors.push_back(parse_spec(c));
    c.expect(')');
    if (s.factors.size() < 2)
      throw ParseError("ring spec: prod needs at least two factors");
    return s;
  }
  if (c.eat_word("quot:(")) {
    s.kind = RingSpec::Kind::Quotient;
    s.factors.push_back(parse_spec(c));
    c.expect(',');
    if (!c.eat_word("ideal:["))
      throw ParseError("ring spec: quot needs ideal:[...]");
    s.ideal_gens.push_back(c.number());
    while (c.eat(',')) s.ideal_gens.push_back(c.number());
    c.expect(']');
    c.expect(')');
    return s;
  }
  throw ParseError("ring spec: unknown kind at position " +
                   std::to_string(c.pos) + " in '" + c.text + "'");
}

std::string poly_to_string(const std::vector<unsigned>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(coeffs[k]);
    } else {
      if (coeffs[k] != 1) out += std::to_string(coeffs[k]);
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<unsigned> parse_poly(const std::string& text, unsigned modulus) {
  if (modulus < 2) throw ParseError("poly: modulus must be >= 2");
  std::vector<unsigned> coeffs;
  std::size_t pos = 0;
  bool negative = false;
  if (text.empty()) throw ParseError("poly: empty");

  auto set_coeff = [&](unsigned power, unsigned value) {
    if (power > 16) throw ParseError("poly: degree too large");
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    unsigned v = value % modulus;
    if (negative) v = (modulus - v) % modulus;
    coeffs[power] = unsigned((coeffs[power] + v) % modulus);
  };

  while (pos < text.size()) {
    unsigned coef = 1;
    bool have_coef = false;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (!have_coef) coef = 0;
      have_coef = true;
      coef = coef * 10 + unsigned(text[pos++] - '0');
      if (coef > 1000000) throw ParseError("poly: coefficient too large");
    }
    unsigned power = 0;
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos >= text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw ParseError("poly: missing exponent");
        power = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
          power = power * 10 + unsigned(text[pos++] - '0');
      }
    } else if (!have_coef) {
      throw ParseError("poly: unexpected character at position " +
                       std::to_string(pos) + " in '" + text + "'");
    }
    set_coeff(power, coef);
    if (pos < text.size()) {
      if (text[pos] == '+') {
        negative = false;
        ++pos;
      } else if (text[pos] == '-') {
        negative = true;
        ++pos;
      } else {
        throw ParseError("poly: unexpected character at position " +
                         std::to_string(pos) + " in '" + text + "'");
      }
      if (pos == text.size()) throw ParseError("poly: trailing operator");
    }
  }
  if (coeffs.size() < 2) throw ParseError("poly: degree must be >= 1");
  return coeffs;
}

RingSpec parse_ring_spec(const std::string& text) {
  std::string stripped;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  Cursor cur{stripped};
  RingSpec s = parse_spec(cur);
  if (!cur.eof())
    throw ParseError("ring spec: trailing input at position " +
                     std::to_string(cur.pos) + " in '" + stripped + "'");
  return s;
}

std::string ring_spec_to_string(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Zn:
      return "zn:" + std::to_string(spec.n);
    case RingSpec::Kind::PolyQuot:
      return "polyquot:" + std::to_string(spec.n) + ":" +
             poly_to_string(spec.coeffs);
    case RingSpec::Kind::Product: {
      std::string out = "prod:(";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out += ",";
        out += ring_spec_to_string(spec.factors[i]);
      }
      return out + ")";
    }
    case RingSpec::Kind::Quotient: {
      std::string out = "quot:(" + ring_spec_to_string(spec.factors.at(0)) +
                        ",ideal:[";
      for (std::size_t i = 0; i < spec.ideal_gens.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spec.ideal_gens[i]);
      }
      return out + "])";
    }
  }
  throw Error("ring_spec_to_string: bad kind");
}

nlohmann::json ring_spec_to_json(const RingSpec& spec) {
  json j;
  switch (spec.kind) {
    case RingSpec::Kind::Zn:
      j["kind"] = "zn";
      j["n"] = spec.n;
      break;
    case RingSpec::Kind::PolyQuot:
      j["kind"] = "polyquot";
      j["n"] = spec.n;
      j["coeffs"] = spec.coeffs;
      break;
    case RingSpec::Kind::Product: {
      j["kind"] = "product";
      json fs = json::array();
      for (const auto& f : spec.factors) fs.push_back(ring_spec_to_json(f));
      j["factors"] = fs;
      break;
    }
    case RingSpec::Kind::Quotient:
      j["kind"] = "quotient";
      j["ring"] = ring_spec_to_json(spec.factors.at(0));
      j["ideal"] = spec.ideal_gens;
      break;
  }
  return j;
}

RingSpec ring_spec_from_json(const nlohmann::json& j) {
  RingSpec s;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zn") {
    s.kind = RingSpec::Kind::Zn;
    s.n = j.at("n").get<unsigned>();
  } else if (kind == "polyquot") {
    s.kind = RingSpec::Kind::PolyQuot;
    s.n = j.at("n").get<unsigned>();
    s.coeffs = j.at("coeffs").get<std::vector<unsigned>>();
  } else if (kind == "product") {
    s.kind = RingSpec::Kind::Product;
    for (const auto& f : j.at("factors"))
      s.factors.push_back(ring_spec_from_json(f));
    if (s.factors.size() < 2)
      throw ParseError("ring spec json: product needs two factors");
  } else if (kind == "quotient") {
    s.kind = RingSpec::Kind::Quotient;
    s.factors.push_back(ring_spec_from_json(j.at("ring")));
    s.ideal_gens = j.at("ideal").get<std::vector<unsigned>>();
  } else {
    throw ParseError("ring spec json: unknown kind '" + kind + "'");
  }
  return s;
}

FiniteRing build_ring(const RingSpec& spec, std::size_t order_cap) {
  switch (spec.kind) {
    case RingSpec::Kind::Zn:
      return mk_zn(spec.n, order_cap);
    case RingSpec::Kind::PolyQuot:
      return mk_poly_quotient(PolySpec(spec.n, spec.coeffs), order_cap);
    case RingSpec::Kind::Product: {
      FiniteRing acc = build_ring(spec.factors.at(0), order_cap);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        acc = mk_product(acc, build_ring(spec.factors[i], order_cap),
                         order_cap);
      return acc;
    }
    case RingSpec::Kind::Quotient: {
      FiniteRing inner = build_ring(spec.factors.at(0), order_cap);
      std::vector<Elem> gens;
      for (unsigned g : spec.ideal_gens) {
        if (g >= inner.order)
          throw ParseError("ring spec: ideal generator " + std::to_string(g) +
                           " out of range for " + inner.name);
        gens.push_back(Elem(g));
      }
      Ideal ideal = ideal_generated_by(inner, gens);
      return quotient_ring(inner, ideal);
    }
  }
  throw Error("build_ring: bad kind");
}

namespace {

json matrix_to_json(std::size_t n, const std::vector<Elem>& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(t[i * n + j]);
    rows.push_back(row);
  }
  return rows;
}

std::vector<Elem> matrix_from_json(const json& j, std::size_t n,
                                   const std::string& what) {
  std::vector<Elem> out;
  if (!j.is_array() || j.size() != n)
    throw ParseError("algebra spec: " + what + " must be a " +
                     std::to_string(n) + "-row matrix");
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n)
      throw ParseError("algebra spec: ragged " + what + " matrix");
    for (const auto& v : row) out.push_back(v.get<Elem>());
  }
  return out;
}

}  // namespace

nlohmann::json algebra_spec_to_json(const AlgebraTableSpec& spec) {
  json j;
  j["size"] = spec.size;
  if (!spec.labels.empty()) j["labels"] = spec.labels;
  if (!spec.leq.empty()) {
    json rows = json::array();
    for (std::size_t i = 0; i < spec.size; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < spec.size; ++k)
        row.push_back(int(spec.leq[i * spec.size + k]));
      rows.push_back(row);
    }
    j["leq"] = rows;
  }
  if (!spec.meet.empty()) j["meet"] = matrix_to_json(spec.size, spec.meet);
  if (!spec.join.empty()) j["join"] = matrix_to_json(spec.size, spec.join);
  j["odot"] = matrix_to_json(spec.size, spec.odot);
  if (!spec.arrow.empty()) j["arrow"] = matrix_to_json(spec.size, spec.arrow);
  return j;
}

AlgebraTableSpec algebra_spec_from_json(const nlohmann::json& j) {
  AlgebraTableSpec spec;
  spec.size = j.at("size").get<std::size_t>();
  if (spec.size == 0 || spec.size > 256)
    throw ParseError("algebra spec: size out of range");
  if (j.contains("labels"))
    spec.labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("leq")) {
    auto m = matrix_from_json(j.at("leq"), spec.size, "leq");
    spec.leq.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 1) throw ParseError("algebra spec: leq entries must be 0/1");
      spec.leq[i] = std::uint8_t(m[i]);
    }
  }
  if (j.contains("meet"))
    spec.meet = matrix_from_json(j.at("meet"), spec.size, "meet");
  if (j.contains("join"))
    spec.join = matrix_from_json(j.at("join"), spec.size, "join");
  spec.odot = matrix_from_json(j.at("odot"), spec.size, "odot");
  if (j.contains("arrow"))
    spec.arrow = matrix_from_json(j.at("arrow"), spec.size, "arrow");
  return spec;
}

AlgebraTableSpec algebra_spec_of(const ResLat& l) {
  AlgebraTableSpec spec;
  spec.size = l.size;
  spec.labels = l.labels;
  spec.leq = l.leq;
  spec.odot = l.odot;
  spec.arrow = l.arrow;
  return spec;
}

AlgebraTableSpec load_algebra_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  return algebra_spec_from_json(j);
}

void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace blring
