#include "blring/finring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "blring/ideals.hpp"

namespace blring {

namespace {

std::vector<std::string> zn_labels(unsigned n) {
  std::vector<std::string> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

std::string poly_term(unsigned c, unsigned power) {
  if (power == 0) return std::to_string(c);
  std::string x = power == 1 ? "X" : "X^" + std::to_string(power);
  if (c == 1) return x;
  return std::to_string(c) + x;
}

std::string poly_label(const std::vector<Elem>& digits, unsigned d) {
  std::string out;
  for (unsigned k = d; k-- > 0;) {
    if (digits[k] == 0) continue;
    if (!out.empty()) out += "+";
    out += poly_term(digits[k], k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

PolySpec::PolySpec(unsigned n, std::vector<unsigned> cs)
    : modulus(n), coeffs(std::move(cs)) {
  if (modulus < 2) throw Error("PolySpec: modulus must be >= 2");
  if (coeffs.size() < 2) throw Error("PolySpec: degree must be >= 1");
  for (auto& c : coeffs) c %= modulus;
  if (coeffs.back() != 1)
    throw NonMonicError("PolySpec: leading coefficient must be 1 mod " +
                        std::to_string(modulus));
}

std::string PolySpec::to_string() const {
  std::string out;
  for (unsigned k = unsigned(coeffs.size()); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += "+";
    out += poly_term(coeffs[k], k);
  }
  return out.empty() ? "0" : out;
}

FiniteRing mk_zn(unsigned n, std::size_t order_cap) {
  if (n < 1) throw Error("mk_zn: n must be >= 1");
  if (n > order_cap)
    throw OrderCapError("mk_zn: order " + std::to_string(n) +
                        " exceeds cap " + std::to_string(order_cap));
  FiniteRing r;
  r.order = n;
  r.add.resize(std::size_t(n) * n);
  r.mul.resize(std::size_t(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      r.add[std::size_t(a) * n + b] = Elem((a + b) % n);
      r.mul[std::size_t(a) * n + b] = Elem((a * b) % n);
    }
  r.zero = 0;
  r.one = Elem(n == 1 ? 0 : 1);
  r.labels = zn_labels(n);
  r.name = "Z_" + std::to_string(n);
  return r;
}

FiniteRing mk_poly_quotient(const PolySpec& spec, std::size_t order_cap) {
  const unsigned n = spec.modulus;
  const unsigned d = spec.degree();
  std::size_t m = 1;
  for (unsigned i = 0; i < d; ++i) {
    m *= n;
    if (m > order_cap)
      throw OrderCapError("mk_poly_quotient: order " + std::to_string(n) +
                          "^" + std::to_string(d) + " exceeds cap " +
                          std::to_string(order_cap));
  }

  FiniteRing r;
  r.order = m;
  r.zero = 0;
  r.one = 1;

  // digit decomposition, constant digit least significant
  std::vector<Elem> digits(m * d);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t v = e;
    for (unsigned i = 0; i < d; ++i) {
      digits[e * d + i] = Elem(v % n);
      v /= n;
    }
  }

  r.add.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      std::size_t s = 0, pw = 1;
      for (unsigned i = 0; i < d; ++i) {
        s += ((digits[a * d + i] + digits[b * d + i]) % n) * pw;
        pw *= n;
      }
      r.add[a * m + b] = Elem(s);
      r.add[b * m + a] = Elem(s);
    }

  // scalar multiples: smul[c][e] = c * e in the additive group
  std::vector<Elem> smul(std::size_t(n) * m, 0);
  for (unsigned c = 1; c < n; ++c)
    for (std::size_t e = 0; e < m; ++e)
      smul[std::size_t(c) * m + e] =
          r.add[std::size_t(smul[std::size_t(c - 1) * m + e]) * m + e];

  // X^d mod f  =  -(f - X^d), then multiplication by X on indices
  std::size_t xd_red = 0;
  {
    std::size_t pw = 1;
    for (unsigned i = 0; i < d; ++i) {
      xd_red += std::size_t((n - spec.coeffs[i]) % n) * pw;
      pw *= n;
    }
  }
  const std::size_t low_mod = m / n;  // n^(d-1)
  std::vector<Elem> mul_x(m);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t shifted = (e % low_mod) * n;
    Elem top = digits[e * d + (d - 1)];
    mul_x[e] = r.add[shifted * m + smul[std::size_t(top) * m + xd_red]];
  }

  r.mul.resize(m * m);
  std::vector<Elem> a_pow(d);
  for (std::size_t a = 0; a < m; ++a) {
    a_pow[0] = Elem(a);
    for (unsigned i = 1; i < d; ++i) a_pow[i] = mul_x[a_pow[i - 1]];
    for (std::size_t b = a; b < m; ++b) {
      Elem acc = 0;
      for (unsigned i = 0; i < d; ++i) {
        Elem c = digits[b * d + i];
        if (c != 0) acc = r.add[std::size_t(acc) * m + smul[std::size_t(c) * m + a_pow[i]]];
      }
      r.mul[a * m + b] = acc;
      r.mul[b * m + a] = acc;
    }
  }

  r.labels.resize(m);
  std::vector<Elem> ds(d);
  for (std::size_t e = 0; e < m; ++e) {
    for (unsigned i = 0; i < d; ++i) ds[i] = digits[e * d + i];
    r.labels[e] = poly_label(ds, d);
  }
  r.name = "Z_" + std::to_string(n) + "[X]/(" + spec.to_string() + ")";
  return r;
}

FiniteRing mk_product(const FiniteRing& a, const FiniteRing& b,
                      std::size_t order_cap) {
  const std::size_t m = a.order * b.order;
  if (m > order_cap)
    throw OrderCapError("mk_product: order " + std::to_string(m) +
                        " exceeds cap " + std::to_string(order_cap));
  FiniteRing r;
  r.order = m;
  r.add.resize(m * m);
  r.mul.resize(m * m);
  const std::size_t nb = b.order;
  for (std::size_t x = 0; x < m; ++x) {
    const Elem xa = Elem(x / nb), xb = Elem(x % nb);
    for (std::size_t y = 0; y < m; ++y) {
      const Elem ya = Elem(y / nb), yb = Elem(y % nb);
      r.add[x * m + y] = Elem(a.add_at(xa, ya) * nb + b.add_at(xb, yb));
      r.mul[x * m + y] = Elem(a.mul_at(xa, ya) * nb + b.mul_at(xb, yb));
    }
  }
  r.zero = Elem(a.zero * nb + b.zero);
  r.one = Elem(a.one * nb + b.one);
  r.labels.resize(m);
  for (std::size_t x = 0; x < m; ++x)
    r.labels[x] = "(" + a.labels[x / nb] + "," + b.labels[x % nb] + ")";
  r.name = a.name + " x " + b.name;
  return r;
}

namespace {

struct QuotientWithMap {
  FiniteRing ring;
  std::vector<Elem> coset_of;  // parent element -> coset index
};

QuotientWithMap quotient_with_map(const FiniteRing& r, const Ideal& ideal) {
  if (ideal.ring != &r) throw RingMismatchError("quotient_ring: foreign ideal");
  validate_ideal(r, ideal.members);

  const std::size_t m = r.order;
  std::vector<Elem> coset_of(m, Elem(m >= 1 ? m - 1 : 0));
  std::vector<bool> seen(m, false);
  std::vector<Elem> reps;
  std::vector<Elem> members;
  for (Elem i = 0; i < m; ++i)
    if (ideal.members.test(i)) members.push_back(i);
  for (std::size_t e = 0; e < m; ++e) {
    if (seen[e]) continue;
    const Elem id = Elem(reps.size());
    reps.push_back(Elem(e));
    for (Elem i : members) {
      Elem x = r.add_at(Elem(e), i);
      seen[x] = true;
      coset_of[x] = id;
    }
  }

  FiniteRing q;
  q.order = reps.size();
  q.add.resize(q.order * q.order);
  q.mul.resize(q.order * q.order);
  for (std::size_t x = 0; x < q.order; ++x)
    for (std::size_t y = 0; y < q.order; ++y) {
      q.add[x * q.order + y] = coset_of[r.add_at(reps[x], reps[y])];
      q.mul[x * q.order + y] = coset_of[r.mul_at(reps[x], reps[y])];
    }
  q.zero = coset_of[r.zero];
  q.one = coset_of[r.one];
  q.labels.resize(q.order);
  for (std::size_t x = 0; x < q.order; ++x) q.labels[x] = r.labels[reps[x]];
  q.name = r.name + "/" + ideal.label();
  return {std::move(q), std::move(coset_of)};
}

}  // namespace

FiniteRing quotient_ring(const FiniteRing& r, const Ideal& ideal) {
  return quotient_with_map(r, ideal).ring;
}

ElementClass element_class(const FiniteRing& r, Elem a) {
  if (a >= r.order) throw Error("element_class: index out of range");
  if (a == r.zero) return ElementClass::Zero;
  for (Elem b = 0; b < r.order; ++b)
    if (r.mul_at(a, b) == r.one) return ElementClass::Unit;
  for (Elem b = 0; b < r.order; ++b)
    if (b != r.zero && r.mul_at(a, b) == r.zero) return ElementClass::ZeroDivisor;
  throw Error("element_class: " + r.labels[a] +
              " is neither unit nor zero divisor; not a finite commutative "
              "unitary ring?");
}

RingPredicates ring_predicates(const FiniteRing& r) {
  RingPredicates p;
  p.is_trivial = r.order == 1;
  if (p.is_trivial) return p;
  p.is_field = true;
  for (Elem a = 0; a < r.order && p.is_field; ++a) {
    if (a == r.zero) continue;
    bool unit = false;
    for (Elem b = 0; b < r.order; ++b)
      if (r.mul_at(a, b) == r.one) {
        unit = true;
        break;
      }
    if (!unit) p.is_field = false;
  }
  p.is_integral_domain = true;
  for (Elem a = 0; a < r.order && p.is_integral_domain; ++a) {
    if (a == r.zero) continue;
    for (Elem b = 0; b < r.order; ++b)
      if (b != r.zero && r.mul_at(a, b) == r.zero) {
        p.is_integral_domain = false;
        break;
      }
  }
  return p;
}

CrtWitness crt_split(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  if (i.ring != &r || j.ring != &r)
    throw RingMismatchError("crt_split: foreign ideal");
  Ideal sum = ideal_sum(i, j);
  if (!sum.is_whole_ring())
    throw NotCoprimeError("crt_split: " + i.label() + " + " + j.label() +
                          " != R");

  CrtWitness w;
  Ideal prod = ideal_product(i, j);
  Ideal inter = ideal_intersect(i, j);
  w.product_equals_intersection = prod.members == inter.members;

  auto qi = quotient_with_map(r, i);
  auto qj = quotient_with_map(r, j);
  auto q = quotient_with_map(r, inter);
  w.product = mk_product(qi.ring, qj.ring);
  const std::size_t nb = qj.ring.order;

  w.iso.resize(q.ring.order);
  // representative = first parent element mapping to each coset
  std::vector<Elem> rep_of(q.ring.order, 0);
  std::vector<bool> have(q.ring.order, false);
  for (Elem e = 0; e < r.order; ++e) {
    Elem c = q.coset_of[e];
    if (!have[c]) {
      have[c] = true;
      rep_of[c] = e;
    }
  }
  for (std::size_t c = 0; c < q.ring.order; ++c)
    w.iso[c] = Elem(qi.coset_of[rep_of[c]] * nb + qj.coset_of[rep_of[c]]);

  std::vector<bool> hit(w.product.order, false);
  w.is_bijection = q.ring.order == w.product.order;
  for (Elem c : w.iso) {
    if (hit[c]) w.is_bijection = false;
    hit[c] = true;
  }
  w.is_homomorphism = w.iso[q.ring.one] == w.product.one;
  for (std::size_t x = 0; x < q.ring.order && w.is_homomorphism; ++x)
    for (std::size_t y = 0; y < q.ring.order; ++y) {
      if (w.iso[q.ring.add[x * q.ring.order + y]] !=
              w.product.add_at(w.iso[x], w.iso[y]) ||
          w.iso[q.ring.mul[x * q.ring.order + y]] !=
              w.product.mul_at(w.iso[x], w.iso[y])) {
        w.is_homomorphism = false;
        break;
      }
    }
  w.quotient = std::move(q.ring);
  return w;
}

void validate_ring(const FiniteRing& r) {
  const std::size_t m = r.order;
  if (m == 0) throw Error("ring: empty carrier");
  if (r.add.size() != m * m || r.mul.size() != m * m)
    throw Error("ring: table size mismatch");
  for (Elem v : r.add)
    if (v >= m) throw Error("ring: add entry out of range");
  for (Elem v : r.mul)
    if (v >= m) throw Error("ring: mul entry out of range");
  if (m > 1 && r.zero == r.one) throw Error("ring: zero = one in order > 1");

  auto at = [m](const std::vector<Elem>& t, Elem a, Elem b) {
    return t[std::size_t(a) * m + b];
  };
  for (Elem a = 0; a < m; ++a) {
    if (at(r.add, a, r.zero) != a) throw Error("ring: zero not neutral");
    if (at(r.mul, a, r.one) != a) throw Error("ring: one not neutral");
    bool inv = false;
    for (Elem b = 0; b < m; ++b)
      if (at(r.add, a, b) == r.zero) inv = true;
    if (!inv) throw Error("ring: missing additive inverse");
  }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a; b < m; ++b) {
      if (at(r.add, a, b) != at(r.add, b, a))
        throw Error("ring: addition not commutative");
      if (at(r.mul, a, b) != at(r.mul, b, a))
        throw Error("ring: multiplication not commutative");
    }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c) {
        if (at(r.add, at(r.add, a, b), c) != at(r.add, a, at(r.add, b, c)))
          throw Error("ring: addition not associative");
        if (at(r.mul, at(r.mul, a, b), c) != at(r.mul, a, at(r.mul, b, c)))
          throw Error("ring: multiplication not associative");
        if (at(r.mul, a, at(r.add, b, c)) !=
            at(r.add, at(r.mul, a, b), at(r.mul, a, c)))
          throw Error("ring: distributivity fails");
      }
}

std::string element_class_name(ElementClass c) {
  switch (c) {
    case ElementClass::Zero: return "zero";
    case ElementClass::Unit: return "unit";
    case ElementClass::ZeroDivisor: return "zero-divisor";
  }
  return "?";
}

}  // namespace blring
