#include "blring/resalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace blring {

namespace {

LawWitness witness(const std::string& law, Elem x, Elem y = 0, Elem z = 0,
                   const std::string& detail = "") {
  LawWitness w;
  w.law = law;
  w.at = {x, y, z};
  w.detail = detail;
  return w;
}

/// Lattice-order scans on (size, leq): reflexivity, antisymmetry,
/// transitivity, bounds, and agreement of meet/join tables with leq.
std::optional<LawWitness> scan_lattice(const ResLat& l) {
  const std::size_t n = l.size;
  for (Elem x = 0; x < n; ++x)
    if (!l.le(x, x)) return witness("reflexivity", x);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (x != y && l.le(x, y) && l.le(y, x))
        return witness("antisymmetry", x, y);
      for (Elem z = 0; z < n; ++z)
        if (l.le(x, y) && l.le(y, z) && !l.le(x, z))
          return witness("transitivity", x, y, z);
    }
  for (Elem x = 0; x < n; ++x) {
    if (!l.le(l.bot, x)) return witness("bottom", x);
    if (!l.le(x, l.top)) return witness("top", x);
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem m = l.meet_at(x, y), j = l.join_at(x, y);
      if (!l.le(m, x) || !l.le(m, y)) return witness("meet-bound", x, y);
      if (!l.le(x, j) || !l.le(y, j)) return witness("join-bound", x, y);
      for (Elem z = 0; z < n; ++z) {
        if (l.le(z, x) && l.le(z, y) && !l.le(z, m))
          return witness("meet-greatest", x, y, z);
        if (l.le(x, z) && l.le(y, z) && !l.le(j, z))
          return witness("join-least", x, y, z);
      }
    }
  return std::nullopt;
}

std::optional<LawWitness> scan_monoid(const ResLat& l) {
  const std::size_t n = l.size;
  for (Elem x = 0; x < n; ++x)
    if (l.odot_at(x, l.top) != x || l.odot_at(l.top, x) != x)
      return witness("monoid-unit", x);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = Elem(x); y < n; ++y)
      if (l.odot_at(x, y) != l.odot_at(y, x))
        return witness("monoid-commutativity", x, y);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (l.odot_at(l.odot_at(x, y), z) != l.odot_at(x, l.odot_at(y, z)))
          return witness("monoid-associativity", x, y, z);
  return std::nullopt;
}

std::optional<LawWitness> scan_monotone(const ResLat& l) {
  const std::size_t n = l.size;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!l.le(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (!l.le(l.odot_at(x, z), l.odot_at(y, z)))
          return witness("monotonicity", x, y, z);
    }
  return std::nullopt;
}

std::optional<LawWitness> scan_residuation(const ResLat& l) {
  const std::size_t n = l.size;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem a = l.arrow_at(x, y);
      for (Elem z = 0; z < n; ++z)
        if (l.le(z, a) != l.le(l.odot_at(x, z), y))
          return witness("residuation", x, y, z);
    }
  return std::nullopt;
}

std::string law_text(const ResLat& l, const LawWitness& w) {
  std::ostringstream os;
  os << w.law << " at (" << l.label(w.at[0]) << "," << l.label(w.at[1]) << ","
     << l.label(w.at[2]) << ")";
  if (!w.detail.empty()) os << ": " << w.detail;
  return os.str();
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = "e" + std::to_string(i);
  return out;
}

}  // namespace

ResiduumResult residuum(std::size_t size, const std::vector<std::uint8_t>& leq,
                        const std::vector<Elem>& odot) {
  ResiduumResult res;
  res.arrow.assign(size * size, 0);
  auto le = [&](Elem a, Elem b) { return leq[std::size_t(a) * size + b] != 0; };
  std::vector<Elem> cand;
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      cand.clear();
      for (Elem z = 0; z < size; ++z)
        if (le(odot[std::size_t(x) * size + z], y)) cand.push_back(z);
      Elem best = 0;
      bool found = false;
      for (Elem m : cand) {
        bool greatest = true;
        for (Elem c : cand)
          if (!le(c, m)) {
            greatest = false;
            break;
          }
        if (greatest) {
          best = m;
          found = true;
          break;
        }
      }
      if (!found) {
        res.no_maximum = {{x, y}};
        return res;
      }
      res.arrow[std::size_t(x) * size + y] = best;
    }
  return res;
}

ResLat from_ideal_lattice(const IdealLattice& lat) {
  const std::size_t n = lat.size();
  ResLat l;
  l.size = n;
  l.leq = lat.leq;
  l.meet = lat.meet_tab;
  l.join = lat.sum_tab;
  l.odot = lat.prod_tab;
  l.arrow.assign(n * n, 0);
  // I -> J = (J : I)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      l.arrow[i * n + j] = lat.quot_tab[j * n + i];
  l.bot = Elem(lat.bottom);
  l.top = Elem(lat.top);
  l.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) l.labels[i] = lat.ideals[i].label();

  if (auto w = scan_lattice(l))
    throw NotALatticeError("Id(R): " + law_text(l, *w));
  if (auto w = scan_monoid(l)) throw NotAMonoidError("Id(R): " + law_text(l, *w));
  if (auto w = scan_monotone(l))
    throw NotResiduatedError("Id(R): " + law_text(l, *w));
  if (auto w = scan_residuation(l))
    throw NotResiduatedError("Id(R): " + law_text(l, *w));
  return l;
}

ResLat from_tables(const AlgebraTableSpec& spec) {
  const std::size_t n = spec.size;
  if (n == 0) throw NotALatticeError("from_tables: empty carrier");
  auto check_tab = [n](const std::vector<Elem>& t, const std::string& what) {
    if (t.size() != n * n)
      throw NotALatticeError("from_tables: " + what + " table size mismatch");
    for (Elem v : t)
      if (v >= n)
        throw NotALatticeError("from_tables: " + what + " entry out of range");
  };

  ResLat l;
  l.size = n;
  l.labels = spec.labels.empty() ? default_labels(n) : spec.labels;
  if (l.labels.size() != n)
    throw NotALatticeError("from_tables: label count mismatch");

  if (!spec.leq.empty()) {
    if (spec.leq.size() != n * n)
      throw NotALatticeError("from_tables: leq size mismatch");
    l.leq = spec.leq;
  } else {
    if (spec.meet.empty())
      throw NotALatticeError("from_tables: need leq or meet/join");
    check_tab(spec.meet, "meet");
    l.leq.assign(n * n, 0);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        l.leq[std::size_t(x) * n + y] =
            spec.meet[std::size_t(x) * n + y] == x ? 1 : 0;
  }

  // order sanity before bound search
  for (Elem x = 0; x < n; ++x) {
    if (!l.leq[std::size_t(x) * n + x])
      throw NotALatticeError("from_tables: reflexivity fails at " +
                             l.labels[x]);
    for (Elem y = 0; y < n; ++y) {
      if (x != y && l.leq[std::size_t(x) * n + y] &&
          l.leq[std::size_t(y) * n + x])
        throw NotALatticeError("from_tables: antisymmetry fails at " +
                               l.labels[x] + "," + l.labels[y]);
      for (Elem z = 0; z < n; ++z)
        if (l.leq[std::size_t(x) * n + y] && l.leq[std::size_t(y) * n + z] &&
            !l.leq[std::size_t(x) * n + z])
          throw NotALatticeError("from_tables: transitivity fails at " +
                                 l.labels[x] + "," + l.labels[y] + "," +
                                 l.labels[z]);
    }
  }

  bool have_bot = false, have_top = false;
  for (Elem x = 0; x < n; ++x) {
    bool is_bot = true, is_top = true;
    for (Elem y = 0; y < n; ++y) {
      is_bot = is_bot && l.leq[std::size_t(x) * n + y];
      is_top = is_top && l.leq[std::size_t(y) * n + x];
    }
    if (is_bot) {
      l.bot = x;
      have_bot = true;
    }
    if (is_top) {
      l.top = x;
      have_top = true;
    }
  }
  if (!have_bot || !have_top)
    throw NotALatticeError("from_tables: order is not bounded");

  // meets and joins from the order; every pair needs a unique bound
  l.meet.assign(n * n, 0);
  l.join.assign(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem m = l.bot, j = l.top;
      bool mf = false, jf = false;
      for (Elem z = 0; z < n; ++z) {
        if (l.leq[std::size_t(z) * n + x] && l.leq[std::size_t(z) * n + y]) {
          bool greatest = true;
          for (Elem w = 0; w < n; ++w)
            if (l.leq[std::size_t(w) * n + x] &&
                l.leq[std::size_t(w) * n + y] &&
                !l.leq[std::size_t(w) * n + z])
              greatest = false;
          if (greatest) {
            m = z;
            mf = true;
          }
        }
        if (l.leq[std::size_t(x) * n + z] && l.leq[std::size_t(y) * n + z]) {
          bool least = true;
          for (Elem w = 0; w < n; ++w)
            if (l.leq[std::size_t(x) * n + w] &&
                l.leq[std::size_t(y) * n + w] &&
                !l.leq[std::size_t(z) * n + w])
              least = false;
          if (least) {
            j = z;
            jf = true;
          }
        }
      }
      if (!mf)
        throw NotALatticeError("from_tables: no meet for " + l.labels[x] +
                               "," + l.labels[y]);
      if (!jf)
        throw NotALatticeError("from_tables: no join for " + l.labels[x] +
                               "," + l.labels[y]);
      l.meet[std::size_t(x) * n + y] = m;
      l.join[std::size_t(x) * n + y] = j;
    }
  if (!spec.meet.empty() && l.meet != spec.meet)
    throw NotALatticeError("from_tables: meet table disagrees with order");
  if (!spec.join.empty() && l.join != spec.join)
    throw NotALatticeError("from_tables: join table disagrees with order");

  check_tab(spec.odot, "odot");
  l.odot = spec.odot;
  if (auto w = scan_monoid(l)) throw NotAMonoidError(law_text(l, *w));
  if (auto w = scan_monotone(l)) throw NotResiduatedError(law_text(l, *w));

  ResiduumResult rr = residuum(n, l.leq, l.odot);
  if (!rr.ok()) {
    const auto& p = *rr.no_maximum;
    throw NotResiduatedError("no maximum for " + l.labels[p[0]] + " -> " +
                             l.labels[p[1]]);
  }
  if (!spec.arrow.empty()) {
    check_tab(spec.arrow, "arrow");
    for (std::size_t i = 0; i < n * n; ++i)
      if (spec.arrow[i] != rr.arrow[i])
        throw NotResiduatedError(
            "given arrow table disagrees with the residuum at " +
            l.labels[i / n] + " -> " + l.labels[i % n]);
  }
  l.arrow = std::move(rr.arrow);
  return l;
}

Classification check_axioms(const ResLat& l) {
  Classification c;
  if (l.size <= 1) {
    c.degenerate = true;
    return c;
  }
  auto note = [&c](const std::optional<LawWitness>& w) {
    if (w && !c.failure_witness) c.failure_witness = w;
    return !w.has_value();
  };

  c.residuated = note(scan_lattice(l)) && note(scan_monoid(l)) &&
                 note(scan_monotone(l)) && note(scan_residuation(l));

  const std::size_t n = l.size;
  c.prelinear = true;
  for (Elem x = 0; x < n && c.prelinear; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.join_at(l.arrow_at(x, y), l.arrow_at(y, x)) != l.top) {
        c.prelinear = false;
        note(witness("prelinearity", x, y));
        break;
      }
  c.divisible = true;
  for (Elem x = 0; x < n && c.divisible; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.odot_at(x, l.arrow_at(x, y)) != l.meet_at(x, y)) {
        c.divisible = false;
        note(witness("divisibility", x, y));
        break;
      }
  c.bl = c.residuated && c.prelinear && c.divisible;

  if (c.bl) {
    c.mv = true;
    for (Elem x = 0; x < n; ++x)
      if (l.neg(l.neg(x)) != x) {
        c.mv = false;
        note(witness("involution", x, 0, 0,
                     "x** = " + l.label(l.neg(l.neg(x))) + " != x"));
        break;
      }
  }

  c.chain = true;
  for (Elem x = 0; x < n && c.chain; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!l.le(x, y) && !l.le(y, x)) {
        c.chain = false;
        break;
      }
  return c;
}

MvCheck verify_mv_axioms(const ResLat& l) {
  MvCheck res;
  const std::size_t n = l.size;
  std::vector<Elem> op(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) op[std::size_t(x) * n + y] = l.oplus(x, y);
  auto o = [&](Elem x, Elem y) { return op[std::size_t(x) * n + y]; };

  for (Elem x = 0; x < n; ++x) {
    if (o(x, l.bot) != x) {
      res.witness = witness("oplus-unit", x);
      return res;
    }
    if (l.neg(l.neg(x)) != x) {
      res.witness = witness("involution", x);
      return res;
    }
    if (o(x, l.neg(l.bot)) != l.neg(l.bot)) {
      res.witness = witness("absorbing-top", x);
      return res;
    }
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = Elem(x); y < n; ++y)
      if (o(x, y) != o(y, x)) {
        res.witness = witness("oplus-commutativity", x, y);
        return res;
      }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (o(o(x, y), z) != o(x, o(y, z))) {
          res.witness = witness("oplus-associativity", x, y, z);
          return res;
        }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (o(l.neg(o(l.neg(x), y)), y) != o(l.neg(o(l.neg(y), x)), x)) {
        res.witness = witness("lukasiewicz-axiom", x, y);
        return res;
      }
  res.ok = true;
  return res;
}

ResLat direct_product(const ResLat& a, const ResLat& b) {
  ResLat p;
  const std::size_t nb = b.size;
  p.size = a.size * b.size;
  const std::size_t n = p.size;
  p.leq.assign(n * n, 0);
  p.meet.resize(n * n);
  p.join.resize(n * n);
  p.odot.resize(n * n);
  p.arrow.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = Elem(x / nb), xb = Elem(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = Elem(y / nb), yb = Elem(y % nb);
      p.leq[x * n + y] = (a.le(xa, ya) && b.le(xb, yb)) ? 1 : 0;
      p.meet[x * n + y] = Elem(a.meet_at(xa, ya) * nb + b.meet_at(xb, yb));
      p.join[x * n + y] = Elem(a.join_at(xa, ya) * nb + b.join_at(xb, yb));
      p.odot[x * n + y] = Elem(a.odot_at(xa, ya) * nb + b.odot_at(xb, yb));
      p.arrow[x * n + y] = Elem(a.arrow_at(xa, ya) * nb + b.arrow_at(xb, yb));
    }
  }
  p.bot = Elem(a.bot * nb + b.bot);
  p.top = Elem(a.top * nb + b.top);
  p.labels.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    p.labels[x] = "(" + a.labels[x / nb] + "," + b.labels[x % nb] + ")";
  return p;
}

Subalgebra subalgebra(const ResLat& l, const std::vector<Elem>& gens) {
  std::vector<bool> in(l.size, false);
  in[l.bot] = in[l.top] = true;
  for (Elem g : gens) {
    if (g >= l.size) throw Error("subalgebra: index out of range");
    in[g] = true;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x = 0; x < l.size; ++x) {
      if (!in[x]) continue;
      for (Elem y = 0; y < l.size; ++y) {
        if (!in[y]) continue;
        for (Elem v : {l.meet_at(x, y), l.join_at(x, y), l.odot_at(x, y),
                       l.arrow_at(x, y), l.arrow_at(y, x)})
          if (!in[v]) {
            in[v] = true;
            grew = true;
          }
      }
    }
  }

  Subalgebra s;
  std::vector<Elem> back(l.size, 0);
  for (Elem x = 0; x < l.size; ++x)
    if (in[x]) {
      back[x] = Elem(s.carrier.size());
      s.carrier.push_back(x);
    }
  const std::size_t n = s.carrier.size();
  s.algebra.size = n;
  s.algebra.leq.assign(n * n, 0);
  s.algebra.meet.resize(n * n);
  s.algebra.join.resize(n * n);
  s.algebra.odot.resize(n * n);
  s.algebra.arrow.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Elem x = s.carrier[i], y = s.carrier[j];
      s.algebra.leq[i * n + j] = l.le(x, y) ? 1 : 0;
      s.algebra.meet[i * n + j] = back[l.meet_at(x, y)];
      s.algebra.join[i * n + j] = back[l.join_at(x, y)];
      s.algebra.odot[i * n + j] = back[l.odot_at(x, y)];
      s.algebra.arrow[i * n + j] = back[l.arrow_at(x, y)];
    }
  s.algebra.bot = back[l.bot];
  s.algebra.top = back[l.top];
  s.algebra.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    s.algebra.labels[i] = l.labels[s.carrier[i]];
  return s;
}

namespace {

/// Cheap order/operation profile; isomorphisms preserve it.
std::vector<std::uint64_t> iso_invariants(const ResLat& l) {
  const std::size_t n = l.size;
  std::vector<std::uint64_t> inv(n);
  for (Elem x = 0; x < n; ++x) {
    std::uint64_t down = 0, up = 0, annz = 0;
    for (Elem y = 0; y < n; ++y) {
      if (l.le(y, x)) ++down;
      if (l.le(x, y)) ++up;
      if (l.odot_at(x, y) == l.bot) ++annz;
    }
    const bool idem = l.odot_at(x, x) == x;
    const bool invol = l.neg(l.neg(x)) == x;
    std::uint64_t negdown = 0;
    for (Elem y = 0; y < n; ++y)
      if (l.le(y, l.neg(x))) ++negdown;
    inv[x] = (down << 40) | (up << 24) | (annz << 8) | (negdown << 2) |
             (std::uint64_t(idem) << 1) | std::uint64_t(invol);
  }
  return inv;
}

bool extend_iso(const ResLat& a, const ResLat& b,
                const std::vector<std::uint64_t>& ia,
                const std::vector<std::uint64_t>& ib, std::vector<Elem>& map,
                std::vector<bool>& used, Elem next) {
  const std::size_t n = a.size;
  if (next == n) return true;
  for (Elem img = 0; img < n; ++img) {
    if (used[img] || ia[next] != ib[img]) continue;
    map[next] = img;
    used[img] = true;
    // check every constraint all of whose elements are assigned by now
    bool ok = true;
    for (Elem i = 0; i <= next && ok; ++i)
      for (Elem j = 0; j <= next && ok; ++j) {
        if ((i == next || j == next) &&
            a.le(i, j) != b.le(map[i], map[j])) {
          ok = false;
          break;
        }
        const Elem p = a.odot_at(i, j);
        if (p <= next && map[p] != b.odot_at(map[i], map[j])) ok = false;
        const Elem q = a.arrow_at(i, j);
        if (q <= next && map[q] != b.arrow_at(map[i], map[j])) ok = false;
      }
    if (ok && extend_iso(a, b, ia, ib, map, used, Elem(next + 1))) return true;
    used[img] = false;
  }
  map[next] = Elem(n);
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> are_isomorphic(const ResLat& a,
                                                const ResLat& b) {
  if (a.size != b.size) return std::nullopt;
  const std::size_t n = a.size;
  if (n == 0) return std::vector<Elem>{};

  auto ia = iso_invariants(a), ib = iso_invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Elem> map(n, Elem(n));
  std::vector<bool> used(n, false);
  if (!extend_iso(a, b, ia, ib, map, used, 0)) return std::nullopt;

  // full verification of the found bijection
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (a.le(x, y) != b.le(map[x], map[y])) return std::nullopt;
      if (map[a.odot_at(x, y)] != b.odot_at(map[x], map[y]))
        return std::nullopt;
      if (map[a.arrow_at(x, y)] != b.arrow_at(map[x], map[y]))
        return std::nullopt;
    }
  return map;
}

std::string classification_summary(const Classification& c) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  if (c.degenerate) return "degenerate (one element)";
  os << "residuated: " << yn(c.residuated) << "; prelinear: " << yn(c.prelinear)
     << "; divisible: " << yn(c.divisible) << "; BL: " << yn(c.bl)
     << "; MV: " << yn(c.mv) << "; chain: " << yn(c.chain);
  return os.str();
}

}  // namespace blring
