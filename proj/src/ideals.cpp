#include "blring/ideals.hpp"

#include <algorithm>
#include <map>

namespace blring {

namespace {

constexpr std::size_t kLatticeSizeCap = 2048;

std::vector<Elem> members_of(const MemberSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != MemberSet::npos; i = s.find_next(i))
    out.push_back(Elem(i));
  return out;
}

MemberSet principal_members(const FiniteRing& r, Elem a) {
  MemberSet m(r.order);
  for (Elem x = 0; x < r.order; ++x) m.set(r.mul_at(x, a));
  return m;
}

/// A + B for additive subgroups given as bitsets: union of B-translates of A.
MemberSet subgroup_sum(const FiniteRing& r, const MemberSet& a,
                       const MemberSet& b) {
  MemberSet res = a;
  std::vector<Elem> a_members = members_of(a);
  for (auto j = b.find_first(); j != MemberSet::npos; j = b.find_next(j)) {
    if (res.test(j)) continue;
    for (Elem ai : a_members) res.set(r.add_at(Elem(j), ai));
  }
  return res;
}

/// x * J for an element x and ideal member set J.
MemberSet element_times(const FiniteRing& r, Elem x, const MemberSet& j) {
  MemberSet out(r.order);
  for (auto e = j.find_first(); e != MemberSet::npos; e = j.find_next(e))
    out.set(r.mul_at(x, Elem(e)));
  return out;
}

std::vector<Elem> reduce_gens(const FiniteRing& r,
                              const std::vector<Elem>& gens) {
  std::vector<Elem> kept;
  MemberSet cur(r.order);
  cur.set(r.zero);
  std::vector<Elem> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Elem g : sorted) {
    if (cur.test(g)) continue;
    kept.push_back(g);
    cur = subgroup_sum(r, cur, principal_members(r, g));
  }
  return kept;
}

}  // namespace

std::string Ideal::label() const {
  if (is_zero_ideal()) return "{0}";
  if (is_whole_ring()) return "R";
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += ring->labels[gens[i]];
  }
  return out + ")";
}

bool same_ring(const Ideal& a, const Ideal& b) { return a.ring == b.ring; }

Ideal principal_ideal(const FiniteRing& r, Elem a) {
  if (a >= r.order) throw Error("principal_ideal: index out of range");
  Ideal i;
  i.ring = &r;
  i.members = principal_members(r, a);
  if (a != r.zero) i.gens = {a};
  return i;
}

Ideal ideal_generated_by(const FiniteRing& r, const std::vector<Elem>& gens) {
  Ideal acc = principal_ideal(r, r.zero);
  for (Elem g : gens) {
    if (g >= r.order) throw Error("ideal_generated_by: index out of range");
    if (acc.members.test(g)) continue;
    acc.members = subgroup_sum(r, acc.members, principal_members(r, g));
    acc.gens.push_back(g);
  }
  return acc;
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  if (!same_ring(i, j)) throw RingMismatchError("ideal_sum: different rings");
  Ideal out;
  out.ring = i.ring;
  out.members = subgroup_sum(*i.ring, i.members, j.members);
  std::vector<Elem> gens = i.gens;
  gens.insert(gens.end(), j.gens.begin(), j.gens.end());
  out.gens = reduce_gens(*i.ring, gens);
  return out;
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  if (!same_ring(i, j))
    throw RingMismatchError("ideal_product: different rings");
  const FiniteRing& r = *i.ring;
  MemberSet acc(r.order);
  acc.set(r.zero);
  for (Elem a : i.gens) acc = subgroup_sum(r, acc, element_times(r, a, j.members));
  Ideal out;
  out.ring = &r;
  out.members = std::move(acc);
  out.gens = reduce_gens(r, members_of(out.members));
  return out;
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
  if (!same_ring(i, j))
    throw RingMismatchError("ideal_intersect: different rings");
  Ideal out;
  out.ring = i.ring;
  out.members = i.members & j.members;
  out.gens = reduce_gens(*i.ring, members_of(out.members));
  return out;
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  if (!same_ring(i, j))
    throw RingMismatchError("ideal_quotient: different rings");
  const FiniteRing& r = *i.ring;
  MemberSet res(r.order);
  res.set();
  // (I : J) = intersection over generators b of J of {x : x*b in I};
  // the whole ring when J = {0}.
  for (Elem b : j.gens) {
    MemberSet part(r.order);
    for (Elem x = 0; x < r.order; ++x)
      if (i.members.test(r.mul_at(x, b))) part.set(x);
    res &= part;
  }
  Ideal out;
  out.ring = &r;
  out.members = std::move(res);
  out.gens = reduce_gens(r, members_of(out.members));
  return out;
}

Ideal annihilator(const Ideal& i) {
  return ideal_quotient(principal_ideal(*i.ring, i.ring->zero), i);
}

void validate_ideal(const FiniteRing& r, const MemberSet& members) {
  if (members.size() != r.order)
    throw NotAnIdealError("ideal: member set size mismatch");
  if (!members.test(r.zero)) throw NotAnIdealError("ideal: missing zero");
  std::vector<Elem> ms = members_of(members);
  for (Elem a : ms)
    for (Elem b : ms)
      if (!members.test(r.add_at(a, b)))
        throw NotAnIdealError("ideal: not closed under addition at " +
                              r.labels[a] + "+" + r.labels[b]);
  for (Elem x = 0; x < r.order; ++x)
    for (Elem a : ms)
      if (!members.test(r.mul_at(x, a)))
        throw NotAnIdealError("ideal: not absorbing at " + r.labels[x] + "*" +
                              r.labels[a]);
}

namespace {

bool canonical_less(const Ideal& a, const Ideal& b) {
  const std::size_t ca = a.members.count(), cb = b.members.count();
  if (ca != cb) return ca < cb;
  return a.members < b.members;
}

}  // namespace

std::size_t IdealLattice::index_of(const MemberSet& members) const {
  Ideal probe;
  probe.members = members;
  auto it = std::lower_bound(ideals.begin(), ideals.end(), probe,
                             canonical_less);
  if (it == ideals.end() || it->members != members)
    throw Error("ideal lattice: operation result not in lattice (closure "
                "violated)");
  return std::size_t(it - ideals.begin());
}

IdealLattice all_ideals(const FiniteRing& r, std::size_t order_cap) {
  if (r.is_trivial())
    throw DegenerateRingError("all_ideals: trivial ring has no proper ideals");
  if (r.order > order_cap)
    throw OrderCapError("all_ideals: ring order " + std::to_string(r.order) +
                        " exceeds cap " + std::to_string(order_cap));

  // distinct principal ideals, keyed by member set, smallest generator kept
  std::map<MemberSet, Elem> principal;
  for (Elem a = 0; a < r.order; ++a) {
    MemberSet p = principal_members(r, a);
    principal.emplace(std::move(p), a);
  }

  std::map<MemberSet, std::size_t> seen;
  std::vector<Ideal> found;
  for (const auto& [mem, gen] : principal) {
    Ideal i;
    i.ring = &r;
    i.members = mem;
    if (gen != r.zero) i.gens = {gen};
    seen.emplace(mem, found.size());
    found.push_back(std::move(i));
  }

  // closure of the principal ideals under pairwise sum
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& [pmem, pgen] : principal) {
      if (pmem.is_subset_of(found[k].members)) continue;
      MemberSet s = subgroup_sum(r, found[k].members, pmem);
      if (seen.count(s)) continue;
      Ideal i;
      i.ring = &r;
      i.members = s;
      i.gens = found[k].gens;
      i.gens.push_back(pgen);
      seen.emplace(std::move(s), found.size());
      found.push_back(std::move(i));
      if (found.size() > kLatticeSizeCap)
        throw OrderCapError("all_ideals: more than " +
                            std::to_string(kLatticeSizeCap) + " ideals");
    }
  }

  std::sort(found.begin(), found.end(), canonical_less);

  IdealLattice lat;
  lat.ring = &r;
  lat.ideals = std::move(found);
  const std::size_t n = lat.ideals.size();
  lat.bottom = 0;
  lat.top = n - 1;
  if (lat.ideals[lat.bottom].size() != 1 || !lat.ideals[lat.top].is_whole_ring())
    throw Error("all_ideals: missing bottom or top");

  lat.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lat.leq[i * n + j] =
          lat.ideals[i].members.is_subset_of(lat.ideals[j].members) ? 1 : 0;

  // joins and meets directly from the inclusion order: scanning in canonical
  // (size-ascending) order makes the first bound found the least/greatest.
  lat.sum_tab.assign(n * n, 0);
  lat.meet_tab.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Elem join = Elem(lat.top);
      for (std::size_t k = 0; k < n; ++k)
        if (lat.leq[i * n + k] && lat.leq[j * n + k]) {
          join = Elem(k);
          break;
        }
      Elem meet = Elem(lat.bottom);
      for (std::size_t k = n; k-- > 0;)
        if (lat.leq[k * n + i] && lat.leq[k * n + j]) {
          meet = Elem(k);
          break;
        }
      lat.sum_tab[i * n + j] = lat.sum_tab[j * n + i] = join;
      lat.meet_tab[i * n + j] = lat.meet_tab[j * n + i] = meet;
    }

  lat.prod_tab.assign(n * n, 0);
  lat.quot_tab.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i) {
        Ideal p = ideal_product(lat.ideals[i], lat.ideals[j]);
        Elem pi = Elem(lat.index_of(p.members));
        lat.prod_tab[i * n + j] = pi;
        lat.prod_tab[j * n + i] = pi;
      }
      Ideal q = ideal_quotient(lat.ideals[i], lat.ideals[j]);
      lat.quot_tab[i * n + j] = Elem(lat.index_of(q.members));
    }

  return lat;
}

IdealClass classify_ideal(const IdealLattice& lat, std::size_t idx) {
  const std::size_t n = lat.size();
  if (idx >= n) throw Error("classify_ideal: index out of range");
  IdealClass c;
  const bool proper = idx != lat.top;

  if (proper) {
    c.maximal = true;
    for (std::size_t k = 0; k < n; ++k)
      if (k != idx && k != lat.top && lat.leq[idx * n + k]) {
        c.maximal = false;
        break;
      }
  }
  if (idx != lat.bottom) {
    c.minimal = true;
    for (std::size_t k = 0; k < n; ++k)
      if (k != idx && k != lat.bottom && lat.leq[k * n + idx]) {
        c.minimal = false;
        break;
      }
  }
  if (proper) {
    const FiniteRing& r = *lat.ring;
    const MemberSet& mem = lat.ideals[idx].members;
    std::vector<Elem> outside;
    outside.reserve(r.order - mem.count());
    for (Elem a = 0; a < r.order; ++a)
      if (!mem.test(a)) outside.push_back(a);
    c.prime = true;
    for (Elem a : outside) {
      const Elem* row = r.mul.data() + std::size_t(a) * r.order;
      for (Elem b : outside)
        if (mem.test(row[b])) {
          c.prime = false;
          break;
        }
      if (!c.prime) break;
    }
  }
  return c;
}

IdealCounts ideal_counts(const IdealLattice& lat) {
  IdealCounts c;
  c.n_i = lat.size();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    IdealClass ic = classify_ideal(lat, i);
    if (ic.maximal) ++c.n_m;
    if (ic.prime) ++c.n_p;
  }
  if (c.n_m != c.n_p)
    throw Error("ideal_counts: maximal/prime counts differ on " +
                lat.ring->name);
  return c;
}

bool is_local(const IdealLattice& lat) {
  std::size_t maximal = 0;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (classify_ideal(lat, i).maximal) ++maximal;
  return maximal == 1;
}

bool is_multiplication_ring(const IdealLattice& lat) {
  const std::size_t n = lat.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lat.leq[i * n + j]) continue;
      bool hit = false;
      for (std::size_t k = 0; k < n && !hit; ++k)
        hit = lat.prod_tab[j * n + k] == i;
      if (!hit) return false;
    }
  return true;
}

}  // namespace blring
