#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace blring::oracle {

bool check_zn_tables(const FiniteRing& r, unsigned n) {
  if (r.order != n) return false;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      if (r.add_at(Elem(a), Elem(b)) != (a + b) % n) return false;
      if (r.mul_at(Elem(a), Elem(b)) != (a * b) % n) return false;
    }
  return r.zero == 0 && r.one == (n == 1 ? 0u : 1u);
}

std::vector<MemberSet> ideals_by_subset_filter(const FiniteRing& r) {
  const std::size_t m = r.order;
  if (m > 20) throw Error("subset oracle: ring too large");
  std::vector<MemberSet> out;
  const std::size_t total = std::size_t(1) << m;
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (!(mask & (std::size_t(1) << r.zero))) continue;
    std::vector<Elem> members;
    for (Elem e = 0; e < m; ++e)
      if (mask & (std::size_t(1) << e)) members.push_back(e);
    bool ok = true;
    for (Elem a : members) {
      for (Elem b : members)
        if (!(mask & (std::size_t(1) << r.add_at(a, b)))) {
          ok = false;
          break;
        }
      if (!ok) break;
      for (Elem x = 0; x < m; ++x)
        if (!(mask & (std::size_t(1) << r.mul_at(x, a)))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) continue;
    MemberSet s(m);
    for (Elem e : members) s.set(e);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const MemberSet& a, const MemberSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

namespace {

MemberSet additive_closure(const FiniteRing& r, MemberSet s) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> members;
    for (auto e = s.find_first(); e != MemberSet::npos; e = s.find_next(e))
      members.push_back(Elem(e));
    for (Elem a : members)
      for (Elem b : members) {
        Elem c = r.add_at(a, b);
        if (!s.test(c)) {
          s.set(c);
          grew = true;
        }
      }
  }
  return s;
}

}  // namespace

std::vector<MemberSet> ideals_by_subgroup_closure(const FiniteRing& r) {
  const std::size_t m = r.order;
  MemberSet zero(m);
  zero.set(r.zero);

  std::set<MemberSet> subgroups;
  subgroups.insert(zero);
  std::vector<MemberSet> work{zero};
  while (!work.empty()) {
    MemberSet s = work.back();
    work.pop_back();
    for (Elem a = 0; a < m; ++a) {
      if (s.test(a)) continue;
      MemberSet t = s;
      t.set(a);
      t = additive_closure(r, std::move(t));
      if (subgroups.insert(t).second) work.push_back(std::move(t));
    }
  }

  std::vector<MemberSet> out;
  for (const MemberSet& s : subgroups) {
    bool absorbing = true;
    for (auto e = s.find_first(); e != MemberSet::npos && absorbing;
         e = s.find_next(e))
      for (Elem x = 0; x < m; ++x)
        if (!s.test(r.mul_at(x, Elem(e)))) {
          absorbing = false;
          break;
        }
    if (absorbing) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const MemberSet& a, const MemberSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

CosetPartition coset_partition(const FiniteRing& r, const MemberSet& ideal) {
  CosetPartition part;
  const std::size_t m = r.order;
  part.class_of.assign(m, 0);
  std::vector<Elem> smallest(m);
  for (Elem x = 0; x < m; ++x) {
    Elem best = x;
    for (auto i = ideal.find_first(); i != MemberSet::npos;
         i = ideal.find_next(i))
      best = std::min(best, r.add_at(x, Elem(i)));
    smallest[x] = best;
  }
  std::map<Elem, Elem> ids;
  for (Elem x = 0; x < m; ++x) {
    auto [it, fresh] = ids.emplace(smallest[x], Elem(ids.size()));
    part.class_of[x] = it->second;
    if (fresh) part.rep_of.push_back(smallest[x]);
  }
  part.classes = ids.size();
  return part;
}

namespace {

std::uint64_t encode(std::size_t n, const std::vector<std::uint8_t>& leq,
                     const std::vector<Elem>& perm) {
  std::uint64_t code = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x * n + y])
        code |= std::uint64_t(1) << (std::size_t(perm[x]) * n + perm[y]);
  return code;
}

bool is_lattice_order(std::size_t n, const std::vector<std::uint8_t>& leq) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      bool meet = false, join = false;
      for (Elem z = 0; z < n; ++z) {
        bool lower = leq[std::size_t(z) * n + x] && leq[std::size_t(z) * n + y];
        if (lower) {
          bool greatest = true;
          for (Elem w = 0; w < n; ++w)
            if (leq[std::size_t(w) * n + x] && leq[std::size_t(w) * n + y] &&
                !leq[std::size_t(w) * n + z])
              greatest = false;
          if (greatest) meet = true;
        }
        bool upper = leq[std::size_t(x) * n + z] && leq[std::size_t(y) * n + z];
        if (upper) {
          bool least = true;
          for (Elem w = 0; w < n; ++w)
            if (leq[std::size_t(x) * n + w] && leq[std::size_t(y) * n + w] &&
                !leq[std::size_t(z) * n + w])
              least = false;
          if (least) join = true;
        }
      }
      if (!meet || !join) return false;
    }
  return true;
}

}  // namespace

std::size_t count_lattices_naive(std::size_t n) {
  if (n == 0) throw Error("lattice oracle: empty order");
  if (n == 1) return 1;
  const std::size_t k = n - 2;
  if (k > 4) throw Error("lattice oracle: order too large");

  // ordered pairs (i, j), i != j, among the middle elements
  std::vector<std::pair<Elem, Elem>> arcs;
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      if (i != j) arcs.emplace_back(i, j);

  std::set<std::uint64_t> classes;
  const std::size_t total = std::size_t(1) << arcs.size();
  std::vector<std::uint8_t> lt(k * k);
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::fill(lt.begin(), lt.end(), 0);
    for (std::size_t a = 0; a < arcs.size(); ++a)
      if (mask & (std::size_t(1) << a))
        lt[std::size_t(arcs[a].first) * k + arcs[a].second] = 1;

    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (lt[i * k + j] && lt[j * k + i]) ok = false;  // antisymmetry
        if (!lt[i * k + j]) continue;
        for (std::size_t l = 0; l < k; ++l)
          if (lt[j * k + l] && !lt[i * k + l]) {
            ok = false;  // transitivity
            break;
          }
      }
    if (!ok) continue;

    std::fill(leq.begin(), leq.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      leq[x * n + x] = 1;
      leq[0 * n + x] = 1;
      leq[x * n + (n - 1)] = 1;
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (lt[i * k + j]) leq[(i + 1) * n + (j + 1)] = 1;
    if (!is_lattice_order(n, leq)) continue;

    std::uint64_t best = ~std::uint64_t(0);
    std::vector<Elem> perm(n);
    perm[0] = 0;
    perm[n - 1] = Elem(n - 1);
    std::vector<Elem> mid(k);
    for (std::size_t i = 0; i < k; ++i) mid[i] = Elem(i + 1);
    std::sort(mid.begin(), mid.end());
    do {
      for (std::size_t i = 0; i < k; ++i) perm[i + 1] = mid[i];
      best = std::min(best, encode(n, leq, perm));
    } while (std::next_permutation(mid.begin(), mid.end()));
    classes.insert(best);
  }
  return classes.size();
}

std::vector<Elem> d_set_naive(const ResLat& l) {
  std::vector<Elem> idem;
  for (Elem x = 0; x < l.size; ++x)
    if (l.odot_at(x, x) == x) idem.push_back(x);

  auto cmp = [&l](Elem a, Elem b) { return l.le(a, b) || l.le(b, a); };
  std::vector<Elem> out;
  for (Elem x : idem) {
    bool comparable_to_all = true;
    for (Elem y : idem) comparable_to_all = comparable_to_all && cmp(x, y);
    if (!comparable_to_all) continue;
    std::vector<Elem> below;
    for (Elem y : idem)
      if (l.le(y, x)) below.push_back(y);
    bool chain = true;
    for (Elem a : below)
      for (Elem b : below) chain = chain && cmp(a, b);
    if (chain) out.push_back(x);
  }
  return out;
}

}  // namespace blring::oracle
