#include "blring/census.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "blring/refalg.hpp"
#include "blring/ringspec.hpp"

namespace blring {

bool BoundedLattice::is_chain() const {
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y)
      if (!le(x, y) && !le(y, x)) return false;
  return true;
}

namespace {

std::uint64_t encode_permuted(std::size_t n, const std::vector<std::uint8_t>& leq,
                              const std::vector<Elem>& perm) {
  std::uint64_t code = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x * n + y])
        code |= std::uint64_t(1)
                << (std::size_t(perm[x]) * n + perm[y]);
  return code;
}

/// Unique greatest lower / least upper bounds for every pair, or failure.
bool bounds_tables(std::size_t n, const std::vector<std::uint8_t>& leq,
                   std::vector<Elem>& meet, std::vector<Elem>& join) {
  meet.assign(n * n, 0);
  join.assign(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      bool mf = false, jf = false;
      for (Elem z = 0; z < n && !(mf && jf); ++z) {
        if (!mf && leq[std::size_t(z) * n + x] && leq[std::size_t(z) * n + y]) {
          bool greatest = true;
          for (Elem w = 0; w < n; ++w)
            if (leq[std::size_t(w) * n + x] && leq[std::size_t(w) * n + y] &&
                !leq[std::size_t(w) * n + z])
              greatest = false;
          if (greatest) {
            meet[std::size_t(x) * n + y] = z;
            mf = true;
          }
        }
        if (!jf && leq[std::size_t(x) * n + z] && leq[std::size_t(y) * n + z]) {
          bool least = true;
          for (Elem w = 0; w < n; ++w)
            if (leq[std::size_t(x) * n + w] && leq[std::size_t(y) * n + w] &&
                !leq[std::size_t(z) * n + w])
              least = false;
          if (least) {
            join[std::size_t(x) * n + y] = z;
            jf = true;
          }
        }
      }
      if (!mf || !jf) return false;
    }
  return true;
}

BoundedLattice lattice_from_code(std::size_t n, std::uint64_t code) {
  BoundedLattice lat;
  lat.size = n;
  lat.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n * n; ++i)
    lat.leq[i] = (code >> i) & 1 ? 1 : 0;
  if (!bounds_tables(n, lat.leq, lat.meet, lat.join))
    throw Error("lattice_from_code: not a lattice");

  std::vector<Elem> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = Elem(i);
  if (n <= 2) {
    lat.automorphisms.push_back(perm);
    return lat;
  }
  std::vector<Elem> mid(perm.begin() + 1, perm.end() - 1);
  std::sort(mid.begin(), mid.end());
  do {
    std::vector<Elem> p(n);
    p[0] = 0;
    p[n - 1] = Elem(n - 1);
    for (std::size_t i = 0; i < mid.size(); ++i) p[i + 1] = mid[i];
    if (encode_permuted(n, lat.leq, p) == code) lat.automorphisms.push_back(p);
  } while (std::next_permutation(mid.begin(), mid.end()));
  return lat;
}

}  // namespace

std::vector<BoundedLattice> enumerate_lattices(std::size_t n) {
  if (n < 1 || n > kLatticeOrderCap)
    throw CapExceededError("enumerate_lattices: order " + std::to_string(n) +
                           " outside 1.." + std::to_string(kLatticeOrderCap));
  if (n == 1) {
    BoundedLattice lat;
    lat.size = 1;
    lat.leq = {1};
    lat.meet = {0};
    lat.join = {0};
    lat.automorphisms = {{0}};
    return {lat};
  }

  const std::size_t k = n - 2;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < k; ++i)
    for (Elem j = Elem(i + 1); j < k; ++j) pairs.emplace_back(i, j);

  std::set<std::uint64_t> canon;
  std::vector<int> trit(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
  std::vector<std::uint8_t> lt(k * k, 0);
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<Elem> meet, join;

  while (true) {
    std::fill(lt.begin(), lt.end(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (trit[p] == 1) lt[std::size_t(pairs[p].first) * k + pairs[p].second] = 1;
      if (trit[p] == 2) lt[std::size_t(pairs[p].second) * k + pairs[p].first] = 1;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < k && transitive; ++a)
      for (std::size_t b = 0; b < k && transitive; ++b) {
        if (!lt[a * k + b]) continue;
        for (std::size_t c = 0; c < k; ++c)
          if (lt[b * k + c] && !lt[a * k + c]) {
            transitive = false;
            break;
          }
      }
    if (transitive) {
      std::fill(leq.begin(), leq.end(), 0);
      for (std::size_t x = 0; x < n; ++x) {
        leq[x * n + x] = 1;
        leq[0 * n + x] = 1;
        leq[x * n + (n - 1)] = 1;
      }
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          if (lt[a * k + b]) leq[(a + 1) * n + (b + 1)] = 1;
      if (bounds_tables(n, leq, meet, join)) {
        // canonical form: least encoding over middle permutations
        std::uint64_t best = ~std::uint64_t(0);
        std::vector<Elem> perm(n);
        perm[0] = 0;
        perm[n - 1] = Elem(n - 1);
        std::vector<Elem> mid(k);
        for (std::size_t i = 0; i < k; ++i) mid[i] = Elem(i + 1);
        do {
          for (std::size_t i = 0; i < k; ++i) perm[i + 1] = mid[i];
          best = std::min(best, encode_permuted(n, leq, perm));
        } while (std::next_permutation(mid.begin(), mid.end()));
        canon.insert(best);
      }
    }
    // odometer
    if (pairs.empty()) break;
    std::size_t p = 0;
    while (p < pairs.size() && trit[p] == 2) trit[p++] = 0;
    if (p == pairs.size()) break;
    ++trit[p];
  }

  std::vector<BoundedLattice> out;
  for (std::uint64_t code : canon) out.push_back(lattice_from_code(n, code));
  return out;
}

namespace {

constexpr Elem kUnset = 0xFFFF;

std::vector<std::string> census_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  labels[0] = "0";
  labels[n - 1] = "1";
  for (std::size_t i = 1; i + 1 < n; ++i)
    labels[i] = std::string(1, char('a' + (i - 1)));
  return labels;
}

struct OdotSearch {
  const BoundedLattice& lat;
  std::size_t n;
  std::vector<Elem> odot;
  std::vector<std::pair<Elem, Elem>> slots;
  std::vector<std::vector<Elem>> domains;
  LatticeCensusStats stats;
  std::vector<ResLat> kept;

  explicit OdotSearch(const BoundedLattice& l) : lat(l), n(l.size) {
    odot.assign(n * n, kUnset);
    const Elem bot = 0, top = Elem(n - 1);
    for (Elem x = 0; x < n; ++x) {
      odot[std::size_t(bot) * n + x] = bot;
      odot[std::size_t(x) * n + bot] = bot;
      odot[std::size_t(top) * n + x] = x;
      odot[std::size_t(x) * n + top] = x;
    }
    for (Elem x = 1; std::size_t(x) + 1 < n; ++x)
      for (Elem y = x; std::size_t(y) + 1 < n; ++y) {
        slots.emplace_back(x, y);
        std::vector<Elem> dom;
        const Elem m = lat.meet[std::size_t(x) * n + y];
        for (Elem z = 0; z < n; ++z)
          if (lat.le(z, m)) dom.push_back(z);
        domains.push_back(dom);
      }
  }

  bool monotone_ok(Elem x, Elem y, Elem v) const {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem w = odot[std::size_t(a) * n + b];
        if (w == kUnset) continue;
        if (lat.le(a, x) && lat.le(b, y) && !lat.le(w, v)) return false;
        if (lat.le(x, a) && lat.le(y, b) && !lat.le(v, w)) return false;
      }
    return true;
  }

  bool assoc_ok() const {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = odot[std::size_t(a) * n + b];
        if (ab == kUnset) continue;
        for (Elem c = 0; c < n; ++c) {
          const Elem bc = odot[std::size_t(b) * n + c];
          if (bc == kUnset) continue;
          const Elem l = odot[std::size_t(ab) * n + c];
          const Elem r = odot[std::size_t(a) * n + bc];
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    return true;
  }

  void leaf() {
    ++stats.monoid_candidates;
    ResiduumResult rr = residuum(n, lat.leq, odot);
    if (!rr.ok()) return;
    ++stats.residuated;

    ResLat l;
    l.size = n;
    l.leq = lat.leq;
    l.meet = lat.meet;
    l.join = lat.join;
    l.odot = odot;
    l.arrow = std::move(rr.arrow);
    l.bot = 0;
    l.top = Elem(n - 1);
    l.labels = census_labels(n);

    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (l.join_at(l.arrow_at(x, y), l.arrow_at(y, x)) != l.top) {
          ++stats.prel_rejects;
          return;
        }
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (l.odot_at(x, l.arrow_at(x, y)) != l.meet_at(x, y)) {
          ++stats.div_rejects;
          return;
        }

    // keep only the lexicographically least table over lattice automorphisms
    std::vector<Elem> image(n * n);
    for (const auto& p : lat.automorphisms) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          image[std::size_t(p[x]) * n + p[y]] = p[odot[std::size_t(x) * n + y]];
      if (image < odot) return;
    }
    ++stats.records;
    kept.push_back(std::move(l));
  }

  void dfs(std::size_t slot) {
    if (slot == slots.size()) {
      leaf();
      return;
    }
    const auto [x, y] = slots[slot];
    for (Elem v : domains[slot]) {
      if (!monotone_ok(x, y, v)) continue;
      odot[std::size_t(x) * n + y] = v;
      odot[std::size_t(y) * n + x] = v;
      if (assoc_ok()) dfs(slot + 1);
      odot[std::size_t(x) * n + y] = kUnset;
      odot[std::size_t(y) * n + x] = kUnset;
    }
  }
};

}  // namespace

std::size_t CensusResult::mv_count() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.classification.mv ? 1 : 0;
  return c;
}
std::size_t CensusResult::chain_count() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.classification.chain ? 1 : 0;
  return c;
}
std::size_t CensusResult::comet_count() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.comet.is_comet ? 1 : 0;
  return c;
}

CensusResult enumerate_bl(std::size_t order, const CensusOptions& opts) {
  if (order < 2)
    throw CapExceededError("enumerate_bl: order must be at least 2");
  if (order > opts.max_order || order > kLatticeOrderCap)
    throw CapExceededError("enumerate_bl: order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(opts.max_order));

  CensusResult res;
  res.order = order;
  res.lattices = enumerate_lattices(order);
  for (std::size_t li = 0; li < res.lattices.size(); ++li) {
    const BoundedLattice& lat = res.lattices[li];
    const bool chain = lat.is_chain();
    if (opts.chains_only && !chain) continue;
    OdotSearch search(lat);
    search.dfs(0);
    search.stats.lattice_id = li;
    search.stats.is_chain = chain;
    res.stats.push_back(search.stats);
    for (ResLat& l : search.kept) {
      CensusRecord rec;
      rec.order = order;
      rec.lattice_id = li;
      rec.classification = check_axioms(l);
      rec.comet = comet_report(l);
      rec.tables = std::move(l);
      res.records.push_back(std::move(rec));
    }
  }
  return res;
}

std::vector<Chain4Case> chain4_ledger() {
  // elements 0 < I < J < 1 as indices 0..3
  const std::size_t n = 4;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = Elem(x); y < n; ++y) leq[std::size_t(x) * n + y] = 1;
  const std::vector<std::string> labels = {"0", "I", "J", "R"};

  struct Assignment {
    int id;
    Elem ii, jj, ij;
  };
  // source order: the twelve subcases, I*I then J*J then I*J
  const Assignment cases[12] = {
      {1, 0, 1, 0}, {2, 0, 1, 1}, {3, 0, 2, 1},  {4, 0, 2, 0},
      {5, 0, 0, 0}, {6, 0, 0, 1}, {7, 1, 1, 1},  {8, 1, 1, 0},
      {9, 1, 2, 1}, {10, 1, 2, 0}, {11, 1, 0, 1}, {12, 1, 0, 0},
  };

  std::vector<Chain4Case> out;
  for (const Assignment& a : cases) {
    Chain4Case entry;
    entry.case_id = a.id;
    entry.assignment = {a.ii, a.jj, a.ij};

    std::vector<Elem> odot(n * n, 0);
    for (Elem x = 0; x < n; ++x) {
      odot[std::size_t(3) * n + x] = x;
      odot[std::size_t(x) * n + 3] = x;
      odot[std::size_t(0) * n + x] = 0;
      odot[std::size_t(x) * n + 0] = 0;
    }
    odot[1 * n + 1] = a.ii;
    odot[2 * n + 2] = a.jj;
    odot[1 * n + 2] = odot[2 * n + 1] = a.ij;

    auto le = [&](Elem u, Elem v) { return leq[std::size_t(u) * n + v] != 0; };
    auto at = [&](Elem u, Elem v) { return odot[std::size_t(u) * n + v]; };

    // monotonicity w.r.t. inclusion: the table form of the containment
    // arguments (e.g. I ⊆ J forces I⊗I ⊆ I⊗J)
    std::optional<std::string> mono_fail;
    for (Elem x = 0; x < n && !mono_fail; ++x)
      for (Elem y = 0; y < n && !mono_fail; ++y) {
        if (!le(x, y)) continue;
        for (Elem z = 0; z < n; ++z)
          if (!le(at(x, z), at(y, z))) {
            mono_fail = labels[x] + " c " + labels[y] + " but " + labels[x] +
                        "*" + labels[z] + " = " + labels[at(x, z)] +
                        " is not contained in " + labels[y] + "*" + labels[z] +
                        " = " + labels[at(y, z)];
            break;
          }
      }
    if (mono_fail) {
      entry.verdict = Chain4Verdict::Impossible;
      entry.witness = *mono_fail;
      out.push_back(entry);
      continue;
    }

    std::optional<std::string> assoc_fail;
    for (Elem x = 0; x < n && !assoc_fail; ++x)
      for (Elem y = 0; y < n && !assoc_fail; ++y)
        for (Elem z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) {
            assoc_fail = "(" + labels[x] + "*" + labels[y] + ")*" + labels[z] +
                         " = " + labels[at(at(x, y), z)] + " but " + labels[x] +
                         "*(" + labels[y] + "*" + labels[z] + ") = " +
                         labels[at(x, at(y, z))];
            break;
          }
    if (assoc_fail) {
      entry.verdict = Chain4Verdict::NotAssociative;
      entry.witness = *assoc_fail;
      out.push_back(entry);
      continue;
    }

    ResiduumResult rr = residuum(n, leq, odot);
    if (!rr.ok()) {
      entry.verdict = Chain4Verdict::Impossible;
      entry.witness = "no residuum";
      out.push_back(entry);
      continue;
    }
    ResLat l;
    l.size = n;
    l.leq = leq;
    bounds_tables(n, l.leq, l.meet, l.join);
    l.odot = odot;
    l.arrow = std::move(rr.arrow);
    l.bot = 0;
    l.top = 3;
    l.labels = labels;

    Classification c = check_axioms(l);
    if (!c.divisible) {
      const auto& w = *c.failure_witness;
      const Elem x = w.at[0], y = w.at[1];
      entry.verdict = Chain4Verdict::DivFails;
      entry.witness = labels[x] + "*(" + labels[x] + "->" + labels[y] +
                      ") = " + labels[l.odot_at(x, l.arrow_at(x, y))] +
                      " but " + labels[x] + " meet " + labels[y] + " = " +
                      labels[l.meet_at(x, y)];
      out.push_back(entry);
      continue;
    }
    entry.verdict = c.mv ? Chain4Verdict::MV : Chain4Verdict::BLnotMV;
    entry.matched_ref = match_ref_table(l);
    if (!c.mv && c.failure_witness)
      entry.witness = labels[c.failure_witness->at[0]] + "** != " +
                      labels[c.failure_witness->at[0]];
    out.push_back(entry);
  }
  return out;
}

std::string verdict_name(Chain4Verdict v) {
  switch (v) {
    case Chain4Verdict::MV: return "MV";
    case Chain4Verdict::BLnotMV: return "BL-not-MV";
    case Chain4Verdict::NotAssociative: return "not-associative";
    case Chain4Verdict::DivFails: return "div-fails";
    case Chain4Verdict::Impossible: return "impossible";
  }
  return "?";
}

namespace {

AtlasRow atlas_row(const RingSpec& spec, std::size_t order_cap) {
  AtlasRow row;
  row.spec = ring_spec_to_string(spec);
  FiniteRing r = build_ring(spec, order_cap);
  row.name = r.name;
  row.order = r.order;
  IdealLattice lat = all_ideals(r, order_cap);
  row.counts = ideal_counts(lat);
  ResLat l = from_ideal_lattice(lat);
  row.classification = check_axioms(l);
  if (row.classification.bl) {
    row.comet = comet_report(l).is_comet;
    row.matched_ref = match_ref_table(l);
  }
  return row;
}

}  // namespace

AtlasReport ring_atlas(const AtlasConfig& cfg) {
  AtlasReport rep;
  std::ostringstream family;
  std::vector<RingSpec> specs;

  if (cfg.zn_max >= 2) {
    family << "Z_n for 2<=n<=" << cfg.zn_max << "; ";
    for (unsigned n = 2; n <= cfg.zn_max; ++n) {
      RingSpec s;
      s.kind = RingSpec::Kind::Zn;
      s.n = n;
      specs.push_back(s);
    }
  }
  if (cfg.polyquot_max >= 4) {
    family << "Z_n[X]/(f) monic, deg>=2, order<=" << cfg.polyquot_max << "; ";
    for (unsigned n = 2;; ++n) {
      std::size_t sq = std::size_t(n) * n;
      if (sq > cfg.polyquot_max) break;
      for (unsigned d = 2;; ++d) {
        std::size_t m = 1;
        bool fits = true;
        for (unsigned i = 0; i < d; ++i) {
          m *= n;
          if (m > cfg.polyquot_max) {
            fits = false;
            break;
          }
        }
        if (!fits) break;
        for (std::size_t low = 0; low < m; ++low) {
          RingSpec s;
          s.kind = RingSpec::Kind::PolyQuot;
          s.n = n;
          s.coeffs.resize(d + 1);
          std::size_t v = low;
          for (unsigned i = 0; i < d; ++i) {
            s.coeffs[i] = unsigned(v % n);
            v /= n;
          }
          s.coeffs[d] = 1;
          specs.push_back(std::move(s));
        }
      }
    }
  }
  if (cfg.product_max >= 2) {
    family << "Z_a x Z_b for 2<=a<=b<=" << cfg.product_max << "; ";
    for (unsigned a = 2; a <= cfg.product_max; ++a)
      for (unsigned b = a; b <= cfg.product_max; ++b) {
        RingSpec s;
        s.kind = RingSpec::Kind::Product;
        RingSpec fa;
        fa.kind = RingSpec::Kind::Zn;
        fa.n = a;
        RingSpec fb;
        fb.kind = RingSpec::Kind::Zn;
        fb.n = b;
        s.factors = {fa, fb};
        specs.push_back(std::move(s));
      }
  }
  for (const std::string& text : cfg.specs) {
    family << text << "; ";
    specs.push_back(parse_ring_spec(text));
  }
  rep.family = family.str();

  std::set<std::string> matched;
  for (const RingSpec& s : specs) {
    AtlasRow row = atlas_row(s, cfg.order_cap);
    if (row.classification.bl) ++rep.bl_count;
    if (row.classification.mv) ++rep.mv_count;
    if (row.classification.bl && !row.classification.mv)
      ++rep.non_mv_bl_count;
    if (!row.matched_ref.empty()) matched.insert(row.matched_ref);
    rep.rows.push_back(std::move(row));
  }
  rep.matched_refs.assign(matched.begin(), matched.end());
  return rep;
}

}  // namespace blring
