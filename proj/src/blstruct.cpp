#include "blring/blstruct.hpp"

#include <algorithm>

namespace blring {

std::vector<Elem> idempotents(const ResLat& l) {
  std::vector<Elem> out;
  for (Elem x = 0; x < l.size; ++x)
    if (l.odot_at(x, x) == x) out.push_back(x);
  return out;
}

std::vector<Elem> boolean_elements(const ResLat& l) {
  std::vector<Elem> out;
  for (Elem x = 0; x < l.size; ++x)
    if (l.odot_at(x, x) == x && l.join_at(x, l.neg(x)) == l.top)
      out.push_back(x);
  return out;
}

CometReport comet_report(const ResLat& l) {
  Classification c = check_axioms(l);
  if (!c.bl)
    throw NotBLError("comet_report: not a BL-algebra (" +
                     classification_summary(c) + ")");

  CometReport rep;
  rep.is_chain = c.chain;
  rep.idempotents = idempotents(l);

  auto comparable = [&l](Elem a, Elem b) { return l.le(a, b) || l.le(b, a); };
  for (Elem x : rep.idempotents) {
    bool c_full = true;
    for (Elem y : rep.idempotents)
      if (!comparable(x, y)) {
        c_full = false;
        break;
      }
    if (!c_full) continue;
    bool down_chain = true;
    for (Elem y : rep.idempotents) {
      if (!l.le(y, x)) continue;
      for (Elem z : rep.idempotents)
        if (l.le(z, x) && !comparable(y, z)) {
          down_chain = false;
          break;
        }
      if (!down_chain) break;
    }
    if (down_chain) rep.d_set.push_back(x);
  }

  // D(L) must be totally ordered for max to exist; surface any counterexample.
  for (Elem a : rep.d_set)
    for (Elem b : rep.d_set)
      if (!comparable(a, b))
        throw Error("comet_report: D(L) contains incomparable elements " +
                    l.label(a) + ", " + l.label(b));
  rep.pivot = l.bot;
  for (Elem a : rep.d_set)
    if (l.le(rep.pivot, a)) rep.pivot = a;
  rep.is_comet = rep.pivot != l.bot;
  return rep;
}

IntervalAlgebra interval_algebra(const ResLat& l, Elem b) {
  if (b >= l.size) throw Error("interval_algebra: index out of range");
  if (l.odot_at(b, b) != b)
    throw NotIdempotentError("interval_algebra: " + l.label(b) +
                             " is not idempotent");
  IntervalAlgebra out;
  for (Elem x = 0; x < l.size; ++x)
    if (l.le(b, x)) out.carrier.push_back(x);
  const std::size_t n = out.carrier.size();
  std::vector<Elem> back(l.size, 0);
  for (std::size_t i = 0; i < n; ++i) back[out.carrier[i]] = Elem(i);

  ResLat& a = out.algebra;
  a.size = n;
  a.leq.assign(n * n, 0);
  a.meet.resize(n * n);
  a.join.resize(n * n);
  a.odot.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Elem x = out.carrier[i], y = out.carrier[j];
      a.leq[i * n + j] = l.le(x, y) ? 1 : 0;
      a.meet[i * n + j] = back[l.meet_at(x, y)];
      a.join[i * n + j] = back[l.join_at(x, y)];
      a.odot[i * n + j] = back[l.odot_at(x, y)];
    }
  a.bot = back[b];
  a.top = back[l.top];
  a.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) a.labels[i] = l.labels[out.carrier[i]];

  // the parent arrow may fall below b; recompute the residuum inside
  ResiduumResult rr = residuum(n, a.leq, a.odot);
  if (!rr.ok())
    throw NotResiduatedError("interval_algebra: no residuum at (" +
                             a.labels[(*rr.no_maximum)[0]] + "," +
                             a.labels[(*rr.no_maximum)[1]] + ")");
  a.arrow = std::move(rr.arrow);
  return out;
}

namespace {

void split_comets(const ResLat& l, std::vector<ResLat>& out) {
  std::vector<Elem> bools = boolean_elements(l);
  Elem pick = Elem(l.size);
  for (Elem b : bools)
    if (b != l.bot && b != l.top) {
      pick = b;
      break;
    }
  if (pick == l.size) {
    out.push_back(l);
    return;
  }
  const Elem comp = l.neg(pick);
  split_comets(interval_algebra(l, pick).algebra, out);
  split_comets(interval_algebra(l, comp).algebra, out);
}

}  // namespace

Decomposition comet_decomposition(const ResLat& l) {
  Classification c = check_axioms(l);
  if (!c.bl)
    throw NotBLError("comet_decomposition: not a BL-algebra (" +
                     classification_summary(c) + ")");

  Decomposition d;
  split_comets(l, d.factors);

  for (const ResLat& f : d.factors) {
    CometReport rep = comet_report(f);
    if (!rep.is_comet)
      throw Error("comet_decomposition: terminal factor of size " +
                  std::to_string(f.size) + " is not a comet");
  }

  ResLat prod = d.factors.front();
  for (std::size_t i = 1; i < d.factors.size(); ++i)
    prod = direct_product(prod, d.factors[i]);
  auto iso = are_isomorphic(prod, l);
  if (!iso)
    throw Error("comet_decomposition: factor product is not isomorphic to "
                "the algebra");
  d.embedding = std::move(*iso);
  return d;
}

}  // namespace blring
