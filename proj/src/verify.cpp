#include "blring/verify.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blring/blstruct.hpp"
#include "blring/census.hpp"
#include "blring/finring.hpp"
#include "blring/ideals.hpp"
#include "blring/refalg.hpp"
#include "blring/resalg.hpp"
#include "blring/ringspec.hpp"

namespace blring {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxReported = 25;

void report(SweepResult& res, const std::string& what) {
  if (res.violations.size() < kMaxReported) res.violations.push_back(what);
}

/// The per-ring part of the family sweep.
void sweep_ring(const FiniteRing& r, SweepResult& res) {
  ++res.rings;
  const std::size_t m = r.order;

  // each nonzero element is a unit xor a zero divisor
  std::vector<std::uint8_t> cls(m, 0);  // 0 zero, 1 unit, 2 zero divisor
  for (Elem a = 0; a < m; ++a) {
    if (a == r.zero) continue;
    bool unit = false, zd = false;
    const Elem* row = r.mul.data() + std::size_t(a) * m;
    for (Elem b = 0; b < m; ++b) {
      if (row[b] == r.one) unit = true;
      if (b != r.zero && row[b] == r.zero) zd = true;
    }
    ++res.checks;
    if (unit == zd)
      report(res, r.name + ": element " + r.labels[a] +
                      (unit ? " is both unit and zero divisor"
                            : " is neither unit nor zero divisor"));
    cls[a] = unit ? 1 : 2;
  }

  // integral domain <=> field for finite rings
  RingPredicates pred = ring_predicates(r);
  ++res.checks;
  if (pred.is_field != pred.is_integral_domain)
    report(res, r.name + ": domain/field equivalence fails");

  IdealLattice lat = all_ideals(r);
  const std::size_t n = lat.size();

  std::size_t n_m = 0, n_p = 0;
  std::vector<IdealClass> classes(n);
  for (std::size_t i = 0; i < n; ++i) {
    classes[i] = classify_ideal(lat, i);
    if (classes[i].maximal) ++n_m;
    if (classes[i].prime) ++n_p;
    ++res.checks;
    if (classes[i].maximal != classes[i].prime)
      report(res, r.name + ": ideal " + lat.ideals[i].label() +
                      " breaks maximal<=>prime");
  }
  ++res.checks;
  if (n_m != n_p) report(res, r.name + ": n_m != n_p");

  // rings with exactly three ideals have I*I = {0}
  if (n == 3) {
    ++res.checks;
    if (lat.product_of(1, 1) != lat.bottom)
      report(res, r.name + ": three ideals but I*I != {0}");
  }

  // local <=> the non-units form an ideal
  {
    MemberSet nonunits(m);
    for (Elem a = 0; a < m; ++a)
      if (cls[a] != 1) nonunits.set(a);
    bool nonunits_ideal = true;
    try {
      validate_ideal(r, nonunits);
    } catch (const NotAnIdealError&) {
      nonunits_ideal = false;
    }
    ++res.checks;
    if (is_local(lat) != nonunits_ideal)
      report(res, r.name + ": locality disagrees with non-unit ideal test");
  }

  // ideals of zero divisors have nonzero annihilator
  for (std::size_t i = 0; i < n; ++i) {
    bool all_zd = true;
    const MemberSet& mem = lat.ideals[i].members;
    for (auto e = mem.find_first(); e != MemberSet::npos;
         e = mem.find_next(e))
      if (cls[e] == 1) {
        all_zd = false;
        break;
      }
    if (!all_zd) continue;
    ++res.checks;
    if (i != lat.bottom && lat.quotient_of(lat.bottom, i) == lat.bottom)
      report(res, r.name + ": zero-divisor ideal " + lat.ideals[i].label() +
                      " has zero annihilator");
  }

  // I*J c I^J c I c I+J
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++res.checks;
      const Elem p = lat.product_of(i, j), mt = lat.intersect_of(i, j),
                 s = lat.sum_of(i, j);
      if (!lat.included(p, mt) || !lat.included(mt, i) ||
          !lat.included(i, s)) {
        report(res, r.name + ": product/meet/sum ordering fails");
        break;
      }
    }

  // the ideal lattice is residuated; multiplication rings are BL-rings
  try {
    ResLat l = from_ideal_lattice(lat);
    Classification c = check_axioms(l);
    ++res.checks;
    if (!c.residuated)
      report(res, r.name + ": Id(R) fails the residuation scan");
    ++res.checks;
    if (is_multiplication_ring(lat) && !c.bl)
      report(res, r.name + ": multiplication ring but Id(R) not BL");
  } catch (const Error& e) {
    report(res, r.name + ": " + e.what());
  }
}

void sweep_product(const FiniteRing& a, const FiniteRing& b,
                   SweepResult& res) {
  FiniteRing p = mk_product(a, b);
  sweep_ring(p, res);

  // ideals of A x B are exactly the products of factor ideals
  IdealLattice la = all_ideals(a), lb = all_ideals(b), lp = all_ideals(p);
  ++res.checks;
  if (lp.size() != la.size() * lb.size()) {
    report(res, p.name + ": n_I != n_I(A) * n_I(B)");
    return;
  }
  std::size_t found = 0;
  for (const Ideal& ia : la.ideals)
    for (const Ideal& ib : lb.ideals) {
      MemberSet mem(p.order);
      for (auto x = ia.members.find_first(); x != MemberSet::npos;
           x = ia.members.find_next(x))
        for (auto y = ib.members.find_first(); y != MemberSet::npos;
             y = ib.members.find_next(y))
          mem.set(x * b.order + y);
      try {
        lp.index_of(mem);
        ++found;
      } catch (const Error&) {
      }
    }
  ++res.checks;
  if (found != lp.size())
    report(res, p.name + ": some factor-ideal products are missing");
}

}  // namespace

SweepResult property_sweep(const SweepOptions& opts) {
  SweepResult res;

  for (unsigned n = 2; n <= opts.zn_max; ++n) sweep_ring(mk_zn(n), res);

  for (unsigned n = 2; std::size_t(n) * n <= opts.polyquot_max_order; ++n) {
    for (unsigned d = 2;; ++d) {
      std::size_t m = 1;
      bool fits = true;
      for (unsigned i = 0; i < d; ++i) {
        m *= n;
        if (m > opts.polyquot_max_order) {
          fits = false;
          break;
        }
      }
      if (!fits) break;
      std::vector<unsigned> coeffs(d + 1, 0);
      coeffs[d] = 1;
      for (std::size_t low = 0;; ++low) {
        std::size_t v = low;
        for (unsigned i = 0; i < d; ++i) {
          coeffs[i] = unsigned(v % n);
          v /= n;
        }
        sweep_ring(mk_poly_quotient(PolySpec(n, coeffs)), res);
        if (low + 1 == m) break;
      }
    }
  }

  if (opts.product_max >= 2) {
    for (unsigned a = 2; a <= opts.product_max; ++a)
      for (unsigned b = a; b <= opts.product_max; ++b)
        sweep_product(mk_zn(a), mk_zn(b), res);
    // a few non-cyclic factors and triples
    FiniteRing z2x2 = mk_poly_quotient(PolySpec(2, {0, 0, 1}));
    FiniteRing z3x2 = mk_poly_quotient(PolySpec(3, {0, 0, 1}));
    FiniteRing z2x3 = mk_poly_quotient(PolySpec(2, {0, 0, 0, 1}));
    sweep_product(z2x2, z3x2, res);
    sweep_product(z2x2, z2x2, res);
    sweep_product(z3x2, z3x2, res);
    sweep_product(z2x3, z3x2, res);
    sweep_product(z2x2, mk_zn(5), res);
    sweep_product(mk_product(mk_zn(2), mk_zn(2)), mk_zn(2), res);
    sweep_product(mk_product(mk_zn(2), mk_zn(3)), mk_zn(5), res);
  }
  return res;
}

CensusScanResult census_scans(std::size_t max_order) {
  CensusScanResult res;
  auto note = [&res](const std::string& what) {
    if (res.violations.size() < kMaxReported) res.violations.push_back(what);
  };

  for (std::size_t order = 2; order <= max_order; ++order) {
    CensusResult census = enumerate_bl(order, {std::max<std::size_t>(
                                                  order, kDefaultCensusCap)});
    for (std::size_t ri = 0; ri < census.records.size(); ++ri) {
      const CensusRecord& rec = census.records[ri];
      const std::string tag =
          "order " + std::to_string(order) + " record " + std::to_string(ri);
      ++res.records;

      ++res.checks;
      if (!rec.classification.bl) note(tag + ": census kept a non-BL table");

      const ResLat& l = rec.tables;
      try {
        CometReport rep = comet_report(l);  // re-checks D(L) total order
        ++res.checks;
        if ((rep.is_comet && rep.pivot == l.top) != rec.classification.chain)
          note(tag + ": comet-with-pivot-1 <=> chain fails");
        if (rep.is_comet) {
          ++res.checks;
          if ((l.neg(l.neg(rep.pivot)) == rep.pivot) !=
              rec.classification.chain)
            note(tag + ": pivot involution <=> chain fails");
        }
        if (rec.classification.mv) {
          ++res.checks;
          if (rep.is_comet != rec.classification.chain)
            note(tag + ": MV comet <=> chain fails");
        }
      } catch (const Error& e) {
        note(tag + ": " + e.what());
      }

      try {
        Decomposition d = comet_decomposition(l);
        std::size_t prod = 1;
        for (const ResLat& f : d.factors) prod *= f.size;
        ++res.checks;
        if (prod != l.size) note(tag + ": factor sizes do not multiply up");
      } catch (const Error& e) {
        note(tag + ": decomposition: " + e.what());
      }

      for (Elem b : idempotents(l)) {
        ++res.checks;
        try {
          IntervalAlgebra ia = interval_algebra(l, b);
          if (ia.algebra.size > 1 && !check_axioms(ia.algebra).bl)
            note(tag + ": interval at " + l.label(b) + " is not BL");
        } catch (const Error& e) {
          note(tag + ": interval at " + l.label(b) + ": " + e.what());
        }
      }
    }
  }
  return res;
}

std::size_t VerifyReport::count(RowStatus s) const {
  std::size_t c = 0;
  for (const auto& row : rows) c += row.status == s ? 1 : 0;
  return c;
}

int VerifyReport::exit_code() const {
  return (count(RowStatus::Mismatch) == 0 && count(RowStatus::Skipped) == 0)
             ? 0
             : 1;
}

std::string row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::PaperDiscrepancy: return "paper-discrepancy";
    case RowStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << row_status_name(row.status);
    os << std::string(row.status == RowStatus::Match ? 14
                      : row.status == RowStatus::Mismatch ? 11
                      : row.status == RowStatus::Skipped ? 12
                                                         : 2,
                      ' ');
    os << row.claim;
    if (!row.details.empty()) os << "  [" << row.details << "]";
    os << "\n";
  }
  os << "summary: " << count(RowStatus::Match) << " match, "
     << count(RowStatus::Mismatch) << " mismatch, "
     << count(RowStatus::PaperDiscrepancy) << " paper-discrepancy, "
     << count(RowStatus::Skipped) << " skipped\n";
  return os.str();
}

nlohmann::json VerifyReport::to_json() const {
  json rows_json = json::array();
  for (const auto& row : rows)
    rows_json.push_back({{"claim", row.claim},
                         {"status", row_status_name(row.status)},
                         {"details", row.details}});
  return {{"version", 1},
          {"rows", rows_json},
          {"summary",
           {{"match", count(RowStatus::Match)},
            {"mismatch", count(RowStatus::Mismatch)},
            {"paper_discrepancy", count(RowStatus::PaperDiscrepancy)},
            {"skipped", count(RowStatus::Skipped)}}},
          {"exit", exit_code()}};
}

VerifyReport VerifyReport::from_json(const nlohmann::json& j) {
  VerifyReport rep;
  for (const auto& row : j.at("rows")) {
    VerifyRow r;
    r.claim = row.at("claim").get<std::string>();
    r.details = row.at("details").get<std::string>();
    const std::string st = row.at("status").get<std::string>();
    if (st == "match")
      r.status = RowStatus::Match;
    else if (st == "mismatch")
      r.status = RowStatus::Mismatch;
    else if (st == "paper-discrepancy")
      r.status = RowStatus::PaperDiscrepancy;
    else if (st == "skipped")
      r.status = RowStatus::Skipped;
    else
      throw ParseError("verify report: unknown status '" + st + "'");
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

namespace {

struct RowBuilder {
  VerifyReport& rep;

  void add(const std::string& claim, bool ok, const std::string& details) {
    rep.rows.push_back(
        {claim, ok ? RowStatus::Match : RowStatus::Mismatch, details});
  }
  void discrepancy(const std::string& claim, bool as_expected,
                   const std::string& details) {
    rep.rows.push_back({claim,
                        as_expected ? RowStatus::PaperDiscrepancy
                                    : RowStatus::Mismatch,
                        details});
  }
  void skipped(const std::string& claim, const std::string& why) {
    rep.rows.push_back({claim, RowStatus::Skipped, why});
  }
};

std::string chain4_expected_summary() {
  return "1:MV(3.4) 2:not-associative 3:BL(3.5) 4:div-fails 5:div-fails "
         "6:impossible 7:BL(3.6) 8:impossible 9:BL(3.7) 10:impossible "
         "11:impossible 12:impossible";
}

std::string chain4_actual_summary(const std::vector<Chain4Case>& ledger) {
  std::ostringstream os;
  for (const auto& c : ledger) {
    if (c.case_id > 1) os << " ";
    os << c.case_id << ":";
    switch (c.verdict) {
      case Chain4Verdict::MV:
        os << "MV(" << c.matched_ref << ")";
        break;
      case Chain4Verdict::BLnotMV:
        os << "BL(" << c.matched_ref << ")";
        break;
      default:
        os << verdict_name(c.verdict);
    }
  }
  return os.str();
}

}  // namespace

VerifyReport verify_paper(const VerifyOptions& opts) {
  VerifyReport rep;
  RowBuilder rows{rep};

  // rings the report keeps coming back to
  FiniteRing z4 = mk_zn(4);
  IdealLattice z4_lat = all_ideals(z4);
  ResLat z4_id = from_ideal_lattice(z4_lat);
  Classification z4_cls = check_axioms(z4_id);

  {
    const bool ok = z4_lat.size() == 3 &&
                    are_isomorphic(z4_id, ref_table("3.1").algebra).has_value() &&
                    z4_cls.bl && z4_cls.mv;
    rows.add("Prop 3.1: Id(Z_4) is the order-3 MV algebra with tables (3.1)",
             ok, "ideals=" + std::to_string(z4_lat.size()));
  }
  {
    // I -> {0} = (0 : I) = I on the unique proper ideal of Z_4
    const bool ok = z4_id.arrow_at(1, 0) == 1;
    rows.add("Prop 3.1: I->0 = (0:I) = I in Id(Z_4)", ok,
             "I->0 = " + z4_id.label(z4_id.arrow_at(1, 0)));
  }
  {
    FiniteRing r = mk_product(mk_zn(2), mk_zn(2));
    ResLat l = from_ideal_lattice(all_ideals(r));
    Classification c = check_axioms(l);
    rows.add("Remark 3.7: Id(Z_2 x Z_2) matches tables (3.3), an MV-algebra",
             are_isomorphic(l, ref_table("3.3").algebra).has_value() && c.mv,
             "");
  }
  {
    FiniteRing r = mk_zn(8);
    ResLat l = from_ideal_lattice(all_ideals(r));
    Classification c = check_axioms(l);
    rows.add("Remark 3.7: Id(Z_8) matches tables (3.4), an MV-algebra",
             are_isomorphic(l, ref_table("3.4").algebra).has_value() && c.mv,
             "");
  }
  {
    FiniteRing r = mk_poly_quotient(PolySpec(6, {0, 0, 1}));
    IdealLattice lat = all_ideals(r);
    Classification c = check_axioms(from_ideal_lattice(lat));
    rows.add("Example 3.4(1): Z_6[X]/(X^2) is a BL-ring with 9 ideals",
             lat.size() == 9 && c.bl,
             "ideals=" + std::to_string(lat.size()));
  }
  {
    auto ledger = chain4_ledger();
    const std::string actual = chain4_actual_summary(ledger);
    rows.add("Remark 3.6: the twelve assignments on the four-chain",
             actual == chain4_expected_summary(), actual);
  }

  // census-backed rows
  if (opts.census_max_order >= 3) {
    CensusResult c3 = enumerate_bl(3);
    std::size_t non_mv = 0;
    bool matches = false;
    for (const auto& r : c3.records)
      if (!r.classification.mv) {
        ++non_mv;
        matches = are_isomorphic(r.tables, ref_table("3.2").algebra).has_value();
      }
    rows.add("Remark 3.2: exactly one order-3 BL-algebra is not MV, tables "
             "(3.2)",
             non_mv == 1 && matches && c3.records.size() == 2,
             "classes=" + std::to_string(c3.records.size()) +
                 " non-MV=" + std::to_string(non_mv));
  } else {
    rows.skipped("Remark 3.2: exactly one order-3 BL-algebra is not MV, "
                 "tables (3.2)",
                 "census cap " + std::to_string(opts.census_max_order) +
                     " < 3");
  }

  if (opts.census_max_order >= 4) {
    CensusResult c4 = enumerate_bl(4);
    std::size_t chains_not_mv = 0;
    for (const auto& r : c4.records)
      if (r.classification.chain && !r.classification.mv) ++chains_not_mv;
    rows.add("Remark 3.7: five BL-algebras of order 4, two MV and three "
             "BL-chains",
             c4.records.size() == 5 && c4.mv_count() == 2 &&
                 chains_not_mv == 3,
             "classes=" + std::to_string(c4.records.size()) +
                 " MV=" + std::to_string(c4.mv_count()));

    std::vector<std::string> ids;
    for (const auto& r : c4.records) ids.push_back(match_ref_table(r.tables));
    std::sort(ids.begin(), ids.end());
    rows.add("Remark 3.6/3.7: the order-4 classes are exactly "
             "(3.3),(3.4),(3.5),(3.6),(3.7)",
             ids == std::vector<std::string>{"3.3", "3.4", "3.5", "3.6",
                                             "3.7"},
             "");
  } else {
    rows.skipped("Remark 3.7: five BL-algebras of order 4, two MV and three "
                 "BL-chains",
                 "census cap " + std::to_string(opts.census_max_order) +
                     " < 4");
    rows.skipped("Remark 3.6/3.7: the order-4 classes are exactly "
                 "(3.3),(3.4),(3.5),(3.6),(3.7)",
                 "census cap too small");
  }

  if (opts.census_max_order >= 5) {
    CensusResult c5 = enumerate_bl(5);
    std::size_t chains = 0, chain_mv = 0;
    for (const auto& r : c5.records)
      if (r.classification.chain) {
        ++chains;
        if (r.classification.mv) ++chain_mv;
      }
    rows.add("Remark 3.9: eight BL-chains of order 5, one of them MV",
             chains == 8 && chain_mv == 1,
             "total order-5 classes=" + std::to_string(c5.records.size()) +
                 " (no stated total to compare)");

    // the five-element lattice with two atoms and one coatom admits no BL
    // structure: (prel) fails for every residuated candidate
    bool found_shape = false, shape_ok = false;
    for (const auto& st : c5.stats) {
      const BoundedLattice& lat = c5.lattices[st.lattice_id];
      std::size_t atoms = 0, coatoms = 0;
      for (Elem x = 1; std::size_t(x) + 1 < lat.size; ++x) {
        bool atom = true, coatom = true;
        for (Elem y = 1; std::size_t(y) + 1 < lat.size; ++y) {
          if (y != x && lat.le(y, x)) atom = false;
          if (y != x && lat.le(x, y)) coatom = false;
        }
        if (atom) ++atoms;
        if (coatom) ++coatoms;
      }
      if (!lat.is_chain() && atoms == 2 && coatoms == 1) {
        found_shape = true;
        shape_ok = st.records == 0 && st.residuated > 0 &&
                   st.prel_rejects == st.residuated;
      }
    }
    rows.add("Remark 3.9: no BL-algebra on the order-5 lattice with two "
             "atoms below a single coatom; (prel) always fails",
             found_shape && shape_ok, "");
  } else {
    rows.skipped("Remark 3.9: eight BL-chains of order 5, one of them MV",
                 "census cap " + std::to_string(opts.census_max_order) +
                     " < 5");
    rows.skipped("Remark 3.9: no BL-algebra on the order-5 lattice with two "
                 "atoms below a single coatom; (prel) always fails",
                 "census cap too small");
  }

  {
    const bool four = enumerate_lattices(4).size() == 2;
    const bool five = enumerate_lattices(5).size() == 5;
    rows.add("Figure 1: two bounded lattices on four elements", four, "");
    rows.add("Figures 2-3: five bounded lattices on five elements", five, "");
  }

  // Example 3.11 rows
  const ResLat& g3sq = ref_table("3.8").algebra;
  {
    const ResLat& g3 = ref_table("3.2").algebra;
    ResLat prod = direct_product(g3, g3);
    rows.add("Example 3.11: (3.2) x (3.2) is the order-9 algebra (3.8)",
             are_isomorphic(prod, g3sq).has_value(), "");
  }
  {
    Subalgebra sub = subalgebra(g3sq, {4, 7});  // D and G
    bool ok = sub.carrier == std::vector<Elem>{0, 4, 5, 7, 8};
    ok = ok && sub.algebra.odot == ref_table("3.11-comet5").algebra.odot &&
         sub.algebra.arrow == ref_table("3.11-comet5").algebra.arrow;
    std::string pivot_label;
    if (ok) {
      CometReport rep = comet_report(sub.algebra);
      pivot_label = sub.algebra.label(rep.pivot);
      ok = rep.is_comet && pivot_label == "D";
    }
    rows.add("Example 3.11: closure of {D,G} in (3.8) is the order-5 "
             "BL-comet with the printed tables",
             ok, ok ? "pivot=" + pivot_label : "");
  }
  {
    IntervalAlgebra ia = interval_algebra(g3sq, 3);  // C
    bool ok = ia.carrier == std::vector<Elem>{3, 4, 5, 6, 7, 8};
    ok = ok && ia.algebra.odot == ref_table("3.11-interval6").algebra.odot &&
         ia.algebra.arrow == ref_table("3.11-interval6").algebra.arrow &&
         check_axioms(ia.algebra).bl;
    rows.add("Example 3.11: the upper set of C in (3.8) is the bold order-6 "
             "BL-algebra (an interval algebra; its bottom is C, not O)",
             ok, "");
  }
  {
    IntervalAlgebra ia = interval_algebra(g3sq, 6);  // F
    const bool is_32 =
        are_isomorphic(ia.algebra, ref_table("3.2").algebra).has_value();
    const bool not_37 = ref_table("3.7").algebra.size != ia.algebra.size;
    rows.discrepancy(
        "Example 3.11: {F,G,Z} is stated to be as in relation (3.7); the "
        "order-3 extract actually matches (3.2) ((3.7) has four elements)",
        is_32 && not_37, "matches (3.2)");
  }

  {
    bool ok = true;
    std::ostringstream detail;
    for (unsigned p : {2u, 3u})
      for (unsigned t : {2u, 3u}) {
        std::vector<unsigned> coeffs(t + 1, 0);
        coeffs[t] = 1;
        FiniteRing r = mk_poly_quotient(PolySpec(p, coeffs));
        IdealLattice lat = all_ideals(r);
        detail << "Z_" << p << "[X]/(X^" << t << "): " << lat.size() << " ";
        ok = ok && lat.size() == t + 1;
      }
    rows.discrepancy(
        "Remark 2.13(1): K[X]/(X^t) is stated to have t ideals; enumeration "
        "gives t+1 (the chain (0) c (X^{t-1}) c ... c (X) c R)",
        ok, detail.str());
  }

  {
    auto counts = [](const FiniteRing& r) {
      IdealCounts c = ideal_counts(all_ideals(r));
      return std::to_string(c.n_m) + "," + std::to_string(c.n_p) + "," +
             std::to_string(c.n_i);
    };
    const std::string z6 = counts(mk_zn(6));
    const std::string z2z2 = counts(mk_product(mk_zn(2), mk_zn(2)));
    const std::string z8 = counts(mk_zn(8));
    rows.add("Remark 2.13(3): (n_m,n_p,n_I) is (2,2,4) for Z_6 and Z_2 x "
             "Z_2, (1,1,4) for Z_8",
             z6 == "2,2,4" && z2z2 == "2,2,4" && z8 == "1,1,4",
             "Z_6=" + z6 + " Z_2xZ_2=" + z2z2 + " Z_8=" + z8);
  }

  {
    FiniteRing z6 = mk_zn(6);
    Ideal two = principal_ideal(z6, 2), three = principal_ideal(z6, 3);
    CrtWitness w = crt_split(z6, two, three);
    bool not_coprime_detected = false;
    try {
      FiniteRing z4b = mk_zn(4);
      Ideal i2 = principal_ideal(z4b, 2);
      crt_split(z4b, i2, i2);
    } catch (const NotCoprimeError&) {
      not_coprime_detected = true;
    }
    rows.add("Prop 1.3: CRT splits Z_6 over (2),(3): I*J = I^J and R/(I^J) "
             "~= R/I x R/J; (2)+(2) in Z_4 is rejected as not coprime",
             w.product_equals_intersection && w.is_bijection &&
                 w.is_homomorphism && w.product.order == 6 &&
                 not_coprime_detected,
             "");
  }

  {
    bool ok = true;
    for (unsigned n : {2u, 3u, 4u, 6u, 8u, 9u, 12u, 30u}) {
      FiniteRing r = mk_zn(n);
      IdealLattice lat = all_ideals(r);
      ok = ok && is_multiplication_ring(lat) &&
           check_axioms(from_ideal_lattice(lat)).bl;
    }
    for (auto [p, c0, c1] : {std::array<unsigned, 3>{2, 0, 0},
                             std::array<unsigned, 3>{3, 0, 0},
                             std::array<unsigned, 3>{5, 1, 0}}) {
      FiniteRing r = mk_poly_quotient(PolySpec(p, {c0, c1, 1}));
      IdealLattice lat = all_ideals(r);
      ok = ok && is_multiplication_ring(lat) &&
           check_axioms(from_ideal_lattice(lat)).bl;
    }
    rows.add("Remark 3.8: Z_n and Z_p[X]/(f) are multiplication rings whose "
             "Id(R) is BL",
             ok, "");
  }

  if (opts.census_max_order >= 5) {
    CensusScanResult scans = census_scans(5);
    rows.add("Props 1.10-1.12 and Remark 3.9: comet equivalences and comet "
             "decomposition over the census of orders 2-5",
             scans.ok(),
             "records=" + std::to_string(scans.records) +
                 " checks=" + std::to_string(scans.checks) +
                 (scans.ok() ? "" : "; first: " + scans.violations.front()));
  } else {
    rows.skipped("Props 1.10-1.12 and Remark 3.9: comet equivalences and "
                 "comet decomposition over the census of orders 2-5",
                 "census cap " + std::to_string(opts.census_max_order) +
                     " < 5");
  }

  if (opts.run_sweep) {
    SweepResult sweep = property_sweep(opts.sweep);
    rows.add("Props 2.7/2.8/2.10/2.11/2.12, Remark 2.9, residuation of "
             "Id(R), multiplication => BL: ring-family property sweep",
             sweep.ok(),
             "rings=" + std::to_string(sweep.rings) +
                 " checks=" + std::to_string(sweep.checks) +
                 (sweep.ok() ? "" : "; first: " + sweep.violations.front()));
  } else {
    rows.skipped("Props 2.7/2.8/2.10/2.11/2.12, Remark 2.9, residuation of "
                 "Id(R), multiplication => BL: ring-family property sweep",
                 "sweep disabled");
  }

  return rep;
}

}  // namespace blring
