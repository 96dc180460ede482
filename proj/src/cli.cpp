#include "blring/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blring/blstruct.hpp"
#include "blring/census.hpp"
#include "blring/ideals.hpp"
#include "blring/refalg.hpp"
#include "blring/render.hpp"
#include "blring/ringspec.hpp"
#include "blring/verify.hpp"

namespace blring::cli {

namespace {

using nlohmann::json;

RingSpec spec_from_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw IoError("cannot open " + arg.substr(1));
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError("bad JSON in " + arg.substr(1) + ": " + e.what());
    }
    return ring_spec_from_json(j);
  }
  return parse_ring_spec(arg);
}

std::vector<std::string> split_labels(const std::string& s) {
  // single characters, or comma-separated labels
  std::vector<std::string> out;
  if (s.find(',') == std::string::npos) {
    for (char c : s) out.emplace_back(1, c);
  } else {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
  }
  return out;
}

void emit(std::ostream& out, const std::string& text,
          const std::string& out_path) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw IoError("cannot write " + out_path);
  f << text;
  out << "wrote " << out_path << "\n";
}

json classification_json(const Classification& c) {
  return {{"residuated", c.residuated}, {"prelinear", c.prelinear},
          {"divisible", c.divisible},   {"bl", c.bl},
          {"mv", c.mv},                 {"chain", c.chain},
          {"degenerate", c.degenerate}};
}

json comet_json(const CometReport& rep, const ResLat& l) {
  json idem = json::array(), dset = json::array();
  for (Elem x : rep.idempotents) idem.push_back(l.label(x));
  for (Elem x : rep.d_set) dset.push_back(l.label(x));
  return {{"idempotents", idem},
          {"d_set", dset},
          {"pivot", l.label(rep.pivot)},
          {"is_comet", rep.is_comet},
          {"is_chain", rep.is_chain}};
}

std::string comet_text(const CometReport& rep, const ResLat& l) {
  std::ostringstream os;
  os << "comet: " << (rep.is_comet ? "yes" : "no")
     << "; pivot: " << l.label(rep.pivot) << "; idempotents: {";
  for (std::size_t i = 0; i < rep.idempotents.size(); ++i)
    os << (i ? "," : "") << l.label(rep.idempotents[i]);
  os << "}; D(L): {";
  for (std::size_t i = 0; i < rep.d_set.size(); ++i)
    os << (i ? "," : "") << l.label(rep.d_set[i]);
  os << "}";
  return os.str();
}

struct AlgebraInput {
  ResLat algebra;
  std::string source;
  std::size_t ideal_count = 0;  // nonzero when built from a ring
};

AlgebraInput load_algebra(const std::string& ring_spec,
                          const std::string& algebra_path,
                          const std::string& labels) {
  AlgebraInput in;
  if (!ring_spec.empty()) {
    RingSpec spec = spec_from_arg(ring_spec);
    FiniteRing r = build_ring(spec);
    IdealLattice lat = all_ideals(r);
    in.algebra = from_ideal_lattice(lat);
    in.ideal_count = lat.size();
    in.source = r.name;
    if (labels.empty()) in.algebra.labels = ideal_lattice_labels(lat.size());
  } else {
    in.algebra = from_tables(load_algebra_spec(algebra_path));
    in.source = algebra_path;
  }
  if (!labels.empty()) {
    auto lb = split_labels(labels);
    if (lb.size() != in.algebra.size)
      throw ParseError("labels: expected " +
                       std::to_string(in.algebra.size) + " labels");
    in.algebra.labels = lb;
  }
  return in;
}

int cmd_ring(const std::string& spec_arg, const std::string& format,
             const std::string& out_path, const std::string& spec_out,
             std::ostream& out) {
  RingSpec spec = spec_from_arg(spec_arg);
  FiniteRing r = build_ring(spec);
  if (!spec_out.empty()) save_json(ring_spec_to_json(spec), spec_out);

  RingPredicates p = ring_predicates(r);
  std::size_t units = 0, zds = 0;
  for (Elem a = 0; a < r.order; ++a) {
    ElementClass c = element_class(r, a);
    if (c == ElementClass::Unit) ++units;
    if (c == ElementClass::ZeroDivisor) ++zds;
  }

  if (format == "json") {
    json add = json::array(), mul = json::array();
    for (std::size_t i = 0; i < r.order; ++i) {
      json arow = json::array(), mrow = json::array();
      for (std::size_t j = 0; j < r.order; ++j) {
        arow.push_back(r.add[i * r.order + j]);
        mrow.push_back(r.mul[i * r.order + j]);
      }
      add.push_back(arow);
      mul.push_back(mrow);
    }
    json j = {{"spec", ring_spec_to_json(spec)},
              {"name", r.name},
              {"order", r.order},
              {"zero", r.zero},
              {"one", r.one},
              {"labels", r.labels},
              {"add", add},
              {"mul", mul},
              {"is_field", p.is_field},
              {"is_integral_domain", p.is_integral_domain},
              {"is_trivial", p.is_trivial},
              {"units", units},
              {"zero_divisors", zds}};
    emit(out, j.dump(2) + "\n", out_path);
    return kExitOk;
  }

  std::ostringstream os;
  os << r.name << ": order " << r.order << "\n";
  os << "field: " << (p.is_field ? "yes" : "no")
     << "; integral domain: " << (p.is_integral_domain ? "yes" : "no")
     << "; trivial: " << (p.is_trivial ? "yes" : "no") << "\n";
  os << "units: " << units << "; zero divisors: " << zds << "\n\n";
  os << render_cayley(r);
  emit(out, os.str(), out_path);
  return kExitOk;
}

int cmd_ideals(const std::string& spec_arg, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  RingSpec spec = spec_from_arg(spec_arg);
  FiniteRing r = build_ring(spec);
  IdealLattice lat = all_ideals(r);
  IdealCounts counts = ideal_counts(lat);
  const bool local = is_local(lat);
  const bool mult = is_multiplication_ring(lat);

  if (format == "json") {
    json ideals = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      IdealClass c = classify_ideal(lat, i);
      json members = json::array();
      const MemberSet& mem = lat.ideals[i].members;
      for (auto e = mem.find_first(); e != MemberSet::npos;
           e = mem.find_next(e))
        members.push_back(e);
      ideals.push_back({{"label", lat.ideals[i].label()},
                        {"members", members},
                        {"maximal", c.maximal},
                        {"prime", c.prime},
                        {"minimal", c.minimal}});
    }
    json hasse = json::array();
    for (auto [i, j] : hasse_edges(lat.size(), lat.leq))
      hasse.push_back({i, j});
    json leq = json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < lat.size(); ++j)
        row.push_back(int(lat.leq[i * lat.size() + j]));
      leq.push_back(row);
    }
    json j = {{"ring", r.name},
              {"spec", ring_spec_to_json(spec)},
              {"ideals", ideals},
              {"hasse", hasse},
              {"leq", leq},
              {"n_m", counts.n_m},
              {"n_p", counts.n_p},
              {"n_I", counts.n_i},
              {"local", local},
              {"multiplication_ring", mult}};
    emit(out, j.dump(2) + "\n", out_path);
    return kExitOk;
  }

  std::ostringstream os;
  os << r.name << "\n" << render_ideal_lattice(lat);
  os << "classes:";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    IdealClass c = classify_ideal(lat, i);
    std::string tags;
    if (c.maximal) tags += "maximal ";
    if (c.prime) tags += "prime ";
    if (c.minimal) tags += "minimal ";
    if (!tags.empty()) {
      tags.pop_back();
      os << " [" << i << "]=" << tags << ";";
    }
  }
  os << "\n(n_m,n_p,n_I) = (" << counts.n_m << "," << counts.n_p << ","
     << counts.n_i << ")\n";
  os << "local: " << (local ? "yes" : "no")
     << "; multiplication ring: " << (mult ? "yes" : "no") << "\n";
  emit(out, os.str(), out_path);
  return kExitOk;
}

int cmd_classify(const std::string& ring_spec, const std::string& algebra,
                 const std::string& labels, const std::string& format,
                 const std::string& out_path, std::ostream& out) {
  AlgebraInput in = load_algebra(ring_spec, algebra, labels);
  Classification c = check_axioms(in.algebra);
  std::optional<CometReport> comet;
  std::optional<MvCheck> mv_axioms;
  std::optional<Decomposition> decomp;
  if (c.bl) {
    comet = comet_report(in.algebra);
    mv_axioms = verify_mv_axioms(in.algebra);
    decomp = comet_decomposition(in.algebra);
  }
  const std::string ref = match_ref_table(in.algebra);

  if (format == "json") {
    json j = {{"source", in.source},
              {"classification", classification_json(c)},
              {"tables", algebra_spec_to_json(algebra_spec_of(in.algebra))}};
    if (in.ideal_count) j["ideals"] = in.ideal_count;
    if (comet) j["comet"] = comet_json(*comet, in.algebra);
    if (mv_axioms) j["mv_axioms"] = mv_axioms->ok;
    if (decomp) {
      json factors = json::array();
      for (const ResLat& f : decomp->factors) {
        CometReport rep = comet_report(f);
        factors.push_back({{"size", f.size}, {"pivot", f.label(rep.pivot)}});
      }
      j["comet_factors"] = factors;
    }
    if (!ref.empty()) j["matches"] = ref;
    if (c.failure_witness) j["failed_law"] = c.failure_witness->law;
    emit(out, j.dump(2) + "\n", out_path);
    return kExitOk;
  }

  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << in.source << ": ";
  if (in.ideal_count)
    os << in.ideal_count << " ideals; ";
  else
    os << "order " << in.algebra.size << "; ";
  os << "BL: " << yn(c.bl) << "; MV: " << yn(c.mv)
     << "; chain: " << yn(c.chain) << "\n";
  os << classification_summary(c) << "\n";
  if (c.failure_witness)
    os << "first failed law: " << c.failure_witness->law << " at ("
       << in.algebra.label(c.failure_witness->at[0]) << ","
       << in.algebra.label(c.failure_witness->at[1]) << ","
       << in.algebra.label(c.failure_witness->at[2]) << ")\n";
  if (comet) os << comet_text(*comet, in.algebra) << "\n";
  if (mv_axioms)
    os << "oplus/negation axioms: " << (mv_axioms->ok ? "pass" : "fail")
       << "\n";
  if (decomp) {
    os << "comet factors:";
    for (const ResLat& f : decomp->factors) {
      CometReport rep = comet_report(f);
      os << " [size " << f.size << ", pivot " << f.label(rep.pivot) << "]";
    }
    os << "\n";
  }
  if (!ref.empty()) os << "matches reference table " << ref << "\n";
  os << "\n" << render_tables(in.algebra);
  emit(out, os.str(), out_path);
  return kExitOk;
}

int cmd_tables(const std::string& ring_spec, const std::string& algebra,
               const std::string& labels, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  AlgebraInput in = load_algebra(ring_spec, algebra, labels);
  if (format == "json") {
    emit(out,
         algebra_spec_to_json(algebra_spec_of(in.algebra)).dump(2) + "\n",
         out_path);
    return kExitOk;
  }
  emit(out, render_tables(in.algebra), out_path);
  return kExitOk;
}

json record_json(const CensusRecord& rec) {
  return {{"order", rec.order},
          {"lattice", rec.lattice_id},
          {"tables", algebra_spec_to_json(algebra_spec_of(rec.tables))},
          {"classification", classification_json(rec.classification)},
          {"comet", comet_json(rec.comet, rec.tables)},
          {"matches", match_ref_table(rec.tables)}};
}

int cmd_census(std::size_t order, bool chains_only, std::size_t cap,
               const std::string& format, const std::string& out_path,
               std::ostream& out) {
  CensusOptions opts;
  opts.max_order = cap;
  opts.chains_only = chains_only;
  CensusResult res = enumerate_bl(order, opts);

  if (format == "json") {
    json stats = json::array();
    for (const auto& s : res.stats)
      stats.push_back({{"lattice", s.lattice_id},
                       {"chain", s.is_chain},
                       {"monoid_candidates", s.monoid_candidates},
                       {"residuated", s.residuated},
                       {"prel_rejects", s.prel_rejects},
                       {"div_rejects", s.div_rejects},
                       {"records", s.records}});
    json records = json::array();
    for (const auto& r : res.records) records.push_back(record_json(r));
    json j = {{"order", order},
              {"lattices", res.lattices.size()},
              {"classes", res.records.size()},
              {"mv", res.mv_count()},
              {"chains", res.chain_count()},
              {"comets", res.comet_count()},
              {"stats", stats},
              {"records", records}};
    emit(out, j.dump(2) + "\n", out_path);
    return kExitOk;
  }

  std::size_t non_mv_chains = 0;
  for (const auto& r : res.records)
    if (r.classification.chain && !r.classification.mv) ++non_mv_chains;
  std::ostringstream os;
  os << "order " << order << ": " << res.records.size() << " classes ("
     << res.mv_count() << " MV, " << non_mv_chains << " BL-chains, "
     << res.comet_count() << " comets) on " << res.lattices.size()
     << " lattices\n";
  for (const auto& s : res.stats)
    os << "  lattice " << s.lattice_id << (s.is_chain ? " (chain)" : "")
       << ": monoids=" << s.monoid_candidates
       << " residuated=" << s.residuated << " prel-rejects=" << s.prel_rejects
       << " div-rejects=" << s.div_rejects << " records=" << s.records
       << "\n";
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    const CensusRecord& rec = res.records[i];
    const std::string ref = match_ref_table(rec.tables);
    os << "\nrecord " << i << " (lattice " << rec.lattice_id << "): "
       << classification_summary(rec.classification);
    if (!ref.empty()) os << "; matches " << ref;
    os << "\n" << render_tables(rec.tables);
  }
  emit(out, os.str(), out_path);
  return kExitOk;
}

int cmd_ledger(const std::string& format, const std::string& out_path,
               std::ostream& out) {
  auto ledger = chain4_ledger();
  const std::vector<std::string> names = {"0", "I", "J", "R"};

  if (format == "json") {
    json rows = json::array();
    for (const auto& c : ledger)
      rows.push_back({{"case", c.case_id},
                      {"I*I", names[c.assignment[0]]},
                      {"J*J", names[c.assignment[1]]},
                      {"I*J", names[c.assignment[2]]},
                      {"verdict", verdict_name(c.verdict)},
                      {"witness", c.witness},
                      {"matches", c.matched_ref}});
    emit(out, json{{"cases", rows}}.dump(2) + "\n", out_path);
    return kExitOk;
  }

  std::ostringstream os;
  os << "four-chain 0 < I < J < R: the twelve products\n";
  for (const auto& c : ledger) {
    os << "case " << c.case_id << ": I*I=" << names[c.assignment[0]]
       << " J*J=" << names[c.assignment[1]]
       << " I*J=" << names[c.assignment[2]] << " -> "
       << verdict_name(c.verdict);
    if (!c.matched_ref.empty()) os << " (" << c.matched_ref << ")";
    if (!c.witness.empty()) os << "; " << c.witness;
    os << "\n";
  }
  emit(out, os.str(), out_path);
  return kExitOk;
}

int cmd_atlas(const AtlasConfig& cfg, const std::string& format,
              const std::string& out_path, std::ostream& out) {
  AtlasReport rep = ring_atlas(cfg);

  if (format == "json") {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"spec", r.spec},
                      {"name", r.name},
                      {"order", r.order},
                      {"n_m", r.counts.n_m},
                      {"n_p", r.counts.n_p},
                      {"n_I", r.counts.n_i},
                      {"classification", classification_json(r.classification)},
                      {"comet", r.comet},
                      {"matches", r.matched_ref}});
    json j = {{"family", rep.family},
              {"rows", rows},
              {"bl", rep.bl_count},
              {"mv", rep.mv_count},
              {"bl_not_mv", rep.non_mv_bl_count},
              {"matched_refs", rep.matched_refs}};
    emit(out, j.dump(2) + "\n", out_path);
    return kExitOk;
  }

  std::ostringstream os;
  os << "family: " << rep.family << "\n";
  for (const auto& r : rep.rows) {
    os << r.spec << " [" << r.name << "] order=" << r.order << " (n_m,n_p,n_I)=("
       << r.counts.n_m << "," << r.counts.n_p << "," << r.counts.n_i << ")";
    os << " BL=" << (r.classification.bl ? "y" : "n")
       << " MV=" << (r.classification.mv ? "y" : "n")
       << " chain=" << (r.classification.chain ? "y" : "n")
       << " comet=" << (r.comet ? "y" : "n");
    if (!r.matched_ref.empty()) os << " matches=" << r.matched_ref;
    os << "\n";
  }
  os << "summary: " << rep.rows.size() << " rings, " << rep.bl_count
     << " BL, " << rep.mv_count << " MV, " << rep.non_mv_bl_count
     << " BL-not-MV; matched refs:";
  for (const auto& m : rep.matched_refs) os << " " << m;
  os << "\n";
  emit(out, os.str(), out_path);
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  VerifyReport rep = verify_paper(opts);
  if (format == "json")
    emit(out, rep.to_json().dump(2) + "\n", out_path);
  else
    emit(out, rep.to_text(), out_path);
  return rep.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"workbench for finite commutative rings, their ideal "
               "lattices, and BL-algebra structure"};
  app.require_subcommand(1);

  std::string format = "text", out_path, labels, spec_arg, algebra_path,
              spec_out;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  int rc = kExitOk;

  auto* ring = app.add_subcommand("ring", "build a ring and print its tables");
  ring->add_option("spec", spec_arg,
                   "ring spec, e.g. zn:6, polyquot:2:x^2, prod:(zn:2,zn:2), "
                   "quot:(zn:8,ideal:[0,4]), or @file.json")
      ->required();
  ring->add_option("--spec-out", spec_out, "write the ring spec as JSON");
  add_common(ring);
  ring->callback(
      [&] { rc = cmd_ring(spec_arg, format, out_path, spec_out, out); });

  auto* ideals = app.add_subcommand("ideals", "enumerate the ideal lattice");
  ideals->add_option("spec", spec_arg, "ring spec")->required();
  add_common(ideals);
  ideals->callback([&] { rc = cmd_ideals(spec_arg, format, out_path, out); });

  auto* classify =
      app.add_subcommand("classify", "classify Id(R) or an algebra file");
  classify->add_option("--ring", spec_arg, "ring spec");
  classify->add_option("--algebra", algebra_path, "algebra table file (JSON)");
  classify->add_option("--labels", labels,
                       "display labels (string of chars or comma-separated)");
  add_common(classify);
  classify->callback([&] {
    if (spec_arg.empty() == algebra_path.empty())
      throw ParseError("classify: need exactly one of --ring / --algebra");
    rc = cmd_classify(spec_arg, algebra_path, labels, format, out_path, out);
  });

  auto* tables =
      app.add_subcommand("tables", "render the arrow and product tables");
  tables->add_option("--ring", spec_arg, "ring spec");
  tables->add_option("--algebra", algebra_path, "algebra table file (JSON)");
  tables->add_option("--labels", labels, "display labels");
  add_common(tables);
  tables->callback([&] {
    if (spec_arg.empty() == algebra_path.empty())
      throw ParseError("tables: need exactly one of --ring / --algebra");
    rc = cmd_tables(spec_arg, algebra_path, labels, format, out_path, out);
  });

  std::size_t census_order = 4, census_cap = kDefaultCensusCap;
  bool chains_only = false;
  auto* census = app.add_subcommand(
      "census", "enumerate BL-algebras of an order up to isomorphism");
  census->add_option("--order", census_order, "carrier size (2..7)")
      ->required();
  census->add_flag("--chains-only", chains_only, "only chain lattices");
  census->add_option("--cap", census_cap,
                     "largest order the census may run at");
  add_common(census);
  census->callback([&] {
    rc = cmd_census(census_order, chains_only, census_cap, format, out_path,
                    out);
  });

  auto* ledger = app.add_subcommand(
      "ledger", "the twelve four-chain product assignments");
  add_common(ledger);
  ledger->callback([&] { rc = cmd_ledger(format, out_path, out); });

  AtlasConfig atlas_cfg;
  std::vector<std::string> atlas_specs;
  auto* atlas = app.add_subcommand(
      "atlas", "classify Id(R) across ring families and match reference "
               "tables");
  atlas->add_option("--zn-max", atlas_cfg.zn_max, "include Z_n for n up to");
  atlas->add_option("--polyquot-max", atlas_cfg.polyquot_max,
                    "include monic quotients up to this order");
  atlas->add_option("--product-max", atlas_cfg.product_max,
                    "include Z_a x Z_b with factors up to");
  atlas->add_option("--spec", atlas_specs, "extra ring specs");
  add_common(atlas);
  atlas->callback([&] {
    atlas_cfg.specs = atlas_specs;
    rc = cmd_atlas(atlas_cfg, format, out_path, out);
  });

  VerifyOptions verify_opts;
  bool no_sweep = false;
  auto* verify = app.add_subcommand(
      "verify-paper", "check every tabulated source claim and report "
                      "match/mismatch/paper-discrepancy rows");
  verify->add_option("--census-cap", verify_opts.census_max_order,
                     "largest census order to verify");
  verify->add_option("--zn-max", verify_opts.sweep.zn_max,
                     "property sweep: Z_n bound");
  verify->add_option("--polyquot-max", verify_opts.sweep.polyquot_max_order,
                     "property sweep: quotient order bound");
  verify->add_option("--product-max", verify_opts.sweep.product_max,
                     "property sweep: product factor bound");
  verify->add_flag("--no-sweep", no_sweep, "skip the ring-family sweep");
  add_common(verify);
  verify->callback([&] {
    verify_opts.run_sweep = !no_sweep;
    rc = cmd_verify(verify_opts, format, out_path, out);
  });

  std::vector<const char*> argv;
  argv.push_back("blring");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const OrderCapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const DegenerateRingError& e) {
    err << "error: degenerate ring: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonMonicError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotAnIdealError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotCoprimeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RingMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotALatticeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotAMonoidError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotResiduatedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotBLError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotIdempotentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return rc;
}

}  // namespace blring::cli
