#include "mvstone/runner.hpp"

#include <sstream>

namespace mvstone {

namespace {

std::string table_str(const FuzzySubset& f) {
  std::string out;
  for (size_t i = 0; i < f.universe()->size(); ++i) {
    if (i) out += ",";
    out += f.universe()->point(i) + ":" + f.value_at(i).str();
  }
  return out;
}

std::string mask_str(uint32_t mask, int atoms) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < atoms; ++i)
    if ((mask >> i) & 1) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(i + 1);
    }
  return out + "}";
}

std::string point_mask_str(uint32_t mask, const UniversePtr& uni) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < uni->size(); ++i)
    if ((mask >> i) & 1) {
      if (!first) out += ",";
      first = false;
      out += uni->point(i);
    }
  return out + "}";
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

class Runner {
 public:
  Runner(const SpecDocument& doc, const RunOptions& opts) : doc_(doc), opts_(opts) {}

  Report run() {
    Report rep;
    rep.options = opts_;
    for (const CheckStmt& c : doc_.checks) {
      CheckResult r;
      r.command = c.command;
      for (size_t i = 0; i < c.args.size(); ++i) {
        if (i) r.args += " ";
        r.args += c.args[i];
      }
      try {
        dispatch(c, r);
      } catch (const ResourceLimitError&) {
        throw;
      } catch (const MvError& e) {
        r.pass = false;
        r.details.emplace_back("error", e.what());
      }
      rep.results.push_back(std::move(r));
    }
    return rep;
  }

 private:
  const MvAlgebra& algebra(const std::string& n) { return *doc_.algebras.at(n); }
  const MvTopology& topo(const std::string& n) { return *doc_.topologies.at(n); }

  void dispatch(const CheckStmt& c, CheckResult& r) {
    const std::string& k = c.command;
    if (k == "topology") run_topology(c, r);
    else if (k == "hausdorff") run_hausdorff(c, r);
    else if (k == "compactness") run_compactness(c, r);
    else if (k == "skeleton") run_skeleton(c, r);
    else if (k == "clopen") run_clopen(c, r);
    else if (k == "maximal-ideals") run_maximal_ideals(c, r);
    else if (k == "dualize-algebra") run_dualize_algebra(c, r);
    else if (k == "dualize-space") run_dualize_space(c, r);
    else if (k == "roundtrip-algebra") run_roundtrip_algebra(c, r);
    else if (k == "roundtrip-space") run_roundtrip_space(c, r);
    else if (k == "square") run_square(c, r);
    else if (k == "cuts") run_cuts(c, r);
    else if (k == "lcc") run_lcc(c, r);
    else if (k == "factorize") run_factorize(c, r);
    else if (k == "continuous") run_continuous(c, r);
    else if (k == "boolen-convert") run_boolen_convert(c, r);
    else if (k == "boolen-roundtrip") run_boolen_roundtrip(c, r);
    else if (k == "stone-n-dualize") run_stone_n_dualize(c, r);
    else if (k == "multiset") run_multiset(c, r);
    else if (k == "sn") run_sn(c, r);
    else throw InvalidArgumentError("unknown command " + k);
  }

  void run_topology(const CheckStmt& c, CheckResult& r) {
    TopologyVerdict v = check_mv_topology(topo(c.args[0]));
    r.pass = v.pass;
    if (!v.pass) {
      r.details.emplace_back("clause", v.clause);
      for (size_t i = 0; i < v.offenders.size(); ++i)
        r.details.emplace_back("offender." + std::to_string(i + 1),
                               table_str(v.offenders[i]));
    }
  }

  void run_hausdorff(const CheckStmt& c, CheckResult& r) {
    const MvTopology& t = topo(c.args[0]);
    HausdorffVerdict v = check_hausdorff(t);
    r.pass = v.separated;
    r.details.emplace_back("odot_variant", v.separated_odot ? "yes" : "no");
    r.details.emplace_back("variants_agree", v.variants_agree ? "yes" : "no");
    for (const auto& p : v.pairs) {
      std::string key = "pair." + t.universe()->point(p.x) + "." +
                        t.universe()->point(p.y);
      if (p.separated)
        r.details.emplace_back(key, "separated by " + table_str(t.opens()[p.ox]) +
                                        " and " + table_str(t.opens()[p.oy]));
      else
        r.details.emplace_back(key, "unseparated");
    }
  }

  void run_compactness(const CheckStmt& c, CheckResult& r) {
    CompactnessVerdict v = check_compactness(topo(c.args[0]));
    r.pass = v.compact && v.strongly_compact;
    r.details.emplace_back("compact", v.compact ? "yes" : "no");
    r.details.emplace_back("strongly_compact", v.strongly_compact ? "yes" : "no");
    r.details.emplace_back("minimal_coverings", std::to_string(v.minimal_coverings));
    r.details.emplace_back("semantics", "finite-scale");
  }

  void run_skeleton(const CheckStmt& c, CheckResult& r) {
    MvTopology sk = skeleton(topo(c.args[0]));
    r.pass = true;
    r.details.emplace_back("crisp_opens", std::to_string(sk.size()));
    for (size_t i = 0; i < sk.size(); ++i)
      r.details.emplace_back("open." + std::to_string(i + 1),
                             table_str(sk.opens()[i]));
  }

  void run_clopen(const CheckStmt& c, CheckResult& r) {
    MvAlgebra a = clopen_algebra(topo(c.args[0]));
    r.pass = true;
    r.details.emplace_back("size", std::to_string(a.size()));
    size_t limit = std::min<size_t>(a.size(), 64);
    for (size_t i = 0; i < limit; ++i)
      r.details.emplace_back("elem." + std::to_string(i),
                             a.signature().str(a.elem(i)));
    if (limit < a.size()) r.details.emplace_back("truncated", "yes");
  }

  void run_maximal_ideals(const CheckStmt& c, CheckResult& r) {
    const MvAlgebra& a = algebra(c.args[0]);
    std::vector<MaximalIdeal> maxs = maximal_ideals(a, opts_.bound);
    r.pass = true;
    r.details.emplace_back("count", std::to_string(maxs.size()));
    for (size_t m = 0; m < maxs.size(); ++m) {
      std::string members;
      for (int i : maxs[m].ideal.member_indices()) {
        if (!members.empty()) members += ",";
        members += a.signature().str(a.elem(i));
      }
      r.details.emplace_back("M" + std::to_string(m), members);
    }
  }

  void run_dualize_algebra(const CheckStmt& c, CheckResult& r) {
    DualSpace d = max_space(algebra(c.args[0]), opts_.bound);
    r.pass = true;
    r.details.emplace_back("points", std::to_string(d.embedding.dual_points->size()));
    r.details.emplace_back("value_chain",
                           "L" + std::to_string(d.embedding.hat_chain.order));
    r.details.emplace_back("opens", std::to_string(d.space.size()));
    r.details.emplace_back("quotient_orders", join_ints(d.embedding.quotient_orders));
    r.details.emplace_back("stone", "yes");
  }

  void run_dualize_space(const CheckStmt& c, CheckResult& r) {
    MvAlgebra clop = clopen_algebra(topo(c.args[0]));
    DualSpace d = max_space(clop, opts_.bound);
    r.pass = true;
    r.details.emplace_back("clopens", std::to_string(clop.size()));
    r.details.emplace_back("points", std::to_string(d.embedding.dual_points->size()));
    r.details.emplace_back("quotient_orders", join_ints(d.embedding.quotient_orders));
  }

  void run_roundtrip_algebra(const CheckStmt& c, CheckResult& r) {
    const MvAlgebra& a = algebra(c.args[0]);
    AlgebraRoundtrip rt = unit_iso_algebra(a, opts_.bound);
    r.pass = true;
    r.details.emplace_back("size", std::to_string(a.size()));
    std::string iso;
    for (size_t i = 0; i < rt.iso.size(); ++i) {
      if (i) iso += ",";
      iso += std::to_string(i) + ":" + std::to_string(rt.iso[i]);
    }
    r.details.emplace_back("iso", iso);
  }

  void run_roundtrip_space(const CheckStmt& c, CheckResult& r) {
    const MvTopology& t = topo(c.args[0]);
    SpaceRoundtrip rt = unit_iso_space(t, opts_.bound);
    r.pass = true;
    std::string pts;
    for (size_t x = 0; x < t.universe()->size(); ++x) {
      if (x) pts += ",";
      pts += t.universe()->point(x) + ":" +
             rt.dual.embedding.dual_points->point(rt.to_dual.apply(x));
    }
    r.details.emplace_back("points", pts);
    r.details.emplace_back("clopens", std::to_string(rt.clop.size()));
  }

  void run_square(const CheckStmt& c, CheckResult& r) {
    SquareReport rep = check_square(algebra(c.args[0]), opts_.bound);
    r.pass = rep.pass;
    r.details.emplace_back("center_equals_skeleton_clop",
                           rep.center_equals_skeleton_clop ? "yes" : "no");
    r.details.emplace_back("skeleton_equals_center_dual",
                           rep.skeleton_equals_center_dual ? "yes" : "no");
  }

  void run_cuts(const CheckStmt& c, CheckResult& r) {
    const MvAlgebra& a = algebra(c.args[0]);
    MaxEmbedding emb = embed_max(a, opts_.bound);
    std::vector<Cut> cuts = enumerate_cuts(a);
    size_t limit_count = 0;
    std::vector<std::string> listed;
    for (const Cut& cut : cuts) {
      LimitCutReport lr = limit_cut_check(a, emb, cut);
      if (!lr.limit) continue;
      ++limit_count;
      if (listed.size() < 16) {
        std::string members;
        for (int i : cut.members.to_indices()) {
          if (!members.empty()) members += ",";
          members += a.signature().str(a.elem(i));
        }
        listed.push_back(members + " sup=" + a.signature().str(a.elem(lr.sup)));
      }
    }
    r.pass = true;
    r.details.emplace_back("cuts", std::to_string(cuts.size()));
    r.details.emplace_back("limit_cuts", std::to_string(limit_count));
    for (size_t i = 0; i < listed.size(); ++i)
      r.details.emplace_back("limit_cut." + std::to_string(i + 1), listed[i]);
  }

  void run_lcc(const CheckStmt& c, CheckResult& r) {
    LccReport rep = check_lcc(algebra(c.args[0]), kCutExhaustiveLimit, opts_.bound);
    r.pass = rep.lcc;
    r.details.emplace_back("cuts", std::to_string(rep.cuts));
    r.details.emplace_back("limit_cuts", std::to_string(rep.limit_cuts));
    SfcReport sfc = check_sfc(algebra(c.args[0]), opts_.bound);
    r.details.emplace_back("sfc", sfc.sfc ? "yes" : "no");
    // Finite algebras land in both classes, so their agreement here carries
    // no information about the general containment question.
    r.details.emplace_back("sfc_agreement", "vacuous at finite scale");
  }

  void run_factorize(const CheckStmt& c, CheckResult& r) {
    std::vector<int> f = chain_factorization(algebra(c.args[0]), opts_.bound);
    r.pass = true;
    r.details.emplace_back("chain_orders", join_ints(f));
  }

  void run_continuous(const CheckStmt& c, CheckResult& r) {
    const PointMap& f = doc_.maps.at(c.args[0]);
    const MvTopology& src = topo(c.args[1]);
    const MvTopology& tgt = topo(c.args[2]);
    ContinuityVerdict v = check_continuous(f, src, tgt);
    // Equivalent closed-family route must agree.
    bool closed_route = true;
    std::vector<FuzzySubset> src_closed = closed_sets(src);
    for (const FuzzySubset& cl : closed_sets(tgt)) {
      FuzzySubset pre = preimage_map(f, cl);
      bool found = false;
      for (const auto& sc : src_closed)
        if (equal_as_rationals(sc, pre)) {
          found = true;
          break;
        }
      if (!found) {
        closed_route = false;
        break;
      }
    }
    if (closed_route != v.continuous)
      throw InternalConsistencyError("open and closed continuity routes disagree");
    r.pass = v.continuous;
    r.details.emplace_back("closed_route_agrees", "yes");
    if (v.offender) r.details.emplace_back("offender", table_str(*v.offender));
  }

  void run_boolen_convert(const CheckStmt& c, CheckResult& r) {
    const BooleN& bn = doc_.boolens.at(c.args[0]);
    BRn rel = relation_from_ideals(bn);
    std::vector<std::vector<uint32_t>> sets = ideal_sets_from_relation(rel);
    bool echo = true;
    for (int i = 1; i <= bn.n - 1; ++i)
      if (sets[static_cast<size_t>(i - 1)] != bn.algebra.down_set(bn.gens[i - 1]))
        echo = false;
    r.pass = echo;
    r.details.emplace_back("tuples", std::to_string(rel.tuples.size()));
    for (int i = 1; i <= bn.n - 1; ++i) {
      std::string members;
      for (uint32_t m : sets[static_cast<size_t>(i - 1)]) {
        if (!members.empty()) members += ",";
        members += mask_str(m, bn.algebra.atoms);
      }
      r.details.emplace_back("J" + std::to_string(i), members);
    }
    r.details.emplace_back("echo", echo ? "exact" : "mismatch");
  }

  void run_boolen_roundtrip(const CheckStmt& c, CheckResult& r) {
    const BooleN& bn = doc_.boolens.at(c.args[0]);
    RoundtripVerdict a = roundtrip_ideals(bn);
    RoundtripVerdict b = roundtrip_relation(relation_from_ideals(bn));
    r.pass = a.pass && b.pass;
    r.details.emplace_back("ideal_roundtrip", a.pass ? "pass" : a.detail);
    r.details.emplace_back("relation_roundtrip", b.pass ? "pass" : b.detail);
  }

  void run_stone_n_dualize(const CheckStmt& c, CheckResult& r) {
    const BooleN& bn = doc_.boolens.at(c.args[0]);
    StoneN sn = max_n(bn);
    BooleN back = clop_n(sn);
    RoundtripVerdict rv = roundtrip_boole_n(bn);
    r.pass = rv.pass;
    for (int i = 1; i <= bn.n - 1; ++i)
      r.details.emplace_back("o" + std::to_string(i),
                             point_mask_str(sn.opens[static_cast<size_t>(i - 1)],
                                            sn.points));
    for (int i = 1; i <= back.n - 1; ++i)
      r.details.emplace_back("back.J" + std::to_string(i),
                             mask_str(back.gens[static_cast<size_t>(i - 1)],
                                      back.algebra.atoms));
    if (!rv.pass) r.details.emplace_back("detail", rv.detail);
  }

  void run_multiset(const CheckStmt& c, CheckResult& r) {
    FiniteMultiset m = multiset_of(algebra(c.args[0]), opts_.bound);
    r.pass = true;
    r.details.emplace_back("multiset", m.str());
  }

  void run_sn(const CheckStmt& c, CheckResult& r) {
    const std::string& op = c.args[0];
    Supernatural a = parse_supernatural(c.args[1]);
    r.pass = true;
    if (op == "join") {
      r.details.emplace_back("value", sn_join(a, parse_supernatural(c.args[2])).str());
    } else if (op == "meet") {
      r.details.emplace_back("value", sn_meet(a, parse_supernatural(c.args[2])).str());
    } else if (op == "leq") {
      r.details.emplace_back("value",
                             sn_leq(a, parse_supernatural(c.args[2])) ? "true" : "false");
    } else if (op == "member") {
      long long n = std::stoll(c.args[2]);
      r.details.emplace_back("value", in_basic_open(a, n) ? "true" : "false");
    } else {
      throw InvalidArgumentError("unknown sn operation " + op);
    }
  }

  const SpecDocument& doc_;
  RunOptions opts_;
};

}  // namespace

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& r : results)
    if (!r.pass) ++n;
  return n;
}

std::string Report::to_kv() const {
  std::ostringstream out;
  out << "mvstone.version=" << kToolVersion << "\n";
  out << "run.seed=" << options.seed << "\n";
  out << "run.bound=" << options.bound << "\n";
  for (size_t i = 0; i < results.size(); ++i) {
    const CheckResult& r = results[i];
    std::string prefix = "check." + std::to_string(i + 1) + ".";
    out << prefix << "command=" << r.command << "\n";
    out << prefix << "args=" << r.args << "\n";
    out << prefix << "verdict=" << (r.pass ? "pass" : "fail") << "\n";
    for (const auto& [k, v] : r.details) out << prefix << k << "=" << v << "\n";
  }
  out << "summary.checks=" << results.size() << "\n";
  out << "summary.failures=" << failures() << "\n";
  return out.str();
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.command;
    if (!r.args.empty()) out << " " << r.args;
    out << "\n";
    for (const auto& [k, v] : r.details) out << "       " << k << ": " << v << "\n";
  }
  out << "summary: " << results.size() << " check(s), " << failures()
      << " failure(s)\n";
  return out.str();
}

Report run_document(const SpecDocument& doc, const RunOptions& opts) {
  return Runner(doc, opts).run();
}

}  // namespace mvstone
