#include "permgraph/io.hpp"

namespace permgraph {

Json big_json(const Big& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json sequence_json(const CountSequence& s) {
  Json values = Json::array();
  for (const Big& v : s.values) values.push_back(v.get_str());
  return Json{{"kind", s.kind == SeqKind::independent ? "independent" : "matching"},
              {"length", s.length()},
              {"values", values}};
}

Json expr_json(const JoinExpr& e) {
  Json atoms = Json::array();
  for (const JoinTerm& t : e.terms) {
    Json parts = Json::array();
    for (auto [c, s] : t.atom.parts) parts.push_back(Json::array({c, s}));
    atoms.push_back(Json{{"parts", parts}, {"copies", t.copies.get_str()}});
  }
  return Json{{"atoms", atoms}};
}

JoinExpr expr_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array())
    throw DomainError("join expression JSON needs an \"atoms\" array");
  JoinExpr e;
  for (const Json& aj : j.at("atoms")) {
    if (!aj.contains("parts") || !aj.at("parts").is_array())
      throw DomainError("atom JSON needs a \"parts\" array");
    std::vector<std::pair<long long, long long>> parts;
    for (const Json& pj : aj.at("parts")) {
      if (!pj.is_array() || pj.size() != 2)
        throw DomainError("atom part must be a [count, size] pair");
      parts.emplace_back(pj.at(0).get<long long>(), pj.at(1).get<long long>());
    }
    Big copies = 1;
    if (aj.contains("copies")) {
      const Json& cj = aj.at("copies");
      copies = cj.is_string() ? big_from_str(cj.get<std::string>())
                              : Big(static_cast<long>(cj.get<long long>()));
    }
    if (copies < 1) throw DomainError("atom copy count must be >= 1");
    e.append(Atom(parts), copies);
  }
  return e;
}

Json permutation_json(const Permutation& p) {
  Json arr = Json::array();
  for (int i = 1; i <= p.size(); ++i) arr.push_back(p.at(i));
  return arr;
}

Json weak_order_json(const WeakOrder& w) {
  Json arr = Json::array();
  for (const auto& blk : w.blocks) arr.push_back(blk);
  return arr;
}

Json summary_json(const JoinExpr& e, bool verified) {
  ExprStats st = expr_stats(e);
  CountSequence seq = expr_sequence(e);
  Json values = Json::array();
  for (const Big& v : seq.values) values.push_back(v.get_str());
  return Json{{"vertices", big_json(st.vertex_count)},
              {"alpha", st.alpha},
              {"sequence", values},
              {"verified", verified}};
}

Json report_json(const CampaignReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json counterexamples = Json::array();
  for (const Counterexample& c : r.counterexamples)
    counterexamples.push_back(Json{{"graph", c.graph}, {"note", c.note}});
  Json out{{"campaign", r.campaign},
           {"params", params},
           {"examined", r.examined},
           {"eligible", r.eligible},
           {"counterexamples", counterexamples},
           {"meta", Json{{"wall_ms", r.wall_ms}, {"workers", r.workers}}}};
  if (r.sparsest_eligible) {
    out["sparsest_eligible"] = Json{{"graph", r.sparsest_eligible->graph},
                                    {"m1", r.sparsest_eligible->m1},
                                    {"m2", r.sparsest_eligible->m2}};
  }
  if (!r.census.empty()) {
    Json census = Json::object();
    for (const auto& [n, entries] : r.census) {
      std::size_t perm_union = 0;
      {
        std::vector<Permutation> all;
        for (const CensusEntry& e : entries)
          all.insert(all.end(), e.permutations.begin(), e.permutations.end());
        std::sort(all.begin(), all.end());
        perm_union = static_cast<std::size_t>(
            std::unique(all.begin(), all.end()) - all.begin());
      }
      census[std::to_string(n)] =
          Json{{"sequences", entries.size()}, {"permutations", perm_union}};
    }
    out["census_summary"] = census;
  }
  return out;
}

}  // namespace permgraph
