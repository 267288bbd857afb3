// permgraph: exact independent-set / matching sequence toolkit.
//
// Families: count, construct {gm|hk|hw|gpi}, verify, perms {assoc|weak|chain},
// matching {unimodal|ud-encode|ud-decode|admissible|bounds|check32}, poly esp,
// search {lemma31|theorem32|part2|classify}. All results are JSON on stdout
// (or --out); big integers are decimal strings. Exit codes: 0 ok, 1 bad
// input, 2 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "permgraph/construct.hpp"
#include "permgraph/count.hpp"
#include "permgraph/io.hpp"
#include "permgraph/search.hpp"

using namespace permgraph;

namespace {

constexpr std::uint64_t kReleaseOracleCap = std::uint64_t{1} << 28;
constexpr std::size_t kAssocEmitCap = 1000000;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Cli {
  std::string out_path;
  std::function<Json()> run;  // set by the selected subcommand
  int exit_code = 0;          // bumped to 2 on verification failures
};

void emit(const Cli& cli, const Json& result) {
  std::string text = result.dump(2);
  if (cli.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(cli.out_path);
    if (!out) throw DomainError("cannot write " + cli.out_path);
    out << text << "\n";
  }
}

void add_out_flag(CLI::App* cmd, Cli& cli) {
  cmd->add_option("--out", cli.out_path, "write the JSON result to this file instead of stdout");
}

Json construct_output(const JoinExpr& e, Json extra) {
  Json out = expr_json(e);
  Json summary = summary_json(e, true);
  for (auto& [k, v] : summary.items()) out[k] = v;
  for (auto& [k, v] : extra.items()) out[k] = v;
  return out;
}

Json report_output(Cli& cli, const CampaignReport& r) {
  if (!r.counterexamples.empty()) cli.exit_code = 2;
  return report_json(r);
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"exact independent-set and matching sequence toolkit"};
  app.require_subcommand(1);

  // ---- count ----------------------------------------------------------
  std::string graph_path;
  bool with_oracle = false;
  {
    CLI::App* count = app.add_subcommand("count", "sequences of an explicit graph");
    count->add_option("--graph", graph_path, "graph file")->required();
    count->add_flag("--oracle", with_oracle, "re-count by subset enumeration and compare");
    add_out_flag(count, cli);
    count->callback([&] {
      cli.run = [&]() -> Json {
        Graph g = parse_graph(read_file(graph_path));
        CountSequence ind = independent_set_sequence(g);
        CountSequence mat = matching_sequence(g);
        if (with_oracle) {
          CountOptions opt;
          opt.oracle_cap = kReleaseOracleCap;
          if (oracle_independent_sequence(g, opt).values != ind.values ||
              oracle_matching_sequence(g, opt).values != mat.values)
            throw VerifyError("recursive counters disagree with the subset oracle");
        }
        return Json{{"n", g.n()},
                    {"edges", g.edge_count()},
                    {"independent", sequence_json(ind)},
                    {"matching", sequence_json(mat)},
                    {"alpha", ind.length()},
                    {"nu", mat.length()},
                    {"oracle_checked", with_oracle}};
      };
    });
  }

  // ---- construct ------------------------------------------------------
  int m = 0, k = 0;
  std::string order_text, perm_text, t0_text = "2";
  {
    CLI::App* construct = app.add_subcommand("construct", "symbolic realizing graphs");
    construct->require_subcommand(1);

    CLI::App* gm = construct->add_subcommand("gm", "flat-profile graph on m^m vertices");
    gm->add_option("--m", m, "independence number")->required();
    add_out_flag(gm, cli);
    gm->callback([&] {
      cli.run = [&] { return construct_output(build_gm(m), Json{{"m", m}}); };
    });

    CLI::App* hk = construct->add_subcommand("hk", "single-size bump profile");
    hk->add_option("--m", m, "independence number")->required();
    hk->add_option("--k", k, "bumped size")->required();
    add_out_flag(hk, cli);
    hk->callback([&] {
      cli.run = [&] { return construct_output(build_hk(m, k), Json{{"m", m}, {"k", k}}); };
    });

    CLI::App* hw = construct->add_subcommand("hw", "realize a weak order");
    hw->add_option("--m", m, "independence number")->required();
    hw->add_option("--order", order_text, "blocks, e.g. \"2|1,3\"")->required();
    add_out_flag(hw, cli);
    hw->callback([&] {
      cli.run = [&]() -> Json {
        WeakOrder w = parse_weak_order(order_text);
        JoinExpr e = build_hw(m, w);
        return construct_output(e, Json{{"m", m}, {"order", weak_order_json(w)}});
      };
    });

    CLI::App* gpi = construct->add_subcommand("gpi", "realize a permutation strictly");
    gpi->add_option("--perm", perm_text, "one-line permutation, e.g. \"3,1,2\"")->required();
    gpi->add_option("--t0", t0_text, "starting scale (doubled until the chain holds)");
    add_out_flag(gpi, cli);
    gpi->callback([&] {
      cli.run = [&]() -> Json {
        Permutation pi = parse_permutation(perm_text);
        GpiResult r = build_gpi(pi, big_from_str(t0_text));
        return construct_output(
            r.expr, Json{{"perm", permutation_json(pi)}, {"t_used", r.t_used.get_str()}});
      };
    });
  }

  // ---- verify ---------------------------------------------------------
  std::string expr_path, expect_seq;
  int max_vertices = 24;
  {
    CLI::App* verify = app.add_subcommand("verify", "re-check a join expression JSON");
    verify->add_option("--expr", expr_path, "JSON file (construct output or bare {\"atoms\":...})")
        ->required();
    verify->add_option("--max-vertices", max_vertices,
                       "materialize and re-count when the graph fits (default 24)");
    verify->add_option("--expect-seq", expect_seq, "fail unless the sequence equals this CSV");
    add_out_flag(verify, cli);
    verify->callback([&] {
      cli.run = [&]() -> Json {
        Json doc = Json::parse(read_file(expr_path), nullptr, false);
        if (doc.is_discarded()) throw DomainError("not valid JSON: " + expr_path);
        JoinExpr e = expr_from_json(doc);
        CountSequence seq = expr_sequence(e);
        ExprStats st = expr_stats(e);
        bool ok = true;
        std::string checked = "symbolic";
        if (st.vertex_count <= max_vertices) {
          Graph g = materialize(e, max_vertices);
          ok = independent_set_sequence(g).values == seq.values &&
               clique_sequence(complement(g)).values == seq.values;
          checked = "materialized";
        }
        if (!expect_seq.empty() &&
            parse_sequence(SeqKind::independent, expect_seq).values != seq.values)
          ok = false;
        if (!ok) cli.exit_code = 2;
        Json out = expr_json(e);
        Json summary = summary_json(e, ok);
        for (auto& [key, v] : summary.items()) out[key] = v;
        out["checked"] = checked;
        return out;
      };
    });
  }

  // ---- perms ----------------------------------------------------------
  std::string seq_text;
  bool strict = false;
  std::size_t limit = kAssocEmitCap;
  {
    CLI::App* perms = app.add_subcommand("perms", "permutations and weak orders of sequences");
    perms->require_subcommand(1);

    CLI::App* assoc = perms->add_subcommand("assoc", "all associated permutations");
    assoc->add_option("--seq", seq_text, "sequence CSV, e.g. \"5,10,10,5,1\"")->required();
    assoc->add_option("--limit", limit, "emission cap (default 10^6)");
    add_out_flag(assoc, cli);
    assoc->callback([&] {
      cli.run = [&]() -> Json {
        CountSequence s = parse_sequence(SeqKind::independent, seq_text);
        Big count = associated_count(s);
        std::vector<Permutation> ps = enumerate_associated(s, limit);
        Json arr = Json::array();
        for (const Permutation& p : ps) arr.push_back(permutation_json(p));
        return Json{{"weak_order", weak_order_json(induced_weak_order(s))},
                    {"count", count.get_str()},
                    {"permutations", arr},
                    {"truncated", Big(static_cast<long>(ps.size())) != count}};
      };
    });

    CLI::App* weak = perms->add_subcommand("weak", "induced weak order");
    weak->add_option("--seq", seq_text, "sequence CSV")->required();
    add_out_flag(weak, cli);
    weak->callback([&] {
      cli.run = [&]() -> Json {
        CountSequence s = parse_sequence(SeqKind::independent, seq_text);
        return Json{{"blocks", weak_order_json(induced_weak_order(s))}};
      };
    });

    CLI::App* chain = perms->add_subcommand("chain", "does the permutation sort the sequence?");
    chain->add_option("--seq", seq_text, "sequence CSV")->required();
    chain->add_option("--perm", perm_text, "one-line permutation")->required();
    chain->add_flag("--strict", strict, "require strict inequalities");
    add_out_flag(chain, cli);
    chain->callback([&] {
      cli.run = [&]() -> Json {
        CountSequence s = parse_sequence(SeqKind::independent, seq_text);
        Permutation pi = parse_permutation(perm_text);
        return Json{{"holds", check_chain(s, pi, strict)}, {"strict", strict}};
      };
    });
  }

  // ---- matching -------------------------------------------------------
  std::string ud_text;
  long long len = 0;
  int n_value = 0;
  {
    CLI::App* matching = app.add_subcommand("matching", "matching permutation machinery");
    matching->require_subcommand(1);

    CLI::App* unimodal = matching->add_subcommand("unimodal", "test one or enumerate all");
    unimodal->add_option("--perm", perm_text, "permutation to test");
    unimodal->add_option("--n", n_value, "enumerate all unimodal permutations of [n]");
    unimodal->add_option("--limit", limit, "emission cap for --n");
    add_out_flag(unimodal, cli);
    unimodal->callback([&] {
      cli.run = [&]() -> Json {
        if (!perm_text.empty()) {
          UnimodalCheck r = is_unimodal_perm(parse_permutation(perm_text));
          return Json{{"unimodal", r.ok}, {"mode", r.mode}};
        }
        if (n_value < 1) throw DomainError("matching unimodal needs --perm or --n");
        UnimodalPermutationStream stream(n_value);
        Json arr = Json::array();
        std::uint64_t count = 0;
        while (auto p = stream.next()) {
          if (arr.size() < limit) arr.push_back(permutation_json(*p));
          ++count;
        }
        return Json{{"n", n_value},
                    {"count", count},
                    {"permutations", arr},
                    {"truncated", arr.size() < count}};
      };
    });

    CLI::App* encode = matching->add_subcommand("ud-encode", "unimodal permutation to U-D string");
    encode->add_option("--perm", perm_text, "unimodal permutation")->required();
    add_out_flag(encode, cli);
    encode->callback([&] {
      cli.run = [&]() -> Json { return Json{{"ud", ud_encode(parse_permutation(perm_text))}}; };
    });

    CLI::App* decode = matching->add_subcommand("ud-decode", "U-D string to permutation");
    decode->add_option("--s", ud_text, "string over U/D")->required();
    add_out_flag(decode, cli);
    decode->callback([&] {
      cli.run = [&]() -> Json {
        Permutation p = ud_decode(ud_text);
        return Json{{"n", p.size()},
                    {"mode", is_unimodal_perm(p).mode},
                    {"permutation", permutation_json(p)}};
      };
    });

    CLI::App* admissible =
        matching->add_subcommand("admissible", "strings with no prefix 3 D's ahead");
    admissible->add_option("--len", len, "string length")->required();
    add_out_flag(admissible, cli);
    admissible->callback([&] {
      cli.run = [&]() -> Json {
        return Json{{"length", len}, {"count", admissible_count(len).get_str()}};
      };
    });

    CLI::App* bounds = matching->add_subcommand("bounds", "upper bounds on realizable counts");
    bounds->add_option("--n", n_value, "largest matching size")->required();
    add_out_flag(bounds, cli);
    bounds->callback([&] {
      cli.run = [&]() -> Json {
        MnBounds b = mn_upper_bounds(n_value);
        return Json{
            {"n", n_value},
            {"mode_sum", b.mode_sum.get_str()},
            {"admissible", b.admissible.get_str()},
            {"dyck", b.dyck.get_str()},
            {"all_unimodal", big_pow(2, static_cast<unsigned long>(n_value - 1)).get_str()}};
      };
    });

    CLI::App* check32 = matching->add_subcommand("check32", "mode-interval consistency");
    check32->add_option("--seq", seq_text, "matching sequence CSV")->required();
    check32->add_option("--n", n_value, "known lower bound on nu")->required();
    add_out_flag(check32, cli);
    check32->callback([&] {
      cli.run = [&]() -> Json {
        CountSequence s = parse_sequence(SeqKind::matching, seq_text);
        auto violations = theorem32_check(s, n_value);
        Json arr = Json::array();
        for (auto [kk, ll] : violations) arr.push_back(Json::array({kk, ll}));
        return Json{{"n", n_value}, {"violations", arr}, {"consistent", violations.empty()}};
      };
    });
  }

  // ---- poly -----------------------------------------------------------
  std::string roots_text;
  {
    CLI::App* poly = app.add_subcommand("poly", "real-rooted coefficient sequences");
    poly->require_subcommand(1);
    CLI::App* esp = poly->add_subcommand("esp", "coefficients of prod (1 + r_i x)");
    esp->add_option("--roots", roots_text, "nonnegative rationals, e.g. \"1/5,1/5\"")->required();
    add_out_flag(esp, cli);
    esp->callback([&] {
      cli.run = [&]() -> Json {
        std::vector<Rat> roots;
        std::istringstream in(roots_text);
        std::string item;
        while (std::getline(in, item, ',')) roots.push_back(rat_from_str(item));
        std::vector<Rat> coeffs = esp_coefficients(roots);
        Json arr = Json::array();
        for (const Rat& c : coeffs) arr.push_back(rat_str(c));
        return Json{{"coefficients", arr}, {"strongly_unimodal", strongly_unimodal(coeffs)}};
      };
    });
  }

  // ---- search ---------------------------------------------------------
  int vmax = 0;
  std::string census_path, dedup_text = "canonical";
  {
    CLI::App* search = app.add_subcommand("search", "exhaustive small-graph campaigns");
    search->require_subcommand(1);

    CLI::App* lemma31 = search->add_subcommand("lemma31", "m_2 > m_1 whenever nu >= 4");
    auto* l31_opt = lemma31->add_option("--max-vertices", vmax, "scan cap (default 8)");
    add_out_flag(lemma31, cli);
    lemma31->callback([&cli, &vmax, l31_opt] {
      int v = l31_opt->count() ? vmax : 8;
      cli.run = [&cli, v] { return report_output(cli, campaign_lemma31(v)); };
    });

    CLI::App* theorem32 = search->add_subcommand("theorem32", "mode-interval + strong unimodality");
    auto* t32_opt = theorem32->add_option("--max-vertices", vmax, "scan cap (default 7)");
    add_out_flag(theorem32, cli);
    theorem32->callback([&cli, &vmax, t32_opt] {
      int v = t32_opt->count() ? vmax : 7;
      cli.run = [&cli, v] { return report_output(cli, campaign_theorem32(v)); };
    });

    CLI::App* part2 = search->add_subcommand("part2", "i_m < i_{m-1} below the m^m ceiling");
    part2->add_option("--m", m, "independence number")->required();
    auto* p2_opt = part2->add_option("--max-vertices", vmax, "scan cap (default 7)");
    add_out_flag(part2, cli);
    part2->callback([&cli, &vmax, &m, p2_opt] {
      int v = p2_opt->count() ? vmax : 7;
      int mm = m;
      cli.run = [&cli, mm, v] { return report_output(cli, campaign_part2(mm, v)); };
    });

    CLI::App* classify = search->add_subcommand("classify", "census of matching sequences");
    auto* cl_opt = classify->add_option("--max-vertices", vmax, "scan cap (default 7)");
    classify->add_option("--census", census_path, "JSONL output path")->required();
    classify->add_option("--dedup", dedup_text, "canonical (default) or none")
        ->check(CLI::IsMember({"canonical", "none"}));
    add_out_flag(classify, cli);
    classify->callback([&cli, &vmax, &census_path, &dedup_text, cl_opt] {
      int v = cl_opt->count() ? vmax : 7;
      cli.run = [&cli, &census_path, &dedup_text, v] {
        Dedup d = dedup_text == "none" ? Dedup::none : Dedup::canonical;
        return report_output(cli, campaign_classify(v, census_path, 0, d));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help exits 0, every parse error is a domain error
  }

  try {
    emit(cli, cli.run());
    return cli.exit_code;
  } catch (const VerifyError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
