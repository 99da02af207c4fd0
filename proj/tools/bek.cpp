// Batch front door for the binomial-edge-ideal toolkit: graph ingestion,
// classification, Betti tables, switching, and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bek/bek.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bek::GraphFormat parse_format(const std::string& s) {
  if (s == "auto") return bek::GraphFormat::Auto;
  if (s == "edge-list") return bek::GraphFormat::EdgeList;
  if (s == "json") return bek::GraphFormat::Json;
  if (s == "graph6") return bek::GraphFormat::Graph6;
  throw CLI::ValidationError("--format", "unknown format " + s);
}

std::pair<int, int> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("edge", "expected u,v");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

void print_table(const bek::BettiTable& t) {
  std::cout << bek::render_betti_diagram(t);
  std::cout << bek::render_betti_json(t) << "\n";
}

int cmd_classify(const std::string& file, bek::GraphFormat fmt) {
  const bek::Graph g = bek::parse_graph(slurp(file), fmt);
  std::cout << "closed: " << (bek::is_closed(g) ? "true" : "false") << "\n";
  std::cout << "linear: " << (bek::has_linear_resolution(g) ? "true" : "false") << "\n";
  const bek::PureClass pc = bek::classify_pure(g);
  std::cout << "pure: " << bek::to_string(pc.verdict);
  if (!pc.hint.empty()) std::cout << " (hint: " << pc.hint << ")";
  std::cout << "\n";
  return 0;
}

int cmd_betti(const std::string& file, bek::GraphFormat fmt, const std::string& method) {
  const bek::Graph g = bek::parse_graph(slurp(file), fmt);
  if (method == "formula") {
    const auto t = bek::formula_table(g);
    if (!t) {
      std::cerr << "error: no closed-form available\n";
      return 1;
    }
    print_table(*t);
    return 0;
  }
  if (method == "oracle") {
    const auto labeling = bek::find_closed_labeling(g);
    if (!labeling) {
      std::cerr << "error: oracle method requires a closed graph\n";
      return 1;
    }
    const bek::Graph h = bek::in_graph(g, *labeling).to_graph();
    std::cout << "note: this is the Betti table of the initial edge ideal I(in_<(G));\n"
              << "      it equals the table of J_G only when S/J_G is Cohen-Macaulay\n"
              << "      (e.g. closed graphs such as paths and lollipops).\n";
    print_table(bek::hochster_betti(h));
    return 0;
  }
  std::cerr << "error: --method must be formula or oracle\n";
  return 1;
}

int cmd_strand(const std::string& file, bek::GraphFormat fmt) {
  const bek::Graph g = bek::parse_graph(slurp(file), fmt);
  const bek::StrandPrediction sp = bek::strand_prediction(g);
  std::cout << "status: "
            << (sp.status == bek::StrandPrediction::Status::TheoremBacked
                    ? "TheoremBacked"
                    : "Conjectural")
            << "\n";
  for (const auto& [i, v] : sp.values)
    std::cout << "beta_{" << i << "," << i + 2 << "}(J_G) = " << v << "\n";
  if (bek::is_closed(g)) {
    const auto report = bek::closed_strand_check(g);
    for (const auto& row : report.rows)
      std::cout << "i=" << row.i << " roth_van_tuyl=" << row.roth_van_tuyl
                << " hochster=" << row.hochster << " predicted=" << row.predicted
                << "\n";
    if (!report.consistent) {
      std::cerr << "error: closed-strand check mismatch\n";
      return 1;
    }
  }
  return 0;
}

int cmd_switch(const std::string& file, bek::GraphFormat fmt,
               const std::string& remove_s, const std::string& add_s) {
  const bek::Graph g = bek::parse_graph(slurp(file), fmt);
  const bek::Graph h =
      bek::switch_free_cut_edge(g, parse_pair(remove_s), parse_pair(add_s));
  const auto before = bek::clique_census(g);
  const auto after = bek::clique_census(h);
  if (before.counts != after.counts)
    throw std::logic_error("switch changed the clique census");
  std::cout << bek::render_edge_list(h);
  return 0;
}

int cmd_reduce(const std::string& file, bek::GraphFormat fmt) {
  const bek::Graph g = bek::parse_graph(slurp(file), fmt);
  std::cout << "free cut edges:";
  for (auto [u, v] : bek::free_cut_edges(g)) std::cout << " {" << u << "," << v << "}";
  std::cout << "\n";
  std::cout << bek::render_edge_list(bek::reduced_graph(g));
  return 0;
}

int cmd_verify_closed_strand(int max_n) {
  if (max_n < 1 || max_n > 7) {
    std::cerr << "error: --max-n must be in 1..7\n";
    return 1;
  }
  long long checked = 0, mismatches = 0;
  for (const bek::Graph& g : bek::nonisomorphic_graphs_up_to(max_n)) {
    if (!bek::is_connected(g) || !bek::is_closed(g)) continue;
    const auto report = bek::closed_strand_check(g);
    ++checked;
    if (!report.consistent) {
      ++mismatches;
      std::cerr << "mismatch on graph " << bek::render_graph6(g) << "\n";
    }
  }
  std::cout << "closed-strand: " << checked << " connected closed graphs checked, "
            << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

void compositions_of(int t, int max_parts, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (t == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int first = 1; first <= t; ++first) {
    cur.push_back(first);
    compositions_of(t - first, max_parts, cur, out);
    cur.pop_back();
  }
}

int cmd_verify_lollipop(int max_m, int max_t) {
  int failures = 0;
  for (int m = 2; m <= max_m; ++m)
    for (int t = 1; t <= max_t; ++t) {
      const bek::BettiTable formula = bek::betti_lollipop(m, {t});
      const bek::Graph lolly = bek::make_k_handle_lollipop(m, {t});
      const auto labeling = bek::find_closed_labeling(lolly);
      bool ok = labeling.has_value();
      if (ok) {
        const bek::BettiTable oracle =
            bek::hochster_betti(bek::in_graph(lolly, *labeling).to_graph());
        ok = (oracle == formula) && formula.pd() == m + t - 1 &&
             formula.reg() == t + 1;
      }
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions_of(t, m, cur, comps);
      for (const auto& comp : comps)
        if (bek::betti_lollipop(m, comp) != formula) ok = false;
      std::cout << "L_{" << m << "," << t << "}: " << (ok ? "ok" : "FAIL") << "\n";
      if (!ok) ++failures;
    }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideal toolkit"};
  app.require_subcommand(1);

  std::string file, format = "auto", method = "formula", remove_s, add_s;
  int max_n = 6, max_m = 4, max_t = 3;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "graph file (- for stdin)")->required();
    cmd->add_option("--format", format, "edge-list|json|graph6|auto");
  };

  auto* classify = app.add_subcommand("classify", "closedness / linearity / purity");
  add_input(classify);
  auto* betti = app.add_subcommand("betti", "Betti table of S/J_G");
  add_input(betti);
  betti->add_option("--method", method, "formula|oracle");
  auto* strand = app.add_subcommand("strand", "linear strand prediction and checks");
  add_input(strand);
  auto* swtch = app.add_subcommand("switch", "free cut edge switching");
  add_input(swtch);
  swtch->add_option("--remove", remove_s, "edge u,v to remove")->required();
  swtch->add_option("--add", add_s, "edge u,v to add")->required();
  auto* reduce = app.add_subcommand("reduce", "free cut edges and the reduced graph");
  add_input(reduce);
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* vcs = verify->add_subcommand("closed-strand", "strand identity on all closed graphs");
  vcs->add_option("--max-n", max_n, "max vertex count (<= 7)");
  auto* vlp = verify->add_subcommand("lollipop", "lollipop formula vs oracle");
  vlp->add_option("--max-m", max_m, "max clique size");
  vlp->add_option("--max-t", max_t, "max total handle length");

  CLI11_PARSE(app, argc, argv);

  try {
    const bek::GraphFormat fmt = parse_format(format);
    if (classify->parsed()) return cmd_classify(file, fmt);
    if (betti->parsed()) return cmd_betti(file, fmt, method);
    if (strand->parsed()) return cmd_strand(file, fmt);
    if (swtch->parsed()) return cmd_switch(file, fmt, remove_s, add_s);
    if (reduce->parsed()) return cmd_reduce(file, fmt);
    if (vcs->parsed()) return cmd_verify_closed_strand(max_n);
    if (vlp->parsed()) return cmd_verify_lollipop(max_m, max_t);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
