// motkit command-line front end.
//
// Exit codes: 0 = success / verdict true, 1 = verdict false, 2 = input error.

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motkit/cgm.hpp"
#include "motkit/common.hpp"
#include "motkit/equiv.hpp"
#include "motkit/laurent.hpp"
#include "motkit/qform.hpp"
#include "motkit/weyl.hpp"
#include "motkit/workspace.hpp"

namespace {

using nlohmann::json;
using namespace motkit;

struct Options {
  bool json_output = false;
  std::string workspace_path;
  std::uint64_t weyl_bound = 1000000;
};

std::set<int> parse_vertex_list(const std::string& text) {
  std::set<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    std::string tok = text.substr(i, j == std::string::npos ? std::string::npos : j - i);
    i = (j == std::string::npos) ? text.size() : j + 1;
    if (tok.empty()) continue;
    try {
      out.insert(std::stoi(tok));
    } catch (const std::exception&) {
      throw error("invalid vertex list entry: " + tok);
    }
  }
  return out;
}

Workspace load_workspace(const Options& opt) {
  if (opt.workspace_path.empty()) throw error("this command needs --workspace <file>");
  return Workspace::load(opt.workspace_path);
}

void emit(const Options& opt, const json& machine, const std::string& human) {
  if (opt.json_output)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

std::string poly_block(const std::string& label, const LaurentPoly& p) {
  return label + ": " + p.str() + "\n";
}

int cmd_poincare(const Options& opt, const std::string& diagram_spec, const std::string& theta_csv) {
  WeylOptions wopt{opt.weyl_bound};
  DynkinDiagram d = DynkinDiagram::parse(diagram_spec);
  WeylGroup w = WeylGroup::generate(RootSystem::of(d), wopt);
  const LaurentPoly p = w.poincare(parse_vertex_list(theta_csv));
  json out{{"command", "poincare"},
           {"diagram", d.str()},
           {"poincare", Workspace::poly_to_json(p)},
           {"text", p.str()}};
  emit(opt, out, p.str() + "\n");
  return 0;
}

int cmd_decompose(const Options& opt, const std::string& target, const std::string& theta_csv) {
  WeylOptions wopt{opt.weyl_bound};
  std::optional<GroupDatum> datum;
  if (!opt.workspace_path.empty()) {
    Workspace w = load_workspace(opt);
    try {
      datum = w.group(target);
    } catch (const error&) {
      // fall through to a diagram literal
    }
  }
  if (!datum) datum = GroupDatum::split(DynkinDiagram::parse(target));
  const std::set<int> theta = parse_vertex_list(theta_csv);
  const auto pieces = cgm_decompose(*datum, theta, wopt);

  json rows = json::array();
  std::string table = "shift  type        mult\n";
  for (const auto& piece : pieces) {
    json row{{"shift", piece.shift},
             {"type", piece.piece_type},
             {"multiplicity", piece.multiplicity}};
    rows.push_back(std::move(row));
    std::string type = "{";
    bool first = true;
    for (int v : piece.piece_type) {
      if (!first) type += ",";
      type += std::to_string(v);
      first = false;
    }
    type += "}";
    table += std::to_string(piece.shift) + "      " + type;
    for (std::size_t pad = type.size(); pad < 12; ++pad) table += " ";
    table += std::to_string(piece.multiplicity) + "\n";
  }
  json out{{"command", "decompose"}, {"pieces", std::move(rows)}};
  if (datum->star.is_trivial() && datum->is_quasi_split()) {
    const auto identity = cgm_poincare_identity(*datum, theta, wopt);
    out["residual"] = identity.residual.str();
    table += "residual: " + identity.residual.str() + "\n";
    if (!identity.holds) {
      emit(opt, out, table);
      std::cerr << "error: Poincare identity failed; the decomposition is not trustworthy\n";
      return 2;
    }
  }
  emit(opt, out, table);
  return 0;
}

int cmd_trace(const Options& opt, const std::string& motive_name,
              const std::string& node_id, bool all_nodes) {
  Workspace w = load_workspace(opt);
  const FormalMotive& m = w.motive(motive_name);
  const auto& lat = *m.lattice();
  json nodes = json::object();
  std::string text;
  if (all_nodes) {
    for (int n = 0; n < lat.num_nodes(); ++n) {
      const LaurentPoly p = tate_trace(m, n);
      nodes[lat.node_id(n)] = Workspace::poly_to_json(p);
      text += poly_block(lat.node_id(n), p);
    }
  } else {
    const int n = node_id.empty() ? lat.base_node() : lat.node_index(node_id);
    const LaurentPoly p = tate_trace(m, n);
    nodes[lat.node_id(n)] = Workspace::poly_to_json(p);
    text = p.str() + "\n";
  }
  emit(opt, json{{"command", "trace"}, {"motive", motive_name}, {"nodes", std::move(nodes)}},
       text);
  return 0;
}

int cmd_iso(const Options& opt, const std::string& mname, const std::string& nname) {
  Workspace w = load_workspace(opt);
  const FormalMotive& m = w.motive(mname);
  const FormalMotive& n = w.motive(nname);
  const IsoResult res = is_isomorphic(m, n);
  json out{{"command", "iso"}, {"verdict", res.isomorphic}};
  std::string text;
  if (res.isomorphic) {
    json match = json::array();
    for (const auto& [i, j] : res.matching) {
      const auto& [a, ta] = m.pairs()[i];
      const auto& [b, tb] = n.pairs()[j];
      match.push_back(json{{"left", {m.lattice()->atom_id(a), ta}},
                           {"right", {n.lattice()->atom_id(b), tb}}});
      text += m.lattice()->atom_id(a) + "{" + std::to_string(ta) + "} ~ " +
              n.lattice()->atom_id(b) + "{" + std::to_string(tb) + "}\n";
    }
    out["matching"] = std::move(match);
    text = "isomorphic\n" + text;
  } else {
    out["reason"] = res.reason;
    text = "not isomorphic: " + res.reason + "\n";
  }
  emit(opt, out, text);
  return res.isomorphic ? 0 : 1;
}

int cmd_vishik(const Options& opt, const std::string& t1name, const std::string& t2name) {
  Workspace w = load_workspace(opt);
  const WittIndexTable t1 = w.witt_table(t1name);
  const WittIndexTable t2 = w.witt_table(t2name);
  const VishikResult res = vishik_check(t1, t2);
  json out{{"command", "vishik"}, {"verdict", res.verdict}};
  std::string text = res.verdict ? "equivalent: equal dimensions and Witt tables\n"
                                 : "not equivalent: mismatch at " + res.mismatch + "\n";
  if (!res.verdict) out["mismatch"] = res.mismatch;
  emit(opt, out, text);
  return res.verdict ? 0 : 1;
}

int cmd_moteq(const Options& opt, const std::string& t1name, const std::string& t2name,
              const std::string& phi_spec, const std::string& theta0_csv) {
  Workspace w = load_workspace(opt);
  const TitsTable& t1 = w.tits_table(t1name);
  const TitsTable& t2 = w.tits_table(t2name);

  DiagramIso phi;
  if (phi_spec.empty() || phi_spec == "id") {
    if (!(t1.diagram == t2.diagram))
      throw error("--phi id needs identical diagrams; give an explicit map a:b,...");
    phi = DiagramIso::create(t1.diagram, t2.diagram, DiagramIso::identity(t1.diagram).map,
                             t1.star, t2.star);
  } else {
    std::map<int, int> map;
    std::size_t i = 0;
    while (i < phi_spec.size()) {
      std::size_t j = phi_spec.find(',', i);
      std::string tok = phi_spec.substr(i, j == std::string::npos ? std::string::npos : j - i);
      i = (j == std::string::npos) ? phi_spec.size() : j + 1;
      const auto colon = tok.find(':');
      if (colon == std::string::npos) throw error("invalid --phi entry: " + tok);
      map[std::stoi(tok.substr(0, colon))] = std::stoi(tok.substr(colon + 1));
    }
    phi = DiagramIso::create(t1.diagram, t2.diagram, std::move(map), t1.star, t2.star);
  }

  const std::set<int> theta0 = parse_vertex_list(theta0_csv);
  const MotEquivResult res = check_motequiv(t1, t2, phi, theta0);
  json out{{"command", "moteq"},
           {"verdict", res.verdict},
           {"note", "verdict is relative to the supplied lattice of extensions"}};
  std::string text;
  if (res.verdict) {
    text = "motivic equivalence criterion holds on the supplied lattice\n";
    json pairs = json::array();
    for (const auto& [theta, image] : motequiv_conclusions(t1, phi, theta0)) {
      pairs.push_back(json{{"theta", theta}, {"image", image}});
      std::string line = "  {";
      bool first = true;
      for (int v : theta) {
        if (!first) line += ",";
        line += std::to_string(v);
        first = false;
      }
      line += "} ~ {";
      first = true;
      for (int v : image) {
        if (!first) line += ",";
        line += std::to_string(v);
        first = false;
      }
      line += "}\n";
      text += line;
    }
    out["conclusions"] = std::move(pairs);
  } else {
    out["node"] = res.node;
    out["clause"] = res.clause;
    text = "criterion fails at node " + res.node + " (" + res.clause + ")\n";
  }
  emit(opt, out, text);
  return res.verdict ? 0 : 1;
}

int cmd_tower(const Options& opt, const std::string& motive_name) {
  Workspace w = load_workspace(opt);
  const FormalMotive& m = w.motive(motive_name);
  const Tower tower = splitting_tower(m);
  json chain = json::array();
  std::string text;
  for (std::size_t i = 0; i < tower.chain.size(); ++i) {
    const std::string id = m.lattice()->node_id(tower.chain[i]);
    chain.push_back(json{{"node", id}, {"trace", Workspace::poly_to_json(tower.traces[i])}});
    text += id + ": " + tower.traces[i].str() + "\n";
  }
  emit(opt, json{{"command", "tower"}, {"chain", std::move(chain)}}, text);
  return 0;
}

int cmd_pattern(const Options& opt, const std::string& motive_name, bool via_towers) {
  Workspace w = load_workspace(opt);
  const FormalMotive& m = w.motive(motive_name);
  const std::set<LaurentPoly> pattern =
      via_towers ? pattern_from_towers(m) : splitting_pattern(m);
  json arr = json::array();
  std::string text;
  for (const auto& p : pattern) {
    arr.push_back(Workspace::poly_to_json(p));
    text += p.str() + "\n";
  }
  emit(opt, json{{"command", "pattern"}, {"traces", std::move(arr)}}, text);
  return 0;
}

int cmd_witt(const Options& opt, const std::string& form_arg, const std::string& node_id,
             bool all_nodes) {
  std::optional<Workspace> w;
  std::optional<QuadraticForm> q;
  if (!form_arg.empty() && form_arg.front() == '<') {
    q = QuadraticForm::parse(form_arg);
  } else {
    w = load_workspace(opt);
    q = w->form(form_arg);
  }
  if (all_nodes || !node_id.empty()) {
    if (!w) w = load_workspace(opt);
    const auto table = quadric_witt_table(*q, w->lattice());
    json nodes = json::object();
    std::string text;
    if (all_nodes) {
      for (int n = 0; n < table.lattice->num_nodes(); ++n) {
        nodes[table.lattice->node_id(n)] = table.at(n);
        text += table.lattice->node_id(n) + ": " + std::to_string(table.at(n)) + "\n";
      }
    } else {
      const int n = table.lattice->node_index(node_id);
      nodes[node_id] = table.at(n);
      text = std::to_string(table.at(n)) + "\n";
    }
    emit(opt, json{{"command", "witt"}, {"form", q->str()}, {"nodes", std::move(nodes)}}, text);
    return 0;
  }
  const int i0 = witt_index_Q(*q);
  emit(opt, json{{"command", "witt"}, {"form", q->str()}, {"witt_index", i0}},
       std::to_string(i0) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"motkit: exact combinatorics of motivic decompositions of projective "
               "homogeneous varieties"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json_output, "emit a machine-readable JSON report");
  app.add_option("--workspace", opt.workspace_path, "workspace JSON file");
  app.add_option("--weyl-bound", opt.weyl_bound, "Weyl group enumeration bound");

  std::string diagram_spec, theta_csv, target, motive_name, node_id;
  std::string name_a, name_b, phi_spec, theta0_csv, form_arg;
  bool all_nodes = false, via_towers = false;

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a flag variety");
  poincare->add_option("diagram", diagram_spec, "diagram spec, e.g. A3;G2")->required();
  poincare->add_option("--theta", theta_csv, "parabolic type (comma-separated vertices)");

  auto* decompose = app.add_subcommand("decompose", "decomposition into shifted Levi pieces");
  decompose->add_option("group", target, "group name in the workspace, or a diagram spec")
      ->required();
  decompose->add_option("--theta", theta_csv, "variety type (comma-separated vertices)");

  auto* trace = app.add_subcommand("trace", "Tate trace of a motive at a node");
  trace->add_option("motive", motive_name)->required();
  trace->add_option("--node", node_id, "node id (default: base)");
  trace->add_flag("--all", all_nodes, "print the trace at every node");

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two motives");
  iso->add_option("M", name_a)->required();
  iso->add_option("N", name_b)->required();

  auto* vishik = app.add_subcommand("vishik", "compare two quadric Witt tables");
  vishik->add_option("table1", name_a)->required();
  vishik->add_option("table2", name_b)->required();

  auto* moteq = app.add_subcommand("moteq", "motivic equivalence from Tits tables");
  moteq->add_option("table1", name_a)->required();
  moteq->add_option("table2", name_b)->required();
  moteq->add_option("--phi", phi_spec, "vertex map a:b,... or 'id'");
  moteq->add_option("--theta0", theta0_csv, "base type (comma-separated vertices)");

  auto* tower = app.add_subcommand("tower", "greedy splitting tower of a motive");
  tower->add_option("motive", motive_name)->required();

  auto* pattern = app.add_subcommand("pattern", "splitting pattern of a motive");
  pattern->add_option("motive", motive_name)->required();
  pattern->add_flag("--towers", via_towers, "enumerate towers instead of sweeping nodes");

  auto* witt = app.add_subcommand("witt", "Witt index of a quadratic form");
  witt->add_option("form", form_arg, "form name in the workspace, or a literal <1,1,-1>")
      ->required();
  witt->add_option("--node", node_id, "lattice node id");
  witt->add_flag("--all", all_nodes, "full table over the lattice");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (poincare->parsed()) return cmd_poincare(opt, diagram_spec, theta_csv);
    if (decompose->parsed()) return cmd_decompose(opt, target, theta_csv);
    if (trace->parsed()) return cmd_trace(opt, motive_name, node_id, all_nodes);
    if (iso->parsed()) return cmd_iso(opt, name_a, name_b);
    if (vishik->parsed()) return cmd_vishik(opt, name_a, name_b);
    if (moteq->parsed()) return cmd_moteq(opt, name_a, name_b, phi_spec, theta0_csv);
    if (tower->parsed()) return cmd_tower(opt, motive_name);
    if (pattern->parsed()) return cmd_pattern(opt, motive_name, via_towers);
    if (witt->parsed()) return cmd_witt(opt, form_arg, node_id, all_nodes);
  } catch (const motkit::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
