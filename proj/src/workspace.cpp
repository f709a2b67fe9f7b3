#include "motkit/workspace.hpp"

#include <fstream>

#include "motkit/common.hpp"

namespace motkit {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw error(where + ": missing field \"" + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw error(where + ": expected an integer (floats are not accepted)");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw error(where + ": expected a string");
  return j.get<std::string>();
}

std::set<int> as_vertex_set(const json& j, const std::string& where) {
  std::set<int> out;
  if (!j.is_array()) throw error(where + ": expected an array of vertices");
  for (const auto& v : j) out.insert(as_int(v, where));
  return out;
}

VertexPerm perm_from_json(const json& j, const DynkinDiagram& d, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != d.rank())
    throw error(where + ": permutation must list the image of every vertex");
  VertexPerm perm(d.rank());
  for (int i = 0; i < d.rank(); ++i)
    perm[i] = d.position_of(as_int(j[i], where));
  return perm;
}

json perm_to_json(const VertexPerm& perm, const DynkinDiagram& d) {
  json out = json::array();
  for (int i = 0; i < d.rank(); ++i) out.push_back(d.label_of(perm[i]));
  return out;
}

StarAction star_from_json(const json& group, const DynkinDiagram& d, const std::string& where) {
  std::vector<VertexPerm> gens;
  if (group.contains("star_generators"))
    for (const auto& g : group["star_generators"]) gens.push_back(perm_from_json(g, d, where));
  return StarAction::create(d, std::move(gens));
}

}  // namespace

LaurentPoly Workspace::poly_from_json(const json& j) {
  if (!j.is_object()) throw error("polynomial: expected an object {\"exp\": coeff}");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    int exp = 0;
    try {
      exp = std::stoi(key);
    } catch (const std::exception&) {
      throw error("polynomial: bad exponent key \"" + key + "\"");
    }
    p.add_term(exp, as_int(value, "polynomial"));
  }
  return p;
}

json Workspace::poly_to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c;
  return out;
}

Workspace Workspace::from_json(const json& j) {
  Workspace w;
  if (!j.is_object()) throw error("workspace: expected a JSON object");
  w.version_ = j.contains("version") ? as_int(j["version"], "workspace") : 1;
  if (w.version_ != 1) throw error("workspace: unsupported version");

  if (j.contains("lattice")) {
    const json& lat = j["lattice"];
    w.base_id_ = as_string(require(lat, "base", "lattice"), "lattice");
    w.prime_ = lat.contains("p") ? as_int(lat["p"], "lattice") : 2;
    for (const auto& nj : require(lat, "nodes", "lattice")) {
      ExtensionLattice::NodeSpec spec;
      spec.id = as_string(require(nj, "id", "lattice node"), "lattice node");
      if (nj.contains("p_special")) spec.p_special = nj["p_special"].get<bool>();
      if (nj.contains("p_closure"))
        spec.p_closure = as_string(nj["p_closure"], "lattice node");
      if (nj.contains("generic_point_of")) {
        const json& g = nj["generic_point_of"];
        if (g.is_string())
          spec.generic_point_of.push_back(g.get<std::string>());
        else
          for (const auto& a : g) spec.generic_point_of.push_back(as_string(a, "lattice node"));
      }
      if (nj.contains("adjoin"))
        for (const auto& a : nj["adjoin"]) spec.adjoin.push_back(as_string(a, "lattice node"));
      if (nj.contains("opaque")) spec.opaque = nj["opaque"].get<bool>();
      w.node_specs_.push_back(std::move(spec));
    }
    if (lat.contains("edges"))
      for (const auto& e : lat["edges"]) {
        if (!e.is_array() || e.size() != 2) throw error("lattice edge: expected [below, above]");
        w.edge_specs_.emplace_back(as_string(e[0], "lattice edge"), as_string(e[1], "lattice edge"));
      }
    if (j.contains("atoms"))
      for (const auto& aj : j["atoms"]) {
        ExtensionLattice::AtomSpec spec;
        spec.id = as_string(require(aj, "id", "atom"), "atom");
        spec.rank = as_int(require(aj, "rank", "atom " + spec.id), "atom");
        if (aj.contains("isotropy"))
          for (const auto& n : aj["isotropy"]) spec.isotropy.insert(as_string(n, "atom"));
        if (aj.contains("trace"))
          for (const auto& [node, poly] : aj["trace"].items())
            spec.trace[node] = poly_from_json(poly);
        w.atom_specs_.push_back(std::move(spec));
      }
    w.lattice_ = ExtensionLattice::build(w.base_id_, w.node_specs_, w.edge_specs_,
                                         w.atom_specs_, w.prime_);
  } else if (j.contains("atoms")) {
    throw error("workspace: atoms need a lattice");
  }

  if (j.contains("motives")) {
    for (const auto& [name, pj] : j["motives"].items()) {
      std::vector<std::pair<std::string, int>> pairs;
      for (const auto& pair : pj) {
        if (!pair.is_array() || pair.size() != 2)
          throw error("motive " + name + ": expected [atom, twist] pairs");
        pairs.emplace_back(as_string(pair[0], "motive"), as_int(pair[1], "motive"));
      }
      w.motives_.emplace(name, FormalMotive(w.lattice(), pairs));
    }
  }

  if (j.contains("groups")) {
    for (const auto& [name, gj] : j["groups"].items()) {
      DynkinDiagram d = DynkinDiagram::parse(as_string(require(gj, "diagram", "group"), "group"));
      StarAction star = star_from_json(gj, d, "group " + name);
      std::set<int> dist;
      if (gj.contains("distinguished"))
        dist = as_vertex_set(gj["distinguished"], "group " + name);
      else
        dist = std::set<int>(d.vertices().begin(), d.vertices().end());
      w.groups_.emplace(name, GroupDatum::create(std::move(d), std::move(star), std::move(dist)));
    }
  }

  if (j.contains("tits_tables")) {
    for (const auto& [name, tj] : j["tits_tables"].items()) {
      const std::string gname = as_string(require(tj, "group", "tits table"), "tits table");
      const GroupDatum& g = w.group(gname);
      const int p = tj.contains("p") ? as_int(tj["p"], "tits table") : w.prime_;
      std::map<int, std::set<int>> dist;
      for (const auto& [node, set] : require(tj, "nodes", "tits table " + name).items())
        dist[w.lattice()->node_index(node)] =
            as_vertex_set(set, "tits table " + name);
      w.tits_tables_.emplace(
          name, TitsTable::create(g.diagram, g.star, p, w.lattice(), std::move(dist)));
      w.tits_raw_[name] = tj;
    }
  }

  if (j.contains("forms")) {
    for (const auto& [name, fj] : j["forms"].items()) {
      std::vector<Rational> diag;
      for (const auto& c : fj) diag.push_back(Rational::parse(as_string(c, "form " + name)));
      w.forms_.emplace(name, QuadraticForm(std::move(diag)));
    }
  }

  if (j.contains("witt_tables")) {
    for (const auto& [name, wj] : j["witt_tables"].items()) {
      WittSpec spec;
      if (wj.contains("form")) spec.form = as_string(wj["form"], "witt table");
      if (wj.contains("dim")) spec.dim = as_int(wj["dim"], "witt table");
      if (wj.contains("nodes"))
        for (const auto& [node, v] : wj["nodes"].items())
          spec.nodes[node] = as_int(v, "witt table");
      if (wj.contains("asserted"))
        for (const auto& [node, v] : wj["asserted"].items())
          spec.asserted[node] = as_int(v, "witt table");
      if (!spec.form && !spec.dim)
        throw error("witt table " + name + ": needs a form reference or an explicit dim");
      w.witt_specs_.emplace(name, std::move(spec));
    }
  }
  return w;
}

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open workspace file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw error("workspace " + path + ": " + e.what());
  }
  return from_json(j);
}

json Workspace::to_json() const {
  json j;
  j["version"] = version_;
  if (lattice_) {
    json lat;
    lat["base"] = base_id_;
    lat["p"] = prime_;
    json nodes = json::array();
    for (const auto& spec : node_specs_) {
      json nj;
      nj["id"] = spec.id;
      nj["p_special"] = spec.p_special;
      if (spec.p_closure) nj["p_closure"] = *spec.p_closure;
      if (!spec.generic_point_of.empty()) nj["generic_point_of"] = spec.generic_point_of;
      if (!spec.adjoin.empty()) nj["adjoin"] = spec.adjoin;
      if (spec.opaque) nj["opaque"] = true;
      nodes.push_back(std::move(nj));
    }
    lat["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& [a, b] : edge_specs_) edges.push_back(json::array({a, b}));
    lat["edges"] = std::move(edges);
    j["lattice"] = std::move(lat);

    json atoms = json::array();
    for (const auto& spec : atom_specs_) {
      json aj;
      aj["id"] = spec.id;
      aj["rank"] = spec.rank;
      aj["isotropy"] = spec.isotropy;
      json traces = json::object();
      for (const auto& [node, poly] : spec.trace)
        if (!poly.is_zero()) traces[node] = poly_to_json(poly);
      aj["trace"] = std::move(traces);
      atoms.push_back(std::move(aj));
    }
    j["atoms"] = std::move(atoms);
  }
  if (!motives_.empty()) {
    json motives = json::object();
    for (const auto& [name, m] : motives_) {
      json pairs = json::array();
      for (const auto& [a, twist] : m.pairs())
        pairs.push_back(json::array({lattice_->atom_id(a), twist}));
      motives[name] = std::move(pairs);
    }
    j["motives"] = std::move(motives);
  }
  if (!groups_.empty()) {
    json groups = json::object();
    for (const auto& [name, g] : groups_) {
      json gj;
      gj["diagram"] = g.diagram.str();
      json gens = json::array();
      for (const auto& perm : g.star.generators()) gens.push_back(perm_to_json(perm, g.diagram));
      gj["star_generators"] = std::move(gens);
      gj["distinguished"] = g.distinguished;
      groups[name] = std::move(gj);
    }
    j["groups"] = std::move(groups);
  }
  if (!tits_raw_.empty()) {
    json tables = json::object();
    for (const auto& [name, raw] : tits_raw_) tables[name] = raw;
    j["tits_tables"] = tables;
  }
  if (!forms_.empty()) {
    json forms = json::object();
    for (const auto& [name, q] : forms_) {
      json diag = json::array();
      for (const auto& r : q.diagonal()) diag.push_back(r.str());
      forms[name] = std::move(diag);
    }
    j["forms"] = std::move(forms);
  }
  if (!witt_specs_.empty()) {
    json tables = json::object();
    for (const auto& [name, spec] : witt_specs_) {
      json wj;
      if (spec.form) wj["form"] = *spec.form;
      if (spec.dim) wj["dim"] = *spec.dim;
      if (!spec.nodes.empty()) {
        json nodes = json::object();
        for (const auto& [node, v] : spec.nodes) nodes[node] = v;
        wj["nodes"] = std::move(nodes);
      }
      if (!spec.asserted.empty()) {
        json asserted = json::object();
        for (const auto& [node, v] : spec.asserted) asserted[node] = v;
        wj["asserted"] = std::move(asserted);
      }
      tables[name] = std::move(wj);
    }
    j["witt_tables"] = std::move(tables);
  }
  return j;
}

void Workspace::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw error("cannot write workspace file: " + path);
  out << to_json().dump(2) << "\n";
}

const LatticePtr& Workspace::lattice() const {
  if (!lattice_) throw error("workspace has no lattice");
  return lattice_;
}

const FormalMotive& Workspace::motive(const std::string& name) const {
  auto it = motives_.find(name);
  if (it == motives_.end()) throw error("unknown motive: " + name);
  return it->second;
}

const GroupDatum& Workspace::group(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) throw error("unknown group: " + name);
  return it->second;
}

const TitsTable& Workspace::tits_table(const std::string& name) const {
  auto it = tits_tables_.find(name);
  if (it == tits_tables_.end()) throw error("unknown tits table: " + name);
  return it->second;
}

const QuadraticForm& Workspace::form(const std::string& name) const {
  auto it = forms_.find(name);
  if (it == forms_.end()) throw error("unknown form: " + name);
  return it->second;
}

WittIndexTable Workspace::witt_table(const std::string& name) const {
  auto it = witt_specs_.find(name);
  if (it == witt_specs_.end()) throw error("unknown witt table: " + name);
  const WittSpec& spec = it->second;

  if (spec.form) {
    const QuadraticForm& q = form(*spec.form);
    std::map<std::string, int> asserted = spec.asserted;
    for (const auto& [node, v] : spec.nodes) asserted.emplace(node, v);
    return quadric_witt_table(q, lattice(), asserted);
  }
  std::map<int, int> by_node;
  for (const auto& [node, v] : spec.nodes) by_node[lattice()->node_index(node)] = v;
  return WittIndexTable::create(lattice(), *spec.dim, std::move(by_node));
}

}  // namespace motkit
