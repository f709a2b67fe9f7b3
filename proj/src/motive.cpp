#include "motkit/motive.hpp"

#include <algorithm>

#include "motkit/common.hpp"

namespace motkit {

namespace {
const LaurentPoly kZero;
}

std::shared_ptr<const ExtensionLattice> ExtensionLattice::build(
    const std::string& base_id, std::vector<NodeSpec> nodes,
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::vector<AtomSpec>& atoms, int prime) {
  auto lat = std::make_shared<ExtensionLattice>();
  if (prime < 2) throw error("lattice prime must be at least 2");
  lat->prime_ = prime;
  lat->nodes_ = std::move(nodes);

  std::map<std::string, int> node_index;
  for (int i = 0; i < static_cast<int>(lat->nodes_.size()); ++i) {
    if (lat->nodes_[i].id.empty()) throw error("node with empty id");
    if (!node_index.emplace(lat->nodes_[i].id, i).second)
      throw error("duplicate node id: " + lat->nodes_[i].id);
  }
  auto node_of = [&](const std::string& id) {
    auto it = node_index.find(id);
    if (it == node_index.end()) throw error("node not in lattice: " + id);
    return it->second;
  };
  lat->base_ = node_of(base_id);

  const int nn = lat->num_nodes();
  std::vector<std::vector<bool>> adj(nn, std::vector<bool>(nn, false));
  for (const auto& [lo, hi] : edges) {
    const int a = node_of(lo), b = node_of(hi);
    if (a == b) throw error("self edge on node " + lo);
    adj[a][b] = true;
    lat->edges_.emplace_back(a, b);
  }
  lat->p_closure_.assign(nn, std::nullopt);
  for (int i = 0; i < nn; ++i) {
    if (!lat->nodes_[i].p_closure) continue;
    const int c = node_of(*lat->nodes_[i].p_closure);
    if (!lat->nodes_[c].p_special)
      throw error("p-special closure of node " + lat->nodes_[i].id +
                  " points to a node that is not p-special: " + lat->nodes_[c].id);
    lat->p_closure_[i] = c;
    if (i != c && !adj[i][c]) {
      adj[i][c] = true;
      lat->edges_.emplace_back(i, c);
    }
  }

  // Reflexive-transitive closure; reject cycles.
  auto& leq = lat->leq_;
  leq.assign(nn, std::vector<bool>(nn, false));
  for (int i = 0; i < nn; ++i) {
    leq[i][i] = true;
    for (int j = 0; j < nn; ++j)
      if (adj[i][j]) leq[i][j] = true;
  }
  for (int k = 0; k < nn; ++k)
    for (int i = 0; i < nn; ++i)
      if (leq[i][k])
        for (int j = 0; j < nn; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw error("lattice order is not acyclic: nodes " + lat->nodes_[i].id + " and " +
                    lat->nodes_[j].id + " extend each other");
  for (int i = 0; i < nn; ++i)
    if (!leq[lat->base_][i])
      throw error("node " + lat->nodes_[i].id + " is not above the base node");

  // The unit atom sits at index 0.
  lat->atom_ids_.push_back("1");
  lat->atom_ranks_.push_back(1);
  lat->atom_isotropy_.emplace_back();
  for (int i = 0; i < nn; ++i) lat->atom_isotropy_[0].insert(i);
  lat->atom_traces_.emplace_back(nn, LaurentPoly::one());
  lat->canonical_.push_back(0);

  for (const auto& spec : atoms) {
    if (spec.id.empty()) throw error("atom with empty id");
    if (spec.id == "1") throw error("atom id \"1\" is reserved for the unit atom");
    for (const auto& existing : lat->atom_ids_)
      if (existing == spec.id) throw error("duplicate atom id: " + spec.id);
    if (spec.rank < 1) throw error("atom " + spec.id + ": rank must be positive");
    lat->atom_ids_.push_back(spec.id);
    lat->atom_ranks_.push_back(spec.rank);
    std::set<int> iso;
    for (const auto& id : spec.isotropy) iso.insert(node_of(id));
    std::vector<LaurentPoly> traces(nn);
    for (const auto& [id, poly] : spec.trace) traces[node_of(id)] = poly;
    lat->atom_isotropy_.push_back(std::move(iso));
    lat->atom_traces_.push_back(std::move(traces));
    lat->canonical_.push_back(0);  // fixed up in validate_atoms
  }
  lat->validate_atoms();
  return lat;
}

void ExtensionLattice::validate_atoms() const {
  auto& self = const_cast<ExtensionLattice&>(*this);
  const int nn = num_nodes();
  for (int a = 1; a < num_atoms(); ++a) {
    const std::string& id = atom_ids_[a];
    const auto& iso = atom_isotropy_[a];
    const auto& traces = atom_traces_[a];
    for (int n = 0; n < nn; ++n) {
      const LaurentPoly& tr = traces[n];
      const bool listed = iso.count(n) > 0;
      if (listed && tr.is_zero())
        throw error("atom " + id + ": node " + node_id(n) +
                    " is listed isotropic but the trace there is zero");
      if (!listed && !tr.is_zero())
        throw error("atom " + id + ": nonzero trace at node " + node_id(n) +
                    " which is not in the isotropy set");
      if (!tr.is_zero()) {
        if (!tr.nonnegative())
          throw error("atom " + id + ": trace at node " + node_id(n) +
                      " has a negative coefficient");
        if (tr.min_exp() < 0)
          throw error("atom " + id + ": trace at node " + node_id(n) +
                      " has a negative twist");
        if (tr.coeff(0) < 1)
          throw error("atom " + id + ": trace at node " + node_id(n) +
                      " lacks a constant term");
        if (tr.coeff_sum() > atom_ranks_[a])
          throw error("atom " + id + ": trace at node " + node_id(n) + " has " +
                      std::to_string(tr.coeff_sum()) + " Tate summands, exceeding rank " +
                      std::to_string(atom_ranks_[a]));
      }
    }
    // Isotropy is up-closed and traces only grow along the order.
    for (const auto& [lo, hi] : edges_) {
      if (iso.count(lo) && !iso.count(hi))
        throw error("atom " + id + ": isotropy set is not up-closed from node " +
                    node_id(lo) + " to " + node_id(hi));
      if (!traces[lo].dominated_by(traces[hi]))
        throw error("atom " + id + ": trace does not grow from node " + node_id(lo) +
                    " to " + node_id(hi));
    }
    // Traces are already decided at the p-special closure.
    for (int n = 0; n < nn; ++n) {
      if (p_closure_[n] && traces[n] != traces[*p_closure_[n]])
        throw error("atom " + id + ": trace at node " + node_id(n) +
                    " differs from its p-special closure " + node_id(*p_closure_[n]));
    }
    // An atom isotropic at the base is the unit atom.
    if (iso.count(base_)) {
      bool unit_shaped = atom_ranks_[a] == 1;
      for (int n = 0; unit_shaped && n < nn; ++n)
        if (traces[n] != LaurentPoly::one()) unit_shaped = false;
      if (!unit_shaped)
        throw error("atom " + id +
                    " is isotropic at the base but is not the unit atom "
                    "(rank 1, trace 1 everywhere)");
      self.canonical_[a] = 0;
    } else {
      self.canonical_[a] = a;
    }
  }
  // Function-field tags point at atoms isotropic there.
  for (int n = 0; n < nn; ++n) {
    for (const auto& tag : nodes_[n].generic_point_of) {
      const int a = atom_index(tag);
      if (!atom_isotropy_[a].count(n))
        throw error("node " + node_id(n) + " is tagged as the function field of atom " +
                    tag + ", but that atom is anisotropic there");
    }
  }
  // Atoms indistinguishable on the lattice must carry the same invariants;
  // otherwise the equivalence relation would not be trace-compatible.
  for (int a = 1; a < num_atoms(); ++a) {
    for (int b = a + 1; b < num_atoms(); ++b) {
      if (atom_isotropy_[a] != atom_isotropy_[b]) continue;
      if (atom_ranks_[a] != atom_ranks_[b])
        throw error("atoms " + atom_ids_[a] + " and " + atom_ids_[b] +
                    " are equivalent on the lattice but have different ranks");
      if (atom_traces_[a] != atom_traces_[b])
        throw error("atoms " + atom_ids_[a] + " and " + atom_ids_[b] +
                    " are equivalent on the lattice but have different trace tables");
    }
  }
}

int ExtensionLattice::node_index(const std::string& id) const {
  for (int i = 0; i < num_nodes(); ++i)
    if (nodes_[i].id == id) return i;
  throw error("node not in lattice: " + id);
}

std::vector<int> ExtensionLattice::generic_nodes_of(int atom) const {
  std::vector<int> out;
  const std::string& id = atom_ids_.at(atom);
  for (int n = 0; n < num_nodes(); ++n)
    for (const auto& tag : nodes_[n].generic_point_of)
      if (tag == id) {
        out.push_back(n);
        break;
      }
  return out;
}

int ExtensionLattice::atom_index(const std::string& id) const {
  for (int a = 0; a < num_atoms(); ++a)
    if (atom_ids_[a] == id) return a;
  throw error("unknown atom: " + id);
}

const LaurentPoly& ExtensionLattice::atom_trace(int a, int node) const {
  if (node < 0 || node >= num_nodes()) throw error("node index out of range");
  return atom_traces_.at(a)[node];
}

bool ExtensionLattice::atom_isotropic_at(int a, int node) const {
  return atom_isotropy_.at(a).count(node) > 0;
}

bool ExtensionLattice::dominates(int a, int b) const {
  const auto& ia = atom_isotropy_.at(a);
  const auto& ib = atom_isotropy_.at(b);
  return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

bool ExtensionLattice::equivalent_atoms(int a, int b) const {
  return atom_isotropy_.at(a) == atom_isotropy_.at(b);
}

FormalMotive::FormalMotive(LatticePtr lattice,
                           const std::vector<std::pair<std::string, int>>& pairs)
    : lattice_(std::move(lattice)) {
  if (!lattice_) throw error("motive without a lattice");
  for (const auto& [id, twist] : pairs) pairs_.emplace_back(lattice_->atom_index(id), twist);
  normalize();
}

FormalMotive::FormalMotive(LatticePtr lattice, const std::vector<std::pair<int, int>>& pairs)
    : lattice_(std::move(lattice)), pairs_(pairs) {
  if (!lattice_) throw error("motive without a lattice");
  for (const auto& [a, twist] : pairs_)
    if (a < 0 || a >= lattice_->num_atoms()) throw error("atom index out of range");
  normalize();
}

void FormalMotive::normalize() {
  for (auto& [a, twist] : pairs_) a = lattice_->canonical_atom(a);
  std::sort(pairs_.begin(), pairs_.end(), [&](const auto& x, const auto& y) {
    return std::pair<const std::string&, int>(lattice_->atom_id(x.first), x.second) <
           std::pair<const std::string&, int>(lattice_->atom_id(y.first), y.second);
  });
}

FormalMotive FormalMotive::shifted(int k) const {
  std::vector<std::pair<int, int>> out = pairs_;
  for (auto& [a, twist] : out) twist += k;
  return FormalMotive(lattice_, out);
}

FormalMotive FormalMotive::direct_sum(const FormalMotive& o) const {
  check_same_lattice(*this, o);
  std::vector<std::pair<int, int>> out = pairs_;
  out.insert(out.end(), o.pairs_.begin(), o.pairs_.end());
  return FormalMotive(lattice_, out);
}

std::vector<int> FormalMotive::atom_classes() const {
  std::vector<int> out;
  for (const auto& [a, twist] : pairs_)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

std::string FormalMotive::str() const {
  if (pairs_.empty()) return "0";
  std::string out;
  for (const auto& [a, twist] : pairs_) {
    if (!out.empty()) out += " + ";
    out += lattice_->atom_id(a) + "{" + std::to_string(twist) + "}";
  }
  return out;
}

void check_same_lattice(const FormalMotive& a, const FormalMotive& b) {
  if (a.lattice() != b.lattice()) throw error("lattice mismatch");
}

int hook(const FormalMotive& m) {
  if (m.empty()) throw error("hook undefined for the zero motive");
  int h = m.pairs().front().second;
  for (const auto& [a, twist] : m.pairs()) h = std::min(h, twist);
  return h;
}

std::int64_t rank(const FormalMotive& m) {
  std::int64_t r = 0;
  for (const auto& [a, twist] : m.pairs()) r += m.lattice()->atom_rank(a);
  return r;
}

LaurentPoly tate_trace(const FormalMotive& m, int node) {
  if (node < 0 || node >= m.lattice()->num_nodes()) throw error("node index out of range");
  LaurentPoly p;
  for (const auto& [a, twist] : m.pairs()) p += m.lattice()->atom_trace(a, node).shifted(twist);
  return p;
}

LaurentPoly tate_trace(const FormalMotive& m, const std::string& node_id) {
  return tate_trace(m, m.lattice()->node_index(node_id));
}

FormalMotive anisotropic_part(const FormalMotive& m, int node) {
  if (node != m.lattice()->base_node())
    throw error("anisotropic part only defined at the base");
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, twist] : m.pairs())
    if (!m.lattice()->atom_isotropic_at(a, node)) out.emplace_back(a, twist);
  return FormalMotive(m.lattice(), out);
}

bool trace_equal_everywhere(const FormalMotive& m, const FormalMotive& n) {
  check_same_lattice(m, n);
  for (int e = 0; e < m.lattice()->num_nodes(); ++e)
    if (tate_trace(m, e) != tate_trace(n, e)) return false;
  return true;
}

bool trace_equal_on_generic_nodes(const FormalMotive& m, const FormalMotive& n) {
  check_same_lattice(m, n);
  std::set<int> nodes;
  for (const FormalMotive* mm : {&m, &n})
    for (int a : mm->atom_classes())
      for (int g : mm->lattice()->generic_nodes_of(a)) nodes.insert(g);
  for (int e : nodes)
    if (tate_trace(m, e) != tate_trace(n, e)) return false;
  return true;
}

namespace {

struct Layer {
  // Positions into the motive's pair list still unmatched.
  std::vector<std::size_t> open;
};

}  // namespace

IsoResult is_isomorphic(const FormalMotive& m, const FormalMotive& n) {
  check_same_lattice(m, n);
  const auto& lat = *m.lattice();
  IsoResult res;

  std::vector<std::size_t> mopen, nopen;
  for (std::size_t i = 0; i < m.pairs().size(); ++i) mopen.push_back(i);
  for (std::size_t i = 0; i < n.pairs().size(); ++i) nopen.push_back(i);

  // Unit summands are the Tate trace at the base; they must match twist for
  // twist. Everything left is base-anisotropic.
  {
    std::vector<int> mu, nu;
    for (std::size_t i : mopen)
      if (m.pairs()[i].first == lat.unit_atom()) mu.push_back(m.pairs()[i].second);
    for (std::size_t i : nopen)
      if (n.pairs()[i].first == lat.unit_atom()) nu.push_back(n.pairs()[i].second);
    if (mu != nu) {  // both sorted by the normal form
      res.reason = "Tate traces at the base differ";
      return res;
    }
    std::vector<std::size_t> mrest, nrest;
    auto mi = mopen.begin();
    auto ni = nopen.begin();
    for (; mi != mopen.end(); ++mi)
      if (m.pairs()[*mi].first == lat.unit_atom()) {
        while (n.pairs()[*ni].first != lat.unit_atom()) {
          nrest.push_back(*ni);
          ++ni;
        }
        res.matching.emplace_back(*mi, *ni);
        ++ni;
      } else {
        mrest.push_back(*mi);
      }
    for (; ni != nopen.end(); ++ni)
      if (n.pairs()[*ni].first != lat.unit_atom()) nrest.push_back(*ni);
    mopen = std::move(mrest);
    nopen = std::move(nrest);
  }

  // Hook-layer matching by domination chains.
  while (!mopen.empty() || !nopen.empty()) {
    if (mopen.empty() != nopen.empty()) {
      res.reason = "different number of anisotropic summands";
      return res;
    }
    int hm = m.pairs()[mopen.front()].second;
    for (std::size_t i : mopen) hm = std::min(hm, m.pairs()[i].second);
    int hn = n.pairs()[nopen.front()].second;
    for (std::size_t i : nopen) hn = std::min(hn, n.pairs()[i].second);
    if (hm != hn) {
      res.reason = "hooks differ: " + std::to_string(hm) + " vs " + std::to_string(hn);
      return res;
    }
    std::vector<std::size_t> mlayer, nlayer;
    for (std::size_t i : mopen)
      if (m.pairs()[i].second == hm) mlayer.push_back(i);
    for (std::size_t i : nopen)
      if (n.pairs()[i].second == hn) nlayer.push_back(i);

    // Walk a domination chain until it closes on an equivalent pair. The
    // isotropy sets grow strictly along the chain, so this terminates.
    std::size_t mi = mlayer.front();
    std::size_t matched_m = 0, matched_n = 0;
    bool matched = false;
    const std::size_t guard_max = static_cast<std::size_t>(lat.num_nodes()) + 2;
    for (std::size_t guard = 0; guard <= guard_max && !matched; ++guard) {
      const int x = m.pairs()[mi].first;
      std::size_t ni_found = nlayer.size();
      for (std::size_t k = 0; k < nlayer.size(); ++k)
        if (lat.dominates(x, n.pairs()[nlayer[k]].first)) {
          ni_found = k;
          break;
        }
      if (ni_found == nlayer.size()) {
        res.reason = "atom " + lat.atom_id(x) + " at twist " + std::to_string(hm) +
                     " dominates no summand of the other motive at that twist";
        return res;
      }
      const std::size_t ni = nlayer[ni_found];
      const int y = n.pairs()[ni].first;
      if (lat.equivalent_atoms(x, y)) {
        matched_m = mi;
        matched_n = ni;
        matched = true;
        break;
      }
      std::size_t mi2_found = mlayer.size();
      for (std::size_t k = 0; k < mlayer.size(); ++k)
        if (lat.dominates(y, m.pairs()[mlayer[k]].first)) {
          mi2_found = k;
          break;
        }
      if (mi2_found == mlayer.size()) {
        res.reason = "atom " + lat.atom_id(y) + " at twist " + std::to_string(hm) +
                     " dominates no summand of the first motive at that twist";
        return res;
      }
      mi = mlayer[mi2_found];
    }
    if (!matched) throw error("internal: domination chain failed to close");
    res.matching.emplace_back(matched_m, matched_n);
    mopen.erase(std::find(mopen.begin(), mopen.end(), matched_m));
    nopen.erase(std::find(nopen.begin(), nopen.end(), matched_n));
  }
  res.isomorphic = true;
  res.reason.clear();
  std::sort(res.matching.begin(), res.matching.end());
  return res;
}

LaurentPoly tensor_trace(const FormalMotive& m, const FormalMotive& n, int node) {
  check_same_lattice(m, n);
  return tate_trace(m, node) * tate_trace(n, node);
}

CancellationResult cancellation_check(const FormalMotive& m, const FormalMotive& n,
                                      const FormalMotive& nprime) {
  check_same_lattice(m, n);
  check_same_lattice(m, nprime);
  if (m.empty() || n.empty() || nprime.empty())
    throw error("cancellation requires three nonzero motives");
  const auto& lat = *m.lattice();
  for (int e = 0; e < lat.num_nodes(); ++e) {
    const LaurentPoly tm = tate_trace(m, e);
    if (tm.is_zero() && !tate_trace(n, e).is_zero())
      throw error("cancellation hypotheses not satisfied: N is isotropic at node " +
                  lat.node_id(e) + " where M is not");
    if (tm.is_zero() && !tate_trace(nprime, e).is_zero())
      throw error("cancellation hypotheses not satisfied: N' is isotropic at node " +
                  lat.node_id(e) + " where M is not");
    if (tm * tate_trace(n, e) != tm * tate_trace(nprime, e))
      throw error("cancellation hypotheses not satisfied: tensor traces with M differ at node " +
                  lat.node_id(e));
  }
  CancellationResult res;
  res.ok = true;
  for (int e = 0; e < lat.num_nodes(); ++e) {
    const LaurentPoly tn = tate_trace(n, e);
    const LaurentPoly tnp = tate_trace(nprime, e);
    if (tn != tnp) {
      res.ok = false;
      res.violation = lat.node_id(e);
      return res;
    }
    res.certificate.push_back(lat.node_id(e) + ": " + tn.str());
  }
  return res;
}

}  // namespace motkit
