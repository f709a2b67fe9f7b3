#include "motkit/weyl.hpp"

#include <algorithm>

#include "motkit/common.hpp"

namespace motkit {

RootPerm compose_root_perms(const RootPerm& f, const RootPerm& g) {
  RootPerm out(g.size());
  for (std::size_t r = 0; r < g.size(); ++r) {
    const std::int32_t s = g[r];
    out[r] = (s > 0) ? f[s - 1] : static_cast<std::int32_t>(-f[-s - 1]);
  }
  return out;
}

RootPerm inverse_root_perm(const RootPerm& f) {
  RootPerm out(f.size());
  for (std::size_t r = 0; r < f.size(); ++r) {
    const std::int32_t s = f[r];
    if (s > 0)
      out[s - 1] = static_cast<std::int32_t>(r + 1);
    else
      out[-s - 1] = -static_cast<std::int32_t>(r + 1);
  }
  return out;
}

std::size_t WeylGroup::PermHash::operator()(const RootPerm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (std::int32_t v : p) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

WeylGroup WeylGroup::generate(RootSystem roots, WeylOptions options) {
  const std::uint64_t order = classical_order(roots.diagram());
  if (order > options.max_elements)
    throw error("group too large: order " + std::to_string(order) +
                " exceeds enumeration bound " + std::to_string(options.max_elements));

  WeylGroup w;
  w.roots_ = std::move(roots);
  const int n = w.roots_.rank();
  const int np = w.roots_.num_positive();

  std::vector<RootPerm> gens(n, RootPerm(np));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < np; ++r) gens[i][r] = w.roots_.reflect(i, r);

  RootPerm id(np);
  for (int r = 0; r < np; ++r) id[r] = r + 1;
  w.perms_.push_back(id);
  w.index_.emplace(std::move(id), 0);

  for (std::size_t e = 0; e < w.perms_.size(); ++e) {
    for (int i = 0; i < n; ++i) {
      RootPerm next = compose_root_perms(w.perms_[e], gens[i]);
      if (!w.index_.count(next)) {
        w.index_.emplace(next, static_cast<int>(w.perms_.size()));
        w.perms_.push_back(std::move(next));
      }
    }
  }
  if (w.perms_.size() != order)
    throw error("internal: enumerated " + std::to_string(w.perms_.size()) +
                " elements, expected " + std::to_string(order));

  w.lengths_.resize(w.perms_.size());
  for (std::size_t e = 0; e < w.perms_.size(); ++e) {
    int l = 0;
    for (std::int32_t v : w.perms_[e])
      if (v < 0) ++l;
    w.lengths_[e] = l;
  }
  w.gen_elem_.resize(n);
  for (int i = 0; i < n; ++i) w.gen_elem_[i] = w.index_.at(gens[i]);
  return w;
}

int WeylGroup::generator(int vertex_label) const {
  return gen_elem_.at(diagram().position_of(vertex_label));
}

int WeylGroup::multiply(int a, int b) const {
  return index_.at(compose_root_perms(perms_[a], perms_[b]));
}

int WeylGroup::inverse(int a) const { return index_.at(inverse_root_perm(perms_[a])); }

int WeylGroup::index_of(const RootPerm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw error("internal: root permutation is not a group element");
  return it->second;
}

bool WeylGroup::sends_simple_positive(int e, int vertex_label) const {
  // Positive roots are enumerated with the simple roots first, in vertex
  // position order.
  return perms_[e][diagram().position_of(vertex_label)] > 0;
}

void WeylGroup::check_subset(const std::set<int>& J) const {
  for (int v : J)
    if (!diagram().has_vertex(v)) throw error("unknown vertex: " + std::to_string(v));
}

std::set<int> WeylGroup::complement(const std::set<int>& theta) const {
  std::set<int> out;
  for (int v : diagram().vertices())
    if (!theta.count(v)) out.insert(v);
  return out;
}

std::vector<int> WeylGroup::parabolic_elements(const std::set<int>& J) const {
  check_subset(J);
  std::vector<int> elems{identity()};
  std::vector<bool> seen(size(), false);
  seen[identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int v : J) {
      const int next = multiply(elems[i], generator(v));
      if (!seen[next]) {
        seen[next] = true;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> WeylGroup::min_coset_reps(const std::set<int>& J) const {
  check_subset(J);
  std::vector<int> reps;
  for (int e = 0; e < static_cast<int>(size()); ++e) {
    bool minimal = true;
    for (int v : J)
      if (!sends_simple_positive(e, v)) {
        minimal = false;
        break;
      }
    if (minimal) reps.push_back(e);
  }
  std::sort(reps.begin(), reps.end(),
            [&](int a, int b) { return std::pair(length(a), a) < std::pair(length(b), b); });
  return reps;
}

std::vector<WeylGroup::DoubleCoset> WeylGroup::min_double_coset_reps(
    const std::set<int>& J, const std::set<int>& K) const {
  check_subset(J);
  check_subset(K);
  // Partition W into double cosets W_J w W_K by closing under left
  // multiplication by J-generators and right multiplication by K-generators.
  std::vector<int> comp(size(), -1);
  std::vector<std::uint64_t> comp_size;
  std::vector<int> stack;
  for (int start = 0; start < static_cast<int>(size()); ++start) {
    if (comp[start] != -1) continue;
    const int c = static_cast<int>(comp_size.size());
    comp_size.push_back(0);
    comp[start] = c;
    stack.assign(1, start);
    while (!stack.empty()) {
      const int e = stack.back();
      stack.pop_back();
      ++comp_size[c];
      for (int v : J) {
        const int next = multiply(generator(v), e);
        if (comp[next] == -1) {
          comp[next] = c;
          stack.push_back(next);
        }
      }
      for (int v : K) {
        const int next = multiply(e, generator(v));
        if (comp[next] == -1) {
          comp[next] = c;
          stack.push_back(next);
        }
      }
    }
  }

  std::vector<DoubleCoset> out(comp_size.size());
  std::vector<bool> found(comp_size.size(), false);
  for (int e = 0; e < static_cast<int>(size()); ++e) {
    bool minimal = true;
    for (int v : K)
      if (!sends_simple_positive(e, v)) {
        minimal = false;
        break;
      }
    if (minimal) {
      const int inv = inverse(e);
      for (int v : J)
        if (!sends_simple_positive(inv, v)) {
          minimal = false;
          break;
        }
    }
    if (!minimal) continue;
    const int c = comp[e];
    if (found[c])
      throw error("internal: double coset has two two-sided minimal representatives");
    found[c] = true;
    out[c] = {e, comp_size[c]};
  }
  for (bool f : found)
    if (!f) throw error("internal: double coset without a two-sided minimal representative");
  std::sort(out.begin(), out.end(), [&](const DoubleCoset& a, const DoubleCoset& b) {
    return std::pair(length(a.rep), a.rep) < std::pair(length(b.rep), b.rep);
  });
  return out;
}

LaurentPoly WeylGroup::poincare(const std::set<int>& theta) const {
  check_subset(theta);
  LaurentPoly p;
  for (int e : min_coset_reps(complement(theta))) p.add_term(length(e), 1);
  return p;
}

LaurentPoly WeylGroup::parabolic_poincare(const std::set<int>& J,
                                          const std::set<int>& theta_in_J) const {
  check_subset(J);
  for (int v : theta_in_J)
    if (!J.count(v))
      throw error("parabolic type must be a subset of the Levi vertex set");
  std::set<int> levi;
  for (int v : J)
    if (!theta_in_J.count(v)) levi.insert(v);
  LaurentPoly p;
  for (int e : parabolic_elements(J)) {
    bool minimal = true;
    for (int v : levi)
      if (!sends_simple_positive(e, v)) {
        minimal = false;
        break;
      }
    if (minimal) p.add_term(length(e), 1);
  }
  return p;
}

LaurentPoly WeylGroup::length_generating_function() const {
  LaurentPoly p;
  for (std::size_t e = 0; e < size(); ++e) p.add_term(lengths_[e], 1);
  return p;
}

std::vector<int> WeylGroup::fundamental_degrees(const DynkinDiagram& diagram) {
  std::vector<int> degs;
  for (const auto& comp : diagram.components()) {
    switch (comp.type) {
      case 'A':
        for (int d = 2; d <= comp.rank + 1; ++d) degs.push_back(d);
        break;
      case 'B':
      case 'C':
        for (int d = 2; d <= 2 * comp.rank; d += 2) degs.push_back(d);
        break;
      case 'D':
        for (int d = 2; d <= 2 * (comp.rank - 1); d += 2) degs.push_back(d);
        degs.push_back(comp.rank);
        break;
      case 'E':
        if (comp.rank == 6)
          degs.insert(degs.end(), {2, 5, 6, 8, 9, 12});
        else if (comp.rank == 7)
          degs.insert(degs.end(), {2, 6, 8, 10, 12, 14, 18});
        else
          degs.insert(degs.end(), {2, 8, 12, 14, 18, 20, 24, 30});
        break;
      case 'F':
        degs.insert(degs.end(), {2, 6, 8, 12});
        break;
      case 'G':
        degs.insert(degs.end(), {2, 6});
        break;
    }
  }
  return degs;
}

std::uint64_t WeylGroup::classical_order(const DynkinDiagram& diagram) {
  std::uint64_t order = 1;
  for (int d : fundamental_degrees(diagram)) order *= static_cast<std::uint64_t>(d);
  return order;
}

LaurentPoly WeylGroup::degree_product_poincare(const DynkinDiagram& diagram) {
  LaurentPoly p = LaurentPoly::one();
  for (int d : fundamental_degrees(diagram)) {
    LaurentPoly factor;
    for (int i = 0; i < d; ++i) factor.add_term(i, 1);
    p *= factor;
  }
  return p;
}

}  // namespace motkit
