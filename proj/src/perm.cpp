#include "mcd/perm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mcd {

Perm Perm::identity(int v) {
  Perm p;
  p.img.resize(v);
  for (int i = 0; i < v; ++i) p.img[i] = i;
  return p;
}

Block Perm::apply(const Block& b) const {
  Block out;
  out.reserve(b.size());
  for (int p : b) out.push_back(img.at(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Perm::apply_set(const std::vector<int>& s) const {
  return apply(s);
}

Perm Perm::compose(const Perm& then) const {
  Perm out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) out.img[i] = then.img.at(img[i]);
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) out.img[img[i]] = static_cast<int>(i);
  return out;
}

Perm parse_cycles(const std::string& s, int v,
                  const std::map<std::string, int>& label_map) {
  Perm p = Perm::identity(v);
  std::vector<char> moved(v, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw InputError("cycle notation: expected '(' in " + s);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      std::string tok;
      while (i < s.size() && s[i] != ',' && s[i] != ')' &&
             !std::isspace(static_cast<unsigned char>(s[i])))
        tok.push_back(s[i++]);
      if (tok.empty()) throw InputError("cycle notation: empty label in " + s);
      int label;
      if (auto it = label_map.find(tok); it != label_map.end()) {
        label = it->second;
      } else {
        try {
          label = std::stoi(tok);
        } catch (...) {
          throw InputError("cycle notation: unknown label '" + tok + "'");
        }
      }
      if (label < 0 || label >= v)
        throw InputError("cycle notation: label " + std::to_string(label) +
                         " out of range 0.." + std::to_string(v - 1));
      cyc.push_back(label);
      skip_ws();
      if (i >= s.size()) throw InputError("cycle notation: unterminated cycle");
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (s[i] == ')') {
        ++i;
        break;
      }
      throw InputError("cycle notation: unexpected character in " + s);
    }
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
      if (moved[from])
        throw InputError("cycle notation: label " + std::to_string(from) +
                         " appears twice");
      moved[from] = 1;
      p.img[from] = to;
    }
    skip_ws();
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.img.size(), 0);
  bool any = false;
  for (size_t start = 0; start < p.img.size(); ++start) {
    if (seen[start] || p.img[start] == static_cast<int>(start)) continue;
    os << '(';
    size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      if (!first) os << ',';
      os << cur;
      first = false;
      cur = static_cast<size_t>(p.img[cur]);
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

std::string format_oneline(const Perm& p) { return join_ints(p.img, " "); }

Perm parse_oneline(const std::string& s) {
  Perm p;
  std::istringstream is(s);
  int x;
  while (is >> x) p.img.push_back(x);
  std::vector<char> seen(p.img.size(), 0);
  for (int y : p.img) {
    if (y < 0 || y >= static_cast<int>(p.img.size()) || seen[y])
      throw InputError("one-line permutation is not a bijection: " + s);
    seen[y] = 1;
  }
  return p;
}

std::vector<Perm> group_elements(const std::vector<Perm>& gens,
                                 size_t max_order) {
  if (gens.empty()) return {};
  int v = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != v) throw InputError("generators act on different sets");
  std::set<Perm> seen;
  std::vector<Perm> frontier{Perm::identity(v)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier) {
      for (const Perm& g : gens) {
        Perm c = e.compose(g);
        if (seen.insert(c).second) {
          if (seen.size() > max_order)
            throw CapabilityError(
                "group order exceeds cap " + std::to_string(max_order) +
                "; raise max_order explicitly if intended");
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

OrbitExpansion expand_orbits(const std::vector<Block>& bases,
                             const std::vector<Perm>& gens, int v,
                             size_t max_order) {
  for (const Perm& g : gens)
    if (g.degree() != v)
      throw InputError("orbit expansion: generator degree != v");
  std::vector<Perm> elems = group_elements(gens, max_order);
  OrbitExpansion out;
  std::set<Block> all;
  for (const Block& base : bases) {
    std::set<Block> orbit;
    for (const Perm& e : elems) orbit.insert(e.apply(base));
    out.orbit_lengths.push_back(static_cast<int>(orbit.size()));
    all.insert(orbit.begin(), orbit.end());
  }
  out.blocks.assign(all.begin(), all.end());
  return out;
}

AutomorphismCheck check_automorphism(const DesignInstance& d,
                                     const Perm& sigma) {
  AutomorphismCheck r;
  if (sigma.degree() != d.v) {
    r.ok = false;
    r.witness = "permutation degree != v";
    return r;
  }
  if (sigma.apply(d.stem) != d.stem) {
    r.ok = false;
    r.witness = "stem not preserved setwise";
    return r;
  }
  if (sigma.apply(d.hole) != d.hole) {
    r.ok = false;
    r.witness = "hole not preserved setwise";
    return r;
  }
  std::set<std::vector<int>> gset(d.groups.begin(), d.groups.end());
  for (const auto& g : d.groups) {
    if (!gset.count(sigma.apply(g))) {
      r.ok = false;
      r.witness = "group " + block_str(g) + " does not map onto a group";
      return r;
    }
  }
  std::set<Block> bset(d.blocks.begin(), d.blocks.end());
  for (const Block& b : d.blocks) {
    Block im = sigma.apply(b);
    if (!bset.count(im)) {
      r.ok = false;
      r.witness = "block " + block_str(b) + " maps to non-block " + block_str(im);
      return r;
    }
  }
  return r;
}

Coloring transport_coloring(const DesignInstance& d, const Coloring& col,
                            const Perm& sigma, int from_point) {
  auto chk = check_automorphism(d, sigma);
  if (!chk.ok)
    throw InputError("transport requires an automorphism: " + chk.witness);
  std::map<Block, int> index;
  for (size_t i = 0; i < d.blocks.size(); ++i)
    index[d.blocks[i]] = static_cast<int>(i);
  (void)from_point;  // the caller attaches the result at sigma(from_point)
  Coloring out;
  out.classes.reserve(col.classes.size());
  for (const ColorClass& cc : col.classes) {
    ColorClass nc;
    nc.scope = cc.scope;
    switch (cc.scope.base) {
      case ScopeBase::MinusPoint:
        nc.scope.a = sigma(cc.scope.a);
        break;
      case ScopeBase::MinusGroup:
      case ScopeBase::MinusGroupStem: {
        auto im = sigma.apply(d.groups.at(cc.scope.a));
        bool found = false;
        for (size_t i = 0; i < d.groups.size(); ++i)
          if (d.groups[i] == im) {
            nc.scope.a = static_cast<int>(i);
            found = true;
            break;
          }
        if (!found) throw InputError("transport: image group not found");
        break;
      }
      case ScopeBase::MinusGroupPair: {
        for (int which = 0; which < 2; ++which) {
          int gi = which ? cc.scope.b : cc.scope.a;
          auto im = sigma.apply(d.groups.at(gi));
          bool found = false;
          for (size_t i = 0; i < d.groups.size(); ++i)
            if (d.groups[i] == im) {
              (which ? nc.scope.b : nc.scope.a) = static_cast<int>(i);
              found = true;
              break;
            }
          if (!found) throw InputError("transport: image group not found");
        }
        break;
      }
      case ScopeBase::All:
      case ScopeBase::MinusHole:
      case ScopeBase::MinusStem:
        break;
    }
    nc.blocks.reserve(cc.blocks.size());
    for (int bi : cc.blocks) {
      Block im = sigma.apply(d.blocks.at(bi));
      auto it = index.find(im);
      if (it == index.end())
        throw InputError("transport: image block not in design");
      nc.blocks.push_back(it->second);
    }
    std::sort(nc.blocks.begin(), nc.blocks.end());
    out.classes.push_back(std::move(nc));
  }
  return out;
}

}  // namespace mcd
