#pragma once

#include <string>
#include <vector>

#include "mcd/design.hpp"

namespace mcd {

// A permutation of {0..v-1} stored as an image table.
struct Perm {
  std::vector<int> img;

  static Perm identity(int v);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int p) const { return img.at(p); }
  Block apply(const Block& b) const;           // image, re-sorted
  std::vector<int> apply_set(const std::vector<int>& s) const;
  Perm compose(const Perm& then) const;        // x -> then(this(x))
  Perm inverse() const;
  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return img < o.img; }
};

// Parse cycle notation "(0,1,2)(5,6)"; labels may be names from label_map.
// Fixed points may be omitted.  Whitespace is ignored.
Perm parse_cycles(const std::string& s, int v,
                  const std::map<std::string, int>& label_map = {});
std::string format_cycles(const Perm& p);
std::string format_oneline(const Perm& p);
Perm parse_oneline(const std::string& s);

// All elements of the group generated by gens (BFS over composition).
// Throws CapabilityError if the group exceeds max_order.
std::vector<Perm> group_elements(const std::vector<Perm>& gens,
                                 size_t max_order = 256);

struct OrbitExpansion {
  std::vector<Block> blocks;        // canonical union of all orbits, deduped
  std::vector<int> orbit_lengths;   // per base block, in input order
};

// Orbits of base blocks under the group generated by gens.
OrbitExpansion expand_orbits(const std::vector<Block>& bases,
                             const std::vector<Perm>& gens, int v,
                             size_t max_order = 256);

struct AutomorphismCheck {
  bool ok = true;
  std::string witness;  // first failure found
};

// Does sigma map the design onto itself?  Blocks must map onto the block
// multiset, the stem setwise, the hole setwise, and each group onto a group.
AutomorphismCheck check_automorphism(const DesignInstance& d, const Perm& sigma);

// Transport a coloring attached at from_point to the point sigma(from_point).
// sigma must pass check_automorphism.  Block indices are remapped through the
// canonical block order; symbolic scopes follow sigma (group indices map to
// the image group's index).  Pass from_point = -1 for self colorings.
Coloring transport_coloring(const DesignInstance& d, const Coloring& col,
                            const Perm& sigma, int from_point);

}  // namespace mcd
