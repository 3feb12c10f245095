#include "mcd/design.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mcd/comb.hpp"

namespace mcd {

std::string structure_name(Structure s) {
  switch (s) {
    case Structure::Steiner: return "Steiner";
    case Structure::GDD: return "GDD";
    case Structure::TD: return "TD";
    case Structure::CQS: return "CQS";
    case Structure::IncompleteSTS: return "IncompleteSTS";
    case Structure::IncompleteSQS: return "IncompleteSQS";
    case Structure::Fan1: return "Fan1";
  }
  throw InputError("unknown structure");
}

Structure parse_structure(const std::string& s) {
  if (s == "Steiner") return Structure::Steiner;
  if (s == "GDD") return Structure::GDD;
  if (s == "TD") return Structure::TD;
  if (s == "CQS") return Structure::CQS;
  if (s == "IncompleteSTS") return Structure::IncompleteSTS;
  if (s == "IncompleteSQS") return Structure::IncompleteSQS;
  if (s == "Fan1") return Structure::Fan1;
  throw InputError("unknown structure name: " + s);
}

namespace {
const std::pair<Claim, const char*> kClaimNames[] = {
    {Claim::SQS, "SQS"},
    {Claim::mcDSQS, "mcDSQS"},
    {Claim::RDSQS, "RDSQS"},
    {Claim::gcDSQS_vh, "gcDSQS_vh"},
    {Claim::STS, "STS"},
    {Claim::mcSTS, "mcSTS"},
    {Claim::KTS, "KTS"},
    {Claim::KTS_vh, "KTS_vh"},
    {Claim::gcSTS, "gcSTS"},
    {Claim::gcGDD, "gcGDD"},
    {Claim::RGDD, "RGDD"},
    {Claim::KF, "KF"},
    {Claim::gcDCQS, "gcDCQS"},
    {Claim::RDCQS, "RDCQS"},
    {Claim::c1DCQS, "c1DCQS"},
    {Claim::c2DCQS, "c2DCQS"},
    {Claim::RDGDD34, "RDGDD34"},
    {Claim::FDGDD34, "FDGDD34"},
    {Claim::RDTD34, "RDTD34"},
    {Claim::RDS, "RDS"},
    {Claim::RSQS2star, "RSQS2star"},
    {Claim::FG1, "FG1"},
};
}  // namespace

std::string claim_name(Claim c) {
  for (const auto& [k, n] : kClaimNames)
    if (k == c) return n;
  throw InputError("unknown claim");
}

std::optional<Claim> try_parse_claim(const std::string& s) {
  std::string low;
  for (char ch : s) low.push_back(static_cast<char>(std::tolower(ch)));
  for (const auto& [k, n] : kClaimNames) {
    std::string cand;
    for (const char* p = n; *p; ++p)
      cand.push_back(static_cast<char>(std::tolower(*p)));
    if (low == cand) return k;
  }
  return std::nullopt;
}

Claim parse_claim(const std::string& s) {
  auto c = try_parse_claim(s);
  if (!c) throw InputError("unknown kind: " + s);
  return *c;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL");
  if (!violations.empty()) {
    os << " (" << violations.size();
    if (suppressed) os << "+" << suppressed << " suppressed";
    os << " violations)";
    for (const auto& viol : violations)
      os << "\n  [" << viol.code << "] " << viol.witness;
  }
  return os.str();
}

DesignInstance canonicalize(const DesignInstance& d) {
  DesignInstance out = d;
  for (auto& b : out.blocks) std::sort(b.begin(), b.end());
  if (out.structure == Structure::Fan1) {
    if (out.fan1_count < 0 ||
        out.fan1_count > static_cast<int>(out.blocks.size()))
      throw InputError("Fan1 design with invalid fan1_count");
    // Sort and dedup each layer separately so the boundary stays meaningful.
    auto mid = out.blocks.begin() + out.fan1_count;
    std::sort(out.blocks.begin(), mid);
    std::sort(mid, out.blocks.end());
    std::vector<Block> fan(out.blocks.begin(), mid), tail(mid, out.blocks.end());
    size_t before = fan.size() + tail.size();
    fan.erase(std::unique(fan.begin(), fan.end()), fan.end());
    tail.erase(std::unique(tail.begin(), tail.end()), tail.end());
    out.fan1_count = static_cast<int>(fan.size());
    out.blocks = std::move(fan);
    out.blocks.insert(out.blocks.end(), tail.begin(), tail.end());
    out.canonical_dups_removed = static_cast<int>(before - out.blocks.size());
  } else {
    std::sort(out.blocks.begin(), out.blocks.end());
    size_t before = out.blocks.size();
    out.blocks.erase(std::unique(out.blocks.begin(), out.blocks.end()),
                     out.blocks.end());
    out.canonical_dups_removed = static_cast<int>(before - out.blocks.size());
  }
  for (auto& g : out.groups) std::sort(g.begin(), g.end());
  std::sort(out.groups.begin(), out.groups.end());
  std::sort(out.stem.begin(), out.stem.end());
  std::sort(out.hole.begin(), out.hole.end());
  std::sort(out.K.begin(), out.K.end());
  return out;
}

VerifyReport check_well_formed(const DesignInstance& d) {
  VerifyReport r;
  if (d.v <= 0) r.fail("shape", "v must be positive");
  if (d.t != 2 && d.t != 3)
    r.fail("shape", "t must be 2 or 3, got " + std::to_string(d.t));
  if (d.K.empty()) r.fail("shape", "K must be nonempty");
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& b = d.blocks[i];
    if (!std::binary_search(d.K.begin(), d.K.end(),
                            static_cast<int>(b.size()))) {
      r.fail("block-size", "block " + std::to_string(i) + " " + block_str(b) +
                               " has size outside K");
      continue;
    }
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] < 0 || b[j] >= d.v) {
        r.fail("block-range", "block " + std::to_string(i) + " " +
                                  block_str(b) + " has a label outside 0.." +
                                  std::to_string(d.v - 1));
        break;
      }
      if (j > 0 && b[j] <= b[j - 1]) {
        r.fail("block-sorted", "block " + std::to_string(i) + " " +
                                   block_str(b) +
                                   " is not strictly increasing");
        break;
      }
    }
  }
  for (size_t i = 1; i < d.blocks.size(); ++i) {
    bool in_same_layer = d.structure != Structure::Fan1 ||
                         (static_cast<int>(i) != d.fan1_count);
    if (in_same_layer && d.blocks[i] < d.blocks[i - 1])
      r.fail("blocks-sorted", "block list not sorted at index " +
                                  std::to_string(i) + " (canonicalize first)");
    if (in_same_layer && d.blocks[i] == d.blocks[i - 1])
      r.fail("blocks-dup",
             "duplicate block " + block_str(d.blocks[i]) + " at index " +
                 std::to_string(i));
  }

  auto check_point_set = [&](const std::vector<int>& pts, const char* what) {
    for (size_t j = 0; j < pts.size(); ++j) {
      if (pts[j] < 0 || pts[j] >= d.v)
        r.fail("shape", std::string(what) + " contains out-of-range label " +
                            std::to_string(pts[j]));
      if (j > 0 && pts[j] <= pts[j - 1])
        r.fail("shape", std::string(what) + " not strictly increasing");
    }
  };
  check_point_set(d.stem, "stem");
  check_point_set(d.hole, "hole");
  for (const auto& g : d.groups) check_point_set(g, "group");

  bool grouped = d.structure == Structure::GDD || d.structure == Structure::TD ||
                 d.structure == Structure::CQS ||
                 d.structure == Structure::Fan1;
  if (grouped) {
    std::vector<int> seen(d.v, 0);
    for (int p : d.stem) seen[p]++;
    for (const auto& g : d.groups) {
      if (g.empty()) r.fail("shape", "empty group");
      for (int p : g) seen[p]++;
    }
    // Stem is only meaningful for CQS and for GDDs derived from one (where a
    // leftover point rides along); either way groups+stem partition X.
    for (int p = 0; p < d.v; ++p) {
      if (seen[p] != 1) {
        r.fail("shape", "point " + std::to_string(p) +
                            " appears in groups/stem " +
                            std::to_string(seen[p]) + " times (want 1)");
        break;
      }
    }
  } else if (!d.groups.empty()) {
    r.fail("shape",
           "structure " + structure_name(d.structure) + " must not set groups");
  }
  if (d.structure == Structure::CQS && d.stem.empty() && !d.groups.empty()) {
    // CQS with s = 0 is allowed; nothing to check.
  }
  bool holey = d.structure == Structure::IncompleteSTS ||
               d.structure == Structure::IncompleteSQS;
  if (!holey && !d.hole.empty())
    r.fail("shape",
           "structure " + structure_name(d.structure) + " must not set a hole");
  if (d.structure == Structure::Fan1) {
    if (d.fan1_count < 0 || d.fan1_count > static_cast<int>(d.blocks.size()))
      r.fail("shape", "fan1_count out of range");
  } else if (d.fan1_count != -1) {
    r.fail("shape", "fan1_count set on a non-Fan1 structure");
  }
  if (d.structure == Structure::TD) {
    for (size_t i = 0; i < d.blocks.size(); ++i) {
      std::set<int> gs;
      for (int p : d.blocks[i]) gs.insert(group_of(d, p));
      if (gs.size() != d.blocks[i].size() || gs.count(-1)) {
        r.fail("td-transverse", "block " + block_str(d.blocks[i]) +
                                    " does not meet distinct groups");
        break;
      }
    }
  }
  return r;
}

int group_of(const DesignInstance& d, int p) {
  for (size_t i = 0; i < d.groups.size(); ++i)
    if (std::binary_search(d.groups[i].begin(), d.groups[i].end(), p))
      return static_cast<int>(i);
  return -1;
}

bool uniform_group_type(const DesignInstance& d, int& g, int& n) {
  if (d.groups.empty()) return false;
  g = static_cast<int>(d.groups[0].size());
  n = static_cast<int>(d.groups.size());
  for (const auto& grp : d.groups)
    if (static_cast<int>(grp.size()) != g) return false;
  return true;
}

DesignInstance derive_at(const DesignInstance& d, int x) {
  if (d.t != 3)
    throw InputError("derive_at requires t = 3, design has t = " +
                     std::to_string(d.t));
  if (x < 0 || x >= d.v)
    throw InputError("derive_at: point " + std::to_string(x) +
                     " out of range");
  if (d.structure == Structure::Fan1)
    throw InputError("derive_at is not defined for Fan1 designs");

  auto relabel = [&](int p) { return p < x ? p : p - 1; };
  DesignInstance out;
  out.v = d.v - 1;
  out.t = 2;
  std::set<int> sizes;
  bool hit = false;
  for (const Block& b : d.blocks) {
    if (!std::binary_search(b.begin(), b.end(), x)) continue;
    hit = true;
    Block nb;
    nb.reserve(b.size() - 1);
    for (int p : b)
      if (p != x) nb.push_back(relabel(p));
    sizes.insert(static_cast<int>(nb.size()));
    out.blocks.push_back(std::move(nb));
  }
  if (!hit)
    throw InputError("derive_at: point " + std::to_string(x) +
                     " lies on no block");
  out.K.assign(sizes.begin(), sizes.end());

  auto relabel_set = [&](const std::vector<int>& s, bool drop_x) {
    std::vector<int> r;
    for (int p : s) {
      if (p == x) {
        if (drop_x) continue;
        throw InputError("derive_at: unexpected derived point in set");
      }
      r.push_back(relabel(p));
    }
    return r;
  };

  switch (d.structure) {
    case Structure::Steiner: {
      out.structure = Structure::Steiner;
      break;
    }
    case Structure::IncompleteSQS: {
      bool in_hole = std::binary_search(d.hole.begin(), d.hole.end(), x);
      if (in_hole) {
        out.structure = Structure::IncompleteSTS;
        out.hole = relabel_set(d.hole, true);
      } else {
        // Pairs inside the hole are covered via triples through x outside it,
        // so the derived design is a complete STS.
        out.structure = Structure::Steiner;
      }
      break;
    }
    case Structure::CQS: {
      int gi = group_of(d, x);
      if (gi >= 0) {
        out.structure = Structure::IncompleteSTS;
        std::vector<int> h = d.groups[gi];
        h.insert(h.end(), d.stem.begin(), d.stem.end());
        std::sort(h.begin(), h.end());
        out.hole = relabel_set(h, true);
      } else {
        // Stem point: blocks through it are transverse to the groups, so the
        // derived design is a GDD(2,3) over the groups; the other stem point
        // rides along as a leftover stem on no derived block.
        out.structure = Structure::GDD;
        for (const auto& g : d.groups) out.groups.push_back(relabel_set(g, false));
        out.stem = relabel_set(d.stem, true);
      }
      break;
    }
    case Structure::GDD:
    case Structure::TD: {
      int gi = group_of(d, x);
      if (gi < 0)
        throw InputError("derive_at: GDD point outside every group");
      out.structure = Structure::GDD;
      for (size_t i = 0; i < d.groups.size(); ++i)
        if (static_cast<int>(i) != gi)
          out.groups.push_back(relabel_set(d.groups[i], false));
      // Leftover co-group points lie on no derived block; keep them as a stem
      // so the point set still partitions and coverage knows to skip them.
      out.stem = relabel_set(d.groups[gi], true);
      break;
    }
    case Structure::IncompleteSTS:
    case Structure::Fan1:
      throw InputError("derive_at: unsupported structure");
  }
  std::sort(out.groups.begin(), out.groups.end());
  for (const auto& [k, p] : d.label_map)
    if (p != x) out.label_map[k] = relabel(p);
  return canonicalize(out);
}

std::vector<int> resolve_scope(const DesignInstance& d, const ClassScope& s,
                               int derived_point) {
  std::vector<char> drop(d.v, 0);
  if (derived_point >= 0) drop[derived_point] = 1;
  auto drop_set = [&](const std::vector<int>& pts) {
    for (int p : pts) drop[p] = 1;
  };
  auto need_group = [&](int gi) -> const std::vector<int>& {
    if (gi < 0 || gi >= static_cast<int>(d.groups.size()))
      throw InputError("scope references group index " + std::to_string(gi) +
                       " outside 0.." + std::to_string(d.groups.size() ? d.groups.size() - 1 : 0));
    return d.groups[gi];
  };
  switch (s.base) {
    case ScopeBase::All:
      break;
    case ScopeBase::MinusPoint:
      if (s.a < 0 || s.a >= d.v)
        throw InputError("scope point out of range");
      drop[s.a] = 1;
      break;
    case ScopeBase::MinusGroup:
      drop_set(need_group(s.a));
      break;
    case ScopeBase::MinusGroupStem:
      drop_set(need_group(s.a));
      drop_set(d.stem);
      break;
    case ScopeBase::MinusHole:
      drop_set(d.hole);
      break;
    case ScopeBase::MinusStem:
      drop_set(d.stem);
      break;
    case ScopeBase::MinusGroupPair:
      drop_set(need_group(s.a));
      drop_set(need_group(s.b));
      break;
  }
  std::vector<int> ground;
  for (int p = 0; p < d.v; ++p)
    if (!drop[p]) ground.push_back(p);
  return ground;
}

int chromatic_index_sts(int v) {
  if (v < 3 || (v % 6 != 1 && v % 6 != 3))
    throw InputError("no STS(v) for v = " + std::to_string(v));
  if (v == 7) return 7;
  if (v == 13) return 8;
  return v % 6 == 3 ? (v - 1) / 2 : (v + 1) / 2;
}

}  // namespace mcd
