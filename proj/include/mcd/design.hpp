#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcd/common.hpp"

namespace mcd {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Structure: what kind of incidence structure the block list claims to be.
// This drives the coverage rule used during verification.
// ---------------------------------------------------------------------------
enum class Structure {
  Steiner,        // every t-subset covered exactly once
  GDD,            // transverse t-subsets once, within-group zero
  TD,             // GDD whose blocks meet every group exactly once
  CQS,            // triples inside stem+one-group zero, all others once
  IncompleteSTS,  // pairs inside the hole zero, all others once (t = 2)
  IncompleteSQS,  // triples inside the hole zero, all others once (t = 3)
  Fan1,           // a 2-design layer (the fan) plus a triple-rooted layer
};

std::string structure_name(Structure s);
Structure parse_structure(const std::string& s);

// ---------------------------------------------------------------------------
// Claimed kinds a certificate can carry.  Verification dispatches on this.
// ---------------------------------------------------------------------------
enum class Claim {
  SQS,        // S(3,4,v), no coloring requirements
  mcDSQS,     // SQS with a minimum coloring of every derived STS
  RDSQS,      // SQS with a resolvable derived STS (KTS) at every point
  gcDSQS_vh,  // SQS(v) whose derived designs restrict well to a hole
  STS,        // S(2,3,v)
  mcSTS,      // STS with a minimum proper block coloring
  KTS,        // resolvable STS
  KTS_vh,     // KTS whose coloring restricts to a subdesign hole
  gcSTS,      // STS minimum-colored so a hole's exterior is class-covered
  gcGDD,      // colored GDD(2,3) with per-group restricted classes
  RGDD,       // resolvable GDD(2,3)
  KF,         // Kirkman frame: per-group holey parallel classes
  gcDCQS,     // CQS(g^n:s) with colored derived designs at all points
  RDCQS,      // gcDCQS whose stem colorings are fully resolvable frames
  c1DCQS,     // gcDCQS variant: stem colorings have one distinguished group
  c2DCQS,     // gcDCQS variant: stem colorings resolve off the stem
  RDGDD34,    // GDD(3,4) with resolvable derived GDD(2,3) at every point
  FDGDD34,    // GDD(3,4) whose derived designs are Kirkman-frame colored
  RDTD34,     // TD(3,4) analogue of RDGDD34
  RDS,        // S(3,k+1,v) with a resolvable derived design at every point
  RSQS2star,  // SQS carrying three overlapped resolvable 2-design families
  FG1,        // fan design: 2-design fan layer plus triple layer
};

std::string claim_name(Claim c);
Claim parse_claim(const std::string& s);
// Lowercase CLI aliases ("mcdsqs", "rdcqs", ...) are accepted too.
std::optional<Claim> try_parse_claim(const std::string& s);

// ---------------------------------------------------------------------------
// Coloring classes and their scopes.
//
// A coloring attached to a point x partitions the blocks through x (stored as
// indices into the parent block list; the implied derived block is B\{x}).
// A self coloring partitions the whole block list.
//
// Every class carries a scope: the ground set its derived blocks must stay
// inside, and whether the class must cover that ground exactly (a parallel
// class) or merely pack into it (a partial parallel class).
//
// Scope grounds are symbolic so they survive relabeling and transport:
//   All            : X minus the derived point
//   MinusPoint(p)  : X minus {p} minus the derived point
//   MinusGroup(i)  : X minus group i minus the derived point
//   MinusGroupStem(i): X minus group i minus the stem minus the derived point
//   MinusHole      : X minus the hole minus the derived point
//   MinusStem      : X minus the stem minus the derived point
//   MinusGroupPair(i,j): X minus groups i and j minus the derived point
// ---------------------------------------------------------------------------
enum class ScopeBase {
  All,
  MinusPoint,
  MinusGroup,
  MinusGroupStem,
  MinusHole,
  MinusStem,
  MinusGroupPair,
};

struct ClassScope {
  ScopeBase base = ScopeBase::All;
  bool parallel = false;  // true: must cover the ground exactly (PC)
  int a = -1;             // point (MinusPoint) or group index, else -1
  int b = -1;             // second group index (MinusGroupPair), else -1

  bool operator==(const ClassScope&) const = default;
};

struct ColorClass {
  std::vector<int> blocks;  // indices into the parent block list, sorted
  ClassScope scope;

  bool operator==(const ColorClass&) const = default;
};

struct Coloring {
  std::vector<ColorClass> classes;

  bool operator==(const Coloring&) const = default;
};

// ---------------------------------------------------------------------------
// DesignInstance: the bare combinatorial object.
// ---------------------------------------------------------------------------
struct DesignInstance {
  int v = 0;
  int t = 3;
  std::vector<int> K{4};  // admissible block sizes, sorted ascending
  Structure structure = Structure::Steiner;
  std::vector<int> stem;                 // sorted; empty unless CQS/derived
  std::vector<std::vector<int>> groups;  // disjoint sorted groups
  std::vector<int> hole;                 // sorted; incomplete structures only
  std::vector<Block> blocks;
  // Fan1 only: blocks[0..fan1_count) form the 2-design layer, the rest the
  // triple layer.  -1 for every other structure.
  int fan1_count = -1;
  // Presentation labels ("a" -> 32) used when importing published tables.
  std::map<std::string, int> label_map;
  // Number of duplicate blocks removed by the last canonicalize() call.
  int canonical_dups_removed = 0;

  bool operator==(const DesignInstance& o) const {
    return v == o.v && t == o.t && K == o.K && structure == o.structure &&
           stem == o.stem && groups == o.groups && hole == o.hole &&
           blocks == o.blocks && fan1_count == o.fan1_count &&
           label_map == o.label_map;
  }
};

// ---------------------------------------------------------------------------
// RSQS2star structure: three overlapped resolvable 2-design families per
// index k, each sharing a common parallel class.
// ---------------------------------------------------------------------------
struct RsqsFamilies {
  // families[k][l]: block indices of the l-th S(2,4,v) at index k
  std::vector<std::array<std::vector<int>, 3>> families;
  // common_pcs[k]: block indices of the parallel class shared by all three
  std::vector<std::vector<int>> common_pcs;

  bool operator==(const RsqsFamilies&) const = default;
};

struct Violation {
  std::string code;     // stable short identifier, e.g. "coverage"
  std::string witness;  // human-readable minimal witness
};

struct VerifyReport {
  bool pass = true;
  std::vector<Violation> violations;
  json statistics = json::object();

  static constexpr size_t kMaxViolations = 16;
  size_t suppressed = 0;  // violations beyond the cap

  void fail(const std::string& code, const std::string& witness) {
    pass = false;
    if (violations.size() < kMaxViolations)
      violations.push_back({code, witness});
    else
      ++suppressed;
  }
  void merge(const VerifyReport& o) {
    if (!o.pass) pass = false;
    for (const auto& viol : o.violations) {
      if (violations.size() < kMaxViolations)
        violations.push_back(viol);
      else
        ++suppressed;
    }
    suppressed += o.suppressed;
  }
  std::string summary() const;
};

// ---------------------------------------------------------------------------
// CertifiedDesign: a design plus the claims and colorings that certify it.
// ---------------------------------------------------------------------------
struct CertifiedDesign {
  DesignInstance design;
  Claim claim = Claim::SQS;
  std::optional<Coloring> self_coloring;
  // point -> coloring of the derived design at that point (indices reference
  // design.blocks; only blocks through the point may appear).
  std::map<int, Coloring> derived_colorings;
  // c1DCQS stem colorings distinguish one group; -1 otherwise.
  int special_group = -1;
  std::optional<RsqsFamilies> rsqs;
  // Construction lineage: which operation produced this design, from which
  // ingredients, with which parameters.  Never used by verification.
  json provenance = json::object();
  // Result of the last verify_certificate run (constructions always fill it).
  VerifyReport report;
};

// ---------------------------------------------------------------------------
// Core operations.
// ---------------------------------------------------------------------------

// Sort each block, sort the block list lexicographically, drop duplicates.
// Idempotent; records the number of duplicates removed on the result.
DesignInstance canonicalize(const DesignInstance& d);

// Structural invariants that must hold before any coverage check: block
// sizes in K, labels in range, strict sortedness, stem/groups/hole shape.
VerifyReport check_well_formed(const DesignInstance& d);

// The derived design at point x: blocks through x with x removed, relabeled
// densely (labels above x shift down by one).  Structure maps as:
//   SQS -> STS;  S(3,k+1,v) -> S(2,k,v-1)
//   CQS at a group point -> IncompleteSTS with hole (G_x u S) \ {x}
//   CQS at a stem point  -> GDD(2,3) over the groups, leftover stem kept
//   GDD/TD(3,4) at x     -> GDD(2,3); G_x \ {x} becomes a leftover stem
//   IncompleteSQS at x   -> IncompleteSTS (hole shrinks if x was in it)
// Throws InputError for t != 3 or a point on no block.
DesignInstance derive_at(const DesignInstance& d, int x);

// Ground set a scope resolves to, for a coloring attached at derived_point
// (pass -1 for self colorings).  Sorted.
std::vector<int> resolve_scope(const DesignInstance& d, const ClassScope& s,
                               int derived_point);

// Group index containing point p, or -1.
int group_of(const DesignInstance& d, int p);

// True when the design has uniform group size; fills g and n.
bool uniform_group_type(const DesignInstance& d, int& g, int& n);

// chromatic index of the minimum block coloring of an STS(v):
//   v = 7 -> 7, v = 13 -> 8, otherwise (v+2 - (v mod 6 == 3 ? 2 : 0))/2,
// i.e. (v-1)/2 for v == 3 (mod 6) and (v+1)/2 for v == 1 (mod 6).
// Throws InputError unless v mod 6 is 1 or 3 (v >= 3).
int chromatic_index_sts(int v);

}  // namespace mcd
