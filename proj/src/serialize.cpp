#include "mcd/serialize.hpp"

#include <fstream>

namespace mcd {

namespace {

const char* scope_base_name(ScopeBase b) {
  switch (b) {
    case ScopeBase::All: return "all";
    case ScopeBase::MinusPoint: return "minus_point";
    case ScopeBase::MinusGroup: return "minus_group";
    case ScopeBase::MinusGroupStem: return "minus_group_stem";
    case ScopeBase::MinusHole: return "minus_hole";
    case ScopeBase::MinusStem: return "minus_stem";
    case ScopeBase::MinusGroupPair: return "minus_group_pair";
  }
  throw InputError("unknown scope base");
}

ScopeBase parse_scope_base(const std::string& s) {
  if (s == "all") return ScopeBase::All;
  if (s == "minus_point") return ScopeBase::MinusPoint;
  if (s == "minus_group") return ScopeBase::MinusGroup;
  if (s == "minus_group_stem") return ScopeBase::MinusGroupStem;
  if (s == "minus_hole") return ScopeBase::MinusHole;
  if (s == "minus_stem") return ScopeBase::MinusStem;
  if (s == "minus_group_pair") return ScopeBase::MinusGroupPair;
  throw InputError("unknown scope base: " + s);
}

json coloring_to_json(const Coloring& c) {
  json classes = json::array();
  for (const ColorClass& cc : c.classes) {
    json jc;
    jc["blocks"] = cc.blocks;
    jc["scope"] = scope_to_json(cc.scope);
    classes.push_back(std::move(jc));
  }
  json out;
  out["classes"] = std::move(classes);
  return out;
}

Coloring coloring_from_json(const json& j) {
  Coloring c;
  for (const json& jc : j.at("classes")) {
    ColorClass cc;
    cc.blocks = jc.at("blocks").get<std::vector<int>>();
    cc.scope = scope_from_json(jc.at("scope"));
    c.classes.push_back(std::move(cc));
  }
  return c;
}

}  // namespace

json scope_to_json(const ClassScope& s) {
  json j;
  j["mode"] = s.parallel ? "PC" : "PPC";
  j["base"] = scope_base_name(s.base);
  switch (s.base) {
    case ScopeBase::MinusPoint:
      j["point"] = s.a;
      break;
    case ScopeBase::MinusGroup:
    case ScopeBase::MinusGroupStem:
      j["group"] = s.a;
      break;
    case ScopeBase::MinusGroupPair:
      j["group"] = s.a;
      j["group2"] = s.b;
      break;
    default:
      break;
  }
  return j;
}

ClassScope scope_from_json(const json& j) {
  ClassScope s;
  std::string mode = j.at("mode").get<std::string>();
  if (mode == "PC")
    s.parallel = true;
  else if (mode == "PPC")
    s.parallel = false;
  else
    throw InputError("scope mode must be PC or PPC, got " + mode);
  s.base = parse_scope_base(j.at("base").get<std::string>());
  if (j.contains("point")) s.a = j.at("point").get<int>();
  if (j.contains("group")) s.a = j.at("group").get<int>();
  if (j.contains("group2")) s.b = j.at("group2").get<int>();
  return s;
}

json to_json(const CertifiedDesign& cert) {
  const DesignInstance& d = cert.design;
  json j;
  j["schema_version"] = 1;
  j["kind"] = claim_name(cert.claim);
  j["v"] = d.v;
  j["t"] = d.t;
  j["K"] = d.K;
  j["structure"] = structure_name(d.structure);
  j["stem"] = d.stem;
  j["groups"] = d.groups;
  j["hole"] = d.hole;
  if (cert.special_group >= 0) j["special_group"] = cert.special_group;
  if (d.fan1_count >= 0) j["fan1_count"] = d.fan1_count;
  if (!d.label_map.empty()) {
    json lm = json::object();
    for (const auto& [k, p] : d.label_map) lm[k] = p;
    j["label_map"] = std::move(lm);
  }
  j["blocks"] = d.blocks;
  json colorings;
  if (cert.self_coloring)
    colorings["self"] = coloring_to_json(*cert.self_coloring);
  json derived = json::object();
  for (const auto& [pt, col] : cert.derived_colorings)
    derived[std::to_string(pt)] = coloring_to_json(col);
  colorings["derived"] = std::move(derived);
  j["colorings"] = std::move(colorings);
  if (cert.rsqs) {
    json fams = json::array();
    for (const auto& trio : cert.rsqs->families) {
      json t = json::array();
      for (const auto& f : trio) t.push_back(f);
      fams.push_back(std::move(t));
    }
    json r;
    r["families"] = std::move(fams);
    r["common_pcs"] = cert.rsqs->common_pcs;
    j["rsqs"] = std::move(r);
  }
  j["provenance"] = cert.provenance;
  json rep;
  rep["pass"] = cert.report.pass;
  json viols = json::array();
  for (const auto& viol : cert.report.violations) {
    json jv;
    jv["code"] = viol.code;
    jv["witness"] = viol.witness;
    viols.push_back(std::move(jv));
  }
  rep["violations"] = std::move(viols);
  rep["statistics"] = cert.report.statistics;
  j["report"] = std::move(rep);
  return j;
}

CertifiedDesign cert_from_json(const json& j) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != 1)
    throw InputError("unsupported or missing schema_version (want 1)");
  CertifiedDesign cert;
  DesignInstance& d = cert.design;
  cert.claim = parse_claim(j.at("kind").get<std::string>());
  d.v = j.at("v").get<int>();
  d.t = j.at("t").get<int>();
  d.K = j.at("K").get<std::vector<int>>();
  d.structure = parse_structure(j.at("structure").get<std::string>());
  d.stem = j.at("stem").get<std::vector<int>>();
  d.groups = j.at("groups").get<std::vector<std::vector<int>>>();
  d.hole = j.at("hole").get<std::vector<int>>();
  if (j.contains("special_group"))
    cert.special_group = j.at("special_group").get<int>();
  if (j.contains("fan1_count")) d.fan1_count = j.at("fan1_count").get<int>();
  if (j.contains("label_map"))
    for (const auto& [k, val] : j.at("label_map").items())
      d.label_map[k] = val.get<int>();
  d.blocks = j.at("blocks").get<std::vector<Block>>();
  if (j.contains("colorings")) {
    const json& cols = j.at("colorings");
    if (cols.contains("self"))
      cert.self_coloring = coloring_from_json(cols.at("self"));
    if (cols.contains("derived"))
      for (const auto& [key, val] : cols.at("derived").items())
        cert.derived_colorings[std::stoi(key)] = coloring_from_json(val);
  }
  if (j.contains("rsqs")) {
    RsqsFamilies r;
    for (const json& trio : j.at("rsqs").at("families")) {
      if (trio.size() != 3)
        throw InputError("rsqs family must have exactly 3 members");
      std::array<std::vector<int>, 3> arr;
      for (int l = 0; l < 3; ++l) arr[l] = trio[l].get<std::vector<int>>();
      r.families.push_back(std::move(arr));
    }
    r.common_pcs =
        j.at("rsqs").at("common_pcs").get<std::vector<std::vector<int>>>();
    cert.rsqs = std::move(r);
  }
  if (j.contains("provenance")) cert.provenance = j.at("provenance");
  if (j.contains("report")) {
    const json& rep = j.at("report");
    cert.report.pass = rep.at("pass").get<bool>();
    for (const json& jv : rep.at("violations"))
      cert.report.violations.push_back({jv.at("code").get<std::string>(),
                                        jv.at("witness").get<std::string>()});
    if (rep.contains("statistics")) cert.report.statistics = rep.at("statistics");
  }
  return cert;
}

std::string dump_cert(const CertifiedDesign& cert) {
  return to_json(cert).dump(1) + "\n";
}

CertifiedDesign parse_cert(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  try {
    return cert_from_json(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed design file: ") + e.what());
  }
}

CertifiedDesign load_cert_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return parse_cert(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_cert_file(const CertifiedDesign& cert, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << dump_cert(cert);
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace mcd
