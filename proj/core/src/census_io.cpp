#include <fstream>
#include <sstream>

#include "json.hpp"
#include "knotoid/pipeline.hpp"

namespace knotoid {

namespace {

using nlohmann::ordered_json;

std::string evidence_name(Evidence e) {
  switch (e) {
    case Evidence::Invariants:
      return "invariants";
    case Evidence::Search:
      return "search";
    case Evidence::Budget:
      return "budget";
  }
  return "budget";
}

Evidence evidence_from(const std::string& s) {
  if (s == "invariants") return Evidence::Invariants;
  if (s == "search") return Evidence::Search;
  if (s == "budget") return Evidence::Budget;
  throw IoError("unknown evidence '" + s + "'");
}

GroupStatus status_from(const std::string& s) {
  if (s == "unique") return GroupStatus::Unique;
  if (s == "mirror_pair") return GroupStatus::MirrorPair;
  if (s == "unresolved_group") return GroupStatus::UnresolvedGroup;
  throw IoError("unknown group status '" + s + "'");
}

ordered_json to_json(const CensusRecord& r) {
  ordered_json j;
  j["id"] = r.id();
  j["crossings"] = r.crossings;
  j["ordinal"] = r.ordinal;
  j["representative"] = r.representative;
  j["pd"] = r.pd;
  j["em"] = r.em;
  j["signature"] = {{"bracket", r.signature.bracket},
                    {"arrow", r.signature.arrow},
                    {"mock", r.signature.mock},
                    {"affine", r.signature.affine},
                    {"yamada", r.signature.yamada}};
  j["chiral"] = r.flags.chiral_label();
  j["chirality_evidence"] = evidence_name(r.flags.chirality);
  j["rotatable"] = r.flags.rotatable_label();
  j["rotatability_evidence"] = evidence_name(r.flags.rotatability);
  j["group_status"] = to_string(r.status);
  j["linked"] = r.linked;
  j["knot_like"] = r.knot_like;
  j["height_lower_bound"] = r.height_lower_bound;
  return j;
}

CensusRecord from_json(const ordered_json& j) {
  CensusRecord r;
  r.crossings = j.at("crossings").get<int>();
  r.ordinal = j.at("ordinal").get<int>();
  r.representative = j.at("representative").get<std::string>();
  r.pd = j.at("pd").get<std::string>();
  r.em = j.at("em").get<std::string>();
  const auto& s = j.at("signature");
  r.signature = {s.at("bracket").get<std::string>(), s.at("arrow").get<std::string>(),
                 s.at("mock").get<std::string>(), s.at("affine").get<std::string>(),
                 s.at("yamada").get<std::string>()};
  r.flags.chiral = j.at("chiral").get<std::string>() == "yes";
  r.flags.chirality = evidence_from(j.at("chirality_evidence").get<std::string>());
  r.flags.rotatable = j.at("rotatable").get<std::string>() == "yes";
  r.flags.rotatability = evidence_from(j.at("rotatability_evidence").get<std::string>());
  r.status = status_from(j.at("group_status").get<std::string>());
  r.linked = j.at("linked").get<std::vector<std::string>>();
  r.knot_like = j.at("knot_like").get<bool>();
  r.height_lower_bound = j.at("height_lower_bound").get<int>();
  return r;
}

}  // namespace

void write_census(std::ostream& out, const std::vector<CensusRecord>& records) {
  ordered_json header;
  header["schema_version"] = kCensusSchemaVersion;
  header["records"] = records.size();
  out << header.dump() << '\n';
  for (const CensusRecord& r : records) out << to_json(r).dump() << '\n';
  if (!out) throw IoError("failed to write census");
}

std::vector<CensusRecord> read_census(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("census is empty");
  std::vector<CensusRecord> out;
  try {
    const auto header = ordered_json::parse(line);
    const int version = header.at("schema_version").get<int>();
    if (version != kCensusSchemaVersion)
      throw VersionMismatch("census schema version " + std::to_string(version) + ", expected " +
                            std::to_string(kCensusSchemaVersion));
    const auto expected = header.at("records").get<std::size_t>();
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      out.push_back(from_json(ordered_json::parse(line)));
    }
    if (out.size() != expected)
      throw IoError("census header promises " + std::to_string(expected) + " records, found " +
                    std::to_string(out.size()));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed census: ") + e.what());
  }
  return out;
}

void persist(const std::vector<CensusRecord>& records, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  write_census(f, records);
}

std::vector<CensusRecord> load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  return read_census(f);
}

}  // namespace knotoid
