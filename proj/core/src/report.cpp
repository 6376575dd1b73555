#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "knotoid/pipeline.hpp"

namespace knotoid {

std::vector<CensusRow> report_census(const std::vector<CensusRecord>& records) {
  std::map<int, CensusRow> rows;
  int top = -1;
  for (const CensusRecord& r : records) top = std::max(top, r.crossings);
  for (int n = 0; n <= top; ++n) rows[n].crossings = n;

  std::map<std::string, const CensusRecord*> by_id;
  for (const CensusRecord& r : records) by_id[r.id()] = &r;
  std::set<std::string> grouped;
  for (const CensusRecord& r : records) {
    CensusRow& row = rows[r.crossings];
    ++row.total;
    ++(r.flags.chiral ? row.chiral_yes : row.chiral_no);
    if (r.flags.rotatable) {
      ++row.rotatable_yes;
    } else {
      ++row.rotatable_no;
      if (r.flags.rotatability != Evidence::Invariants) ++row.rotatable_conjectured;
    }
    // Each unresolved group contributes its size minus one.
    if (r.status != GroupStatus::UnresolvedGroup || grouped.count(r.id())) continue;
    std::vector<std::string> stack{r.id()};
    grouped.insert(r.id());
    std::size_t size = 0;
    while (!stack.empty()) {
      const std::string id = stack.back();
      stack.pop_back();
      ++size;
      const auto it = by_id.find(id);
      if (it == by_id.end()) continue;
      for (const std::string& other : it->second->linked)
        if (grouped.insert(other).second) stack.push_back(other);
    }
    row.possible_duplicates += size - 1;
  }
  std::vector<CensusRow> out;
  for (auto& [n, row] : rows) out.push_back(row);
  return out;
}

std::string format_census(const std::vector<CensusRow>& rows) {
  std::ostringstream o;
  o << std::left << std::setw(10) << "crossings" << std::right << std::setw(7) << "total" << std::setw(12)
    << "chiral_yes" << std::setw(11) << "chiral_no" << std::setw(9) << "rot_yes" << std::setw(8) << "rot_no"
    << std::setw(17) << "rot_conjectured" << std::setw(12) << "duplicates" << '\n';
  CensusRow sum;
  for (const CensusRow& r : rows) {
    o << std::left << std::setw(10) << r.crossings << std::right << std::setw(7) << r.total << std::setw(12)
      << r.chiral_yes << std::setw(11) << r.chiral_no << std::setw(9) << r.rotatable_yes << std::setw(8)
      << r.rotatable_no << std::setw(17) << r.rotatable_conjectured << std::setw(12) << r.possible_duplicates
      << '\n';
    sum.total += r.total;
    sum.chiral_yes += r.chiral_yes;
    sum.chiral_no += r.chiral_no;
    sum.rotatable_yes += r.rotatable_yes;
    sum.rotatable_no += r.rotatable_no;
    sum.rotatable_conjectured += r.rotatable_conjectured;
    sum.possible_duplicates += r.possible_duplicates;
  }
  o << std::left << std::setw(10) << "total" << std::right << std::setw(7) << sum.total << std::setw(12)
    << sum.chiral_yes << std::setw(11) << sum.chiral_no << std::setw(9) << sum.rotatable_yes << std::setw(8)
    << sum.rotatable_no << std::setw(17) << sum.rotatable_conjectured << std::setw(12) << sum.possible_duplicates
    << '\n';
  return o.str();
}

std::vector<UniquenessRow> report_uniqueness(const std::vector<CensusRecord>& records) {
  using Key = std::function<std::string(const InvariantSignature&)>;
  const std::vector<std::pair<std::string, Key>> columns{
      {"Kauffman bracket", [](const InvariantSignature& s) { return s.bracket; }},
      {"Arrow polynomial", [](const InvariantSignature& s) { return s.arrow; }},
      {"Mock Alexander polynomial", [](const InvariantSignature& s) { return s.mock; }},
      {"Affine index polynomial", [](const InvariantSignature& s) { return s.affine; }},
      {"Yamada polynomial (closure)", [](const InvariantSignature& s) { return s.yamada; }},
      {"All five", [](const InvariantSignature& s) {
         return s.bracket + '|' + s.arrow + '|' + s.mock + '|' + s.affine + '|' + s.yamada;
       }}};
  std::vector<UniquenessRow> out;
  for (const auto& [name, key] : columns) {
    std::map<std::string, std::size_t> count;
    for (const CensusRecord& r : records) ++count[key(r.signature)];
    UniquenessRow row{name, 0};
    for (const CensusRecord& r : records) row.unique += count[key(r.signature)] == 1 ? 1 : 0;
    out.push_back(row);
  }
  return out;
}

std::string format_uniqueness(const std::vector<UniquenessRow>& rows, std::size_t total) {
  std::ostringstream o;
  o << std::left << std::setw(30) << "invariant" << std::right << std::setw(8) << "unique" << std::setw(12)
    << "non_unique" << '\n';
  for (const UniquenessRow& r : rows)
    o << std::left << std::setw(30) << r.invariant << std::right << std::setw(8) << r.unique << std::setw(12)
      << total - r.unique << '\n';
  return o.str();
}

}  // namespace knotoid
