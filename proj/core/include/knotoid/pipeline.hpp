#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/structure.hpp"

namespace knotoid {

inline constexpr int kCensusSchemaVersion = 1;

enum class GroupStatus : std::uint8_t {
  Unique,          // achiral class whose signature no other record shares
  MirrorPair,      // chiral class standing for itself and its mirror image
  UnresolvedGroup  // shares a signature with another record it was not connected to
};
std::string to_string(GroupStatus s);

struct CensusRecord {
  int crossings = 0;
  int ordinal = 0;                // 1-based, by canonical code within a crossing number
  CanonicalCode representative;  // least canonical code over the record's diagrams
  std::string pd;
  std::string em;
  InvariantSignature signature;
  SymmetryFlags flags;
  GroupStatus status = GroupStatus::Unique;
  std::vector<std::string> linked;  // ids of records in the same unresolved group
  bool knot_like = false;
  int height_lower_bound = 0;

  std::string id() const { return std::to_string(crossings) + "_" + std::to_string(ordinal); }
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct ClassifyParams {
  int max_n = 5;
  // Greedy reduction passes, tried in order; a diagram is dropped as soon as
  // one of them reaches fewer crossings. A class is also dropped when they
  // reach a non-prime diagram with as many crossings.
  std::vector<ReachParams> reduce_stages;
  // Equivalence searches between same-signature classes.
  std::vector<ReachParams> search_stages;
  // Extra searches once rotations share the group (used when rotation_augmented).
  std::vector<ReachParams> rotation_stages;
  // Identify a knotoid with its rotation in the census, as with the mirror.
  bool rotation_augmented = true;
  int workers = 1;

  static ClassifyParams defaults(int max_n = 5);
  // Throws std::invalid_argument when malformed.
  void check() const;
};

// Per crossing number funnel counts, for logging.
struct ClassifyLog {
  int crossings = 0;
  std::size_t shadows = 0;
  std::size_t diagrams = 0;
  std::size_t irreducible = 0;
  std::size_t prime = 0;
  std::size_t classes = 0;
  std::size_t records = 0;
};

std::vector<CensusRecord> classify(const ClassifyParams& p,
                                   const std::function<void(const ClassifyLog&)>& log = {});

// Census persistence (JSON lines, first line a header with the schema version).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class VersionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_census(std::ostream& out, const std::vector<CensusRecord>& records);
std::vector<CensusRecord> read_census(std::istream& in);
void persist(const std::vector<CensusRecord>& records, const std::string& path);
std::vector<CensusRecord> load(const std::string& path);

// Reference fixtures: JSON lines with name, pd, em and the five invariant strings.
class FixtureParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixtureEntry {
  std::string name;
  int crossings = 0;
  std::string pd;
  std::string em;
  InvariantSignature expected;
  bool chiral = false;
  bool rotatable = false;
  bool rotatable_conjectured = false;
};

struct FixtureMismatch {
  std::string name;
  std::string invariant;
  std::string expected;
  std::string computed;
};

struct FixtureReport {
  std::size_t entries = 0;
  // Per invariant, in signature order: bracket, arrow, mock, affine, yamada.
  std::array<std::size_t, 5> matched{};
  std::size_t codes_matched = 0;  // canonical code of the PD equals the listed EM
  std::vector<FixtureMismatch> mismatches;
  bool all_matched() const { return mismatches.empty(); }
};

std::vector<FixtureEntry> read_fixtures(std::istream& in);
std::vector<FixtureEntry> read_fixtures(const std::string& path);
// Entries with more than max_crossings crossings are skipped (negative: none).
FixtureReport verify_fixtures(const std::vector<FixtureEntry>& entries, int max_crossings = -1, int workers = 1);

// Table summaries.
struct CensusRow {
  int crossings = 0;
  std::size_t total = 0;
  std::size_t chiral_yes = 0;
  std::size_t chiral_no = 0;
  std::size_t rotatable_yes = 0;
  std::size_t rotatable_no = 0;  // includes conjectured
  std::size_t rotatable_conjectured = 0;
  std::size_t possible_duplicates = 0;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};
std::vector<CensusRow> report_census(const std::vector<CensusRecord>& records);
std::string format_census(const std::vector<CensusRow>& rows);

struct UniquenessRow {
  std::string invariant;
  std::size_t unique = 0;
};
// For each invariant (and all five together), how many records carry a value
// no other record has.
std::vector<UniquenessRow> report_uniqueness(const std::vector<CensusRecord>& records);
std::string format_uniqueness(const std::vector<UniquenessRow>& rows, std::size_t total);

}  // namespace knotoid
