#include <fstream>

#include "json.hpp"
#include "knotoid/pipeline.hpp"
#include "knotoid/poly.hpp"
#include "parallel.hpp"

namespace knotoid {

namespace {

constexpr std::array<const char*, 5> kInvariantNames{"bracket", "arrow", "mock", "affine", "yamada"};

std::array<std::string, 5> fields(const InvariantSignature& s) {
  return {s.bracket, s.arrow, s.mock, s.affine, s.yamada};
}

}  // namespace

std::vector<FixtureEntry> read_fixtures(std::istream& in) {
  std::vector<FixtureEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "fixture line " + std::to_string(number);
    try {
      const auto j = nlohmann::json::parse(line);
      FixtureEntry e;
      e.name = j.at("name").get<std::string>();
      e.crossings = j.at("crossings").get<int>();
      e.pd = j.at("pd").get<std::string>();
      e.em = j.at("em").get<std::string>();
      std::array<std::string, 5> v;
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = print_poly(parse_poly(j.at(kInvariantNames[k]).get<std::string>()));
      e.expected = {v[0], v[1], v[2], v[3], v[4]};
      e.chiral = j.value("chiral", false);
      e.rotatable = j.value("rotatable", false);
      e.rotatable_conjectured = j.value("rotatable_conjectured", false);
      (void)parse_pd(e.pd);
      (void)parse_em(e.em);
      out.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw FixtureParseError(where + ": " + ex.what());
    } catch (const std::exception& ex) {
      throw FixtureParseError(where + ": " + ex.what());
    }
  }
  return out;
}

std::vector<FixtureEntry> read_fixtures(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  return read_fixtures(f);
}

FixtureReport verify_fixtures(const std::vector<FixtureEntry>& entries, int max_crossings, int workers) {
  std::vector<const FixtureEntry*> chosen;
  for (const FixtureEntry& e : entries)
    if (max_crossings < 0 || e.crossings <= max_crossings) chosen.push_back(&e);

  struct Outcome {
    std::array<std::string, 5> computed;
    bool code_ok = false;
  };
  std::vector<Outcome> got(chosen.size());
  detail::parallel_for(chosen.size(), workers, [&](std::size_t i) {
    const Diagram d = parse_pd(chosen[i]->pd);
    got[i].computed = fields(signature(d));
    got[i].code_ok = canonical_code(d) == print_em(parse_em(chosen[i]->em));
  }, 1);

  FixtureReport r;
  r.entries = chosen.size();
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const auto expected = fields(chosen[i]->expected);
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (expected[k] == got[i].computed[k])
        ++r.matched[k];
      else
        r.mismatches.push_back({chosen[i]->name, kInvariantNames[k], expected[k], got[i].computed[k]});
    }
    if (got[i].code_ok)
      ++r.codes_matched;
    else
      r.mismatches.push_back({chosen[i]->name, "code", chosen[i]->em, "canonical code differs"});
  }
  return r;
}

}  // namespace knotoid
