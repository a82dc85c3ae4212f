// JSON and plain-text rendering of the library's results.

#ifndef REESFB_REPORT_HPP_
#define REESFB_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "reesfb/classifier.hpp"
#include "reesfb/decompose.hpp"
#include "reesfb/families.hpp"
#include "reesfb/isoterm.hpp"
#include "reesfb/satisfaction.hpp"

namespace reesfb {

  using Json = nlohmann::ordered_json;

  Json to_json(Identity const& id);
  Json to_json(IdentitySet const& ids);
  Json to_json(WordSet const& w);
  Json to_json(std::vector<Word> const& words);
  Json to_json(IsotermReport const& r);
  Json to_json(Verdict const& v);
  Json to_json(std::vector<StandaloneTest> const& tests);
  Json to_json(ReesMonoid const& m);
  Json to_json(ReesMonoid const& m, Identity const& id, SatisfactionResult const& r);
  Json to_json(FamilyOutput const& f);
  Json to_json(Decomposition const& d);
  Json to_json(EquivalenceCheck const& c);

  std::string render(IsotermReport const& r);
  std::string render(Verdict const& v);
  std::string render(std::vector<StandaloneTest> const& tests);
  std::string render(ReesMonoid const& m);
  std::string render(ReesMonoid const& m, Identity const& id, SatisfactionResult const& r);
  std::string render(FamilyOutput const& f);
  std::string render(Decomposition const& d);
  std::string render(EquivalenceCheck const& c);

}  // namespace reesfb

#endif  // REESFB_REPORT_HPP_
