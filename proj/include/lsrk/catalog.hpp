#pragma once

#include "lsrk/scheme_json.hpp"

#include <string>
#include <vector>

namespace lsrk {

struct CatalogEntry {
  std::string name;
  SchemeDoc scheme;
  std::string provenance;  // where the numbers come from
  bool exact = false;
  int claimedOrder = 0;
  std::string notes;
};

std::vector<std::string> catalogList();
const CatalogEntry& catalogGet(const std::string& name);  // throws UnknownScheme

// reflection partners; a name paired with itself is self-reflected
std::vector<std::pair<std::string, std::string>> reflectionPairs();

}  // namespace lsrk
