#pragma once

#include <map>
#include <string>
#include <vector>

#include "osculant/parametrization.hpp"

namespace osculant {

struct ExpectedValue {
  long long value = 0;
  std::string note;  // how the value was derived
};

// Built-in parametrization with its regression table. Keys are invariant
// labels: d_<t>, delta_<t>, delta_global_<t>, Delta_<t>, o_<t>, h_<t>,
// tan_<t>, dual_<t>, thmA_<t>_applicable / _pass, thmB_<t>_applicable /
// _pass, chain_<t>_pass.
struct CatalogEntry {
  std::string name;
  Parametrization parametrization;
  std::map<std::string, ExpectedValue> expected;
};

// Accepts the fixed names plus the parameterised families linear(k,N) and
// rnc(n) with n <= 6.
CatalogEntry catalog_get(const std::string& name);
std::map<std::string, ExpectedValue> catalog_expected(const std::string& name);

// Canonical instances exercised by the test suites.
std::vector<std::string> catalog_names();

// Human-readable listing for the command line.
std::string catalog_listing();

}  // namespace osculant
