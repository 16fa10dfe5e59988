#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osculant/defects.hpp"
#include "osculant/jets.hpp"
#include "osculant/parser.hpp"

namespace osculant {

struct ReportOptions {
  int max_order = 3;
  RankMode mode = RankMode::sampled;
  SampleProtocol proto;
  bool with_global = true;
  bool with_theorems = true;
};

struct OrderReport {
  int t = 0;
  std::optional<std::string> error;  // set when this order failed; other fields empty
  int d = 0;
  int e = 0;
  long long k_t = 0;
  long long trivial = 0;
  int delta = 0;
  std::optional<int> delta_global;
  int form_dim = 0;
  int tan_dim = 0;
  int expdim_tan = 0;
  int o = 0;
  bool ambient_clamped = false;
  int h = 0;
  int dual_dim = -1;
  bool dual_degenerate = false;
};

struct VerdictReport {
  int order = 0;
  bool applicable = false;
  bool pass = false;
  std::vector<std::pair<std::string, long long>> inputs;
  std::vector<std::string> notes;
  std::optional<std::string> error;
};

struct Report {
  std::string schema;
  std::string version;
  InputDocument input;  // echo, coordinates in canonical printed form
  std::uint64_t seed = 0;
  int samples = 0;
  long bound = 0;
  std::string mode;
  int max_order = 0;
  bool immersion_warning = false;
  std::vector<OrderReport> orders;
  // Keys "A", "B", "chain", "lemma"; each holds per-order verdicts.
  std::map<std::string, std::vector<VerdictReport>> theorems;
};

// Everything is exact integers; identical inputs and seeds serialize to
// byte-identical JSON. One failing order is reported in place without
// aborting the rest.
Report run_report(const Parametrization& p, const ReportOptions& opt);

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace osculant
