#include "osculant/report.hpp"

#include <json.hpp>
#include <sstream>

#include "osculant/version.hpp"

namespace osculant {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string coordinate_echo(const RatFunc& f) {
  if (f.is_polynomial()) return print_polynomial(f.num());
  return "(" + print_polynomial(f.num()) + ") / (" + print_polynomial(f.den()) + ")";
}

VerdictReport verdict_report(const TheoremVerdict& v) {
  VerdictReport r;
  r.order = v.order;
  r.applicable = v.applicable;
  r.pass = v.pass;
  r.inputs = v.inputs;
  r.notes = v.notes;
  return r;
}

template <typename F>
void run_theorem_block(std::vector<VerdictReport>& out, int t, F&& checker) {
  VerdictReport r;
  r.order = t;
  try {
    r = verdict_report(checker());
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  out.push_back(std::move(r));
}

}  // namespace

Report run_report(const Parametrization& p, const ReportOptions& opt) {
  p.validate();
  Report rep;
  rep.schema = kReportSchema;
  rep.version = kVersion;
  rep.input.name = p.name;
  rep.input.k = p.k;
  rep.input.N = p.N;
  for (const RatFunc& c : p.coords) rep.input.coordinates.push_back(coordinate_echo(c));
  rep.seed = opt.proto.seed;
  rep.samples = opt.proto.samples;
  rep.bound = opt.proto.bound;
  rep.mode = opt.mode == RankMode::sampled ? "sampled" : "symbolic";
  rep.max_order = opt.max_order;

  int d_prev = 0;
  bool globals_ok = p.polynomial();
  for (int t = 1; t <= opt.max_order; ++t) {
    OrderReport row;
    row.t = t;
    try {
      row.d = osc_dim(p, t, opt.mode, opt.proto);
      if (t == 1) rep.immersion_warning = row.d < p.k;
      ExpectedDims e = expected_dims(p.k, p.N, d_prev, t);
      row.e = e.e;
      row.k_t = e.k_t;
      row.trivial = e.trivial;
      row.delta = static_cast<int>(binomial(p.k - 1 + t, t)) - (row.d - d_prev);
      if (opt.with_global && globals_ok && t >= 2) {
        row.delta_global = global_laplace_basis(p, t).count();
      }
      row.form_dim = form_dimension(p, t, opt.mode, opt.proto);
      DefectReport dr = defect_report(p, t, opt.mode, opt.proto);
      row.tan_dim = dr.tan_dim;
      row.expdim_tan = dr.expdim;
      row.o = dr.o;
      row.ambient_clamped = dr.ambient_clamped;
      row.h = dr.h;
      row.dual_dim = dr.dual_dim;
      row.dual_degenerate = dr.dual_degenerate;
      d_prev = row.d;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rep.orders.push_back(std::move(row));
  }

  if (opt.with_theorems) {
    auto& a = rep.theorems["A"];
    for (int t = 2; t <= opt.max_order; ++t) {
      run_theorem_block(a, t, [&] { return check_theorem_A(p, t, opt.mode, opt.proto); });
    }
    auto& b = rep.theorems["B"];
    for (int t = 1; t <= std::max(1, opt.max_order - 1); ++t) {
      run_theorem_block(b, t, [&] { return check_theorem_B(p, t, opt.mode, opt.proto); });
    }
    auto& chain = rep.theorems["chain"];
    for (int t = 2; t <= opt.max_order; ++t) {
      run_theorem_block(chain, t, [&] { return check_jacobian_chain(p, t, opt.mode, opt.proto); });
    }
    auto& lemma = rep.theorems["lemma"];
    for (int t = 2; t <= opt.max_order; ++t) {
      run_theorem_block(lemma, t, [&] { return tangent_lemma_check(p, t, opt.mode, opt.proto); });
    }
  }
  return rep;
}

namespace {

ordered_json order_to_json(const OrderReport& row) {
  ordered_json j;
  j["t"] = row.t;
  if (row.error) {
    j["error"] = *row.error;
    return j;
  }
  j["d"] = row.d;
  j["e"] = row.e;
  j["k_t"] = row.k_t;
  j["trivial"] = row.trivial;
  j["delta"] = row.delta;
  j["delta_global"] = row.delta_global ? ordered_json(*row.delta_global) : ordered_json(nullptr);
  j["form_dim"] = row.form_dim;
  j["tan_dim"] = row.tan_dim;
  j["expdim_tan"] = row.expdim_tan;
  j["o"] = row.o;
  j["ambient_clamped"] = row.ambient_clamped;
  j["h"] = row.h;
  j["dual_dim"] = row.dual_dim;
  j["dual_degenerate"] = row.dual_degenerate;
  return j;
}

OrderReport order_from_json(const ordered_json& j) {
  OrderReport row;
  row.t = j.at("t").get<int>();
  if (j.contains("error")) {
    row.error = j.at("error").get<std::string>();
    return row;
  }
  row.d = j.at("d").get<int>();
  row.e = j.at("e").get<int>();
  row.k_t = j.at("k_t").get<long long>();
  row.trivial = j.at("trivial").get<long long>();
  row.delta = j.at("delta").get<int>();
  if (!j.at("delta_global").is_null()) row.delta_global = j.at("delta_global").get<int>();
  row.form_dim = j.at("form_dim").get<int>();
  row.tan_dim = j.at("tan_dim").get<int>();
  row.expdim_tan = j.at("expdim_tan").get<int>();
  row.o = j.at("o").get<int>();
  row.ambient_clamped = j.at("ambient_clamped").get<bool>();
  row.h = j.at("h").get<int>();
  row.dual_dim = j.at("dual_dim").get<int>();
  row.dual_degenerate = j.at("dual_degenerate").get<bool>();
  return row;
}

ordered_json verdict_to_json(const VerdictReport& v) {
  ordered_json j;
  j["order"] = v.order;
  if (v.error) {
    j["error"] = *v.error;
    return j;
  }
  j["applicable"] = v.applicable;
  j["pass"] = v.pass;
  ordered_json inputs;
  for (const auto& [key, value] : v.inputs) inputs[key] = value;
  j["inputs"] = inputs;
  j["notes"] = v.notes;
  return j;
}

VerdictReport verdict_from_json(const ordered_json& j) {
  VerdictReport v;
  v.order = j.at("order").get<int>();
  if (j.contains("error")) {
    v.error = j.at("error").get<std::string>();
    return v;
  }
  v.applicable = j.at("applicable").get<bool>();
  v.pass = j.at("pass").get<bool>();
  for (const auto& [key, value] : j.at("inputs").items()) {
    v.inputs.emplace_back(key, value.get<long long>());
  }
  v.notes = j.at("notes").get<std::vector<std::string>>();
  return v;
}

}  // namespace

std::string report_to_json(const Report& r) {
  ordered_json j;
  j["schema"] = r.schema;
  j["version"] = r.version;
  j["input"] = {{"name", r.input.name},
                {"k", r.input.k},
                {"N", r.input.N},
                {"coordinates", r.input.coordinates}};
  j["run"] = {{"seed", r.seed},
              {"samples", r.samples},
              {"coord_bound", r.bound},
              {"mode", r.mode},
              {"max_order", r.max_order}};
  j["immersion_warning"] = r.immersion_warning;
  ordered_json orders = ordered_json::array();
  for (const OrderReport& row : r.orders) orders.push_back(order_to_json(row));
  j["orders"] = orders;
  ordered_json theorems;
  for (const auto& [name, verdicts] : r.theorems) {
    ordered_json list = ordered_json::array();
    for (const VerdictReport& v : verdicts) list.push_back(verdict_to_json(v));
    theorems[name] = list;
  }
  j["theorems"] = theorems;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Report r;
  r.schema = j.at("schema").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.input.name = j.at("input").at("name").get<std::string>();
  r.input.k = j.at("input").at("k").get<int>();
  r.input.N = j.at("input").at("N").get<int>();
  r.input.coordinates = j.at("input").at("coordinates").get<std::vector<std::string>>();
  r.seed = j.at("run").at("seed").get<std::uint64_t>();
  r.samples = j.at("run").at("samples").get<int>();
  r.bound = j.at("run").at("coord_bound").get<long>();
  r.mode = j.at("run").at("mode").get<std::string>();
  r.max_order = j.at("run").at("max_order").get<int>();
  r.immersion_warning = j.at("immersion_warning").get<bool>();
  for (const auto& item : j.at("orders")) r.orders.push_back(order_from_json(item));
  for (const auto& [name, list] : j.at("theorems").items()) {
    std::vector<VerdictReport> verdicts;
    for (const auto& item : list) verdicts.push_back(verdict_from_json(item));
    r.theorems[name] = std::move(verdicts);
  }
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << r.input.name << "  (k=" << r.input.k << ", N=" << r.input.N << ")\n";
  os << "run: mode=" << r.mode << " seed=" << r.seed << " samples=" << r.samples
     << " bound=" << r.bound << " max-order=" << r.max_order << " version=" << r.version << "\n";
  if (r.immersion_warning) {
    os << "warning: differential rank below k at the sampled points\n";
  }
  os << "  t |   d   e  k_t triv delta d_gl  form  tan  exp    o    h dual\n";
  for (const OrderReport& row : r.orders) {
    if (row.error) {
      os << "  " << row.t << " | error: " << *row.error << "\n";
      continue;
    }
    auto cell = [&](long long v) {
      std::string s = std::to_string(v);
      return std::string(5 - std::min<std::size_t>(4, s.size()) - 1, ' ') + s;
    };
    os << "  " << row.t << " |" << cell(row.d) << cell(row.e) << cell(row.k_t)
       << cell(row.trivial) << cell(row.delta)
       << (row.delta_global ? cell(*row.delta_global) : "    -") << " " << cell(row.form_dim)
       << cell(row.tan_dim) << cell(row.expdim_tan) << cell(row.o) << cell(row.h)
       << cell(row.dual_dim) << (row.ambient_clamped ? "  (ambient-clamped)" : "") << "\n";
  }
  for (const auto& [name, verdicts] : r.theorems) {
    for (const VerdictReport& v : verdicts) {
      os << "check " << name << " t=" << v.order << ": ";
      if (v.error) {
        os << "error: " << *v.error << "\n";
        continue;
      }
      if (!v.applicable) {
        os << "not applicable";
      } else {
        os << (v.pass ? "pass" : "FAIL");
      }
      if (!v.inputs.empty()) {
        os << "  [";
        bool first = true;
        for (const auto& [key, value] : v.inputs) {
          if (!first) os << " ";
          os << key << "=" << value;
          first = false;
        }
        os << "]";
      }
      for (const std::string& n : v.notes) os << "\n    note: " << n;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace osculant
