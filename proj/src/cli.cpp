#include "matroid_kappa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include "matroid_kappa/axioms.hpp"
#include "matroid_kappa/connectivity.hpp"
#include "matroid_kappa/constructions.hpp"
#include "matroid_kappa/description.hpp"
#include "matroid_kappa/errors.hpp"
#include "matroid_kappa/families.hpp"
#include "matroid_kappa/linking.hpp"
#include "matroid_kappa/windows.hpp"

namespace mkappa {
namespace {

using Json = nlohmann::ordered_json;

Json labels_json(const ElementSet& s) { return Json(s.labels()); }

Json value_json(const ConnValue& v) { return v.is_finite() ? Json(v.value()) : Json("inf"); }

std::string status_name(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::pass: return "pass";
    case AxiomStatus::fail: return "fail";
    case AxiomStatus::not_checked: return "not-checked";
  }
  return "unknown";
}

std::vector<std::string> read_labels(const std::string& spec) {
  if (spec.empty() || spec.front() != '@') return split_labels(spec);
  std::ifstream in(spec.substr(1));
  if (!in) throw DomainError("cannot open " + spec.substr(1));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  Budget budget() const {
    if (budget_flag_) return Budget::uniform(*budget_flag_);
    return Budget::from_environment();
  }

  Matroid matroid() const { return load_matroid(file_); }
  ElementSet set_of(const Matroid& m, const std::string& spec) const { return m.set(read_labels(spec)); }

  Json header(const std::string& verb) const {
    Json j;
    j["schema"] = kJsonSchema;
    j["verb"] = verb;
    return j;
  }

  void emit(const Json& j, const std::string& text) const {
    if (json_) {
      out_ << j.dump(2) << '\n';
    } else {
      out_ << text;
    }
  }

  void write_trace(const std::vector<TraceStage>& stages) const {
    if (trace_.empty()) return;
    std::ofstream t(trace_);
    if (!t) throw DomainError("cannot write trace file " + trace_);
    for (const auto& s : stages) {
      Json line;
      line["stage"] = s.stage;
      Json sets = Json::object();
      for (const auto& [name, set] : s.sets) sets[name] = labels_json(set);
      Json values = Json::object();
      for (const auto& [name, v] : s.values) values[name] = value_json(v);
      line["sets"] = sets;
      line["values"] = values;
      t << line.dump() << '\n';
    }
  }

  Json matroid_json(const Matroid& m) const {
    Json j;
    j["summary"] = m.summary();
    j["elements"] = m.ground()->labels();
    j["rank"] = m.full_rank();
    Json circuits = Json::array();
    for (const auto& c : enumerate_circuits(m, budget())) circuits.push_back(labels_json(c.members));
    j["circuits"] = circuits;
    return j;
  }

  void print_matroid(const std::string& verb, const Matroid& m) const {
    Json j = header(verb);
    j["matroid"] = matroid_json(m);
    std::string text = "# summary = " + m.summary() + "\n# rank = " + std::to_string(m.full_rank()) + "\n";
    text += to_explicit_description(m);
    emit(j, text);
  }

  void check_axioms_verb();
  void circuits_verb();
  void rank_verb();
  void dual_verb();
  void minor_verb();
  void sum_verb();
  void components_verb();
  void kappa_verb();
  void kappa_between_verb();
  void separation_verb();
  void connected_verb();
  void link_verb();

  InfiniteFamily family() const { return InfiniteFamily::from_id(family_id_, family_rule_); }
  StabilizationPolicy policy() const {
    StabilizationPolicy p;
    p.max_window = max_window_;
    p.plateau_length = plateau_;
    if (!certificate_.empty()) p.certificate = certificate_;
    return p;
  }
  void family_window_verb();
  void family_kappa_between_verb();
  void family_stabilize_verb();
  void family_certificate_verb();
  void family_link_verb();
  void family_rung_scan_verb();

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
  std::optional<std::size_t> budget_flag_;
  std::string trace_;
  std::string file_;
  std::vector<std::string> files_;
  std::string set_;
  std::string x_;
  std::string y_;
  std::string contract_;
  std::string delete_;
  std::size_t k_ = 2;
  bool constructive_ = false;
  std::string family_id_;
  std::string family_rule_;
  std::optional<std::size_t> window_;
  std::size_t max_window_ = 8;
  std::size_t plateau_ = 3;
  std::string certificate_;
  std::function<void()> action_;
};

void Runner::check_axioms_verb() {
  const auto d = load_description(file_);
  SetFamily fam;
  if (d.type == "explicit") {
    fam = family_of(d);
  } else {
    const Matroid m = build_matroid(d);
    if (m.size() > budget().circuit_enumeration) throw CapacityError("too many elements to list independent sets");
    fam = SetFamily{m.ground(), SetFamily::Kind::independent_sets, {}};
    for (Mask s = 0; s <= m.full_mask(); ++s) {
      if (m.independent(s)) fam.sets.push_back(s);
      if (s == m.full_mask()) break;
    }
  }
  Budget b = budget();
  b.axiom_check = Budget{}.axiom_check;
  const auto report = check_axioms(fam, b);
  Json j = header("check-axioms");
  j["matroid"] = report.all_pass();
  Json checks = Json::array();
  std::string text;
  for (const auto& c : report.checks) {
    Json entry;
    entry["axiom"] = c.axiom;
    entry["status"] = status_name(c.status);
    if (!c.witness.empty()) entry["witness"] = c.witness;
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(entry);
    text += c.axiom + " " + status_name(c.status);
    if (!c.witness.empty()) text += "  witness: " + c.witness;
    text += "\n";
  }
  j["checks"] = checks;
  text += std::string("matroid = ") + (report.all_pass() ? "yes" : "no") + "\n";
  emit(j, text);
}

void Runner::circuits_verb() {
  const Matroid m = matroid();
  Json j = header("circuits");
  Json list = Json::array();
  std::string text;
  for (const auto& c : enumerate_circuits(m, budget())) {
    list.push_back(labels_json(c.members));
    text += c.members.to_string() + "\n";
  }
  j["circuits"] = list;
  emit(j, text);
}

void Runner::rank_verb() {
  const Matroid m = matroid();
  const auto s = set_.empty() ? m.all() : set_of(m, set_);
  const auto r = rank(m, s);
  Json j = header("rank");
  j["set"] = labels_json(s);
  j["rank"] = r;
  emit(j, "rank = " + std::to_string(r) + "\n");
}

void Runner::dual_verb() { print_matroid("dual", dual(matroid())); }

void Runner::minor_verb() {
  const Matroid m = matroid();
  MinorSpec spec{set_of(m, contract_), set_of(m, delete_)};
  print_matroid("minor", take_minor(m, spec));
}

void Runner::sum_verb() {
  std::vector<Matroid> parts;
  for (const auto& f : files_) parts.push_back(load_matroid(f));
  print_matroid("sum", direct_sum(parts));
}

void Runner::components_verb() {
  const Matroid m = matroid();
  const auto parts = components(m, budget());
  Json j = header("components");
  Json blocks = Json::array();
  std::string text;
  for (const auto& b : parts.blocks) {
    blocks.push_back(labels_json(b));
    text += b.to_string() + "\n";
  }
  j["blocks"] = blocks;
  emit(j, text);
}

void Runner::kappa_verb() {
  const Matroid m = matroid();
  const auto s = set_of(m, set_);
  const auto v = kappa(m, s);
  Json j = header("kappa");
  j["set"] = labels_json(s);
  j["kappa"] = value_json(v);
  emit(j, "kappa = " + v.to_string() + "\n");
}

void Runner::kappa_between_verb() {
  const Matroid m = matroid();
  const auto r = kappa_between_witness(m, set_of(m, x_), set_of(m, y_), budget());
  Json j = header("kappa-between");
  j["x"] = labels_json(set_of(m, x_));
  j["y"] = labels_json(set_of(m, y_));
  j["kappa"] = value_json(r.value);
  j["argmin"] = labels_json(r.argmin);
  emit(j, "kappa = " + r.value.to_string() + "\nargmin = " + r.argmin.to_string() + "\n");
}

void Runner::separation_verb() {
  const Matroid m = matroid();
  const auto s = find_separation(m, k_, budget());
  Json j = header("separation");
  j["k"] = k_;
  if (!s) {
    j["separation"] = nullptr;
    emit(j, "separation = none\n");
    return;
  }
  Json sep;
  sep["left"] = labels_json(s->left);
  sep["right"] = labels_json(s->right);
  sep["kappa"] = value_json(s->kappa);
  sep["order"] = *s->order_k;
  j["separation"] = sep;
  emit(j, "left = " + s->left.to_string() + "\nright = " + s->right.to_string() + "\nkappa = " +
              s->kappa.to_string() + "\norder = " + std::to_string(*s->order_k) + "\n");
}

void Runner::connected_verb() {
  const Matroid m = matroid();
  const bool c = is_k_connected(m, k_, budget());
  Json j = header("connected");
  j["k"] = k_;
  j["connected"] = c;
  emit(j, std::to_string(k_) + "-connected = " + (c ? "yes" : "no") + "\n");
}

void Runner::link_verb() {
  const Matroid m = matroid();
  const auto x = set_of(m, x_);
  const auto y = set_of(m, y_);
  const auto r = constructive_ ? constructive_linking(m, x, y, budget()) : linking_partition(m, x, y, budget());
  write_trace(r.witness_trace);
  Json j = header("link");
  j["x"] = labels_json(x);
  j["y"] = labels_json(y);
  j["contract"] = labels_json(r.spec.contract);
  j["delete"] = labels_json(r.spec.remove);
  j["achieved"] = value_json(r.achieved);
  j["target"] = value_json(r.target);
  j["constructive"] = constructive_;
  emit(j, "contract = " + r.spec.contract.to_string() + "\ndelete = " + r.spec.remove.to_string() +
              "\nachieved = " + r.achieved.to_string() + "\ntarget = " + r.target.to_string() + "\n");
}

void Runner::family_window_verb() {
  const auto f = family();
  const std::size_t n = window_.value_or(0);
  const Matroid w = f.window(n);
  Json j = header("family window");
  j["family"] = f.id();
  j["window"] = n;
  j["summary"] = w.summary();
  j["rank"] = w.full_rank();
  j["elements"] = w.ground()->labels();
  std::string text = "family = " + f.id() + "\nwindow = " + std::to_string(n) + "\nsummary = " + w.summary() +
                     "\nrank = " + std::to_string(w.full_rank()) + "\nelements = " + w.all().to_string() + "\n";
  emit(j, text);
}

void Runner::family_kappa_between_verb() {
  const auto f = family();
  const auto xl = read_labels(x_);
  const auto yl = read_labels(y_);
  std::vector<std::string> both = xl;
  both.insert(both.end(), yl.begin(), yl.end());
  const auto radius = f.exactness_radius(both);
  if (!radius) throw DomainError("X or Y is not a set of family elements");
  const std::size_t n = window_.value_or(*radius);
  if (n < *radius) throw DomainError("window " + std::to_string(n) + " does not contain X and Y");
  const Matroid w = f.window(n);
  const auto x = w.set(xl);
  const auto y = w.set(yl);
  const Mask free = w.full_mask() & ~(x.mask() | y.mask());
  const auto b = budget();
  const auto v = popcount(free) <= b.kappa_between_free ? kappa_between(w, x, y, b) : window_kappa_between(w, x, y);
  Json j = header("family kappa-between");
  j["family"] = f.id();
  j["window"] = n;
  j["x"] = labels_json(x);
  j["y"] = labels_json(y);
  j["kappa"] = value_json(v);
  emit(j, "window = " + std::to_string(n) + "\nkappa = " + v.to_string() + "\n");
}

Json report_json(const StabilizationReport& r) {
  Json j;
  j["family"] = r.family;
  j["x"] = r.x;
  j["y"] = r.y;
  Json values = Json::array();
  for (const auto& [n, v] : r.values) values.push_back(Json{{"window", n}, {"kappa", value_json(v)}});
  j["values"] = values;
  j["stable_at"] = r.stable_at ? Json(*r.stable_at) : Json(nullptr);
  j["certified_value"] = r.certified_value ? value_json(*r.certified_value) : Json(nullptr);
  if (r.certificate) {
    j["certificate"] = Json{{"description", r.certificate->description},
                            {"kappa_bound", r.certificate->kappa_bound},
                            {"order_k", r.certificate->order_k}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

std::string report_text(const StabilizationReport& r) {
  std::string text;
  for (const auto& [n, v] : r.values) text += "window " + std::to_string(n) + ": kappa >= " + v.to_string() + "\n";
  text += "stable_at = " + (r.stable_at ? std::to_string(*r.stable_at) : std::string("none")) + "\n";
  text += "certified = " + (r.certified_value ? r.certified_value->to_string() : std::string("none")) + "\n";
  if (r.certificate) text += "certificate = " + r.certificate->description + "\n";
  return text;
}

void Runner::family_stabilize_verb() {
  const auto r = stabilized_kappa_between(family(), read_labels(x_), read_labels(y_), policy());
  Json j = header("family stabilize");
  j["report"] = report_json(r);
  emit(j, report_text(r));
}

void Runner::family_certificate_verb() {
  const auto c = certified_separation(family(), certificate_, max_window_, window_.value_or(0));
  Json j = header("family certificate");
  j["description"] = c.description;
  j["kappa_bound"] = c.kappa_bound;
  j["order_k"] = c.order_k;
  Json validated = Json::array();
  std::string text = "certificate = " + c.description + "\nkappa_bound = " + std::to_string(c.kappa_bound) +
                     "\norder_k = " + std::to_string(c.order_k) + "\n";
  for (const auto& [n, v] : c.validated) {
    validated.push_back(Json{{"window", n}, {"kappa", v}});
    text += "window " + std::to_string(n) + ": kappa = " + std::to_string(v) + "\n";
  }
  j["validated"] = validated;
  emit(j, text);
}

void Runner::family_link_verb() {
  const auto r = windowed_linking(family(), read_labels(x_), read_labels(y_), policy());
  write_trace(r.linking.witness_trace);
  Json j = header("family link");
  j["window"] = r.window;
  j["contract"] = labels_json(r.linking.spec.contract);
  j["delete"] = labels_json(r.linking.spec.remove);
  j["delete_outside_window"] = r.delete_outside_window;
  j["achieved"] = value_json(r.linking.achieved);
  j["report"] = report_json(r.report);
  emit(j, "window = " + std::to_string(r.window) + "\ncontract = " + r.linking.spec.contract.to_string() +
              "\ndelete = " + r.linking.spec.remove.to_string() + " and everything outside the window\nachieved = " +
              r.linking.achieved.to_string() + "\n");
}

void Runner::family_rung_scan_verb() {
  const auto f = family();
  const auto scan = scan_rung_partitions(f, window_.value_or(0), "rung", budget());
  Json j = header("family rung-scan");
  j["window"] = scan.window;
  j["partitions_checked"] = scan.partitions_checked;
  Json connected = Json::array();
  std::string text = "window = " + std::to_string(scan.window) +
                     "\npartitions = " + std::to_string(scan.partitions_checked) +
                     "\nconnected = " + std::to_string(scan.connected_contractions.size()) + "\n";
  for (const auto& a : scan.connected_contractions) {
    connected.push_back(labels_json(a));
    text += "contract " + a.to_string() + "\n";
  }
  j["connected_contractions"] = connected;
  j["full_deletion_disconnects"] = scan.full_deletion_disconnects;
  text += std::string("full deletion disconnects = ") + (scan.full_deletion_disconnects ? "yes" : "no") + "\n";
  emit(j, text);
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Matroid connectivity, separations and linking"};
  app.name("matroid-kappa");
  app.require_subcommand(1);
  app.add_flag("--json", json_, "JSON output");
  app.add_option("--budget", budget_flag_, "element budget for exhaustive searches");

  auto file_verb = [&](const std::string& name, const std::string& help, void (Runner::*fn)()) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", file_, "matroid description")->required();
    sub->callback([this, fn] { action_ = [this, fn] { (this->*fn)(); }; });
    return sub;
  };
  file_verb("check-axioms", "check the matroid axioms", &Runner::check_axioms_verb);
  file_verb("circuits", "list circuits", &Runner::circuits_verb);
  file_verb("rank", "rank of a set", &Runner::rank_verb)->add_option("--set", set_, "labels or @file");
  file_verb("dual", "dual matroid", &Runner::dual_verb);
  auto* minor = file_verb("minor", "minor M/C - D", &Runner::minor_verb);
  minor->add_option("--contract", contract_, "labels or @file");
  minor->add_option("--delete", delete_, "labels or @file");
  auto* sum = app.add_subcommand("sum", "direct sum");
  sum->fallthrough();
  sum->add_option("files", files_, "matroid descriptions")->required();
  sum->callback([this] { action_ = [this] { sum_verb(); }; });
  file_verb("components", "connected components", &Runner::components_verb);
  file_verb("kappa", "connectivity of a set", &Runner::kappa_verb)->add_option("--set", set_, "labels or @file")->required();
  auto* kb = file_verb("kappa-between", "kappa(X, Y)", &Runner::kappa_between_verb);
  kb->add_option("--x", x_, "labels or @file")->required();
  kb->add_option("--y", y_, "labels or @file")->required();
  file_verb("separation", "first l-separation with l <= k", &Runner::separation_verb)->add_option("--k", k_, "largest order l");
  file_verb("connected", "k-connectivity test", &Runner::connected_verb)->add_option("--k", k_, "connectivity, default 2");
  auto* link = file_verb("link", "linking partition", &Runner::link_verb);
  link->add_option("--x", x_, "labels or @file")->required();
  link->add_option("--y", y_, "labels or @file")->required();
  link->add_flag("--constructive", constructive_, "grow X', Y' and the Z_t chain first");
  link->add_option("--trace", trace_, "JSON-lines trace file");

  auto* fam = app.add_subcommand("family", "windowed infinite families");
  fam->fallthrough();
  fam->require_subcommand(1);
  fam->add_option("--id", family_id_, "double-ladder | omega-tree | infinite-uniform(k) | user-graph-rule")
      ->required();
  fam->add_option("--rule", family_rule_, "edge templates for user-graph-rule");
  fam->add_option("--window", window_, "window index");
  auto fam_verb = [&](const std::string& name, const std::string& help, void (Runner::*fn)()) {
    auto* sub = fam->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([this, fn] { action_ = [this, fn] { (this->*fn)(); }; });
    return sub;
  };
  fam_verb("window", "elements of a window", &Runner::family_window_verb);
  auto* fkb = fam_verb("kappa-between", "kappa(X, Y) in one window", &Runner::family_kappa_between_verb);
  fkb->add_option("--x", x_, "labels")->required();
  fkb->add_option("--y", y_, "labels")->required();
  for (auto [name, fn] : {std::pair{"stabilize", &Runner::family_stabilize_verb},
                          std::pair{"link", &Runner::family_link_verb}}) {
    auto* sub = fam_verb(name, name == std::string("link") ? "windowed linking" : "windowed kappa lower bounds", fn);
    sub->add_option("--x", x_, "labels")->required();
    sub->add_option("--y", y_, "labels")->required();
    sub->add_option("--max-window", max_window_, "last window, default 8");
    sub->add_option("--plateau", plateau_, "windows a value must repeat, default 3");
    sub->add_option("--certificate", certificate_, "separation template, see FAMILIES.md");
    if (name == std::string("link")) sub->add_option("--trace", trace_, "JSON-lines trace file");
  }
  auto* cert = fam_verb("certificate", "validate a separation template", &Runner::family_certificate_verb);
  cert->add_option("--desc", certificate_, "separation template")->required();
  cert->add_option("--max-window", max_window_, "last window checked");
  fam_verb("rung-scan", "contract/delete partitions of the rungs", &Runner::family_rung_scan_verb);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    return 1;
  }
  try {
    action_();
  } catch (const CapacityError& e) {
    err_ << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    err_ << "internal invariant failed: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace mkappa
