// pries: command-line front end for the finite frame / Priestley toolkit.
// stdout carries JSON (one document per line); stderr carries the human summary.
// Exit codes: 0 all checks passed, 1 a property failed, 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pries/duality.hpp"
#include "pries/enumerate.hpp"
#include "pries/json_io.hpp"
#include "pries/jt.hpp"
#include "pries/omega.hpp"
#include "pries/sublocale.hpp"
#include "pries/sweep.hpp"

using namespace pries;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Input that does not describe a valid instance.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
auto load(const std::string& path, Fn&& fn) {
  try {
    return fn(io::read_json(path));
  } catch (const Error& e) {
    // BadInput messages already name the file.
    throw InputError(e.code() == ErrorCode::BadInput ? std::string(e.what()) : path + ": " + e.what());
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

FramePtr load_frame(const std::string& path) { return load(path, [](const json& j) { return io::frame_from_json(j); }); }
LatticeMap load_map(const std::string& path) {
  return load(path, [](const json& j) { return io::lattice_map_from_json(j); });
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

int report_check(const std::string& property, const Check& c, json extra = json::object()) {
  json out{{"property", property}, {property, c.holds}, {"holds", c.holds}, {"witness", c.witness}};
  for (auto& [k, v] : extra.items()) out[k] = v;
  emit(out);
  std::cerr << property << ": " << (c.holds ? "true" : "false");
  if (!c.holds) std::cerr << " (witness " << list(c.witness) << ")";
  std::cerr << '\n';
  return c.holds ? kPass : kFail;
}

// --- commands

int cmd_spectrum(const std::string& path) {
  auto l = load_frame(path);
  auto x = prime_filters(l);
  emit(io::spectrum_to_json(x));
  std::cerr << "spectrum: " << x.size() << " prime filters, " << x.order->strict_pairs().size()
            << " strict inclusions\n";
  return kPass;
}

int cmd_dual_hom(const std::string& path) {
  auto h = load_map(path);
  auto f = dual_of_hom(h);
  emit({{"dual", io::monotone_map_to_json(f)}, {"equation_i", true}});
  std::cerr << "dual map X_M -> X_L: " << list(f.table()) << '\n';
  return kPass;
}

int cmd_adjoints(const std::string& path) {
  auto h = load_map(path);
  auto r = right_adjoint(h);
  auto lo = left_adjoint(h);
  emit({{"right", r.table()}, {"left", lo ? json(lo->table()) : json(nullptr)}});
  std::cerr << "right adjoint: " << list(r.table()) << "\nleft adjoint: " << (lo ? list(lo->table()) : "none")
            << '\n';
  return kPass;
}

int cmd_check(const std::string& property, const std::string& path) {
  if (property == "subfit") return report_check("subfit", is_subfit(*load_frame(path)));
  if (property == "pmorphism") {
    auto f = load(path, [](const json& j) { return io::monotone_map_from_json(j); });
    return report_check("pmorphism", is_pmorphism(f));
  }
  auto h = load_map(path);
  if (property == "frame-hom") return report_check("frame-hom", is_frame_hom(h));
  if (property == "localic") return report_check("localic", is_localic_map(h));
  if (property == "heyting") return report_check("heyting", is_complete_heyting_hom(h));
  if (property == "frobenius") {
    auto lo = left_adjoint(h);
    if (!lo) return report_check("frobenius", Check::fail({}), {{"left", nullptr}});
    return report_check("frobenius", frobenius_holds(h, *lo), {{"left", lo->table()}});
  }
  // open: the input is a frame hom h; its right adjoint is the localic map tested
  auto res = is_open_localic_map(right_adjoint(h));
  Check c = res.open ? Check::pass() : Check::fail({*res.failing});
  return report_check("open", c, {{"pairs", io::witness_pairs_to_json(res.witnesses)}});
}

int cmd_verify_jt(std::size_t max_dual, int threads, bool quiet) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = sweep_instances(max_dual);
  SweepTotals totals;
  auto print = [&](const std::vector<JTReport>& reps) {
    if (quiet) return;
    for (const auto& r : reps) emit(io::report_to_json(r));
  };
  if (threads == 1) {
    // Serial: stream each instance as it completes.
    std::vector<JTReport> all;
    for (const auto& inst : instances) {
      auto reps = sweep_instance(inst);
      print(reps);
      all.insert(all.end(), std::make_move_iterator(reps.begin()), std::make_move_iterator(reps.end()));
    }
    totals = totals_of(all, instances.size());
  } else {
    auto res = sweep_jt_parallel(instances, threads);
    print(res.reports);
    totals = res.totals;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit({{"summary",
         {{"max_dual_size", max_dual},
          {"instances", totals.instances},
          {"homs", totals.homs},
          {"violations", totals.violations},
          {"all_true", totals.all_true},
          {"all_true_non_identity", totals.all_true_non_identity},
          {"all_false", totals.all_false}}}});
  std::cerr << "verify-jt: " << totals.instances << " frame pairs, " << totals.homs << " homs, " << totals.violations
            << " violations (" << totals.all_true << " all-true, " << totals.all_false << " all-false) in " << secs
            << " s\n";
  return totals.violations == 0 ? kPass : kFail;
}

int cmd_subfit(const std::string& path, const std::optional<std::string>& target) {
  auto l = load_frame(path);
  const bool subfit = subfit_dual_check(l);
  json out{{"subfit", subfit}, {"min_dense", subfit}};
  if (auto c = is_subfit(*l); !c) out["witness"] = {{"a", c.witness[0]}, {"b", c.witness[1]}};
  if (target) {
    if (!subfit) {
      emit(out);
      std::cerr << "subfit: false; the corollary needs a subfit source\n";
      return kFail;
    }
    out["corollary_homs"] = subfit_corollary_check(l, load_frame(*target));
  }
  emit(out);
  std::cerr << "subfit: " << (subfit ? "true" : "false") << '\n';
  return subfit ? kPass : kFail;
}

int cmd_counterexample(std::size_t bound, std::optional<std::size_t> dot_levels) {
  if (dot_levels) {
    std::cout << omega::counterexample_dot(*dot_levels);
    return kPass;
  }
  const auto rep = omega::check_counterexample(bound, true);
  json shapes = json::array();
  for (const auto& s : rep.shapes)
    shapes.push_back({{"shape", omega::to_string(s.kind)},
                      {"template", s.template_text},
                      {"image", s.image_text},
                      {"image_clopen_upset", s.image_clopen_upset},
                      {"instances", s.instances_checked}});
  const auto density = omega::min_dense_Y();
  emit({{"bound", rep.bound},
        {"witness", rep.witness.to_string()},
        {"witness_open", rep.witness_open},
        {"image", rep.witness_image.to_string()},
        {"image_open", !rep.witness_image_not_open},
        {"x_l_space", rep.x_is_l_space},
        {"y_l_space", rep.y_is_l_space},
        {"f_l_morphism", rep.f_l_morphism},
        {"f_continuous", rep.f_continuous},
        {"f_monotone", rep.f_monotone},
        {"clopen_upset_images", rep.bounded_clopen_images},
        {"x_clopen_upsets", rep.x_clopen_upsets},
        {"min_y_dense", density.dense},
        {"shapes", shapes},
        {"failures", rep.failures},
        {"result", rep.passed() ? "PASS" : "FAIL"}});
  std::cerr << "witness U = " << rep.witness.to_string() << " (open: " << std::boolalpha << rep.witness_open
            << ")\nf[U] = " << rep.witness_image.to_string() << " (open: " << !rep.witness_image_not_open << ")\n";
  for (const auto& s : rep.shapes)
    std::cerr << "  " << omega::to_string(s.kind) << ": " << s.template_text << "  ->  " << s.image_text << '\n';
  for (const auto& f : rep.failures) std::cerr << "  failure: " << f << '\n';
  std::cerr << (rep.passed() ? "PASS" : "FAIL") << '\n';
  return rep.passed() ? kPass : kFail;
}

int cmd_enumerate(std::optional<std::size_t> posets, std::optional<std::size_t> frames) {
  if (posets.has_value() == frames.has_value()) throw CLI::ValidationError("enumerate", "give exactly one of --posets, --frames");
  const std::size_t n = posets ? *posets : *frames;
  const auto& cat = all_posets(n);
  for (std::size_t i = 0; i < cat.representatives.size(); ++i) {
    const auto& p = cat.representatives[i];
    if (posets) {
      emit({{"index", i}, {"code", canonical_code(*p)}, {"poset", io::poset_to_json(*p)}});
    } else {
      emit({{"index", i}, {"dual", io::poset_to_json(*p)}, {"frame", io::frame_to_json(*clopup_frame(p).frame)}});
    }
  }
  std::cerr << cat.representatives.size() << (posets ? " posets" : " frames") << " for n = " << n << '\n';
  return kPass;
}

std::string dot_of(const Poset& p, const Bits& highlight, const std::string& name,
                   const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=\"" << names[i] << "\"";
    if (highlight.size() == p.size() && highlight.test(i)) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (auto [i, j] : p.covers()) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

int cmd_export_dot(const std::string& path, bool spectrum, const std::vector<std::size_t>& highlight,
                   std::optional<std::size_t> stone) {
  PosetPtr order;
  std::vector<std::string> names;
  Bits marked;
  if (spectrum) {
    auto l = load_frame(path);
    auto x = prime_filters(l);
    order = x.order;
    for (const auto& f : x.filters) {
      std::string s = "{";
      for (auto m : f.members()) s += (s.size() > 1 ? "," : "") + l->order().label(m);
      names.push_back(s + "}");
    }
    if (stone) {
      if (*stone >= l->size()) throw InputError("--stone element out of range");
      marked = x.stone(*stone);
    }
  } else {
    order = share(load(path, [](const json& j) { return io::poset_from_json(j); }));
    for (std::size_t i = 0; i < order->size(); ++i) names.push_back(order->label(i));
    if (stone) throw InputError("--stone needs --spectrum");
  }
  if (!highlight.empty()) {
    marked = Bits(order->size());
    for (auto i : highlight) {
      if (i >= order->size()) throw InputError("--highlight element out of range");
      marked.set(i);
    }
  }
  std::cout << dot_of(*order, marked, spectrum ? "spectrum" : "poset", names);
  if (marked.size() == order->size())
    std::cerr << "highlighted set is " << (order->is_upset(marked) ? "an upset" : "not an upset") << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames, Priestley duality and open localic maps"};
  app.require_subcommand(1);

  std::string input;
  std::string property;
  std::size_t max_dual = 3;
  int threads = 0;
  bool quiet = false;
  std::size_t bound = 6;
  std::optional<std::size_t> dot_levels, posets, frames, stone;
  std::optional<std::string> target;
  bool spectrum = false;
  std::vector<std::size_t> highlight;

  auto* spec = app.add_subcommand("spectrum", "Prime-filter spectrum of a frame");
  spec->add_option("input", input, "frame JSON ('-' for stdin)")->required();
  auto* dual = app.add_subcommand("dual-hom", "Dual monotone map of a frame homomorphism");
  dual->add_option("input", input, "map JSON")->required();
  auto* adj = app.add_subcommand("adjoints", "Right and left adjoints of a map");
  adj->add_option("input", input, "map JSON")->required();
  auto* check = app.add_subcommand("check", "Check one property of a frame or map");
  check->add_option("--property", property, "property to check")
      ->required()
      ->check(CLI::IsMember({"frame-hom", "localic", "open", "heyting", "frobenius", "subfit", "pmorphism"}));
  check->add_option("input", input, "frame, map or monotone-map JSON")->required();
  auto* vjt = app.add_subcommand("verify-jt", "Exhaustive six-way equivalence sweep");
  vjt->add_option("--max-dual-size", max_dual, "largest spectrum size")->check(CLI::Range(0, 5));
  vjt->add_option("--threads", threads, "worker threads (0: OpenMP default, 1: serial streaming)")
      ->check(CLI::NonNegativeNumber);
  vjt->add_flag("--summary-only", quiet, "suppress per-hom reports");
  auto* sub = app.add_subcommand("subfit", "Subfitness of a frame and of its spectrum");
  sub->add_option("input", input, "frame JSON")->required();
  sub->add_option("--target", target, "frame M for the open-map corollary over homs L -> M");
  auto* ce = app.add_subcommand("counterexample", "Symbolic check of the infinite counterexample");
  ce->add_option("--bound", bound, "fiber sweep bound N")->check(CLI::Range(1, 12));
  ce->add_option("--dot", dot_levels, "print a DOT diagram truncated to this many levels instead");
  auto* en = app.add_subcommand("enumerate", "Posets or frames up to isomorphism");
  en->add_option("--posets", posets, "poset size")->check(CLI::Range(1, 7));
  en->add_option("--frames", frames, "spectrum size")->check(CLI::Range(1, 7));
  auto* dot = app.add_subcommand("export-dot", "Graphviz covering diagram");
  dot->add_option("input", input, "poset JSON, or frame JSON with --spectrum")->required();
  dot->add_flag("--spectrum", spectrum, "render the prime-filter spectrum of a frame");
  dot->add_option("--highlight", highlight, "element indices to highlight")->delimiter(',');
  dot->add_option("--stone", stone, "highlight phi(a) on the spectrum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*spec) return cmd_spectrum(input);
    if (*dual) return cmd_dual_hom(input);
    if (*adj) return cmd_adjoints(input);
    if (*check) return cmd_check(property, input);
    if (*vjt) return cmd_verify_jt(max_dual, threads, quiet);
    if (*sub) return cmd_subfit(input, target);
    if (*ce) return cmd_counterexample(bound, dot_levels);
    if (*en) return cmd_enumerate(posets, frames);
    if (*dot) return cmd_export_dot(input, spectrum, highlight, stone);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    emit({{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", e.witness()}});
    std::cerr << e.what();
    if (!e.witness().empty()) std::cerr << " (witness " << list(e.witness()) << ")";
    std::cerr << '\n';
    return e.code() == ErrorCode::SizeRefused || e.code() == ErrorCode::BadInput ? kUsage : kFail;
  }
  return kUsage;
}
