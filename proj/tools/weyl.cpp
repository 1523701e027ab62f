#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "weyl/element_io.hpp"
#include "weyl/error.hpp"
#include "weyl/eulerian.hpp"
#include "weyl/groebner.hpp"
#include "weyl/homology.hpp"
#include "weyl/models.hpp"
#include "weyl/resolution.hpp"
#include "weyl/suites.hpp"

using namespace weyl;
using nlohmann::json;

namespace {

struct Common {
  std::string out = "json";
  std::string output;
  std::string config;
  bool serial = false;
};

DegreeWindow parseWindow(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error("window must look like lo..hi, got '" + text + "'");
  DegreeWindow w{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  if (w.lo > w.hi) throw Error("empty window '" + text + "'");
  return w;
}

std::vector<int> parseIndexRange(const std::string& text) {
  const auto w = parseWindow(text);
  std::vector<int> v;
  for (int i = w.lo; i <= w.hi; ++i) v.push_back(i);
  return v;
}

json windowJson(const DegreeWindow& w) { return json::array({w.lo, w.hi}); }

void emit(const Common& c, const json& report, const std::string& csv) {
  std::ostringstream os;
  if (c.out == "csv") {
    os << csv;
  } else {
    os << report.dump(2) << '\n';
  }
  if (c.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.output);
    if (!f) throw Error("cannot write " + c.output);
    f << os.str();
  }
}

json tableJson(const HomologyTable& t) {
  json rows = json::array();
  for (const auto& [key, d] : t.dims) rows.push_back({key.first, key.second, d});
  return rows;
}

std::string tableCsv(const HomologyTable& t) {
  std::ostringstream os;
  os << "nu,degree,dim\n";
  for (const auto& [key, d] : t.dims) os << key.first << ',' << key.second << ',' << d << '\n';
  return os.str();
}

json eulerianJson(const EulerianReport& r) {
  json per = json::object();
  for (const auto& [d, o] : r.perDegree) per[std::to_string(d)] = o ? json(*o) : json(nullptr);
  return {{"window", windowJson(r.window)},
          {"bound", r.bound},
          {"radius", r.radius},
          {"exact_pieces", r.exactPieces},
          {"cells_checked", r.cellsChecked},
          {"per_degree", per},
          {"uniform_bound", r.uniformBound ? json(*r.uniformBound) : json(nullptr)},
          {"passed", r.passed()}};
}

/// Builds the table report and returns the exit code for an optional expectation.
int homologyReport(const Common& c, const HomologyTable& t, std::optional<int> expect, json models) {
  json report{{"schema", 1},
              {"invariant", t.invariant},
              {"window", windowJson(t.window)},
              {"indices", t.indices},
              {"exact_pieces", t.exactPieces},
              {"radius", t.radius},
              {"table", tableJson(t)},
              {"models", std::move(models)}};
  if (!t.eulerOrders.empty() || t.invariant != "ExtA(M,N)") {
    const auto bound = t.eulerUniformBound();
    report["euler_uniform_bound"] = bound ? json(*bound) : json(nullptr);
  }
  int code = 0;
  if (expect) {
    const auto rep = concentration(t, *expect);
    report["verdict"] = rep.verdict();
    report["vacuous"] = rep.vacuous;
    if (!rep.concentrated) code = static_cast<int>(Outcome::Counterexample);
  }
  emit(c, report, tableCsv(t));
  return code;
}

HomologyOptions homologyOptions(const Common& c, std::optional<int> radius) {
  HomologyOptions h;
  h.policy = c.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
  h.radius = radius;
  return h;
}

FreeResolution resolutionFromDescriptor(const json& d, std::optional<std::size_t> maxLength) {
  if (d.value("constructor", std::string()) != "presentation")
    throw Error("--M must be a presentation descriptor {constructor: presentation, args: {n, gens, ...}}");
  const auto& args = d.at("args");
  const auto n = args.at("n").get<std::size_t>();
  const TermOrder order = TermOrder::parse(args.value("order", std::string("degrevlex")));
  auto gb = buchberger(parseElementList(args.at("gens").get<std::string>(), n), order);
  std::optional<std::vector<int>> sigma;
  if (args.contains("fineShift")) sigma = args.at("fineShift").get<std::vector<int>>();
  return freeResolution(gb, d.value("shift", 0), sigma, maxLength);
}

void addCommon(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", c.output, "Write the report to a file instead of stdout");
  sub->add_flag("--serial", c.serial, "Use the serial reference path");
  sub->add_option("--config", c.config, "Flat key=value file mirroring the flags (flags win)");
}

/// Fills options left unset on the command line from a flat key=value file.
void applyConfig(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file " + path);
  for (const auto& item : CLI::ConfigINI().from_config(in)) {
    if (!item.parents.empty()) throw Error("config keys are flat; got section for '" + item.name + "'");
    CLI::Option* opt = sub->get_option_no_throw("--" + item.name);
    if (opt == nullptr) throw Error("unknown config key '" + item.name + "'");
    if (opt->count() > 0) continue;
    for (const auto& v : item.inputs) opt->add_result(v);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graded Weyl algebra engine"};
  app.require_subcommand(1);
  Common c;

  std::size_t n = 1;
  std::string text, gens, order = "degrevlex", model, window = "-10..10", ideal, modelM, modelN, nus;
  std::size_t cohom = 0;
  int shiftBy = 0;
  unsigned bound = 10;
  bool resolve = false;
  std::optional<int> expect, radius;
  std::optional<std::size_t> maxLength;
  std::string suite;

  auto* eval = app.add_subcommand("eval", "Normal form of an element");
  eval->add_option("--n", n, "Number of variables")->required();
  eval->add_option("expr", text, "Element, e.g. 'd1*x1' or 'E^2'")->required();

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of a left ideal");
  gb->add_option("--n", n, "Number of variables")->required();
  gb->add_option("--gens", gens, "Comma-separated homogeneous generators")->required();
  gb->add_option("--order", order, "degrevlex or deglex");
  gb->add_option("--shift", shiftBy, "Generator shift for the resolution");
  gb->add_flag("--resolve", resolve, "Also compute a graded free resolution");

  auto* eul = app.add_subcommand("eulerian-test", "Generalized Eulerian check");
  eul->add_option("--model", model, "Model descriptor (JSON)");
  eul->add_option("--n", n, "Number of variables (with --gens)");
  eul->add_option("--gens", gens, "Cyclic presentation A_n/J: smallest a with (E - g)^a in J");
  eul->add_option("--shift", shiftBy, "Shift s of (A_n/J)(s), generator degree -s");
  eul->add_option("--window", window, "Degree window lo..hi");
  eul->add_option("--bound", bound, "Largest nilpotency order tried");
  eul->add_option("--radius", radius, "Fine box radius for infinite coarse pieces");

  auto* lc = app.add_subcommand("localcoh", "Graded pieces of H^i_I(R) for a monomial ideal");
  lc->add_option("--n", n, "Number of variables")->required();
  lc->add_option("--ideal", ideal, "Squarefree monomial generators, e.g. 'x1*x2, x3'")->required();
  lc->add_option("--i", cohom, "Cohomological index")->required();
  lc->add_option("--window", window, "Degree window lo..hi");
  lc->add_option("--bound", bound, "Largest nilpotency order tried");
  lc->add_option("--radius", radius, "Fine box radius for infinite coarse pieces");

  auto* dr = app.add_subcommand("derham", "De Rham (d-Koszul) cohomology of a model");
  dr->add_option("--model", model, "Model descriptor (JSON)")->required();
  dr->add_option("--window", window, "Degree window lo..hi");
  dr->add_option("--expect", expect, "Expected concentration degree");
  dr->add_option("--radius", radius, "Fine box radius for infinite coarse pieces");

  auto* ext = app.add_subcommand("ext", "Ext over A_n from a free resolution of M");
  ext->add_option("--M", modelM, "Presentation descriptor (JSON)")->required();
  ext->add_option("--N", modelN, "Model descriptor (JSON)")->required();
  ext->add_option("--nu", nus, "Index range lo..hi")->required();
  ext->add_option("--window", window, "Degree window lo..hi");
  ext->add_option("--expect", expect, "Expected concentration degree");
  ext->add_option("--max-length", maxLength, "Truncate the resolution");
  ext->add_option("--radius", radius, "Fine box radius for infinite coarse pieces");

  auto* tor = app.add_subcommand("tor", "Tor^R(M,N), or Tor^{A_n}(R^r,N) when --M is omitted");
  tor->add_option("--M", modelM, "Model descriptor (JSON)");
  tor->add_option("--N", modelN, "Model descriptor (JSON)")->required();
  tor->add_option("--nu", nus, "Index range lo..hi")->required();
  tor->add_option("--window", window, "Degree window lo..hi");
  tor->add_option("--expect", expect, "Expected concentration degree");
  tor->add_option("--radius", radius, "Fine box radius for infinite coarse pieces");

  auto* verify = app.add_subcommand("verify", "Run a bundled verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suiteNames()));

  for (auto* sub : {eval, gb, eul, lc, dr, ext, tor, verify}) addCommon(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : static_cast<int>(Outcome::Usage);
  }
  configureThreads();

  try {
    if (!c.config.empty())
      for (auto* sub : app.get_subcommands()) applyConfig(sub, c.config);
    if (*eval) {
      const auto e = parseElement(text, n);
      emit(c, {{"schema", 1}, {"n", n}, {"input", text}, {"result", toString(e)}}, toString(e) + "\n");
      return 0;
    }
    if (*gb) {
      const auto g = buchberger(parseElementList(gens, n), TermOrder::parse(order));
      json basis = json::array();
      std::string csv;
      for (const auto& e : g.idealGenerators()) {
        basis.push_back(toString(e));
        csv += toString(e) + "\n";
      }
      json report{{"schema", 1}, {"n", n}, {"order", g.order().name()}, {"basis", basis}};
      if (resolve) {
        const auto r = freeResolution(g, shiftBy);
        report["resolution"] = {{"shift", shiftBy},
                                {"degrees", r.degrees},
                                {"truncated", r.truncated},
                                {"is_complex", isComplex(r)}};
      }
      emit(c, report, csv);
      return 0;
    }
    if (*eul) {
      const DegreeWindow w = parseWindow(window);
      if (!gens.empty()) {
        const auto g = buchberger(parseElementList(gens, n));
        const auto a = eulerianIndex(g, bound, -shiftBy);
        emit(c, {{"schema", 1}, {"gens", gens}, {"shift", shiftBy}, {"index", a ? json(*a) : json(nullptr)}},
             (a ? std::to_string(*a) : std::string("none")) + "\n");
        return a ? 0 : static_cast<int>(Outcome::Inconclusive);
      }
      if (model.empty()) throw Error("eulerian-test needs --model or --gens");
      const auto m = modelFromDescriptor(json::parse(model));
      const auto rep = checkGeneralizedEulerian(*m, w, bound, radius,
                                                c.serial ? ExecPolicy::Serial : ExecPolicy::Parallel);
      std::string csv = "degree,order\n";
      for (const auto& [d, o] : rep.perDegree) csv += std::to_string(d) + "," + (o ? std::to_string(*o) : "none") + "\n";
      emit(c, {{"schema", 1}, {"model", m->descriptor()}, {"eulerian", eulerianJson(rep)}}, csv);
      return rep.passed() ? 0 : static_cast<int>(Outcome::Inconclusive);
    }
    if (*lc) {
      const DegreeWindow w = parseWindow(window);
      const auto m = cechLocalCohomologyModel(n, parseMonomialIdeal(ideal, n), cohom);
      const auto rep = checkGeneralizedEulerian(*m, w, bound, radius,
                                                c.serial ? ExecPolicy::Serial : ExecPolicy::Parallel);
      const auto plan = planCells(*m, w, rep.radius);
      json dims = json::object();
      std::string csv = "degree,dim\n";
      for (const auto& [d, cells] : plan.cells) {
        std::size_t total = 0;
        for (const auto& v : cells) total += m->dim(v);
        dims[std::to_string(d)] = total;
        csv += std::to_string(d) + "," + std::to_string(total) + "\n";
      }
      emit(c,
           {{"schema", 1}, {"model", m->descriptor()}, {"dims", dims}, {"exact_pieces", plan.exact},
            {"radius", plan.radius}, {"eulerian", eulerianJson(rep)}},
           csv);
      return 0;
    }
    if (*dr) {
      const auto m = modelFromDescriptor(json::parse(model));
      std::vector<int> idx;
      for (int i = 0; i <= static_cast<int>(m->actingRank()); ++i) idx.push_back(i);
      std::vector<KoszulOperator> ops;
      for (std::size_t i = 0; i < m->actingRank(); ++i) ops.push_back({KoszulOp::D, i});
      const auto t = koszulHomology(m, ops, idx, parseWindow(window), homologyOptions(c, radius));
      return homologyReport(c, t, expect, {{"M", m->descriptor()}});
    }
    if (*ext) {
      const json dm = json::parse(modelM);
      const auto res = resolutionFromDescriptor(dm, maxLength);
      const auto m = modelFromDescriptor(json::parse(modelN));
      const auto t = extOverAn(res, m, parseIndexRange(nus), parseWindow(window), homologyOptions(c, radius));
      return homologyReport(c, t, expect, {{"M", dm}, {"N", m->descriptor()}});
    }
    if (*tor) {
      const auto nm = modelFromDescriptor(json::parse(modelN));
      if (modelM.empty()) {
        const auto t = torAgainstRr(nm, parseIndexRange(nus), parseWindow(window), homologyOptions(c, radius));
        return homologyReport(c, t, expect, {{"N", nm->descriptor()}});
      }
      const auto mm = modelFromDescriptor(json::parse(modelM));
      const auto t = torOverR(mm, nm, parseIndexRange(nus), parseWindow(window), homologyOptions(c, radius));
      return homologyReport(c, t, expect, {{"M", mm->descriptor()}, {"N", nm->descriptor()}});
    }
    if (*verify) {
      SuiteOptions o;
      o.policy = c.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
      const auto r = runSuite(suite, o);
      std::string csv = "check,passed,detail\n";
      for (const auto& ch : r.checks) csv += "\"" + ch.name + "\"," + (ch.passed ? "1" : "0") + ",\"" + ch.detail + "\"\n";
      emit(c, r.toJson(), csv);
      return static_cast<int>(r.outcome());
    }
  } catch (const InfiniteDimensionalPiece& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return static_cast<int>(Outcome::Inconclusive);
  } catch (const TruncatedResolution& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return static_cast<int>(Outcome::Inconclusive);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(Outcome::Usage);
  } catch (const json::exception& e) {
    std::cerr << "error: bad descriptor: " << e.what() << '\n';
    return static_cast<int>(Outcome::Usage);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(Outcome::Usage);
  }
  return static_cast<int>(Outcome::Usage);
}
