#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rpm/asm.hpp"
#include "rpm/hexagon.hpp"
#include "rpm/orbits.hpp"
#include "rpm/polynomial.hpp"
#include "rpm/serialize.hpp"
#include "rpm/simulate.hpp"
#include "rpm/stationary.hpp"
#include "rpm/verify.hpp"

using namespace rpm;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::string output;
  int cap_ab = Caps{}.ab;
  int cap_c = Caps{}.c;
  std::string kernel = "auto";

  SolveOptions solve() const {
    SolveOptions o;
    o.caps.ab = cap_ab;
    o.caps.c = cap_c;
    if (kernel == "bareiss") o.kernel.method = KernelMethod::Bareiss;
    else if (kernel == "modular") o.kernel.method = KernelMethod::Modular;
    return o;
  }
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw UsageError("cannot write " + c.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit(const Common& c, const Json& j) { emit(c, j.dump(2)); }

Model model_arg(const std::string& text) {
  const auto m = parse_model(text);
  if (!m) throw UsageError("unknown model '" + text + "', expected A, B or C");
  return *m;
}

int parse_int(std::string_view text, const std::string& what) {
  int v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) throw UsageError("bad " + what + " '" + std::string(text) + "'");
  return v;
}

// "a:b" as two integers, or a single integer for both.
std::pair<int, int> parse_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  const std::string_view t(text);
  return {parse_int(t.substr(0, colon), "range"), parse_int(t.substr(colon + 1), "range")};
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto [a, b] = parse_pair(text);
  if (b < a) throw UsageError("empty range " + text);
  return {a, b};
}

std::vector<Height> parse_heights(const std::string& text) {
  std::vector<Height> h;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) h.push_back(static_cast<Height>(parse_int(item, "height")));
  return h;
}

Json read_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read " + file);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(file + ": " + e.what());
  }
}

std::string text_table(const StationaryState& s) {
  std::ostringstream out;
  const Summary sum = summarize(s);
  out << "model " << to_string(s.model()) << "  L=" << s.L() << "  states=" << s.size() << '\n';
  out << "S=" << sum.S << "  m=" << sum.m << " (x" << sum.mult_m << ")  M=" << sum.M << " (x" << sum.mult_M << ")\n";
  for (std::size_t i = 0; i < s.size(); ++i) out << s.space()[i].str() << '\t' << s.weights()[i] << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Raise-and-peel stationary states, orbits and lattice identities"};
  app.require_subcommand(0, 1);
  Common common;
  bool schema = false;
  app.add_flag("--schema", schema, "Print the JSON schema of every output and exit");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", common.output, "Write to a file instead of stdout");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--cap-ab", common.cap_ab, "Largest L for models A and B");
    sub->add_option("--cap-c", common.cap_c, "Largest L for model C");
    sub->add_option("--kernel", common.kernel, "Null-space method")->check(CLI::IsMember({"auto", "bareiss", "modular"}));
  };

  std::string model_text = "A", family_text;
  int L = 4;

  auto* enumerate = app.add_subcommand("enumerate", "List the paths of a family in canonical order");
  enumerate->add_option("--model", model_text, "Model whose family to list");
  enumerate->add_option("--family", family_text, "Family (Dyck, Ballot, AnchoredCross); overrides --model");
  enumerate->add_option("-L,--l,--size", L, "System size")->required();
  add_common(enumerate);

  auto* stationary = app.add_subcommand("stationary", "Exact stationary state");
  stationary->add_option("--model", model_text)->required();
  stationary->add_option("-L,--l,--size", L)->required();
  add_common(stationary);
  add_solver(stationary);

  auto* detailed = app.add_subcommand("detailed", "Level-set sums and maxima of a stationary state");
  detailed->add_option("--model", model_text)->required();
  detailed->add_option("-L,--l,--size", L)->required();
  add_common(detailed);
  add_solver(detailed);

  int level = 0;
  std::string side_text = "left", generator_text, state_file;
  auto* orbits = app.add_subcommand("orbits", "Left or right covering orbits with their weight sums");
  orbits->add_option("--model", model_text, "B (left orbits) or C (right orbits)")->required();
  orbits->add_option("-L,--l,--size", L)->required();
  orbits->add_option("--level", level, "Contact level N");
  orbits->add_option("--side", side_text)->check(CLI::IsMember({"left", "right"}));
  orbits->add_option("--generator", generator_text, "Comma-separated heights; default is every maximal generator");
  orbits->add_option("--state", state_file, "Stationary state JSON to take weights from");
  add_common(orbits);
  add_solver(orbits);

  std::string m_range = "0:8", n_range = "0:4", seed_text = "closed";
  bool check = false, symmetry = false;
  auto* hexagon = app.add_subcommand("hexagon", "Values of the hexagon lattice on a window");
  hexagon->add_option("--m", m_range, "Column range a:b");
  hexagon->add_option("--n", n_range, "Row range a:b");
  hexagon->add_option("--seed", seed_text, "Source of values")->check(CLI::IsMember({"closed", "boundary", "lines"}));
  hexagon->add_flag("--check", check, "Check the relation and agreement with the closed form");
  hexagon->add_flag("--symmetry", symmetry, "Run the symmetry and specialisation suite on the window");
  add_common(hexagon);

  std::string poly_family = "F";
  int pm = 4, pn = 2;
  std::string table_range;
  auto* poly = app.add_subcommand("poly", "Lattice polynomials F_{m,n}(x,y) and G_{m,n}(x)");
  poly->add_option("--family", poly_family)->check(CLI::IsMember({"F", "G"}));
  poly->add_option("--m", pm);
  poly->add_option("--n", pn);
  poly->add_option("--table", table_range, "All cells with m <= a, n <= b, as a:b");
  add_common(poly);

  int n_max = 6;
  bool identities = false;
  auto* asmc = app.add_subcommand("asm", "Alternating sign matrix counts and identities");
  asmc->add_option("--n-max", n_max);
  asmc->add_flag("--identities", identities, "Run the identity suite (n <= 6)");
  add_common(asmc);

  std::string conjecture = "all";
  int max_l = 8;
  bool with_hexagon = false;
  std::vector<std::string> state_files;
  auto* verify = app.add_subcommand("verify", "Check the conjectured identities on exact states");
  verify->add_option("--conjecture", conjecture, "1..13, X, hexagon or all");
  verify->add_option("--max-l", max_l);
  verify->add_flag("--hexagon", with_hexagon, "Also check the hexagon relation on model A level sums");
  verify->add_option("--state", state_files, "Stationary state JSON files to reuse");
  add_common(verify);
  add_solver(verify);

  SimOptions sim;
  long long burn_in = -1;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run compared with the exact state");
  simulate->add_option("--model", model_text)->required();
  simulate->add_option("-L,--l,--size", L)->required();
  simulate->add_option("--steps", sim.steps);
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--burn-in", burn_in, "Discarded steps; default steps/10");
  add_common(simulate);
  add_solver(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (schema) {
      std::cout << output_schema().dump(2) << '\n';
      return kOk;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kUsage;
    }
    const SolveOptions solve = common.solve();
    const bool text = common.format == "text", csv = common.format == "csv";

    if (*enumerate) {
      Family family = family_of(model_arg(model_text));
      if (!family_text.empty()) {
        const auto f = parse_family(family_text);
        if (!f) throw UsageError("unknown family '" + family_text + "'");
        family = *f;
      }
      const auto paths = enumerate_family(family, L);
      if (text || csv) {
        std::ostringstream out;
        if (csv) out << "index,heights\n";
        for (std::size_t i = 0; i < paths.size(); ++i) {
          out << (csv ? std::to_string(i) + ",\"" : "") << paths[i].str() << (csv ? "\"" : "") << '\n';
        }
        emit(common, out.str());
      } else {
        Json j = Json::array();
        for (const auto& p : paths) j.push_back(to_json(p));
        emit(common, j);
      }
      return kOk;
    }

    if (*stationary) {
      const StationaryState s = stationary_state(model_arg(model_text), L, solve);
      if (csv) emit(common, state_csv(s));
      else if (text) emit(common, text_table(s));
      else emit(common, to_json(s));
      return kOk;
    }

    if (*detailed) {
      const Model model = model_arg(model_text);
      const StationaryState s = stationary_state(model, L, solve);
      const DetailedStats d = detailed_stats(s);
      if (csv || text) {
        std::ostringstream out;
        out << "N,S_LN,M_LN\n";
        for (const auto& [N, v] : d.S_LN) out << N << ',' << v << ',' << d.M_LN.at(N) << '\n';
        emit(common, out.str());
      } else {
        emit(common, to_json(d, model, L));
      }
      return kOk;
    }

    if (*orbits) {
      const Model model = model_arg(model_text);
      if (model == Model::A) throw UsageError("orbits are built on model B or C paths");
      const Side side = side_text == "left" ? Side::Left : Side::Right;
      const StationaryState s =
          state_file.empty() ? stationary_state(model, L, solve) : state_from_json(read_json(state_file));
      if (s.model() != model || s.L() != L) throw UsageError("state file does not match --model/-L");
      std::vector<HeightPath> gens;
      if (!generator_text.empty()) gens.emplace_back(family_of(model), parse_heights(generator_text));
      else gens = maximal_generators(family_of(model), L, level, side);
      Json j = Json::array();
      std::ostringstream out;
      if (csv) out << "generator,level,side,size,sum\n";
      for (const HeightPath& g : gens) {
        const Orbit o = orbit_closure(g, level, side);
        if (csv || text) {
          out << (csv ? "\"" : "") << g.str() << (csv ? "\"," : "  N=") << level << (csv ? "," : " ")
              << to_string(side) << (csv ? "," : " size=") << o.members.size() << (csv ? "," : " sum=")
              << orbit_sum(s, o) << '\n';
        } else {
          j.push_back(to_json(o, &s));
        }
      }
      if (csv || text) emit(common, out.str());
      else emit(common, j);
      return kOk;
    }

    if (*hexagon) {
      const auto [m_lo, m_hi] = parse_range(m_range);
      const auto [n_lo, n_hi] = parse_range(n_range);
      const Window w{m_lo, m_hi, n_lo, n_hi};
      HexLattice lat(w);
      if (seed_text == "closed") {
        for (int n = n_lo; n <= n_hi; ++n) {
          for (int m = m_lo; m <= m_hi; ++m) {
            try {
              lat.set(m, n, f_closed(m, n));
            } catch (const std::domain_error&) {
            }
          }
        }
      } else {
        lat = f_reconstruct(w, seed_text == "boundary" ? Seed::Boundary : Seed::SpecialLines);
      }
      std::vector<RelationCheck> checks;
      if (check) {
        for (int n = n_lo; n <= n_hi; ++n) {
          for (int m = m_lo; m <= m_hi; ++m) {
            if (!lat.known(m, n)) continue;
            try {
              const Rational f = f_closed(m, n);
              checks.push_back({"closed form", "(" + std::to_string(m) + "," + std::to_string(n) + ")",
                                lat.at(m, n).get_str(), f.get_str(), lat.at(m, n) == f});
            } catch (const std::domain_error&) {
            }
            const bool inner = lat.known(m - 1, n) && lat.known(m + 1, n) && lat.known(m, n - 1) &&
                               lat.known(m, n + 1) && lat.known(m - 1, n - 1) && lat.known(m + 1, n + 1);
            if (inner) {
              const Rational lhs = lat.at(m - 1, n) * lat.at(m + 1, n) + lat.at(m, n - 1) * lat.at(m, n + 1);
              const Rational rhs = lat.at(m - 1, n - 1) * lat.at(m + 1, n + 1);
              checks.push_back({"hexagon", "(" + std::to_string(m) + "," + std::to_string(n) + ")", lhs.get_str(),
                                rhs.get_str(), lhs == rhs});
            }
          }
        }
      }
      if (symmetry) {
        const auto extra = symmetry_suite(w);
        checks.insert(checks.end(), extra.begin(), extra.end());
      }
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
      if (csv || text) {
        std::string out = lat.to_csv();
        if (!checks.empty()) {
          const auto bad = std::count_if(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.pass; });
          std::cerr << checks.size() << " checks, " << bad << " failed\n";
        }
        emit(common, out);
      } else {
        Json values = Json::object();
        for (int n = n_hi; n >= n_lo; --n) {
          for (int m = m_lo; m <= m_hi; ++m) {
            if (lat.known(m, n)) values[std::to_string(m) + "," + std::to_string(n)] = lat.at(m, n).get_str();
          }
        }
        Json j{{"window", {{"m", {m_lo, m_hi}}, {"n", {n_lo, n_hi}}}}, {"source", seed_text}, {"values", values}};
        if (check || symmetry) {
          j["checks"] = to_json(checks);
          j["pass"] = ok;
        }
        emit(common, j);
      }
      return ok ? kOk : kFailed;
    }

    if (*poly) {
      const bool is_f = poly_family == "F";
      std::vector<std::pair<std::string, std::string>> cells;
      auto label = [&](int m, int n) { return poly_family + "_{" + std::to_string(m) + "," + std::to_string(n) + "}"; };
      if (table_range.empty()) {
        cells.emplace_back(label(pm, pn), (is_f ? poly_F(pm, pn) : poly_G(pm, pn)).str());
      } else {
        const auto [a, b] = parse_pair(table_range);
        if (is_f) {
          const FTable t(a, b);
          for (int n = 0; n <= b; ++n) {
            for (int m = 1; m <= a; ++m) {
              if (t.defined(m, n)) cells.emplace_back(label(m, n), t.at(m, n).str());
            }
          }
        } else {
          const GTable t(a + b);
          for (int n = 0; n <= b; ++n) {
            for (int m = 0; m <= a; ++m) cells.emplace_back(label(m, n), t.at(m, n).str());
          }
        }
      }
      if (csv || text) {
        std::ostringstream out;
        if (csv) out << "cell,polynomial\n";
        for (const auto& [k, v] : cells) out << k << (csv ? "," : " = ") << v << '\n';
        emit(common, out.str());
      } else {
        Json p = Json::object();
        for (const auto& [k, v] : cells) p[k] = v;
        emit(common, Json{{"family", poly_family}, {"polynomials", p}});
      }
      return kOk;
    }

    if (*asmc) {
      const auto rows = asm_table(n_max);
      std::vector<RelationCheck> checks;
      if (identities) checks = asm_identity_suite(std::min(n_max, 6));
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
      if (csv || text) {
        emit(common, identities ? checks_csv(checks) : asm_csv(rows));
      } else {
        Json j{{"table", to_json(rows)}};
        if (identities) {
          j["identities"] = to_json(checks);
          j["pass"] = ok;
        }
        emit(common, j);
      }
      return ok ? kOk : kFailed;
    }

    if (*verify) {
      StateCache cache(solve);
      for (const std::string& f : state_files) cache.insert(state_from_json(read_json(f)));
      std::vector<VerificationReport> reports;
      if (conjecture == "hexagon") {
        reports.push_back(verify_hexagon_on_states(max_l, cache));
      } else if (conjecture == "all") {
        for (const std::string& id : conjecture_ids()) reports.push_back(verify_conjecture(id, max_l, cache));
      } else {
        reports.push_back(verify_conjecture(conjecture, max_l, cache));
      }
      if (with_hexagon && conjecture != "hexagon") reports.push_back(verify_hexagon_on_states(max_l, cache));
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed();
      if (csv || text) {
        std::ostringstream out;
        if (csv) out << "id,label,lhs,rhs,pass,informational\n";
        for (const auto& r : reports) {
          if (text) out << r.id << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.instances.size() << " checks, "
                        << r.failures() << " failed)\n";
          for (const auto& i : r.instances) {
            if (csv) {
              out << r.id << ",\"" << i.label << "\"," << i.lhs << ',' << i.rhs << ',' << (i.pass ? "true" : "false")
                  << ',' << (i.informational ? "true" : "false") << '\n';
            } else if (!i.pass) {
              out << "  " << (i.informational ? "note " : "fail ") << i.label << ": " << i.lhs << " vs " << i.rhs << '\n';
            }
          }
        }
        emit(common, out.str());
      } else {
        Json j = Json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        emit(common, j);
      }
      return ok ? kOk : kFailed;
    }

    if (*simulate) {
      sim.burn_in = burn_in;
      sim.caps = solve.caps;
      const SimResult r = simulate_chain(model_arg(model_text), L, sim);
      if (csv) {
        emit(common, histogram_csv(r));
      } else if (text) {
        std::ostringstream out;
        out << "model " << to_string(r.model) << " L=" << r.L << " steps=" << r.steps << " seed=" << r.seed << " ("
            << r.rng << ")\nTV=" << r.distance.tv << " max_rel_err=" << r.distance.max_rel_err << '\n';
        emit(common, out.str());
      } else {
        emit(common, to_json(r));
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
