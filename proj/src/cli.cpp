#include "comkit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <optional>

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"
#include "comkit/euler_amalgam.hpp"
#include "comkit/generation.hpp"
#include "comkit/io.hpp"
#include "comkit/minors.hpp"
#include "comkit/ranking.hpp"
#include "comkit/realize.hpp"
#include "comkit/topes.hpp"

namespace comkit {

namespace {

std::string joined(const std::vector<std::string>& args) {
  std::string s = "comkit";
  for (const auto& a : args) s += " " + a;
  return s;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 12 || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("COMKIT_GUARD: " + what + " must be a non-negative integer, got '" + text + "'");
  return std::stoull(text);
}

// COMKIT_GUARD is either a bare integer (max elements) or "key=value,..." with keys
// max_elements, max_rankings, max_path_elements.
Limits limits_from_env() {
  Limits limits;
  const char* raw = std::getenv("COMKIT_GUARD");
  if (!raw || !*raw) return limits;
  const std::string text(raw);
  if (text.find('=') == std::string::npos) {
    limits.max_elements = parse_count(text, "max_elements");
    return limits;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("COMKIT_GUARD: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "max_elements")
      limits.max_elements = parse_count(value, key);
    else if (key == "max_rankings")
      limits.max_rankings = parse_count(value, key);
    else if (key == "max_path_elements")
      limits.max_path_elements = parse_count(value, key);
    else
      throw ParseError("COMKIT_GUARD: unknown key '" + key + "'");
    pos = end + 1;
  }
  return limits;
}

Json strings_json(const std::vector<SignVector>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

Json witness_json(const Witness& w, const GroundSet& g) {
  Json j = Json::object();
  if (w.x) j["x"] = w.x->str();
  if (w.y) j["y"] = w.y->str();
  if (w.e) j["e"] = g.label(*w.e);
  if (w.f) j["f"] = g.label(*w.f);
  if (w.missing) j["missing"] = w.missing->str();
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

Json axiom_json(const AxiomReport& r, const GroundSet& g) {
  Json j;
  j["name"] = r.name;
  j["holds"] = r.holds;
  if (r.witness) j["witness"] = witness_json(*r.witness, g);
  return j;
}

Json amalgam_json(const AmalgamReport& r) {
  Json j;
  j["holds"] = r.holds();
  j["union_matches"] = r.union_matches;
  j["condition_1"] = r.cond1;
  j["condition_2"] = r.cond2;
  j["condition_3"] = r.cond3;
  j["condition_4"] = r.cond4;
  j["parts_semisimple_coms"] = r.parts_semisimple_coms;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
      : args_(args), out_(out), err_(err) {}

  int run() {
    CLI::App app{"Sign-vector systems, complexes of oriented matroids, and their realizations", "comkit"};
    app.require_subcommand(1);
    app.fallthrough(false);
    std::function<int()> action;
    register_commands(app, action);
    try {
      std::vector<std::string> reversed(args_.rbegin(), args_.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out_, err_);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out_, err_);
    } catch (const CLI::ParseError& e) {
      app.exit(e, out_, err_);
      return kExitParseError;
    }
    try {
      limits_ = limits_from_env();
      return action();
    } catch (const AmalgamError& e) {
      emit_report(amalgam_json(e.report()), kExitPropertyFails);
      err_ << "error: " << e.what() << "\n";
      return kExitPropertyFails;
    } catch (const ParseError& e) {
      err_ << "parse error: " << e.what() << "\n";
      return kExitParseError;
    } catch (const GuardError& e) {
      err_ << "guard exceeded: " << e.what() << "\n";
      return kExitGuard;
    } catch (const ConsistencyError& e) {
      err_ << "internal consistency error: " << e.what() << "\n";
      return kExitConsistency;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitPropertyFails;
    }
  }

 private:
  SignSystem load_svs(const std::string& path) {
    const std::string text = read_file(path);
    inputs_ += text;
    std::vector<std::string> warnings;
    SignSystem s = parse_svs(text, &warnings);
    for (const auto& w : warnings) err_ << "warning: " << path << ": " << w << "\n";
    return s;
  }

  Poset load_poset(const std::string& path) {
    const std::string text = read_file(path);
    inputs_ += text;
    return parse_poset(text);
  }

  RealizationProblem load_arrangement(const std::string& path) {
    const std::string text = read_file(path);
    inputs_ += text;
    return parse_arrangement(text);
  }

  int emit_report(Json results, int status) {
    out_ << report_document(joined(args_), digest_hex(inputs_), std::move(results), status).dump(2) << "\n";
    return status;
  }

  int emit_system(const SignSystem& s) {
    out_ << emit_svs(s);
    return kExitOk;
  }

  void register_commands(CLI::App& app, std::function<int()>& action) {
    auto file_command = [&](const std::string& name, const std::string& help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("file", file_, "Input file")->required();
      return sub;
    };

    file_command("classify", "Axiom bundle and non-redundancy report")->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        const auto c = classify(s);
        Json r;
        r["elements"] = s.num_elements();
        r["covectors"] = s.size();
        r["is_strong_elimination"] = c.is_strong_elimination;
        r["is_com"] = c.is_com;
        r["is_om"] = c.is_om;
        r["is_lopsided"] = c.is_lopsided;
        r["is_simple"] = c.is_simple;
        r["is_semisimple"] = c.is_semisimple;
        Json axioms;
        for (const auto& a : c.axioms) axioms[a.name] = a.holds;
        r["axioms"] = axioms;
        Json red;
        for (const auto& a : c.redundancy) red[a.name] = a.holds;
        r["redundancy"] = red;
        return emit_report(r, kExitOk);
      };
    });

    auto* ax = file_command("axioms", "Check individual axioms; exit 1 if any fails");
    ax->add_option("--which", which_, "Axiom or redundancy name (repeatable); default all axioms")
        ->delimiter(',');
    ax->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        Json list = Json::array();
        bool all = true;
        auto add = [&](const AxiomReport& r) {
          all = all && r.holds;
          list.push_back(axiom_json(r, s.ground()));
        };
        if (which_.empty())
          for (auto id : all_axioms()) add(check_axiom(s, id));
        for (const auto& name : which_) {
          std::optional<AxiomId> id;
          try {
            id = parse_axiom(name);
          } catch (const ParseError&) {
            add(check_nonredundancy(s, parse_redundancy(name)));
            continue;
          }
          add(check_axiom(s, *id));
        }
        return emit_report(Json{{"axioms", list}}, all ? kExitOk : kExitPropertyFails);
      };
    });

    auto* mn = file_command("minor", "Delete and contract elements");
    mn->add_option("--delete", deleted_, "Element labels to delete")->delimiter(',');
    mn->add_option("--contract", contracted_, "Element labels to contract")->delimiter(',');
    mn->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        MinorSpec spec{s.ground().elements(deleted_), s.ground().elements(contracted_)};
        return emit_system(minor(s, spec));
      };
    });

    auto* si = file_command("simplify", "Remove redundant elements");
    si->add_flag("--semi", semi_, "Semisimplify instead");
    si->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        return emit_system(semi_ ? semisimplify(s) : simplify(s));
      };
    });

    file_command("topes", "Maximal covectors")->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        return emit_system(SignSystem(s.ground(), topes(s)));
      };
    });

    auto* tg = file_command("tope-graph", "Tope graph as DOT or JSON");
    tg->add_option("--format", format_, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    tg->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        const Graph g = tope_graph(s);
        if (format_ == "json") {
          Json r = graph_json(g);
          r["partial_cube"] = is_partial_cube(g).holds;
          return emit_report(r, kExitOk);
        }
        out_ << export_dot(g);
        return kExitOk;
      };
    });

    file_command("cocircuits", "Improper and proper cocircuits with the irreducibles")->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        return emit_system(SignSystem(s.ground(), cocircuits(s).cocircuits));
      };
    });

    file_command("generate", "Conformal closure of the input")->callback([&] {
      action = [this] { return emit_system(conformal_closure(load_svs(file_))); };
    });

    file_command("envelope", "Lopsided envelope (upset) of a (WE) system")->callback([&] {
      action = [this] { return emit_system(lopsided_envelope(load_svs(file_), limits_)); };
    });

    file_command("decompose", "Halfspace decomposition of a semisimple COM")->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        const auto d = decompose(s);
        Json r;
        r["decomposes"] = d.has_value();
        if (d) {
          r["pivot"] = s.ground().label(d->pivot);
          r["side"] = d->side > 0 ? "+" : "-";
          r["x"] = d->x.str();
          r["y"] = d->y.str();
          r["lower"] = strings_json(d->lower.covectors());
          r["upper"] = strings_json(d->upper.covectors());
          r["overlap"] = strings_json(d->overlap.covectors());
          r["amalgam"] = amalgam_json(verify_amalgam(d->lower, d->upper, s, limits_));
          r["leaves"] = leaves(decompose_fully(s)).size();
        }
        return emit_report(r, kExitOk);
      };
    });

    auto* am = app.add_subcommand("amalgam", "COM amalgam of two systems");
    am->add_option("lower", file_, "First part")->required();
    am->add_option("upper", second_file_, "Second part")->required();
    am->callback([&] {
      action = [this] {
        const SignSystem a = load_svs(file_);
        const SignSystem b = load_svs(second_file_);
        return emit_system(amalgamate(a, b, limits_));
      };
    });

    auto* eu = file_command("euler", "Euler-Poincare sum; --zero-sets for the zero-set variants");
    eu->add_flag("--zero-sets", zero_sets_, "Sum over (-1)^|X0| and the lopsidedness characterizations");
    eu->callback([&] {
      action = [this] {
        const SignSystem s = load_svs(file_);
        if (!zero_sets_) {
          const long sum = euler_poincare(s);
          return emit_report(Json{{"sum", sum}}, sum == 1 ? kExitOk : kExitPropertyFails);
        }
        const bool topal = lopsided_by_euler(s, EulerVariant::TOPAL_FIBERS, limits_);
        const bool contractions = lopsided_by_euler(s, EulerVariant::CONTRACTIONS, limits_);
        const bool direct = classify(s).is_lopsided;
        Json r;
        r["sum"] = euler_zero_sets(s);
        r["topal_fibers"] = topal;
        r["contractions"] = contractions;
        r["lopsided"] = direct;
        if (topal != direct || contractions != direct)
          throw ConsistencyError("zero-set Euler characterizations disagree with the direct check");
        return emit_report(r, kExitOk);
      };
    });

    file_command("rank", "Rank of every covector")->callback([&] {
      action = [this] {
        const auto t = rank_table(load_svs(file_));
        Json ranks = Json::object();
        for (std::size_t i = 0; i < t.covectors.size(); ++i) ranks[t.covectors[i].str()] = t.rank[i];
        return emit_report(Json{{"ranks", ranks}}, kExitOk);
      };
    });

    auto* rc = file_command("ranking-com", "Ranking COM of a poset");
    rc->add_flag("--no-simplify", no_simplify_, "Keep every pair, including comparable ones");
    rc->callback([&] {
      action = [this] { return emit_system(ranking_com(load_poset(file_), !no_simplify_, limits_)); };
    });

    file_command("ranking-props", "Width, ranking test and cross-checks against classify")->callback([&] {
      action = [this] {
        const auto r = verify_ranking_props(load_poset(file_), limits_);
        Json j;
        j["width"] = r.width;
        j["is_ranking"] = r.is_ranking;
        j["is_com"] = r.is_com;
        j["is_om"] = r.is_om;
        j["is_lopsided"] = r.is_lopsided;
        j["om_iff_ranking"] = r.om_matches;
        j["lopsided_iff_width_at_most_2"] = r.lopsided_matches;
        j["median_tope_graph"] = r.median_graph;
        j["permutohedra_counts"] = r.permutohedra_match;
        j["topes"] = r.topes;
        j["covectors"] = r.covectors;
        if (!r.consistent()) throw ConsistencyError("ranking COM properties do not match the poset");
        return emit_report(j, kExitOk);
      };
    });

    file_command("realize", "Covectors of an arrangement restricted to an open polyhedron")->callback([&] {
      action = [this] { return emit_system(region_covectors(load_arrangement(file_), limits_)); };
    });

    auto* fp = file_command("face-poset", "Face poset with a synthetic top");
    fp->add_option("--format", format_, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    fp->callback([&] {
      action = [this] {
        const FacePoset f = face_poset(load_svs(file_));
        if (format_ == "json") {
          Json covers = Json::array();
          for (const auto& [a, b] : f.covers)
            covers.push_back(Json::array({f.elements[a].str(), b == f.top() ? "top" : f.elements[b].str()}));
          return emit_report(Json{{"elements", strings_json(f.elements)}, {"covers", covers}}, kExitOk);
        }
        out_ << export_dot(f);
        return kExitOk;
      };
    });
  }

  const std::vector<std::string>& args_;
  std::ostream& out_;
  std::ostream& err_;
  Limits limits_;
  std::string inputs_;
  std::string file_, second_file_, format_ = "dot";
  std::vector<std::string> which_, deleted_, contracted_;
  bool semi_ = false, zero_sets_ = false, no_simplify_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(args, out, err).run();
}

}  // namespace comkit
