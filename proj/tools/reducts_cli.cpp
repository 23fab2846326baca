#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reducts/io.hpp"
#include "reducts/verify.hpp"

using namespace reducts;

namespace {

  struct Options {
    ExperimentConfig config;
    std::string      format = "text";
    std::string      out;
  };

  // Writes to --out when given, otherwise to stdout.
  void emit(Options const& o, std::string const& content) {
    if (o.out.empty()) {
      std::cout << content;
    } else {
      write_file(o.out, content);
    }
  }

  int cmd_gen(Options const& o) {
    auto const& c = o.config;
    Digraph     g = random_digraph(c.n, c.seed);
    if (c.k > 0) {
      g = extend_to_ep(g, c.k, c.seed);
    }
    emit(o, dump(to_json(g)));
    if (c.k <= 0) {
      return 0;
    }
    auto const base = identity_map(c.n);
    auto const rep  = check_k_ep(g, c.k, base);
    if (o.format == "json") {
      std::cerr << dump(to_json(rep));
    } else {
      std::cerr << "level " << c.k << " extension property over " << c.n << " original vertices: "
                << (rep.pass ? "pass" : "FAIL") << " (" << g.size() << " vertices)\n";
    }
    return rep.pass ? 0 : 1;
  }

  int cmd_transform(Options const& o, std::string const& input, std::string const& spec, int times) {
    Digraph         g = load_digraph(input);
    Transform const t = load_transform(spec);
    for (int i = 0; i < times; ++i) {
      g = apply(t, g);
    }
    emit(o, dump(to_json(g)));
    return 0;
  }

  int cmd_classify(Options const& o, std::string const& gpath, std::string const& hpath, std::string const& mpath) {
    auto const c = classify_map(load_digraph(gpath), load_digraph(hpath), load_vertex_map(mpath));
    if (o.format == "json") {
      emit(o, dump(to_json(c)));
    } else {
      std::string text = std::string(to_string(c.node)) + "\n";
      text += "preserved: " + to_json(c.preservation.preserved).dump() + "\n";
      for (auto const& [rel, tuple] : c.preservation.excluded_by) {
        text += "excluded " + std::string(to_string(rel)) + " by " + Json(tuple).dump() + "\n";
      }
      if (c.minimal_candidates.size() > 1) {
        text += "ambiguous:";
        for (auto a : c.minimal_candidates) {
          text += " " + std::string(to_string(a));
        }
        text += "\n";
      }
      emit(o, text);
    }
    return 0;
  }

  int cmd_behaviors(Options const& o, std::string const& mode) {
    auto const m = mode == "noconst" ? BehaviorMode::NoConst : BehaviorMode::TwoOrbit;
    emit(o, o.format == "json" ? dump(behavior_table_json(m)) : behavior_table_text(m));
    return 0;
  }

  int cmd_verify(Options const& o, std::string const& suite) {
    auto const results = run_suite(suite, o.config);
    bool       pass    = true;
    std::string content;
    if (o.format == "json") {
      Json arr = Json::array();
      for (auto const& r : results) {
        arr.push_back(to_json(r));
        pass = pass && r.pass();
      }
      content = dump(Json{{"pass", pass}, {"suites", std::move(arr)}});
    } else {
      for (auto const& r : results) {
        content += to_text(r);
        pass = pass && r.pass();
      }
    }
    emit(o, content);
    return pass ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reducts of the generic digraph: generators, transforms and checks"};
  app.require_subcommand(1);

  Options gen_o, o;
  gen_o.config.k = 0;
  auto add_common = [](CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Output path (default stdout)");
  };
  auto add_config = [](CLI::App* sub, Options& o) {
    sub->add_option("--n", o.config.n, "Number of vertices");
    sub->add_option("--k", o.config.k, "Extension property level");
    sub->add_option("--seed", o.config.seed, "Random seed");
    sub->add_option("--trials", o.config.trials, "Trials per randomized check")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "Random digraph, extended to the level --k extension property when k > 0");
  add_common(gen, gen_o);
  add_config(gen, gen_o);

  std::string input, spec;
  int         times = 1;
  auto*       tr    = app.add_subcommand("transform", "Apply a transform to a digraph");
  tr->add_option("input", input, "Digraph file")->required()->check(CLI::ExistingFile);
  tr->add_option("spec", spec, "Transform file")->required()->check(CLI::ExistingFile);
  tr->add_option("--times", times, "Apply this many times")->check(CLI::NonNegativeNumber);
  add_common(tr, o);

  std::string gpath, hpath, mpath;
  auto*       cl = app.add_subcommand("classify", "Smallest reduct whose signature the map preserves");
  cl->add_option("source", gpath, "Source digraph")->required()->check(CLI::ExistingFile);
  cl->add_option("target", hpath, "Target digraph")->required()->check(CLI::ExistingFile);
  cl->add_option("map", mpath, "Vertex map file")->required()->check(CLI::ExistingFile);
  add_common(cl, o);

  std::string mode;
  auto*       be = app.add_subcommand("behaviors", "Verdict table for canonical behaviours");
  be->add_option("mode", mode, "Table")->required()->check(CLI::IsMember({"noconst", "twoorbit"}));
  add_common(be, o);

  std::string suite;
  auto*       ve = app.add_subcommand("verify", "Run an invariant suite");
  ve->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  add_common(ve, o);
  add_config(ve, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      return cmd_gen(gen_o);
    }
    if (*ve) {
      return cmd_verify(o, suite);
    }
    if (*tr) {
      return cmd_transform(o, input, spec, times);
    }
    if (*cl) {
      return cmd_classify(o, gpath, hpath, mpath);
    }
    if (*be) {
      return cmd_behaviors(o, mode);
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (IoError const& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (std::domain_error const& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
