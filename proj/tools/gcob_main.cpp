#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gcob/json_io.hpp"
#include "gcob/monoidal.hpp"

namespace {

using gcob::DomainError;
using gcob::Json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("MalformedJson", "cannot read input file " + path);
  }
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

Json load(const std::string& path) { return gcob::parse_text(slurp(path)); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

bool looks_like_morphism(const Json& j) {
  return j.is_object() && j.contains("source");
}

gcob::Gaf checked_gaf(const Json& j) {
  return gcob::validate_gaf(gcob::parse_gaf(j));
}

gcob::GafMorphism checked_morphism(const Json& j) {
  gcob::GafMorphism f = gcob::parse_morphism(j);
  f.source = gcob::validate_gaf(std::move(f.source));
  f.target = gcob::validate_gaf(std::move(f.target));
  return gcob::validate_morphism(std::move(f));
}

gcob::ColoredMorphism checked_colored(const Json& j) {
  gcob::ColoredMorphism cm = gcob::parse_colored_morphism(j);
  cm.underlying.source = gcob::validate_gaf(std::move(cm.underlying.source));
  cm.underlying.target = gcob::validate_gaf(std::move(cm.underlying.target));
  return gcob::validate_colored_morphism(std::move(cm));
}

struct PairInput {
  Json first;
  Json second;
};

PairInput load_pair(const std::string& path) {
  Json j = load(path);
  if (!j.is_object() || !j.contains("first") || !j.contains("second")) {
    throw DomainError("MalformedJson",
                      "expected an object with keys first and second");
  }
  return PairInput{j["first"], j["second"]};
}

Json encode_generator(const std::string& name) {
  if (name == "ft") return gcob::encode(gcob::gen_ft());
  if (name == "fe") return gcob::encode(gcob::gen_fe());
  if (name == "G_beta1") return gcob::encode(gcob::gen_G_beta1());
  if (name == "G_beta2") return gcob::encode(gcob::gen_G_beta2());
  if (name == "G_tbeta1") return gcob::encode(gcob::gen_G_tbeta1());
  if (name == "G_tbeta2") return gcob::encode(gcob::gen_G_tbeta2());
  if (name == "beta") return gcob::encode(gcob::gen_beta());
  return gcob::encode(gcob::gen_tbeta());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph cobordism toolkit"};
  app.require_subcommand(1);

  // Option storage must outlive setup blocks: callbacks run inside parse().
  std::size_t seed = 0;
  std::string format = "json";
  std::string in_path = "-";
  bool c_horizontal = false, c_vertical = false, c_tensor = false;
  std::string gen_name;
  bool n_leaves = false, n_bridges = false, n_reduce = false;
  std::vector<std::size_t> fc_sweep;
  std::size_t fc_sample = 0;
  std::size_t q_a = 0, q_b = 0, q_max_v = 0, q_max_e = 0;
  std::size_t nerve_budget = 20000;
  std::size_t zz_budget = 0;
  CLI::Option* zz_budget_opt = nullptr;

  app.add_option("--seed", seed, "seed for randomized sweeps");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}));

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", in_path, "input file, - for standard input");
  };

  {
    CLI::App* cmd = app.add_subcommand(
        "validate", "check a gaf or a morphism and echo it back");
    add_input(cmd);
    cmd->callback([&] {
      Json j = load(in_path);
      if (looks_like_morphism(j)) {
        emit(gcob::encode(checked_morphism(j)));
      } else {
        emit(gcob::encode(checked_gaf(j)));
      }
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "iso", "find an isomorphism between two gafs, boundary fixed");
    add_input(cmd);
    cmd->callback([&] {
      PairInput in = load_pair(in_path);
      auto iso =
          gcob::is_isomorphic(checked_gaf(in.first), checked_gaf(in.second));
      Json out{{"isomorphic", iso.has_value()}};
      if (iso) out["isomorphism"] = gcob::encode(*iso);
      emit(out);
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "compose",
        "compose two gafs or two morphisms; --vertical is first-after-second, "
        "--horizontal glues the markings of first onto the boundary of "
        "second");
    add_input(cmd);
    CLI::Option_group* mode = cmd->add_option_group("mode");
    mode->add_flag("--horizontal", c_horizontal);
    mode->add_flag("--vertical", c_vertical);
    mode->add_flag("--tensor", c_tensor);
    mode->require_option(1);
    cmd->callback([&] {
      PairInput in = load_pair(in_path);
      bool m1 = looks_like_morphism(in.first);
      bool m2 = looks_like_morphism(in.second);
      if (m1 != m2) {
        throw DomainError(
            "MalformedJson",
            "first and second must both be gafs or both be morphisms");
      }
      if (c_vertical && !m1) {
        throw DomainError("MalformedJson",
                          "vertical composition needs morphisms");
      }
      if (m1) {
        gcob::GafMorphism f = checked_morphism(in.first);
        gcob::GafMorphism g = checked_morphism(in.second);
        if (c_vertical) {
          emit(gcob::encode(gcob::compose_v(f, g)));
        } else if (c_horizontal) {
          emit(gcob::encode(gcob::compose_h_m(f, g)));
        } else {
          emit(gcob::encode(gcob::tensor_m(f, g)));
        }
      } else {
        gcob::Gaf g1 = checked_gaf(in.first);
        gcob::Gaf g2 = checked_gaf(in.second);
        emit(gcob::encode(c_horizontal ? gcob::compose_h(g1, g2)
                                       : gcob::tensor(g1, g2)));
      }
    });
  }
  {
    CLI::App* cmd =
        app.add_subcommand("generators", "emit one canonical generator");
    cmd->add_option("--name", gen_name, "which generator")
        ->required()
        ->check(CLI::IsMember({"ft", "fe", "G_beta1", "G_beta2", "G_tbeta1",
                               "G_tbeta2", "beta", "tbeta"}));
    cmd->callback([&] { emit(encode_generator(gen_name)); });
  }
  {
    CLI::App* cmd =
        app.add_subcommand("axioms", "machine-check the generator identities");
    cmd->callback([&] { emit(gcob::encode(gcob::verify_graphlike_axioms())); });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "grade", "grade a gaf (ve), morphism (ce) or colored morphism");
    add_input(cmd);
    cmd->callback([&] {
      Json j = load(in_path);
      if (j.is_object() && j.contains("mark")) {
        gcob::ColoredMorphism cm = checked_colored(j);
        emit(Json{{"grade", gcob::grade(cm.underlying)},
                  {"grade_s", gcob::grade_s(cm)},
                  {"ce", gcob::ce(cm.underlying)}});
      } else if (looks_like_morphism(j)) {
        gcob::GafMorphism f = checked_morphism(j);
        emit(Json{{"grade", gcob::grade(f)}, {"ce", gcob::ce(f)}});
      } else {
        emit(Json{{"ve", gcob::ve(checked_gaf(j))}});
      }
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "leaflike", "test the distinguished edge of a colored morphism");
    add_input(cmd);
    cmd->callback([&] {
      gcob::LeafLikeInfo info =
          gcob::is_leaf_like(checked_colored(load(in_path)));
      Json out{{"leaf_like", info.leaf_like}};
      if (info.leaf_like) {
        out["edge"] = info.edge;
        out["half"] = info.half;
        out["vertex"] = info.vertex;
      } else {
        out["reason"] = info.reason;
      }
      emit(out);
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "spine", "factor a leaf-like collapse through its spine");
    add_input(cmd);
    cmd->callback([&] {
      gcob::SpineFactorization sf = gcob::spine(checked_colored(load(in_path)));
      emit(Json{{"spine_edges", sf.spine_edges},
                {"f_b", gcob::encode(sf.f_b)},
                {"f_s", gcob::encode(sf.f_s)}});
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "normalize", "iterated edge collapse to a normal form");
    add_input(cmd);
    CLI::Option_group* mode = cmd->add_option_group("mode");
    mode->add_flag("--leaves", n_leaves);
    mode->add_flag("--bridges", n_bridges);
    mode->add_flag("--reduce", n_reduce);
    mode->require_option(1);
    cmd->callback([&] {
      gcob::Gaf g = checked_gaf(load(in_path));
      gcob::Reduction red = n_leaves    ? gcob::collapse_unmarked_leaves(g)
                            : n_bridges ? gcob::collapse_bridges(g)
                                        : gcob::reduce(g);
      emit(gcob::encode(red));
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "nf", "homotopy normal form of the realized cospan");
    add_input(cmd);
    cmd->callback([&] {
      emit(gcob::encode(gcob::realize_nf(checked_gaf(load(in_path)))));
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "functorial-check",
        "compare realize_nf of a gluing with the glued normal forms");
    add_input(cmd);
    cmd->add_option("--sweep", fc_sweep,
                    "a b max_v max_e: check enumerated composable pairs")
        ->expected(4);
    cmd->add_option("--sample", fc_sample,
                    "with --sweep: check this many seeded random pairs");
    cmd->callback([&] {
      if (fc_sweep.empty()) {
        PairInput in = load_pair(in_path);
        gcob::Gaf g1 = checked_gaf(in.first);
        gcob::Gaf g2 = checked_gaf(in.second);
        gcob::CospanNF lhs = gcob::realize_nf(gcob::compose_h(g1, g2));
        gcob::CospanNF rhs =
            gcob::compose_nf(gcob::realize_nf(g1), gcob::realize_nf(g2));
        emit(Json{{"functorial", lhs == rhs},
                  {"lhs", gcob::encode(lhs)},
                  {"rhs", gcob::encode(rhs)}});
        return;
      }
      std::vector<gcob::Gaf> pool;
      for (std::size_t a = 0; a <= fc_sweep[0]; ++a) {
        for (std::size_t b = 0; b <= fc_sweep[1]; ++b) {
          for (gcob::Gaf& g :
               gcob::enumerate_gafs(a, b, fc_sweep[2], fc_sweep[3])) {
            pool.push_back(std::move(g));
          }
        }
      }
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if (pool[i].b_size == pool[j].a_size) pairs.push_back({i, j});
        }
      }
      if (fc_sample > 0 && fc_sample < pairs.size()) {
        std::mt19937_64 rng(seed);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(fc_sample);
      }
      std::size_t failures = 0;
      for (auto [i, j] : pairs) {
        if (!gcob::verify_re_functorial(pool[i], pool[j])) ++failures;
      }
      emit(Json{{"pairs", pairs.size()},
                {"failures", failures},
                {"all_ok", failures == 0}});
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "enumerate", "isomorphism classes within bounds, canonical forms");
    cmd->add_option("--a", q_a)->required();
    cmd->add_option("--b", q_b)->required();
    cmd->add_option("--max-v", q_max_v)->required();
    cmd->add_option("--max-e", q_max_e)->required();
    cmd->callback([&] {
      std::vector<gcob::Gaf> classes =
          gcob::enumerate_gafs(q_a, q_b, q_max_v, q_max_e);
      Json arr = Json::array();
      for (const gcob::Gaf& g : classes) arr.push_back(gcob::encode(g));
      emit(Json{{"count", classes.size()}, {"classes", arr}});
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "nerve", "objects, morphisms and composition table within bounds");
    cmd->add_option("--a", q_a)->required();
    cmd->add_option("--b", q_b)->required();
    cmd->add_option("--max-v", q_max_v)->required();
    cmd->add_option("--max-e", q_max_e)->required();
    cmd->add_option("--budget", nerve_budget, "maximum number of morphisms");
    cmd->callback([&] {
      emit(gcob::encode(
          gcob::nerve_export(q_a, q_b, q_max_v, q_max_e, nerve_budget)));
    });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "zigzag", "search a collapse/expansion path between two gafs");
    add_input(cmd);
    zz_budget_opt = cmd->add_option("--budget", zz_budget,
                                    "edge budget for intermediate gafs");
    cmd->callback([&] {
      PairInput in = load_pair(in_path);
      gcob::Gaf g1 = checked_gaf(in.first);
      gcob::Gaf g2 = checked_gaf(in.second);
      std::size_t use = zz_budget_opt->count() > 0
                            ? zz_budget
                            : gcob::default_zigzag_budget(g1, g2);
      auto path = gcob::zigzag_connected(g1, g2, use);
      Json out{{"connected", path.has_value()}, {"budget", use}};
      if (path) {
        Json moves = Json::array();
        for (const gcob::ZigzagMove& mv : *path) {
          moves.push_back(
              Json{{"expand", mv.expand}, {"state", gcob::encode(mv.state)}});
        }
        out["path"] = moves;
      }
      emit(out);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ExtrasError& e) {
    emit(Json{{"error", "UnknownSubcommand"}, {"detail", e.what()}});
    return 2;
  } catch (const CLI::ParseError& e) {
    emit(Json{{"error", "MalformedJson"}, {"detail", e.what()}});
    return 2;
  } catch (const DomainError& e) {
    emit(Json{{"error", e.code()}, {"detail", e.detail()}});
    return e.code() == "MalformedJson" || e.code() == "UnknownSubcommand" ? 2
                                                                          : 1;
  } catch (const std::exception& e) {
    emit(Json{{"error", "InternalError"}, {"detail", e.what()}});
    return 1;
  }
  return 0;
}
