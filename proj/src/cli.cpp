#include "lsx/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "lsx/data.hpp"
#include "lsx/explain.hpp"
#include "lsx/mlp.hpp"
#include "lsx/render.hpp"
#include "lsx/surrogates.hpp"
#include "lsx/util.hpp"
#include "nlohmann/json.hpp"

namespace lsx::cli {

namespace {

using nlohmann::json;

json default_config() {
  json cfg;
  cfg["seed"] = 0;
  cfg["lime"] = {{"sample_count", 5000}, {"sigma", "auto"}, {"gamma", "auto"}};
  cfg["gsls"] = {{"radius", "auto"},
                 {"sample_count", 5000},
                 {"eta", "auto"},
                 {"max_radius", "auto"},
                 {"layer_samples", 200}};
  cfg["lore"] = {{"size", 400},        {"population", 200}, {"generations", 20},
                 {"crossover_prob", 0.5}, {"mutation_prob", 0.2},
                 {"tournament", 3},    {"elitism", 2}};
  cfg["leap"] = {{"k_lid", 20},
                 {"k_pca", 100},
                 {"sample_count", 5000},
                 {"subspace_sigma", "auto"},
                 {"gamma", "auto"}};
  cfg["kernelshap"] = {{"background_k", 0}, {"enumeration_cap", 12}};
  cfg["palex"] = {{"sample_count", 5000},
                  {"min_support", 0.05},
                  {"max_length", 4},
                  {"bins", 4},
                  {"weight_map", "exp"}};
  cfg["surrogate"] = {{"ridge_lambda", 1e-6},
                      {"tree_max_depth", 3},
                      {"tree_min_leaf_weight", 1.0},
                      {"per_method",
                       {{"lime", "ridge"},
                        {"gsls", "tree"},
                        {"lore", "tree"},
                        {"leap", "ridge"},
                        {"kernelshap", "ridge"},
                        {"palex", "ridge"}}}};
  return cfg;
}

void merge_config(json& dst, const json& src, const std::string& path) {
  for (auto it = src.begin(); it != src.end(); ++it) {
    const std::string key_path = path.empty() ? it.key() : path + "." + it.key();
    if (!dst.contains(it.key())) {
      throw std::runtime_error("config: unknown key '" + key_path + "'");
    }
    if (dst[it.key()].is_object() && it.value().is_object()) {
      merge_config(dst[it.key()], it.value(), key_path);
    } else {
      dst[it.key()] = it.value();
    }
  }
}

void apply_set(json& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw std::runtime_error("--set expects key.path=value, got '" + assignment + "'");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);

  json* node = &cfg;
  std::istringstream parts(key);
  std::string part;
  std::vector<std::string> chain;
  while (std::getline(parts, part, '.')) chain.push_back(part);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!node->contains(chain[i]) || !(*node)[chain[i]].is_object()) {
      throw std::runtime_error("config: unknown key '" + key + "'");
    }
    node = &(*node)[chain[i]];
  }
  if (chain.empty() || !node->contains(chain.back())) {
    throw std::runtime_error("config: unknown key '" + key + "'");
  }
  json parsed;
  try {
    parsed = json::parse(value);
  } catch (const json::parse_error&) {
    parsed = value;  // bare strings like auto or ridge
  }
  (*node)[chain.back()] = parsed;
}

double number_or_auto(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "auto") return 0.0;
    throw std::runtime_error("config: " + where + " must be a number or \"auto\"");
  }
  return j.get<double>();
}

std::vector<double> vector_or_auto(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "auto") return {};
    throw std::runtime_error("config: " + where + " must be an array or \"auto\"");
  }
  return j.get<std::vector<double>>();
}

struct RunConfig {
  std::uint64_t seed = 0;
  LimeConfig lime;
  GslsConfig gsls;
  LoreConfig lore;
  LeapConfig leap;
  KernelShapConfig kernelshap;
  PalexConfig palex;
  SurrogateConfig surrogate;
  std::map<std::string, SurrogateConfig::Kind> per_method;
  std::string digest;  // of the effective config document
};

SurrogateConfig::Kind surrogate_kind(const std::string& name) {
  if (name == "ridge") return SurrogateConfig::Kind::ridge;
  if (name == "tree") return SurrogateConfig::Kind::tree;
  throw std::runtime_error("config: unknown surrogate '" + name +
                           "' (valid: ridge, tree)");
}

RunConfig extract_config(const json& cfg) {
  RunConfig rc;
  rc.seed = cfg.at("seed").get<std::uint64_t>();

  const json& lime = cfg.at("lime");
  rc.lime.sample_count = lime.at("sample_count").get<std::size_t>();
  rc.lime.sigma = vector_or_auto(lime.at("sigma"), "lime.sigma");
  rc.lime.gamma = number_or_auto(lime.at("gamma"), "lime.gamma");

  const json& gsls = cfg.at("gsls");
  rc.gsls.radius = number_or_auto(gsls.at("radius"), "gsls.radius");
  rc.gsls.sample_count = gsls.at("sample_count").get<std::size_t>();
  rc.gsls.eta = number_or_auto(gsls.at("eta"), "gsls.eta");
  rc.gsls.max_radius = number_or_auto(gsls.at("max_radius"), "gsls.max_radius");
  rc.gsls.layer_samples = gsls.at("layer_samples").get<std::size_t>();

  const json& lore = cfg.at("lore");
  rc.lore.size = lore.at("size").get<std::size_t>();
  rc.lore.population = lore.at("population").get<std::size_t>();
  rc.lore.generations = lore.at("generations").get<std::size_t>();
  rc.lore.crossover_prob = lore.at("crossover_prob").get<double>();
  rc.lore.mutation_prob = lore.at("mutation_prob").get<double>();
  rc.lore.tournament = lore.at("tournament").get<std::size_t>();
  rc.lore.elitism = lore.at("elitism").get<std::size_t>();

  const json& leap = cfg.at("leap");
  rc.leap.k_lid = leap.at("k_lid").get<std::size_t>();
  rc.leap.k_pca = leap.at("k_pca").get<std::size_t>();
  rc.leap.sample_count = leap.at("sample_count").get<std::size_t>();
  rc.leap.subspace_sigma =
      vector_or_auto(leap.at("subspace_sigma"), "leap.subspace_sigma");
  rc.leap.gamma = number_or_auto(leap.at("gamma"), "leap.gamma");

  const json& ks = cfg.at("kernelshap");
  rc.kernelshap.background_k = ks.at("background_k").get<std::size_t>();
  rc.kernelshap.enumeration_cap = ks.at("enumeration_cap").get<std::size_t>();

  const json& palex = cfg.at("palex");
  rc.palex.sample_count = palex.at("sample_count").get<std::size_t>();
  rc.palex.min_support = palex.at("min_support").get<double>();
  rc.palex.max_length = palex.at("max_length").get<std::size_t>();
  rc.palex.bins = palex.at("bins").get<std::size_t>();
  const std::string wm = palex.at("weight_map").get<std::string>();
  if (wm == "exp") {
    rc.palex.weight_map = PalexWeightMap::exp_neg;
  } else if (wm == "inverse") {
    rc.palex.weight_map = PalexWeightMap::inverse;
  } else {
    throw std::runtime_error("config: palex.weight_map must be exp or inverse");
  }

  const json& sur = cfg.at("surrogate");
  rc.surrogate.ridge_lambda = sur.at("ridge_lambda").get<double>();
  rc.surrogate.tree_max_depth = sur.at("tree_max_depth").get<int>();
  rc.surrogate.tree_min_leaf_weight = sur.at("tree_min_leaf_weight").get<double>();
  for (auto it = sur.at("per_method").begin(); it != sur.at("per_method").end();
       ++it) {
    strategy_from_name(it.key());  // validates the method name
    rc.per_method[it.key()] = surrogate_kind(it.value().get<std::string>());
  }
  rc.digest = fnv1a_digest(cfg.dump());
  return rc;
}

RunConfig load_run_config(const std::string& config_path,
                          const std::vector<std::string>& sets,
                          bool seed_given, std::uint64_t seed_flag) {
  json cfg = default_config();
  std::string path = config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar)) path = env;
  }
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    json file_cfg = json::parse(in);
    merge_config(cfg, file_cfg, "");
  }
  for (const auto& s : sets) apply_set(cfg, s);
  if (seed_given) cfg["seed"] = seed_flag;
  return extract_config(cfg);
}

StrategyConfig strategy_config_for(const RunConfig& rc, Strategy s) {
  switch (s) {
    case Strategy::lime: return rc.lime;
    case Strategy::gsls: return rc.gsls;
    case Strategy::lore: return rc.lore;
    case Strategy::leap: return rc.leap;
    case Strategy::kernelshap: return rc.kernelshap;
    case Strategy::palex: return rc.palex;
  }
  throw std::logic_error("unreachable");
}

SurrogateConfig surrogate_config_for(const RunConfig& rc, Strategy s,
                                     const std::string& override_kind) {
  SurrogateConfig cfg = rc.surrogate;
  const auto it = rc.per_method.find(strategy_name(s));
  cfg.kind = it != rc.per_method.end() ? it->second : SurrogateConfig::Kind::ridge;
  if (!override_kind.empty()) cfg.kind = surrogate_kind(override_kind);
  return cfg;
}

std::string display_name(Strategy s) {
  switch (s) {
    case Strategy::lime: return "LIME";
    case Strategy::gsls: return "GSLS";
    case Strategy::lore: return "LORE";
    case Strategy::leap: return "LEAP";
    case Strategy::kernelshap: return "k-SHAP";
    case Strategy::palex: return "PALEX";
  }
  return "?";
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
  if (!out) throw std::runtime_error("write failed for " + path);
}

const Instance& instance_at(const Dataset& data, std::size_t index) {
  if (index >= data.rows.size()) {
    throw std::runtime_error("index " + std::to_string(index) +
                             " out of range (dataset has " +
                             std::to_string(data.rows.size()) + " rows)");
  }
  return data.rows[index];
}

std::string provenance_line(const RunConfig& rc) {
  return std::string("lsx ") + kVersion + " seed=" + std::to_string(rc.seed) +
         " config_digest=" + rc.digest;
}

void dump_problem_csv(const ShapleyProblem& p, const std::string& path) {
  std::ostringstream out;
  for (std::size_t j = 0; j < p.d; ++j) out << "m" << j << ",";
  out << "weight,target\n";
  for (std::size_t r = 0; r < p.masks.size(); ++r) {
    for (std::size_t j = 0; j < p.d; ++j) {
      out << (((p.masks[r] >> j) & 1u) ? 1 : 0) << ",";
    }
    out << format_double(p.weights[r]) << "," << format_double(p.targets[r])
        << "\n";
  }
  write_text(path, out.str());
}

int cmd_gen_data(std::size_t n, double noise, std::uint64_t seed,
                 const std::string& out) {
  const Dataset data = generate_half_moons({n, noise, seed});
  save_csv(data, out);
  std::cout << "wrote " << data.rows.size() << " rows to " << out << "\n";
  return 0;
}

int cmd_train(const std::string& data_path, std::size_t hidden,
              std::size_t epochs, double lr, std::uint64_t seed,
              const std::string& out) {
  const Dataset data = load_csv(data_path);
  const MlpModel model = train_mlp(data, {hidden, epochs, lr, seed});
  model.save(out);
  std::cout << "training accuracy " << model.accuracy(data) << "\n";
  return 0;
}

Panel make_panel(const std::string& title, const Dataset& data,
                 const Instance& z_e, const Neighbourhood& n) {
  Panel panel;
  panel.title = title;
  panel.data_points = data.rows;
  panel.data_labels = data.labels;
  panel.neigh_points = n.points;
  panel.neigh_weights = n.weights;
  panel.star = z_e;
  return panel;
}

void rasterize_panels(const BlackBoxModel& model, std::vector<Panel>& panels) {
  const GridBounds bounds = shared_bounds(panels);
  const std::vector<int> grid = decision_grid(model, bounds, 200);
  for (auto& panel : panels) {
    panel.bounds = bounds;
    panel.grid = grid;
    panel.grid_resolution = 200;
  }
}

int cmd_explain(const std::string& model_path, const std::string& data_path,
                std::size_t index, const std::string& method,
                const std::string& config_path,
                const std::vector<std::string>& sets, bool seed_given,
                std::uint64_t seed_flag, const std::string& surrogate_override,
                const std::string& out, const std::string& plot,
                const std::string& dump_problem,
                const std::string& dump_neighbourhood) {
  const RunConfig rc = load_run_config(config_path, sets, seed_given, seed_flag);
  const Strategy strategy = strategy_from_name(method);
  if (!dump_problem.empty() && strategy != Strategy::kernelshap) {
    throw std::runtime_error("--dump-problem is only valid with --method kernelshap");
  }
  const MlpModel model = MlpModel::load(model_path);
  const Dataset data = load_csv(data_path);
  const Instance& z_e = instance_at(data, index);

  const StrategyConfig scfg = strategy_config_for(rc, strategy);
  const SurrogateConfig sur = surrogate_config_for(rc, strategy, surrogate_override);
  const ExplainResult result = explain_full(model, data, z_e, scfg, sur, rc.seed);
  write_text(out, result.explanation.to_json());

  if (!dump_problem.empty()) {
    ShapleyProblem problem;
    const Background background =
        rc.kernelshap.background_k == 0 ||
                rc.kernelshap.background_k >= data.rows.size()
            ? Background{data.rows}
            : kmeans_background(data, rc.kernelshap.background_k, 25,
                                strategy_seed(rc.seed, Strategy::kernelshap));
    kernelshap_solve(model, z_e, background, SubsetSource::full_enumeration, 0,
                     rc.seed, &problem);
    dump_problem_csv(problem, dump_problem);
  }
  if (!dump_neighbourhood.empty()) {
    save_neighbourhood(result.neighbourhood, dump_neighbourhood,
                       dump_neighbourhood + ".meta.json", config_json(scfg, sur));
  }
  if (!plot.empty()) {
    std::vector<Panel> panels{
        make_panel(display_name(strategy), data, z_e, result.neighbourhood)};
    rasterize_panels(model, panels);
    render_neighbourhood_panels(panels, 1, 1, plot, provenance_line(rc));
  }
  std::cout << "explained row " << index << " with " << method << ", fidelity "
            << result.explanation.fidelity << "\n";
  return 0;
}

int cmd_compare(const std::string& model_path, const std::string& data_path,
                std::size_t index, std::vector<std::string> methods,
                const std::string& config_path,
                const std::vector<std::string>& sets, bool seed_given,
                std::uint64_t seed_flag, const std::string& out_panel,
                const std::string& out_table, std::string out_rules,
                std::string out_meta) {
  const RunConfig rc = load_run_config(config_path, sets, seed_given, seed_flag);
  if (methods.empty()) {
    methods = {"lime", "gsls", "lore", "leap", "kernelshap", "palex"};
  }
  if (out_rules.empty()) out_rules = out_table + ".rules.txt";
  if (out_meta.empty()) out_meta = out_table + ".meta.json";

  const MlpModel model = MlpModel::load(model_path);
  const Dataset data = load_csv(data_path);
  const Instance& z_e = instance_at(data, index);

  std::vector<Panel> panels;
  std::vector<Explanation> attributions;
  std::ostringstream table;
  std::ostringstream rules;
  table << "method,feature_index,attribution,base_value,fidelity\n";

  for (const auto& name : methods) {
    const Strategy strategy = strategy_from_name(name);
    const StrategyConfig scfg = strategy_config_for(rc, strategy);
    const SurrogateConfig sur = surrogate_config_for(rc, strategy, "");
    const ExplainResult result = explain_full(model, data, z_e, scfg, sur, rc.seed);
    panels.push_back(
        make_panel(display_name(strategy), data, z_e, result.neighbourhood));
    const Explanation& e = result.explanation;
    if (e.attribution) {
      for (std::size_t j = 0; j < e.attribution->size(); ++j) {
        table << e.method << "," << j << "," << format_double((*e.attribution)[j])
              << "," << (e.base_value ? format_double(*e.base_value) : "") << ","
              << format_double(e.fidelity) << "\n";
      }
      attributions.push_back(e);
    } else if (e.tree_rules) {
      rules << "# " << e.method << " (fidelity " << format_double(e.fidelity)
            << ")\n"
            << *e.tree_rules << "\n";
    }
  }

  rasterize_panels(model, panels);
  const std::size_t cols = 3;
  const std::size_t rows = (panels.size() + cols - 1) / cols;
  render_neighbourhood_panels(panels, rows, std::min(cols, panels.size()),
                              out_panel, provenance_line(rc));
  write_text(out_table, table.str());
  write_text(out_rules, rules.str());

  json meta;
  meta["version"] = kVersion;
  meta["seed"] = rc.seed;
  meta["config_digest"] = rc.digest;
  meta["methods"] = methods;
  meta["index"] = index;
  write_text(out_meta, meta.dump(2) + "\n");
  std::cout << "compared " << methods.size() << " methods on row " << index << "\n";
  return 0;
}

int cmd_shapley_exact(const std::string& model_path, const std::string& data_path,
                      std::size_t index, std::size_t background_k,
                      const std::string& config_path,
                      const std::vector<std::string>& sets, bool seed_given,
                      std::uint64_t seed_flag, const std::string& out) {
  const RunConfig rc = load_run_config(config_path, sets, seed_given, seed_flag);
  const MlpModel model = MlpModel::load(model_path);
  const Dataset data = load_csv(data_path);
  const Instance& z_e = instance_at(data, index);

  const std::uint64_t sub_seed = strategy_seed(rc.seed, Strategy::kernelshap);
  const Background background =
      background_k == 0 || background_k >= data.rows.size()
          ? Background{data.rows}
          : kmeans_background(data, background_k, 25, sub_seed);
  const ShapleyResult result = exact_shapley(model, z_e, background);

  // Fidelity of the additive game surrogate over the hybrid point cloud.
  Dataset bg_data;
  bg_data.rows = background.rows;
  std::vector<CoalitionMask> masks;
  const Neighbourhood n = kernelshap_neighbourhood(model, bg_data, z_e, &masks);
  std::vector<int> labels(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    double y = result.base_value;
    for (std::size_t j = 0; j < z_e.size(); ++j) {
      if ((masks[i] >> j) & 1u) y += result.phi[j];
    }
    labels[i] = y >= 0.5 ? 1 : 0;
  }

  Explanation e;
  e.method = "shapley-exact";
  e.attribution = result.phi;
  e.base_value = result.base_value;
  e.fidelity = fidelity(labels, n.bb_labels, n.weights);
  e.seed = rc.seed;
  e.config_digest = rc.digest;
  write_text(out, e.to_json());
  std::cout << "exact shapley values written to " << out << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Local surrogate explanation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path;
  std::vector<std::string> sets;
  std::uint64_t seed_flag = 0;

  // gen-data
  auto* gen = app.add_subcommand("gen-data", "Generate a half-moons CSV");
  std::size_t gen_n = 1000;
  double gen_noise = 0.2;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Number of rows");
  gen->add_option("--noise", gen_noise, "Gaussian noise std");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Output CSV path")->required();

  // train
  auto* train = app.add_subcommand("train", "Train the MLP black box");
  std::string train_data, train_out;
  std::size_t train_hidden = 16, train_epochs = 2000;
  double train_lr = 0.5;
  std::uint64_t train_seed = 0;
  train->add_option("--data", train_data, "Training CSV")->required();
  train->add_option("--hidden", train_hidden, "Hidden units");
  train->add_option("--epochs", train_epochs, "Training epochs");
  train->add_option("--lr", train_lr, "Learning rate");
  train->add_option("--seed", train_seed, "RNG seed");
  train->add_option("--out", train_out, "Output model path")->required();

  // explain
  auto* explain_cmd = app.add_subcommand("explain", "Explain one prediction");
  std::string ex_model, ex_data, ex_method, ex_out, ex_plot, ex_surrogate;
  std::string ex_dump_problem, ex_dump_neigh;
  std::size_t ex_index = 0;
  explain_cmd->add_option("--model", ex_model, "Model file")->required();
  explain_cmd->add_option("--data", ex_data, "Training CSV")->required();
  explain_cmd->add_option("--index", ex_index, "Row to explain")->required();
  explain_cmd->add_option("--method", ex_method,
                          "lime|gsls|lore|leap|kernelshap|palex")
      ->required();
  explain_cmd->add_option("--config", config_path,
                          "Config JSON (default from $LSX_CONFIG)");
  explain_cmd->add_option("--set", sets, "Override config field, key.path=value");
  auto* ex_seed_opt = explain_cmd->add_option("--seed", seed_flag, "Root seed");
  explain_cmd->add_option("--surrogate", ex_surrogate, "ridge|tree override");
  explain_cmd->add_option("--out", ex_out, "Explanation JSON path")->required();
  explain_cmd->add_option("--plot", ex_plot, "Optional single-panel SVG path");
  explain_cmd->add_option("--dump-problem", ex_dump_problem,
                          "Write the kernel regression X/W/y as CSV");
  explain_cmd->add_option("--dump-neighbourhood", ex_dump_neigh,
                          "Write the neighbourhood CSV (+ .meta.json sidecar)");

  // compare
  auto* compare = app.add_subcommand("compare",
                                     "Six-panel neighbourhood comparison");
  std::string cp_model, cp_data, cp_panel, cp_table, cp_rules, cp_meta;
  std::vector<std::string> cp_methods;
  std::size_t cp_index = 0;
  compare->add_option("--model", cp_model, "Model file")->required();
  compare->add_option("--data", cp_data, "Training CSV")->required();
  compare->add_option("--index", cp_index, "Row to explain")->required();
  compare->add_option("--methods", cp_methods, "Comma-separated method list")
      ->delimiter(',');
  compare->add_option("--config", config_path,
                      "Config JSON (default from $LSX_CONFIG)");
  compare->add_option("--set", sets, "Override config field, key.path=value");
  auto* cp_seed_opt = compare->add_option("--seed", seed_flag, "Root seed");
  compare->add_option("--out-panel", cp_panel, "Panel SVG path")->required();
  compare->add_option("--out-table", cp_table, "Attribution CSV path")->required();
  compare->add_option("--out-rules", cp_rules,
                      "Tree rule listing path (default <out-table>.rules.txt)");
  compare->add_option("--out-meta", cp_meta,
                      "Provenance JSON path (default <out-table>.meta.json)");

  // shapley-exact
  auto* oracle = app.add_subcommand("shapley-exact",
                                    "Brute-force Shapley value oracle");
  std::string or_model, or_data, or_out;
  std::size_t or_index = 0, or_background = 10;
  oracle->add_option("--model", or_model, "Model file")->required();
  oracle->add_option("--data", or_data, "Training CSV")->required();
  oracle->add_option("--index", or_index, "Row to explain")->required();
  oracle->add_option("--background-k", or_background,
                     "k-means background size (0 = all rows)");
  oracle->add_option("--config", config_path,
                     "Config JSON (default from $LSX_CONFIG)");
  oracle->add_option("--set", sets, "Override config field, key.path=value");
  auto* or_seed_opt = oracle->add_option("--seed", seed_flag, "Root seed");
  oracle->add_option("--out", or_out, "Explanation JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) return cmd_gen_data(gen_n, gen_noise, gen_seed, gen_out);
    if (train->parsed()) {
      return cmd_train(train_data, train_hidden, train_epochs, train_lr,
                       train_seed, train_out);
    }
    if (explain_cmd->parsed()) {
      return cmd_explain(ex_model, ex_data, ex_index, ex_method, config_path,
                         sets, ex_seed_opt->count() > 0, seed_flag, ex_surrogate,
                         ex_out, ex_plot, ex_dump_problem, ex_dump_neigh);
    }
    if (compare->parsed()) {
      return cmd_compare(cp_model, cp_data, cp_index, cp_methods, config_path,
                         sets, cp_seed_opt->count() > 0, seed_flag, cp_panel,
                         cp_table, cp_rules, cp_meta);
    }
    if (oracle->parsed()) {
      return cmd_shapley_exact(or_model, or_data, or_index, or_background,
                               config_path, sets, or_seed_opt->count() > 0,
                               seed_flag, or_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 1;
}

}  // namespace lsx::cli
