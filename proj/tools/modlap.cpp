#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modlap/dynamics.hpp"
#include "modlap/experiments.hpp"
#include "modlap/geometry.hpp"
#include "modlap/mask.hpp"
#include "modlap/metrics.hpp"
#include "modlap/periodicity.hpp"
#include "modlap/render.hpp"
#include "modlap/schedule.hpp"
#include "modlap/seed.hpp"
#include "modlap/taxonomy.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << bytes;
  if (!out) throw IoError("write failed for " + path);
}

struct SeedOptions {
  std::string spec = "point";
  std::string size_class = "medium";
  double fill = 0.5;
  uint64_t rng_seed = 1;
};

modlap::SizeClass parse_size_class(const std::string& s) {
  if (s == "small") return modlap::SizeClass::small;
  if (s == "medium") return modlap::SizeClass::medium;
  if (s == "large") return modlap::SizeClass::large;
  throw std::invalid_argument("unknown size class: " + s);
}

modlap::LatticeState load_seed(const SeedOptions& opt) {
  const auto& names = modlap::builtin_seed_names();
  if (std::find(names.begin(), names.end(), opt.spec) != names.end())
    return modlap::builtin_seed(opt.spec);
  if (opt.spec == "random")
    return modlap::random_seed(parse_size_class(opt.size_class), opt.fill, opt.rng_seed);
  return modlap::parse_figure(read_file(opt.spec));
}

std::string seed_label(const SeedOptions& opt) {
  const auto& names = modlap::builtin_seed_names();
  if (opt.spec == "random" ||
      std::find(names.begin(), names.end(), opt.spec) != names.end())
    return opt.spec;
  return std::filesystem::path(opt.spec).stem().string();
}

modlap::Mask load_mask(const std::string& spec) {
  const auto& names = modlap::builtin_mask_names();
  if (std::find(names.begin(), names.end(), spec) != names.end())
    return modlap::builtin_mask(spec);
  return modlap::parse_mask(read_file(spec), std::filesystem::path(spec).stem().string());
}

void add_seed_options(CLI::App* cmd, SeedOptions& opt) {
  cmd->add_option("--seed", opt.spec, "builtin seed name, figure file path, or 'random'");
  cmd->add_option("--seed-class", opt.size_class, "random seed size class: small|medium|large");
  cmd->add_option("--fill", opt.fill, "random seed fill probability");
  cmd->add_option("--rng-seed", opt.rng_seed, "random number generator seed");
}

void stream_out(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-")
    std::cout << bytes;
  else
    write_file(path, bytes);
}

// ---- sweep config ----------------------------------------------------------

modlap::SweepSpec load_sweep_spec(const std::string& path, std::string& output_path) {
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad sweep config: ") + e.what());
  }
  modlap::SweepSpec spec;
  for (const auto& s : cfg.at("seeds")) {
    SeedOptions opt;
    opt.spec = s.get<std::string>();
    spec.seeds.push_back({seed_label(opt), load_seed(opt)});
  }
  for (const auto& m : cfg.at("masks")) spec.masks.push_back(load_mask(m.get<std::string>()));
  if (cfg.contains("schedules"))
    for (const auto& s : cfg["schedules"]) {
      std::string text = s.get<std::string>();
      spec.schedules.push_back({text, modlap::parse_schedule(text), 0, 0});
    }
  if (cfg.contains("family")) {
    const auto& fam = cfg["family"];
    int s_min = fam.value("s_min", 1), s_max = fam.value("s_max", 8);
    for (const auto& k : fam.at("k"))
      for (int s = s_min; s <= s_max; ++s)
        spec.schedules.push_back(modlap::carpet_family_schedule(k.get<int>(), s));
  }
  if (cfg.contains("rule")) spec.rule = modlap::parse_rule(cfg["rule"].get<std::string>());
  spec.horizon = cfg.value("horizon", (long long)80);
  if (cfg.contains("criteria")) {
    const auto& c = cfg["criteria"];
    spec.criteria.min_density = c.value("min_density", spec.criteria.min_density);
    spec.criteria.max_stripe_fraction = c.value("max_stripe_fraction", spec.criteria.max_stripe_fraction);
    spec.criteria.max_hole_fraction = c.value("max_hole_fraction", spec.criteria.max_hole_fraction);
    spec.criteria.horizon = c.value("horizon", spec.criteria.horizon);
  }
  spec.double_symmetric_only = cfg.value("double_symmetric_only", true);
  spec.threads = cfg.value("threads", 1);
  output_path = cfg.value("output", std::string{});
  return spec;
}

// ---- subcommands -----------------------------------------------------------

int cmd_run(const SeedOptions& seed_opt, const std::string& mask_spec,
            const std::string& schedule_text, const std::string& rule_text, long long steps,
            const std::string& csv_path, const std::string& frame_dir, long long frame_every,
            int scale, int kappa_lag) {
  modlap::LatticeState seed = load_seed(seed_opt);
  modlap::Mask mask = load_mask(mask_spec);
  modlap::Schedule schedule = modlap::parse_schedule(schedule_text);
  modlap::UpdateRule rule = modlap::parse_rule(rule_text);
  if (steps < 0) throw std::invalid_argument("--steps must be nonnegative");

  int K = schedule.modulus_bound();
  std::ostringstream csv;
  modlap::MetricsCsvWriter writer(csv, K, kappa_lag);
  modlap::Palette palette = modlap::default_palette(std::min(K, 12));
  if (!frame_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(frame_dir, ec);
    if (ec) throw IoError("cannot create frame directory " + frame_dir);
  }
  modlap::run(seed, mask, schedule, rule, steps, [&](long long t, const modlap::LatticeState& s) {
    writer.add(t, s);
    if (!frame_dir.empty() && frame_every > 0 && t % frame_every == 0) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%06lld.pgm", t);
      write_file(frame_dir + "/" + name, modlap::render_pgm(s, palette, scale));
    }
  });
  stream_out(csv_path, csv.str());
  return 0;
}

int cmd_periods(const SeedOptions& seed_opt, const std::string& mask_spec, int k,
                const std::string& rule_text, long long horizon, bool support_only) {
  modlap::LatticeState seed = load_seed(seed_opt);
  modlap::Mask mask = load_mask(mask_spec);
  modlap::UpdateRule rule = modlap::parse_rule(rule_text);
  modlap::Exactness mode = support_only ? modlap::Exactness::support_only : modlap::Exactness::exact;
  modlap::PeriodScanReport report = modlap::period_scan(seed, mask, k, rule, horizon, mode);

  std::ostringstream out;
  out << "law k=" << report.law.k << " base=" << report.law.base << " (" << report.law.note << ")\n";
  out << "returns=[";
  for (size_t i = 0; i < report.return_times.size(); ++i)
    out << (i ? "," : "") << report.return_times[i];
  out << "]\n";
  for (const auto& e : report.events) out << modlap::format_event(e) << "\n";
  if (report.first_big) {
    out << "first_big t=" << report.first_big->tau << " w=" << report.copies_across
        << " seed_extent=" << report.seed_extent
        << " lemma_2t_ge_ws=" << (report.lemma_holds ? "true" : "false");
    if (report.predicted_big) out << " t_big=" << *report.predicted_big;
    out << "\n";
  }
  out << "off_law_events=" << report.off_law_event_times.size() << "\n";
  std::cout << out.str();
  return 0;
}

int cmd_fingerprint(const SeedOptions& seed_opt, const std::string& mask_spec,
                    const std::string& schedule_text, const std::string& rule_text,
                    long long horizon) {
  modlap::FingerprintReport report =
      modlap::density_fingerprint(load_seed(seed_opt), load_mask(mask_spec),
                                  modlap::parse_schedule(schedule_text),
                                  modlap::parse_rule(rule_text), horizon);
  std::ostringstream out;
  out << "minima=[";
  for (size_t i = 0; i < report.minima.size(); ++i) out << (i ? "," : "") << report.minima[i];
  out << "]\n";
  if (report.modal_mod8)
    out << "modal_mod8=" << *report.modal_mod8 << " regularity=" << modlap::format_g9(report.regularity_mod8) << "\n";
  else
    out << "modal_mod8=none\n";
  if (report.modal_mod16)
    out << "modal_mod16=" << *report.modal_mod16 << " regularity=" << modlap::format_g9(report.regularity_mod16) << "\n";
  else
    out << "modal_mod16=none\n";
  std::cout << out.str();
  return 0;
}

int cmd_classify(const SeedOptions& seed_opt, const std::string& mask_spec,
                 const std::string& schedule_text, const std::string& rule_text,
                 long long horizon, const modlap::CarpetCriteria& criteria,
                 const std::string& csv_path) {
  modlap::LatticeState seed = load_seed(seed_opt);
  modlap::Mask mask = load_mask(mask_spec);
  modlap::Schedule schedule = modlap::parse_schedule(schedule_text);
  auto traj = modlap::run_collect(seed, mask, schedule, modlap::parse_rule(rule_text),
                                  std::max(horizon, criteria.horizon));
  modlap::FigureClass fc = modlap::classify(traj, criteria);
  std::string out = modlap::classification_csv_header() + "\n" +
                    modlap::classification_csv_line(seed_label(seed_opt), mask.name,
                                                    schedule.to_string(), fc) +
                    "\n";
  stream_out(csv_path, out);
  return 0;
}

int cmd_render(const SeedOptions& seed_opt, const std::string& mask_spec,
               const std::string& schedule_text, const std::string& rule_text, long long steps,
               int scale, const std::string& out_path) {
  modlap::LatticeState seed = load_seed(seed_opt);
  modlap::LatticeState state = seed;
  if (steps > 0) {
    state = modlap::run(seed, load_mask(mask_spec), modlap::parse_schedule(schedule_text),
                        modlap::parse_rule(rule_text), steps);
  }
  int K = std::max(2, state.modulus_bound());
  stream_out(out_path, modlap::render_pgm(state, modlap::default_palette(std::min(K, 12)), scale));
  return 0;
}

int cmd_mask(const std::string& mask_spec) {
  modlap::Mask m = load_mask(mask_spec);
  modlap::SymmetrySignature sig = modlap::mask_symmetry(m);
  std::cout << modlap::format_mask(m);
  std::cout << "name=" << m.name << " degree=" << m.degree() << " radius=" << m.radius()
            << " symmetry=" << modlap::to_string(sig.klass()) << "\n";
  return 0;
}

int cmd_seed(const SeedOptions& seed_opt) {
  modlap::LatticeState s = load_seed(seed_opt);
  std::cout << modlap::format_figure(s);
  std::cout << "support=" << s.support_size() << " box=" << s.bounding_box().width() << "x"
            << s.bounding_box().height() << " class=";
  switch (modlap::classify_size(s)) {
    case modlap::SizeClass::small: std::cout << "small"; break;
    case modlap::SizeClass::medium: std::cout << "medium"; break;
    default: std::cout << "large"; break;
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterated modular Laplacian lattice dynamics"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "step a seed and stream metrics CSV");
  SeedOptions run_seed;
  std::string run_mask = "von-neumann", run_schedule = "[2]*", run_rule = "laplacian";
  long long run_steps = 16, run_frame_every = 0;
  std::string run_csv, run_frames;
  int run_scale = 1, run_kappa_lag = 8;
  add_seed_options(run_cmd, run_seed);
  run_cmd->add_option("--mask", run_mask, "builtin mask name or mask file path");
  run_cmd->add_option("--schedule", run_schedule, "modulus schedule, e.g. \"[2]*\" or \"2,3,[2]*\"");
  run_cmd->add_option("--rule", run_rule, "laplacian|identity-plus-sum|neighbor-sum");
  run_cmd->add_option("--steps", run_steps, "number of steps");
  run_cmd->add_option("--csv", run_csv, "CSV output path ('-' for stdout)");
  run_cmd->add_option("--frames", run_frames, "directory for PGM frames");
  run_cmd->add_option("--frame-every", run_frame_every, "write a frame every N steps (0 = off)");
  run_cmd->add_option("--scale", run_scale, "pixels per cell");
  run_cmd->add_option("--kappa-lag", run_kappa_lag, "lag for the density ratio column");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "run a classification sweep from a JSON config");
  std::string sweep_config;
  sweep_cmd->add_option("config", sweep_config, "JSON campaign config")->required();

  // periods
  auto* periods_cmd = app.add_subcommand("periods", "constant-k return/replication scan");
  SeedOptions periods_seed;
  std::string periods_mask = "von-neumann", periods_rule = "identity-plus-sum";
  int periods_k = 2;
  long long periods_horizon = 200;
  bool periods_support_only = false;
  add_seed_options(periods_cmd, periods_seed);
  periods_cmd->add_option("--mask", periods_mask, "builtin mask name or mask file path");
  periods_cmd->add_option("--k", periods_k, "constant modulus");
  periods_cmd->add_option("--rule", periods_rule, "update rule");
  periods_cmd->add_option("--horizon", periods_horizon, "scan horizon");
  periods_cmd->add_flag("--support-only", periods_support_only, "compare supports instead of residues");

  // fingerprint
  auto* fp_cmd = app.add_subcommand("fingerprint", "density minima phase report");
  SeedOptions fp_seed;
  std::string fp_mask = "von-neumann", fp_schedule = "[2]*", fp_rule = "laplacian";
  long long fp_horizon = 128;
  add_seed_options(fp_cmd, fp_seed);
  fp_cmd->add_option("--mask", fp_mask, "builtin mask name or mask file path");
  fp_cmd->add_option("--schedule", fp_schedule, "modulus schedule");
  fp_cmd->add_option("--rule", fp_rule, "update rule");
  fp_cmd->add_option("--horizon", fp_horizon, "trace length");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "carpet/rug verdict for one configuration");
  SeedOptions cls_seed;
  std::string cls_mask = "von-neumann", cls_schedule = "[2]*", cls_rule = "laplacian", cls_csv;
  long long cls_horizon = 80;
  modlap::CarpetCriteria cls_criteria;
  add_seed_options(classify_cmd, cls_seed);
  classify_cmd->add_option("--mask", cls_mask, "builtin mask name or mask file path");
  classify_cmd->add_option("--schedule", cls_schedule, "modulus schedule");
  classify_cmd->add_option("--rule", cls_rule, "update rule");
  classify_cmd->add_option("--horizon", cls_horizon, "trajectory length");
  classify_cmd->add_option("--csv", cls_csv, "output path ('-' for stdout)");
  classify_cmd->add_option("--min-density", cls_criteria.min_density, "carpet density floor");
  classify_cmd->add_option("--max-stripe", cls_criteria.max_stripe_fraction, "stripe ceiling");
  classify_cmd->add_option("--max-hole", cls_criteria.max_hole_fraction, "hole ceiling");
  classify_cmd->add_option("--criteria-horizon", cls_criteria.horizon, "classification horizon");

  // render
  auto* render_cmd = app.add_subcommand("render", "render a state to a text PGM/PPM");
  SeedOptions render_seed;
  std::string render_mask = "von-neumann", render_schedule = "[2]*", render_rule = "laplacian";
  long long render_steps = 0;
  int render_scale = 1;
  std::string render_out;
  add_seed_options(render_cmd, render_seed);
  render_cmd->add_option("--mask", render_mask, "builtin mask name or mask file path");
  render_cmd->add_option("--schedule", render_schedule, "modulus schedule");
  render_cmd->add_option("--rule", render_rule, "update rule");
  render_cmd->add_option("--steps", render_steps, "steps before rendering");
  render_cmd->add_option("--scale", render_scale, "pixels per cell");
  render_cmd->add_option("--out", render_out, "output path ('-' for stdout)");

  // mask / seed inspection
  auto* mask_cmd = app.add_subcommand("mask", "print a mask grid and its properties");
  std::string mask_spec = "von-neumann";
  mask_cmd->add_option("--name", mask_spec, "builtin mask name or mask file path");

  auto* seed_cmd = app.add_subcommand("seed", "print a seed figure and its properties");
  SeedOptions seed_opt;
  add_seed_options(seed_cmd, seed_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed())
      return cmd_run(run_seed, run_mask, run_schedule, run_rule, run_steps, run_csv, run_frames,
                     run_frame_every, run_scale, run_kappa_lag);
    if (sweep_cmd->parsed()) {
      std::string output_path;
      modlap::SweepSpec spec = load_sweep_spec(sweep_config, output_path);
      stream_out(output_path, modlap::sweep_csv(modlap::run_sweep(spec)));
      return 0;
    }
    if (periods_cmd->parsed())
      return cmd_periods(periods_seed, periods_mask, periods_k, periods_rule, periods_horizon,
                         periods_support_only);
    if (fp_cmd->parsed())
      return cmd_fingerprint(fp_seed, fp_mask, fp_schedule, fp_rule, fp_horizon);
    if (classify_cmd->parsed())
      return cmd_classify(cls_seed, cls_mask, cls_schedule, cls_rule, cls_horizon, cls_criteria,
                          cls_csv);
    if (render_cmd->parsed())
      return cmd_render(render_seed, render_mask, render_schedule, render_rule, render_steps,
                        render_scale, render_out);
    if (mask_cmd->parsed()) return cmd_mask(mask_spec);
    if (seed_cmd->parsed()) return cmd_seed(seed_opt);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
