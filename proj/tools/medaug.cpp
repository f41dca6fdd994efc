/**
 * Copyright 2026 The medaugment-cpp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// medaug: batch augmentation frontend.
//
// Exit codes are a stable contract: 0 success, 1 usage error, 2 dataset
// layout/validation error, 3 I/O error.
//
// Option precedence: command-line flag > config file (--config, flat JSON
// mirroring the long flag names) > built-in default. The MEDAUG_SEED
// environment variable is the lowest-precedence seed source: it replaces
// the built-in seed default and is itself overridden by file and flag.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "medaug/codec.hpp"
#include "medaug/dataset.hpp"
#include "medaug/error.hpp"
#include "medaug/pipeline.hpp"
#include "medaug/resize.hpp"
#include "medaug/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitLayout = 2;
constexpr int kExitIo = 3;

int exit_code_for(const medaug::Error& e) {
  return medaug::is_layout_error(e.code()) ? kExitLayout : kExitIo;
}

struct Settings {
  std::string input;
  std::string output;
  std::string mask;
  std::string config_path;
  std::vector<double> ratios = {0.6, 0.2, 0.2};
  int level = 5;
  int branches = 4;
  std::uint64_t seed = 8;
  std::string task = "classification";
  bool no_original = false;
  std::string space_mode = "split";
  int workers = 0;
  int resize = 224;
  int count = 4;
  bool allow_nontrain = false;
  bool link = false;
  bool dump_config = false;
};

std::uint64_t env_seed_or(std::uint64_t fallback) {
  const char* env = std::getenv("MEDAUG_SEED");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw CLI::ValidationError("MEDAUG_SEED", std::string("not a number: ") +
                                                  env);
  return static_cast<std::uint64_t>(v);
}

// Finds --config before the real parse so file values can seed the defaults.
std::optional<std::string> prescan_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (arg.starts_with("--config=")) return arg.substr(9);
  }
  return std::nullopt;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw CLI::ValidationError("--config", path + ": " + e.what());
  }
}

template <typename T>
void from_config(const json& cfg, const char* key, T& value) {
  if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

medaug::TaskKind parse_task(const std::string& s) {
  return s == "segmentation" ? medaug::TaskKind::segmentation
                             : medaug::TaskKind::classification;
}

medaug::AugConfig to_aug_config(const Settings& s) {
  return medaug::AugConfig{.level = medaug::Level(s.level),
                           .branches = s.branches,
                           .include_original = !s.no_original,
                           .seed = s.seed,
                           .task = parse_task(s.task),
                           .space_mode = s.space_mode == "merged"
                                             ? medaug::SpaceMode::merged
                                             : medaug::SpaceMode::split};
}

json resolved_json(const Settings& s, const std::string& subcommand) {
  json j{{"subcommand", subcommand}, {"input", s.input},
         {"output", s.output},      {"level", s.level},
         {"branches", s.branches},  {"seed", s.seed},
         {"task", s.task},          {"no-original", s.no_original},
         {"space-mode", s.space_mode}, {"workers", s.workers},
         {"resize", s.resize},      {"allow-nontrain", s.allow_nontrain}};
  if (subcommand == "split") {
    j["ratios"] = s.ratios;
    j["link"] = s.link;
  }
  if (subcommand == "preview") {
    j["count"] = s.count;
    j["mask"] = s.mask;
  }
  return j;
}

void place_file(const fs::path& src, const fs::path& dst, bool link) {
  fs::create_directories(dst.parent_path());
  if (link)
    fs::create_symlink(fs::absolute(src), dst);
  else
    fs::copy_file(src, dst, fs::copy_options::overwrite_existing);
}

int run_split(const Settings& s) {
  if (s.ratios.size() != 3)
    throw std::invalid_argument("--ratios expects exactly 3 values");

  const medaug::DatasetManifest manifest =
      medaug::scan_dataset(s.input, parse_task(s.task));
  const medaug::SplitAssignment split = medaug::split_dataset(
      manifest, {s.ratios[0], s.ratios[1], s.ratios[2]}, s.seed);
  for (const std::string& w : split.warnings)
    std::cerr << "warning: " << w << "\n";

  const fs::path out_root(s.output);
  const auto place_split = [&](const char* name,
                               const std::vector<medaug::Sample>& samples) {
    for (const medaug::Sample& sample : samples) {
      const fs::path base = out_root / name;
      if (manifest.task == medaug::TaskKind::classification) {
        place_file(sample.image_path,
                   base / sample.class_label.value_or("") /
                       sample.image_path.filename(),
                   s.link);
      } else {
        place_file(sample.image_path,
                   base / "images" / sample.image_path.filename(), s.link);
        place_file(*sample.mask_path,
                   base / "masks" / sample.mask_path->filename(), s.link);
      }
    }
  };
  place_split("train", split.train);
  place_split("val", split.val);
  place_split("test", split.test);

  const auto count_for = [](const std::vector<medaug::Sample>& samples,
                            const std::string& label) {
    std::size_t n = 0;
    for (const medaug::Sample& x : samples)
      if (x.class_label.value_or("") == label) ++n;
    return n;
  };
  std::vector<std::string> labels = manifest.class_set;
  if (labels.empty()) labels.push_back("");
  std::cout << "class train val test\n";
  for (const std::string& label : labels)
    std::cout << (label.empty() ? "(all)" : label) << " "
              << count_for(split.train, label) << " "
              << count_for(split.val, label) << " "
              << count_for(split.test, label) << "\n";
  std::cout << "total " << split.train.size() << " " << split.val.size()
            << " " << split.test.size() << "\n";
  return kExitOk;
}

int run_augment(const Settings& s) {
  const fs::path input(s.input);
  const std::string base = input.filename().string();
  if (!s.allow_nontrain) {
    if (base == "val" || base == "valid" || base == "validation" ||
        base == "test") {
      std::cerr << "error: refusing to augment non-training split '" << base
                << "' (augmentation belongs on the training part only; pass "
                   "--allow-nontrain to override)\n";
      return kExitLayout;
    }
    if (fs::is_directory(input / "train")) {
      std::cerr << "error: " << input.string()
                << " looks like a split root; point --input at its train/ "
                   "subdirectory\n";
      return kExitLayout;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  const medaug::DatasetManifest manifest =
      medaug::scan_dataset(input, parse_task(s.task));
  const medaug::PipelineOptions options{.config = to_aug_config(s),
                                        .resize_to = s.resize,
                                        .workers = s.workers};
  const medaug::RunSummary summary = medaug::augment_dataset(
      manifest, options, s.output, [](std::size_t done) {
        // single write per line; workers may report concurrently
        std::cout << ("processed " + std::to_string(done) + " samples\n")
                  << std::flush;
      });
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

  for (const std::string& f : summary.failures)
    std::cerr << "failed: " << f << "\n";
  std::cout << "inputs: " << manifest.size() << " samples ("
            << summary.samples_skipped << " resumed)\n"
            << summary.images_written << " images written";
  if (summary.masks_written > 0)
    std::cout << ", " << summary.masks_written << " masks written";
  std::cout << "\nelapsed: " << static_cast<double>(elapsed) / 1000.0
            << " s\n";
  if (!summary.failures.empty()) {
    std::cerr << summary.failures.size() << " samples failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_preview(const Settings& s) {
  medaug::Image image = medaug::load_image(s.input);
  std::optional<medaug::Mask> mask;
  if (!s.mask.empty()) mask = medaug::load_mask(s.mask);
  if (s.resize > 0) {
    image = medaug::resize(image, s.resize, s.resize);
    if (mask) mask = medaug::resize_mask(*mask, s.resize, s.resize);
  }

  medaug::AugConfig config = to_aug_config(s);
  config.branches = s.count;
  config.include_original = true;
  if (mask) config.task = medaug::TaskKind::segmentation;

  std::vector<medaug::BranchOutput> outputs =
      medaug::augment_image(image, mask, 0, config);
  // original leads the sheet
  std::rotate(outputs.begin(), outputs.end() - 1, outputs.end());

  for (const medaug::BranchOutput& out : outputs)
    std::cout << medaug::describe(out.plan) << "\n";

  const int tile_w = image.width, tile_h = image.height;
  const int gap = 2;
  const int rows = mask ? 2 : 1;
  const int n = static_cast<int>(outputs.size());
  medaug::Image sheet(n * tile_w + (n - 1) * gap,
                      rows * tile_h + (rows - 1) * gap, image.channels, 32);
  for (int t = 0; t < n; ++t) {
    const medaug::BranchOutput& out = outputs[static_cast<std::size_t>(t)];
    const int x_off = t * (tile_w + gap);
    for (int y = 0; y < tile_h; ++y)
      for (int x = 0; x < tile_w; ++x)
        for (int c = 0; c < image.channels; ++c)
          sheet.set(x_off + x, y, c, out.image.at(x, y, c));
    if (mask && out.mask) {
      const int y_off = tile_h + gap;
      for (int y = 0; y < tile_h; ++y)
        for (int x = 0; x < tile_w; ++x)
          for (int c = 0; c < image.channels; ++c)
            sheet.set(x_off + x, y_off + y, c, out.mask->at(x, y));
    }
  }

  const fs::path out_path =
      s.output.empty()
          ? fs::path(s.input).parent_path() /
                (fs::path(s.input).stem().string() + "_preview.png")
          : fs::path(s.output);
  medaug::save_image(sheet, out_path);
  std::cout << "sheet: " << out_path.string() << " (" << n << " tiles)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Deterministic batch augmentation for medical image "
               "classification and segmentation datasets"};
  app.set_version_flag("--version", medaug::kVersion);
  app.require_subcommand(1);

  try {
    json cfg = json::object();
    if (auto path = prescan_config(argc, argv)) cfg = load_config_file(*path);

    // precedence: flag > config file > default; MEDAUG_SEED sits below the
    // config file and replaces only the built-in seed default
    s.seed = env_seed_or(s.seed);
    from_config(cfg, "input", s.input);
    from_config(cfg, "output", s.output);
    from_config(cfg, "mask", s.mask);
    from_config(cfg, "ratios", s.ratios);
    from_config(cfg, "level", s.level);
    from_config(cfg, "branches", s.branches);
    from_config(cfg, "seed", s.seed);
    from_config(cfg, "task", s.task);
    from_config(cfg, "no-original", s.no_original);
    from_config(cfg, "space-mode", s.space_mode);
    from_config(cfg, "workers", s.workers);
    from_config(cfg, "resize", s.resize);
    from_config(cfg, "count", s.count);
    from_config(cfg, "allow-nontrain", s.allow_nontrain);
    from_config(cfg, "link", s.link);

    const auto add_common = [&](CLI::App* cmd, bool needs_output) {
      cmd->add_option("--input", s.input, "input path")
          ->required(!cfg.contains("input"));
      auto* out = cmd->add_option("--output", s.output, "output path");
      if (needs_output && !cfg.contains("output")) out->required();
      cmd->add_option("--seed", s.seed, "deterministic seed")
          ->capture_default_str();
      cmd->add_option("--task", s.task, "dataset task")
          ->check(CLI::IsMember({"classification", "segmentation"}))
          ->capture_default_str();
      cmd->add_option("--config", s.config_path,
                      "flat JSON config file; flags override it");
      cmd->add_flag("--dump-config", s.dump_config,
                    "print the fully resolved settings and exit");
    };
    const auto add_aug_options = [&](CLI::App* cmd) {
      cmd->add_option("--level", s.level, "augmentation level l")
          ->check(CLI::Range(1, 5))
          ->capture_default_str();
      cmd->add_option("--branches", s.branches, "augment branches N")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      cmd->add_flag("--no-original", s.no_original,
                    "do not keep the untouched pass-through copy");
      cmd->add_option("--space-mode", s.space_mode,
                      "split = pixel/spatial spaces, merged = single-space "
                      "ablation")
          ->check(CLI::IsMember({"split", "merged"}))
          ->capture_default_str();
      cmd->add_option("--resize", s.resize,
                      "working resolution (square), 0 keeps source size")
          ->check(CLI::NonNegativeNumber)
          ->capture_default_str();
    };

    CLI::App* split = app.add_subcommand(
        "split", "stratified train/val/test split of a dataset tree");
    add_common(split, true);
    split->add_option("--ratios", s.ratios, "train val test fractions")
        ->expected(3)
        ->capture_default_str();
    split->add_flag("--link", s.link, "symlink instead of copy");

    CLI::App* augment = app.add_subcommand(
        "augment", "expand a training set by N augment branches per image");
    add_common(augment, true);
    add_aug_options(augment);
    augment->add_option("--workers", s.workers,
                        "worker threads, 0 = hardware concurrency")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    augment->add_flag("--allow-nontrain", s.allow_nontrain,
                      "permit augmenting val/test splits");

    CLI::App* preview = app.add_subcommand(
        "preview", "render one image's branches into a contact sheet");
    add_common(preview, false);
    add_aug_options(preview);
    preview->add_option("--mask", s.mask, "optional mask path");
    preview->add_option("--count", s.count, "number of augmented variants")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    app.parse(argc, argv);

    // ratio sanity belongs to the usage contract
    if (app.got_subcommand(split)) {
      double sum = 0.0;
      for (double r : s.ratios) sum += r;
      if (s.ratios.size() != 3 || std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("--ratios must sum to 1");
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    if (s.dump_config) {
      std::cout << resolved_json(s, sub).dump(2) << "\n";
      return kExitOk;
    }
    if (sub == "split") return run_split(s);
    if (sub == "augment") return run_augment(s);
    return run_preview(s);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion") {
      app.exit(e);
      return kExitOk;
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const medaug::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
