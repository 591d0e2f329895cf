// Copyright 2026 The iqrdenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: noise injection, filtering, PSNR and window-size
// sweeps over PGM images.
//
// Exit status: 0 on success, 1 on a processing error, 2 on a usage or
// parameter error (including unreadable inputs).

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iqrdenoise/iqrdenoise.h"

namespace iqrdenoise {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitProcessing = 1;
constexpr int kExitUsage = 2;

// Parameter problems and unreadable inputs are usage errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool IsParameterError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kEvenWindow:
    case ErrorCode::kWindowTooSmall:
      return true;
    default:
      return false;
  }
}

GrayImage ReadInput(const std::filesystem::path& path) {
  try {
    return ReadPgmFile(path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw UsageError(e.what());
    throw;
  }
}

template <typename Enum>
std::map<std::string, Enum> ChoiceMap(std::initializer_list<Enum> values,
                                      std::string_view (*name)(Enum)) {
  std::map<std::string, Enum> out;
  for (Enum v : values) out.emplace(std::string(name(v)), v);
  return out;
}

struct NoiseArgs {
  std::string input;
  std::string output;
  double density = 0.1;
  std::uint64_t seed = 1;
};

struct DenoiseArgs {
  std::string input;
  std::string output;
  FilterKind filter = FilterKind::kIqr;
  int window = 3;
  double t1 = kDefaultThreshold;
  double t2 = kDefaultThreshold;
  Fallback fallback = Fallback::kGlobalCleanMedian;
};

struct PsnrArgs {
  std::string reference;
  std::string other;
};

struct BenchArgs {
  std::vector<std::string> inputs;
  BenchConfig cfg;
  std::string output;
};

struct GenArgs {
  SyntheticSpec spec;
  std::string pattern = "flat";
  std::string output;
  std::string corpus_dir;
  int corpus_size = 256;
};

void AddFilterParams(CLI::App* cmd, double* t1, double* t2, Fallback* fallback) {
  cmd->add_option("--t1", *t1, "Minimum distance below Q1 to flag a pixel")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--t2", *t2, "Minimum distance above Q3 to flag a pixel")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--fallback", *fallback,
                  "Value for pixels with no clean neighbor anywhere")
      ->transform(CLI::CheckedTransformer(
          ChoiceMap({Fallback::kMidGray, Fallback::kGlobalCleanMedian},
                    FallbackName),
          CLI::ignore_case))
      ->default_str("cleanmedian");
}

int RunNoise(const NoiseArgs& args) {
  const GrayImage img = ReadInput(args.input);
  WritePgmFile(args.output, AddSaltPepper(img, {args.density, args.seed}));
  return kExitOk;
}

int RunDenoise(const DenoiseArgs& args) {
  FilterConfig cfg{args.window, args.t1, args.t2, args.fallback};
  // Validate before touching the input so parameter errors win.
  if (args.filter == FilterKind::kMedian) {
    if (args.window < 3) {
      throw Error(ErrorCode::kWindowTooSmall, "median window must be >= 3");
    }
    if (args.window % 2 == 0) {
      throw Error(ErrorCode::kEvenWindow, "median window must be odd");
    }
  } else {
    cfg.Validate();
  }
  const GrayImage img = ReadInput(args.input);
  const GrayImage out = args.filter == FilterKind::kIqr
                            ? DenoiseIqr(img, cfg)
                            : DenoiseMedian(img, args.window);
  WritePgmFile(args.output, out);
  return kExitOk;
}

int RunPsnr(const PsnrArgs& args) {
  const GrayImage a = ReadInput(args.reference);
  const GrayImage b = ReadInput(args.other);
  const PsnrResult r = Psnr(a, b);
  std::printf("mse=%.6f psnr_db=%s\n", r.mse, FormatDb(r.psnr_db).c_str());
  return kExitOk;
}

int RunBenchCommand(BenchArgs& args) {
  args.cfg.inputs.assign(args.inputs.begin(), args.inputs.end());
  args.cfg.output = args.output;
  args.cfg.Validate();
  std::vector<NamedImage> images;
  try {
    images = LoadBenchInputs(args.cfg.inputs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw UsageError(e.what());
    throw;
  }
  const auto records = RunBench(images, args.cfg);
  if (args.output.empty() || args.output == "-") {
    WriteBenchCsv(std::cout, records);
    return kExitOk;
  }
  std::ofstream out(args.output, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + args.output);
  WriteBenchCsv(out, records);
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + args.output);
  return kExitOk;
}

int RunGen(GenArgs& args) {
  if (!args.corpus_dir.empty()) {
    const std::filesystem::path dir(args.corpus_dir);
    std::filesystem::create_directories(dir);
    for (const auto& [id, image] : TrendCorpus(args.corpus_size)) {
      WritePgmFile(dir / (id + ".pgm"), image);
    }
    return kExitOk;
  }
  if (args.output.empty()) throw UsageError("gen needs --out or --corpus");
  const auto pattern = ParsePattern(args.pattern);
  if (!pattern) throw UsageError("unknown pattern " + args.pattern);
  args.spec.pattern = *pattern;
  WritePgmFile(args.output, Generate(args.spec));
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"IQR outlier filter and median baseline for 8-bit PGM images"};
  app.require_subcommand(1);

  NoiseArgs noise;
  auto* noise_cmd = app.add_subcommand("noise", "Add salt-and-pepper noise");
  noise_cmd->add_option("input", noise.input, "Input PGM")->required();
  noise_cmd->add_option("--out", noise.output, "Output PGM")->required();
  noise_cmd->add_option("--density", noise.density, "Corruption probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  noise_cmd->add_option("--seed", noise.seed, "PRNG seed")->capture_default_str();

  DenoiseArgs denoise;
  auto* denoise_cmd = app.add_subcommand("denoise", "Run the IQR or median filter");
  denoise_cmd->add_option("input", denoise.input, "Input PGM")->required();
  denoise_cmd->add_option("--out", denoise.output, "Output PGM")->required();
  denoise_cmd->add_option("--filter", denoise.filter, "iqr or median")
      ->transform(CLI::CheckedTransformer(
          ChoiceMap({FilterKind::kIqr, FilterKind::kMedian}, FilterName),
          CLI::ignore_case))
      ->default_str("iqr");
  denoise_cmd->add_option("--window", denoise.window, "Window size k")
      ->capture_default_str();
  AddFilterParams(denoise_cmd, &denoise.t1, &denoise.t2, &denoise.fallback);

  PsnrArgs psnr;
  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR between two PGM images");
  psnr_cmd->add_option("reference", psnr.reference, "Reference PGM")->required();
  psnr_cmd->add_option("other", psnr.other, "Compared PGM")->required();

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Sweep window sizes and write a CSV report");
  bench_cmd->add_option("inputs", bench.inputs, "Clean input PGMs")->required();
  bench_cmd->add_option("--windows", bench.cfg.windows, "Odd window sizes")
      ->delimiter(',')
      ->default_str("3,5,7");
  bench_cmd->add_option("--density", bench.cfg.density, "Corruption probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.cfg.seed, "Base PRNG seed")
      ->capture_default_str();
  bench_cmd->add_option("--threads", bench.cfg.threads,
                        "Images processed concurrently")
      ->capture_default_str();
  AddFilterParams(bench_cmd, &bench.cfg.t1, &bench.cfg.t2, &bench.cfg.fallback);
  bench_cmd->add_option("--out", bench.output, "CSV path ('-' for stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic test image");
  gen_cmd->add_option("--pattern", gen.pattern,
                      "flat, step, steps, checker, ramp or gradient")
      ->capture_default_str();
  gen_cmd->add_option("--width", gen.spec.width)->capture_default_str();
  gen_cmd->add_option("--height", gen.spec.height)->capture_default_str();
  gen_cmd->add_option("--value", gen.spec.value, "flat intensity")
      ->capture_default_str();
  gen_cmd->add_option("--low", gen.spec.low)->capture_default_str();
  gen_cmd->add_option("--high", gen.spec.high)->capture_default_str();
  gen_cmd->add_option("--cell", gen.spec.cell)->capture_default_str();
  gen_cmd->add_option("--period", gen.spec.period)->capture_default_str();
  gen_cmd->add_option("--base", gen.spec.base)->capture_default_str();
  gen_cmd->add_option("--col-step", gen.spec.col_step)->capture_default_str();
  gen_cmd->add_option("--row-step", gen.spec.row_step)->capture_default_str();
  gen_cmd->add_option("--levels", gen.spec.levels)->capture_default_str();
  gen_cmd->add_option("--out", gen.output, "Output PGM");
  gen_cmd->add_option("--corpus", gen.corpus_dir,
                      "Write the three-image trend corpus into this directory");
  gen_cmd->add_option("--size", gen.corpus_size, "Corpus image side")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*noise_cmd) return RunNoise(noise);
    if (*denoise_cmd) return RunDenoise(denoise);
    if (*psnr_cmd) return RunPsnr(psnr);
    if (*bench_cmd) return RunBenchCommand(bench);
    if (*gen_cmd) return RunGen(gen);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return IsParameterError(e.code()) ? kExitUsage : kExitProcessing;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProcessing;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace iqrdenoise

int main(int argc, char** argv) { return iqrdenoise::Main(argc, argv); }
