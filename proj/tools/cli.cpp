#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medwave/bench.hpp"
#include "medwave/error.hpp"
#include "medwave/metrics.hpp"
#include "medwave/noise.hpp"

namespace medwave::cli {

namespace fs = std::filesystem;

namespace {

// Flags shared by every subcommand that runs the de-noising pipeline.
struct PipelineFlags {
  std::string wavelet = "haar";
  std::string boundary = "periodic";
  int window = 3;
  bool filter_approx = false;
  bool no_clip = false;
  bool signed_threshold = false;

  void attach(CLI::App& app) {
    app.add_option("--wavelet", wavelet, "Wavelet family")
        ->check(CLI::IsMember({"haar", "db2", "db4", "sym4"}))
        ->capture_default_str();
    app.add_option("--boundary", boundary, "Boundary extension")
        ->check(CLI::IsMember({"periodic", "symmetric"}))
        ->capture_default_str();
    app.add_option("--window", window, "Median window size (odd, >= 3)")->capture_default_str();
    app.add_flag("--filter-approx", filter_approx, "Also median-filter the approximation band");
    app.add_flag("--no-clip", no_clip, "Do not clamp the restored image to [0, 255]");
    app.add_flag("--signed-threshold", signed_threshold,
                 "Compare signed coefficients against the threshold (debug)");
  }

  PipelineConfig to_config() const {
    PipelineConfig cfg;
    cfg.wavelet.family = *parse_wavelet_family(wavelet);
    cfg.wavelet.boundary = *parse_boundary(boundary);
    cfg.window = window;
    cfg.filter_approx_band = filter_approx;
    cfg.clip_output = !no_clip;
    cfg.rule = signed_threshold ? ThresholdRule::kSigned : ThresholdRule::kMagnitude;
    return cfg;
  }
};

CLI::Validator case_validator() { return CLI::IsMember({"dwt", "mf", "mf-before", "mf-after"}); }

CLI::Option* add_format(CLI::App& app, std::string& format) {
  return app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"csv", "markdown", "md"}))
      ->capture_default_str();
}

std::vector<NamedImage> images_or_synthetic(const std::vector<std::string>& paths) {
  if (paths.empty()) return synthetic_corpus();
  return load_images({paths.begin(), paths.end()});
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) throw IoError(IoError::Code::kUnwritable, "cannot write " + path.string());
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Median filtering combined with wavelet-domain hard thresholding", "medwave"};
  app.require_subcommand(1);

  // denoise
  auto* denoise = app.add_subcommand("denoise", "De-noise one image with one case");
  std::string denoise_input;
  std::string denoise_case = "mf-before";
  double denoise_sigma = 0.0;
  std::uint64_t denoise_seed = 1;
  std::string denoise_reference;
  std::string denoise_out;
  std::string denoise_format = "csv";
  PipelineFlags denoise_flags;
  denoise->add_option("input", denoise_input, "Input PGM")->required();
  denoise->add_option("--case", denoise_case, "dwt | mf | mf-before | mf-after")
      ->check(case_validator())
      ->capture_default_str();
  denoise->add_option("--sigma", denoise_sigma,
                      "Add N(0, sigma^2) noise first and score against the input")
      ->check(CLI::NonNegativeNumber);
  denoise->add_option("--seed", denoise_seed, "Noise seed")->capture_default_str();
  denoise->add_option("--reference", denoise_reference, "Clean reference PGM for MSE/PSNR");
  denoise->add_option("--out", denoise_out, "Output PGM (default <input>_<case>.pgm)");
  add_format(*denoise, denoise_format);
  denoise_flags.attach(*denoise);

  // bench
  auto* bench = app.add_subcommand("bench", "PSNR table: every image x sigma x case");
  std::vector<std::string> bench_images;
  std::vector<double> bench_sigmas{15.0, 20.0, 25.0};
  std::vector<std::string> bench_cases{"mf", "dwt", "mf-before", "mf-after"};
  std::uint64_t bench_seed = 1;
  std::string bench_out;
  std::string bench_format = "csv";
  unsigned bench_jobs = 1;
  PipelineFlags bench_flags;
  bench->add_option("images", bench_images, "Input PGMs (default: built-in synthetic set)");
  bench->add_option("--sigma", bench_sigmas, "Noise levels")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--case", bench_cases, "Cases to run")
      ->delimiter(',')
      ->check(case_validator())
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Master seed")->capture_default_str();
  bench->add_option("--out", bench_out, "Directory for noisy/de-noised PGMs and the report");
  bench->add_option("--jobs", bench_jobs, "Worker threads")->capture_default_str();
  add_format(*bench, bench_format);
  bench_flags.attach(*bench);

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Noise-estimation table from the HH band");
  std::vector<std::string> estimate_images;
  std::vector<double> estimate_sigmas{15.0, 20.0, 25.0};
  std::uint64_t estimate_seed = 1;
  std::string estimate_format = "csv";
  std::string estimate_wavelet = "haar";
  std::string estimate_boundary = "periodic";
  unsigned estimate_jobs = 1;
  estimate->add_option("images", estimate_images, "Input PGMs (default: built-in synthetic set)");
  estimate->add_option("--sigma", estimate_sigmas, "Noise levels")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  estimate->add_option("--seed", estimate_seed, "Master seed")->capture_default_str();
  estimate->add_option("--wavelet", estimate_wavelet, "Wavelet family")
      ->check(CLI::IsMember({"haar", "db2", "db4", "sym4"}))
      ->capture_default_str();
  estimate->add_option("--boundary", estimate_boundary, "Boundary extension")
      ->check(CLI::IsMember({"periodic", "symmetric"}))
      ->capture_default_str();
  estimate->add_option("--jobs", estimate_jobs, "Worker threads")->capture_default_str();
  add_format(*estimate, estimate_format);

  // metrics
  auto* metrics = app.add_subcommand("metrics", "MSE and PSNR between two images");
  std::string metrics_original;
  std::string metrics_restored;
  metrics->add_option("original", metrics_original, "Reference PGM")->required();
  metrics->add_option("restored", metrics_restored, "Restored PGM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*denoise) {
      PipelineConfig cfg = denoise_flags.to_config();
      cfg.case_id = *parse_case(denoise_case);
      const fs::path input(denoise_input);
      const GrayImage loaded = load_pgm(input);

      std::optional<GrayImage> original;
      GrayImage noisy = loaded;
      if (denoise_sigma > 0.0) {
        original = loaded;
        noisy = add_gaussian_noise(loaded, NoiseSpec{0.0, denoise_sigma, denoise_seed});
      }
      if (!denoise_reference.empty()) original = load_pgm(denoise_reference);

      DenoiseResult result = original ? run_pipeline(noisy, *original, cfg) : run_pipeline(noisy, cfg);
      if (denoise_sigma > 0.0) result.report.true_sigma = denoise_sigma;

      const fs::path out_path =
          denoise_out.empty()
              ? input.parent_path() / (input.stem().string() + "_" + denoise_case + ".pgm")
              : fs::path(denoise_out);
      save_pgm(result.image, out_path);
      out << format_benchmark({BenchRow{input.stem().string(), denoise_sigma, result.report}},
                              *parse_report_format(denoise_format));
    } else if (*bench) {
      BenchConfig cfg;
      cfg.images = images_or_synthetic(bench_images);
      cfg.sigmas = bench_sigmas;
      cfg.cases.clear();
      for (const auto& c : bench_cases) cfg.cases.push_back(*parse_case(c));
      cfg.master_seed = bench_seed;
      cfg.pipeline = bench_flags.to_config();
      cfg.jobs = bench_jobs;
      if (!bench_out.empty()) {
        fs::create_directories(bench_out);
        cfg.image_dir = fs::path(bench_out);
      }
      const ReportFormat format = *parse_report_format(bench_format);
      const std::string report = format_benchmark(run_benchmark(cfg), format);
      out << report;
      if (cfg.image_dir) {
        write_text(*cfg.image_dir / (format == ReportFormat::kCsv ? "report.csv" : "report.md"),
                   report);
      }
    } else if (*estimate) {
      BenchConfig cfg;
      cfg.images = images_or_synthetic(estimate_images);
      cfg.sigmas = estimate_sigmas;
      cfg.master_seed = estimate_seed;
      cfg.pipeline.wavelet.family = *parse_wavelet_family(estimate_wavelet);
      cfg.pipeline.wavelet.boundary = *parse_boundary(estimate_boundary);
      cfg.jobs = estimate_jobs;
      out << format_estimation(run_estimation_table(cfg), *parse_report_format(estimate_format));
    } else if (*metrics) {
      const GrayImage a = load_pgm(metrics_original);
      const GrayImage b = load_pgm(metrics_restored);
      const double error = mse(a, b);
      out << "MSE=" << format_db(error) << "\nPSNR=" << format_db(psnr(error)) << '\n';
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace medwave::cli
