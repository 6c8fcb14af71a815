#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "medwave/pipeline.hpp"
#include "medwave/synthetic.hpp"

namespace medwave {

struct BenchConfig {
  std::vector<NamedImage> images;
  std::vector<double> sigmas{15.0, 20.0, 25.0};
  std::vector<CaseId> cases{std::begin(kAllCases), std::end(kAllCases)};
  std::uint64_t master_seed = 1;
  PipelineConfig pipeline;  // case_id is overridden per row
  std::optional<std::filesystem::path> image_dir;  // write noisy and de-noised PGMs here
  unsigned jobs = 1;

  void validate() const;
};

struct BenchRow {
  std::string image;
  double sigma = 0.0;
  DenoiseReport report;
};

struct EstimationRow {
  std::string image;
  double sigma = 0.0;
  double std_original = 0.0;
  double std_noisy = 0.0;
  double estimated_sigma = 0.0;
};

enum class ReportFormat { kCsv, kMarkdown };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Image name is the file stem. Throws IoError naming the offending file.
std::vector<NamedImage> load_images(const std::vector<std::filesystem::path>& paths);

/// Noise is injected once per (image, sigma) and every case runs on that same
/// realization. Rows come back sorted by (image name, sigma, case) whatever
/// `jobs` is.
std::vector<BenchRow> run_benchmark(const BenchConfig& cfg);

std::vector<EstimationRow> run_estimation_table(const BenchConfig& cfg);

/// Columns: image,sigma,case,estimated_sigma,th_H,th_V,th_D,mse,psnr
std::string format_benchmark(const std::vector<BenchRow>& rows, ReportFormat format);

/// Columns: image,sigma,std_original,std_noisy,estimated_sigma
std::string format_estimation(const std::vector<EstimationRow>& rows, ReportFormat format);

}  // namespace medwave
