#include "medwave/pipeline.hpp"

#include <string>

#include "medwave/error.hpp"
#include "medwave/median.hpp"
#include "medwave/metrics.hpp"

namespace medwave {

namespace {

void median_filter_bands(SubbandSet& bands, const PipelineConfig& cfg) {
  for (DetailBand b : kDetailBands) {
    bands.detail(b) = median_filter(bands.detail(b), cfg.window);
  }
  if (cfg.filter_approx_band) bands.approx = median_filter(bands.approx, cfg.window);
}

DenoiseResult denoise(const GrayImage& noisy, const PipelineConfig& cfg) {
  cfg.validate();
  DenoiseReport report;
  report.case_id = cfg.case_id;

  Plane restored;
  if (cfg.case_id == CaseId::kMedianOnly) {
    restored = median_filter(noisy.plane(), cfg.window);
  } else {
    SubbandSet bands = dwt2(noisy, cfg.wavelet);
    if (cfg.case_id == CaseId::kMedianBeforeThreshold) median_filter_bands(bands, cfg);
    report.thresholds = shrink_details(bands, cfg.rule);
    if (cfg.case_id == CaseId::kMedianAfterThreshold) median_filter_bands(bands, cfg);
    restored = idwt2_plane(bands);
  }

  GrayImage image(std::move(restored));
  if (cfg.clip_output) image = clip(image);
  return {std::move(image), std::move(report)};
}

}  // namespace

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::kDwtOnly:
      return "dwt";
    case CaseId::kMedianOnly:
      return "mf";
    case CaseId::kMedianBeforeThreshold:
      return "mf-before";
    case CaseId::kMedianAfterThreshold:
      return "mf-after";
  }
  return "?";
}

std::optional<CaseId> parse_case(std::string_view name) {
  for (CaseId id : kAllCases) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

void PipelineConfig::validate() const {
  if (window < 3 || window % 2 == 0) {
    throw DomainError("pipeline: window must be odd and >= 3, got " + std::to_string(window));
  }
}

DenoiseResult run_pipeline(const GrayImage& noisy, const PipelineConfig& cfg) {
  return denoise(noisy, cfg);
}

DenoiseResult run_pipeline(const GrayImage& noisy, const GrayImage& original,
                           const PipelineConfig& cfg) {
  if (noisy.width() != original.width() || noisy.height() != original.height()) {
    throw DomainError("pipeline: noisy and original images differ in size");
  }
  DenoiseResult result = denoise(noisy, cfg);
  const double error = mse(original, result.image);
  result.report.mse = error;
  result.report.psnr = psnr(error);
  return result;
}

}  // namespace medwave
