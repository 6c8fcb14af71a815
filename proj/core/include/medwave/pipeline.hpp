#pragma once

#include <optional>
#include <string_view>

#include "medwave/image.hpp"
#include "medwave/shrinkage.hpp"
#include "medwave/wavelet.hpp"

namespace medwave {

/// The four de-noising variants.
enum class CaseId {
  kDwtOnly,                // threshold the detail bands, nothing else
  kMedianOnly,             // spatial median filter, no transform
  kMedianBeforeThreshold,  // median-filter the bands, then estimate and threshold
  kMedianAfterThreshold,   // estimate and threshold, then median-filter the bands
};

inline constexpr CaseId kAllCases[] = {CaseId::kMedianOnly, CaseId::kDwtOnly,
                                       CaseId::kMedianBeforeThreshold,
                                       CaseId::kMedianAfterThreshold};

/// Short CLI names: "dwt", "mf", "mf-before", "mf-after".
std::string_view to_string(CaseId id);
std::optional<CaseId> parse_case(std::string_view name);

struct PipelineConfig {
  CaseId case_id = CaseId::kMedianBeforeThreshold;
  WaveletSpec wavelet;
  int window = 3;
  bool filter_approx_band = false;  // also median-filter A in the two hybrid cases
  bool clip_output = true;          // clamp to [0, 255] (no rounding) before measuring
  ThresholdRule rule = ThresholdRule::kMagnitude;

  void validate() const;
};

struct DenoiseReport {
  CaseId case_id = CaseId::kDwtOnly;
  std::optional<double> true_sigma;
  std::optional<ThresholdReport> thresholds;  // absent for kMedianOnly
  std::optional<double> mse;                  // absent without a reference image
  std::optional<double> psnr;
};

struct DenoiseResult {
  GrayImage image;
  DenoiseReport report;
};

DenoiseResult run_pipeline(const GrayImage& noisy, const PipelineConfig& cfg);
DenoiseResult run_pipeline(const GrayImage& noisy, const GrayImage& original,
                           const PipelineConfig& cfg);

}  // namespace medwave
