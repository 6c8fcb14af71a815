#include "medwave/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "medwave/error.hpp"
#include "medwave/metrics.hpp"
#include "medwave/noise.hpp"

namespace medwave {

namespace {

std::size_t case_rank(CaseId id) {
  return static_cast<std::size_t>(std::ranges::find(kAllCases, id) - std::begin(kAllCases));
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string format_sigma(double sigma) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", sigma);
  return buf;
}

std::string format_threshold(const Threshold& th) {
  return th.kills_band() ? "kill" : format_real(th.level());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string render(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& cells, ReportFormat format) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& fields) {
    if (format == ReportFormat::kCsv) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
      }
    } else {
      out += '|';
      for (const auto& f : fields) out += ' ' + f + " |";
    }
    out += '\n';
  };
  emit(header);
  if (format == ReportFormat::kMarkdown) {
    out += '|';
    for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
    out += '\n';
  }
  for (const auto& row : cells) emit(row);
  return out;
}

// Runs fn(0..count-1) on up to `jobs` threads; rethrows the first failure.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

struct Group {
  const NamedImage* image;
  double sigma;
};

std::vector<Group> groups_of(const BenchConfig& cfg) {
  std::vector<Group> groups;
  for (const auto& img : cfg.images) {
    for (double s : cfg.sigmas) groups.push_back({&img, s});
  }
  return groups;
}

GrayImage noisy_version(const BenchConfig& cfg, const Group& g) {
  return add_gaussian_noise(g.image->image,
                            NoiseSpec{0.0, g.sigma, derive_stream_seed(cfg.master_seed,
                                                                       g.image->name, g.sigma)});
}

std::string file_tag(const Group& g) { return g.image->name + "_s" + format_sigma(g.sigma); }

}  // namespace

void BenchConfig::validate() const {
  if (images.empty()) throw DomainError("bench: at least one image is required");
  if (sigmas.empty()) throw DomainError("bench: at least one sigma is required");
  if (cases.empty()) throw DomainError("bench: at least one case is required");
  for (double s : sigmas) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("bench: sigmas must be positive");
  }
  pipeline.validate();
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::vector<NamedImage> load_images(const std::vector<std::filesystem::path>& paths) {
  std::vector<NamedImage> images;
  images.reserve(paths.size());
  for (const auto& p : paths) images.push_back({p.stem().string(), load_pgm(p)});
  return images;
}

std::vector<BenchRow> run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  const std::vector<Group> groups = groups_of(cfg);
  std::vector<std::vector<BenchRow>> results(groups.size());

  parallel_for(groups.size(), cfg.jobs, [&](std::size_t i) {
    const Group& g = groups[i];
    const GrayImage noisy = noisy_version(cfg, g);
    if (cfg.image_dir) save_pgm(noisy, *cfg.image_dir / (file_tag(g) + "_noisy.pgm"));

    for (CaseId id : cfg.cases) {
      PipelineConfig pc = cfg.pipeline;
      pc.case_id = id;
      DenoiseResult result = run_pipeline(noisy, g.image->image, pc);
      result.report.true_sigma = g.sigma;
      if (cfg.image_dir) {
        save_pgm(result.image,
                 *cfg.image_dir / (file_tag(g) + "_" + std::string(to_string(id)) + ".pgm"));
      }
      results[i].push_back({g.image->name, g.sigma, std::move(result.report)});
    }
  });

  std::vector<BenchRow> rows;
  for (auto& group : results) {
    for (auto& row : group) rows.push_back(std::move(row));
  }
  std::ranges::stable_sort(rows, [](const BenchRow& a, const BenchRow& b) {
    if (a.image != b.image) return a.image < b.image;
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return case_rank(a.report.case_id) < case_rank(b.report.case_id);
  });
  return rows;
}

std::vector<EstimationRow> run_estimation_table(const BenchConfig& cfg) {
  cfg.validate();
  const std::vector<Group> groups = groups_of(cfg);
  std::vector<EstimationRow> rows(groups.size());

  parallel_for(groups.size(), cfg.jobs, [&](std::size_t i) {
    const Group& g = groups[i];
    const GrayImage noisy = noisy_version(cfg, g);
    const SubbandSet bands = dwt2(noisy, cfg.pipeline.wavelet);
    rows[i] = {g.image->name, g.sigma, subband_std(g.image->image.values()),
               subband_std(noisy.values()), estimate_noise_sigma(bands.diagonal)};
  });

  std::ranges::stable_sort(rows, [](const EstimationRow& a, const EstimationRow& b) {
    if (a.image != b.image) return a.image < b.image;
    return a.sigma < b.sigma;
  });
  return rows;
}

std::string format_benchmark(const std::vector<BenchRow>& rows, ReportFormat format) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    const auto& r = row.report;
    std::vector<std::string> line{row.image, format_sigma(row.sigma), std::string(to_string(r.case_id))};
    if (r.thresholds) {
      line.push_back(format_real(r.thresholds->sigma_hat));
      for (DetailBand b : kDetailBands) line.push_back(format_threshold(r.thresholds->band(b).threshold));
    } else {
      line.insert(line.end(), 4, "");
    }
    line.push_back(r.mse ? format_real(*r.mse) : "");
    line.push_back(r.psnr ? format_db(*r.psnr) : "");
    cells.push_back(std::move(line));
  }
  return render({"image", "sigma", "case", "estimated_sigma", "th_H", "th_V", "th_D", "mse", "psnr"},
                cells, format);
}

std::string format_estimation(const std::vector<EstimationRow>& rows, ReportFormat format) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.push_back({r.image, format_sigma(r.sigma), format_real(r.std_original),
                     format_real(r.std_noisy), format_real(r.estimated_sigma)});
  }
  return render({"image", "sigma", "std_original", "std_noisy", "estimated_sigma"}, cells, format);
}

}  // namespace medwave
