#pragma once

#include <span>
#include <string>
#include <vector>

#include "coverbot/runner.hpp"

namespace coverbot {

// CSV of per-episode metrics. Header:
//   episode,coverage,collisions,steps,total_reward,epsilon,terminal_reason
// Fractions (coverage, epsilon) print with 6 decimals; rows end with '\n'.
// Output bytes are deterministic for a given log.
void write_metrics_csv(const std::vector<EpisodeMetrics>& episodes, const std::string& path);
std::vector<EpisodeMetrics> read_metrics_csv(const std::string& path);

struct ChartSpec {
    std::string title;
    std::string y_label;
    std::string color = "green";
    // Fixed y-range when y_max > y_min; otherwise derived from the data.
    double y_min = 0.0;
    double y_max = 0.0;
};

// Standalone SVG line chart of running_average(series, window): labeled axes,
// one polyline. No dependencies, inspectable in tests.
void render_plot_svg(std::span<const double> series, int window, const std::string& path,
                     const ChartSpec& spec);

}  // namespace coverbot
