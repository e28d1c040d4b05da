#include "coverbot/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace coverbot {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FileHandle = std::unique_ptr<std::FILE, FileCloser>;

FileHandle open_or_throw(const std::string& path, const char* mode) {
    FileHandle f(std::fopen(path.c_str(), mode));
    if (!f) throw std::runtime_error(path + ": cannot open");
    return f;
}

DoneReason reason_from_string(const std::string& s) {
    if (s == "budget_exhausted") return DoneReason::BudgetExhausted;
    if (s == "full_coverage") return DoneReason::FullCoverage;
    if (s == "none") return DoneReason::None;
    throw std::runtime_error("metrics csv: unknown terminal_reason '" + s + "'");
}

}  // namespace

void write_metrics_csv(const std::vector<EpisodeMetrics>& episodes, const std::string& path) {
    FileHandle f = open_or_throw(path, "wb");
    std::fputs("episode,coverage,collisions,steps,total_reward,epsilon,terminal_reason\n",
               f.get());
    for (const EpisodeMetrics& m : episodes) {
        std::fprintf(f.get(), "%d,%.6f,%d,%d,%d,%.6f,%s\n", m.episode_index, m.coverage,
                     m.collisions, m.steps, m.total_reward, m.epsilon_used,
                     to_string(m.terminal_reason));
    }
    if (std::ferror(f.get())) throw std::runtime_error(path + ": write failure");
}

std::vector<EpisodeMetrics> read_metrics_csv(const std::string& path) {
    FileHandle f = open_or_throw(path, "rb");
    std::string content;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f.get())) > 0) content.append(buf, n);

    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line) ||
        line != "episode,coverage,collisions,steps,total_reward,epsilon,terminal_reason")
        throw std::runtime_error(path + ": bad metrics header");

    std::vector<EpisodeMetrics> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        EpisodeMetrics m;
        char reason[64] = {0};
        if (std::sscanf(line.c_str(), "%d,%lf,%d,%d,%d,%lf,%63s", &m.episode_index,
                        &m.coverage, &m.collisions, &m.steps, &m.total_reward,
                        &m.epsilon_used, reason) != 7)
            throw std::runtime_error(path + ": bad metrics row '" + line + "'");
        m.terminal_reason = reason_from_string(reason);
        out.push_back(m);
    }
    return out;
}

void render_plot_svg(std::span<const double> series, int window, const std::string& path,
                     const ChartSpec& spec) {
    if (series.empty()) throw std::invalid_argument("render_plot_svg: empty series");
    const std::vector<double> avg = running_average(series, window);

    constexpr double kWidth = 800.0, kHeight = 480.0;
    constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    double y_min = spec.y_min, y_max = spec.y_max;
    if (!(y_max > y_min)) {
        y_min = 0.0;
        y_max = *std::max_element(avg.begin(), avg.end());
        if (y_max <= y_min) y_max = y_min + 1.0;
        y_max *= 1.05;
    }

    const auto x_of = [&](std::size_t i) {
        return avg.size() == 1 ? kLeft + plot_w / 2
                               : kLeft + plot_w * static_cast<double>(i) / (avg.size() - 1);
    };
    const auto y_of = [&](double v) {
        return kTop + plot_h * (1.0 - (v - y_min) / (y_max - y_min));
    };

    FileHandle f = open_or_throw(path, "wb");
    std::fprintf(f.get(),
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
                 "viewBox=\"0 0 %g %g\">\n",
                 kWidth, kHeight, kWidth, kHeight);
    std::fprintf(f.get(), "<rect width=\"%g\" height=\"%g\" fill=\"white\"/>\n", kWidth, kHeight);
    std::fprintf(f.get(),
                 "<text x=\"%g\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
                 "text-anchor=\"middle\">%s</text>\n",
                 kLeft + plot_w / 2, spec.title.c_str());

    // Axes.
    std::fprintf(f.get(),
                 "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n",
                 kLeft, kTop, kLeft, kTop + plot_h);
    std::fprintf(f.get(),
                 "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n",
                 kLeft, kTop + plot_h, kLeft + plot_w, kTop + plot_h);

    constexpr int kTicks = 5;
    for (int t = 0; t <= kTicks; ++t) {
        const double frac = static_cast<double>(t) / kTicks;
        const double yv = y_min + frac * (y_max - y_min);
        const double y = y_of(yv);
        std::fprintf(f.get(),
                     "<line x1=\"%g\" y1=\"%.2f\" x2=\"%g\" y2=\"%.2f\" stroke=\"#ccc\"/>\n",
                     kLeft, y, kLeft + plot_w, y);
        std::fprintf(f.get(),
                     "<text x=\"%g\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"11\" "
                     "text-anchor=\"end\">%.3g</text>\n",
                     kLeft - 6, y + 4, yv);

        const std::size_t xi = static_cast<std::size_t>(
            std::llround(frac * static_cast<double>(avg.size() - 1)));
        std::fprintf(f.get(),
                     "<text x=\"%.2f\" y=\"%g\" font-family=\"sans-serif\" font-size=\"11\" "
                     "text-anchor=\"middle\">%zu</text>\n",
                     x_of(xi), kTop + plot_h + 18, xi);
    }
    std::fprintf(f.get(),
                 "<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"13\" "
                 "text-anchor=\"middle\">episode</text>\n",
                 kLeft + plot_w / 2, kHeight - 12);
    std::fprintf(f.get(),
                 "<text x=\"16\" y=\"%g\" font-family=\"sans-serif\" font-size=\"13\" "
                 "text-anchor=\"middle\" transform=\"rotate(-90 16 %g)\">%s</text>\n",
                 kTop + plot_h / 2, kTop + plot_h / 2, spec.y_label.c_str());

    std::fprintf(f.get(), "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\" points=\"",
                 spec.color.c_str());
    for (std::size_t i = 0; i < avg.size(); ++i) {
        const double v = std::clamp(avg[i], y_min, y_max);
        std::fprintf(f.get(), "%s%.2f,%.2f", i == 0 ? "" : " ", x_of(i), y_of(v));
    }
    std::fputs("\"/>\n</svg>\n", f.get());
    if (std::ferror(f.get())) throw std::runtime_error(path + ": write failure");
}

}  // namespace coverbot
