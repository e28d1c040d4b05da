#include "coverbot/checkpoint.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

namespace coverbot {

namespace {

constexpr const char* kMagic = "coverbot-ckpt v1";

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FileHandle = std::unique_ptr<std::FILE, FileCloser>;

void write_block(std::FILE* f, const NetParams& block) {
    for (double v : block.p) std::fprintf(f, "%.17g\n", v);
}

std::string next_line(std::FILE* f, const std::string& path) {
    std::string line;
    int ch;
    while ((ch = std::fgetc(f)) != EOF && ch != '\n') line.push_back(static_cast<char>(ch));
    if (ch == EOF && line.empty())
        throw CheckpointError(path + ": dimension mismatch (file ends early)");
    return line;
}

void read_block(std::FILE* f, const std::string& path, NetParams& block) {
    for (double& v : block.p) {
        const std::string line = next_line(f, path);
        char* end = nullptr;
        v = std::strtod(line.c_str(), &end);
        if (end == line.c_str() || *end != '\0')
            throw CheckpointError(path + ": malformed float '" + line + "'");
    }
}

}  // namespace

void save_checkpoint(const std::string& path, const DenseNet& net, const AdamState& adam) {
    FileHandle f(std::fopen(path.c_str(), "wb"));
    if (!f) throw CheckpointError(path + ": cannot open for writing");
    std::fprintf(f.get(), "%s\n", kMagic);
    std::fprintf(f.get(), "dims %d %d %d\n", kInputDim, kHiddenDim, kActionCount);
    write_block(f.get(), net);
    write_block(f.get(), adam.m);
    write_block(f.get(), adam.v);
    std::fprintf(f.get(), "t %ld\n", adam.t);
    if (std::ferror(f.get())) throw CheckpointError(path + ": write failure");
}

Checkpoint load_checkpoint(const std::string& path) {
    FileHandle f(std::fopen(path.c_str(), "rb"));
    if (!f) throw CheckpointError(path + ": cannot open for reading");

    if (next_line(f.get(), path) != kMagic)
        throw CheckpointError(path + ": version mismatch (expected '" + kMagic + "')");

    const std::string dims = next_line(f.get(), path);
    int in = 0, hid = 0, out = 0;
    if (std::sscanf(dims.c_str(), "dims %d %d %d", &in, &hid, &out) != 3 ||
        in != kInputDim || hid != kHiddenDim || out != kActionCount)
        throw CheckpointError(path + ": dimension mismatch ('" + dims + "')");

    Checkpoint ckpt;
    read_block(f.get(), path, ckpt.net);
    read_block(f.get(), path, ckpt.adam.m);
    read_block(f.get(), path, ckpt.adam.v);

    const std::string tline = next_line(f.get(), path);
    long t = 0;
    if (std::sscanf(tline.c_str(), "t %ld", &t) != 1)
        throw CheckpointError(path + ": malformed step line '" + tline + "'");
    ckpt.adam.t = t;
    return ckpt;
}

}  // namespace coverbot
