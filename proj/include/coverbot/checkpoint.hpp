#pragma once

#include <stdexcept>
#include <string>

#include "coverbot/net.hpp"

namespace coverbot {

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Checkpoint {
    DenseNet net;
    AdamState adam;
};

// Textual checkpoint, versioned and lossless:
//   coverbot-ckpt v1
//   dims 82 64 3
//   <5507 parameters, one per line, W1 row-major | b1 | W2 row-major | b2>
//   <5507 Adam first moments, same order>
//   <5507 Adam second moments, same order>
//   t <step>
// Floats are printed with 17 significant digits so load(save(x)) is bit-exact.
void save_checkpoint(const std::string& path, const DenseNet& net, const AdamState& adam);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace coverbot
