#pragma once

#include <string>
#include <vector>

namespace dimsub::corpus {

struct Entry {
    std::string file;  // e.g. "p3_delta7.lie"
    std::string text;
};

// Presentation files compiled into the library.
const std::vector<Entry>& entries();

}  // namespace dimsub::corpus
