#pragma once

#include <cstddef>

namespace clobber::detail {

struct MacroSource {
    const char* id;
    const char* anchors;
    const char* sequence;
};

extern const MacroSource kMacroSources[];
extern const std::size_t kMacroSourceCount;

}  // namespace clobber::detail
