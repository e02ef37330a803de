#include "hermitewave/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace hermitewave {

std::size_t worker_count() {
    const std::size_t hardware = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HERMITEWAVE_THREADS")) {
        const std::string_view text(env);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
    }
    return hardware;
}

}  // namespace hermitewave
