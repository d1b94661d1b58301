#include "rsdm/random_stream.hpp"

#include <cmath>

namespace rsdm {

double RandomStream::uniform01()
{
    // top 53 bits -> multiple of 2^-53 in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::standard_normal()
{
    if (spare_) {
        const double z = *spare_;
        spare_.reset();
        return z;
    }
    // Marsaglia polar method
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    return u * scale;
}

} // namespace rsdm
