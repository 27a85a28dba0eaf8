#pragma once

// Thin deterministic wrapper over FFTW3 complex transforms. Plans are created
// with FFTW_ESTIMATE (no timing-dependent choices) and FFTW_UNALIGNED, cached
// per (dims, direction), and executed through the new-array interface so one
// plan serves every buffer of that shape.

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include <fftw3.h>

namespace cliff {

class Fft {
  public:
    // In-place c2c transform over a row-major array of the given dims.
    // sign = FFTW_FORWARD (-1) leaves coefficients unnormalized;
    // sign = FFTW_BACKWARD (+1) divides by the total size.
    static void transform(std::complex<double>* data, const std::vector<int>& dims, int sign) {
        fftw_plan plan = plan_for(dims, sign);
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data),
                         reinterpret_cast<fftw_complex*>(data));
        if (sign == FFTW_BACKWARD) {
            std::size_t total = 1;
            for (int d : dims) total *= static_cast<std::size_t>(d);
            const double inv = 1.0 / static_cast<double>(total);
            for (std::size_t i = 0; i < total; ++i) data[i] *= inv;
        }
    }

  private:
    static fftw_plan plan_for(const std::vector<int>& dims, int sign) {
        static std::map<std::pair<std::vector<int>, int>, fftw_plan> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(dims, sign);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::size_t total = 1;
        for (int d : dims) total *= static_cast<std::size_t>(d);
        fftw_complex* buf = fftw_alloc_complex(total);
        fftw_plan p = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        cache.emplace(key, p);
        return p;
    }
};

}  // namespace cliff
