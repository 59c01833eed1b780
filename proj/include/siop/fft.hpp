#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace siop::fft {

/// Cached FFTW plans for in-place 2-D complex transforms of size n x n.
/// Plan creation is serialized (FFTW planning is not thread safe);
/// execution uses fftw_execute_dft on caller-owned buffers, which is.
class Plans {
public:
    static Plans& instance() {
        static Plans p;
        return p;
    }

    void forward(int n, std::complex<double>* data) { run(n, data, FFTW_FORWARD); }

    /// Inverse transform, normalized by 1/n^2.
    void inverse(int n, std::complex<double>* data) {
        run(n, data, FFTW_BACKWARD);
        const double s = 1.0 / (static_cast<double>(n) * n);
        const std::size_t total = static_cast<std::size_t>(n) * n;
        for (std::size_t i = 0; i < total; ++i) data[i] *= s;
    }

private:
    Plans() = default;
    ~Plans() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }
    Plans(const Plans&) = delete;
    Plans& operator=(const Plans&) = delete;

    void run(int n, std::complex<double>* data, int sign) {
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = plans_.find({n, sign});
            if (it == plans_.end()) {
                // Plan on a scratch buffer so the caller's data survives
                // FFTW_ESTIMATE planning untouched.
                std::vector<std::complex<double>> scratch(
                    static_cast<std::size_t>(n) * n);
                auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
                plan = fftw_plan_dft_2d(n, n, ptr, ptr, sign, FFTW_ESTIMATE);
                if (!plan) throw std::runtime_error("fftw plan creation failed");
                plans_[{n, sign}] = plan;
            } else {
                plan = it->second;
            }
        }
        auto* ptr = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(plan, ptr, ptr);
    }

    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

inline void forward2d(int n, std::complex<double>* data) {
    Plans::instance().forward(n, data);
}

inline void inverse2d(int n, std::complex<double>* data) {
    Plans::instance().inverse(n, data);
}

/// Signed integer mode number for FFT bin i of an n-point transform.
inline int mode(int i, int n) { return i < n / 2 ? i : i - n; }

/// Physical wavenumber of bin i on a period-2l axis: xi = pi * mode / l.
inline double wavenumber(int i, int n, double l) {
    return M_PI * mode(i, n) / l;
}

} // namespace siop::fft
