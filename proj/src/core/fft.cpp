#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <unordered_map>

namespace kdv5 {
namespace fft {
namespace {

constexpr double sqrt_two_pi = 2.5066282746310005024157652848110;

// FFTW planning is not thread-safe; execution with the new-array interface is.
// Plans are created FFTW_UNALIGNED so they run on arbitrary caller buffers.
class PlanCache {
public:
    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<fftw_complex> buf(n);
        fftw_plan p = fftw_plan_dft_1d(n, buf.data(), buf.data(), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

private:
    struct Hash {
        size_t operator()(const std::pair<int, int>& k) const {
            return std::hash<long long>()((static_cast<long long>(k.first) << 2) ^
                                          (k.second & 3));
        }
    };
    std::mutex mutex_;
    std::unordered_map<std::pair<int, int>, fftw_plan, Hash> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(complex* data, int n, int sign) {
    fftw_plan p = cache().get(n, sign);
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, raw, raw);
}

} // namespace

void forward_raw(complex* data, int n) { execute(data, n, FFTW_FORWARD); }
void inverse_raw(complex* data, int n) { execute(data, n, FFTW_BACKWARD); }

} // namespace fft

SpectralField forward_transform(const RealField& f) {
    const SpatialGrid& g = f.grid();
    const int n = g.size();
    std::vector<complex> buf(n);
    for (int m = 0; m < n; ++m) buf[m] = f.samples[m];
    fft::forward_raw(buf.data(), n);
    // e^{-i xi_k x0} with x0 = -L/2 is exactly (-1)^k
    const double scale = g.spacing() / fft::sqrt_two_pi;
    for (int k = 0; k < n; ++k) {
        const double sign = (k & 1) ? -1.0 : 1.0;
        buf[k] *= sign * scale;
    }
    return SpectralField(g, std::move(buf));
}

std::vector<complex> inverse_transform_complex(const SpectralField& F) {
    const SpatialGrid& g = F.grid();
    const int n = g.size();
    std::vector<complex> buf(n);
    const double scale = fft::sqrt_two_pi / (g.spacing() * n);
    for (int k = 0; k < n; ++k) {
        const double sign = (k & 1) ? -1.0 : 1.0;
        buf[k] = F.coefficients[k] * (sign * scale);
    }
    fft::inverse_raw(buf.data(), n);
    return buf;
}

RealField inverse_transform(const SpectralField& F) {
    std::vector<complex> buf = inverse_transform_complex(F);
    std::vector<double> out(buf.size());
    for (size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
    return RealField(F.grid(), std::move(out));
}

double inverse_imag_residue(const SpectralField& F) {
    std::vector<complex> buf = inverse_transform_complex(F);
    double worst = 0.0;
    for (const complex& v : buf) worst = std::max(worst, std::abs(v.imag()));
    return worst;
}

} // namespace kdv5
