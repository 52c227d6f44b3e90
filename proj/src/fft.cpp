#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace biharm::detail {
namespace {

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n)
        : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))), size(n) {}
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;

    fftw_complex* data;
    std::size_t size;
};

struct PlanDeleter {
    void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using PlanHandle = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// The FFTW planner is not thread safe; executing a finished plan is.
std::mutex g_planner_mutex;
std::map<std::tuple<int, int, int>, PlanHandle> g_plans;

fftw_plan plan_for(int dim, int n, FftDirection dir) {
    std::lock_guard lock(g_planner_mutex);
    const auto key = std::make_tuple(dim, n, dir == FftDirection::Forward ? 0 : 1);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second.get();

    const std::size_t total = dim == 1 ? std::size_t(n) : std::size_t(n) * n;
    FftwBuffer in(total), out(total);
    const int sign = dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan p = dim == 1 ? fftw_plan_dft_1d(n, in.data, out.data, sign, FFTW_ESTIMATE)
                           : fftw_plan_dft_2d(n, n, in.data, out.data, sign, FFTW_ESTIMATE);
    g_plans.emplace(key, PlanHandle(p));
    return p;
}

} // namespace

void fft_in_place(std::vector<std::complex<double>>& data, int dim, int n, FftDirection dir) {
    fftw_plan p = plan_for(dim, n, dir);
    // Plans are made on fftw_malloc storage; copy through aligned scratch so
    // the SIMD codelets chosen at planning time stay valid.
    FftwBuffer in(data.size()), out(data.size());
    std::memcpy(in.data, data.data(), sizeof(fftw_complex) * data.size());
    fftw_execute_dft(p, in.data, out.data);
    std::memcpy(static_cast<void*>(data.data()), out.data, sizeof(fftw_complex) * data.size());
}

} // namespace biharm::detail
