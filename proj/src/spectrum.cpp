#include <bit>
#include <limits>

#include <omp.h>

#include "orlov/extension_closure.hpp"

namespace orlov {

namespace {

void check_limits(const Algebra& A, const SpectrumOptions& opt) {
    if (!A.is_linear()) throw InputError("Orlov spectrum enumeration needs a linear quiver");
    const int N = A.num_indecomposables();
    if (N > 64) throw RefusalError("more than 64 indecomposables");
    if (N > kSpectrumLimit && !opt.force)
        throw RefusalError(std::to_string(N) + " indecomposables; 2^N subsets needs --force");
}

// Bit masks for the generator filter.
struct Filter {
    std::vector<std::uint64_t> with_socle, with_top;  // per vertex
    std::uint64_t required = 0;

    explicit Filter(const Algebra& A) : with_socle(A.n(), 0), with_top(A.n(), 0) {
        const auto& ind = A.indecomposables();
        for (int i = 0; i < static_cast<int>(ind.size()); ++i) {
            with_socle[A.socle_vertex(ind[i]) - 1] |= std::uint64_t{1} << i;
            with_top[ind[i].top - 1] |= std::uint64_t{1} << i;
        }
        for (int v = 1; v <= A.n(); ++v) {
            Uniserial s = A.simple(v);
            if (A.is_projective(s) || A.is_injective(s)) required |= std::uint64_t{1} << A.index_of(s);
        }
    }
    bool pass(std::uint64_t T) const {
        if ((T & required) != required) return false;
        for (std::size_t v = 0; v < with_socle.size(); ++v)
            if (!(T & with_socle[v]) || !(T & with_top[v])) return false;
        return true;
    }
};

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

SpectrumResult collect(const std::vector<std::uint64_t>& best, std::uint64_t candidates,
                       std::uint64_t pruned, std::uint64_t strong) {
    SpectrumResult r;
    r.candidates = candidates;
    r.pruned = pruned;
    r.strong = strong;
    for (std::size_t t = 0; t < best.size(); ++t)
        if (best[t] != kNone) {
            r.spectrum.insert(static_cast<int>(t));
            r.witnesses[static_cast<int>(t)] = IndecSet::from_mask(best[t]);
        }
    return r;
}

}  // namespace

SpectrumResult orlov_spectrum(const Algebra& A, const SpectrumOptions& opt) {
    check_limits(A, opt);
    const ExtensionTable tab(A);
    const Filter filter(A);
    const int N = tab.size();
    const std::uint64_t total = (N == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1;
    const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();

    // Generation times never exceed N, so index the best witness by time.
    std::vector<std::uint64_t> best(N + 1, kNone);
    std::uint64_t pruned = 0, strong = 0;

#pragma omp parallel num_threads(threads) reduction(+ : pruned, strong)
    {
        std::vector<std::uint64_t> mine(N + 1, kNone);
#pragma omp for schedule(dynamic, 4096)
        for (std::uint64_t T = 1; T <= total; ++T) {
            if (opt.prune && !filter.pass(T)) {
                ++pruned;
                continue;
            }
            Time t = tab.generation_time64(T);
            if (!t) continue;
            ++strong;
            if (T < mine[*t]) mine[*t] = T;
        }
#pragma omp critical
        for (int t = 0; t <= N; ++t) best[t] = std::min(best[t], mine[t]);
    }
    return collect(best, total, pruned, strong);
}

SpectrumResult orlov_spectrum_serial(const Algebra& A, const SpectrumOptions& opt) {
    check_limits(A, opt);
    const ExtensionTable tab(A);
    const int N = tab.size();
    const std::uint64_t total = (N == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1;
    std::vector<std::uint64_t> best(N + 1, kNone);
    std::uint64_t pruned = 0, strong = 0;
    for (std::uint64_t T = 1; T <= total; ++T) {
        IndecSet S = IndecSet::from_mask(T);
        if (opt.prune && !passes_generator_filter(A, S)) {
            ++pruned;
            continue;
        }
        Time t = tab.generation_time(S);
        if (!t) continue;
        ++strong;
        if (T < best[*t]) best[*t] = T;
    }
    return collect(best, total, pruned, strong);
}

}  // namespace orlov
