#include "orlov/extension_closure.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "orlov/homext.hpp"

namespace orlov {

ExtensionTable::ExtensionTable(const Algebra& A) : A_(A), N_(A.num_indecomposables()) {
    if (!A.is_linear()) throw InputError("extension closure needs a linear quiver");
    all_ = IndecSet::all(A);
    const auto& ind = A.indecomposables();
    glue_.assign(static_cast<std::size_t>(N_) * N_, IndecSet{});
    partners_.assign(N_, IndecSet{});
    for (int v = 0; v < N_; ++v)
        for (int u = 0; u < N_; ++u) {
            glue_[v * N_ + u] = IndecSet::of(A, extension_summands(A, ind[v], ind[u]));
            if (!glue_[v * N_ + u].empty()) partners_[v].set(u);
        }
    stairs_.resize(N_);
    for (int v = 0; v < N_; ++v)
        for (int p : partners_[v].indices())
            for (int q : partners_[v].indices())
                if (auto x = staircase_summand(A, ind[v], ind[p], ind[q]))
                    stairs_[v].push_back({p, q, A.index_of(*x)});
    by_top_.assign(A.n() + 1, IndecSet{});
    for (int v = 0; v < N_; ++v) by_top_[ind[v].top].set(v);

    if (N_ <= 64) {
        all64_ = all_.low_word();
        glue64_.resize(glue_.size());
        partners64_.resize(N_);
        stairs64_.resize(N_);
        for (int v = 0; v < N_; ++v) {
            partners64_[v] = partners_[v].low_word();
            for (int u = 0; u < N_; ++u) glue64_[v * N_ + u] = glue(v, u).low_word();
            for (auto& t : stairs_[v])
                stairs64_[v].push_back({(std::uint64_t{1} << t.a) | (std::uint64_t{1} << t.b),
                                        std::uint64_t{1} << t.x});
        }
        for (auto& g : by_top_) by_top64_.push_back(g.low_word());
    }
}

// Quotient summands are added in order of increasing top. Pieces of the
// middle term built so far can be reused by any later quotient, and pieces
// made by one quotient are available to the others with the same top.
IndecSet ExtensionTable::star(const Factors& f) const {
    IndecSet avail = f.sub;
    for (int a = 1; a <= A_.n(); ++a) {
        const auto group = (f.quot & by_top_[a]).indices();
        if (group.empty()) continue;
        IndecSet before;
        do {
            before = avail;
            for (int v : group) {
                for (int u : (avail & partners_[v]).indices()) avail |= glue(v, u);
                for (auto& t : stairs_[v])
                    if (avail.test(t.a) && avail.test(t.b)) avail.set(t.x);
            }
        } while (!(avail == before));
    }
    return avail | f.quot;
}

IndecSet ExtensionTable::bracket(const IndecSet& T, int n) const {
    if (n <= 0) return {};
    IndecSet cur = T;
    for (int k = 2; k <= n; ++k) cur = star({.sub = T, .quot = cur});
    return cur;
}

Time ExtensionTable::generation_time(const IndecSet& T) const {
    IndecSet cur = T;  // [T]_{k+1}
    for (int k = 0;; ++k) {
        if (cur == all_) return k;
        IndecSet next = star({.sub = T, .quot = cur});
        if (next == cur) return std::nullopt;
        cur = next;
    }
}

std::uint64_t ExtensionTable::star64(std::uint64_t sub, std::uint64_t quot) const {
    std::uint64_t avail = sub;
    for (int a = 1; a <= A_.n(); ++a) {
        const std::uint64_t group = quot & by_top64_[a];
        if (!group) continue;
        std::uint64_t before;
        do {
            before = avail;
            for (std::uint64_t q = group; q; q &= q - 1) {
                const int v = std::countr_zero(q);
                for (std::uint64_t p = avail & partners64_[v]; p; p &= p - 1)
                    avail |= glue64_[v * N_ + std::countr_zero(p)];
                for (auto& t : stairs64_[v])
                    if ((avail & t.need) == t.need) avail |= t.x;
            }
        } while (avail != before);
    }
    return avail | quot;
}

Time ExtensionTable::generation_time64(std::uint64_t T) const {
    std::uint64_t cur = T;
    for (int k = 0;; ++k) {
        if (cur == all64_) return k;
        const std::uint64_t next = star64(T, cur);
        if (next == cur) return std::nullopt;
        cur = next;
    }
}

IndecSet star(const Algebra& A, const Factors& f) { return ExtensionTable(A).star(f); }

IndecSet bracket_n(const Algebra& A, const IndecSet& T, int n) { return ExtensionTable(A).bracket(T, n); }

Time generation_time(const Algebra& A, const IndecSet& T) { return ExtensionTable(A).generation_time(T); }

bool passes_generator_filter(const Algebra& A, const IndecSet& T) {
    const int n = A.n();
    std::vector<bool> soc(n + 1, false), tp(n + 1, false);
    for (auto& u : T.members(A)) {
        soc[A.socle_vertex(u)] = true;
        tp[u.top] = true;
    }
    for (int i = 1; i <= n; ++i) {
        if (!soc[i] || !tp[i]) return false;
        Uniserial s = A.simple(i);
        if ((A.is_projective(s) || A.is_injective(s)) && !T.contains(A, s)) return false;
    }
    return true;
}

bool is_strong_generator(const Algebra& A, const IndecSet& T) {
    if (!passes_generator_filter(A, T)) return false;
    return generation_time(A, T).has_value();
}

std::optional<int> SpectrumResult::ext_dim() const {
    if (spectrum.empty()) return std::nullopt;
    return *spectrum.begin();
}

std::optional<int> SpectrumResult::u_dim() const {
    if (spectrum.empty()) return std::nullopt;
    return *spectrum.rbegin();
}

namespace {

std::string show(const Algebra& A, std::uint64_t mask) {
    return format_module(IndecSet::from_mask(mask).as_module(A));
}

}  // namespace

Report verify_subset_lemmas(const Algebra& A, const SubsetLemmaOptions& opt) {
    ExtensionTable tab(A);
    const int N = tab.size();
    if (N > 64) throw RefusalError("subset lemma sweep needs at most 64 indecomposables");
    Report rep{"subset lemmas", 0, {}};
    const int L = opt.max_total_level;
    const bool exhaustive = opt.exhaustive && N <= 12;

    std::vector<std::uint64_t> pool;
    if (exhaustive) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << N); ++m) pool.push_back(m);
    } else {
        std::mt19937_64 rng(opt.seed);
        const std::uint64_t all = tab.all64();
        for (int s = 0; s < opt.samples; ++s) pool.push_back(rng() & all);
    }
    const std::size_t P = pool.size();

    auto levels = [&](std::uint64_t T) {
        std::vector<std::uint64_t> lv(L + 1, 0);
        if (L >= 1) lv[1] = T;
        for (int k = 2; k <= L; ++k) lv[k] = tab.star64(T, lv[k - 1]);
        return lv;
    };
    std::vector<std::vector<std::uint64_t>> lv(P);
    std::vector<Time> times(P);
    for (std::size_t i = 0; i < P; ++i) {
        lv[i] = levels(pool[i]);
        times[i] = tab.generation_time64(pool[i]);
    }

    // Realized times must be in the spectrum.
    std::set<int> spec;
    if (N <= kSpectrumLimit) spec = orlov_spectrum(A).spectrum;
    for (std::size_t i = 0; i < P; ++i) {
        ++rep.checked;
        if (!times[i]) continue;
        const int t = *times[i];
        IndecSet T = IndecSet::from_mask(pool[i]);
        bool ok = tab.bracket(T, t + 1) == tab.all() && tab.bracket(T, t) != tab.all();
        if (N <= kSpectrumLimit) ok = ok && spec.count(t);
        if (!ok) rep.fail("time " + std::to_string(t) + " of " + show(A, pool[i]) + " not in spectrum");
    }

    // Pairwise checks.
    const std::size_t pairs = exhaustive ? P * P : P;
    std::vector<Report> local;
#pragma omp parallel
    {
        Report mine;
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(pairs); ++idx) {
            std::size_t i, j;
            if (exhaustive) {
                i = static_cast<std::size_t>(idx) / P;
                j = static_cast<std::size_t>(idx) % P;
            } else {
                i = static_cast<std::size_t>(idx);
                j = (i * 7919 + 13) % P;
            }
            const std::uint64_t T1 = pool[i], T2 = pool[j], U = T1 | T2;
            auto lu = levels(U);
            for (int m = 1; m <= L; ++m)
                for (int n = 1; m + n <= L; ++n) {
                    ++mine.checked;
                    std::uint64_t prod = tab.star64(lv[i][m], lv[j][n]);
                    if (prod & ~lu[m + n])
                        mine.fail("[" + show(A, T1) + "]_" + std::to_string(m) + " * [" + show(A, T2) + "]_" +
                                  std::to_string(n) + " escapes level " + std::to_string(m + n));
                }
            ++mine.checked;
            if (times[i]) {
                Time tu = tab.generation_time64(U);
                if (!tu || *tu > *times[i])
                    mine.fail("adding " + show(A, T2) + " to " + show(A, T1) + " raised the generation time");
            }
        }
#pragma omp critical
        local.push_back(std::move(mine));
    }
    std::sort(local.begin(), local.end(), [](const Report& a, const Report& b) {
        return a.violations < b.violations;
    });
    for (auto& r : local) rep.merge(r);
    return rep;
}

}  // namespace orlov
