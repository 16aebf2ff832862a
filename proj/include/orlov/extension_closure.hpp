#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "orlov/indec_set.hpp"
#include "orlov/nakayama.hpp"
#include "orlov/report.hpp"

namespace orlov {

// Generation time; nullopt means infinite.
using Time = std::optional<int>;

// The two factors of an extension product: 0 -> sub -> X -> quot -> 0.
struct Factors {
    IndecSet sub;
    IndecSet quot;
};

// Precomputed extension data for a linear algebra.
class ExtensionTable {
public:
    explicit ExtensionTable(const Algebra& A);

    const Algebra& algebra() const { return A_; }
    int size() const { return N_; }
    const IndecSet& all() const { return all_; }

    IndecSet star(const Factors& f) const;
    IndecSet bracket(const IndecSet& T, int n) const;
    Time generation_time(const IndecSet& T) const;

    // Same operations on 64-bit masks; require size() <= 64.
    std::uint64_t star64(std::uint64_t sub, std::uint64_t quot) const;
    Time generation_time64(std::uint64_t T) const;
    std::uint64_t all64() const { return all64_; }

    // Summands of the non-split middle term for indices (quot v, sub u).
    const IndecSet& glue(int v, int u) const { return glue_[v * N_ + u]; }

private:
    struct Triple {
        int a, b, x;  // two pieces of the sub and the summand they produce
    };
    struct Triple64 {
        std::uint64_t need;
        std::uint64_t x;
    };

    Algebra A_;
    int N_;
    IndecSet all_;
    std::uint64_t all64_ = 0;
    std::vector<IndecSet> glue_;
    std::vector<IndecSet> partners_;  // partners_[v] = {u : Ext(v,u) != 0}
    std::vector<std::vector<Triple>> stairs_;
    std::vector<IndecSet> by_top_;
    std::vector<std::uint64_t> glue64_, partners64_, by_top64_;
    std::vector<std::vector<Triple64>> stairs64_;
};

IndecSet star(const Algebra& A, const Factors& f);
IndecSet bracket_n(const Algebra& A, const IndecSet& T, int n);
Time generation_time(const Algebra& A, const IndecSet& T);
bool is_strong_generator(const Algebra& A, const IndecSet& T);

// Necessary conditions for a strong generator: soc T and top T contain every
// simple, and every simple that is projective or injective lies in T.
bool passes_generator_filter(const Algebra& A, const IndecSet& T);

struct SpectrumOptions {
    int jobs = 0;  // 0: OpenMP default
    bool force = false;
    bool prune = true;
};

struct SpectrumResult {
    std::set<int> spectrum;
    std::map<int, IndecSet> witnesses;  // smallest generator (as a bit mask) per time
    std::uint64_t candidates = 0;
    std::uint64_t pruned = 0;
    std::uint64_t strong = 0;

    std::optional<int> ext_dim() const;
    std::optional<int> u_dim() const;
};

inline constexpr int kSpectrumLimit = 24;

SpectrumResult orlov_spectrum(const Algebra& A, const SpectrumOptions& opt = {});
// Reference version: one thread, generic set operations.
SpectrumResult orlov_spectrum_serial(const Algebra& A, const SpectrumOptions& opt = {});

struct SubsetLemmaOptions {
    bool exhaustive = true;
    int samples = 20000;
    std::uint64_t seed = 20240601;
    int max_total_level = 4;
};

// Containment [T1]_m * [T2]_n in [T1 + T2]_{m+n}, monotonicity of generation
// time under adding summands, and membership of every realized time in the
// spectrum.
Report verify_subset_lemmas(const Algebra& A, const SubsetLemmaOptions& opt = {});

}  // namespace orlov
