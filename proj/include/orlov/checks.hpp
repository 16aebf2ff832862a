#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orlov {

struct CheckOptions {
    int jobs = 0;
    std::uint64_t seed = 20240601;
    bool include_a6 = false;  // exhaustive spectrum of A_6 (about two million subsets)
};

struct CheckOutcome {
    int id = 0;
    std::string title;
    bool pass = true;
    std::vector<std::string> details;  // "expected ... got ..." lines and notes

    void expect(bool ok, const std::string& what) {
        details.push_back((ok ? "ok: " : "FAIL: ") + what);
        pass = pass && ok;
    }
    void note(const std::string& what) { details.push_back("note: " + what); }
};

inline constexpr int kNumChecks = 14;

CheckOutcome run_check(int id, const CheckOptions& opt = {});
std::vector<CheckOutcome> run_all_checks(const CheckOptions& opt = {});

// Layer lengths on the oriented n-cycle with relation alpha_1 ... alpha_m.
struct CycleRow {
    char item;               // 'a' .. 'e'
    int i = 0;               // parameter of the item, 0 if none
    std::string simples;     // "{2,3}"
    int computed = 0;        // fast path
    int brute = 0;           // path enumeration
    std::optional<int> formula;  // closed form from the literature, if one is stated
};

struct CycleReport {
    int n = 0, m = 0;
    int loewy = 0;
    std::vector<CycleRow> rows;
    bool consistent = true;       // computed == brute on every row
    std::vector<std::string> mismatches;  // rows where the closed form disagrees
    bool covers_claim = false;    // {0..m+n-1} contained in the derived lower bound
};

CycleReport oriented_cycle_report(int n, int m);

}  // namespace orlov
