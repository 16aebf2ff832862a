#include "orlov/nakayama.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace orlov {

ModuleSum::ModuleSum(std::vector<Uniserial> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
}

ModuleSum::ModuleSum(std::initializer_list<Uniserial> parts) : parts_(parts) {
    std::sort(parts_.begin(), parts_.end());
}

int ModuleSum::dimension() const {
    int d = 0;
    for (auto& u : parts_) d += u.length;
    return d;
}

ModuleSum& ModuleSum::operator+=(const ModuleSum& other) {
    std::vector<Uniserial> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(merged));
    parts_ = std::move(merged);
    return *this;
}

void validate(const AlgebraDescriptor& d) {
    if (d.n < 1) throw InputError("vertex count must be positive");
    if (d.shape == Shape::Cyclic && !d.relation)
        throw InputError("cyclic quiver needs a relation (otherwise infinite dimensional)");
    if (!d.relation) return;
    const Relation& r = *d.relation;
    if (r.length < 2) throw InputError("relation length must be at least 2");
    if (r.start < 1 || r.start > d.n) throw InputError("relation start outside 1..n");
    if (d.shape == Shape::Linear && r.start + r.length > d.n)
        throw InputError("relation path leaves the linear quiver");
}

std::vector<int> kupisch_series(const AlgebraDescriptor& d) {
    validate(d);
    std::vector<int> c(d.n);
    for (int i = 1; i <= d.n; ++i) {
        if (d.shape == Shape::Linear) {
            int v = d.n - i + 1;
            if (d.relation && d.relation->start >= i)
                v = std::min(v, d.relation->start - i + d.relation->length);
            c[i - 1] = v;
        } else {
            int offset = ((d.relation->start - i) % d.n + d.n) % d.n;
            c[i - 1] = offset + d.relation->length;
        }
    }
    return c;
}

Algebra::Algebra(Shape s, std::vector<int> k, std::optional<AlgebraDescriptor> d)
    : shape_(s), kupisch_(std::move(k)), descriptor_(std::move(d)) {
    offset_.resize(kupisch_.size());
    for (int i = 1; i <= n(); ++i) {
        offset_[i - 1] = static_cast<int>(indecs_.size());
        for (int l = 1; l <= c(i); ++l) indecs_.push_back({i, l});
    }
}

Algebra Algebra::build(const AlgebraDescriptor& d) {
    return Algebra(d.shape, kupisch_series(d), d);
}

Algebra Algebra::from_kupisch(Shape shape, std::vector<int> k) {
    const int n = static_cast<int>(k.size());
    if (n == 0) throw InputError("empty Kupisch series");
    for (int i = 0; i < n; ++i) {
        if (k[i] < 1) throw InputError("Kupisch entries must be positive");
        if (shape == Shape::Linear) {
            if (i + 1 < n && k[i] > k[i + 1] + 1) throw InputError("Kupisch condition fails");
            if (k[i] > n - i) throw InputError("Kupisch entry exceeds the quiver");
        } else {
            if (k[i] < 2) throw InputError("cyclic Kupisch entries must be at least 2");
            if (k[i] > k[(i + 1) % n] + 1) throw InputError("Kupisch condition fails");
        }
    }
    return Algebra(shape, std::move(k), std::nullopt);
}

bool Algebra::is_hereditary() const {
    if (!is_linear()) return false;
    for (int i = 1; i <= n(); ++i)
        if (c(i) != n() - i + 1) return false;
    return true;
}

int Algebra::dimension() const { return std::accumulate(kupisch_.begin(), kupisch_.end(), 0); }

int Algebra::loewy_length() const { return *std::max_element(kupisch_.begin(), kupisch_.end()); }

int Algebra::step(int v, int steps) const {
    if (is_linear()) return v + steps;
    int m = ((v - 1 + steps) % n() + n()) % n();
    return m + 1;
}

void Algebra::check_vertex(int v) const {
    if (v < 1 || v > n()) throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n()));
}

bool Algebra::contains(Uniserial u) const {
    return u.top >= 1 && u.top <= n() && u.length >= 1 && u.length <= c(u.top);
}

void Algebra::check(Uniserial u) const {
    if (!contains(u)) throw InputError("module " + format(u) + " does not exist over this algebra");
}

void Algebra::check(const ModuleSum& m) const {
    for (auto& u : m.summands()) check(u);
}

int Algebra::index_of(Uniserial u) const {
    if (!contains(u)) return -1;
    return offset_[u.top - 1] + u.length - 1;
}

Uniserial Algebra::simple(int i) const {
    check_vertex(i);
    return {i, 1};
}

Uniserial Algebra::projective(int i) const {
    check_vertex(i);
    return {i, c(i)};
}

Uniserial Algebra::injective(int j) const {
    check_vertex(j);
    for (int l = loewy_length(); l >= 1; --l) {
        int i = step(j, -(l - 1));
        if (i < 1) continue;
        if (l <= c(i)) return {i, l};
    }
    return {j, 1};
}

ModuleSum Algebra::regular() const {
    std::vector<Uniserial> p;
    for (int i = 1; i <= n(); ++i) p.push_back(projective(i));
    return ModuleSum(std::move(p));
}

bool Algebra::is_injective(Uniserial u) const { return injective(socle_vertex(u)) == u; }

ModuleSum radical(const Algebra& A, const ModuleSum& M) {
    std::vector<Uniserial> out;
    for (auto& u : M.summands())
        if (u.length > 1) out.push_back({A.step(u.top, 1), u.length - 1});
    return ModuleSum(std::move(out));
}

ModuleSum socle(const Algebra& A, const ModuleSum& M) {
    std::vector<Uniserial> out;
    for (auto& u : M.summands()) out.push_back({A.socle_vertex(u), 1});
    return ModuleSum(std::move(out));
}

ModuleSum top(const Algebra&, const ModuleSum& M) {
    std::vector<Uniserial> out;
    for (auto& u : M.summands()) out.push_back({u.top, 1});
    return ModuleSum(std::move(out));
}

int loewy_length(const ModuleSum& M) {
    int l = 0;
    for (auto& u : M.summands()) l = std::max(l, u.length);
    return l;
}

SpiClass spi_classify(const Algebra& A) {
    if (A.loewy_length() == 1) return SpiClass::Semisimple;
    for (int i = 1; i <= A.n(); ++i) {
        Uniserial s = A.simple(i);
        if (!A.is_projective(s) && !A.is_injective(s)) return SpiClass::NotSPI;
    }
    return SpiClass::SPI;
}

const char* to_string(SpiClass c) {
    switch (c) {
        case SpiClass::Semisimple: return "semisimple";
        case SpiClass::SPI: return "spi";
        case SpiClass::NotSPI: return "not-spi";
    }
    return "?";
}

namespace {

int parse_int(std::string_view s, const std::string& whole) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw InputError("malformed module literal '" + whole + "'");
    return v;
}

}  // namespace

ModuleSum parse_module(const std::string& text) {
    if (text == "0") return {};
    std::vector<Uniserial> parts;
    std::string_view rest(text);
    while (true) {
        auto plus = rest.find('+');
        std::string_view term = rest.substr(0, plus);
        auto dash = term.find('-');
        if (dash == std::string_view::npos) throw InputError("malformed module literal '" + text + "'");
        Uniserial u{parse_int(term.substr(0, dash), text), parse_int(term.substr(dash + 1), text)};
        if (u.top < 1 || u.length < 1) throw InputError("malformed module literal '" + text + "'");
        parts.push_back(u);
        if (plus == std::string_view::npos) break;
        rest = rest.substr(plus + 1);
    }
    return ModuleSum(std::move(parts));
}

std::string format(Uniserial u) { return std::to_string(u.top) + "-" + std::to_string(u.length); }

std::string format_module(const ModuleSum& M) {
    if (M.is_zero()) return "0";
    std::string s;
    for (auto& u : M.summands()) {
        if (!s.empty()) s += "+";
        s += format(u);
    }
    return s;
}

std::string format_interval(Uniserial u) {
    return "M[" + std::to_string(u.top) + "," + std::to_string(last(u)) + "]";
}

std::vector<AlgebraDescriptor> linear_descriptors(int n) {
    std::vector<AlgebraDescriptor> out{{Shape::Linear, n, std::nullopt}};
    for (int s = 1; s <= n; ++s)
        for (int len = 2; s + len <= n; ++len) out.push_back({Shape::Linear, n, Relation{s, len}});
    return out;
}

std::vector<AlgebraDescriptor> cyclic_descriptors(int n, int max_len) {
    std::vector<AlgebraDescriptor> out;
    for (int s = 1; s <= n; ++s)
        for (int len = 2; len <= max_len; ++len) out.push_back({Shape::Cyclic, n, Relation{s, len}});
    return out;
}

}  // namespace orlov
