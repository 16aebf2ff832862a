#include "orlov/f2_oracle.hpp"

#include <bit>
#include <stdexcept>

namespace orlov::f2 {

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

int BitVec::lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    return -1;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

bool BitMatrix::is_zero() const {
    for (auto& r : r_)
        if (r.any()) return false;
    return true;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw std::logic_error("matrix shape mismatch");
    BitMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k)
            if (a.get(i, k)) out.r_[i] ^= b.r_[k];
    return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::logic_error("matrix shape mismatch");
    BitMatrix out = a;
    for (int i = 0; i < a.rows_; ++i) out.r_[i] ^= b.r_[i];
    return out;
}

namespace {

// Echelon basis keyed by lowest set bit.
class Echelon {
public:
    explicit Echelon(int cols) : pivot_(cols, -1) { rows_.reserve(cols); }
    // Returns true if v was independent of what is stored.
    bool insert(BitVec v) {
        for (int p = v.lowest(); p >= 0; p = v.lowest()) {
            if (pivot_[p] < 0) {
                pivot_[p] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            v ^= rows_[pivot_[p]];
        }
        return false;
    }
    int size() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<int> pivot_;
    std::vector<BitVec> rows_;
};

}  // namespace

int rank(std::vector<BitVec> rows) {
    if (rows.empty()) return 0;
    Echelon e(rows.front().size());
    for (auto& r : rows) e.insert(std::move(r));
    return e.size();
}

std::vector<BitVec> nullspace(std::vector<BitVec> rows, int cols) {
    // Gauss-Jordan to reduced row echelon form.
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i].get(c)) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<BitVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(cols);
        v.set(f);
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            if (rows[i].get(f)) v.set(pivot_col[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

int MatRep::dimension() const {
    int d = 0;
    for (int x : dims) d += x;
    return d;
}

bool RepMap::is_zero() const {
    for (auto& m : at)
        if (!m.is_zero()) return false;
    return true;
}

Oracle::Oracle(const Algebra& A) : A_(A) {
    if (auto& d = A.descriptor()) {
        if (d->relation) relations_.push_back({d->relation->start, d->relation->length});
    } else {
        for (int i = 1; i <= A.n(); ++i) {
            int len = A.c(i);
            if (A.is_linear() && i + len > A.n()) continue;
            relations_.push_back({i, len});
        }
    }
    for (auto& u : A.indecomposables()) indec_reps_.push_back(to_matrep(ModuleSum(u)));
    if (A.is_linear()) {
        const int N = A.num_indecomposables();
        gram_.assign(N, std::vector<int>(N, 0));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                gram_[i][j] = hom_space_dim(indec_reps_[i], indec_reps_[j]);
                if ((i == j && gram_[i][j] != 1) || (j > i && gram_[i][j] != 0))
                    throw std::logic_error("hom matrix is not unitriangular");
            }
    }
}

int Oracle::arrow_count() const { return A_.is_linear() ? A_.n() - 1 : A_.n(); }

MatRep Oracle::to_matrep(const ModuleSum& M) const {
    A_.check(M);
    const int n = A_.n();
    MatRep X;
    X.dims.assign(n, 0);
    // First pass: dimensions; remember where each basis vector lives.
    std::vector<std::vector<int>> pos;
    for (auto& u : M.summands()) {
        std::vector<int> p(u.length);
        for (int j = 0; j < u.length; ++j) p[j] = X.dims[A_.factor(u, j) - 1]++;
        pos.push_back(std::move(p));
    }
    for (int a = 0; a < arrow_count(); ++a)
        X.arrows.emplace_back(X.dims[arrow_target(a) - 1], X.dims[arrow_source(a) - 1]);
    for (std::size_t s = 0; s < M.size(); ++s) {
        const Uniserial u = M.summands()[s];
        for (int j = 0; j + 1 < u.length; ++j) {
            int a = A_.factor(u, j) - 1;
            X.arrows[a].set(pos[s][j + 1], pos[s][j]);
        }
    }
    return X;
}

BitMatrix Oracle::path_matrix(const MatRep& X, int start, int from, int to) const {
    BitMatrix m = BitMatrix::identity(X.dims[A_.step(start, from) - 1]);
    for (int k = from; k < to; ++k) m = X.arrows[A_.step(start, k) - 1] * m;
    return m;
}

bool Oracle::relation_holds(const MatRep& X) const {
    for (auto& p : relations_)
        if (!path_matrix(X, p.start, 0, p.length).is_zero()) return false;
    return true;
}

bool Oracle::is_morphism(const MatRep& X, const MatRep& Y, const RepMap& f) const {
    for (int a = 0; a < arrow_count(); ++a) {
        int s = arrow_source(a) - 1, t = arrow_target(a) - 1;
        if (!(Y.arrows[a] * f.at[s] == f.at[t] * X.arrows[a])) return false;
    }
    return true;
}

int Oracle::hom_space_dim(const MatRep& X, const MatRep& Y) const {
    const int n = A_.n();
    std::vector<int> off(n + 1, 0);
    for (int v = 0; v < n; ++v) off[v + 1] = off[v] + Y.dims[v] * X.dims[v];
    const int unknowns = off[n];
    if (unknowns == 0) return 0;
    // f_v is dims_Y[v] x dims_X[v]; variable (v, r, c) at off[v] + r * dims_X[v] + c.
    auto var = [&](int v, int r, int c) { return off[v] + r * X.dims[v] + c; };
    Echelon eqs(unknowns);
    for (int a = 0; a < arrow_count(); ++a) {
        int s = arrow_source(a) - 1, t = arrow_target(a) - 1;
        const BitMatrix& Xa = X.arrows[a];
        const BitMatrix& Ya = Y.arrows[a];
        // (Ya f_s + f_t Xa)[r][c] = 0
        for (int r = 0; r < Y.dims[t]; ++r)
            for (int c = 0; c < X.dims[s]; ++c) {
                BitVec e(unknowns);
                for (int k = 0; k < Y.dims[s]; ++k)
                    if (Ya.get(r, k)) e.flip(var(s, k, c));
                for (int k = 0; k < X.dims[t]; ++k)
                    if (Xa.get(k, c)) e.flip(var(t, r, k));
                eqs.insert(std::move(e));
            }
    }
    return unknowns - eqs.size();
}

int Oracle::hom_space_dim(Uniserial X, Uniserial Y) const {
    return hom_space_dim(to_matrep(ModuleSum(X)), to_matrep(ModuleSum(Y)));
}

std::vector<RepMap> Oracle::window_maps(Uniserial X, Uniserial Y) const {
    A_.check(X);
    A_.check(Y);
    const int n = A_.n();
    MatRep RX = to_matrep(ModuleSum(X)), RY = to_matrep(ModuleSum(Y));
    std::vector<RepMap> out;
    for (int k = 1; k <= std::min(X.length, Y.length); ++k) {
        if (A_.factor(Y, Y.length - k) != X.top) continue;
        RepMap f;
        for (int v = 0; v < n; ++v) f.at.emplace_back(RY.dims[v], RX.dims[v]);
        for (int j = 0; j < k; ++j) {
            int v = A_.factor(X, j) - 1;
            int jy = Y.length - k + j;
            f.at[v].set(jy / n, j / n);
        }
        out.push_back(std::move(f));
    }
    return out;
}

RepMap Oracle::compose(const RepMap& g, const RepMap& f) {
    RepMap h;
    for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
    return h;
}

struct Oracle::ExtData {
    std::vector<int> off;  // C_a variables start at off[a]
    int unknowns = 0;
    std::vector<BitVec> classes;  // cocycles spanning a complement of the coboundaries
};

Oracle::ExtData Oracle::ext_data(const MatRep& U, const MatRep& V) const {
    const int arrows = arrow_count();
    ExtData d;
    d.off.assign(arrows + 1, 0);
    // C_a : V_source -> U_target, shape dimU[t] x dimV[s]
    for (int a = 0; a < arrows; ++a)
        d.off[a + 1] = d.off[a] + U.dims[arrow_target(a) - 1] * V.dims[arrow_source(a) - 1];
    d.unknowns = d.off[arrows];
    if (d.unknowns == 0) return d;
    auto var = [&](int a, int r, int c) { return d.off[a] + r * V.dims[arrow_source(a) - 1] + c; };

    // Cocycle condition: the off-diagonal block of every relation path vanishes.
    std::vector<BitVec> eqs;
    for (auto& p : relations_) {
        const int s0 = p.start, end = A_.step(p.start, p.length);
        const int rows = U.dims[end - 1], cols = V.dims[s0 - 1];
        std::vector<BitVec> block(rows * cols, BitVec(d.unknowns));
        for (int j = 0; j < p.length; ++j) {
            int a = A_.step(s0, j) - 1;
            BitMatrix L = path_matrix(U, s0, j + 1, p.length);
            BitMatrix R = path_matrix(V, s0, 0, j);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c)
                    for (int x = 0; x < L.cols(); ++x) {
                        if (!L.get(r, x)) continue;
                        for (int y = 0; y < R.rows(); ++y)
                            if (R.get(y, c)) block[r * cols + c].flip(var(a, x, y));
                    }
        }
        for (auto& e : block)
            if (e.any()) eqs.push_back(std::move(e));
    }
    std::vector<BitVec> cocycles;
    if (eqs.empty()) {
        for (int i = 0; i < d.unknowns; ++i) {
            BitVec e(d.unknowns);
            e.set(i);
            cocycles.push_back(std::move(e));
        }
    } else {
        cocycles = nullspace(std::move(eqs), d.unknowns);
    }

    // Coboundaries: (dh)_a = U_a h_s + h_t V_a for h_v : V_v -> U_v.
    Echelon span(d.unknowns);
    for (int v = 0; v < A_.n(); ++v)
        for (int r = 0; r < U.dims[v]; ++r)
            for (int c = 0; c < V.dims[v]; ++c) {
                BitVec img(d.unknowns);
                for (int a = 0; a < arrows; ++a) {
                    int s = arrow_source(a) - 1, t = arrow_target(a) - 1;
                    if (s == v)  // U_a h_s: column c of h_s is e_r
                        for (int x = 0; x < U.dims[t]; ++x)
                            if (U.arrows[a].get(x, r)) img.flip(var(a, x, c));
                    if (t == v)  // h_t V_a: row r of h_t is e_c
                        for (int y = 0; y < V.dims[s]; ++y)
                            if (V.arrows[a].get(c, y)) img.flip(var(a, r, y));
                }
                if (img.any()) span.insert(std::move(img));
            }
    for (auto& z : cocycles)
        if (span.insert(z)) d.classes.push_back(z);
    return d;
}

int Oracle::ext_dim(const ModuleSum& V, const ModuleSum& U) const {
    return static_cast<int>(ext_data(to_matrep(U), to_matrep(V)).classes.size());
}

std::set<ModuleSum> Oracle::middle_terms(const ModuleSum& V, const ModuleSum& U, int cap) const {
    if (U.dimension() + V.dimension() > cap)
        throw RefusalError("middle term dimension exceeds cap " + std::to_string(cap));
    if (!A_.is_linear()) throw InputError("middle term decomposition needs a linear quiver");
    MatRep RU = to_matrep(U), RV = to_matrep(V);
    ExtData d = ext_data(RU, RV);
    const int k = static_cast<int>(d.classes.size());
    if (k > 20) throw RefusalError("too many extension classes to enumerate");

    std::set<ModuleSum> out{U + V};  // the split class
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        BitVec c(d.unknowns);
        for (int b = 0; b < k; ++b)
            if ((mask >> b) & 1u) c ^= d.classes[b];
        MatRep X;
        for (int v = 0; v < A_.n(); ++v) X.dims.push_back(RU.dims[v] + RV.dims[v]);
        for (int a = 0; a < arrow_count(); ++a) {
            int s = arrow_source(a) - 1, t = arrow_target(a) - 1;
            const int us = RU.dims[s], ut = RU.dims[t], vs = RV.dims[s];
            BitMatrix m(X.dims[t], X.dims[s]);
            for (int r = 0; r < ut; ++r)
                for (int q = 0; q < us; ++q)
                    if (RU.arrows[a].get(r, q)) m.set(r, q);
            for (int r = 0; r < RV.dims[t]; ++r)
                for (int q = 0; q < vs; ++q)
                    if (RV.arrows[a].get(r, q)) m.set(ut + r, us + q);
            for (int r = 0; r < ut; ++r)
                for (int q = 0; q < vs; ++q)
                    if (c.get(d.off[a] + r * vs + q)) m.set(r, us + q);
            X.arrows.push_back(std::move(m));
        }
        if (!relation_holds(X)) throw std::logic_error("extension violates the relations");
        out.insert(decompose(X));
    }
    return out;
}

ModuleSum Oracle::decompose(const MatRep& X) const {
    if (!A_.is_linear()) throw InputError("decomposition is only offered for linear quivers");
    const auto& ind = A_.indecomposables();
    const int N = static_cast<int>(ind.size());
    std::vector<int> m(N, 0);
    std::vector<Uniserial> parts;
    std::vector<int> dims(A_.n(), 0);
    for (int i = 0; i < N; ++i) {
        int h = hom_space_dim(indec_reps_[i], X);
        for (int j = 0; j < i; ++j) h -= gram_[i][j] * m[j];
        if (h < 0) throw std::logic_error("inconsistent hom counts in decomposition");
        m[i] = h;
        for (int r = 0; r < h; ++r) {
            parts.push_back(ind[i]);
            for (int k = 0; k < ind[i].length; ++k) ++dims[A_.factor(ind[i], k) - 1];
        }
    }
    if (dims != X.dims) throw std::logic_error("decomposition does not match the dimension vector");
    return ModuleSum(std::move(parts));
}

}  // namespace orlov::f2
