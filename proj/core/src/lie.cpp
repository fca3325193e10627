#include "hca/lie.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace hca {

const SimpleLieAlgebra::Combination SimpleLieAlgebra::empty_{};

namespace {

void add_to(std::map<int, Rational>& acc, int k, const Rational& c) {
    auto [it, fresh] = acc.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

SimpleLieAlgebra::Combination to_comb(const std::map<int, Rational>& acc) {
    SimpleLieAlgebra::Combination out;
    out.reserve(acc.size());
    for (const auto& [k, c] : acc) out.emplace_back(k, c);
    return out;
}

}  // namespace

int SimpleLieAlgebra::index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return -1;
}

const SimpleLieAlgebra::Combination& SimpleLieAlgebra::bracket(int i, int j) const {
    auto it = table_.find({i, j});
    return it == table_.end() ? empty_ : it->second;
}

SimpleLieAlgebra::Combination SimpleLieAlgebra::ad_apply(int i, const Combination& v) const {
    std::map<int, Rational> acc;
    for (const auto& [k, c] : v)
        for (const auto& [l, s] : bracket(i, k)) add_to(acc, l, c * s);
    return to_comb(acc);
}

void SimpleLieAlgebra::finalize() {
    const int d = dim();
    // Fill or check the antisymmetric counterparts.
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            auto ij = table_.find({i, j});
            auto ji = table_.find({j, i});
            if (i == j) {
                if (ij != table_.end() && !ij->second.empty())
                    throw std::invalid_argument("structure constants violate [x,x] = 0");
                continue;
            }
            if (ij != table_.end() && ji != table_.end()) {
                std::map<int, Rational> acc;
                for (const auto& [k, c] : ij->second) add_to(acc, k, c);
                for (const auto& [k, c] : ji->second) add_to(acc, k, c);
                if (!acc.empty())
                    throw std::invalid_argument("structure constants violate antisymmetry");
            } else if (ij != table_.end()) {
                Combination neg = ij->second;
                for (auto& [k, c] : neg) c = -c;
                table_.emplace(std::make_pair(j, i), std::move(neg));
            } else if (ji != table_.end()) {
                Combination neg = ji->second;
                for (auto& [k, c] : neg) c = -c;
                table_.emplace(std::make_pair(i, j), std::move(neg));
            }
        }
    }
    // Jacobi on all basis triples: [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] = 0.
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                std::map<int, Rational> acc;
                for (const auto& [l, c] : ad_apply(i, bracket(j, k))) add_to(acc, l, c);
                for (const auto& [l, c] : ad_apply(j, bracket(k, i))) add_to(acc, l, c);
                for (const auto& [l, c] : ad_apply(k, bracket(i, j))) add_to(acc, l, c);
                if (!acc.empty())
                    throw std::invalid_argument("structure constants violate the Jacobi identity");
            }
    // Killing form by adjoint trace.
    killing_.assign(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            Rational tr(0);
            for (int b = 0; b < d; ++b) {
                Combination v{{b, Rational(1)}};
                Combination w = ad_apply(i, ad_apply(j, v));
                for (const auto& [k, c] : w)
                    if (k == b) tr += c;
            }
            killing_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = tr;
            killing_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = tr;
        }
    }
}

const Rational& SimpleLieAlgebra::killing(int i, int j) const {
    return killing_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

SimpleLieAlgebra SimpleLieAlgebra::sl2() {
    SimpleLieAlgebra g;
    g.labels_ = {"e", "h", "f"};
    const int e = 0, h = 1, f = 2;
    g.table_[{h, e}] = {{e, Rational(2)}};
    g.table_[{h, f}] = {{f, Rational(-2)}};
    g.table_[{e, f}] = {{h, Rational(1)}};
    g.finalize();
    return g;
}

SimpleLieAlgebra SimpleLieAlgebra::sl(int m) {
    if (m < 2) throw std::invalid_argument("sl(m) requires m >= 2");
    if (m == 2) return sl2();
    // Basis: E_ij (i != j), then h_i = E_ii - E_{i+1,i+1}.
    struct Mat {
        std::vector<Rational> a;  // m*m row-major
    };
    const int mm = m;
    std::vector<std::string> labels;
    std::vector<Mat> mats;
    auto mat_zero = [&] { return Mat{std::vector<Rational>(static_cast<std::size_t>(mm * mm))}; };
    auto at = [&](Mat& M, int r, int c) -> Rational& {
        return M.a[static_cast<std::size_t>(r * mm + c)];
    };
    for (int r = 0; r < mm; ++r)
        for (int c = 0; c < mm; ++c) {
            if (r == c) continue;
            Mat M = mat_zero();
            at(M, r, c) = Rational(1);
            mats.push_back(std::move(M));
            labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
        }
    for (int r = 0; r + 1 < mm; ++r) {
        Mat M = mat_zero();
        at(M, r, r) = Rational(1);
        at(M, r + 1, r + 1) = Rational(-1);
        mats.push_back(std::move(M));
        labels.push_back("h" + std::to_string(r + 1));
    }
    const int d = static_cast<int>(mats.size());
    auto commute = [&](const Mat& X, const Mat& Y) {
        Mat Z = mat_zero();
        for (int r = 0; r < mm; ++r)
            for (int c = 0; c < mm; ++c) {
                Rational s(0);
                for (int k = 0; k < mm; ++k)
                    s += X.a[static_cast<std::size_t>(r * mm + k)] *
                             Y.a[static_cast<std::size_t>(k * mm + c)] -
                         Y.a[static_cast<std::size_t>(r * mm + k)] *
                             X.a[static_cast<std::size_t>(k * mm + c)];
                Z.a[static_cast<std::size_t>(r * mm + c)] = s;
            }
        return Z;
    };
    // Decompose a traceless matrix over the basis: off-diagonal entries map
    // to E_ij, the diagonal to partial sums on the h_i.
    auto decompose = [&](const Mat& Z) {
        Combination out;
        int idx = 0;
        for (int r = 0; r < mm; ++r)
            for (int c = 0; c < mm; ++c) {
                if (r == c) continue;
                const Rational& v = Z.a[static_cast<std::size_t>(r * mm + c)];
                if (!v.is_zero()) out.emplace_back(idx, v);
                ++idx;
            }
        Rational partial(0);
        for (int r = 0; r + 1 < mm; ++r) {
            partial += Z.a[static_cast<std::size_t>(r * mm + r)];
            if (!partial.is_zero()) out.emplace_back(idx, partial);
            ++idx;
        }
        return out;
    };
    SimpleLieAlgebra g;
    g.labels_ = std::move(labels);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            Combination c = decompose(commute(mats[static_cast<std::size_t>(i)],
                                              mats[static_cast<std::size_t>(j)]));
            if (!c.empty()) g.table_[{i, j}] = std::move(c);
        }
    g.finalize();
    return g;
}

SimpleLieAlgebra SimpleLieAlgebra::from_structure_constants(
    std::vector<std::string> labels,
    const std::vector<std::tuple<int, int, int, Rational>>& rows) {
    SimpleLieAlgebra g;
    g.labels_ = std::move(labels);
    const int d = g.dim();
    if (d == 0) throw std::invalid_argument("empty basis");
    std::map<std::pair<int, int>, std::map<int, Rational>> acc;
    for (const auto& [i, j, k, c] : rows) {
        if (i < 0 || i >= d || j < 0 || j >= d || k < 0 || k >= d)
            throw std::invalid_argument("structure constant index out of range");
        add_to(acc[{i, j}], k, c);
    }
    for (auto& [key, m] : acc) {
        Combination comb = to_comb(m);
        if (!comb.empty()) g.table_[key] = std::move(comb);
    }
    g.finalize();
    return g;
}

}  // namespace hca
