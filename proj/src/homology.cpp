#include "neighborly/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <unordered_map>

namespace neighborly {

namespace {

using boost::multiprecision::cpp_int;
using SparseRow = std::vector<std::pair<int, cpp_int>>;

// c = a*x + b*y on sorted sparse rows
SparseRow combine(const SparseRow& x, const cpp_int& a, const SparseRow& y, const cpp_int& b) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, b * y[j].second);
            ++j;
        } else {
            cpp_int v = a * x[i].second + b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void normalize_content(SparseRow& row) {
    cpp_int g = 0;
    for (const auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

long long rank_exact_impl(std::vector<SparseRow> rows) {
    long long rank = 0;
    std::vector<SparseRow> active;
    for (auto& r : rows)
        if (!r.empty()) active.push_back(std::move(r));
    while (!active.empty()) {
        // pivot row: fewest nonzeros, prefer rows holding a unit entry
        std::size_t best = 0;
        bool best_unit = false;
        for (std::size_t k = 0; k < active.size(); ++k) {
            bool unit = false;
            for (const auto& [c, v] : active[k])
                if (v == 1 || v == -1) {
                    unit = true;
                    break;
                }
            if (k == 0 || (unit && !best_unit) ||
                (unit == best_unit && active[k].size() < active[best].size())) {
                best = k;
                best_unit = unit;
            }
        }
        SparseRow pivot_row = std::move(active[best]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        // pivot entry: unit if possible, else smallest magnitude
        std::size_t pk = 0;
        for (std::size_t k = 1; k < pivot_row.size(); ++k) {
            const cpp_int &cur = pivot_row[k].second, &sel = pivot_row[pk].second;
            bool cur_unit = cur == 1 || cur == -1, sel_unit = sel == 1 || sel == -1;
            if ((cur_unit && !sel_unit) ||
                (cur_unit == sel_unit && abs(cur) < abs(sel)))
                pk = k;
        }
        int pcol = pivot_row[pk].first;
        cpp_int pval = pivot_row[pk].second;
        ++rank;
        std::vector<SparseRow> next;
        next.reserve(active.size());
        for (auto& row : active) {
            auto it = std::lower_bound(row.begin(), row.end(), pcol,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == row.end() || it->first != pcol) {
                next.push_back(std::move(row));
                continue;
            }
            cpp_int v = it->second;
            SparseRow reduced;
            if (v % pval == 0)
                reduced = combine(row, 1, pivot_row, -(v / pval));
            else {
                reduced = combine(row, pval, pivot_row, -v);
                normalize_content(reduced);
            }
            if (!reduced.empty()) next.push_back(std::move(reduced));
        }
        active = std::move(next);
    }
    return rank;
}

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}

long long rank_mod_p_impl(std::vector<std::vector<std::pair<int, long long>>> rows, long long p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
    long long rank = 0;
    std::vector<std::vector<std::pair<int, long long>>> active;
    for (auto& r : rows) {
        std::vector<std::pair<int, long long>> red;
        for (auto& [c, v] : r) {
            long long m = ((v % p) + p) % p;
            if (m) red.emplace_back(c, m);
        }
        if (!red.empty()) active.push_back(std::move(red));
    }
    while (!active.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < active.size(); ++k)
            if (active[k].size() < active[best].size()) best = k;
        auto pivot_row = std::move(active[best]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        int pcol = pivot_row[0].first;
        long long pinv = mod_pow(pivot_row[0].second, p - 2, p);
        ++rank;
        std::vector<std::vector<std::pair<int, long long>>> next;
        for (auto& row : active) {
            auto it = std::lower_bound(row.begin(), row.end(), pcol,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == row.end() || it->first != pcol) {
                next.push_back(std::move(row));
                continue;
            }
            long long factor = (__int128)it->second * pinv % p;
            std::vector<std::pair<int, long long>> reduced;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < pivot_row.size()) {
                if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
                    reduced.push_back(row[i]);
                    ++i;
                } else if (i == row.size() || pivot_row[j].first < row[i].first) {
                    long long v = p - (__int128)factor * pivot_row[j].second % p;
                    if (v == p) v = 0;
                    if (v) reduced.emplace_back(pivot_row[j].first, v);
                    ++j;
                } else {
                    long long v = (row[i].second - (__int128)factor * pivot_row[j].second % p + p) % p;
                    if (v) reduced.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            if (!reduced.empty()) next.push_back(std::move(reduced));
        }
        active = std::move(next);
    }
    return rank;
}

}  // namespace

long long sparse_rank_exact(std::vector<std::vector<std::pair<int, long long>>> rows) {
    std::vector<SparseRow> big;
    big.reserve(rows.size());
    for (auto& r : rows) {
        SparseRow row;
        row.reserve(r.size());
        for (auto& [c, v] : r)
            if (v != 0) row.emplace_back(c, cpp_int(v));
        std::sort(row.begin(), row.end());
        big.push_back(std::move(row));
    }
    return rank_exact_impl(std::move(big));
}

long long sparse_rank_mod_p(std::vector<std::vector<std::pair<int, long long>>> rows,
                            long long p) {
    for (auto& r : rows) std::sort(r.begin(), r.end());
    return rank_mod_p_impl(std::move(rows), p);
}

HomologyProfile homology_of_faces(const std::vector<Subset>& faces, long long field_char) {
    HomologyProfile profile;
    if (faces.empty()) return profile;
    int dim = -1;
    for (Subset f : faces) dim = std::max(dim, card(f) - 1);
    std::vector<std::vector<Subset>> level(static_cast<std::size_t>(dim) + 2);
    for (Subset f : faces) level[static_cast<std::size_t>(card(f))].push_back(f);
    std::vector<std::unordered_map<Subset, int>> index(level.size());
    for (std::size_t k = 0; k < level.size(); ++k) {
        std::sort(level[k].begin(), level[k].end());
        for (std::size_t i = 0; i < level[k].size(); ++i)
            index[k][level[k][i]] = static_cast<int>(i);
    }
    // boundary ranks; rank(d_k) computed from the columns of d_k (rank of the
    // transpose is the same)
    std::vector<long long> brank(level.size() + 1, 0);
    for (std::size_t k = 1; k < level.size(); ++k) {
        std::vector<std::vector<std::pair<int, long long>>> cols;
        cols.reserve(level[k].size());
        for (Subset f : level[k]) {
            std::vector<std::pair<int, long long>> col;
            int pos = 0;
            for (Subset rest = f; rest; rest &= rest - 1, ++pos) {
                Subset v = rest & (~rest + 1);
                Subset sub = f & ~v;
                col.emplace_back(index[k - 1].at(sub), pos % 2 == 0 ? 1 : -1);
            }
            cols.push_back(std::move(col));
        }
        brank[k] = field_char == 0 ? sparse_rank_exact(std::move(cols))
                                   : sparse_rank_mod_p(std::move(cols), field_char);
    }
    profile.ranks.resize(level.size());
    for (std::size_t k = 0; k < level.size(); ++k)
        profile.ranks[k] =
            static_cast<long long>(level[k].size()) - brank[k] - brank[k + 1];
    return profile;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, long long field_char,
                                 std::size_t cap) {
    return homology_of_faces(enumerate_faces(c, cap), field_char);
}

}  // namespace neighborly
