#include "schur/tilings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace schur {

namespace {

void check_sequence(const std::vector<Partition>& lambdas, const Word& w, bool closed) {
    if (lambdas.size() != w.size() + 1) throw std::invalid_argument("sequence length must be |w|+1");
    if (!lambdas.front().empty()) throw std::invalid_argument("sequence must start with the empty partition");
    if (closed && !lambdas.back().empty()) throw std::invalid_argument("sequence must end with the empty partition");
    for (std::size_t k = 1; k <= w.size(); ++k)
        if (!interlaces(lambdas[k - 1], lambdas[k], w.at(k)))
            throw std::invalid_argument("sequence breaks interlacing at position " + std::to_string(k));
}

}  // namespace

bool is_reverse_plane_partition(const HeightMatrix& h) {
    if (h.rows.size() != h.shape.length()) return false;
    for (std::size_t j = 1; j <= h.shape.length(); ++j) {
        if (h.rows[j - 1].size() != static_cast<std::size_t>(h.shape.part(j))) return false;
        for (int i = 1; i <= h.shape.part(j); ++i) {
            long v = h.at(i, static_cast<int>(j));
            if (v < 0) return false;
            if (i > 1 && h.at(i - 1, static_cast<int>(j)) > v) return false;
            if (j > 1 && h.at(i, static_cast<int>(j - 1)) > v) return false;
        }
    }
    return true;
}

HeightMatrix to_plane_partition(const std::vector<Partition>& lambdas, const Word& w) {
    for (Relation r : w)
        if (is_primed(r)) throw std::invalid_argument("plane partitions need a word without primed symbols");
    check_sequence(lambdas, w, true);
    HeightMatrix h{w, encoded_shape(w), {}};
    auto pts = boundary_points(w);
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t k = 0; k < pts.size(); ++k) index.emplace(pts[k], k);
    h.rows.resize(h.shape.length());
    for (std::size_t j = 1; j <= h.shape.length(); ++j) {
        auto& row = h.rows[j - 1];
        for (int i = 1; i <= h.shape.part(j); ++i) {
            // walk up the diagonal to the boundary
            for (int s = 0;; ++s) {
                auto it = index.find({i + s, static_cast<int>(j) + s});
                if (it != index.end()) {
                    row.push_back(lambdas[it->second].part(static_cast<std::size_t>(s + 1)));
                    break;
                }
            }
        }
    }
    return h;
}

HeightMatrix to_plane_partition(const ProcessSample& s) { return to_plane_partition(s.lambdas, s.word); }

std::vector<Partition> from_plane_partition(const HeightMatrix& h) {
    if (encoded_shape(h.word) != h.shape) throw std::invalid_argument("shape does not match the word");
    if (!is_reverse_plane_partition(h)) throw std::invalid_argument("filling is not a reverse plane partition");
    std::vector<Partition> out;
    for (auto [i, j] : boundary_points(h.word)) {
        std::vector<int> parts;
        for (int r = 0; i - r >= 1 && j - r >= 1; ++r) parts.push_back(static_cast<int>(h.at(i - r, j - r)));
        out.push_back(Partition(std::move(parts)));
    }
    check_sequence(out, h.word, true);
    return out;
}

bool is_steep_word(const Word& w) {
    for (std::size_t k = 1; k <= w.size(); ++k)
        if (is_primed(w.at(k)) != (k % 2 == 1)) return false;
    return true;
}

std::optional<int> aztec_order(const Word& w) {
    if (w.size() % 2 != 0) return std::nullopt;
    for (std::size_t k = 1; k <= w.size(); ++k)
        if (w.at(k) != (k % 2 == 1 ? Relation::LV : Relation::RH)) return std::nullopt;
    return static_cast<int>(w.size() / 2);
}

bool in_aztec_diamond(int n, long x, long y) {
    // |x + 1/2 − (1 − n)| + |y + 1/2 − 1| ≤ n, doubled
    long a = std::labs(2 * x + 1 - 2 * (1 - n));
    long b = std::labs(2 * y - 1);
    return a + b <= 2L * n;
}

long steep_shift(const Word& w, std::size_t k) {
    long s = 1;
    for (std::size_t i = 1; i <= k; ++i)
        if (w.at(i) == Relation::LH || w.at(i) == Relation::RV) ++s;
    return s;
}

namespace {

Domino make_domino(long x, long y, bool vertical) {
    Domino d{x, y, vertical, false};
    long tx = x;
    long ty = vertical ? y + 1 : y;
    d.positive = is_white(tx, ty);
    return d;
}

std::pair<std::pair<long, long>, std::pair<long, long>> squares(const Domino& d) {
    if (d.vertical) return {{d.x, d.y}, {d.x, d.y + 1}};
    return {{d.x, d.y}, {d.x + 1, d.y}};
}

bool in_region(const DominoTiling& t, long x, long y) {
    if (t.aztec_order) return in_aztec_diamond(*t.aztec_order, x, y);
    return y >= t.ymin && y <= t.ymax;
}

}  // namespace

DominoTiling to_steep_tiling(const std::vector<Partition>& lambdas, const Word& w) {
    if (!is_steep_word(w)) throw std::invalid_argument("steep tilings need primed symbols at odd positions only");
    check_sequence(lambdas, w, true);
    long L = 0;
    for (const auto& p : lambdas) L = std::max<long>(L, std::max<long>(p.largest(), static_cast<long>(p.length())));
    long top_shift = steep_shift(w, w.size());
    DominoTiling t;
    t.word = w;
    t.aztec_order = aztec_order(w);
    t.ymin = 1 - L - 2;
    t.ymax = top_shift + L + 2;
    if (t.aztec_order) {
        t.ymin = std::min<long>(t.ymin, -*t.aztec_order - 1);
        t.ymax = std::max<long>(t.ymax, *t.aztec_order + 2);
    }
    std::vector<MayaWindow> maya;
    for (std::size_t k = 0; k < lambdas.size(); ++k)
        maya.push_back(to_maya(lambdas[k], steep_shift(w, k), t.ymin, t.ymax + 1));

    auto cells = [&](std::size_t k, MayaCell kind, bool descending) {
        std::vector<long> ys;
        const auto& c = maya[k].cells;
        for (std::size_t q = 0; q < c.size(); ++q)
            if (c[q] == kind) ys.push_back(t.ymin + static_cast<long>(q));
        if (descending) std::reverse(ys.begin(), ys.end());
        return ys;
    };
    for (std::size_t k = 1; k <= w.size(); ++k) {
        bool primed = is_primed(w.at(k));
        // primed steps pair particles counted from the top, unprimed steps pair holes counted from the bottom
        MayaCell kind = primed ? MayaCell::particle : MayaCell::hole;
        auto a = cells(k - 1, kind, primed);
        auto b = cells(k, kind, primed);
        std::size_t m = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < m; ++i) {
            long y = a[i];
            long d = b[i] - y;
            long x = y - static_cast<long>(k - 1);
            if (d != 0 && d != 1) throw std::logic_error("steep tiling: displacement out of range");
            Domino dom = d == 1 ? make_domino(x, y, true) : make_domino(x - 1, y, false);
            if (dom.positive == primed) throw std::logic_error("steep tiling: sign does not match the matched cells");
            auto [s1, s2] = squares(dom);
            if (in_region(t, s1.first, s1.second) && in_region(t, s2.first, s2.second)) t.dominoes.push_back(dom);
        }
    }
    std::sort(t.dominoes.begin(), t.dominoes.end());
    return t;
}

DominoTiling to_steep_tiling(const ProcessSample& s) { return to_steep_tiling(s.lambdas, s.word); }

std::vector<Partition> from_steep_tiling(const DominoTiling& t) {
    if (!is_steep_word(t.word)) throw std::invalid_argument("steep tilings need primed symbols at odd positions only");
    std::map<std::pair<long, long>, bool> cover;  // square → positive
    for (const auto& d : t.dominoes) {
        auto [s1, s2] = squares(d);
        if (d.positive != is_white(d.x, d.vertical ? d.y + 1 : d.y))
            throw std::invalid_argument("domino sign contradicts the coloring");
        if (!cover.emplace(s1, d.positive).second || !cover.emplace(s2, d.positive).second)
            throw std::invalid_argument("dominoes overlap");
    }
    std::vector<Partition> out;
    for (std::size_t k = 0; k <= t.word.size(); ++k) {
        long shift = steep_shift(t.word, k);
        MayaWindow win;
        win.offset2 = 2 * t.ymin + 1;
        for (long y = t.ymin; y <= t.ymax; ++y) {
            auto it = cover.find({y - static_cast<long>(k), y});
            bool particle = it == cover.end() ? y < shift : !it->second;
            win.cells.push_back(particle ? MayaCell::particle : MayaCell::hole);
        }
        MayaDecoded dec = from_maya(win);
        if (dec.shift != shift) throw std::invalid_argument("diagonal " + std::to_string(k) + " has the wrong charge");
        out.push_back(dec.partition);
    }
    check_sequence(out, t.word, true);
    return out;
}

std::optional<DominoTiling> flip_at(const DominoTiling& t, long x, long y) {
    Domino h0 = make_domino(x, y, false), h1 = make_domino(x, y + 1, false);
    Domino v0 = make_domino(x, y, true), v1 = make_domino(x + 1, y, true);
    auto has = [&](const Domino& d) { return std::binary_search(t.dominoes.begin(), t.dominoes.end(), d); };
    DominoTiling out = t;
    auto swap_pair = [&](const Domino& a, const Domino& b, const Domino& c, const Domino& d) {
        std::erase_if(out.dominoes, [&](const Domino& e) { return e == a || e == b; });
        out.dominoes.push_back(c);
        out.dominoes.push_back(d);
        std::sort(out.dominoes.begin(), out.dominoes.end());
    };
    if (has(h0) && has(h1))
        swap_pair(h0, h1, v0, v1);
    else if (has(v0) && has(v1))
        swap_pair(v0, v1, h0, h1);
    else
        return std::nullopt;
    return out;
}

long flip_distance_check(const DominoTiling& t) {
    long v = 0;
    for (const auto& p : from_steep_tiling(t)) v += p.weight();
    return v;
}

std::string OverpartitionTableau::text(std::size_t r, std::size_t c) const {
    int d = doubled.at(r).at(c);
    if (d % 2 == 0) return std::to_string(d / 2);
    return std::to_string((d + 1) / 2) + "bar";
}

bool is_overpartition_word(const Word& w, int* n) {
    if (w.size() % 2 != 0) return false;
    for (std::size_t k = 1; k <= w.size(); ++k)
        if (w.at(k) != (k % 2 == 1 ? Relation::LH : Relation::LV)) return false;
    if (n) *n = static_cast<int>(w.size() / 2);
    return true;
}

OverpartitionTableau to_plane_overpartition(const std::vector<Partition>& half, const Word& w) {
    int n = 0;
    if (!is_overpartition_word(w, &n)) throw std::invalid_argument("plane overpartitions need the word (<,<')^n");
    check_sequence(half, w, false);
    OverpartitionTableau t;
    t.n = n;
    t.shape = half.back();
    t.doubled.resize(t.shape.length());
    for (std::size_t r = 1; r <= t.shape.length(); ++r)
        for (int c = 1; c <= t.shape.part(r); ++c) {
            std::size_t first = 0;
            while (half[first].part(r) < c) ++first;
            t.doubled[r - 1].push_back(2 * n - static_cast<int>(first) + 1);
        }
    return t;
}

OverpartitionTableau to_plane_overpartition(const SymmetricSample& s) {
    if (s.mode != BoundaryMode::free) throw std::invalid_argument("plane overpartitions need the free boundary");
    std::vector<Partition> half(s.lambdas.begin(), s.lambdas.begin() + static_cast<long>(s.word.size()) + 1);
    return to_plane_overpartition(half, s.word);
}

std::vector<Partition> from_plane_overpartition(const OverpartitionTableau& t) {
    if (t.doubled.size() != t.shape.length()) throw std::invalid_argument("tableau rows do not match the shape");
    for (std::size_t r = 0; r < t.doubled.size(); ++r) {
        if (t.doubled[r].size() != static_cast<std::size_t>(t.shape.part(r + 1)))
            throw std::invalid_argument("tableau rows do not match the shape");
        for (int d : t.doubled[r])
            if (d < 1 || d > 2 * t.n) throw std::invalid_argument("tableau entry out of range");
    }
    std::vector<Relation> sym;
    for (int k = 0; k < t.n; ++k) {
        sym.push_back(Relation::LH);
        sym.push_back(Relation::LV);
    }
    Word w(std::move(sym));
    std::vector<Partition> half;
    for (int i = 0; i <= 2 * t.n; ++i) {
        std::vector<int> parts;
        for (const auto& row : t.doubled) {
            // level set {v > n − i/2} must be a prefix of the row
            int cnt = 0;
            bool gap = false;
            for (int d : row) {
                if (d > 2 * t.n - i) {
                    if (gap) throw std::invalid_argument("tableau rows must weakly decrease");
                    ++cnt;
                } else {
                    gap = true;
                }
            }
            parts.push_back(cnt);
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t q = 1; q < parts.size(); ++q)
            if (parts[q] > parts[q - 1]) throw std::invalid_argument("tableau columns must weakly decrease");
        half.push_back(Partition(std::move(parts)));
    }
    check_sequence(half, w, false);
    return half;
}

}  // namespace schur
