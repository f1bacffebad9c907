#include "tl/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace tl {

namespace {

void validate_matching(int n, const std::vector<int>& mate) {
    if (static_cast<int>(mate.size()) != 2 * n) throw invalid_input("matching has wrong size");
    for (int p = 0; p < 2 * n; ++p) {
        if (mate[p] < 0 || mate[p] >= 2 * n || mate[p] == p || mate[mate[p]] != p)
            throw invalid_input("not a perfect matching");
    }
    // noncrossing: stack check along the cyclic order
    std::vector<int> stack;
    for (int p = 0; p < 2 * n; ++p) {
        if (mate[p] > p) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != mate[p]) throw invalid_input("crossing chords");
            stack.pop_back();
        }
    }
}

// Label key for serialization order L1<...<Ln<R1<...<Rn.
int serial_key(int n, int p) { return p < n ? p : 3 * n - p - 1; }

}  // namespace

PlanarDiagram PlanarDiagram::identity(int n) {
    std::vector<int> mate(2 * n);
    for (int i = 1; i <= n; ++i) {
        mate[pos_of_left(n, i)] = pos_of_right(n, i);
        mate[pos_of_right(n, i)] = pos_of_left(n, i);
    }
    return PlanarDiagram(n, std::move(mate));
}

PlanarDiagram PlanarDiagram::generator(int n, int i) {
    if (i < 1 || i > n - 1) throw invalid_input("IndexOutOfRange: U_" + std::to_string(i) + " in TL_" + std::to_string(n));
    PlanarDiagram d = identity(n);
    auto link = [&d](int p, int q) {
        d.mate_[p] = q;
        d.mate_[q] = p;
    };
    link(pos_of_left(n, i), pos_of_left(n, i + 1));
    link(pos_of_right(n, i), pos_of_right(n, i + 1));
    return d;
}

std::string PlanarDiagram::label_of_pos(int n, int p) {
    if (p < n) return "L" + std::to_string(p + 1);
    return "R" + std::to_string(2 * n - p);
}

PlanarDiagram PlanarDiagram::from_pairs(int n, const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto parse = [n](const std::string& s) {
        if (s.size() < 2 || (s[0] != 'L' && s[0] != 'R')) throw invalid_input("bad endpoint label: " + s);
        int idx = 0;
        try {
            idx = std::stoi(s.substr(1));
        } catch (...) {
            throw invalid_input("bad endpoint label: " + s);
        }
        if (idx < 1 || idx > n) throw invalid_input("endpoint out of range: " + s);
        return s[0] == 'L' ? pos_of_left(n, idx) : pos_of_right(n, idx);
    };
    std::vector<int> mate(2 * n, -1);
    for (const auto& [x, y] : pairs) {
        int p = parse(x), q = parse(y);
        if (mate[p] != -1 || mate[q] != -1) throw invalid_input("duplicate endpoint in pairs");
        mate[p] = q;
        mate[q] = p;
    }
    validate_matching(n, mate);
    return PlanarDiagram(n, std::move(mate));
}

PlanarDiagram PlanarDiagram::from_mates(int n, std::vector<int> mate) {
    validate_matching(n, mate);
    return PlanarDiagram(n, std::move(mate));
}

std::vector<std::pair<std::string, std::string>> PlanarDiagram::canonical_pairs() const {
    std::vector<std::pair<int, int>> keyed;
    for (int p = 0; p < 2 * n_; ++p) {
        if (mate_[p] > p || serial_key(n_, mate_[p]) > serial_key(n_, p)) {
            int kp = serial_key(n_, p), kq = serial_key(n_, mate_[p]);
            if (kp < kq) keyed.emplace_back(kp, kq);
        }
    }
    std::sort(keyed.begin(), keyed.end());
    auto label_of_key = [this](int k) {
        return k < n_ ? "L" + std::to_string(k + 1) : "R" + std::to_string(k - n_ + 1);
    };
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(keyed.size());
    for (auto [a, b] : keyed) out.emplace_back(label_of_key(a), label_of_key(b));
    return out;
}

bool PlanarDiagram::operator<(const PlanarDiagram& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return mate_ < o.mate_;
}

std::size_t PlanarDiagram::hash() const {
    std::size_t h = std::hash<int>()(n_);
    for (int m : mate_) h = h * 1000003u + static_cast<std::size_t>(m);
    return h;
}

std::pair<PlanarDiagram, int> compose(const PlanarDiagram& d, const PlanarDiagram& e) {
    if (d.n() != e.n()) throw invalid_input("SizeMismatch: composing diagrams of different sizes");
    const int n = d.n();
    // Node space: 0..n-1 result left (d's left), n..2n-1 interface strand
    // k-1 (d's R_k glued to e's L_k), 2n..3n-1 result right (e's right,
    // node 2n+j-1 = R_j).  Each node has one neighbor through d's matching
    // and/or one through e's.
    auto d_node = [n](int p) { return p < n ? p : 3 * n - p - 1; };
    auto e_node = [n](int p) { return p < n ? n + p : 4 * n - p - 1; };
    std::vector<int> via_d(3 * n, -1), via_e(3 * n, -1);
    for (int p = 0; p < 2 * n; ++p) {
        via_d[d_node(p)] = d_node(d.mate_of_pos(p));
        via_e[e_node(p)] = e_node(e.mate_of_pos(p));
    }
    std::vector<int> result_mate(2 * n, -1);
    std::vector<char> seen(3 * n, 0);
    auto boundary_pos = [n](int node) { return node < n ? node : 4 * n - node - 1; };
    // open strands: walk from each boundary node, alternating matchings
    for (int start = 0; start < 3 * n; ++start) {
        bool is_boundary = start < n || start >= 2 * n;
        if (!is_boundary || seen[start]) continue;
        int cur = start;
        bool use_d = start < n;  // left boundary enters d, right boundary enters e
        seen[cur] = 1;
        while (true) {
            int nxt = use_d ? via_d[cur] : via_e[cur];
            check_internal(nxt >= 0, "broken trace in compose");
            seen[nxt] = 1;
            if (nxt < n || nxt >= 2 * n) {
                int a = boundary_pos(start), b = boundary_pos(nxt);
                result_mate[a] = b;
                result_mate[b] = a;
                break;
            }
            cur = nxt;
            use_d = !use_d;
        }
    }
    // leftover interface nodes lie on closed loops
    int loops = 0;
    for (int start = n; start < 2 * n; ++start) {
        if (seen[start]) continue;
        ++loops;
        int cur = start;
        bool use_d = true;
        do {
            seen[cur] = 1;
            cur = use_d ? via_d[cur] : via_e[cur];
            use_d = !use_d;
        } while (!(cur == start && use_d));
    }
    return {PlanarDiagram::from_mates(n, std::move(result_mate)), loops};
}

std::vector<PlanarDiagram> enumerate_diagrams(int n) {
    std::vector<PlanarDiagram> out;
    std::vector<int> mate(2 * n, -1);
    std::function<void(int)> rec = [&](int p) {
        while (p < 2 * n && mate[p] != -1) ++p;
        if (p == 2 * n) {
            out.push_back(PlanarDiagram::from_mates(n, mate));
            return;
        }
        for (int q = p + 1; q < 2 * n; q += 2) {
            if (mate[q] != -1) continue;
            // all points strictly between p and q must be free and matched inside
            bool ok = true;
            for (int t = p + 1; t < q; ++t)
                if (mate[t] != -1) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            mate[p] = q;
            mate[q] = p;
            rec(p + 1);
            mate[p] = -1;
            mate[q] = -1;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const PlanarDiagram& x, const PlanarDiagram& y) {
        return x.canonical_pairs() < y.canonical_pairs();
    });
    return out;
}

std::vector<int> JonesWord::letters() const {
    std::vector<int> ls;
    for (const auto& s : segments)
        for (int t = s.a; t <= s.b; ++t) ls.push_back(t);
    return ls;
}

void JonesWord::validate() const {
    int prev_a = n, prev_b = n;
    for (const auto& s : segments) {
        if (s.a < 1 || s.b < s.a || s.b > n - 1) throw invalid_input("malformed Jones word segment");
        if (s.a >= prev_a || s.b >= prev_b) throw invalid_input("Jones word segments not decreasing");
        prev_a = s.a;
        prev_b = s.b;
    }
}

std::vector<int> JonesWord::sort_key() const {
    std::vector<int> key;
    key.push_back(static_cast<int>(segments.size()));
    for (const auto& s : segments) key.push_back(s.a);
    for (const auto& s : segments) key.push_back(s.b);
    return key;
}

int word_index(const JonesWord& w) {
    if (w.is_identity()) return infinite_index;
    return w.segments.back().a;
}

int word_terminus(const JonesWord& w) {
    if (w.is_identity()) return infinite_index;
    return w.segments.back().b;
}

namespace {

// Arc of a diagram in height coordinates: kind 0 = left-left, 1 = through,
// 2 = right-right; (lo, hi) are dot heights, for through arcs (l, r) are the
// left and right heights.
struct Arc {
    int kind;
    int x0, x1;
};

struct Dotted {
    int row;
    int left_arc;
    int right_arc;
};

}  // namespace

JonesWord diagram_to_jones_word(const PlanarDiagram& d) {
    const int n = d.n();
    std::vector<Arc> arcs;
    for (int p = 0; p < 2 * n; ++p) {
        int q = d.mate_of_pos(p);
        if (q < p) continue;
        bool pl = p < n, ql = q < n;
        int hp = pl ? p + 1 : 2 * n - p;
        int hq = ql ? q + 1 : 2 * n - q;
        if (pl && ql) arcs.push_back({0, std::min(hp, hq), std::max(hp, hq)});
        else if (!pl && !ql) arcs.push_back({2, std::min(hp, hq), std::max(hp, hq)});
        else if (pl) arcs.push_back({1, hp, hq});
        else arcs.push_back({1, hq, hp});
    }

    std::vector<Dotted> dots;
    std::vector<std::vector<std::pair<int, int>>> incid(arcs.size());  // arc -> (dotted id, 0=left/1=right)
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<int> ll, tt, rr;
        int t_dir = 0;  // +1 ascending, -1 descending
        for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
            const Arc& A = arcs[a];
            if (A.kind == 0 && A.x0 <= k && k < A.x1) ll.push_back(a);
            if (A.kind == 2 && A.x0 <= k && k < A.x1) rr.push_back(a);
            if (A.kind == 1) {
                int lo = std::min(A.x0, A.x1), hi = std::max(A.x0, A.x1);
                if (lo <= k && k < hi) {
                    int dir = A.x0 < A.x1 ? +1 : -1;
                    check_internal(t_dir == 0 || t_dir == dir, "mixed through-arc directions in one row");
                    t_dir = dir;
                    tt.push_back(a);
                }
            }
        }
        // x-order in the strip: left semicircles innermost first, then through
        // arcs with the nearer left endpoint first, then right semicircles
        // outermost first.
        std::sort(ll.begin(), ll.end(), [&](int a, int b) { return arcs[a].x0 > arcs[b].x0; });
        std::sort(tt.begin(), tt.end(), [&](int a, int b) {
            int da = arcs[a].x0 <= k ? k - arcs[a].x0 : arcs[a].x0 - k - 1;
            int db = arcs[b].x0 <= k ? k - arcs[b].x0 : arcs[b].x0 - k - 1;
            return da < db;
        });
        std::sort(rr.begin(), rr.end(), [&](int a, int b) { return arcs[a].x0 < arcs[b].x0; });
        std::vector<int> row;
        row.insert(row.end(), ll.begin(), ll.end());
        row.insert(row.end(), tt.begin(), tt.end());
        row.insert(row.end(), rr.begin(), rr.end());
        check_internal(row.size() % 2 == 0, "odd number of arcs crossing a row");
        for (std::size_t t = 0; t + 1 < row.size(); t += 2) {
            int id = static_cast<int>(dots.size());
            dots.push_back({k, row[t], row[t + 1]});
            incid[row[t]].emplace_back(id, 0);
            incid[row[t + 1]].emplace_back(id, 1);
        }
    }

    // successor: from a dotted line's right arc, the next dotted line up the
    // arc must sit one row higher with that arc as its left attachment
    std::vector<int> succ(dots.size(), -1);
    std::vector<char> has_pred(dots.size(), 0);
    for (std::size_t i = 0; i < dots.size(); ++i) {
        int arc = dots[i].right_arc;
        int best = -1;  // lowest dotted line attached to this arc above row i
        for (auto [id, role] : incid[arc]) {
            (void)role;
            if (dots[id].row <= dots[i].row) continue;
            if (best == -1 || dots[id].row < dots[best].row) best = id;
        }
        if (best != -1) {
            check_internal(dots[best].left_arc == arc, "sequence scan: next dotted line not a left attachment");
            check_internal(dots[best].row == dots[i].row + 1, "sequence scan: row jump");
            succ[i] = best;
            has_pred[best] = 1;
        }
    }
    std::vector<JonesWord::Segment> segs;
    for (std::size_t i = 0; i < dots.size(); ++i) {
        if (has_pred[i]) continue;
        int a = dots[i].row, b = a;
        for (int cur = static_cast<int>(i); succ[cur] != -1; cur = succ[cur]) b = dots[succ[cur]].row;
        segs.push_back({a, b});
    }
    std::sort(segs.begin(), segs.end(), [](const JonesWord::Segment& s, const JonesWord::Segment& t) {
        return s.b > t.b;
    });
    for (std::size_t i = 0; i + 1 < segs.size(); ++i)
        check_internal(segs[i].b > segs[i + 1].b, "sequence scan: tied sequence tops");

    JonesWord w{n, std::move(segs)};
    w.validate();
    return w;
}

PlanarDiagram jones_word_to_diagram(const JonesWord& w) {
    w.validate();
    PlanarDiagram d = PlanarDiagram::identity(w.n);
    for (int letter : w.letters()) {
        auto [nd, loops] = compose(d, PlanarDiagram::generator(w.n, letter));
        if (loops != 0) throw invalid_input("InvariantViolation: Jones word composes with loops");
        d = nd;
    }
    return d;
}

std::uint64_t catalan(int n) {
    if (n < 0) throw invalid_input("catalan of negative n");
    if (n > 32) throw invalid_input("catalan overflow guard");
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> c(33, 0);
        c[0] = 1;
        for (int m = 0; m < 32; ++m) {
            std::uint64_t s = 0;
            for (int i = 0; i <= m; ++i) s += c[i] * c[m - i];
            c[m + 1] = s;
        }
        return c;
    }();
    return table[n];
}

namespace {

void dyck_rec(int ups_left, int downs_left, int height, bool last_was_up, int first_peak, std::uint64_t& count) {
    if (ups_left == 0 && downs_left == 0) {
        if (first_peak % 2 == 0) ++count;  // no-peak paths (n=0) count as even
        return;
    }
    if (ups_left > 0) dyck_rec(ups_left - 1, downs_left, height + 1, true, first_peak, count);
    if (downs_left > 0 && height > 0) {
        int fp = first_peak;
        if (fp == 0 && last_was_up) fp = height;  // U followed by D: first peak found
        dyck_rec(ups_left, downs_left - 1, height - 1, false, fp, count);
    }
}

}  // namespace

std::uint64_t fine_number(int n) {
    if (n < 0) throw invalid_input("fine_number of negative n");
    if (n == 0) return 1;
    if (n > 16) throw invalid_input("fine_number enumeration guard");
    std::uint64_t count = 0;
    dyck_rec(n, n, 0, false, 0, count);
    return count;
}

std::vector<std::vector<int>> enumerate_jacobsthal_sequences(int n) {
    if (n < 1) throw invalid_input("jacobsthal sequences need n >= 1");
    std::vector<std::vector<int>> out;
    if (n % 2 == 1) out.push_back({});  // empty sequence: a_1 = 0, r = 0 by convention
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int max_next) {
        for (int t = max_next; t >= 1; --t) {
            cur.push_back(t);
            all.push_back(cur);
            rec(t - 1);
            cur.pop_back();
        }
    };
    // first elements with n - a_1 odd, larger first
    for (int a1 = n - 1; a1 >= 1; --a1) {
        if ((n - a1) % 2 == 0) continue;
        cur = {a1};
        all.push_back(cur);
        rec(a1 - 1);
    }
    std::stable_sort(all.begin(), all.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x > y;  // lexicographic descending within a length class
    });
    for (auto& s : all) out.push_back(std::move(s));
    return out;
}

std::uint64_t jacobsthal_number(int n) {
    return enumerate_jacobsthal_sequences(n).size();
}

}  // namespace tl
