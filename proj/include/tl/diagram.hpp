#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tl/errors.hpp"

namespace tl {

// Terminus/index of the identity word.
inline constexpr int infinite_index = INT_MAX;

// A noncrossing perfect matching on the 2n boundary points of an (n,n)
// diagram.  Positions run in the cyclic order L1,...,Ln,Rn,...,R1, i.e.
// position i-1 is L_i and position 2n-j is R_j.  Dots are numbered from the
// bottom, matching the pictures where U_i cups dots i and i+1.
class PlanarDiagram {
public:
    static PlanarDiagram identity(int n);
    static PlanarDiagram generator(int n, int i);  // U_i, 1 <= i <= n-1
    // pairs use labels "L1".."Ln", "R1".."Rn"; validates matching + planarity
    static PlanarDiagram from_pairs(int n, const std::vector<std::pair<std::string, std::string>>& pairs);
    static PlanarDiagram from_mates(int n, std::vector<int> mate);

    int n() const { return n_; }
    int mate_of_pos(int p) const { return mate_[p]; }

    static int pos_of_left(int /*n*/, int i) { return i - 1; }
    static int pos_of_right(int n, int j) { return 2 * n - j; }
    static std::string label_of_pos(int n, int p);

    // Canonically ordered label pairs (order L1<...<Ln<R1<...<Rn, smaller
    // label first in each pair, pairs sorted lexicographically).
    std::vector<std::pair<std::string, std::string>> canonical_pairs() const;

    bool operator==(const PlanarDiagram& o) const { return n_ == o.n_ && mate_ == o.mate_; }
    bool operator!=(const PlanarDiagram& o) const { return !(*this == o); }
    bool operator<(const PlanarDiagram& o) const;
    std::size_t hash() const;

private:
    PlanarDiagram(int n, std::vector<int> mate) : n_(n), mate_(std::move(mate)) {}
    int n_ = 0;
    std::vector<int> mate_;
};

struct DiagramHash {
    std::size_t operator()(const PlanarDiagram& d) const { return d.hash(); }
};

// Composition d * e glues d's right boundary to e's left boundary; the number
// of erased closed loops is returned alongside the traced diagram.
std::pair<PlanarDiagram, int> compose(const PlanarDiagram& d, const PlanarDiagram& e);

// All noncrossing perfect matchings on 2n points, canonically ordered by
// serialization; the count is Catalan(n).
std::vector<PlanarDiagram> enumerate_diagrams(int n);

// A word in Jones normal form: segments (a_k..b_k)...(a_1..b_1), each segment
// the consecutive ascending run U_a U_{a+1} ... U_b, with n > a_k > ... > a_1,
// n > b_k > ... > b_1 and b_i >= a_i.  No segments = the identity word.
struct JonesWord {
    struct Segment {
        int a = 0;
        int b = 0;
        bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
    };
    int n = 0;
    std::vector<Segment> segments;  // listed outermost first: (a_k,b_k), ..., (a_1,b_1)

    bool is_identity() const { return segments.empty(); }
    std::vector<int> letters() const;
    void validate() const;  // throws invalid_input on malformed words

    bool operator==(const JonesWord& o) const { return n == o.n && segments == o.segments; }
    bool operator<(const JonesWord& o) const { return sort_key() < o.sort_key(); }
    // canonical basis order: (number of segments, flattened a-tuple, b-tuple)
    std::vector<int> sort_key() const;
};

int word_index(const JonesWord& w);     // min letter; infinite_index for identity
int word_terminus(const JonesWord& w);  // last letter (= b_1); infinite_index for identity

// The row/sequence scan: connect consecutive arcs per row alternately, read
// sequences top to bottom, emit one segment per sequence.
JonesWord diagram_to_jones_word(const PlanarDiagram& d);

// Inverse realized by composing generator diagrams; a nonzero loop count
// indicates malformed input and raises invalid_input.
PlanarDiagram jones_word_to_diagram(const JonesWord& w);

// Integer sequences.  catalan/jacobsthal use the counting recurrences; fine
// enumerates Dyck paths directly and filters on the first-peak height.
std::uint64_t catalan(int n);
std::uint64_t fine_number(int n);
std::uint64_t jacobsthal_number(int n);

// All sequences n > a_1 > ... > a_r > 0 with n - a_1 odd, the empty sequence
// (present iff n is odd) first; ordered by (length, lexicographic descending).
std::vector<std::vector<int>> enumerate_jacobsthal_sequences(int n);

}  // namespace tl
