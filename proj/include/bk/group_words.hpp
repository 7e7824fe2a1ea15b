#pragma once

#include <string>
#include <vector>

namespace bk {

// Letter t_i^sign of the free group on t_1, t_2, ...
struct TLetter {
    int index = 1;
    int sign = 1;
    bool operator==(const TLetter&) const = default;
    auto operator<=>(const TLetter&) const = default;
};

// Letter q_[lo,hi]^sign of the free group on the interval generators.
struct QLetter {
    int lo = 1;
    int hi = 2;
    int sign = 1;
    bool operator==(const QLetter&) const = default;
    auto operator<=>(const QLetter&) const = default;
};

using TWord = std::vector<TLetter>;
using QWord = std::vector<QLetter>;

TWord t_gen(int i, int sign = 1);
QWord q_gen(int lo, int hi, int sign = 1);

// p_i = t_i t_{i-1} ... t_1 and q_i = p_1 p_2 ... p_i.
TWord p_word(int i);
TWord p_word_inverse(int i);
TWord q_word(int i);

// t_a t_{a-1} ... t_b; empty when a < b.
TWord descending_run(int a, int b);

TWord inverse(TWord w);
QWord inverse(QWord w);
TWord operator+(TWord a, const TWord& b);
QWord operator+(QWord a, const QWord& b);
TWord repeat(const TWord& w, int k);
QWord repeat(const QWord& w, int k);

// Cancels adjacent letters with the same generator.  The generators are
// involutions in every group considered here, so signs are ignored when
// cancelling (t_i t_i and t_i t_i^-1 both vanish).
TWord free_reduce(TWord w);
QWord free_reduce(QWord w);

// The interval-to-t morphism: q_[i,j] -> q_{j-1} q_{j-i} q_{j-1}, expanded
// into Bender-Knuth letters and freely reduced.
TWord phi(const QWord& w);

// The t-to-interval morphism: t_1 -> q_[1,2], t_2 -> q_[1,2]q_[1,3]q_[1,2],
// t_i -> q_[1,i]q_[1,i+1]q_[1,i]q_[1,i-1] for i > 2.
QWord psi(const TWord& w);

// Canonical form in G1 = <t_i | t_i^2, t_i t_j = t_j t_i for |i-j| > 1>:
// signs erased, cancellation modulo distant commutation to a fixpoint, then
// the lexicographically least linearization of the commutation class.
std::vector<int> normal_form_g1(const TWord& w);

bool equal_in_g1(const TWord& a, const TWord& b);

// Brute-force oracle: closure under adjacent distant swaps and adjacent
// equal-letter cancellation; words equal iff the closures intersect.
bool equal_in_g1_bfs(const TWord& a, const TWord& b);

// Equality in G2 = <q_[i,j] | q^2, nesting relation>, decided through the
// isomorphism with G1 given by phi.
bool equal_in_g2(const QWord& a, const QWord& b);

std::string to_string(const TWord& w);
std::string to_string(const QWord& w);
TWord parse_t_word(const std::string& text);
QWord parse_q_word(const std::string& text);

// One checked instance of a word-level identity.
struct IdentityInstance {
    std::string label;
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

// Families: qchange | tech1 | tech2 | comm | rel1 | rel2 | newrel, with all
// generator indices bounded by max_index.
std::vector<IdentityInstance> check_identity_family(const std::string& family, int max_index);

}  // namespace bk
