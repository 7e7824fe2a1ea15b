#include "bk/group_words.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bk {

TWord t_gen(int i, int sign) {
    if (i < 1 || (sign != 1 && sign != -1)) throw std::invalid_argument("t_gen: bad letter");
    return {TLetter{i, sign}};
}

QWord q_gen(int lo, int hi, int sign) {
    if (lo < 1 || lo >= hi || (sign != 1 && sign != -1))
        throw std::invalid_argument("q_gen: bad letter");
    return {QLetter{lo, hi, sign}};
}

TWord p_word(int i) {
    TWord w;
    for (int k = i; k >= 1; --k) w.push_back(TLetter{k, 1});
    return w;
}

TWord p_word_inverse(int i) { return inverse(p_word(i)); }

TWord q_word(int i) {
    TWord w;
    for (int k = 1; k <= i; ++k) {
        TWord p = p_word(k);
        w.insert(w.end(), p.begin(), p.end());
    }
    return w;
}

TWord descending_run(int a, int b) {
    TWord w;
    for (int k = a; k >= b; --k) w.push_back(TLetter{k, 1});
    return w;
}

TWord inverse(TWord w) {
    std::reverse(w.begin(), w.end());
    for (auto& x : w) x.sign = -x.sign;
    return w;
}

QWord inverse(QWord w) {
    std::reverse(w.begin(), w.end());
    for (auto& x : w) x.sign = -x.sign;
    return w;
}

TWord operator+(TWord a, const TWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

QWord operator+(QWord a, const QWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

TWord repeat(const TWord& w, int k) {
    TWord out;
    for (int s = 0; s < k; ++s) out = std::move(out) + w;
    return out;
}

QWord repeat(const QWord& w, int k) {
    QWord out;
    for (int s = 0; s < k; ++s) out = std::move(out) + w;
    return out;
}

namespace {

template <typename W, typename Same>
W reduce_adjacent(W w, Same same) {
    W out;
    for (const auto& x : w) {
        if (!out.empty() && same(out.back(), x))
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

}  // namespace

TWord free_reduce(TWord w) {
    return reduce_adjacent(std::move(w),
                           [](const TLetter& a, const TLetter& b) { return a.index == b.index; });
}

QWord free_reduce(QWord w) {
    return reduce_adjacent(std::move(w), [](const QLetter& a, const QLetter& b) {
        return a.lo == b.lo && a.hi == b.hi;
    });
}

TWord phi(const QWord& w) {
    TWord out;
    for (const auto& x : w) {
        TWord image = q_word(x.hi - 1) + q_word(x.hi - x.lo) + q_word(x.hi - 1);
        if (x.sign < 0) image = inverse(image);
        out = std::move(out) + image;
    }
    return free_reduce(std::move(out));
}

QWord psi(const TWord& w) {
    QWord out;
    for (const auto& x : w) {
        QWord image;
        int i = x.index;
        if (i == 1) {
            image = q_gen(1, 2);
        } else if (i == 2) {
            image = q_gen(1, 2) + q_gen(1, 3) + q_gen(1, 2);
        } else {
            image = q_gen(1, i) + q_gen(1, i + 1) + q_gen(1, i) + q_gen(1, i - 1);
        }
        if (x.sign < 0) image = inverse(image);
        out = std::move(out) + image;
    }
    return free_reduce(std::move(out));
}

namespace {

std::vector<int> erase_signs(const TWord& w) {
    std::vector<int> v;
    v.reserve(w.size());
    for (const auto& x : w) v.push_back(x.index);
    return v;
}

bool commute(int a, int b) { return std::abs(a - b) > 1; }

// Cancel a pair of equal letters separated only by commuting letters.
bool cancel_once(std::vector<int>& v) {
    for (size_t k = 0; k < v.size(); ++k) {
        for (size_t m = k + 1; m < v.size(); ++m) {
            if (v[m] == v[k]) {
                v.erase(v.begin() + static_cast<long>(m));
                v.erase(v.begin() + static_cast<long>(k));
                return true;
            }
            if (!commute(v[m], v[k])) break;
        }
    }
    return false;
}

}  // namespace

std::vector<int> normal_form_g1(const TWord& w) {
    std::vector<int> v = erase_signs(w);
    while (cancel_once(v)) {
    }
    // Lexicographically least linearization of the commutation class.
    std::vector<int> out;
    while (!v.empty()) {
        size_t best = v.size();
        for (size_t p = 0; p < v.size(); ++p) {
            bool available = true;
            for (size_t q = 0; q < p; ++q)
                if (!commute(v[q], v[p])) {
                    available = false;
                    break;
                }
            if (available && (best == v.size() || v[p] < v[best])) best = p;
        }
        out.push_back(v[best]);
        v.erase(v.begin() + static_cast<long>(best));
    }
    return out;
}

bool equal_in_g1(const TWord& a, const TWord& b) {
    return normal_form_g1(a) == normal_form_g1(b);
}

bool equal_in_g1_bfs(const TWord& a, const TWord& b) {
    auto closure = [](std::vector<int> start) {
        std::set<std::vector<int>> seen = {start};
        std::queue<std::vector<int>> todo;
        todo.push(std::move(start));
        while (!todo.empty()) {
            std::vector<int> v = std::move(todo.front());
            todo.pop();
            for (size_t k = 0; k + 1 < v.size(); ++k) {
                if (v[k] == v[k + 1]) {
                    std::vector<int> next = v;
                    next.erase(next.begin() + static_cast<long>(k),
                               next.begin() + static_cast<long>(k) + 2);
                    if (seen.insert(next).second) todo.push(std::move(next));
                } else if (commute(v[k], v[k + 1])) {
                    std::vector<int> next = v;
                    std::swap(next[k], next[k + 1]);
                    if (seen.insert(next).second) todo.push(std::move(next));
                }
            }
        }
        return seen;
    };
    std::set<std::vector<int>> ca = closure(erase_signs(a));
    std::set<std::vector<int>> cb = closure(erase_signs(b));
    std::vector<std::vector<int>> common;
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(common));
    return !common.empty();
}

bool equal_in_g2(const QWord& a, const QWord& b) {
    return equal_in_g1(phi(a), phi(b));
}

std::string to_string(const TWord& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out << ' ';
        out << 't' << w[k].index;
        if (w[k].sign < 0) out << "^-1";
    }
    return out.str();
}

std::string to_string(const QWord& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out << ' ';
        out << "q[" << w[k].lo << ',' << w[k].hi << ']';
        if (w[k].sign < 0) out << "^-1";
    }
    return out.str();
}

namespace {

int parse_sign(std::istringstream& in) {
    if (in.peek() == '^') {
        in.get();
        int s;
        if (!(in >> s) || (s != 1 && s != -1))
            throw std::invalid_argument("word parse: exponent must be 1 or -1");
        return s;
    }
    return 1;
}

}  // namespace

TWord parse_t_word(const std::string& text) {
    TWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        std::istringstream t(tok);
        if (t.get() != 't') throw std::invalid_argument("word parse: expected t-letter");
        int i;
        if (!(t >> i)) throw std::invalid_argument("word parse: bad t index");
        w.push_back(TLetter{i, parse_sign(t)});
        if (i < 1) throw std::invalid_argument("word parse: bad t index");
    }
    return w;
}

QWord parse_q_word(const std::string& text) {
    QWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        std::istringstream t(tok);
        int lo, hi;
        char c1, c2, c3;
        t >> c1 >> c2 >> lo >> c3 >> hi;
        if (!t || c1 != 'q' || c2 != '[' || c3 != ',' || t.get() != ']')
            throw std::invalid_argument("word parse: expected q-letter like q[1,3]");
        int sign = parse_sign(t);
        w = std::move(w) + q_gen(lo, hi, sign);
    }
    return w;
}

namespace {

IdentityInstance make_instance(std::string label, const TWord& lhs, const TWord& rhs) {
    bool ok = equal_in_g1(lhs, rhs);
    return {std::move(label), to_string(lhs), to_string(rhs), ok};
}

IdentityInstance make_instance_q(std::string label, const QWord& lhs, const QWord& rhs) {
    bool ok = equal_in_g2(lhs, rhs);
    return {std::move(label), to_string(lhs), to_string(rhs), ok};
}

std::vector<IdentityInstance> family_qchange(int n) {
    std::vector<IdentityInstance> out;
    for (int i = 1; i + 1 <= n; ++i) {
        std::string tag = "qchange i=" + std::to_string(i);
        out.push_back(make_instance(tag + " up-a", q_word(i), q_word(i + 1) + p_word_inverse(i + 1)));
        out.push_back(make_instance(tag + " up-b", q_word(i), p_word(i + 1) + q_word(i + 1)));
        out.push_back(make_instance(tag + " down-a", q_word(i), q_word(i - 1) + p_word(i)));
        out.push_back(make_instance(tag + " down-b", q_word(i), p_word_inverse(i) + q_word(i - 1)));
    }
    return out;
}

std::vector<IdentityInstance> family_tech1(int n) {
    std::vector<IdentityInstance> out;
    for (int j = 2; j <= n; ++j)
        for (int l = 2; l <= j; ++l)
            for (int k = 1; k < l; ++k)
                for (int i = 1; i <= k; ++i) {
                    TWord lhs = q_word(j - 1) + q_word(j - i) + q_word(j - 1) + q_word(l - 1) +
                                q_word(l - k);
                    TWord rhs = q_word(j - (k - i) - 1);
                    for (int s = 0; s <= k - i - 1; ++s)
                        rhs = std::move(rhs) + descending_run(j - (k - i) + s, l - k + 2 + s);
                    for (int s = 0; s <= i - 2; ++s)
                        rhs = std::move(rhs) + descending_run(j - i + 1 + s, l - i + 2 + s);
                    std::ostringstream tag;
                    tag << "tech1 i=" << i << " k=" << k << " l=" << l << " j=" << j;
                    out.push_back(make_instance(tag.str(), lhs, rhs));
                }
    return out;
}

std::vector<IdentityInstance> family_tech2(int n) {
    std::vector<IdentityInstance> out;
    for (int j = 2; j <= n; ++j)
        for (int l = 2; l <= j; ++l)
            for (int k = 1; k < l; ++k)
                for (int i = 1; i <= k; ++i) {
                    TWord lhs = q_word(l - 1) + q_word(j - 1) + q_word(j - i) + q_word(j - 1);
                    TWord rhs;
                    for (int s = l; s <= j - 1; ++s) rhs = std::move(rhs) + p_word(s);
                    for (int s = j - i + 1; s <= j - 1; ++s) rhs = std::move(rhs) + p_word(s);
                    for (int s = j - (k - i) - 1; s >= l - k + 1; --s)
                        rhs = std::move(rhs) + p_word_inverse(s);
                    rhs = std::move(rhs) + q_word(l - k) + q_word(j - (k - i) - 1);
                    std::ostringstream tag;
                    tag << "tech2 i=" << i << " k=" << k << " l=" << l << " j=" << j;
                    out.push_back(make_instance(tag.str(), lhs, rhs));
                }
    return out;
}

std::vector<IdentityInstance> family_comm(int n) {
    std::vector<IdentityInstance> out;
    for (int c = 2; c <= n; ++c)
        for (int b = 2; b <= c; ++b)
            for (int a = 1; a < b; ++a) {
                if (c + 1 <= n) {
                    std::ostringstream tag;
                    tag << "comm up a=" << a << " b=" << b << " c=" << c;
                    out.push_back(make_instance_q(
                        tag.str(), q_gen(a, b) + q_gen(1, c) + q_gen(1, c + 1),
                        q_gen(1, c) + q_gen(1, c + 1) + q_gen(a + 1, b + 1)));
                }
                if (a > 1 && c >= 3) {
                    std::ostringstream tag;
                    tag << "comm down a=" << a << " b=" << b << " c=" << c;
                    out.push_back(make_instance_q(
                        tag.str(), q_gen(a, b) + q_gen(1, c) + q_gen(1, c - 1),
                        q_gen(1, c) + q_gen(1, c - 1) + q_gen(a - 1, b - 1)));
                }
            }
    return out;
}

std::vector<IdentityInstance> family_rel1(int n) {
    std::vector<IdentityInstance> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back(
            make_instance("rel1 phi(psi(t" + std::to_string(i) + "))", phi(psi(t_gen(i))), t_gen(i)));
        out.push_back(make_instance_q("rel1 psi(t" + std::to_string(i) + "^2)",
                                      psi(t_gen(i) + t_gen(i)), {}));
        for (int j = i + 2; j <= n; ++j) {
            std::ostringstream tag;
            tag << "rel1 psi(t" << i << " t" << j << " commute)";
            out.push_back(make_instance_q(tag.str(), psi(t_gen(i) + t_gen(j)),
                                          psi(t_gen(j) + t_gen(i))));
        }
    }
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            std::ostringstream tag;
            tag << "rel1 psi(phi(q[" << i << ',' << j << "]))";
            out.push_back(make_instance_q(tag.str(), psi(phi(q_gen(i, j))), q_gen(i, j)));
            out.push_back(make_instance("rel1 phi(q[" + std::to_string(i) + ',' +
                                            std::to_string(j) + "]^2)",
                                        phi(q_gen(i, j) + q_gen(i, j)), {}));
            for (int l = i + 1; l <= j; ++l)
                for (int k = i; k < l; ++k) {
                    std::ostringstream nest;
                    nest << "rel1 phi-nesting [" << i << ',' << j << "][" << k << ',' << l << ']';
                    out.push_back(make_instance(
                        nest.str(), phi(q_gen(i, j) + q_gen(k, l) + q_gen(i, j)),
                        phi(q_gen(i + j - l, i + j - k))));
                }
        }
    return out;
}

std::vector<IdentityInstance> family_newrel(int n) {
    // (t_i q_{k-1} q_{k-j} q_{k-1})^2 is an identity of the tableau action
    // (checked by the relation suites) but is not derivable in G1; each
    // instance here confirms the G1 normal form stays nonempty.
    std::vector<IdentityInstance> out;
    for (int k = 4; k <= n; ++k)
        for (int j = 3; j < k; ++j)
            for (int i = 1; i + 1 < j; ++i) {
                TWord word = repeat(t_gen(i) + phi(q_gen(j, k)), 2);
                bool trivial = normal_form_g1(word).empty();
                std::ostringstream tag;
                tag << "newrel i=" << i << " j=" << j << " k=" << k << " distinct-from-identity";
                out.push_back({tag.str(), to_string(word), "1", !trivial});
            }
    return out;
}

std::vector<IdentityInstance> family_rel2(int n) {
    // Informational: disjoint-interval commutation is an identity of the
    // tableau action and of the cactus presentation with the newrel family
    // added, but is not derivable in G1 alone.
    std::vector<IdentityInstance> out;
    for (int j = 2; j < n; ++j)
        for (int i = 1; i < j; ++i)
            for (int l = j + 1; l <= n; ++l)
                for (int k = j + 1; k < l; ++k) {
                    TWord ab = phi(q_gen(i, j) + q_gen(k, l));
                    TWord ba = phi(q_gen(k, l) + q_gen(i, j));
                    bool derivable = equal_in_g1(ab, ba);
                    std::ostringstream tag;
                    tag << "rel2 disjoint [" << i << ',' << j << "][" << k << ',' << l
                        << "] outside-g1";
                    out.push_back({tag.str(), to_string(ab), to_string(ba), !derivable});
                }
    return out;
}

}  // namespace

std::vector<IdentityInstance> check_identity_family(const std::string& family, int max_index) {
    if (max_index < 2) throw std::invalid_argument("check_identity_family: max_index too small");
    if (family == "qchange") return family_qchange(max_index);
    if (family == "tech1") return family_tech1(max_index);
    if (family == "tech2") return family_tech2(max_index);
    if (family == "comm") return family_comm(max_index);
    if (family == "rel1") return family_rel1(max_index);
    if (family == "rel2") return family_rel2(max_index);
    if (family == "newrel") return family_newrel(max_index);
    throw std::invalid_argument("check_identity_family: unknown family " + family);
}

}  // namespace bk
