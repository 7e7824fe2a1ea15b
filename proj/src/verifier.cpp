#include "bk/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bk/cactus.hpp"
#include "bk/classic.hpp"
#include "bk/crystal.hpp"
#include "bk/enumerate.hpp"
#include "bk/group_words.hpp"
#include "bk/growth.hpp"
#include "bk/tableau.hpp"

namespace bk {

namespace {

struct Checker {
    Report report;

    void check(bool ok, const std::string& input, const std::string& lhs,
               const std::string& rhs) {
        ++report.instances;
        if (!ok) report.failures.push_back({input, lhs, rhs});
    }

    void check_eq(const SemistandardTableau& lhs, const SemistandardTableau& rhs,
                  const std::string& input) {
        check(lhs == rhs, input, lhs.to_string(), rhs.to_string());
    }

    void check_eq(const Word& lhs, const Word& rhs, const std::string& input) {
        check(lhs == rhs, input, lhs.to_string(), rhs.to_string());
    }

    Report finish() {
        std::sort(report.failures.begin(), report.failures.end(),
                  [](const Failure& a, const Failure& b) {
                      return std::tie(a.input, a.lhs, a.rhs) < std::tie(b.input, b.lhs, b.rhs);
                  });
        return std::move(report);
    }
};

std::vector<SemistandardTableau> tableau_space(int max_cells, int max_entry) {
    std::vector<SemistandardTableau> out;
    for (const auto& shape : partitions_up_to(max_cells))
        for (auto& t : enumerate_ssyt(SkewShape(shape, Partition()), max_entry))
            out.push_back(std::move(t));
    return out;
}

std::vector<SemistandardTableau> skew_tableau_space(int max_cells, int max_entry) {
    std::vector<SemistandardTableau> out;
    for (const auto& outer : partitions_up_to(max_cells))
        for (const auto& inner : partitions_up_to(max_cells)) {
            if (inner == outer || !outer.contains(inner)) continue;
            for (auto& t : enumerate_ssyt(SkewShape(outer, inner), max_entry))
                out.push_back(std::move(t));
        }
    return out;
}

std::vector<Word> word_space(int max_len, int alphabet) {
    std::vector<Word> out;
    for (int len = 0; len <= max_len; ++len)
        for (auto& w : words_of_length(len, alphabet)) out.push_back(std::move(w));
    return out;
}

std::string tag(const SemistandardTableau& t, const std::string& extra) {
    return t.to_string() + " | " + extra;
}

std::string tag(const Word& w, const std::string& extra) {
    return w.to_string() + " | " + extra;
}

// ---------------------------------------------------------------- suites ---

Report bk_basic(const SuiteConfig& cfg) {
    Checker c;
    int n = cfg.max_entry;
    for (const auto& t : tableau_space(cfg.max_cells, n)) {
        for (int i = 1; i < n; ++i)
            c.check_eq(bender_knuth(bender_knuth(t, i), i), t,
                       tag(t, "t" + std::to_string(i) + "^2"));
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                c.check_eq(bender_knuth(bender_knuth(t, i), j),
                           bender_knuth(bender_knuth(t, j), i),
                           tag(t, "t" + std::to_string(i) + " t" + std::to_string(j) +
                                      " commute"));
    }
    return c.finish();
}

Report bk_classic(const SuiteConfig& cfg) {
    Checker c;
    int n = cfg.max_entry;
    for (const auto& t : tableau_space(cfg.max_cells, n)) {
        for (int i = 3; i < n; ++i) {
            std::vector<int> word;
            for (int rep = 0; rep < 4; ++rep) {
                word.push_back(1);
                auto q = evacuation_bk_word(i + 1);
                word.insert(word.end(), q.begin(), q.end());
            }
            c.check_eq(apply_bk_word(t, word), t,
                       tag(t, "(t1 q" + std::to_string(i) + ")^4"));
        }
        std::vector<int> braid;
        for (int rep = 0; rep < 6; ++rep) {
            braid.push_back(1);
            braid.push_back(2);
        }
        c.check_eq(apply_bk_word(t, braid), t, tag(t, "(t1 t2)^6"));
    }
    return c.finish();
}

Report bk_new(const SuiteConfig& cfg) {
    Checker c;
    int n = cfg.max_entry;
    for (const auto& t : tableau_space(cfg.max_cells, n)) {
        for (int k = 4; k <= n; ++k)
            for (int j = 3; j < k; ++j)
                for (int i = 1; i + 1 < j; ++i) {
                    SemistandardTableau u = t;
                    for (int rep = 0; rep < 2; ++rep)
                        u = q_interval(bender_knuth(u, i), j, k);
                    std::ostringstream rel;
                    rel << "(t" << i << " q[" << j << ',' << k << "])^2";
                    c.check_eq(u, t, tag(t, rel.str()));
                }
    }
    return c.finish();
}

Report cactus_q(const SuiteConfig& cfg) {
    Checker c;
    int n = cfg.max_entry;
    for (const auto& t : tableau_space(cfg.max_cells, n)) {
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                std::ostringstream rel;
                rel << "q[" << i << ',' << j << "]^2";
                c.check_eq(q_interval(q_interval(t, i, j), i, j), t, tag(t, rel.str()));
            }
        for (int j = 2; j < n; ++j)
            for (int i = 1; i < j; ++i)
                for (int l = j + 1; l <= n; ++l)
                    for (int k = j + 1; k < l; ++k) {
                        std::ostringstream rel;
                        rel << "q[" << i << ',' << j << "] q[" << k << ',' << l << "] disjoint";
                        c.check_eq(q_interval(q_interval(t, k, l), i, j),
                                   q_interval(q_interval(t, i, j), k, l), tag(t, rel.str()));
                    }
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i)
                for (int l = i + 1; l <= j; ++l)
                    for (int k = i; k < l; ++k) {
                        std::ostringstream rel;
                        rel << "q[" << i << ',' << j << "] q[" << k << ',' << l << "] nesting";
                        c.check_eq(
                            q_interval(q_interval(q_interval(t, i, j), k, l), i, j),
                            q_interval(t, i + j - l, i + j - k), tag(t, rel.str()));
                    }
    }
    return c.finish();
}

Report cactus_tau(const SuiteConfig& cfg) {
    Checker c;
    int n = cfg.max_entry;
    // The slide route is used here; the dual-route suite shows it agrees with
    // the hexagon route on this whole space.  The word space is closed under
    // every tau, so each operator is tabulated once and the relations become
    // permutation compositions.
    std::vector<Word> words = word_space(cfg.max_word_len, n);
    std::map<Word, int> index;
    for (int k = 0; k < static_cast<int>(words.size()); ++k) index[words[static_cast<size_t>(k)]] = k;
    std::map<std::pair<int, int>, std::vector<int>> table;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            std::vector<int>& perm = table[{i, j}];
            perm.reserve(words.size());
            for (const auto& w : words) perm.push_back(index.at(tau_interval_jdt(w, i, j)));
        }
    auto word_of = [&](int k) { return words[static_cast<size_t>(k)]; };
    for (int w = 0; w < static_cast<int>(words.size()); ++w) {
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                const auto& op = table.at({i, j});
                std::ostringstream rel;
                rel << "tau[" << i << ',' << j << "]^2";
                c.check_eq(word_of(op[static_cast<size_t>(op[static_cast<size_t>(w)])]),
                           word_of(w), tag(word_of(w), rel.str()));
            }
        for (int j = 2; j < n; ++j)
            for (int i = 1; i < j; ++i)
                for (int l = j + 1; l <= n; ++l)
                    for (int k = j + 1; k < l; ++k) {
                        const auto& a = table.at({i, j});
                        const auto& b = table.at({k, l});
                        std::ostringstream rel;
                        rel << "tau[" << i << ',' << j << "] tau[" << k << ',' << l
                            << "] disjoint";
                        c.check_eq(word_of(a[static_cast<size_t>(b[static_cast<size_t>(w)])]),
                                   word_of(b[static_cast<size_t>(a[static_cast<size_t>(w)])]),
                                   tag(word_of(w), rel.str()));
                    }
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i)
                for (int l = i + 1; l <= j; ++l)
                    for (int k = i; k < l; ++k) {
                        const auto& outer = table.at({i, j});
                        const auto& mid = table.at({k, l});
                        const auto& conj = table.at({i + j - l, i + j - k});
                        std::ostringstream rel;
                        rel << "tau[" << i << ',' << j << "] tau[" << k << ',' << l
                            << "] nesting";
                        int lhs = outer[static_cast<size_t>(
                            mid[static_cast<size_t>(outer[static_cast<size_t>(w)])])];
                        c.check_eq(word_of(lhs), word_of(conj[static_cast<size_t>(w)]),
                                   tag(word_of(w), rel.str()));
                    }
    }
    return c.finish();
}

bool crystal_connected_tableaux(const SemistandardTableau& a, const SemistandardTableau& b,
                                int hi) {
    if (a == b) return true;
    std::set<SemistandardTableau> seen = {a};
    std::vector<SemistandardTableau> frontier = {a};
    while (!frontier.empty()) {
        std::vector<SemistandardTableau> next;
        for (const auto& t : frontier)
            for (int i = 1; i < hi; ++i)
                for (auto u : {crystal_f(t, i), crystal_e(t, i)})
                    if (u) {
                        if (*u == b) return true;
                        if (seen.insert(*u).second) next.push_back(std::move(*u));
                    }
        frontier = std::move(next);
    }
    return false;
}

Report locality(const SuiteConfig& cfg) {
    Checker c;
    int n = cfg.max_entry;
    for (const auto& t : tableau_space(cfg.max_cells, n)) {
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                SemistandardTableau moved = q_interval(t, i, j);
                std::ostringstream base;
                base << "q[" << i << ',' << j << ']';
                if (i >= 2)
                    c.check_eq(restrict_interval(moved, 1, i - 1, false),
                               restrict_interval(t, 1, i - 1, false),
                               tag(t, base.str() + " clause1 below"));
                if (j < n)
                    c.check_eq(restrict_interval(moved, j + 1, n, false),
                               restrict_interval(t, j + 1, n, false),
                               tag(t, base.str() + " clause1 above"));
                SemistandardTableau window = restrict_interval(t, i, j);
                SemistandardTableau window_moved = restrict_interval(moved, i, j);
                c.check_eq(jdt_rectify(window_moved).straight,
                           evacuation(jdt_rectify(window).straight, j - i + 1),
                           tag(t, base.str() + " clause2 evac"));
                c.check(crystal_connected_tableaux(window, window_moved, j - i + 1),
                        tag(t, base.str() + " clause3 crystal"), window.to_string(),
                        window_moved.to_string());
            }
    }
    return c.finish();
}

SemistandardTableau glue_staircase(const SemistandardTableau& interior, const Word& w) {
    int m = w.length();
    std::vector<std::vector<int>> rows(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
        if (r < m - 1) rows[static_cast<size_t>(r)] = interior.rows()[static_cast<size_t>(r)];
        rows[static_cast<size_t>(r)].push_back(w.at(m - 1 - r) + m - 1);
    }
    return SemistandardTableau::straight(std::move(rows));
}

SemistandardTableau random_interior(std::mt19937_64& rng, int m) {
    // Random semistandard filling of the staircase with m-1 rows and entries
    // at most m-1, built row by row.
    std::vector<std::vector<int>> rows(static_cast<size_t>(m - 1));
    while (true) {
        bool ok = true;
        for (int r = 0; r < m - 1 && ok; ++r) {
            rows[static_cast<size_t>(r)].clear();
            for (int col = 0; col < m - 1 - r && ok; ++col) {
                int lo = col > 0 ? rows[static_cast<size_t>(r)][static_cast<size_t>(col - 1)] : 1;
                int above = r > 0 ? rows[static_cast<size_t>(r - 1)][static_cast<size_t>(col)] : 0;
                lo = std::max(lo, above + 1);
                if (lo > m - 1) {
                    ok = false;
                    break;
                }
                std::uniform_int_distribution<int> pick(lo, m - 1);
                rows[static_cast<size_t>(r)].push_back(pick(rng));
            }
        }
        if (ok) return SemistandardTableau::straight(rows);
    }
}

Report dual_route(const SuiteConfig& cfg) {
    Checker c;
    int n = cfg.max_entry;
    for (const auto& t : tableau_space(cfg.max_cells, n))
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                std::ostringstream rel;
                rel << "q[" << i << ',' << j << "] bk-word vs growth";
                c.check_eq(q_interval(t, i, j), q_interval_growth(t, i, j, n),
                           tag(t, rel.str()));
            }
    for (const auto& w : word_space(cfg.max_word_len, n)) {
        if (w.length() == 0) continue;
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                std::ostringstream rel;
                rel << "tau[" << i << ',' << j << "] hexagon vs slides";
                c.check_eq(tau_interval(w, i, j), tau_interval_jdt(w, i, j),
                           tag(w, rel.str()));
            }
    }
    // Independence of the staircase interior: exhaustive for short words.
    for (int m = 2; m <= std::min(4, cfg.max_word_len); ++m) {
        auto interiors = enumerate_ssyt(SkewShape(Partition::staircase(m - 1), Partition()),
                                        m - 1);
        for (const auto& w : words_of_length(m, n))
            for (int j = 2; j <= n; ++j)
                for (int i = 1; i < j; ++i) {
                    Word expected = tau_interval(w, i, j);
                    for (const auto& interior : interiors) {
                        SemistandardTableau s = glue_staircase(interior, w);
                        Word got = tau_staircase_output(run_boom(s, i, j, n).output, n);
                        std::ostringstream rel;
                        rel << "tau[" << i << ',' << j
                            << "] interior independence: " << interior.to_string();
                        c.check_eq(got, expected, tag(w, rel.str()));
                    }
                    // Conjugated-diagram route on the canonical extension.
                    SemistandardTableau canonical = tau_staircase_input(w);
                    std::ostringstream rel;
                    rel << "boom[" << i << ',' << j << "] direct vs conjugated";
                    c.check_eq(boom_apply(canonical, i, j, n),
                               run_boom(canonical, i, j, n).output, tag(w, rel.str()));
                }
    }
    // Sampled interiors for longer words.
    std::mt19937_64 rng(cfg.seed);
    for (int m = 5; m <= std::min(6, cfg.max_word_len); ++m) {
        for (int sample = 0; sample < 100; ++sample) {
            std::vector<int> letters(static_cast<size_t>(m));
            std::uniform_int_distribution<int> letter(1, n);
            for (auto& x : letters) x = letter(rng);
            Word w(letters, n);
            std::uniform_int_distribution<int> hi(2, n);
            int j = hi(rng);
            std::uniform_int_distribution<int> lo(1, j - 1);
            int i = lo(rng);
            SemistandardTableau s = glue_staircase(random_interior(rng, m), w);
            std::ostringstream rel;
            rel << "tau[" << i << ',' << j << "] sampled interior #" << sample;
            c.check_eq(tau_staircase_output(run_boom(s, i, j, n).output, n),
                       tau_interval(w, i, j), tag(w, rel.str()));
        }
    }
    // Value action vs the position action on permutations (inverse words).
    int perm_len = std::min({5, cfg.max_word_len, n});
    std::vector<int> perm(static_cast<size_t>(perm_len));
    for (int k = 0; k < perm_len; ++k) perm[static_cast<size_t>(k)] = k + 1;
    do {
        Word w(perm, perm_len);
        std::vector<int> inv(static_cast<size_t>(perm_len));
        for (int k = 0; k < perm_len; ++k)
            inv[static_cast<size_t>(w.at(k) - 1)] = k + 1;
        Word winv(inv, perm_len);
        for (int j = 2; j <= perm_len; ++j)
            for (int i = 1; i < j; ++i) {
                Word by_values = tau_interval(w, i, j);
                Word by_positions = tau_positions(winv, i, j);
                std::vector<int> back(static_cast<size_t>(perm_len));
                for (int k = 0; k < perm_len; ++k)
                    back[static_cast<size_t>(by_positions.at(k) - 1)] = k + 1;
                std::ostringstream rel;
                rel << "tau[" << i << ',' << j << "] values vs positions";
                c.check_eq(by_values, Word(back, perm_len), tag(w, rel.str()));
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c.finish();
}

Report crystal_props(const SuiteConfig& cfg) {
    Checker c;
    int n = cfg.max_entry;
    // Slides commute with the crystal operators.
    for (const auto& t : skew_tableau_space(cfg.max_cells, n)) {
        const Partition inner = t.inner();
        for (int r = 0; r < inner.rows(); ++r) {
            int col = inner.part(r) - 1;
            if (inner.part(r + 1) > col) continue;  // not a removable inner corner
            SlideResult slid = jdt_slide_in(t, r, col);
            for (int i = 1; i < n; ++i) {
                auto before = crystal_f(t, i);
                auto after = crystal_f(slid.tableau, i);
                std::ostringstream rel;
                rel << "f" << i << " slide(" << r << ',' << col << ')';
                if (before.has_value() != after.has_value()) {
                    c.check(false, tag(t, rel.str()), before ? "defined" : "undefined",
                            after ? "defined" : "undefined");
                    continue;
                }
                if (before)
                    c.check_eq(jdt_slide_in(*before, r, col).tableau, *after,
                               tag(t, rel.str()));
                else
                    c.check(true, tag(t, rel.str()), "", "");
            }
        }
    }
    // Straight shapes form a single crystal component.
    for (const auto& shape : partitions_up_to(cfg.max_cells)) {
        if (shape.rows() > n) continue;
        auto all = enumerate_ssyt(SkewShape(shape, Partition()), n);
        if (all.empty()) continue;
        std::set<SemistandardTableau> seen = {all.front()};
        std::vector<SemistandardTableau> frontier = {all.front()};
        while (!frontier.empty()) {
            std::vector<SemistandardTableau> next;
            for (const auto& t : frontier)
                for (int i = 1; i < n; ++i)
                    for (auto u : {crystal_f(t, i), crystal_e(t, i)})
                        if (u && seen.insert(*u).second) next.push_back(std::move(*u));
            frontier = std::move(next);
        }
        c.check(seen.size() == all.size(), "component of shape " + shape.to_string(),
                std::to_string(seen.size()), std::to_string(all.size()));
    }
    // Crystal operators preserve the recording tableau.
    for (const auto& w : word_space(cfg.max_word_len, n))
        for (int i = 1; i < n; ++i)
            if (auto moved = crystal_f(w, i)) {
                std::ostringstream rel;
                rel << "f" << i << " preserves Q";
                c.check(rsk(w).recording == rsk(*moved).recording, tag(w, rel.str()),
                        w.to_string(), moved->to_string());
            }
    // Rigidity: within one crystal component, rectification is injective.
    {
        std::set<SemistandardTableau> visited;
        for (const auto& t : skew_tableau_space(cfg.max_cells, n)) {
            if (visited.count(t)) continue;
            std::set<SemistandardTableau> component = {t};
            std::vector<SemistandardTableau> frontier = {t};
            while (!frontier.empty()) {
                std::vector<SemistandardTableau> next;
                for (const auto& u : frontier)
                    for (int i = 1; i < n; ++i)
                        for (auto v : {crystal_f(u, i), crystal_e(u, i)})
                            if (v && component.insert(*v).second)
                                next.push_back(std::move(*v));
                frontier = std::move(next);
            }
            std::map<SemistandardTableau, const SemistandardTableau*> images;
            for (const auto& u : component) {
                visited.insert(u);
                SemistandardTableau rect = jdt_rectify(u).straight;
                auto [it, fresh] = images.emplace(rect, &u);
                c.check(fresh, tag(u, "rigidity"), rect.to_string(),
                        fresh ? "" : it->second->to_string());
            }
        }
    }
    return c.finish();
}

Report group_words_suite(const SuiteConfig& cfg) {
    Checker c;
    for (const std::string family : {"qchange", "tech1", "tech2", "newrel"})
        for (const auto& inst : check_identity_family(family, cfg.max_index))
            c.check(inst.holds, inst.label, inst.lhs, inst.rhs);
    int small = std::min(cfg.max_index, 6);
    for (const std::string family : {"comm", "rel1", "rel2"})
        for (const auto& inst : check_identity_family(family, small))
            c.check(inst.holds, inst.label, inst.lhs, inst.rhs);
    // equal_in_g1 versus brute-force rewriting: build the full rewriting
    // graph on positive words of length <= 8 over t_1..t_4 (cancellation only
    // shortens, commutation preserves length, so reachability inside this
    // space is reachability in the free product) and compare its connected
    // components against the normal form.
    {
        std::vector<std::vector<int>> all = {{}};
        std::map<std::vector<int>, int> id = {{{}, 0}};
        for (size_t head = 0; head < all.size(); ++head) {
            std::vector<int> v = all[head];
            if (v.size() == 8) continue;
            for (int g = 1; g <= 4; ++g) {
                v.push_back(g);
                if (id.emplace(v, static_cast<int>(all.size())).second) all.push_back(v);
                v.pop_back();
            }
        }
        std::vector<int> parent(all.size());
        for (size_t k = 0; k < parent.size(); ++k) parent[k] = static_cast<int>(k);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] =
                    parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
        for (const auto& v : all)
            for (size_t k = 0; k + 1 < v.size(); ++k) {
                if (v[k] == v[k + 1]) {
                    auto u = v;
                    u.erase(u.begin() + static_cast<long>(k),
                            u.begin() + static_cast<long>(k) + 2);
                    unite(id.at(v), id.at(u));
                } else if (std::abs(v[k] - v[k + 1]) > 1) {
                    auto u = v;
                    std::swap(u[k], u[k + 1]);
                    unite(id.at(v), id.at(u));
                }
            }
        std::map<int, std::vector<int>> comp_nf;
        std::map<std::vector<int>, int> nf_comp;
        for (const auto& v : all) {
            TWord w;
            for (int g : v) w.push_back(TLetter{g, 1});
            std::vector<int> nf = normal_form_g1(w);
            TWord nfw;
            for (int g : nf) nfw.push_back(TLetter{g, 1});
            bool ok = normal_form_g1(nfw) == nf;   // idempotent
            int comp = find(id.at(v));
            auto [it, fresh] = comp_nf.emplace(comp, nf);
            ok = ok && it->second == nf;           // constant on components
            auto [it2, fresh2] = nf_comp.emplace(nf, comp);
            ok = ok && it2->second == comp;        // distinct across components
            ok = ok && id.count(nf) && find(id.at(nf)) == comp;  // reachable
            c.check(ok, "normal form at " + to_string(w), to_string(w), to_string(nfw));
        }
    }
    // The pairwise BFS oracle itself, on short words.
    {
        std::vector<TWord> short_words = {{}};
        for (size_t head = 0; head < short_words.size(); ++head) {
            TWord v = short_words[head];
            if (v.size() == 4) continue;
            for (int g = 1; g <= 3; ++g) {
                v.push_back(TLetter{g, 1});
                short_words.push_back(v);
                v.pop_back();
            }
        }
        for (const auto& a : short_words)
            for (const auto& b : short_words)
                c.check(equal_in_g1_bfs(a, b) == equal_in_g1(a, b),
                        "bfs oracle at " + to_string(a) + " vs " + to_string(b),
                        to_string(a), to_string(b));
    }
    {
        TWord braid = repeat(t_gen(1) + t_gen(2), 6);
        c.check(!normal_form_g1(braid).empty(), "(t1 t2)^6 nontrivial in G1",
                to_string(braid), "1");
    }
    return c.finish();
}

Report self_test(const SuiteConfig& cfg) {
    // Deliberately wrong comparison; the harness must report counterexamples.
    Checker c;
    for (const auto& t : tableau_space(std::min(cfg.max_cells, 3), std::min(cfg.max_entry, 3)))
        c.check_eq(bender_knuth(t, 1), bender_knuth(t, 2), tag(t, "t1 = t2 (intended failure)"));
    return c.finish();
}

void check_grid(Checker& c, const GrowthGrid& grid, const std::string& name,
                const std::vector<std::pair<Vertex, std::string>>& expected) {
    for (const auto& [v, label] : expected) {
        std::ostringstream in;
        in << name << " vertex (" << v.first << ',' << v.second << ')';
        bool present = grid.has(v.first, v.second);
        c.check(present && grid.at(v.first, v.second).to_string() == label, in.str(),
                present ? grid.at(v.first, v.second).to_string() : "(absent)", label);
    }
}

}  // namespace

Report golden_examples() {
    Checker c;
    c.report.suite = "golden";
    c.report.config.suite = "golden";

    // Bender-Knuth example: the three-row band of 3's and 4's.
    {
        SemistandardTableau s(Partition({6, 2}),
                              {{3, 3, 4}, {3, 3, 4, 4, 4}, {3, 3, 4}});
        SemistandardTableau expected(Partition({6, 2}),
                                     {{3, 3, 4}, {3, 3, 3, 4, 4}, {4, 4, 4}});
        c.check_eq(bender_knuth(s, 3), expected, tag(s, "t3 band example"));
    }

    // Evacuation triangle with every interior label.
    {
        SemistandardTableau t = SemistandardTableau::straight({{1, 4}, {2}, {3}});
        SemistandardTableau expected = SemistandardTableau::straight({{1, 2}, {3}, {4}});
        c.check_eq(evacuation(t, 4), expected, tag(t, "evacuation"));
        DiagramResult run = run_evac(t, 4, 4);
        c.check_eq(run.output, expected, tag(t, "evacuation growth diagram"));
        check_grid(c, run.grid, "evac",
                   {{{2, 0}, "-"}, {{4, 0}, "-"}, {{6, 0}, "-"}, {{8, 0}, "-"},
                    {{3, 1}, "1"}, {{5, 1}, "1"}, {{7, 1}, "1"},
                    {{4, 2}, "11"}, {{6, 2}, "2"}, {{5, 3}, "21"}});
    }

    // q_[2,4] diagram with every interior label.
    {
        SemistandardTableau t = SemistandardTableau::straight({{1, 2, 4}, {2, 3}, {5}});
        SemistandardTableau expected = SemistandardTableau::straight({{1, 3, 4}, {2, 4}, {5}});
        c.check_eq(q_interval(t, 2, 4), expected, tag(t, "q[2,4]"));
        DiagramResult run = run_evac_interval(t, 2, 4, 5);
        c.check_eq(run.output, expected, tag(t, "q[2,4] growth diagram"));
        check_grid(c, run.grid, "q[2,4]",
                   {{{2, 0}, "-"},  {{4, 0}, "-"},  {{6, 0}, "-"},  {{8, 0}, "-"},
                    {{10, 0}, "-"}, {{3, 1}, "2"},  {{5, 1}, "1"},  {{7, 1}, "1"},
                    {{9, 1}, "1"},  {{4, 2}, "21"}, {{6, 2}, "2"},  {{8, 2}, "11"},
                    {{5, 3}, "31"}, {{7, 3}, "21"}, {{6, 4}, "32"}, {{5, 5}, "321"}});
    }

    // tau_[2,4] hexagon with every label of the worked example.
    {
        Word w = Word::parse("215324", 5);
        c.check_eq(tau_interval(w, 2, 4), Word::parse("215434", 5), tag(w, "tau[2,4]"));
        c.check_eq(tau_interval_jdt(w, 2, 4), Word::parse("215434", 5),
                   tag(w, "tau[2,4] slide route"));
        DiagramResult run = run_boom(tau_staircase_input(w), 2, 4, 5);
        check_grid(
            c, run.grid, "tau[2,4]",
            {{{6, 0}, "-"},        {{8, 0}, "-"},        {{10, 0}, "-"},
             {{12, 0}, "-"},       {{5, 1}, "1"},        {{7, 1}, "2"},
             {{9, 1}, "1"},        {{11, 1}, "1"},       {{13, 1}, "1"},
             {{4, 2}, "21"},       {{6, 2}, "21"},       {{8, 2}, "21"},
             {{10, 2}, "2"},       {{12, 2}, "11"},      {{14, 2}, "21"},
             {{3, 3}, "321"},      {{5, 3}, "311"},      {{7, 3}, "22"},
             {{9, 3}, "31"},       {{11, 3}, "21"},      {{13, 3}, "211"},
             {{15, 3}, "321"},     {{2, 4}, "4321"},     {{4, 4}, "4211"},
             {{6, 4}, "321"},      {{8, 4}, "32"},       {{10, 4}, "32"},
             {{12, 4}, "311"},     {{14, 4}, "3211"},    {{16, 4}, "4321"},
             {{1, 5}, "54321"},    {{3, 5}, "53211"},    {{5, 5}, "4311"},
             {{7, 5}, "421"},      {{11, 5}, "421"},     {{13, 5}, "4211"},
             {{15, 5}, "43211"},   {{17, 5}, "54321"},   {{0, 6}, "54322"},
             {{2, 6}, "553211"},   {{4, 6}, "54211"},    {{6, 6}, "5311"},
             {{12, 6}, "5311"},    {{14, 6}, "53211"},   {{16, 6}, "543211"},
             {{18, 6}, "54322"},   {{1, 7}, "553221"},   {{3, 7}, "554211"},
             {{5, 7}, "64211"},    {{13, 7}, "64211"},   {{15, 7}, "553211"},
             {{17, 7}, "543221"},  {{2, 8}, "554221"},   {{4, 8}, "654211"},
             {{14, 8}, "654211"},  {{16, 8}, "553221"},  {{3, 9}, "654221"},
             {{15, 9}, "654221"},  {{4, 10}, "654321"},  {{14, 10}, "654321"}});
    }

    // Crystal operator on a word and on the matching skew tableau.
    {
        Word w = Word::parse("12442313423211243", 4);
        auto moved = crystal_f(w, 2);
        c.check(moved.has_value() && *moved == Word::parse("12443313423211243", 4),
                tag(w, "f2 word"), moved ? moved->to_string() : "(undefined)",
                "12443313423211243");
        SemistandardTableau t(Partition({8, 5, 5, 4, 3, 2}),
                              {{3},
                               {1, 1, 2, 4},
                               {2},
                               {2, 3},
                               {1, 3, 4},
                               {2, 3},
                               {1, 2, 4, 4}});
        SemistandardTableau expected(Partition({8, 5, 5, 4, 3, 2}),
                                     {{3},
                                      {1, 1, 2, 4},
                                      {2},
                                      {2, 3},
                                      {1, 3, 4},
                                      {3, 3},
                                      {1, 2, 4, 4}});
        auto moved_t = crystal_f(t, 2);
        c.check(moved_t.has_value() && *moved_t == expected, tag(t, "f2 tableau"),
                moved_t ? moved_t->to_string() : "(undefined)", expected.to_string());
    }

    // RSK of the hexagon word feeds the q_[2,4] example input.
    {
        Word w = Word::parse("215324", 5);
        RskPair pair = rsk(w);
        c.check_eq(pair.insertion, SemistandardTableau::straight({{1, 2, 4}, {2, 3}, {5}}),
                   tag(w, "rsk insertion"));
        c.check_eq(jdt_rectify(staircase_tableau(w)).straight, pair.insertion,
                   tag(w, "rsk vs rectification"));
    }

    // The introduction's Knuth-move example for the position action.
    {
        Word w = Word::parse("132", 3);
        c.check_eq(tau_positions(w, 1, 3), Word::parse("312", 3), tag(w, "tau positions"));
        SemistandardTableau q = SemistandardTableau::straight({{1, 2}, {3}});
        c.check_eq(evacuation(q, 3), SemistandardTableau::straight({{1, 3}, {2}}),
                   tag(q, "evacuation of the recording tableau"));
    }

    return c.finish();
}

std::vector<std::string> suite_names() {
    return {"bk-basic",  "bk-classic",    "bk-new",      "cactus-q", "cactus-tau",
            "locality",  "dual-route",    "crystal-props", "group-words", "golden",
            "self-test"};
}

Report run_suite(const SuiteConfig& config) {
    auto start = std::chrono::steady_clock::now();
    Report report;
    if (config.suite == "bk-basic")
        report = bk_basic(config);
    else if (config.suite == "bk-classic")
        report = bk_classic(config);
    else if (config.suite == "bk-new")
        report = bk_new(config);
    else if (config.suite == "cactus-q")
        report = cactus_q(config);
    else if (config.suite == "cactus-tau")
        report = cactus_tau(config);
    else if (config.suite == "locality")
        report = locality(config);
    else if (config.suite == "dual-route")
        report = dual_route(config);
    else if (config.suite == "crystal-props")
        report = crystal_props(config);
    else if (config.suite == "group-words")
        report = group_words_suite(config);
    else if (config.suite == "golden")
        report = golden_examples();
    else if (config.suite == "self-test")
        report = self_test(config);
    else
        throw std::invalid_argument("run_suite: unknown suite " + config.suite);
    report.suite = config.suite;
    report.config = config;
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return report;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["config"] = {{"max_cells", config.max_cells},
                   {"max_entry", config.max_entry},
                   {"max_word_len", config.max_word_len},
                   {"max_index", config.max_index},
                   {"seed", config.seed}};
    j["instances"] = instances;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures)
        j["failures"].push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    j["millis"] = 0;  // kept constant so reports are byte-identical across runs
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << ": " << instances << " instances, " << failures.size()
        << " failures (" << millis << " ms)\n";
    size_t shown = 0;
    for (const auto& f : failures) {
        if (++shown > 20) {
            out << "  ... " << (failures.size() - 20) << " more\n";
            break;
        }
        out << "  FAIL " << f.input << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
    }
    return out.str();
}

}  // namespace bk
