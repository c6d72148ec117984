#include "odkit/pauli_search.hpp"

#include <bit>
#include <numeric>

namespace odkit {

namespace {

inline int parity(unsigned x) { return std::popcount(x) & 1; }

// Defect calculus used below, for units A = U(v,d,e) with
// U[g, g^v] = e * (-1)^{d.(g^v)}:
//   A B^T + B A^T = 0        iff (d^d').(v^v') = 1, else the sum is
//                            2 e e' (-1)^{(d^d').v} U(v^v', d^d');
//   A B^T - B A^T = 0        iff (d^d').(v^v') = 0, else the difference is
//                            2 e e' (-1)^{(d^d').v'} U(v^v', d^d').
// Distinct (c, e) label linearly independent matrices, so a design works
// exactly when the signed defect count in every class nets to zero. The
// search tracks those nets plus, per (pair kind, c), how many pairs are
// still open; the L1 mass of nets can never exceed the open pair count.
struct Searcher {
    unsigned k = 0, n = 0;
    int sides = 1;
    std::vector<i64> type[2];
    std::size_t nu[2] = {0, 0};
    std::uint64_t budget = 0, nodes = 0;
    bool exhausted = false;

    struct Slot {
        int side;
        unsigned v;
    };
    struct Choice {
        int g = -1;
        unsigned d = 0;
        int eps = 1;
    };
    std::vector<Slot> slots;
    std::vector<Choice> chosen;
    std::vector<int> used[2];

    unsigned ug = 1;  // group index stride
    std::vector<int> undecided, l1, net;

    struct Event {
        int pc;
        int cls;  // -1 when the pair was compatible
        int delta;
    };

    int pc_index(int p, unsigned c) const { return p * static_cast<int>(n) + static_cast<int>(c); }
    int class_index(int p, unsigned c, int a, int b, unsigned e) const {
        return static_cast<int>(
            (((static_cast<unsigned>(p) * n + c) * ug + static_cast<unsigned>(a)) * ug +
             static_cast<unsigned>(b)) *
                n +
            e);
    }

    void init(unsigned k_, const std::vector<i64>& tx, const std::vector<i64>* ty,
              std::uint64_t budget_) {
        k = k_;
        n = 1u << k;
        sides = ty ? 2 : 1;
        type[0] = tx;
        if (ty) type[1] = *ty;
        for (int s = 0; s < sides; ++s) {
            i64 total = std::accumulate(type[s].begin(), type[s].end(), i64(0));
            if (total != static_cast<i64>(n)) throw domain_error("type must sum to the order");
            nu[s] = type[s].size();
            used[s].assign(nu[s], 0);
        }
        ug = static_cast<unsigned>(std::max<std::size_t>({nu[0], nu[1], 1}));
        budget = budget_;

        slots.clear();
        if (sides == 1) {
            for (unsigned v = 0; v < n; ++v) slots.push_back({0, v});
        } else {
            for (unsigned v = 0; v < n; ++v) {
                slots.push_back({0, v});
                slots.push_back({1, v});
            }
        }
        chosen.assign(slots.size(), {});

        undecided.assign(3 * n, 0);
        l1.assign(3 * n, 0);
        net.assign(static_cast<std::size_t>(3) * n * ug * ug * n, 0);
        for (int s = 0; s < sides; ++s)
            for (unsigned c = 1; c < n; ++c) undecided[pc_index(s, c)] = static_cast<int>(n / 2);
        if (sides == 2)
            for (unsigned c = 1; c < n; ++c) undecided[pc_index(2, c)] = static_cast<int>(n);
    }

    // Returns false on a pruned contradiction; either way appended events
    // record what must be undone.
    bool apply_pair(const Slot& s1, const Choice& c1, const Slot& s2, const Choice& c2,
                    std::vector<Event>& ev) {
        unsigned c = s1.v ^ s2.v;
        unsigned e = c1.d ^ c2.d;
        int p, cls = -1, delta = 0;
        if (s1.side == s2.side) {
            p = s1.side;
            bool bad = parity(e & c) == 0;
            if (bad) {
                int a = std::min(c1.g, c2.g), b = std::max(c1.g, c2.g);
                delta = c1.eps * c2.eps * (parity(e & s1.v) ? -1 : 1);
                cls = class_index(p, c, a, b, e);
            }
        } else {
            if (c == 0) return true;  // opposite sides, same translation: always compatible
            p = 2;
            bool bad = parity(e & c) == 1;
            if (bad) {
                const Slot& sb = s1.side == 1 ? s1 : s2;
                const Choice& ca = s1.side == 0 ? c1 : c2;
                const Choice& cb = s1.side == 1 ? c1 : c2;
                delta = ca.eps * cb.eps * (parity(e & sb.v) ? -1 : 1);
                cls = class_index(p, c, ca.g, cb.g, e);
            }
        }
        int pc = pc_index(p, c);
        undecided[pc] -= 1;
        if (cls >= 0) {
            int before = net[cls];
            net[cls] += delta;
            l1[pc] += std::abs(net[cls]) - std::abs(before);
        }
        ev.push_back({pc, cls, delta});
        return l1[pc] <= undecided[pc];
    }

    void undo(const std::vector<Event>& ev) {
        for (auto it = ev.rbegin(); it != ev.rend(); ++it) {
            if (it->cls >= 0) {
                int before = net[it->cls];
                net[it->cls] -= it->delta;
                l1[it->pc] += std::abs(net[it->cls]) - std::abs(before);
            }
            undecided[it->pc] += 1;
        }
    }

    bool dfs(std::size_t depth) {
        if (depth == slots.size()) return true;
        const Slot& slot = slots[depth];
        int side = slot.side;
        std::vector<Event> ev;
        ev.reserve(depth);
        for (int g = 0; g < static_cast<int>(nu[side]); ++g) {
            if (used[side][g] >= type[side][g]) continue;
            if (used[side][g] == 0) {
                bool shadowed = false;
                for (int g2 = 0; g2 < g; ++g2)
                    if (type[side][g2] == type[side][g] && used[side][g2] == 0) {
                        shadowed = true;
                        break;
                    }
                if (shadowed) continue;  // identical unopened group exists earlier
            }
            bool opening = used[side][g] == 0;
            for (unsigned d = 0; d < n; ++d) {
                if (depth == 0 && d != 0) break;  // global Z-translation fixes one d
                for (int ei = 0; ei < (opening ? 1 : 2); ++ei) {
                    if (++nodes > budget) {
                        exhausted = true;
                        return false;
                    }
                    Choice ch{g, d, ei == 0 ? 1 : -1};
                    ev.clear();
                    bool ok = true;
                    for (std::size_t j = 0; j < depth && ok; ++j)
                        ok = apply_pair(slot, ch, slots[j], chosen[j], ev);
                    if (ok) {
                        chosen[depth] = ch;
                        used[side][g] += 1;
                        if (dfs(depth + 1)) return true;
                        used[side][g] -= 1;
                    }
                    undo(ev);
                    if (exhausted) return false;
                }
            }
        }
        return false;
    }

    OrthogonalDesign build(int side) const {
        IntMatrix entries(n, n);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (slots[i].side != side) continue;
            const Choice& ch = chosen[i];
            for (unsigned row = 0; row < n; ++row) {
                unsigned col = row ^ slots[i].v;
                i64 sgn = ch.eps * (parity(ch.d & col) ? -1 : 1);
                entries(row, col) = sgn * (ch.g + 1);
            }
        }
        return OrthogonalDesign(type[side], entries);
    }
};

}  // namespace

std::optional<OrthogonalDesign> search_full_od(unsigned k, const std::vector<i64>& type,
                                               const PauliSearchOptions& opt,
                                               PauliSearchStats* stats) {
    if (k == 0 || k > 6) throw domain_error("unit search supports orders 2..64");
    Searcher s;
    s.init(k, type, nullptr, opt.node_budget);
    bool found = s.dfs(0);
    if (stats) {
        stats->nodes = s.nodes;
        stats->budget_exhausted = s.exhausted;
    }
    if (!found) return std::nullopt;
    OrthogonalDesign d = s.build(0);
    VerifyResult v = verify_od(d);
    if (!v.ok) throw domain_error("unit search internal inconsistency: " + v.message);
    return d;
}

std::optional<AmicableODPair> search_amicable_pair(unsigned k, const std::vector<i64>& type_x,
                                                   const std::vector<i64>& type_y,
                                                   const PauliSearchOptions& opt,
                                                   PauliSearchStats* stats) {
    if (k == 0 || k > 6) throw domain_error("unit search supports orders 2..64");
    Searcher s;
    s.init(k, type_x, &type_y, opt.node_budget);
    bool found = s.dfs(0);
    if (stats) {
        stats->nodes = s.nodes;
        stats->budget_exhausted = s.exhausted;
    }
    if (!found) return std::nullopt;
    AmicableODPair pair{s.build(0), s.build(1)};
    for (const auto& d : {pair.x, pair.y}) {
        VerifyResult v = verify_od(d);
        if (!v.ok) throw domain_error("unit search internal inconsistency: " + v.message);
    }
    for (std::size_t i = 0; i < pair.x.num_vars(); ++i)
        for (std::size_t j = 0; j < pair.y.num_vars(); ++j)
            if (!amicable(pair.x.coefficient(i), pair.y.coefficient(j)))
                throw domain_error("unit search internal inconsistency: cross pair not amicable");
    return pair;
}

}  // namespace odkit
