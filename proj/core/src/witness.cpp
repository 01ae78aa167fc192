#include "schubmf/witness.hpp"

#include "schubmf/classifier.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace schubmf {

namespace {

struct LabeledCell {
    int row;
    int col;
    int label;
};

std::string line_str(LineRef line) {
    return (line.axis == LineAxis::Row ? "row " : "column ") + std::to_string(line.index);
}

/// Left-justifies a cell collection against lam: per row, entries keep
/// their column order but pack to the columns right of lam. Returns
/// nullopt when the implied outer shape is not a partition.
std::optional<LrFilling> assemble(const Partition& lam, std::vector<LabeledCell> cells) {
    std::sort(cells.begin(), cells.end(), [](const LabeledCell& a, const LabeledCell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i - 1].row == cells[i].row && cells[i - 1].col == cells[i].col)
            return std::nullopt;

    int max_row = static_cast<int>(lam.length());
    for (const LabeledCell& c : cells) max_row = std::max(max_row, c.row);
    if (!cells.empty() && cells.front().row < 1) return std::nullopt;

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(max_row));
    for (const LabeledCell& c : cells)
        rows[static_cast<std::size_t>(c.row) - 1].push_back(c.label);

    std::vector<int> outer_parts;
    for (int i = 1; i <= max_row; ++i)
        outer_parts.push_back(lam.part(i) + static_cast<int>(rows[static_cast<std::size_t>(i) - 1].size()));
    while (!outer_parts.empty() && outer_parts.back() == 0) {
        outer_parts.pop_back();
        rows.pop_back();
    }
    try {
        Partition outer(std::move(outer_parts));
        return LrFilling(SkewShape(lam, outer), std::move(rows));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::vector<LabeledCell> cells_of(const LrFilling& f) {
    std::vector<LabeledCell> out;
    const Partition& inner = f.shape().inner();
    for (int i = 1; i <= static_cast<int>(f.rows().size()); ++i) {
        const auto& row = f.rows()[static_cast<std::size_t>(i) - 1];
        for (int t = 1; t <= static_cast<int>(row.size()); ++t)
            out.push_back({i, inner.part(i) + t, row[static_cast<std::size_t>(t) - 1]});
    }
    return out;
}

std::optional<MultiplicityWitness> try_witness(const RichardsonQuadruple& q, const LrFilling& f1,
                                               const LrFilling& f2,
                                               std::vector<std::string> notes) {
    if (f1.shape() != f2.shape()) return std::nullopt;
    if (f1.shape().inner() != q.lam()) return std::nullopt;
    if (!fits(f1.shape().outer(), q.frame())) return std::nullopt;
    if (f1.rows() == f2.rows()) return std::nullopt;
    if (Partition(f1.content()) != q.mu() || Partition(f2.content()) != q.mu())
        return std::nullopt;
    if (!validate_filling(f1).ok || !validate_filling(f2).ok) return std::nullopt;
    return MultiplicityWitness{f1.shape().outer(), f1, f2, std::move(notes)};
}

MultiplicityWitness search_witness(const RichardsonQuadruple& q, std::string note) {
    std::optional<MultiplicityWitness> w = find_witness(q);
    if (!w)
        throw std::logic_error("witness search failed on a quadruple expected to carry multiplicity");
    w->notes.insert(w->notes.begin(), std::move(note));
    return *w;
}

// ---------------------------------------------------------------------------
// Hook base case

struct HookIndices {
    int r; // first row shorter than lam_1
    int s; // first row shorter than lam_r
};

HookIndices hook_indices(const Partition& lam) {
    int r = 2;
    while (lam.part(r) >= lam.first()) ++r;
    int s = r + 1;
    while (lam.part(s) >= lam.part(r)) ++s;
    return {r, s};
}

/// Horizontal strip of b ones (at least one in rows 1 and r, row s not
/// filled to capacity) plus one labeled box at the end of rows 2..a+2
/// except row r; the second filling re-labels the rightmost 1 of row r,
/// shifts the column of labels below it down by one, and turns the
/// label s-1 of row s back into a 1. Requires s <= a+2 so that row s
/// carries a labeled box.
std::optional<MultiplicityWitness> hook_straight(const RichardsonQuadruple& q,
                                                 std::string note) {
    const Partition& lam = q.lam();
    const Partition& mu = q.mu();
    const int ell = q.frame().rows;
    const int kay = q.frame().cols;
    const int b = mu.first();
    const int a = static_cast<int>(mu.length()) - 1;
    const auto [r, s] = hook_indices(lam);
    if (s > a + 2) return std::nullopt;
    if (a + 2 > ell) return std::nullopt;

    std::vector<int> cap(static_cast<std::size_t>(ell) + 1, 0);
    std::vector<int> low(static_cast<std::size_t>(ell) + 1, 0);
    cap[1] = kay - lam.first();
    for (int i = 2; i <= ell; ++i) cap[static_cast<std::size_t>(i)] = lam.part(i - 1) - lam.part(i);
    low[1] = 1;
    low[static_cast<std::size_t>(r)] = 1;

    std::vector<int> x(cap);
    x[static_cast<std::size_t>(s)] = cap[static_cast<std::size_t>(s)] - 1;
    long long total = 0;
    for (int i = 1; i <= ell; ++i) total += x[static_cast<std::size_t>(i)];
    if (total < b) return std::nullopt;
    long long excess = total - b;
    for (int i = ell; i >= 1 && excess > 0; --i) {
        auto ii = static_cast<std::size_t>(i);
        int d = static_cast<int>(std::min<long long>(excess, x[ii] - low[ii]));
        x[ii] -= d;
        excess -= d;
    }
    if (excess > 0) return std::nullopt;

    std::vector<LabeledCell> cells;
    for (int i = 1; i <= ell; ++i)
        for (int t = 1; t <= x[static_cast<std::size_t>(i)]; ++t)
            cells.push_back({i, lam.part(i) + t, 1});
    for (int i = 2; i <= a + 2; ++i) {
        if (i == r) continue;
        cells.push_back({i, lam.part(i) + x[static_cast<std::size_t>(i)] + 1, i < r ? i : i - 1});
    }
    std::optional<LrFilling> f1 = assemble(lam, cells);
    if (!f1) return std::nullopt;

    std::vector<std::vector<int>> rows2 = f1->rows();
    auto row_of = [&](int i) -> std::vector<int>& { return rows2[static_cast<std::size_t>(i) - 1]; };
    if (x[static_cast<std::size_t>(r)] < 1) return std::nullopt;
    row_of(r)[static_cast<std::size_t>(x[static_cast<std::size_t>(r)]) - 1] = r;
    for (int i = r + 1; i < s; ++i) {
        if (row_of(i).size() != 1) return std::nullopt;
        row_of(i).back() += 1;
    }
    if (row_of(s).empty()) return std::nullopt;
    row_of(s).back() = 1;
    LrFilling f2(f1->shape(), std::move(rows2));

    return try_witness(q, *f1, f2, {std::move(note)});
}

// ---------------------------------------------------------------------------
// Well-ordered fat hook base case

std::optional<MultiplicityWitness> wellordered_tiles(const RichardsonQuadruple& q) {
    const Partition& lam = q.lam();
    const Partition& mu = q.mu();
    const int ell = q.frame().rows;
    const int kay = q.frame().cols;

    const std::vector<Cell> lc = corners(lam);
    const int cap_p = lc.front().col;
    const int cap_q = lc.back().col, row_a = lc.back().row;
    const std::vector<Cell> mc = corners(mu);
    const int big = mu.first(), small = mu.last();
    const int x = mc.front().row;            // rows of the wide part
    const int y = static_cast<int>(mu.length());
    const int below_a = ell - row_a;
    if (below_a >= y) return std::nullopt;   // tile refill needs strictly fewer slots than y

    const int shorts = big - small - 1;
    const int talls = small - 1;
    std::vector<int> avail;
    for (int c = kay - big; c <= kay - 1; ++c)
        if (c != cap_p && c != cap_q) avail.push_back(c);
    if (static_cast<int>(avail.size()) < shorts + talls) return std::nullopt;

    const Partition lamc = conjugate(lam);
    std::vector<LabeledCell> shared;
    auto add_column = [&](int col, const std::vector<int>& labels) -> bool {
        int base = lamc.part(col);
        if (base + static_cast<int>(labels.size()) > ell) return false;
        for (int t = 1; t <= static_cast<int>(labels.size()); ++t)
            shared.push_back({base + t, col, labels[static_cast<std::size_t>(t) - 1]});
        return true;
    };
    auto run = [](int from, int to) {
        std::vector<int> v;
        for (int t = from; t <= to; ++t) v.push_back(t);
        return v;
    };

    for (int idx = 0; idx < shorts; ++idx)
        if (!add_column(avail[static_cast<std::size_t>(idx)], run(1, x))) return std::nullopt;
    for (int idx = 0; idx < talls; ++idx)
        if (!add_column(avail[avail.size() - static_cast<std::size_t>(talls) + static_cast<std::size_t>(idx)],
                        run(1, y)))
            return std::nullopt;
    if (lamc.part(kay) != 0) return std::nullopt;
    shared.push_back({1, kay, 1});

    const int split = y - (below_a - x); // first filling places 2..split under B
    auto column_b = [&](bool first) { return first ? run(2, split) : run(1, split - 1); };
    auto column_a = [&](bool first) {
        std::vector<int> v = first ? run(1, x) : run(2, x);
        std::vector<int> tail = first ? run(split + 1, y) : run(split, y);
        v.insert(v.end(), tail.begin(), tail.end());
        return v;
    };

    std::vector<LabeledCell> c1 = shared, c2 = shared;
    std::vector<LabeledCell>* sets[2] = {&c1, &c2};
    for (int which = 0; which < 2; ++which) {
        bool first = which == 0;
        int base_b = lamc.part(cap_p);
        const std::vector<int> lb = column_b(first);
        if (base_b + static_cast<int>(lb.size()) > ell) return std::nullopt;
        for (int t = 1; t <= static_cast<int>(lb.size()); ++t)
            sets[which]->push_back({base_b + t, cap_p, lb[static_cast<std::size_t>(t) - 1]});
        int base_a = lamc.part(cap_q);
        const std::vector<int> la = column_a(first);
        if (base_a + static_cast<int>(la.size()) > ell) return std::nullopt;
        for (int t = 1; t <= static_cast<int>(la.size()); ++t)
            sets[which]->push_back({base_a + t, cap_q, la[static_cast<std::size_t>(t) - 1]});
    }

    std::optional<LrFilling> f1 = assemble(lam, c1);
    std::optional<LrFilling> f2 = assemble(lam, c2);
    if (!f1 || !f2) return std::nullopt;
    return try_witness(q, *f1, *f2, {"well-ordered tile construction"});
}

// ---------------------------------------------------------------------------
// Two-row rectangle base (mu = (g, g))

std::optional<MultiplicityWitness> two_row_base(const RichardsonQuadruple& q) {
    const Partition& lam = q.lam();
    const int ell = q.frame().rows;
    const int g = q.mu().first();

    std::vector<int> rows{1};
    std::vector<int> caps{q.frame().cols - lam.first()};
    for (int i = 2; i <= static_cast<int>(lam.length()) + 1; ++i) {
        int cap = lam.part(i - 1) - lam.part(i);
        if (cap > 0 && i <= ell) {
            rows.push_back(i);
            caps.push_back(cap);
        }
    }
    const bool pin_bottom = static_cast<int>(lam.length()) == ell - 1;

    std::vector<int> x(rows.size(), 0);
    int attempts = 0;
    std::optional<MultiplicityWitness> found;

    // A candidate is a strip assignment x over `rows` plus four blank rows.
    // Entry rows: the strip 1s (last one a blank where marked) followed by
    // the 2s sitting under the previous row's unblanked 1s.
    auto build = [&](const std::vector<int>& b_rows) -> bool {
        std::map<int, int> strip;
        for (std::size_t idx = 0; idx < rows.size(); ++idx)
            if (x[idx] > 0) strip[rows[idx]] = x[idx];
        auto blanked = [&](int row) {
            return std::find(b_rows.begin(), b_rows.end(), row) != b_rows.end();
        };
        int max_row = static_cast<int>(lam.length());
        for (auto [row, cnt] : strip) {
            int twos = cnt - (blanked(row) ? 1 : 0);
            if (twos > 0 && row + 1 > ell) return false; // 2s would leave the frame
            max_row = std::max(max_row, twos > 0 ? row + 1 : row);
        }

        std::vector<std::vector<int>> entries(static_cast<std::size_t>(max_row));
        std::vector<std::pair<int, int>> blank_slots; // (row, entry index)
        for (auto [row, cnt] : strip) {
            auto& e = entries[static_cast<std::size_t>(row) - 1];
            for (int t = 0; t < cnt; ++t) e.push_back(1);
            if (blanked(row)) blank_slots.emplace_back(row, static_cast<int>(e.size()) - 1);
        }
        if (blank_slots.size() != 4) return false;
        for (auto [row, cnt] : strip) {
            int twos = cnt - (blanked(row) ? 1 : 0);
            auto& below = entries[static_cast<std::size_t>(row)];
            for (int t = 0; t < twos; ++t) below.push_back(2);
        }
        std::sort(blank_slots.begin(), blank_slots.end());

        std::vector<int> outer_parts;
        for (int i = 1; i <= max_row; ++i)
            outer_parts.push_back(lam.part(i) +
                                  static_cast<int>(entries[static_cast<std::size_t>(i) - 1].size()));
        while (!outer_parts.empty() && outer_parts.back() == 0) {
            outer_parts.pop_back();
            entries.pop_back();
        }
        std::optional<LrFilling> f1, f2;
        try {
            Partition outer(outer_parts);
            if (!fits(outer, q.frame())) return false;
            SkewShape shape(lam, outer);
            auto apply = [&](std::array<int, 4> labels) {
                auto rows_copy = entries;
                for (std::size_t j = 0; j < 4; ++j)
                    rows_copy[static_cast<std::size_t>(blank_slots[j].first) - 1]
                             [static_cast<std::size_t>(blank_slots[j].second)] = labels[j];
                return LrFilling(shape, std::move(rows_copy));
            };
            f1 = apply({1, 1, 2, 2});
            f2 = apply({1, 2, 1, 2});
        } catch (const std::invalid_argument&) {
            return false;
        }
        auto w = try_witness(q, *f1, *f2, {"two-row rectangle base: blank completion"});
        if (w) {
            found = std::move(w);
            return true;
        }
        return false;
    };

    auto choose_blanks = [&]() -> bool {
        std::vector<int> used;
        for (std::size_t idx = 0; idx < rows.size(); ++idx)
            if (x[idx] > 0) used.push_back(rows[idx]);
        if (used.size() < 4) return false;
        if (pin_bottom &&
            (std::find(used.begin(), used.end(), ell) == used.end() || x[rows.size() - 1] != 1))
            return false;
        std::size_t n = used.size();
        for (std::size_t i = 0; i + 3 < n; ++i)
            for (std::size_t j = i + 1; j + 2 < n; ++j)
                for (std::size_t k2 = j + 1; k2 + 1 < n; ++k2)
                    for (std::size_t l = k2 + 1; l < n; ++l) {
                        if (pin_bottom && used[l] != ell) continue;
                        if (++attempts > 50000) return false;
                        if (build({used[i], used[j], used[k2], used[l]})) return true;
                    }
        return false;
    };

    std::function<bool(std::size_t, int)> rec = [&](std::size_t idx, int remaining) -> bool {
        if (attempts > 50000) return false;
        if (idx == rows.size()) return remaining == 0 && choose_blanks();
        int rest_cap = 0;
        for (std::size_t j = idx + 1; j < rows.size(); ++j) rest_cap += caps[j];
        int hi = std::min(caps[idx], remaining);
        if (pin_bottom && rows[idx] == ell) hi = std::min(hi, 1);
        for (int v = hi; v >= 0; --v) {
            if (remaining - v > rest_cap) continue;
            if (pin_bottom && rows[idx] == ell && v != 1) continue;
            x[idx] = v;
            if (rec(idx + 1, remaining - v)) return true;
        }
        x[idx] = 0;
        return false;
    };
    rec(0, g + 2);
    return found;
}

// ---------------------------------------------------------------------------
// Reduced base lam = (k-1, 2, 1^(l-3)), mu = ((k-2)^h)

bool reduced_caseII_form(const RichardsonQuadruple& q) {
    const Partition& lam = q.lam();
    const Partition& mu = q.mu();
    const int ell = q.frame().rows, kay = q.frame().cols;
    if (ell < 4 || kay < 4) return false;
    if (static_cast<int>(lam.length()) != ell - 1) return false;
    if (lam.first() != kay - 1 || lam.part(2) != 2) return false;
    for (int i = 3; i <= ell - 1; ++i)
        if (lam.part(i) != 1) return false;
    int h = static_cast<int>(mu.length());
    if (distinct_part_sizes(mu) != 1 || mu.first() != kay - 2) return false;
    return h >= 2 && h <= ell - 2;
}

std::optional<MultiplicityWitness> reduced_caseII_fillings(const RichardsonQuadruple& q) {
    const Partition& lam = q.lam();
    const int ell = q.frame().rows, kay = q.frame().cols;
    const int h = static_cast<int>(q.mu().length());

    auto build = [&](bool swap_cols) -> std::optional<LrFilling> {
        std::vector<LabeledCell> cells;
        cells.push_back({1, kay, 1});
        for (int i = 2; i <= h; ++i) cells.push_back({i, kay - 1, swap_cols ? i - 1 : i});
        for (int j = 3; j <= kay - 2; ++j)
            for (int i = 2; i <= h + 1; ++i) cells.push_back({i, j, i - 1});
        for (int i = 3; i <= h + 1; ++i) cells.push_back({i, 2, swap_cols ? i - 1 : i - 2});
        cells.push_back({ell, 1, h});
        return assemble(lam, cells);
    };
    std::optional<LrFilling> f1 = build(false);
    std::optional<LrFilling> f2 = build(true);
    if (!f1 || !f2) return std::nullopt;
    return try_witness(q, *f1, *f2, {"reduced staircase base: column table"});
}

// ---------------------------------------------------------------------------
// Fat hook against a wide rectangle (column tables F_h / G_h)

struct CaseIIIParams {
    int c, d, a, b; // lam = (c^d, a^b)
    int g, h;       // mu = (g^h)
};

std::optional<CaseIIIParams> caseIII_params(const RichardsonQuadruple& q) {
    const Partition& lam = q.lam();
    const Partition& mu = q.mu();
    if (classify_shape(lam) != ShapeClass::FatHook || distinct_part_sizes(mu) != 1)
        return std::nullopt;
    std::vector<Cell> cs = corners(lam);
    CaseIIIParams p;
    p.c = lam.first();
    p.d = cs.front().row;
    p.a = lam.last();
    p.b = static_cast<int>(lam.length()) - p.d;
    p.g = mu.first();
    p.h = static_cast<int>(mu.length());
    return p;
}

bool caseIII_in_range(const RichardsonQuadruple& q, const CaseIIIParams& p) {
    const int ell = q.frame().rows, kay = q.frame().cols;
    return shortness(q.lam(), q.frame()) >= 2 && p.g >= 3 && p.g <= kay - 3 && p.h >= 3 &&
           p.h <= ell - 3 && p.g <= kay - p.a && p.h < ell - p.d;
}

std::optional<MultiplicityWitness> caseIII_fillings(const RichardsonQuadruple& q,
                                                    const CaseIIIParams& p,
                                                    bool drop_from_right) {
    const Partition& lam = q.lam();
    const Partition lamc = conjugate(lam);
    const int ell = q.frame().rows, kay = q.frame().cols;
    const int h_eff = std::min(p.h, p.b + 1);

    std::vector<int> others;
    for (int j = p.a + 1; j <= kay - 2; ++j)
        if (j != p.c - 1 && j != p.c) others.push_back(j);
    int to_drop = (kay - p.a - 1) - p.g;
    if (to_drop < 0) return std::nullopt;
    if (to_drop > static_cast<int>(others.size())) return std::nullopt;
    if (drop_from_right)
        others.erase(others.end() - to_drop, others.end());
    else
        others.erase(others.begin(), others.begin() + to_drop);

    auto run = [](int from, int to) {
        std::vector<int> v;
        for (int t = from; t <= to; ++t) v.push_back(t);
        return v;
    };

    auto build = [&](bool second) -> std::optional<LrFilling> {
        std::vector<LabeledCell> cells;
        auto add_col = [&](int col, std::vector<int> labels) -> bool {
            int base = lamc.part(col);
            if (base + static_cast<int>(labels.size()) > ell) return false;
            for (int t = 1; t <= static_cast<int>(labels.size()); ++t)
                cells.push_back({base + t, col, labels[static_cast<std::size_t>(t) - 1]});
            return true;
        };

        std::vector<int> col_cm1 = run(1, h_eff - 2); // column c-1
        std::vector<int> col_c = run(2, h_eff - 1);   // column c
        if (second) {
            col_cm1.push_back(h_eff - 1);
            col_c.back() = h_eff;
        } else {
            col_cm1.push_back(h_eff);
        }

        if (!add_col(p.c - 1, col_cm1)) return std::nullopt;
        if (!add_col(p.c, col_c)) return std::nullopt;
        if (!add_col(kay - 1, run(1, h_eff - 1))) return std::nullopt;
        if (!add_col(kay, {1})) return std::nullopt;
        for (int j : others)
            if (!add_col(j, run(1, h_eff))) return std::nullopt;
        if (p.g == kay - p.a) {
            if (!add_col(1, run(1, h_eff))) return std::nullopt;
            if (!add_col(2, {h_eff - 1, h_eff})) return std::nullopt;
            if (!add_col(3, {h_eff})) return std::nullopt;
        } else {
            if (!add_col(1, {h_eff - 1, h_eff})) return std::nullopt;
            if (!add_col(2, {h_eff})) return std::nullopt;
        }
        std::optional<LrFilling> f = assemble(lam, cells);
        if (!f) return std::nullopt;
        if (p.h > h_eff) {
            // Extend the first g columns of the packed filling downward.
            std::vector<LabeledCell> extended = cells_of(*f);
            Partition heights = conjugate(f->shape().outer());
            for (int j = 1; j <= p.g; ++j) {
                int base = heights.part(j);
                for (int t = 1; t <= p.h - h_eff; ++t)
                    extended.push_back({base + t, j, h_eff + t});
            }
            f = assemble(lam, extended);
            if (!f) return std::nullopt;
        }
        return f;
    };

    std::optional<LrFilling> f1 = build(false);
    std::optional<LrFilling> f2 = build(true);
    if (!f1 || !f2) return std::nullopt;
    return try_witness(q, *f1, *f2, {"fat-hook/rectangle column table"});
}

// ---------------------------------------------------------------------------
// Reduction driver helpers

struct RemovedLine {
    LineAxis axis;
    int value; // removed part (row) or column height (column)
};

RemovedLine removed_value(const RichardsonQuadruple& q, LineRef line) {
    LineStatus s = line_status(q, line);
    const RectangleFrame f = q.frame();
    if (line.axis == LineAxis::Row) {
        int v = s == LineStatus::OnlyLam ? q.lam().part(line.index)
                                         : q.mu().part(f.rows + 1 - line.index);
        return {LineAxis::Row, v};
    }
    int v = s == LineStatus::OnlyLam ? conjugate(q.lam()).part(line.index)
                                     : conjugate(q.mu()).part(f.cols + 1 - line.index);
    return {LineAxis::Column, v};
}

Partition lift_full_column(RectangleFrame frame_before, const Partition& nu_small) {
    RectangleFrame small{frame_before.rows, frame_before.cols - 1};
    return rotate_complement(rotate_complement(nu_small, small), frame_before);
}

Partition lift_full_row(RectangleFrame frame_before, const Partition& nu_small) {
    RectangleFrame tframe{frame_before.cols, frame_before.rows};
    return conjugate(lift_full_column(tframe, conjugate(nu_small)));
}

Partition lift_stembridge(const RemovedLine& removed, const Partition& nu_small) {
    if (removed.axis == LineAxis::Row) {
        if (removed.value == 0) return nu_small;
        return nu_small.with_part(removed.value);
    }
    if (removed.value == 0) return nu_small;
    return conjugate(conjugate(nu_small).with_part(removed.value));
}

Partition reduce_to_nu(const RichardsonQuadruple& q, std::vector<std::string>& notes, int depth);

Partition reduce_via_line(const RichardsonQuadruple& q, LineRef line,
                          std::vector<std::string>& notes, int depth) {
    RemovedLine removed = removed_value(q, line);
    notes.push_back("stembridge demolition of " + line_str(line));
    Partition nu = reduce_to_nu(stembridge_demolish(q, line), notes, depth + 1);
    return lift_stembridge(removed, nu);
}

Partition reduce_caseII(const RichardsonQuadruple& q, std::vector<std::string>& notes, int depth) {
    const int g = q.mu().first();
    const int h = static_cast<int>(q.mu().length());
    if (h == 2 || g == 2 || reduced_caseII_form(q)) {
        MultiplicityWitness w = witness_caseII_base(q);
        notes.insert(notes.end(), w.notes.begin(), w.notes.end());
        return w.nu;
    }
    for (LineRef line : stembridge_lines(q))
        if (is_inductive(q, line, MultCase::II)) return reduce_via_line(q, line, notes, depth);
    for (LineRef line : stembridge_lines(q)) {
        RichardsonQuadruple q1 = stembridge_demolish(q, line);
        if (classify(q1.lam(), q1.mu(), q1.frame()).outcome == Outcome::HasMultiplicity) {
            RemovedLine removed = removed_value(q, line);
            notes.push_back("stembridge demolition of " + line_str(line) + " (leaves the case)");
            Partition nu = reduce_to_nu(q1, notes, depth + 1);
            return lift_stembridge(removed, nu);
        }
    }
    notes.push_back("no reducing line; witness located by search");
    return search_witness(q, "search").nu;
}

Partition reduce_caseIII(const RichardsonQuadruple& q, std::vector<std::string>& notes, int depth) {
    std::optional<CaseIIIParams> p = caseIII_params(q);
    if (p && caseIII_in_range(q, *p)) {
        MultiplicityWitness w = witness_caseIII(q);
        notes.insert(notes.end(), w.notes.begin(), w.notes.end());
        return w.nu;
    }
    if (p && p->h >= q.frame().rows - p->d) {
        RichardsonQuadruple qc = q.conjugated();
        std::optional<CaseIIIParams> pc = caseIII_params(qc);
        if (pc && satisfies_mult_case(qc, MultCase::III) && caseIII_in_range(qc, *pc)) {
            notes.push_back("conjugated the frame");
            MultiplicityWitness w = witness_caseIII(qc);
            notes.insert(notes.end(), w.notes.begin(), w.notes.end());
            return conjugate(w.nu);
        }
    }
    for (LineRef line : stembridge_lines(q))
        if (is_inductive(q, line, MultCase::III)) return reduce_via_line(q, line, notes, depth);
    for (LineRef line : stembridge_lines(q)) {
        RichardsonQuadruple q1 = stembridge_demolish(q, line);
        if (classify(q1.lam(), q1.mu(), q1.frame()).outcome == Outcome::HasMultiplicity) {
            RemovedLine removed = removed_value(q, line);
            notes.push_back("stembridge demolition of " + line_str(line) + " (leaves the case)");
            Partition nu = reduce_to_nu(q1, notes, depth + 1);
            return lift_stembridge(removed, nu);
        }
    }
    notes.push_back("no reducing line; witness located by search");
    return search_witness(q, "search").nu;
}

Partition reduce_to_nu(const RichardsonQuadruple& q, std::vector<std::string>& notes, int depth) {
    if (depth > 400) throw std::logic_error("witness reduction recursion too deep");

    std::vector<LineRef> full = full_lines(q);
    if (!full.empty()) {
        LineRef line = full.front();
        notes.push_back("removed full " + line_str(line));
        Partition nu = reduce_to_nu(remove_full_line(q, line), notes, depth + 1);
        return line.axis == LineAxis::Column ? lift_full_column(q.frame(), nu)
                                             : lift_full_row(q.frame(), nu);
    }
    std::vector<LineRef> empty = empty_lines(q);
    if (!empty.empty()) {
        LineRef line = empty.front();
        notes.push_back("removed empty " + line_str(line));
        return reduce_to_nu(remove_empty_line(q, line), notes, depth + 1);
    }

    std::optional<MultCase> mc = multiplicity_case(q);
    if (!mc) throw std::logic_error("reduction reached a multiplicity-free quadruple");

    if (*mc == MultCase::I) {
        Reduction red = propose_reduction(q);
        if (red.kind == Reduction::Kind::InductiveLines) {
            struct Step {
                bool full;
                RectangleFrame frame_before;
                RemovedLine removed;
            };
            std::vector<Step> steps;
            RichardsonQuadruple cur = q;
            for (LineRef line : red.lines) {
                if (line_status(cur, line) == LineStatus::Full) {
                    steps.push_back({true, cur.frame(), {line.axis, 0}});
                    notes.push_back("removed full " + line_str(line));
                    cur = remove_full_line(cur, line);
                } else {
                    steps.push_back({false, cur.frame(), removed_value(cur, line)});
                    notes.push_back("stembridge demolition of " + line_str(line));
                    cur = stembridge_demolish(cur, line);
                }
            }
            Partition nu = reduce_to_nu(cur, notes, depth + 1);
            for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
                if (it->full)
                    nu = it->removed.axis == LineAxis::Column
                             ? lift_full_column(it->frame_before, nu)
                             : lift_full_row(it->frame_before, nu);
                else
                    nu = lift_stembridge(it->removed, nu);
            }
            return nu;
        }
        if (red.kind == Reduction::Kind::HookCase) {
            notes.push_back(red.hook == Reduction::Side::Mu ? "hook base case"
                                                            : "hook base case (shapes swapped)");
            MultiplicityWitness w =
                witness_hook_case(red.hook == Reduction::Side::Mu ? q : q.swapped());
            notes.insert(notes.end(), w.notes.begin(), w.notes.end());
            return w.nu;
        }
        if (!red.conjugated) {
            notes.push_back("well-ordered base case");
            MultiplicityWitness w = witness_wellordered_case(q);
            notes.insert(notes.end(), w.notes.begin(), w.notes.end());
            return w.nu;
        }
        notes.push_back("well-ordered base case on the conjugate");
        MultiplicityWitness w = witness_wellordered_case(q.conjugated());
        notes.insert(notes.end(), w.notes.begin(), w.notes.end());
        return conjugate(w.nu);
    }

    RichardsonQuadruple qn = q;
    MultCase cn = *mc;
    if (*mc == MultCase::IV) {
        qn = q.swapped();
        notes.push_back("swapped the shapes");
        cn = satisfies_mult_case(qn, MultCase::II) ? MultCase::II : MultCase::III;
    }
    return cn == MultCase::II ? reduce_caseII(qn, notes, depth) : reduce_caseIII(qn, notes, depth);
}

} // namespace

std::optional<MultiplicityWitness> find_witness(const RichardsonQuadruple& q) {
    for (const Partition& nu : partitions_of_size_in(q.lam().size() + q.mu().size(), q.frame())) {
        if (!nu.contains(q.lam())) continue;
        std::vector<LrFilling> fillings = enumerate_lr_fillings(SkewShape(q.lam(), nu), q.mu(), 2);
        if (fillings.size() >= 2)
            return MultiplicityWitness{nu, fillings[0], fillings[1], {}};
    }
    return std::nullopt;
}

MultiplicityWitness witness_hook_case(const RichardsonQuadruple& q) {
    if (!is_basic(q)) throw std::invalid_argument("witness_hook_case: quadruple must be basic");
    if (!is_hook(q.mu())) throw std::invalid_argument("witness_hook_case: mu must be a hook");
    if (distinct_part_sizes(q.lam()) < 2)
        throw std::invalid_argument("witness_hook_case: lam needs two distinct part sizes");

    if (std::optional<MultiplicityWitness> w = hook_straight(q, "hook strip construction"))
        return *w;

    RichardsonQuadruple qc = q.conjugated();
    if (std::optional<MultiplicityWitness> wc = hook_straight(qc, "")) {
        Partition nu = conjugate(wc->nu);
        std::vector<LrFilling> fillings =
            enumerate_lr_fillings(SkewShape(q.lam(), nu), q.mu(), 2);
        if (fillings.size() == 2)
            if (std::optional<MultiplicityWitness> w = try_witness(
                    q, fillings[0], fillings[1],
                    {"hook strip construction on the conjugate; fillings re-enumerated"}))
                return *w;
    }
    return search_witness(q, "hook surgery out of range on both orientations");
}

MultiplicityWitness witness_wellordered_case(const RichardsonQuadruple& q) {
    if (!is_basic(q))
        throw std::invalid_argument("witness_wellordered_case: quadruple must be basic");
    if (!is_well_ordered(q))
        throw std::invalid_argument("witness_wellordered_case: quadruple must be well-ordered");
    if (std::optional<MultiplicityWitness> w = wellordered_tiles(q)) return *w;
    return search_witness(q, "tile refill out of range (column below A longer than mu)");
}

MultiplicityWitness witness_caseII_base(const RichardsonQuadruple& q) {
    if (!is_basic(q)) throw std::invalid_argument("witness_caseII_base: quadruple must be basic");
    const Partition& mu = q.mu();
    const int ell = q.frame().rows, kay = q.frame().cols;
    const int g = mu.first();
    const int h = static_cast<int>(mu.length());
    const bool rect = distinct_part_sizes(mu) == 1;

    if (rect && h == 2 && distinct_part_sizes(q.lam()) >= 3 && g >= 2 && g <= kay - 2 &&
        ell >= 4) {
        if (std::optional<MultiplicityWitness> w = two_row_base(q)) return *w;
        return search_witness(q, "two-row blank completion failed; witness located by search");
    }
    if (rect && g == 2 && distinct_part_sizes(q.lam()) >= 3 && h >= 2 && h <= ell - 2) {
        RichardsonQuadruple qc = q.conjugated();
        if (std::optional<MultiplicityWitness> wc = two_row_base(qc)) {
            Partition nu = conjugate(wc->nu);
            std::vector<LrFilling> fillings =
                enumerate_lr_fillings(SkewShape(q.lam(), nu), q.mu(), 2);
            if (fillings.size() == 2)
                if (std::optional<MultiplicityWitness> w = try_witness(
                        q, fillings[0], fillings[1],
                        {"two-row base on the conjugate; fillings re-enumerated"}))
                    return *w;
        }
        return search_witness(q, "conjugated two-row completion failed; witness located by search");
    }
    if (reduced_caseII_form(q)) {
        if (std::optional<MultiplicityWitness> w = reduced_caseII_fillings(q)) return *w;
        return search_witness(q, "reduced staircase table failed; witness located by search");
    }
    throw std::invalid_argument("witness_caseII_base: not a base configuration");
}

MultiplicityWitness witness_caseIII(const RichardsonQuadruple& q) {
    if (!is_basic(q)) throw std::invalid_argument("witness_caseIII: quadruple must be basic");
    std::optional<CaseIIIParams> p = caseIII_params(q);
    if (!p) throw std::invalid_argument("witness_caseIII: need a fat hook against a rectangle");
    if (!caseIII_in_range(q, *p))
        throw std::invalid_argument("witness_caseIII: parameters out of range");

    if (std::optional<MultiplicityWitness> w = caseIII_fillings(q, *p, false)) return *w;
    if (std::optional<MultiplicityWitness> w = caseIII_fillings(q, *p, true)) return *w;
    return search_witness(q, "column table failed on both trims; witness located by search");
}

MultiplicityWitness witness_via_reduction(const RichardsonQuadruple& q) {
    Verdict verdict = classify(q.lam(), q.mu(), q.frame());
    if (verdict.outcome != Outcome::HasMultiplicity)
        throw std::invalid_argument("witness_via_reduction: product has no multiplicity");

    std::vector<std::string> notes;
    Partition nu = reduce_to_nu(q, notes, 0);
    std::vector<LrFilling> fillings = enumerate_lr_fillings(SkewShape(q.lam(), nu), q.mu(), 2);
    if (fillings.size() < 2)
        throw std::logic_error("witness_via_reduction: lifted shape lost multiplicity");
    std::optional<MultiplicityWitness> w = try_witness(q, fillings[0], fillings[1], notes);
    if (!w) throw std::logic_error("witness_via_reduction: lifted witness failed validation");
    return *w;
}

} // namespace schubmf
