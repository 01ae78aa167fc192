#include "schubmf/lr.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace schubmf {

SkewShape::SkewShape(Partition inner, Partition outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("SkewShape: inner must be contained in outer");
}

LrFilling::LrFilling(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.outer().length())
        throw std::invalid_argument("LrFilling: one entry list per outer row required");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int want = shape_.outer().parts()[i] - shape_.inner().part(static_cast<int>(i) + 1);
        if (static_cast<int>(rows_[i].size()) != want)
            throw std::invalid_argument("LrFilling: row does not cover the skew boxes exactly");
        for (int e : rows_[i])
            if (e < 1) throw std::invalid_argument("LrFilling: entries must be positive");
    }
}

std::vector<int> LrFilling::reading_word() const {
    std::vector<int> word;
    for (const auto& row : rows_)
        for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
    return word;
}

std::vector<int> LrFilling::content() const {
    std::vector<int> counts;
    for (const auto& row : rows_)
        for (int e : row) {
            if (static_cast<std::size_t>(e) > counts.size()) counts.resize(static_cast<std::size_t>(e), 0);
            ++counts[static_cast<std::size_t>(e) - 1];
        }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

bool is_ballot(std::span<const int> word) {
    std::vector<int> counts;
    for (int v : word) {
        if (v < 1) return false;
        if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
        ++counts[static_cast<std::size_t>(v) - 1];
        if (v >= 2 && counts[static_cast<std::size_t>(v) - 1] > counts[static_cast<std::size_t>(v) - 2])
            return false;
    }
    return true;
}

FillingCheck validate_filling(const LrFilling& f) {
    const Partition& inner = f.shape().inner();
    const Partition& outer = f.shape().outer();
    const auto& rows = f.rows();
    // Rows weakly increase left to right.
    for (const auto& row : rows)
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j - 1] > row[j]) return {false, "row entries not weakly increasing"};
    // Columns strictly increase top to bottom. Row i occupies columns
    // inner_i+1 .. outer_i.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        int lo_prev = inner.part(static_cast<int>(i));
        int lo = inner.part(static_cast<int>(i) + 1);
        int hi = outer.part(static_cast<int>(i) + 1);
        for (int c = lo_prev + 1; c <= hi; ++c) {
            int above = rows[i - 1][static_cast<std::size_t>(c - lo_prev) - 1];
            int here = rows[i][static_cast<std::size_t>(c - lo) - 1];
            if (above >= here) return {false, "column entries not strictly increasing"};
        }
    }
    if (!is_ballot(f.reading_word())) return {false, "reading word is not a ballot sequence"};
    return {true, {}};
}

namespace {

struct Box {
    int row;  // 1-based
    int col;  // 1-based
};

struct Enumerator {
    const SkewShape& shape;
    const Partition& content;
    const std::function<bool(const LrFilling&)>& visit;
    std::vector<Box> boxes;                 // reading order
    std::vector<std::vector<int>> rows;     // entries being built
    std::vector<int> used;                  // per value, boxes assigned so far
    std::uint64_t count = 0;
    bool stopped = false;

    bool run() {
        const Partition& inner = shape.inner();
        const Partition& outer = shape.outer();
        for (int i = 1; i <= static_cast<int>(outer.length()); ++i)
            for (int c = outer.part(i); c > inner.part(i); --c)
                boxes.push_back({i, c});
        rows.assign(outer.length(), {});
        for (int i = 1; i <= static_cast<int>(outer.length()); ++i)
            rows[static_cast<std::size_t>(i) - 1]
                .assign(static_cast<std::size_t>(outer.part(i) - inner.part(i)), 0);
        used.assign(content.length(), 0);
        place(0);
        return !stopped;
    }

    int& entry_at(int row, int col) {
        return rows[static_cast<std::size_t>(row) - 1]
                   [static_cast<std::size_t>(col - shape.inner().part(row)) - 1];
    }

    bool in_skew(int row, int col) const {
        if (row < 1 || row > static_cast<int>(shape.outer().length())) return false;
        return col > shape.inner().part(row) && col <= shape.outer().part(row);
    }

    void place(std::size_t idx) {
        if (stopped) return;
        if (idx == boxes.size()) {
            ++count;
            if (!visit(LrFilling(shape, rows))) stopped = true;
            return;
        }
        const Box b = boxes[idx];
        // Upper bounds from neighbors filled earlier in reading order:
        // the box to the right (same row) and, below-left constraint is
        // handled when that box is reached. The box above (previous row)
        // gives a strict lower bound.
        int hi = static_cast<int>(content.length());
        if (in_skew(b.row, b.col + 1)) hi = std::min(hi, entry_at(b.row, b.col + 1));
        int lo = 1;
        if (in_skew(b.row - 1, b.col)) lo = entry_at(b.row - 1, b.col) + 1;
        for (int e = lo; e <= hi; ++e) {
            auto ei = static_cast<std::size_t>(e) - 1;
            if (used[ei] >= content.part(e)) continue;
            if (e >= 2 && used[ei] >= used[ei - 1]) continue; // ballot prefix
            ++used[ei];
            entry_at(b.row, b.col) = e;
            place(idx + 1);
            --used[ei];
            if (stopped) return;
        }
    }
};

} // namespace

std::uint64_t for_each_lr_filling(const SkewShape& shape, const Partition& content,
                                  const std::function<bool(const LrFilling&)>& visit) {
    if (shape.box_count() != content.size()) return 0;
    Enumerator en{shape, content, visit, {}, {}, {}, 0, false};
    en.run();
    return en.count;
}

std::vector<LrFilling> enumerate_lr_fillings(const SkewShape& shape, const Partition& content,
                                             std::uint64_t cap) {
    std::vector<LrFilling> out;
    for_each_lr_filling(shape, content, [&](const LrFilling& f) {
        out.push_back(f);
        return cap == 0 || out.size() < cap;
    });
    return out;
}

std::uint64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                             std::uint64_t cap) {
    if (!nu.contains(lam)) return 0;
    if (lam.size() + mu.size() != nu.size()) return 0;
    std::uint64_t n = 0;
    for_each_lr_filling(SkewShape(lam, nu), mu, [&](const LrFilling&) {
        if (n == std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("lr_coefficient: counter overflow");
        ++n;
        return cap == 0 || n < cap;
    });
    return n;
}

std::uint64_t Expansion::coefficient(const Partition& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? 0 : it->second;
}

void Expansion::set_term(Partition nu, std::uint64_t coeff) {
    if (coeff == 0) {
        terms_.erase(nu);
        return;
    }
    if (!fits(nu, frame_))
        throw std::invalid_argument("Expansion: term does not fit the frame");
    terms_[std::move(nu)] = coeff;
}

Expansion expand_product(const Partition& lam, const Partition& mu, RectangleFrame frame) {
    if (!fits(lam, frame) || !fits(mu, frame))
        throw std::invalid_argument("expand_product: shapes must fit the frame");
    Expansion result(frame);
    if (overlaps(lam, mu, frame)) return result;
    for (const Partition& nu : partitions_of_size_in(lam.size() + mu.size(), frame)) {
        if (!nu.contains(lam)) continue;
        std::uint64_t c = lr_coefficient(lam, mu, nu);
        if (c > 0) result.set_term(nu, c);
    }
    return result;
}

bool has_multiplicity_bruteforce(const Partition& lam, const Partition& mu,
                                 RectangleFrame frame) {
    if (!fits(lam, frame) || !fits(mu, frame))
        throw std::invalid_argument("has_multiplicity_bruteforce: shapes must fit the frame");
    if (overlaps(lam, mu, frame)) return false;
    for (const Partition& nu : partitions_of_size_in(lam.size() + mu.size(), frame)) {
        if (!nu.contains(lam)) continue;
        if (lr_coefficient(lam, mu, nu, 2) >= 2) return true;
    }
    return false;
}

} // namespace schubmf
