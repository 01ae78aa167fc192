#include "schubmf/demolition.hpp"

#include "schubmf/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubmf {

RichardsonQuadruple::RichardsonQuadruple(Partition lam, Partition mu, RectangleFrame frame)
    : lam_(std::move(lam)), mu_(std::move(mu)), frame_(frame) {
    if (frame_.rows < 0 || frame_.cols < 0)
        throw std::invalid_argument("RichardsonQuadruple: negative frame");
    if (!fits(lam_, frame_) || !fits(mu_, frame_))
        throw std::invalid_argument("RichardsonQuadruple: shapes must fit the frame");
    if (overlaps(lam_, mu_, frame_))
        throw std::invalid_argument("RichardsonQuadruple: lam and rotate(mu) overlap");
}

RichardsonQuadruple RichardsonQuadruple::conjugated() const {
    return {conjugate(lam_), conjugate(mu_), transpose(frame_)};
}

RichardsonQuadruple RichardsonQuadruple::swapped() const {
    return {mu_, lam_, frame_};
}

namespace {

struct LineCover {
    int lam_boxes = 0;
    int mu_boxes = 0;
    int capacity = 0;
};

LineCover cover(const RichardsonQuadruple& q, LineRef line) {
    const RectangleFrame f = q.frame();
    if (line.axis == LineAxis::Row) {
        if (line.index < 1 || line.index > f.rows)
            throw std::invalid_argument("line_status: row index out of range");
        return {q.lam().part(line.index), q.mu().part(f.rows + 1 - line.index), f.cols};
    }
    if (line.index < 1 || line.index > f.cols)
        throw std::invalid_argument("line_status: column index out of range");
    return {conjugate(q.lam()).part(line.index),
            conjugate(q.mu()).part(f.cols + 1 - line.index), f.rows};
}

LineStatus status_of(const LineCover& c) {
    // capacity 0 counts as Full (vacuously covered); a degenerate frame
    // demolishes down to 0x0.
    int sum = c.lam_boxes + c.mu_boxes;
    if (sum == c.capacity) return LineStatus::Full;
    if (sum == 0) return LineStatus::Empty;
    if (c.mu_boxes == 0) return LineStatus::OnlyLam;
    if (c.lam_boxes == 0) return LineStatus::OnlyMu;
    return LineStatus::Mixed;
}

/// Shape with column j of its diagram deleted (rows of length >= j lose
/// one box).
Partition delete_diagram_column(const Partition& p, int j) {
    std::vector<int> out;
    for (int v : p.parts()) {
        int w = v >= j ? v - 1 : v;
        if (w > 0) out.push_back(w);
    }
    return Partition(std::move(out));
}

/// Mu with the frame column j deleted; rotate(mu) occupies column j in
/// the rows whose parts reach past cols - j from the right.
Partition delete_mu_frame_column(const Partition& mu, int cols, int j) {
    return delete_diagram_column(mu, cols + 1 - j);
}

} // namespace

LineStatus line_status(const RichardsonQuadruple& q, LineRef line) {
    return status_of(cover(q, line));
}

bool is_basic(const RichardsonQuadruple& q) {
    return full_lines(q).empty();
}

std::vector<LineRef> full_lines(const RichardsonQuadruple& q) {
    std::vector<LineRef> out;
    const Partition lamc = conjugate(q.lam());
    const Partition muc = conjugate(q.mu());
    const RectangleFrame f = q.frame();
    for (int j = 1; j <= f.cols; ++j)
        if (lamc.part(j) + muc.part(f.cols + 1 - j) == f.rows)
            out.push_back({LineAxis::Column, j});
    for (int i = 1; i <= f.rows; ++i)
        if (q.lam().part(i) + q.mu().part(f.rows + 1 - i) == f.cols)
            out.push_back({LineAxis::Row, i});
    return out;
}

std::vector<LineRef> empty_lines(const RichardsonQuadruple& q) {
    std::vector<LineRef> out;
    for (int j = 1; j <= q.frame().cols; ++j)
        if (line_status(q, {LineAxis::Column, j}) == LineStatus::Empty)
            out.push_back({LineAxis::Column, j});
    for (int i = 1; i <= q.frame().rows; ++i)
        if (line_status(q, {LineAxis::Row, i}) == LineStatus::Empty)
            out.push_back({LineAxis::Row, i});
    return out;
}

RichardsonQuadruple basic_demolition(const RichardsonQuadruple& q) {
    const RectangleFrame f = q.frame();
    const Partition lamc = conjugate(q.lam());
    const Partition muc = conjugate(q.mu());

    std::vector<int> full_cols, full_rows;
    for (int j = 1; j <= f.cols; ++j)
        if (lamc.part(j) + muc.part(f.cols + 1 - j) == f.rows) full_cols.push_back(j);
    for (int i = 1; i <= f.rows; ++i)
        if (q.lam().part(i) + q.mu().part(f.rows + 1 - i) == f.cols) full_rows.push_back(i);

    auto full_cols_upto = [&](int col) {
        return static_cast<int>(std::upper_bound(full_cols.begin(), full_cols.end(), col) -
                                full_cols.begin());
    };

    std::vector<int> new_lam, new_mu;
    for (int i = 1; i <= f.rows; ++i) {
        if (std::binary_search(full_rows.begin(), full_rows.end(), i)) continue;
        int v = q.lam().part(i) - full_cols_upto(q.lam().part(i));
        if (v > 0) new_lam.push_back(v);
    }
    for (int m = 1; m <= static_cast<int>(q.mu().length()); ++m) {
        int frame_row = f.rows + 1 - m;
        if (std::binary_search(full_rows.begin(), full_rows.end(), frame_row)) continue;
        // Columns covered by this part: (cols - mu_m, cols].
        int removed = static_cast<int>(full_cols.size()) - full_cols_upto(f.cols - q.mu().part(m));
        int v = q.mu().part(m) - removed;
        if (v > 0) new_mu.push_back(v);
    }

    RectangleFrame nf{f.rows - static_cast<int>(full_rows.size()),
                      f.cols - static_cast<int>(full_cols.size())};
    return {Partition(std::move(new_lam)), Partition(std::move(new_mu)), nf};
}

RichardsonQuadruple remove_full_line(const RichardsonQuadruple& q, LineRef line) {
    if (line_status(q, line) != LineStatus::Full)
        throw std::invalid_argument("remove_full_line: line is not full");
    const RectangleFrame f = q.frame();
    if (line.axis == LineAxis::Row) {
        Partition lam = q.lam();
        Partition mu = q.mu();
        if (int v = q.lam().part(line.index); v > 0) lam = lam.without_part(v);
        if (int v = q.mu().part(f.rows + 1 - line.index); v > 0) mu = mu.without_part(v);
        return {std::move(lam), std::move(mu), {f.rows - 1, f.cols}};
    }
    return {delete_diagram_column(q.lam(), line.index),
            delete_mu_frame_column(q.mu(), f.cols, line.index),
            {f.rows, f.cols - 1}};
}

RichardsonQuadruple remove_empty_line(const RichardsonQuadruple& q, LineRef line) {
    if (line_status(q, line) != LineStatus::Empty)
        throw std::invalid_argument("remove_empty_line: line is not empty");
    RectangleFrame f = q.frame();
    if (line.axis == LineAxis::Row)
        --f.rows;
    else
        --f.cols;
    return {q.lam(), q.mu(), f};
}

std::vector<LineRef> stembridge_lines(const RichardsonQuadruple& q) {
    std::vector<LineRef> out;
    for (int j = 1; j <= q.frame().cols; ++j) {
        LineStatus s = line_status(q, {LineAxis::Column, j});
        if (s == LineStatus::OnlyLam || s == LineStatus::OnlyMu)
            out.push_back({LineAxis::Column, j});
    }
    for (int i = 1; i <= q.frame().rows; ++i) {
        LineStatus s = line_status(q, {LineAxis::Row, i});
        if (s == LineStatus::OnlyLam || s == LineStatus::OnlyMu)
            out.push_back({LineAxis::Row, i});
    }
    return out;
}

RichardsonQuadruple stembridge_demolish(const RichardsonQuadruple& q, LineRef line) {
    LineStatus s = line_status(q, line);
    if (s != LineStatus::OnlyLam && s != LineStatus::OnlyMu)
        throw std::invalid_argument("stembridge_demolish: line must hold boxes of exactly one shape");
    const RectangleFrame f = q.frame();
    if (line.axis == LineAxis::Row) {
        RectangleFrame nf{f.rows - 1, f.cols};
        if (s == LineStatus::OnlyLam)
            return {q.lam().without_part(q.lam().part(line.index)), q.mu(), nf};
        return {q.lam(), q.mu().without_part(q.mu().part(f.rows + 1 - line.index)), nf};
    }
    RectangleFrame nf{f.rows, f.cols - 1};
    if (s == LineStatus::OnlyLam)
        return {delete_diagram_column(q.lam(), line.index), q.mu(), nf};
    return {q.lam(), delete_mu_frame_column(q.mu(), f.cols, line.index), nf};
}

RichardsonQuadruple remove_line(const RichardsonQuadruple& q, LineRef line) {
    switch (line_status(q, line)) {
        case LineStatus::Full:
            return remove_full_line(q, line);
        case LineStatus::OnlyLam:
        case LineStatus::OnlyMu:
            return stembridge_demolish(q, line);
        default:
            throw std::invalid_argument("remove_line: line is empty or mixed");
    }
}

bool is_inductive(const RichardsonQuadruple& q, LineRef line, MultCase c) {
    if (!is_basic(q))
        throw std::invalid_argument("is_inductive: quadruple must be basic");
    if (!satisfies_mult_case(q, c))
        throw std::invalid_argument("is_inductive: quadruple is not in the given case");
    LineStatus s = line_status(q, line);
    if (s != LineStatus::OnlyLam && s != LineStatus::OnlyMu)
        throw std::invalid_argument("is_inductive: not a stembridge line");
    RichardsonQuadruple demolished = stembridge_demolish(q, line);
    return is_basic(demolished) && satisfies_mult_case(demolished, c);
}

RotatedCorners rotated_corners(const Partition& mu, RectangleFrame frame) {
    std::vector<Cell> cs = corners(mu);
    auto rotate = [&](Cell c) {
        return Cell{frame.rows + 1 - c.row, frame.cols + 1 - c.col};
    };
    return {rotate(cs.front()), rotate(cs.back())};
}

bool is_well_ordered(const RichardsonQuadruple& q) {
    if (classify_shape(q.lam()) != ShapeClass::FatHook ||
        classify_shape(q.mu()) != ShapeClass::FatHook)
        throw std::invalid_argument("is_well_ordered: both shapes must be fat hooks");
    std::vector<Cell> lc = corners(q.lam());
    Cell b = lc.front(), a = lc.back();
    RotatedCorners rc = rotated_corners(q.mu(), q.frame());
    return a.row < rc.x.row && b.row < rc.y.row;
}

Reduction propose_reduction(const RichardsonQuadruple& q) {
    if (!is_basic(q))
        throw std::invalid_argument("propose_reduction: quadruple must be basic");
    if (distinct_part_sizes(q.lam()) < 2 || distinct_part_sizes(q.mu()) < 2)
        throw std::invalid_argument("propose_reduction: both shapes need two distinct part sizes");

    const std::vector<LineRef> lines = stembridge_lines(q);
    for (LineRef line : lines)
        if (is_inductive(q, line, MultCase::I))
            return {Reduction::Kind::InductiveLines, {line}, Reduction::Side::Lam, false};

    // Two-step demolitions: the second index is relative to the
    // quadruple after the first removal, and the first removal may have
    // left that line full.
    for (LineRef first : lines) {
        RichardsonQuadruple q1 = stembridge_demolish(q, first);
        std::vector<LineRef> candidates;
        for (int j = 1; j <= q1.frame().cols; ++j) candidates.push_back({LineAxis::Column, j});
        for (int i = 1; i <= q1.frame().rows; ++i) candidates.push_back({LineAxis::Row, i});
        for (LineRef second : candidates) {
            LineStatus s = line_status(q1, second);
            if (s == LineStatus::Empty || s == LineStatus::Mixed) continue;
            RichardsonQuadruple q2 = remove_line(q1, second);
            if (is_basic(q2) && satisfies_mult_case(q2, MultCase::I))
                return {Reduction::Kind::InductiveLines, {first, second},
                        Reduction::Side::Lam, false};
        }
    }

    if (is_hook(q.mu()))
        return {Reduction::Kind::HookCase, {}, Reduction::Side::Mu, false};
    if (is_hook(q.lam()))
        return {Reduction::Kind::HookCase, {}, Reduction::Side::Lam, false};

    if (classify_shape(q.lam()) == ShapeClass::FatHook &&
        classify_shape(q.mu()) == ShapeClass::FatHook) {
        if (is_well_ordered(q))
            return {Reduction::Kind::WellOrdered, {}, Reduction::Side::Lam, false};
        if (is_well_ordered(q.conjugated()))
            return {Reduction::Kind::WellOrdered, {}, Reduction::Side::Lam, true};
    }
    throw std::logic_error("propose_reduction: no alternative verified");
}

} // namespace schubmf
