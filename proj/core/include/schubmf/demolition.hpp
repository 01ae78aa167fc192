#pragma once

#include "schubmf/partition.hpp"

#include <vector>

namespace schubmf {

/// (lam, mu, frame) with both shapes inside the frame and lam disjoint
/// from mu rotated 180 degrees into the bottom-right corner.
class RichardsonQuadruple {
public:
    /// Throws std::invalid_argument if a shape does not fit or the two
    /// placements overlap.
    RichardsonQuadruple(Partition lam, Partition mu, RectangleFrame frame);

    const Partition& lam() const noexcept { return lam_; }
    const Partition& mu() const noexcept { return mu_; }
    RectangleFrame frame() const noexcept { return frame_; }

    /// Same shapes in the transposed frame.
    RichardsonQuadruple conjugated() const;
    /// lam and mu exchanged (the rotation criterion is symmetric).
    RichardsonQuadruple swapped() const;

    friend bool operator==(const RichardsonQuadruple&, const RichardsonQuadruple&) = default;

private:
    Partition lam_;
    Partition mu_;
    RectangleFrame frame_;
};

enum class LineAxis { Row, Column };

/// One row or column of the frame, 1-based.
struct LineRef {
    LineAxis axis = LineAxis::Row;
    int index = 0;

    friend bool operator==(const LineRef&, const LineRef&) = default;
};

/// Coverage of a line by lam ∪ rotate(mu). Full takes precedence over
/// the single-shape statuses: a line covered entirely by one shape is
/// Full, not OnlyLam/OnlyMu.
enum class LineStatus { Empty, OnlyLam, OnlyMu, Mixed, Full };

/// The four multiplicity cases of the classification, rendered
/// "I'".."IV'".
enum class MultCase { I, II, III, IV };

LineStatus line_status(const RichardsonQuadruple& q, LineRef line);

/// No row or column of the frame is fully covered.
bool is_basic(const RichardsonQuadruple& q);

std::vector<LineRef> full_lines(const RichardsonQuadruple& q);
std::vector<LineRef> empty_lines(const RichardsonQuadruple& q);

/// Removes every full row and column in one pass (removing one full
/// line never changes another line's fullness). Fixed point on basic
/// input; the result is always basic.
RichardsonQuadruple basic_demolition(const RichardsonQuadruple& q);

/// Removes a single full line, shrinking both shapes along it. Used to
/// realize basic demolition one step at a time. Throws unless the line
/// is Full.
RichardsonQuadruple remove_full_line(const RichardsonQuadruple& q, LineRef line);

/// Deletes an empty line; shapes are unchanged, the frame shrinks by
/// one. Throws unless the line status is Empty.
RichardsonQuadruple remove_empty_line(const RichardsonQuadruple& q, LineRef line);

/// Lines containing boxes of exactly one of the two shapes (full lines
/// excluded), columns first then rows, ascending index.
std::vector<LineRef> stembridge_lines(const RichardsonQuadruple& q);

/// Deletes a single-shape line. A row holding lam boxes removes one lam
/// part equal to that row's length; a column removes the corresponding
/// conjugate part; symmetrically for mu. Throws unless the line is
/// OnlyLam or OnlyMu.
RichardsonQuadruple stembridge_demolish(const RichardsonQuadruple& q, LineRef line);

/// Dispatches on the line status: full lines are removed as a basic
/// demolition step, single-shape lines as a stembridge demolition.
/// Throws on Empty or Mixed lines.
RichardsonQuadruple remove_line(const RichardsonQuadruple& q, LineRef line);

/// True iff demolishing `line` keeps the quadruple basic and inside the
/// given case. Preconditions: q basic, q satisfies the case, line is a
/// stembridge line.
bool is_inductive(const RichardsonQuadruple& q, LineRef line, MultCase c);

/// Corner condition for two fat hooks: with A/B the lower/upper corners
/// of lam and X/Y the lower/upper corners of rotate(mu) in the frame,
/// row(A) < row(X) and row(B) < row(Y). Throws unless both shapes are
/// fat hooks.
bool is_well_ordered(const RichardsonQuadruple& q);

/// Corners of rotate(mu) inside the frame: {X, Y} with X the lowest or
/// equivalently leftmost corner and Y the highest/rightmost.
struct RotatedCorners {
    Cell x;
    Cell y;
};
RotatedCorners rotated_corners(const Partition& mu, RectangleFrame frame);

/// Outcome of the reduction trichotomy for a basic quadruple whose
/// shapes both have at least two distinct part sizes: either one or two
/// line removals (apply with remove_line, each index relative to the
/// quadruple produced by the previous step; the second line may have
/// become full) landing on a basic quadruple with both part-size counts
/// still >= 2, or one shape is a hook, or both shapes are fat hooks and
/// the quadruple (or its conjugate) is well-ordered.
struct Reduction {
    enum class Kind { InductiveLines, HookCase, WellOrdered };
    enum class Side { Lam, Mu };

    Kind kind = Kind::InductiveLines;
    std::vector<LineRef> lines; // InductiveLines: 1 or 2 demolitions
    Side hook = Side::Lam;      // HookCase: which shape is the hook
    bool conjugated = false;    // WellOrdered: Eq. holds on the conjugate
};

/// Decides the trichotomy, preferring an inductive demolition, then a
/// hook, then well-ordering; line search prefers columns over rows and
/// low indices first. Throws if the precondition fails or no
/// alternative verifies.
Reduction propose_reduction(const RichardsonQuadruple& q);

} // namespace schubmf
