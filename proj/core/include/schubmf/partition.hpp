#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace schubmf {

/// Integer partition: weakly decreasing positive parts, drawn as a
/// left-justified Young diagram in matrix convention (row 1 on top).
/// Zero parts are never stored; the default-constructed value is the
/// empty partition.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing
    /// and strictly positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Number of boxes.
    long long size() const noexcept;

    /// 1-based row access, zero-padded past the last row.
    int part(int i) const noexcept;
    /// First (largest) part, 0 for the empty partition.
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// Last (smallest) nonzero part, 0 for the empty partition.
    int last() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    /// Multiset insertion of one part (value >= 1).
    Partition with_part(int value) const;
    /// Multiset removal of one occurrence of `value`; throws if absent.
    Partition without_part(int value) const;

    /// Componentwise containment, zero-padded.
    bool contains(const Partition& other) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// The ell x kay rectangle Schubert classes live in: `rows` is the number
/// of rows (ell), `cols` the number of columns (kay).
struct RectangleFrame {
    int rows = 0;
    int cols = 0;

    friend bool operator==(const RectangleFrame&, const RectangleFrame&) = default;
};

inline RectangleFrame transpose(RectangleFrame f) { return {f.cols, f.rows}; }

/// Coarse shape classification by the number of distinct part sizes:
/// 0 -> Empty, 1 -> Rectangle, 2 -> FatHook, >= 3 -> Other.
enum class ShapeClass { Empty, Rectangle, FatHook, Other };

/// A box position in matrix convention (row 1 = top, col 1 = left).
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Transpose of the Young diagram. Involutive.
Partition conjugate(const Partition& lam);

/// True iff lam fits inside the frame (length <= rows and lam_1 <= cols).
bool fits(const Partition& lam, RectangleFrame frame);

/// True iff lam (top-left justified) and mu rotated 180 degrees into the
/// bottom-right corner share a box, i.e. lam_i + mu_{rows+1-i} > cols for
/// some row i. Preconditions: both shapes fit the frame.
bool overlaps(const Partition& lam, const Partition& mu, RectangleFrame frame);

int distinct_part_sizes(const Partition& lam);
ShapeClass classify_shape(const Partition& lam);

/// (b, 1^a) with b >= 2 and a >= 1: a fat hook whose lower arm is a
/// single column.
bool is_hook(const Partition& lam);

/// Minimum segment length of the lattice path cut by lam across the
/// frame, walking from the southwest to the northeast corner. Throws on
/// an empty frame or a non-fitting shape.
int shortness(const Partition& lam, RectangleFrame frame);

/// (alpha_1 - alpha_ell, alpha_1 - alpha_{ell-1}, ..., alpha_1 - alpha_1)
/// with alpha zero-padded to ell rows and trailing zeros trimmed.
/// Throws if alpha has more than ell rows.
Partition star(const Partition& alpha, int ell);

/// Outer corners (boxes with nothing below or to the right), listed top
/// to bottom. A fat hook yields exactly two; a rectangle one. Throws on
/// the empty partition.
std::vector<Cell> corners(const Partition& lam);

/// 180-degree rotated complement of nu inside the frame:
/// (cols - nu_rows, cols - nu_{rows-1}, ..., cols - nu_1), zeros trimmed.
/// Involutive for a fixed frame. Throws if nu does not fit.
Partition rotate_complement(const Partition& nu, RectangleFrame frame);

/// All partitions inside the frame with exactly `size` boxes, in
/// ascending lexicographic order of part sequences.
std::vector<Partition> partitions_of_size_in(long long size, RectangleFrame frame);

/// All partitions inside the frame, ascending lexicographic order.
std::vector<Partition> all_partitions_in(RectangleFrame frame);

/// Parses the shared partition text format: comma-separated parts
/// ("4,4,2,2"), exponent shorthand ("7^5,3" = 7,7,7,7,7,3), and "" or
/// "0" for the empty partition. Throws std::invalid_argument on
/// malformed or non-monotone input.
Partition parse_partition(std::string_view text);

/// Canonical text form: comma-separated parts, "0" for the empty
/// partition. parse_partition(format_partition(p)) == p.
std::string format_partition(const Partition& p);

} // namespace schubmf
