#pragma once

#include "schubmf/partition.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schubmf {

/// Skew shape outer/inner: a pair inner ⊆ outer of partitions.
class SkewShape {
public:
    /// Throws std::invalid_argument unless inner ⊆ outer componentwise.
    SkewShape(Partition inner, Partition outer);

    const Partition& inner() const noexcept { return inner_; }
    const Partition& outer() const noexcept { return outer_; }
    long long box_count() const noexcept { return outer_.size() - inner_.size(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition inner_;
    Partition outer_;
};

/// A filling of a skew shape: per outer row, the entries of the skew
/// cells left to right. Construction enforces exact box coverage (row i
/// holds outer_i - inner_i entries); semistandardness and the ballot
/// condition are checked separately by validate_filling.
class LrFilling {
public:
    LrFilling(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    /// Right-to-left within each row, rows top to bottom.
    std::vector<int> reading_word() const;

    /// Multiplicity vector of entry values, trimmed. A partition iff the
    /// word is ballot.
    std::vector<int> content() const;

    friend bool operator==(const LrFilling&, const LrFilling&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// In every prefix, occurrences of i never exceed occurrences of i-1.
bool is_ballot(std::span<const int> word);

struct FillingCheck {
    bool ok = false;
    std::string reason; // first violated condition, empty when ok
};

/// Checks the three filling invariants in order: rows weakly increase,
/// columns strictly increase, reading word is ballot (a ballot word of
/// positive entries forces the content to be a partition).
FillingCheck validate_filling(const LrFilling& f);

/// Enumerates LR fillings of `shape` with content `content` in a fixed
/// deterministic order (entries assigned in reading order, smallest
/// first). The visitor returns false to stop early. Returns the number
/// of fillings visited.
std::uint64_t for_each_lr_filling(const SkewShape& shape, const Partition& content,
                                  const std::function<bool(const LrFilling&)>& visit);

/// Materialized enumeration, stopping after `cap` fillings when cap > 0.
std::vector<LrFilling> enumerate_lr_fillings(const SkewShape& shape, const Partition& content,
                                             std::uint64_t cap = 0);

/// Littlewood-Richardson coefficient: the number of LR fillings of
/// nu/lam with content mu; 0 unless lam ⊆ nu and |lam| + |mu| = |nu|.
/// When cap > 0 counting stops at cap.
std::uint64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu,
                             std::uint64_t cap = 0);

/// Product expansion over a frame: positive-coefficient terms only.
class Expansion {
public:
    explicit Expansion(RectangleFrame frame) : frame_(frame) {}

    RectangleFrame frame() const noexcept { return frame_; }
    const std::map<Partition, std::uint64_t>& terms() const noexcept { return terms_; }
    bool zero() const noexcept { return terms_.empty(); }
    std::uint64_t coefficient(const Partition& nu) const;
    void set_term(Partition nu, std::uint64_t coeff);

    friend bool operator==(const Expansion&, const Expansion&) = default;

private:
    RectangleFrame frame_;
    std::map<Partition, std::uint64_t> terms_;
};

/// sigma_lam * sigma_mu restricted to the frame. The zero product
/// (overlapping shapes) is the empty expansion. Throws if a shape does
/// not fit the frame.
Expansion expand_product(const Partition& lam, const Partition& mu, RectangleFrame frame);

/// True iff some nu in the frame has coefficient >= 2 (early exit with
/// cap = 2). Preconditions: shapes fit.
bool has_multiplicity_bruteforce(const Partition& lam, const Partition& mu, RectangleFrame frame);

} // namespace schubmf
