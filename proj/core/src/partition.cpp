#include "schubmf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace schubmf {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            bad("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            bad("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

long long Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const noexcept {
    if (i < 1 || static_cast<std::size_t>(i) > parts_.size()) return 0;
    return parts_[static_cast<std::size_t>(i) - 1];
}

Partition Partition::with_part(int value) const {
    if (value < 1) bad("with_part: value must be positive");
    std::vector<int> out = parts_;
    auto pos = std::lower_bound(out.begin(), out.end(), value, std::greater<int>());
    out.insert(pos, value);
    Partition p;
    p.parts_ = std::move(out);
    return p;
}

Partition Partition::without_part(int value) const {
    auto it = std::find(parts_.begin(), parts_.end(), value);
    if (it == parts_.end()) bad("without_part: no part of that size");
    std::vector<int> out = parts_;
    out.erase(out.begin() + (it - parts_.begin()));
    Partition p;
    p.parts_ = std::move(out);
    return p;
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.parts_.size(); ++i)
        if (parts_[i] < other.parts_[i]) return false;
    return true;
}

Partition conjugate(const Partition& lam) {
    if (lam.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(lam.first()), 0);
    for (int p : lam.parts())
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

bool fits(const Partition& lam, RectangleFrame frame) {
    return static_cast<int>(lam.length()) <= frame.rows && lam.first() <= frame.cols;
}

bool overlaps(const Partition& lam, const Partition& mu, RectangleFrame frame) {
    if (!fits(lam, frame) || !fits(mu, frame))
        bad("overlaps: shapes must fit the frame");
    for (int i = 1; i <= frame.rows; ++i)
        if (lam.part(i) + mu.part(frame.rows + 1 - i) > frame.cols) return true;
    return false;
}

int distinct_part_sizes(const Partition& lam) {
    int count = 0;
    int prev = 0;
    for (int p : lam.parts()) {
        if (p != prev) ++count;
        prev = p;
    }
    return count;
}

ShapeClass classify_shape(const Partition& lam) {
    switch (distinct_part_sizes(lam)) {
        case 0: return ShapeClass::Empty;
        case 1: return ShapeClass::Rectangle;
        case 2: return ShapeClass::FatHook;
        default: return ShapeClass::Other;
    }
}

bool is_hook(const Partition& lam) {
    return lam.length() >= 2 && lam.first() >= 2 && lam.part(2) == 1;
}

int shortness(const Partition& lam, RectangleFrame frame) {
    if (frame.rows < 1 || frame.cols < 1)
        bad("shortness: frame must have at least one row and one column");
    if (!fits(lam, frame))
        bad("shortness: shape must fit the frame");
    // Run-length encode the path from the southwest corner: east runs
    // between consecutive north steps, bottom row first.
    std::vector<int> runs;
    int north_pending = 0;
    auto flush_north = [&] {
        if (north_pending > 0) runs.push_back(north_pending);
        north_pending = 0;
    };
    int east0 = lam.part(frame.rows);
    if (east0 > 0) runs.push_back(east0);
    for (int i = frame.rows; i >= 1; --i) {
        ++north_pending;
        int east = (i == 1 ? frame.cols : lam.part(i - 1)) - lam.part(i);
        if (east > 0) {
            flush_north();
            runs.push_back(east);
        }
    }
    flush_north();
    return *std::min_element(runs.begin(), runs.end());
}

Partition star(const Partition& alpha, int ell) {
    if (static_cast<int>(alpha.length()) > ell)
        bad("star: alpha has more rows than ell");
    std::vector<int> out;
    for (int i = ell; i >= 1; --i) {
        int v = alpha.first() - alpha.part(i);
        if (v > 0) out.push_back(v);
    }
    return Partition(std::move(out));
}

std::vector<Cell> corners(const Partition& lam) {
    if (lam.empty()) bad("corners: empty partition has no corners");
    std::vector<Cell> out;
    for (int i = 1; i <= static_cast<int>(lam.length()); ++i)
        if (lam.part(i) > lam.part(i + 1)) out.push_back({i, lam.part(i)});
    return out;
}

Partition rotate_complement(const Partition& nu, RectangleFrame frame) {
    if (!fits(nu, frame))
        bad("rotate_complement: shape must fit the frame");
    std::vector<int> out;
    for (int i = frame.rows; i >= 1; --i) {
        int v = frame.cols - nu.part(i);
        if (v > 0) out.push_back(v);
    }
    return Partition(std::move(out));
}

namespace {

void gen_partitions(long long remaining, int max_part, int rows_left,
                    std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    if (rows_left == 0) return;
    int hi = static_cast<int>(std::min<long long>(max_part, remaining));
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long long>(p) * rows_left < remaining) break;
        prefix.push_back(p);
        gen_partitions(remaining - p, p, rows_left - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of_size_in(long long size, RectangleFrame frame) {
    std::vector<Partition> out;
    if (size < 0) return out;
    if (size == 0) {
        out.push_back({});
        return out;
    }
    if (frame.rows <= 0 || frame.cols <= 0) return out;
    std::vector<int> prefix;
    gen_partitions(size, frame.cols, frame.rows, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> all_partitions_in(RectangleFrame frame) {
    std::vector<Partition> out;
    long long max_size = static_cast<long long>(frame.rows) * frame.cols;
    for (long long n = 0; n <= max_size; ++n) {
        auto batch = partitions_of_size_in(n, frame);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int parse_int(std::string_view tok, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        bad("partition parse error: bad " + std::string(what) + " '" + std::string(tok) + "'");
    return value;
}

} // namespace

Partition parse_partition(std::string_view text) {
    // Strip surrounding whitespace.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty() || text == "0") return {};

    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
        if (tok.empty()) bad("partition parse error: empty component");
        std::size_t caret = tok.find('^');
        int value, repeat = 1;
        if (caret == std::string_view::npos) {
            value = parse_int(tok, "part");
        } else {
            value = parse_int(tok.substr(0, caret), "part");
            repeat = parse_int(tok.substr(caret + 1), "exponent");
            if (repeat < 1) bad("partition parse error: exponent must be >= 1");
        }
        if (value < 1) bad("partition parse error: parts must be positive");
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Partition(std::move(parts)); // enforces weak decrease
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

} // namespace schubmf
