#include "schubmf/classifier.hpp"

#include <stdexcept>

namespace schubmf {

namespace {

bool is_rectangle(const Partition& p) { return distinct_part_sizes(p) == 1; }
bool is_fat_hook(const Partition& p) { return distinct_part_sizes(p) == 2; }

bool degenerate(RectangleFrame f) { return f.rows < 1 || f.cols < 1; }

} // namespace

bool satisfies_mult_case(const RichardsonQuadruple& q, MultCase c) {
    if (degenerate(q.frame())) return false;
    const Partition& lam = q.lam();
    const Partition& mu = q.mu();
    const RectangleFrame f = q.frame();
    switch (c) {
        case MultCase::I:
            return distinct_part_sizes(lam) >= 2 && distinct_part_sizes(mu) >= 2;
        case MultCase::II:
            return distinct_part_sizes(lam) >= 3 && is_rectangle(mu) && shortness(mu, f) >= 2;
        case MultCase::III:
            return is_fat_hook(lam) && shortness(lam, f) >= 2 && is_rectangle(mu) &&
                   shortness(mu, f) >= 3;
        case MultCase::IV:
            return (distinct_part_sizes(mu) >= 3 && is_rectangle(lam) && shortness(lam, f) >= 2) ||
                   (is_fat_hook(mu) && shortness(mu, f) >= 2 && is_rectangle(lam) &&
                    shortness(lam, f) >= 3);
    }
    return false;
}

std::optional<MultCase> multiplicity_case(const RichardsonQuadruple& q) {
    if (!is_basic(q))
        throw std::invalid_argument("multiplicity_case: quadruple must be basic");
    for (MultCase c : {MultCase::I, MultCase::II, MultCase::III, MultCase::IV})
        if (satisfies_mult_case(q, c)) return c;
    return std::nullopt;
}

std::optional<MfReason> multiplicity_free_condition(const RichardsonQuadruple& q) {
    if (!is_basic(q))
        throw std::invalid_argument("multiplicity_free_condition: quadruple must be basic");
    if (q.lam().empty() || q.mu().empty())
        throw std::invalid_argument("multiplicity_free_condition: shapes must be nonempty");
    const Partition& lam = q.lam();
    const Partition& mu = q.mu();
    const RectangleFrame f = q.frame();

    if ((is_rectangle(lam) && shortness(lam, f) == 1) ||
        (is_rectangle(mu) && shortness(mu, f) == 1))
        return MfReason::I;
    if ((is_rectangle(lam) && shortness(lam, f) == 2 && is_fat_hook(mu)) ||
        (is_rectangle(mu) && shortness(mu, f) == 2 && is_fat_hook(lam)))
        return MfReason::II;
    if ((is_rectangle(lam) && is_fat_hook(mu) && shortness(mu, f) == 1) ||
        (is_rectangle(mu) && is_fat_hook(lam) && shortness(lam, f) == 1))
        return MfReason::III;
    if (is_rectangle(lam) && is_rectangle(mu)) return MfReason::IV;
    return std::nullopt;
}

Verdict classify(const Partition& lam, const Partition& mu, RectangleFrame frame) {
    if (!fits(lam, frame) || !fits(mu, frame))
        throw std::invalid_argument("classify: shapes must fit the frame");
    if (overlaps(lam, mu, frame)) return {Outcome::ZeroProduct, {}, {}, {}};

    RichardsonQuadruple demolished = basic_demolition(RichardsonQuadruple(lam, mu, frame));
    if (std::optional<MultCase> c = multiplicity_case(demolished))
        return {Outcome::HasMultiplicity, {}, c, std::move(demolished)};

    if (degenerate(demolished.frame()) || demolished.lam().empty() || demolished.mu().empty())
        return {Outcome::MultiplicityFree, MfReason::EmptyShape, {}, std::move(demolished)};

    std::optional<MfReason> reason = multiplicity_free_condition(demolished);
    if (!reason)
        throw std::logic_error("classify: basic quadruple matches neither condition family");
    return {Outcome::MultiplicityFree, reason, {}, std::move(demolished)};
}

Verdict classify_gl(const Partition& lam, const Partition& mu) {
    RectangleFrame frame{static_cast<int>(lam.length() + mu.length()), lam.first() + mu.first()};
    return classify(lam, mu, frame);
}

std::string to_string(MfReason r) {
    switch (r) {
        case MfReason::I: return "I";
        case MfReason::II: return "II";
        case MfReason::III: return "III";
        case MfReason::IV: return "IV";
        case MfReason::EmptyShape: return "EmptyShape";
    }
    return {};
}

std::string to_string(MultCase c) {
    switch (c) {
        case MultCase::I: return "I'";
        case MultCase::II: return "II'";
        case MultCase::III: return "III'";
        case MultCase::IV: return "IV'";
    }
    return {};
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::ZeroProduct: return "zero_product";
        case Outcome::MultiplicityFree: return "multiplicity_free";
        case Outcome::HasMultiplicity: return "has_multiplicity";
    }
    return {};
}

} // namespace schubmf
