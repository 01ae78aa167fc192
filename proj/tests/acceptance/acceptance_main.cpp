// Acceptance suite: runs each shipping criterion exactly as stated and
// prints one PASS/FAIL line per criterion. Exit status is nonzero when
// any criterion fails.

#include "schubmf/classifier.hpp"
#include "schubmf/demolition.hpp"
#include "schubmf/lr.hpp"
#include "schubmf/partition.hpp"
#include "schubmf/witness.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace schubmf;
using schubmf::testing::MultiplicityOracle;
using schubmf::testing::richardson_pairs;

namespace {

struct Criterion {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        passed = false;
        if (failures.size() < 8) failures.push_back(what);
    }
};

RichardsonQuadruple quad(const char* lam, const char* mu, int l, int k) {
    return {parse_partition(lam), parse_partition(mu), {l, k}};
}

std::string pair_tag(const Partition& lam, const Partition& mu, RectangleFrame f) {
    return format_partition(lam) + " | " + format_partition(mu) + " | " +
           std::to_string(f.rows) + "x" + std::to_string(f.cols);
}

bool witness_validates(const RichardsonQuadruple& q, const MultiplicityWitness& w) {
    return w.first.shape().inner() == q.lam() && w.first.shape().outer() == w.nu &&
           w.first.shape() == w.second.shape() && fits(w.nu, q.frame()) &&
           validate_filling(w.first).ok && validate_filling(w.second).ok &&
           Partition(w.first.content()) == q.mu() && Partition(w.second.content()) == q.mu() &&
           w.first.rows() != w.second.rows();
}

void criterion1(Criterion& c, MultiplicityOracle& oracle) {
    std::size_t pairs = 0;
    for (int l = 1; l <= 5; ++l)
        for (int k = 1; k <= 5; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                ++pairs;
                bool predicted = classify(lam, mu, f).outcome == Outcome::HasMultiplicity;
                c.expect(predicted == oracle(lam, mu, f), pair_tag(lam, mu, f));
            }
        }
    c.name += " (" + std::to_string(pairs) + " pairs)";
}

void criterion2(Criterion& c) {
    // (a) sigma_(2,1) * sigma_(2) in Gr(4, C^7) and Gr(3, C^6)
    Expansion a1 = expand_product(parse_partition("2,1"), parse_partition("2"), {4, 3});
    Expansion a2 = expand_product(parse_partition("2,1"), parse_partition("2"), {3, 3});
    bool a_ok = a1.terms().size() == 3 && a1.coefficient(parse_partition("2,2,1")) == 1 &&
                a1.coefficient(parse_partition("3,1,1")) == 1 &&
                a1.coefficient(parse_partition("3,2")) == 1 && a1.terms() == a2.terms();
    c.expect(a_ok, "(a) sigma_(2,1)*sigma_(2)");

    // (b)
    c.expect(lr_coefficient(parse_partition("4,4,2,2"), parse_partition("3,3,3"),
                            parse_partition("6,5,4,3,2,1")) == 2,
             "(b) coefficient 2 at nu=(6,5,4,3,2,1)");

    // (c)
    Verdict v_c = classify(parse_partition("4,4,2,2,2"), parse_partition("3,3,3"), {6, 6});
    c.expect(v_c.outcome == Outcome::MultiplicityFree && v_c.reason == MfReason::III,
             "(c) multiplicity-free by III");

    // (d)
    Verdict v_d = classify(parse_partition("4,3,2,1"), parse_partition("4,4,2,2,1"), {5, 5});
    c.expect(v_d.outcome == Outcome::MultiplicityFree && v_d.demolished.has_value() &&
                 *v_d.demolished == quad("1", "1", 2, 2),
             "(d) demolished to ((1),(1),2x2)");

    // (e)
    c.expect(classify(parse_partition("4,3,2,1"), parse_partition("4,4,2,2,1"), {6, 5}).outcome ==
                 Outcome::HasMultiplicity,
             "(e) has multiplicity in 6x5");

    // (f)
    c.expect(lr_coefficient(parse_partition("4,3,2,1"), parse_partition("4,4,2,2,1"),
                            parse_partition("5,4,4,4,4,2")) == 3,
             "(f) coefficient 3 at nu=(5,4,4,4,4,2)");
    c.expect(classify_gl(parse_partition("4,3,2,1"), parse_partition("4,4,2,2,1")).outcome ==
                 Outcome::HasMultiplicity,
             "(f) GL verdict");

    // (g)
    c.expect(basic_demolition(quad("6,5,4,3,2,1,1", "7,6,6,6,5,2", 7, 9)) ==
                 quad("3,2,1", "5,4,4,2", 5, 6),
             "(g) basic demolition of the 7x9 quadruple");

    // (h)
    c.expect(stembridge_lines(quad("6,6,4,2", "4,3,2,2", 5, 8)) ==
                 std::vector<LineRef>{{LineAxis::Column, 1},
                                      {LineAxis::Column, 2},
                                      {LineAxis::Column, 3},
                                      {LineAxis::Column, 4},
                                      {LineAxis::Column, 7},
                                      {LineAxis::Column, 8},
                                      {LineAxis::Row, 1},
                                      {LineAxis::Row, 5}},
             "(h) stembridge lines of the 5x8 quadruple");
}

void criterion3(Criterion& c, MultiplicityOracle& oracle) {
    for (int l = 1; l <= 5; ++l)
        for (int k = 1; k <= 5; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                RichardsonQuadruple q(lam, mu, f);
                RichardsonQuadruple d = basic_demolition(q);
                c.expect(is_basic(d), pair_tag(lam, mu, f) + " | demolition not basic");
                c.expect(oracle(q) == oracle(d), pair_tag(lam, mu, f) + " | verdict changed");
                for (LineRef line : empty_lines(q)) {
                    RichardsonQuadruple r = remove_empty_line(q, line);
                    c.expect(expand_product(lam, mu, f).terms() ==
                                 expand_product(r.lam(), r.mu(), r.frame()).terms(),
                             pair_tag(lam, mu, f) + " | empty-line removal changed expansion");
                }
                for (LineRef line : stembridge_lines(q)) {
                    RichardsonQuadruple r = stembridge_demolish(q, line);
                    if (oracle(r))
                        c.expect(oracle(q),
                                 pair_tag(lam, mu, f) + " | demolished multiplicity did not lift");
                }
            }
        }
}

void criterion4(Criterion& c) {
    for (int l = 1; l <= 4; ++l)
        for (int k = 1; k <= 4; ++k) {
            RectangleFrame f{l, k};
            auto shapes = all_partitions_in(f);
            for (const auto& lam : shapes)
                for (const auto& mu : shapes)
                    for (const auto& nu : shapes) {
                        if (nu.size() != lam.size() + mu.size()) continue;
                        std::uint64_t direct = lr_coefficient(lam, mu, nu);
                        std::uint64_t mirrored = lr_coefficient(
                            lam, rotate_complement(nu, f), rotate_complement(mu, f));
                        c.expect(direct == mirrored,
                                 pair_tag(lam, mu, f) + " | nu=" + format_partition(nu));
                    }
        }
}

void criterion5(Criterion& c) {
    for (int l = 1; l <= 5; ++l)
        for (int k = 1; k <= 5; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                if (lam.empty() || mu.empty()) continue;
                RichardsonQuadruple q(lam, mu, f);
                if (!is_basic(q)) continue;
                bool free_cond = multiplicity_free_condition(q).has_value();
                bool mult_cond = multiplicity_case(q).has_value();
                c.expect(free_cond != mult_cond, pair_tag(lam, mu, f));
            }
        }
}

void criterion6(Criterion& c) {
    for (int l = 1; l <= 5; ++l)
        for (int k = 1; k <= 5; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                RichardsonQuadruple q(lam, mu, f);
                bool has = classify(lam, mu, f).outcome == Outcome::HasMultiplicity;
                auto w = find_witness(q);
                c.expect(w.has_value() == has, pair_tag(lam, mu, f) + " | witness presence");
                if (w) c.expect(witness_validates(q, *w), pair_tag(lam, mu, f) + " | witness invalid");
            }
        }

    RichardsonQuadruple big = quad("11,11,11,7,7,4,4,2,2", "12,1^9", 11, 13);
    MultiplicityWitness w = witness_hook_case(big);
    c.expect(witness_validates(big, w), "hook witness invalid");
    c.expect(w.first.reading_word() ==
                 std::vector<int>{1, 1, 2, 3, 1, 1, 1, 1, 4, 5, 1, 1, 6, 7, 1, 1, 8, 9, 1, 1, 10},
             "first hook reading word");
    c.expect(w.second.reading_word() ==
                 std::vector<int>{1, 1, 2, 3, 4, 1, 1, 1, 5, 1, 1, 1, 6, 7, 1, 1, 8, 9, 1, 1, 10},
             "second hook reading word");
}

void criterion7(Criterion& c) {
    for (int l = 1; l <= 5; ++l)
        for (int k = 1; k <= 5; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                RichardsonQuadruple q(lam, mu, f);
                if (!is_basic(q)) continue;
                if (distinct_part_sizes(lam) < 2 || distinct_part_sizes(mu) < 2) continue;
                try {
                    Reduction red = propose_reduction(q);
                    switch (red.kind) {
                        case Reduction::Kind::InductiveLines: {
                            RichardsonQuadruple cur = q;
                            for (LineRef line : red.lines) cur = remove_line(cur, line);
                            c.expect(is_basic(cur) && satisfies_mult_case(cur, MultCase::I),
                                     pair_tag(lam, mu, f) + " | lines do not verify");
                            break;
                        }
                        case Reduction::Kind::HookCase:
                            c.expect(is_hook(red.hook == Reduction::Side::Mu ? mu : lam),
                                     pair_tag(lam, mu, f) + " | hook does not verify");
                            break;
                        case Reduction::Kind::WellOrdered:
                            c.expect(is_well_ordered(red.conjugated ? q.conjugated() : q),
                                     pair_tag(lam, mu, f) + " | well-ordering does not verify");
                            break;
                    }
                } catch (const std::exception& e) {
                    c.expect(false, pair_tag(lam, mu, f) + " | " + e.what());
                }
            }
        }
}

} // namespace

int main() {
    MultiplicityOracle oracle;
    std::vector<Criterion> criteria = {
        {"1. oracle equivalence, frames up to 5x5"},
        {"2. worked examples, exact values"},
        {"3. demolition invariants, frames up to 5x5"},
        {"4. rotated-complement coefficient symmetry, frames up to 4x4"},
        {"5. condition-family complementarity, frames up to 5x5"},
        {"6. witness soundness and hook reading words"},
        {"7. reduction trichotomy, frames up to 5x5"},
    };

    auto started = std::chrono::steady_clock::now();
    criterion1(criteria[0], oracle);
    criterion2(criteria[1]);
    criterion3(criteria[2], oracle);
    criterion4(criteria[3]);
    criterion5(criteria[4]);
    criterion6(criteria[5]);
    criterion7(criteria[6]);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name << '\n';
        for (const std::string& f : c.failures) std::cout << "      " << f << '\n';
        all_ok = all_ok && c.passed;
    }
    std::cerr << "acceptance elapsed: " << elapsed.count() << "s\n";
    return all_ok ? 0 : 1;
}
