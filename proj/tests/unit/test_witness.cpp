#include "schubmf/witness.hpp"

#include "schubmf/classifier.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace schubmf;
using schubmf::testing::richardson_pairs;

namespace {

RichardsonQuadruple quad(const char* lam, const char* mu, int l, int k) {
    return {parse_partition(lam), parse_partition(mu), {l, k}};
}

void check_witness(const RichardsonQuadruple& q, const MultiplicityWitness& w) {
    CHECK(w.first.shape().inner() == q.lam());
    CHECK(w.first.shape().outer() == w.nu);
    CHECK(w.first.shape() == w.second.shape());
    CHECK(fits(w.nu, q.frame()));
    CHECK(validate_filling(w.first).ok);
    CHECK(validate_filling(w.second).ok);
    CHECK(Partition(w.first.content()) == q.mu());
    CHECK(Partition(w.second.content()) == q.mu());
    CHECK(w.first.rows() != w.second.rows());
    CHECK(lr_coefficient(q.lam(), q.mu(), w.nu, 2) == 2);
}

} // namespace

TEST_CASE("find_witness on the worked examples") {
    auto w = find_witness(quad("4,4,2,2", "3,3,3", 6, 6));
    REQUIRE(w.has_value());
    CHECK(w->nu == parse_partition("6,5,4,3,2,1"));
    check_witness(quad("4,4,2,2", "3,3,3", 6, 6), *w);

    CHECK_FALSE(find_witness(quad("2,2", "3,3", 5, 6)).has_value());

    auto w2 = find_witness(quad("4,3,2,1", "4,4,2,2,1", 6, 5));
    REQUIRE(w2.has_value());
    check_witness(quad("4,3,2,1", "4,4,2,2,1", 6, 5), *w2);
}

TEST_CASE("hook witness reproduces the printed reading words") {
    auto q = quad("11,11,11,7,7,4,4,2,2", "12,1^9", 11, 13);
    MultiplicityWitness w = witness_hook_case(q);
    check_witness(q, w);
    CHECK(w.first.reading_word() ==
          std::vector<int>{1, 1, 2, 3, 1, 1, 1, 1, 4, 5, 1, 1, 6, 7, 1, 1, 8, 9, 1, 1, 10});
    CHECK(w.second.reading_word() ==
          std::vector<int>{1, 1, 2, 3, 4, 1, 1, 1, 5, 1, 1, 1, 6, 7, 1, 1, 8, 9, 1, 1, 10});
}

TEST_CASE("hook witness on small instances") {
    auto q1 = quad("2,1", "2,1", 4, 4);
    check_witness(q1, witness_hook_case(q1));
    auto q2 = quad("3,3,1", "3,1", 5, 5);
    check_witness(q2, witness_hook_case(q2));
    CHECK_THROWS_AS(witness_hook_case(quad("2,1", "3,3", 6, 6)), std::invalid_argument);
    CHECK_THROWS_AS(witness_hook_case(quad("2,2", "2,1", 5, 5)), std::invalid_argument);
}

TEST_CASE("hook witness sweep") {
    for (int l = 1; l <= 5; ++l)
        for (int k = 1; k <= 5; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                RichardsonQuadruple q(lam, mu, f);
                if (!is_basic(q)) continue;
                if (!is_hook(mu) || distinct_part_sizes(lam) < 2) continue;
                check_witness(q, witness_hook_case(q));
            }
        }
}

TEST_CASE("well-ordered witness on the corner example") {
    auto q = quad("4,4,2,2", "3,3,2", 7, 7);
    REQUIRE(is_well_ordered(q));
    check_witness(q, witness_wellordered_case(q));
    CHECK_THROWS_AS(witness_wellordered_case(quad("4,4,2,2", "3,3,2", 5, 7)),
                    std::invalid_argument);
}

TEST_CASE("well-ordered witness sweep over fat hook pairs") {
    for (int l = 2; l <= 7; ++l)
        for (int k = 2; k <= 7; ++k) {
            RectangleFrame f{l, k};
            auto shapes = all_partitions_in(f);
            for (const auto& lam : shapes) {
                if (classify_shape(lam) != ShapeClass::FatHook) continue;
                for (const auto& mu : shapes) {
                    if (classify_shape(mu) != ShapeClass::FatHook) continue;
                    if (overlaps(lam, mu, f)) continue;
                    RichardsonQuadruple q(lam, mu, f);
                    if (!is_basic(q) || !is_well_ordered(q)) continue;
                    check_witness(q, witness_wellordered_case(q));
                }
            }
        }
}

TEST_CASE("two-row rectangle base") {
    auto q = quad("4,2,1", "3,3", 6, 6);
    check_witness(q, witness_caseII_base(q));
    // conjugate-equivalent two-column instance
    auto qc = quad("3,3,2,1,1", "2,2,2", 6, 6);
    check_witness(qc, witness_caseII_base(qc));
    CHECK_THROWS_AS(witness_caseII_base(quad("4,2,1", "3,3,3", 7, 7)), std::invalid_argument);
}

TEST_CASE("two-row base sweep") {
    for (int l = 4; l <= 6; ++l)
        for (int k = 4; k <= 6; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                RichardsonQuadruple q(lam, mu, f);
                if (!is_basic(q)) continue;
                if (distinct_part_sizes(lam) < 3) continue;
                if (distinct_part_sizes(mu) != 1 || mu.length() != 2) continue;
                if (mu.first() < 2 || mu.first() > k - 2) continue;
                check_witness(q, witness_caseII_base(q));
            }
        }
}

TEST_CASE("reduced staircase base") {
    auto q = quad("4,2,1,1,1", "3,3,3", 6, 5);
    MultiplicityWitness w = witness_caseII_base(q);
    check_witness(q, w);
    CHECK(w.nu == parse_partition("5,4,4,3,1,1"));
    CHECK(w.first.rows() ==
          std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2, 3}, {2, 3}, {}, {3}});
    CHECK(w.second.rows() ==
          std::vector<std::vector<int>>{{1}, {1, 1}, {2, 2, 2}, {3, 3}, {}, {3}});
}

TEST_CASE("fat hook against wide rectangle") {
    auto q = quad("8,8,3,3,3,3,3", "7^5", 12, 11);
    MultiplicityWitness w = witness_caseIII(q);
    check_witness(q, w);
    CHECK(w.nu == parse_partition("11,10,10,10,9,7,6,2,1"));

    // h = b + 1 forces the left justification
    auto q2 = quad("6,6,3,3", "5,5,5", 10, 9);
    check_witness(q2, witness_caseIII(q2));

    // g < k - a - 1 drops full columns from the table
    auto q3 = quad("7,7,3,3", "5,5,5", 8, 12);
    check_witness(q3, witness_caseIII(q3));

    // h > b + 1 extends the first g columns
    auto q4 = quad("6,6,3,3", "5,5,5,5", 11, 9);
    check_witness(q4, witness_caseIII(q4));

    CHECK_THROWS_AS(witness_caseIII(quad("2,1", "2,2", 5, 5)), std::invalid_argument);
}

TEST_CASE("reduction driver on the worked examples") {
    auto q1 = quad("4,2,2,1", "2,2,2", 5, 5);
    MultiplicityWitness w1 = witness_via_reduction(q1);
    check_witness(q1, w1);
    CHECK_FALSE(w1.notes.empty());

    auto q2 = quad("6,5,4,3,2,1,1", "7,6,6,6,5,2", 7, 9);
    check_witness(q2, witness_via_reduction(q2));

    CHECK_THROWS_AS(witness_via_reduction(quad("2,2", "3,3", 5, 6)), std::invalid_argument);
}

TEST_CASE("reduction driver sweep") {
    for (int l = 1; l <= 5; ++l)
        for (int k = 1; k <= 5; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                RichardsonQuadruple q(lam, mu, f);
                if (classify(lam, mu, f).outcome != Outcome::HasMultiplicity) continue;
                check_witness(q, witness_via_reduction(q));
            }
        }
}

TEST_CASE("witness search agrees with the classifier on small frames") {
    for (int l = 1; l <= 4; ++l)
        for (int k = 1; k <= 4; ++k) {
            RectangleFrame f{l, k};
            for (const auto& [lam, mu] : richardson_pairs(f)) {
                RichardsonQuadruple q(lam, mu, f);
                bool expected = classify(lam, mu, f).outcome == Outcome::HasMultiplicity;
                auto w = find_witness(q);
                CHECK(w.has_value() == expected);
                if (w) check_witness(q, *w);
            }
        }
}
