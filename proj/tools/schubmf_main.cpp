#include "schubmf/classifier.hpp"
#include "schubmf/demolition.hpp"
#include "schubmf/lr.hpp"
#include "schubmf/partition.hpp"
#include "schubmf/serialize.hpp"
#include "schubmf/witness.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace {

using namespace schubmf;
using nlohmann::json;

std::string frame_str(RectangleFrame f) {
    return std::to_string(f.rows) + "x" + std::to_string(f.cols);
}

std::string quad_str(const RichardsonQuadruple& q) {
    return "lam=" + format_partition(q.lam()) + " mu=" + format_partition(q.mu()) +
           " frame=" + frame_str(q.frame());
}

std::string index_set(const std::vector<LineRef>& lines, LineAxis axis) {
    std::string out = "{";
    bool first = true;
    for (LineRef line : lines) {
        if (line.axis != axis) continue;
        if (!first) out += ',';
        out += std::to_string(line.index);
        first = false;
    }
    return out + "}";
}

struct FrameArgs {
    int rows = 0;
    int cols = 0;
};

void add_frame_flags(CLI::App* cmd, FrameArgs& frame) {
    cmd->add_option("-l,--rows", frame.rows, "rectangle rows l")->required();
    cmd->add_option("-k,--cols", frame.cols, "rectangle columns k")->required();
}

int cmd_product(const std::string& lam_text, const std::string& mu_text, FrameArgs frame,
                bool as_json) {
    Partition lam = parse_partition(lam_text);
    Partition mu = parse_partition(mu_text);
    Expansion e = expand_product(lam, mu, {frame.rows, frame.cols});
    if (as_json)
        std::cout << to_json(e).dump() << '\n';
    else
        std::cout << to_text(e);
    return 0;
}

int cmd_classify(const std::string& lam_text, const std::string& mu_text, FrameArgs frame,
                 bool as_json, bool verbose) {
    Partition lam = parse_partition(lam_text);
    Partition mu = parse_partition(mu_text);
    Verdict v = classify(lam, mu, {frame.rows, frame.cols});
    if (as_json) {
        std::cout << to_json(v).dump() << '\n';
        return 0;
    }
    std::string line = to_string(v.outcome);
    if (v.reason) line += " reason=" + to_string(*v.reason);
    if (v.mult_case) line += " case=" + to_string(*v.mult_case);
    std::cout << line << '\n';
    if (verbose && v.demolished) {
        RichardsonQuadruple q(lam, mu, {frame.rows, frame.cols});
        std::vector<LineRef> full = full_lines(q);
        std::cout << "full columns: " << index_set(full, LineAxis::Column) << '\n';
        std::cout << "full rows: " << index_set(full, LineAxis::Row) << '\n';
        std::cout << "demolished: " << quad_str(*v.demolished) << '\n';
    }
    return 0;
}

int cmd_witness(const std::string& lam_text, const std::string& mu_text, FrameArgs frame,
                bool as_json, bool construct) {
    Partition lam = parse_partition(lam_text);
    Partition mu = parse_partition(mu_text);
    RichardsonQuadruple q(lam, mu, {frame.rows, frame.cols});

    std::optional<MultiplicityWitness> w;
    if (construct) {
        if (classify(lam, mu, q.frame()).outcome == Outcome::HasMultiplicity)
            w = witness_via_reduction(q);
    } else {
        w = find_witness(q);
    }
    if (!w) {
        std::cout << (as_json ? "null\n" : "none\n");
        return 0;
    }
    if (as_json) {
        std::cout << to_json(*w).dump() << '\n';
        return 0;
    }
    std::cout << "nu = " << format_partition(w->nu) << '\n';
    std::cout << "filling 1:\n" << filling_grid(w->first);
    std::cout << "filling 2:\n" << filling_grid(w->second);
    for (const std::string& note : w->notes) std::cout << "step: " << note << '\n';
    return 0;
}

int cmd_demolish(const std::string& lam_text, const std::string& mu_text, FrameArgs frame,
                 bool as_json) {
    Partition lam = parse_partition(lam_text);
    Partition mu = parse_partition(mu_text);
    RichardsonQuadruple q(lam, mu, {frame.rows, frame.cols});
    std::vector<LineRef> full = full_lines(q);
    std::vector<LineRef> stem = stembridge_lines(q);
    std::vector<LineRef> empty = empty_lines(q);
    RichardsonQuadruple demolished = basic_demolition(q);
    if (as_json) {
        auto refs = [](const std::vector<LineRef>& lines, LineAxis axis) {
            json out = json::array();
            for (LineRef line : lines)
                if (line.axis == axis) out.push_back(line.index);
            return out;
        };
        json out{{"quadruple",
                  {{"lam", to_json(q.lam())},
                   {"mu", to_json(q.mu())},
                   {"frame", {q.frame().rows, q.frame().cols}}}},
                 {"full_columns", refs(full, LineAxis::Column)},
                 {"full_rows", refs(full, LineAxis::Row)},
                 {"stembridge_columns", refs(stem, LineAxis::Column)},
                 {"stembridge_rows", refs(stem, LineAxis::Row)},
                 {"empty_columns", refs(empty, LineAxis::Column)},
                 {"empty_rows", refs(empty, LineAxis::Row)},
                 {"basic_demolition",
                  {{"lam", to_json(demolished.lam())},
                   {"mu", to_json(demolished.mu())},
                   {"frame", {demolished.frame().rows, demolished.frame().cols}}}}};
        std::cout << out.dump() << '\n';
        return 0;
    }
    std::cout << "quadruple: " << quad_str(q) << '\n';
    std::cout << "full columns: " << index_set(full, LineAxis::Column) << '\n';
    std::cout << "full rows: " << index_set(full, LineAxis::Row) << '\n';
    std::cout << "stembridge columns: " << index_set(stem, LineAxis::Column) << '\n';
    std::cout << "stembridge rows: " << index_set(stem, LineAxis::Row) << '\n';
    std::cout << "empty columns: " << index_set(empty, LineAxis::Column) << '\n';
    std::cout << "empty rows: " << index_set(empty, LineAxis::Row) << '\n';
    std::cout << "basic demolition: " << quad_str(demolished) << '\n';
    return 0;
}

int cmd_enumerate_mf(FrameArgs frame, bool basic_only, bool as_json) {
    RectangleFrame f{frame.rows, frame.cols};
    std::vector<Partition> shapes = all_partitions_in(f);
    json arr = json::array();
    for (const Partition& lam : shapes)
        for (const Partition& mu : shapes) {
            if (overlaps(lam, mu, f)) continue;
            if (basic_only && !is_basic(RichardsonQuadruple(lam, mu, f))) continue;
            if (classify(lam, mu, f).outcome != Outcome::MultiplicityFree) continue;
            if (as_json)
                arr.push_back({{"lam", to_json(lam)}, {"mu", to_json(mu)}});
            else
                std::cout << format_partition(lam) << ' ' << format_partition(mu) << '\n';
        }
    if (as_json) std::cout << arr.dump() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// verify: exhaustive classify-vs-oracle sweep plus demolition invariants

struct VerifyTask {
    Partition lam;
    Partition mu;
    RectangleFrame frame;
};

struct BruteCache {
    std::map<std::tuple<std::vector<int>, std::vector<int>, int, int>, bool> seen;

    bool operator()(const Partition& lam, const Partition& mu, RectangleFrame f) {
        auto key = std::make_tuple(lam.parts(), mu.parts(), f.rows, f.cols);
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        bool r = has_multiplicity_bruteforce(lam, mu, f);
        seen.emplace(std::move(key), r);
        return r;
    }
};

std::vector<std::string> verify_one(const VerifyTask& task, BruteCache& brute) {
    std::vector<std::string> issues;
    const std::string tag = format_partition(task.lam) + " | " + format_partition(task.mu) +
                            " | " + frame_str(task.frame) + " | ";

    Verdict verdict = classify(task.lam, task.mu, task.frame);
    bool oracle = brute(task.lam, task.mu, task.frame);
    bool predicted = verdict.outcome == Outcome::HasMultiplicity;
    if (predicted != oracle)
        issues.push_back(tag + "classify=" + to_string(verdict.outcome) +
                         " | oracle=" + (oracle ? "has_multiplicity" : "multiplicity_free"));

    RichardsonQuadruple q(task.lam, task.mu, task.frame);
    RichardsonQuadruple demolished = basic_demolition(q);
    if (!is_basic(demolished)) issues.push_back(tag + "invariant: demolition not basic");
    if (brute(demolished.lam(), demolished.mu(), demolished.frame()) != oracle)
        issues.push_back(tag + "invariant: demolition changed the verdict");
    for (LineRef line : empty_lines(q)) {
        RichardsonQuadruple r = remove_empty_line(q, line);
        if (expand_product(task.lam, task.mu, task.frame).terms() !=
            expand_product(r.lam(), r.mu(), r.frame()).terms())
            issues.push_back(tag + "invariant: empty-line removal changed the expansion");
    }
    for (LineRef line : stembridge_lines(q)) {
        RichardsonQuadruple r = stembridge_demolish(q, line);
        if (brute(r.lam(), r.mu(), r.frame()) && !oracle)
            issues.push_back(tag + "invariant: demolished multiplicity did not lift");
    }
    return issues;
}

int cmd_verify(int max_l, int max_k, int jobs, bool as_json) {
    auto started = std::chrono::steady_clock::now();

    std::vector<VerifyTask> tasks;
    for (int l = 1; l <= max_l; ++l)
        for (int k = 1; k <= max_k; ++k) {
            RectangleFrame f{l, k};
            std::vector<Partition> shapes = all_partitions_in(f);
            for (const Partition& lam : shapes)
                for (const Partition& mu : shapes)
                    if (!overlaps(lam, mu, f)) tasks.push_back({lam, mu, f});
        }

    std::vector<std::vector<std::string>> issues(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        BruteCache brute;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            issues[i] = verify_one(tasks[i], brute);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::size_t mismatch_count = 0;
    for (const auto& batch : issues) mismatch_count += batch.size();
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);

    if (as_json) {
        json out{{"max_l", max_l},
                 {"max_k", max_k},
                 {"pairs_checked", tasks.size()},
                 {"mismatches", json::array()}};
        for (const auto& batch : issues)
            for (const std::string& s : batch) out["mismatches"].push_back(s);
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "frames swept: l<=" << max_l << " k<=" << max_k << '\n';
        std::cout << "pairs checked: " << tasks.size() << '\n';
        std::cout << "mismatches: " << mismatch_count << '\n';
        for (const auto& batch : issues)
            for (const std::string& s : batch) std::cout << s << '\n';
    }
    std::cerr << "elapsed: " << elapsed.count() << "s\n";
    return mismatch_count == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert-class products on Grassmannians: expansions, "
                 "multiplicity-freeness verdicts, demolitions, and witnesses"};
    app.require_subcommand(1);

    std::string lam_text, mu_text;
    FrameArgs frame;
    bool as_json = false, verbose = false, construct = false, basic_only = false;
    int max_l = 4, max_k = 4, jobs = 1;

    auto add_shapes = [&](CLI::App* cmd) {
        cmd->add_option("lam", lam_text, "first partition, e.g. 4,4,2,2 or 7^5,3")->required();
        cmd->add_option("mu", mu_text, "second partition")->required();
        cmd->add_flag("--json", as_json, "JSON output");
    };

    CLI::App* product = app.add_subcommand("product", "expand sigma_lam * sigma_mu");
    add_shapes(product);
    add_frame_flags(product, frame);

    CLI::App* classify_cmd = app.add_subcommand("classify", "multiplicity-freeness verdict");
    add_shapes(classify_cmd);
    add_frame_flags(classify_cmd, frame);
    classify_cmd->add_flag("-v,--verbose", verbose, "show the demolition trace");

    CLI::App* witness = app.add_subcommand("witness", "two LR fillings proving multiplicity");
    add_shapes(witness);
    add_frame_flags(witness, frame);
    witness->add_flag("--construct", construct, "use the reduction-based construction");

    CLI::App* demolish = app.add_subcommand("demolish", "line statuses and basic demolition");
    add_shapes(demolish);
    add_frame_flags(demolish, frame);

    CLI::App* enumerate = app.add_subcommand("enumerate-mf", "list multiplicity-free pairs");
    add_frame_flags(enumerate, frame);
    enumerate->add_flag("--basic-only", basic_only, "restrict to basic quadruples");
    enumerate->add_flag("--json", as_json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "exhaustive classifier-vs-oracle sweep");
    verify->add_option("--max-l", max_l, "largest row count")->required();
    verify->add_option("--max-k", max_k, "largest column count")->required();
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--json", as_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (product->parsed()) return cmd_product(lam_text, mu_text, frame, as_json);
        if (classify_cmd->parsed()) return cmd_classify(lam_text, mu_text, frame, as_json, verbose);
        if (witness->parsed()) return cmd_witness(lam_text, mu_text, frame, as_json, construct);
        if (demolish->parsed()) return cmd_demolish(lam_text, mu_text, frame, as_json);
        if (enumerate->parsed()) return cmd_enumerate_mf(frame, basic_only, as_json);
        if (verify->parsed()) {
            if (max_l < 1 || max_k < 1) throw std::invalid_argument("verify: bounds must be >= 1");
            return cmd_verify(max_l, max_k, jobs, as_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
