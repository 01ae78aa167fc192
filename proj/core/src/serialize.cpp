#include "schubmf/serialize.hpp"

namespace schubmf {

using nlohmann::json;

std::string to_text(const Expansion& e) {
    std::string out;
    for (const auto& [nu, coeff] : e.terms()) {
        out += std::to_string(coeff);
        out += " * ";
        out += format_partition(nu);
        out += '\n';
    }
    return out;
}

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const Expansion& e) {
    json terms = json::array();
    for (const auto& [nu, coeff] : e.terms())
        terms.push_back({{"nu", to_json(nu)}, {"coeff", coeff}});
    return {{"frame", {e.frame().rows, e.frame().cols}}, {"terms", terms}};
}

json to_json(const Verdict& v) {
    json out;
    out["outcome"] = to_string(v.outcome);
    if (v.reason) out["reason"] = to_string(*v.reason);
    if (v.mult_case) out["case"] = to_string(*v.mult_case);
    if (v.demolished) {
        out["demolished"] = {{"lam", to_json(v.demolished->lam())},
                             {"mu", to_json(v.demolished->mu())},
                             {"frame", {v.demolished->frame().rows, v.demolished->frame().cols}}};
    }
    return out;
}

std::string filling_grid(const LrFilling& f) {
    std::string out;
    const Partition& inner = f.shape().inner();
    const Partition& outer = f.shape().outer();
    for (int i = 1; i <= static_cast<int>(outer.length()); ++i) {
        const auto& row = f.rows()[static_cast<std::size_t>(i) - 1];
        for (int c = 1; c <= outer.part(i); ++c) {
            if (c > 1) out += ' ';
            if (c <= inner.part(i))
                out += '.';
            else
                out += std::to_string(row[static_cast<std::size_t>(c - inner.part(i)) - 1]);
        }
        out += '\n';
    }
    return out;
}

json to_json(const LrFilling& f) {
    return {{"shape",
             {{"inner", to_json(f.shape().inner())}, {"outer", to_json(f.shape().outer())}}},
            {"entries", f.rows()}};
}

json to_json(const MultiplicityWitness& w) {
    return {{"nu", to_json(w.nu)},
            {"fillings", {to_json(w.first), to_json(w.second)}},
            {"notes", w.notes}};
}

} // namespace schubmf
