#include "slopestab/search.hpp"

#include "slopestab/exceptional.hpp"

#include <algorithm>

namespace slopestab {

namespace {

std::string combo_expr(const std::vector<std::string>& labels,
                       const std::vector<long>& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (a[i] != 1) out += std::to_string(a[i]);
        out += labels[i];
    }
    return out;
}

}  // namespace

SearchReport search_destabilizers(const SurfaceModel& s, const DivClass& l,
                                  const SearchOptions& opt) {
    validate(s);
    if (opt.bound < 1) throw Error("search: bound must be at least 1");
    auto amp = is_ample(s, l);
    if (!amp.passed())
        throw Error("search: polarisation fails the ampleness test (" +
                    positivity_reasons(amp) + ")");

    // Generator set: roster curves first, then extra effective generators,
    // skipping anything that repeats an earlier class.
    std::vector<std::string> labels;
    std::vector<DivClass> gens;
    auto add = [&](const std::string& label, const DivClass& cls) {
        for (const auto& g : gens)
            if (g == cls) return;
        labels.push_back(label);
        gens.push_back(cls);
    };
    for (const auto& c : s.curves) add(c.label, c.cls);
    for (std::size_t i = 0; i < s.effective_generators.size(); ++i)
        add("G" + std::to_string(i + 1), s.effective_generators[i]);
    if (gens.empty()) throw Error("search: model has no generators to enumerate");

    // Candidate count (bound+1)^m - 1, refused early when above the cap.
    long long total = 1;
    bool over = false;
    for (std::size_t i = 0; i < gens.size() && !over; ++i) {
        if (total > opt.candidate_cap / (opt.bound + 1))
            over = true;
        else
            total *= opt.bound + 1;
    }
    if (over || total - 1 > opt.candidate_cap)
        throw Error("search: bound too large (over " +
                    std::to_string(opt.candidate_cap) + " candidates)");

    const bool filter = opt.genus_filter && sign(pair(s, s.canonical, l)) >= 0;

    SearchReport rep;
    rep.genus_filter_active = filter;

    std::vector<long> a(gens.size(), 0);
    for (;;) {
        // next multi-index, last coordinate fastest
        std::size_t i = gens.size();
        while (i > 0) {
            --i;
            if (a[i] < opt.bound) {
                ++a[i];
                std::fill(a.begin() + static_cast<long>(i) + 1, a.end(), 0);
                break;
            }
            if (i == 0) return rep;  // wrapped past the all-bound index
        }

        DivClass d(s.rank(), Rat(0));
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (a[k] != 0) d = d + Rat(a[k]) * gens[k];
        if (is_zero_class(d)) continue;
        if (sign(pair(s, l, d)) <= 0) continue;

        if (filter && arithmetic_genus(s, d) < Rat(2)) {
            ++rep.skipped_genus;
            continue;
        }

        ++rep.tested;
        auto v = destabilizes(s, l, d, opt.mode);
        rep.conditional = rep.conditional || v.conditional;
        if (!v.stable_wrt)
            rep.hits.push_back({d, combo_expr(labels, a), v});
    }
}

}  // namespace slopestab
