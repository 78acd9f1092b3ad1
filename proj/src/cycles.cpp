#include <algorithm>

#include "qwz/errors.hpp"
#include "qwz/zeta.hpp"

namespace qwz {

std::vector<ArcIndex> least_rotation(const std::vector<ArcIndex>& seq) {
    const std::size_t len = seq.size();
    std::size_t best = 0;
    for (std::size_t start = 1; start < len; ++start) {
        for (std::size_t i = 0; i < len; ++i) {
            const ArcIndex a = seq[(start + i) % len];
            const ArcIndex b = seq[(best + i) % len];
            if (a != b) {
                if (a < b) best = start;
                break;
            }
        }
    }
    std::vector<ArcIndex> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = seq[(best + i) % len];
    return out;
}

namespace {

bool is_primitive(const std::vector<ArcIndex>& seq) {
    const std::size_t len = seq.size();
    for (std::size_t period = 1; period < len; ++period) {
        if (len % period != 0) continue;
        bool repeats = true;
        for (std::size_t i = 0; i + period < len && repeats; ++i) repeats = seq[i] == seq[i + period];
        if (repeats) return false;
    }
    return true;
}

class CycleSearch {
public:
    CycleSearch(const ArcSet& arcs, std::size_t max_length) : arcs_(arcs), max_length_(max_length) {
        successors_.resize(arcs.size());
        for (ArcIndex e = 0; e < arcs.size(); ++e)
            for (ArcIndex f = 0; f < arcs.size(); ++f)
                if (arcs.terminus(e) == arcs.origin(f) && f != arcs.inverse(e)) successors_[e].push_back(f);
    }

    std::vector<CycleClass> run() {
        for (ArcIndex start = 0; start < arcs_.size(); ++start) {
            path_.assign(1, start);
            extend();
        }
        std::sort(found_.begin(), found_.end(), [](const CycleClass& a, const CycleClass& b) {
            if (a.length() != b.length()) return a.length() < b.length();
            return a.representative < b.representative;
        });
        return std::move(found_);
    }

private:
    // The start arc is the smallest arc of the sequence; every class has a
    // least rotation beginning with its smallest arc, so nothing is missed.
    void extend() {
        const ArcIndex start = path_.front();
        const ArcIndex last = path_.back();
        if (arcs_.terminus(last) == arcs_.origin(start) && start != arcs_.inverse(last)) {
            if (least_rotation(path_) == path_) found_.push_back({path_, is_primitive(path_)});
        }
        if (path_.size() == max_length_) return;
        for (ArcIndex next : successors_[last]) {
            if (next < start) continue;
            path_.push_back(next);
            extend();
            path_.pop_back();
        }
    }

    const ArcSet& arcs_;
    std::size_t max_length_;
    std::vector<std::vector<ArcIndex>> successors_;
    std::vector<ArcIndex> path_;
    std::vector<CycleClass> found_;
};

}  // namespace

std::vector<CycleClass> enumerate_reduced_cycles(const ArcSet& arcs, std::size_t max_length) {
    if (arcs.size() > kMaxOracleArcs) {
        throw ResourceGuard("cycle enumeration is limited to " + std::to_string(kMaxOracleArcs) + " arcs, graph has " +
                            std::to_string(arcs.size()));
    }
    if (max_length > kMaxOracleOrder) {
        throw ResourceGuard("cycle enumeration is limited to length " + std::to_string(kMaxOracleOrder));
    }
    if (max_length == 0) return {};
    return CycleSearch(arcs, max_length).run();
}

PowerSeries euler_product_oracle(const ArcSet& arcs, std::size_t order) {
    PowerSeries product(order);
    product[0] = 1;
    for (const CycleClass& c : enumerate_reduced_cycles(arcs, order)) {
        if (!c.prime) continue;
        // Multiply by 1/(1 - t^len) = 1 + t^len + t^{2 len} + ...
        for (std::size_t k = c.length(); k <= order; ++k) product[k] += product[k - c.length()];
    }
    return product;
}

Rational cycle_norm(const CycleClass& cycle, const ArcSet& arcs, const WeightedMatrix& w) {
    Rational norm = 1;
    for (ArcIndex a : cycle.representative) norm *= w.arc_weight(arcs, a);
    return norm;
}

CycleClass inverse_cycle(const CycleClass& cycle, const ArcSet& arcs) {
    std::vector<ArcIndex> reversed;
    reversed.reserve(cycle.length());
    for (auto it = cycle.representative.rbegin(); it != cycle.representative.rend(); ++it)
        reversed.push_back(arcs.inverse(*it));
    return {least_rotation(reversed), cycle.prime};
}

}  // namespace qwz
