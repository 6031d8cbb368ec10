#include "semirank/boolean_cone.hpp"

#include <algorithm>
#include <unordered_set>

#include "semirank/errors.hpp"

namespace semirank {

BooleanCone::BooleanCone(std::size_t ambient_dim, std::vector<BoolVector> generators)
    : ambient_dim_(ambient_dim), cache_(std::make_shared<ElementCache>()) {
    for (auto& g : generators) {
        if (g.size() != ambient_dim_)
            throw ShapeError("generator length " + std::to_string(g.size()) +
                             " does not match ambient dimension " +
                             std::to_string(ambient_dim_));
        if (g.none()) continue; // the zero vector generates nothing
        generators_.push_back(std::move(g));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()),
                      generators_.end());
}

BooleanCone BooleanCone::from_columns(const BinaryMatrix& w) {
    return BooleanCone(w.n_rows(), w.columns_as_vectors());
}

bool BooleanCone::contains(const BoolVector& x) const {
    if (x.size() != ambient_dim_)
        throw ShapeError("membership query length mismatch");
    BoolVector acc(ambient_dim_);
    for (const auto& g : generators_)
        if (dominates(g, x)) acc |= g;
    return acc == x;
}

bool BooleanCone::elements_cached() const { return cache_->ready; }

const std::vector<BoolVector>& BooleanCone::elements(std::size_t limit) const {
    if (!cache_->ready && generators_.size() > limit)
        throw ResourceError(
            "cone has " + std::to_string(generators_.size()) +
            " generators, above the enumeration limit of " + std::to_string(limit) +
            "; use the non-enumerating predicates (contains, dominated_generators) "
            "or raise the limit");
    std::call_once(cache_->once, [this]() {
        // Incremental span closure: fold each generator into the set of ORs
        // built so far.  Start from the zero vector (the empty OR).
        std::unordered_set<BoolVector, BoolVectorHash> seen;
        std::vector<BoolVector> elems;
        elems.emplace_back(ambient_dim_);
        seen.insert(elems.back());
        for (const auto& g : generators_) {
            std::size_t existing = elems.size();
            for (std::size_t k = 0; k < existing; ++k) {
                BoolVector v = elems[k] | g;
                if (seen.insert(v).second) elems.push_back(std::move(v));
            }
        }
        std::sort(elems.begin(), elems.end());
        cache_->sorted = std::move(elems);
        cache_->ready = true;
    });
    return cache_->sorted;
}

BooleanCone cone_elements(const BinaryMatrix& w, const SearchBudget& budget) {
    BooleanCone cone = BooleanCone::from_columns(w);
    cone.elements(budget.cone_enumeration_limit);
    return cone;
}

std::vector<BoolVector> minimal_generators(const BooleanCone& cone,
                                           const SearchBudget& budget) {
    const auto& elems = cone.elements(budget.cone_enumeration_limit);
    std::vector<BoolVector> out;
    for (const auto& y : elems) {
        if (y.none()) continue;
        // y is minimal iff the OR of everything strictly below it in the cone
        // falls short of y.
        BoolVector acc(cone.ambient_dim());
        for (const auto& x : elems)
            if (x != y && dominates(x, y)) acc |= x;
        if (acc != y) out.push_back(y);
    }
    // elems is sorted, so out already is.
    return out;
}

std::size_t cone_order(const BooleanCone& cone, const SearchBudget& budget) {
    return minimal_generators(cone, budget).size();
}

bool boolean_independent(const std::vector<BoolVector>& s, const SearchBudget& budget) {
    if (s.size() > budget.independence_limit)
        throw ResourceError("independence check over " + std::to_string(s.size()) +
                            " vectors exceeds the limit of " +
                            std::to_string(budget.independence_limit));
    if (s.empty()) return true;
    // Fold vectors in one at a time; a repeated OR value is a collision
    // between two distinct non-empty index subsets.
    std::unordered_set<BoolVector, BoolVectorHash> ors;
    std::vector<BoolVector> list;
    for (const auto& v : s) {
        if (v.size() != s.front().size())
            throw ShapeError("independence check requires equal lengths");
        std::size_t existing = list.size();
        if (!ors.insert(v).second) return false;
        list.push_back(v);
        for (std::size_t k = 0; k < existing; ++k) {
            BoolVector u = list[k] | v;
            if (!ors.insert(u).second) return false;
            list.push_back(std::move(u));
        }
    }
    return true;
}

namespace {

// Branch and bound for the largest independent subset.  Candidates arrive
// sorted; or_set carries the ORs of all non-empty subsets of `chosen`.
struct IndependentSetSearch {
    const std::vector<BoolVector>* candidates;
    std::size_t best = 0;
    std::size_t dim_cap = 0; // independent sets in {0,1}^n have at most n members
    detail::BudgetGauge* gauge;

    void run(std::vector<BoolVector>& ors,
             std::unordered_set<BoolVector, BoolVectorHash>& or_set,
             std::size_t chosen, std::size_t next) {
        if (!gauge->tick())
            throw ResourceError("independent-subset search budget exhausted");
        best = std::max(best, chosen);
        if (chosen == dim_cap) return;
        for (std::size_t i = next; i < candidates->size(); ++i) {
            if (chosen + (candidates->size() - i) <= best) return; // cannot improve
            const BoolVector& v = (*candidates)[i];
            // Try to extend: v itself plus v OR'd with every existing subset
            // OR must all be fresh and mutually distinct.
            std::vector<BoolVector> added;
            bool ok = or_set.insert(v).second;
            if (ok) {
                added.push_back(v);
                for (std::size_t k = 0; k < ors.size(); ++k) {
                    BoolVector u = ors[k] | v;
                    if (!or_set.insert(u).second) {
                        ok = false;
                        break;
                    }
                    added.push_back(std::move(u));
                }
            }
            if (ok) {
                std::size_t old_size = ors.size();
                for (auto& u : added) ors.push_back(u);
                run(ors, or_set, chosen + 1, i + 1);
                ors.resize(old_size);
            }
            for (auto& u : added) or_set.erase(u);
        }
    }
};

} // namespace

std::size_t boolean_column_rank(const BinaryMatrix& x, ColumnRankMode mode,
                                const SearchBudget& budget) {
    std::vector<BoolVector> candidates;
    if (mode == ColumnRankMode::FullCone) {
        BooleanCone cone = BooleanCone::from_columns(x);
        for (const auto& e : cone.elements(budget.cone_enumeration_limit))
            if (e.any()) candidates.push_back(e);
    } else {
        candidates = x.columns_as_vectors();
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
        std::erase_if(candidates, [](const BoolVector& v) { return v.none(); });
    }
    detail::BudgetGauge gauge(budget, 50'000'000);
    IndependentSetSearch search;
    search.candidates = &candidates;
    search.dim_cap = x.n_rows();
    search.gauge = &gauge;
    std::vector<BoolVector> ors;
    std::unordered_set<BoolVector, BoolVectorHash> or_set;
    search.run(ors, or_set, 0, 0);
    return search.best;
}

std::vector<std::size_t> dominated_generators(const BoolVector& x,
                                              const BinaryMatrix& w) {
    if (x.size() != w.n_rows())
        throw ShapeError("vector length does not match matrix row count");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < w.n_cols(); ++j)
        if (dominates(w.column(j), x)) out.push_back(j);
    return out;
}

} // namespace semirank
