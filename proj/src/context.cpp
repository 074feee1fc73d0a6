#include "wdlkit/context.hpp"

#include <algorithm>
#include <map>

namespace wdlkit {

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<IndexSet> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
    if (rows_.size() != objects_.size())
        throw ParseError("incidence row count does not match object count");
    for (std::size_t g = 0; g < rows_.size(); ++g)
        if (rows_[g].universe() != attributes_.size())
            throw ParseError("incidence row width does not match attribute count");
    for (std::size_t g = 0; g < objects_.size(); ++g) {
        if (object_index_.count(objects_[g])) throw ParseError("duplicate object name: " + objects_[g]);
        object_index_[objects_[g]] = static_cast<int>(g);
    }
    for (std::size_t m = 0; m < attributes_.size(); ++m) {
        if (attribute_index_.count(attributes_[m])) throw ParseError("duplicate attribute name: " + attributes_[m]);
        attribute_index_[attributes_[m]] = static_cast<int>(m);
    }
    cols_.assign(attributes_.size(), IndexSet(objects_.size()));
    for (std::size_t g = 0; g < rows_.size(); ++g)
        rows_[g].for_each([&](int m) { cols_[static_cast<std::size_t>(m)].set(g); });
}

int FormalContext::object_index(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) throw OutOfRange("object " + std::string(name));
    return it->second;
}

int FormalContext::attribute_index(std::string_view name) const {
    auto it = attribute_index_.find(std::string(name));
    if (it == attribute_index_.end()) throw OutOfRange("attribute " + std::string(name));
    return it->second;
}

IndexSet FormalContext::intent_of(const IndexSet& objects) const {
    if (objects.universe() != objects_.size())
        throw OutOfRange("object set drawn from a different universe");
    IndexSet out = IndexSet::full(attributes_.size());
    objects.for_each([&](int g) { out &= rows_[static_cast<std::size_t>(g)]; });
    return out;
}

IndexSet FormalContext::extent_of(const IndexSet& attributes) const {
    if (attributes.universe() != attributes_.size())
        throw OutOfRange("attribute set drawn from a different universe");
    IndexSet out = IndexSet::full(objects_.size());
    attributes.for_each([&](int m) { out &= cols_[static_cast<std::size_t>(m)]; });
    return out;
}

std::pair<IndexSet, IndexSet> FormalContext::object_concept(int g) const {
    if (g < 0 || static_cast<std::size_t>(g) >= objects_.size())
        throw OutOfRange("object index " + std::to_string(g));
    const IndexSet& intent = rows_[static_cast<std::size_t>(g)];
    return {extent_of(intent), intent_closure(intent)};
}

std::pair<IndexSet, IndexSet> FormalContext::attribute_concept(int m) const {
    if (m < 0 || static_cast<std::size_t>(m) >= attributes_.size())
        throw OutOfRange("attribute index " + std::to_string(m));
    const IndexSet& extent = cols_[static_cast<std::size_t>(m)];
    return {extent_closure(extent), intent_of(extent)};
}

bool FormalContext::is_clarified() const {
    for (std::size_t g = 0; g < rows_.size(); ++g)
        for (std::size_t h = g + 1; h < rows_.size(); ++h)
            if (rows_[g] == rows_[h]) return false;
    for (std::size_t m = 0; m < cols_.size(); ++m)
        for (std::size_t l = m + 1; l < cols_.size(); ++l)
            if (cols_[m] == cols_[l]) return false;
    return true;
}

namespace {

/// Groups indices by identical key sets; each class keeps its original first
/// position and the lexicographically least name.
struct MergePlan {
    std::vector<int> kept;  // original indices, in original order
    std::vector<std::string> kept_names;
    std::vector<std::pair<std::string, std::vector<std::string>>> log;
};

MergePlan plan_merge(const std::vector<IndexSet>& keys, const std::vector<std::string>& names) {
    std::map<std::vector<std::uint64_t>, std::vector<int>> classes;
    std::vector<std::vector<std::uint64_t>> order;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto k = keys[i].words();
        if (!classes.count(k)) order.push_back(k);
        classes[k].push_back(static_cast<int>(i));
    }
    MergePlan plan;
    for (const auto& k : order) {
        const auto& members = classes[k];
        std::string least = names[static_cast<std::size_t>(members[0])];
        for (int i : members) least = std::min(least, names[static_cast<std::size_t>(i)]);
        plan.kept.push_back(members[0]);
        plan.kept_names.push_back(least);
        if (members.size() > 1) {
            std::vector<std::string> rest;
            for (int i : members)
                if (names[static_cast<std::size_t>(i)] != least) rest.push_back(names[static_cast<std::size_t>(i)]);
            plan.log.emplace_back(least, std::move(rest));
        }
    }
    return plan;
}

} // namespace

ClarifiedContext clarify(const FormalContext& k) {
    std::vector<IndexSet> rows, cols;
    for (std::size_t g = 0; g < k.object_count(); ++g) rows.push_back(k.row(static_cast<int>(g)));
    for (std::size_t m = 0; m < k.attribute_count(); ++m) cols.push_back(k.column(static_cast<int>(m)));

    MergePlan obj_plan = plan_merge(rows, k.objects());
    MergePlan attr_plan = plan_merge(cols, k.attributes());

    std::vector<int> attr_new(k.attribute_count(), -1);
    for (std::size_t j = 0; j < attr_plan.kept.size(); ++j)
        attr_new[static_cast<std::size_t>(attr_plan.kept[j])] = static_cast<int>(j);

    std::vector<IndexSet> new_rows;
    for (int g : obj_plan.kept) {
        IndexSet row(attr_plan.kept.size());
        k.row(g).for_each([&](int m) {
            if (attr_new[static_cast<std::size_t>(m)] >= 0)
                row.set(static_cast<std::size_t>(attr_new[static_cast<std::size_t>(m)]));
        });
        new_rows.push_back(std::move(row));
    }
    return {FormalContext(obj_plan.kept_names, attr_plan.kept_names, std::move(new_rows)),
            std::move(obj_plan.log), std::move(attr_plan.log)};
}

} // namespace wdlkit
