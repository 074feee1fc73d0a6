#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wdlkit/errors.hpp"
#include "wdlkit/index_set.hpp"

namespace wdlkit {

/// A formal context (G, M, I): object and attribute name lists plus the
/// incidence relation, stored row- and column-wise as bit sets.
class FormalContext {
public:
    FormalContext() = default;  // the empty context

    /// rows[g] = attribute set of object g.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<IndexSet> rows);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }
    const std::string& object_name(int g) const { return objects_[static_cast<std::size_t>(g)]; }
    const std::string& attribute_name(int m) const { return attributes_[static_cast<std::size_t>(m)]; }
    int object_index(std::string_view name) const;     // throws OutOfRange
    int attribute_index(std::string_view name) const;  // throws OutOfRange

    bool incident(int g, int m) const { return rows_[static_cast<std::size_t>(g)].test(static_cast<std::size_t>(m)); }
    const IndexSet& row(int g) const { return rows_[static_cast<std::size_t>(g)]; }
    const IndexSet& column(int m) const { return cols_[static_cast<std::size_t>(m)]; }

    /// A' = attributes shared by every object of A. Throws OutOfRange when the
    /// universe of A does not match G.
    IndexSet intent_of(const IndexSet& objects) const;
    /// B' = objects having every attribute of B.
    IndexSet extent_of(const IndexSet& attributes) const;
    /// A'' as an extent.
    IndexSet extent_closure(const IndexSet& objects) const { return extent_of(intent_of(objects)); }
    IndexSet intent_closure(const IndexSet& attributes) const { return intent_of(extent_of(attributes)); }

    /// γg = (g'', g') and μm = (m', m'').
    std::pair<IndexSet, IndexSet> object_concept(int g) const;
    std::pair<IndexSet, IndexSet> attribute_concept(int m) const;

    bool is_clarified() const;

private:
    std::vector<std::string> objects_, attributes_;
    std::vector<IndexSet> rows_, cols_;
    std::unordered_map<std::string, int> object_index_, attribute_index_;
};

/// clarify() output: the merged context plus which names were folded into
/// each kept representative (the lexicographically least of its class).
struct ClarifiedContext {
    FormalContext context;
    std::vector<std::pair<std::string, std::vector<std::string>>> merged_objects;
    std::vector<std::pair<std::string, std::vector<std::string>>> merged_attributes;
};

ClarifiedContext clarify(const FormalContext& k);

} // namespace wdlkit
