#pragma once
// Finite sets as canonical index ranges 0..size-1, with optional element labels.

#include <string>
#include <vector>

#include "polysys/errors.hpp"

namespace polysys {

class FinSet {
public:
    FinSet() = default;

    explicit FinSet(int size) : size_(size) {
        if (size < 0) throw Error("FinSet size must be non-negative");
    }

    FinSet(int size, std::vector<std::string> labels) : size_(size), labels_(std::move(labels)) {
        if (size < 0) throw Error("FinSet size must be non-negative");
        if (!labels_.empty()) {
            if (static_cast<int>(labels_.size()) != size_)
                throw Error("FinSet label count must equal size");
            for (std::size_t i = 0; i < labels_.size(); ++i)
                for (std::size_t j = i + 1; j < labels_.size(); ++j)
                    if (labels_[i] == labels_[j])
                        throw Error("FinSet labels must be distinct");
        }
    }

    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool hasLabels() const { return !labels_.empty(); }

    // Returns "" when the set is unlabeled.
    const std::string& label(int i) const {
        static const std::string kEmpty;
        if (labels_.empty()) return kEmpty;
        return labels_.at(static_cast<std::size_t>(i));
    }

    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const FinSet& a, const FinSet& b) {
        return a.size_ == b.size_; // labels are metadata only
    }

private:
    int size_ = 0;
    std::vector<std::string> labels_;
};

} // namespace polysys
