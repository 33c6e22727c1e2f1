#include "torelli/surface.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "torelli/errors.hpp"

namespace torelli {

Partition Partition::maximal(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return validate_partition(n, blocks);
}

Partition Partition::coarsest(int n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    return validate_partition(n, {all});
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out << '|';
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out << ',';
            out << blocks_[b][i];
        }
    }
    return out.str();
}

Partition validate_partition(int n, std::vector<std::vector<int>> blocks) {
    std::vector<int> owner(n, -1);
    for (auto& block : blocks) {
        if (block.empty()) throw Error(ErrorCode::EmptyBlock, "partition has an empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks.begin(), blocks.end());
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (int label : blocks[b]) {
            if (label < 1 || label > n)
                throw Error(ErrorCode::UnknownLabel, "label b_" + std::to_string(label) + " outside b_1..b_" + std::to_string(n));
            if (owner[label - 1] != -1)
                throw Error(ErrorCode::OverlappingBlocks, "label b_" + std::to_string(label) + " appears twice");
            owner[label - 1] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < n; ++i)
        if (owner[i] == -1) throw Error(ErrorCode::MissingLabel, "label b_" + std::to_string(i + 1) + " in no block");
    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    p.owner_ = std::move(owner);
    return p;
}

Partition parse_partition(const std::string& text, int n) {
    if (text.empty()) return Partition::maximal(n);
    std::vector<std::vector<int>> blocks;
    std::stringstream blocks_in(text);
    std::string block_text;
    while (std::getline(blocks_in, block_text, '|')) {
        std::vector<int> block;
        std::stringstream labels_in(block_text);
        std::string label;
        while (std::getline(labels_in, label, ',')) {
            auto first = label.find_first_not_of(" b_");
            auto last = label.find_last_not_of(' ');
            if (first == std::string::npos) throw Error(ErrorCode::MalformedPartition, "empty label in '" + text + "'");
            std::string digits = label.substr(first, last - first + 1);
            if (digits.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorCode::MalformedPartition, "bad label '" + label + "'");
            block.push_back(std::stoi(digits));
        }
        blocks.push_back(block);
    }
    if (!text.empty() && text.back() == '|') blocks.emplace_back();
    return validate_partition(n, blocks);
}

bool is_finer(const Partition& p2, const Partition& p1) {
    if (p2.universe() != p1.universe()) throw Error(ErrorCode::UniverseMismatch, "partitions over different label sets");
    for (const auto& block : p2.blocks()) {
        int owner = p1.block_of(block.front());
        for (int label : block)
            if (p1.block_of(label) != owner) return false;
    }
    return true;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> growth(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(used);
            for (int j = 0; j < n; ++j) blocks[growth[j]].push_back(j + 1);
            out.push_back(validate_partition(n, blocks));
            return;
        }
        for (int b = 0; b <= used && b < n; ++b) {
            growth[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

int euler_characteristic(int genus, int boundary) { return 2 - 2 * genus - boundary; }

PartitionedSurface::PartitionedSurface(int genus, int boundary, Partition partition)
    : genus_(genus), n_(boundary), partition_(std::move(partition)) {
    if (genus < 0 || boundary < 0) throw Error(ErrorCode::DegenerateParameters, "negative genus or boundary count");
    if (euler_characteristic(genus, boundary) >= 0)
        throw Error(ErrorCode::NonnegativeEuler, "S_" + std::to_string(genus) + "^" + std::to_string(boundary) + " has chi >= 0");
    if (partition_.universe() != boundary) throw Error(ErrorCode::UniverseMismatch, "partition universe differs from boundary count");
}

int capped_genus(int genus, int boundary, const Partition& p) {
    if (p.universe() != boundary) throw Error(ErrorCode::UniverseMismatch, "partition universe differs from boundary count");
    return genus + boundary - p.size();
}

CappingTarget capping_target(const PartitionedSurface& s) {
    return {CappingKind::Capped, capped_genus(s.genus(), s.boundary(), s.partition()), 0};
}

CappingTarget puncture_capping_target(const PartitionedSurface& s) {
    return {CappingKind::Punctured, s.genus(), s.boundary()};
}

}  // namespace torelli
