#pragma once

#include <string>
#include <vector>

namespace torelli {

// Set partition of the boundary labels 1..n. Blocks are sorted and ordered
// by their least label.
class Partition {
public:
    Partition() = default;

    static Partition maximal(int n);
    static Partition coarsest(int n);

    int universe() const { return n_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int label) const { return owner_.at(label - 1); }
    bool is_maximal() const { return size() == n_; }

    std::string to_string() const;
    bool operator==(const Partition& other) const { return n_ == other.n_ && blocks_ == other.blocks_; }

private:
    friend Partition validate_partition(int n, std::vector<std::vector<int>> blocks);
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> owner_;
};

Partition validate_partition(int n, std::vector<std::vector<int>> blocks);
// "1,2,3|4,5|6|7"; an empty string means the maximal partition.
Partition parse_partition(const std::string& text, int n);

// True iff every block of p2 lies inside a block of p1.
bool is_finer(const Partition& p2, const Partition& p1);

// All set partitions of 1..n in restricted-growth order.
std::vector<Partition> all_partitions(int n);

int euler_characteristic(int genus, int boundary);

class PartitionedSurface {
public:
    PartitionedSurface(int genus, int boundary, Partition partition);
    PartitionedSurface(int genus, int boundary) : PartitionedSurface(genus, boundary, Partition::maximal(boundary)) {}

    int genus() const { return genus_; }
    int boundary() const { return n_; }
    const Partition& partition() const { return partition_; }
    int euler() const { return euler_characteristic(genus_, n_); }

private:
    int genus_;
    int n_;
    Partition partition_;
};

enum class CappingKind { Capped, Punctured };

struct CappingTarget {
    CappingKind kind;
    int closed_genus;
    int punctures;
};

int capped_genus(int genus, int boundary, const Partition& p);
CappingTarget capping_target(const PartitionedSurface& s);
CappingTarget puncture_capping_target(const PartitionedSurface& s);

}  // namespace torelli
