#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parmreach/polynomial.hpp"

namespace parmreach {

/// One interned polynomial. Entries live as long as their pool and are
/// never moved, so a `PolyHandle` can be compared and dereferenced freely.
struct PolyEntry {
    std::uint64_t id;
    Polynomial poly;
    Irreducibility irreducibility;
};

/// Pointer to an interned polynomial; ordering follows interning order.
class PolyHandle {
public:
    PolyHandle() = default;
    explicit PolyHandle(const PolyEntry* entry) : entry_(entry) {}

    const Polynomial& poly() const { return entry_->poly; }
    std::uint64_t id() const { return entry_->id; }
    bool irreducible() const { return entry_->irreducibility == Irreducibility::Irreducible; }
    const PolyEntry* entry() const { return entry_; }

    friend bool operator==(PolyHandle a, PolyHandle b) { return a.entry_ == b.entry_; }
    friend bool operator<(PolyHandle a, PolyHandle b) { return a.entry_->id < b.entry_->id; }

private:
    const PolyEntry* entry_ = nullptr;
};

struct PoolStats {
    std::uint64_t stored_polynomials = 0;
    std::uint64_t gcd_kernel_calls = 0;
};

/// Hash-consing store for polynomials used as factorization bases, plus the
/// memo tables that make repeated gcd work cheap: pairwise gcd results and
/// known splittings of bases discovered by earlier gcd computations.
class PolyPool {
public:
    PolyPool() = default;
    PolyPool(const PolyPool&) = delete;
    PolyPool& operator=(const PolyPool&) = delete;

    PolyHandle intern(const Polynomial& p);
    PolyHandle one() { return intern(Polynomial(1)); }

    /// gcd of two interned polynomials, memoized per unordered pair.
    PolyHandle gcd(PolyHandle a, PolyHandle b);

    /// Records that `base` equals the product of `parts` (base^e each).
    void record_split(PolyHandle base, std::vector<std::pair<PolyHandle, std::uint32_t>> parts);
    std::optional<std::vector<std::pair<PolyHandle, std::uint32_t>>> known_split(PolyHandle base) const;

    PoolStats stats() const;
    std::size_t size() const;

    /// Optional cap on stored polynomials; once exceeded, rational function
    /// arithmetic flattens factorizations to a single base. 0 = unlimited.
    void set_capacity(std::size_t cap) { capacity_ = cap; }
    std::size_t capacity() const { return capacity_; }
    bool over_capacity() const { return capacity_ != 0 && size() > capacity_; }

private:
    struct PolyKeyHash {
        std::size_t operator()(const Polynomial* p) const noexcept { return p->hash(); }
    };
    struct PolyKeyEq {
        bool operator()(const Polynomial* a, const Polynomial* b) const { return *a == *b; }
    };

    mutable std::shared_mutex mutex_;
    std::deque<PolyEntry> entries_;
    std::unordered_map<const Polynomial*, const PolyEntry*, PolyKeyHash, PolyKeyEq> index_;

    mutable std::mutex memo_mutex_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, const PolyEntry*> gcd_memo_;
    std::unordered_map<std::uint64_t, std::vector<std::pair<PolyHandle, std::uint32_t>>> splits_;

    std::atomic<std::uint64_t> kernel_calls_{0};
    std::size_t capacity_ = 0;
};

}  // namespace parmreach
