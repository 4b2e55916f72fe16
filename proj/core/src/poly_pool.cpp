#include "parmreach/poly_pool.hpp"

namespace parmreach {

PolyHandle PolyPool::intern(const Polynomial& p) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = index_.find(&p); it != index_.end()) return PolyHandle(it->second);
    }
    Irreducibility irr = p.is_zero() ? Irreducibility::Unknown : is_irreducible_heuristic(p);
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(&p); it != index_.end()) return PolyHandle(it->second);
    entries_.push_back(PolyEntry{entries_.size(), p, irr});
    const PolyEntry* e = &entries_.back();
    index_.emplace(&e->poly, e);
    return PolyHandle(e);
}

PolyHandle PolyPool::gcd(PolyHandle a, PolyHandle b) {
    const std::pair<std::uint64_t, std::uint64_t> key = std::minmax(a.id(), b.id());
    {
        std::lock_guard lock(memo_mutex_);
        if (auto it = gcd_memo_.find(key); it != gcd_memo_.end()) return PolyHandle(it->second);
    }
    ++kernel_calls_;
    PolyHandle g = intern(parmreach::gcd(a.poly(), b.poly()));
    std::lock_guard lock(memo_mutex_);
    gcd_memo_.emplace(key, g.entry());
    return g;
}

void PolyPool::record_split(PolyHandle base, std::vector<std::pair<PolyHandle, std::uint32_t>> parts) {
    std::lock_guard lock(memo_mutex_);
    splits_[base.id()] = std::move(parts);
}

std::optional<std::vector<std::pair<PolyHandle, std::uint32_t>>> PolyPool::known_split(PolyHandle base) const {
    std::lock_guard lock(memo_mutex_);
    if (auto it = splits_.find(base.id()); it != splits_.end()) return it->second;
    return std::nullopt;
}

PoolStats PolyPool::stats() const {
    return PoolStats{static_cast<std::uint64_t>(size()), kernel_calls_.load()};
}

std::size_t PolyPool::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

}  // namespace parmreach
