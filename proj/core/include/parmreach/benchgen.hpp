#pragma once

#include <cstddef>
#include <string>

namespace parmreach {

/// Desk-scale instances of three protocol families.
///
/// Brp(n, max): n chunks, each retransmitted at most `max` times over a
///   lossy frame channel (delivery pK) and a lossy ack channel (delivery
///   pL). Target: the sender gives up on a chunk the receiver already has.
/// Crowds(n, r): r anonymous-routing runs in a crowd of n honest members;
///   every message is forwarded with probability p_f, a member is
///   corrupt with probability B. Target: the initiator is observed twice.
/// Zeroconf(n): address probe with n unanswered tries before giving up;
///   q is the chance of picking a used address, p the chance a probe is
///   not answered. Target: a fresh address is configured.
struct BenchSpec {
    enum class Family { Brp, Crowds, Zeroconf };
    Family family = Family::Zeroconf;
    unsigned n = 2;
    unsigned max = 1;   // Brp
    unsigned runs = 2;  // Crowds

    static BenchSpec brp(unsigned n, unsigned max) { return {Family::Brp, n, max, 0}; }
    static BenchSpec crowds(unsigned n, unsigned runs) { return {Family::Crowds, n, 0, runs}; }
    static BenchSpec zeroconf(unsigned n) { return {Family::Zeroconf, n, 0, 0}; }

    std::string name() const;
};

inline constexpr std::size_t kMaxGeneratedStates = 5000;

/// Model-file text for the instance. Throws SizeCapExceeded above
/// kMaxGeneratedStates states, std::invalid_argument on zero sizes.
std::string generate(const BenchSpec& spec);

}  // namespace parmreach
