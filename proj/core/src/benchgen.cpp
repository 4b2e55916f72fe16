#include "parmreach/benchgen.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "parmreach/errors.hpp"

namespace parmreach {
namespace {

class Builder {
public:
    explicit Builder(std::string params) : params_(std::move(params)) {}

    const std::string& state(const std::string& name) {
        if (known_.emplace(name, states_.size()).second) {
            states_.push_back(name);
            if (states_.size() > kMaxGeneratedStates)
                throw SizeCapExceeded("instance exceeds " + std::to_string(kMaxGeneratedStates) + " states");
        }
        return name;
    }
    void trans(const std::string& from, const std::string& to, const std::string& expr) {
        state(from);
        state(to);
        trans_ << "@trans " << from << " -> " << to << " : " << expr << '\n';
    }
    void absorbing(const std::string& s) { trans(s, s, "1"); }
    void init(const std::string& s) { init_ = state(s); }
    void target(const std::string& s) { target_ = state(s); }

    std::string text(const std::string& title) const {
        std::ostringstream os;
        os << "# " << title << '\n' << "@params " << params_ << '\n';
        for (const auto& s : states_) os << "@state " << s << '\n';
        os << "@init " << init_ << " : 1\n" << trans_.str() << "@target " << target_ << '\n';
        return os.str();
    }

private:
    std::string params_;
    std::vector<std::string> states_;
    std::map<std::string, std::size_t> known_;
    std::ostringstream trans_;
    std::string init_;
    std::string target_;
};

std::string idx(const char* prefix, std::initializer_list<unsigned> parts) {
    std::string s = prefix;
    for (unsigned p : parts) s += "_" + std::to_string(p);
    return s;
}

std::string brp(unsigned n, unsigned max) {
    Builder b("pK pL");
    b.init(idx("send", {1, 0, 0}));
    // send_i_a_r: chunk i, attempt a, r = receiver already holds chunk i
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned a = 0; a <= max; ++a) {
            for (unsigned r = 0; r <= 1; ++r) {
                if (a == 0 && r == 1) continue;
                std::string s = idx("send", {i, a, r});
                std::string wait = idx("ack", {i, a});
                b.trans(s, wait, "pK");
                std::string lost = a < max ? idx("send", {i, a + 1, r}) : (r ? "nok_received" : "nok_lost");
                b.trans(s, lost, "1-pK");
            }
            std::string wait = idx("ack", {i, a});
            b.trans(wait, i < n ? idx("send", {i + 1, 0, 0}) : "ok", "pL");
            b.trans(wait, a < max ? idx("send", {i, a + 1, 1}) : "nok_received", "1-pL");
        }
    }
    b.absorbing("ok");
    b.absorbing("nok_received");
    b.absorbing("nok_lost");
    b.target("nok_received");
    return b.text("BRP with " + std::to_string(n) + " chunks, " + std::to_string(max) + " retransmissions");
}

std::string crowds(unsigned n, unsigned runs) {
    Builder b("p_f B");
    std::string good_self = "(1-B)/" + std::to_string(n);
    std::string good_other = "(1-B)*" + std::to_string(n - 1) + "/" + std::to_string(n);
    // c = times the initiator has been observed so far (0 or 1)
    auto start = [&](unsigned k, unsigned c) {
        return k > runs ? (c ? "done_once" : "done_never") : idx("start", {k, c});
    };
    b.init(start(1, 0));
    for (unsigned k = 1; k <= runs; ++k) {
        for (unsigned c = 0; c <= 1; ++c) {
            std::string s = start(k, c);
            std::string g = idx("good", {k, c});
            std::string gi = idx("initiator", {k, c});
            std::string seen = c ? "identified" : start(k + 1, 1);
            b.trans(s, seen, "B");
            b.trans(s, gi, good_self);
            b.trans(s, g, good_other);
            for (const std::string& at : {g, gi}) {
                b.trans(at, start(k + 1, c), "1-p_f");
                b.trans(at, at == gi ? seen : start(k + 1, c), "p_f*B");
                b.trans(at, gi, "p_f*" + good_self);
                b.trans(at, g, "p_f*" + good_other);
            }
        }
    }
    b.absorbing("done_never");
    b.absorbing("done_once");
    b.absorbing("identified");
    b.target("identified");
    return b.text("Crowds with " + std::to_string(n) + " honest members, " + std::to_string(runs) + " runs");
}

std::string zeroconf(unsigned n) {
    Builder b("p q");
    b.init("start");
    b.trans("start", "ok", "1-q");
    b.trans("start", idx("probe", {1}), "q");
    for (unsigned i = 1; i <= n; ++i) {
        std::string s = idx("probe", {i});
        b.trans(s, "start", "1-p");
        b.trans(s, i < n ? idx("probe", {i + 1}) : "err", "p");
    }
    b.absorbing("ok");
    b.absorbing("err");
    b.target("ok");
    return b.text("Zeroconf with " + std::to_string(n) + " probes");
}

}  // namespace

std::string BenchSpec::name() const {
    switch (family) {
        case Family::Brp: return "brp_" + std::to_string(n) + "_" + std::to_string(max);
        case Family::Crowds: return "crowds_" + std::to_string(n) + "_" + std::to_string(runs);
        case Family::Zeroconf: return "zeroconf_" + std::to_string(n);
    }
    return "unknown";
}

std::string generate(const BenchSpec& spec) {
    switch (spec.family) {
        case BenchSpec::Family::Brp:
            if (spec.n == 0) throw std::invalid_argument("brp needs at least one chunk");
            return brp(spec.n, spec.max);
        case BenchSpec::Family::Crowds:
            if (spec.n < 2 || spec.runs == 0) throw std::invalid_argument("crowds needs n >= 2 and at least one run");
            return crowds(spec.n, spec.runs);
        case BenchSpec::Family::Zeroconf:
            if (spec.n == 0) throw std::invalid_argument("zeroconf needs at least one probe");
            return zeroconf(spec.n);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace parmreach
