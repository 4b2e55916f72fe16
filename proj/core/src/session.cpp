#include "parmreach/session.hpp"

namespace parmreach {
namespace {

Session* default_session() {
    static Session session;
    return &session;
}

Session* active = nullptr;

}  // namespace

Session& current_session() {
    return active ? *active : *default_session();
}

ScopedSession::ScopedSession() : session_(std::make_unique<Session>()), previous_(active) {
    active = session_.get();
}

ScopedSession::~ScopedSession() {
    active = previous_;
}

}  // namespace parmreach
