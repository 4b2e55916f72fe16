#pragma once

#include <memory>

#include "parmreach/poly_pool.hpp"
#include "parmreach/variables.hpp"

namespace parmreach {

/// Symbol table plus polynomial pool. Every polynomial, factorization and
/// model value refers to the session that was current when it was built;
/// values must not outlive it.
class Session {
public:
    VariableTable& variables() { return variables_; }
    const VariableTable& variables() const { return variables_; }
    PolyPool& pool() { return pool_; }
    const PolyPool& pool() const { return pool_; }

private:
    VariableTable variables_;
    PolyPool pool_;
};

/// The process-wide current session (a default one exists from startup).
Session& current_session();

/// Installs a fresh session for the lifetime of the guard and restores the
/// previous one afterwards. Not meant to be nested across threads.
class ScopedSession {
public:
    ScopedSession();
    ~ScopedSession();
    ScopedSession(const ScopedSession&) = delete;
    ScopedSession& operator=(const ScopedSession&) = delete;

    Session& get() { return *session_; }

private:
    std::unique_ptr<Session> session_;
    Session* previous_;
};

}  // namespace parmreach
