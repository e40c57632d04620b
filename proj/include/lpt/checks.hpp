#ifndef LPT_CHECKS_HPP
#define LPT_CHECKS_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpt/errors.hpp"

namespace lpt {

// 64-bit FNV-1a. Used for report digests, which must be stable across runs
// and platforms (std::hash is not).
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

enum class Relation { LessEqual, GreaterEqual, Holds };

inline const char* to_string(Relation r) {
    switch (r) {
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Holds: return "holds";
    }
    return "?";
}

// Relative slack granted to the right-hand side of every floating bound.
inline constexpr double kBoundSlack = 1e-9;

inline bool le_with_slack(double lhs, double rhs) {
    return lhs <= rhs + kBoundSlack * std::max(1.0, std::abs(rhs));
}

inline bool ge_with_slack(double lhs, double rhs) {
    return lhs + kBoundSlack * std::max(1.0, std::abs(rhs)) >= rhs;
}

struct CheckRecord {
    std::string id;
    std::uint64_t inputs_digest = 0;
    double value = 0.0;
    double bound = 0.0;
    Relation relation = Relation::Holds;
    bool pass = true;
    std::string witness;  // only retained for failures or when the log asks for it

    double margin() const {
        switch (relation) {
            case Relation::LessEqual: return bound - value;
            case Relation::GreaterEqual: return value - bound;
            case Relation::Holds: return pass ? 0.0 : -1.0;
        }
        return 0.0;
    }
};

struct CheckSummary {
    std::size_t count = 0;
    std::size_t failures = 0;
    double min_margin = 0.0;
    std::uint64_t digest = 14695981039346656037ull;
};

class CheckLog {
public:
    explicit CheckLog(bool keep_witnesses = false) : keep_witnesses_(keep_witnesses) {}

    bool keep_witnesses() const noexcept { return keep_witnesses_; }

    void add(CheckRecord record) {
        if (!record.pass) ++failures_;
        records_.push_back(std::move(record));
    }

    void append(const CheckLog& other) {
        for (const auto& r : other.records_) add(r);
    }

    const std::vector<CheckRecord>& records() const noexcept { return records_; }
    std::size_t failures() const noexcept { return failures_; }
    std::size_t size() const noexcept { return records_.size(); }

    // Per-id aggregation in id order; the digest folds every record's inputs
    // digest and value in insertion order.
    std::map<std::string, CheckSummary> summarize() const {
        std::map<std::string, CheckSummary> out;
        for (const auto& r : records_) {
            auto& s = out[r.id];
            double m = r.margin();
            s.min_margin = s.count == 0 ? m : std::min(s.min_margin, m);
            ++s.count;
            if (!r.pass) ++s.failures;
            s.digest = fnv1a(hex64(r.inputs_digest), s.digest);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g/%.17g", r.value, r.bound);
            s.digest = fnv1a(buf, s.digest);
        }
        return out;
    }

private:
    bool keep_witnesses_;
    std::vector<CheckRecord> records_;
    std::size_t failures_ = 0;
};

namespace detail {
inline thread_local CheckLog* active_log = nullptr;
}

// Routes every check performed on this thread into `log` for the scope's
// lifetime. Scopes nest; the previous log is restored on exit.
class ScopedCheckLog {
public:
    explicit ScopedCheckLog(CheckLog& log) : previous_(detail::active_log) { detail::active_log = &log; }
    ~ScopedCheckLog() { detail::active_log = previous_; }
    ScopedCheckLog(const ScopedCheckLog&) = delete;
    ScopedCheckLog& operator=(const ScopedCheckLog&) = delete;

private:
    CheckLog* previous_;
};

namespace detail {

template <class Witness>
void emit_check(std::string_view id, double value, double bound, Relation rel, bool pass,
                Witness&& witness) {
    CheckLog* log = active_log;
    if (log == nullptr && pass) return;
    std::string w = witness();
    if (log != nullptr) {
        CheckRecord r;
        r.id = std::string(id);
        r.inputs_digest = fnv1a(w);
        r.value = value;
        r.bound = bound;
        r.relation = rel;
        r.pass = pass;
        if (!pass || log->keep_witnesses()) r.witness = w;
        log->add(std::move(r));
    }
    if (!pass) {
        throw CheckFailure(std::string(id), std::string(to_string(rel)) + " violated: value " +
                                                std::to_string(value) + " vs bound " +
                                                std::to_string(bound) + "; " + w);
    }
}

}  // namespace detail

// value <= bound (bound gets the relative slack).
template <class Witness>
void check_le(std::string_view id, double value, double bound, Witness&& witness) {
    detail::emit_check(id, value, bound, Relation::LessEqual, le_with_slack(value, bound),
                       std::forward<Witness>(witness));
}

// value >= bound (bound gets the relative slack).
template <class Witness>
void check_ge(std::string_view id, double value, double bound, Witness&& witness) {
    detail::emit_check(id, value, bound, Relation::GreaterEqual, ge_with_slack(value, bound),
                       std::forward<Witness>(witness));
}

template <class Witness>
void check_true(std::string_view id, bool condition, Witness&& witness) {
    detail::emit_check(id, condition ? 1.0 : 0.0, 1.0, Relation::Holds, condition,
                       std::forward<Witness>(witness));
}

}  // namespace lpt

#endif  // LPT_CHECKS_HPP
