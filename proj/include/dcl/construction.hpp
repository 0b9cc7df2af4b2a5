#pragma once

// The graph G with n vertices, n + 32t - 1 edges and pairwise distinct cycle
// lengths, for t = 27720r + 169 and n >= n_t.
//
// G is a union of subgraphs B_label sharing one vertex x and otherwise
// vertex-disjoint: a path B_0 of length n - n_t, plain cycles, and the two
// gadget families. G itself is never materialised (about 3.4e11 vertices at
// r = 1); everything here works on the plan and exact arithmetic.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "dcl/bounds.hpp"
#include "dcl/error.hpp"
#include "dcl/exactform.hpp"
#include "dcl/gadget.hpp"

namespace dcl {

struct ConstructionParams {
    Int r = 0;  ///< -1 when t is not 169 mod 27720 (exploratory only)
    Int t = 0;
    Int n = 0;
    Int n_t = 0;
    bool exploratory = false;
};

namespace detail {

/// (6911t^2 + 1028882t - 3309665) / 16 without the r >= 1 check.
inline Int raw_threshold(Int t) {
    Wide v = n_threshold_times16(t);
    if (v % 16 != 0) {
        Wide g = detail::wide_gcd(v, 16);
        throw NonIntegralError("n_t is not an integer at t=" + std::to_string(t), static_cast<Int>(16 / g));
    }
    return narrow(v / 16, "n_t");
}

}  // namespace detail

/// Checks t = 27720r + 169 with r >= 1 and n >= n_t; n defaults to n_t.
/// With `exploratory` the residue and r >= 1 are not enforced, only that n_t
/// is an integer and n >= n_t.
inline ConstructionParams validate_params(Int t, std::optional<Int> n = std::nullopt, bool exploratory = false) {
    ConstructionParams p;
    p.t = t;
    p.exploratory = exploratory;
    if (!exploratory) {
        if (!is_valid_t(t)) {
            throw InvalidT("t=" + std::to_string(t) + " is not of the form 27720r+169 with r>=1");
        }
    } else if (t < 1) {
        throw InvalidT("t must be positive, got " + std::to_string(t));
    }
    p.r = (t - kOffset) % kPeriod == 0 ? (t - kOffset) / kPeriod : -1;
    p.n_t = detail::raw_threshold(t);
    p.n = n.value_or(p.n_t);
    if (p.n < p.n_t) {
        throw NTooSmall("n=" + std::to_string(p.n) + " is below n_t=" + std::to_string(p.n_t), p.n_t);
    }
    return p;
}

inline ConstructionParams params_for_r(Int r, std::optional<Int> n = std::nullopt) {
    if (r < 1) throw InvalidT("r must be >= 1, got " + std::to_string(r));
    return validate_params(t_for(r), n);
}

// ---------------------------------------------------------------------------
// Plan

enum class SubgraphKind : std::uint8_t { Path, PlainCycle, FamilyA, FamilyB };

inline const char* kind_name(SubgraphKind k) {
    switch (k) {
    case SubgraphKind::Path: return "path";
    case SubgraphKind::PlainCycle: return "plain";
    case SubgraphKind::FamilyA: return "family_a";
    case SubgraphKind::FamilyB: return "family_b";
    }
    return "?";
}

/// Subgraphs B_label for first <= i <= last, where first and last depend on
/// t only and label on t and i. An empty range (first > last) is allowed.
struct SubgraphRange {
    SubgraphKind kind;
    AffineForm first;
    AffineForm last;
    AffineForm label;

    Int first_at(Int t) const { return first.eval(t, 0); }
    Int last_at(Int t) const { return last.eval(t, 0); }
    Int count(Int t) const { return std::max<Int>(0, last_at(t) - first_at(t) + 1); }

    std::string to_string() const {
        return std::string(kind_name(kind)) + " B_{" + label.to_string() + "} for " + first.to_string() +
               " <= i <= " + last.to_string();
    }
};

struct Plan {
    std::vector<SubgraphRange> ranges;
};

/// The subgraph list in the order of the vertex-count summation: B_0, the
/// plain cycles 1..19t+(7t+1)/4, family A with its companion plain cycles
/// 19t+2i+2, plain 21t-1481..21t, family B, then the ten plain blocks around
/// 22t..31t.
inline Plan build_plan() {
    using namespace dcl::literals;
    auto range = [](SubgraphKind k, const char* lo, const char* hi, const char* label) {
        return SubgraphRange{k, parse_form(lo), parse_form(hi), parse_form(label)};
    };
    using K = SubgraphKind;
    Plan plan;
    plan.ranges = {
        range(K::Path, "0", "0", "0"),
        range(K::PlainCycle, "1", "19t+(7t+1)/4", "i"),
        range(K::FamilyA, "(7t+1)/8", "t-742", "19t+2i+1"),
        range(K::PlainCycle, "(7t+1)/8", "t-742", "19t+2i+2"),
        range(K::PlainCycle, "21t-1481", "21t", "i"),
        range(K::FamilyB, "58", "(7t-7)/8", "21t+i-57"),
        range(K::PlainCycle, "22t-798", "22t+64", "i"),
        range(K::PlainCycle, "23t-734", "23t+267", "i"),
        range(K::PlainCycle, "24t-531", "24t+57", "i"),
        range(K::PlainCycle, "25t-741", "25t+58", "i"),
        range(K::PlainCycle, "26t-740", "26t+57", "i"),
        range(K::PlainCycle, "27t-741", "27t+57", "i"),
        range(K::PlainCycle, "28t-741", "28t+52", "i"),
        range(K::PlainCycle, "29t-746", "29t+60", "i"),
        range(K::PlainCycle, "30t-738", "30t+60", "i"),
        range(K::PlainCycle, "31t-738", "31t+799", "i"),
    };
    return plan;
}

inline Plan build_plan(const ConstructionParams&) { return build_plan(); }

struct KindCounts {
    Int path = 0;
    Int plain = 0;
    Int family_a = 0;
    Int family_b = 0;
};

inline KindCounts count_subgraphs(const Plan& plan, Int t) {
    KindCounts c;
    for (const auto& r : plan.ranges) {
        Int n = r.count(t);
        switch (r.kind) {
        case SubgraphKind::Path: c.path += n; break;
        case SubgraphKind::PlainCycle: c.plain += n; break;
        case SubgraphKind::FamilyA: c.family_a += n; break;
        case SubgraphKind::FamilyB: c.family_b += n; break;
        }
    }
    return c;
}

inline const GadgetTemplate& family_template(SubgraphKind k) {
    static const GadgetTemplate a = family_a();
    static const GadgetTemplate b = family_b();
    return k == SubgraphKind::FamilyA ? a : b;
}

inline const std::vector<SpectrumEntry>& family_spectrum(SubgraphKind k) {
    static const std::vector<SpectrumEntry> a = derive_spectrum(family_template(SubgraphKind::FamilyA));
    static const std::vector<SpectrumEntry> b = derive_spectrum(family_template(SubgraphKind::FamilyB));
    return k == SubgraphKind::FamilyA ? a : b;
}

/// Cycles contributed by one subgraph of the given kind.
inline Int cycles_per_subgraph(SubgraphKind k) {
    switch (k) {
    case SubgraphKind::Path: return 0;
    case SubgraphKind::PlainCycle: return 1;
    default: return static_cast<Int>(family_spectrum(k).size());
    }
}

/// Labels that occur more than once among the non-path subgraphs at t.
inline std::vector<Int> duplicate_labels(const Plan& plan, Int t) {
    std::vector<Int> labels;
    for (const auto& r : plan.ranges) {
        if (r.kind == SubgraphKind::Path) continue;
        for (Int i = r.first_at(t), hi = r.last_at(t); i <= hi; ++i) labels.push_back(r.label.eval(t, i));
    }
    std::sort(labels.begin(), labels.end());
    std::vector<Int> dups;
    for (std::size_t k = 1; k < labels.size(); ++k) {
        if (labels[k] == labels[k - 1] && (dups.empty() || dups.back() != labels[k])) dups.push_back(labels[k]);
    }
    return dups;
}

// ---------------------------------------------------------------------------
// Spectrum

struct Provenance {
    SubgraphKind kind = SubgraphKind::PlainCycle;
    Int index = 0;  ///< i for the families, the length for plain cycles
    Int label = 0;  ///< subscript of B
    Route route;

    /// "plain:B_892512" or "family_a:B_554392(i=24404):OneSpokeFar(11)".
    std::string to_string() const {
        std::string s = std::string(kind_name(kind)) + ":B_" + std::to_string(label);
        if (kind == SubgraphKind::FamilyA || kind == SubgraphKind::FamilyB) {
            s += "(i=" + std::to_string(index) + "):" + route.to_string();
        }
        return s;
    }

    friend bool operator==(const Provenance&, const Provenance&) = default;
    friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

struct SpectrumItem {
    Int length = 0;
    Provenance provenance;

    friend bool operator==(const SpectrumItem&, const SpectrumItem&) = default;
    friend auto operator<=>(const SpectrumItem&, const SpectrumItem&) = default;
};

namespace detail {

struct Segment {
    std::size_t range;
    Int lo;
    Int hi;
};

inline std::vector<Segment> segments(const Plan& plan, Int t, Int chunk = 2048) {
    std::vector<Segment> out;
    for (std::size_t r = 0; r < plan.ranges.size(); ++r) {
        Int lo = plan.ranges[r].first_at(t);
        Int hi = plan.ranges[r].last_at(t);
        for (Int a = lo; a <= hi; a += chunk) out.push_back({r, a, std::min(hi, a + chunk - 1)});
    }
    return out;
}

/// Runs fn(segment_index) over all segments on up to `threads` workers.
/// Output ordering is the caller's concern; workers only pick indices.
template <class Fn>
void run_segments(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k; !failed && (k = next.fetch_add(1)) < count;) {
                try {
                    fn(k);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

inline GadgetInstance checked_instance(SubgraphKind kind, Int t, Int i) {
    try {
        return evaluate(family_template(kind), t, i);
    } catch (const InvalidInstance& e) {
        throw InvalidInstance(std::string(kind_name(kind)) + " i=" + std::to_string(i) + ": " + e.what());
    }
}

/// Emits (length, provenance) for every cycle of one segment.
template <class Emit>
void emit_segment(const Plan& plan, const Segment& seg, Int t, Emit&& emit) {
    const SubgraphRange& r = plan.ranges[seg.range];
    for (Int i = seg.lo; i <= seg.hi; ++i) {
        switch (r.kind) {
        case SubgraphKind::Path: break;
        case SubgraphKind::PlainCycle: {
            Int len = r.label.eval(t, i);
            if (len < 1) throw InvalidInstance("plain cycle with length " + std::to_string(len));
            emit(len, Provenance{r.kind, len, len, Route::full()});
            break;
        }
        case SubgraphKind::FamilyA:
        case SubgraphKind::FamilyB: {
            checked_instance(r.kind, t, i);
            Int label = r.label.eval(t, i);
            for (const SpectrumEntry& e : family_spectrum(r.kind)) {
                Int len;
                try {
                    len = e.form.eval(t, i);
                } catch (const NonIntegralError& err) {
                    throw NonIntegralError(std::string(kind_name(r.kind)) + " i=" + std::to_string(i) + " " +
                                               e.route.to_string() + ": " + err.what(),
                                           err.denominator());
                }
                emit(len, Provenance{r.kind, i, label, e.route});
            }
            break;
        }
        }
    }
}

}  // namespace detail

/// Every cycle of G with its exact length, sorted by length then provenance.
inline std::vector<SpectrumItem> assemble_spectrum(const ConstructionParams& p, const Plan& plan,
                                                   unsigned threads = 1) {
    auto segs = detail::segments(plan, p.t);
    std::vector<std::vector<SpectrumItem>> parts(segs.size());
    detail::run_segments(segs.size(), threads, [&](std::size_t k) {
        detail::emit_segment(plan, segs[k], p.t,
                             [&](Int len, const Provenance& pr) { parts[k].push_back({len, pr}); });
    });
    std::vector<SpectrumItem> all;
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    all.reserve(total);
    for (auto& part : parts) {
        all.insert(all.end(), part.begin(), part.end());
        std::vector<SpectrumItem>().swap(part);
    }
    std::sort(all.begin(), all.end());
    return all;
}

inline std::vector<SpectrumItem> assemble_spectrum(const ConstructionParams& p, unsigned threads = 1) {
    return assemble_spectrum(p, build_plan(), threads);
}

// ---------------------------------------------------------------------------
// Counting

struct CountCheck {
    Int direct = 0;       ///< exact summation over the plan
    Int closed_form = 0;  ///< n - n_t + polynomial(t)/16
    Int simplified = 0;   ///< n for vertices, n + 32t - 1 for edges

    bool holds() const { return direct == closed_form && closed_form == simplified; }
};

namespace detail {

inline Int sixteenth(Wide v, const char* what) {
    if (v % 16 != 0) throw NonIntegralError(std::string(what) + " is not divisible by 16", 16);
    return narrow(v / 16, what);
}

template <class PerSubgraph>
Int sum_over_plan(const ConstructionParams& p, const Plan& plan, PerSubgraph&& per) {
    Wide total = 0;
    for (const auto& r : plan.ranges) {
        for (Int i = r.first_at(p.t), hi = r.last_at(p.t); i <= hi; ++i) total = wide_add(total, per(r, i));
    }
    return narrow(total, "plan sum");
}

}  // namespace detail

/// v(G): the hub plus every subgraph's vertices other than the hub.
inline CountCheck count_vertices(const ConstructionParams& p, const Plan& plan) {
    const Int t = p.t;
    Int body = detail::sum_over_plan(p, plan, [&](const SubgraphRange& r, Int i) -> Int {
        switch (r.kind) {
        case SubgraphKind::Path: return checked_sub(p.n, p.n_t);
        case SubgraphKind::PlainCycle: return r.label.eval(t, i) - 1;
        default: return detail::checked_instance(r.kind, t, i).vertex_count() - 1;
        }
    });
    CountCheck c;
    c.direct = checked_add(1, body);
    Wide poly = Wide(6911) * t * t + Wide(1028882) * t - 3309665;
    c.closed_form = checked_add(checked_sub(p.n, p.n_t), detail::sixteenth(poly, "vertex polynomial"));
    c.simplified = p.n;
    return c;
}

/// e(G), summed subgraph by subgraph.
inline CountCheck count_edges(const ConstructionParams& p, const Plan& plan) {
    const Int t = p.t;
    CountCheck c;
    c.direct = detail::sum_over_plan(p, plan, [&](const SubgraphRange& r, Int i) -> Int {
        switch (r.kind) {
        case SubgraphKind::Path: return checked_sub(p.n, p.n_t);
        case SubgraphKind::PlainCycle: return r.label.eval(t, i);
        default: return detail::checked_instance(r.kind, t, i).edge_count();
        }
    });
    Wide poly = Wide(6911) * t * t + Wide(1029394) * t - 3309681;
    c.closed_form = checked_add(checked_sub(p.n, p.n_t), detail::sixteenth(poly, "edge polynomial"));
    c.simplified = checked_add(p.n, checked_sub(checked_mul(32, t), 1));
    return c;
}

inline CountCheck count_vertices(const ConstructionParams& p) { return count_vertices(p, build_plan()); }
inline CountCheck count_edges(const ConstructionParams& p) { return count_edges(p, build_plan()); }

// ---------------------------------------------------------------------------
// Certificate

struct Collision {
    Int length = 0;
    std::vector<Provenance> provenances;
};

struct Certificate {
    static constexpr int kSchemaVersion = 1;

    ConstructionParams params;
    KindCounts counts;
    Int total_cycles = 0;
    CountCheck vertices;
    CountCheck edges;
    bool distinct = false;
    std::vector<Collision> collisions;
    double elapsed_ms = 0;
};

/// Full verification run: counts, both counting identities, and whether all
/// cycle lengths of G differ. Collisions are reported, not thrown.
inline Certificate verify_distinct(const ConstructionParams& p, const Plan& plan, unsigned threads = 1) {
    auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.params = p;
    cert.counts = count_subgraphs(plan, p.t);
    cert.vertices = count_vertices(p, plan);
    cert.edges = count_edges(p, plan);

    auto segs = detail::segments(plan, p.t);
    std::vector<std::vector<Int>> parts(segs.size());
    detail::run_segments(segs.size(), threads, [&](std::size_t k) {
        detail::emit_segment(plan, segs[k], p.t, [&](Int len, const Provenance&) { parts[k].push_back(len); });
    });
    std::vector<Int> lengths;
    for (auto& part : parts) {
        lengths.insert(lengths.end(), part.begin(), part.end());
        std::vector<Int>().swap(part);
    }
    cert.total_cycles = static_cast<Int>(lengths.size());
    std::sort(lengths.begin(), lengths.end());

    std::vector<Int> repeated;
    for (std::size_t k = 1; k < lengths.size(); ++k) {
        if (lengths[k] == lengths[k - 1] && (repeated.empty() || repeated.back() != lengths[k])) {
            repeated.push_back(lengths[k]);
        }
    }
    std::vector<Int>().swap(lengths);

    if (!repeated.empty()) {
        std::unordered_set<Int> wanted(repeated.begin(), repeated.end());
        std::vector<SpectrumItem> hits;
        for (const auto& seg : segs) {
            detail::emit_segment(plan, seg, p.t, [&](Int len, const Provenance& pr) {
                if (wanted.count(len)) hits.push_back({len, pr});
            });
        }
        std::sort(hits.begin(), hits.end());
        for (const auto& h : hits) {
            if (cert.collisions.empty() || cert.collisions.back().length != h.length) {
                cert.collisions.push_back({h.length, {}});
            }
            cert.collisions.back().provenances.push_back(h.provenance);
        }
    }
    cert.distinct = cert.collisions.empty();
    cert.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

inline Certificate verify_distinct(const ConstructionParams& p, unsigned threads = 1) {
    return verify_distinct(p, build_plan(), threads);
}

// ---------------------------------------------------------------------------
// Published tables

/// The 78 lengths listed for family A, in publication order.
inline const std::vector<const char*>& published_table_a() {
    static const std::vector<const char*> table = {
        "21t+i-57",     "22t+i+7",      "23t+i+210",    "24t+i",        "25t+i+1",      "26t+i",
        "27t+i",        "28t+i-5",      "29t+i+3",      "30t+i+3",      "31t+i+742",    "19t+2i+1",
        "32t+2i-51",    "32t+2i+216",   "34t+2i+209",   "34t+2i",       "36t+2i",       "36t+2i-1",
        "38t+2i-6",     "38t+2i-3",     "40t+2i+5",     "40t+2i+744",   "49t+3i+1312",  "42t+3i+158",
        "43t+3i+215",   "44t+3i+209",   "45t+3i-1",     "46t+3i-1",     "47t+3i-7",     "48t+3i-4",
        "49t+3i-1",     "50t+3i+746",   "58t+4i+1314",  "53t+4i+157",   "53t+4i+215",   "55t+4i+208",
        "55t+4i-2",     "57t+4i-7",     "57t+4i-5",     "59t+4i-2",     "59t+4i+740",   "68t+5i+1316",
        "63t+5i+157",   "64t+5i+214",   "65t+5i+207",   "66t+5i-8",     "67t+5i-5",     "68t+5i-3",
        "69t+5i+739",   "77t+6i+1310",  "74t+6i+156",   "74t+6i+213",   "76t+6i+201",   "76t+6i-6",
        "78t+6i-3",     "78t+6i+738",   "87t+7i+1309",  "84t+7i+155",   "85t+7i+207",   "86t+7i+203",
        "87t+7i-4",     "88t+7i+738",   "96t+8i+1308",  "95t+8i+149",   "95t+8i+209",   "97t+8i+205",
        "97t+8i+737",   "106t+9i+1308", "105t+9i+151",  "106t+9i+211",  "107t+9i+946",  "115t+10i+1307",
        "116t+10i+153", "116t+10i+952", "125t+11i+1516", "126t+11i+894", "134t+12i+1522", "144t+13i+1464",
    };
    return table;
}

/// The 66 lengths listed for family B, in publication order.
inline const std::vector<const char*>& published_table_b() {
    static const std::vector<const char*> table = {
        "21t+i-57",     "22t+i+7",      "23t+i+210",   "24t+i",        "25t+i+1",      "26t+i",
        "27t+i",        "28t+i-5",      "29t+i+3",     "30t+i+3",      "31t+i+742",    "32t+2i-51",
        "32t+2i+216",   "34t+2i+209",   "34t+2i",      "36t+2i",       "36t+2i-1",     "38t+2i-6",
        "38t+2i-3",     "40t+2i+5",     "40t+2i+744",  "42t+3i+158",   "43t+3i+215",   "44t+3i+209",
        "45t+3i-1",     "46t+3i-1",     "47t+3i-7",    "48t+3i-4",     "49t+3i-1",     "50t+3i+746",
        "53t+4i+157",   "53t+4i+215",   "55t+4i+208",  "55t+4i-2",     "57t+4i-7",     "57t+4i-5",
        "59t+4i-2",     "59t+4i+740",   "63t+5i+157",  "64t+5i+214",   "65t+5i+207",   "66t+5i-8",
        "67t+5i-5",     "68t+5i-3",     "69t+5i+739",  "74t+6i+156",   "74t+6i+213",   "76t+6i+201",
        "76t+6i-6",     "78t+6i-3",     "78t+6i+738",  "84t+7i+155",   "85t+7i+207",   "86t+7i+203",
        "87t+7i-4",     "88t+7i+738",   "95t+8i+149",  "95t+8i+209",   "97t+8i+205",   "97t+8i+737",
        "105t+9i+151",  "106t+9i+211",  "107t+9i+946", "116t+10i+153", "116t+10i+952", "126t+11i+894",
    };
    return table;
}

struct TableMatch {
    std::string family;
    std::size_t published = 0;
    std::size_t derived = 0;
    std::size_t matched = 0;
    std::vector<AffineForm> only_published;
    std::vector<AffineForm> only_derived;

    bool ok() const { return published == derived && matched == published; }
};

/// Multiset comparison of two form lists.
inline TableMatch match_forms(std::string family, std::vector<AffineForm> published,
                              std::vector<AffineForm> derived) {
    TableMatch m;
    m.family = std::move(family);
    m.published = published.size();
    m.derived = derived.size();
    std::sort(published.begin(), published.end());
    std::sort(derived.begin(), derived.end());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < published.size() || b < derived.size()) {
        if (b == derived.size() || (a < published.size() && published[a] < derived[b])) {
            m.only_published.push_back(published[a++]);
        } else if (a == published.size() || derived[b] < published[a]) {
            m.only_derived.push_back(derived[b++]);
        } else {
            ++m.matched;
            ++a;
            ++b;
        }
    }
    return m;
}

struct TableReport {
    TableMatch family_a;
    TableMatch family_b;

    bool ok() const { return family_a.ok() && family_b.ok(); }
};

inline TableReport check_published_tables() {
    auto forms = [](const std::vector<const char*>& rows) {
        std::vector<AffineForm> out;
        for (const char* r : rows) out.push_back(parse_form(r));
        return out;
    };
    auto derived = [](SubgraphKind k) {
        std::vector<AffineForm> out;
        for (const auto& e : family_spectrum(k)) out.push_back(e.form);
        return out;
    };
    return {match_forms("family_a", forms(published_table_a()), derived(SubgraphKind::FamilyA)),
            match_forms("family_b", forms(published_table_b()), derived(SubgraphKind::FamilyB))};
}

}  // namespace dcl
