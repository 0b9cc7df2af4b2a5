#pragma once

// Hub-and-spoke gadgets: a cycle through a hub x plus k internally disjoint
// paths ("spokes") from x to distinct cycle vertices.
//
// Every cycle of such a gadget passes through x, because the graph minus x
// is a tree (a path with pendant paths). A cycle therefore leaves x along one
// of the k+2 routes (two cycle arcs, k spokes) and returns along another,
// which gives exactly 1 + 2k + k(k-1)/2 cycles:
//
//   both arcs                     L
//   spoke j + arc back to x       l_j + a_j        (near)
//   spoke j + arc forward to x    l_j + L - a_j    (far)
//   spokes j < k + arc between    l_j + l_k + a_k - a_j

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dcl/error.hpp"
#include "dcl/exactform.hpp"
#include "dcl/graph.hpp"

namespace dcl {

struct SpokeSpec {
    AffineForm length;  ///< edges from the hub to the attachment vertex
    AffineForm attach;  ///< position on the cycle, in edges from the hub

    friend bool operator==(const SpokeSpec&, const SpokeSpec&) = default;
};

struct GadgetTemplate {
    AffineForm cycle_length;
    std::vector<SpokeSpec> spokes;

    std::size_t spoke_count() const noexcept { return spokes.size(); }

    /// 1 + 2k + C(k,2).
    std::size_t cycle_count() const noexcept {
        std::size_t k = spokes.size();
        return 1 + 2 * k + k * (k - 1) / 2;
    }

    friend bool operator==(const GadgetTemplate&, const GadgetTemplate&) = default;
};

enum class RouteKind : std::uint8_t { FullCycle, OneSpokeNear, OneSpokeFar, TwoSpokes };

/// Identifies one simple cycle of a gadget. Spoke indices are 1-based.
struct Route {
    RouteKind kind = RouteKind::FullCycle;
    std::uint8_t j = 0;
    std::uint8_t k = 0;

    static Route full() { return {}; }
    static Route near(std::size_t j) { return {RouteKind::OneSpokeNear, static_cast<std::uint8_t>(j), 0}; }
    static Route far(std::size_t j) { return {RouteKind::OneSpokeFar, static_cast<std::uint8_t>(j), 0}; }
    static Route pair(std::size_t j, std::size_t k) {
        return {RouteKind::TwoSpokes, static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k)};
    }

    std::string to_string() const {
        switch (kind) {
        case RouteKind::FullCycle: return "FullCycle";
        case RouteKind::OneSpokeNear: return "OneSpokeNear(" + std::to_string(j) + ")";
        case RouteKind::OneSpokeFar: return "OneSpokeFar(" + std::to_string(j) + ")";
        case RouteKind::TwoSpokes: return "TwoSpokes(" + std::to_string(j) + "," + std::to_string(k) + ")";
        }
        return "?";
    }

    friend bool operator==(const Route&, const Route&) = default;
    friend auto operator<=>(const Route&, const Route&) = default;
};

struct SpectrumEntry {
    AffineForm form;
    Route route;
};

/// All 1 + 2k + C(k,2) cycle lengths of the gadget, symbolically: full
/// cycle, then near/far per spoke, then spoke pairs in lexicographic order.
inline std::vector<SpectrumEntry> derive_spectrum(const GadgetTemplate& g) {
    const AffineForm& L = g.cycle_length;
    const auto& sp = g.spokes;
    std::vector<SpectrumEntry> out;
    out.reserve(g.cycle_count());
    out.push_back({L, Route::full()});
    for (std::size_t j = 0; j < sp.size(); ++j) {
        out.push_back({sp[j].length + sp[j].attach, Route::near(j + 1)});
        out.push_back({sp[j].length + L - sp[j].attach, Route::far(j + 1)});
    }
    for (std::size_t j = 0; j < sp.size(); ++j) {
        for (std::size_t k = j + 1; k < sp.size(); ++k) {
            out.push_back({sp[j].length + sp[k].length + sp[k].attach - sp[j].attach, Route::pair(j + 1, k + 1)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation at concrete parameters

enum class ViolationKind { NonIntegral, CycleTooShort, SpokeTooShort, AttachOutOfRange, AttachOrder };

struct Violation {
    ViolationKind kind;
    std::string where;   ///< "cycle", "spoke 3 length", ...
    std::string detail;

    std::string to_string() const { return where + ": " + detail; }
};

struct ValidityReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::string summary() const {
        if (ok()) return "OK";
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.to_string();
        }
        return s;
    }
};

/// Concrete integer values of a template at (t, i).
struct GadgetInstance {
    Int cycle_length = 0;
    std::vector<Int> spoke_lengths;
    std::vector<Int> attach;

    Int vertex_count() const {
        Int v = cycle_length;  // hub plus L-1 cycle vertices
        for (Int l : spoke_lengths) v = checked_add(v, l - 1);
        return v;
    }
    Int edge_count() const {
        Int e = cycle_length;
        for (Int l : spoke_lengths) e = checked_add(e, l);
        return e;
    }
};

/// Checks integrality, l_j >= 1 and 0 < a_1 < ... < a_k < L at (t, i).
/// Every violation is reported; nothing is thrown for geometric problems.
inline ValidityReport validate_instance(const GadgetTemplate& g, Int t, Int i) {
    ValidityReport rep;
    auto value = [&](const AffineForm& f, const std::string& where, Int& out) {
        Rational v = f.eval_exact(t, i);
        if (!v.is_integer()) {
            rep.violations.push_back({ViolationKind::NonIntegral, where,
                                      f.to_string() + " = " + v.to_string() + " is not an integer"});
            return false;
        }
        out = v.num();
        return true;
    };

    Int L = 0;
    bool have_L = value(g.cycle_length, "cycle", L);
    if (have_L && L < 1) {
        rep.violations.push_back({ViolationKind::CycleTooShort, "cycle", "length " + std::to_string(L) + " < 1"});
    }
    bool have_prev = false;
    Int prev = 0;
    for (std::size_t j = 0; j < g.spokes.size(); ++j) {
        std::string name = "spoke " + std::to_string(j + 1);
        Int len = 0;
        if (value(g.spokes[j].length, name + " length", len) && len < 1) {
            rep.violations.push_back({ViolationKind::SpokeTooShort, name + " length", std::to_string(len) + " < 1"});
        }
        Int a = 0;
        if (!value(g.spokes[j].attach, name + " attach", a)) {
            have_prev = false;
            continue;
        }
        if (a <= 0 || (have_L && a >= L)) {
            rep.violations.push_back({ViolationKind::AttachOutOfRange, name + " attach",
                                      std::to_string(a) + " outside (0, " + (have_L ? std::to_string(L) : "L") + ")"});
        }
        if (have_prev && a <= prev) {
            rep.violations.push_back({ViolationKind::AttachOrder, name + " attach",
                                      std::to_string(a) + " <= previous attachment " + std::to_string(prev)});
        }
        prev = a;
        have_prev = true;
    }
    return rep;
}

/// Evaluates a template that is known to be valid; throws InvalidInstance
/// with the violation list otherwise.
inline GadgetInstance evaluate(const GadgetTemplate& g, Int t, Int i) {
    ValidityReport rep = validate_instance(g, t, i);
    if (!rep.ok()) {
        throw InvalidInstance("gadget invalid at t=" + std::to_string(t) + ", i=" + std::to_string(i) + ": " +
                              rep.summary());
    }
    GadgetInstance inst;
    inst.cycle_length = g.cycle_length.eval(t, i);
    for (const SpokeSpec& s : g.spokes) {
        inst.spoke_lengths.push_back(s.length.eval(t, i));
        inst.attach.push_back(s.attach.eval(t, i));
    }
    return inst;
}

inline constexpr std::size_t kDefaultSizeCap = 10'000'000;

/// Concrete multigraph. Layout: hub = 0, cycle vertex at position p is p
/// (1 <= p < L), then the internal vertices of each spoke in spoke order,
/// hub side first.
inline Multigraph instantiate(const GadgetTemplate& g, Int t, Int i, std::size_t size_cap = kDefaultSizeCap) {
    GadgetInstance inst = evaluate(g, t, i);
    Int nv = inst.vertex_count();
    if (static_cast<std::uint64_t>(nv) > size_cap) {
        throw SizeLimitError("gadget has " + std::to_string(nv) + " vertices, cap is " + std::to_string(size_cap));
    }
    Multigraph m(static_cast<std::size_t>(nv));
    m.reserve_edges(static_cast<std::size_t>(inst.edge_count()));
    const Int L = inst.cycle_length;
    for (Int p = 0; p + 1 < L; ++p) m.add_edge(p, p + 1);
    m.add_edge(L - 1, 0);  // closes the cycle; a loop when L == 1

    Int next = L;
    for (std::size_t j = 0; j < inst.spoke_lengths.size(); ++j) {
        Int prev = 0;
        for (Int s = 1; s < inst.spoke_lengths[j]; ++s) {
            m.add_edge(prev, next);
            prev = next++;
        }
        m.add_edge(prev, inst.attach[j]);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Declarative text format
//
//   # comment
//   cycle <form>
//   spoke <length-form> @ <attach-form>

inline GadgetTemplate parse_gadget(std::string_view text) {
    GadgetTemplate g;
    bool have_cycle = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    auto form = [&line_no](std::string_view s) {
        try {
            return parse_form(s);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
    };
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        std::size_t sp = line.find_first_of(" \t");
        std::string_view keyword = line.substr(0, sp);
        std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
        if (keyword == "cycle") {
            if (have_cycle) throw ParseError("duplicate cycle line", line_no);
            if (!g.spokes.empty()) throw ParseError("cycle line must come before spokes", line_no);
            g.cycle_length = form(rest);
            have_cycle = true;
        } else if (keyword == "spoke") {
            if (!have_cycle) throw ParseError("spoke before cycle line", line_no);
            std::size_t at = rest.find('@');
            if (at == std::string_view::npos) throw ParseError("spoke line needs '<length> @ <attach>'", line_no);
            g.spokes.push_back({form(trim(rest.substr(0, at))), form(trim(rest.substr(at + 1)))});
        } else {
            throw ParseError("unknown keyword \"" + std::string(keyword) + "\"", line_no);
        }
    }
    if (!have_cycle) throw ParseError("missing cycle line", line_no);
    if (g.spokes.size() > 255) throw ParseError("at most 255 spokes are supported", line_no);
    return g;
}

inline std::string write_gadget(const GadgetTemplate& g) {
    std::ostringstream os;
    os << "cycle " << g.cycle_length << '\n';
    for (const SpokeSpec& s : g.spokes) os << "spoke " << s.length << " @ " << s.attach << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// The two gadget families of the construction.
//
// A path written x p^1 ... p^m c^a has m internal vertices, so its length is
// m+1 and it attaches at cycle position a. A cycle x c^1 ... c^M x has length
// M+1.

namespace detail {

inline std::vector<SpokeSpec> shared_spokes() {
    using namespace dcl::literals;
    // (internal vertex count, attachment position)
    const char* rows[][2] = {
        {"(11t-1)/2", "(31t-115)/2+i"},   {"(13t-1)/2", "(51t-103)/2+2i"},
        {"(13t-1)/2", "(71t+315)/2+3i"},  {"(15t-1)/2", "(91t+313)/2+4i"},
        {"(15t-1)/2", "(111t+313)/2+5i"}, {"(17t-1)/2", "(131t+311)/2+6i"},
        {"(17t-1)/2", "(151t+309)/2+7i"}, {"(19t-1)/2", "(171t+297)/2+8i"},
        {"(19t-1)/2", "(191t+301)/2+9i"}, {"(21t-1)/2", "(211t+305)/2+10i"},
    };
    std::vector<SpokeSpec> out;
    for (const auto& row : rows) out.push_back({parse_form(row[0]) + "1"_form, parse_form(row[1])});
    return out;
}

}  // namespace detail

/// Eleven-spoke gadget B_{19t+2i+1}, for (7t+1)/8 <= i <= t-742.
inline GadgetTemplate family_a() {
    using namespace dcl::literals;
    GadgetTemplate g{"144t+13i+1463"_form + "1"_form, detail::shared_spokes()};
    g.spokes.push_back({"(t-571)/2"_form + "1"_form, "(251t+2357)/2+11i"_form});
    return g;
}

/// Ten-spoke gadget B_{21t+i-57}, for 58 <= i <= (7t-7)/8.
inline GadgetTemplate family_b() {
    using namespace dcl::literals;
    return GadgetTemplate{"126t+11i+893"_form + "1"_form, detail::shared_spokes()};
}

}  // namespace dcl
