#pragma once

// Versioned JSON documents for matrices (.hwmat), Bloch vectors (.hwbloch),
// witness specs (.hwwit), state specs (.hwstate) and measurement records
// (.hwrec), plus CSV export. Doubles are written in shortest round-trip form,
// so read(write(x)) reproduces x bit for bit. Complex numbers are [re, im].

#include "hwobs/acbound.hpp"
#include "hwobs/bloch.hpp"
#include "hwobs/hw_basis.hpp"
#include "hwobs/numerics.hpp"
#include "hwobs/ramsey.hpp"
#include "hwobs/states.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hwobs {

/// Malformed document: bad JSON, wrong format tag, unknown schema version,
/// or a field of the wrong type. The message names the line/column or field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace io {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

namespace format {
inline constexpr const char* kMatrix = "hwobs.matrix";
inline constexpr const char* kBloch = "hwobs.bloch";
inline constexpr const char* kWitness = "hwobs.witness";
inline constexpr const char* kState = "hwobs.state";
inline constexpr const char* kRecord = "hwobs.record";
inline constexpr const char* kWitnessReport = "hwobs.witness_report";
inline constexpr const char* kBasis = "hwobs.basis";
}  // namespace format

struct MatrixDocument {
    ComplexMatrix matrix;
    std::map<std::string, std::string> metadata;

    friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline json parse(std::string_view text, std::string_view expected_format) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("malformed document at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("document root must be an object");
    const auto fmt = doc.find("format");
    if (fmt == doc.end() || !fmt->is_string()) throw ParseError("field 'format': missing or not a string");
    if (fmt->get<std::string>() != expected_format) {
        throw ParseError("field 'format': expected '" + std::string(expected_format) + "', got '" +
                         fmt->get<std::string>() + "'");
    }
    const auto ver = doc.find("schema_version");
    if (ver == doc.end() || !ver->is_string()) throw ParseError("field 'schema_version': missing or not a string");
    if (ver->get<std::string>() != kSchemaVersion) {
        throw ParseError("field 'schema_version': unknown version '" + ver->get<std::string>() + "'");
    }
    return doc;
}

inline json header(const char* fmt) { return json{{"format", fmt}, {"schema_version", kSchemaVersion}}; }

inline const json& field(const json& obj, const std::string& name) {
    const auto it = obj.find(name);
    if (it == obj.end()) throw ParseError("field '" + name + "': missing");
    return *it;
}

inline double number(const json& j, const std::string& name) {
    if (!j.is_number()) throw ParseError("field '" + name + "': expected a number");
    return j.get<double>();
}

inline std::int64_t integer(const json& j, const std::string& name) {
    if (!j.is_number_integer()) throw ParseError("field '" + name + "': expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw ParseError("field '" + name + "': integer out of range");
    }
    return j.get<std::int64_t>();
}

inline int small_int(const json& j, const std::string& name) {
    const auto v = integer(j, name);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw ParseError("field '" + name + "': integer out of range");
    }
    return static_cast<int>(v);
}

inline const json& array(const json& j, const std::string& name) {
    if (!j.is_array()) throw ParseError("field '" + name + "': expected an array");
    return j;
}

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j, const std::string& name) {
    if (!j.is_array() || j.size() != 2) throw ParseError("field '" + name + "': expected an [re, im] pair");
    return {number(j[0], name + "[0]"), number(j[1], name + "[1]")};
}

inline json point_to_json(const PhasePoint& p) { return json::array({p.l(), p.m()}); }

inline PhasePoint point_from_json(const json& j, int d, const std::string& name) {
    if (!j.is_array() || j.size() != 2) throw ParseError("field '" + name + "': expected an [l, m] pair");
    const auto l = integer(j[0], name + "[0]");
    const auto m = integer(j[1], name + "[1]");
    if (l < 0 || l >= d || m < 0 || m >= d) {
        throw ValidationError("field '" + name + "': point (" + std::to_string(l) + "," + std::to_string(m) +
                              ") is outside the d=" + std::to_string(d) + " grid");
    }
    return {d, l, m};
}

inline void require_finite(double v, const std::string& name) {
    if (!std::isfinite(v)) throw ValidationError("field '" + name + "': value is not finite");
}

inline std::map<std::string, std::string> metadata_from_json(const json& doc) {
    std::map<std::string, std::string> out;
    const auto it = doc.find("metadata");
    if (it == doc.end()) return out;
    if (!it->is_object()) throw ParseError("field 'metadata': expected an object");
    for (const auto& [k, v] : it->items()) {
        if (!v.is_string()) throw ParseError("field 'metadata." + k + "': expected a string");
        out[k] = v.get<std::string>();
    }
    return out;
}

inline json matrix_body(const ComplexMatrix& m) {
    json entries = json::array();
    for (const auto& z : m.entries()) entries.push_back(complex_to_json(z));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_body(const json& doc, const std::string& prefix) {
    const auto rows = integer(field(doc, "rows"), prefix + "rows");
    const auto cols = integer(field(doc, "cols"), prefix + "cols");
    if (rows < 1 || cols < 1 || rows > 4096 || cols > 4096) {
        throw ValidationError("field '" + prefix + "rows/cols': shape " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " is not supported");
    }
    const auto& entries = array(field(doc, "entries"), prefix + "entries");
    if (entries.size() != static_cast<std::size_t>(rows * cols)) {
        throw ValidationError("field '" + prefix + "entries': length " + std::to_string(entries.size()) +
                              " does not equal rows*cols = " + std::to_string(rows * cols));
    }
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        values.push_back(complex_from_json(entries[k], prefix + "entries[" + std::to_string(k) + "]"));
    }
    return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(values)};
}

inline std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

/// Any nlohmann exception escaping a reader is a malformed document.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

inline std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

}  // namespace detail

// --- matrices -------------------------------------------------------------

inline std::string write_matrix(const MatrixDocument& doc) {
    json j = detail::header(format::kMatrix);
    j.update(detail::matrix_body(doc.matrix));
    j["metadata"] = doc.metadata;
    return detail::dump(j);
}

inline MatrixDocument read_matrix(std::string_view text) {
    return detail::guarded([&] {
        const json doc = detail::parse(text, format::kMatrix);
        return MatrixDocument{detail::matrix_from_body(doc, ""), detail::metadata_from_json(doc)};
    });
}

/// Density matrix with party dimensions stored as metadata "parties" = "4,4,4".
inline MatrixDocument density_document(const DensityMatrix& rho) {
    std::string parties;
    for (std::size_t k = 0; k < rho.parties().size(); ++k) {
        if (k) parties += ",";
        parties += std::to_string(rho.parties()[k]);
    }
    return {rho.matrix(), {{"kind", "density_matrix"}, {"parties", parties}}};
}

inline DensityMatrix density_from_document(const MatrixDocument& doc) {
    std::vector<int> parties;
    if (const auto it = doc.metadata.find("parties"); it != doc.metadata.end()) {
        std::stringstream ss(it->second);
        std::string item;
        while (std::getline(ss, item, ',')) {
            int v = 0;
            const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
            if (res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
                throw ParseError("field 'metadata.parties': '" + it->second + "' is not a comma-separated list of integers");
            }
            parties.push_back(v);
        }
    }
    return DensityMatrix::create(doc.matrix, std::move(parties));
}

// --- basis listing --------------------------------------------------------

inline std::string write_basis(int d, const std::vector<HWObservable>& observables) {
    json j = detail::header(format::kBasis);
    j["d"] = d;
    json list = json::array();
    for (const auto& q : observables) {
        json item = detail::matrix_body(q.matrix);
        item["point"] = detail::point_to_json(q.point);
        list.push_back(std::move(item));
    }
    j["observables"] = std::move(list);
    return detail::dump(j);
}

inline std::vector<HWObservable> read_basis(std::string_view text) {
    return detail::guarded([&] {
        const json doc = detail::parse(text, format::kBasis);
        const int d = detail::small_int(detail::field(doc, "d"), "d");
        require_dimension(d);
        std::vector<HWObservable> out;
        const auto& list = detail::array(detail::field(doc, "observables"), "observables");
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string prefix = "observables[" + std::to_string(k) + "].";
            out.push_back({detail::point_from_json(detail::field(list[k], "point"), d, prefix + "point"),
                           detail::matrix_from_body(list[k], prefix)});
        }
        return out;
    });
}

// --- Bloch vectors ----------------------------------------------------------

inline std::string write_bloch(const BlochVector& v) {
    require_dimension(v.d);
    if (v.components.size() != BlochVector::length_for(v.d)) throw ValidationError("Bloch vector length does not match d");
    for (double c : v.components) detail::require_finite(c, "components");
    json j = detail::header(format::kBloch);
    j["d"] = v.d;
    j["components"] = v.components;
    return detail::dump(j);
}

inline BlochVector read_bloch(std::string_view text) {
    return detail::guarded([&] {
        const json doc = detail::parse(text, format::kBloch);
        BlochVector v;
        v.d = detail::small_int(detail::field(doc, "d"), "d");
        if (v.d < 2 || v.d > 64) throw ValidationError("field 'd': dimension " + std::to_string(v.d) + " is not supported");
        const auto& comps = detail::array(detail::field(doc, "components"), "components");
        if (comps.size() != BlochVector::length_for(v.d)) {
            throw ValidationError("field 'components': length " + std::to_string(comps.size()) + " but d=" +
                                  std::to_string(v.d) + " needs " + std::to_string(BlochVector::length_for(v.d)));
        }
        for (std::size_t k = 0; k < comps.size(); ++k) {
            v.components.push_back(detail::number(comps[k], "components[" + std::to_string(k) + "]"));
        }
        return v;
    });
}

/// Header "l,m,component", one row per non-identity point.
inline std::string bloch_csv(const BlochVector& v) {
    std::string out = "l,m,component\n";
    for (const auto& p : nonidentity_points(v.d)) {
        out += std::to_string(p.l()) + "," + std::to_string(p.m()) + "," + detail::shortest(v[p]) + "\n";
    }
    return out;
}

// --- witness specs ----------------------------------------------------------

inline std::string write_witness(const WitnessSpec& spec) {
    validate(spec);
    json j = detail::header(format::kWitness);
    j["parties"] = spec.parties;
    j["bound"] = spec.bound;
    j["bound_kind"] = to_string(spec.bound_kind);
    json terms = json::array();
    for (const auto& t : spec.terms) {
        json factors = json::array();
        for (const auto& p : t.factors) factors.push_back(detail::point_to_json(p));
        terms.push_back(std::move(factors));
    }
    j["terms"] = std::move(terms);
    j["metadata"] = spec.metadata;
    return detail::dump(j);
}

inline WitnessSpec read_witness(std::string_view text) {
    return detail::guarded([&] {
        const json doc = detail::parse(text, format::kWitness);
        WitnessSpec spec;
        const auto& parties = detail::array(detail::field(doc, "parties"), "parties");
        if (parties.empty() || parties.size() > 8) throw ValidationError("field 'parties': expected 1 to 8 parties");
        for (std::size_t k = 0; k < parties.size(); ++k) {
            const int d = detail::small_int(parties[k], "parties[" + std::to_string(k) + "]");
            if (d < 2 || d > 64) throw ValidationError("field 'parties[" + std::to_string(k) + "]': unsupported dimension");
            spec.parties.push_back(d);
        }
        spec.bound = detail::number(detail::field(doc, "bound"), "bound");
        const auto& kind = detail::field(doc, "bound_kind");
        if (!kind.is_string()) throw ParseError("field 'bound_kind': expected a string");
        if (kind == "separable") {
            spec.bound_kind = BoundKind::Separable;
        } else if (kind == "biseparable") {
            spec.bound_kind = BoundKind::Biseparable;
        } else {
            throw ValidationError("field 'bound_kind': unknown kind '" + kind.get<std::string>() + "'");
        }
        const auto& terms = detail::array(detail::field(doc, "terms"), "terms");
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string name = "terms[" + std::to_string(t) + "]";
            const auto& factors = detail::array(terms[t], name);
            if (factors.size() != spec.parties.size()) {
                throw ValidationError("field '" + name + "': " + std::to_string(factors.size()) + " factors for " +
                                      std::to_string(spec.parties.size()) + " parties");
            }
            WitnessTerm term;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                term.factors.push_back(detail::point_from_json(factors[k], spec.parties[k], name + "[" + std::to_string(k) + "]"));
            }
            spec.terms.push_back(std::move(term));
        }
        spec.metadata = detail::metadata_from_json(doc);
        validate(spec);
        return spec;
    });
}

inline std::string write_witness_report(const WitnessReport& r) {
    json j = detail::header(format::kWitnessReport);
    j["value"] = r.value;
    j["bound"] = r.bound;
    j["violated"] = r.violated;
    j["noise_threshold"] = std::isfinite(r.noise_threshold) ? json(r.noise_threshold) : json(nullptr);
    j["tolerable_noise"] = r.tolerable_noise;
    j["term_values"] = r.term_values;
    return detail::dump(j);
}

inline WitnessReport read_witness_report(std::string_view text) {
    return detail::guarded([&] {
        const json doc = detail::parse(text, format::kWitnessReport);
        WitnessReport r;
        r.value = detail::number(detail::field(doc, "value"), "value");
        r.bound = detail::number(detail::field(doc, "bound"), "bound");
        const auto& violated = detail::field(doc, "violated");
        if (!violated.is_boolean()) throw ParseError("field 'violated': expected a boolean");
        r.violated = violated.get<bool>();
        const auto& nt = detail::field(doc, "noise_threshold");
        r.noise_threshold = nt.is_null() ? std::numeric_limits<double>::infinity() : detail::number(nt, "noise_threshold");
        r.tolerable_noise = detail::number(detail::field(doc, "tolerable_noise"), "tolerable_noise");
        const auto& tv = detail::array(detail::field(doc, "term_values"), "term_values");
        for (std::size_t k = 0; k < tv.size(); ++k) r.term_values.push_back(detail::number(tv[k], "term_values"));
        return r;
    });
}

/// Header "value,bound,violated,noise_threshold,tolerable_noise", one record.
inline std::string witness_report_csv(const WitnessReport& r) {
    return "value,bound,violated,noise_threshold,tolerable_noise\n" + detail::shortest(r.value) + "," +
           detail::shortest(r.bound) + "," + (r.violated ? "true" : "false") + "," +
           (std::isfinite(r.noise_threshold) ? detail::shortest(r.noise_threshold) : std::string("inf")) + "," +
           detail::shortest(r.tolerable_noise) + "\n";
}

// --- state specs --------------------------------------------------------------

inline std::string write_state_spec(const StateSpec& s) {
    validate(s);
    json j = detail::header(format::kState);
    j["kind"] = to_string(s.kind);
    j["dimension"] = s.dimension;
    j["parties"] = s.parties;
    j["p"] = s.p;
    json ket = json::array();
    for (const auto& z : s.ket) ket.push_back(detail::complex_to_json(z));
    j["ket"] = std::move(ket);
    return detail::dump(j);
}

inline StateSpec read_state_spec(std::string_view text) {
    return detail::guarded([&] {
        const json doc = detail::parse(text, format::kState);
        StateSpec s;
        const auto& kind = detail::field(doc, "kind");
        if (!kind.is_string()) throw ParseError("field 'kind': expected a string");
        const std::string k = kind.get<std::string>();
        bool known = false;
        for (auto candidate : {StateKind::MaxEntangled, StateKind::GHZ, StateKind::MaxMixed, StateKind::PureKet,
                               StateKind::IsotropicMix}) {
            if (k == to_string(candidate)) {
                s.kind = candidate;
                known = true;
            }
        }
        if (!known) throw ValidationError("field 'kind': unknown state kind '" + k + "'");
        s.dimension = detail::small_int(detail::field(doc, "dimension"), "dimension");
        s.parties = detail::small_int(detail::field(doc, "parties"), "parties");
        if (s.dimension < 2 || s.dimension > 64 || s.parties < 1 || s.parties > 6 ||
            std::pow(static_cast<double>(s.dimension), s.parties) > 4096.0) {
            throw ValidationError("fields 'dimension'/'parties': state too large or invalid");
        }
        if (const auto it = doc.find("p"); it != doc.end()) s.p = detail::number(*it, "p");
        if (const auto it = doc.find("ket"); it != doc.end()) {
            const auto& ket = detail::array(*it, "ket");
            for (std::size_t i = 0; i < ket.size(); ++i) {
                s.ket.push_back(detail::complex_from_json(ket[i], "ket[" + std::to_string(i) + "]"));
            }
        }
        validate(s);
        return s;
    });
}

/// Accepts either a density-matrix document or a state spec.
inline DensityMatrix read_state(std::string_view text) {
    const auto fmt = detail::guarded([&] {
        json doc;
        try {
            doc = json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            throw ParseError("malformed document at " + detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                             e.what());
        }
        if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string()) {
            throw ParseError("field 'format': missing or not a string");
        }
        return doc["format"].get<std::string>();
    });
    if (fmt == format::kMatrix) return density_from_document(read_matrix(text));
    if (fmt == format::kState) return make_state(read_state_spec(text));
    throw ParseError("field 'format': expected '" + std::string(format::kMatrix) + "' or '" + format::kState + "', got '" +
                     fmt + "'");
}

// --- measurement records -----------------------------------------------------

inline std::string write_record(const MeasurementRecord& r) {
    validate(r);
    json j = detail::header(format::kRecord);
    j["d"] = r.point.d();
    j["point"] = detail::point_to_json(r.point);
    j["shots"] = r.shots;
    j["count_up"] = r.count_up;
    j["count_down"] = r.count_down;
    j["seed"] = r.seed;
    return detail::dump(j);
}

inline MeasurementRecord read_record(std::string_view text) {
    return detail::guarded([&] {
        const json doc = detail::parse(text, format::kRecord);
        const int d = detail::small_int(detail::field(doc, "d"), "d");
        if (d < 2 || d > 64) throw ValidationError("field 'd': unsupported dimension");
        MeasurementRecord r;
        r.point = detail::point_from_json(detail::field(doc, "point"), d, "point");
        r.shots = detail::integer(detail::field(doc, "shots"), "shots");
        r.count_up = detail::integer(detail::field(doc, "count_up"), "count_up");
        r.count_down = detail::integer(detail::field(doc, "count_down"), "count_down");
        const auto& seed = detail::field(doc, "seed");
        if (!seed.is_number_integer() || (seed.is_number_integer() && !seed.is_number_unsigned() && seed.get<std::int64_t>() < 0)) {
            throw ParseError("field 'seed': expected a non-negative integer");
        }
        r.seed = seed.get<std::uint64_t>();
        validate(r);
        return r;
    });
}

}  // namespace io
}  // namespace hwobs
