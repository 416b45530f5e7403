#include "gtrskit/report.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace gtrskit {

ojson field_to_json(const FieldCtx& F) {
    ojson j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["modulus"] = F.spec().modulus;
    return j;
}

ojson poly_to_json(const Poly& f) {
    ojson j = ojson::object();
    const auto& c = f.coeff_values();
    for (size_t e = 0; e < c.size(); ++e)
        if (c[e]) j[std::to_string(e)] = c[e];
    return j;
}

ojson matrix_to_json(const Matrix& M) {
    ojson rows = ojson::array();
    for (const auto& r : M.value_rows()) rows.push_back(r);
    return rows;
}

ojson code_to_json(const LinearCode& C) {
    const FieldCtx& F = C.ctx();
    ojson j;
    j["q"] = F.q();
    j["p"] = F.p();
    j["m"] = F.m();
    j["n"] = C.n();
    j["k"] = C.k();
    j["generator"] = matrix_to_json(C.generator());
    return j;
}

ojson distance_to_json(const DistanceReport& r) {
    ojson j;
    j["d"] = r.d;
    j["exact"] = r.exact;
    j["method"] = r.method == DistanceMethod::MinorScan ? "minor_scan" : "exhaustive";
    if (r.codeword) {
        std::vector<uint32_t> w;
        for (const auto& e : *r.codeword) w.push_back(e.value());
        j["codeword"] = w;
    }
    if (r.singular_columns) j["singular_columns"] = *r.singular_columns;
    return j;
}

ojson class_to_json(const CodeClass& c) {
    ojson j;
    switch (c.tag) {
        case CodeClass::Tag::MDS: j["class"] = "MDS"; break;
        case CodeClass::Tag::NMDS: j["class"] = "NMDS"; break;
        case CodeClass::Tag::Other: j["class"] = "Other"; break;
    }
    j["d"] = c.d;
    if (c.dual_d) j["dual_d"] = *c.dual_d;
    j["dual_verified"] = c.dual_verified;
    return j;
}

ojson witness_to_json(const SelfOrthWitness& w) {
    ojson j;
    j["feasible"] = w.feasible;
    j["dual_dim"] = w.dual_dim;
    if (w.feasible) {
        j["witness"] = poly_to_json(w.witness);
        std::vector<uint32_t> coeffs;
        for (const auto& e : w.coeffs) coeffs.push_back(e.value());
        j["coeffs"] = coeffs;
    } else {
        j["witness_row"] = w.witness_row;
    }
    return j;
}

std::string matrix_hash(const Matrix& M) {
    uint64_t h = 14695981039346656037ull;
    auto absorb = [&](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    absorb(M.rows());
    absorb(M.cols());
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) absorb(M.vat(i, j));
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << h;
    return os.str();
}

ojson RunConfig::to_json() const {
    ojson j;
    j["command"] = command;
    j["params"] = params;
    j["seed"] = seed;
    return j;
}

bool Report::all_ok() const { return failures() == 0; }

size_t Report::failures() const {
    size_t bad = 0;
    for (const auto& r : results) bad += !r.ok;
    return bad;
}

ojson Report::to_json(bool with_timing) const {
    ojson j;
    j["command"] = command;
    j["config"] = config;
    ojson rs = ojson::array();
    for (const auto& r : results) {
        ojson e;
        e["params"] = r.params;
        e["verdict"] = r.verdict;
        e["ok"] = r.ok;
        e["certificate"] = r.certificate;
        if (with_timing) e["timing_ms"] = r.timing_ms;
        rs.push_back(std::move(e));
    }
    j["results"] = std::move(rs);
    return j;
}

std::string Report::to_json_text(bool with_timing) const {
    return to_json(with_timing).dump(2) + "\n";
}

namespace {

std::string csv_escape(const ojson& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string Report::to_csv(bool with_timing) const {
    std::ostringstream os;
    std::vector<std::string> keys;
    if (!results.empty())
        for (auto it = results[0].params.begin(); it != results[0].params.end(); ++it)
            keys.push_back(it.key());
    for (const auto& k : keys) os << k << ",";
    os << "verdict,ok";
    if (with_timing) os << ",timing_ms";
    os << "\n";
    for (const auto& r : results) {
        for (const auto& k : keys)
            os << (r.params.contains(k) ? csv_escape(r.params.at(k)) : "") << ",";
        os << csv_escape(ojson(r.verdict)) << "," << (r.ok ? "true" : "false");
        if (with_timing) os << "," << r.timing_ms;
        os << "\n";
    }
    return os.str();
}

Report Report::from_json(const ojson& j) {
    Report rep;
    rep.command = j.at("command").get<std::string>();
    rep.config = j.at("config");
    for (const auto& e : j.at("results")) {
        ResultEntry r;
        r.params = e.at("params");
        r.verdict = e.at("verdict").get<std::string>();
        r.ok = e.at("ok").get<bool>();
        r.certificate = e.at("certificate");
        if (e.contains("timing_ms")) r.timing_ms = e.at("timing_ms").get<double>();
        rep.results.push_back(std::move(r));
    }
    return rep;
}

bool Report::operator==(const Report& o) const {
    return to_json(false) == o.to_json(false);
}

void run_indexed(size_t count, uint32_t workers, const std::function<void(size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const uint32_t nthreads = uint32_t(std::min<size_t>(workers, count));
    std::mutex mu;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (uint32_t w = 0; w < nthreads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < count; i += nthreads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

uint32_t workers_from_env() {
    const char* s = std::getenv("GTRSKIT_WORKERS");
    if (!s || !*s) return 1;
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end == s || *end != '\0' || v == 0) return 1;
    return uint32_t(std::min<unsigned long>(v, 256));
}

}  // namespace gtrskit
