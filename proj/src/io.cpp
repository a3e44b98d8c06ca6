#include "bcspec/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bcspec {

namespace {

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a complex number as [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::string format_complex(const Complex& z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() >= 0.0) os << "+";
    os << z.imag() << "i";
    return os.str();
}

}  // namespace

json to_json(const BiComplex& z) {
    return json{{"z1", complex_to_json(z.z1())}, {"z2", complex_to_json(z.z2())}};
}

json to_json(const Hyperbolic& h) { return json{{"h1", h.h1()}, {"h2", h.h2()}}; }

json to_json(const BCMatrix& m) {
    json entries = json::array();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            entries.push_back(json::array(
                {complex_to_json(m(i, j).z1()), complex_to_json(m(i, j).z2())}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

BiComplex bicomplex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("z1") || !j.contains("z2"))
        throw ParseError("expected a bicomplex number as {\"z1\": [re, im], \"z2\": [re, im]}");
    try {
        return BiComplex(complex_from_json(j.at("z1")), complex_from_json(j.at("z2")));
    } catch (const NonFinite& e) {
        throw ParseError(e.what());
    }
}

Hyperbolic hyperbolic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("h1") || !j.contains("h2") ||
        !j.at("h1").is_number() || !j.at("h2").is_number())
        throw ParseError("expected a hyperbolic number as {\"h1\": r, \"h2\": r}");
    try {
        return Hyperbolic(j.at("h1").get<double>(), j.at("h2").get<double>());
    } catch (const NonFinite& e) {
        throw ParseError(e.what());
    }
}

BCMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("expected a matrix as {\"rows\", \"cols\", \"entries\"}");
    if (!j.at("rows").is_number_integer() || !j.at("cols").is_number_integer())
        throw ParseError("matrix rows/cols must be integers");
    const auto rows = j.at("rows").get<Index>();
    const auto cols = j.at("cols").get<Index>();
    const json& entries = j.at("entries");
    if (rows < 0 || cols < 0 || !entries.is_array() ||
        entries.size() != static_cast<size_t>(rows * cols))
        throw ParseError("matrix entry count does not match rows*cols");
    BCMatrix m(rows, cols);
    size_t k = 0;
    for (Index i = 0; i < rows; ++i) {
        for (Index j2 = 0; j2 < cols; ++j2, ++k) {
            const json& e = entries[k];
            if (!e.is_array() || e.size() != 2)
                throw ParseError("matrix entry must be [[re,im],[re,im]]");
            try {
                m(i, j2) = BiComplex(complex_from_json(e[0]), complex_from_json(e[1]));
            } catch (const NonFinite& ex) {
                throw ParseError(ex.what());
            }
        }
    }
    return m;
}

std::vector<BCMatrix> tuple_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrices") || !j.at("matrices").is_array())
        throw ParseError("expected a tuple file as {\"matrices\": [...]}");
    std::vector<BCMatrix> mats;
    for (const json& mj : j.at("matrices")) mats.push_back(matrix_from_json(mj));
    return mats;
}

PairQueryFile pair_query_from_json(const json& j) {
    if (!j.is_object() || !j.contains("T1") || !j.contains("T2"))
        throw ParseError("expected a pair file as {\"T1\", \"T2\", \"queries\"}");
    PairQueryFile f;
    f.t1 = matrix_from_json(j.at("T1"));
    f.t2 = matrix_from_json(j.at("T2"));
    if (j.contains("queries")) {
        if (!j.at("queries").is_array()) throw ParseError("queries must be an array");
        for (const json& q : j.at("queries")) {
            if (!q.is_object() || !q.contains("z1") || !q.contains("z2"))
                throw ParseError("each query needs z1 and z2");
            f.queries.emplace_back(bicomplex_from_json(q.at("z1")),
                                   bicomplex_from_json(q.at("z2")));
        }
    }
    return f;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

std::string format_rect(const BiComplex& z) {
    std::ostringstream os;
    os << format_complex(z.z1()) << " + (" << format_complex(z.z2()) << ")j";
    return os.str();
}

std::string format_idem(const BiComplex& z) {
    const IdempotentPair p = to_idempotent(z);
    std::ostringstream os;
    os << "(" << format_complex(p.beta1) << ")·e1 + (" << format_complex(p.beta2) << ")·e2";
    return os.str();
}

}  // namespace bcspec
