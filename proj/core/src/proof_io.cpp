#include "semialg/proof_io.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

#include "semialg/errors.hpp"

namespace semialg {

using nlohmann::json;

namespace {

const char* axiom_name(AxiomKind k) {
    switch (k) {
        case AxiomKind::NonNeg: return "nonneg";
        case AxiomKind::ComplNonNeg: return "compl";
        case AxiomKind::BoolUp: return "bool_up";
        case AxiomKind::BoolDown: return "bool_down";
    }
    throw Error("unreachable axiom kind");
}

AxiomKind axiom_from_name(const std::string& s, std::size_t line_no) {
    if (s == "nonneg") return AxiomKind::NonNeg;
    if (s == "compl") return AxiomKind::ComplNonNeg;
    if (s == "bool_up") return AxiomKind::BoolUp;
    if (s == "bool_down") return AxiomKind::BoolDown;
    throw ParseError(line_no, 1, "unknown axiom kind: " + s);
}

json line_to_json(const ProofLine& line) {
    json obj;
    obj["id"] = line.id;
    obj["poly"] = line.poly.to_string();
    if (const auto* ax = std::get_if<AxiomJust>(&line.just)) {
        obj["kind"] = "axiom";
        obj["axiom"] = axiom_name(ax->kind);
        obj["var"] = ax->var.name();
    } else if (const auto* hy = std::get_if<HypJust>(&line.just)) {
        obj["kind"] = "hyp";
        obj["index"] = hy->index;
    } else if (const auto* lc = std::get_if<LinCombJust>(&line.just)) {
        obj["kind"] = "lincomb";
        obj["p1"] = lc->p1;
        obj["a"] = lc->a.to_string();
        obj["p2"] = lc->p2;
        obj["b"] = lc->b.to_string();
    } else if (const auto* mv = std::get_if<MultVarJust>(&line.just)) {
        obj["kind"] = "mult_var";
        obj["p1"] = mv->p1;
        obj["var"] = mv->var.name();
    } else if (const auto* mc = std::get_if<MultComplJust>(&line.just)) {
        obj["kind"] = "mult_compl";
        obj["p1"] = mc->p1;
        obj["var"] = mc->var.name();
    }
    return obj;
}

template <typename T>
T field(const json& obj, const char* key, std::size_t line_no) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(line_no, 1, std::string("missing field \"") + key + "\"");
    }
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ParseError(line_no, 1, std::string("bad value for field \"") + key + "\"");
    }
}

Justification justification_from_json(const json& obj, std::size_t line_no) {
    const auto kind = field<std::string>(obj, "kind", line_no);
    if (kind == "axiom") {
        return AxiomJust{axiom_from_name(field<std::string>(obj, "axiom", line_no), line_no),
                         VarId::parse(field<std::string>(obj, "var", line_no))};
    }
    if (kind == "hyp") {
        return HypJust{field<std::size_t>(obj, "index", line_no)};
    }
    if (kind == "lincomb") {
        return LinCombJust{field<std::size_t>(obj, "p1", line_no),
                           Rational::from_string(field<std::string>(obj, "a", line_no)),
                           field<std::size_t>(obj, "p2", line_no),
                           Rational::from_string(field<std::string>(obj, "b", line_no))};
    }
    if (kind == "mult_var") {
        return MultVarJust{field<std::size_t>(obj, "p1", line_no),
                           VarId::parse(field<std::string>(obj, "var", line_no))};
    }
    if (kind == "mult_compl") {
        return MultComplJust{field<std::size_t>(obj, "p1", line_no),
                             VarId::parse(field<std::string>(obj, "var", line_no))};
    }
    throw ParseError(line_no, 1, "unknown line kind: " + kind);
}

}  // namespace

void write_proof(std::ostream& os, const Proof& proof) {
    json header;
    header["format"] = "saj1";
    header["field"] = proof.p;
    header["mode"] = proof.mode == VarMode::Plain ? "f2" : "fp";
    json hyps = json::array();
    for (const auto& h : proof.hypotheses) hyps.push_back(h.to_string());
    header["hypotheses"] = std::move(hyps);
    os << header.dump() << '\n';
    for (const auto& line : proof.lines) {
        os << line_to_json(line).dump() << '\n';
    }
}

Proof read_proof(std::istream& is) {
    Proof proof;
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(is, raw)) {
        ++line_no;
        if (raw.empty()) continue;
        json obj;
        try {
            obj = json::parse(raw);
        } catch (const json::exception& e) {
            throw ParseError(line_no, 1, std::string("bad JSON: ") + e.what());
        }
        if (!obj.is_object()) throw ParseError(line_no, 1, "expected a JSON object");
        if (!have_header) {
            if (field<std::string>(obj, "format", line_no) != "saj1") {
                throw ParseError(line_no, 1, "unsupported proof format");
            }
            proof.p = field<std::uint64_t>(obj, "field", line_no);
            const auto mode = field<std::string>(obj, "mode", line_no);
            if (mode == "f2") {
                proof.mode = VarMode::Plain;
            } else if (mode == "fp") {
                proof.mode = VarMode::Indicator;
            } else {
                throw ParseError(line_no, 1, "unknown mode: " + mode);
            }
            const auto hyps = field<std::vector<std::string>>(obj, "hypotheses", line_no);
            for (const auto& s : hyps) {
                try {
                    proof.hypotheses.push_back(Poly::parse(s));
                } catch (const Error& e) {
                    throw ParseError(line_no, 1, std::string("bad hypothesis poly: ") + e.what());
                }
            }
            have_header = true;
            continue;
        }
        const auto id = field<std::size_t>(obj, "id", line_no);
        Poly poly;
        try {
            poly = Poly::parse(field<std::string>(obj, "poly", line_no));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line_no, 1, std::string("bad poly: ") + e.what());
        }
        proof.lines.push_back({id, std::move(poly), justification_from_json(obj, line_no)});
    }
    if (!have_header) throw ParseError(line_no, 1, "missing proof header");
    return proof;
}

std::string proof_to_string(const Proof& proof) {
    std::ostringstream os;
    write_proof(os, proof);
    return os.str();
}

Proof proof_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_proof(is);
}

}  // namespace semialg
