#include "stellar/io.hpp"

#include <fstream>
#include <sstream>

namespace stellar {

Complex parse_complex(const std::string& text) {
    std::vector<Face> facets;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::vector<VertexId> verts;
        long long v;
        while (ls >> v) {
            if (v < 0) {
                throw MalformedInputError("line " + std::to_string(line_no) +
                                          ": negative vertex label");
            }
            verts.push_back(static_cast<VertexId>(v));
        }
        if (!ls.eof()) {
            throw MalformedInputError("line " + std::to_string(line_no) +
                                      ": expected whitespace-separated integers");
        }
        try {
            facets.push_back(Face::of(std::move(verts)));
        } catch (const MalformedInputError& e) {
            throw MalformedInputError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return Complex::from_facets(std::move(facets));
}

std::string serialize_complex(const Complex& c) {
    if (c.is_void()) {
        throw MalformedInputError("the facet format cannot express the {∅} complex");
    }
    std::ostringstream os;
    for (const Face& f : c.facets()) {
        for (int i = 0; i < f.size(); ++i) {
            if (i) os << ' ';
            os << f[i];
        }
        os << '\n';
    }
    return os.str();
}

Complex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_complex(buf.str());
    } catch (const MalformedInputError& e) {
        throw MalformedInputError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw Error("failed writing " + path);
}

Json face_to_json(const Face& f) {
    Json a = Json::array();
    for (VertexId v : f) a.push_back(v);
    return a;
}

Face face_from_json(const Json& j) {
    std::vector<VertexId> verts;
    for (const auto& v : j) verts.push_back(v.get<VertexId>());
    return Face::of(std::move(verts));
}

Json facets_to_json(const Complex& c) {
    Json a = Json::array();
    for (const Face& f : c.facets()) a.push_back(face_to_json(f));
    return a;
}

Complex facets_from_json(const Json& j) {
    std::vector<Face> facets;
    for (const auto& f : j) facets.push_back(face_from_json(f));
    return Complex::from_facets(std::move(facets));
}

namespace {

std::string kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::StellarSubdiv: return "stellar_subdivision";
        case MoveKind::EdgeSubdiv: return "edge_subdivision";
        case MoveKind::InverseEdgeSubdiv: return "inverse_edge_subdivision";
        case MoveKind::Contract: return "contraction";
    }
    throw Error("unknown move kind");
}

MoveKind kind_from_name(const std::string& s) {
    if (s == "stellar_subdivision") return MoveKind::StellarSubdiv;
    if (s == "edge_subdivision") return MoveKind::EdgeSubdiv;
    if (s == "inverse_edge_subdivision") return MoveKind::InverseEdgeSubdiv;
    if (s == "contraction") return MoveKind::Contract;
    throw MalformedInputError("unknown move kind \"" + s + "\"");
}

}  // namespace

Json move_to_json(const Move& m) {
    Json j;
    j["kind"] = kind_name(m.kind);
    switch (m.kind) {
        case MoveKind::StellarSubdiv:
        case MoveKind::EdgeSubdiv:
        case MoveKind::Contract:
            j["face"] = face_to_json(m.face);
            j["new"] = m.new_vertex;
            break;
        case MoveKind::InverseEdgeSubdiv:
            j["removed"] = m.removed_vertex;
            j["edge"] = face_to_json(m.recreated_edge);
            break;
    }
    return j;
}

Move move_from_json(const Json& j) {
    MoveKind kind = kind_from_name(j.at("kind").get<std::string>());
    switch (kind) {
        case MoveKind::StellarSubdiv:
            return Move::stellar(face_from_json(j.at("face")), j.at("new").get<VertexId>());
        case MoveKind::EdgeSubdiv:
            return Move::edge_subdiv(face_from_json(j.at("face")), j.at("new").get<VertexId>());
        case MoveKind::Contract:
            return Move::contraction(face_from_json(j.at("face")), j.at("new").get<VertexId>());
        case MoveKind::InverseEdgeSubdiv:
            return Move::inverse_edge_subdiv(j.at("removed").get<VertexId>(),
                                             face_from_json(j.at("edge")));
    }
    throw MalformedInputError("unreachable move kind");
}

Json sequence_to_json(const MoveSequence& seq) {
    Json j;
    Json cs = Json::array();
    for (const Complex& c : seq.complexes) cs.push_back(facets_to_json(c));
    Json ms = Json::array();
    for (const Move& m : seq.moves) ms.push_back(move_to_json(m));
    j["complexes"] = std::move(cs);
    j["moves"] = std::move(ms);
    return j;
}

MoveSequence sequence_from_json(const Json& j) {
    MoveSequence seq;
    for (const auto& c : j.at("complexes")) seq.complexes.push_back(facets_from_json(c));
    for (const auto& m : j.at("moves")) seq.moves.push_back(move_from_json(m));
    seq.validate();
    return seq;
}

Json plan_to_json(const BacktrackPlan& plan) {
    Json steps = Json::array();
    for (const PlanStep& s : plan.steps) {
        Json j;
        j["edge"] = face_to_json(s.edge);
        j["new"] = s.new_vertex;
        j["face"] = face_to_json(s.original_face);
        steps.push_back(std::move(j));
    }
    return steps;
}

BacktrackPlan plan_from_json(const Json& steps, Complex source) {
    BacktrackPlan plan;
    plan.source = std::move(source);
    for (const auto& s : steps) {
        plan.steps.push_back({face_from_json(s.at("edge")), s.at("new").get<VertexId>(),
                              face_from_json(s.at("face"))});
    }
    return plan;
}

Json invariants_to_json(const Complex& c) {
    Json j;
    GammaReport rep = gamma_report(c);
    j["f"] = rep.f.entries;
    j["h"] = rep.h;
    if (rep.gamma) {
        j["gamma"] = *rep.gamma;
    } else {
        j["gamma"] = nullptr;
    }
    if (rep.closed_form) {
        j["g2"] = rep.closed_form->g2;
        j["gamma1"] = rep.closed_form->gamma1;
        j["gamma2"] = rep.closed_form->gamma2;
    }
    j["dim"] = c.dim();
    j["flag"] = c.is_flag();
    Json missing = Json::array();
    for (const Face& f : c.missing_faces(2)) missing.push_back(face_to_json(f));
    j["missing_faces"] = std::move(missing);
    return j;
}

}  // namespace stellar
