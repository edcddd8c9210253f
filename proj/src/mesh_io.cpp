#include "monostatic/mesh_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace monostatic {

using nlohmann::json;

std::string to_json(const Polyhedron& poly) {
    json j;
    j["vertices"] = json::array();
    for (const Vec3& v : poly.vertices) j["vertices"].push_back({v.x, v.y, v.z});
    j["faces"] = poly.faces;
    return j.dump(2) + "\n";
}

std::string to_json(const Polygon2D& poly) {
    json j;
    j["vertices"] = json::array();
    for (const Vec2& v : poly.vertices) j["vertices"].push_back({v.x, v.y});
    return j.dump(2) + "\n";
}

std::string to_obj(const Polyhedron& poly) {
    std::ostringstream os;
    os.precision(17);
    for (const Vec3& v : poly.vertices) os << "v " << v.x << " " << v.y << " " << v.z << "\n";
    for (const Face& f : poly.faces) {
        os << "f";
        for (int idx : f) os << " " << idx + 1;
        os << "\n";
    }
    return os.str();
}

Mesh mesh_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("mesh JSON parse error: ") + e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw InvalidParameter("mesh JSON: missing vertices");
    const auto& jv = j["vertices"];
    const std::size_t dim = jv[0].size();
    if (dim != 2 && dim != 3)
        throw InvalidParameter("mesh JSON: vertices must have 2 or 3 components");

    if (dim == 2) {
        Polygon2D poly;
        for (const auto& row : jv) {
            if (row.size() != 2) throw InvalidParameter("mesh JSON: mixed vertex dimensions");
            poly.vertices.emplace_back(row[0].get<double>(), row[1].get<double>());
        }
        return poly;
    }

    Polyhedron poly;
    for (const auto& row : jv) {
        if (row.size() != 3) throw InvalidParameter("mesh JSON: mixed vertex dimensions");
        poly.vertices.emplace_back(row[0].get<double>(), row[1].get<double>(),
                                   row[2].get<double>());
    }
    if (j.contains("faces")) {
        for (const auto& jf : j["faces"]) {
            Face f;
            for (const auto& idx : jf) f.push_back(idx.get<int>());
            poly.faces.push_back(std::move(f));
        }
    }
    return poly;
}

Polyhedron polyhedron_from_obj(const std::string& text) {
    Polyhedron poly;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            double x, y, z;
            if (!(ls >> x >> y >> z)) throw InvalidParameter("OBJ: malformed vertex line");
            poly.vertices.emplace_back(x, y, z);
        } else if (tag == "f") {
            Face f;
            std::string tok;
            while (ls >> tok) {
                // accept "i", "i/…" forms
                f.push_back(std::stoi(tok.substr(0, tok.find('/'))) - 1);
            }
            if (f.size() < 3) throw InvalidParameter("OBJ: face with fewer than 3 indices");
            poly.faces.push_back(std::move(f));
        }
    }
    return poly;
}

namespace {

json marginal_to_json(const std::vector<MarginalItem>& items) {
    json arr = json::array();
    for (const MarginalItem& it : items) {
        json o;
        o["type"] = it.kind;
        if (it.kind == "edge")
            o["id"] = {it.id, it.id2};
        else
            o["id"] = it.id;
        o["margin"] = it.margin;
        arr.push_back(o);
    }
    return arr;
}

}  // namespace

std::string report_to_json(const EquilibriumReport& rep, const Polyhedron& poly) {
    json j;
    j["model"] = to_string(rep.model);
    j["S"] = rep.S;
    j["H"] = rep.H;
    j["U"] = rep.U;
    j["stable"] = json::array();
    for (const StablePoint& s : rep.stable)
        j["stable"].push_back({{"face", s.face}, {"foot", {s.foot.x, s.foot.y, s.foot.z}}});
    j["saddles"] = json::array();
    for (const SaddlePoint& s : rep.saddles)
        j["saddles"].push_back({{"edge", {s.edge.first, s.edge.second}},
                                {"foot", {s.foot.x, s.foot.y, s.foot.z}}});
    j["unstable"] = rep.unstable;
    j["marginal"] = marginal_to_json(rep.marginal);
    j["complexity"] = complexity(rep, poly);
    j["centroid"] = {rep.centroid.x, rep.centroid.y, rep.centroid.z};
    return j.dump(2) + "\n";
}

std::string report_to_json(const EquilibriumReport2D& rep, const Polygon2D& poly) {
    json j;
    j["model"] = to_string(rep.model);
    j["S"] = rep.S;
    j["H"] = 0;
    j["U"] = rep.U;
    j["stable"] = json::array();
    for (const auto& [edge, foot] : rep.stable)
        j["stable"].push_back({{"edge", edge}, {"foot", {foot.x, foot.y}}});
    j["saddles"] = json::array();
    j["unstable"] = rep.unstable;
    j["marginal"] = marginal_to_json(rep.marginal);
    j["complexity"] = 2LL * (2LL * poly.vertex_count() - rep.S - rep.U);
    j["centroid"] = {rep.centroid.x, rep.centroid.y};
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InvalidParameter("cannot open for writing: " + path);
    os << content;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InvalidParameter("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace monostatic
