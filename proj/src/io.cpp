#include "tl/io.hpp"

#include <fstream>
#include <sstream>

namespace tl {

std::string matrix_to_tlmat(const RingMatrix& m) {
    std::ostringstream out;
    out << "tlmat " << m.rows << " " << m.cols << " " << m.ring.tag() << "\n";
    for (const auto& [rc, v] : m.entries)
        out << rc.first + 1 << " " << rc.second + 1 << " " << v.str() << "\n";
    return out.str();
}

RingMatrix tlmat_parse(const std::string& text) {
    std::istringstream in(text);
    std::string magic, tag;
    int rows = 0, cols = 0;
    if (!(in >> magic >> rows >> cols >> tag) || magic != "tlmat")
        throw invalid_input("bad tlmat header");
    RingMatrix m = RingMatrix::zero(RingSpec::parse_tag(tag), rows, cols);
    int r = 0, c = 0;
    std::string val;
    while (in >> r >> c >> val) {
        if (r < 1 || r > rows || c < 1 || c > cols) throw invalid_input("tlmat entry out of range");
        m.set(r - 1, c - 1, RingValue::parse(m.ring, val));
    }
    return m;
}

void write_tlmat(const RingMatrix& m, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw invalid_input("cannot write " + file.string());
    out << matrix_to_tlmat(m);
}

RingMatrix read_tlmat(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw invalid_input("cannot read " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return tlmat_parse(buf.str());
}

void save_complex(const ChainComplex& X, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    nlohmann::json manifest;
    manifest["ring"] = X.ring.tag();
    manifest["degrees"] = {X.lo, X.hi};
    manifest["dims"] = X.dims;
    manifest["labels"] = X.labels;
    std::vector<std::string> files;
    for (const auto& [deg, m] : X.diff) {
        std::string name = "d_" + std::to_string(deg) + ".tlmat";
        write_tlmat(m, dir / name);
        files.push_back(name);
    }
    manifest["differentials"] = files;
    std::ofstream out(dir / "complex.json");
    if (!out) throw invalid_input("cannot write manifest in " + dir.string());
    out << manifest.dump(2) << "\n";
}

ChainComplex load_complex(const std::filesystem::path& dir) {
    std::ifstream in(dir / "complex.json");
    if (!in) throw invalid_input("cannot read manifest in " + dir.string());
    nlohmann::json manifest = nlohmann::json::parse(in);
    ChainComplex X;
    X.ring = RingSpec::parse_tag(manifest.at("ring").get<std::string>());
    X.lo = manifest.at("degrees").at(0).get<int>();
    X.hi = manifest.at("degrees").at(1).get<int>();
    X.dims = manifest.at("dims").get<std::vector<int>>();
    X.labels = manifest.at("labels").get<std::vector<std::vector<std::string>>>();
    for (const auto& name : manifest.at("differentials").get<std::vector<std::string>>()) {
        if (name.size() < 8 || name.substr(0, 2) != "d_") throw invalid_input("bad differential file name");
        int deg = std::stoi(name.substr(2, name.size() - 8));
        X.diff.emplace(deg, read_tlmat(dir / name));
    }
    X.verify();
    return X;
}

nlohmann::json diagram_to_json(const PlanarDiagram& d) {
    nlohmann::json j;
    j["n"] = d.n();
    auto pairs = nlohmann::json::array();
    for (const auto& [x, y] : d.canonical_pairs()) pairs.push_back({x, y});
    j["pairs"] = pairs;
    return j;
}

PlanarDiagram diagram_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    return PlanarDiagram::from_pairs(n, pairs);
}

nlohmann::json element_to_json(const TLElement& x) {
    nlohmann::json j;
    j["n"] = x.n();
    j["ring"] = x.ring().tag();
    auto terms = nlohmann::json::array();
    for (const auto& [d, c] : x.terms()) {
        nlohmann::json t;
        t["coefficient"] = c.str();
        t["diagram"] = diagram_to_json(d);
        t["word"] = render_jones_word(diagram_to_jones_word(d));
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

nlohmann::json group_to_json(const HomologyGroup& g) {
    nlohmann::json j;
    j["rank"] = g.rank;
    auto tors = nlohmann::json::array();
    for (const auto& t : g.torsion) {
        if (t.fits_slong_p()) tors.push_back(t.get_si());
        else tors.push_back(t.get_str());
    }
    j["torsion"] = tors;
    return j;
}

}  // namespace tl
