#include "tilecount/tileset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tilecount {
namespace {

using nlohmann::json;

DihGroup parse_group_or_throw(const std::string& name) {
    auto R = DihGroup::parse(name);
    if (!R) throw std::invalid_argument("tileset config: bad group name '" + name + "'");
    return *R;
}

TileDesignSet from_explicit(const json& doc) {
    DihGroup R = parse_group_or_throw(doc.at("R").get<std::string>());
    std::vector<std::string> designs = doc.at("designs").get<std::vector<std::string>>();
    std::vector<std::array<int, kDihCount>> action(designs.size());

    auto index_of = [&](const std::string& d) {
        for (size_t i = 0; i < designs.size(); ++i) {
            if (designs[i] == d) return static_cast<int>(i);
        }
        throw std::invalid_argument("tileset config: unknown design '" + d + "'");
    };

    const json& table = doc.at("action");
    for (auto it = table.begin(); it != table.end(); ++it) {
        index_of(it.key());  // every key must be a declared design
    }
    for (size_t d = 0; d < designs.size(); ++d) {
        action[d].fill(static_cast<int>(d));
        if (!table.contains(designs[d])) {
            throw std::invalid_argument("tileset config: no action row for design '" +
                                        designs[d] + "'");
        }
        const json& row = table.at(designs[d]);
        for (auto it = row.begin(); it != row.end(); ++it) {
            auto g = parse_dih(it.key());
            if (!g || !R.contains(*g)) {
                throw std::invalid_argument("tileset config: element '" + it.key() +
                                            "' is not in R = " + R.name());
            }
            action[d][static_cast<size_t>(*g)] = index_of(it.value().get<std::string>());
        }
        for (Dih g : R.elements()) {
            if (g != Dih::Id && !row.contains(dih_name(g))) {
                throw std::invalid_argument(std::string("tileset config: design '") +
                                            designs[d] + "' lacks an image under " +
                                            dih_name(g));
            }
        }
        if (action[d][static_cast<size_t>(Dih::Id)] != static_cast<int>(d)) {
            throw std::invalid_argument("tileset config: identity must act trivially");
        }
    }
    return TileDesignSet(std::move(designs), R, std::move(action));
}

TileDesignSet from_orbit_spec(const json& doc) {
    DihGroup R = parse_group_or_throw(doc.at("R").get<std::string>());
    std::vector<SubgroupClass> classes = subgroup_classes(R);
    OrbitSpec spec{R, {}};
    for (const auto& cls : classes) spec.counts.emplace_back(cls.representative, 0);

    const json& counts = doc.at("counts");
    for (auto it = counts.begin(); it != counts.end(); ++it) {
        DihGroup sub = parse_group_or_throw(it.key());
        if (!sub.is_subgroup_of(R)) {
            throw std::invalid_argument("tileset config: '" + it.key() +
                                        "' is not a subgroup of R = " + R.name());
        }
        long value = it.value().get<long>();
        if (value < 0) {
            throw std::invalid_argument("tileset config: negative orbit count");
        }
        bool placed = false;
        for (size_t i = 0; i < classes.size(); ++i) {
            const auto& conj = classes[i].conjugates;
            for (const auto& member : conj) {
                if (member == sub) {
                    spec.counts[i].second += value;
                    placed = true;
                    break;
                }
            }
            if (placed) break;
        }
        if (!placed) throw std::logic_error("tileset config: class lookup failed");
    }
    return realize_orbit_spec(spec);
}

}  // namespace

TileDesignSet load_tileset(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("tileset config: bad JSON: ") + e.what());
    }
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "explicit") return from_explicit(doc);
    if (kind == "orbit-spec") return from_orbit_spec(doc);
    throw std::invalid_argument("tileset config: unknown kind '" + kind + "'");
}

TileDesignSet load_tileset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tileset config: " + path);
    return load_tileset(in);
}

TileDesignSet resolve_tileset(const std::string& name_or_path, const DihGroup& R) {
    for (const auto& name : builtin_tileset_names()) {
        if (name == name_or_path) return builtin_tileset(name, R);
    }
    TileDesignSet ts = load_tileset_file(name_or_path);
    if (!R.is_subgroup_of(ts.ambient())) {
        throw std::invalid_argument("tileset '" + name_or_path +
                                    "' does not support group " + R.name());
    }
    return ts;
}

std::string orbit_spec_to_string(const OrbitSpec& spec) {
    std::ostringstream out;
    out << "R = " << spec.R.name() << "\n";
    for (const auto& [sub, count] : spec.counts) {
        out << "  orbits with stabilizer class <" << sub.name() << ">: " << count
            << "\n";
    }
    return out.str();
}

std::string table_to_string(const FixedDesignTable& t) {
    std::ostringstream out;
    for (Dih g : t.R.elements()) {
        out << "  t_" << dih_name(g) << " = " << t.at(g) << "\n";
    }
    return out.str();
}

}  // namespace tilecount
