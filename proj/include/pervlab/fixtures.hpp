/*
   Copyright 2026 the pervlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PERVLAB_FIXTURES_HPP
#define PERVLAB_FIXTURES_HPP

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "brauertree.hpp"

namespace pervlab {

/// One labelled tree from a fixture file, together with the degree of the
/// cuspidal pair needed to recompute its perversity labels.
struct FixtureTree {
    BrauerTree tree;
    std::string cuspidal_degree = "1";
};

/// Contents of one bundled (group, d) file: labelled trees, the perversity
/// table for that column where the source prints one, and exact degrees
/// where the source prints those.
struct FixtureFile {
    std::string group;
    std::string d;
    int base_d = 1;
    BKind kind = BKind::plain(1);
    std::vector<FixtureTree> trees;
    std::map<std::string, std::string> degrees;
    std::map<std::string, long long> pi_table;
    std::vector<std::string> notes;
};

inline std::string fixture_directory() {
    if (const char* env = std::getenv("PERVLAB_FIXTURES")) return env;
#ifdef PERVLAB_FIXTURE_DIR
    return PERVLAB_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

inline const std::vector<std::pair<std::string, std::vector<std::string>>>& fixture_index() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> index{
        {"G2", {"3", "6"}},
        {"3D4", {"3", "6", "12"}},
        {"F4", {"3", "4", "6", "8", "12"}},
        {"E6", {"2", "3", "4", "5", "6", "8", "9", "12"}},
        {"2E6", {"3", "4", "6", "8", "10", "12", "18"}},
        {"2B2", {"q2m1", "8a", "8b"}},
        {"2G2", {"q2m1", "4", "12a", "12b"}},
        {"2F4", {"q2m1", "4", "8a", "8b", "12", "24a", "24b"}},
    };
    return index;
}

inline FixtureFile load_fixture(const std::string& group, const std::string& dtag,
                                const std::string& dir = fixture_directory()) {
    if (group == "E7" || group == "E8")
        throw std::domain_error("load_fixture: tree unknown for " + group);
    bool listed = false;
    for (auto& [g, ds] : fixture_index())
        if (g == group)
            for (auto& dd : ds)
                if (dd == dtag) listed = true;
    if (!listed) throw std::domain_error("load_fixture: no fixture for " + group + " at d=" + dtag);

    std::ifstream in(dir + "/" + group + "_" + dtag + ".json");
    if (!in) throw std::runtime_error("load_fixture: cannot open fixture file for " + group + "_" + dtag);
    nlohmann::json j;
    in >> j;

    FixtureFile out;
    out.group = group;
    out.d = dtag;
    out.base_d = j.at("base_d").get<int>();
    out.kind = dtag == "q2m1" ? BKind::plain(out.base_d) : BKind::parse_tag(dtag);
    if (j.contains("degrees"))
        for (auto& [k, v] : j["degrees"].items()) out.degrees[k] = v.get<std::string>();
    if (j.contains("pi_table"))
        for (auto& [k, v] : j["pi_table"].items()) out.pi_table[k] = v.get<long long>();
    if (j.contains("notes"))
        for (auto& n : j["notes"]) out.notes.push_back(n.get<std::string>());

    if (j.contains("trees")) {
        for (auto& jt : j["trees"]) {
            FixtureTree ft;
            BrauerTree& t = ft.tree;
            t.block_name = group + " d=" + dtag + " " + jt.value("block", "");
            for (auto& jv : jt.at("vertices")) {
                TreeVertex v;
                v.id = jv.at("id").get<int>();
                v.exceptional = jv.value("exceptional", false);
                if (jv.contains("name")) v.name = jv["name"].get<std::string>();
                if (jv.contains("pi")) v.pi = jv["pi"].get<long long>();
                t.vertices.push_back(v);
            }
            for (auto& je : jt.at("edges")) t.edges.push_back({je.at(0).get<int>(), je.at(1).get<int>()});
            if (jt.contains("planar"))
                for (auto& [k, v] : jt["planar"].items()) {
                    std::vector<int> nb;
                    for (auto& x : v) nb.push_back(x.get<int>());
                    t.planar[std::stoi(k)] = nb;
                }
            if (jt.contains("tags"))
                for (auto& tag : jt["tags"]) t.tags.push_back(tag.get<std::string>());
            if (jt.contains("notes"))
                for (auto& n : jt["notes"]) out.notes.push_back(n.get<std::string>());
            ft.cuspidal_degree = jt.value("cuspidal_degree", "1");
            t.validate();
            out.trees.push_back(std::move(ft));
        }
    }
    return out;
}

/// Recomputes pi labels from the printed degrees: for every labelled vertex
/// (or table entry) whose degree is on file, (B(chi) - B(psi)) / base_d must
/// reproduce the label exactly.
struct FixtureRecomputation {
    long long matched = 0;
    long long missing_degree = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

inline FixtureRecomputation recompute_fixture_pi(const FixtureFile& fx) {
    FixtureRecomputation rep;
    auto check_one = [&](const std::string& name, long long expected, const std::string& cuspidal) {
        auto it = fx.degrees.find(name);
        if (it == fx.degrees.end()) {
            ++rep.missing_degree;
            return;
        }
        ScaledCycloProduct chi = ScaledCycloProduct::parse(it->second);
        ScaledCycloProduct psi = ScaledCycloProduct::parse(cuspidal);
        long long got = pi_from_degrees(fx.kind, chi, psi).value;
        if (got != expected)
            rep.mismatches.push_back(fx.group + " d=" + fx.d + " " + name + ": recomputed " + std::to_string(got) +
                                     ", printed " + std::to_string(expected));
        else
            ++rep.matched;
    };
    for (auto& ft : fx.trees)
        for (auto& v : ft.tree.vertices)
            if (!v.exceptional && v.pi) check_one(v.name, *v.pi, ft.cuspidal_degree);
    for (auto& [name, expected] : fx.pi_table) check_one(name, expected, "1");
    return rep;
}

}  // namespace pervlab

#endif
