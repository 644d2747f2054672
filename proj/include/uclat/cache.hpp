#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "uclat/search.hpp"
#include "uclat/version.hpp"

namespace uclat {

/**
 * One persisted search result. Serialized as a single JSON line; rationals
 * are stored as reduced numerator/denominator pairs in decimal strings,
 * never as floating decimals. Records are keyed by (lattice_d, n, mode,
 * bound), where bound is the starting bound (certified) or the region radius
 * (heuristic) of the request, so a cached result always matches what a fresh
 * run with the same configuration would produce.
 */
struct CacheRecord {
    int lattice_d = 0;
    int n = 0;
    std::string mode;  // "certified" | "heuristic"
    BigRat bound;       // request key
    BigRat bound_used;  // bound actually reached by deepening
    BigRat min_radius2;
    BigRat center_x;
    BigRat center_y;
    std::vector<LatticePoint> witness_points;
    bool certified = false;
    std::string tool_version;

    static CacheRecord from_result(const UcResult& r, const BigRat& request_bound) {
        CacheRecord rec;
        rec.lattice_d = r.lattice_d;
        rec.n = r.n;
        rec.mode = r.mode == SearchMode::Certified ? "certified" : "heuristic";
        rec.bound = request_bound;
        rec.bound_used = r.bound_used;
        rec.min_radius2 = r.min_radius2;
        rec.center_x = r.witness.center.x;
        rec.center_y = r.witness.center.y;
        rec.witness_points = r.witness_points;
        rec.certified = r.certified;
        rec.tool_version = kToolVersion;
        return rec;
    }

    UcResult to_result() const {
        Circle witness(QPoint{center_x, center_y}, min_radius2);
        return UcResult{lattice_d,
                        n,
                        min_radius2,
                        witness,
                        witness_points,
                        certified,
                        bound_used,
                        mode == "certified" ? SearchMode::Certified : SearchMode::Heuristic};
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["lattice_d"] = lattice_d;
        j["n"] = n;
        j["mode"] = mode;
        j["bound_num"] = bound.num().str();
        j["bound_den"] = bound.den().str();
        j["bound_used_num"] = bound_used.num().str();
        j["bound_used_den"] = bound_used.den().str();
        j["min_radius2_num"] = min_radius2.num().str();
        j["min_radius2_den"] = min_radius2.den().str();
        j["witness_center"] = {center_x.num().str(), center_x.den().str(),
                               center_y.num().str(), center_y.den().str()};
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : witness_points) pts.push_back({p.a, p.b});
        j["witness_points"] = pts;
        j["certified"] = certified;
        j["tool_version"] = tool_version;
        return j;
    }

    static CacheRecord from_json(const nlohmann::json& j) {
        auto rat = [&](const char* nk, const char* dk) {
            return BigRat(BigInt(j.at(nk).get<std::string>()), BigInt(j.at(dk).get<std::string>()));
        };
        CacheRecord rec;
        rec.lattice_d = j.at("lattice_d").get<int>();
        rec.n = j.at("n").get<int>();
        rec.mode = j.at("mode").get<std::string>();
        rec.bound = rat("bound_num", "bound_den");
        rec.bound_used = rat("bound_used_num", "bound_used_den");
        rec.min_radius2 = rat("min_radius2_num", "min_radius2_den");
        const auto& c = j.at("witness_center");
        rec.center_x = BigRat(BigInt(c.at(0).get<std::string>()), BigInt(c.at(1).get<std::string>()));
        rec.center_y = BigRat(BigInt(c.at(2).get<std::string>()), BigInt(c.at(3).get<std::string>()));
        for (const auto& p : j.at("witness_points")) {
            rec.witness_points.push_back(LatticePoint{p.at(0).get<long long>(),
                                                      p.at(1).get<long long>()});
        }
        rec.certified = j.at("certified").get<bool>();
        rec.tool_version = j.at("tool_version").get<std::string>();
        return rec;
    }

    std::string serialize() const { return to_json().dump(); }
    static CacheRecord parse(const std::string& line) {
        return from_json(nlohmann::json::parse(line));
    }
};

// Append-only JSONL cache; one record per line, flushed per record.
class CacheFile {
  public:
    explicit CacheFile(std::string path) : _path(std::move(path)) {}

    std::optional<CacheRecord> lookup(int d, int n, const std::string& mode,
                                      const BigRat& bound) const {
        std::ifstream in(_path);
        if (!in) return std::nullopt;
        std::string line;
        std::optional<CacheRecord> found;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                CacheRecord rec = CacheRecord::parse(line);
                if (rec.lattice_d == d && rec.n == n && rec.mode == mode && rec.bound == bound) {
                    found = std::move(rec);  // last matching record wins
                }
            } catch (const std::exception&) {
                continue;  // foreign or damaged line; leave it alone
            }
        }
        return found;
    }

    void append(const CacheRecord& rec) const {
        std::ofstream out(_path, std::ios::app);
        if (!out) throw std::runtime_error("cache: cannot open '" + _path + "' for append");
        out << rec.serialize() << "\n";
        out.flush();
    }

    const std::string& path() const { return _path; }

  private:
    std::string _path;
};

}  // namespace uclat
