#include "spectral/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "spectral/json_io.hpp"

namespace spectral {

std::string count_key_string(const CountKey& k) {
    std::ostringstream os;
    os << k.g << "|";
    for (std::size_t i = 0; i < k.parts.size(); ++i) {
        if (i) os << ",";
        os << k.parts[i];
    }
    return os.str();
}

CountKey count_key_parse(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw IoError("cache: malformed key '" + s + "'");
    CountKey k;
    k.g = std::stoi(s.substr(0, bar));
    std::stringstream rest(s.substr(bar + 1));
    std::string item;
    while (std::getline(rest, item, ','))
        if (!item.empty()) k.parts.push_back(std::stol(item));
    return k;
}

namespace {

void merge_table(const nlohmann::json& j, const char* name,
                 MemoTable<CountKey, Rational>& table) {
    if (!j.contains(name)) return;
    for (const auto& [key, value] : j.at(name).items())
        table.store(count_key_parse(key), Rational::parse(value.get<std::string>()));
}

nlohmann::json dump_table(const MemoTable<CountKey, Rational>& table) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : table.snapshot()) j[count_key_string(k)] = v.str();
    return j;
}

}  // namespace

bool CacheFile::load(DessinEngine& dessins, HurwitzEngine& hurwitz) {
    std::ifstream in(path_);
    if (!in) return true;  // nothing cached yet
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "warning: unreadable cache " << path_ << ": " << e.what()
                  << "; rebuilding\n";
        return false;
    }
    if (!j.contains("version") || j["version"].get<int>() != kVersion) {
        std::cerr << "warning: cache version mismatch in " << path_ << "; rebuilding\n";
        return false;
    }
    merge_table(j, "dessins", dessins.table_mut());
    merge_table(j, "hurwitz", hurwitz.table_mut());
    return true;
}

void CacheFile::save(const DessinEngine& dessins, const HurwitzEngine& hurwitz) {
    // Union with existing entries: they are immutable once written.
    DessinEngine dtmp;
    HurwitzEngine htmp;
    load(dtmp, htmp);
    for (const auto& [k, v] : dessins.table().snapshot()) dtmp.table_mut().store(k, v);
    for (const auto& [k, v] : hurwitz.table().snapshot()) htmp.table_mut().store(k, v);

    nlohmann::json j;
    j["version"] = kVersion;
    j["dessins"] = dump_table(dtmp.table());
    j["hurwitz"] = dump_table(htmp.table());

    std::ofstream out(path_, std::ios::trunc);
    if (!out) throw IoError("cache: cannot write " + path_);
    out << j.dump(1) << "\n";
    if (!out) throw IoError("cache: write failed for " + path_);
}

CacheFile::Info CacheFile::info() const {
    Info info;
    std::ifstream in(path_);
    if (!in) return info;
    info.exists = true;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception&) {
        return info;
    }
    info.version = j.value("version", 0);
    for (const char* name : {"dessins", "hurwitz"})
        if (j.contains(name)) info.entries += j.at(name).size();
    return info;
}

void CacheFile::clear() const { std::remove(path_.c_str()); }

}  // namespace spectral
