#include "baystow/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "baystow/error.hpp"

namespace baystow {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(e.what());
    }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object())
        parse_fail(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* name : allowed)
            ok = ok || it.key() == name;
        if (!ok)
            parse_fail(where + ": unknown field '" + it.key() + "'");
    }
}

const json& field(const json& obj, const char* name, const std::string& where) {
    const auto it = obj.find(name);
    if (it == obj.end())
        parse_fail(where + ": missing field '" + name + "'");
    return *it;
}

long long integer(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        parse_fail(where + ": expected an integer");
    return v.get<long long>();
}

BayDims dims_from(const json& doc) {
    const auto& d = field(doc, "dims", "document");
    reject_unknown(d, {"n1", "n2", "n3"}, "dims");
    BayDims dims;
    int* targets[] = {&dims.n1, &dims.n2, &dims.n3};
    const char* names[] = {"n1", "n2", "n3"};
    for (int k = 0; k < 3; ++k) {
        const std::string where = std::string("dims.") + names[k];
        const auto v = integer(field(d, names[k], "dims"), where);
        if (v < 1 || v > 1'000'000)
            parse_fail(where + ": must be a positive extent, got " + std::to_string(v));
        *targets[k] = static_cast<int>(v);
    }
    if (dims.capacity() > 100'000'000)
        parse_fail("dims: bay " + to_string(dims) + " is too large");
    return dims;
}

json dims_to(const BayDims& d) { return json{{"n1", d.n1}, {"n2", d.n2}, {"n3", d.n3}}; }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << text;
    if (!out)
        throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

} // namespace

Instance generate_instance(const GeneratorSpec& spec) {
    if (spec.dims.n1 < 1 || spec.dims.n2 < 1 || spec.dims.n3 < 1)
        throw Error(ErrorCode::InvalidSpec, "bay extents must be positive, got " + to_string(spec.dims));
    if (spec.count < 1 || spec.count > spec.dims.capacity())
        throw Error(ErrorCode::InvalidSpec, "container count " + std::to_string(spec.count) +
                                                " outside [1, " + std::to_string(spec.dims.capacity()) + "]");
    if (!(spec.date_min > 0.0) || !(spec.date_min <= spec.date_max) || !std::isfinite(spec.date_max))
        throw Error(ErrorCode::InvalidSpec, "date range must satisfy 0 < min <= max, got [" +
                                                std::to_string(spec.date_min) + ", " +
                                                std::to_string(spec.date_max) + "]");
    std::mt19937_64 rng(spec.seed);
    std::vector<Container> containers;
    containers.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        double d = spec.date_min;
        if (spec.date_max > spec.date_min) {
            d = std::uniform_real_distribution<double>(spec.date_min, spec.date_max)(rng);
        }
        containers.push_back({static_cast<ContainerId>(i + 1), d});
    }
    return Instance(spec.dims, std::move(containers));
}

std::string instance_to_json(const Instance& instance) {
    json doc;
    doc["dims"] = dims_to(instance.dims());
    json list = json::array();
    for (const auto& c : instance.containers())
        list.push_back(json{{"id", c.id}, {"delivery_date", c.delivery_date}});
    doc["containers"] = std::move(list);
    return doc.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    const auto doc = parse_document(text);
    reject_unknown(doc, {"dims", "containers"}, "document");
    const auto dims = dims_from(doc);
    const auto& list = field(doc, "containers", "document");
    if (!list.is_array())
        parse_fail("containers: expected an array");
    if (list.size() > dims.capacity())
        throw Error(ErrorCode::DimensionMismatch, std::to_string(list.size()) + " containers exceed capacity " +
                                                      std::to_string(dims.capacity()) + " of bay " +
                                                      to_string(dims));

    std::vector<Container> containers;
    containers.reserve(list.size());
    std::vector<char> seen(list.size() + 1, 0);
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string where = "containers[" + std::to_string(k) + "]";
        const auto& item = list[k];
        reject_unknown(item, {"id", "delivery_date"}, where);
        const auto id = integer(field(item, "id", where), where + ".id");
        if (id < 1 || static_cast<std::size_t>(id) > list.size())
            parse_fail(where + ".id: id " + std::to_string(id) + " outside 1.." + std::to_string(list.size()));
        if (seen[id])
            parse_fail(where + ".id: duplicate container id " + std::to_string(id));
        seen[id] = 1;
        const auto& date = field(item, "delivery_date", where);
        if (!date.is_number())
            parse_fail(where + ".delivery_date: expected a number");
        const double d = date.get<double>();
        if (!(d > 0.0) || !std::isfinite(d))
            parse_fail(where + ".delivery_date: must be positive, got " + std::to_string(d));
        containers.push_back({static_cast<ContainerId>(id), d});
    }
    return Instance(dims, std::move(containers));
}

void write_instance(const Instance& instance, const std::filesystem::path& path) {
    write_file(path, instance_to_json(instance));
}

Instance read_instance(const std::filesystem::path& path) {
    try {
        return instance_from_json(read_file(path));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IoError)
            throw;
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string arrangement_to_json(const Arrangement& arr) {
    json doc;
    doc["dims"] = dims_to(arr.dims());
    json cells = json::array();
    const auto slots = arr.slots();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] == kEmpty)
            continue;
        const auto c = cell_at(arr.dims(), i);
        cells.push_back(json::array({c.x, c.y, c.z, slots[i]}));
    }
    doc["cells"] = std::move(cells);
    return doc.dump() + "\n";
}

Arrangement arrangement_from_json(const std::string& text) {
    const auto doc = parse_document(text);
    reject_unknown(doc, {"dims", "cells"}, "document");
    const auto dims = dims_from(doc);
    const auto& cells = field(doc, "cells", "document");
    if (!cells.is_array())
        parse_fail("cells: expected an array");

    Arrangement arr(dims);
    std::set<ContainerId> ids;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const std::string where = "cells[" + std::to_string(k) + "]";
        const auto& t = cells[k];
        if (!t.is_array() || t.size() != 4)
            parse_fail(where + ": expected [x, y, z, id]");
        const Cell c{static_cast<int>(integer(t[0], where + "[0]")), static_cast<int>(integer(t[1], where + "[1]")),
                     static_cast<int>(integer(t[2], where + "[2]"))};
        const auto id = integer(t[3], where + "[3]");
        if (!in_bounds(dims, c))
            parse_fail(where + ": cell " + to_string(c) + " outside bay " + to_string(dims));
        if (id < 1 || id > 0xffffffffLL)
            parse_fail(where + ": container id must be positive, got " + std::to_string(id));
        if (arr.at(c) != kEmpty)
            parse_fail(where + ": cell " + to_string(c) + " listed twice");
        if (!ids.insert(static_cast<ContainerId>(id)).second)
            parse_fail(where + ": duplicate container id " + std::to_string(id));
        arr.set(c, static_cast<ContainerId>(id));
    }
    return arr;
}

void write_arrangement(const Arrangement& arr, const std::filesystem::path& path) {
    write_file(path, arrangement_to_json(arr));
}

Arrangement read_arrangement(const std::filesystem::path& path) {
    try {
        return arrangement_from_json(read_file(path));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IoError)
            throw;
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_stats(const RunStats& stats, std::ostream& os, bool with_timing) {
    os << kStatsHeader << '\n';
    for (const auto& g : stats.generations)
        os << g.generation << ',' << format_number(g.best_fitness) << ',' << format_number(g.mean_fitness) << ','
           << format_number(with_timing ? g.elapsed_ms : 0.0) << '\n';
}

void write_stats(const RunStats& stats, const std::filesystem::path& path, bool with_timing) {
    std::ostringstream ss;
    write_stats(stats, ss, with_timing);
    write_file(path, ss.str());
}

} // namespace baystow
