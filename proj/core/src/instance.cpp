#include "seprect/instance.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace seprect {

using nlohmann::json;

bool Instance::operator==(const Instance& other) const {
    return red == other.red && blue_points == other.blue_points &&
           blue_circles == other.blue_circles && k == other.k && frame == other.frame;
}

namespace {

[[noreturn]] void fail_at(const std::string& text, std::size_t byte, const std::string& what) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << what;
    throw InvalidInstance(os.str());
}

double finite_number(const json& j, const char* ctx) {
    if (!j.is_number()) throw InvalidInstance(std::string(ctx) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InvalidInstance(std::string(ctx) + ": non-finite number");
    return v;
}

std::vector<Point> parse_points(const json& j, const char* ctx) {
    if (!j.is_array()) throw InvalidInstance(std::string(ctx) + ": expected an array");
    std::vector<Point> pts;
    pts.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2) {
            throw InvalidInstance(std::string(ctx) + ": expected [x, y] pairs");
        }
        pts.push_back(Point{finite_number(e[0], ctx), finite_number(e[1], ctx)});
    }
    return pts;
}

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void append_points(std::string& out, const char* key, const std::vector<Point>& pts) {
    out += "  \"";
    out += key;
    out += "\": [";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ", ";
        out += '[';
        append_number(out, pts[i].x);
        out += ", ";
        append_number(out, pts[i].y);
        out += ']';
    }
    out += ']';
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    } catch (const json::exception& e) {
        throw InvalidInstance(e.what());  // e.g. number overflow
    }
    if (!j.is_object()) throw InvalidInstance("top level: expected an object");

    Instance inst;
    if (!j.contains("red")) throw InvalidInstance("missing required field \"red\"");
    inst.red = parse_points(j.at("red"), "red");
    const bool has_pts = j.contains("blue_points");
    const bool has_circ = j.contains("blue_circles");
    if (has_pts == has_circ) {
        throw InvalidInstance("exactly one of \"blue_points\" / \"blue_circles\" must be present");
    }
    if (has_pts) inst.blue_points = parse_points(j.at("blue_points"), "blue_points");
    if (has_circ) {
        std::vector<UnitCircle> circles;
        for (const Point& p : parse_points(j.at("blue_circles"), "blue_circles")) {
            circles.push_back(UnitCircle{p});
        }
        inst.blue_circles = std::move(circles);
    }
    if (j.contains("k")) {
        const json& kj = j.at("k");
        if (!kj.is_number_integer() || kj.get<long long>() < 0) {
            throw InvalidInstance("k: expected a non-negative integer");
        }
        inst.k = kj.get<int>();
    }
    if (j.contains("frame")) {
        const json& f = j.at("frame");
        if (!f.is_array() || f.size() != 4) {
            throw InvalidInstance("frame: expected [xmin, ymin, xmax, ymax]");
        }
        Rect r{finite_number(f[0], "frame"), finite_number(f[1], "frame"),
               finite_number(f[2], "frame"), finite_number(f[3], "frame")};
        if (!r.valid()) throw InvalidInstance("frame: min exceeds max");
        inst.frame = r;
    }
    return inst;
}

std::string render_instance(const Instance& inst) {
    std::string out = "{\n";
    append_points(out, "red", inst.red);
    if (inst.blue_points) {
        out += ",\n";
        append_points(out, "blue_points", *inst.blue_points);
    }
    if (inst.blue_circles) {
        std::vector<Point> centers;
        centers.reserve(inst.blue_circles->size());
        for (const UnitCircle& c : *inst.blue_circles) centers.push_back(c.center);
        out += ",\n";
        append_points(out, "blue_circles", centers);
    }
    if (inst.k) {
        out += ",\n  \"k\": " + std::to_string(*inst.k);
    }
    if (inst.frame) {
        out += ",\n  \"frame\": [";
        append_number(out, inst.frame->xmin);
        out += ", ";
        append_number(out, inst.frame->ymin);
        out += ", ";
        append_number(out, inst.frame->xmax);
        out += ", ";
        append_number(out, inst.frame->ymax);
        out += ']';
    }
    out += "\n}\n";
    return out;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInstance("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << render_instance(inst);
}

}  // namespace seprect
