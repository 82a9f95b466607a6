#include "seprect/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "seprect/envelope.hpp"
#include "seprect/staircase.hpp"

namespace seprect {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void grow(Rect& b, const Point& p, double pad = 0.0) {
    b.xmin = std::min(b.xmin, p.x - pad);
    b.ymin = std::min(b.ymin, p.y - pad);
    b.xmax = std::max(b.xmax, p.x + pad);
    b.ymax = std::max(b.ymax, p.y + pad);
}

void grow(Rect& b, const Rect& r) {
    grow(b, Point{r.xmin, r.ymin});
    grow(b, Point{r.xmax, r.ymax});
}

void rect_elem(std::ostringstream& os, const Rect& r, const char* style) {
    os << "  <rect x=\"" << num(r.xmin) << "\" y=\"" << num(r.ymin) << "\" width=\""
       << num(r.width()) << "\" height=\"" << num(r.height()) << "\" " << style << "/>\n";
}

void chain_path(std::ostringstream& os, const LevelChain& chain, const MirrorFrame& f,
                const char* stroke) {
    if (chain.verts.empty()) return;
    os << "  <path d=\"";
    for (std::size_t i = 0; i < chain.verts.size(); ++i) {
        const Point w = f.to_world(Point{chain.verts[i].x, chain.verts[i].y});
        if (i == 0) {
            os << "M " << num(w.x) << ' ' << num(w.y);
        } else {
            os << " H " << num(w.x);
            os << " V " << num(w.y);
        }
    }
    os << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"0.06\"/>\n";
}

void envelope_path(std::ostringstream& os, const Envelope& env, const char* stroke) {
    if (env.pieces.empty()) return;
    os << "  <path d=\"";
    bool first = true;
    for (const EnvPiece& p : env.pieces) {
        const int samples = p.kind == EnvPieceKind::Arc ? 24 : 1;
        for (int i = 0; i <= samples; ++i) {
            const double x = p.x0 + (p.x1 - p.x0) * i / samples;
            const Point w = env.frame.to_world(Point{x, env.piece_y(p, x)});
            if (first) {
                os << "M " << num(w.x) << ' ' << num(w.y);
                first = false;
            } else {
                os << " L " << num(w.x) << ' ' << num(w.y);
            }
        }
    }
    os << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"0.06\"/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const std::optional<Rect>& answer) {
    const Rect smin = smallest_enclosing_rect(inst.red);
    Rect bounds = smin;
    for (const Point& p : inst.red) grow(bounds, p);
    if (inst.blue_points) {
        for (const Point& p : *inst.blue_points) grow(bounds, p);
    }
    if (inst.blue_circles) {
        for (const UnitCircle& c : *inst.blue_circles) grow(bounds, c.center, 1.0);
    }
    if (inst.frame) grow(bounds, *inst.frame);
    if (answer) grow(bounds, *answer);
    const double pad = 0.05 * std::max(bounds.width(), bounds.height()) + 0.5;
    bounds = Rect{bounds.xmin - pad, bounds.ymin - pad, bounds.xmax + pad, bounds.ymax + pad};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(bounds.xmin) << ' '
       << num(-bounds.ymax) << ' ' << num(bounds.width()) << ' ' << num(bounds.height())
       << "\" width=\"800\" height=\"" << num(800.0 * bounds.height() / bounds.width())
       << "\">\n";
    // World coordinates are y-up; SVG is y-down, so everything is drawn
    // inside a scale(1,-1) group.
    os << "<g transform=\"scale(1,-1)\">\n";

    if (inst.frame) {
        rect_elem(os, *inst.frame,
                  "fill=\"none\" stroke=\"#999999\" stroke-width=\"0.06\" "
                  "stroke-dasharray=\"0.4 0.2\"");
    }

    std::optional<Rect> smax;
    const int k = inst.k.value_or(0);
    if (inst.blue_points) {
        const SideSupports sides = build_side_supports(*inst.blue_points, smin);
        Rect s{sides.smax_edge(Region::W, k), sides.smax_edge(Region::S, k),
               sides.smax_edge(Region::E, k), sides.smax_edge(Region::N, k)};
        if (inst.frame) {
            s.xmin = std::max(s.xmin, inst.frame->xmin);
            s.ymin = std::max(s.ymin, inst.frame->ymin);
            s.xmax = std::min(s.xmax, inst.frame->xmax);
            s.ymax = std::min(s.ymax, inst.frame->ymax);
        }
        if (std::isfinite(s.xmin) && std::isfinite(s.ymin) && std::isfinite(s.xmax) &&
            std::isfinite(s.ymax)) {
            smax = s;
        }
    } else if (inst.blue_circles) {
        try {
            smax = compute_smax_circles(smin, *inst.blue_circles, inst.frame);
        } catch (const UnboundedInstance&) {
        }
    }
    if (smax) {
        rect_elem(os, *smax,
                  "fill=\"none\" stroke=\"#bb8800\" stroke-width=\"0.06\" "
                  "stroke-dasharray=\"0.2 0.2\"");
    }
    rect_elem(os, smin, "fill=\"none\" stroke=\"#cc2222\" stroke-width=\"0.08\"");

    if (inst.blue_points) {
        for (Region q : {Region::NE, Region::NW, Region::SW, Region::SE}) {
            std::vector<Point> quad;
            for (const Point& p : *inst.blue_points) {
                if (classify_region(p, smin) == q) quad.push_back(p);
            }
            const StaircaseSet st = build_staircases(quad, q, k);
            chain_path(os, st.level(k), st.frame, "#8844cc");
        }
        for (const Point& p : *inst.blue_points) {
            os << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
               << "\" r=\"0.12\" fill=\"#2244cc\"/>\n";
        }
    }
    if (inst.blue_circles && smax) {
        for (Region q : {Region::NE, Region::NW, Region::SW, Region::SE}) {
            envelope_path(os, build_envelope(*inst.blue_circles, q, smin, *smax), "#8844cc");
        }
    }
    if (inst.blue_circles) {
        for (const UnitCircle& c : *inst.blue_circles) {
            os << "  <circle cx=\"" << num(c.center.x) << "\" cy=\"" << num(c.center.y)
               << "\" r=\"1\" fill=\"#2244cc\" fill-opacity=\"0.15\" stroke=\"#2244cc\" "
                  "stroke-width=\"0.05\"/>\n";
        }
    }
    if (answer) {
        rect_elem(os, *answer,
                  "fill=\"#22aa44\" fill-opacity=\"0.15\" stroke=\"#22aa44\" "
                  "stroke-width=\"0.08\"");
    }
    for (const Point& p : inst.red) {
        os << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
           << "\" r=\"0.12\" fill=\"#cc2222\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace seprect
