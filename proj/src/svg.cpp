#include "tde/svg.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace tde {

namespace {

constexpr double kSize = 400;
constexpr double kPad = 20;

const char* kPalette[] = {"#e4572e", "#29335c", "#f3a712", "#669bbc", "#a8c686", "#8e5572"};

class Canvas {
public:
    explicit Canvas(double extent) : scale_((kSize - 2 * kPad) / extent) {}

    std::string pt(const Point2& p) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f,%.4f", kPad + scale_ * p.x.to_double(),
                      kSize - kPad - scale_ * p.y.to_double());
        return buf;
    }

    void polygon(const std::vector<Point2>& v, const std::string& cls, const std::string& fill, const std::string& title) {
        body_ << "  <polygon class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < v.size(); ++i) body_ << (i ? " " : "") << pt(v[i]);
        body_ << "\" fill=\"" << fill << "\" fill-opacity=\"0.55\" stroke=\"#222\" stroke-width=\"1\">";
        if (!title.empty()) body_ << "<title>" << title << "</title>";
        body_ << "</polygon>\n";
    }

    void outline(const std::vector<Point2>& v, const std::string& cls) {
        body_ << "  <path class=\"" << cls << "\" d=\"";
        for (std::size_t i = 0; i < v.size(); ++i) body_ << (i ? " L " : "M ") << pt(v[i]);
        body_ << " Z\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    }

    std::string str() const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
            << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
            << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    double scale_;
    std::ostringstream body_;
};

double extent(const ToricDomainSpec& d) { return max(d.x_extent(), d.y_extent()).to_double(); }

int depth(const DecompositionTree& t, int i) {
    int d = 0;
    for (; t.nodes[i].parent >= 0; i = t.nodes[i].parent) ++d;
    return d;
}

}  // namespace

std::string svg_decomposition(const Expansion& e) {
    const auto& tree = e.tree;
    const auto& root = tree.nodes[0].domain;
    double ext = extent(root);
    if (tree.kind == DomainKind::Convex) ext = std::max(ext, tree.nodes[0].value.to_double());
    Canvas c(ext);
    const Point2 o{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& n = tree.nodes[i];
        std::vector<Point2> tri{o, {n.value, Rational(0)}, {Rational(0), n.value}};
        for (auto& p : tri) p = n.frame.apply(p);
        bool head = tree.is_convex_root(static_cast<int>(i));
        std::string fill = head ? "#dddddd" : kPalette[depth(tree, static_cast<int>(i)) % 6];
        c.polygon(tri, head ? "head" : "weight", fill, (head ? "head " : "weight ") + n.value.str());
    }
    c.outline(root.closed_vertices(), "domain");
    return c.str();
}

std::string svg_approximation(const ToricDomainSpec& omega, const ToricDomainSpec& approx) {
    Canvas c(std::max(extent(omega), extent(approx)));
    bool outer = approx.kind() == DomainKind::Concave;
    // Draw the larger region first so the smaller stays visible.
    if (outer) {
        c.polygon(approx.closed_vertices(), "approximation", "#f3a712", "outer approximation");
        c.polygon(omega.closed_vertices(), "domain", "#29335c", "domain");
    } else {
        c.polygon(omega.closed_vertices(), "domain", "#29335c", "domain");
        c.polygon(approx.closed_vertices(), "approximation", "#f3a712", "inner approximation");
    }
    return c.str();
}

}  // namespace tde
