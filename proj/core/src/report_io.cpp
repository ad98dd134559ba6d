#include "annulus/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace annulus::io {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_profile_csv(std::ostream& os, const minimizer::RadialMinimizer& m) {
    const auto& prof = m.table;
    const auto P = energy::p_profile(m);
    os << "t,H,dH,g,P\n";
    for (std::size_t i = 0; i < prof.t.size(); ++i)
        os << fmt(prof.t[i]) << ',' << fmt(prof.H[i]) << ',' << fmt(prof.dH[i]) << ','
           << fmt(prof.g[i]) << ',' << fmt(P[i].second) << '\n';
}

void write_map_csv(std::ostream& os, const geometry::PolarGridMap& m) {
    os << "t,theta,rho,Theta\n";
    for (std::size_t i = 0; i < m.nt(); ++i)
        for (std::size_t j = 0; j < m.ntheta(); ++j)
            os << fmt(m.t_grid[i]) << ',' << fmt(m.theta_grid[j]) << ','
               << fmt(m.rho_at(i, j)) << ',' << fmt(m.theta_at(i, j)) << '\n';
}

geometry::PolarGridMap read_map_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,theta,rho,Theta", 0) != 0)
        throw data_error("read_map_csv: missing `t,theta,rho,Theta` header");
    std::vector<double> t_col, th_col, rho_col, theta_col;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        double vals[4];
        std::size_t pos = 0;
        for (int k = 0; k < 4; ++k) {
            const std::size_t comma = line.find(',', pos);
            const std::string field = line.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                std::size_t used = 0;
                vals[k] = std::stod(field, &used);
                if (used != field.size()) throw std::invalid_argument(field);
            } catch (const std::exception&) {
                throw data_error("read_map_csv: bad numeric field `" + field + "` at line " +
                                 std::to_string(line_no));
            }
            if (k < 3) {
                if (comma == std::string::npos)
                    throw data_error("read_map_csv: short row at line " +
                                     std::to_string(line_no));
                pos = comma + 1;
            }
        }
        t_col.push_back(vals[0]);
        th_col.push_back(vals[1]);
        rho_col.push_back(vals[2]);
        theta_col.push_back(vals[3]);
    }
    if (t_col.size() < 4) throw data_error("read_map_csv: no data rows");

    // infer ntheta from the first block of equal t
    std::size_t ntheta = 1;
    while (ntheta < t_col.size() && t_col[ntheta] == t_col[0]) ++ntheta;
    if (ntheta < 2 || t_col.size() % ntheta != 0)
        throw data_error("read_map_csv: rows do not form a (t, theta) grid");
    const std::size_t nt = t_col.size() / ntheta;

    geometry::PolarGridMap m;
    m.t_grid.resize(nt);
    m.theta_grid.assign(th_col.begin(), th_col.begin() + static_cast<long>(ntheta));
    m.rho = std::move(rho_col);
    m.theta_val = std::move(theta_col);
    for (std::size_t i = 0; i < nt; ++i) {
        m.t_grid[i] = t_col[i * ntheta];
        for (std::size_t j = 0; j < ntheta; ++j) {
            if (t_col[i * ntheta + j] != m.t_grid[i] ||
                th_col[i * ntheta + j] != m.theta_grid[j])
                throw data_error("read_map_csv: grid coordinates not row-major over (t, theta)");
        }
    }
    // the CSV stores Theta only; recover the winding from its span over one
    // period so the seam continuation is rebuilt correctly
    const double span = m.theta_at(0, ntheta - 1) - m.theta_at(0, 0);
    const double full_turn =
        2.0 * std::numbers::pi * static_cast<double>(ntheta - 1) / static_cast<double>(ntheta);
    const double w = std::round(span / full_turn);
    if (w == 0.0 || !std::isfinite(w))
        throw data_error("read_map_csv: Theta column carries no net winding");
    m.winding = static_cast<int>(w);
    m.validate();
    return m;
}

std::string energy_report_json(const energy::EnergyReport& rep) {
    std::ostringstream os;
    os << "{\"energy\": " << fmt(rep.energy) << ", \"lower_bound\": " << fmt(rep.lower_bound)
       << ", \"gap\": " << fmt(rep.gap) << ", \"p_const_dev\": " << fmt(rep.p_const_dev)
       << ", \"el_residual\": " << fmt(rep.el_residual) << ", \"nt\": " << rep.nt
       << ", \"ntheta\": " << rep.ntheta << "}";
    return os.str();
}

std::string trials_json(const std::vector<verify::TrialResult>& trials) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto& t = trials[i];
        if (i) os << ",";
        os << "\n  {\"seed\": " << t.seed << ", \"mode\": \"" << verify::mode_name(t.mode)
           << "\", \"amplitude\": " << fmt(t.amplitude) << ", \"energy\": " << fmt(t.energy)
           << ", \"gap\": " << fmt(t.gap) << "}";
    }
    os << "\n]";
    return os.str();
}

double write_profile_svg(std::ostream& os, const minimizer::RadialMinimizer& m) {
    const auto& prof = m.table;
    const double r = m.r();
    const double R = m.R();
    double max_dev = 0.0;
    for (std::size_t i = 0; i < prof.t.size(); ++i)
        max_dev = std::max(max_dev, std::abs(prof.H[i] - prof.t[i]));

    const double width = 640.0, height = 480.0, pad = 48.0;
    const double x_span = r - 1.0;
    const double y_span = std::max(R, r) - 1.0;
    const auto sx = [&](double t) { return pad + (t - 1.0) / x_span * (width - 2 * pad); };
    const auto sy = [&](double H) {
        return height - pad - (H - 1.0) / y_span * (height - 2 * pad);
    };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <metadata id=\"profile-stats\">{\"r\": " << fmt(r) << ", \"R\": " << fmt(R)
       << ", \"p\": " << fmt(m.p.value()) << ", \"regime\": \""
       << minimizer::regime_name(m.regime) << "\", \"max_abs_deviation\": " << fmt(max_dev)
       << "}</metadata>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    // axes
    os << "  <line x1=\"" << pad << "\" y1=\"" << height - pad << "\" x2=\"" << width - pad
       << "\" y2=\"" << height - pad << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << pad << "\" y1=\"" << height - pad << "\" x2=\"" << pad
       << "\" y2=\"" << pad << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // identity reference
    os << "  <line x1=\"" << sx(1.0) << "\" y1=\"" << sy(1.0) << "\" x2=\"" << sx(r)
       << "\" y2=\"" << sy(r) << "\" stroke=\"#888\" stroke-width=\"1\" "
       << "stroke-dasharray=\"6 4\"/>\n";
    // profile polyline (thin the table to at most 512 points)
    os << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    const std::size_t n = prof.t.size();
    const std::size_t stride = std::max<std::size_t>(1, n / 512);
    for (std::size_t i = 0; i < n; i += stride)
        os << sx(prof.t[i]) << ',' << sy(prof.H[i]) << ' ';
    os << sx(prof.t[n - 1]) << ',' << sy(prof.H[n - 1]);
    os << "\"/>\n";
    os << "  <text x=\"" << width - pad << "\" y=\"" << height - pad / 2
       << "\" text-anchor=\"end\" font-size=\"14\">t</text>\n";
    os << "  <text x=\"" << pad / 2 << "\" y=\"" << pad << "\" font-size=\"14\">H(t)</text>\n";
    os << "</svg>\n";
    return max_dev;
}

}  // namespace annulus::io
