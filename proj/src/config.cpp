#include "gmech/config.hpp"

#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "gmech/sphere.hpp"

namespace gmech::cli {

std::string subcommand_name(Subcommand sub) {
    switch (sub) {
    case Subcommand::RigidBody: return "rigid-body";
    case Subcommand::Advected: return "advected";
    case Subcommand::TrivialEp: return "trivial-ep";
    case Subcommand::Field: return "field";
    case Subcommand::OptimalTime: return "optimal-time";
    case Subcommand::Sweep: return "sweep";
    }
    return "?";
}

std::optional<Subcommand> subcommand_from_name(const std::string& name) {
    for (Subcommand s : {Subcommand::RigidBody, Subcommand::Advected, Subcommand::TrivialEp,
                         Subcommand::Field, Subcommand::OptimalTime, Subcommand::Sweep})
        if (subcommand_name(s) == name)
            return s;
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ParseError("key '" + key + "': cannot parse number from '" + v + "'");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ParseError("key '" + key + "': expected an integer, got '" + v + "'");
    return i;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1")
        return true;
    if (v == "false" || v == "0")
        return false;
    throw ParseError("key '" + key + "': expected true/false, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(key, trim(item)));
    if (out.empty())
        throw ParseError("key '" + key + "': empty list");
    return out;
}

Vec3 parse_vec3(const std::string& key, const std::string& v) {
    const auto xs = parse_list(key, v);
    if (xs.size() != 3)
        throw ParseError("key '" + key + "': expected 3 comma-separated values");
    return Vec3(xs[0], xs[1], xs[2]);
}

std::pair<double, double> parse_pair(const std::string& key, const std::string& v) {
    const auto xs = parse_list(key, v);
    if (xs.size() != 2)
        throw ParseError("key '" + key + "': expected 2 comma-separated values (lat,lon)");
    return {xs[0], xs[1]};
}

void require_positive(const std::string& key, double v) {
    if (!(v > 0.0))
        throw ValidationError("key '" + key + "': must be positive, got " +
                              std::to_string(v));
}

void require_positive_vec(const std::string& key, const Vec3& v) {
    if (!(v.x() > 0.0 && v.y() > 0.0 && v.z() > 0.0))
        throw ValidationError("key '" + key + "': all components must be positive");
}

void require_lat(const std::string& key, double v) {
    if (v < -90.0 || v > 90.0)
        throw ValidationError("key '" + key + "': latitude must lie in [-90, 90]");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(const Vec3& v) { return fmt(v.x()) + "," + fmt(v.y()) + "," + fmt(v.z()); }

std::string fmt(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + fmt(v[i]);
    return s;
}

// Returns false when the key does not belong to this subcommand.
bool apply_key(RigidBodyConfig& c, const std::string& k, const std::string& v) {
    if (k == "inertia") c.inertia = parse_vec3(k, v);
    else if (k == "M0") c.M0 = parse_vec3(k, v);
    else if (k == "dt") c.dt = parse_double(k, v);
    else if (k == "steps") c.steps = parse_int(k, v);
    else return false;
    return true;
}

bool apply_key(AdvectedConfig& c, const std::string& k, const std::string& v) {
    if (k == "inertia") c.inertia = parse_vec3(k, v);
    else if (k == "mu0") c.mu0 = parse_vec3(k, v);
    else if (k == "a0") c.a0 = parse_vec3(k, v);
    else if (k == "chi") c.chi = parse_vec3(k, v);
    else if (k == "dt") c.dt = parse_double(k, v);
    else if (k == "steps") c.steps = parse_int(k, v);
    else return false;
    return true;
}

bool apply_key(TrivialEpConfig& c, const std::string& k, const std::string& v) {
    if (k == "inertia") c.inertia = parse_vec3(k, v);
    else if (k == "eta0") c.eta0 = parse_vec3(k, v);
    else if (k == "A") std::tie(c.latA, c.lonA) = parse_pair(k, v);
    else if (k == "X0") c.X0 = parse_vec3(k, v);
    else if (k == "R") c.R = parse_double(k, v);
    else if (k == "alpha") c.alpha = parse_double(k, v);
    else if (k == "dt") c.dt = parse_double(k, v);
    else if (k == "steps") c.steps = parse_int(k, v);
    else return false;
    return true;
}

bool apply_key(FieldConfig& c, const std::string& k, const std::string& v) {
    if (k == "level") c.level = parse_int(k, v);
    else if (k == "inertia") c.inertia = parse_vec3(k, v);
    else if (k == "alpha") c.alpha = parse_double(k, v);
    else if (k == "eta0") c.eta0 = parse_vec3(k, v);
    else if (k == "omega") c.omega = parse_vec3(k, v);
    else if (k == "R") c.R = parse_double(k, v);
    else if (k == "dt") c.dt = parse_double(k, v);
    else if (k == "steps") c.steps = parse_int(k, v);
    else if (k == "snapshot_every") c.snapshot_every = parse_int(k, v);
    else return false;
    return true;
}

bool apply_key(OptimalTimeConfig& c, const std::string& k, const std::string& v) {
    if (k == "alpha") c.alpha = parse_double(k, v);
    else if (k == "lambda") c.lambda = parse_double(k, v);
    else if (k == "L") c.L = parse_double(k, v);
    else if (k == "A") {
        const auto [lat, lon] = parse_pair(k, v);
        c.latA = lat;
        c.lonA = lon;
    } else if (k == "B") {
        const auto [lat, lon] = parse_pair(k, v);
        c.latB = lat;
        c.lonB = lon;
    } else if (k == "R") c.R = parse_double(k, v);
    else if (k == "report_reconciled") c.report_reconciled = parse_bool(k, v);
    else return false;
    return true;
}

bool apply_key(SweepConfig& c, const std::string& k, const std::string& v) {
    if (k == "alpha") c.alphas = parse_list(k, v);
    else if (k == "lambda") c.lambdas = parse_list(k, v);
    else if (k == "L") c.Ls = parse_list(k, v);
    else return false;
    return true;
}

void check_grid(double dt, int steps) {
    require_positive("dt", dt);
    if (steps < 1)
        throw ValidationError("key 'steps': must be >= 1");
}

void validate_and_echo(const RigidBodyConfig& c, RunConfig& rc) {
    require_positive_vec("inertia", c.inertia);
    check_grid(c.dt, c.steps);
    rc.echo.emplace_back("inertia", fmt(c.inertia));
    rc.echo.emplace_back("M0", fmt(c.M0));
    rc.echo.emplace_back("dt", fmt(c.dt));
    rc.echo.emplace_back("steps", std::to_string(c.steps));
}

void validate_and_echo(const AdvectedConfig& c, RunConfig& rc) {
    require_positive_vec("inertia", c.inertia);
    check_grid(c.dt, c.steps);
    rc.echo.emplace_back("inertia", fmt(c.inertia));
    rc.echo.emplace_back("mu0", fmt(c.mu0));
    rc.echo.emplace_back("a0", fmt(c.a0));
    rc.echo.emplace_back("chi", fmt(c.chi));
    rc.echo.emplace_back("dt", fmt(c.dt));
    rc.echo.emplace_back("steps", std::to_string(c.steps));
}

void validate_and_echo(const TrivialEpConfig& c, RunConfig& rc) {
    require_positive_vec("inertia", c.inertia);
    require_lat("A", c.latA);
    require_positive("R", c.R);
    require_positive("alpha", c.alpha);
    check_grid(c.dt, c.steps);
    rc.echo.emplace_back("inertia", fmt(c.inertia));
    rc.echo.emplace_back("eta0", fmt(c.eta0));
    rc.echo.emplace_back("A", fmt(c.latA) + "," + fmt(c.lonA));
    rc.echo.emplace_back("X0", fmt(c.X0));
    rc.echo.emplace_back("R", fmt(c.R));
    rc.echo.emplace_back("alpha", fmt(c.alpha));
    rc.echo.emplace_back("dt", fmt(c.dt));
    rc.echo.emplace_back("steps", std::to_string(c.steps));
}

void validate_and_echo(const FieldConfig& c, RunConfig& rc) {
    if (c.level < 0 || c.level > 7)
        throw ValidationError("key 'level': must lie in [0, 7]");
    require_positive_vec("inertia", c.inertia);
    require_positive("alpha", c.alpha);
    require_positive("R", c.R);
    check_grid(c.dt, c.steps);
    if (c.snapshot_every < 0)
        throw ValidationError("key 'snapshot_every': must be >= 0");
    rc.echo.emplace_back("level", std::to_string(c.level));
    rc.echo.emplace_back("inertia", fmt(c.inertia));
    rc.echo.emplace_back("alpha", fmt(c.alpha));
    rc.echo.emplace_back("eta0", fmt(c.eta0));
    rc.echo.emplace_back("omega", fmt(c.omega));
    rc.echo.emplace_back("R", fmt(c.R));
    rc.echo.emplace_back("dt", fmt(c.dt));
    rc.echo.emplace_back("steps", std::to_string(c.steps));
    rc.echo.emplace_back("snapshot_every", std::to_string(c.snapshot_every));
}

void validate_and_echo(OptimalTimeConfig& c, RunConfig& rc) {
    require_positive("alpha", c.alpha);
    require_positive("lambda", c.lambda);
    require_positive("R", c.R);
    const bool any_endpoint = c.latA || c.lonA || c.latB || c.lonB;
    if (c.L && any_endpoint)
        throw ValidationError("give either L or endpoints A/B, not both");
    if (!c.L) {
        if (!(c.latA && c.lonA && c.latB && c.lonB))
            throw ValidationError("need either L or both endpoints A and B");
        require_lat("A", *c.latA);
        require_lat("B", *c.latB);
        const SpherePoint A = SpherePoint::from_latlon_deg(*c.latA, *c.lonA, c.R);
        const SpherePoint B = SpherePoint::from_latlon_deg(*c.latB, *c.lonB, c.R);
        c.L = geodesic_distance(A, B);
        rc.echo.emplace_back("A", fmt(*c.latA) + "," + fmt(*c.lonA));
        rc.echo.emplace_back("B", fmt(*c.latB) + "," + fmt(*c.lonB));
        rc.echo.emplace_back("R", fmt(c.R));
    }
    require_positive("L", *c.L);
    rc.echo.emplace_back("alpha", fmt(c.alpha));
    rc.echo.emplace_back("lambda", fmt(c.lambda));
    rc.echo.emplace_back("L", fmt(*c.L));
    rc.echo.emplace_back("report_reconciled", c.report_reconciled ? "true" : "false");
}

void validate_and_echo(const SweepConfig& c, RunConfig& rc) {
    for (const auto* [lst, name] :
         std::initializer_list<std::pair<const std::vector<double>*, const char*>>{
             {&c.alphas, "alpha"}, {&c.lambdas, "lambda"}, {&c.Ls, "L"}}) {
    }
    for (double a : c.alphas) require_positive("alpha", a);
    for (double l : c.lambdas) require_positive("lambda", l);
    for (double L : c.Ls) require_positive("L", L);
    rc.echo.emplace_back("alpha", fmt(c.alphas));
    rc.echo.emplace_back("lambda", fmt(c.lambdas));
    rc.echo.emplace_back("L", fmt(c.Ls));
}

} // namespace

RunConfig parse_config(Subcommand sub, const std::string& text,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
    RunConfig rc;
    rc.subcommand = sub;
    switch (sub) {
    case Subcommand::RigidBody: rc.params = RigidBodyConfig{}; break;
    case Subcommand::Advected: rc.params = AdvectedConfig{}; break;
    case Subcommand::TrivialEp: rc.params = TrivialEpConfig{}; break;
    case Subcommand::Field: rc.params = FieldConfig{}; break;
    case Subcommand::OptimalTime: rc.params = OptimalTimeConfig{}; break;
    case Subcommand::Sweep: rc.params = SweepConfig{}; break;
    }

    auto apply_sub_key = [&](const std::string& k, const std::string& v) {
        return std::visit([&](auto& cfg) { return apply_key(cfg, k, v); }, rc.params);
    };

    // -- file ---------------------------------------------------------------
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string section; // empty = global scope
    std::set<std::string> seen_global, seen_section;
    const std::string active = subcommand_name(sub);

    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ParseError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            if (!subcommand_from_name(section))
                throw ParseError("line " + std::to_string(lineno) + ": unknown section '" +
                                 section + "'");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty key");

        if (section.empty()) {
            if (!seen_global.insert(key).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key +
                                 "'");
            if (key == "out")
                rc.out_dir = value;
            else if (key == "seed")
                rc.seed = static_cast<std::uint64_t>(parse_double(key, value));
            else
                throw UnknownKey("global key '" + key + "' is not recognized (did you mean to "
                                 "put it in a [" + active + "] section?)");
        } else if (section == active) {
            if (!seen_section.insert(key).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key +
                                 "'");
            if (!apply_sub_key(key, value))
                throw UnknownKey("key '" + key + "' is not recognized by subcommand '" +
                                 active + "'");
        }
        // sections for other subcommands are left untouched
    }

    // -- command-line overrides ----------------------------------------------
    for (const auto& [key, value] : overrides) {
        if (key == "out")
            rc.out_dir = value;
        else if (key == "seed")
            rc.seed = static_cast<std::uint64_t>(parse_double(key, value));
        else if (!apply_sub_key(key, value))
            throw UnknownKey("key '" + key + "' is not recognized by subcommand '" + active +
                             "'");
    }

    std::visit([&](auto& cfg) { validate_and_echo(cfg, rc); }, rc.params);
    rc.echo.emplace_back("out", rc.out_dir);
    rc.echo.emplace_back("seed", std::to_string(rc.seed));
    return rc;
}

std::string describe_keys(Subcommand sub) {
    switch (sub) {
    case Subcommand::RigidBody:
        return "  inertia = a,b,c   principal moments (default 1,2,3)\n"
               "  M0      = x,y,z   initial body momentum (default 0,1,1)\n"
               "  dt      = h       step size in minutes (default 1e-3)\n"
               "  steps   = n       number of steps (default 10000)\n";
    case Subcommand::Advected:
        return "  inertia = a,b,c   principal moments (default 1,2,3)\n"
               "  mu0     = x,y,z   initial momentum (default 0,1,1)\n"
               "  a0      = x,y,z   initial advected vector (default 0,0,1)\n"
               "  chi     = x,y,z   constant dl/da (default 0,0,0)\n"
               "  dt, steps         as for rigid-body\n";
    case Subcommand::TrivialEp:
        return "  inertia = a,b,c   principal moments (default 1,2,3)\n"
               "  eta0    = x,y,z   initial internal angular velocity (default 0,0,0)\n"
               "  A       = lat,lon start point in degrees (default 0,0)\n"
               "  X0      = x,y,z   initial velocity, projected to the tangent plane\n"
               "  R       = r       sphere radius in um (default 100)\n"
               "  alpha   = a       locomotion weight (default 1e-16)\n"
               "  dt, steps         as for rigid-body\n";
    case Subcommand::Field:
        return "  level   = s       icosphere subdivisions, 0..7 (default 3)\n"
               "  inertia = a,b,c   principal moments (default 1,2,3)\n"
               "  alpha   = a       locomotion weight (default 1)\n"
               "  eta0    = x,y,z   uniform internal velocity (default 0,0,0)\n"
               "  omega   = x,y,z   rigid-rotation velocity field X = omega x x\n"
               "  R       = r       sphere radius (default 1)\n"
               "  dt      = h       step size (default 1e-3)\n"
               "  steps   = n       number of steps (default 1000)\n"
               "  snapshot_every = k  write a field snapshot every k steps (0: final only)\n";
    case Subcommand::OptimalTime:
        return "  alpha   = a       locomotion weight (default 1e-16)\n"
               "  lambda  = l       time penalty (default 1e-17)\n"
               "  L       = d       arc length in um, or give endpoints:\n"
               "  A       = lat,lon\n"
               "  B       = lat,lon\n"
               "  R       = r       sphere radius in um (default 100)\n"
               "  report_reconciled = true|false (default true)\n";
    case Subcommand::Sweep:
        return "  alpha   = a1,a2,...\n"
               "  lambda  = l1,l2,...\n"
               "  L       = d1,d2,...\n";
    }
    return "";
}

} // namespace gmech::cli
