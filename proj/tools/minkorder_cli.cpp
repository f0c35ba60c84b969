// Command-line front end. All computation goes through the C API in
// minkorder.h; this file only handles argument parsing, file IO and the
// optional text rendering of the JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "minkorder.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::string input_path;
    bool no_ball = false;
    long samples = 10000;
    std::uint64_t seed = 1;
    int cap = 8;
    std::string format = "json";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int status_to_exit(mo_status s) {
    switch (s) {
        case MO_OK: return kExitOk;
        case MO_ERR_INPUT: return kExitInput;
        case MO_ERR_PRECONDITION: return kExitPrecondition;
        case MO_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

using EventsPtr = std::unique_ptr<mo_events, decltype(&mo_events_free)>;
using PointsPtr = std::unique_ptr<mo_points, decltype(&mo_points_free)>;

EventsPtr parse_events(const std::string& path, mo_status& status) {
    mo_events* raw = nullptr;
    status = mo_events_parse(read_file(path).c_str(), &raw);
    return EventsPtr(raw, &mo_events_free);
}

PointsPtr parse_points(const std::string& path, mo_status& status) {
    mo_points* raw = nullptr;
    status = mo_points_parse(read_file(path).c_str(), &raw);
    return PointsPtr(raw, &mo_points_free);
}

// Secondary human-readable rendering; the JSON is the source of truth.
void render_text(const nlohmann::json& j, std::ostream& out, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (val.is_primitive()) {
                out << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                    << "\n";
            } else {
                out << pad << key << ":\n";
                render_text(val, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& val : j) {
            if (val.is_primitive()) {
                out << pad << "- "
                    << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
            } else if (val.is_array()) {
                out << pad << "- " << val.dump() << "\n";
            } else {
                out << pad << "-\n";
                render_text(val, out, indent + 2);
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

int finish(mo_status status, char* payload, const Options& opt) {
    if (status != MO_OK) {
        std::cerr << "error: " << mo_last_error() << "\n";
        return status_to_exit(status);
    }
    if (opt.format == "text") {
        render_text(nlohmann::json::parse(payload), std::cout);
    } else {
        std::cout << payload;
    }
    mo_string_free(payload);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of event orderings across reference frames"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    struct Command {
        CLI::App* sub;
        std::function<mo_status(const mo_events*, char**)> run;
    };
    std::vector<Command> event_cmds;

    auto add_event_cmd = [&](const std::string& name, const std::string& help,
                             std::function<mo_status(const mo_events*, char**)> run) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", opt.input_path, "Event file (JSON)")->required();
        event_cmds.push_back({sub, std::move(run)});
        return sub;
    };

    add_event_cmd("classify", "Pairwise separation matrix",
                  [](const mo_events* e, char** o) { return mo_classify(e, o); });
    add_event_cmd("graph", "Separation graph and causal relations",
                  [](const mo_events* e, char** o) { return mo_graph(e, o); });
    add_event_cmd("poset", "Intersection poset of the event arrangement",
                  [](const mo_events* e, char** o) { return mo_poset(e, o); });
    add_event_cmd("count", "Number of realizable orders",
                  [&opt](const mo_events* e, char** o) {
                      return mo_count(e, opt.no_ball ? 0 : 1, opt.cap, o);
                  });
    add_event_cmd("enumerate", "All realizable orders with witness velocities",
                  [&opt](const mo_events* e, char** o) {
                      return mo_enumerate(e, opt.no_ball ? 0 : 1, opt.cap, o);
                  });
    add_event_cmd("bounds", "Stirling and chromatic order bounds",
                  [](const mo_events* e, char** o) { return mo_bounds(e, o); });
    add_event_cmd("generic", "Genericity test with certificate",
                  [](const mo_events* e, char** o) { return mo_generic(e, o); });
    add_event_cmd("charpoly", "Characteristic polynomial and region count",
                  [](const mo_events* e, char** o) { return mo_charpoly(e, o); });
    add_event_cmd("chromatic", "Chromatic polynomial of the separation graph",
                  [](const mo_events* e, char** o) { return mo_chromatic(e, o); });
    add_event_cmd("sweep", "n = 1 velocity sweep (critical velocities, Lambda, word)",
                  [](const mo_events* e, char** o) { return mo_sweep(e, o); });
    add_event_cmd("mc", "Monte Carlo sampling of observer velocities",
                  [&opt](const mo_events* e, char** o) {
                      return mo_monte_carlo(e, opt.samples, opt.seed, o);
                  });

    for (auto& c : event_cmds) {
        c.sub->add_flag("--no-ball", opt.no_ball, "Drop the |v| < 1 restriction");
        c.sub->add_option("--samples", opt.samples, "Monte Carlo sample count");
        c.sub->add_option("--seed", opt.seed, "Monte Carlo seed");
        c.sub->add_option("--cap", opt.cap, "Permutation cap (k limit)");
    }

    CLI::App* ranking = app.add_subcommand(
        "ranking", "Fixed-time arrangement governing distinct Lambda sequences");
    ranking->add_option("input", opt.input_path, "Times file or event file (JSON)")->required();

    CLI::App* classical =
        app.add_subcommand("classical", "Observation orders of simultaneous flashes");
    classical->add_option("input", opt.input_path, "Point file (JSON)")->required();
    classical->add_option("--cap", opt.cap, "Permutation cap (k limit)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        for (const auto& c : event_cmds) {
            if (!c.sub->parsed()) continue;
            mo_status status;
            EventsPtr events = parse_events(opt.input_path, status);
            if (status != MO_OK) {
                std::cerr << "error: " << mo_last_error() << "\n";
                return status_to_exit(status);
            }
            char* payload = nullptr;
            mo_status run_status = c.run(events.get(), &payload);
            return finish(run_status, payload, opt);
        }
        if (ranking->parsed()) {
            char* payload = nullptr;
            mo_status run_status = mo_ranking(read_file(opt.input_path).c_str(), &payload);
            return finish(run_status, payload, opt);
        }
        if (classical->parsed()) {
            mo_status status;
            PointsPtr points = parse_points(opt.input_path, status);
            if (status != MO_OK) {
                std::cerr << "error: " << mo_last_error() << "\n";
                return status_to_exit(status);
            }
            char* payload = nullptr;
            mo_status run_status = mo_classical(points.get(), opt.cap, &payload);
            return finish(run_status, payload, opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput; // file-IO problems are input errors
    }
    return kExitInput;
}
