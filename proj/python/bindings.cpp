#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sokoban/bench.hpp"
#include "sokoban/deadlock.hpp"
#include "sokoban/heuristic.hpp"
#include "sokoban/replay.hpp"
#include "sokoban/search.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace sokoban;

namespace {

BoxSet to_boxes(const std::vector<Square>& squares) { return BoxSet(squares); }

std::vector<Square> from_boxes(const BoxSet& boxes) { return boxes.squares(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Push-based Sokoban solver: levels, search strategies, deadlock pruning, replay and benchmarks.";

    // The module keeps the type alive; a plain handle avoids a static destructor.
    static py::handle error_type = py::exception<SokobanError>(m, "SokobanError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SokobanError& e) {
            py::object instance = error_type(e.what());
            instance.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    py::enum_<Direction>(m, "Direction")
        .value("Up", Direction::Up)
        .value("Right", Direction::Right)
        .value("Down", Direction::Down)
        .value("Left", Direction::Left);

    py::class_<Square>(m, "Square")
        .def(py::init<int, int>(), py::arg("row"), py::arg("col"))
        .def(py::init([](py::tuple t) {
            if (t.size() != 2) throw py::value_error("Square needs (row, col)");
            return Square{t[0].cast<int>(), t[1].cast<int>()};
        }))
        .def_readwrite("row", &Square::row)
        .def_readwrite("col", &Square::col)
        .def("__eq__", [](const Square& a, const Square& b) { return a == b; })
        .def("__lt__", [](const Square& a, const Square& b) { return a < b; })
        .def("__hash__", [](const Square& s) { return py::hash(py::make_tuple(s.row, s.col)); })
        .def("__iter__", [](const Square& s) { return py::iter(py::make_tuple(s.row, s.col)); })
        .def("__repr__", [](const Square& s) { return to_string(s); });
    py::implicitly_convertible<py::tuple, Square>();

    py::class_<Grid>(m, "Grid")
        .def_property_readonly("width", &Grid::width)
        .def_property_readonly("height", &Grid::height)
        .def_property_readonly("walls", &Grid::walls)
        .def_property_readonly("goals", &Grid::goals)
        .def_property_readonly("initial_boxes", [](const Grid& g) { return from_boxes(g.initial_boxes()); })
        .def_property_readonly("initial_pusher", &Grid::initial_pusher)
        .def("__eq__", [](const Grid& a, const Grid& b) { return a == b; });

    m.def("parse_level", &parse_level, py::arg("text"));
    m.def("render",
          [](const Grid& g, const std::vector<Square>& boxes, Square pusher) {
              return render(g, to_boxes(boxes), pusher);
          },
          py::arg("grid"), py::arg("boxes"), py::arg("pusher"));
    m.def("tile_blocks",
          [](const Grid& g, const std::vector<Square>& boxes, Square s) { return tile_blocks(g, to_boxes(boxes), s); },
          py::arg("grid"), py::arg("boxes"), py::arg("square"));

    py::class_<Step>(m, "Step")
        .def(py::init([](Square from, Direction d, std::size_t id) { return Step{id, from, d}; }),
             py::arg("box_from"), py::arg("dir"), py::arg("id") = 0)
        .def_readonly("id", &Step::id)
        .def_readonly("box_from", &Step::box_from)
        .def_readonly("dir", &Step::dir)
        .def("__repr__", [](const Step& s) {
            return "Step(" + std::to_string(s.id) + ", " + to_string(s.box_from) + ", " +
                   std::string(1, push_letter(s.dir)) + ")";
        });

    py::class_<State>(m, "State")
        .def_property_readonly("boxes", [](const State& s) { return from_boxes(s.boxes); })
        .def_readonly("pusher_norm", &State::pusher_norm)
        .def("__eq__", [](const State& a, const State& b) { return a == b; });

    m.def("initial_state", &initial_state);
    m.def("reachable_region",
          [](const Grid& g, const std::vector<Square>& boxes, Square from) {
              return reachable_region(g, to_boxes(boxes), from);
          },
          py::arg("grid"), py::arg("boxes"), py::arg("start"));
    m.def("legal_pushes", &legal_pushes);
    m.def("apply_push", &apply_push);
    m.def("is_goal_state", &is_goal_state);

    m.def("dead_squares", [](const Grid& g) { return dead_squares(g).dead(); },
          "Dead floor squares in row-major order.");
    m.def("is_freeze_deadlock", &is_freeze_deadlock, py::arg("grid"), py::arg("state"), py::arg("just_pushed"));

    py::enum_<HeuristicKind>(m, "HeuristicKind")
        .value("PrePaired", HeuristicKind::PrePaired)
        .value("NearestGoal", HeuristicKind::NearestGoal)
        .value("Zero", HeuristicKind::Zero);
    m.def("h_prepaired", &h_prepaired);
    m.def("h_nearest_goal", &h_nearest_goal);

    py::enum_<StrategyKind>(m, "StrategyKind")
        .value("DFS", StrategyKind::DFS)
        .value("BFS", StrategyKind::BFS)
        .value("DF_ASTAR", StrategyKind::DF_ASTAR)
        .value("BF_ASTAR", StrategyKind::BF_ASTAR)
        .value("IDASTAR", StrategyKind::IDASTAR);

    py::class_<StrategyConfig>(m, "StrategyConfig")
        .def(py::init([](StrategyKind kind, HeuristicKind heuristic, bool pruning,
                         std::optional<std::uint64_t> node_limit, std::optional<double> time_limit) {
                 StrategyConfig c;
                 c.kind = kind;
                 c.heuristic = heuristic;
                 c.pruning = pruning;
                 c.node_limit = node_limit;
                 c.time_limit_seconds = time_limit;
                 return c;
             }),
             py::arg("kind"), py::arg("heuristic") = HeuristicKind::PrePaired, py::arg("pruning") = true,
             py::arg("node_limit") = StrategyConfig::kDefaultNodeLimit,
             py::arg("time_limit") = StrategyConfig::kDefaultTimeLimitSeconds)
        .def_readwrite("kind", &StrategyConfig::kind)
        .def_readwrite("heuristic", &StrategyConfig::heuristic)
        .def_readwrite("pruning", &StrategyConfig::pruning)
        .def_readwrite("node_limit", &StrategyConfig::node_limit)
        .def_readwrite("time_limit", &StrategyConfig::time_limit_seconds)
        .def("label", &StrategyConfig::label);

    py::enum_<Outcome>(m, "Outcome")
        .value("Solved", Outcome::Solved)
        .value("NoSolution", Outcome::NoSolution)
        .value("LimitExceeded", Outcome::LimitExceeded);

    py::class_<Metrics>(m, "Metrics")
        .def_readonly("outcome", &Metrics::outcome)
        .def_readonly("solution_steps", &Metrics::solution_steps)
        .def_readonly("elapsed_seconds", &Metrics::elapsed_seconds)
        .def_readonly("nodes_expanded", &Metrics::nodes_expanded)
        .def_readonly("frontier_peak", &Metrics::frontier_peak)
        .def_readonly("reopened", &Metrics::reopened);

    py::class_<Solution>(m, "Solution")
        .def(py::init([](const Grid& g, std::vector<Step> steps) { return Solution{g, std::move(steps)}; }))
        .def_readonly("grid", &Solution::grid)
        .def_readonly("steps", &Solution::steps);

    m.def("solve",
          [](const Grid& g, const StrategyConfig& c) {
              py::gil_scoped_release release;
              auto r = solve(g, c);
              return std::make_pair(std::move(r.solution), r.metrics);
          },
          py::arg("grid"), py::arg("config"), "Returns (Solution or None, Metrics).");

    m.def("validate_solution", [](const Grid& g, const Solution& s) {
        auto v = validate_solution(g, s);
        return py::make_tuple(v.valid, v.failed_step, v.detail);
    });
    m.def("pushes_to_moves", &pushes_to_moves);
    m.def("animate", &animate);
    m.def("animate_moves", &animate_moves);

    py::class_<BenchRecord>(m, "BenchRecord")
        .def_readonly("level_id", &BenchRecord::level_id)
        .def_readonly("strategy", &BenchRecord::strategy)
        .def_readonly("metrics", &BenchRecord::metrics);

    m.def("run_matrix",
          [](const std::vector<std::pair<std::string, Grid>>& levels, const std::vector<StrategyConfig>& configs,
             unsigned workers) {
              std::vector<NamedLevel> named;
              for (const auto& [id, g] : levels) named.push_back({id, g});
              py::gil_scoped_release release;
              return run_matrix(named, configs, workers);
          },
          py::arg("levels"), py::arg("strategies"), py::arg("workers") = 1);
    m.def("format_table", [](const std::vector<BenchRecord>& records, const std::string& style) {
        if (style != "markdown" && style != "csv") throw py::value_error("style must be markdown or csv");
        return format_table(records, style == "csv" ? TableStyle::Csv : TableStyle::Markdown);
    }, py::arg("records"), py::arg("style") = "markdown");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
