//! Embedded regression corpus and its expected values.
//!
//! Every expected value records where it comes from: `Published` values are
//! read off the worked examples this library reproduces, `Derived` ones are
//! computed independently (closed formulas, the path oracle, enumeration).

use serde::Serialize;

use crate::algebra::Algebra;
use crate::config::{Configuration, ValidateOptions};
use crate::exec::Execution;
use crate::io::{load_configuration, matrix_to_csv, parse_graph};
use crate::modules::projective_structure;
use crate::oracle::brute_force_dimension;
use crate::quiver::Quiver;
use crate::rad3::{self, CanonicalAlgebra, Graph};
use crate::structure::{check_symmetric, loewy_length, radical_series};

pub const EXAMPLE1_O1: &str = include_str!("../fixtures/example1_o1.json");
pub const EXAMPLE1_O2: &str = include_str!("../fixtures/example1_o2.json");
pub const EXAMPLE2: &str = include_str!("../fixtures/example2.json");
pub const SECTION4_CONFIG: &str = include_str!("../fixtures/section4_config.json");
pub const SECTION4_GRAPH: &str = include_str!("../fixtures/section4_graph.json");
pub const TWO_LOOPS: &str = include_str!("../fixtures/two_loops.json");
pub const SELF_FOLDED_LOOP: &str = include_str!("../fixtures/self_folded_loop.json");
pub const CUBIC: &str = include_str!("../fixtures/cubic.json");
pub const DUAL_NUMBERS: &str = include_str!("../fixtures/dual_numbers.json");
pub const DISJOINT_UNION: &str = include_str!("../fixtures/disjoint_union.json");
pub const FOUR_CYCLE_A: &str = include_str!("../fixtures/four_cycle_a.json");
pub const FOUR_CYCLE_B: &str = include_str!("../fixtures/four_cycle_b.json");
pub const SINGLE_EDGE: &str = include_str!("../fixtures/single_edge.json");
pub const SINGLE_LOOP: &str = include_str!("../fixtures/single_loop.json");

fn config(text: &str, allow_degenerate: bool) -> Configuration {
    load_configuration(text, ValidateOptions { allow_degenerate }).expect("fixture is valid")
}

fn graph(text: &str) -> Graph {
    parse_graph(text).expect("fixture is valid")
}

/// Example 1 with orientation o1, unreduced (vertices 6, 7, 8 truncated).
pub fn example1() -> Configuration {
    config(EXAMPLE1_O1, false)
}

pub fn example1_o2() -> Configuration {
    config(EXAMPLE1_O2, false)
}

/// The configuration Δ with a threefold vertex in V1, unreduced.
pub fn example2() -> Configuration {
    config(EXAMPLE2, false)
}

/// Ten vertices, six polygons, `μ(6) = μ(8) = 2`.
pub fn section4_configuration() -> Configuration {
    config(SECTION4_CONFIG, false)
}

/// Six-vertex graph with leaves 1 and 6.
pub fn section4_graph() -> Graph {
    graph(SECTION4_GRAPH)
}

/// 2-gon `{α, β}` with `μ ≡ 2`: `K[x,y]/(xy, x² - y²)`.
pub fn two_loops() -> Configuration {
    config(TWO_LOOPS, false)
}

/// Self-folded 2-gon `{α, α}`, `μ = 1`: `K[x,y]/(x², y²)`.
pub fn self_folded_loop() -> Configuration {
    config(SELF_FOLDED_LOOP, false)
}

/// 2-gon `{α, β}` with `α` truncated and `μ(β) = 2`: `K[x]/(x³)`.
pub fn truncated_polynomial_cube() -> Configuration {
    config(CUBIC, false)
}

/// 2-gon with both vertices truncated; needs the C3 override.
pub fn dual_numbers() -> Configuration {
    config(DUAL_NUMBERS, true)
}

/// Two components: `{1,2}, {2,3}` and `{4,5}`.
pub fn disjoint_union_example() -> Configuration {
    config(DISJOINT_UNION, false)
}

pub fn four_cycle_a() -> Graph {
    graph(FOUR_CYCLE_A)
}

pub fn four_cycle_b() -> Graph {
    graph(FOUR_CYCLE_B)
}

pub fn single_edge() -> Graph {
    graph(SINGLE_EDGE)
}

pub fn single_loop() -> Graph {
    graph(SINGLE_LOOP)
}

/// Every configuration fixture by name, including `Γ(G)` for each graph
/// fixture.
pub fn all_configurations() -> Vec<(String, Configuration)> {
    let mut out: Vec<(String, Configuration)> = vec![
        ("example1-o1".into(), example1()),
        ("example1-o2".into(), example1_o2()),
        ("example2".into(), example2()),
        ("section4-config".into(), section4_configuration()),
        ("two-loops".into(), two_loops()),
        ("self-folded-loop".into(), self_folded_loop()),
        ("cubic".into(), truncated_polynomial_cube()),
        ("dual-numbers".into(), dual_numbers()),
        ("disjoint-union".into(), disjoint_union_example()),
    ];
    for (name, g) in all_graphs() {
        let cfg = rad3::config_from_graph(&g).expect("fixture graph is valid");
        out.push((format!("gamma({name})"), cfg));
    }
    out
}

pub fn all_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("section4-graph", section4_graph()),
        ("four-cycle-a", four_cycle_a()),
        ("four-cycle-b", four_cycle_b()),
        ("single-edge", single_edge()),
        ("single-loop", single_loop()),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Published,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub key: &'static str,
    pub value: String,
    pub provenance: Provenance,
    pub note: &'static str,
}

fn expect(
    key: &'static str,
    value: impl ToString,
    provenance: Provenance,
    note: &'static str,
) -> Expectation {
    Expectation {
        key,
        value: value.to_string(),
        provenance,
        note,
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Source {
    Config {
        text: &'static str,
        allow_degenerate: bool,
    },
    Graph(&'static str),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub source: Source,
    pub expectations: Vec<Expectation>,
}

pub fn corpus() -> Vec<Fixture> {
    use Provenance::*;
    let cfg = |text| Source::Config {
        text,
        allow_degenerate: false,
    };
    vec![
        Fixture {
            name: "example1-o1",
            source: cfg(EXAMPLE1_O1),
            expectations: vec![
                expect("quiver_vertices", 5, Published, "quiver figure"),
                expect("arrows", 12, Published, "quiver figure"),
                expect("relation", "a1a2a3 - b1b2", Published, "type one list"),
                expect("relation", "d3d4d1d2 - ee", Published, "type one list"),
                expect("relation", "eee", Published, "type two list"),
                expect("relation", "c1c2c1c2c1c2c1", Published, "type two list"),
                expect("dimension", 41, Derived, "2|Q0| + sum |C|(mu|C| - 1)"),
                expect("oracle_dimension", 41, Derived, "path oracle"),
                expect(
                    "nilpotency_bound",
                    7,
                    Derived,
                    "max length of C^mu plus one",
                ),
                expect("loewy_length", 7, Derived, "1 + max val*mu"),
                expect("r:V1", 4, Published, "four chains at V1"),
                expect("r:V3", 2, Published, "vertex 5 is not truncated"),
                expect(
                    "uniserial:V4",
                    true,
                    Published,
                    "2-gon with truncated vertex 6",
                ),
                expect(
                    "symmetric",
                    true,
                    Published,
                    "finite dimensional symmetric algebra",
                ),
            ],
        },
        Fixture {
            name: "example1-o2",
            source: cfg(EXAMPLE1_O2),
            expectations: vec![
                expect("quiver_vertices", 5, Published, "same polygons"),
                expect("arrows", 12, Derived, "sum of valences"),
                expect(
                    "quiver_isomorphic_to_o1",
                    false,
                    Published,
                    "the quivers are not isomorphic",
                ),
                expect("dimension", 41, Derived, "dimension formula"),
                expect("oracle_dimension", 41, Derived, "path oracle"),
                expect("symmetric", true, Published, "symmetric algebra"),
            ],
        },
        Fixture {
            name: "example2",
            source: cfg(EXAMPLE2),
            expectations: vec![
                expect("quiver_vertices", 3, Published, "quiver figure"),
                expect("arrows", 10, Published, "quiver figure"),
                expect(
                    "cycles_at:V1:1",
                    3,
                    Published,
                    "three special 1-cycles at v1",
                ),
                expect("relation", "b2b1 - c2c1", Published, "type one list"),
                expect("dimension", 40, Derived, "dimension formula"),
                expect("oracle_dimension", 40, Derived, "path oracle"),
                expect("r:V1", 4, Derived, "occurrences in V1"),
                expect("uniserial_count", 0, Published, "no uniserial projectives"),
                expect("symmetric", true, Published, "symmetric algebra"),
            ],
        },
        Fixture {
            name: "section4-config",
            source: cfg(SECTION4_CONFIG),
            expectations: vec![
                expect(
                    "graph",
                    "1-2 1-3 1-4 2-3 2-4 4-4 4-5 4-6 5-5",
                    Published,
                    "loops a6 and a8, leaf 6",
                ),
                expect("rad_cubed_zero", true, Derived, "val*mu = 2 everywhere"),
                expect("loewy_length", 3, Derived, "1 + max val*mu"),
                expect("symmetric", true, Derived, "symmetric algebra"),
            ],
        },
        Fixture {
            name: "two-loops",
            source: cfg(TWO_LOOPS),
            expectations: vec![
                expect("dimension", 4, Published, "K[x,y]/(xy, x^2 - y^2)"),
                expect("oracle_dimension", 4, Derived, "path oracle"),
                expect("radical_series", "4,3,1,0", Derived, "radical cube zero"),
                expect("matrix", "2", Published, "matrix (2)"),
            ],
        },
        Fixture {
            name: "self-folded-loop",
            source: cfg(SELF_FOLDED_LOOP),
            expectations: vec![
                expect("dimension", 4, Published, "K[x,y]/(x^2, y^2)"),
                expect("oracle_dimension", 4, Derived, "path oracle"),
                expect("radical_series", "4,3,1,0", Derived, "basis 1, x, y, xy"),
                expect("quiver_matrix", "2", Published, "matrix (2)"),
                expect("ordered_class", false, Published, "self-folded"),
            ],
        },
        Fixture {
            name: "cubic",
            source: cfg(CUBIC),
            expectations: vec![
                expect("dimension", 3, Published, "K[x]/(x^3)"),
                expect("oracle_dimension", 3, Derived, "path oracle"),
                expect("cartan", "3", Derived, "basis e, x, x^2"),
                expect("symmetric", true, Derived, "local symmetric algebra"),
            ],
        },
        Fixture {
            name: "dual-numbers",
            source: Source::Config {
                text: DUAL_NUMBERS,
                allow_degenerate: true,
            },
            expectations: vec![
                expect("dimension", 2, Published, "K[x]/(x^2)"),
                expect("oracle_dimension", 2, Derived, "path oracle"),
                expect("radical_series", "2,1,0", Derived, "rad^2 = 0"),
            ],
        },
        Fixture {
            name: "disjoint-union",
            source: cfg(DISJOINT_UNION),
            expectations: vec![
                expect(
                    "indecomposable",
                    false,
                    Published,
                    "product of the component algebras",
                ),
                expect("components", 2, Derived, "union-find on polygons"),
                expect("dimension", 11, Derived, "dimension formula"),
                expect("oracle_dimension", 11, Derived, "path oracle"),
            ],
        },
        Fixture {
            name: "section4-graph",
            source: Source::Graph(SECTION4_GRAPH),
            expectations: vec![
                expect(
                    "truncated",
                    2,
                    Published,
                    "two truncated vertices in the configuration",
                ),
                expect("iso", true, Published, "isomorphism theorem"),
            ],
        },
        Fixture {
            name: "four-cycle-a",
            source: Source::Graph(FOUR_CYCLE_A),
            expectations: vec![
                expect(
                    "matrix",
                    "0,1,0,1;1,0,1,0;0,1,0,1;1,0,1,0",
                    Published,
                    "first displayed matrix",
                ),
                expect("iso", true, Derived, "structure constants"),
                expect("dimension", 16, Derived, "both dimension counts"),
            ],
        },
        Fixture {
            name: "four-cycle-b",
            source: Source::Graph(FOUR_CYCLE_B),
            expectations: vec![
                expect(
                    "matrix",
                    "0,0,1,1;0,0,1,1;1,1,0,0;1,1,0,0",
                    Published,
                    "second displayed matrix",
                ),
                expect("iso", true, Derived, "structure constants"),
            ],
        },
        Fixture {
            name: "single-edge",
            source: Source::Graph(SINGLE_EDGE),
            expectations: vec![
                expect(
                    "dimension",
                    6,
                    Derived,
                    "2 idempotents, 2 arrows, 2 socle elements",
                ),
                expect("iso", true, Derived, "structure constants"),
            ],
        },
        Fixture {
            name: "single-loop",
            source: Source::Graph(SINGLE_LOOP),
            expectations: vec![
                expect("dimension", 3, Published, "both are K[x]/(x^3)"),
                expect("matrix", "1", Derived, "one loop"),
                expect("iso", true, Published, "both are K[x]/(x^3)"),
            ],
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub provenance: Provenance,
    pub note: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub checks: Vec<CheckResult>,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn matrix_key(rows: &[Vec<u32>]) -> String {
    matrix_to_csv(&rad3::SymMatrix {
        rows: rows.to_vec(),
    })
    .trim_end()
    .replace('\n', ";")
}

fn series_key(s: &[usize]) -> String {
    s.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn evaluate_config(cfg: &Configuration, key: &str, expected: &str) -> String {
    let alg = Algebra::new(cfg);
    let q = alg.quiver();
    match key {
        "quiver_vertices" => q.vertex_count().to_string(),
        "arrows" => q.arrow_count().to_string(),
        "relation" => {
            let found = alg.relations().iter().any(|r| r.display(q) == expected);
            if found {
                expected.to_string()
            } else {
                "absent".into()
            }
        }
        "dimension" => {
            let d = alg.dimension();
            if d.formula == d.basis_count {
                d.formula.to_string()
            } else {
                format!("formula {} vs basis {}", d.formula, d.basis_count)
            }
        }
        "oracle_dimension" => match brute_force_dimension(cfg) {
            Ok(r) if r.top_degree_vanishes => r.dimension.to_string(),
            Ok(r) => format!("{} (top degree does not vanish)", r.dimension),
            Err(e) => e.to_string(),
        },
        "nilpotency_bound" => alg.nilpotency_bound().to_string(),
        "loewy_length" => loewy_length(&radical_series(&alg)).to_string(),
        "radical_series" => series_key(&radical_series(&alg)),
        "symmetric" => check_symmetric(&alg, Execution::default())
            .passed()
            .to_string(),
        "uniserial_count" => crate::modules::all_projectives(&alg)
            .iter()
            .filter(|p| p.uniserial)
            .count()
            .to_string(),
        "quiver_isomorphic_to_o1" => {
            let other = Quiver::build(&example1().reduce());
            crate::quiver::find_isomorphism(q, &other)
                .is_some()
                .to_string()
        }
        "graph" => match rad3::graph_from_config(alg.config()) {
            Ok(g) => g
                .canonical()
                .iter()
                .map(|(i, j)| format!("{i}-{j}"))
                .collect::<Vec<_>>()
                .join(" "),
            Err(e) => e.to_string(),
        },
        "rad_cubed_zero" => rad3::is_rad_cubed_zero(alg.config()).to_string(),
        "matrix" => match rad3::graph_from_config(alg.config()) {
            Ok(g) => matrix_key(&rad3::matrix_from_graph(&g).rows),
            Err(e) => e.to_string(),
        },
        "quiver_matrix" => matrix_key(&rad3::matrix_from_quiver(q).rows),
        "ordered_class" => alg.config().check_ordered_class().is_ok().to_string(),
        "cartan" => matrix_key(
            &alg.cartan_matrix()
                .iter()
                .map(|r| r.iter().map(|&x| x as u32).collect())
                .collect::<Vec<_>>(),
        ),
        "indecomposable" => alg.is_indecomposable().to_string(),
        "components" => cfg.component_partition().len().to_string(),
        _ => {
            if let Some(rest) = key.strip_prefix("r:") {
                projective_structure(&alg, rest).map_or_else(|e| e.to_string(), |p| p.r.to_string())
            } else if let Some(rest) = key.strip_prefix("uniserial:") {
                projective_structure(&alg, rest)
                    .map_or_else(|e| e.to_string(), |p| p.uniserial.to_string())
            } else if let Some(rest) = key.strip_prefix("cycles_at:") {
                let (poly, vertex) = rest.split_once(':').unwrap_or((rest, ""));
                let v = cfg.polygon_id(poly).ok();
                let count = v.map_or(0, |v| {
                    q.cycles_at(v)
                        .iter()
                        .filter(|c| cfg.vertex_name(c.vertex) == vertex)
                        .count()
                });
                count.to_string()
            } else {
                format!("unknown key {key}")
            }
        }
    }
}

fn evaluate_graph(g: &Graph, key: &str) -> String {
    match key {
        "matrix" => matrix_key(&rad3::matrix_from_graph(g).rows),
        "truncated" => {
            let cfg = rad3::config_from_graph(g).expect("fixture graph is valid");
            (0..cfg.vertex_count())
                .filter(|&v| cfg.truncated(v))
                .count()
                .to_string()
        }
        "iso" => rad3::check_graph(g).map_or_else(|e| e.to_string(), |c| c.passed().to_string()),
        "dimension" => {
            let lambda = Algebra::new(&rad3::config_from_graph(g).expect("fixture graph is valid"));
            let canon = CanonicalAlgebra::new(g).expect("fixture graph is valid");
            let (a, b) = (lambda.basis().len(), canon.basis().len());
            if a == b {
                a.to_string()
            } else {
                format!("{a} vs {b}")
            }
        }
        _ => format!("unknown key {key}"),
    }
}

pub fn run(f: &Fixture) -> FixtureResult {
    let checks = f
        .expectations
        .iter()
        .map(|e| {
            let actual = match f.source {
                Source::Config {
                    text,
                    allow_degenerate,
                } => evaluate_config(&config(text, allow_degenerate), e.key, &e.value),
                Source::Graph(text) => evaluate_graph(&graph(text), e.key),
            };
            CheckResult {
                key: e.key.to_string(),
                passed: actual == e.value,
                expected: e.value.clone(),
                actual,
                provenance: e.provenance,
                note: e.note.to_string(),
            }
        })
        .collect();
    FixtureResult {
        name: f.name.to_string(),
        checks,
    }
}

pub fn run_all(exec: Execution) -> Vec<FixtureResult> {
    exec.map(&corpus(), run)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes() {
        for r in run_all(Execution::default()) {
            for c in &r.checks {
                assert!(
                    c.passed,
                    "{}: {} expected {} got {}",
                    r.name, c.key, c.expected, c.actual
                );
            }
        }
    }

    #[test]
    fn every_expectation_has_a_note() {
        assert!(corpus()
            .iter()
            .flat_map(|f| &f.expectations)
            .all(|e| !e.note.is_empty()));
    }
}
