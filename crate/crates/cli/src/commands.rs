use std::io::Read;

use anyhow::anyhow;
use serde_json::{json, Value};

use brauer_core::algebra::{length_grading, Algebra, AlgebraElement, BasisElement};
use brauer_core::config::{Configuration, ValidateOptions};
use brauer_core::fixtures;
use brauer_core::io::{
    emit_dot, graph_to_json, matrix_to_csv, parse_configuration, parse_graph, parse_matrix_csv,
    serialize_configuration, ParseError,
};
use brauer_core::modules::{all_projectives, projective_structure, ProjectiveStructure};
use brauer_core::oracle::{PathOracle, PathPresentation};
use brauer_core::quiver::Quiver;
use brauer_core::rad3::{
    config_from_graph, graph_from_config, graph_from_matrix, is_rad_cubed_zero, matrix_from_graph,
    verify_all, verify_iso, CanonicalAlgebra, Graph,
};
use brauer_core::structure::{check_symmetric, loewy_length, radical_series, FiniteDimAlgebra};

use crate::{element, Cli, Command, Failure, FixturesAction, Global, Input, Output};

type Outcome = Result<Output, Failure>;

fn read(input: &Input) -> Result<String, Failure> {
    let path = &input.file;
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(anyhow!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(anyhow!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

/// Malformed input is a usage error; well-formed input violating the
/// mathematical conditions is a domain error.
fn parse_failure(e: ParseError) -> Failure {
    match e {
        ParseError::Invalid(_) | ParseError::Graph(_) => Failure::domain(e),
        _ => Failure::usage(e),
    }
}

fn options(g: &Global) -> ValidateOptions {
    ValidateOptions {
        allow_degenerate: g.allow_degenerate,
    }
}

fn config(input: &Input, g: &Global) -> Result<Configuration, Failure> {
    let raw = parse_configuration(&read(input)?).map_err(parse_failure)?;
    raw.validate(options(g))
        .map_err(|e| parse_failure(ParseError::Invalid(e)))
}

fn graph(input: &Input) -> Result<Graph, Failure> {
    parse_graph(&read(input)?).map_err(parse_failure)
}

fn config_json(cfg: &Configuration) -> Value {
    serde_json::from_str(&serialize_configuration(&cfg.to_raw()))
        .expect("serialized configuration is JSON")
}

fn path_name(q: &Quiver, path: &[usize]) -> String {
    path.iter()
        .map(|&a| q.arrow(a).alias.as_str())
        .collect::<Vec<_>>()
        .join(".")
}

fn element_json(alg: &Algebra, x: &AlgebraElement) -> Value {
    json!({
        "text": alg.format_element(x),
        "terms": x
            .terms()
            .map(|(b, c)| json!({"basis": alg.basis_name(b), "coefficient": c.to_string()}))
            .collect::<Vec<_>>(),
    })
}

fn validate(input: &Input, g: &Global) -> Outcome {
    let raw = parse_configuration(&read(input)?).map_err(parse_failure)?;
    let cfg = match raw.validate(options(g)) {
        Ok(c) => c,
        Err(errs) => {
            let report = json!({
                "valid": false,
                "errors": errs
                    .0
                    .iter()
                    .map(|e| json!({"code": e.code(), "message": e.to_string()}))
                    .collect::<Vec<_>>(),
            });
            return Err(Failure {
                code: 1,
                error: anyhow!("invalid configuration: {errs}"),
                report: Some(Output::Json(report)),
            });
        }
    };
    let vertices: Vec<Value> = (0..cfg.vertex_count())
        .map(|v| {
            json!({
                "name": cfg.vertex_name(v),
                "multiplicity": cfg.multiplicity(v),
                "valence": cfg.valence(v),
                "weight": cfg.weight(v),
                "truncated": cfg.truncated(v),
            })
        })
        .collect();
    let polygons: Vec<Value> = (0..cfg.polygon_count())
        .map(|p| {
            json!({
                "label": cfg.polygon_label(p),
                "members": cfg.polygons()[p].members,
                "self_folded": cfg.is_self_folded(p),
                "degenerate": cfg.is_degenerate(p),
            })
        })
        .collect();
    Ok(Output::Json(json!({
        "valid": true,
        "reduced": cfg.is_reduced(),
        "components": cfg.component_partition().len(),
        "vertices": vertices,
        "polygons": polygons,
    })))
}

fn quiver(alg: &Algebra, dot: bool) -> Output {
    let q = alg.quiver();
    if dot {
        return Output::Text(emit_dot(q));
    }
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|a| {
            json!({
                "id": a.id,
                "alias": a.alias,
                "source": q.label(a.source),
                "target": q.label(a.target),
            })
        })
        .collect();
    let cycles: Vec<Value> = q
        .special_cycles()
        .iter()
        .map(|c| {
            json!({
                "vertex": alg.config().vertex_name(c.vertex),
                "start": q.label(q.arrow(c.first()).source),
                "cycle": path_name(q, &c.arrows),
            })
        })
        .collect();
    Output::Json(json!({
        "vertices": (0..q.vertex_count()).map(|v| q.label(v)).collect::<Vec<_>>(),
        "arrow_count": q.arrow_count(),
        "arrows": arrows,
        "special_cycles": cycles,
    }))
}

fn relations(alg: &Algebra) -> Output {
    let q = alg.quiver();
    let rels: Vec<Value> = alg
        .relations()
        .iter()
        .map(|r| {
            json!({
                "kind": r.kind(),
                "relation": r.display(q),
                "terms": r
                    .terms(q)
                    .iter()
                    .map(|(p, c)| json!({"path": path_name(q, p), "coefficient": c}))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    Output::Json(json!({"count": rels.len(), "relations": rels}))
}

fn basis(alg: &Algebra) -> Output {
    let q = alg.quiver();
    let rows: Vec<Value> = alg
        .basis()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let kind = match b {
                BasisElement::Idempotent(_) => "idempotent",
                BasisElement::Prefix { .. } => "path",
                BasisElement::Socle(_) => "socle",
            };
            json!({
                "index": i,
                "name": alg.basis_name(b),
                "kind": kind,
                "source": q.label(alg.source(b)),
                "target": q.label(alg.target(b)),
                "degree": alg.degree(b),
            })
        })
        .collect();
    Output::Json(json!({"dimension": rows.len(), "basis": rows}))
}

fn dim(alg: &Algebra, oracle: bool, g: &Global) -> Outcome {
    let report = alg.dimension();
    let mut out = json!({
        "dimension": report.basis_count,
        "formula": report.formula,
        "basis_count": report.basis_count,
        "quiver_vertices": report.quiver_vertices,
        "cycles": report.cycles,
    });
    let mut agree = report.formula == report.basis_count;
    if oracle {
        let o = PathOracle::new(PathPresentation::of_quiver(alg.quiver()), g.exec())
            .map_err(Failure::domain)?
            .report();
        agree &= o.dimension == report.basis_count && o.top_degree_vanishes;
        out["oracle"] = json!(o);
    }
    out["consistent"] = json!(agree);
    if agree {
        Ok(Output::Json(out))
    } else {
        Err(Failure {
            code: 1,
            error: anyhow!("dimension counts disagree"),
            report: Some(Output::Json(out)),
        })
    }
}

fn mult(alg: &Algebra, x: &str, y: &str) -> Outcome {
    let a = element::parse(alg, x).map_err(Failure::usage)?;
    let b = element::parse(alg, y).map_err(Failure::usage)?;
    let p = alg.multiply(&a, &b);
    Ok(Output::Json(json!({
        "x": alg.format_element(&a),
        "y": alg.format_element(&b),
        "product": element_json(alg, &p),
        "form": alg.trace(&p).to_string(),
    })))
}

fn radical(alg: &Algebra) -> Output {
    let series = radical_series(alg);
    let cfg = alg.config();
    let max_weight = cfg.cycle_vertices().iter().map(|&v| cfg.weight(v)).max();
    Output::Json(json!({
        "series": series,
        "loewy_length": loewy_length(&series),
        "max_weight": max_weight,
        "rad_cubed_zero": series.get(3) == Some(&0) && series.get(2).is_some_and(|&d| d > 0),
        "weights_all_two": is_rad_cubed_zero(cfg),
    }))
}

fn components(cfg: &Configuration) -> Output {
    let parts = cfg.connected_components();
    let rows: Vec<Value> = parts
        .iter()
        .map(|c| {
            let alg = Algebra::new(c);
            json!({
                "polygons": c.polygons().iter().map(|p| p.label.as_str()).collect::<Vec<_>>(),
                "vertices": c.vertices().iter().map(|v| v.name.as_str()).collect::<Vec<_>>(),
                "dimension": alg.dim(),
            })
        })
        .collect();
    Output::Json(json!({
        "count": rows.len(),
        "indecomposable": rows.len() == 1,
        "components": rows,
    }))
}

fn grading(cfg: &Configuration) -> Output {
    let rows: Vec<Value> = cfg
        .connected_components()
        .iter()
        .map(|c| {
            let n = length_grading(c).expect("components are connected");
            json!({
                "polygons": c.polygons().iter().map(|p| p.label.as_str()).collect::<Vec<_>>(),
                "length_graded": n.is_some(),
                "common_weight": n,
                "type_one_homogeneous": Algebra::new(c).type_one_homogeneous(),
            })
        })
        .collect();
    Output::Json(json!({
        "length_graded": rows.iter().all(|r| r["length_graded"] == json!(true)),
        "components": rows,
    }))
}

fn projective_json(alg: &Algebra, p: &ProjectiveStructure) -> Value {
    let q = alg.quiver();
    let labels = |vs: &[usize]| {
        vs.iter()
            .map(|&v| q.label(v).to_string())
            .collect::<Vec<_>>()
    };
    json!({
        "polygon": p.polygon,
        "r": p.r,
        "dimension": p.dim_from_basis,
        "uniserial": p.uniserial,
        "consistent": p.consistent(),
        "chains": p
            .chains
            .iter()
            .map(|c| json!({
                "vertex": c.vertex,
                "generators": c.generator_paths,
                "layers": labels(&c.layers),
            }))
            .collect::<Vec<_>>(),
        "heart": p.heart.iter().map(|h| labels(h)).collect::<Vec<_>>(),
    })
}

fn projectives(alg: &Algebra, polygon: Option<&str>) -> Outcome {
    let list = match polygon {
        Some(label) => vec![projective_structure(alg, label).map_err(Failure::domain)?],
        None => all_projectives(alg),
    };
    let rows: Vec<Value> = list.iter().map(|p| projective_json(alg, p)).collect();
    Ok(Output::Json(json!({"projectives": rows})))
}

fn canonical(g: &Graph, global: &Global) -> Outcome {
    let canon = CanonicalAlgebra::new(g).map_err(Failure::domain)?;
    let oracle = PathOracle::new(canon.presentation(), global.exec())
        .map_err(Failure::domain)?
        .report();
    let cfg = config_from_graph(g).map_err(Failure::domain)?;
    let iso = verify_iso(&Algebra::new(&cfg), &canon);
    let word = |p: &[usize]| {
        p.iter()
            .map(|&a| canon.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    };
    let generators: Vec<String> = canon
        .ideal_generators()
        .iter()
        .map(|terms| {
            let mut s = String::new();
            for (k, (p, c)) in terms.iter().enumerate() {
                match (k, *c) {
                    (0, 1) => {}
                    (0, -1) => s.push('-'),
                    (_, 1) => s.push_str(" + "),
                    (_, -1) => s.push_str(" - "),
                    (0, c) => s.push_str(&format!("{c}*")),
                    (_, c) => s.push_str(&format!(" + {c}*")),
                }
                s.push_str(&word(p));
            }
            s
        })
        .collect();
    Ok(Output::Json(json!({
        "graph": graph_to_json(&canon.graph),
        "dimension": canon.dim(),
        "oracle_dimension": oracle.dimension,
        "arrows": canon
            .arrows
            .iter()
            .map(|a| json!({
                "name": a.name,
                "source": a.source + 1,
                "target": a.target + 1,
                "edge": a.edge + 1,
            }))
            .collect::<Vec<_>>(),
        "basis": (0..canon.dim()).map(|i| canon.basis_label(i)).collect::<Vec<_>>(),
        "ideal_generators": generators,
        "radical_series": radical_series(&canon),
        "symmetric": check_symmetric(&canon, global.exec()).passed(),
        "isomorphic_to_configuration_algebra": iso.isomorphic,
        "arrow_map": iso.arrow_map,
    })))
}

fn graph_label(g: &Graph) -> String {
    let edges: Vec<String> = g.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
    format!("n={} {{{}}}", g.n, edges.join(", "))
}

fn verify_rad3(n: usize, max_edges: usize, failures_only: bool, g: &Global) -> Outcome {
    if n == 0 || max_edges == 0 {
        return Err(Failure::usage(anyhow!(
            "--n and --max-edges must be at least 1"
        )));
    }
    let report = verify_all(n, max_edges, g.exec());
    let rows: Vec<Value> = report
        .checks
        .iter()
        .filter(|c| !failures_only || !c.passed())
        .map(|c| {
            let mut row = json!({
                "graph": graph_label(&c.graph),
                "passed": c.passed(),
                "dimension": c.dim_config,
            });
            if let Some(m) = &c.iso.mismatch {
                row["mismatch"] = json!(m);
            }
            row
        })
        .collect();
    let out = json!({
        "max_n": report.max_n,
        "max_edges": report.max_edges,
        "graphs_checked": report.graphs_checked,
        "failures": report.failures,
        "graphs": rows,
    });
    if report.failures == 0 {
        Ok(Output::Json(out))
    } else {
        Err(Failure {
            code: 1,
            error: anyhow!("{} graph(s) failed", report.failures),
            report: Some(Output::Json(out)),
        })
    }
}

fn fixtures_run(g: &Global) -> Outcome {
    let results = fixtures::run_all(g.exec());
    let failed = results.iter().filter(|r| !r.passed()).count();
    let out = json!({
        "fixtures": results.len(),
        "checks": results.iter().map(|r| r.checks.len()).sum::<usize>(),
        "failed_fixtures": failed,
        "results": results
            .iter()
            .map(|r| json!({"name": r.name, "passed": r.passed(), "checks": r.checks}))
            .collect::<Vec<_>>(),
    });
    if failed == 0 {
        Ok(Output::Json(out))
    } else {
        Err(Failure {
            code: 1,
            error: anyhow!("{failed} fixture(s) failed"),
            report: Some(Output::Json(out)),
        })
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let algebra = |input: &Input| config(input, g).map(|c| Algebra::new(&c));
    match &cli.command {
        Command::Validate(i) => validate(i, g),
        Command::Reduce(i) => Ok(Output::Json(config_json(&config(i, g)?.reduce()))),
        Command::Quiver { input, dot } => Ok(quiver(&algebra(input)?, *dot)),
        Command::Relations(i) => Ok(relations(&algebra(i)?)),
        Command::Basis(i) => Ok(basis(&algebra(i)?)),
        Command::Dim { input, oracle } => dim(&algebra(input)?, *oracle, g),
        Command::Mult { input, x, y } => mult(&algebra(input)?, x, y),
        Command::SymmetricCheck(i) => {
            let r = check_symmetric(&algebra(i)?, g.exec());
            let out = Output::Json(json!(r));
            if r.passed() {
                Ok(out)
            } else {
                Err(Failure {
                    code: 1,
                    error: anyhow!("algebra is not symmetric with respect to the form"),
                    report: Some(out),
                })
            }
        }
        Command::RadicalSeries(i) => Ok(radical(&algebra(i)?)),
        Command::Grading(i) => Ok(grading(&config(i, g)?)),
        Command::Components(i) => Ok(components(&config(i, g)?)),
        Command::Projectives { input, polygon } => {
            projectives(&algebra(input)?, polygon.as_deref())
        }
        Command::GraphToMatrix(i) => {
            Ok(Output::Text(matrix_to_csv(&matrix_from_graph(&graph(i)?))))
        }
        Command::MatrixToGraph(i) => {
            let m = parse_matrix_csv(&read(i)?).map_err(parse_failure)?;
            Ok(Output::Json(graph_to_json(&graph_from_matrix(&m))))
        }
        Command::GraphToConfig(i) => {
            let cfg = config_from_graph(&graph(i)?).map_err(Failure::domain)?;
            Ok(Output::Json(config_json(&cfg)))
        }
        Command::ConfigToGraph(i) => {
            let cfg = config(i, g)?;
            let graph = graph_from_config(&cfg).map_err(Failure::domain)?;
            Ok(Output::Json(graph_to_json(&graph)))
        }
        Command::CanonicalAlgebra(i) => canonical(&graph(i)?, g),
        Command::VerifyRad3 {
            n,
            max_edges,
            failures_only,
        } => verify_rad3(*n, *max_edges, *failures_only, g),
        Command::Fixtures {
            action: FixturesAction::Run,
        } => fixtures_run(g),
    }
}
