//! Acceptance suite: one numbered criterion per check, one PASS/FAIL line
//! each. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use brauer_core::algebra::{length_grading, Algebra, AlgebraElement, BasisElement};
use brauer_core::config::{ConfigError, Configuration};
use brauer_core::fixtures;
use brauer_core::modules::{all_projectives, projective_structure};
use brauer_core::oracle::{PathOracle, PathPresentation};
use brauer_core::rad3::{self, CanonicalAlgebra};
use brauer_core::random::{random_configuration, RandomParams};
use brauer_core::structure::{
    check_associativity_sampled, check_symmetric, check_unit, loewy_length, radical_series,
    FiniteDimAlgebra,
};
use brauer_core::Execution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn oracle_for(alg: &Algebra) -> PathOracle {
    PathOracle::new(
        PathPresentation::of_quiver(alg.quiver()),
        Execution::default(),
    )
    .expect("fixture path spaces are small")
}

fn shows(alg: &Algebra) -> Vec<String> {
    alg.relations()
        .iter()
        .map(|r| r.display(alg.quiver()))
        .collect()
}

fn dims_agree(alg: &Algebra, oracle: &PathOracle, expected: usize) -> Result<(), String> {
    let d = alg.dimension();
    let r = oracle.report();
    ensure(
        d.formula == expected && d.basis_count == expected && r.dimension == expected,
        || {
            format!(
                "formula {} basis {} oracle {} expected {expected}",
                d.formula, d.basis_count, r.dimension
            )
        },
    )?;
    ensure(r.top_degree_vanishes, || "paths of length N survive".into())
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let alg = Algebra::new(&fixtures::example1());
    let q = alg.quiver();
    ensure(q.vertex_count() == 5 && q.arrow_count() == 12, || {
        format!("{} vertices, {} arrows", q.vertex_count(), q.arrow_count())
    })?;
    let rels = shows(&alg);
    for r in ["a1a2a3 - b1b2", "d3d4d1d2 - ee", "eee", "c1c2c1c2c1c2c1"] {
        ensure(rels.iter().any(|x| x == r), || {
            format!("missing relation {r}")
        })?;
    }
    let mut pairs = 0;
    for x in ["a1", "a2", "a3"] {
        for y in ["b1", "b2"] {
            for (f, s) in [(x, y), (y, x)] {
                let (a, b) = (q.find_arrow(f).unwrap(), q.find_arrow(s).unwrap());
                if q.arrow(a).target == q.arrow(b).source {
                    pairs += 1;
                    ensure(rels.contains(&format!("{f}{s}")), || {
                        format!("missing {f}{s}")
                    })?;
                }
            }
        }
    }
    dims_agree(&alg, &oracle_for(&alg), 41)?;
    within(Duration::from_secs(5), start)?;
    Ok(format!(
        "5 vertices, 12 arrows, {pairs} a/b pairs, dim 41 = oracle, {:.2?}",
        start.elapsed()
    ))
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let alg = Algebra::new(&fixtures::example2());
    let q = alg.quiver();
    ensure(q.vertex_count() == 3 && q.arrow_count() == 10, || {
        format!("{} vertices, {} arrows", q.vertex_count(), q.arrow_count())
    })?;
    let v1 = alg.config().polygon_id("V1").unwrap();
    let one = alg.config().vertex_id("1").unwrap();
    let ones = q.cycles_at(v1).iter().filter(|c| c.vertex == one).count();
    ensure(ones == 3, || format!("{ones} special 1-cycles at v1"))?;
    dims_agree(&alg, &oracle_for(&alg), 40)?;
    within(Duration::from_secs(5), start)?;
    Ok(format!(
        "3 vertices, 10 arrows, three 1-cycles at v1, dim 40 = oracle, {:.2?}",
        start.elapsed()
    ))
}

fn criterion3() -> Outcome {
    let mut total = 0;
    for (name, cfg) in fixtures::all_configurations() {
        let alg = Algebra::new(&cfg);
        let oracle = oracle_for(&alg);
        let report = oracle.check_normal_forms(&alg, Execution::default());
        ensure(report.mismatches.is_empty(), || {
            format!(
                "{name}: {} mismatches, first {}",
                report.mismatches.len(),
                report.mismatches[0]
            )
        })?;
        ensure(oracle.basis_independent(&alg), || {
            format!("{name}: basis dependent mod I")
        })?;
        dims_agree(&alg, &oracle, alg.basis().len()).map_err(|e| format!("{name}: {e}"))?;
        total += report.paths_checked;
    }
    Ok(format!("{total} paths across all fixtures, 0 mismatches"))
}

fn criterion4() -> Outcome {
    let mut count = 0;
    for (name, cfg) in fixtures::all_configurations() {
        let r = check_symmetric(&Algebra::new(&cfg), Execution::default());
        ensure(r.passed(), || format!("{name}: {r:?}"))?;
        count += 1;
    }
    for (name, g) in fixtures::all_graphs() {
        let r = check_symmetric(&CanonicalAlgebra::new(&g).unwrap(), Execution::default());
        ensure(r.passed(), || format!("A_G of {name}: {r:?}"))?;
        count += 1;
    }
    Ok(format!(
        "{count} algebras symmetric with full-rank Gram matrix"
    ))
}

fn same_structure(a: &Algebra, b: &Algebra) -> Result<(), String> {
    ensure(a.quiver() == b.quiver(), || "quivers differ".into())?;
    ensure(a.basis() == b.basis(), || {
        format!("bases differ: {} vs {}", a.basis().len(), b.basis().len())
    })?;
    for x in a.basis() {
        for y in a.basis() {
            ensure(a.basis_product(x, y) == b.basis_product(x, y), || {
                format!("{} * {}", a.basis_name(x), a.basis_name(y))
            })?;
        }
    }
    Ok(())
}

fn criterion5() -> Outcome {
    let mut notes = Vec::new();
    for (name, cfg) in [
        ("example1", fixtures::example1()),
        ("example2", fixtures::example2()),
    ] {
        ensure(!cfg.is_reduced(), || {
            format!("{name} fixture is already reduced")
        })?;
        let unreduced = Algebra::without_reduction(&cfg);
        let reduced = Algebra::new(&cfg);
        same_structure(&unreduced, &reduced).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            unreduced.config().vertex_count() > reduced.config().vertex_count(),
            || format!("{name}: reduction removed nothing"),
        )?;
        notes.push(format!("{name} dim {}", reduced.basis().len()));
    }
    Ok(format!(
        "identical quiver, basis and structure constants ({})",
        notes.join(", ")
    ))
}

fn criterion6() -> Outcome {
    let mut polygons = 0;
    for (name, cfg) in fixtures::all_configurations() {
        let alg = Algebra::new(&cfg);
        for p in all_projectives(&alg) {
            ensure(p.consistent(), || format!("{name} {}: {p:?}", p.polygon))?;
            polygons += 1;
        }
    }
    let alg = Algebra::new(&fixtures::example1());
    let p1 = projective_structure(&alg, "V1").map_err(|e| e.to_string())?;
    ensure(p1.r == 4, || format!("Example 1 V1 has r = {}", p1.r))?;
    Ok(format!(
        "{polygons} projectives consistent; Example 1 V1 has r = 4"
    ))
}

fn max_weight(cfg: &Configuration) -> usize {
    cfg.cycle_vertices()
        .iter()
        .map(|&v| cfg.weight(v))
        .max()
        .unwrap_or(0)
}

fn loewy_checks(name: &str, cfg: &Configuration) -> Result<(), String> {
    let alg = Algebra::new(cfg);
    let series = radical_series(&alg);
    ensure(series.windows(2).all(|w| w[0] > w[1]), || {
        format!("{name}: series {series:?} not strictly decreasing")
    })?;
    ensure(series.last() == Some(&0), || {
        format!("{name}: series {series:?} does not reach 0")
    })?;
    for comp in alg.config().connected_components() {
        let a = Algebra::new(&comp);
        let ll = loewy_length(&radical_series(&a));
        let w = max_weight(a.config());
        ensure(ll == 1 + w, || {
            format!(
                "{name}: component Loewy length {ll}, 1 + max val*mu = {}",
                1 + w
            )
        })?;
    }
    let rad3_zero = series.get(3).is_none_or(|&d| d == 0);
    let combinatorial = max_weight(alg.config()) <= 2;
    ensure(rad3_zero == combinatorial, || {
        format!("{name}: rad^3 = 0 is {rad3_zero}, val*mu <= 2 is {combinatorial}")
    })?;
    if combinatorial
        && alg.config().component_partition().len() == 1
        && !alg.config().has_degenerate()
    {
        let rc = rad3::is_rad_cubed_zero(alg.config());
        let by_series = series.len() == 4;
        ensure(rc == by_series, || {
            format!("{name}: is_rad_cubed_zero {rc}, series {series:?}")
        })?;
    }
    Ok(())
}

fn criterion7() -> Outcome {
    let fixtures = fixtures::all_configurations();
    for (name, cfg) in &fixtures {
        loewy_checks(name, cfg)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut rad3_cases = 0;
    for i in 0..50 {
        let cfg = random_configuration(&mut rng, RandomParams::default());
        if max_weight(&cfg.reduce()) <= 2 {
            rad3_cases += 1;
        }
        loewy_checks(&format!("random #{i}"), &cfg)?;
    }
    Ok(format!(
        "{} fixtures and 50 random configurations ({rad3_cases} with rad^3 = 0)",
        fixtures.len()
    ))
}

fn criterion8() -> Outcome {
    let start = Instant::now();
    let report = rad3::verify_all(4, 5, Execution::default());
    if let Some(bad) = report.checks.iter().find(|c| !c.passed()) {
        return Err(format!(
            "{} failures; first {}: {:?}",
            report.failures, bad.graph, bad
        ));
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!(
        "{} graphs (n <= 4, <= 5 edges): iso and all round trips hold, {:.2?}",
        report.graphs_checked,
        start.elapsed()
    ))
}

fn criterion9() -> Outcome {
    let a = Algebra::new(&fixtures::two_loops());
    let b = Algebra::new(&fixtures::self_folded_loop());
    for (name, alg) in [("two-loops", &a), ("self-folded", &b)] {
        let s = radical_series(alg);
        ensure(alg.basis().len() == 4 && s == [4, 3, 1, 0], || {
            format!("{name}: series {s:?}")
        })?;
    }
    let ga = rad3::graph_from_config(a.config()).map_err(|e| e.to_string())?;
    ensure(rad3::matrix_from_graph(&ga).rows == [[2]], || {
        "two-loops matrix is not (2)".into()
    })?;
    ensure(rad3::matrix_from_quiver(b.quiver()).rows == [[2]], || {
        "self-folded matrix is not (2)".into()
    })?;
    ensure(rad3::matrix_from_quiver(a.quiver()).rows == [[2]], || {
        "two-loops quiver matrix is not (2)".into()
    })?;
    ensure(
        matches!(
            a.config().equivalent_ordered(b.config()),
            Err(ConfigError::NotOrderedClass(_))
        ),
        || "self-folded configuration was accepted as ordered".into(),
    )?;
    // x^2 = y^2 != 0 in one, x^2 = y^2 = 0 and xy = yx != 0 in the other
    let square = |alg: &Algebra, arrow: usize| {
        let x = AlgebraElement::basis(BasisElement::Prefix { arrow, len: 1 });
        alg.multiply(&x, &x)
    };
    let mixed = |alg: &Algebra| {
        let x = AlgebraElement::basis(BasisElement::Prefix { arrow: 0, len: 1 });
        let y = AlgebraElement::basis(BasisElement::Prefix { arrow: 1, len: 1 });
        (alg.multiply(&x, &y), alg.multiply(&y, &x))
    };
    let soc = AlgebraElement::basis(BasisElement::Socle(0));
    ensure(
        square(&a, 0) == soc
            && square(&a, 1) == soc
            && mixed(&a).0.is_zero()
            && mixed(&a).1.is_zero(),
        || "two-loops table differs from K[x,y]/(xy, x^2 - y^2)".into(),
    )?;
    ensure(
        square(&b, 0).is_zero() && square(&b, 1).is_zero() && mixed(&b) == (soc.clone(), soc),
        || "self-folded table differs from K[x,y]/(x^2, y^2)".into(),
    )?;
    Ok("both dimension 4 with series 4,3,1,0 and matrix (2); distinct tables; self-folded one outside the ordered class".into())
}

fn criterion10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut algebras = 0;
    let mut graded_checked = 0;
    let mut bijections = 0;
    let mut configs = fixtures::all_configurations();
    let mut gen = ChaCha8Rng::seed_from_u64(11);
    for i in 0..20 {
        configs.push((
            format!("random #{i}"),
            random_configuration(&mut gen, RandomParams::default()),
        ));
    }
    for (name, cfg) in &configs {
        let alg = Algebra::new(cfg);
        let r = check_associativity_sampled(&alg, 10_000, &mut rng, Execution::default());
        ensure(r.failure.is_none(), || {
            format!("{name}: associativity fails at {:?}", r.failure)
        })?;
        ensure(check_unit(&alg), || format!("{name}: unit law fails"))?;
        for comp in alg.config().connected_components() {
            let ca = Algebra::new(&comp);
            let graded = length_grading(ca.config())
                .map_err(|e| e.to_string())?
                .is_some();
            ensure(graded == ca.type_one_homogeneous(), || {
                format!(
                    "{name}: grading criterion {graded}, homogeneous relations {}",
                    ca.type_one_homogeneous()
                )
            })?;
            graded_checked += 1;
        }
        match alg.length_two_bijections() {
            Some(ok) => {
                ensure(ok, || {
                    format!("{name}: length-2 path maps are not bijections")
                })?;
                bijections += 1;
            }
            None => ensure(radical_series(&alg).get(2) == Some(&0), || {
                format!("{name}: bijection check skipped although rad^2 != 0")
            })?,
        }
        algebras += 1;
    }
    for (name, g) in fixtures::all_graphs() {
        let c = CanonicalAlgebra::new(&g).unwrap();
        let r = check_associativity_sampled(&c, 10_000, &mut rng, Execution::default());
        ensure(r.failure.is_none(), || {
            format!("A_G of {name}: {:?}", r.failure)
        })?;
        ensure(check_unit(&c), || format!("A_G of {name}: unit law fails"))?;
        ensure(c.dim() > 0, || "empty algebra".into())?;
        algebras += 1;
    }
    Ok(format!(
        "{algebras} algebras x 10^4 triples associative, unit law, {graded_checked} grading checks, {bijections} bijection checks"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Example 1 regression", criterion1),
        ("Example 2 regression", criterion2),
        ("normal form vs path oracle", criterion3),
        ("symmetry", criterion4),
        ("reduction invariance", criterion5),
        ("projective structure", criterion6),
        ("Loewy length and radical series", criterion7),
        ("exhaustive radical-cube-zero check", criterion8),
        ("two local algebras with matrix (2)", criterion9),
        ("randomized property suite", criterion10),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {title}: {detail} [{:.2?}]",
                i + 1,
                start.elapsed()
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL  {title}: {detail} [{:.2?}]",
                    i + 1,
                    start.elapsed()
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
