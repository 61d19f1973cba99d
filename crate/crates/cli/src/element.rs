//! Element syntax for `mult`.
//!
//! A sum of terms separated by `+`; each term is an optional rational
//! coefficient followed by `*`, then one of `1`, `e(LABEL)`, `soc(LABEL)`
//! or a path of arrow ids / aliases joined by `.`.

use anyhow::{anyhow, bail, Context, Result};

use brauer_core::algebra::{Algebra, AlgebraElement, BasisElement};
use brauer_core::linalg::{int, Scalar};

fn vertex(alg: &Algebra, label: &str) -> Result<usize> {
    let q = alg.quiver();
    (0..q.vertex_count())
        .find(|&v| q.label(v) == label)
        .ok_or_else(|| anyhow!("unknown polygon {label:?}"))
}

fn atom(alg: &Algebra, s: &str) -> Result<AlgebraElement> {
    if s == "1" {
        return Ok(alg.one());
    }
    if let Some(label) = s.strip_prefix("e(").and_then(|r| r.strip_suffix(')')) {
        return Ok(AlgebraElement::basis(BasisElement::Idempotent(vertex(
            alg, label,
        )?)));
    }
    if let Some(label) = s.strip_prefix("soc(").and_then(|r| r.strip_suffix(')')) {
        return Ok(AlgebraElement::basis(BasisElement::Socle(vertex(
            alg, label,
        )?)));
    }
    let names: Vec<&str> = s.split('.').collect();
    if names.iter().any(|n| n.is_empty()) {
        bail!("empty arrow name in {s:?}");
    }
    Ok(alg.normal_form_names(&names)?)
}

fn term(alg: &Algebra, s: &str) -> Result<AlgebraElement> {
    let s = s.trim();
    let (coeff, rest) = match s.split_once('*') {
        Some((c, r)) => {
            let c: Scalar = c
                .trim()
                .parse()
                .map_err(|_| anyhow!("bad coefficient {:?}", c.trim()))?;
            (c, r.trim())
        }
        None => match s.strip_prefix('-') {
            Some(r) => (int(-1), r.trim()),
            None => (int(1), s),
        },
    };
    if rest.is_empty() {
        bail!("empty term");
    }
    Ok(atom(alg, rest)?.scaled(&coeff))
}

pub fn parse(alg: &Algebra, s: &str) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for t in s.split('+') {
        out = &out + &term(alg, t).with_context(|| format!("in element {s:?}"))?;
    }
    Ok(out)
}
