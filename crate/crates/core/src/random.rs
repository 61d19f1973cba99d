//! Seeded generator of small valid configurations for property tests.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::config::{
    BrauerConfiguration, ConfigVertex, Configuration, OccurrenceRef, Polygon, ValidateOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomParams {
    pub max_polygons: usize,
    pub max_vertices: usize,
    pub max_multiplicity: u32,
    pub max_polygon_size: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            max_polygons: 6,
            max_vertices: 8,
            max_multiplicity: 3,
            max_polygon_size: 4,
        }
    }
}

/// Draws candidates until one passes validation. Polygons may repeat a
/// vertex; orientations are random cyclic orders of all occurrences.
pub fn random_configuration<R: Rng>(rng: &mut R, p: RandomParams) -> Configuration {
    loop {
        if let Some(c) = candidate(rng, p) {
            return c;
        }
    }
}

fn candidate<R: Rng>(rng: &mut R, p: RandomParams) -> Option<Configuration> {
    let k = rng.gen_range(1..=p.max_vertices);
    let npoly = rng.gen_range(1..=p.max_polygons);
    let mut polygons = Vec::with_capacity(npoly);
    for i in 0..npoly {
        let size = rng.gen_range(2..=p.max_polygon_size);
        let members: Vec<String> = (0..size)
            .map(|_| rng.gen_range(1..=k).to_string())
            .collect();
        polygons.push(Polygon {
            label: format!("V{}", i + 1),
            members,
        });
    }
    let vertices: Vec<ConfigVertex> = (1..=k)
        .map(|v| v.to_string())
        .filter(|name| polygons.iter().any(|q| q.members.contains(name)))
        .map(|name| ConfigVertex {
            name,
            multiplicity: rng.gen_range(1..=p.max_multiplicity),
        })
        .collect();
    if vertices.len() > p.max_vertices {
        return None;
    }
    let mut orientation = BTreeMap::new();
    for v in &vertices {
        let mut occ = Vec::new();
        for q in &polygons {
            let count = q.members.iter().filter(|m| **m == v.name).count();
            occ.extend((1..=count).map(|i| OccurrenceRef::new(q.label.clone(), i)));
        }
        occ.shuffle(rng);
        orientation.insert(v.name.clone(), occ);
    }
    BrauerConfiguration {
        vertices,
        polygons,
        orientation,
    }
    .validate(ValidateOptions::default())
    .ok()
}
