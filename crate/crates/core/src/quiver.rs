//! The quiver of a configuration and its special cycles.
//!
//! Quiver vertices are the polygons. Every cycle vertex `α` with successor
//! sequence `o_1 < o_2 < … < o_n` contributes arrows `α:1 … α:n`, arrow `α:i`
//! going from the polygon of `o_i` to the polygon of `o_{i+1}` (indices mod
//! n). The rotation of the `α`-cycle starting at `α:i` is the special cycle
//! at the polygon of `o_i`; rotations are in bijection with arrows.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::config::Configuration;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    /// Deterministic id `"<vertex>:<position>"`.
    pub id: String,
    /// Presentation name (`a1`, `b2`, `e`, …).
    pub alias: String,
    pub source: usize,
    pub target: usize,
    /// Configuration vertex the arrow comes from.
    pub vertex: usize,
    /// 1-based position in the successor sequence.
    pub position: usize,
}

/// All arrows of one configuration vertex, in successor order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCycle {
    pub vertex: usize,
    pub multiplicity: u32,
    pub arrows: Vec<usize>,
}

/// One rotation of a vertex cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialCycle {
    pub vertex: usize,
    /// 1-based position of the first arrow.
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl SpecialCycle {
    pub fn first(&self) -> usize {
        self.arrows[0]
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: Vec<Arrow>,
    cycles: Vec<VertexCycle>,
    /// Index into `cycles` for each arrow.
    cycle_of: Vec<usize>,
    outgoing: Vec<Vec<usize>>,
}

fn alias_letter(k: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if k < LETTERS.len() {
        (LETTERS[k] as char).to_string()
    } else {
        format!("x{}_", k)
    }
}

impl Quiver {
    pub fn build(cfg: &Configuration) -> Quiver {
        let labels = cfg
            .polygons()
            .iter()
            .map(|p| p.label.clone())
            .collect::<Vec<_>>();
        let mut arrows = Vec::new();
        let mut cycles = Vec::new();
        let mut cycle_of = Vec::new();
        for (k, v) in cfg.cycle_vertices().into_iter().enumerate() {
            let seq = cfg
                .successors(v)
                .expect("cycle vertex has a successor sequence");
            let n = seq.len();
            let letter = alias_letter(k);
            let mut ids = Vec::with_capacity(n);
            for i in 0..n {
                let id = arrows.len();
                arrows.push(Arrow {
                    id: format!("{}:{}", cfg.vertex_name(v), i + 1),
                    alias: if n == 1 {
                        letter.clone()
                    } else {
                        format!("{}{}", letter, i + 1)
                    },
                    source: seq[i].polygon,
                    target: seq[(i + 1) % n].polygon,
                    vertex: v,
                    position: i + 1,
                });
                cycle_of.push(cycles.len());
                ids.push(id);
            }
            cycles.push(VertexCycle {
                vertex: v,
                multiplicity: cfg.multiplicity(v),
                arrows: ids,
            });
        }
        let mut outgoing = vec![Vec::new(); labels.len()];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source].push(i);
        }
        Quiver {
            labels,
            arrows,
            cycles,
            cycle_of,
            outgoing,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_cycles(&self) -> &[VertexCycle] {
        &self.cycles
    }

    /// Arrows leaving quiver vertex `v`; each is the first arrow of one
    /// special cycle at `v`.
    pub fn outgoing(&self, v: usize) -> &[usize] {
        &self.outgoing[v]
    }

    pub fn find_arrow(&self, name: &str) -> Option<usize> {
        self.arrows
            .iter()
            .position(|a| a.id == name)
            .or_else(|| self.arrows.iter().position(|a| a.alias == name))
    }

    pub fn vertex_cycle_of(&self, a: usize) -> &VertexCycle {
        &self.cycles[self.cycle_of[a]]
    }

    /// Length of the special cycle through `a`.
    pub fn cycle_len(&self, a: usize) -> usize {
        self.vertex_cycle_of(a).arrows.len()
    }

    pub fn cycle_multiplicity(&self, a: usize) -> u32 {
        self.vertex_cycle_of(a).multiplicity
    }

    /// The arrow following `a` in its special cycle.
    pub fn next_in_cycle(&self, a: usize) -> usize {
        let c = self.vertex_cycle_of(a);
        let i = self.arrows[a].position - 1;
        c.arrows[(i + 1) % c.arrows.len()]
    }

    /// `k`-th arrow (0-based, unbounded) of the rotation starting at `a`.
    pub fn cycle_arrow(&self, a: usize, k: usize) -> usize {
        let c = self.vertex_cycle_of(a);
        let i = self.arrows[a].position - 1;
        c.arrows[(i + k) % c.arrows.len()]
    }

    /// The unique rotation having `a` as its first arrow.
    pub fn rotation(&self, a: usize) -> SpecialCycle {
        let n = self.cycle_len(a);
        SpecialCycle {
            vertex: self.arrows[a].vertex,
            start: self.arrows[a].position,
            arrows: (0..n).map(|k| self.cycle_arrow(a, k)).collect(),
        }
    }

    /// The rotation starting at `a`, plus the offset of `a` within the
    /// canonical representative of its class.
    pub fn cycle_of_arrow(&self, a: usize) -> (SpecialCycle, usize) {
        (self.rotation(a), self.arrows[a].position - 1)
    }

    /// Every rotation, grouped by vertex then position.
    pub fn special_cycles(&self) -> Vec<SpecialCycle> {
        self.cycles
            .iter()
            .flat_map(|c| c.arrows.iter().map(|&a| self.rotation(a)))
            .collect()
    }

    /// One rotation per class: the one starting at position 1.
    pub fn canonical_cycles(&self) -> Vec<SpecialCycle> {
        self.cycles
            .iter()
            .map(|c| self.rotation(c.arrows[0]))
            .collect()
    }

    /// Special cycles based at quiver vertex `v`.
    pub fn cycles_at(&self, v: usize) -> Vec<SpecialCycle> {
        self.outgoing[v].iter().map(|&a| self.rotation(a)).collect()
    }

    pub fn path_is_composable(&self, path: &[usize]) -> bool {
        path.windows(2)
            .all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
    }

    /// Arrow multiplicity matrix: `m[i][j]` arrows from `i` to `j`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    /// Vertex sets of the connected components of the underlying graph.
    pub fn undirected_components(&self) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = vec![];
            while let Some(x) = stack.pop() {
                members.push(x);
                for a in &self.arrows {
                    for (p, q) in [(a.source, a.target), (a.target, a.source)] {
                        if p == x && comp[q] == usize::MAX {
                            comp[q] = id;
                            stack.push(q);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// Searches for a bijection of vertices carrying arrow multiplicities of `a`
/// onto those of `b`. Backtracking, pruned by in/out/loop degree signatures.
pub fn find_isomorphism(a: &Quiver, b: &Quiver) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count() {
        return None;
    }
    let (ma, mb) = (a.adjacency(), b.adjacency());
    let n = ma.len();
    let signature = |m: &Vec<Vec<usize>>, v: usize| {
        let out: usize = m[v].iter().sum();
        let inc: usize = m.iter().map(|r| r[v]).sum();
        (out, inc, m[v][v])
    };
    let sa: Vec<_> = (0..n).map(|v| signature(&ma, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| signature(&mb, v)).collect();
    let mut count: BTreeMap<_, i64> = BTreeMap::new();
    for s in &sa {
        *count.entry(*s).or_default() += 1;
    }
    for s in &sb {
        *count.entry(*s).or_default() -= 1;
    }
    if count.values().any(|&c| c != 0) {
        return None;
    }

    fn extend(
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ma: &[Vec<usize>],
        mb: &[Vec<usize>],
        sa: &[(usize, usize, usize)],
        sb: &[(usize, usize, usize)],
    ) -> bool {
        let n = ma.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || sa[v] != sb[w] {
                continue;
            }
            let consistent = (0..v).all(|u| ma[v][u] == mb[w][map[u]] && ma[u][v] == mb[map[u]][w]);
            if !consistent {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(v + 1, map, used, ma, mb, sa, sb) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, &mut map, &mut used, &ma, &mb, &sa, &sb).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example1_quiver_shape() {
        let c = fixtures::example1().reduce();
        let q = Quiver::build(&c);
        assert_eq!(q.vertex_count(), 5);
        assert_eq!(q.arrow_count(), 12);
        let aliases: Vec<_> = q.arrows().iter().map(|a| a.alias.as_str()).collect();
        assert_eq!(
            aliases,
            ["a1", "a2", "a3", "b1", "b2", "c1", "c2", "d1", "d2", "d3", "d4", "e"]
        );
        // a1: V1 -> V5 since V5 succeeds V1 at vertex 1
        let a1 = q.find_arrow("a1").unwrap();
        assert_eq!(q.label(q.arrow(a1).source), "V1");
        assert_eq!(q.label(q.arrow(a1).target), "V5");
        assert_eq!(q.arrow(a1).id, "1:1");
    }

    #[test]
    fn example2_quiver_shape() {
        let q = Quiver::build(&fixtures::example2().reduce());
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.arrow_count(), 10);
        let v1 = 0;
        let starts: Vec<Vec<String>> = q
            .cycles_at(v1)
            .into_iter()
            .filter(|c| c.vertex == q.arrow(q.find_arrow("a1").unwrap()).vertex)
            .map(|c| c.arrows.iter().map(|&a| q.arrow(a).alias.clone()).collect())
            .collect();
        assert_eq!(starts.len(), 3);
        assert_eq!(starts[0], ["a1", "a2", "a3", "a4", "a5", "a6"]);
        assert_eq!(starts[1], ["a2", "a3", "a4", "a5", "a6", "a1"]);
        assert_eq!(starts[2], ["a3", "a4", "a5", "a6", "a1", "a2"]);
    }

    #[test]
    fn example1_rotations() {
        let q = Quiver::build(&fixtures::example1().reduce());
        let name = |c: &SpecialCycle| -> Vec<String> {
            c.arrows.iter().map(|&a| q.arrow(a).alias.clone()).collect()
        };
        let v2 = 1;
        let at_v2: Vec<_> = q.cycles_at(v2).iter().map(name).collect();
        assert!(at_v2.contains(&vec!["a3".to_string(), "a1".into(), "a2".into()]));
        assert!(at_v2.contains(&vec!["b2".to_string(), "b1".into()]));
        let a2 = q.find_arrow("a2").unwrap();
        let (rot, pos) = q.cycle_of_arrow(a2);
        assert_eq!(name(&rot), ["a2", "a3", "a1"]);
        assert_eq!(pos, 1);
        let e = q.find_arrow("e").unwrap();
        assert_eq!(name(&q.cycle_of_arrow(e).0), ["e"]);
        for a in 0..q.arrow_count() {
            assert_eq!(q.cycle_of_arrow(a).0.first(), a);
        }
    }

    #[test]
    fn orientations_give_non_isomorphic_quivers() {
        let q1 = Quiver::build(&fixtures::example1().reduce());
        let q2 = Quiver::build(&fixtures::example1_o2().reduce());
        assert!(find_isomorphism(&q1, &q2).is_none());
        assert!(find_isomorphism(&q1, &q1).is_some());
    }
}
