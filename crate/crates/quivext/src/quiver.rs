//! Quivers, paths, and DOT emission.
//!
//! Composition is fixed in diagram order: `p * q` means "p then q", so two
//! paths compose exactly when `target(p) = source(q)`. Every module downstream
//! inherits this convention.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut vs = std::collections::HashSet::new();
        for v in &vertices {
            if !vs.insert(v.clone()) {
                return Err(Error::Quiver(format!("duplicate vertex label `{v}`")));
            }
        }
        let idx = |label: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::Quiver(format!("undeclared vertex `{label}`")))
        };
        let mut names = std::collections::HashSet::new();
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(Error::Quiver(format!("duplicate arrow name `{name}`")));
            }
            if name.starts_with("e_") {
                return Err(Error::Quiver(format!(
                    "arrow name `{name}` collides with the stationary-path prefix"
                )));
            }
            out.push(Arrow {
                name,
                source: idx(&s)?,
                target: idx(&t)?,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn stationary(&self, vertex: usize) -> Path {
        Path {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn arrow_path(&self, arrow: usize) -> Path {
        let a = &self.arrows[arrow];
        Path {
            source: a.source,
            target: a.target,
            arrows: vec![arrow],
        }
    }

    /// All paths of length at most `max_len`, in length-then-lex order.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len())
            .map(|v| self.stationary(v))
            .collect();
        let mut frontier = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        next.push(Path {
                            source: p.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
            next.sort_by(|a, b| a.cmp_order(b));
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    pub fn emit_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{v}\";");
        }
        for a in &self.arrows {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[a.source], self.vertices[a.target], a.name
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A path in a quiver; the empty arrow sequence is the stationary path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_stationary(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Length-then-lex: shorter first; stationary paths by vertex; otherwise
    /// by arrow index sequence.
    pub fn cmp_order(&self, other: &Path) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

/// Diagram-order concatenation; `None` marks the zero product.
pub fn compose_paths(p: &Path, q: &Path) -> Option<Path> {
    if p.target != q.source {
        return None;
    }
    let mut arrows = p.arrows.clone();
    arrows.extend_from_slice(&q.arrows);
    Some(Path {
        source: p.source,
        target: q.target,
        arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ex1() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a1".into(), "1".into(), "2".into()),
                ("a2".into(), "2".into(), "4".into()),
                ("a3".into(), "1".into(), "3".into()),
                ("a4".into(), "3".into(), "4".into()),
            ],
        )
        .unwrap()
    }

    fn loop_quiver() -> Quiver {
        Quiver::new(vec!["1".into()], vec![("a".into(), "1".into(), "1".into())]).unwrap()
    }

    #[test]
    fn compose_basic() {
        let q = ex1();
        let a1 = q.arrow_path(0);
        let a2 = q.arrow_path(1);
        let c = compose_paths(&a1, &a2).unwrap();
        assert_eq!(c.arrows, vec![0, 1]);
        assert_eq!((c.source, c.target), (0, 3));
        // stationary path is a left identity
        assert_eq!(compose_paths(&q.stationary(0), &a1).unwrap(), a1);
        // endpoint mismatch is the zero marker
        let a4 = q.arrow_path(3);
        assert!(compose_paths(&a2, &a4).is_none());
    }

    #[test]
    fn enumerate_counts() {
        let q = ex1();
        let ps = q.enumerate_paths(2);
        // e_1..e_4, a1..a4, a1a2, a3a4
        assert_eq!(ps.len(), 10);
        assert_eq!(q.enumerate_paths(0).len(), 4);

        let l = loop_quiver();
        assert_eq!(l.enumerate_paths(4).len(), 5);
    }

    #[test]
    fn enumerate_matches_adjacency_power() {
        let q = ex1();
        for max_len in 0..4 {
            // sum over k<=L of entries of Adj^k
            let n = q.vertices.len();
            let mut adj = vec![vec![0usize; n]; n];
            for a in &q.arrows {
                adj[a.source][a.target] += 1;
            }
            let mut acc = 0;
            let mut power = vec![vec![0usize; n]; n];
            for (i, row) in power.iter_mut().enumerate() {
                row[i] = 1;
            }
            for _ in 0..=max_len {
                acc += power.iter().flatten().sum::<usize>();
                let mut next = vec![vec![0usize; n]; n];
                for i in 0..n {
                    for k in 0..n {
                        for j in 0..n {
                            next[i][j] += power[i][k] * adj[k][j];
                        }
                    }
                }
                power = next;
            }
            assert_eq!(q.enumerate_paths(max_len).len(), acc);
        }
    }

    #[test]
    fn dot_output() {
        let q = ex1();
        let dot = q.emit_dot();
        assert!(dot.starts_with("digraph quiver {"));
        assert_eq!(dot.matches("->").count(), 4);

        let empty = Quiver::new(vec![], vec![]).unwrap();
        assert_eq!(empty.emit_dot(), "digraph quiver {\n}\n");

        let l = loop_quiver();
        assert!(l.emit_dot().contains("\"1\" -> \"1\""));
    }

    proptest! {
        #[test]
        fn compose_associative(i in 0usize..10, j in 0usize..10, k in 0usize..10) {
            let q = ex1();
            let ps = q.enumerate_paths(2);
            let (p, r, s) = (&ps[i], &ps[j], &ps[k]);
            let left = compose_paths(p, r).and_then(|pr| compose_paths(&pr, s));
            let right = compose_paths(r, s).and_then(|rs| compose_paths(p, &rs));
            prop_assert_eq!(left, right);
        }
    }
}
