//! Quivers (finite directed multigraphs) and paths.
//!
//! Composition convention, used verbatim everywhere in this crate: the product
//! `p * q` of two paths means **first `q`, then `p`** (right-to-left, like
//! function composition). Concretely a path is stored as the sequence of its
//! arrows in *application order* — `[first, ..., last]` — so the product
//! `p * q` is the concatenation `[q..., p...]`, defined when
//! `source(p) == target(q)`.

use std::fmt;

/// An arrow of a quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    /// Display name, e.g. `a3` or `b1`.
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with vertices `0..num_vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub num_vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(num_vertices: usize) -> Self {
        Quiver {
            num_vertices,
            arrows: Vec::new(),
        }
    }

    /// Add an arrow and return its id.
    pub fn add_arrow(&mut self, name: impl Into<String>, source: usize, target: usize) -> usize {
        assert!(source < self.num_vertices && target < self.num_vertices);
        self.arrows.push(Arrow {
            name: name.into(),
            source,
            target,
        });
        self.arrows.len() - 1
    }

    /// All composable arrow sequences of length `len` (in application order),
    /// returned as `(source_vertex, arrow_ids)`.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        if len == 0 {
            return (0..self.num_vertices).map(Path::lazy_idempotent).collect();
        }
        let mut paths: Vec<Path> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(id, a)| Path {
                source: a.source,
                arrows: vec![id as u32],
            })
            .collect();
        for _ in 1..len {
            let mut next = Vec::new();
            for p in &paths {
                let tip = self.arrows[*p.arrows.last().unwrap() as usize].target;
                for (id, a) in self.arrows.iter().enumerate() {
                    if a.source == tip {
                        let mut arrows = p.arrows.clone();
                        arrows.push(id as u32);
                        next.push(Path {
                            source: p.source,
                            arrows,
                        });
                    }
                }
            }
            paths = next;
        }
        paths
    }

    pub fn path_target(&self, p: &Path) -> usize {
        match p.arrows.last() {
            None => p.source,
            Some(&a) => self.arrows[a as usize].target,
        }
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", p.source);
        }
        // Right-to-left product order: last-applied arrow printed first.
        p.arrows
            .iter()
            .rev()
            .map(|&a| self.arrows[a as usize].name.clone())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A path: its source vertex plus arrow ids in application order.
/// The empty arrow list encodes the length-zero path (idempotent) at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<u32>,
}

impl Path {
    fn lazy_idempotent(v: usize) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    /// The length-zero path at vertex `v`.
    pub fn idempotent(v: usize) -> Self {
        Self::lazy_idempotent(v)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self * other` = first `other`, then `self`.
    /// Caller must ensure `other`'s target equals `self.source`.
    pub fn compose_after(&self, other: &Path) -> Path {
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Path {
            source: other.source,
            arrows,
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e{}", self.source)
        } else {
            write!(
                f,
                "{}",
                self.arrows
                    .iter()
                    .rev()
                    .map(|a| format!("#{a}"))
                    .collect::<Vec<_>>()
                    .join("*")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_enumeration_on_a_two_cycle() {
        // 0 <-> 1 with u: 0 -> 1 and d: 1 -> 0.
        let mut q = Quiver::new(2);
        let u = q.add_arrow("u", 0, 1);
        let d = q.add_arrow("d", 1, 0);
        assert_eq!(q.paths_of_length(0).len(), 2);
        assert_eq!(q.paths_of_length(1).len(), 2);
        // length 2: u then d (loop at 0), d then u (loop at 1)
        let p2 = q.paths_of_length(2);
        assert_eq!(p2.len(), 2);
        assert!(p2.contains(&Path {
            source: 0,
            arrows: vec![u as u32, d as u32]
        }));
        assert!(p2.contains(&Path {
            source: 1,
            arrows: vec![d as u32, u as u32]
        }));
    }

    #[test]
    fn composition_is_right_to_left() {
        // p: 1 -> 0 applied after q: 0 -> 1 gives a loop at 0.
        let mut q = Quiver::new(2);
        let up = q.add_arrow("u", 0, 1);
        let down = q.add_arrow("d", 1, 0);
        let p_up = Path {
            source: 0,
            arrows: vec![up as u32],
        };
        let p_down = Path {
            source: 1,
            arrows: vec![down as u32],
        };
        let loop0 = p_down.compose_after(&p_up);
        assert_eq!(loop0.source, 0);
        assert_eq!(q.path_target(&loop0), 0);
        assert_eq!(loop0.arrows, vec![up as u32, down as u32]);
    }
}
