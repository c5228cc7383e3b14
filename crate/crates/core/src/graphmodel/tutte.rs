use crate::error::{Error, Result};
use crate::qalgebra::{BiLaurentPoly, Var};

pub const TUTTE_MAX_EDGES: usize = 14;

/// Unweighted multigraph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleMultigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleMultigraph {
    fn components_ignoring(&self, skip: Option<usize>) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut comps = self.n;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }

    pub fn is_bridge(&self, i: usize) -> bool {
        let (a, b) = self.edges[i];
        a != b && self.components_ignoring(Some(i)) > self.components_ignoring(None)
    }

    pub fn delete(&self, i: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(i);
        SimpleMultigraph { n: self.n, edges }
    }

    /// Contracts edge `i`, merging its second endpoint into its first.
    pub fn contract(&self, i: usize) -> Self {
        let (a, b) = self.edges[i];
        let relabel = |v: usize| {
            let v = if v == b { a } else { v };
            if v > b {
                v - 1
            } else {
                v
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, &(x, y))| (relabel(x), relabel(y)))
            .collect();
        SimpleMultigraph {
            n: self.n - 1,
            edges,
        }
    }
}

/// Tutte polynomial in `(x, y)` by deletion and contraction.
pub fn tutte_polynomial(g: &SimpleMultigraph) -> Result<BiLaurentPoly> {
    if g.edges.len() > TUTTE_MAX_EDGES {
        return Err(Error::Capacity {
            what: "Tutte polynomial edge count".into(),
            limit: TUTTE_MAX_EDGES,
            actual: g.edges.len(),
        });
    }
    Ok(tutte_rec(g))
}

fn tutte_rec(g: &SimpleMultigraph) -> BiLaurentPoly {
    let vars = (Var::X, Var::Y);
    let mut bridges = 0;
    let mut loops = 0;
    for i in 0..g.edges.len() {
        let (a, b) = g.edges[i];
        if a == b {
            loops += 1;
        } else if g.is_bridge(i) {
            bridges += 1;
        } else {
            return &tutte_rec(&g.delete(i)) + &tutte_rec(&g.contract(i));
        }
    }
    BiLaurentPoly::monomial(vars, bridges, loops, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(terms: &[((i32, i32), i64)]) -> BiLaurentPoly {
        BiLaurentPoly::from_terms((Var::X, Var::Y), terms.iter().copied())
    }

    #[test]
    fn base_cases() {
        let edge = SimpleMultigraph {
            n: 2,
            edges: vec![(0, 1)],
        };
        assert_eq!(tutte_polynomial(&edge).unwrap(), xy(&[((1, 0), 1)]));
        let lp = SimpleMultigraph {
            n: 1,
            edges: vec![(0, 0)],
        };
        assert_eq!(tutte_polynomial(&lp).unwrap(), xy(&[((0, 1), 1)]));
    }

    #[test]
    fn triangle() {
        let tri = SimpleMultigraph {
            n: 3,
            edges: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert_eq!(
            tutte_polynomial(&tri).unwrap(),
            xy(&[((2, 0), 1), ((1, 0), 1), ((0, 1), 1)])
        );
    }

    #[test]
    fn size_guard() {
        let big = SimpleMultigraph {
            n: 2,
            edges: vec![(0, 1); 15],
        };
        assert!(matches!(
            tutte_polynomial(&big),
            Err(Error::Capacity { .. })
        ));
    }
}
