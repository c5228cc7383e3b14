use num_bigint::BigInt;
use rayon::prelude::*;

use super::{BracketStats, EngineConfig};
use crate::diagram::{smoothing_pairs, LinkDiagram, Smoothing, Topology};
use crate::error::{Error, Result};
use crate::qalgebra::{loop_value, LaurentPoly, Var};

/// Union-find with undo, for depth-first state enumeration.
struct RollbackUf {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
    components: usize,
}

impl RollbackUf {
    fn new(n: usize) -> Self {
        RollbackUf {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
            components: n,
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return;
        }
        if self.size[ra] > self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[ra] = rb;
        self.size[rb] += self.size[ra];
        self.components -= 1;
        self.history.push(Some((ra, rb)));
    }

    fn undo(&mut self) {
        if let Some((ra, rb)) = self.history.pop().unwrap() {
            self.parent[ra] = ra;
            self.size[rb] -= self.size[ra];
            self.components += 1;
        }
    }
}

/// `hist[b][k]` counts states with `b` B-smoothings and `k` circles from the arcs.
type Histogram = Vec<Vec<u64>>;

fn enumerate(topo: &Topology, uf: &mut RollbackUf, x: usize, b: usize, hist: &mut Histogram) {
    if x == topo.slot_arc.len() {
        hist[b][uf.components] += 1;
        return;
    }
    for (s, db) in [(Smoothing::A, 0), (Smoothing::B, 1)] {
        let [(p, q), (r, t)] = smoothing_pairs(s);
        uf.union(topo.slot_arc[x][p], topo.slot_arc[x][q]);
        uf.union(topo.slot_arc[x][r], topo.slot_arc[x][t]);
        enumerate(topo, uf, x + 1, b + db, hist);
        uf.undo();
        uf.undo();
    }
}

/// Sum over all `2^c` states, sharded over the smoothings of the first few crossings.
pub fn bracket_bruteforce_with_stats(
    d: &LinkDiagram,
    cfg: &EngineConfig,
) -> Result<(LaurentPoly, BracketStats)> {
    let c = d.num_crossings();
    if c > cfg.brute_max_crossings {
        return Err(Error::Capacity {
            what: "crossings for brute-force bracket".into(),
            limit: cfg.brute_max_crossings,
            actual: c,
        });
    }
    let topo = d.topo();
    let n_arcs = topo.num_arcs();
    let shard_bits = c.min(6);
    let empty: Histogram = vec![vec![0; n_arcs + 1]; c + 1];
    let hist = (0u64..1 << shard_bits)
        .into_par_iter()
        .map(|prefix| {
            let mut hist = empty.clone();
            let mut uf = RollbackUf::new(n_arcs);
            let mut b = 0;
            for x in 0..shard_bits {
                let s = if prefix >> x & 1 == 1 {
                    Smoothing::B
                } else {
                    Smoothing::A
                };
                b += usize::from(s == Smoothing::B);
                for (p, q) in smoothing_pairs(s) {
                    uf.union(topo.slot_arc[x][p], topo.slot_arc[x][q]);
                }
            }
            enumerate(&topo, &mut uf, shard_bits, b, &mut hist);
            hist
        })
        .reduce(
            || empty.clone(),
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            },
        );
    let free = d.free_loops() as usize;
    let delta = loop_value();
    let mut powers = vec![LaurentPoly::one(Var::A)];
    for k in 1..=n_arcs + free {
        powers.push(&powers[k - 1] * &delta);
    }
    let mut out = LaurentPoly::zero(Var::A);
    for (b, row) in hist.iter().enumerate() {
        for (k, &count) in row.iter().enumerate() {
            if count > 0 {
                let term = powers[k + free].shift(c as i32 - 2 * b as i32);
                out += &term.scale(&BigInt::from(count));
            }
        }
    }
    let stats = BracketStats {
        engine: "brute".into(),
        crossings: c,
        states_evaluated: 1u64 << c,
        max_width: None,
        coefficient_type: None,
    };
    Ok((out, stats))
}

pub fn bracket_bruteforce(d: &LinkDiagram, cfg: &EngineConfig) -> Result<LaurentPoly> {
    bracket_bruteforce_with_stats(d, cfg).map(|(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn loops_and_empty() {
        let delta = loop_value();
        assert_eq!(
            bracket_bruteforce(&LinkDiagram::unknot(), &cfg()).unwrap(),
            delta
        );
        assert_eq!(
            bracket_bruteforce(&LinkDiagram::unlink(2), &cfg()).unwrap(),
            &delta * &delta
        );
        assert_eq!(
            bracket_bruteforce(&LinkDiagram::empty(), &cfg()).unwrap(),
            LaurentPoly::one(Var::A)
        );
    }

    #[test]
    fn kink_factor() {
        // a positive curl multiplies the bracket by -A^3
        let d = LinkDiagram::parse_pd("Xp[1,1,2,2]").unwrap();
        let want = loop_value().scale(&BigInt::from(-1)).shift(3);
        assert_eq!(bracket_bruteforce(&d, &cfg()).unwrap(), want);
    }

    #[test]
    fn cap_is_enforced() {
        let d = LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap();
        let small = EngineConfig {
            brute_max_crossings: 2,
            ..EngineConfig::default()
        };
        assert_eq!(
            bracket_bruteforce(&d, &small).unwrap_err().kind(),
            "capacity"
        );
    }
}
