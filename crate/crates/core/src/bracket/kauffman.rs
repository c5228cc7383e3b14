use std::collections::{BTreeMap, HashMap};

use crate::diagram::{LinkDiagram, UnionFind};
use crate::error::{Error, Result};
use crate::qalgebra::{BiLaurentPoly, Var};

pub const KAUFFMAN_MAX_CROSSINGS: usize = 12;

const AZ: (Var, Var) = (Var::LowerA, Var::Z);

/// `(a + a^-1) z^-1 - 1`, the value of a split unknotted component.
fn split_loop() -> BiLaurentPoly {
    BiLaurentPoly::from_terms(AZ, [((1, -1), 1), ((-1, -1), 1), ((0, 0), -1)])
}

/// Removes the crossings in `remove`, merges arcs along `joins`, and turns arc classes that
/// no longer touch a crossing into crossingless loops.
fn rebuild(d: &LinkDiagram, remove: &[usize], joins: &[(u32, u32)]) -> Result<LinkDiagram> {
    let raw = d.raw();
    let mut ids: BTreeMap<u32, usize> = BTreeMap::new();
    for arcs in &raw {
        for &a in arcs {
            let next = ids.len();
            ids.entry(a).or_insert(next);
        }
    }
    let mut uf = UnionFind::new(ids.len());
    for &(p, q) in joins {
        uf.union(ids[&p], ids[&q]);
    }
    let mut rep: HashMap<usize, u32> = HashMap::new();
    for (&a, &i) in &ids {
        let r = uf.find(i);
        let e = rep.entry(r).or_insert(a);
        *e = (*e).min(a);
    }
    let kept: Vec<[u32; 4]> = raw
        .iter()
        .enumerate()
        .filter(|(x, _)| !remove.contains(x))
        .map(|(_, arcs)| arcs.map(|a| rep[&uf.find(ids[&a])]))
        .collect();
    let live: std::collections::BTreeSet<u32> = kept.iter().flatten().copied().collect();
    let closed = rep.values().filter(|a| !live.contains(a)).count() as u32;
    LinkDiagram::from_unoriented(&kept, d.free_loops() + closed, &[])
}

/// One Reidemeister I or II simplification, with the power of `a` it costs.
fn simplify_once(d: &LinkDiagram) -> Result<Option<(LinkDiagram, i32)>> {
    let raw = d.raw();
    for (x, arcs) in raw.iter().enumerate() {
        for k in 0..4 {
            if arcs[k] == arcs[(k + 1) % 4] {
                let loop_arc = arcs[k];
                let joins = [(arcs[(k + 2) % 4], loop_arc), (loop_arc, arcs[(k + 3) % 4])];
                let power = d.crossings()[x].sign.value() as i32;
                return Ok(Some((rebuild(d, &[x], &joins)?, power)));
            }
        }
    }
    let topo = d.topo();
    for f in topo.faces() {
        if f.len() != 2 {
            continue;
        }
        let ((x, k), (y, l)) = (f[0], f[1]);
        if x == y || (k + 1) % 2 != l % 2 {
            continue;
        }
        let at = |c: usize, s: usize| raw[c][s % 4];
        let joins = [
            (at(x, k + 3), at(x, k + 1)),
            (at(x, k + 1), at(y, l + 2)),
            (at(x, k + 2), at(x, k)),
            (at(x, k), at(y, l + 3)),
        ];
        return Ok(Some((rebuild(d, &[x, y], &joins)?, 0)));
    }
    Ok(None)
}

/// First crossing met from below when each component is walked from its lowest arc, the
/// components taken in order of lowest arc.
fn first_ascending(d: &LinkDiagram) -> Option<usize> {
    let mut head: HashMap<u32, (usize, usize)> = HashMap::new();
    for (x, c) in d.crossings().iter().enumerate() {
        for s in 0..4 {
            if c.slot_incoming(s) {
                head.insert(c.arcs[s], (x, s));
            }
        }
    }
    let mut seen = vec![false; d.num_crossings()];
    for comp in d.component_arcs() {
        for a in comp {
            let (x, s) = head[&a];
            if !seen[x] {
                seen[x] = true;
                if s % 2 == 0 {
                    return Some(x);
                }
            }
        }
    }
    None
}

fn switched_at(d: &LinkDiagram, x: usize) -> Result<LinkDiagram> {
    let mut cs = d.crossings().to_vec();
    cs[x] = cs[x].switched();
    LinkDiagram::new(cs, d.free_loops())
}

struct Solver {
    memo: HashMap<Vec<u32>, BiLaurentPoly>,
    split: BiLaurentPoly,
}

impl Solver {
    fn lambda(&mut self, d: LinkDiagram) -> Result<BiLaurentPoly> {
        let mut d = d;
        let mut power = 0;
        while let Some((next, p)) = simplify_once(&d)? {
            d = next;
            power += p;
        }
        let key = d.canonical_code();
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.shift(power, 0));
        }
        let value = match first_ascending(&d) {
            None => {
                let k = d.num_components() as u32;
                self.split
                    .pow(k.saturating_sub(1))
                    .shift(d.writhe() as i32, 0)
            }
            Some(x) => {
                let [a, b, c, e] = d.crossings()[x].arcs;
                let smooth_a = rebuild(&d, &[x], &[(a, b), (c, e)])?;
                let smooth_b = rebuild(&d, &[x], &[(a, e), (b, c)])?;
                let sum = &self.lambda(smooth_a)? + &self.lambda(smooth_b)?;
                let other = self.lambda(switched_at(&d, x)?)?;
                &sum.shift(0, 1) - &other
            }
        };
        self.memo.insert(key, value.clone());
        Ok(value.shift(power, 0))
    }
}

/// Kauffman polynomial `Λ(a, z)` of the unoriented framed diagram, with `Λ(O) = 1`, a factor
/// `a` per positive curl and `Λ(D+) + Λ(D-) = z (Λ(D0) + Λ(D∞))`.
///
/// Each step resolves the first crossing that spoils the descending order, after removing
/// curls and Reidemeister II bigons; results are memoized on canonical diagram codes.
pub fn kauffman_lambda(d: &LinkDiagram, max_crossings: usize) -> Result<BiLaurentPoly> {
    if d.num_crossings() > max_crossings {
        return Err(Error::Capacity {
            what: "crossings for the Kauffman polynomial".into(),
            limit: max_crossings,
            actual: d.num_crossings(),
        });
    }
    if d.is_empty() {
        return Ok(BiLaurentPoly::one(AZ));
    }
    let mut solver = Solver {
        memo: HashMap::new(),
        split: split_loop(),
    };
    let start = LinkDiagram::from_unoriented(&d.raw(), d.free_loops(), &[])?;
    solver.lambda(start)
}

/// Writhe-normalized form `a^-w Λ` for an oriented diagram.
pub fn kauffman_f(d: &LinkDiagram, max_crossings: usize) -> Result<BiLaurentPoly> {
    Ok(kauffman_lambda(d, max_crossings)?.shift(-(d.writhe() as i32), 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = KAUFFMAN_MAX_CROSSINGS;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap()
    }

    #[test]
    fn unknot_and_curls() {
        assert_eq!(
            kauffman_lambda(&LinkDiagram::unknot(), CAP).unwrap(),
            BiLaurentPoly::one(AZ)
        );
        let pos = LinkDiagram::parse_pd("Xp[1,1,2,2]").unwrap();
        assert_eq!(
            kauffman_lambda(&pos, CAP).unwrap(),
            BiLaurentPoly::monomial(AZ, 1, 0, 1)
        );
        let neg = LinkDiagram::parse_pd("Xn[1,2,2,1]").unwrap();
        assert_eq!(
            kauffman_lambda(&neg, CAP).unwrap(),
            BiLaurentPoly::monomial(AZ, -1, 0, 1)
        );
    }

    #[test]
    fn split_unknots() {
        let two = kauffman_lambda(&LinkDiagram::unlink(2), CAP).unwrap();
        assert_eq!(two, split_loop());
    }

    #[test]
    fn mirror_inverts_a() {
        let d = trefoil();
        let l = kauffman_lambda(&d, CAP).unwrap();
        let m = kauffman_lambda(&d.mirror(), CAP).unwrap();
        assert_eq!(m, l.invert_first());
        assert_ne!(l, m);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            kauffman_lambda(&trefoil(), 2).unwrap_err().kind(),
            "capacity"
        );
    }
}
