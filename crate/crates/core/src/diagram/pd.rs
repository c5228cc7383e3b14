use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One crossing: arc labels counterclockwise, starting at the incoming under-strand.
///
/// The under-strand runs from slot 0 to slot 2. A positive crossing has its over-strand
/// running from slot 3 to slot 1, a negative one from slot 1 to slot 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: Sign,
    pub arcs: [u32; 4],
}

impl Crossing {
    pub fn slot_incoming(&self, s: usize) -> bool {
        match s {
            0 => true,
            2 => false,
            1 => self.sign == Sign::Neg,
            _ => self.sign == Sign::Pos,
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.arcs;
        match self.sign {
            Sign::Pos => Crossing {
                sign: Sign::Neg,
                arcs: [d, a, b, c],
            },
            Sign::Neg => Crossing {
                sign: Sign::Pos,
                arcs: [b, c, d, a],
            },
        }
    }
}

/// Slot position inside a diagram: (crossing index, slot 0..4).
pub type SlotPos = (usize, usize);

/// Dense view of a diagram's arcs, shared by the state-sum and map algorithms.
#[derive(Clone, Debug)]
pub struct Topology {
    /// Dense arc index per slot.
    pub slot_arc: Vec<[usize; 4]>,
    /// The two slot positions of each dense arc.
    pub arc_ends: Vec<[SlotPos; 2]>,
    /// Original label of each dense arc, ascending.
    pub labels: Vec<u32>,
}

impl Topology {
    pub fn from_raw(raw: &[[u32; 4]]) -> Result<Topology> {
        let mut ends: BTreeMap<u32, Vec<SlotPos>> = BTreeMap::new();
        for (x, arcs) in raw.iter().enumerate() {
            for (s, &lab) in arcs.iter().enumerate() {
                ends.entry(lab).or_default().push((x, s));
            }
        }
        let mut labels = Vec::with_capacity(ends.len());
        let mut arc_ends = Vec::with_capacity(ends.len());
        let mut dense: HashMap<u32, usize> = HashMap::with_capacity(ends.len());
        for (lab, e) in ends {
            if e.len() != 2 {
                return Err(Error::Structural(format!(
                    "arc label {lab} appears {} times, expected 2",
                    e.len()
                )));
            }
            dense.insert(lab, labels.len());
            labels.push(lab);
            arc_ends.push([e[0], e[1]]);
        }
        let slot_arc = raw.iter().map(|arcs| arcs.map(|l| dense[&l])).collect();
        Ok(Topology {
            slot_arc,
            arc_ends,
            labels,
        })
    }

    pub fn num_arcs(&self) -> usize {
        self.labels.len()
    }

    /// The slot position at the other end of the arc leaving `p`.
    pub fn across(&self, p: SlotPos) -> SlotPos {
        let a = self.slot_arc[p.0][p.1];
        let [e0, e1] = self.arc_ends[a];
        if e0 == p {
            e1
        } else {
            e0
        }
    }

    /// Faces of the 4-valent map. Each face is listed as its corners `(x, k)`, the corner
    /// at crossing `x` between slots `k` and `k + 1`.
    pub fn faces(&self) -> Vec<Vec<SlotPos>> {
        let n = self.slot_arc.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for x in 0..n {
            for k in 0..4 {
                if seen[x][k] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut cx, mut ck) = (x, k);
                while !seen[cx][ck] {
                    seen[cx][ck] = true;
                    face.push((cx, ck));
                    let (y, l) = self.across((cx, (ck + 1) % 4));
                    cx = y;
                    ck = l;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Connected components of the 4-valent map as sorted crossing lists.
    pub fn map_components(&self) -> Vec<Vec<usize>> {
        let n = self.slot_arc.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for s in 0..4 {
                    let (y, _) = self.across((x, s));
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Euler check `V - E + F = 2` on every connected component.
    pub fn is_planar(&self) -> bool {
        let comps = self.map_components();
        let mut comp_of = vec![0; self.slot_arc.len()];
        for (i, c) in comps.iter().enumerate() {
            for &x in c {
                comp_of[x] = i;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for f in self.faces() {
            face_count[comp_of[f[0].0]] += 1;
        }
        comps
            .iter()
            .zip(face_count)
            .all(|(c, f)| f as i64 - c.len() as i64 == 2)
    }
}

/// An oriented link diagram in PD form, plus crossingless unknotted components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    #[serde(default)]
    free_loops: u32,
    #[serde(default)]
    twist_reduced: bool,
}

impl LinkDiagram {
    /// Checks arc pairing, orientation consistency and planarity.
    pub fn new(crossings: Vec<Crossing>, free_loops: u32) -> Result<LinkDiagram> {
        let d = LinkDiagram {
            crossings,
            free_loops,
            twist_reduced: false,
        };
        d.check()?;
        Ok(d)
    }

    pub fn empty() -> LinkDiagram {
        LinkDiagram {
            crossings: Vec::new(),
            free_loops: 0,
            twist_reduced: false,
        }
    }

    pub fn unknot() -> LinkDiagram {
        Self::unlink(1)
    }

    pub fn unlink(k: u32) -> LinkDiagram {
        LinkDiagram {
            crossings: Vec::new(),
            free_loops: k,
            twist_reduced: false,
        }
    }

    fn check(&self) -> Result<()> {
        let topo = self.topology()?;
        for (a, ends) in topo.arc_ends.iter().enumerate() {
            let ins = ends
                .iter()
                .filter(|&&(x, s)| self.crossings[x].slot_incoming(s))
                .count();
            if ins != 1 {
                return Err(Error::Structural(format!(
                    "arc {} is not oriented consistently",
                    topo.labels[a]
                )));
            }
        }
        if !topo.is_planar() {
            return Err(Error::Structural(
                "diagram fails the Euler planarity check".into(),
            ));
        }
        Ok(())
    }

    /// Orients an unoriented diagram, given as crossings whose slots 0 and 2 carry the
    /// under-strand, using the canonical rule; components listed in `flip` are reversed.
    pub fn from_unoriented(
        raw: &[[u32; 4]],
        free_loops: u32,
        flip: &[usize],
    ) -> Result<LinkDiagram> {
        let topo = Topology::from_raw(raw)?;
        let heads = canonical_heads(raw, &topo, flip);
        let crossings = raw
            .iter()
            .enumerate()
            .map(|(x, arcs)| {
                let incoming = |s: usize| heads[topo.slot_arc[x][s]] == (x, s);
                let rot = if incoming(0) { 0 } else { 2 };
                let arcs = [0, 1, 2, 3].map(|k| arcs[(k + rot) % 4]);
                let sign = if incoming((3 + rot) % 4) {
                    Sign::Pos
                } else {
                    Sign::Neg
                };
                Crossing { sign, arcs }
            })
            .collect();
        let d = LinkDiagram {
            crossings,
            free_loops,
            twist_reduced: false,
        };
        if !topo.is_planar() {
            return Err(Error::Structural(
                "diagram fails the Euler planarity check".into(),
            ));
        }
        Ok(d)
    }

    /// Re-orients with the canonical rule, reversing the listed components.
    pub fn reoriented(&self, flip: &[usize]) -> Result<LinkDiagram> {
        let mut d = Self::from_unoriented(&self.raw(), self.free_loops, flip)?;
        d.twist_reduced = self.twist_reduced;
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn twist_reduced(&self) -> bool {
        self.twist_reduced
    }

    pub fn with_twist_reduced(mut self, flag: bool) -> Self {
        self.twist_reduced = flag;
        self
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.free_loops == 0
    }

    /// Crossings with slots 0 and 2 on the under-strand, orientation forgotten.
    pub fn raw(&self) -> Vec<[u32; 4]> {
        self.crossings.iter().map(|c| c.arcs).collect()
    }

    pub fn topology(&self) -> Result<Topology> {
        Topology::from_raw(&self.raw())
    }

    pub fn topo(&self) -> Topology {
        self.topology().expect("validated diagram")
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.crossings
            .iter()
            .filter(|c| c.sign == Sign::Pos)
            .count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossings
            .iter()
            .filter(|c| c.sign == Sign::Neg)
            .count()
    }

    /// Oriented components, each as its arc labels in travel order, ordered by lowest label.
    /// Free loops are not included.
    pub fn component_arcs(&self) -> Vec<Vec<u32>> {
        let mut next: HashMap<u32, u32> = HashMap::new();
        for c in &self.crossings {
            next.insert(c.arcs[0], c.arcs[2]);
            if c.sign == Sign::Pos {
                next.insert(c.arcs[3], c.arcs[1]);
            } else {
                next.insert(c.arcs[1], c.arcs[3]);
            }
        }
        let mut labels: Vec<u32> = next.keys().copied().collect();
        labels.sort_unstable();
        let mut seen = std::collections::HashSet::new();
        let mut comps = Vec::new();
        for l in labels {
            if seen.contains(&l) {
                continue;
            }
            let mut comp = Vec::new();
            let mut a = l;
            while seen.insert(a) {
                comp.push(a);
                a = next[&a];
            }
            comps.push(comp);
        }
        comps
    }

    /// Number of link components, free loops included.
    pub fn num_components(&self) -> usize {
        self.component_arcs().len() + self.free_loops as usize
    }

    /// Component index of every arc label.
    pub fn arc_component(&self) -> HashMap<u32, usize> {
        let mut out = HashMap::new();
        for (i, comp) in self.component_arcs().into_iter().enumerate() {
            for a in comp {
                out.insert(a, i);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_loops <= 1;
        }
        self.free_loops == 0 && self.topo().map_components().len() == 1
    }

    pub fn mirror(&self) -> LinkDiagram {
        LinkDiagram {
            crossings: self.crossings.iter().map(Crossing::switched).collect(),
            free_loops: self.free_loops,
            twist_reduced: self.twist_reduced,
        }
    }

    /// Renumbers arcs `1..` along each component in travel order.
    pub fn relabeled(&self) -> LinkDiagram {
        let topo = self.topo();
        let comps = self.component_arcs();
        let tail_pos = |lab: u32| -> SlotPos {
            let a = topo.labels.binary_search(&lab).unwrap();
            let [e0, e1] = topo.arc_ends[a];
            if self.crossings[e0.0].slot_incoming(e0.1) {
                e1
            } else {
                e0
            }
        };
        let mut new_label: HashMap<u32, u32> = HashMap::new();
        let mut next = 1;
        for comp in comps {
            let start = if comp.len() == 2 {
                if tail_pos(comp[0]) <= tail_pos(comp[1]) {
                    0
                } else {
                    1
                }
            } else {
                0
            };
            for k in 0..comp.len() {
                new_label.insert(comp[(start + k) % comp.len()], next);
                next += 1;
            }
        }
        LinkDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing {
                    sign: c.sign,
                    arcs: c.arcs.map(|a| new_label[&a]),
                })
                .collect(),
            free_loops: self.free_loops,
            twist_reduced: self.twist_reduced,
        }
    }

    pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
        let mut crossings = Vec::new();
        let mut free_loops = 0;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line == "O" {
                free_loops += 1;
                continue;
            }
            let err = || Error::Parse(format!("line {}: cannot parse {line:?}", lineno + 1));
            let sign = if line.starts_with("Xp[") {
                Sign::Pos
            } else if line.starts_with("Xn[") {
                Sign::Neg
            } else {
                return Err(err());
            };
            let inner = line[3..].strip_suffix(']').ok_or_else(err)?;
            let nums: Vec<u32> = inner
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err())?;
            let arcs: [u32; 4] = nums.try_into().map_err(|_| err())?;
            crossings.push(Crossing { sign, arcs });
        }
        LinkDiagram::new(crossings, free_loops)
    }

    pub fn to_pd(&self) -> String {
        let mut s = String::new();
        for c in &self.crossings {
            let tag = if c.sign == Sign::Pos { "Xp" } else { "Xn" };
            let [a, b, cc, d] = c.arcs;
            s.push_str(&format!("{tag}[{a},{b},{cc},{d}]\n"));
        }
        for _ in 0..self.free_loops {
            s.push_str("O\n");
        }
        s
    }

    pub fn from_json_str(s: &str) -> Result<LinkDiagram> {
        let raw: LinkDiagram = serde_json::from_str(s)?;
        let d = LinkDiagram::new(raw.crossings, raw.free_loops)?;
        Ok(d.with_twist_reduced(raw.twist_reduced))
    }

    /// Reads PD text, or the JSON form when the file starts with `{`.
    pub fn from_file(path: &Path) -> Result<LinkDiagram> {
        let text = std::fs::read_to_string(path)?;
        if text.trim_start().starts_with('{') {
            Self::from_json_str(&text)
        } else {
            Self::parse_pd(&text)
        }
    }

    /// Isomorphism-invariant code of the unoriented diagram on the oriented sphere.
    pub fn canonical_code(&self) -> Vec<u32> {
        canonical_code(&self.raw(), self.free_loops)
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd())
    }
}

/// Head slot position of every dense arc under the canonical orientation rule.
///
/// For each component take its lowest arc label `a`. Orient `a` so that the arc following it
/// has the smaller label of its two neighbours; when both neighbours coincide, `a` leaves the
/// endpoint with the smaller crossing index (then slot).
pub(crate) fn canonical_heads(raw: &[[u32; 4]], topo: &Topology, flip: &[usize]) -> Vec<SlotPos> {
    let n_arcs = topo.num_arcs();
    let mut head: Vec<Option<SlotPos>> = vec![None; n_arcs];
    let mut comp_index = 0;
    for a in 0..n_arcs {
        if head[a].is_some() {
            continue;
        }
        let ends = topo.arc_ends[a];
        let succ = |p: SlotPos| raw[p.0][(p.1 + 2) % 4];
        let (s0, s1) = (succ(ends[0]), succ(ends[1]));
        let mut h = if s0 != s1 {
            if s0 < s1 {
                0
            } else {
                1
            }
        } else if ends[0] <= ends[1] {
            1
        } else {
            0
        };
        if flip.contains(&comp_index) {
            h = 1 - h;
        }
        comp_index += 1;
        let mut cur = a;
        let mut cur_head = ends[h];
        while head[cur].is_none() {
            head[cur] = Some(cur_head);
            let out = (cur_head.0, (cur_head.1 + 2) % 4);
            cur = topo.slot_arc[out.0][out.1];
            cur_head = topo.across(out);
        }
    }
    head.into_iter().map(|h| h.unwrap()).collect()
}

/// Lexicographically least breadth-first code over all starting crossings and the two
/// under-slot rotations, per connected component; components sorted; free loops appended.
pub fn canonical_code(raw: &[[u32; 4]], free_loops: u32) -> Vec<u32> {
    let topo = match Topology::from_raw(raw) {
        Ok(t) => t,
        Err(_) => return Vec::new(),
    };
    let mut codes: Vec<Vec<u32>> = topo
        .map_components()
        .iter()
        .map(|members| {
            let mut best: Option<Vec<u32>> = None;
            for &x in members {
                for rot in [0, 2] {
                    let code = bfs_code(&topo, x, rot, members.len(), best.as_deref());
                    if let Some(code) = code {
                        best = Some(code);
                    }
                }
            }
            best.unwrap()
        })
        .collect();
    codes.sort();
    let mut out = Vec::new();
    for c in codes {
        out.push(c.len() as u32);
        out.extend(c);
    }
    out.push(u32::MAX);
    out.push(free_loops);
    out
}

/// Code from one start; returns `None` as soon as it is known to exceed `bound`.
fn bfs_code(
    topo: &Topology,
    start: usize,
    rot: usize,
    size: usize,
    bound: Option<&[u32]>,
) -> Option<Vec<u32>> {
    let mut rot_of: HashMap<usize, usize> = HashMap::with_capacity(size);
    let mut label: HashMap<usize, u32> = HashMap::with_capacity(2 * size);
    let mut queue = VecDeque::from([start]);
    rot_of.insert(start, rot);
    let mut code = Vec::with_capacity(4 * size);
    let mut tight = bound.is_some();
    while let Some(x) = queue.pop_front() {
        let r = rot_of[&x];
        for k in 0..4 {
            let s = (k + r) % 4;
            let a = topo.slot_arc[x][s];
            let next = label.len() as u32;
            let l = *label.entry(a).or_insert(next);
            if tight {
                let b = bound.unwrap()[code.len()];
                if l > b {
                    return None;
                }
                if l < b {
                    tight = false;
                }
            }
            code.push(l);
            let (y, t) = topo.across((x, s));
            rot_of.entry(y).or_insert_with(|| {
                queue.push_back(y);
                if t < 2 {
                    0
                } else {
                    2
                }
            });
        }
    }
    if tight {
        // equal to the bound: no improvement
        return None;
    }
    Some(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> LinkDiagram {
        LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap()
    }

    #[test]
    fn parse_and_print_roundtrip() {
        let d = trefoil();
        assert_eq!(LinkDiagram::parse_pd(&d.to_pd()).unwrap(), d);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.num_components(), 1);
    }

    #[test]
    fn orientation_mismatch_is_rejected() {
        assert!(LinkDiagram::parse_pd("Xn[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").is_err());
        assert!(LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\n").is_err());
    }

    #[test]
    fn kinks_parse() {
        let p = LinkDiagram::parse_pd("Xp[1,1,2,2]").unwrap();
        assert_eq!(p.writhe(), 1);
        let n = LinkDiagram::parse_pd("Xn[1,2,2,1]").unwrap();
        assert_eq!(n.writhe(), -1);
    }

    #[test]
    fn mirror_negates_writhe() {
        let d = trefoil();
        let m = d.mirror();
        assert_eq!(m.writhe(), -3);
        assert!(LinkDiagram::new(m.crossings().to_vec(), 0).is_ok());
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn reorientation_is_stable() {
        let d = trefoil();
        let r = d.reoriented(&[]).unwrap();
        assert_eq!(r.reoriented(&[]).unwrap(), r);
        let rl = r.relabeled();
        assert_eq!(rl.reoriented(&[]).unwrap(), rl);
        assert_eq!(rl.canonical_code(), d.canonical_code());
    }

    #[test]
    fn canonical_code_ignores_labels_and_order() {
        let d = trefoil();
        let shuffled =
            LinkDiagram::parse_pd("Xp[50,30,60,20]\nXp[10,50,20,40]\nXp[30,10,40,60]\n").unwrap();
        assert_eq!(d.canonical_code(), shuffled.canonical_code());
        assert_ne!(d.canonical_code(), d.mirror().canonical_code());
    }
}
