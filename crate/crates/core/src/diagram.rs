//! Signed PD-code link diagrams.
//!
//! A crossing lists its four edges counterclockwise starting at the incoming under-edge, so
//! slot 0 is the incoming and slot 2 the outgoing under-strand. The over-strand runs 3 → 1 on
//! a positive crossing and 1 → 3 on a negative one.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Edge = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed PD code: {0}")]
    MalformedPD(String),
    #[error("inconsistent edges: {0}")]
    InconsistentEdges(String),
    #[error("no consistent orientation: {0}")]
    OrientationConflict(String),
    #[error("unknown crossing id {0}")]
    UnknownCrossing(u32),
    #[error("odd signed count of mixed crossings between components {0} and {1}")]
    OddMixedSum(usize, usize),
    #[error("invalid template: {0}")]
    InvalidTemplate(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: u32,
    pub edges: [Edge; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn over_in_slot(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let e = self.edges;
        let edges = if self.sign > 0 {
            [e[3], e[0], e[1], e[2]]
        } else {
            [e[1], e[2], e[3], e[0]]
        };
        Crossing { id: self.id, edges, sign: -self.sign }
    }
}

/// Slot pairs of the A- and B-smoothings (independent of orientation).
pub const A_PAIRS: [(usize, usize); 2] = [(0, 1), (2, 3)];
pub const B_PAIRS: [(usize, usize); 2] = [(1, 2), (3, 0)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: u32,
}

/// Where an edge label sits: (crossing index, slot).
pub type Slot = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdJson {
    pub crossings: Vec<[Edge; 4]>,
    pub loops: u32,
}

/// Total order on the edges of a diagram, directing skein walks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub edge_order: Vec<Edge>,
}

impl Template {
    pub fn ascending(d: &LinkDiagram) -> Template {
        Template { edge_order: d.edge_labels() }
    }

    pub fn new(d: &LinkDiagram, edge_order: Vec<Edge>) -> Result<Template, DiagramError> {
        let mut a = edge_order.clone();
        a.sort_unstable();
        if a != d.edge_labels() {
            return Err(DiagramError::InvalidTemplate(
                "template must list every edge exactly once".into(),
            ));
        }
        Ok(Template { edge_order })
    }

    pub fn parse(d: &LinkDiagram, s: &str) -> Result<Template, DiagramError> {
        let order = s
            .split(',')
            .map(|x| x.trim().parse::<Edge>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| DiagramError::InvalidTemplate(e.to_string()))?;
        Template::new(d, order)
    }

    pub fn random(d: &LinkDiagram, rng: &mut impl Rng) -> Template {
        let mut order = d.edge_labels();
        order.shuffle(rng);
        Template { edge_order: order }
    }

    /// Template realizing a component order and basepoints: the basepoints come first.
    pub fn from_basepoints(d: &LinkDiagram, basepoints: &[Edge], rng: &mut impl Rng) -> Template {
        let mut rest: Vec<Edge> = d
            .edge_labels()
            .into_iter()
            .filter(|e| !basepoints.contains(e))
            .collect();
        rest.shuffle(rng);
        let mut order = basepoints.to_vec();
        order.extend(rest);
        Template { edge_order: order }
    }

    /// Rank lookup; edges missing from the template rank after all listed ones.
    pub fn ranks(&self) -> HashMap<Edge, u32> {
        self.edge_order.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect()
    }
}

fn occurrences(raw: &[[Edge; 4]]) -> HashMap<Edge, Vec<Slot>> {
    let mut occ: HashMap<Edge, Vec<Slot>> = HashMap::new();
    for (ci, e) in raw.iter().enumerate() {
        for (s, &l) in e.iter().enumerate() {
            occ.entry(l).or_default().push((ci, s));
        }
    }
    occ
}

/// One traversal of an edge cycle: entry slots in order, and the labels passed.
struct Cycle {
    passages: Vec<Slot>,
    labels: Vec<Edge>,
}

// Walk every edge cycle once, starting at its lowest label and entering that label's first
// occurrence. Requires each label to occur exactly twice.
fn raw_cycles(raw: &[[Edge; 4]], occ: &HashMap<Edge, Vec<Slot>>) -> Vec<Cycle> {
    let mut labels: Vec<Edge> = occ.keys().copied().collect();
    labels.sort_unstable();
    let mut seen: HashMap<Edge, bool> = HashMap::new();
    let mut out = Vec::new();
    for &start in &labels {
        if seen.contains_key(&start) {
            continue;
        }
        let mut cyc = Cycle { passages: vec![], labels: vec![] };
        let mut label = start;
        let mut head = occ[&start][1];
        loop {
            seen.insert(label, true);
            cyc.labels.push(label);
            cyc.passages.push(head);
            let (ci, s) = head;
            let exit = (ci, (s + 2) % 4);
            let next = raw[ci][exit.1];
            let o = &occ[&next];
            let nh = if o[0] == exit { o[1] } else { o[0] };
            if next == start && nh == occ[&start][1] {
                break;
            }
            label = next;
            head = nh;
        }
        out.push(cyc);
    }
    out
}

// Rebuild crossings from raw edges and a chosen traversal direction for every cycle.
fn assemble(raw: &[[Edge; 4]], ids: &[u32], cycles: &[Cycle], flip: &[bool]) -> Vec<Crossing> {
    let n = raw.len();
    let mut under_in = vec![usize::MAX; n];
    let mut over_in = vec![usize::MAX; n];
    for (cyc, &f) in cycles.iter().zip(flip) {
        for &(ci, s) in &cyc.passages {
            let s = if f { (s + 2) % 4 } else { s };
            if s % 2 == 0 {
                under_in[ci] = s;
            } else {
                over_in[ci] = s;
            }
        }
    }
    (0..n)
        .map(|ci| {
            let e = raw[ci];
            let (edges, o) = if under_in[ci] == 0 {
                (e, over_in[ci])
            } else {
                ([e[2], e[3], e[0], e[1]], (over_in[ci] + 2) % 4)
            };
            Crossing { id: ids[ci], edges, sign: if o == 3 { 1 } else { -1 } }
        })
        .collect()
}

fn check_two_occurrences(occ: &HashMap<Edge, Vec<Slot>>) -> Result<(), DiagramError> {
    let mut bad: Vec<_> = occ.iter().filter(|(_, v)| v.len() != 2).map(|(l, v)| (*l, v.len())).collect();
    bad.sort_unstable();
    if let Some((l, k)) = bad.first() {
        return Err(DiagramError::InconsistentEdges(format!("edge {l} occurs {k} times")));
    }
    Ok(())
}

/// Union-find over edge labels.
#[derive(Default)]
struct Merger {
    parent: HashMap<Edge, Edge>,
}

impl Merger {
    fn find(&mut self, x: Edge) -> Edge {
        let p = *self.parent.get(&x).unwrap_or(&x);
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.parent.insert(x, r);
        r
    }

    fn union(&mut self, a: Edge, b: Edge) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent.insert(ra, rb);
        }
    }
}

/// Remove crossing indices `gone`, joining the listed slot pairs of each removed crossing.
/// Returns the surviving crossings (labels merged, representative = lowest rank) and the
/// number of closed loops created.
fn reconnect(
    crossings: &[Crossing],
    gone: &[(usize, [(usize, usize); 2])],
    rank: &dyn Fn(Edge) -> u64,
) -> (Vec<Crossing>, u32) {
    let mut m = Merger::default();
    let mut touched = BTreeSet::new();
    for (ci, pairs) in gone {
        let e = crossings[*ci].edges;
        for &(p, q) in pairs {
            m.union(e[p], e[q]);
            touched.insert(e[p]);
            touched.insert(e[q]);
        }
    }
    let removed: BTreeSet<usize> = gone.iter().map(|g| g.0).collect();
    let kept: Vec<Crossing> = crossings
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, c)| c.clone())
        .collect();
    let mut classes: HashMap<Edge, Vec<Edge>> = HashMap::new();
    for &l in &touched {
        let r = m.find(l);
        classes.entry(r).or_default().push(l);
    }
    let mut live: HashMap<Edge, usize> = HashMap::new();
    for c in &kept {
        for &l in &c.edges {
            if touched.contains(&l) {
                *live.entry(m.find(l)).or_default() += 1;
            }
        }
    }
    let mut loops = 0;
    let mut rename: HashMap<Edge, Edge> = HashMap::new();
    for (r, members) in &classes {
        if !live.contains_key(r) {
            loops += 1;
            continue;
        }
        let rep = *members.iter().min_by_key(|&&l| (rank(l), l)).unwrap();
        for &l in members {
            rename.insert(l, rep);
        }
    }
    let out = kept
        .into_iter()
        .map(|mut c| {
            for l in c.edges.iter_mut() {
                if let Some(&r) = rename.get(l) {
                    *l = r;
                }
            }
            c
        })
        .collect();
    (out, loops)
}

fn default_rank(e: Edge) -> u64 {
    e as u64
}

impl LinkDiagram {
    /// Builds a diagram from already oriented crossings. Callers are trusted to supply a
    /// consistent code; use [`LinkDiagram::from_raw`] for unchecked input.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: u32) -> LinkDiagram {
        LinkDiagram { crossings, free_loops }
    }

    /// Validates raw PD quadruples and derives orientation and signs.
    pub fn from_raw(raw: &[[Edge; 4]], free_loops: u32) -> Result<LinkDiagram, DiagramError> {
        let occ = occurrences(raw);
        check_two_occurrences(&occ)?;
        let cycles = raw_cycles(raw, &occ);
        let mut flip = Vec::with_capacity(cycles.len());
        for cyc in &cycles {
            let mut want: Option<bool> = None;
            for &(_, s) in &cyc.passages {
                if s % 2 == 0 {
                    let f = s == 2;
                    if want.is_some_and(|w| w != f) {
                        return Err(DiagramError::OrientationConflict(format!(
                            "the strand through edge {} passes under in both directions",
                            cyc.labels[0]
                        )));
                    }
                    want = Some(f);
                }
            }
            let f = want.unwrap_or_else(|| {
                // Only over-passages: orient so labels increase along the strand.
                let (ci, s) = cyc.passages[0];
                let (j, l) = (raw[ci][1] as i64, raw[ci][3] as i64);
                let three_to_one = j - l == 1 || l - j > 1;
                (s == 3) != three_to_one
            });
            flip.push(f);
        }
        let ids: Vec<u32> = (0..raw.len() as u32).collect();
        let crossings = assemble(raw, &ids, &cycles, &flip);
        Ok(LinkDiagram { crossings, free_loops })
    }

    /// Recompute a consistent orientation for crossings whose signs may be stale (after a
    /// disoriented smoothing). Each cycle keeps the old direction of its lowest label whose
    /// two ends still agree; otherwise the traversal direction is arbitrary but fixed.
    fn reoriented(stale: Vec<Crossing>, free_loops: u32) -> LinkDiagram {
        let raw: Vec<[Edge; 4]> = stale.iter().map(|c| c.edges).collect();
        let ids: Vec<u32> = stale.iter().map(|c| c.id).collect();
        let occ = occurrences(&raw);
        let cycles = raw_cycles(&raw, &occ);
        let mut flip = Vec::with_capacity(cycles.len());
        for cyc in &cycles {
            let mut best: Option<(Edge, bool)> = None;
            for (&l, &head) in cyc.labels.iter().zip(&cyc.passages) {
                let o = &occ[&l];
                let inc: Vec<bool> = o.iter().map(|&(ci, s)| stale[ci].is_incoming(s)).collect();
                if inc[0] == inc[1] {
                    continue;
                }
                let old_head = if inc[0] { o[0] } else { o[1] };
                if best.is_none_or(|(b, _)| l < b) {
                    best = Some((l, old_head != head));
                }
            }
            flip.push(best.map(|b| b.1).unwrap_or(false));
        }
        LinkDiagram { crossings: assemble(&raw, &ids, &cycles, &flip), free_loops }
    }

    pub fn unknot() -> LinkDiagram {
        LinkDiagram { crossings: vec![], free_loops: 1 }
    }

    pub fn unlink(r: u32) -> LinkDiagram {
        LinkDiagram { crossings: vec![], free_loops: r }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn raw(&self) -> Vec<[Edge; 4]> {
        self.crossings.iter().map(|c| c.edges).collect()
    }

    pub fn index_of(&self, id: u32) -> Result<usize, DiagramError> {
        self.crossings
            .iter()
            .position(|c| c.id == id)
            .ok_or(DiagramError::UnknownCrossing(id))
    }

    pub fn crossing(&self, id: u32) -> Result<&Crossing, DiagramError> {
        Ok(&self.crossings[self.index_of(id)?])
    }

    pub fn edge_labels(&self) -> Vec<Edge> {
        let mut v: Vec<Edge> = self.crossings.iter().flat_map(|c| c.edges).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn max_label(&self) -> Edge {
        self.crossings.iter().flat_map(|c| c.edges).max().unwrap_or(0)
    }

    /// Map label → (tail slot, head slot).
    pub fn ends(&self) -> HashMap<Edge, (Slot, Slot)> {
        let mut tail = HashMap::new();
        let mut head = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (s, &l) in c.edges.iter().enumerate() {
                if c.is_incoming(s) {
                    head.insert(l, (ci, s));
                } else {
                    tail.insert(l, (ci, s));
                }
            }
        }
        head.into_iter().map(|(l, h)| (l, (tail[&l], h))).collect()
    }

    /// The edge following `e` along the orientation.
    pub fn successor(&self, e: Edge) -> Edge {
        let (_, (ci, s)) = self.ends()[&e];
        self.crossings[ci].edges[(s + 2) % 4]
    }

    /// Edge cycles in traversal order, each starting at its lowest label, sorted by that label.
    pub fn cycles(&self) -> Vec<Vec<Edge>> {
        let ends = self.ends();
        let mut labels: Vec<Edge> = ends.keys().copied().collect();
        labels.sort_unstable();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &labels {
            if seen.contains(&start) {
                continue;
            }
            let mut cyc = vec![];
            let mut e = start;
            loop {
                seen.insert(e);
                cyc.push(e);
                let (ci, s) = ends[&e].1;
                e = self.crossings[ci].edges[(s + 2) % 4];
                if e == start {
                    break;
                }
            }
            out.push(cyc);
        }
        out
    }

    /// Number of components: edge cycles plus free loops.
    pub fn component_count(&self) -> usize {
        self.cycles().len() + self.free_loops as usize
    }

    pub fn component_of_edge(&self) -> HashMap<Edge, usize> {
        let mut m = HashMap::new();
        for (i, cyc) in self.cycles().iter().enumerate() {
            for &e in cyc {
                m.insert(e, i);
            }
        }
        m
    }

    /// For every crossing, the components of its (under, over) strands.
    pub fn strand_components(&self) -> Vec<(usize, usize)> {
        let comp = self.component_of_edge();
        self.crossings
            .iter()
            .map(|c| (comp[&c.edges[0]], comp[&c.edges[1]]))
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn writhe_component(&self, c: usize) -> i64 {
        self.strand_components()
            .iter()
            .zip(&self.crossings)
            .filter(|((u, o), _)| *u == c && *o == c)
            .map(|(_, x)| x.sign as i64)
            .sum()
    }

    /// Sum of crossing signs over self-crossings of all components.
    pub fn self_writhe(&self) -> i64 {
        self.strand_components()
            .iter()
            .zip(&self.crossings)
            .filter(|((u, o), _)| u == o)
            .map(|(_, x)| x.sign as i64)
            .sum()
    }

    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, DiagramError> {
        let s: i64 = self
            .strand_components()
            .iter()
            .zip(&self.crossings)
            .filter(|((u, o), _)| (*u == i && *o == j) || (*u == j && *o == i))
            .map(|(_, x)| x.sign as i64)
            .sum();
        if s % 2 != 0 {
            return Err(DiagramError::OddMixedSum(i, j));
        }
        Ok(s / 2)
    }

    pub fn is_mixed(&self, id: u32) -> Result<bool, DiagramError> {
        let i = self.index_of(id)?;
        let (u, o) = self.strand_components()[i];
        Ok(u != o)
    }

    pub fn switch_crossing(&self, id: u32) -> Result<LinkDiagram, DiagramError> {
        let i = self.index_of(id)?;
        let mut d = self.clone();
        d.crossings[i] = d.crossings[i].switched();
        Ok(d)
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> LinkDiagram {
        LinkDiagram {
            crossings: self.crossings.iter().map(|c| c.switched()).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Slot pairs of the orientation-compatible smoothing of crossing index `i`.
    pub fn oriented_pairs(&self, i: usize) -> [(usize, usize); 2] {
        if self.crossings[i].sign > 0 {
            A_PAIRS
        } else {
            B_PAIRS
        }
    }

    pub fn smooth_oriented(&self, id: u32) -> Result<LinkDiagram, DiagramError> {
        self.smooth_oriented_by(id, &default_rank)
    }

    /// Oriented smoothing; merged edges keep the label of lowest `rank`.
    pub fn smooth_oriented_by(&self, id: u32, rank: &dyn Fn(Edge) -> u64) -> Result<LinkDiagram, DiagramError> {
        let i = self.index_of(id)?;
        let (crossings, loops) = reconnect(&self.crossings, &[(i, self.oriented_pairs(i))], rank);
        Ok(LinkDiagram { crossings, free_loops: self.free_loops + loops })
    }

    pub fn smooth_unoriented(&self, id: u32, kind: Smoothing) -> Result<LinkDiagram, DiagramError> {
        self.smooth_unoriented_by(id, kind, &default_rank)
    }

    pub fn smooth_unoriented_by(
        &self,
        id: u32,
        kind: Smoothing,
        rank: &dyn Fn(Edge) -> u64,
    ) -> Result<LinkDiagram, DiagramError> {
        let i = self.index_of(id)?;
        let pairs = match kind {
            Smoothing::A => A_PAIRS,
            Smoothing::B => B_PAIRS,
        };
        let (crossings, loops) = reconnect(&self.crossings, &[(i, pairs)], rank);
        if pairs == self.oriented_pairs(i) {
            return Ok(LinkDiagram { crossings, free_loops: self.free_loops + loops });
        }
        Ok(LinkDiagram::reoriented(crossings, self.free_loops + loops))
    }

    /// Remove crossings by letting both strands pass straight through (used for RII
    /// deletions and sublink extraction).
    fn splice(&self, gone: &[usize], extra_loops: u32) -> LinkDiagram {
        let g: Vec<_> = gone.iter().map(|&i| (i, [(0, 2), (1, 3)])).collect();
        let (crossings, loops) = reconnect(&self.crossings, &g, &default_rank);
        LinkDiagram { crossings, free_loops: extra_loops + loops }
    }

    /// The sublink on the given components (indices as in [`LinkDiagram::cycles`], then
    /// free loops). Crossings touching other components are removed and the surviving
    /// strands spliced.
    pub fn sublink(&self, keep: &[usize]) -> LinkDiagram {
        let ncyc = self.cycles().len();
        let comps = self.strand_components();
        let kept = |&(u, o): &(usize, usize)| keep.contains(&u) && keep.contains(&o);
        let gone: Vec<_> = (0..comps.len())
            .filter(|&i| !kept(&comps[i]))
            .map(|i| (i, [(0, 2), (1, 3)]))
            .collect();
        let (crossings, _) = reconnect(&self.crossings, &gone, &default_rank);
        // kept components left without crossings become free loops
        let bare = (0..ncyc)
            .filter(|c| keep.contains(c))
            .filter(|&c| !comps.iter().any(|p| kept(p) && (p.0 == c || p.1 == c)))
            .count() as u32;
        let kept_loops = keep.iter().filter(|&&c| c >= ncyc).count() as u32;
        LinkDiagram { crossings, free_loops: kept_loops + bare }
    }

    /// One knot diagram per component with only its self-crossings.
    pub fn split_components(&self) -> Vec<LinkDiagram> {
        (0..self.component_count()).map(|c| self.sublink(&[c])).collect()
    }

    /// A Reidemeister I curl: (crossing index, slot s) with slots s and s+1 joined by an edge.
    pub fn find_curl(&self) -> Option<(usize, usize)> {
        self.crossings.iter().enumerate().find_map(|(i, c)| {
            (0..4).find(|&s| c.edges[s] == c.edges[(s + 1) % 4]).map(|s| (i, s))
        })
    }

    /// Undo the curl found by [`LinkDiagram::find_curl`].
    pub fn remove_curl(&self, i: usize, s: usize) -> LinkDiagram {
        let p = ((s + 2) % 4, (s + 3) % 4);
        let (crossings, loops) = reconnect(&self.crossings, &[(i, [p, p])], &default_rank);
        LinkDiagram { crossings, free_loops: self.free_loops + loops }
    }

    /// Two crossings bounding a bigon that an RII move removes.
    pub fn find_rii_bigon(&self) -> Option<[usize; 2]> {
        self.rii_deletions(&self.faces()).into_iter().next()
    }

    /// Remove crossings, letting both strands of each pass straight through.
    pub fn splice_out(&self, idx: &[usize]) -> LinkDiagram {
        self.splice(idx, self.free_loops)
    }

    /// Label- and id-independent code of a connected diagram: the lexicographically least
    /// serialization over all starting edges of a traversal relabeling.
    pub fn canonical_code(&self) -> Vec<i32> {
        let n = self.crossings.len();
        let maxl = self.max_label() as usize;
        let mut head = vec![(usize::MAX, 0usize); maxl + 1];
        for (ci, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                if c.is_incoming(s) {
                    head[c.edges[s] as usize] = (ci, s);
                }
            }
        }
        let mut best: Option<Vec<i32>> = None;
        let mut newlab = vec![0i32; maxl + 1];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        for start in self.edge_labels() {
            newlab.iter_mut().for_each(|x| *x = 0);
            seen.iter_mut().for_each(|x| *x = false);
            order.clear();
            queue.clear();
            queue.push_back(start);
            let mut next = 1;
            while let Some(s0) = queue.pop_front() {
                if newlab[s0 as usize] != 0 {
                    continue;
                }
                let mut e = s0;
                loop {
                    newlab[e as usize] = next;
                    next += 1;
                    let (ci, slot) = head[e as usize];
                    let c = &self.crossings[ci];
                    if !seen[ci] {
                        seen[ci] = true;
                        order.push(ci);
                    }
                    let other_out = if slot % 2 == 0 { 4 - c.over_in_slot() } else { 2 };
                    queue.push_back(c.edges[other_out]);
                    e = c.edges[(slot + 2) % 4];
                    if newlab[e as usize] != 0 {
                        break;
                    }
                }
            }
            let mut code = Vec::with_capacity(5 * n);
            for &ci in &order {
                let c = &self.crossings[ci];
                code.push(c.sign as i32);
                code.extend(c.edges.iter().map(|&e| newlab[e as usize]));
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    /// Crossing indices grouped into connected pieces of the diagram.
    pub fn piece_indices(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut first: HashMap<Edge, usize> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for &l in &c.edges {
                if let Some(&j) = first.get(&l) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                } else {
                    first.insert(l, i);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![];
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            let g = *slot.entry(r).or_insert_with(|| {
                groups.push(vec![]);
                groups.len() - 1
            });
            groups[g].push(i);
        }
        groups
    }

    /// Connected pieces with crossings, each without free loops. Free loops are not included.
    pub fn pieces(&self) -> Vec<LinkDiagram> {
        self.piece_indices()
            .into_iter()
            .map(|g| LinkDiagram {
                crossings: g.into_iter().map(|i| self.crossings[i].clone()).collect(),
                free_loops: 0,
            })
            .collect()
    }

    /// Reverse the orientation of the listed components.
    pub fn reverse_components(&self, which: &[usize]) -> LinkDiagram {
        let raw = self.raw();
        let ids: Vec<u32> = self.crossings.iter().map(|c| c.id).collect();
        let occ = occurrences(&raw);
        let cycles = raw_cycles(&raw, &occ);
        let comp = self.component_of_edge();
        let flip: Vec<bool> = cycles
            .iter()
            .map(|cyc| {
                let (ci, s) = cyc.passages[0];
                let along = self.crossings[ci].is_incoming(s);
                along == which.contains(&comp[&cyc.labels[0]])
            })
            .collect();
        LinkDiagram { crossings: assemble(&raw, &ids, &cycles, &flip), free_loops: self.free_loops }
    }

    /// Relabel edges 1..=2n along the components (in component order), crossing ids 0..n.
    pub fn normalized(&self) -> LinkDiagram {
        let mut map = HashMap::new();
        let mut next = 1;
        for cyc in self.cycles() {
            for e in cyc {
                map.insert(e, next);
                next += 1;
            }
        }
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(i, c)| Crossing { id: i as u32, edges: c.edges.map(|e| map[&e]), sign: c.sign })
            .collect();
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// Insert a curl of the given sign on edge `e`. `side` picks one of the two planar
    /// placements.
    pub fn add_curl(&self, e: Edge, sign: i8, side: bool) -> LinkDiagram {
        let ends = self.ends();
        let (_, head) = ends[&e];
        let base = self.max_label();
        let (loop_e, out_e) = (base + 1, base + 2);
        let mut crossings = self.crossings.clone();
        // e now ends at the new crossing; out_e continues to the old head
        crossings[head.0].edges[head.1] = out_e;
        let id = crossings.iter().map(|c| c.id + 1).max().unwrap_or(0);
        let edges = match (sign > 0, side) {
            (true, false) => [loop_e, loop_e, out_e, e],
            (true, true) => [e, out_e, loop_e, loop_e],
            (false, false) => [loop_e, e, out_e, loop_e],
            (false, true) => [e, loop_e, loop_e, out_e],
        };
        crossings.push(Crossing { id, edges, sign: sign.signum() });
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// Faces of the planar map as lists of darts; a dart (ci, s) leaves crossing ci through
    /// slot s and the face lies on its left.
    pub fn faces(&self) -> Vec<Vec<Slot>> {
        let raw = self.raw();
        let occ = occurrences(&raw);
        let other = |d: Slot| -> Slot {
            let o = &occ[&raw[d.0][d.1]];
            if o[0] == d {
                o[1]
            } else {
                o[0]
            }
        };
        let mut used = BTreeSet::new();
        let mut faces = Vec::new();
        for ci in 0..raw.len() {
            for s in 0..4 {
                if used.contains(&(ci, s)) {
                    continue;
                }
                let mut f = vec![];
                let mut d = (ci, s);
                while used.insert(d) {
                    f.push(d);
                    let (c2, s2) = other(d);
                    d = (c2, (s2 + 3) % 4);
                }
                faces.push(f);
            }
        }
        faces
    }

    fn other_end(&self, d: Slot) -> Slot {
        let l = self.crossings[d.0].edges[d.1];
        for (ci, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                if c.edges[s] == l && (ci, s) != d {
                    return (ci, s);
                }
            }
        }
        unreachable!("edge {l} occurs once")
    }

    /// RII: push the edge of dart `d1` across the face over (or under) the edge of `d2`.
    fn rii_insert(&self, d1: Slot, d2: Slot, first_over: bool) -> LinkDiagram {
        let e1 = self.crossings[d1.0].edges[d1.1];
        let e2 = self.crossings[d2.0].edges[d2.1];
        let q1 = self.other_end(d1);
        let q2 = self.other_end(d2);
        let fwd1 = !self.crossings[d1.0].is_incoming(d1.1);
        let fwd2 = !self.crossings[d2.0].is_incoming(d2.1);
        let b = self.max_label();
        let (f, e1q, m, e2q) = (b + 1, b + 2, b + 3, b + 4);
        let mut crossings = self.crossings.clone();
        crossings[q1.0].edges[q1.1] = e1q;
        crossings[q2.0].edges[q2.1] = e2q;
        // arms east, north, west, south; strand 1 runs south-north, strand 2 east-west
        // (label, incoming)
        let xa = [(m, fwd2), (f, !fwd1), (e2q, !fwd2), (e1, fwd1)];
        let xb = [(e2, fwd2), (f, fwd1), (m, !fwd2), (e1q, !fwd1)];
        let id0 = crossings.iter().map(|c| c.id + 1).max().unwrap_or(0);
        for (k, arms) in [xa, xb].into_iter().enumerate() {
            let rot = if first_over { 0 } else { 1 };
            let mut a = [arms[rot], arms[(rot + 1) % 4], arms[(rot + 2) % 4], arms[(rot + 3) % 4]];
            if !a[0].1 {
                a = [a[2], a[3], a[0], a[1]];
            }
            let sign = if a[3].1 { 1 } else { -1 };
            crossings.push(Crossing { id: id0 + k as u32, edges: a.map(|x| x.0), sign });
        }
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// Candidate RII deletions: pairs of crossing indices bounding a removable bigon.
    fn rii_deletions(&self, faces: &[Vec<Slot>]) -> Vec<[usize; 2]> {
        let mut out = vec![];
        for f in faces.iter().filter(|f| f.len() == 2) {
            let (c1, s1) = f[0];
            let (c2, t) = f[1];
            if c1 == c2 {
                continue;
            }
            // f[0] arrives at c2 in slot t+1, f[1] leaves c2 from slot t
            let t1 = (t + 1) % 4;
            if s1 % 2 == t1 % 2 {
                out.push([c1, c2]);
            }
        }
        out
    }

    /// Candidate RIII moves: triangular faces that are not cyclically woven.
    fn riii_candidates(&self, faces: &[Vec<Slot>]) -> Vec<[Slot; 3]> {
        let mut out = vec![];
        for f in faces.iter().filter(|f| f.len() == 3) {
            let cs = [f[0].0, f[1].0, f[2].0];
            if cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2] {
                continue;
            }
            let arms = self.triangle_arms(f);
            let mut labels: Vec<Edge> = vec![];
            for (side, outer) in &arms {
                labels.push(side.0);
                labels.push(outer[0].0);
                labels.push(outer[1].0);
            }
            let mut l2 = labels.clone();
            l2.sort_unstable();
            l2.dedup();
            if l2.len() != 9 {
                continue;
            }
            let woven = arms.iter().all(|(side, _)| side.1 != side.2);
            if !woven {
                out.push([f[0], f[1], f[2]]);
            }
        }
        out
    }

    // For each triangle side: (label, over at its first crossing, over at its second), and
    // the outer (label, slot) at the first and second crossings of that side.
    #[allow(clippy::type_complexity)]
    fn triangle_arms(&self, f: &[Slot]) -> Vec<((Edge, bool, bool), [(Edge, Slot); 2])> {
        (0..3)
            .map(|k| {
                let (c1, s1) = f[k];
                let (c2, s2) = self.other_end(f[k]);
                let side = self.crossings[c1].edges[s1];
                let o1 = (c1, (s1 + 2) % 4);
                let o2 = (c2, (s2 + 2) % 4);
                (
                    (side, s1 % 2 == 1, s2 % 2 == 1),
                    [
                        (self.crossings[o1.0].edges[o1.1], o1),
                        (self.crossings[o2.0].edges[o2.1], o2),
                    ],
                )
            })
            .collect()
    }

    fn riii_apply(&self, f: &[Slot; 3]) -> LinkDiagram {
        let mut crossings = self.crossings.clone();
        for &slot in f {
            let (c1, s1) = slot;
            let (c2, s2) = self.other_end(slot);
            let side = self.crossings[c1].edges[s1];
            let o1 = self.crossings[c1].edges[(s1 + 2) % 4];
            let o2 = self.crossings[c2].edges[(s2 + 2) % 4];
            crossings[c1].edges[s1] = o2;
            crossings[c1].edges[(s1 + 2) % 4] = side;
            crossings[c2].edges[s2] = o1;
            crossings[c2].edges[(s2 + 2) % 4] = side;
        }
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// Apply `n_moves` random RII insertions/deletions and RIII moves, deterministically
    /// from `seed`. Never applies RI.
    pub fn apply_random_regular_isotopy(&self, seed: u64, n_moves: usize) -> LinkDiagram {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut d = self.clone();
        for _ in 0..n_moves {
            if d.crossings.is_empty() {
                break;
            }
            let faces = d.faces();
            let dels = d.rii_deletions(&faces);
            let r3 = d.riii_candidates(&faces);
            let ins: Vec<&Vec<Slot>> = faces
                .iter()
                .filter(|f| {
                    let ls: BTreeSet<Edge> = f.iter().map(|&(c, s)| d.crossings[c].edges[s]).collect();
                    ls.len() >= 2
                })
                .collect();
            let mut kinds = vec![];
            if !ins.is_empty() {
                kinds.push(0);
            }
            if !dels.is_empty() {
                kinds.push(1);
            }
            if !r3.is_empty() {
                kinds.push(2);
            }
            let Some(&kind) = kinds.choose(&mut rng) else { break };
            d = match kind {
                0 => {
                    let f = ins[rng.gen_range(0..ins.len())];
                    let label = |x: Slot| d.crossings[x.0].edges[x.1];
                    let i = rng.gen_range(0..f.len());
                    let js: Vec<usize> = (0..f.len()).filter(|&j| label(f[j]) != label(f[i])).collect();
                    let j = js[rng.gen_range(0..js.len())];
                    d.rii_insert(f[i], f[j], rng.gen_bool(0.5))
                }
                1 => {
                    let [a, b] = dels[rng.gen_range(0..dels.len())];
                    d.splice(&[a, b], d.free_loops)
                }
                _ => d.riii_apply(&r3[rng.gen_range(0..r3.len())]),
            };
        }
        d
    }

    /// Closure of a braid word on `strands` strands; generator `k` (1-based) is σ_k and `-k`
    /// its inverse.
    pub fn braid_closure(strands: usize, word: &[i32]) -> LinkDiagram {
        let mut pos: Vec<Edge> = (1..=strands as Edge).collect();
        let mut next = strands as Edge + 1;
        let mut crossings = vec![];
        for (id, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            let (a, b) = (pos[i], pos[i + 1]);
            let (c, d) = (next, next + 1);
            next += 2;
            // a, b enter at positions i, i+1; d leaves at i, c at i+1
            let (edges, sign) = if g > 0 { ([b, c, d, a], 1) } else { ([a, b, c, d], -1) };
            crossings.push(Crossing { id: id as u32, edges, sign });
            pos[i] = d;
            pos[i + 1] = c;
        }
        let mut loops = 0;
        let mut rename = HashMap::new();
        for (p, &e) in pos.iter().enumerate() {
            let start = p as Edge + 1;
            if e == start {
                loops += 1;
            } else {
                rename.insert(e, start);
            }
        }
        for c in crossings.iter_mut() {
            for l in c.edges.iter_mut() {
                if let Some(&r) = rename.get(l) {
                    *l = r;
                }
            }
        }
        LinkDiagram { crossings, free_loops: loops }.normalized()
    }

    /// A seeded random closed-braid diagram with at most `max_crossings` crossings and a
    /// component count in `comps`, perturbed by a few RIII moves.
    pub fn random(seed: u64, max_crossings: usize, comps: std::ops::RangeInclusive<usize>) -> LinkDiagram {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let strands = rng.gen_range(2..=4usize);
            let len = rng.gen_range(2..=max_crossings);
            let word: Vec<i32> = (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..strands as i32);
                    if rng.gen_bool(0.5) {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            let d = LinkDiagram::braid_closure(strands, &word);
            if d.free_loops > 0 || !comps.contains(&d.component_count()) {
                continue;
            }
            let faces = d.faces();
            let r3 = d.riii_candidates(&faces);
            if let Some(f) = r3.choose(&mut rng) {
                return d.riii_apply(f);
            }
            return d;
        }
    }

    pub fn to_json(&self) -> PdJson {
        PdJson { crossings: self.raw(), loops: self.free_loops }
    }

    pub fn from_json(j: &PdJson) -> Result<LinkDiagram, DiagramError> {
        LinkDiagram::from_raw(&j.crossings, j.loops)
    }

    pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
        text.parse()
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self
            .crossings
            .iter()
            .map(|c| format!("X({},{},{},{})", c.edges[0], c.edges[1], c.edges[2], c.edges[3]))
            .collect();
        write!(f, "PD[{}] loops={}", xs.join(", "), self.free_loops)
    }
}

impl FromStr for LinkDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| DiagramError::MalformedPD(m.to_string());
        let s = s.trim();
        if s.starts_with('{') {
            let j: PdJson = serde_json::from_str(s).map_err(|e| bad(&e.to_string()))?;
            return LinkDiagram::from_json(&j);
        }
        let rest = s.strip_prefix("PD[").ok_or_else(|| bad("expected 'PD['"))?;
        let close = rest.rfind(']').ok_or_else(|| bad("missing ']'"))?;
        let (body, tail) = (&rest[..close], rest[close + 1..].trim());
        let loops = if tail.is_empty() {
            0
        } else {
            let v = tail.strip_prefix("loops=").ok_or_else(|| bad("expected 'loops=<n>'"))?;
            v.trim().parse::<u32>().map_err(|_| bad("bad loop count"))?
        };
        let mut raw = vec![];
        let mut b = body.trim();
        while !b.is_empty() {
            let r = b.strip_prefix('X').ok_or_else(|| bad("expected 'X('"))?.trim_start();
            let (open, shut) = match r.chars().next() {
                Some('(') => ('(', ')'),
                Some('[') => ('[', ']'),
                _ => return Err(bad("expected '(' after X")),
            };
            let end = r.find(shut).ok_or_else(|| bad("unterminated crossing"))?;
            let inner = &r[open.len_utf8()..end];
            let nums: Vec<Edge> = inner
                .split(',')
                .map(|x| x.trim().parse::<Edge>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad("edge labels must be positive integers"))?;
            if nums.len() != 4 || nums.contains(&0) {
                return Err(bad("a crossing needs four positive edge labels"));
            }
            raw.push([nums[0], nums[1], nums[2], nums[3]]);
            b = r[end + 1..].trim_start();
            b = b.strip_prefix(',').unwrap_or(b).trim_start();
        }
        LinkDiagram::from_raw(&raw, loops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pd(s: &str) -> LinkDiagram {
        s.parse().unwrap()
    }

    const HOPF: &str = "PD[X(1,3,2,4), X(3,1,4,2)] loops=0";
    const TREFOIL_L: &str = "PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)] loops=0";

    #[test]
    fn parse_hopf() {
        let d = pd(HOPF);
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert!(d.crossings().iter().all(|c| c.sign == 1));
        assert_eq!(d.to_string(), HOPF);
        assert_eq!(d.writhe(), 2);
        assert_eq!(d.linking_number(0, 1).unwrap(), 1);
    }

    #[test]
    fn parse_edge_cases() {
        let u = pd("PD[] loops=1");
        assert_eq!((u.crossing_count(), u.component_count(), u.writhe()), (0, 1, 0));
        assert!(matches!("PD[X(1,1,1,2)] loops=0".parse::<LinkDiagram>(), Err(DiagramError::InconsistentEdges(_))));
        assert!(matches!("PD[X(1,2,3)]".parse::<LinkDiagram>(), Err(DiagramError::MalformedPD(_))));
        assert!(matches!("PX[]".parse::<LinkDiagram>(), Err(DiagramError::MalformedPD(_))));
        // both ends of the under-strand point into the crossing
        assert!(matches!(
            "PD[X(1,3,2,4), X(1,4,2,3)] loops=0".parse::<LinkDiagram>(),
            Err(DiagramError::OrientationConflict(_))
        ));
        // a single curl is a legitimate one-crossing diagram
        let c = pd("PD[X(1,1,2,2)] loops=0");
        assert_eq!((c.component_count(), c.writhe()), (1, 1));
        assert_eq!(pd("PD[X(1,2,2,1)] loops=0").writhe(), -1);
        let j = pd(r#"{"crossings": [[1,3,2,4],[3,1,4,2]], "loops": 0}"#);
        assert_eq!(j, pd(HOPF));
    }

    #[test]
    fn writhe_and_linking() {
        assert_eq!(pd(TREFOIL_L).writhe(), -3);
        assert_eq!(pd(TREFOIL_L).mirror().writhe(), 3);
        assert_eq!(pd("PD[] loops=2").linking_number(0, 1).unwrap(), 0);
        // signed count 1 between the two strands cannot come from a planar code
        let odd = LinkDiagram::from_crossings(vec![Crossing { id: 0, edges: [1, 2, 1, 2], sign: 1 }], 0);
        assert_eq!(odd.linking_number(0, 1), Err(DiagramError::OddMixedSum(0, 1)));
    }

    #[test]
    fn switch_and_smooth_hopf() {
        let d = pd(HOPF);
        let s = d.switch_crossing(0).unwrap();
        assert_eq!(s.writhe(), 0);
        assert_eq!(s.switch_crossing(0).unwrap(), d);
        assert_eq!(s.component_count(), 2);
        let o = d.smooth_oriented(0).unwrap();
        assert_eq!((o.crossing_count(), o.component_count(), o.writhe()), (1, 1, 1));
        assert_eq!(d.switch_crossing(7), Err(DiagramError::UnknownCrossing(7)));
    }

    #[test]
    fn unoriented_smoothings_hopf() {
        let d = pd(HOPF);
        let a = d.smooth_unoriented(0, Smoothing::A).unwrap();
        assert_eq!(a, d.smooth_oriented(0).unwrap());
        assert_eq!((a.crossing_count(), a.component_count()), (1, 1));
        let ab = a.smooth_unoriented(1, Smoothing::B).unwrap();
        assert_eq!(ab.crossing_count(), 0);
        assert_eq!(ab.component_count(), 1);
        let aa = a.smooth_unoriented(1, Smoothing::A).unwrap();
        assert_eq!(aa.component_count(), 2);
    }

    #[test]
    fn split_components_of_stack() {
        let d = pd(HOPF).switch_crossing(0).unwrap();
        let parts = d.split_components();
        assert_eq!(parts.len(), 2);
        for p in parts {
            assert_eq!((p.crossing_count(), p.component_count(), p.writhe()), (0, 1, 0));
        }
        let u = pd("PD[] loops=2").split_components();
        assert_eq!(u, vec![LinkDiagram::unknot(), LinkDiagram::unknot()]);
    }

    #[test]
    fn faces_satisfy_euler() {
        let d = pd(TREFOIL_L);
        assert_eq!(d.faces().len(), d.crossing_count() + 2);
        let h = pd(HOPF);
        assert_eq!(h.faces().len(), 4);
    }

    #[test]
    fn curls() {
        let d = pd(TREFOIL_L);
        for (s, side) in [(1, false), (1, true), (-1, false), (-1, true)] {
            let c = d.add_curl(3, s, side);
            assert_eq!(c.writhe(), d.writhe() + s as i64);
            assert_eq!(c.component_count(), 1);
            assert_eq!(c.faces().len(), c.crossing_count() + 2);
        }
    }

    #[test]
    fn braid_closures() {
        let h = LinkDiagram::braid_closure(2, &[1, 1]);
        assert_eq!((h.component_count(), h.writhe()), (2, 2));
        let t = LinkDiagram::braid_closure(2, &[-1, -1, -1]);
        assert_eq!((t.component_count(), t.writhe()), (1, -3));
        assert_eq!(t.faces().len(), 5);
        let u = LinkDiagram::braid_closure(3, &[1]);
        assert_eq!(u.free_loops(), 1);
    }

    #[test]
    fn template_parsing() {
        let d = pd(HOPF);
        assert!(Template::parse(&d, "4,3,2,1").is_ok());
        assert!(Template::parse(&d, "1,2,3").is_err());
        assert!(Template::parse(&d, "1,2,x,4").is_err());
    }

    fn lk_profile(d: &LinkDiagram) -> (usize, Vec<i64>, Vec<i64>) {
        let n = d.component_count();
        let mut w: Vec<i64> = (0..n).map(|c| d.writhe_component(c)).collect();
        w.sort_unstable();
        let mut lk = vec![];
        for i in 0..n {
            for j in i + 1..n {
                lk.push(d.linking_number(i, j).unwrap());
            }
        }
        lk.sort_unstable();
        (n, w, lk)
    }

    #[test]
    fn isotopy_moves_zero() {
        let d = pd(TREFOIL_L);
        assert_eq!(d.apply_random_regular_isotopy(3, 0), d);
    }

    proptest! {
        #[test]
        fn writhe_decomposes(seed in 0u64..10_000) {
            let d = LinkDiagram::random(seed, 8, 1..=3);
            let n = d.component_count();
            let mut total: i64 = (0..n).map(|c| d.writhe_component(c)).sum();
            for i in 0..n { for j in i + 1..n { total += 2 * d.linking_number(i, j).unwrap(); } }
            prop_assert_eq!(total, d.writhe());
        }

        #[test]
        fn isotopy_preserves_profile(seed in 0u64..10_000, moves in 1usize..6) {
            let d = LinkDiagram::random(seed, 7, 1..=3);
            let e = d.apply_random_regular_isotopy(seed, moves);
            prop_assert_eq!(lk_profile(&d), lk_profile(&e));
            prop_assert_eq!(e.faces().len(), e.crossing_count() + 2 * e.piece_indices().len());
            prop_assert_eq!(LinkDiagram::from_raw(&e.raw(), e.free_loops()).unwrap().writhe(), e.writhe());
        }

        #[test]
        fn switch_is_involution_and_smoothing_shrinks(seed in 0u64..10_000, k in 0usize..8) {
            let d = LinkDiagram::random(seed, 8, 1..=3);
            let id = d.crossings()[k % d.crossing_count()].id;
            prop_assert_eq!(d.switch_crossing(id).unwrap().switch_crossing(id).unwrap(), d.clone());
            let o = d.smooth_oriented(id).unwrap();
            prop_assert_eq!(o.crossing_count() + 1, d.crossing_count());
            let mixed = d.is_mixed(id).unwrap();
            if mixed {
                prop_assert_eq!(o.component_count() + 1, d.component_count());
            }
            for kind in [Smoothing::A, Smoothing::B] {
                let u = d.smooth_unoriented(id, kind).unwrap();
                prop_assert_eq!(u.crossing_count() + 1, d.crossing_count());
                prop_assert!(LinkDiagram::from_raw(&u.raw(), u.free_loops()).is_ok());
            }
        }

        #[test]
        fn reversal_preserves_self_writhe(seed in 0u64..10_000, mask in 0u8..8) {
            let d = LinkDiagram::random(seed, 8, 2..=3);
            let which: Vec<usize> = (0..3).filter(|b| mask & (1 << b) != 0).collect();
            let r = d.reverse_components(&which);
            prop_assert_eq!(r.self_writhe(), d.self_writhe());
            prop_assert_eq!(r.reverse_components(&which), d);
        }
    }
}
