//! Skein template state sum.
//!
//! One walk over the diagram, directed by a template: at a mixed crossing first reached on
//! its under-strand the state branches into "switch and circle" (weight 1) and "smooth and
//! dot" (weight ±z, the sign of the crossing). The walk continues through smoothings along
//! the new strand and, when it closes up, restarts at the lowest-ranked unused edge.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::classic::{curly_bracket, homflypt_amb, Base};
use crate::diagram::{Edge, LinkDiagram, Template};
use crate::poly::{GaussianInt, LaurentPoly, Var};
use crate::skeinx::{stack_value, Ranks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decoration {
    Circled,
    DotPositive,
    DotNegative,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkeinState {
    /// The terminal stack, decorations stripped.
    pub base: LinkDiagram,
    /// Crossing ids of the input diagram in the order they were decorated.
    pub sites: Vec<(u32, Decoration)>,
    pub weight: LaurentPoly,
}

struct Walk<'a> {
    ranks: &'a Ranks,
    out: Vec<SkeinState>,
}

#[derive(Clone)]
struct Partial {
    d: LinkDiagram,
    visited: HashSet<Edge>,
    seen: HashSet<u32>,
    sites: Vec<(u32, Decoration)>,
    /// Edge currently being traversed, already marked visited.
    cur: Option<Edge>,
}

impl Walk<'_> {
    fn restart(&self, p: &mut Partial) -> bool {
        let next = p
            .d
            .edge_labels()
            .into_iter()
            .filter(|e| !p.visited.contains(e))
            .min_by_key(|&e| self.ranks.of(e));
        match next {
            Some(e) => {
                p.visited.insert(e);
                p.cur = Some(e);
                true
            }
            None => false,
        }
    }

    fn run(&mut self, mut p: Partial) {
        loop {
            let Some(cur) = p.cur else {
                if !self.restart(&mut p) {
                    self.finish(p);
                    return;
                }
                continue;
            };
            let ends = p.d.ends();
            let Some(&(_, (ci, slot))) = ends.get(&cur) else {
                // the edge closed into a free loop
                p.cur = None;
                continue;
            };
            let x = p.d.crossings()[ci].clone();
            let mut slot = slot;
            if p.seen.insert(x.id) {
                let comp = p.d.component_of_edge();
                let mixed = comp[&x.edges[0]] != comp[&x.edges[1]];
                if mixed && slot == 0 {
                    // smoothing branch
                    let mut q = p.clone();
                    let rank = |e: Edge| self.ranks.of(e);
                    q.d = p.d.smooth_oriented_by(x.id, &rank).unwrap();
                    let dec = if x.sign > 0 { Decoration::DotPositive } else { Decoration::DotNegative };
                    q.sites.push((x.id, dec));
                    let out = x.edges[4 - x.over_in_slot()];
                    let rep = if rank(out) < rank(cur) { out } else { cur };
                    q.visited.insert(rep);
                    q.cur = Some(rep);
                    self.run(q);
                    // switching branch: continue through the crossing, now on the over-strand
                    p.d = p.d.switch_crossing(x.id).unwrap();
                    p.sites.push((x.id, Decoration::Circled));
                    let c = &p.d.crossings()[ci];
                    slot = (0..4).find(|&s| c.edges[s] == cur && c.is_incoming(s)).unwrap();
                } else if mixed {
                    p.sites.push((x.id, Decoration::Circled));
                }
            }
            let next = p.d.crossings()[ci].edges[(slot + 2) % 4];
            if p.visited.insert(next) {
                p.cur = Some(next);
            } else {
                p.cur = None;
            }
        }
    }

    fn finish(&mut self, p: Partial) {
        let mut weight = LaurentPoly::one();
        for (_, dec) in &p.sites {
            let s = match dec {
                Decoration::Circled => continue,
                Decoration::DotPositive => 1,
                Decoration::DotNegative => -1,
            };
            weight = weight * LaurentPoly::var(Var::Z).scale(GaussianInt::int(s));
        }
        self.out.push(SkeinState { base: p.d, sites: p.sites, weight });
    }
}

/// The states admitted by the template walk.
pub fn enumerate_states(d: &LinkDiagram, template: Option<&Template>) -> Vec<SkeinState> {
    let ranks = Ranks::new(d, template).expect("template must cover the diagram");
    let mut w = Walk { ranks: &ranks, out: vec![] };
    w.run(Partial { d: d.clone(), visited: HashSet::new(), seen: HashSet::new(), sites: vec![], cur: None });
    w.out
}

/// Every choice of circling or dot-smoothing the mixed crossings, ignoring the walk. Most of
/// these states do not occur in the state sum.
pub fn enumerate_raw_states(d: &LinkDiagram) -> Vec<SkeinState> {
    let comps = d.strand_components();
    let mixed: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].0 != comps[i].1).collect();
    let mut out = vec![];
    for mask in 0u64..(1 << mixed.len()) {
        let mut e = d.clone();
        let mut sites = vec![];
        let mut weight = LaurentPoly::one();
        for (b, &i) in mixed.iter().enumerate() {
            let x = &d.crossings()[i];
            if mask & (1 << b) != 0 {
                e = e.smooth_oriented(x.id).unwrap();
                let dec = if x.sign > 0 { Decoration::DotPositive } else { Decoration::DotNegative };
                sites.push((x.id, dec));
                weight = weight * LaurentPoly::var(Var::Z).scale(GaussianInt::int(x.sign as i64));
            } else {
                sites.push((x.id, Decoration::Circled));
            }
        }
        out.push(SkeinState { base: e, sites, weight });
    }
    out
}

/// [L|S]: the product of the site weights.
pub fn state_weight(s: &SkeinState) -> LaurentPoly {
    s.weight.clone()
}

/// [R|S] = E^{1−k}·η^{k−1}·∏ R(Kᵢ, w) over the knots of the stack.
pub fn state_r_eval(s: &SkeinState) -> LaurentPoly {
    stack_value(Base::Homflypt, &s.base, Var::W)
}

/// Z[R](L) = Σ_S [L|S]·[R|S].
pub fn z_sum(d: &LinkDiagram, template: Option<&Template>) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for s in enumerate_states(d, template) {
        out += &(state_weight(&s) * state_r_eval(&s));
    }
    out
}

/// Σ_S [L|S]·E^{1−k}·{S}, with {S} the curly bracket state sum of the whole stack.
pub fn double_state_sum(d: &LinkDiagram, template: Option<&Template>) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for s in enumerate_states(d, template) {
        let k = s.base.component_count() as i32;
        out += &(state_weight(&s) * LaurentPoly::mono(Var::E, 1 - k) * curly_bracket(&s.base));
    }
    out
}

/// One line per state: `weight=<poly> components=<k> knots=[...]`. Knots matching a named
/// diagram up to relabeling are shown by name.
pub fn debug_dump(d: &LinkDiagram, template: Option<&Template>, names: &[(String, LinkDiagram)]) -> String {
    // Knots are named by exact diagram first, then by ambient Homflypt value (first catalog
    // entry wins, so curled unknot diagrams read as "unknot").
    let singles: Vec<(&str, &LinkDiagram)> = names
        .iter()
        .filter(|(_, k)| k.component_count() == 1)
        .map(|(n, k)| (n.as_str(), k))
        .collect();
    let exact: HashMap<Vec<i32>, &str> = singles.iter().rev().map(|(n, k)| (k.canonical_code(), *n)).collect();
    let by_p: Vec<(LaurentPoly, &str)> = singles.iter().map(|(n, k)| (homflypt_amb(k), *n)).collect();
    let name = |k: &LinkDiagram| -> String {
        if k.crossing_count() == 0 {
            return "unknot".to_string();
        }
        if let Some(n) = exact.get(&k.canonical_code()) {
            return n.to_string();
        }
        let p = homflypt_amb(k);
        match by_p.iter().find(|(q, _)| *q == p) {
            Some((_, n)) => n.to_string(),
            None => k.to_string(),
        }
    };
    let mut out = String::new();
    for s in enumerate_states(d, template) {
        let knots: Vec<String> = s.base.split_components().iter().map(name).collect();
        let _ = writeln!(
            out,
            "weight={} components={} knots=[{}]",
            s.weight,
            s.base.component_count(),
            knots.join(", ")
        );
    }
    out
}
