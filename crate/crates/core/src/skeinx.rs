//! Two-level skein invariants H[R], D[T], K[Q].
//!
//! Mixed crossings are resolved with the level-one skein relation in `z`; once every mixed
//! crossing is met first along its over-strand the diagram is a stack of unlinked knots and
//! is valued with the classical invariant in `w`, times E^{1−k} and the loop value.

use std::collections::HashMap;

use thiserror::Error;

use crate::classic::{base_reg, loop_value, Base};
use crate::diagram::{DiagramError, Edge, LinkDiagram, Smoothing, Template};
use crate::poly::{GaussianInt, LaurentPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("recursion limit of {0} skein branches exceeded")]
    RecursionLimit(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Debug)]
pub struct SkeinConfig {
    /// Level-one variable.
    pub z_var: Var,
    /// Variable of the classical invariant valuing the terminal stacks.
    pub w_var: Var,
    /// Walk order; `None` means ascending edge labels.
    pub template: Option<Template>,
    pub recursion_limit: usize,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { z_var: Var::Z, w_var: Var::W, template: None, recursion_limit: 50_000_000 }
    }
}

impl SkeinConfig {
    pub fn with_template(template: Template) -> Self {
        SkeinConfig { template: Some(template), ..Default::default() }
    }
}

/// Edge ranks for a walk: template position, unknown edges after all known ones.
pub(crate) struct Ranks(HashMap<Edge, u64>);

impl Ranks {
    pub(crate) fn new(d: &LinkDiagram, t: Option<&Template>) -> Result<Ranks, DiagramError> {
        let t = match t {
            Some(t) => Template::new(d, t.edge_order.clone())?,
            None => Template::ascending(d),
        };
        Ok(Ranks(t.ranks().into_iter().map(|(e, r)| (e, r as u64)).collect()))
    }

    pub(crate) fn of(&self, e: Edge) -> u64 {
        self.0.get(&e).copied().unwrap_or(u64::MAX / 2 + e as u64)
    }
}

/// Components in template order, each rotated to start at its lowest-ranked edge.
pub(crate) fn ordered_cycles(d: &LinkDiagram, ranks: &Ranks) -> Vec<Vec<Edge>> {
    let mut cycles: Vec<Vec<Edge>> = d
        .cycles()
        .into_iter()
        .map(|mut c| {
            let k = (0..c.len()).min_by_key(|&i| ranks.of(c[i])).unwrap();
            c.rotate_left(k);
            c
        })
        .collect();
    cycles.sort_by_key(|c| ranks.of(c[0]));
    cycles
}

/// The first mixed crossing reached along its under-strand, as a crossing index.
pub(crate) fn first_mixed_under(d: &LinkDiagram, ranks: &Ranks) -> Option<usize> {
    let cycles = ordered_cycles(d, ranks);
    let mut comp = HashMap::new();
    for (i, c) in cycles.iter().enumerate() {
        for &e in c {
            comp.insert(e, i);
        }
    }
    let ends = d.ends();
    let mut seen = vec![false; d.crossing_count()];
    for c in &cycles {
        for e in c {
            let (ci, s) = ends[e].1;
            if seen[ci] {
                continue;
            }
            seen[ci] = true;
            let x = &d.crossings()[ci];
            if s == 0 && comp[&x.edges[0]] != comp[&x.edges[1]] {
                return Some(ci);
            }
        }
    }
    None
}

/// Value of a terminal stack: E^{1−k}·loop^{k−1}·∏ base(Kᵢ, w).
pub fn stack_value(base: Base, d: &LinkDiagram, w: Var) -> LaurentPoly {
    let parts = d.split_components();
    let k = parts.len();
    let mut out = LaurentPoly::mono(Var::E, 1 - k as i32) * loop_value(base, w).pow(k.saturating_sub(1) as u32);
    for p in &parts {
        out = out * base_reg(base, p, w);
    }
    out
}

struct Run<'a> {
    base: Base,
    cfg: &'a SkeinConfig,
    ranks: Ranks,
    budget: usize,
}

impl Run<'_> {
    fn go(&mut self, d: &LinkDiagram) -> Result<LaurentPoly, SkeinError> {
        if self.budget == 0 {
            return Err(SkeinError::RecursionLimit(self.cfg.recursion_limit));
        }
        self.budget -= 1;
        let Some(i) = first_mixed_under(d, &self.ranks) else {
            return Ok(stack_value(self.base, d, self.cfg.w_var));
        };
        let x = &d.crossings()[i];
        let id = x.id;
        let z = LaurentPoly::var(self.cfg.z_var);
        let switched = self.go(&d.switch_crossing(id)?)?;
        let rank = |e: Edge| self.ranks.of(e);
        Ok(match self.base {
            Base::Homflypt => {
                let s = d.smooth_oriented_by(id, &rank)?;
                let eps = GaussianInt::int(x.sign as i64);
                switched + (z * self.go(&s)?).scale(eps)
            }
            Base::Dubrovnik => {
                let a = d.smooth_unoriented_by(id, Smoothing::A, &rank)?;
                let b = d.smooth_unoriented_by(id, Smoothing::B, &rank)?;
                switched + z * (self.go(&a)? - self.go(&b)?)
            }
            Base::Kauffman => {
                let a = d.smooth_unoriented_by(id, Smoothing::A, &rank)?;
                let b = d.smooth_unoriented_by(id, Smoothing::B, &rank)?;
                -switched + z * (self.go(&a)? + self.go(&b)?)
            }
        })
    }
}

pub fn two_level(base: Base, d: &LinkDiagram, cfg: &SkeinConfig) -> Result<LaurentPoly, SkeinError> {
    let ranks = Ranks::new(d, cfg.template.as_ref())?;
    Run { base, cfg, ranks, budget: cfg.recursion_limit }.go(d)
}

/// H[R]: mixed crossings obey H(L₊) − H(L₋) = z·H(L₀).
pub fn hr(d: &LinkDiagram, cfg: &SkeinConfig) -> Result<LaurentPoly, SkeinError> {
    two_level(Base::Homflypt, d, cfg)
}

/// D[T]: mixed crossings obey D(L₊) − D(L₋) = z·(D(L₀) − D(L∞)).
pub fn dt(d: &LinkDiagram, cfg: &SkeinConfig) -> Result<LaurentPoly, SkeinError> {
    two_level(Base::Dubrovnik, d, cfg)
}

/// K[Q]: mixed crossings obey K(L₊) + K(L₋) = z·(K(L₀) + K(L∞)).
pub fn kq(d: &LinkDiagram, cfg: &SkeinConfig) -> Result<LaurentPoly, SkeinError> {
    two_level(Base::Kauffman, d, cfg)
}

/// Ambient normalization a^{−wr}·p.
pub fn ambient_normalize(p: &LaurentPoly, wr: i64) -> LaurentPoly {
    LaurentPoly::mono(Var::A, -wr as i32) * p
}

/// Bindings turning a two-level value into its image at w = z, E = Ê = E·z/w, used by the
/// topological-equivalence identity hr(z, w, a, E) = (z/w)^{n−1}·hr(w, w, a, Ê).
pub fn topological_bindings() -> Vec<(Var, LaurentPoly)> {
    vec![
        (Var::Z, LaurentPoly::var(Var::W)),
        (Var::E, LaurentPoly::var(Var::E) * LaurentPoly::var(Var::Z) * LaurentPoly::mono(Var::W, -1)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::{dubrovnik_reg, homflypt_reg, kauffman_reg, LoopValue};
    use crate::poly::lp;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const HOPF: &str = "PD[X(1,3,2,4), X(3,1,4,2)] loops=0";

    fn cfg() -> SkeinConfig {
        SkeinConfig::default()
    }

    #[test]
    fn unlinks() {
        let l = LoopValue::new(Var::W);
        for r in 1..=4u32 {
            let u = LinkDiagram::unlink(r);
            let e = LaurentPoly::mono(Var::E, 1 - r as i32);
            assert_eq!(hr(&u, &cfg()).unwrap(), &e * &l.eta.pow(r - 1));
            assert_eq!(dt(&u, &cfg()).unwrap(), &e * &l.delta.pow(r - 1));
            assert_eq!(kq(&u, &cfg()).unwrap(), &e * &l.gamma.pow(r - 1));
        }
    }

    #[test]
    fn hopf_value() {
        let h: LinkDiagram = HOPF.parse().unwrap();
        let v = hr(&h, &cfg()).unwrap();
        assert_eq!(v, lp("a*z + a*w^-1*E^-1 - a^-1*w^-1*E^-1"));
        assert_eq!(v.to_string(), "a*z + a*w^-1*E^-1 - a^-1*w^-1*E^-1");
        assert_eq!(ambient_normalize(&v, 2), lp("a^-1*z + a^-1*w^-1*E^-1 - a^-3*w^-1*E^-1"));
    }

    #[test]
    fn knots_reduce_to_classical() {
        let t: LinkDiagram = "PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)] loops=0".parse().unwrap();
        assert_eq!(hr(&t, &cfg()).unwrap(), homflypt_reg(&t, Var::W));
        assert_eq!(dt(&t, &cfg()).unwrap(), dubrovnik_reg(&t, Var::W));
        assert_eq!(kq(&t, &cfg()).unwrap(), kauffman_reg(&t, Var::W));
    }

    #[test]
    fn recursion_limit_is_reported() {
        let h: LinkDiagram = HOPF.parse().unwrap();
        let c = SkeinConfig { recursion_limit: 1, ..cfg() };
        assert_eq!(hr(&h, &c), Err(SkeinError::RecursionLimit(1)));
    }

    fn collapse(p: &LaurentPoly) -> LaurentPoly {
        p.substitute(&[(Var::E, LaurentPoly::one()), (Var::W, LaurentPoly::var(Var::Z))]).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn template_independence(seed in 0u64..5_000, tseed in 0u64..1_000) {
            let d = LinkDiagram::random(seed, 7, 2..=3);
            let mut rng = ChaCha8Rng::seed_from_u64(tseed);
            let t = Template::random(&d, &mut rng);
            let c = SkeinConfig::with_template(t);
            prop_assert_eq!(hr(&d, &cfg()).unwrap(), hr(&d, &c).unwrap());
            prop_assert_eq!(dt(&d, &cfg()).unwrap(), dt(&d, &c).unwrap());
            prop_assert_eq!(kq(&d, &cfg()).unwrap(), kq(&d, &c).unwrap());
        }

        #[test]
        fn collapse_to_classical(seed in 0u64..5_000) {
            let d = LinkDiagram::random(seed, 7, 2..=3);
            prop_assert_eq!(collapse(&hr(&d, &cfg()).unwrap()), homflypt_reg(&d, Var::Z));
            prop_assert_eq!(collapse(&dt(&d, &cfg()).unwrap()), dubrovnik_reg(&d, Var::Z));
            prop_assert_eq!(collapse(&kq(&d, &cfg()).unwrap()), kauffman_reg(&d, Var::Z));
        }

        #[test]
        fn regular_isotopy(seed in 0u64..5_000, moves in 1usize..4) {
            let d = LinkDiagram::random(seed, 6, 2..=3);
            let e = d.apply_random_regular_isotopy(seed, moves);
            prop_assert_eq!(hr(&d, &cfg()).unwrap(), hr(&e, &cfg()).unwrap());
            prop_assert_eq!(dt(&d, &cfg()).unwrap(), dt(&e, &cfg()).unwrap());
            prop_assert_eq!(kq(&d, &cfg()).unwrap(), kq(&e, &cfg()).unwrap());
        }
    }
}
