//! Classical invariants: regular-isotopy Homflypt R, Dubrovnik T, Kauffman Q, the bracket
//! and curly bracket, and their specializations.
//!
//! R, T and Q are evaluated by descending-diagram recursion: walk the components from their
//! basepoints, switch every crossing first reached along its under-strand, and collect the
//! smoothing terms the skein relation produces on the way.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::diagram::{LinkDiagram, Smoothing, A_PAIRS, B_PAIRS};
use crate::poly::{GaussianInt, LaurentPoly, Mono, PolyError, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Homflypt,
    Dubrovnik,
    Kauffman,
}

/// Split-union loop values in the skein variable `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct LoopValue {
    pub eta: LaurentPoly,
    pub delta: LaurentPoly,
    pub gamma: LaurentPoly,
}

impl LoopValue {
    pub fn new(v: Var) -> LoopValue {
        let a = LaurentPoly::var(Var::A);
        let ai = LaurentPoly::mono(Var::A, -1);
        let vi = LaurentPoly::mono(v, -1);
        let eta = (&a - &ai) * &vi;
        let delta = &eta + &LaurentPoly::one();
        let gamma = (&a + &ai) * &vi - LaurentPoly::one();
        LoopValue { eta, delta, gamma }
    }

    pub fn of(&self, base: Base) -> &LaurentPoly {
        match base {
            Base::Homflypt => &self.eta,
            Base::Dubrovnik => &self.delta,
            Base::Kauffman => &self.gamma,
        }
    }
}

pub fn loop_value(base: Base, v: Var) -> LaurentPoly {
    LoopValue::new(v).of(base).clone()
}

type Memo = HashMap<(Base, Var, Vec<i32>), LaurentPoly>;

thread_local! {
    static MEMO: RefCell<Memo> = RefCell::new(HashMap::new());
}

/// Drop this thread's memo table.
pub fn clear_cache() {
    MEMO.with(|m| m.borrow_mut().clear());
}

fn a_pow(e: i64) -> LaurentPoly {
    LaurentPoly::mono(Var::A, e as i32)
}

struct Eval {
    base: Base,
    v: Var,
    lp: LaurentPoly,
    vp: LaurentPoly,
}

impl Eval {
    fn new(base: Base, v: Var) -> Eval {
        Eval { base, v, lp: loop_value(base, v), vp: LaurentPoly::var(v) }
    }

    fn loops(&self, k: usize) -> LaurentPoly {
        self.lp.pow(k.saturating_sub(1) as u32)
    }

    fn eval(&self, d: &LinkDiagram) -> LaurentPoly {
        // curls and removable bigons first: both are cheap and shrink the tree
        let mut d = d.clone();
        let mut curl = 0i64;
        loop {
            if let Some((i, s)) = d.find_curl() {
                curl += d.crossings()[i].sign as i64;
                d = d.remove_curl(i, s);
            } else if let Some(pair) = d.find_rii_bigon() {
                d = d.splice_out(&pair);
            } else {
                break;
            }
        }
        let pieces = d.pieces();
        let mut out = a_pow(curl) * self.loops(pieces.len() + d.free_loops() as usize);
        for p in &pieces {
            out = out * self.piece(p);
        }
        out
    }

    fn piece(&self, d: &LinkDiagram) -> LaurentPoly {
        let key = (self.base, self.v, d.canonical_code());
        if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
            return hit;
        }
        let val = self.descend(d);
        MEMO.with(|m| m.borrow_mut().insert(key, val.clone()));
        val
    }

    fn descend(&self, d: &LinkDiagram) -> LaurentPoly {
        let bad = bad_crossings(d);
        let mut cur = d.clone();
        let mut acc = LaurentPoly::zero();
        for (j, &i) in bad.iter().enumerate() {
            let id = cur.crossings()[i].id;
            let term = match self.base {
                Base::Homflypt => {
                    let eps = cur.crossings()[i].sign as i64;
                    self.eval(&cur.smooth_oriented(id).unwrap()).scale(GaussianInt::int(eps))
                }
                Base::Dubrovnik => {
                    self.eval(&cur.smooth_unoriented(id, Smoothing::A).unwrap())
                        - self.eval(&cur.smooth_unoriented(id, Smoothing::B).unwrap())
                }
                Base::Kauffman => {
                    let t = self.eval(&cur.smooth_unoriented(id, Smoothing::A).unwrap())
                        + self.eval(&cur.smooth_unoriented(id, Smoothing::B).unwrap());
                    if j % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                }
            };
            acc += &(&self.vp * &term);
            cur = cur.switch_crossing(id).unwrap();
        }
        let mut stack = a_pow(cur.writhe()) * self.loops(cur.component_count());
        if self.base == Base::Kauffman && bad.len() % 2 == 1 {
            stack = -stack;
        }
        acc + stack
    }
}

/// Indices of crossings first reached along the under-strand when the components are walked
/// in order from their lowest edge.
pub fn bad_crossings(d: &LinkDiagram) -> Vec<usize> {
    let ends = d.ends();
    let mut seen = vec![false; d.crossing_count()];
    let mut bad = vec![];
    for cyc in d.cycles() {
        for e in cyc {
            let (ci, s) = ends[&e].1;
            if !seen[ci] {
                seen[ci] = true;
                if s == 0 {
                    bad.push(ci);
                }
            }
        }
    }
    bad
}

/// Regular-isotopy Homflypt polynomial R in (v, a): R(L₊) − R(L₋) = v·R(L₀), positive curl a.
pub fn homflypt_reg(d: &LinkDiagram, v: Var) -> LaurentPoly {
    Eval::new(Base::Homflypt, v).eval(d)
}

/// Ambient Homflypt P = a^{−wr}·R, in (z, a).
pub fn homflypt_amb(d: &LinkDiagram) -> LaurentPoly {
    a_pow(-d.writhe()) * homflypt_reg(d, Var::Z)
}

/// Regular-isotopy Dubrovnik polynomial: T(L₊) − T(L₋) = v·(T(L₀) − T(L∞)).
pub fn dubrovnik_reg(d: &LinkDiagram, v: Var) -> LaurentPoly {
    Eval::new(Base::Dubrovnik, v).eval(d)
}

/// Regular-isotopy Kauffman polynomial: Q(L₊) + Q(L₋) = v·(Q(L₀) + Q(L∞)).
pub fn kauffman_reg(d: &LinkDiagram, v: Var) -> LaurentPoly {
    Eval::new(Base::Kauffman, v).eval(d)
}

pub fn base_reg(base: Base, d: &LinkDiagram, v: Var) -> LaurentPoly {
    Eval::new(base, v).eval(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Translate {
    DubrovnikToKauffman,
    KauffmanToDubrovnik,
}

/// Lickorish's translation between Dubrovnik and Kauffman values (regular-isotopy
/// normalization, also valid for the two-level invariants): T(a, z, w) =
/// (−1)^{c+1} i^{−wr} Q(ia, −iz, −iw), and back.
pub fn kd_translate(p: &LaurentPoly, c: usize, wr: i64, dir: Translate) -> LaurentPoly {
    let i = GaussianInt::I;
    let ni = GaussianInt::new(0, -1);
    // substitution for the argument, then the prefactor
    let (sa, sv, pre) = match dir {
        // Q = (−1)^{c+1} i^{wr} T(−ia, iz, iw)
        Translate::DubrovnikToKauffman => (ni, i, wr),
        // T = (−1)^{c+1} i^{−wr} Q(ia, −iz, −iw)
        Translate::KauffmanToDubrovnik => (i, ni, -wr),
    };
    let lin = |v: Var, c: GaussianInt| LaurentPoly::term(Mono::var(v, 1), c);
    let q = p
        .substitute(&[(Var::A, lin(Var::A, sa)), (Var::Z, lin(Var::Z, sv)), (Var::W, lin(Var::W, sv))])
        .expect("monomial substitution");
    let sign = if (c + 1).is_multiple_of(2) { 1 } else { -1 };
    q.scale(GaussianInt::i_pow(pre) * GaussianInt::int(sign))
}

/// Five-parameter bracket: a crossing resolves into its orientation-compatible smoothing
/// with weight `x` (positive) or `xp` (negative), the other smoothing with `y` or `yp`;
/// each state carries `d^(loops − 1)`.
#[derive(Clone, Debug)]
pub struct BracketParams {
    pub x: LaurentPoly,
    pub y: LaurentPoly,
    pub xp: LaurentPoly,
    pub yp: LaurentPoly,
    pub d: LaurentPoly,
}

impl BracketParams {
    /// Parameters reproducing the curly bracket A^{wr}⟨K⟩.
    pub fn curly() -> BracketParams {
        BracketParams {
            x: LaurentPoly::mono(Var::BigA, 2),
            y: LaurentPoly::one(),
            xp: LaurentPoly::mono(Var::BigA, -2),
            yp: LaurentPoly::one(),
            d: bracket_loop(),
        }
    }
}

/// −A² − A⁻².
pub fn bracket_loop() -> LaurentPoly {
    -(LaurentPoly::mono(Var::BigA, 2) + LaurentPoly::mono(Var::BigA, -2))
}

type Pairing = [(usize, usize); 2];

// Frontier state sum: crossings are absorbed one at a time, tracking how the open edge ends
// are joined and how many loops have closed.
fn state_sum(d: &LinkDiagram, choices: &dyn Fn(usize) -> [(Pairing, LaurentPoly); 2], lp: &LaurentPoly) -> LaurentPoly {
    let order = frontier_order(d);
    type Key = (Vec<(u32, u32)>, u32);
    let mut states: HashMap<Key, LaurentPoly> = HashMap::new();
    states.insert((vec![], 0), LaurentPoly::one());
    for ci in order {
        let c = &d.crossings()[ci];
        let mut next: HashMap<Key, LaurentPoly> = HashMap::new();
        for ((pairs, loops), coef) in &states {
            for (pairing, weight) in choices(ci) {
                let mut partner: HashMap<u32, u32> = HashMap::new();
                for &(u, v) in pairs {
                    partner.insert(u, v);
                    partner.insert(v, u);
                }
                let mut loops = *loops;
                for (p, q) in pairing {
                    let (u, v) = (c.edges[p], c.edges[q]);
                    join(&mut partner, u, v, &mut loops);
                }
                let mut key: Vec<(u32, u32)> =
                    partner.iter().filter(|(a, b)| a < b).map(|(a, b)| (*a, *b)).collect();
                key.sort_unstable();
                let e = next.entry((key, loops)).or_insert_with(LaurentPoly::zero);
                *e += &(coef * &weight);
            }
        }
        states = next;
    }
    let mut out = LaurentPoly::zero();
    for ((pairs, loops), coef) in states {
        debug_assert!(pairs.is_empty());
        let total = loops + d.free_loops();
        out += &(coef * lp.pow(total.saturating_sub(1)));
    }
    out
}

// Open ends are labels seen once; an entry u ↔ v means an arc runs from end u to end v.
fn join(partner: &mut HashMap<u32, u32>, u: u32, v: u32, loops: &mut u32) {
    if u == v {
        *loops += 1;
        return;
    }
    match (partner.remove(&u), partner.remove(&v)) {
        (None, None) => {
            partner.insert(u, v);
            partner.insert(v, u);
        }
        (Some(pu), None) => {
            partner.insert(pu, v);
            partner.insert(v, pu);
        }
        (None, Some(pv)) => {
            partner.insert(pv, u);
            partner.insert(u, pv);
        }
        (Some(pu), Some(pv)) => {
            if pu == v {
                *loops += 1;
            } else {
                partner.insert(pu, pv);
                partner.insert(pv, pu);
            }
        }
    }
}

// Greedy order keeping the set of open edges small.
fn frontier_order(d: &LinkDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut done = vec![false; n];
    let mut open: HashMap<u32, u32> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                let shared = d.crossings()[i].edges.iter().filter(|e| open.contains_key(e)).count();
                (shared, std::cmp::Reverse(i))
            })
            .unwrap();
        done[best] = true;
        order.push(best);
        for &e in &d.crossings()[best].edges {
            if open.remove(&e).is_none() {
                open.insert(e, 1);
            }
        }
    }
    order
}

/// Kauffman bracket ⟨K⟩ with A-smoothing weight A, B-smoothing weight A⁻¹ and loop value
/// −A² − A⁻², normalized so the unknot is 1.
pub fn bracket(d: &LinkDiagram) -> LaurentPoly {
    let a = LaurentPoly::var(Var::BigA);
    let ai = LaurentPoly::mono(Var::BigA, -1);
    state_sum(d, &|_| [(A_PAIRS, a.clone()), (B_PAIRS, ai.clone())], &bracket_loop())
}

pub fn bracket_general(d: &LinkDiagram, p: &BracketParams) -> LaurentPoly {
    state_sum(
        d,
        &|ci| {
            if d.crossings()[ci].sign > 0 {
                [(A_PAIRS, p.x.clone()), (B_PAIRS, p.y.clone())]
            } else {
                [(B_PAIRS, p.xp.clone()), (A_PAIRS, p.yp.clone())]
            }
        },
        &p.d,
    )
}

/// Curly bracket {K} = A^{wr}⟨K⟩.
pub fn curly_bracket(d: &LinkDiagram) -> LaurentPoly {
    LaurentPoly::mono(Var::BigA, d.writhe() as i32) * bracket(d)
}

/// The curly bracket as a specialization of R: w → A² − A⁻², a → −A⁴.
pub fn curly_bindings(v: Var) -> Vec<(Var, LaurentPoly)> {
    vec![
        (v, LaurentPoly::mono(Var::BigA, 2) - LaurentPoly::mono(Var::BigA, -2)),
        (Var::A, -LaurentPoly::mono(Var::BigA, 4)),
    ]
}

/// Jones substitution a → t⁻², z, w → t − t⁻¹ (t = q^{1/2}).
pub fn jones_bindings() -> Vec<(Var, LaurentPoly)> {
    let s = LaurentPoly::var(Var::T) - LaurentPoly::mono(Var::T, -1);
    vec![(Var::A, LaurentPoly::mono(Var::T, -2)), (Var::Z, s.clone()), (Var::W, s)]
}

/// Jones polynomial in t = q^{1/2} from an ambient Homflypt-type value.
pub fn specialize_jones(p: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    p.specialize(&jones_bindings())
}

/// a → 1: the Conway polynomial from an ambient Homflypt value.
pub fn alexander_bindings() -> Vec<(Var, LaurentPoly)> {
    vec![(Var::A, LaurentPoly::one())]
}

pub fn specialize_alexander(p: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    p.specialize(&alexander_bindings())
}

/// The Jones polynomial through the bracket, (−A³)^{−wr}⟨K⟩ with A⁴ = q⁻¹, in t = q^{1/2}.
pub fn jones_via_bracket(d: &LinkDiagram) -> LaurentPoly {
    let wr = d.writhe();
    let sign = if wr % 2 == 0 { 1 } else { -1 };
    let f = LaurentPoly::mono(Var::BigA, (-3 * wr) as i32).scale(GaussianInt::int(sign)) * bracket(d);
    LaurentPoly::from_terms(f.terms().map(|(m, c)| {
        let k = m.exp(Var::BigA);
        assert!(k % 2 == 0, "odd power of A in a bracket value");
        (Mono::var(Var::T, -k / 2), *c)
    }))
}
