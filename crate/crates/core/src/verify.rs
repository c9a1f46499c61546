//! Property suites run by `skeinlab verify` and the acceptance harness.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::Catalog;
use crate::classic::{
    bracket, curly_bindings, curly_bracket, dubrovnik_reg, homflypt_amb, homflypt_reg, jones_via_bracket,
    kauffman_reg, kd_translate, specialize_jones, Translate,
};
use crate::combin::{dt_formula, falling, hr_formula, kq_formula, stirling2, theta_formula, homflypt_lambda};
use crate::diagram::{LinkDiagram, Template};
use crate::poly::{lp, LaurentPoly, Var};
use crate::skeinx::{ambient_normalize, dt, hr, kq, topological_bindings, SkeinConfig};
use crate::statesum::{double_state_sum, z_sum};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    fn eq(&mut self, name: impl Into<String>, got: &LaurentPoly, want: &LaurentPoly) {
        let detail = if got == want { String::new() } else { format!("got {got}, expected {want}") };
        self.push(name, got == want, detail);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{tag} {}", c.name)?;
            } else {
                writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
            }
        }
        write!(f, "{} checks, {} failed", self.checks.len(), self.failures())
    }
}

fn cfg() -> SkeinConfig {
    SkeinConfig::default()
}

/// Catalog links together with `random` seeded diagrams (at most 8 crossings, 2–3
/// components).
pub fn sample(cat: &Catalog, random: usize, seed: u64) -> Vec<(String, LinkDiagram)> {
    let mut out: Vec<(String, LinkDiagram)> = cat.entries().map(|(n, d)| (n.to_string(), d.clone())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        let s: u64 = rng.gen();
        out.push((format!("random#{i}"), LinkDiagram::random(s, 8, 2..=3)));
    }
    out
}

/// Recursive skein = closed formula = template state sum, for H[R]; skein = formula for D[T]
/// and K[Q].
pub fn oracles(links: &[(String, LinkDiagram)]) -> Report {
    let mut r = Report::default();
    for (name, d) in links {
        let h = hr(d, &cfg()).expect("hr");
        r.eq(format!("{name}: hr = hr-formula"), &hr_formula(d), &h);
        r.eq(format!("{name}: hr = zsum"), &z_sum(d, None), &h);
        r.eq(format!("{name}: dt = dt-formula"), &dt_formula(d), &dt(d, &cfg()).expect("dt"));
        r.eq(format!("{name}: kq = kq-formula"), &kq_formula(d), &kq(d, &cfg()).expect("kq"));
    }
    r
}

#[derive(PartialEq)]
struct Profile([LaurentPoly; 7]);

fn profile(d: &LinkDiagram) -> Profile {
    Profile([
        hr(d, &cfg()).expect("hr"),
        dt(d, &cfg()).expect("dt"),
        kq(d, &cfg()).expect("kq"),
        homflypt_reg(d, Var::Z),
        dubrovnik_reg(d, Var::Z),
        kauffman_reg(d, Var::Z),
        bracket(d),
    ])
}

/// A template realizing a random component order and random basepoints.
pub fn random_basepoint_template(d: &LinkDiagram, rng: &mut impl Rng) -> Template {
    let mut cycles = d.cycles();
    cycles.shuffle(rng);
    let bps: Vec<_> = cycles.iter().filter_map(|c| c.choose(rng).copied()).collect();
    Template::from_basepoints(d, &bps, rng)
}

/// Regular-isotopy perturbations and random (template, component order, basepoint) choices.
pub fn isotopy(links: &[(String, LinkDiagram)], perturbations: usize, triples: usize, seed: u64) -> Report {
    let mut r = Report::default();
    for (li, (name, d)) in links.iter().enumerate() {
        if d.crossing_count() == 0 {
            continue;
        }
        let base = profile(d);
        let mut bad = vec![];
        for i in 0..perturbations {
            let s = seed ^ ((li as u64) << 32) ^ i as u64;
            let e = d.apply_random_regular_isotopy(s, 1 + i % 3);
            if profile(&e) != base {
                bad.push(format!("{e}"));
            }
        }
        let detail = bad.first().map(|e| format!("{} of {perturbations} differ, e.g. {e}", bad.len()));
        r.push(format!("{name}: {perturbations} RII/RIII perturbations"), bad.is_empty(), detail.unwrap_or_default());

        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(li as u64));
        let want = [&base.0[0], &base.0[1], &base.0[2]];
        let mut bad = 0;
        for _ in 0..triples {
            let c = SkeinConfig::with_template(random_basepoint_template(d, &mut rng));
            let got = [hr(d, &c).expect("hr"), dt(d, &c).expect("dt"), kq(d, &c).expect("kq")];
            if got.iter().zip(want).any(|(g, w)| g != w) {
                bad += 1;
            }
        }
        r.push(format!("{name}: {triples} template/order/basepoint choices"), bad == 0, if bad == 0 { String::new() } else { format!("{bad} differ") });
    }
    r
}

fn collapse(p: &LaurentPoly) -> LaurentPoly {
    p.substitute(&[(Var::E, LaurentPoly::one()), (Var::W, LaurentPoly::var(Var::Z))]).expect("monomial")
}

/// E → 1, w → z collapses; theta at E = 1.
pub fn collapse_checks(links: &[(String, LinkDiagram)]) -> Report {
    let mut r = Report::default();
    for (name, d) in links {
        r.eq(format!("{name}: hr -> R"), &collapse(&hr(d, &cfg()).unwrap()), &homflypt_reg(d, Var::Z));
        r.eq(format!("{name}: dt -> T"), &collapse(&dt(d, &cfg()).unwrap()), &dubrovnik_reg(d, Var::Z));
        r.eq(format!("{name}: kq -> Q"), &collapse(&kq(d, &cfg()).unwrap()), &kauffman_reg(d, Var::Z));
        let th = theta_formula(d).unwrap().substitute(&[(Var::E, LaurentPoly::one())]).unwrap();
        r.eq(format!("{name}: theta(E=1) = P"), &th, &homflypt_lambda(d));
    }
    r
}

/// f(z, w, a, E)·(w/z)^{n−1} = f(w, w, a, E·z/w) for f = hr, dt, kq.
pub fn topological_checks(links: &[(String, LinkDiagram)]) -> Report {
    let mut r = Report::default();
    let b = topological_bindings();
    for (name, d) in links {
        let n = d.component_count() as i32;
        let f = LaurentPoly::mono(Var::W, n - 1) * LaurentPoly::mono(Var::Z, 1 - n);
        for (inv, v) in [("hr", hr(d, &cfg())), ("dt", dt(d, &cfg())), ("kq", kq(d, &cfg()))] {
            let v = v.unwrap();
            r.eq(format!("{name}: {inv} topological form"), &(&v * &f), &v.substitute(&b).unwrap());
        }
    }
    r
}

/// Kauffman ↔ Dubrovnik in both directions, classical and two-level; kq-formula real.
pub fn translation_checks(links: &[(String, LinkDiagram)]) -> Report {
    let mut r = Report::default();
    for (name, d) in links {
        let (c, wr) = (d.component_count(), d.writhe());
        let (t, q) = (dubrovnik_reg(d, Var::Z), kauffman_reg(d, Var::Z));
        r.eq(format!("{name}: T -> Q"), &kd_translate(&t, c, wr, Translate::DubrovnikToKauffman), &q);
        r.eq(format!("{name}: Q -> T"), &kd_translate(&q, c, wr, Translate::KauffmanToDubrovnik), &t);
        let (t2, q2) = (dt(d, &cfg()).unwrap(), kq(d, &cfg()).unwrap());
        r.eq(format!("{name}: dt -> kq"), &kd_translate(&t2, c, wr, Translate::DubrovnikToKauffman), &q2);
        r.eq(format!("{name}: kq -> dt"), &kd_translate(&q2, c, wr, Translate::KauffmanToDubrovnik), &t2);
        let im = kq_formula(d).imag_part();
        r.push(format!("{name}: kq-formula imaginary part"), im.is_zero(), if im.is_zero() { String::new() } else { im.to_string() });
    }
    r
}

/// Σ_k S(n,k)·(X−1)···(X−k+1) = X^{n−1}.
pub fn stirling_checks(max_n: usize) -> Report {
    let mut r = Report::default();
    let x = LaurentPoly::var(Var::Aux);
    for n in 1..=max_n {
        let mut s = LaurentPoly::zero();
        for k in 1..=n {
            s += &falling(&x, k).scale(crate::poly::GaussianInt::int(stirling2(n, k).unwrap() as i64));
        }
        r.eq(format!("stirling identity n={n}"), &s, &x.pow(n as u32 - 1));
    }
    r
}

/// {K₊} − {K₋} = (A² − A⁻²){K₀} at every crossing, and the double state sum.
pub fn curly_checks(links: &[(String, LinkDiagram)]) -> Report {
    let mut r = Report::default();
    let m = LaurentPoly::mono(Var::BigA, 2) - LaurentPoly::mono(Var::BigA, -2);
    for (name, d) in links {
        let mut bad = vec![];
        for x in d.crossings() {
            let here = curly_bracket(d);
            let there = curly_bracket(&d.switch_crossing(x.id).unwrap());
            let zero = curly_bracket(&d.smooth_oriented(x.id).unwrap());
            let diff = if x.sign > 0 { here - there } else { there - here };
            if diff != &m * &zero {
                bad.push(x.id);
            }
        }
        r.push(format!("{name}: curly skein at {} crossings", d.crossing_count()), bad.is_empty(), if bad.is_empty() { String::new() } else { format!("fails at {bad:?}") });
        let want = z_sum(d, None).specialize(&curly_bindings(Var::W)).unwrap();
        r.eq(format!("{name}: double state sum"), &double_state_sum(d, None), &want);
    }
    r
}

pub fn specialize_suite(links: &[(String, LinkDiagram)]) -> Report {
    let mut r = collapse_checks(links);
    r.extend(topological_checks(links));
    r.extend(translation_checks(links));
    r.extend(curly_checks(links));
    r.extend(stirling_checks(6));
    r
}

/// Published Jones polynomials for the trivial-Jones link and its skein descendants, in
/// t = q^{1/2}.
pub const THISTLETHWAITE_JONES: [(&str, &str); 6] = [
    ("thlink", "-t^-1 - t"),
    ("thlink-k1", "-1 + t^-14 - 2*t^-12 + 3*t^-10 - 4*t^-8 + 4*t^-6 - 4*t^-4 + 3*t^-2 + t^2"),
    ("thlink-k2", "1 - t^-18 + 3*t^-16 - 4*t^-14 + 5*t^-12 - 6*t^-10 + 5*t^-8 - 4*t^-6 + 3*t^-4 - t^-2"),
    ("thlink-k3", "1 - t^-18 + 2*t^-16 - 3*t^-14 + 4*t^-12 - 4*t^-10 + 4*t^-8 - 3*t^-6 + 2*t^-4 - t^-2"),
    ("thlink-k4", "-1 - t^-12 + 2*t^-10 - 2*t^-8 + 3*t^-6 - 3*t^-4 + 2*t^-2 + t^2"),
    ("thlink-split", "t^-13 - t^-11 - t^-7 + t^-3 - t^-1 - t^3"),
];

/// Ambient Jones polynomial through Homflypt.
pub fn jones(d: &LinkDiagram) -> LaurentPoly {
    specialize_jones(&homflypt_amb(d)).expect("Jones specialization")
}

/// The two-level Jones value V[V]: ambient H[R] at a → t⁻², z, w → t − t⁻¹.
pub fn two_level_jones(d: &LinkDiagram) -> LaurentPoly {
    specialize_jones(&ambient_normalize(&hr(d, &cfg()).unwrap(), d.writhe())).expect("Jones specialization")
}

/// b·V₁ + ab·V₂ − ca²·V₃ − ac·V₄ + E⁻¹·V_split with a = q², z = q^{1/2} − q^{−1/2}, b = qz,
/// c = q⁻¹z.
pub fn assemble_two_level(v: &[LaurentPoly; 5]) -> LaurentPoly {
    let z = lp("t - t^-1");
    let a = LaurentPoly::mono(Var::T, 4);
    let b = LaurentPoly::mono(Var::T, 2) * &z;
    let c = LaurentPoly::mono(Var::T, -2) * &z;
    &b * &v[0] + &(&a * &b) * &v[1] - &(&c * &a.pow(2)) * &v[2] - &(&a * &c) * &v[3]
        + LaurentPoly::mono(Var::E, -1) * &v[4]
}

pub fn whitehead(cat: &Catalog) -> Report {
    let mut r = Report::default();
    match (cat.get("whitehead"), cat.get("trefoil-")) {
        (Some(wh), Some(tr)) => {
            let eta = crate::classic::loop_value(crate::classic::Base::Homflypt, Var::W);
            let z = LaurentPoly::var(Var::Z);
            let want = &z * &homflypt_reg(tr, Var::W)
                + LaurentPoly::mono(Var::A, -2) * eta * LaurentPoly::mono(Var::E, -1)
                - &z * &LaurentPoly::mono(Var::A, -3);
            r.eq("whitehead: hr = zR(K) + a^-2 eta/E - z a^-3", &hr(wh, &cfg()).unwrap(), &want);
        }
        _ => r.push("whitehead: hr golden value", false, "catalog lacks whitehead or trefoil-"),
    }
    r
}

/// Jones values of the trivial-Jones link and its skein descendants, and the assembled V[V].
pub fn thistlethwaite(cat: &Catalog) -> Report {
    let mut r = Report::default();
    let mut vals = vec![];
    for (name, want) in THISTLETHWAITE_JONES {
        match cat.get(name) {
            Some(d) => {
                let v = jones(d);
                r.eq(format!("{name}: Jones"), &v, &lp(want));
                r.eq(format!("{name}: Jones via bracket"), &jones_via_bracket(d), &v);
                vals.push(v);
            }
            None => r.push(format!("{name}: Jones"), false, "not in catalog"),
        }
    }
    if vals.len() == 6 {
        let assembled = assemble_two_level(&[vals[1].clone(), vals[2].clone(), vals[3].clone(), vals[4].clone(), vals[5].clone()]);
        let unlink = two_level_jones(&LinkDiagram::unlink(2));
        let diff = &assembled - &unlink;
        r.push("thlink: assembled V[V] differs from the 2-unlink", !diff.is_zero(), format!("difference {diff}"));
        if let Some(d) = cat.get("thlink") {
            r.eq("thlink: V[V] by skein = assembled", &two_level_jones(d), &assembled);
        }
    }
    r
}

pub fn paper_values(cat: &Catalog) -> Report {
    let mut r = whitehead(cat);
    r.extend(thistlethwaite(cat));
    r
}
