//! Closed formulas over set partitions of the components.

use thiserror::Error;

use crate::classic::{base_reg, homflypt_amb, loop_value, Base};
use crate::diagram::{DiagramError, LinkDiagram};
use crate::poly::{GaussianInt, LaurentPoly, Mono, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinError {
    #[error("stirling2({0}, {1}) needs 1 <= k <= n")]
    OutOfRange(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Set partition of 0..n, blocks sorted by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    pub blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn k(&self) -> usize {
        self.blocks.len()
    }
}

pub fn stirling2(n: usize, k: usize) -> Result<u64, CombinError> {
    if k == 0 || k > n {
        return Err(CombinError::OutOfRange(n, k));
    }
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = j as u64 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    Ok(row[k])
}

/// All set partitions of {0..n}, in restricted-growth-string order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = vec![];
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == rgs.len() {
            let k = if rgs.is_empty() { 0 } else { max + 1 };
            let mut blocks = vec![vec![]; k];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push(e);
            }
            out.push(Partition { blocks });
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for b in 0..=top {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    if n > 0 {
        rec(0, 0, &mut rgs, &mut out);
    }
    out
}

/// (X − 1)(X − 2)···(X − k + 1) for a polynomial X.
pub fn falling(x: &LaurentPoly, k: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for j in 1..k {
        out = out * (x - &LaurentPoly::int(j as i64));
    }
    out
}

/// Ê⁻¹ = E⁻¹·w·z⁻¹.
pub fn ehat_inv() -> LaurentPoly {
    LaurentPoly::term(Mono([-1, 1, 0, -1, 0, 0, 0, 0]), GaussianInt::ONE)
}

/// Ê_k = (Ê⁻¹ − 1)···(Ê⁻¹ − k + 1).
pub fn ehat(k: usize) -> LaurentPoly {
    falling(&ehat_inv(), k)
}

fn zw_power(n: usize) -> LaurentPoly {
    let e = n as i32 - 1;
    LaurentPoly::term(Mono([e, -e, 0, 0, 0, 0, 0, 0]), GaussianInt::ONE)
}

fn sublinks(d: &LinkDiagram, p: &Partition) -> Vec<LinkDiagram> {
    p.blocks.iter().map(|b| d.sublink(b)).collect()
}

fn formula(base: Base, d: &LinkDiagram, twist: bool) -> LaurentPoly {
    let n = d.component_count();
    if n == 0 {
        return LaurentPoly::one();
    }
    let lp = loop_value(base, Var::W);
    let mut total = LaurentPoly::zero();
    for p in partitions(n) {
        let mut term = lp.pow(p.k() as u32 - 1) * ehat(p.k());
        let mut wr = 0;
        for s in sublinks(d, &p) {
            wr += s.writhe();
            term = term * base_reg(base, &s, Var::W);
        }
        if twist {
            term = term.scale(GaussianInt::i_pow(-wr));
        }
        total += &term;
    }
    let mut out = zw_power(n) * total;
    if twist {
        out = out.scale(GaussianInt::i_pow(d.writhe()));
    }
    out
}

/// H[R](L) = (z/w)^{n−1} Σ_k η^{k−1} Ê_k Σ_{π, |π|=k} ∏_B R(L|B).
pub fn hr_formula(d: &LinkDiagram) -> LaurentPoly {
    formula(Base::Homflypt, d, false)
}

/// D[T] by the same sum with δ and T.
pub fn dt_formula(d: &LinkDiagram) -> LaurentPoly {
    formula(Base::Dubrovnik, d, false)
}

/// K[Q] = i^{wr(L)} (z/w)^{n−1} Σ_k γ^{k−1} Ê_k Σ_π i^{−wr(πL)} Q(πL), using the diagram's
/// orientation for the writhes.
pub fn kq_formula(d: &LinkDiagram) -> LaurentPoly {
    formula(Base::Kauffman, d, true)
}

/// Σ over cross-block pairs of linking numbers.
pub fn nu(d: &LinkDiagram, p: &Partition) -> Result<i64, DiagramError> {
    let mut s = 0;
    for (bi, b) in p.blocks.iter().enumerate() {
        for c in &p.blocks[bi + 1..] {
            for &i in b {
                for &j in c {
                    s += d.linking_number(i, j)?;
                }
            }
        }
    }
    Ok(s)
}

/// μ = (l⁻¹ − l)·z⁻¹.
pub fn mu() -> LaurentPoly {
    (LaurentPoly::mono(Var::Lambda, -1) - LaurentPoly::var(Var::Lambda)) * LaurentPoly::mono(Var::Z, -1)
}

/// Ambient Homflypt with a → l⁻¹ (l² = λ).
pub fn homflypt_lambda(d: &LinkDiagram) -> LaurentPoly {
    homflypt_amb(d).substitute(&[(Var::A, LaurentPoly::mono(Var::Lambda, -1))]).unwrap()
}

/// Θ(L) = Σ_k μ^{k−1} E_k Σ_π λ^{ν(π)} P(πL), with E_k = (E⁻¹ − 1)···(E⁻¹ − k + 1), in
/// (z, l, E).
pub fn theta_formula(d: &LinkDiagram) -> Result<LaurentPoly, CombinError> {
    let n = d.component_count();
    let m = mu();
    let einv = LaurentPoly::mono(Var::E, -1);
    let mut total = LaurentPoly::zero();
    for p in partitions(n) {
        let mut term = m.pow(p.k() as u32 - 1) * falling(&einv, p.k());
        term = term * LaurentPoly::mono(Var::Lambda, 2 * nu(d, &p)? as i32);
        for s in sublinks(d, &p) {
            term = term * homflypt_lambda(&s);
        }
        total += &term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::{dubrovnik_reg, homflypt_reg, kauffman_reg};
    use crate::skeinx::{ambient_normalize, dt, hr, kq, SkeinConfig};
    use proptest::prelude::*;

    const HOPF: &str = "PD[X(1,3,2,4), X(3,1,4,2)] loops=0";

    // exhaustive count of k-block partitions by brute-force labelling
    fn brute_stirling(n: usize, k: usize) -> u64 {
        let mut count = 0;
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut labels = vec![];
            for _ in 0..n {
                labels.push(c % k);
                c /= k;
            }
            // canonical: first occurrences appear in order 0, 1, 2, ...
            let mut next = 0;
            let mut ok = true;
            for &l in &labels {
                if l == next {
                    next += 1;
                } else if l > next {
                    ok = false;
                    break;
                }
            }
            if ok && next == k {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(5, 1).unwrap(), 1);
        assert_eq!(stirling2(5, 5).unwrap(), 1);
        assert_eq!(stirling2(3, 2).unwrap(), 3);
        assert_eq!(stirling2(4, 2).unwrap(), 7);
        assert_eq!(stirling2(3, 4), Err(CombinError::OutOfRange(3, 4)));
        assert_eq!(stirling2(3, 0), Err(CombinError::OutOfRange(3, 0)));
        for n in 1..=7 {
            for k in 1..=n {
                assert_eq!(stirling2(n, k).unwrap(), brute_stirling(n, k));
            }
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(1).len(), 1);
        assert_eq!(partitions(3).len(), 5);
        for n in 1..=8 {
            let ps = partitions(n);
            for k in 1..=n {
                let c = ps.iter().filter(|p| p.k() == k).count() as u64;
                assert_eq!(c, stirling2(n, k).unwrap());
            }
            let mut uniq = ps.clone();
            uniq.dedup();
            assert_eq!(uniq.len(), ps.len());
        }
    }

    #[test]
    fn stirling_identity() {
        let x = LaurentPoly::var(Var::Aux);
        for n in 1..=6 {
            let mut s = LaurentPoly::zero();
            for k in 1..=n {
                s += &falling(&x, k).scale(GaussianInt::int(stirling2(n, k).unwrap() as i64));
            }
            assert_eq!(s, x.pow(n as u32 - 1));
        }
    }

    #[test]
    fn ehat_values() {
        assert_eq!(ehat(1), LaurentPoly::one());
        let one = [(Var::E, LaurentPoly::one()), (Var::W, LaurentPoly::var(Var::Z))];
        for k in 2..5 {
            assert!(ehat(k).substitute(&one).unwrap().is_zero());
        }
    }

    #[test]
    fn hopf_by_hand() {
        let h: LinkDiagram = HOPF.parse().unwrap();
        // (z/w)[(η + w a) + η(Ê⁻¹ − 1)]
        let eta = loop_value(Base::Homflypt, Var::W);
        let inner = (&eta + &crate::poly::lp("w*a")) + &eta * &(ehat_inv() - LaurentPoly::one());
        assert_eq!(hr_formula(&h), crate::poly::lp("z*w^-1") * inner);
        assert_eq!(hr_formula(&h), hr(&h, &SkeinConfig::default()).unwrap());
    }

    #[test]
    fn knots_and_unlinks() {
        let t: LinkDiagram = "PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)] loops=0".parse().unwrap();
        assert_eq!(hr_formula(&t), homflypt_reg(&t, Var::W));
        assert_eq!(dt_formula(&t), dubrovnik_reg(&t, Var::W));
        assert_eq!(kq_formula(&t), kauffman_reg(&t, Var::W));
        for r in 1..=4u32 {
            let u = LinkDiagram::unlink(r);
            let e = LaurentPoly::mono(Var::E, 1 - r as i32);
            for (b, v) in [(Base::Homflypt, hr_formula(&u)), (Base::Dubrovnik, dt_formula(&u)), (Base::Kauffman, kq_formula(&u))] {
                assert_eq!(v, &e * &loop_value(b, Var::W).pow(r - 1));
            }
        }
    }

    #[test]
    fn theta_at_e_one_is_homflypt() {
        let h: LinkDiagram = HOPF.parse().unwrap();
        let th = theta_formula(&h).unwrap().substitute(&[(Var::E, LaurentPoly::one())]).unwrap();
        assert_eq!(th, homflypt_lambda(&h));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn formulas_match_skein(seed in 0u64..5_000) {
            let d = LinkDiagram::random(seed, 7, 2..=3);
            let c = SkeinConfig::default();
            prop_assert_eq!(hr_formula(&d), hr(&d, &c).unwrap());
            prop_assert_eq!(dt_formula(&d), dt(&d, &c).unwrap());
            let k = kq_formula(&d);
            prop_assert!(k.imag_part().is_zero());
            prop_assert_eq!(k, kq(&d, &c).unwrap());
        }

        #[test]
        fn kq_formula_ignores_orientation(seed in 0u64..5_000, mask in 0u8..8) {
            let d = LinkDiagram::random(seed, 7, 2..=3);
            let which: Vec<usize> = (0..3).filter(|b| mask & (1 << b) != 0).collect();
            prop_assert_eq!(kq_formula(&d), kq_formula(&d.reverse_components(&which)));
        }

        #[test]
        fn theta_is_ambient_two_level(seed in 0u64..5_000) {
            let d = LinkDiagram::random(seed, 7, 2..=3);
            let c = SkeinConfig { w_var: Var::Z, ..SkeinConfig::default() };
            let pp = ambient_normalize(&hr(&d, &c).unwrap(), d.writhe());
            let pp = pp.substitute(&[(Var::A, LaurentPoly::mono(Var::Lambda, -1))]).unwrap();
            prop_assert_eq!(theta_formula(&d).unwrap(), pp);
        }
    }
}
