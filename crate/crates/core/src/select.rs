//! Invariant selectors and variable bindings shared by the CLI and the C interface.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::classic::{
    alexander_bindings, bracket, curly_bracket, dubrovnik_reg, homflypt_amb, homflypt_reg, jones_bindings,
    kauffman_reg,
};
use crate::combin::{dt_formula, hr_formula, kq_formula, theta_formula};
use crate::diagram::{LinkDiagram, Template};
use crate::poly::{LaurentPoly, Var};
use crate::skeinx::{dt, hr, kq, SkeinConfig};
use crate::statesum::{double_state_sum, z_sum};

#[derive(Debug, Error)]
pub enum SelectError {
    #[error("unknown invariant '{0}' (expected one of {list})", list = Invariant::NAMES.join(", "))]
    UnknownInvariant(String),
    #[error("bad binding '{0}' (expected jones, alexander or var=poly)")]
    BadBinding(String),
    #[error("cannot apply '{0}': {1}")]
    Substitution(String, String),
    #[error("{0}")]
    Evaluation(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    R,
    P,
    Dubrovnik,
    Kauffman,
    Bracket,
    Curly,
    Hr,
    Dt,
    Kq,
    HrFormula,
    DtFormula,
    KqFormula,
    Theta,
    Zsum,
    Double,
}

impl Invariant {
    pub const ALL: [Invariant; 15] = [
        Invariant::R,
        Invariant::P,
        Invariant::Dubrovnik,
        Invariant::Kauffman,
        Invariant::Bracket,
        Invariant::Curly,
        Invariant::Hr,
        Invariant::Dt,
        Invariant::Kq,
        Invariant::HrFormula,
        Invariant::DtFormula,
        Invariant::KqFormula,
        Invariant::Theta,
        Invariant::Zsum,
        Invariant::Double,
    ];

    pub const NAMES: [&'static str; 15] = [
        "r", "p", "dubrovnik", "kauffman", "bracket", "curly", "hr", "dt", "kq", "hr-formula", "dt-formula",
        "kq-formula", "theta", "zsum", "double",
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[Self::ALL.iter().position(|&i| i == self).unwrap()]
    }

    /// Evaluate on a diagram; the template only affects the two-level skein and state sums.
    pub fn eval(self, d: &LinkDiagram, template: Option<&Template>) -> Result<LaurentPoly, SelectError> {
        let cfg = SkeinConfig { template: template.cloned(), ..SkeinConfig::default() };
        let ev = |e: &dyn fmt::Display| SelectError::Evaluation(e.to_string());
        Ok(match self {
            Invariant::R => homflypt_reg(d, Var::Z),
            Invariant::P => homflypt_amb(d),
            Invariant::Dubrovnik => dubrovnik_reg(d, Var::Z),
            Invariant::Kauffman => kauffman_reg(d, Var::Z),
            Invariant::Bracket => bracket(d),
            Invariant::Curly => curly_bracket(d),
            Invariant::Hr => hr(d, &cfg).map_err(|e| ev(&e))?,
            Invariant::Dt => dt(d, &cfg).map_err(|e| ev(&e))?,
            Invariant::Kq => kq(d, &cfg).map_err(|e| ev(&e))?,
            Invariant::HrFormula => hr_formula(d),
            Invariant::DtFormula => dt_formula(d),
            Invariant::KqFormula => kq_formula(d),
            Invariant::Theta => theta_formula(d).map_err(|e| ev(&e))?,
            Invariant::Zsum => z_sum(d, template),
            Invariant::Double => double_state_sum(d, template),
        })
    }
}

impl FromStr for Invariant {
    type Err = SelectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::NAMES
            .iter()
            .position(|&n| n == s.trim())
            .map(|i| Self::ALL[i])
            .ok_or_else(|| SelectError::UnknownInvariant(s.to_string()))
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Apply one binding: `jones` (a → t⁻², z, w → t − t⁻¹), `alexander` (a → 1) or `var=poly`.
pub fn apply_binding(p: &LaurentPoly, binding: &str) -> Result<LaurentPoly, SelectError> {
    let bindings = match binding.trim() {
        "jones" => jones_bindings(),
        "alexander" => alexander_bindings(),
        s => {
            let (v, val) = s.split_once('=').ok_or_else(|| SelectError::BadBinding(s.to_string()))?;
            let var = Var::from_name(v.trim()).ok_or_else(|| SelectError::BadBinding(s.to_string()))?;
            let val: LaurentPoly = val.parse().map_err(|_| SelectError::BadBinding(s.to_string()))?;
            vec![(var, val)]
        }
    };
    p.specialize(&bindings).map_err(|e| SelectError::Substitution(binding.to_string(), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::lp;

    #[test]
    fn names_round_trip() {
        for i in Invariant::ALL {
            assert_eq!(i.name().parse::<Invariant>().unwrap(), i);
        }
        assert!("homfly".parse::<Invariant>().is_err());
    }

    #[test]
    fn bindings() {
        let p = lp("a*z + a^-1");
        assert_eq!(apply_binding(&p, "alexander").unwrap(), lp("z + 1"));
        assert_eq!(apply_binding(&p, "a=1").unwrap(), lp("z + 1"));
        assert_eq!(apply_binding(&p, "jones").unwrap(), lp("t^-1 - t^-3 + t^2"));
        assert!(matches!(apply_binding(&p, "q=2"), Err(SelectError::BadBinding(_))));
        assert!(matches!(apply_binding(&lp("a^-1"), "a=1+z"), Err(SelectError::Substitution(..))));
    }
}
