//! Multivariate Laurent polynomials with Gaussian-integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0} occurs with a negative power but is bound to a non-monomial")]
    NonInvertibleSubstitution(Var),
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
    #[error("unsupported divisor {0}: only monomials and univariate divisors are handled")]
    UnsupportedDivisor(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// `re + im·i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: Self = Self { re: 0, im: 0 };
    pub const ONE: Self = Self { re: 1, im: 0 };
    pub const I: Self = Self { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub const fn int(re: i64) -> Self {
        Self { re, im: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn norm(&self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// `i^k`, exponent reduced mod 4.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::ONE,
            1 => Self::I,
            2 => Self::int(-1),
            _ => Self::new(0, -1),
        }
    }

    /// Exact quotient, if it exists in Z[i].
    pub fn div_exact(self, d: Self) -> Option<Self> {
        let n = d.norm();
        if n == 0 {
            return None;
        }
        let p = self * d.conj();
        if p.re % n != 0 || p.im % n != 0 {
            return None;
        }
        Some(Self::new(p.re / n, p.im / n))
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianInt {
    fn from(v: i64) -> Self {
        Self::int(v)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, 1) => f.write_str("i"),
            (0, -1) => f.write_str("-i"),
            (0, m) => write!(f, "{m}i"),
            (r, 1) => write!(f, "({r}+i)"),
            (r, -1) => write!(f, "({r}-i)"),
            (r, m) if m > 0 => write!(f, "({r}+{m}i)"),
            (r, m) => write!(f, "({r}{m}i)"),
        }
    }
}

/// The fixed variable alphabet. `T` is q^{1/2}, `Lambda` is λ^{1/2}, `Aux` a free auxiliary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    W,
    A,
    E,
    BigA,
    T,
    Lambda,
    Aux,
}

pub const NVARS: usize = 8;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Z,
        Var::W,
        Var::A,
        Var::E,
        Var::BigA,
        Var::T,
        Var::Lambda,
        Var::Aux,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::W => "w",
            Var::A => "a",
            Var::E => "E",
            Var::BigA => "A",
            Var::T => "t",
            Var::Lambda => "l",
            Var::Aux => "x",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "z" => Var::Z,
            "w" => Var::W,
            "a" => Var::A,
            "E" => Var::E,
            "A" => Var::BigA,
            "t" => Var::T,
            "l" | "λ" => Var::Lambda,
            "x" | "μ" => Var::Aux,
            _ => return None,
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector, one entry per [`Var`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub [i32; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    pub fn var(v: Var, e: i32) -> Mono {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Mono(m)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(o.0.iter()) {
            *x += y;
        }
        Mono(m)
    }

    pub fn inv(&self) -> Mono {
        let mut m = self.0;
        for x in m.iter_mut() {
            *x = -*x;
        }
        Mono(m)
    }

    fn with(&self, v: Var, e: i32) -> Mono {
        let mut m = self.0;
        m[v.index()] = e;
        Mono(m)
    }
}

// Term order used for rendering: descending in the skein variables, ascending in the
// specialization atoms. Factor order inside a monomial follows PRINT_ORDER.
fn render_key(m: &Mono) -> [i32; NVARS] {
    let e = m.0;
    [-e[0], -e[1], -e[2], -e[3], e[4], e[5], e[6], e[7]]
}

const PRINT_ORDER: [Var; NVARS] = [
    Var::A,
    Var::Z,
    Var::W,
    Var::E,
    Var::BigA,
    Var::T,
    Var::Lambda,
    Var::Aux,
];

/// Canonical Laurent polynomial: no zero coefficients are ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, GaussianInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianInt::ONE)
    }

    pub fn constant(c: GaussianInt) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianInt::int(n))
    }

    pub fn i() -> Self {
        Self::constant(GaussianInt::I)
    }

    pub fn var(v: Var) -> Self {
        Self::mono(v, 1)
    }

    /// `v^e`
    pub fn mono(v: Var, e: i32) -> Self {
        Self::term(Mono::var(v, e), GaussianInt::ONE)
    }

    pub fn term(m: Mono, c: GaussianInt) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, GaussianInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: GaussianInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert(GaussianInt::ZERO);
        *e = *e + c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &GaussianInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> GaussianInt {
        self.terms.get(m).copied().unwrap_or_default()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(Mono, GaussianInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, *c))
        } else {
            None
        }
    }

    /// Inverse of a unit monomial.
    pub fn inverse(&self) -> Option<Self> {
        let (m, c) = self.as_monomial()?;
        let ci = GaussianInt::ONE.div_exact(c)?;
        Some(Self::term(m.inv(), ci))
    }

    pub fn scale(&self, c: GaussianInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, *x * c)))
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), *c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need a unit monomial.
    pub fn powi(&self, n: i32) -> Option<Self> {
        if n >= 0 {
            Some(self.pow(n as u32))
        } else {
            Some(self.inverse()?.pow(n.unsigned_abs()))
        }
    }

    pub fn real_part(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, GaussianInt::int(c.re))))
    }

    pub fn imag_part(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, GaussianInt::int(c.im))))
    }

    pub fn min_exp(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn max_exp(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    /// Simultaneous substitution. Every variable that occurs with a negative power must be
    /// bound to an invertible monomial.
    pub fn substitute(&self, bindings: &[(Var, LaurentPoly)]) -> Result<Self, PolyError> {
        let mut image: [Option<&LaurentPoly>; NVARS] = [None; NVARS];
        for (v, p) in bindings {
            image[v.index()] = Some(p);
        }
        let mut inverses: [Option<LaurentPoly>; NVARS] = Default::default();
        for v in Var::ALL {
            if let Some(p) = image[v.index()] {
                if self.min_exp(v).is_some_and(|e| e < 0) {
                    inverses[v.index()] =
                        Some(p.inverse().ok_or(PolyError::NonInvertibleSubstitution(v))?);
                }
            }
        }
        let mut powers: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut t = Self::constant(*c);
            for v in Var::ALL {
                let i = v.index();
                let e = m.0[i];
                let Some(p) = image[i] else { continue };
                rest.0[i] = 0;
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| {
                    if e > 0 {
                        p.pow(e as u32)
                    } else {
                        inverses[i].as_ref().unwrap().pow(e.unsigned_abs())
                    }
                });
                t = &t * &*pw;
            }
            out += &t.mul_mono(&rest);
        }
        Ok(out)
    }

    /// Substitution that also accepts non-monomial images for negatively-powered variables,
    /// provided the result is again a Laurent polynomial. Denominators are cleared first and
    /// divided out exactly afterwards.
    pub fn specialize(&self, bindings: &[(Var, LaurentPoly)]) -> Result<Self, PolyError> {
        let mut clear = Mono::ONE;
        let mut divisor = Self::one();
        for (v, p) in bindings {
            if p.inverse().is_some() {
                continue;
            }
            if let Some(e) = self.min_exp(*v).filter(|&e| e < 0) {
                clear.0[v.index()] = -e;
                divisor = &divisor * &p.pow(e.unsigned_abs());
            }
        }
        let num = self.mul_mono(&clear).substitute(bindings)?;
        num.div_exact(&divisor)
    }

    /// Exact division by a unit monomial, a constant, or a polynomial in a single variable
    /// (up to a monomial factor).
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<Self, PolyError> {
        if d.is_zero() {
            return Err(PolyError::NotDivisible("0".into()));
        }
        if let Some(inv) = d.inverse() {
            return Ok(self * &inv);
        }
        // d = shift · d0, d0 with all minimum exponents zero
        let mut shift = Mono::ONE;
        for v in Var::ALL {
            shift.0[v.index()] = d.min_exp(v).unwrap();
        }
        let d0 = d.mul_mono(&shift.inv());
        let vars: Vec<Var> = Var::ALL.into_iter().filter(|&v| d0.contains_var(v)).collect();
        let num = self.mul_mono(&shift.inv());
        if vars.is_empty() {
            let (_, c) = d0.as_monomial().unwrap();
            let mut out = Self::zero();
            for (m, x) in &num.terms {
                let q = x.div_exact(c).ok_or_else(|| PolyError::NotDivisible(d.to_string()))?;
                out.add_term(*m, q);
            }
            return Ok(out);
        }
        if vars.len() > 1 {
            return Err(PolyError::UnsupportedDivisor(d.to_string()));
        }
        let v = vars[0];
        let deg = d0.max_exp(v).unwrap() as usize;
        let mut dc = vec![GaussianInt::ZERO; deg + 1];
        for (m, c) in &d0.terms {
            dc[m.exp(v) as usize] = *c;
        }
        let lead = dc[deg];
        let mut groups: BTreeMap<Mono, BTreeMap<i32, GaussianInt>> = BTreeMap::new();
        for (m, c) in &num.terms {
            groups.entry(m.with(v, 0)).or_default().insert(m.exp(v), *c);
        }
        let mut out = Self::zero();
        for (key, mut g) in groups {
            let low = *g.keys().next().unwrap();
            while let Some((&top, &c)) = g.iter().next_back() {
                let base = top - deg as i32;
                if base < low {
                    return Err(PolyError::NotDivisible(d.to_string()));
                }
                let q = c.div_exact(lead).ok_or_else(|| PolyError::NotDivisible(d.to_string()))?;
                out.add_term(key.with(v, base), q);
                for (j, dj) in dc.iter().enumerate() {
                    if dj.is_zero() {
                        continue;
                    }
                    let e = base + j as i32;
                    let x = g.get(&e).copied().unwrap_or_default() - q * *dj;
                    if x.is_zero() {
                        g.remove(&e);
                    } else {
                        g.insert(e, x);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        for (m, c) in &o.terms {
            self.add_term(*m, *c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, o: &LaurentPoly) {
        for (m, c) in &o.terms {
            self.add_term(*m, -*c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, o: &LaurentPoly) {
        *self = &*self * o;
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), *c1 * *c2);
            }
        }
        r
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(GaussianInt::int(-1))
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$f(&o)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: &LaurentPoly) -> LaurentPoly {
                (&self).$f(o)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: LaurentPoly) -> LaurentPoly {
                self.$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn fmt_mono(m: &Mono) -> String {
    let mut parts = Vec::new();
    for v in PRINT_ORDER {
        match m.exp(v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{}", v.name(), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| render_key(m));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
            let c = if negative { -*c } else { *c };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let ms = fmt_mono(m);
            if ms.is_empty() {
                write!(f, "{c}")?;
            } else if c == GaussianInt::ONE {
                f.write_str(&ms)?;
            } else {
                write!(f, "{c}*{ms}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Imag(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, PolyError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let n: i64 = cs[st..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|e| PolyError::Parse(format!("{e}")))?;
            if i < cs.len() && cs[i] == 'i' {
                i += 1;
                out.push(Tok::Imag(n));
            } else {
                out.push(Tok::Num(n));
            }
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c.is_alphabetic() {
            out.push(Tok::Ident(c.to_string()));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut acc = LaurentPoly::zero();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, PolyError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let e = i32::try_from(n).map_err(|_| PolyError::Parse("exponent too large".into()))?;
                let e = if neg { -e } else { e };
                base.powi(e)
                    .ok_or_else(|| PolyError::Parse(format!("negative power of non-monomial {base}")))
            }
            _ => Err(PolyError::Parse("expected integer exponent".into())),
        }
    }

    fn primary(&mut self) -> Result<LaurentPoly, PolyError> {
        let t = self
            .peek()
            .cloned()
            .ok_or_else(|| PolyError::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match t {
            Tok::Num(n) => Ok(LaurentPoly::int(n)),
            Tok::Imag(n) => Ok(LaurentPoly::constant(GaussianInt::new(0, n))),
            Tok::Ident(s) if s == "i" => Ok(LaurentPoly::i()),
            Tok::Ident(s) => Var::from_name(&s)
                .map(LaurentPoly::var)
                .ok_or_else(|| PolyError::Parse(format!("unknown variable '{s}'"))),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(PolyError::Parse("expected ')'".into()));
                }
                Ok(e)
            }
            Tok::Op(c) => Err(PolyError::Parse(format!("unexpected '{c}'"))),
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { toks: lex(s)?, pos: 0 };
        if p.toks.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(PolyError::Parse(format!("trailing input at token {}", p.pos)));
        }
        Ok(e)
    }
}

/// Shorthand used throughout the crate and its tests: parse a polynomial literal.
pub fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gaussian_basics() {
        assert_eq!(GaussianInt::I * GaussianInt::I, GaussianInt::int(-1));
        assert_eq!(GaussianInt::i_pow(-1), GaussianInt::new(0, -1));
        assert_eq!(GaussianInt::new(4, 3).div_exact(GaussianInt::new(1, 2)), Some(GaussianInt::new(2, -1)));
        assert_eq!(GaussianInt::new(3, 4).div_exact(GaussianInt::int(2)), None);
    }

    #[test]
    fn add_mul_examples() {
        assert!((lp("z") + lp("-z")).is_zero());
        assert_eq!(lp("a + a^-1") + LaurentPoly::zero(), lp("a + a^-1"));
        assert_eq!(lp("i*a") + lp("i*a"), lp("2i*a"));
        assert_eq!(lp("a") * lp("a^-1"), LaurentPoly::one());
        assert_eq!(lp("i") * lp("i"), lp("-1"));
        let sq = lp("a - a^-1") * lp("a + a^-1");
        assert_eq!(sq, LaurentPoly::from_terms([(Mono::var(Var::A, 2), 1.into()), (Mono::var(Var::A, -2), (-1).into())]));
    }

    #[test]
    fn substitute_examples() {
        let t2 = lp("t^2");
        assert_eq!(lp("a^2").substitute(&[(Var::A, t2.clone())]).unwrap(), lp("t^4"));
        assert_eq!(lp("E^-1").substitute(&[(Var::E, LaurentPoly::one())]).unwrap(), LaurentPoly::one());
        let eta = lp("(a - a^-1)*w^-1");
        let err = eta.substitute(&[(Var::W, lp("t - t^-1")), (Var::A, t2)]).unwrap_err();
        assert_eq!(err, PolyError::NonInvertibleSubstitution(Var::W));
    }

    #[test]
    fn specialize_clears_denominators() {
        let eta = lp("(a - a^-1)*w^-1");
        let v = eta.specialize(&[(Var::W, lp("t - t^-1")), (Var::A, lp("t^-2"))]).unwrap();
        assert_eq!(v, lp("-t - t^-1"));
        let bad = lp("w^-1").specialize(&[(Var::W, lp("t - t^-1"))]);
        assert!(matches!(bad, Err(PolyError::NotDivisible(_))));
    }

    #[test]
    fn div_exact_univariate() {
        let p = lp("(t^3 - 2*t + t^-1)*(a + E)");
        assert_eq!(p.div_exact(&lp("t - t^-1")).unwrap(), lp("(t^2 - 1)*(a + E)"));
        assert!(lp("t + 1").div_exact(&lp("t - 1")).is_err());
        assert_eq!(lp("(2 + 2i)*a").div_exact(&lp("1 + i")).unwrap(), lp("2*a"));
    }

    #[test]
    fn rendering() {
        let hopf = lp("z*a^2 + (a - a^-1)*w^-1*E^-1");
        assert_eq!(hopf.to_string(), "a^2*z + a*w^-1*E^-1 - a^-1*w^-1*E^-1");
        assert_eq!(lp("-t - t^-1").to_string(), "-t^-1 - t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp("(1+2i)*a - 3i + 2*z").to_string(), "2*z + (1+2i)*a - 3i");
        assert_eq!(lp("-i*a^-2").to_string(), "-i*a^-2");
    }

    #[test]
    fn parse_errors() {
        assert!("a +".parse::<LaurentPoly>().is_err());
        assert!("q".parse::<LaurentPoly>().is_err());
        assert!("(a+1)^-1".parse::<LaurentPoly>().is_err());
        assert_eq!(lp("λ^2"), lp("l^2"));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        let term = (
            prop::array::uniform4(-3i32..4),
            -4i64..5,
            -3i64..4,
        )
            .prop_map(|(e, re, im)| {
                let m = Mono([e[0], e[1], e[2], e[3], 0, e[0] - e[2], 0, 0]);
                (m, GaussianInt::new(re, im))
            });
        prop::collection::vec(term, 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        }

        #[test]
        fn render_parse_roundtrip(p in arb_poly()) {
            let s = p.to_string();
            let back: LaurentPoly = s.parse().unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), s);
        }

        #[test]
        fn substitution_is_homomorphism(p in arb_poly(), q in arb_poly(), k in -2i32..3) {
            let z3 = Mono::var(Var::Z, 3);
            let (p, q) = (p.mul_mono(&z3), q.mul_mono(&z3));
            let b = [(Var::A, LaurentPoly::mono(Var::T, k)), (Var::E, lp("-i*w")), (Var::Z, lp("t + 2*t^-1"))];
            let lhs = (&p * &q).specialize(&b).unwrap();
            let rhs = &p.specialize(&b).unwrap() * &q.specialize(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn div_exact_inverts_mul(p in arb_poly(), k in 1i32..4) {
            let d = &LaurentPoly::mono(Var::T, k) - &LaurentPoly::mono(Var::T, -1);
            prop_assert_eq!((&p * &d).div_exact(&d).unwrap(), p);
        }
    }
}
