//! Exact coefficient arithmetic.
//!
//! Everything downstream is linear algebra over the ring generated over ℚ by a
//! primitive L-th root of unity ζ_L (L = lcm(2, M) = 2 or 6) together with
//! q^{±1/2} and the fusion parameter u^{±1}. Elements are kept in canonical
//! form: cyclotomic coordinates reduced modulo Φ_L, no zero terms stored.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::error::Error;

/// Order of the root-of-unity subgroup μ_L, L = lcm(2, M).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    L2,
    L6,
}

impl Level {
    pub fn order(self) -> i64 {
        match self {
            Level::L2 => 2,
            Level::L6 => 6,
        }
    }

    /// Level for a twist order M ∈ {2, 3}.
    pub fn for_twist(m: i64) -> Level {
        if m == 3 {
            Level::L6
        } else {
            Level::L2
        }
    }
}

/// Element of ℚ(ζ_L) in coordinates over the ℚ-basis of ℚ[x]/Φ_L(x).
///
/// For L = 2 this is just ℚ (b must stay zero); for L = 6 the element is
/// a + b·ζ₆ with ζ₆² = ζ₆ − 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycRat {
    pub a: BigRational,
    pub b: BigRational,
}

impl CycRat {
    pub fn zero() -> Self {
        CycRat {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        CycRat {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycRat {
            a: r,
            b: BigRational::zero(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        CycRat::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// ζ_L^k in coordinates.
    pub fn zeta_pow(level: Level, k: i64) -> Self {
        let one = BigRational::one;
        let zero = BigRational::zero;
        match level {
            Level::L2 => {
                if k.rem_euclid(2) == 0 {
                    CycRat { a: one(), b: zero() }
                } else {
                    CycRat { a: -one(), b: zero() }
                }
            }
            Level::L6 => match k.rem_euclid(6) {
                0 => CycRat { a: one(), b: zero() },
                1 => CycRat { a: zero(), b: one() },
                2 => CycRat { a: -one(), b: one() },
                3 => CycRat { a: -one(), b: zero() },
                4 => CycRat { a: zero(), b: -one() },
                _ => CycRat { a: one(), b: -one() },
            },
        }
    }

    pub fn add(&self, other: &CycRat) -> CycRat {
        CycRat {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        }
    }

    pub fn neg(&self) -> CycRat {
        CycRat {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Product, reduced modulo Φ_L (ζ₆² = ζ₆ − 1 at level 6).
    pub fn mul(&self, other: &CycRat, level: Level) -> CycRat {
        match level {
            Level::L2 => {
                debug_assert!(self.b.is_zero() && other.b.is_zero());
                CycRat {
                    a: &self.a * &other.a,
                    b: BigRational::zero(),
                }
            }
            Level::L6 => {
                let ac = &self.a * &other.a;
                let bd = &self.b * &other.b;
                let ad_bc = &self.a * &other.b + &self.b * &other.a;
                CycRat {
                    a: ac - &bd,
                    b: ad_bc + bd,
                }
            }
        }
    }

    /// Inverse in the field ℚ(ζ_L). Fails only on zero.
    pub fn inv(&self, level: Level) -> Result<CycRat, Error> {
        if self.is_zero() {
            return Err(Error::UnsupportedInverse("division by zero".into()));
        }
        match level {
            Level::L2 => Ok(CycRat {
                a: self.a.recip(),
                b: BigRational::zero(),
            }),
            Level::L6 => {
                // (a + bζ)((a+b) − bζ) = a² + ab + b² (the field norm).
                let norm = &self.a * &self.a + &self.a * &self.b + &self.b * &self.b;
                Ok(CycRat {
                    a: (&self.a + &self.b) / &norm,
                    b: -(&self.b / &norm),
                })
            }
        }
    }
}

/// Spectral parameter ε·q^{r}·u^{e} with ε = ζ_L^{eps}, r = qh/2, e = ue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectralParam {
    pub level: Level,
    /// exponent of ζ_L, reduced into 0..L
    pub eps: i64,
    /// q-exponent in half-integer units (q^{qh/2})
    pub qh: i64,
    /// exponent of the fusion parameter u
    pub ue: i64,
}

impl SpectralParam {
    pub fn new(level: Level, eps: i64, qh: i64, ue: i64) -> Self {
        SpectralParam {
            level,
            eps: eps.rem_euclid(level.order()),
            qh,
            ue,
        }
    }

    /// q^{k} (integer exponent).
    pub fn q_pow(level: Level, k: i64) -> Self {
        SpectralParam::new(level, 0, 2 * k, 0)
    }

    pub fn one(level: Level) -> Self {
        SpectralParam::new(level, 0, 0, 0)
    }

    pub fn mul(&self, other: &SpectralParam) -> SpectralParam {
        debug_assert_eq!(self.level, other.level);
        SpectralParam::new(
            self.level,
            self.eps + other.eps,
            self.qh + other.qh,
            self.ue + other.ue,
        )
    }

    pub fn inv(&self) -> SpectralParam {
        SpectralParam::new(self.level, -self.eps, -self.qh, -self.ue)
    }

    pub fn pow(&self, k: i64) -> SpectralParam {
        SpectralParam::new(self.level, self.eps * k, self.qh * k, self.ue * k)
    }

    /// Multiply by q^{halves/2}.
    pub fn q_shift(&self, halves: i64) -> SpectralParam {
        SpectralParam::new(self.level, self.eps, self.qh + halves, self.ue)
    }

    /// Multiply by ζ_L^{k}.
    pub fn root_shift(&self, k: i64) -> SpectralParam {
        SpectralParam::new(self.level, self.eps + k, self.qh, self.ue)
    }

    /// Multiply by −1 = ζ_L^{L/2}.
    pub fn neg(&self) -> SpectralParam {
        self.root_shift(self.level.order() / 2)
    }

    /// Multiply by u.
    pub fn u_shift(&self, k: i64) -> SpectralParam {
        SpectralParam::new(self.level, self.eps, self.qh, self.ue + k)
    }

    pub fn to_scalar(&self) -> Scalar {
        Scalar::monomial(
            self.level,
            self.qh,
            self.ue,
            CycRat::zeta_pow(self.level, self.eps),
        )
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sign, ztok) = root_tokens(self.level, self.eps);
        let mut parts: Vec<String> = Vec::new();
        if let Some(z) = ztok {
            parts.push(z);
        }
        if self.qh != 0 {
            parts.push(q_token(self.qh));
        }
        if self.ue != 0 {
            parts.push(format!("u^{}", self.ue));
        }
        if parts.is_empty() {
            parts.push("q^0".into());
        }
        write!(f, "{}{}", if sign { "-" } else { "" }, parts.join("*"))
    }
}

/// Decompose ζ_L^eps into a sign and an optional z3-power token.
fn root_tokens(level: Level, eps: i64) -> (bool, Option<String>) {
    match level {
        Level::L2 => (eps.rem_euclid(2) == 1, None),
        Level::L6 => match eps.rem_euclid(6) {
            0 => (false, None),
            3 => (true, None),
            2 => (false, Some("z3".into())),
            4 => (false, Some("z3^2".into())),
            5 => (true, Some("z3".into())),
            _ => (true, Some("z3^2".into())), // eps = 1: ζ₆ = −ζ₃²
        },
    }
}

fn q_token(qh: i64) -> String {
    if qh % 2 == 0 {
        format!("q^{}", qh / 2)
    } else {
        format!("q^({}/2)", qh)
    }
}

/// Exact scalar: finite sum of terms coeff·q^{qh/2}·u^{ue} with cyclotomic
/// rational coefficients, keyed and canonicalized by (qh, ue).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    pub level: Level,
    pub terms: BTreeMap<(i64, i64), CycRat>,
}

impl Scalar {
    pub fn zero(level: Level) -> Self {
        Scalar {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(level: Level) -> Self {
        Scalar::monomial(level, 0, 0, CycRat::one())
    }

    pub fn monomial(level: Level, qh: i64, ue: i64, coeff: CycRat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((qh, ue), coeff);
        }
        Scalar { level, terms }
    }

    pub fn from_rational(level: Level, r: BigRational) -> Self {
        Scalar::monomial(level, 0, 0, CycRat::from_rational(r))
    }

    pub fn from_i64(level: Level, n: i64) -> Self {
        Scalar::monomial(level, 0, 0, CycRat::from_i64(n))
    }

    /// q^{k} for integer k.
    pub fn q_pow(level: Level, k: i64) -> Self {
        Scalar::monomial(level, 2 * k, 0, CycRat::one())
    }

    /// q^{qh/2} for half-integer exponents.
    pub fn q_half_pow(level: Level, qh: i64) -> Self {
        Scalar::monomial(level, qh, 0, CycRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_monomial(&self) -> Option<(i64, i64, &CycRat)> {
        if self.terms.len() == 1 {
            let ((qh, ue), c) = self.terms.iter().next().unwrap();
            Some((*qh, *ue, c))
        } else {
            None
        }
    }

    fn insert_term(&mut self, key: (i64, i64), c: CycRat) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        debug_assert_eq!(self.level, other.level);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            level: self.level,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        debug_assert_eq!(self.level, other.level);
        let mut out = Scalar::zero(self.level);
        for ((qh1, ue1), c1) in &self.terms {
            for ((qh2, ue2), c2) in &other.terms {
                out.insert_term((qh1 + qh2, ue1 + ue2), c1.mul(c2, self.level));
            }
        }
        out
    }

    /// Inverse of a single-term unit. Anything else is rejected: the ring has
    /// no other invertibles we care to support.
    pub fn inv(&self) -> Result<Scalar, Error> {
        match self.as_monomial() {
            Some((qh, ue, c)) => Ok(Scalar::monomial(
                self.level,
                -qh,
                -ue,
                c.inv(self.level)?,
            )),
            None => Err(Error::UnsupportedInverse(format!(
                "cannot invert non-monomial scalar {self}"
            ))),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, Error> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = Scalar::one(self.level);
        for _ in 0..k {
            out = out.mul(self);
        }
        Ok(out)
    }

    /// Specialize u = 1: collapse u-exponents and re-merge.
    pub fn set_u_one(&self) -> Scalar {
        let mut out = Scalar::zero(self.level);
        for ((qh, _), c) in &self.terms {
            out.insert_term((*qh, 0), c.clone());
        }
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((qh, ue), c) in &self.terms {
            let (body, negative) = term_string(self.level, *qh, *ue, c);
            if first {
                write!(f, "{}{}", if negative { "-" } else { "" }, body)?;
                first = false;
            } else {
                write!(f, " {} {}", if negative { "-" } else { "+" }, body)?;
            }
        }
        Ok(())
    }
}

/// Render one term, pulling a leading minus sign out when the coefficient is
/// a negative rational or a negative root-of-unity multiple.
fn term_string(level: Level, qh: i64, ue: i64, c: &CycRat) -> (String, bool) {
    let mut negative = false;
    let mut parts: Vec<String> = Vec::new();

    // Try to express the coefficient as ±rational·ζ-power for pretty tokens.
    let coeff_part = pure_root_multiple(level, c);
    match coeff_part {
        Some((r, eps)) => {
            let (sign, ztok) = root_tokens(level, eps);
            let mut r = r;
            if r.is_negative() {
                negative = !negative;
                r = -r;
            }
            if sign {
                negative = !negative;
            }
            if !r.is_one() || (ztok.is_none() && qh == 0 && ue == 0) {
                parts.push(r.to_string());
            }
            if let Some(z) = ztok {
                parts.push(z);
            }
        }
        None => {
            // Mixed cyclotomic coefficient; print raw coordinates.
            parts.push(format!("({}+{}*z6)", c.a, c.b));
        }
    }
    if qh != 0 {
        parts.push(q_token(qh));
    }
    if ue != 0 {
        parts.push(format!("u^{ue}"));
    }
    if parts.is_empty() {
        parts.push("1".into());
    }
    (parts.join("*"), negative)
}

/// If c = r·ζ_L^k with r rational, return (r, k).
fn pure_root_multiple(level: Level, c: &CycRat) -> Option<(BigRational, i64)> {
    if c.b.is_zero() {
        return Some((c.a.clone(), 0));
    }
    if level == Level::L2 {
        return None;
    }
    for k in 1..6 {
        let z = CycRat::zeta_pow(level, k);
        // c = r·z ⇔ c·z^{-1} rational
        let zinv = z.inv(level).unwrap();
        let r = c.mul(&zinv, level);
        if r.b.is_zero() {
            return Some((r.a, k));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_reduction() {
        // ζ_L^L = 1 after reduction; Φ_L(ζ_L) = 0 is the rule.
        for level in [Level::L2, Level::L6] {
            let l = level.order();
            assert!(CycRat::zeta_pow(level, l).is_one());
            let mut p = CycRat::one();
            for _ in 0..l {
                p = p.mul(&CycRat::zeta_pow(level, 1), level);
            }
            assert!(p.is_one());
        }
        // For M = 2: ζ = −1 exactly.
        assert_eq!(
            CycRat::zeta_pow(Level::L2, 1),
            CycRat::from_i64(-1)
        );
    }

    #[test]
    fn cyclotomic_inverse() {
        for level in [Level::L2, Level::L6] {
            for k in 0..level.order() {
                let z = CycRat::zeta_pow(level, k);
                assert!(z.mul(&z.inv(level).unwrap(), level).is_one());
            }
        }
        // a mixed element of ℚ(ζ₆)
        let c = CycRat {
            a: BigRational::from_integer(3.into()),
            b: BigRational::from_integer((-2).into()),
        };
        assert!(c.mul(&c.inv(Level::L6).unwrap(), Level::L6).is_one());
    }

    #[test]
    fn qexp_addition() {
        // q^{1/2}·q^{3/2} = q²
        let a = Scalar::q_half_pow(Level::L2, 1);
        let b = Scalar::q_half_pow(Level::L2, 3);
        assert_eq!(a.mul(&b), Scalar::q_pow(Level::L2, 2));
    }

    #[test]
    fn zeta2_squares_to_one() {
        let z = SpectralParam::new(Level::L2, 1, 0, 0);
        assert_eq!(z.mul(&z), SpectralParam::one(Level::L2));
    }

    #[test]
    fn difference_of_squares() {
        // (1+q)(1−q) = 1−q²
        let one = Scalar::one(Level::L2);
        let q = Scalar::q_pow(Level::L2, 1);
        let lhs = one.add(&q).mul(&one.sub(&q));
        assert_eq!(lhs, one.sub(&Scalar::q_pow(Level::L2, 2)));
    }

    #[test]
    fn param_shift_examples() {
        // (ε=1, r=0)·shift(+1) = q
        let p = SpectralParam::one(Level::L2).q_shift(2);
        assert_eq!(p, SpectralParam::q_pow(Level::L2, 1));
        // −(q²) at M=2 → (ε = ζ₂, r = 2)
        let m = SpectralParam::q_pow(Level::L2, 2).neg();
        assert_eq!(m, SpectralParam::new(Level::L2, 1, 4, 0));
        // ζ·a with a = q, M = 3 → ε = ζ₆², r = 1
        let a = SpectralParam::q_pow(Level::L6, 1);
        let za = a.root_shift(2); // ζ₃ = ζ₆²
        assert_eq!(za, SpectralParam::new(Level::L6, 2, 2, 0));
    }

    #[test]
    fn monomial_inverse_and_errors() {
        let s = Scalar::monomial(Level::L6, 3, -1, CycRat::zeta_pow(Level::L6, 5));
        let inv = s.inv().unwrap();
        assert!(s.mul(&inv).is_one());
        let poly = Scalar::one(Level::L2).add(&Scalar::q_pow(Level::L2, 1));
        assert!(poly.inv().is_err());
    }

    #[test]
    fn display_tokens() {
        assert_eq!(SpectralParam::new(Level::L2, 1, 4, 0).to_string(), "-q^2");
        assert_eq!(SpectralParam::new(Level::L2, 0, 3, 0).to_string(), "q^(3/2)");
        assert_eq!(
            SpectralParam::new(Level::L6, 2, -2, 0).to_string(),
            "z3*q^-1"
        );
        assert_eq!(SpectralParam::new(Level::L6, 1, 2, 0).to_string(), "-z3^2*q^1");
        assert_eq!(SpectralParam::new(Level::L2, 0, 0, 1).to_string(), "u^1");
        assert_eq!(SpectralParam::one(Level::L2).to_string(), "q^0");
    }
}
